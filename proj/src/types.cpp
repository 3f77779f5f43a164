#include "pageclass/types.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace pageclass {
namespace {

std::string lower_ascii(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::string_view label_name(Label label) {
  return label == Label::Positive ? "positive" : "negative";
}

std::optional<Label> parse_label(std::string_view text) {
  if (text == "positive") return Label::Positive;
  if (text == "negative") return Label::Negative;
  return std::nullopt;
}

std::string_view view_name(View view) {
  switch (view) {
    case View::FullText: return "full";
    case View::FullTextPlusCategories: return "full+cat";
    case View::First50: return "first50";
    case View::First50PlusCategories: return "first50+cat";
    case View::CategoriesOnly: return "cat";
  }
  return "?";
}

std::string_view experiment_name(View view) {
  switch (view) {
    case View::FullText: return "Exp1";
    case View::FullTextPlusCategories: return "Exp2";
    case View::First50: return "Exp3";
    case View::First50PlusCategories: return "Exp4";
    case View::CategoriesOnly: return "Exp5";
  }
  return "?";
}

std::optional<View> parse_view(std::string_view text) {
  const auto key = lower_ascii(text);
  for (View v : kAllViews)
    if (key == view_name(v) || key == lower_ascii(experiment_name(v))) return v;
  return std::nullopt;
}

std::string_view ranking_name(RankingNumerator mode) {
  return mode == RankingNumerator::TermFrequency ? "tf" : "df";
}

std::optional<RankingNumerator> parse_ranking(std::string_view text) {
  const auto key = lower_ascii(text);
  if (key == "tf") return RankingNumerator::TermFrequency;
  if (key == "df") return RankingNumerator::DocumentFrequency;
  return std::nullopt;
}

}  // namespace pageclass
