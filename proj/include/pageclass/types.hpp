#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace pageclass {

// Positive = product/brand page (or spam in the cross-check), negative =
// everything else.
enum class Label { Positive, Negative };

// Which text sources of a page are used for training and classification.
enum class View {
  FullText,                // Exp1
  FullTextPlusCategories,  // Exp2
  First50,                 // Exp3
  First50PlusCategories,   // Exp4
  CategoriesOnly,          // Exp5
};

inline constexpr View kAllViews[] = {View::FullText, View::FullTextPlusCategories,
                                     View::First50, View::First50PlusCategories,
                                     View::CategoriesOnly};

// Numerator of the per-class feature score: raw class occurrence count, or
// the number of class documents containing the term.
enum class RankingNumerator { TermFrequency, DocumentFrequency };

std::string_view label_name(Label label);
std::optional<Label> parse_label(std::string_view text);

// Canonical names: full, full+cat, first50, first50+cat, cat. parse_view also
// accepts exp1..exp5 (case-insensitive).
std::string_view view_name(View view);
std::string_view experiment_name(View view);  // "Exp1".."Exp5"
std::optional<View> parse_view(std::string_view text);

std::string_view ranking_name(RankingNumerator mode);  // "tf" / "df"
std::optional<RankingNumerator> parse_ranking(std::string_view text);

}  // namespace pageclass
