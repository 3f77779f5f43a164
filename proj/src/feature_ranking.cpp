#include "pageclass/feature_ranking.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <unordered_set>

#include "pageclass/error.hpp"
#include "pageclass/format.hpp"

namespace pageclass {

CollectionStats CollectionStats::from_models(const UnigramModel& a, const UnigramModel& b) {
  CollectionStats stats;
  stats.total_docs = a.doc_count() + b.doc_count();
  for (const auto* model : {&a, &b})
    for (const auto& [term, ts] : model->terms()) stats.doc_frequency[term] += ts.doc_frequency;
  return stats;
}

CollectionStats CollectionStats::from_documents(std::span<const TokenList> docs) {
  CollectionStats stats;
  stats.total_docs = docs.size();
  for (const auto& doc : docs) {
    std::unordered_set<std::string_view> seen(doc.begin(), doc.end());
    for (auto term : seen) ++stats.doc_frequency[std::string(term)];
  }
  return stats;
}

std::uint64_t CollectionStats::df(std::string_view term) const {
  auto it = doc_frequency.find(term);
  return it == doc_frequency.end() ? 0 : it->second;
}

double tf(std::string_view term, std::span<const Token> doc) {
  if (doc.empty()) throw Error("term frequency of an empty document");
  const auto hits = std::count(doc.begin(), doc.end(), term);
  return static_cast<double>(hits) / static_cast<double>(doc.size());
}

double idf(std::string_view term, const CollectionStats& stats) {
  const auto df = stats.df(term);
  if (df == 0) throw Error("term '" + std::string(term) + "' does not occur in the collection");
  return std::log(static_cast<double>(stats.total_docs) / static_cast<double>(df));
}

std::vector<FeatureScore> rank_features(const UnigramModel& class_model, const CollectionStats& stats,
                                        RankingNumerator mode, std::optional<std::size_t> n) {
  std::vector<FeatureScore> scores;
  scores.reserve(class_model.vocabulary_size());
  for (const auto& [term, ts] : class_model.terms()) {
    FeatureScore fs;
    fs.term = term;
    fs.numerator = mode == RankingNumerator::TermFrequency ? ts.count : ts.doc_frequency;
    fs.idf = idf(term, stats);
    fs.score = static_cast<double>(fs.numerator) * fs.idf;
    fs.label = class_model.label();
    scores.push_back(std::move(fs));
  }
  auto better = [](const FeatureScore& a, const FeatureScore& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.term < b.term;
  };
  if (n && *n < scores.size()) {
    std::partial_sort(scores.begin(), scores.begin() + static_cast<std::ptrdiff_t>(*n), scores.end(), better);
    scores.resize(*n);
  } else {
    std::sort(scores.begin(), scores.end(), better);
  }
  return scores;
}

InformativeWordsReport informative_words_report(const UnigramModel& positive, const UnigramModel& negative,
                                                const CollectionStats& stats, RankingNumerator mode,
                                                std::optional<std::size_t> n) {
  auto rows = [&](const UnigramModel& model) {
    std::vector<InformativeWord> out;
    for (auto& fs : rank_features(model, stats, mode, n)) {
      const auto& ts = model.terms().find(fs.term)->second;
      out.push_back({fs.term, ts.count, ts.doc_frequency, stats.df(fs.term), fs.score});
    }
    return out;
  };
  return {rows(positive), rows(negative)};
}

void write_report_tsv(std::ostream& out, const InformativeWordsReport& report) {
  auto table = [&](Label label, const std::vector<InformativeWord>& rows) {
    out << "class\tword\tterm_frequency\tdocument_frequency\tcollection_document_frequency\tscore\n";
    for (const auto& r : rows)
      out << label_name(label) << '\t' << r.term << '\t' << r.term_frequency << '\t' << r.doc_frequency << '\t'
          << r.collection_doc_frequency << '\t' << format_fixed(r.score, 3) << '\n';
  };
  table(Label::Positive, report.positive);
  out << '\n';
  table(Label::Negative, report.negative);
}

}  // namespace pageclass
