#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pageclass/language_model.hpp"
#include "pageclass/types.hpp"

namespace pageclass {

// Document counts over the whole training collection, both classes.
struct CollectionStats {
  std::uint64_t total_docs = 0;
  std::map<std::string, std::uint64_t, std::less<>> doc_frequency;

  // Class document sets are disjoint, so collection df is the sum of the
  // per-class document frequencies.
  static CollectionStats from_models(const UnigramModel& a, const UnigramModel& b);
  static CollectionStats from_documents(std::span<const TokenList> docs);

  std::uint64_t df(std::string_view term) const;
  bool operator==(const CollectionStats&) const = default;
};

struct FeatureScore {
  std::string term;
  std::uint64_t numerator = 0;
  double idf = 0.0;
  double score = 0.0;
  Label label = Label::Positive;
};

// Share of `doc` taken by `term`. Throws Error on an empty document.
double tf(std::string_view term, std::span<const Token> doc);

// Natural-log inverse document frequency ln(|D| / df). Throws Error when the
// term is absent from the collection.
double idf(std::string_view term, const CollectionStats& stats);

// Scores every term of the class model as numerator * idf, where numerator
// is the class occurrence count (TermFrequency) or the class document
// frequency (DocumentFrequency). Sorted by descending score, ties by
// ascending term; truncated to `n` when given.
std::vector<FeatureScore> rank_features(const UnigramModel& class_model, const CollectionStats& stats,
                                        RankingNumerator mode, std::optional<std::size_t> n);

struct InformativeWord {
  std::string term;
  std::uint64_t term_frequency = 0;
  std::uint64_t doc_frequency = 0;
  std::uint64_t collection_doc_frequency = 0;
  double score = 0.0;
};

struct InformativeWordsReport {
  std::vector<InformativeWord> positive;
  std::vector<InformativeWord> negative;
};

InformativeWordsReport informative_words_report(const UnigramModel& positive, const UnigramModel& negative,
                                                const CollectionStats& stats, RankingNumerator mode,
                                                std::optional<std::size_t> n);

// Two tab-separated tables (positive, then negative), each with its own
// header row, separated by one blank line.
void write_report_tsv(std::ostream& out, const InformativeWordsReport& report);

}  // namespace pageclass
