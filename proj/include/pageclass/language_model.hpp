#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "pageclass/text_pipeline.hpp"
#include "pageclass/types.hpp"

namespace pageclass {

struct TermStats {
  std::uint64_t count = 0;          // occurrences in the class
  std::uint64_t doc_frequency = 0;  // class documents containing the term

  bool operator==(const TermStats&) const = default;
};

// Per-class unigram counts. Only exact integers are stored; probabilities are
// derived on demand so models stay mergeable.
class UnigramModel {
 public:
  using TermMap = std::map<std::string, TermStats, std::less<>>;

  explicit UnigramModel(Label label) : label_(label) {}

  // Rebuilds a model from stored counts (model files). Throws Error when the
  // counts violate the model invariants.
  static UnigramModel from_counts(Label label, std::uint64_t doc_count, TermMap terms);

  void add_document(std::span<const Token> tokens);

  Label label() const { return label_; }
  std::uint64_t total_tokens() const { return total_tokens_; }
  std::uint64_t doc_count() const { return doc_count_; }
  std::size_t vocabulary_size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  std::uint64_t count(std::string_view term) const;
  std::uint64_t doc_frequency(std::string_view term) const;

  bool operator==(const UnigramModel&) const = default;

 private:
  friend UnigramModel merge_models(const UnigramModel&, const UnigramModel&);

  Label label_;
  TermMap terms_;
  std::uint64_t total_tokens_ = 0;
  std::uint64_t doc_count_ = 0;
};

// Shards documents across OpenMP threads and merges the partial models.
UnigramModel build_model(std::span<const TokenList> docs, Label label);
// Single-threaded reference for build_model.
UnigramModel build_model_serial(std::span<const TokenList> docs, Label label);

// Pointwise sum. The two models must describe disjoint document sets of the
// same class; throws Error on a label mismatch.
UnigramModel merge_models(const UnigramModel& a, const UnigramModel& b);

// count(w) / total_tokens. Throws Error for an empty model.
double term_probability(const UnigramModel& model, std::string_view term);

// Add-one estimate (count(w) + 1) / (total_tokens + vocab_size). Throws Error
// when vocab_size is zero.
double smoothed_probability(const UnigramModel& model, std::string_view term, std::size_t vocab_size);

}  // namespace pageclass
