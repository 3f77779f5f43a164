#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "pageclass/corpus.hpp"
#include "pageclass/language_model.hpp"

namespace pageclass {

struct ClassPriors {
  double positive = 0.5;
  double negative = 0.5;

  // negative = 1 - p. Throws Error unless p lies in (0,1).
  static ClassPriors from_positive(double p);
  bool operator==(const ClassPriors&) const = default;
};

using FeatureSet = std::set<std::string, std::less<>>;

// Two-class multinomial Naive Bayes over unigram models. Immutable once
// trained; safe to share between threads.
struct NbcModel {
  UnigramModel positive{Label::Positive};
  UnigramModel negative{Label::Negative};
  ClassPriors priors;
  FeatureSet features;
  bool smoothing = true;
  PipelineConfig pipeline = PipelineConfig::defaults();
  View view = View::FullText;
  // Training-time selection settings, kept for reporting.
  RankingNumerator ranking = RankingNumerator::DocumentFrequency;
  std::optional<std::size_t> feature_count;

  std::size_t vocab_size() const { return features.size(); }
  bool operator==(const NbcModel&) const = default;
};

struct ClassScores {
  double log_posterior_positive = 0.0;
  double log_posterior_negative = 0.0;
  Label decision = Label::Negative;
};

// Builds both class models from the training documents under config.view,
// then selects the feature set: every training term, or the union of the
// per-class top-n lists. Throws Error if a class is missing or a document is
// unlabeled.
NbcModel train(std::span<const RawDocument> docs, const ExperimentConfig& config);
NbcModel train_tokens(std::span<const TokenList> positive, std::span<const TokenList> negative,
                      const ExperimentConfig& config);

// Log-space MAP scores over the document's in-feature token occurrences.
// Without smoothing, a term unseen in one class sends that class to -inf and
// a term unseen in both is skipped. Exact ties go to the negative class.
ClassScores score(const NbcModel& model, const RawDocument& doc);
ClassScores score_tokens(const NbcModel& model, std::span<const Token> tokens);

Label classify(const NbcModel& model, const RawDocument& doc);

// Batch classification; the parallel form splits documents across OpenMP
// threads and returns labels in input order.
std::vector<Label> classify_all(const NbcModel& model, std::span<const RawDocument> docs);
std::vector<Label> classify_all_serial(const NbcModel& model, std::span<const RawDocument> docs);

inline constexpr std::string_view kModelMagic = "pageclass-model";
inline constexpr int kModelVersion = 1;

// Text model file; see model_io.cpp for the layout. load(save(m)) == m.
void write_model(std::ostream& out, const NbcModel& model);
NbcModel read_model(std::istream& in);
void save_model(const NbcModel& model, const std::filesystem::path& path);
NbcModel load_model(const std::filesystem::path& path);

}  // namespace pageclass
