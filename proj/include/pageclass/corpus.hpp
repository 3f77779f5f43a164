#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pageclass/text_pipeline.hpp"
#include "pageclass/types.hpp"

namespace pageclass {

struct RawDocument {
  std::string id;
  std::optional<Label> label;
  std::string body;
  std::vector<std::string> categories;
  std::string lang;

  bool operator==(const RawDocument&) const = default;
};

// Everything needed to reproduce one experiment cell. feature_count empty
// means "all words".
struct ExperimentConfig {
  View view = View::FullText;
  double prior_positive = 0.5;
  RankingNumerator ranking = RankingNumerator::DocumentFrequency;
  std::optional<std::size_t> feature_count;
  bool smoothing = true;
  PipelineConfig pipeline = PipelineConfig::defaults();
  std::uint64_t split_seed = 0;

  double prior_negative() const { return 1.0 - prior_positive; }
  // Throws Error on a prior outside (0,1) or a zero feature count.
  void validate() const;
};

struct CorpusSplit {
  std::vector<RawDocument> train;
  std::vector<RawDocument> test;
};

struct ClassCounts {
  std::size_t positive = 0;
  std::size_t negative = 0;

  static ClassCounts both(std::size_t n) { return {n, n}; }
  bool operator==(const ClassCounts&) const = default;
};

// Manifest: one JSON object per line. Blank lines are skipped. Records may
// reference their body through "body_file", resolved against `base_dir`.
std::vector<RawDocument> load_corpus(const std::filesystem::path& path);
std::vector<RawDocument> parse_corpus(std::istream& in, const std::filesystem::path& base_dir = {});

void write_record(std::ostream& out, const RawDocument& doc);
void write_corpus(std::ostream& out, std::span<const RawDocument> docs);
void save_corpus(const std::filesystem::path& path, std::span<const RawDocument> docs);

// Shuffles each class with a generator seeded by `seed` and takes the first
// `train` documents for training and the next `test` for testing. Within a
// partition positives come first. Throws Error on unlabeled documents or a
// class with too few documents.
CorpusSplit split_corpus(std::span<const RawDocument> docs, ClassCounts train, ClassCounts test,
                         std::uint64_t seed);
CorpusSplit split_corpus(std::span<const RawDocument> docs, std::size_t train_per_class,
                         std::size_t test_per_class, std::uint64_t seed);

inline constexpr std::size_t kFirstWordsWindow = 50;

// Tokens of `doc` under `view`. Category strings go through the same
// pipeline with stemming disabled.
TokenList apply_view(const RawDocument& doc, View view, const PipelineConfig& pipeline);
TokenList category_tokens(const RawDocument& doc, const PipelineConfig& pipeline);

// apply_view over a batch, parallelised across documents; output order
// matches input order.
std::vector<TokenList> apply_view_all(std::span<const RawDocument> docs, View view,
                                      const PipelineConfig& pipeline);

std::size_t count_label(std::span<const RawDocument> docs, Label label);

}  // namespace pageclass
