#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pageclass/classifier.hpp"
#include "pageclass/corpus.hpp"

namespace pageclass {

// Rows are the obtained label, columns the correct label:
//
//                 correct +   correct -
//   obtained +       tp          fp
//   obtained -       fn          tn
struct ConfusionMatrix {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  std::uint64_t tn = 0;

  std::uint64_t total() const { return tp + fp + fn + tn; }
  void add(Label predicted, Label gold);
  ConfusionMatrix& operator+=(const ConfusionMatrix& o);
  bool operator==(const ConfusionMatrix&) const = default;
};

// Empty optional = undefined (zero denominator).
struct Metrics {
  std::optional<double> accuracy;
  std::optional<double> precision;
  std::optional<double> recall;
};

Metrics metrics(const ConfusionMatrix& m);

// Three decimals, or "n/a" when undefined.
std::string format_metric(std::optional<double> value);

struct MetricsReport {
  Metrics metrics;
  ConfusionMatrix matrix;
  ExperimentConfig config;
  std::size_t n_features_used = 0;
};

ConfusionMatrix tally(std::span<const Label> predicted, std::span<const Label> gold);

// Classifies every test document in parallel and tallies against its gold
// label. Throws Error on an unlabeled document.
ConfusionMatrix evaluate(const NbcModel& model, std::span<const RawDocument> test_docs);
ConfusionMatrix evaluate_serial(const NbcModel& model, std::span<const RawDocument> test_docs);

// split -> train -> evaluate -> metrics.
MetricsReport run_experiment(std::span<const RawDocument> corpus, const ExperimentConfig& config,
                             ClassCounts train, ClassCounts test);

// One report per (view, feature count, prior) triple, views outermost and
// priors innermost. A feature count of nullopt means all words. A failing
// cell aborts the grid with an Error naming the cell.
std::vector<MetricsReport> run_grid(std::span<const RawDocument> corpus, const ExperimentConfig& base,
                                    std::span<const View> views,
                                    std::span<const std::optional<std::size_t>> feature_counts,
                                    std::span<const double> priors, ClassCounts train, ClassCounts test);

// Header plus one row per report: experiment, view, priors, features,
// accuracy, precision, recall, tp, fp, fn, tn.
void write_metrics_tsv(std::ostream& out, std::span<const MetricsReport> reports);
std::string format_priors(double positive);

}  // namespace pageclass
