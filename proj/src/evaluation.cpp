#include "pageclass/evaluation.hpp"

#include <ostream>

#include "pageclass/error.hpp"
#include "pageclass/format.hpp"

namespace pageclass {

void ConfusionMatrix::add(Label predicted, Label gold) {
  if (predicted == Label::Positive)
    ++(gold == Label::Positive ? tp : fp);
  else
    ++(gold == Label::Positive ? fn : tn);
}

ConfusionMatrix& ConfusionMatrix::operator+=(const ConfusionMatrix& o) {
  tp += o.tp;
  fp += o.fp;
  fn += o.fn;
  tn += o.tn;
  return *this;
}

Metrics metrics(const ConfusionMatrix& m) {
  auto ratio = [](std::uint64_t num, std::uint64_t den) -> std::optional<double> {
    if (den == 0) return std::nullopt;
    return static_cast<double>(num) / static_cast<double>(den);
  };
  return {ratio(m.tp + m.tn, m.total()), ratio(m.tp, m.tp + m.fp), ratio(m.tp, m.tp + m.fn)};
}

std::string format_metric(std::optional<double> value) {
  return value ? format_fixed(*value, 3) : "n/a";
}

std::string format_priors(double positive) {
  return format_fixed(positive, 3) + "/" + format_fixed(1.0 - positive, 3);
}

ConfusionMatrix tally(std::span<const Label> predicted, std::span<const Label> gold) {
  if (predicted.size() != gold.size()) throw Error("prediction and gold label counts differ");
  ConfusionMatrix m;
  for (std::size_t i = 0; i < predicted.size(); ++i) m.add(predicted[i], gold[i]);
  return m;
}

namespace {

std::vector<Label> gold_labels(std::span<const RawDocument> docs) {
  std::vector<Label> gold;
  gold.reserve(docs.size());
  for (const auto& doc : docs) {
    if (!doc.label) throw Error("test document '" + doc.id + "' has no label");
    gold.push_back(*doc.label);
  }
  return gold;
}

}  // namespace

ConfusionMatrix evaluate(const NbcModel& model, std::span<const RawDocument> test_docs) {
  const auto gold = gold_labels(test_docs);
  const auto n = static_cast<std::ptrdiff_t>(test_docs.size());
  std::uint64_t tp = 0, fp = 0, fn = 0, tn = 0;
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : tp, fp, fn, tn)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const bool predicted_pos = classify(model, test_docs[i]) == Label::Positive;
    const bool gold_pos = gold[i] == Label::Positive;
    if (predicted_pos)
      ++(gold_pos ? tp : fp);
    else
      ++(gold_pos ? fn : tn);
  }
  return {tp, fp, fn, tn};
}

ConfusionMatrix evaluate_serial(const NbcModel& model, std::span<const RawDocument> test_docs) {
  const auto gold = gold_labels(test_docs);
  return tally(classify_all_serial(model, test_docs), gold);
}

MetricsReport run_experiment(std::span<const RawDocument> corpus, const ExperimentConfig& config,
                             ClassCounts train_counts, ClassCounts test_counts) {
  config.validate();
  const auto split = split_corpus(corpus, train_counts, test_counts, config.split_seed);
  const auto model = train(split.train, config);
  MetricsReport report;
  report.matrix = evaluate(model, split.test);
  report.metrics = metrics(report.matrix);
  report.config = config;
  report.n_features_used = model.vocab_size();
  return report;
}

std::vector<MetricsReport> run_grid(std::span<const RawDocument> corpus, const ExperimentConfig& base,
                                    std::span<const View> views,
                                    std::span<const std::optional<std::size_t>> feature_counts,
                                    std::span<const double> priors, ClassCounts train_counts,
                                    ClassCounts test_counts) {
  std::vector<MetricsReport> reports;
  reports.reserve(views.size() * feature_counts.size() * priors.size());
  for (View view : views)
    for (const auto& count : feature_counts)
      for (double prior : priors) {
        ExperimentConfig cell = base;
        cell.view = view;
        cell.feature_count = count;
        cell.prior_positive = prior;
        try {
          reports.push_back(run_experiment(corpus, cell, train_counts, test_counts));
        } catch (const Error& e) {
          throw Error(std::string(experiment_name(view)) + " features " +
                      (count ? std::to_string(*count) : std::string("all")) + " priors " + format_priors(prior) +
                      ": " + e.what());
        }
      }
  return reports;
}

void write_metrics_tsv(std::ostream& out, std::span<const MetricsReport> reports) {
  out << "experiment\tview\tpriors\tfeatures\taccuracy\tprecision\trecall\ttp\tfp\tfn\ttn\n";
  for (const auto& r : reports) {
    const auto& c = r.config;
    out << experiment_name(c.view) << '\t' << view_name(c.view) << '\t' << format_priors(c.prior_positive) << '\t'
        << (c.feature_count ? std::to_string(*c.feature_count) : "all") << '\t'
        << format_metric(r.metrics.accuracy) << '\t' << format_metric(r.metrics.precision) << '\t'
        << format_metric(r.metrics.recall) << '\t' << r.matrix.tp << '\t' << r.matrix.fp << '\t' << r.matrix.fn
        << '\t' << r.matrix.tn << '\n';
  }
}

}  // namespace pageclass
