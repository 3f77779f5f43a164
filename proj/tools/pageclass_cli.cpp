// pageclass: train, evaluate and inspect product-page classifiers.
//
// Exit status: 0 success, 1 runtime or data error, 2 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pageclass/classifier.hpp"
#include "pageclass/corpus.hpp"
#include "pageclass/error.hpp"
#include "pageclass/evaluation.hpp"
#include "pageclass/feature_ranking.hpp"
#include "pageclass/format.hpp"
#include "pageclass/synth.hpp"

namespace fs = std::filesystem;
using namespace pageclass;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::size_t parse_count(const std::string& text, const std::string& flag) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty() || v == 0)
    throw UsageError(flag + ": expected a positive integer, got '" + text + "'");
  return v;
}

double parse_prior(const std::string& text) {
  auto v = parse_exact(text);
  if (!v || !(*v > 0.0 && *v < 1.0)) throw UsageError("--priors: expected a value in (0,1), got '" + text + "'");
  return *v;
}

std::optional<std::size_t> parse_feature_count(const std::string& text) {
  if (text == "all") return std::nullopt;
  return parse_count(text, "--features");
}

View parse_view_flag(const std::string& text) {
  auto v = parse_view(text);
  if (!v) throw UsageError("unknown view '" + text + "' (expected exp1..exp5, full, full+cat, first50, first50+cat, cat)");
  return *v;
}

bool parse_on_off(const std::string& text, const std::string& flag) {
  if (text == "on") return true;
  if (text == "off") return false;
  throw UsageError(flag + ": expected on or off, got '" + text + "'");
}

// "n" for both classes, or "positive,negative".
ClassCounts parse_class_counts(const std::string& text, const std::string& flag) {
  auto parts = split_list(text);
  if (parts.size() == 1) return ClassCounts::both(parse_count(parts[0], flag));
  if (parts.size() == 2) return {parse_count(parts[0], flag), parse_count(parts[1], flag)};
  throw UsageError(flag + ": expected n or positive,negative");
}

// Flags shared by every command that trains.
struct ConfigFlags {
  std::string view = "exp1";
  std::string priors = "0.5";
  std::string features = "all";
  std::string rank = "df";
  std::string smoothing = "on";
  std::string stem = "on";
  std::string stopwords;
  std::uint64_t seed = 0;

  void add_to(CLI::App& cmd, bool grid) {
    if (grid) {
      cmd.add_option("--views,--view", view, "Comma list of views, or 'all'")->capture_default_str();
      cmd.add_option("--features", features, "Comma list of feature counts ('all' or n)")->capture_default_str();
      cmd.add_option("--priors", priors, "Comma list of positive-class priors")->capture_default_str();
    } else {
      cmd.add_option("--view", view, "exp1..exp5 | full | full+cat | first50 | first50+cat | cat")
          ->capture_default_str();
      cmd.add_option("--features", features, "'all' or number of top features per class")->capture_default_str();
      cmd.add_option("--priors", priors, "Positive-class prior p; negative gets 1-p")->capture_default_str();
    }
    cmd.add_option("--rank", rank, "Ranking numerator: tf or df")->capture_default_str();
    cmd.add_option("--smoothing", smoothing, "Laplace smoothing: on or off")->capture_default_str();
    cmd.add_option("--stem", stem, "Porter stemming: on or off")->capture_default_str();
    cmd.add_option("--stopwords", stopwords, "Stopword file (default: bundled English list)");
    cmd.add_option("--seed", seed, "Split seed")->capture_default_str();
  }

  ExperimentConfig base() const {
    ExperimentConfig config;
    auto r = parse_ranking(rank);
    if (!r) throw UsageError("--rank: expected tf or df, got '" + rank + "'");
    config.ranking = *r;
    config.smoothing = parse_on_off(smoothing, "--smoothing");
    config.pipeline.stem = parse_on_off(stem, "--stem");
    if (!stopwords.empty()) config.pipeline.stopwords = load_stopwords(stopwords);
    config.split_seed = seed;
    return config;
  }

  ExperimentConfig single() const {
    auto config = base();
    config.view = parse_view_flag(view);
    config.prior_positive = parse_prior(priors);
    config.feature_count = parse_feature_count(features);
    return config;
  }
};

// Writes to `path`, or stdout when path is empty or "-".
template <typename F>
void with_output(const std::string& path, F&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  write(out);
  if (!out) throw Error("write failed for " + path);
}

void print_training_summary(std::ostream& out, const NbcModel& model) {
  out << "positive documents: " << model.positive.doc_count() << '\n'
      << "negative documents: " << model.negative.doc_count() << '\n'
      << "vocabulary |V|: " << model.vocab_size() << '\n'
      << "features: "
      << (model.feature_count ? "top " + std::to_string(*model.feature_count) + " per class by " +
                                    std::string(ranking_name(model.ranking))
                              : std::string("all"))
      << '\n'
      << "view: " << experiment_name(model.view) << " (" << view_name(model.view) << ")\n"
      << "smoothing: " << (model.smoothing ? "on" : "off") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Product/brand page classifier: Naive Bayes over unigram language models"};
  app.require_subcommand(1);

  // split
  auto* split_cmd = app.add_subcommand("split", "Write reproducible train/test manifests");
  std::string corpus_path, out_path, model_path, input_path = "-";
  std::string train_per_class = "400", test_per_class = "195";
  std::uint64_t split_seed = 0;
  split_cmd->add_option("--corpus", corpus_path, "Corpus manifest")->required();
  split_cmd->add_option("--out", out_path, "Output directory (train.jsonl, test.jsonl)")->required();
  split_cmd->add_option("--train-per-class", train_per_class, "n or positive,negative")->capture_default_str();
  split_cmd->add_option("--test-per-class", test_per_class, "n or positive,negative")->capture_default_str();
  split_cmd->add_option("--seed", split_seed, "Split seed")->capture_default_str();

  // train
  auto* train_cmd = app.add_subcommand("train", "Train a model on every labeled document of a corpus");
  ConfigFlags train_flags;
  train_cmd->add_option("--corpus", corpus_path, "Corpus manifest")->required();
  train_cmd->add_option("--out,--model", out_path, "Model file to write")->required();
  train_flags.add_to(*train_cmd, false);

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "Classify documents (manifest format, '-' for stdin)");
  classify_cmd->add_option("--model", model_path, "Model file")->required();
  classify_cmd->add_option("--input,--corpus", input_path, "Documents to classify")->capture_default_str();
  classify_cmd->add_option("--out", out_path, "Output file (default stdout)");

  // evaluate
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Score a model against a labeled corpus");
  evaluate_cmd->add_option("--model", model_path, "Model file")->required();
  evaluate_cmd->add_option("--corpus", corpus_path, "Labeled test manifest")->required();
  evaluate_cmd->add_option("--out", out_path, "Report file (default stdout)");

  // experiment
  auto* experiment_cmd = app.add_subcommand("experiment", "Run the split/train/evaluate grid");
  ConfigFlags grid_flags;
  grid_flags.view = "all";
  experiment_cmd->add_option("--corpus", corpus_path, "Corpus manifest")->required();
  experiment_cmd->add_option("--out", out_path, "Report file (default stdout)");
  experiment_cmd->add_option("--train-per-class", train_per_class, "n or positive,negative")
      ->capture_default_str();
  experiment_cmd->add_option("--test-per-class", test_per_class, "n or positive,negative")->capture_default_str();
  grid_flags.add_to(*experiment_cmd, true);

  // features
  auto* features_cmd = app.add_subcommand("features", "Most informative words per class");
  std::size_t top_n = 25;
  std::string rank_mode;
  features_cmd->add_option("--model", model_path, "Model file")->required();
  features_cmd->add_option("--n,-n", top_n, "Rows per class")->capture_default_str();
  features_cmd->add_option("--rank", rank_mode, "tf or df (default: the model's ranking mode)");
  features_cmd->add_option("--out", out_path, "Report file (default stdout)");

  // synth
  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic two-class corpus");
  SynthParams synth;
  std::string vocab = "200";
  synth_cmd->add_option("--seed", synth.seed, "Generator seed")->capture_default_str();
  synth_cmd->add_option("--docs-per-class", synth.docs_per_class, "Documents per class")->capture_default_str();
  synth_cmd->add_option("--vocab", vocab, "Vocabulary size: n or positive,negative")->capture_default_str();
  synth_cmd->add_option("--overlap", synth.overlap, "Shared vocabulary ratio in [0,1]")->capture_default_str();
  synth_cmd->add_option("--min-length", synth.min_length, "Minimum body length in words")->capture_default_str();
  synth_cmd->add_option("--max-length", synth.max_length, "Maximum body length in words")->capture_default_str();
  synth_cmd->add_option("--categories", synth.categories_per_doc, "Category strings per document")
      ->capture_default_str();
  synth_cmd->add_option("--out", out_path, "Manifest to write (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (split_cmd->parsed()) {
      const auto docs = load_corpus(corpus_path);
      const auto split = split_corpus(docs, parse_class_counts(train_per_class, "--train-per-class"),
                                      parse_class_counts(test_per_class, "--test-per-class"), split_seed);
      fs::create_directories(out_path);
      save_corpus(fs::path(out_path) / "train.jsonl", split.train);
      save_corpus(fs::path(out_path) / "test.jsonl", split.test);
      std::cout << "train: " << split.train.size() << " documents\n"
                << "test: " << split.test.size() << " documents\n";
    } else if (train_cmd->parsed()) {
      const auto config = train_flags.single();
      const auto docs = load_corpus(corpus_path);
      const auto model = train(docs, config);
      save_model(model, out_path);
      print_training_summary(std::cout, model);
    } else if (classify_cmd->parsed()) {
      const auto model = load_model(model_path);
      std::vector<RawDocument> docs;
      if (input_path == "-") {
        docs = parse_corpus(std::cin, fs::current_path());
      } else {
        docs = load_corpus(input_path);
      }
      std::vector<ClassScores> scores(docs.size());
      const auto n = static_cast<std::ptrdiff_t>(docs.size());
#pragma omp parallel for schedule(dynamic, 4)
      for (std::ptrdiff_t i = 0; i < n; ++i) scores[i] = score(model, docs[i]);
      with_output(out_path, [&](std::ostream& out) {
        for (std::size_t i = 0; i < docs.size(); ++i)
          out << docs[i].id << '\t' << label_name(scores[i].decision) << '\t'
              << format_exact(scores[i].log_posterior_positive) << '\t'
              << format_exact(scores[i].log_posterior_negative) << '\n';
      });
    } else if (evaluate_cmd->parsed()) {
      const auto model = load_model(model_path);
      const auto docs = load_corpus(corpus_path);
      MetricsReport report;
      report.matrix = evaluate(model, docs);
      report.metrics = metrics(report.matrix);
      report.config.view = model.view;
      report.config.prior_positive = model.priors.positive;
      report.config.feature_count = model.feature_count;
      report.n_features_used = model.vocab_size();
      with_output(out_path, [&](std::ostream& out) { write_metrics_tsv(out, std::span(&report, 1)); });
    } else if (experiment_cmd->parsed()) {
      const auto base = grid_flags.base();
      std::vector<View> views;
      for (const auto& v : split_list(grid_flags.view)) {
        if (v == "all") {
          views.insert(views.end(), std::begin(kAllViews), std::end(kAllViews));
        } else {
          views.push_back(parse_view_flag(v));
        }
      }
      std::vector<std::optional<std::size_t>> counts;
      for (const auto& c : split_list(grid_flags.features)) counts.push_back(parse_feature_count(c));
      std::vector<double> priors;
      for (const auto& p : split_list(grid_flags.priors)) priors.push_back(parse_prior(p));
      if (views.empty() || counts.empty() || priors.empty())
        throw UsageError("--views, --features and --priors must each name at least one value");

      const auto train_counts = parse_class_counts(train_per_class, "--train-per-class");
      const auto test_counts = parse_class_counts(test_per_class, "--test-per-class");
      const auto docs = load_corpus(corpus_path);
      const auto reports = run_grid(docs, base, views, counts, priors, train_counts, test_counts);
      with_output(out_path, [&](std::ostream& out) { write_metrics_tsv(out, reports); });
    } else if (features_cmd->parsed()) {
      if (top_n == 0) throw UsageError("--n must be positive");
      const auto model = load_model(model_path);
      auto mode = model.ranking;
      if (!rank_mode.empty()) {
        auto m = parse_ranking(rank_mode);
        if (!m) throw UsageError("--rank: expected tf or df, got '" + rank_mode + "'");
        mode = *m;
      }
      const auto stats = CollectionStats::from_models(model.positive, model.negative);
      const auto report = informative_words_report(model.positive, model.negative, stats, mode, top_n);
      with_output(out_path, [&](std::ostream& out) { write_report_tsv(out, report); });
    } else if (synth_cmd->parsed()) {
      const auto sizes = parse_class_counts(vocab, "--vocab");
      synth.vocab_positive = sizes.positive;
      synth.vocab_negative = sizes.negative;
      try {
        synth.validate();
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      const auto docs = synthesize_corpus(synth);
      with_output(out_path, [&](std::ostream& out) { write_corpus(out, docs); });
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n' << "Run with --help for usage.\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
