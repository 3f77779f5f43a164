#include "pageclass/classifier.hpp"

#include <cmath>
#include <limits>

#include "pageclass/error.hpp"
#include "pageclass/feature_ranking.hpp"

namespace pageclass {

ClassPriors ClassPriors::from_positive(double p) {
  if (!(p > 0.0 && p < 1.0)) throw Error("positive prior must lie in (0,1)");
  return {p, 1.0 - p};
}

NbcModel train_tokens(std::span<const TokenList> positive, std::span<const TokenList> negative,
                      const ExperimentConfig& config) {
  config.validate();
  if (positive.empty()) throw Error("training data has no positive documents");
  if (negative.empty()) throw Error("training data has no negative documents");

  NbcModel model;
  model.positive = build_model(positive, Label::Positive);
  model.negative = build_model(negative, Label::Negative);
  model.priors = ClassPriors::from_positive(config.prior_positive);
  model.smoothing = config.smoothing;
  model.pipeline = config.pipeline;
  model.view = config.view;
  model.ranking = config.ranking;
  model.feature_count = config.feature_count;

  if (!config.feature_count) {
    for (const auto* m : {&model.positive, &model.negative})
      for (const auto& [term, stats] : m->terms()) model.features.insert(term);
  } else {
    const auto stats = CollectionStats::from_models(model.positive, model.negative);
    for (const auto* m : {&model.positive, &model.negative})
      for (auto& fs : rank_features(*m, stats, config.ranking, config.feature_count))
        model.features.insert(std::move(fs.term));
  }
  return model;
}

NbcModel train(std::span<const RawDocument> docs, const ExperimentConfig& config) {
  for (const auto& doc : docs)
    if (!doc.label) throw Error("training document '" + doc.id + "' has no label");
  auto tokens = apply_view_all(docs, config.view, config.pipeline);
  std::vector<TokenList> pos, neg;
  for (std::size_t i = 0; i < docs.size(); ++i)
    (*docs[i].label == Label::Positive ? pos : neg).push_back(std::move(tokens[i]));
  return train_tokens(pos, neg, config);
}

ClassScores score_tokens(const NbcModel& model, std::span<const Token> tokens) {
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  ClassScores s;
  s.log_posterior_positive = std::log(model.priors.positive);
  s.log_posterior_negative = std::log(model.priors.negative);

  const auto vocab = model.vocab_size();
  const double pos_denom = static_cast<double>(model.positive.total_tokens() + vocab);
  const double neg_denom = static_cast<double>(model.negative.total_tokens() + vocab);

  for (const auto& token : tokens) {
    if (!model.features.contains(token)) continue;
    const auto cp = model.positive.count(token);
    const auto cn = model.negative.count(token);
    if (model.smoothing) {
      s.log_posterior_positive += std::log(static_cast<double>(cp + 1) / pos_denom);
      s.log_posterior_negative += std::log(static_cast<double>(cn + 1) / neg_denom);
    } else {
      if (cp == 0 && cn == 0) continue;
      s.log_posterior_positive += cp == 0 ? kNegInf : std::log(term_probability(model.positive, token));
      s.log_posterior_negative += cn == 0 ? kNegInf : std::log(term_probability(model.negative, token));
    }
  }
  s.decision = s.log_posterior_positive > s.log_posterior_negative ? Label::Positive : Label::Negative;
  return s;
}

ClassScores score(const NbcModel& model, const RawDocument& doc) {
  return score_tokens(model, apply_view(doc, model.view, model.pipeline));
}

Label classify(const NbcModel& model, const RawDocument& doc) { return score(model, doc).decision; }

std::vector<Label> classify_all_serial(const NbcModel& model, std::span<const RawDocument> docs) {
  std::vector<Label> out;
  out.reserve(docs.size());
  for (const auto& doc : docs) out.push_back(classify(model, doc));
  return out;
}

std::vector<Label> classify_all(const NbcModel& model, std::span<const RawDocument> docs) {
  std::vector<Label> out(docs.size(), Label::Negative);
  const auto n = static_cast<std::ptrdiff_t>(docs.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = classify(model, docs[i]);
  return out;
}

}  // namespace pageclass
