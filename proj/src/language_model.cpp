#include "pageclass/language_model.hpp"

#include <unordered_set>
#include <vector>

#include <omp.h>

#include "pageclass/error.hpp"

namespace pageclass {

UnigramModel UnigramModel::from_counts(Label label, std::uint64_t doc_count, TermMap terms) {
  UnigramModel model(label);
  model.doc_count_ = doc_count;
  for (const auto& [term, stats] : terms) {
    if (stats.count == 0 || stats.doc_frequency == 0)
      throw Error("term '" + term + "' has a zero count");
    if (stats.doc_frequency > doc_count)
      throw Error("term '" + term + "' occurs in more documents than the class has");
    if (stats.doc_frequency > stats.count)
      throw Error("term '" + term + "' has document frequency above its count");
    model.total_tokens_ += stats.count;
  }
  model.terms_ = std::move(terms);
  return model;
}

void UnigramModel::add_document(std::span<const Token> tokens) {
  std::unordered_set<std::string_view> seen;
  for (const auto& token : tokens) {
    auto it = terms_.find(token);
    if (it == terms_.end()) it = terms_.emplace(token, TermStats{}).first;
    ++it->second.count;
    if (seen.insert(it->first).second) ++it->second.doc_frequency;
  }
  total_tokens_ += tokens.size();
  ++doc_count_;
}

std::uint64_t UnigramModel::count(std::string_view term) const {
  auto it = terms_.find(term);
  return it == terms_.end() ? 0 : it->second.count;
}

std::uint64_t UnigramModel::doc_frequency(std::string_view term) const {
  auto it = terms_.find(term);
  return it == terms_.end() ? 0 : it->second.doc_frequency;
}

UnigramModel build_model_serial(std::span<const TokenList> docs, Label label) {
  UnigramModel model(label);
  for (const auto& doc : docs) model.add_document(doc);
  return model;
}

UnigramModel build_model(std::span<const TokenList> docs, Label label) {
  const auto n = static_cast<std::ptrdiff_t>(docs.size());
  const int threads = omp_get_max_threads();
  if (threads <= 1 || n < 2 * threads) return build_model_serial(docs, label);

  std::vector<UnigramModel> partial(static_cast<std::size_t>(threads), UnigramModel(label));
#pragma omp parallel num_threads(threads)
  {
    auto& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) mine.add_document(docs[i]);
  }

  // Pairwise tree reduction.
  for (std::size_t stride = 1; stride < partial.size(); stride *= 2) {
    const auto pairs = static_cast<std::ptrdiff_t>(partial.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < pairs; i += static_cast<std::ptrdiff_t>(2 * stride)) {
      const auto j = static_cast<std::size_t>(i) + stride;
      if (j < partial.size()) partial[i] = merge_models(partial[i], partial[j]);
    }
  }
  return std::move(partial.front());
}

UnigramModel merge_models(const UnigramModel& a, const UnigramModel& b) {
  if (a.label() != b.label())
    throw Error("cannot merge a " + std::string(label_name(a.label())) + " model with a " +
                std::string(label_name(b.label())) + " model");
  UnigramModel out = a;
  for (const auto& [term, stats] : b.terms_) {
    auto& slot = out.terms_[term];
    slot.count += stats.count;
    slot.doc_frequency += stats.doc_frequency;
  }
  out.total_tokens_ += b.total_tokens_;
  out.doc_count_ += b.doc_count_;
  return out;
}

double term_probability(const UnigramModel& model, std::string_view term) {
  if (model.total_tokens() == 0) throw Error("term probability requested from an empty model");
  return static_cast<double>(model.count(term)) / static_cast<double>(model.total_tokens());
}

double smoothed_probability(const UnigramModel& model, std::string_view term, std::size_t vocab_size) {
  if (vocab_size == 0) throw Error("smoothing requires a non-empty vocabulary");
  return static_cast<double>(model.count(term) + 1) /
         static_cast<double>(model.total_tokens() + vocab_size);
}

}  // namespace pageclass
