#include "pageclass/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>

#include "pageclass/error.hpp"

namespace pageclass {

void SynthParams::validate() const {
  if (docs_per_class == 0) throw Error("docs per class must be positive");
  if (vocab_positive == 0 || vocab_negative == 0) throw Error("vocabulary sizes must be positive");
  if (!(overlap >= 0.0 && overlap <= 1.0)) throw Error("overlap must lie in [0,1]");
  if (min_length == 0 || min_length > max_length) throw Error("document length bounds are invalid");
  if (!(zipf_exponent >= 0.0)) throw Error("zipf exponent must be non-negative");
}

std::string synth_word(std::size_t index) {
  static constexpr std::string_view consonants = "bdfgklmnprstvz";
  static constexpr std::string_view vowels = "aeiou";
  constexpr std::size_t syllables = consonants.size() * vowels.size();
  std::string word;
  std::size_t v = index;
  for (int i = 0; i < 2 || v > 0; ++i) {
    const auto s = v % syllables;
    word += consonants[s / vowels.size()];
    word += vowels[s % vowels.size()];
    v /= syllables;
  }
  word += 'x';
  return word;
}

std::vector<std::size_t> synth_vocabulary(const SynthParams& params, Label label) {
  const auto shared = static_cast<std::size_t>(
      std::llround(params.overlap * static_cast<double>(std::min(params.vocab_positive, params.vocab_negative))));
  std::vector<std::size_t> vocab;
  if (label == Label::Positive) {
    vocab.resize(params.vocab_positive);
    std::iota(vocab.begin(), vocab.end(), std::size_t{0});
  } else {
    vocab.resize(params.vocab_negative);
    std::iota(vocab.begin(), vocab.end(), params.vocab_positive - shared);
  }
  return vocab;
}

namespace {

struct ClassSampler {
  std::vector<std::string> words;
  std::discrete_distribution<std::size_t> dist;

  std::string draw(std::mt19937_64& rng) { return words[dist(rng)]; }
};

// Weights come from one Zipf ranking over the union vocabulary, so a shared
// word is equally likely in both classes and only the class-specific words
// separate them.
std::vector<double> union_weights(const SynthParams& params, std::size_t union_size, std::mt19937_64& rng) {
  std::vector<std::size_t> rank(union_size);
  std::iota(rank.begin(), rank.end(), std::size_t{0});
  std::shuffle(rank.begin(), rank.end(), rng);
  std::vector<double> weights(union_size);
  for (std::size_t i = 0; i < union_size; ++i)
    weights[i] = 1.0 / std::pow(static_cast<double>(rank[i] + 1), params.zipf_exponent);
  return weights;
}

ClassSampler make_sampler(const SynthParams& params, Label label, const std::vector<double>& global) {
  const auto vocab = synth_vocabulary(params, label);
  std::vector<double> weights;
  ClassSampler sampler;
  weights.reserve(vocab.size());
  sampler.words.reserve(vocab.size());
  for (auto idx : vocab) {
    weights.push_back(global[idx]);
    sampler.words.push_back(synth_word(idx));
  }
  sampler.dist = std::discrete_distribution<std::size_t>(weights.begin(), weights.end());
  return sampler;
}

RawDocument make_document(const SynthParams& params, Label label, std::size_t n, ClassSampler& sampler,
                          std::mt19937_64& rng) {
  RawDocument doc;
  char id[32];
  std::snprintf(id, sizeof id, "%s-%05zu", label == Label::Positive ? "pos" : "neg", n);
  doc.id = id;
  doc.label = label;
  doc.lang = "en";

  std::uniform_int_distribution<std::size_t> length(params.min_length, params.max_length);
  const auto len = length(rng);
  for (std::size_t i = 0; i < len; ++i) {
    if (i) doc.body += ' ';
    doc.body += sampler.draw(rng);
  }
  for (std::size_t c = 0; c < params.categories_per_doc; ++c) {
    std::string category;
    for (std::size_t w = 0; w < params.words_per_category; ++w) {
      auto word = sampler.draw(rng);
      if (w == 0) word[0] = static_cast<char>(word[0] - 'a' + 'A');
      if (w) category += ' ';
      category += word;
    }
    doc.categories.push_back(std::move(category));
  }
  return doc;
}

}  // namespace

std::vector<RawDocument> synthesize_corpus(const SynthParams& params) {
  params.validate();
  std::mt19937_64 rng(params.seed);
  const auto neg_vocab = synth_vocabulary(params, Label::Negative);
  const auto global = union_weights(params, std::max(params.vocab_positive, neg_vocab.back() + 1), rng);
  auto pos = make_sampler(params, Label::Positive, global);
  auto neg = make_sampler(params, Label::Negative, global);

  std::vector<RawDocument> docs;
  docs.reserve(2 * params.docs_per_class);
  for (std::size_t i = 1; i <= params.docs_per_class; ++i)
    docs.push_back(make_document(params, Label::Positive, i, pos, rng));
  for (std::size_t i = 1; i <= params.docs_per_class; ++i)
    docs.push_back(make_document(params, Label::Negative, i, neg, rng));
  return docs;
}

}  // namespace pageclass
