#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pageclass/corpus.hpp"

namespace pageclass {

// Two-class synthetic corpus: each class draws words from its own multinomial.
// The class vocabularies share round(overlap * min(vocab sizes)) words; with
// equal sizes overlap 0 gives disjoint and overlap 1 identical vocabularies.
// Word weights follow a Zipf law over a seeded ranking of the union
// vocabulary, restricted to each class.
struct SynthParams {
  std::uint64_t seed = 0;
  std::size_t docs_per_class = 100;
  std::size_t vocab_positive = 200;
  std::size_t vocab_negative = 200;
  double overlap = 0.0;
  std::size_t min_length = 60;
  std::size_t max_length = 160;
  std::size_t categories_per_doc = 3;
  std::size_t words_per_category = 2;
  double zipf_exponent = 1.0;

  // Throws Error on non-positive sizes, inverted length bounds or an overlap
  // outside [0,1].
  void validate() const;
};

// Synthetic words are consonant-vowel syllables closed by 'x', which no
// stemming or stopword rule touches.
std::string synth_word(std::size_t index);

// Word indices of each class vocabulary, in generation order.
std::vector<std::size_t> synth_vocabulary(const SynthParams& params, Label label);

std::vector<RawDocument> synthesize_corpus(const SynthParams& params);

}  // namespace pageclass
