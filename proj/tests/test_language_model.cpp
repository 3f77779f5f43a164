#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

#include "pageclass/error.hpp"
#include "pageclass/language_model.hpp"

using namespace pageclass;

namespace {

std::vector<TokenList> random_docs(std::mt19937& rng, std::size_t n, std::size_t vocab, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), word(0, vocab - 1);
  std::vector<TokenList> docs(n);
  for (auto& d : docs) {
    d.resize(len(rng));
    for (auto& t : d) t = "w" + std::to_string(word(rng));
  }
  return docs;
}

}  // namespace

TEST_CASE("build_model counts occurrences and documents") {
  const std::vector<TokenList> one = {{"a", "a", "b"}};
  const auto m = build_model(one, Label::Positive);
  CHECK(m.count("a") == 2);
  CHECK(m.count("b") == 1);
  CHECK(m.doc_frequency("a") == 1);
  CHECK(m.doc_frequency("b") == 1);
  CHECK(m.total_tokens() == 3);
  CHECK(m.doc_count() == 1);

  const std::vector<TokenList> three = {{"a"}, {"a"}, {"b"}};
  const auto m3 = build_model(three, Label::Negative);
  CHECK(m3.doc_frequency("a") == 2);
  CHECK(m3.doc_frequency("b") == 1);
  CHECK(m3.doc_count() == 3);
  CHECK(m3.label() == Label::Negative);

  const auto empty = build_model({}, Label::Positive);
  CHECK(empty.total_tokens() == 0);
  CHECK(empty.vocabulary_size() == 0);
}

TEST_CASE("build_model totals match independent counting") {
  std::mt19937 rng(11);
  const auto docs = random_docs(rng, 100, 40, 30);
  const auto m = build_model(docs, Label::Positive);

  std::size_t total = 0;
  std::unordered_map<std::string, std::uint64_t> counts, dfs;
  for (const auto& d : docs) {
    total += d.size();
    for (const auto& t : d) ++counts[t];
    for (const auto& t : std::set<std::string>(d.begin(), d.end())) ++dfs[t];
  }
  CHECK(m.total_tokens() == total);
  CHECK(m.vocabulary_size() == counts.size());
  for (const auto& [t, c] : counts) {
    CHECK(m.count(t) == c);
    CHECK(m.doc_frequency(t) == dfs[t]);
  }
}

TEST_CASE("model invariants hold on random input") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto docs = random_docs(rng, 1 + trial % 17, 25, 20);
    const auto m = build_model(docs, Label::Positive);
    std::uint64_t sum = 0;
    for (const auto& [term, s] : m.terms()) {
      sum += s.count;
      CHECK(s.doc_frequency >= 1);
      CHECK(s.doc_frequency <= m.doc_count());
      CHECK(s.doc_frequency <= s.count);
    }
    CHECK(sum == m.total_tokens());
  }
}

TEST_CASE("merge_models") {
  const std::vector<TokenList> d1 = {{"a", "b", "a"}}, d2 = {{"b", "c"}}, both = {{"a", "b", "a"}, {"b", "c"}};
  const auto m1 = build_model(d1, Label::Positive);
  const auto m2 = build_model(d2, Label::Positive);
  const UnigramModel empty(Label::Positive);

  CHECK(merge_models(m1, empty) == m1);
  CHECK(merge_models(empty, m1) == m1);
  CHECK(merge_models(m1, m2) == build_model(both, Label::Positive));
  CHECK(merge_models(m1, m2) == merge_models(m2, m1));
  CHECK_THROWS_AS(merge_models(m1, UnigramModel(Label::Negative)), Error);
}

TEST_CASE("merge over any partition equals building on the whole") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const auto docs = random_docs(rng, 20, 15, 10);
    const auto whole = build_model_serial(docs, Label::Negative);
    std::uniform_int_distribution<std::size_t> cut(0, docs.size());
    auto a = cut(rng), b = cut(rng);
    if (a > b) std::swap(a, b);
    const std::span<const TokenList> all(docs);
    const auto p1 = build_model_serial(all.subspan(0, a), Label::Negative);
    const auto p2 = build_model_serial(all.subspan(a, b - a), Label::Negative);
    const auto p3 = build_model_serial(all.subspan(b), Label::Negative);
    CHECK(merge_models(merge_models(p1, p2), p3) == whole);
    CHECK(merge_models(p1, merge_models(p2, p3)) == whole);
    CHECK(merge_models(p3, merge_models(p1, p2)) == whole);
  }
}

TEST_CASE("term_probability is the relative frequency") {
  const std::vector<TokenList> docs = {{"a", "a", "b"}};
  const auto m = build_model(docs, Label::Positive);
  CHECK(term_probability(m, "a") == doctest::Approx(2.0 / 3.0));
  CHECK(term_probability(m, "z") == 0.0);
  CHECK_THROWS_AS(term_probability(UnigramModel(Label::Positive), "a"), Error);
}

TEST_CASE("smoothed_probability adds one to every count") {
  const std::vector<TokenList> docs = {{"a", "a", "b"}};
  const auto m = build_model(docs, Label::Positive);
  CHECK(smoothed_probability(m, "a", 3) == 0.5);
  CHECK(smoothed_probability(m, "z", 3) == doctest::Approx(1.0 / 6.0));
  CHECK(smoothed_probability(UnigramModel(Label::Positive), "a", 4) == 0.25);
  CHECK_THROWS_AS(smoothed_probability(m, "a", 0), Error);
}

TEST_CASE("probabilities normalize") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    auto docs = random_docs(rng, 1 + trial % 9, 30, 25);
    docs.push_back({"w0"});
    const auto m = build_model(docs, Label::Positive);

    double ml = 0.0;
    for (const auto& [term, s] : m.terms()) ml += term_probability(m, term);
    CHECK(std::abs(ml - 1.0) <= 1e-12);

    // Vocabulary: the model's terms plus some it never saw.
    std::set<std::string> vocab;
    for (const auto& [term, s] : m.terms()) vocab.insert(term);
    for (int i = 0; i < trial % 7; ++i) vocab.insert("unseen" + std::to_string(i));
    double smoothed = 0.0;
    for (const auto& term : vocab) {
      const double p = smoothed_probability(m, term, vocab.size());
      CHECK(p > 0.0);
      smoothed += p;
    }
    CHECK(std::abs(smoothed - 1.0) <= 1e-12);
  }
}

TEST_CASE("from_counts validates invariants") {
  UnigramModel::TermMap ok = {{"a", {3, 2}}, {"b", {1, 1}}};
  const auto m = UnigramModel::from_counts(Label::Positive, 2, ok);
  CHECK(m.total_tokens() == 4);
  CHECK_THROWS_AS(UnigramModel::from_counts(Label::Positive, 1, ok), Error);
  CHECK_THROWS_AS(UnigramModel::from_counts(Label::Positive, 5, {{"a", {1, 2}}}), Error);
  CHECK_THROWS_AS(UnigramModel::from_counts(Label::Positive, 5, {{"a", {0, 0}}}), Error);
}
