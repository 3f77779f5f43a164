#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "pageclass/error.hpp"
#include "pageclass/feature_ranking.hpp"

using namespace pageclass;

namespace {

std::vector<std::string> terms_of(const std::vector<FeatureScore>& scores) {
  std::vector<std::string> out;
  for (const auto& s : scores) out.push_back(s.term);
  return out;
}

// Positive class: u fills one document 100 times, v appears in nine documents
// (ten occurrences). Eight negative documents carry u so that both terms have
// collection df 9.
struct SkewedFixture {
  std::vector<TokenList> pos, neg;
  SkewedFixture() {
    TokenList heavy(100, "u");
    heavy.push_back("filler");
    pos.push_back(heavy);
    for (int i = 0; i < 9; ++i) pos.push_back({"v", "filler"});
    pos[1].push_back("v");
    for (int i = 0; i < 8; ++i) neg.push_back({"u", "other"});
    neg.push_back({"other"});
    neg.push_back({"other"});
  }
};

}  // namespace

TEST_CASE("tf is the share of the document") {
  const TokenList doc = {"a", "a", "b"};
  CHECK(tf("a", doc) == doctest::Approx(2.0 / 3.0));
  CHECK(tf("z", doc) == 0.0);
  CHECK(tf("a", TokenList{"a"}) == 1.0);
  CHECK_THROWS_AS(tf("a", TokenList{}), Error);
}

TEST_CASE("idf uses the natural log over the whole collection") {
  CollectionStats stats;
  stats.total_docs = 438;
  stats.doc_frequency = {{"everywhere", 438}, {"rare", 2}};
  CHECK(idf("everywhere", stats) == 0.0);
  CHECK(idf("rare", stats) == doctest::Approx(std::log(219.0)).epsilon(1e-14));
  CHECK_THROWS_AS(idf("missing", stats), Error);

  // |D| = e * df gives exactly one only up to rounding of e.
  CollectionStats e_stats;
  e_stats.total_docs = 2718281828;
  e_stats.doc_frequency = {{"t", 1000000000}};
  CHECK(std::abs(idf("t", e_stats) - 1.0) < 1e-9);
}

TEST_CASE("collection stats from models equal stats from documents") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> len(1, 8), word(0, 11);
  std::vector<TokenList> pos(7), neg(5), all;
  for (auto* group : {&pos, &neg})
    for (auto& d : *group) {
      for (int i = len(rng); i > 0; --i) d.push_back("t" + std::to_string(word(rng)));
      all.push_back(d);
    }
  const auto from_models =
      CollectionStats::from_models(build_model(pos, Label::Positive), build_model(neg, Label::Negative));
  CHECK(from_models == CollectionStats::from_documents(all));
  for (const auto& [term, df] : from_models.doc_frequency) CHECK(df <= from_models.total_docs);
}

TEST_CASE("rank_features: single-term classes rank their own term first") {
  const std::vector<TokenList> pos = {{"a", "a", "a"}}, neg = {{"b"}};
  const auto mp = build_model(pos, Label::Positive), mn = build_model(neg, Label::Negative);
  const auto stats = CollectionStats::from_models(mp, mn);
  CHECK(rank_features(mp, stats, RankingNumerator::DocumentFrequency, std::nullopt).front().term == "a");
  CHECK(rank_features(mn, stats, RankingNumerator::DocumentFrequency, std::nullopt).front().term == "b");
}

TEST_CASE("rank_features: document frequency favours spread-out terms") {
  const SkewedFixture fx;
  const auto mp = build_model(fx.pos, Label::Positive), mn = build_model(fx.neg, Label::Negative);
  const auto stats = CollectionStats::from_models(mp, mn);
  REQUIRE(stats.df("u") == 9);
  REQUIRE(stats.df("v") == 9);

  const auto df_rank = terms_of(rank_features(mp, stats, RankingNumerator::DocumentFrequency, std::nullopt));
  const auto tf_rank = terms_of(rank_features(mp, stats, RankingNumerator::TermFrequency, std::nullopt));
  auto pos_of = [](const std::vector<std::string>& r, const std::string& t) {
    return std::find(r.begin(), r.end(), t) - r.begin();
  };
  CHECK(pos_of(df_rank, "v") < pos_of(df_rank, "u"));
  CHECK(pos_of(tf_rank, "u") < pos_of(tf_rank, "v"));
}

TEST_CASE("rank_features: score, ordering and truncation") {
  const std::vector<TokenList> pos = {{"a", "b", "c", "d", "e"}, {"a", "b"}, {"a"}};
  const std::vector<TokenList> neg = {{"z"}, {"y"}};
  const auto mp = build_model(pos, Label::Positive), mn = build_model(neg, Label::Negative);
  const auto stats = CollectionStats::from_models(mp, mn);

  const auto all = rank_features(mp, stats, RankingNumerator::TermFrequency, std::nullopt);
  REQUIRE(all.size() == 5);
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].score == static_cast<double>(all[i].numerator) * all[i].idf);
    CHECK(all[i].numerator >= 1);
    CHECK(all[i].label == Label::Positive);
    if (i > 0) {
      CHECK(all[i - 1].score >= all[i].score);
      if (all[i - 1].score == all[i].score) CHECK(all[i - 1].term < all[i].term);
    }
  }
  // |D| = 5: b 2 ln 2.5 = 1.833, c d e ln 5 = 1.609 (tied), a 3 ln(5/3) = 1.532.
  CHECK(terms_of(all) == std::vector<std::string>{"b", "c", "d", "e", "a"});
  CHECK(rank_features(mp, stats, RankingNumerator::TermFrequency, 2).size() == 2);
  CHECK(rank_features(mp, stats, RankingNumerator::TermFrequency, 50).size() == 5);
}

TEST_CASE("ranking follows the numerator when collection df is uniform") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    // One positive and one negative document per term: collection df is 2 everywhere.
    std::vector<TokenList> pos, neg;
    std::uniform_int_distribution<int> reps(1, 6);
    for (int t = 0; t < 8; ++t) {
      const std::string term = "t" + std::to_string(t);
      TokenList doc(static_cast<std::size_t>(reps(rng)), term);
      pos.push_back(doc);
      neg.push_back({term});
    }
    const auto mp = build_model(pos, Label::Positive), mn = build_model(neg, Label::Negative);
    const auto stats = CollectionStats::from_models(mp, mn);
    const auto ranked = rank_features(mp, stats, RankingNumerator::TermFrequency, std::nullopt);
    for (std::size_t i = 1; i < ranked.size(); ++i) {
      const auto a = mp.count(ranked[i - 1].term), b = mp.count(ranked[i].term);
      CHECK(a >= b);
      if (a == b) CHECK(ranked[i - 1].term < ranked[i].term);
    }
  }
}

TEST_CASE("scaling every score keeps the ranking") {
  const SkewedFixture fx;
  const auto mp = build_model(fx.pos, Label::Positive), mn = build_model(fx.neg, Label::Negative);
  auto stats = CollectionStats::from_models(mp, mn);
  const auto base = terms_of(rank_features(mp, stats, RankingNumerator::DocumentFrequency, std::nullopt));
  // Squaring |D|/df doubles every idf, i.e. multiplies all scores by 2.
  CollectionStats scaled;
  scaled.total_docs = stats.total_docs * stats.total_docs;
  for (const auto& [t, df] : stats.doc_frequency) scaled.doc_frequency[t] = df * df;
  CHECK(terms_of(rank_features(mp, scaled, RankingNumerator::DocumentFrequency, std::nullopt)) == base);
}

TEST_CASE("idf is zero exactly for terms in every document") {
  const std::vector<TokenList> pos = {{"common", "p"}, {"common"}}, neg = {{"common", "n"}};
  const auto stats =
      CollectionStats::from_models(build_model(pos, Label::Positive), build_model(neg, Label::Negative));
  for (const auto& [term, df] : stats.doc_frequency) CHECK((idf(term, stats) == 0.0) == (df == stats.total_docs));
}

TEST_CASE("informative words report") {
  const std::vector<TokenList> pos = {{"releas", "episod", "releas"}};
  const std::vector<TokenList> neg = {{"river", "town", "river", "releas"}};
  const auto mp = build_model(pos, Label::Positive), mn = build_model(neg, Label::Negative);
  const auto stats = CollectionStats::from_models(mp, mn);

  const auto report = informative_words_report(mp, mn, stats, RankingNumerator::TermFrequency, 10);
  REQUIRE(report.positive.size() == 2);
  REQUIRE(report.negative.size() == 3);
  // Hand counts: episod tf 1 df 1 coll-df 1 score ln 2; releas tf 2 df 1 coll-df 2 score 0.
  CHECK(report.positive[0].term == "episod");
  CHECK(report.positive[0].term_frequency == 1);
  CHECK(report.positive[0].doc_frequency == 1);
  CHECK(report.positive[0].collection_doc_frequency == 1);
  CHECK(report.positive[1].term == "releas");
  CHECK(report.positive[1].term_frequency == 2);
  CHECK(report.positive[1].collection_doc_frequency == 2);
  CHECK(report.negative[0].term == "river");
  CHECK(report.negative[0].term_frequency == 2);

  std::ostringstream out;
  write_report_tsv(out, report);
  const auto text = out.str();
  CHECK(text.starts_with("class\tword\tterm_frequency\tdocument_frequency\tcollection_document_frequency\tscore\n"
                         "positive\tepisod\t1\t1\t1\t0.693\n"));
  CHECK(text.find("\n\nclass\tword") != std::string::npos);
}

TEST_CASE("informative words report with disjoint vocabularies") {
  const std::vector<TokenList> pos = {{"a", "b"}, {"c"}}, neg = {{"x"}, {"y", "z"}};
  const auto mp = build_model(pos, Label::Positive), mn = build_model(neg, Label::Negative);
  const auto report = informative_words_report(mp, mn, CollectionStats::from_models(mp, mn),
                                               RankingNumerator::DocumentFrequency, 100);
  CHECK(report.positive.size() == 3);
  CHECK(report.negative.size() == 3);
  for (const auto& p : report.positive)
    for (const auto& n : report.negative) CHECK(p.term != n.term);
}
