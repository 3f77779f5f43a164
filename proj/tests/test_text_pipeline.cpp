#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "pageclass/error.hpp"
#include "pageclass/text_pipeline.hpp"

using namespace pageclass;

TEST_CASE("tokenize splits on non-alphanumeric runs") {
  CHECK(tokenize("iPod, released 2008!") == TokenList{"iPod", "released", "2008"});
  CHECK(tokenize("").empty());
  CHECK(tokenize("e-book reader") == TokenList{"e", "book", "reader"});
  CHECK(tokenize("  ...  ").empty());
  CHECK(tokenize("a\tb\nc") == TokenList{"a", "b", "c"});
}

TEST_CASE("tokenize keeps non-ASCII letters and digits") {
  CHECK(tokenize("Citroën C4—Zürich") == TokenList{"Citroën", "C4", "Zürich"});
  CHECK(tokenize("東京 2020") == TokenList{"東京", "2020"});
  // Invalid UTF-8 bytes separate tokens instead of being copied.
  CHECK(tokenize(std::string("ab\xff" "cd")) == TokenList{"ab", "cd"});
}

TEST_CASE("to_lower folds ASCII and Unicode letters") {
  CHECK(to_lower("ÉPISODES") == "épisodes");
  CHECK(to_lower("iPod") == "ipod");
  CHECK(to_lower("2008") == "2008");
}

TEST_CASE("normalize applies the stages in order") {
  PipelineConfig config = PipelineConfig::identity();
  config.lowercase = true;
  config.stopwords = {"the"};
  config.stem = true;
  CHECK(normalize({"The", "Episodes"}, config) == TokenList{"episod"});

  auto keep = PipelineConfig::defaults();
  CHECK(normalize({"2008"}, keep) == TokenList{"2008"});
  keep.keep_numeric = false;
  CHECK(normalize({"2008", "iPod"}, keep) == TokenList{"ipod"});

  auto plain = PipelineConfig::identity();
  plain.lowercase = true;
  CHECK(normalize({"x"}, plain) == TokenList{"x"});
}

TEST_CASE("stopword matching happens after lowercasing") {
  auto config = PipelineConfig::defaults();
  CHECK(normalize({"THE", "And", "Games"}, config) == TokenList{"game"});
}

TEST_CASE("pipeline config validation rejects uppercase stopwords") {
  auto config = PipelineConfig::defaults();
  config.stopwords.insert("The");
  CHECK_THROWS_AS(config.validate(), Error);
  config.lowercase = false;
  CHECK_NOTHROW(config.validate());
}

TEST_CASE("bundled stopword list") {
  const auto& words = default_stopwords();
  CHECK(words.size() >= 150);
  CHECK(words.size() <= 200);
  CHECK(words.contains("the"));
  CHECK_FALSE(words.contains("product"));
  CHECK_NOTHROW(PipelineConfig::defaults().validate());
}

TEST_CASE("stopword file format") {
  const auto words = parse_stopwords("# comment\nfoo\n\n  bar \r\n#baz\n");
  CHECK(words == StopwordSet{"bar", "foo"});
  CHECK_THROWS_AS(load_stopwords("/nonexistent/stopwords.txt"), Error);
}

TEST_CASE("porter stemmer matches the reference table") {
  std::ifstream in(PAGECLASS_TEST_DATA "/porter_vocab.tsv");
  REQUIRE(in);
  std::string line;
  std::size_t checked = 0, mismatched = 0;
  while (std::getline(in, line)) {
    const auto tab = line.find('\t');
    REQUIRE(tab != std::string::npos);
    const auto word = line.substr(0, tab), expected = line.substr(tab + 1);
    const auto got = porter_stem(word);
    if (got != expected) {
      ++mismatched;
      MESSAGE(word << ": expected " << expected << ", got " << got);
    }
    ++checked;
  }
  CHECK(checked > 3000);
  CHECK(mismatched == 0);
}

TEST_CASE("porter stemmer on suffix-rule examples") {
  CHECK(porter_stem("episodes") == "episod");
  CHECK(porter_stem("released") == "releas");
  CHECK(porter_stem("olympics") == "olymp");
  CHECK(porter_stem("glutamate") == "glutam");
  CHECK(porter_stem("caresses") == "caress");
  CHECK(porter_stem("hopping") == "hop");
  CHECK(porter_stem("relational") == "relat");
  // Non a-z input passes through.
  CHECK(porter_stem("2008") == "2008");
  CHECK(porter_stem("Games") == "Games");
  CHECK(porter_stem("") == "");
}

namespace {

TokenList random_tokens(std::mt19937& rng) {
  static const TokenList pool = {"The", "games", "RELEASED", "2008", "of", "Video", "a", "Zürich", "x", "iPod"};
  std::uniform_int_distribution<std::size_t> len(0, 12), pick(0, pool.size() - 1);
  TokenList out(len(rng));
  for (auto& t : out) t = pool[pick(rng)];
  return out;
}

}  // namespace

TEST_CASE("normalize properties") {
  std::mt19937 rng(7);
  auto stemless = PipelineConfig::defaults();
  stemless.stem = false;
  auto lower_stem = PipelineConfig::defaults();

  auto identity = PipelineConfig::identity();
  for (int i = 0; i < 300; ++i) {
    const auto tokens = random_tokens(rng);
    const auto once = normalize(tokens, stemless);
    CHECK(normalize(once, stemless) == once);
    CHECK(once.size() <= tokens.size());
    CHECK(normalize(tokens, identity) == tokens);
    for (const auto& t : normalize(tokens, lower_stem)) CHECK(to_lower(t) == t);
  }
}
