#include "pageclass/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "pageclass/error.hpp"

namespace pageclass {

using nlohmann::json;

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RawDocument parse_record(const std::string& line, std::size_t line_no,
                         const std::filesystem::path& base_dir) {
  json rec;
  try {
    rec = json::parse(line);
  } catch (const json::parse_error& e) {
    throw CorpusError(std::string("malformed record: ") + e.what(), line_no);
  }
  if (!rec.is_object()) throw CorpusError("record is not a JSON object", line_no);

  RawDocument doc;
  try {
    doc.id = rec.at("id").get<std::string>();

    if (auto it = rec.find("label"); it != rec.end() && !it->is_null()) {
      const auto text = it->get<std::string>();
      doc.label = parse_label(text);
      if (!doc.label) throw CorpusError("unknown label '" + text + "'", line_no);
    }

    if (auto it = rec.find("body"); it != rec.end() && !it->is_null()) {
      doc.body = it->get<std::string>();
    } else if (auto bf = rec.find("body_file"); bf != rec.end()) {
      const auto path = base_dir / bf->get<std::string>();
      try {
        doc.body = read_file(path);
      } catch (const CorpusError& e) {
        throw CorpusError(e.what(), line_no);
      }
    }

    if (auto it = rec.find("categories"); it != rec.end() && !it->is_null())
      doc.categories = it->get<std::vector<std::string>>();
    if (auto it = rec.find("lang"); it != rec.end() && !it->is_null())
      doc.lang = it->get<std::string>();
  } catch (const json::exception& e) {
    throw CorpusError(std::string("malformed record: ") + e.what(), line_no);
  }

  if (doc.id.empty()) throw CorpusError("empty id", line_no);
  if (doc.body.empty() && doc.categories.empty())
    throw CorpusError("record '" + doc.id + "' has neither body nor categories", line_no);
  return doc;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (!(prior_positive > 0.0 && prior_positive < 1.0))
    throw Error("positive prior must lie in (0,1), got " + std::to_string(prior_positive));
  if (feature_count && *feature_count == 0) throw Error("feature count must be at least 1");
  pipeline.validate();
}

std::vector<RawDocument> parse_corpus(std::istream& in, const std::filesystem::path& base_dir) {
  std::vector<RawDocument> docs;
  std::unordered_set<std::string> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto doc = parse_record(line, line_no, base_dir);
    if (!ids.insert(doc.id).second) throw CorpusError("duplicate id '" + doc.id + "'", line_no);
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<RawDocument> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot open corpus manifest " + path.string());
  return parse_corpus(in, path.parent_path());
}

void write_record(std::ostream& out, const RawDocument& doc) {
  nlohmann::ordered_json rec;
  rec["id"] = doc.id;
  if (doc.label)
    rec["label"] = label_name(*doc.label);
  else
    rec["label"] = nullptr;
  rec["body"] = doc.body;
  rec["categories"] = doc.categories;
  rec["lang"] = doc.lang;
  out << rec.dump() << '\n';
}

void write_corpus(std::ostream& out, std::span<const RawDocument> docs) {
  for (const auto& doc : docs) write_record(out, doc);
}

void save_corpus(const std::filesystem::path& path, std::span<const RawDocument> docs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  write_corpus(out, docs);
  if (!out) throw Error("write failed for " + path.string());
}

CorpusSplit split_corpus(std::span<const RawDocument> docs, ClassCounts train, ClassCounts test,
                         std::uint64_t seed) {
  std::vector<const RawDocument*> pos, neg;
  for (const auto& doc : docs) {
    if (!doc.label) throw Error("cannot split unlabeled document '" + doc.id + "'");
    (*doc.label == Label::Positive ? pos : neg).push_back(&doc);
  }

  auto check = [](const std::vector<const RawDocument*>& have, std::size_t need, Label label) {
    if (have.size() < need)
      throw Error("insufficient " + std::string(label_name(label)) + " documents: need " +
                  std::to_string(need) + ", have " + std::to_string(have.size()) + " (short by " +
                  std::to_string(need - have.size()) + ")");
  };
  check(pos, train.positive + test.positive, Label::Positive);
  check(neg, train.negative + test.negative, Label::Negative);

  std::mt19937_64 rng(seed);
  std::shuffle(pos.begin(), pos.end(), rng);
  std::shuffle(neg.begin(), neg.end(), rng);

  CorpusSplit split;
  split.train.reserve(train.positive + train.negative);
  split.test.reserve(test.positive + test.negative);
  auto take = [](const std::vector<const RawDocument*>& from, std::size_t begin, std::size_t n,
                 std::vector<RawDocument>& into) {
    for (std::size_t i = begin; i < begin + n; ++i) into.push_back(*from[i]);
  };
  take(pos, 0, train.positive, split.train);
  take(neg, 0, train.negative, split.train);
  take(pos, train.positive, test.positive, split.test);
  take(neg, train.negative, test.negative, split.test);
  return split;
}

CorpusSplit split_corpus(std::span<const RawDocument> docs, std::size_t train_per_class,
                         std::size_t test_per_class, std::uint64_t seed) {
  return split_corpus(docs, ClassCounts::both(train_per_class), ClassCounts::both(test_per_class), seed);
}

TokenList category_tokens(const RawDocument& doc, const PipelineConfig& pipeline) {
  PipelineConfig unstemmed = pipeline;
  unstemmed.stem = false;
  TokenList out;
  for (const auto& category : doc.categories) {
    auto tokens = normalize(tokenize(category), unstemmed);
    out.insert(out.end(), std::make_move_iterator(tokens.begin()), std::make_move_iterator(tokens.end()));
  }
  return out;
}

TokenList apply_view(const RawDocument& doc, View view, const PipelineConfig& pipeline) {
  TokenList tokens;
  switch (view) {
    case View::FullText:
    case View::FullTextPlusCategories:
      tokens = normalize(tokenize(doc.body), pipeline);
      break;
    case View::First50:
    case View::First50PlusCategories: {
      auto raw = tokenize(doc.body);
      if (raw.size() > kFirstWordsWindow) raw.resize(kFirstWordsWindow);
      tokens = normalize(std::move(raw), pipeline);
      break;
    }
    case View::CategoriesOnly:
      break;
  }
  if (view == View::FullTextPlusCategories || view == View::First50PlusCategories ||
      view == View::CategoriesOnly) {
    auto cats = category_tokens(doc, pipeline);
    tokens.insert(tokens.end(), std::make_move_iterator(cats.begin()), std::make_move_iterator(cats.end()));
  }
  return tokens;
}

std::vector<TokenList> apply_view_all(std::span<const RawDocument> docs, View view,
                                      const PipelineConfig& pipeline) {
  std::vector<TokenList> out(docs.size());
  const auto n = static_cast<std::ptrdiff_t>(docs.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = apply_view(docs[i], view, pipeline);
  return out;
}

std::size_t count_label(std::span<const RawDocument> docs, Label label) {
  return static_cast<std::size_t>(
      std::count_if(docs.begin(), docs.end(), [&](const RawDocument& d) { return d.label == label; }));
}

}  // namespace pageclass
