// Model file layout (UTF-8, '\n' line endings, tab-separated fields):
//
//   pageclass-model v1
//   priors <positive> <negative>          shortest round-trip decimals
//   smoothing on|off
//   view <view name>
//   ranking tf|df
//   feature_count all|<n>
//   pipeline <lowercase on|off> <stem on|off> <keep_numeric on|off>
//   stopwords <k>                          followed by k lines, one word each
//   features <k>                           followed by k lines, one term each
//   class positive <doc_count> <k>        followed by k "term count df" lines
//   class negative <doc_count> <k>        likewise
//   checksum <16 hex digits>               FNV-1a 64 of every preceding byte
//
// Terms never contain tabs or newlines because the tokenizer splits on them.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pageclass/classifier.hpp"
#include "pageclass/error.hpp"
#include "pageclass/format.hpp"

namespace pageclass {
namespace {

using Kind = ModelFileError::Kind;

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

const char* on_off(bool b) { return b ? "on" : "off"; }

void write_class(std::ostream& out, const UnigramModel& model) {
  out << "class\t" << label_name(model.label()) << '\t' << model.doc_count() << '\t' << model.vocabulary_size()
      << '\n';
  for (const auto& [term, stats] : model.terms())
    out << term << '\t' << stats.count << '\t' << stats.doc_frequency << '\n';
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

class Reader {
 public:
  explicit Reader(std::string text) : text_(std::move(text)) {}

  // Next line without its terminator; a missing final newline counts as
  // truncation because every record is newline-terminated.
  std::string line() {
    const auto nl = text_.find('\n', pos_);
    if (nl == std::string::npos) throw ModelFileError(Kind::Truncated, "model file is truncated");
    std::string out = text_.substr(pos_, nl - pos_);
    pos_ = nl + 1;
    ++line_no_;
    return out;
  }

  std::vector<std::string> record(std::string_view key, std::size_t fields) {
    auto parts = split_tabs(line());
    if (parts.size() != fields + 1 || parts[0] != key)
      malformed("expected '" + std::string(key) + "' record");
    parts.erase(parts.begin());
    return parts;
  }

  std::uint64_t number(const std::string& text) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
      malformed("bad integer '" + text + "'");
    return v;
  }

  bool flag(const std::string& text) {
    if (text == "on") return true;
    if (text == "off") return false;
    malformed("bad flag '" + text + "'");
  }

  std::size_t offset() const { return pos_; }
  const std::string& text() const { return text_; }

  [[noreturn]] void malformed(const std::string& what) const {
    throw ModelFileError(Kind::Malformed, "model file line " + std::to_string(line_no_) + ": " + what);
  }

 private:
  std::string text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

UnigramModel read_class(Reader& r, Label label) {
  auto head = r.record("class", 3);
  if (parse_label(head[0]) != label) r.malformed("expected the " + std::string(label_name(label)) + " class");
  const auto doc_count = r.number(head[1]);
  const auto n = r.number(head[2]);
  UnigramModel::TermMap terms;
  for (std::uint64_t i = 0; i < n; ++i) {
    auto f = split_tabs(r.line());
    if (f.size() != 3 || f[0].empty()) r.malformed("bad term record");
    if (!terms.emplace(f[0], TermStats{r.number(f[1]), r.number(f[2])}).second)
      r.malformed("duplicate term '" + f[0] + "'");
  }
  try {
    return UnigramModel::from_counts(label, doc_count, std::move(terms));
  } catch (const ModelFileError&) {
    throw;
  } catch (const Error& e) {
    r.malformed(e.what());
  }
}

}  // namespace

void write_model(std::ostream& os, const NbcModel& model) {
  std::ostringstream out;
  out << kModelMagic << " v" << kModelVersion << '\n';
  out << "priors\t" << format_exact(model.priors.positive) << '\t' << format_exact(model.priors.negative) << '\n';
  out << "smoothing\t" << on_off(model.smoothing) << '\n';
  out << "view\t" << view_name(model.view) << '\n';
  out << "ranking\t" << ranking_name(model.ranking) << '\n';
  out << "feature_count\t" << (model.feature_count ? std::to_string(*model.feature_count) : "all") << '\n';
  out << "pipeline\t" << on_off(model.pipeline.lowercase) << '\t' << on_off(model.pipeline.stem) << '\t'
      << on_off(model.pipeline.keep_numeric) << '\n';
  out << "stopwords\t" << model.pipeline.stopwords.size() << '\n';
  for (const auto& w : model.pipeline.stopwords) out << w << '\n';
  out << "features\t" << model.features.size() << '\n';
  for (const auto& f : model.features) out << f << '\n';
  write_class(out, model.positive);
  write_class(out, model.negative);
  const auto body = out.str();
  os << body << "checksum\t" << hex64(fnv1a(body)) << '\n';
}

NbcModel read_model(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  Reader r(buf.str());
  if (r.text().empty()) throw ModelFileError(Kind::Truncated, "model file is empty");

  const auto header = r.line();
  const std::string expected = std::string(kModelMagic) + " v" + std::to_string(kModelVersion);
  if (header != expected) {
    if (header.starts_with(std::string(kModelMagic) + " v"))
      throw ModelFileError(Kind::VersionMismatch,
                           "unsupported model version '" + header + "', expected '" + expected + "'");
    throw ModelFileError(Kind::Malformed, "not a pageclass model file");
  }

  // Integrity first, so a damaged body reports as such rather than as a
  // parse failure somewhere in the middle.
  const auto& text = r.text();
  const auto last = text.size() >= 2 ? text.rfind('\n', text.size() - 2) : std::string::npos;
  if (text.back() != '\n' || last == std::string::npos || text.compare(last + 1, 9, "checksum\t") != 0)
    throw ModelFileError(Kind::Truncated, "model file is truncated (no checksum record)");
  const auto body_end = last + 1;
  const auto stored = text.substr(body_end + 9, text.size() - body_end - 10);
  if (stored != hex64(fnv1a(std::string_view(text).substr(0, body_end))))
    throw ModelFileError(Kind::Checksum, "model file checksum mismatch");

  NbcModel model;
  auto priors = r.record("priors", 2);
  auto pp = parse_exact(priors[0]), pn = parse_exact(priors[1]);
  if (!pp || !pn) r.malformed("bad priors");
  model.priors = {*pp, *pn};
  model.smoothing = r.flag(r.record("smoothing", 1)[0]);
  auto view = parse_view(r.record("view", 1)[0]);
  if (!view) r.malformed("unknown view");
  model.view = *view;
  auto ranking = parse_ranking(r.record("ranking", 1)[0]);
  if (!ranking) r.malformed("unknown ranking mode");
  model.ranking = *ranking;
  auto fc = r.record("feature_count", 1)[0];
  if (fc != "all") model.feature_count = r.number(fc);
  auto pipe = r.record("pipeline", 3);
  model.pipeline.lowercase = r.flag(pipe[0]);
  model.pipeline.stem = r.flag(pipe[1]);
  model.pipeline.keep_numeric = r.flag(pipe[2]);
  model.pipeline.stopwords.clear();
  const auto n_stop = r.number(r.record("stopwords", 1)[0]);
  for (std::uint64_t i = 0; i < n_stop; ++i) model.pipeline.stopwords.insert(r.line());
  const auto n_feat = r.number(r.record("features", 1)[0]);
  for (std::uint64_t i = 0; i < n_feat; ++i) model.features.insert(r.line());
  model.positive = read_class(r, Label::Positive);
  model.negative = read_class(r, Label::Negative);

  if (r.offset() != body_end) r.malformed("unexpected data before checksum");
  return model;
}

void save_model(const NbcModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ModelFileError(Kind::Io, "cannot write model file " + path.string());
  write_model(out, model);
  if (!out) throw ModelFileError(Kind::Io, "write failed for " + path.string());
}

NbcModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelFileError(Kind::Io, "cannot open model file " + path.string());
  return read_model(in);
}

}  // namespace pageclass
