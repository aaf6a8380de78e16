#include "ddm/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "ddm/error.hpp"

namespace ddm::io {

namespace {

struct Line {
  std::size_t number;
  std::size_t column;  // 1-based column of text.front()
  std::string_view text;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s, std::size_t* leading = nullptr) {
  std::size_t a = 0;
  while (a < s.size() && is_space(s[a])) ++a;
  std::size_t b = s.size();
  while (b > a && is_space(s[b - 1])) --b;
  if (leading != nullptr) *leading = a;
  return s.substr(a, b - a);
}

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    auto end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t lead = 0;
    std::string_view body = trim(raw, &lead);
    if (!body.empty()) out.push_back({number, lead + 1, body});
    if (end == std::string_view::npos) break;
  }
  return out;
}

[[noreturn]] void fail(const std::string& source, const Line& line, std::size_t offset, const std::string& what) {
  throw ParseError(source, line.number, line.column + offset, what);
}

struct Token {
  std::string text;
  std::size_t offset;  // within the line text
};

// Comma-separated labels of `body`, which starts at `base` within the line.
std::vector<Token> split_labels(const std::string& source, const Line& line, std::string_view body,
                                std::size_t base) {
  std::vector<Token> out;
  std::size_t start = 0;
  while (true) {
    auto comma = body.find(',', start);
    std::string_view piece = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    std::size_t lead = 0;
    std::string_view label = trim(piece, &lead);
    if (label.empty()) fail(source, line, base + start, "empty label");
    std::string text(label);
    if (!is_valid_label(text)) fail(source, line, base + start + lead, "invalid label '" + text + "'");
    out.push_back({std::move(text), base + start + lead});
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

bool all_integers(const std::vector<std::string>& labels) {
  return std::all_of(labels.begin(), labels.end(), [](const std::string& l) {
    return !l.empty() && l.size() < 18 &&
           std::all_of(l.begin(), l.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  });
}

VertexTable inferred_table(const std::vector<std::string>& first_use) {
  std::vector<std::string> labels = first_use;
  if (all_integers(labels)) {
    std::stable_sort(labels.begin(), labels.end(),
                     [](const std::string& a, const std::string& b) { return std::stoll(a) < std::stoll(b); });
  }
  return VertexTable(std::move(labels));
}

// "vertices: a, b, c" -> table; nullopt if the line is not a vertices line.
std::optional<VertexTable> vertices_line(const std::string& source, const Line& line) {
  constexpr std::string_view kKey = "vertices:";
  if (line.text.substr(0, kKey.size()) != kKey) return std::nullopt;
  std::string_view rest = line.text.substr(kKey.size());
  std::vector<std::string> labels;
  if (!trim(rest).empty()) {
    for (auto& t : split_labels(source, line, rest, kKey.size())) labels.push_back(std::move(t.text));
  }
  try {
    return VertexTable(std::move(labels));
  } catch (const Error& e) {
    fail(source, line, kKey.size(), e.what());
  }
}

struct RawEntry {
  Line line;
  std::vector<Token> labels;
};

std::vector<Vertex> resolve(const std::string& source, const RawEntry& entry, const VertexTable& table) {
  std::vector<Vertex> out;
  for (const auto& t : entry.labels) {
    auto v = table.find(t.text);
    if (!v) fail(source, entry.line, t.offset, "unknown vertex '" + t.text + "'");
    out.push_back(*v);
  }
  return out;
}

BasisWord resolve_word(const std::string& source, const RawEntry& entry, const VertexTable& table) {
  auto letters = resolve(source, entry, table);
  try {
    return BasisWord::validate(letters, table.size());
  } catch (const Error& e) {
    fail(source, entry.line, 0, e.what());
  }
}

// Entries of an optional-vertices file (ideal, complex) with table inference.
std::pair<VertexTable, std::vector<RawEntry>> labelled_entries(const std::string& source, std::string_view text) {
  auto lines = significant_lines(text);
  std::optional<VertexTable> table;
  std::size_t first = 0;
  if (!lines.empty()) {
    table = vertices_line(source, lines[0]);
    if (table) first = 1;
  }
  std::vector<RawEntry> entries;
  std::vector<std::string> first_use;
  for (std::size_t k = first; k < lines.size(); ++k) {
    RawEntry entry{lines[k], split_labels(source, lines[k], lines[k].text, 0)};
    for (const auto& t : entry.labels) {
      if (std::find(first_use.begin(), first_use.end(), t.text) == first_use.end()) first_use.push_back(t.text);
    }
    entries.push_back(std::move(entry));
  }
  return {table ? std::move(*table) : inferred_table(first_use), std::move(entries)};
}

std::string joined(const VertexTable& table, std::span<const Vertex> letters) {
  std::string out;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k > 0) out += ',';
    out += table.label(letters[k]);
  }
  return out;
}

// "a <= b" with both labels resolved through `table`.
std::pair<Vertex, Vertex> relation_pair(const std::string& source, const Line& line, const VertexTable& table) {
  auto le = line.text.find("<=");
  if (le == std::string_view::npos) {
    std::size_t at = line.text.find_first_not_of(" \t");
    at = line.text.find_first_of(" \t", at);
    at = at == std::string_view::npos ? line.text.size() : line.text.find_first_not_of(" \t", at);
    fail(source, line, at == std::string_view::npos ? line.text.size() : at, "expected 'i <= j'");
  }
  std::size_t lead_a = 0;
  std::size_t lead_b = 0;
  std::string a(trim(line.text.substr(0, le), &lead_a));
  std::string b(trim(line.text.substr(le + 2), &lead_b));
  auto va = table.find(a);
  if (!va) fail(source, line, lead_a, "unknown vertex '" + a + "'");
  auto vb = table.find(b);
  if (!vb) fail(source, line, le + 2 + lead_b, "unknown vertex '" + b + "'");
  return {*va, *vb};
}

class FormParser {
 public:
  FormParser(std::string_view text, const VertexTable& table, const std::string& source)
      : text_(text), table_(table), source_(source), line_{1, 1, text} {}

  GradedForm parse() {
    skip();
    if (trim(text_.substr(pos_)) == "0") return {};
    GradedForm out;
    bool first = true;
    while (true) {
      skip();
      if (pos_ == text_.size()) {
        if (first) error("empty form");
        break;
      }
      Coefficient sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip();
      } else if (!first) {
        error("expected '+' or '-'");
      }
      Coefficient c = coefficient();
      BasisWord w = word();
      out.add_term(w, sign * c);
      first = false;
    }
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }
  [[noreturn]] void error(const std::string& what) const { fail(source_, line_, pos_, what); }
  void expect(char c) {
    skip();
    if (peek() != c) error(std::string("expected '") + c + "'");
    ++pos_;
  }

  Coefficient coefficient() {
    if (text_.substr(pos_, 2) == "e[") return 1;
    std::size_t start = pos_;
    std::string_view body;
    if (peek() == '(') {
      auto close = text_.find(')', pos_);
      if (close == std::string_view::npos) error("unclosed '('");
      body = text_.substr(pos_, close + 1 - pos_);
      pos_ = close + 1;
    } else {
      auto star = text_.find('*', pos_);
      if (star == std::string_view::npos) error("expected 'e[' or a coefficient followed by '*'");
      body = trim(text_.substr(pos_, star - pos_));
      pos_ = star;
    }
    expect('*');
    skip();
    try {
      return Coefficient::parse(body);
    } catch (const Error& e) {
      fail(source_, line_, start, e.what());
    }
  }

  BasisWord word() {
    std::size_t start = pos_;
    if (text_.substr(pos_, 2) != "e[") error("expected 'e['");
    pos_ += 2;
    auto close = text_.find(']', pos_);
    if (close == std::string_view::npos) error("unclosed 'e['");
    RawEntry entry{line_, split_labels(source_, line_, text_.substr(pos_, close - pos_), pos_)};
    pos_ = close + 1;
    auto letters = resolve(source_, entry, table_);
    try {
      return BasisWord::validate(letters, table_.size());
    } catch (const Error& e) {
      fail(source_, line_, start, e.what());
    }
  }

  std::string_view text_;
  const VertexTable& table_;
  const std::string& source_;
  Line line_;
  std::size_t pos_ = 0;
};

}  // namespace

GradedForm parse_form(std::string_view text, const VertexTable& vertices, const std::string& source) {
  return FormParser(text, vertices, source).parse();
}

std::string format_form(const GradedForm& form, const VertexTable& vertices) {
  if (form.is_zero()) return "0";
  std::string out;
  for (const auto& [word, c] : form.terms()) {
    const bool mixed = sgn(c.real()) != 0 && sgn(c.imag()) != 0;
    bool negative = !mixed && (sgn(c.real()) < 0 || sgn(c.imag()) < 0);
    Coefficient magnitude = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (!(magnitude == Coefficient(1))) {
      out += mixed ? "(" + magnitude.to_string() + ")" : magnitude.to_string();
      out += '*';
    }
    out += "e[" + joined(vertices, word.letters()) + "]";
  }
  return out;
}

Relation parse_relation(std::string_view text, const std::string& source) {
  auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(source, 1, 1, "empty relation file");
  const Line& head = lines[0];
  if (head.text.size() < 2 || head.text[0] != 'n' || !is_space(head.text[1])) {
    fail(source, head, 0, "expected 'n <count>'");
  }
  std::size_t lead = 0;
  std::string count_text(trim(head.text.substr(1), &lead));
  if (count_text.empty() || !all_integers({count_text})) fail(source, head, 1 + lead, "bad vertex count");
  constexpr std::size_t kMaxRelationSize = 4096;
  if (count_text.size() > 4 || std::stoull(count_text) > kMaxRelationSize) {
    fail(source, head, 1 + lead, "vertex count above " + std::to_string(kMaxRelationSize));
  }
  const std::size_t n = std::stoull(count_text);
  VertexTable table = VertexTable::numbered(n);
  Relation rel(n);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    auto [i, j] = relation_pair(source, lines[k], table);
    rel.relate(i, j);
  }
  return rel;
}

std::string format_relation(const Relation& relation) {
  std::ostringstream out;
  out << "n " << relation.size() << "\n";
  for (auto [i, j] : relation.pairs()) out << (i + 1) << " <= " << (j + 1) << "\n";
  return out.str();
}

ManifoldFile parse_manifold(std::string_view text, const std::string& source) {
  auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(source, 1, 1, "empty manifold file");
  if (lines[0].text.size() >= 2 && lines[0].text[0] == 'n' && is_space(lines[0].text[1])) {
    Relation rel = parse_relation(text, source);
    return {VertexTable::numbered(rel.size()), std::move(rel)};
  }
  auto table = vertices_line(source, lines[0]);
  if (!table) fail(source, lines[0], 0, "expected 'vertices:' or 'n <count>'");
  if (lines.size() < 2) throw ParseError(source, lines[0].number + 1, 1, "expected 'relation:', 'words:' or 'ideal:'");
  const Line& header = lines[1];
  const std::string_view kind = header.text;
  if (kind == "relation:") {
    Relation rel(table->size());
    for (std::size_t k = 2; k < lines.size(); ++k) {
      auto [i, j] = relation_pair(source, lines[k], *table);
      rel.relate(i, j);
    }
    return {std::move(*table), std::move(rel)};
  }
  if (kind != "words:" && kind != "ideal:") fail(source, header, 0, "expected 'relation:', 'words:' or 'ideal:'");
  std::vector<BasisWord> words;
  for (std::size_t k = 2; k < lines.size(); ++k) {
    RawEntry entry{lines[k], split_labels(source, lines[k], lines[k].text, 0)};
    words.push_back(resolve_word(source, entry, *table));
    if (kind == "ideal:" && words.back().grade() == 0) fail(source, lines[k], 0, "ideal generator of grade 0");
  }
  if (kind == "words:") {
    if (words.empty()) fail(source, header, 0, "words: block is empty");
    return {std::move(*table), std::move(words)};
  }
  std::size_t n = table->size();
  return {std::move(*table), BasicIdeal::normalize_generators(n, std::move(words))};
}

std::string format_manifold(const ManifoldFile& file) {
  std::ostringstream out;
  out << "vertices: ";
  for (std::size_t v = 0; v < file.vertices.size(); ++v) out << (v ? "," : "") << file.vertices.labels()[v];
  out << "\n";
  if (const auto* rel = std::get_if<Relation>(&file.body)) {
    out << "relation:\n";
    for (auto [i, j] : rel->pairs()) out << file.vertices.label(i) << " <= " << file.vertices.label(j) << "\n";
  } else if (const auto* words = std::get_if<std::vector<BasisWord>>(&file.body)) {
    out << "words:\n";
    for (const auto& w : *words) out << joined(file.vertices, w.letters()) << "\n";
  } else {
    out << "ideal:\n";
    for (const auto& g : std::get<BasicIdeal>(file.body).generators()) {
      out << joined(file.vertices, g.letters()) << "\n";
    }
  }
  return out.str();
}

std::string format_manifold(const DiscreteManifold& m) {
  if (m.is_explicit()) return format_manifold(ManifoldFile{m.vertices(), m.words()});
  return format_manifold(ManifoldFile{m.vertices(), m.ideal()});
}

DiscreteManifold build_manifold(const ManifoldFile& file) {
  if (const auto* rel = std::get_if<Relation>(&file.body)) return from_relation_network(*rel, file.vertices);
  if (const auto* words = std::get_if<std::vector<BasisWord>>(&file.body)) {
    return DiscreteManifold::explicit_family(file.vertices, *words);
  }
  return DiscreteManifold::ideal_complement(file.vertices, std::get<BasicIdeal>(file.body));
}

IdealFile parse_ideal(std::string_view text, const std::string& source) {
  auto [table, entries] = labelled_entries(source, text);
  IdealFile out{std::move(table), {}};
  for (const auto& entry : entries) {
    out.words.push_back(resolve_word(source, entry, out.vertices));
    if (out.words.back().grade() == 0) fail(source, entry.line, 0, "ideal generator of grade 0");
  }
  return out;
}

ComplexFile parse_complex(std::string_view text, const std::string& source) {
  auto [table, entries] = labelled_entries(source, text);
  ComplexFile out{std::move(table), {}};
  for (const auto& entry : entries) {
    Simplex s = resolve(source, entry, out.vertices);
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) fail(source, entry.line, 0, "simplex repeats a vertex");
    out.simplices.push_back(std::move(s));
  }
  return out;
}

std::string format_complex(const SimplicialComplex& complex) {
  std::ostringstream out;
  out << "vertices: ";
  for (std::size_t v = 0; v < complex.vertex_count(); ++v) out << (v ? "," : "") << complex.vertices().labels()[v];
  out << "\n";
  for (const auto& s : complex.simplices()) out << joined(complex.vertices(), s) << "\n";
  return out.str();
}

Covering parse_covering(std::string_view text, const std::string& source) {
  auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(source, 1, 1, "empty covering file");
  constexpr std::string_view kKey = "sets:";
  const Line& head = lines[0];
  if (head.text.substr(0, kKey.size()) != kKey) fail(source, head, 0, "expected 'sets:'");
  Covering out;
  std::map<std::string, std::size_t> index;
  for (auto& t : split_labels(source, head, head.text.substr(kKey.size()), kKey.size())) {
    if (!index.emplace(t.text, out.cover_labels.size()).second) fail(source, head, t.offset, "duplicate set '" + t.text + "'");
    out.cover_labels.push_back(std::move(t.text));
  }
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    auto colon = line.text.find(':');
    if (colon == std::string_view::npos) fail(source, line, 0, "expected 'label: set,set,...'");
    std::string point(trim(line.text.substr(0, colon)));
    if (point.empty()) fail(source, line, 0, "empty point label");
    PointSet trace(out.cover_labels.size());
    std::string_view rest = line.text.substr(colon + 1);
    if (!trim(rest).empty()) {
      for (const auto& t : split_labels(source, line, rest, colon + 1)) {
        auto it = index.find(t.text);
        if (it == index.end()) fail(source, line, t.offset, "unknown set '" + t.text + "'");
        trace.set(it->second);
      }
    }
    out.point_labels.push_back(std::move(point));
    out.traces.push_back(std::move(trace));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace ddm::io
