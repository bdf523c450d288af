#include "hyperent/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "hyperent/error.hpp"

namespace hyperent {

int edge_order(EdgeMask e) { return std::popcount(e); }

std::string format_edge(EdgeMask e) {
  std::string out = "{";
  bool first = true;
  for (int v = 0; v < kMaxVertices; ++v) {
    if (e >> v & 1u) {
      if (!first) out += ',';
      out += std::to_string(v + 1);
      first = false;
    }
  }
  out += '}';
  return out;
}

int EdgeOrderProfile::total() const {
  int t = 0;
  for (const auto& [k, c] : counts) t += c;
  return t;
}

int EdgeOrderProfile::count(int order) const {
  auto it = counts.find(order);
  return it == counts.end() ? 0 : it->second;
}

namespace {

bool canonical_less(EdgeMask a, EdgeMask b) {
  const int oa = edge_order(a), ob = edge_order(b);
  return oa != ob ? oa < ob : a < b;
}

}  // namespace

Hypergraph::Hypergraph(int vertex_count, std::vector<EdgeMask> edges, std::string name)
    : n_(vertex_count), edges_(std::move(edges)), name_(std::move(name)) {
  if (n_ < 1 || n_ > kMaxVertices) {
    throw Error(ErrorKind::InvalidArgument,
                "vertex count must be in [1, " + std::to_string(kMaxVertices) + "], got " +
                    std::to_string(n_));
  }
  const EdgeMask allowed = n_ == 32 ? ~EdgeMask{0} : ((EdgeMask{1} << n_) - 1);
  for (EdgeMask e : edges_) {
    if (e == 0) throw Error(ErrorKind::InvalidArgument, "empty hyperedge");
    if (e & ~allowed) {
      throw Error(ErrorKind::InvalidArgument,
                  "hyperedge " + format_edge(e) + " uses a vertex outside 1.." + std::to_string(n_));
    }
  }
  std::sort(edges_.begin(), edges_.end(), canonical_less);
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw Error(ErrorKind::InvalidArgument, "duplicate hyperedge " + format_edge(*dup));
  }
}

Hypergraph Hypergraph::edgeless(int vertex_count, std::string name) {
  return Hypergraph(vertex_count, {}, std::move(name));
}

int Hypergraph::max_edge_order() const {
  return edges_.empty() ? 0 : edge_order(edges_.back());
}

EdgeOrderProfile Hypergraph::order_profile() const {
  EdgeOrderProfile p;
  for (EdgeMask e : edges_) ++p.counts[edge_order(e)];
  return p;
}

std::vector<int> Hypergraph::randomizable_orders() const {
  std::vector<int> orders;
  for (EdgeMask e : edges_) {
    const int k = edge_order(e);
    if (k >= 2 && (orders.empty() || orders.back() != k)) orders.push_back(k);
  }
  return orders;
}

std::vector<EdgeMask> Hypergraph::randomizable_edges() const {
  std::vector<EdgeMask> out;
  for (EdgeMask e : edges_)
    if (edge_order(e) >= 2) out.push_back(e);
  return out;
}

std::vector<EdgeMask> Hypergraph::loops() const {
  std::vector<EdgeMask> out;
  for (EdgeMask e : edges_)
    if (edge_order(e) == 1) out.push_back(e);
  return out;
}

bool Hypergraph::contains(EdgeMask e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e, canonical_less);
}

Hypergraph Hypergraph::with_name(std::string name) const {
  Hypergraph h = *this;
  h.name_ = std::move(name);
  return h;
}

Hypergraph spanning_subhypergraph(const Hypergraph& h, std::uint32_t kept) {
  std::vector<EdgeMask> edges = h.loops();
  const auto rand = h.randomizable_edges();
  for (std::size_t j = 0; j < rand.size(); ++j)
    if (kept >> j & 1u) edges.push_back(rand[j]);
  return Hypergraph(h.vertex_count(), std::move(edges));
}

std::vector<Hypergraph> spanning_subhypergraphs(const Hypergraph& h) {
  const auto m = h.randomizable_edges().size();
  if (m > kMaxRandomizableEdges) {
    throw Error(ErrorKind::Capacity, std::to_string(m) + " randomizable edges exceed the limit of " +
                                         std::to_string(kMaxRandomizableEdges));
  }
  std::vector<Hypergraph> out;
  out.reserve(std::size_t{1} << m);
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << m); ++s) out.push_back(spanning_subhypergraph(h, s));
  return out;
}

// ---------------------------------------------------------------------------
// Catalog text

std::string to_inline_string(const Hypergraph& h) {
  std::string out = "vertices=" + std::to_string(h.vertex_count()) + "; edges=";
  for (std::size_t i = 0; i < h.edges().size(); ++i) {
    if (i) out += ',';
    out += format_edge(h.edges()[i]);
  }
  return out;
}

std::string serialize(const Hypergraph& h) {
  std::string out;
  if (!h.name().empty()) out += "name=" + h.name() + "\n";
  out += "vertices=" + std::to_string(h.vertex_count()) + "\nedges=";
  for (std::size_t i = 0; i < h.edges().size(); ++i) {
    if (i) out += ',';
    out += format_edge(h.edges()[i]);
  }
  out += '\n';
  return out;
}

namespace {

struct SourceLine {
  int number;           // 1-based
  std::string_view text;  // comment stripped
};

struct Field {
  int line;
  int column;  // 1-based column of the first character of the field value
  std::string_view value;
};

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

std::string_view strip_comment(std::string_view line) {
  auto pos = line.find('#');
  return pos == std::string_view::npos ? line : line.substr(0, pos);
}

class RecordParser {
 public:
  explicit RecordParser(const std::vector<SourceLine>& lines) : lines_(lines) {}

  Hypergraph parse() {
    for (const auto& line : lines_) split_fields(line);
    if (!vertices_) {
      const int ln = lines_.empty() ? 1 : lines_.front().number;
      throw ParseError("missing 'vertices=' field", ln, 1);
    }
    const int n = parse_vertex_count(*vertices_);
    std::vector<EdgeMask> edges;
    if (edges_) edges = parse_edges(*edges_, n);
    return Hypergraph(n, std::move(edges), name_ ? std::string(trim(name_->value)) : std::string{});
  }

 private:
  static std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  }

  void split_fields(const SourceLine& line) {
    std::size_t start = 0;
    while (start <= line.text.size()) {
      auto end = line.text.find(';', start);
      if (end == std::string_view::npos) end = line.text.size();
      std::string_view raw = line.text.substr(start, end - start);
      if (!is_blank(raw)) add_field(line.number, static_cast<int>(start), raw);
      start = end + 1;
    }
  }

  void add_field(int line, int offset, std::string_view raw) {
    std::size_t lead = 0;
    while (lead < raw.size() && std::isspace(static_cast<unsigned char>(raw[lead]))) ++lead;
    const auto eq = raw.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected key=value", line, offset + static_cast<int>(lead) + 1);
    }
    const std::string_view key = trim(raw.substr(0, eq));
    Field f{line, offset + static_cast<int>(eq) + 2, raw.substr(eq + 1)};
    std::optional<Field>* slot = nullptr;
    if (key == "name") slot = &name_;
    else if (key == "vertices") slot = &vertices_;
    else if (key == "edges") slot = &edges_;
    else throw ParseError("unknown key '" + std::string(key) + "'", line, offset + static_cast<int>(lead) + 1);
    if (slot->has_value()) {
      throw ParseError("repeated key '" + std::string(key) + "'", line, offset + static_cast<int>(lead) + 1);
    }
    *slot = f;
  }

  static int parse_int(const Field& f, std::size_t pos, std::size_t len) {
    int value = 0;
    const char* first = f.value.data() + pos;
    auto [ptr, ec] = std::from_chars(first, first + len, value);
    if (ec != std::errc{} || ptr != first + len) {
      throw ParseError("expected an integer", f.line, f.column + static_cast<int>(pos));
    }
    return value;
  }

  static int parse_vertex_count(const Field& f) {
    std::size_t b = 0, e = f.value.size();
    while (b < e && std::isspace(static_cast<unsigned char>(f.value[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(f.value[e - 1]))) --e;
    if (b == e) throw ParseError("empty vertex count", f.line, f.column);
    const int n = parse_int(f, b, e - b);
    if (n < 1 || n > kMaxVertices) {
      throw ParseError("vertex count must be in [1, " + std::to_string(kMaxVertices) + "]", f.line,
                       f.column + static_cast<int>(b));
    }
    return n;
  }

  static std::vector<EdgeMask> parse_edges(const Field& f, int n) {
    const std::string_view s = f.value;
    std::vector<EdgeMask> edges;
    std::size_t i = 0;
    auto col = [&](std::size_t p) { return f.column + static_cast<int>(p); };
    auto skip_ws = [&] {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip_ws();
    if (i == s.size()) return edges;
    for (;;) {
      skip_ws();
      if (i >= s.size() || s[i] != '{') throw ParseError("expected '{'", f.line, col(i));
      const std::size_t open = i++;
      EdgeMask mask = 0;
      bool expect_number = true;
      for (;;) {
        skip_ws();
        if (i >= s.size()) throw ParseError("unterminated '{'", f.line, col(open));
        if (s[i] == '}') {
          if (expect_number) {
            throw ParseError(mask == 0 ? "empty hyperedge" : "dangling ','", f.line, col(i));
          }
          ++i;
          break;
        }
        if (!expect_number) {
          if (s[i] != ',') throw ParseError("expected ',' or '}'", f.line, col(i));
          ++i;
          expect_number = true;
          continue;
        }
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw ParseError("expected a vertex index", f.line, col(i));
        const int v = parse_int(f, i, j - i);
        if (v < 1 || v > n) {
          throw ParseError("vertex index " + std::to_string(v) + " out of range 1.." + std::to_string(n),
                           f.line, col(i));
        }
        const EdgeMask bit = EdgeMask{1} << (v - 1);
        if (mask & bit) throw ParseError("vertex repeated within hyperedge", f.line, col(i));
        mask |= bit;
        i = j;
        expect_number = false;
      }
      for (std::size_t k = 0; k < edges.size(); ++k) {
        if (edges[k] == mask) {
          throw ParseError("duplicate hyperedge " + format_edge(mask), f.line, col(open));
        }
      }
      edges.push_back(mask);
      skip_ws();
      if (i == s.size()) break;
      if (s[i] != ',') throw ParseError("expected ',' between hyperedges", f.line, col(i));
      ++i;
    }
    return edges;
  }

  const std::vector<SourceLine>& lines_;
  std::optional<Field> name_, vertices_, edges_;
};

std::vector<SourceLine> split_lines(std::string_view text) {
  std::vector<SourceLine> lines;
  int number = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({number++, line});
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  std::vector<SourceLine> lines;
  for (const auto& l : split_lines(text)) lines.push_back({l.number, strip_comment(l.text)});
  return RecordParser(lines).parse();
}

std::vector<Hypergraph> parse_catalog(std::string_view text) {
  std::vector<Hypergraph> out;
  std::vector<SourceLine> block;
  auto flush = [&] {
    const bool has_content =
        std::any_of(block.begin(), block.end(), [](const SourceLine& l) { return !is_blank(l.text); });
    if (has_content) out.push_back(RecordParser(block).parse());
    block.clear();
  };
  for (const auto& l : split_lines(text)) {
    if (is_blank(l.text)) {
      flush();
      continue;
    }
    block.push_back({l.number, strip_comment(l.text)});
  }
  flush();
  return out;
}

std::vector<Hypergraph> load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::NotFound, "cannot open catalog '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

const Hypergraph& find_by_name(const std::vector<Hypergraph>& catalog, std::string_view name) {
  for (const auto& h : catalog)
    if (h.name() == name) return h;
  throw Error(ErrorKind::NotFound, "no catalog entry named '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Families

Hypergraph clover(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "clover requires n >= 3");
  if (n > kMaxVertices) throw Error(ErrorKind::Capacity, "clover: too many vertices");
  const EdgeMask center = EdgeMask{1} << (n - 1);
  const int rim = n - 1;
  std::vector<EdgeMask> edges;
  for (int i = 0; i < rim; ++i) {
    const EdgeMask e = center | (EdgeMask{1} << i) | (EdgeMask{1} << ((i + 1) % rim));
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
  }
  return Hypergraph(n, std::move(edges), "Cl_" + std::to_string(n));
}

Hypergraph flower(int n) {
  if (n < 3 || n % 2 == 0) throw Error(ErrorKind::InvalidArgument, "flower requires odd n >= 3");
  if (n > kMaxVertices) throw Error(ErrorKind::Capacity, "flower: too many vertices");
  const EdgeMask center = EdgeMask{1} << (n - 1);
  std::vector<EdgeMask> edges;
  for (int j = 0; j < (n - 1) / 2; ++j) edges.push_back(center | (EdgeMask{3} << (2 * j)));
  return Hypergraph(n, std::move(edges), "Fl_" + std::to_string(n));
}

namespace {

void k_subsets(int n, int k, int start, EdgeMask acc, std::vector<EdgeMask>& out) {
  if (k == 0) {
    out.push_back(acc);
    return;
  }
  for (int v = start; v <= n - k; ++v) k_subsets(n, k - 1, v + 1, acc | (EdgeMask{1} << v), out);
}

}  // namespace

Hypergraph family(std::string_view name, int n) {
  const std::string label = std::string(name) + "(" + std::to_string(n) + ")";
  if (name == "clover") return clover(n);
  if (name == "flower") return flower(n);
  if (n < 1 || n > kMaxVertices) {
    throw Error(ErrorKind::InvalidArgument, "family '" + std::string(name) + "': n out of range");
  }
  if (name == "edgeless") return Hypergraph::edgeless(n, label);
  if (name == "single-edge") {
    return Hypergraph(n, {n == 32 ? ~EdgeMask{0} : (EdgeMask{1} << n) - 1}, label);
  }
  if (name == "star") {
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "star requires n >= 2");
    std::vector<EdgeMask> edges;
    for (int v = 1; v < n; ++v) edges.push_back(1u | (EdgeMask{1} << v));
    return Hypergraph(n, std::move(edges), label);
  }
  constexpr std::string_view prefix = "complete-", suffix = "-uniform";
  if (name.starts_with(prefix) && name.ends_with(suffix) && name.size() > prefix.size() + suffix.size()) {
    const auto digits = name.substr(prefix.size(), name.size() - prefix.size() - suffix.size());
    int k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw Error(ErrorKind::InvalidArgument, "unknown family '" + std::string(name) + "'");
    }
    if (k < 1 || k > n) throw Error(ErrorKind::InvalidArgument, label + ": need 1 <= k <= n");
    std::vector<EdgeMask> edges;
    k_subsets(n, k, 0, 0, edges);
    return Hypergraph(n, std::move(edges), label);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown family '" + std::string(name) + "'");
}

}  // namespace hyperent
