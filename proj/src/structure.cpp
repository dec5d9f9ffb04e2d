#include "metallic/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "metallic/bigint.hpp"
#include "metallic/error.hpp"

namespace metallic {
namespace {

std::uint64_t upow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::uint64_t fib_u64(unsigned n) {
  std::uint64_t x = 0, y = 1;
  for (unsigned i = 0; i < n; ++i) {
    std::uint64_t t = x + y;
    x = y;
    y = t;
  }
  return x;
}

struct SigmaCode {
  std::size_t block = 0;
  std::vector<std::vector<std::uint8_t>> letter;  // letters 0..a-1
  std::vector<std::uint8_t> zero_a;               // the block 0a, 2 * block bits
};

SigmaCode sigma_code(unsigned a) {
  SigmaCode c;
  if (a == 2) {
    c.block = 3;
    c.letter = {{0, 0, 1}, {0, 0, 0}};
    c.zero_a = {0, 0, 1, 0, 1, 0};
    return c;
  }
  // sigma(j) = (00)^j (01)^(a-1-j); sigma(0a) = sigma(0) 0010 0^(2a-6)
  c.block = 2 * a - 2;
  for (unsigned j = 0; j < a; ++j) {
    std::vector<std::uint8_t> bits;
    for (unsigned i = 0; i < j; ++i) bits.insert(bits.end(), {0, 0});
    for (unsigned i = j; i + 1 < a; ++i) bits.insert(bits.end(), {0, 1});
    c.letter.push_back(std::move(bits));
  }
  c.zero_a = c.letter[0];
  c.zero_a.insert(c.zero_a.end(), {0, 0, 1, 0});
  c.zero_a.insert(c.zero_a.end(), 2 * a - 6, 0);
  return c;
}

std::vector<unsigned> block_starts(std::span<const Letter> w, unsigned a) {
  std::vector<unsigned> starts;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == a) starts.push_back(static_cast<unsigned>(i - 1));
  }
  return starts;
}

// Edges of g inside `part`, checked against `small` through `image`.
// Returns false as soon as something does not match.
bool induced_copy(const MetallicCube& g, const std::vector<VertexId>& part,
                  const std::vector<int>& part_of, int part_id,
                  const std::vector<VertexId>& image, const MetallicCube& small) {
  if (part.size() != small.size()) return false;
  std::vector<bool> hit(small.size(), false);
  for (VertexId v : part) {
    if (hit[image[v]]) return false;
    hit[image[v]] = true;
  }
  std::uint64_t inside = 0;
  for (VertexId u : part) {
    for (VertexId v : g.neighbors(u)) {
      if (v <= u || part_of[v] != part_id) continue;
      if (!small.has_edge(image[u], image[v])) return false;
      ++inside;
    }
  }
  return inside == small.edge_count();
}

std::string prefix_label(unsigned j, unsigned a) {
  if (j < a) return to_text(std::vector<Letter>{static_cast<Letter>(j)}, a);
  return to_text(std::vector<Letter>{0, static_cast<Letter>(a)}, a);
}

}  // namespace

CanonicalDecomposition canonical_decomposition(const MetallicCube& g, bool verify_induced) {
  const unsigned a = g.alphabet(), n = g.length();
  if (n < 2) throw DomainError("canonical decomposition needs n >= 2");
  CanonicalDecomposition d;
  d.a = a;
  d.n = n;
  d.parts.resize(a + 1);
  std::vector<int> part_of(g.size());
  for (VertexId v = 0; v < g.size(); ++v) {
    auto w = g.word(v);
    const unsigned j = (w[0] == 0 && w[1] == a) ? a : w[0];
    part_of[v] = static_cast<int>(j);
    d.parts[j].push_back(v);
  }
  const std::uint64_t s1 = word_count(a, n - 1), s2 = word_count(a, n - 2);
  d.sizes_ok = d.parts[a].size() == s2;
  for (unsigned j = 0; j < a; ++j) d.sizes_ok = d.sizes_ok && d.parts[j].size() == s1;

  for (auto [u, v] : g.edges()) {
    if (part_of[u] != part_of[v]) ++d.cross_edges;
  }
  d.cross_edges_ok = d.cross_edges == word_count(a, n) - s1;

  if (verify_induced) {
    d.induced_checked = true;
    const auto big = MetallicCube::build(a, n - 1);
    const auto small = MetallicCube::build(a, n - 2);
    std::vector<VertexId> image(g.size());
    for (VertexId v = 0; v < g.size(); ++v) {
      auto w = g.word(v);
      const std::size_t strip = part_of[v] == static_cast<int>(a) ? 2 : 1;
      image[v] = static_cast<VertexId>(rank(w.subspan(strip), a));
    }
    d.induced_ok = true;
    for (unsigned j = 0; j <= a && d.induced_ok; ++j) {
      d.induced_ok = induced_copy(g, d.parts[j], part_of, static_cast<int>(j), image,
                                  j < a ? big : small);
    }
  }
  return d;
}

bool GridDecomposition::valid() const {
  if (!count_ok) return false;
  return std::all_of(classes.begin(), classes.end(),
                     [](const GridClass& c) { return c.size_ok && c.grid_ok; });
}

GridDecomposition grid_decomposition(const MetallicCube& g) {
  const unsigned a = g.alphabet(), n = g.length();
  std::map<std::vector<unsigned>, std::vector<VertexId>> by_key;
  for (VertexId v = 0; v < g.size(); ++v) by_key[block_starts(g.word(v), a)].push_back(v);

  GridDecomposition d;
  d.a = a;
  d.n = n;
  std::vector<std::uint32_t> class_of(g.size());
  for (auto& [key, vs] : by_key) {
    for (VertexId v : vs) class_of[v] = static_cast<std::uint32_t>(d.classes.size());
    GridClass c;
    c.block_starts = key;
    c.vertices = std::move(vs);
    c.dimension = n - 2 * static_cast<unsigned>(key.size());
    d.classes.push_back(std::move(c));
  }
  d.count_ok = d.classes.size() == fib_u64(n + 1);

  for (std::uint32_t ci = 0; ci < d.classes.size(); ++ci) {
    GridClass& c = d.classes[ci];
    const std::uint64_t expected = upow(a, c.dimension);
    c.size_ok = c.vertices.size() == expected;
    if (!c.size_ok) continue;

    std::vector<bool> free(n, true);
    for (unsigned s : c.block_starts) free[s] = free[s + 1] = false;

    // Coordinates are the free letters read in order, as a base-a number.
    std::vector<bool> seen(expected, false);
    c.grid_ok = true;
    for (VertexId u : c.vertices) {
      auto w = g.word(u);
      std::uint64_t idx = 0;
      unsigned boundary_free_degree = 0;
      for (unsigned i = 0; i < n; ++i) {
        if (!free[i]) continue;
        if (w[i] >= a) {
          c.grid_ok = false;
          break;
        }
        idx = idx * a + w[i];
        boundary_free_degree += (w[i] > 0) + (w[i] + 1u < a);
      }
      if (!c.grid_ok || seen[idx]) {
        c.grid_ok = false;
        break;
      }
      seen[idx] = true;

      unsigned inside = 0;
      for (VertexId v : g.neighbors(u)) {
        if (class_of[v] != ci) continue;
        auto x = g.word(v);
        unsigned diff = 0;
        for (unsigned i = 0; i < n; ++i) {
          if (w[i] != x[i]) diff += free[i] ? 1 : 2;
        }
        if (diff != 1) c.grid_ok = false;
        ++inside;
      }
      if (inside != boundary_free_degree) c.grid_ok = false;
      if (!c.grid_ok) break;
    }
  }
  return d;
}

BinaryString::BinaryString(std::vector<std::uint8_t> b) : bits(std::move(b)) {
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1) throw DomainError("binary string with a non-bit");
    if (i && bits[i] && bits[i - 1]) fibonacci_valid = false;
  }
}

BinaryString BinaryString::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  if (text == "-") return BinaryString(bits);
  for (char c : text) {
    if (c != '0' && c != '1') throw DomainError("bad bit in " + std::string(text));
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return BinaryString(std::move(bits));
}

std::string BinaryString::to_text() const {
  if (bits.empty()) return "-";
  std::string out;
  for (auto b : bits) out.push_back(static_cast<char>('0' + b));
  return out;
}

std::size_t hamming(const BinaryString& x, const BinaryString& y) {
  if (x.size() != y.size()) throw DomainError("hamming needs equal lengths");
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += x.bits[i] != y.bits[i];
  return d;
}

std::size_t FibonacciCube::edge_count() const {
  std::size_t e = 0;
  for (const auto& nb : adjacency) e += nb.size();
  return e / 2;
}

std::uint32_t FibonacciCube::index_of(const BinaryString& s) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), s);
  if (it == vertices.end() || *it != s) {
    throw VertexNotFound("not a vertex of the Fibonacci cube: " + s.to_text());
  }
  return static_cast<std::uint32_t>(it - vertices.begin());
}

FibonacciCube build_fibonacci_cube(unsigned m, std::uint64_t cap) {
  if (m + 2 > 93 || fib_u64(m + 2) > cap) {
    throw CapExceeded("Fibonacci cube of dimension " + std::to_string(m) + " exceeds the vertex cap");
  }
  FibonacciCube f;
  f.m = m;
  std::vector<std::uint8_t> bits(m, 0);
  while (true) {
    f.vertices.emplace_back(bits);
    // Lexicographic successor: the rightmost 0 that may become 1.
    std::size_t i = m;
    bool advanced = false;
    while (i > 0) {
      --i;
      if (bits[i] == 0 && (i == 0 || bits[i - 1] == 0)) {
        bits[i] = 1;
        std::fill(bits.begin() + static_cast<std::ptrdiff_t>(i) + 1, bits.end(), 0);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  f.adjacency.resize(f.vertices.size());
  for (std::uint32_t v = 0; v < f.vertices.size(); ++v) {
    for (unsigned i = 0; i < m; ++i) {
      BinaryString x = f.vertices[v];
      x.bits[i] ^= 1;
      x = BinaryString(std::move(x.bits));
      if (!x.fibonacci_valid) continue;
      f.adjacency[v].push_back(f.index_of(x));
    }
    std::sort(f.adjacency[v].begin(), f.adjacency[v].end());
  }
  return f;
}

BinaryString rho_project(std::span<const Letter> w, unsigned a) {
  std::vector<std::uint8_t> bits(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) bits[i] = w[i] == a;
  return BinaryString(std::move(bits));
}

BinaryString rho_project(const MetallicString& w) { return rho_project(w.letters(), w.alphabet()); }

QuotientGraph quotient_graph(const MetallicCube& g) {
  const unsigned a = g.alphabet(), n = g.length();
  if (n == 0) throw DomainError("quotient graph needs n >= 1");
  QuotientGraph q;
  std::vector<BinaryString> images(g.size());
  for (VertexId v = 0; v < g.size(); ++v) images[v] = rho_project(g.word(v), a);
  q.vertices = images;
  std::sort(q.vertices.begin(), q.vertices.end());
  q.vertices.erase(std::unique(q.vertices.begin(), q.vertices.end()), q.vertices.end());

  q.class_of.resize(g.size());
  for (VertexId v = 0; v < g.size(); ++v) {
    q.class_of[v] = static_cast<std::uint32_t>(
        std::lower_bound(q.vertices.begin(), q.vertices.end(), images[v]) - q.vertices.begin());
  }
  std::set<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (auto [u, v] : g.edges()) {
    auto cu = q.class_of[u], cv = q.class_of[v];
    if (cu != cv) edges.emplace(std::min(cu, cv), std::max(cu, cv));
  }
  q.edges.assign(edges.begin(), edges.end());

  const FibonacciCube fib = build_fibonacci_cube(n - 1);
  q.fibonacci_edges = fib.edge_count();
  q.isomorphic = q.vertices.size() == fib.size() && q.edges.size() == fib.edge_count();
  std::vector<bool> hit(fib.size(), false);
  for (const auto& s : q.vertices) {
    if (s.bits.empty() || s.bits[0] != 0 || !s.fibonacci_valid) {
      q.isomorphic = false;
      q.to_fibonacci.push_back(0);
      continue;
    }
    const auto t = fib.index_of(BinaryString({s.bits.begin() + 1, s.bits.end()}));
    if (hit[t]) q.isomorphic = false;
    hit[t] = true;
    q.to_fibonacci.push_back(t);
  }
  if (q.isomorphic) {
    for (auto [u, v] : q.edges) {
      const auto& nb = fib.adjacency[q.to_fibonacci[u]];
      if (!std::binary_search(nb.begin(), nb.end(), q.to_fibonacci[v])) q.isomorphic = false;
    }
  }
  return q;
}

bool unary_cube_is_fibonacci_cube(unsigned m, std::uint64_t cap) {
  const auto g = MetallicCube::build(1, m + 1, cap);
  const auto fib = build_fibonacci_cube(m, cap);
  if (g.size() != fib.size() || g.edge_count() != fib.edge_count()) return false;
  std::vector<std::uint32_t> image(g.size());
  std::vector<bool> hit(fib.size(), false);
  for (VertexId v = 0; v < g.size(); ++v) {
    auto w = g.word(v);
    if (w[0] != 0) return false;
    image[v] = fib.index_of(BinaryString({w.begin() + 1, w.end()}));
    if (hit[image[v]]) return false;
    hit[image[v]] = true;
  }
  for (auto [u, v] : g.edges()) {
    const auto& nb = fib.adjacency[image[u]];
    if (!std::binary_search(nb.begin(), nb.end(), image[v])) return false;
  }
  return true;
}

BinaryString sigma_embed(std::span<const Letter> w, unsigned a) {
  check_alphabet(a);
  if (a == 1) throw Unsupported("sigma is not defined for a = 1");
  if (!is_valid(w, a)) throw InvalidWord("sigma_embed needs a valid word");
  const SigmaCode code = sigma_code(a);
  std::vector<std::uint8_t> bits;
  bits.reserve(w.size() * code.block);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0 && i + 1 < w.size() && w[i + 1] == a) {
      bits.insert(bits.end(), code.zero_a.begin(), code.zero_a.end());
      ++i;
    } else {
      bits.insert(bits.end(), code.letter[w[i]].begin(), code.letter[w[i]].end());
    }
  }
  return BinaryString(std::move(bits));
}

BinaryString sigma_embed(const MetallicString& w) { return sigma_embed(w.letters(), w.alphabet()); }

bool sigma_decode(const BinaryString& s, unsigned a, std::vector<Letter>& out) {
  out.clear();
  if (a == 1) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s.bits[i] && (i == 0 || s.bits[i - 1])) return false;
      out.push_back(s.bits[i]);
    }
    return true;
  }
  const SigmaCode code = sigma_code(a);
  const std::size_t L = code.block;
  if (s.size() % L) return false;
  auto chunk_is = [&](std::size_t at, const std::uint8_t* ref) {
    return std::equal(ref, ref + L, s.bits.begin() + static_cast<std::ptrdiff_t>(at));
  };
  for (std::size_t p = 0; p < s.size();) {
    if (p + 2 * L <= s.size() && chunk_is(p, code.zero_a.data()) &&
        chunk_is(p + L, code.zero_a.data() + L)) {
      out.push_back(0);
      out.push_back(static_cast<Letter>(a));
      p += 2 * L;
      continue;
    }
    unsigned j = 0;
    while (j < a && !chunk_is(p, code.letter[j].data())) ++j;
    if (j == a) return false;
    out.push_back(static_cast<Letter>(j));
    p += L;
  }
  return true;
}

VertexId median(const MetallicCube& g, VertexId u, VertexId v, VertexId w) {
  const unsigned a = g.alphabet();
  auto embed = [&](VertexId x) {
    auto word = g.word(x);
    if (a == 1) return BinaryString({word.begin(), word.end()});
    return sigma_embed(word, a);
  };
  const BinaryString x = embed(u), y = embed(v), z = embed(w);
  std::vector<std::uint8_t> maj(x.size());
  for (std::size_t i = 0; i < maj.size(); ++i) {
    maj[i] = static_cast<std::uint8_t>(x.bits[i] + y.bits[i] + z.bits[i] >= 2);
  }
  std::vector<Letter> letters;
  if (!sigma_decode(BinaryString(std::move(maj)), a, letters)) {
    throw InternalInconsistency("majority of three images is not an image (" + g.label(u) +
                                ", " + g.label(v) + ", " + g.label(w) + ")");
  }
  try {
    return g.index_of(letters);
  } catch (const VertexNotFound&) {
    throw InternalInconsistency("majority decodes to a non-vertex");
  }
}

MetallicString median(const MetallicCube& g, const MetallicString& u,
                      const MetallicString& v, const MetallicString& w) {
  return g.vertex(median(g, g.index_of(u), g.index_of(v), g.index_of(w)));
}

std::vector<VertexId> medians_by_distance(const MetallicCube& g, VertexId u,
                                          VertexId v, VertexId w) {
  const auto du = bfs_distances(g, u), dv = bfs_distances(g, v), dw = bfs_distances(g, w);
  std::vector<VertexId> out;
  for (VertexId m = 0; m < g.size(); ++m) {
    if (du[m] + dv[m] == du[v] && dv[m] + dw[m] == dv[w] && du[m] + dw[m] == du[w]) {
      out.push_back(m);
    }
  }
  return out;
}

unsigned pell_graph_max_degree(unsigned n) {
  if (n > 12) throw CapExceeded("Pell graph check is brute force; n <= 12");
  auto ok = [&](const std::vector<int>& s) {
    std::size_t run = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
      if (i < s.size() && s[i] == 2) {
        ++run;
      } else {
        if (run % 2) return false;
        run = 0;
      }
    }
    return true;
  };
  std::set<std::vector<int>> vertices;
  std::vector<int> s(n, 0);
  for (std::uint64_t code = 0; code < upow(3, n); ++code) {
    std::uint64_t c = code;
    for (unsigned i = 0; i < n; ++i, c /= 3) s[i] = static_cast<int>(c % 3);
    if (ok(s)) vertices.insert(s);
  }
  unsigned best = 0;
  for (const auto& v : vertices) {
    unsigned deg = 0;
    for (unsigned i = 0; i < n; ++i) {
      if (v[i] <= 1) {
        auto x = v;
        x[i] = 1 - x[i];
        deg += vertices.count(x) > 0;
      }
      if (i + 1 < n && v[i] == v[i + 1] && v[i] >= 1) {
        auto x = v;
        x[i] = x[i + 1] = 3 - v[i];
        deg += vertices.count(x) > 0;
      }
    }
    best = std::max(best, deg);
  }
  return best;
}

unsigned max_degree(const MetallicCube& g) {
  std::size_t best = 0;
  for (VertexId v = 0; v < g.size(); ++v) best = std::max(best, g.degree(v));
  return static_cast<unsigned>(best);
}

nlohmann::ordered_json report_json(const CanonicalDecomposition& d) {
  nlohmann::ordered_json j;
  j["a"] = d.a;
  j["n"] = d.n;
  auto& parts = j["parts"] = nlohmann::ordered_json::array();
  for (unsigned p = 0; p < d.parts.size(); ++p) {
    parts.push_back({{"prefix", prefix_label(p, d.a)}, {"size", d.parts[p].size()}});
  }
  j["cross_edges"] = d.cross_edges;
  j["expected_cross_edges"] = word_count(d.a, d.n) - word_count(d.a, d.n - 1);
  j["sizes_ok"] = d.sizes_ok;
  j["cross_edges_ok"] = d.cross_edges_ok;
  j["induced_checked"] = d.induced_checked;
  if (d.induced_checked) j["induced_ok"] = d.induced_ok;
  j["valid"] = d.valid();
  return j;
}

nlohmann::ordered_json report_json(const MetallicCube& g, const GridDecomposition& d) {
  nlohmann::ordered_json j;
  j["a"] = d.a;
  j["n"] = d.n;
  auto& classes = j["classes"] = nlohmann::ordered_json::array();
  for (const auto& c : d.classes) {
    classes.push_back({{"block_starts", c.block_starts},
                       {"key", rho_project(g.word(c.vertices.front()), d.a).to_text()},
                       {"dimension", c.dimension},
                       {"size", c.vertices.size()},
                       {"size_ok", c.size_ok},
                       {"grid_ok", c.grid_ok}});
  }
  j["class_count"] = d.classes.size();
  j["expected_class_count"] = fib_u64(d.n + 1);
  j["count_ok"] = d.count_ok;
  j["valid"] = d.valid();
  return j;
}

nlohmann::ordered_json report_json(const QuotientGraph& q) {
  nlohmann::ordered_json j;
  auto& vs = j["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : q.vertices) vs.push_back(v.to_text());
  j["edges"] = q.edges;
  j["fibonacci_vertices"] = q.vertices.size();
  j["fibonacci_edges"] = q.fibonacci_edges;
  j["isomorphic"] = q.isomorphic;
  return j;
}

}  // namespace metallic
