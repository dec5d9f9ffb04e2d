#include "metallic/hamilton.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "metallic/error.hpp"

namespace metallic {
namespace {

// Ranks of the prefixed copies inside the cube of length m:
//   0w -> r(w), 0aw -> s_{m-1} + r(w), jw -> s_{m-1} + s_{m-2} + (j-1) s_{m-1} + r(w).
struct Level {
  std::uint64_t s1 = 0;  // s_{m-1}
  std::uint64_t s2 = 0;  // s_{m-2}, 0 for m = 1

  VertexId copy(unsigned j, VertexId r) const {
    return static_cast<VertexId>(j == 0 ? r : s1 + s2 + (j - 1) * s1 + r);
  }
  VertexId zero_a(VertexId r) const { return static_cast<VertexId>(s1 + r); }
};

Level level(unsigned a, unsigned m) {
  return {word_count(a, m - 1), m >= 2 ? word_count(a, m - 2) : 0};
}

using Cycle = std::vector<VertexId>;

struct Cover {
  std::vector<Cycle> cycles;
  std::optional<VertexId> missed;
};

// Walks all of cycle c from `from` to its cycle neighbour `to`.
void append_around(std::vector<VertexId>& out, const Cycle& c, std::size_t from_pos,
                   VertexId to) {
  const std::size_t L = c.size();
  const bool forward = c[(from_pos + L - 1) % L] == to;
  for (std::size_t i = 0; i < L; ++i) {
    out.push_back(c[forward ? (from_pos + i) % L : (from_pos + L - i) % L]);
  }
}

class PositionIndex {
 public:
  explicit PositionIndex(std::size_t n) : pos_(n, kNone) {}

  void load(const Cycle& c) {
    clear();
    cycle_ = &c;
    for (std::size_t i = 0; i < c.size(); ++i) pos_[c[i]] = i;
  }
  void clear() {
    if (cycle_) {
      for (VertexId v : *cycle_) pos_[v] = kNone;
    }
    cycle_ = nullptr;
  }
  std::size_t at(VertexId v) const { return pos_[v]; }
  bool is_edge(VertexId u, VertexId v) const {
    const std::size_t pu = pos_[u], pv = pos_[v], L = cycle_->size();
    if (pu == kNone || pv == kNone || pu == pv) return false;
    return (pu + 1) % L == pv || (pv + 1) % L == pu;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pos_;
  const Cycle* cycle_ = nullptr;
};

// Replaces acc by acc + small, exchanging the least edge x'y' of `small`
// whose image f(x')f(y') is an edge of acc for the rungs f(x')x', f(y')y'.
template <class Map>
void merge_into(Cycle& acc, const Cycle& small, Map&& f, std::size_t vertex_count,
                const char* what) {
  PositionIndex acc_pos(vertex_count), small_pos(vertex_count);
  acc_pos.load(acc);
  small_pos.load(small);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t i = 0; i < small.size(); ++i) {
    VertexId u = small[i], v = small[(i + 1) % small.size()];
    if (u == v) continue;
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (auto [xs, ys] : edges) {
    const VertexId x = f(xs), y = f(ys);
    if (!acc_pos.is_edge(x, y)) continue;
    Cycle out;
    out.reserve(acc.size() + small.size());
    append_around(out, acc, acc_pos.at(y), x);
    append_around(out, small, small_pos.at(xs), ys);
    acc = std::move(out);
    return;
  }
  throw ConstructionError(std::string("no exchangeable edge while merging ") + what);
}

std::vector<VertexId> shifted(const std::vector<VertexId>& seq, auto&& f) {
  std::vector<VertexId> out;
  out.reserve(seq.size());
  for (VertexId v : seq) out.push_back(f(v));
  return out;
}

void check_or_throw(const MetallicCube& g, PathWitness& w) {
  const WitnessVerdict v = validate_witness(g, w);
  if (!v.valid) {
    throw ConstructionError(std::string(to_string(w.kind)) + " construction for a=" +
                            std::to_string(w.a) + ", n=" + std::to_string(w.n) +
                            " failed: " + v.violation);
  }
  w.valid = true;
}

std::vector<VertexId> build_path(unsigned a, unsigned n) {
  std::vector<std::vector<VertexId>> H(n + 1);
  H[0] = {0};
  if (n >= 1) {
    for (VertexId j = 0; j < a; ++j) H[1].push_back(j);
  }
  for (unsigned m = 2; m <= n; ++m) {
    const Level lv = level(a, m);
    const auto& P1 = H[m - 1];
    const auto& P2 = H[m - 2];
    // Copy 0 runs H_{m-1} backwards from its end (a-1)b, so the 0a part has
    // to finish at 0ab, next to 0(a-1)b.
    const Level prev = level(a, m - 1);
    const VertexId top = prev.copy(a - 1, 0);
    if (P1.back() < top) throw ConstructionError("path end does not start with a-1");
    const VertexId b = P1.back() - top;
    std::vector<VertexId> zero_a_part;
    if (P2.back() == b) {
      zero_a_part = P2;
    } else if (P2.front() == b) {
      zero_a_part.assign(P2.rbegin(), P2.rend());
    } else {
      throw ConstructionError("no orientation of the 0a part meets copy 0");
    }
    std::vector<VertexId>& out = H[m];
    out.reserve(word_count(a, m));
    for (VertexId r : zero_a_part) out.push_back(lv.zero_a(r));
    for (unsigned k = 0; k < a; ++k) {
      if (k % 2 == 0) {
        for (auto it = P1.rbegin(); it != P1.rend(); ++it) out.push_back(lv.copy(k, *it));
      } else {
        for (VertexId r : P1) out.push_back(lv.copy(k, r));
      }
    }
  }
  return std::move(H[n]);
}

Cover base_near_cycle(unsigned a) {
  // The a x a grid 00..(a-1)(a-1) around, leaving out the pendant 0a.
  std::vector<std::vector<Letter>> words;
  auto push = [&](unsigned x, unsigned y) {
    words.push_back({static_cast<Letter>(x), static_cast<Letter>(y)});
  };
  for (unsigned y = 0; y < a; ++y) push(0, y);
  for (unsigned x = 1; x < a; ++x) {
    for (unsigned c = 0; c + 1 < a; ++c) push(x, x % 2 ? a - 1 - c : c + 1);
  }
  for (unsigned x = a - 1; x >= 1; --x) push(x, 0);
  Cover c;
  Cycle cyc;
  for (const auto& w : words) cyc.push_back(static_cast<VertexId>(rank(w, a)));
  c.cycles.push_back(std::move(cyc));
  c.missed = static_cast<VertexId>(rank(std::vector<Letter>{0, static_cast<Letter>(a)}, a));
  return c;
}

Cover build_cycle_cover(unsigned a, unsigned n) {
  std::vector<Cover> C(n + 1);
  for (VertexId j = 0; j + 1 < a; j += 2) C[1].cycles.push_back({j, j + 1});
  if (n >= 2) C[2] = base_near_cycle(a);
  std::vector<MetallicCube> cubes;
  for (unsigned m = 0; m + 1 <= n; ++m) cubes.push_back(MetallicCube::build(a, m));

  for (unsigned m = 3; m <= n; ++m) {
    const Level lv = level(a, m);
    const Level prev = level(a, m - 1);
    const std::size_t count = word_count(a, m);
    const Cycle& C1 = C[m - 1].cycles.front();
    Cycle acc;

    if (m % 2 == 1) {
      // Pair copies k, k+1 around the vertex alpha that C_{m-1} misses.
      const VertexId alpha = *C[m - 1].missed;
      const auto& g1 = cubes[m - 1];
      const VertexId beta = g1.neighbors(alpha).front();
      PositionIndex pos(g1.size());
      pos.load(C1);
      const std::size_t pb = pos.at(beta), L = C1.size();
      const VertexId gamma = std::max(C1[(pb + 1) % L], C1[(pb + L - 1) % L]);
      std::vector<VertexId> P;  // beta ... gamma, all of C1
      append_around(P, C1, pb, gamma);
      pos.clear();
      for (unsigned k = 0; k + 1 < a; k += 2) {
        Cycle D;
        D.reserve(2 * L + 2);
        for (auto it = P.rbegin(); it != P.rend(); ++it) D.push_back(lv.copy(k, *it));
        D.push_back(lv.copy(k, alpha));
        D.push_back(lv.copy(k + 1, alpha));
        for (VertexId r : P) D.push_back(lv.copy(k + 1, r));
        if (k == 0) {
          acc = std::move(D);
        } else {
          const std::uint64_t delta = lv.copy(k, 0) - lv.copy(k - 1, 0);
          merge_into(acc, D, [&](VertexId v) { return static_cast<VertexId>(v - delta); }, count,
                     "paired copies");
        }
      }
    } else {
      acc = shifted(C1, [&](VertexId r) { return lv.copy(0, r); });
      for (unsigned k = 1; k < a; ++k) {
        const Cycle S = shifted(C1, [&](VertexId r) { return lv.copy(k, r); });
        const std::uint64_t delta = lv.copy(k, 0) - lv.copy(k - 1, 0);
        merge_into(acc, S, [&](VertexId v) { return static_cast<VertexId>(v - delta); }, count,
                   "copies");
      }
    }

    // The 0a part joins copy 0 along 0aw ~ 0(a-1)w.
    for (const Cycle& c2 : C[m - 2].cycles) {
      const Cycle S = shifted(c2, [&](VertexId r) { return lv.zero_a(r); });
      merge_into(acc, S,
                 [&](VertexId v) { return lv.copy(0, prev.copy(a - 1, v - lv.zero_a(0))); },
                 count, "the 0a part");
    }
    C[m].cycles = {std::move(acc)};
    if (m % 2 == 0) C[m].missed = lv.zero_a(*C[m - 2].missed);
  }
  return std::move(C[n]);
}

}  // namespace

const char* to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::path: return "path";
    case WitnessKind::cycle: return "cycle";
    case WitnessKind::near_cycle: return "near_cycle";
  }
  return "?";
}

WitnessVerdict validate_witness(const MetallicCube& g, const PathWitness& w) {
  WitnessVerdict v;
  auto fail = [&](std::string why, std::size_t at) {
    v.valid = false;
    v.violation = std::move(why);
    v.position = at;
    return v;
  };
  const auto& seq = w.sequence;
  if (seq.empty()) return fail("empty sequence", 0);
  std::vector<bool> seen(g.size(), false);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] >= g.size()) return fail("entry " + std::to_string(i) + " is not a vertex", i);
    if (seen[seq[i]]) return fail("vertex " + g.label(seq[i]) + " repeats at entry " + std::to_string(i), i);
    seen[seq[i]] = true;
  }
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (hbar(g.word(seq[i]), g.word(seq[i + 1])) != 1) {
      return fail("entries " + std::to_string(i) + " and " + std::to_string(i + 1) + " (" +
                      g.label(seq[i]) + ", " + g.label(seq[i + 1]) + ") are not adjacent",
                  i);
    }
  }
  const bool closed = w.kind != WitnessKind::path;
  if (closed) {
    if (seq.size() < 3) return fail("a cycle needs at least 3 vertices", 0);
    if (hbar(g.word(seq.back()), g.word(seq.front())) != 1) {
      return fail("closing step " + g.label(seq.back()) + " -> " + g.label(seq.front()) +
                      " is not an edge",
                  seq.size() - 1);
    }
  }
  const std::size_t expected = w.kind == WitnessKind::near_cycle ? g.size() - 1 : g.size();
  if (seq.size() != expected) {
    return fail("covers " + std::to_string(seq.size()) + " of " + std::to_string(g.size()) +
                    " vertices, expected " + std::to_string(expected),
                seq.size());
  }
  if (w.kind == WitnessKind::near_cycle && w.missed) {
    if (*w.missed >= g.size() || seen[*w.missed]) {
      return fail("declared missed vertex is visited or invalid", seq.size());
    }
  }
  v.valid = true;
  return v;
}

PathWitness hamiltonian_path(const MetallicCube& g) {
  PathWitness w;
  w.a = g.alphabet();
  w.n = g.length();
  w.kind = WitnessKind::path;
  w.sequence = build_path(w.a, w.n);
  check_or_throw(g, w);
  return w;
}

PathWitness hamiltonian_path(unsigned a, unsigned n, std::uint64_t cap) {
  return hamiltonian_path(MetallicCube::build(a, n, cap));
}

PathWitness hamiltonian_cycle(const MetallicCube& g) {
  const unsigned a = g.alphabet(), n = g.length();
  if (a % 2 == 1) {
    throw Unsupported("Hamiltonian cycles are constructed for even a only (a=" +
                      std::to_string(a) + ")");
  }
  if (n < 2) throw DomainError("Hamiltonian cycle needs n >= 2");
  Cover c = build_cycle_cover(a, n);
  PathWitness w;
  w.a = a;
  w.n = n;
  w.kind = c.missed ? WitnessKind::near_cycle : WitnessKind::cycle;
  w.missed = c.missed;
  w.sequence = std::move(c.cycles.front());
  check_or_throw(g, w);
  return w;
}

PathWitness hamiltonian_cycle(unsigned a, unsigned n, std::uint64_t cap) {
  check_alphabet(a);
  if (a % 2 == 1) {
    throw Unsupported("Hamiltonian cycles are constructed for even a only (a=" +
                      std::to_string(a) + ")");
  }
  if (n < 2) throw DomainError("Hamiltonian cycle needs n >= 2");
  return hamiltonian_cycle(MetallicCube::build(a, n, cap));
}

std::pair<MetallicString, MetallicString> path_endpoints(unsigned a, unsigned n) {
  check_alphabet(a);
  const auto A = static_cast<Letter>(a), top = static_cast<Letter>(a - 1);
  std::vector<Letter> start, end;
  for (unsigned i = 0; i < n; ++i) {
    if (a % 2 == 0) {
      start.push_back(i % 2 ? A : 0);
      end.push_back(top);
    } else {
      const Letter s_cycle[3] = {0, A, top}, e_cycle[3] = {top, 0, A};
      start.push_back(s_cycle[i % 3]);
      end.push_back(e_cycle[i % 3]);
    }
  }
  return {MetallicString(std::move(start), a), MetallicString(std::move(end), a)};
}

Matching matching_from_path(const PathWitness& path) {
  Matching m;
  for (std::size_t i = 0; i + 1 < path.sequence.size(); i += 2) {
    m.emplace_back(path.sequence[i], path.sequence[i + 1]);
  }
  return m;
}

Matching matching_from_path(unsigned a, unsigned n, std::uint64_t cap) {
  return matching_from_path(hamiltonian_path(a, n, cap));
}

MatchingVerdict check_matching(const MetallicCube& g, const Matching& m) {
  MatchingVerdict v;
  v.edges_ok = true;
  v.disjoint = true;
  std::vector<bool> used(g.size(), false);
  for (auto [x, y] : m) {
    if (x >= g.size() || y >= g.size() || !g.has_edge(x, y)) {
      v.edges_ok = false;
      continue;
    }
    for (VertexId z : {x, y}) {
      if (used[z]) v.disjoint = false;
      used[z] = true;
    }
  }
  v.covered = static_cast<std::size_t>(std::count(used.begin(), used.end(), true));
  v.perfect = v.edges_ok && v.disjoint && v.covered == g.size();
  return v;
}

void write_witness(const MetallicCube& g, const PathWitness& w, std::ostream& out) {
  for (VertexId v : w.sequence) out << g.label(v) << '\n';
}

PathWitness read_witness(const MetallicCube& g, std::istream& in, WitnessKind kind) {
  PathWitness w;
  w.a = g.alphabet();
  w.n = g.length();
  w.kind = kind;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    line.erase(0, start);
    if (line[0] == '#') {
      const auto eq = line.find("kind=");
      if (eq != std::string::npos) {
        const std::string k = line.substr(eq + 5);
        if (k == "path") w.kind = WitnessKind::path;
        else if (k == "cycle") w.kind = WitnessKind::cycle;
        else if (k == "near_cycle") w.kind = WitnessKind::near_cycle;
        else throw DomainError("unknown witness kind: " + k);
      }
      continue;
    }
    w.sequence.push_back(g.index_of(parse_letters(line, g.alphabet())));
  }
  return w;
}

}  // namespace metallic
