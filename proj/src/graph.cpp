#include "metallic/graph.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "metallic/error.hpp"

namespace metallic {
namespace {

// Rank is a sum of per-position contributions, so moving one letter by one
// step shifts the rank by a constant that depends only on the position and
// on whether the lower letter is 0.
struct RankSteps {
  std::vector<std::uint64_t> from_zero;   // 0 -> 1 at position i
  std::vector<std::uint64_t> from_other;  // x -> x+1, x >= 1
};

RankSteps rank_steps(unsigned a, unsigned n) {
  std::vector<std::uint64_t> s(n + 1);
  s[0] = 1;
  if (n >= 1) s[1] = a;
  for (unsigned m = 2; m <= n; ++m) s[m] = a * s[m - 1] + s[m - 2];
  RankSteps steps{std::vector<std::uint64_t>(n), std::vector<std::uint64_t>(n)};
  for (unsigned i = 0; i < n; ++i) {
    const unsigned rem = n - i - 1;
    steps.from_zero[i] = rem == 0 ? 1 : s[rem] + s[rem - 1];
    steps.from_other[i] = s[rem];
  }
  return steps;
}

// Calls emit with the rank of every neighbor of w (rank r), unsorted.
template <class Emit>
void synthesize(std::span<const Letter> w, std::uint64_t r, unsigned a,
                const RankSteps& steps, Emit&& emit) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned x = w[i];
    if (x > 0) {
      // Lowering is always valid: if the next letter is a then x = 0, and
      // lowering an a just removes it.
      emit(r - (x == 1 ? steps.from_zero[i] : steps.from_other[i]));
    }
    if (x < a) {
      const unsigned y = x + 1;
      if (y == a && (i == 0 || w[i - 1] != 0)) continue;
      if (x == 0 && i + 1 < n && w[i + 1] == a) continue;
      emit(r + (x == 0 ? steps.from_zero[i] : steps.from_other[i]));
    }
  }
}

}  // namespace

MetallicCube MetallicCube::build(unsigned a, unsigned n, std::uint64_t cap,
                                 BuildKernel kernel) {
  if (cap > std::numeric_limits<VertexId>::max()) {
    cap = std::numeric_limits<VertexId>::max();
  }
  MetallicCube g(a, n, enumerate(a, n, cap));
  const std::size_t count = g.words_.size();
  g.offsets_.assign(count + 1, 0);

  if (kernel == BuildKernel::serial) {
    // Reference kernel: try every +-1 move, validate, rank from scratch.
    std::vector<Letter> w(n);
    for (std::size_t v = 0; v < count; ++v) {
      auto src = g.words_[v];
      std::vector<VertexId> nb;
      for (unsigned i = 0; i < n; ++i) {
        for (int step : {-1, 1}) {
          const int y = src[i] + step;
          if (y < 0 || y > static_cast<int>(a)) continue;
          std::copy(src.begin(), src.end(), w.begin());
          w[i] = static_cast<Letter>(y);
          if (!is_valid(w, a)) continue;
          nb.push_back(static_cast<VertexId>(rank(w, a)));
        }
      }
      std::sort(nb.begin(), nb.end());
      g.adjacency_.insert(g.adjacency_.end(), nb.begin(), nb.end());
      g.offsets_[v + 1] = g.adjacency_.size();
    }
    return g;
  }

  const RankSteps steps = rank_steps(a, n);
  const auto total = static_cast<std::int64_t>(count);

#pragma omp parallel for schedule(static)
  for (std::int64_t v = 0; v < total; ++v) {
    std::uint64_t d = 0;
    synthesize(g.words_[v], v, a, steps, [&](std::uint64_t) { ++d; });
    g.offsets_[v + 1] = d;
  }
  for (std::size_t v = 0; v < count; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.adjacency_.resize(g.offsets_[count]);

#pragma omp parallel for schedule(static)
  for (std::int64_t v = 0; v < total; ++v) {
    VertexId* out = g.adjacency_.data() + g.offsets_[v];
    VertexId* cursor = out;
    synthesize(g.words_[v], v, a, steps,
               [&](std::uint64_t u) { *cursor++ = static_cast<VertexId>(u); });
    std::sort(out, cursor);
  }
  return g;
}

bool MetallicCube::has_edge(VertexId u, VertexId v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

VertexId MetallicCube::index_of(std::span<const Letter> w) const {
  auto fail = [&]() {
    return VertexNotFound("not a vertex of the cube (a=" + std::to_string(a_) +
                          ", n=" + std::to_string(n_) + "): " + to_text(w, a_));
  };
  if (w.size() != n_) throw fail();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > a_) throw fail();
    if (w[i] == a_ && (i == 0 || w[i - 1] != 0)) throw fail();
  }
  return static_cast<VertexId>(rank(w, a_));
}

VertexId MetallicCube::index_of(const MetallicString& w) const {
  if (w.alphabet() != a_) {
    throw VertexNotFound("word over alphabet " + std::to_string(w.alphabet()) +
                         " looked up in a cube with a=" + std::to_string(a_));
  }
  return index_of(w.letters());
}

std::vector<std::pair<VertexId, VertexId>> MetallicCube::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < size(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

unsigned hbar(std::span<const Letter> u, std::span<const Letter> v) {
  if (u.size() != v.size()) {
    throw DomainError("hbar needs equal lengths, got " + std::to_string(u.size()) +
                      " and " + std::to_string(v.size()));
  }
  unsigned d = 0;
  for (std::size_t i = 0; i < u.size(); ++i) d += u[i] > v[i] ? u[i] - v[i] : v[i] - u[i];
  return d;
}

unsigned hbar(const MetallicString& u, const MetallicString& v) {
  if (u.alphabet() != v.alphabet()) throw DomainError("hbar needs a common alphabet");
  return hbar(u.letters(), v.letters());
}

bool are_adjacent(const MetallicCube& g, const MetallicString& u,
                  const MetallicString& v) {
  g.index_of(u);
  g.index_of(v);
  return hbar(u, v) == 1;
}

void bfs_distances(const MetallicCube& g, VertexId source,
                   std::vector<Distance>& dist, std::vector<VertexId>& queue) {
  if (source >= g.size()) throw VertexNotFound("BFS source out of range");
  std::fill(dist.begin(), dist.end(), kUnreached);
  std::size_t head = 0, tail = 0;
  dist[source] = 0;
  queue[tail++] = source;
  while (head < tail) {
    const VertexId u = queue[head++];
    const Distance du = dist[u];
    for (VertexId v : g.neighbors(u)) {
      if (dist[v] == kUnreached) {
        dist[v] = static_cast<Distance>(du + 1);
        queue[tail++] = v;
      }
    }
  }
  if (tail != g.size()) {
    throw InternalInconsistency("metallic cube is disconnected: BFS reached " +
                                std::to_string(tail) + " of " + std::to_string(g.size()));
  }
}

std::vector<Distance> bfs_distances(const MetallicCube& g, VertexId source) {
  std::vector<Distance> dist(g.size());
  std::vector<VertexId> queue(g.size());
  bfs_distances(g, source, dist, queue);
  return dist;
}

ExportFormat parse_export_format(std::string_view name) {
  if (name == "dot") return ExportFormat::dot;
  if (name == "json") return ExportFormat::json;
  if (name == "edgelist") return ExportFormat::edgelist;
  throw DomainError("unknown graph export format: " + std::string(name));
}

void write_graph(const MetallicCube& g, ExportFormat format, std::ostream& out) {
  switch (format) {
    case ExportFormat::dot:
      out << "graph {\n";
      for (VertexId v = 0; v < g.size(); ++v) out << "  \"" << g.label(v) << "\";\n";
      for (auto [u, v] : g.edges()) {
        out << "  \"" << g.label(u) << "\" -- \"" << g.label(v) << "\";\n";
      }
      out << "}\n";
      break;
    case ExportFormat::json: {
      nlohmann::ordered_json j;
      j["a"] = g.alphabet();
      j["n"] = g.length();
      auto& vs = j["vertices"] = nlohmann::ordered_json::array();
      for (VertexId v = 0; v < g.size(); ++v) vs.push_back(g.label(v));
      auto& es = j["edges"] = nlohmann::ordered_json::array();
      for (auto [u, v] : g.edges()) es.push_back({u, v});
      out << j.dump() << '\n';
      break;
    }
    case ExportFormat::edgelist:
      for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
      break;
  }
}

std::string export_graph(const MetallicCube& g, ExportFormat format) {
  std::ostringstream out;
  write_graph(g, format, out);
  return out.str();
}

}  // namespace metallic
