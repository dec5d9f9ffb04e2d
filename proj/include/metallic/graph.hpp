#pragma once

// The metallic cube as an immutable CSR graph over the lexicographic vertex
// order. Vertex ids are ranks.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "metallic/strings.hpp"

namespace metallic {

using VertexId = std::uint32_t;
using Distance = std::uint16_t;

inline constexpr Distance kUnreached = 0xFFFF;

enum class BuildKernel { serial, parallel };

class MetallicCube {
 public:
  /// Edges come from neighbor synthesis: change one letter by +-1 and keep
  /// the result if it is still a valid word.
  static MetallicCube build(unsigned a, unsigned n,
                            std::uint64_t cap = kDefaultVertexCap,
                            BuildKernel kernel = BuildKernel::parallel);

  unsigned alphabet() const noexcept { return a_; }
  unsigned length() const noexcept { return n_; }
  std::size_t size() const noexcept { return words_.size(); }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

  std::span<const Letter> word(VertexId v) const { return words_[v]; }
  MetallicString vertex(VertexId v) const { return words_.at(v); }
  std::string label(VertexId v) const { return to_text(words_[v], a_); }
  const WordList& words() const noexcept { return words_; }

  /// Sorted ascending.
  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(VertexId u, VertexId v) const;

  /// Throws VertexNotFound when w is not a vertex of this cube.
  VertexId index_of(const MetallicString& w) const;
  VertexId index_of(std::span<const Letter> w) const;

  /// All edges (u, v) with u < v, sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  friend bool operator==(const MetallicCube& x, const MetallicCube& y) {
    return x.a_ == y.a_ && x.n_ == y.n_ && x.offsets_ == y.offsets_ &&
           x.adjacency_ == y.adjacency_;
  }

 private:
  MetallicCube(unsigned a, unsigned n, WordList words)
      : a_(a), n_(n), words_(std::move(words)) {}

  unsigned a_;
  unsigned n_;
  WordList words_;
  std::vector<std::uint64_t> offsets_;
  std::vector<VertexId> adjacency_;
};

/// Modified Hamming distance: sum of letterwise absolute differences.
/// Throws DomainError on length or alphabet mismatch.
unsigned hbar(const MetallicString& u, const MetallicString& v);
unsigned hbar(std::span<const Letter> u, std::span<const Letter> v);

/// Throws VertexNotFound unless both words are vertices of g.
bool are_adjacent(const MetallicCube& g, const MetallicString& u,
                  const MetallicString& v);

/// Exact distances from source. The cube is connected; an unreached vertex
/// raises InternalInconsistency.
std::vector<Distance> bfs_distances(const MetallicCube& g, VertexId source);

/// Same, reusing caller-provided buffers (sized g.size()).
void bfs_distances(const MetallicCube& g, VertexId source,
                   std::vector<Distance>& dist, std::vector<VertexId>& queue);

enum class ExportFormat { dot, json, edgelist };

/// Throws DomainError for anything but "dot", "json", "edgelist".
ExportFormat parse_export_format(std::string_view name);

void write_graph(const MetallicCube& g, ExportFormat format, std::ostream& out);
std::string export_graph(const MetallicCube& g, ExportFormat format);

}  // namespace metallic
