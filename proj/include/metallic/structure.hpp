#pragma once

// Decompositions, the projection onto Fibonacci cubes, the embedding into
// hypercubes, and medians.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "metallic/graph.hpp"

namespace metallic {

// ---- canonical decomposition ---------------------------------------------

/// parts[j] for j < a holds the vertices whose first block is the letter j;
/// parts[a] holds those starting with 0a.
struct CanonicalDecomposition {
  unsigned a = 0;
  unsigned n = 0;
  std::vector<std::vector<VertexId>> parts;
  std::uint64_t cross_edges = 0;  // edges joining two different parts
  bool sizes_ok = false;
  bool cross_edges_ok = false;    // cross_edges == s_n - s_{n-1}
  bool induced_checked = false;
  bool induced_ok = false;        // each part is a copy of the smaller cube via the suffix map

  bool valid() const { return sizes_ok && cross_edges_ok && (!induced_checked || induced_ok); }
};

/// Throws DomainError for n < 2.
CanonicalDecomposition canonical_decomposition(const MetallicCube& g,
                                               bool verify_induced = true);

// ---- grid decomposition ----------------------------------------------------

struct GridClass {
  std::vector<unsigned> block_starts;  // 0-based positions of the 0a blocks
  std::vector<VertexId> vertices;
  unsigned dimension = 0;              // n - 2 * block count
  bool size_ok = false;                // |vertices| == a^dimension
  bool grid_ok = false;                // coordinate map is an isomorphism onto P_a^dimension
};

struct GridDecomposition {
  unsigned a = 0;
  unsigned n = 0;
  std::vector<GridClass> classes;  // sorted by block_starts
  bool count_ok = false;           // F_{n+1} classes

  bool valid() const;
};

GridDecomposition grid_decomposition(const MetallicCube& g);

// ---- binary strings and Fibonacci cubes ------------------------------------

struct BinaryString {
  std::vector<std::uint8_t> bits;
  bool fibonacci_valid = true;  // no two consecutive ones

  BinaryString() = default;
  explicit BinaryString(std::vector<std::uint8_t> b);
  static BinaryString parse(std::string_view text);

  std::size_t size() const noexcept { return bits.size(); }
  std::string to_text() const;
  friend bool operator==(const BinaryString& x, const BinaryString& y) { return x.bits == y.bits; }
  friend auto operator<=>(const BinaryString& x, const BinaryString& y) { return x.bits <=> y.bits; }
};

std::size_t hamming(const BinaryString& x, const BinaryString& y);

/// Fibonacci cube on the length-m strings without "11", in lexicographic
/// order, edges at Hamming distance 1.
struct FibonacciCube {
  unsigned m = 0;
  std::vector<BinaryString> vertices;
  std::vector<std::vector<std::uint32_t>> adjacency;  // sorted

  std::size_t size() const { return vertices.size(); }
  std::size_t edge_count() const;
  /// Throws VertexNotFound.
  std::uint32_t index_of(const BinaryString& s) const;
};

FibonacciCube build_fibonacci_cube(unsigned m, std::uint64_t cap = kDefaultVertexCap);

/// Letters below a go to 0, the letter a to 1.
BinaryString rho_project(const MetallicString& w);
BinaryString rho_project(std::span<const Letter> w, unsigned a);

struct QuotientGraph {
  std::vector<BinaryString> vertices;                       // distinct rho images, sorted
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // u < v, sorted
  std::vector<std::uint32_t> class_of;                      // cube vertex -> quotient vertex
  std::vector<std::uint32_t> to_fibonacci;                  // quotient vertex -> vertex of Gamma_{n-1}
  std::size_t fibonacci_edges = 0;
  bool isomorphic = false;
};

/// The leading bit of every image is 0; dropping it gives the map onto
/// Gamma_{n-1}, which is checked edge by edge. Throws DomainError for n = 0.
QuotientGraph quotient_graph(const MetallicCube& g);

/// The cube with a = 1 and length m + 1 against Gamma_m, through dropping the
/// leading 0 of every word.
bool unary_cube_is_fibonacci_cube(unsigned m, std::uint64_t cap = kDefaultVertexCap);

// ---- embedding and medians -----------------------------------------------

/// Blockwise image in a Fibonacci string; block length 3 for a = 2 and
/// 2a - 2 for a >= 3, twice that for the block 0a. Throws Unsupported for
/// a = 1, where the words are Fibonacci strings already.
BinaryString sigma_embed(const MetallicString& w);
BinaryString sigma_embed(std::span<const Letter> w, unsigned a);

/// Inverse of sigma_embed; false when s is not an image. For a = 1 this is
/// the identity on valid words.
bool sigma_decode(const BinaryString& s, unsigned a, std::vector<Letter>& out);

/// Majority of the three images, pulled back. Throws InternalInconsistency if
/// the majority leaves the image set.
VertexId median(const MetallicCube& g, VertexId u, VertexId v, VertexId w);
MetallicString median(const MetallicCube& g, const MetallicString& u,
                      const MetallicString& v, const MetallicString& w);

/// Every vertex on shortest paths between each pair of u, v, w, from three
/// BFS runs.
std::vector<VertexId> medians_by_distance(const MetallicCube& g, VertexId u,
                                          VertexId v, VertexId w);

// ---- Pell graph comparison ---------------------------------------------

/// Max degree of Munarini's Pell graph on length-n ternary strings (2s only
/// in blocks 22; moves 0<->1 and 11<->22). Brute force, small n only.
unsigned pell_graph_max_degree(unsigned n);
unsigned max_degree(const MetallicCube& g);

// ---- reports ---------------------------------------------------------------

nlohmann::ordered_json report_json(const CanonicalDecomposition& d);
nlohmann::ordered_json report_json(const MetallicCube& g, const GridDecomposition& d);
nlohmann::ordered_json report_json(const QuotientGraph& q);

}  // namespace metallic
