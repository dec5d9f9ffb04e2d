#pragma once

// Hamiltonian paths for every (a, n), Hamiltonian cycles (n odd) and
// near-cycles (n even) for even a, and matchings read off the paths.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "metallic/graph.hpp"

namespace metallic {

enum class WitnessKind { path, cycle, near_cycle };
const char* to_string(WitnessKind k);

struct PathWitness {
  unsigned a = 0;
  unsigned n = 0;
  WitnessKind kind = WitnessKind::path;
  std::vector<VertexId> sequence;   // vertex ranks
  std::optional<VertexId> missed;   // near_cycle only
  bool valid = false;
};

struct WitnessVerdict {
  bool valid = false;
  std::string violation;                   // empty when valid
  std::size_t position = static_cast<std::size_t>(-1);  // index of the offending entry, if any
};

/// Adjacency of consecutive entries (and last -> first for the cycle kinds)
/// via hbar on the words, plus exact coverage for the kind. Does not trust
/// the witness' own `valid` or `missed` beyond checking them.
WitnessVerdict validate_witness(const MetallicCube& g, const PathWitness& w);

/// Throws ConstructionError carrying the first violation if the result does
/// not validate.
PathWitness hamiltonian_path(unsigned a, unsigned n, std::uint64_t cap = kDefaultVertexCap);
PathWitness hamiltonian_path(const MetallicCube& g);

/// Unsupported for odd a, DomainError for n < 2.
PathWitness hamiltonian_cycle(unsigned a, unsigned n, std::uint64_t cap = kDefaultVertexCap);
PathWitness hamiltonian_cycle(const MetallicCube& g);

/// Ends of hamiltonian_path: (0a)^(n/2) or (0a)^((n-1)/2) 0 to (a-1)^n for
/// even a; prefixes of (0 a (a-1))* to prefixes of ((a-1) 0 a)* for odd a.
std::pair<MetallicString, MetallicString> path_endpoints(unsigned a, unsigned n);

using Matching = std::vector<std::pair<VertexId, VertexId>>;

/// Pairs entries 0-1, 2-3, ... of the Hamiltonian path.
Matching matching_from_path(const PathWitness& path);
Matching matching_from_path(unsigned a, unsigned n, std::uint64_t cap = kDefaultVertexCap);

struct MatchingVerdict {
  bool edges_ok = false;   // every pair is an edge
  bool disjoint = false;
  std::size_t covered = 0;
  bool perfect = false;    // covers every vertex
};
MatchingVerdict check_matching(const MetallicCube& g, const Matching& m);

/// One vertex per line in textual form.
void write_witness(const MetallicCube& g, const PathWitness& w, std::ostream& out);
/// Reads the same format. Blank lines and lines starting with '#' are
/// skipped, except "# kind=path|cycle|near_cycle", which overrides `kind`.
/// Throws VertexNotFound / DomainError on unparsable lines.
PathWitness read_witness(const MetallicCube& g, std::istream& in, WitnessKind kind);

}  // namespace metallic
