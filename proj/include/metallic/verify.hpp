#pragma once

// Formula-against-oracle checks for one (a, n), as run by `metallic verify`.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "metallic/graph.hpp"
#include "metallic/metrics.hpp"

namespace metallic {

enum class VerdictStatus { pass, fail, skip };

struct Verdict {
  std::string name;
  VerdictStatus status = VerdictStatus::fail;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t vertex_cap = kDefaultVertexCap;
  std::uint64_t allpairs_cap = kDefaultAllPairsCap;
  std::uint64_t seed = 1;
  std::size_t median_bfs_samples = 200;       // triples checked against BFS
  std::size_t median_closure_samples = 10000; // triples checked for closure only
};

/// Runs every check; all-pairs work above allpairs_cap is skipped, not failed.
/// Throws CapExceeded if the cube itself is above vertex_cap.
std::vector<Verdict> verify_all(unsigned a, unsigned n, const VerifyOptions& opt = {});

bool all_passed(const std::vector<Verdict>& vs);
/// "PASS name: detail" per line.
void write_verdicts(const std::vector<Verdict>& vs, std::ostream& out);

}  // namespace metallic
