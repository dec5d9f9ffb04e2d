#pragma once

// Eccentricities and the radius / diameter / center / periphery formulas.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "metallic/bigint.hpp"
#include "metallic/graph.hpp"

namespace metallic {

inline constexpr std::uint64_t kDefaultAllPairsCap = 25'000;

/// One BFS per source. The parallel kernel splits sources across threads.
std::vector<Distance> eccentricities_serial(const MetallicCube& g);
std::vector<Distance> eccentricities_parallel(const MetallicCube& g);

struct MetricReport {
  unsigned a = 0;
  unsigned n = 0;
  std::vector<Distance> eccentricities;  // by vertex rank
  unsigned radius = 0;
  unsigned diameter = 0;
  std::vector<MetallicString> center;
  std::vector<MetallicString> periphery;

  unsigned formula_radius = 0;
  unsigned formula_diameter = 0;
  std::vector<MetallicString> center_predicate_set;   // {v : center_membership}
  std::vector<MetallicString> periphery_formula_set;
  BigInt formula_center_size = 0;

  bool radius_ok = false;
  bool diameter_ok = false;
  bool center_ok = false;
  bool center_size_ok = false;
  bool periphery_ok = false;
  bool witness_ok = false;  // e(constant word floor(a/2)) == radius

  bool all_ok() const {
    return radius_ok && diameter_ok && center_ok && center_size_ok && periphery_ok && witness_ok;
  }
};

/// Throws CapExceeded when g has more than `cap` vertices.
MetricReport metric_report(const MetallicCube& g, std::uint64_t cap = kDefaultAllPairsCap);

void write_json(const MetricReport& r, bool with_checks, std::ostream& out);

/// floor(a/2) ceil(n/2) + ceil(a/2) floor(n/2)
unsigned radius_formula(unsigned a, unsigned n);
/// a n - 1, and 0 for the one-vertex cube n = 0.
unsigned diameter_formula(unsigned a, unsigned n);
/// The two ends of a diametral pair; one word when they coincide
/// (a = n = 1) and the empty word for n = 0.
std::vector<MetallicString> periphery_formula(unsigned a, unsigned n);

/// Center membership as we find it by BFS, with e = floor(a/2):
///  a odd, n odd: only the constant word e^n;
///  a odd, n even: e^n or one letter changed, to e+1 at an even position or
///    to e-1 at an odd position (1-based);
///  a even: (e-1)^j e^(n-j) for 0 <= j <= n.
bool center_membership(unsigned a, unsigned n, const MetallicString& v);
/// 1, n+1 (n/2+1 when a = 1), or n+1 for the three cases above.
BigInt center_size_formula(unsigned a, unsigned n);

/// The older reading for even a: letters only e-1 and e, and e-1 never
/// right after a maximal run of e's of odd length. Identical to
/// center_membership for odd a. Disagrees with BFS for even a and n >= 3.
bool odd_run_center_rule(unsigned a, unsigned n, const MetallicString& v);
/// 1 / n+1 / F_{n+2}. Disagrees with BFS for even a, n >= 3 and for a = 1,
/// n even.
BigInt center_size_remark(unsigned a, unsigned n);

/// A vertex at distance e(v) from v. Distances equal hbar, so an exact
/// two-state dynamic program over positions suffices; ties go to the
/// greedy choice of remark_rewrite.
MetallicString farthest_vertex(const MetallicString& v);

/// Letterwise greedy rewrite: letters above floor(a/2) become 0, letters
/// below become a-1 (a after an output 0), letters equal become a after an
/// output 0 and 0 otherwise. Farthest for odd a, not always for even a.
MetallicString remark_rewrite(const MetallicString& v);

}  // namespace metallic
