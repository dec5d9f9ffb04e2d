#pragma once

// Exact enumeration of vertices, edges and degrees of metallic cubes.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "metallic/bigint.hpp"

namespace metallic {

class MetallicCube;

/// s_n = a s_{n-1} + s_{n-2}, s_0 = 1, s_1 = a.
BigInt vertex_count(unsigned a, unsigned n);
/// sum_k C(n-k, k) a^{n-2k}
BigInt vertex_count_closed(unsigned a, unsigned n);

/// sum_{k=0}^{n} (-1)^{n+k} ceil((n+k)/2) C(floor((n+k)/2), k) a^k
BigInt edge_count_formula(unsigned a, unsigned n);
/// e_n = a e_{n-1} + e_{n-2} + s_n - s_{n-1}, e_0 = 0, e_1 = a - 1.
BigInt edge_count_recurrence(unsigned a, unsigned n);

/// Polynomials in a, coefficient of a^i at index i.
using Polynomial = std::vector<BigInt>;

/// Coefficients read off the closed edge formula.
Polynomial edge_polynomial(unsigned n);
/// The edge recurrence carried out in Z[a].
Polynomial edge_polynomial_recurrence(unsigned n);
BigInt evaluate(const Polynomial& p, const BigInt& x);
/// e.g. "3a^3-3a^2+4a-1"
std::string format_polynomial(const Polynomial& p, char var = 'a');

struct FibonacciIdentity {
  BigInt lhs;  // the edge formula at a = 1
  BigInt rhs;  // sum_k F_k F_{n-k}
};
FibonacciIdentity fibonacci_identity_check(unsigned n);

enum class DegreeMethod { brute, closed, gf };
const char* to_string(DegreeMethod m);

struct DegreeTable {
  unsigned a = 0;
  unsigned n = 0;
  std::map<unsigned, BigInt> counts;  // degree -> vertices; zeros omitted
  DegreeMethod method = DegreeMethod::brute;

  BigInt total() const;
  BigInt weighted_total() const;  // sum k * counts[k] = 2|E|
  BigInt at(unsigned k) const;
  bool same_counts(const DegreeTable& other) const { return counts == other.counts; }
};

DegreeTable degree_distribution_brute(const MetallicCube& g);

/// Arrangements of l blocks 0a, h blocks 0(a-1), k single letters from
/// {0, a-1} and n-2h-2l-k letters from 1..a-2. Needs a >= 2 (a = 2 leaves
/// no middle letters, so only k = n-2h-2l survives) and 2h+2l+k <= n;
/// DomainError otherwise.
BigInt q_value(unsigned a, unsigned n, unsigned l, unsigned h, unsigned k);
/// Vertices with exactly l blocks 0a, h blocks 0(a-1) and k other letters
/// equal to 0 or a-1. These have degree 2n - 3l - h - k.
BigInt p_value(unsigned a, unsigned n, unsigned l, unsigned h, unsigned k);

/// Throws Unsupported for a = 1.
DegreeTable degree_distribution_closed(unsigned a, unsigned n);

/// Coefficients of 1 / (1 - (2y + (a-2)y^2) x - (y - y^2 + y^3) x^2).
struct SeriesTable {
  unsigned n_max = 0;
  unsigned k_max = 0;
  std::vector<std::vector<BigInt>> c;  // c[n][k], k <= k_max

  const BigInt& at(unsigned n, unsigned k) const { return c.at(n).at(k); }
};

/// Throws DomainError for a < 2.
SeriesTable degree_gf(unsigned a, unsigned n_max);
DegreeTable degree_distribution_gf(unsigned a, unsigned n);

/// CSV: header "a,1,...,max_n", one row per a.
void write_vertex_table_csv(unsigned max_a, unsigned max_n, std::ostream& out);
/// CSV: n, polynomial text, coefficients of a^0..a^max_n, then e_n at
/// a = 1..max_a.
void write_edge_table_csv(unsigned max_a, unsigned max_n, std::ostream& out);
/// CSV: a, n, Delta_{n,k} for k = 0..2 max_n. Rows for a >= 2 come from the
/// series; a = 1 needs the built graph, so it is tallied by brute force under
/// vertex_cap.
void write_degree_table_csv(unsigned max_a, unsigned max_n, std::ostream& out,
                            std::uint64_t vertex_cap);

}  // namespace metallic
