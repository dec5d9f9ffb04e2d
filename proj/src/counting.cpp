#include "metallic/counting.hpp"

#include <ostream>

#include "metallic/error.hpp"
#include "metallic/graph.hpp"
#include "metallic/strings.hpp"

namespace metallic {
namespace {

void trim(Polynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Polynomial add(Polynomial x, const Polynomial& y) {
  if (x.size() < y.size()) x.resize(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) x[i] += y[i];
  trim(x);
  return x;
}

Polynomial mul(const Polynomial& x, const Polynomial& y) {
  if (x.empty() || y.empty()) return {};
  Polynomial r(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
  }
  trim(r);
  return r;
}

Polynomial scale(Polynomial p, const BigInt& c) {
  for (auto& x : p) x *= c;
  trim(p);
  return p;
}

// Signed term (-1)^{n+k} ceil((n+k)/2) C(floor((n+k)/2), k).
BigInt edge_term(unsigned n, unsigned k) {
  const std::int64_t m = n + k;
  BigInt t = BigInt((m + 1) / 2) * binomial(m / 2, k);
  return m % 2 ? BigInt(-t) : t;
}

}  // namespace

BigInt vertex_count(unsigned a, unsigned n) {
  check_alphabet(a);
  BigInt prev = 1, cur = a;  // s_0, s_1
  if (n == 0) return prev;
  for (unsigned m = 2; m <= n; ++m) {
    BigInt next = a * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt vertex_count_closed(unsigned a, unsigned n) {
  check_alphabet(a);
  BigInt s = 0;
  for (unsigned k = 0; 2 * k <= n; ++k) s += binomial(n - k, k) * ipow(a, n - 2 * k);
  return s;
}

BigInt edge_count_formula(unsigned a, unsigned n) {
  check_alphabet(a);
  BigInt e = 0;
  BigInt power = 1;
  for (unsigned k = 0; k <= n; ++k) {
    e += edge_term(n, k) * power;
    power *= a;
  }
  return e;
}

BigInt edge_count_recurrence(unsigned a, unsigned n) {
  check_alphabet(a);
  if (n == 0) return 0;
  BigInt e_prev = 0, e_cur = a - 1;  // e_0, e_1
  BigInt s_prev = 1, s_cur = a;      // s_0, s_1
  for (unsigned m = 2; m <= n; ++m) {
    BigInt s_next = a * s_cur + s_prev;
    BigInt e_next = a * e_cur + e_prev + s_next - s_cur;
    s_prev = std::move(s_cur);
    s_cur = std::move(s_next);
    e_prev = std::move(e_cur);
    e_cur = std::move(e_next);
  }
  return e_cur;
}

Polynomial edge_polynomial(unsigned n) {
  Polynomial p(n + 1);
  for (unsigned k = 0; k <= n; ++k) p[k] = edge_term(n, k);
  trim(p);
  return p;
}

Polynomial edge_polynomial_recurrence(unsigned n) {
  const Polynomial a_poly{0, 1};
  if (n == 0) return {};
  Polynomial s_prev{1}, s_cur = a_poly;
  Polynomial e_prev{}, e_cur{-1, 1};
  for (unsigned m = 2; m <= n; ++m) {
    Polynomial s_next = add(mul(a_poly, s_cur), s_prev);
    Polynomial e_next = add(add(mul(a_poly, e_cur), e_prev), add(s_next, scale(s_cur, -1)));
    s_prev = std::move(s_cur);
    s_cur = std::move(s_next);
    e_prev = std::move(e_cur);
    e_cur = std::move(e_next);
  }
  return e_cur;
}

BigInt evaluate(const Polynomial& p, const BigInt& x) {
  BigInt r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

std::string format_polynomial(const Polynomial& p, char var) {
  std::string out;
  for (std::size_t i = p.size(); i-- > 0;) {
    const BigInt& c = p[i];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (mag != 1 || i == 0) out += mag.str();
    if (i >= 1) out += var;
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

FibonacciIdentity fibonacci_identity_check(unsigned n) {
  FibonacciIdentity r;
  for (unsigned k = 0; k <= n; ++k) r.lhs += edge_term(n, k);
  for (unsigned k = 0; k <= n; ++k) r.rhs += fibonacci(k) * fibonacci(n - k);
  return r;
}

const char* to_string(DegreeMethod m) {
  switch (m) {
    case DegreeMethod::brute: return "brute";
    case DegreeMethod::closed: return "closed";
    case DegreeMethod::gf: return "gf";
  }
  return "?";
}

BigInt DegreeTable::total() const {
  BigInt t = 0;
  for (const auto& [k, c] : counts) t += c;
  return t;
}

BigInt DegreeTable::weighted_total() const {
  BigInt t = 0;
  for (const auto& [k, c] : counts) t += c * k;
  return t;
}

BigInt DegreeTable::at(unsigned k) const {
  auto it = counts.find(k);
  return it == counts.end() ? BigInt(0) : it->second;
}

DegreeTable degree_distribution_brute(const MetallicCube& g) {
  std::map<unsigned, std::uint64_t> tally;
  for (VertexId v = 0; v < g.size(); ++v) ++tally[static_cast<unsigned>(g.degree(v))];
  DegreeTable t{g.alphabet(), g.length(), {}, DegreeMethod::brute};
  for (auto [k, c] : tally) t.counts[k] = c;
  return t;
}

BigInt q_value(unsigned a, unsigned n, unsigned l, unsigned h, unsigned k) {
  if (a < 2) throw DomainError("q_value needs a >= 2");
  if (2 * h + 2 * l + k > n) throw DomainError("q_value needs 2h + 2l + k <= n");
  const unsigned middle = n - 2 * h - 2 * l - k;
  return binomial(n - h - l, h) * binomial(n - 2 * h - l, l) *
         binomial(n - 2 * h - 2 * l, k) * ipow(2, k) * ipow(a - 2, middle);
}

BigInt p_value(unsigned a, unsigned n, unsigned l, unsigned h, unsigned k) {
  if (a < 2) throw DomainError("p_value needs a >= 2");
  if (2 * h + 2 * l + k > n) throw DomainError("p_value needs 2h + 2l + k <= n");
  // q also counts words in which some adjacent 0,(a-1) pairs were tiled as
  // two single letters. Sieve those out over the number j of such pairs.
  BigInt p = 0;
  for (unsigned j = 0; 2 * j <= k; ++j) {
    BigInt term = binomial(h + j, j) * q_value(a, n, l, h + j, k - 2 * j);
    if (j % 2) p -= term; else p += term;
  }
  return p;
}

DegreeTable degree_distribution_closed(unsigned a, unsigned n) {
  check_alphabet(a);
  if (a == 1) {
    throw Unsupported("closed degree distribution needs a >= 2; use the brute-force tally for a = 1");
  }
  DegreeTable t{a, n, {}, DegreeMethod::closed};
  for (unsigned l = 0; 2 * l <= n; ++l) {
    for (unsigned h = 0; 2 * l + 2 * h <= n; ++h) {
      for (unsigned k = 0; 2 * l + 2 * h + k <= n; ++k) {
        BigInt p = p_value(a, n, l, h, k);
        if (p < 0) {
          throw InternalInconsistency("negative vertex count from inclusion-exclusion");
        }
        if (p == 0) continue;
        t.counts[2 * n - 3 * l - h - k] += p;
      }
    }
  }
  return t;
}

SeriesTable degree_gf(unsigned a, unsigned n_max) {
  check_alphabet(a);
  if (a < 2) throw DomainError("degree generating function needs a >= 2");
  const Polynomial one_step{0, 2, BigInt(a) - 2};
  const Polynomial two_step{0, 1, -1, 1};
  SeriesTable t;
  t.n_max = n_max;
  t.k_max = 2 * n_max;
  std::vector<Polynomial> rows;
  rows.push_back({1});
  for (unsigned m = 1; m <= n_max; ++m) {
    Polynomial r = mul(one_step, rows[m - 1]);
    if (m >= 2) r = add(std::move(r), mul(two_step, rows[m - 2]));
    rows.push_back(std::move(r));
  }
  for (auto& r : rows) {
    r.resize(t.k_max + 1);
    t.c.push_back(std::move(r));
  }
  return t;
}

DegreeTable degree_distribution_gf(unsigned a, unsigned n) {
  const SeriesTable s = degree_gf(a, n);
  DegreeTable t{a, n, {}, DegreeMethod::gf};
  for (unsigned k = 0; k <= s.k_max; ++k) {
    if (s.at(n, k) != 0) t.counts[k] = s.at(n, k);
  }
  return t;
}

void write_vertex_table_csv(unsigned max_a, unsigned max_n, std::ostream& out) {
  out << 'a';
  for (unsigned n = 1; n <= max_n; ++n) out << ',' << n;
  out << '\n';
  for (unsigned a = 1; a <= max_a; ++a) {
    out << a;
    for (unsigned n = 1; n <= max_n; ++n) out << ',' << vertex_count(a, n);
    out << '\n';
  }
}

void write_edge_table_csv(unsigned max_a, unsigned max_n, std::ostream& out) {
  out << "n,polynomial";
  for (unsigned i = 0; i <= max_n; ++i) out << ",c" << i;
  for (unsigned a = 1; a <= max_a; ++a) out << ",a=" << a;
  out << '\n';
  for (unsigned n = 1; n <= max_n; ++n) {
    Polynomial p = edge_polynomial(n);
    out << n << ',' << format_polynomial(p);
    p.resize(max_n + 1);
    for (const auto& c : p) out << ',' << c;
    for (unsigned a = 1; a <= max_a; ++a) out << ',' << edge_count_formula(a, n);
    out << '\n';
  }
}

void write_degree_table_csv(unsigned max_a, unsigned max_n, std::ostream& out,
                            std::uint64_t vertex_cap) {
  out << "a,n";
  for (unsigned k = 0; k <= 2 * max_n; ++k) out << ",k" << k;
  out << '\n';
  for (unsigned a = 1; a <= max_a; ++a) {
    for (unsigned n = 1; n <= max_n; ++n) {
      const DegreeTable t = a == 1 ? degree_distribution_brute(MetallicCube::build(1, n, vertex_cap))
                                   : degree_distribution_gf(a, n);
      out << a << ',' << n;
      for (unsigned k = 0; k <= 2 * max_n; ++k) out << ',' << t.at(k);
      out << '\n';
    }
  }
}

}  // namespace metallic
