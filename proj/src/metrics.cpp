#include "metallic/metrics.hpp"

#include <algorithm>
#include <array>
#include <ostream>

#include <json.hpp>

#include "metallic/error.hpp"

namespace metallic {
namespace {

Distance max_of(const std::vector<Distance>& d) {
  return *std::max_element(d.begin(), d.end());
}

std::vector<MetallicString> members(const MetallicCube& g, auto&& pred) {
  std::vector<MetallicString> out;
  for (VertexId v = 0; v < g.size(); ++v) {
    MetallicString w = g.vertex(v);
    if (pred(v, w)) out.push_back(std::move(w));
  }
  return out;
}

std::vector<MetallicString> constant_word(unsigned a, unsigned n, unsigned letter) {
  return {MetallicString(std::vector<Letter>(n, static_cast<Letter>(letter)), a)};
}

// U-type rule for odd a and even n.
bool near_constant(unsigned a, const MetallicString& v) {
  const unsigned e = a / 2;
  unsigned changed = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == e) continue;
    const bool even_pos = (i + 1) % 2 == 0;
    if (v[i] == e + 1 && even_pos) ++changed;
    else if (e > 0 && v[i] == e - 1 && !even_pos) ++changed;
    else return false;
  }
  return changed <= 1;
}

}  // namespace

std::vector<Distance> eccentricities_serial(const MetallicCube& g) {
  std::vector<Distance> ecc(g.size());
  std::vector<Distance> dist(g.size());
  std::vector<VertexId> queue(g.size());
  for (VertexId s = 0; s < g.size(); ++s) {
    bfs_distances(g, s, dist, queue);
    ecc[s] = max_of(dist);
  }
  return ecc;
}

std::vector<Distance> eccentricities_parallel(const MetallicCube& g) {
  const auto count = static_cast<std::int64_t>(g.size());
  std::vector<Distance> ecc(g.size());
#pragma omp parallel
  {
    std::vector<Distance> dist(g.size());
    std::vector<VertexId> queue(g.size());
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t s = 0; s < count; ++s) {
      bfs_distances(g, static_cast<VertexId>(s), dist, queue);
      ecc[s] = max_of(dist);
    }
  }
  return ecc;
}

unsigned radius_formula(unsigned a, unsigned n) {
  return (a / 2) * ((n + 1) / 2) + ((a + 1) / 2) * (n / 2);
}

unsigned diameter_formula(unsigned a, unsigned n) { return n == 0 ? 0 : a * n - 1; }

std::vector<MetallicString> periphery_formula(unsigned a, unsigned n) {
  check_alphabet(a);
  const auto za = static_cast<Letter>(a), top = static_cast<Letter>(a - 1);
  std::vector<Letter> x, y;
  if (n % 2 == 0) {
    for (unsigned i = 0; i < n / 2; ++i) x.insert(x.end(), {0, za});
    if (n > 0) {
      y.push_back(top);
      for (unsigned i = 0; i + 1 < n / 2; ++i) y.insert(y.end(), {0, za});
      y.push_back(0);
    }
  } else {
    for (unsigned i = 0; i < n / 2; ++i) x.insert(x.end(), {0, za});
    x.push_back(0);
    y.push_back(top);
    for (unsigned i = 0; i < n / 2; ++i) y.insert(y.end(), {0, za});
  }
  std::vector<MetallicString> out{MetallicString(std::move(x), a), MetallicString(std::move(y), a)};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool center_membership(unsigned a, unsigned n, const MetallicString& v) {
  if (v.alphabet() != a || v.size() != n) throw DomainError("center_membership: word does not match (a, n)");
  const unsigned e = a / 2;
  if (a % 2 == 1) {
    if (n % 2 == 1) return std::all_of(v.letters().begin(), v.letters().end(), [&](Letter x) { return x == e; });
    return near_constant(a, v);
  }
  // a run of e-1 followed by a run of e
  std::size_t i = 0;
  while (i < n && v[i] == e - 1) ++i;
  while (i < n && v[i] == e) ++i;
  return i == n;
}

BigInt center_size_formula(unsigned a, unsigned n) {
  if (a % 2 == 1 && n % 2 == 1) return 1;
  if (a == 1) return n / 2 + 1;
  return n + 1;
}

bool odd_run_center_rule(unsigned a, unsigned n, const MetallicString& v) {
  if (a % 2 == 1) return center_membership(a, n, v);
  if (v.alphabet() != a || v.size() != n) throw DomainError("odd_run_center_rule: word does not match (a, n)");
  const unsigned e = a / 2;
  std::size_t run = 0;  // length of the current maximal run of e
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == e) {
      ++run;
    } else if (v[i] == e - 1) {
      if (run % 2 == 1) return false;
      run = 0;
    } else {
      return false;
    }
  }
  return true;
}

BigInt center_size_remark(unsigned a, unsigned n) {
  if (a % 2 == 0) return fibonacci(n + 2);
  return n % 2 == 1 ? BigInt(1) : BigInt(n + 1);
}

MetallicString remark_rewrite(const MetallicString& v) {
  const unsigned a = v.alphabet(), e = a / 2;
  std::vector<Letter> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const bool after_zero = i > 0 && out[i - 1] == 0;
    if (v[i] > e) out[i] = 0;
    else if (v[i] < e) out[i] = static_cast<Letter>(after_zero ? a : a - 1);
    else out[i] = static_cast<Letter>(after_zero ? a : 0);
  }
  return MetallicString(std::move(out), a);
}

MetallicString farthest_vertex(const MetallicString& v) {
  const unsigned a = v.alphabet();
  const std::size_t n = v.size();
  auto gain = [&](std::size_t i, unsigned y) { return y > v[i] ? y - v[i] : v[i] - y; };
  // best[i][z]: largest distance reachable on positions i.. when the output
  // letter at i-1 is 0 (z = 1) or not (z = 0). Only 0, a-1 and a can be
  // optimal: any other letter is dominated by 0 or a-1, and 0 also unlocks a.
  std::vector<std::array<unsigned, 2>> best(n + 1, {0, 0});
  auto options = [&](bool z) {
    std::vector<unsigned> ys{0, a - 1};
    if (z) ys.push_back(a);
    return ys;
  };
  for (std::size_t i = n; i-- > 0;) {
    for (int z = 0; z < 2; ++z) {
      unsigned b = 0;
      for (unsigned y : options(z)) b = std::max(b, gain(i, y) + best[i + 1][y == 0]);
      best[i][z] = b;
    }
  }
  const MetallicString greedy = remark_rewrite(v);
  std::vector<Letter> out(n);
  bool z = false;
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned target = best[i][z];
    auto hits = [&](unsigned y) {
      return (y != a || z) && gain(i, y) + best[i + 1][y == 0] == target;
    };
    unsigned pick = greedy[i];
    if (!hits(pick)) {
      for (unsigned y : options(z)) {
        if (hits(y)) {
          pick = y;
          break;
        }
      }
    }
    out[i] = static_cast<Letter>(pick);
    z = pick == 0;
  }
  return MetallicString(std::move(out), a);
}

MetricReport metric_report(const MetallicCube& g, std::uint64_t cap) {
  if (g.size() > cap) {
    throw CapExceeded("all-pairs eccentricities on " + std::to_string(g.size()) +
                      " vertices exceed the cap of " + std::to_string(cap));
  }
  const unsigned a = g.alphabet(), n = g.length();
  MetricReport r;
  r.a = a;
  r.n = n;
  r.eccentricities = eccentricities_parallel(g);
  r.radius = *std::min_element(r.eccentricities.begin(), r.eccentricities.end());
  r.diameter = max_of(r.eccentricities);
  r.center = members(g, [&](VertexId v, const MetallicString&) { return r.eccentricities[v] == r.radius; });
  r.periphery = members(g, [&](VertexId v, const MetallicString&) { return r.eccentricities[v] == r.diameter; });

  r.formula_radius = radius_formula(a, n);
  r.formula_diameter = diameter_formula(a, n);
  r.center_predicate_set = members(g, [&](VertexId, const MetallicString& w) { return center_membership(a, n, w); });
  r.periphery_formula_set = periphery_formula(a, n);
  r.formula_center_size = center_size_formula(a, n);

  r.radius_ok = r.radius == r.formula_radius;
  r.diameter_ok = r.diameter == r.formula_diameter;
  r.center_ok = r.center == r.center_predicate_set;
  r.center_size_ok = BigInt(r.center.size()) == r.formula_center_size;
  r.periphery_ok = r.periphery == r.periphery_formula_set;
  const VertexId witness = g.index_of(constant_word(a, n, a / 2).front());
  r.witness_ok = r.eccentricities[witness] == r.radius;
  return r;
}

void write_json(const MetricReport& r, bool with_checks, std::ostream& out) {
  auto labels = [](const std::vector<MetallicString>& ws) {
    std::vector<std::string> t;
    for (const auto& w : ws) t.push_back(w.to_text());
    return t;
  };
  nlohmann::ordered_json j;
  j["a"] = r.a;
  j["n"] = r.n;
  j["eccentricities"] = r.eccentricities;
  j["radius"] = r.radius;
  j["diameter"] = r.diameter;
  j["center"] = labels(r.center);
  j["periphery"] = labels(r.periphery);
  if (with_checks) {
    j["formula_radius"] = r.formula_radius;
    j["formula_diameter"] = r.formula_diameter;
    j["center_predicate_set"] = labels(r.center_predicate_set);
    j["periphery_formula_set"] = labels(r.periphery_formula_set);
    j["formula_center_size"] = r.formula_center_size.str();
    j["verdicts"] = {{"radius", r.radius_ok},   {"diameter", r.diameter_ok},
                     {"center", r.center_ok},   {"center_size", r.center_size_ok},
                     {"periphery", r.periphery_ok}, {"witness", r.witness_ok}};
    j["ok"] = r.all_ok();
  }
  out << j.dump(2) << '\n';
}

}  // namespace metallic
