#include "metallic/verify.hpp"

#include <functional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "metallic/counting.hpp"
#include "metallic/error.hpp"
#include "metallic/hamilton.hpp"
#include "metallic/structure.hpp"

namespace metallic {
namespace {

struct Suite {
  std::vector<Verdict> out;

  // body returns the detail text and sets ok.
  void run(const std::string& name, const std::function<std::string(bool&)>& body) {
    Verdict v{name, VerdictStatus::fail, {}};
    try {
      bool ok = false;
      v.detail = body(ok);
      v.status = ok ? VerdictStatus::pass : VerdictStatus::fail;
    } catch (const std::exception& e) {
      v.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(v));
  }
  void skip(const std::string& name, std::string why) {
    out.push_back({name, VerdictStatus::skip, std::move(why)});
  }
};

template <class T>
std::string str(const T& x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

}  // namespace

std::vector<Verdict> verify_all(unsigned a, unsigned n, const VerifyOptions& opt) {
  check_alphabet(a);
  const MetallicCube g = MetallicCube::build(a, n, opt.vertex_cap);
  const bool allpairs = g.size() <= opt.allpairs_cap;
  const std::string too_big = std::to_string(g.size()) + " vertices exceed the all-pairs cap of " +
                              std::to_string(opt.allpairs_cap);
  Suite s;

  s.run("vertex counts", [&](bool& ok) {
    const BigInt r = vertex_count(a, n), c = vertex_count_closed(a, n);
    ok = r == c && r == g.size();
    return "recurrence " + str(r) + ", closed " + str(c) + ", enumerated " + std::to_string(g.size());
  });

  s.run("enumeration order and ranks", [&](bool& ok) {
    ok = true;
    for (VertexId v = 0; v < g.size() && ok; ++v) {
      auto w = g.word(v);
      ok = is_valid(w, a) && rank(w, a) == v && unrank(a, n, v).letters().size() == n;
      if (ok && v > 0) {
        auto p = g.word(v - 1);
        ok = std::lexicographical_compare(p.begin(), p.end(), w.begin(), w.end());
      }
    }
    return std::string("strictly increasing, valid, rank = index");
  });

  s.run("edge counts", [&](bool& ok) {
    const BigInt f = edge_count_formula(a, n), r = edge_count_recurrence(a, n);
    ok = f == r && f == g.edge_count();
    return "formula " + str(f) + ", recurrence " + str(r) + ", built " + std::to_string(g.edge_count());
  });

  const DegreeTable brute = degree_distribution_brute(g);
  s.run("degree table sums", [&](bool& ok) {
    ok = brute.total() == g.size() && brute.weighted_total() == 2 * edge_count_formula(a, n);
    return "rows sum to s and 2e";
  });
  if (a >= 2) {
    s.run("degree table closed form", [&](bool& ok) {
      ok = degree_distribution_closed(a, n).same_counts(brute);
      return std::string("against the brute-force tally");
    });
    s.run("degree table generating function", [&](bool& ok) {
      ok = degree_distribution_gf(a, n).same_counts(brute);
      return std::string("against the brute-force tally");
    });
  } else {
    s.skip("degree table closed form", "a = 1 has no closed form; brute force only");
    s.skip("degree table generating function", "a = 1 has no generating function here");
  }

  s.run("bipartite letter-sum coloring", [&](bool& ok) {
    ok = true;
    auto parity = [&](VertexId v) {
      unsigned t = 0;
      for (Letter x : g.word(v)) t += x;
      return t % 2;
    };
    for (auto [u, v] : g.edges()) ok = ok && parity(u) != parity(v);
    return std::string("every edge joins opposite parities");
  });

  s.run("connected", [&](bool& ok) {
    bfs_distances(g, 0);
    ok = true;
    return std::string("BFS from vertex 0 reaches everything");
  });

  if (n >= 2) {
    s.run("canonical decomposition", [&](bool& ok) {
      const auto d = canonical_decomposition(g, true);
      ok = d.valid();
      return "cross edges " + std::to_string(d.cross_edges) + ", parts induce smaller cubes";
    });
  } else {
    s.skip("canonical decomposition", "needs n >= 2");
  }

  s.run("grid decomposition", [&](bool& ok) {
    const auto d = grid_decomposition(g);
    ok = d.valid();
    return std::to_string(d.classes.size()) + " grid classes";
  });

  if (n >= 1) {
    s.run("quotient is a Fibonacci cube", [&](bool& ok) {
      const auto q = quotient_graph(g);
      ok = q.isomorphic;
      return std::to_string(q.vertices.size()) + " classes, " + std::to_string(q.edges.size()) + " edges";
    });
  } else {
    s.skip("quotient is a Fibonacci cube", "needs n >= 1");
  }

  if (a >= 2) {
    s.run("sigma embedding", [&](bool& ok) {
      std::set<std::vector<std::uint8_t>> images;
      bool fib = true, faithful = true;
      std::uint64_t image_pairs = 0;
      for (VertexId v = 0; v < g.size(); ++v) {
        BinaryString x = sigma_embed(g.word(v), a);
        fib = fib && x.fibonacci_valid;
        images.insert(x.bits);
        // Every image at Hamming distance 1 must belong to a neighbor.
        std::vector<Letter> back;
        for (std::size_t i = 0; i < x.size(); ++i) {
          BinaryString y = x;
          y.bits[i] ^= 1;
          if (!sigma_decode(y, a, back)) continue;
          if (!is_valid(back, a)) continue;
          ++image_pairs;
          faithful = faithful && g.has_edge(v, g.index_of(back));
        }
      }
      faithful = faithful && image_pairs == 2 * g.edge_count();
      ok = fib && faithful && images.size() == g.size();
      return std::string("injective, no 11, Hamming 1 exactly on edges");
    });
  } else {
    s.skip("sigma embedding", "a = 1 words are Fibonacci strings already");
  }

  s.run("median closure (sampled)", [&](bool& ok) {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(g.size() - 1));
    for (std::size_t i = 0; i < opt.median_closure_samples; ++i) median(g, pick(rng), pick(rng), pick(rng));
    ok = true;
    return std::to_string(opt.median_closure_samples) + " majority images pulled back";
  });
  if (allpairs) {
    s.run("median uniqueness (sampled)", [&](bool& ok) {
      std::mt19937_64 rng(opt.seed + 1);
      std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(g.size() - 1));
      ok = true;
      for (std::size_t i = 0; i < opt.median_bfs_samples && ok; ++i) {
        const VertexId u = pick(rng), v = pick(rng), w = pick(rng);
        const auto m = medians_by_distance(g, u, v, w);
        ok = m.size() == 1 && m.front() == median(g, u, v, w);
      }
      return std::to_string(opt.median_bfs_samples) + " triples against BFS";
    });
  } else {
    s.skip("median uniqueness (sampled)", too_big);
  }

  if (allpairs) {
    const MetricReport r = metric_report(g, opt.allpairs_cap);
    s.run("radius", [&](bool& ok) {
      ok = r.radius_ok && r.witness_ok;
      return "BFS " + std::to_string(r.radius) + ", formula " + std::to_string(r.formula_radius);
    });
    s.run("diameter and periphery", [&](bool& ok) {
      ok = r.diameter_ok && r.periphery_ok;
      return "BFS " + std::to_string(r.diameter) + ", formula " + std::to_string(r.formula_diameter);
    });
    s.run("center", [&](bool& ok) {
      ok = r.center_ok && r.center_size_ok;
      return "|Z| = " + std::to_string(r.center.size()) + ", formula " + str(r.formula_center_size);
    });
    s.run("farthest vertex", [&](bool& ok) {
      ok = true;
      for (VertexId v = 0; v < g.size() && ok; ++v) {
        auto w = g.vertex(v);
        ok = hbar(w, farthest_vertex(w)) == r.eccentricities[v];
      }
      return std::string("d(v, farthest(v)) = e(v) everywhere");
    });
  } else {
    for (const char* name : {"radius", "diameter and periphery", "center", "farthest vertex"}) {
      s.skip(name, too_big);
    }
  }

  if (n >= 1) {
    s.run("Hamiltonian path", [&](bool& ok) {
      const auto w = hamiltonian_path(g);
      const auto [first, last] = path_endpoints(a, n);
      ok = validate_witness(g, w).valid && w.sequence.front() == g.index_of(first) &&
           w.sequence.back() == g.index_of(last);
      return g.label(w.sequence.front()) + " .. " + g.label(w.sequence.back());
    });
    s.run("matching", [&](bool& ok) {
      const auto m = matching_from_path(hamiltonian_path(g));
      const auto v = check_matching(g, m);
      ok = v.edges_ok && v.disjoint && v.covered + 1 >= g.size() && v.perfect == (g.size() % 2 == 0);
      return std::to_string(m.size()) + " edges, " + std::to_string(g.size() - v.covered) + " exposed";
    });
  } else {
    s.skip("Hamiltonian path", "needs n >= 1");
    s.skip("matching", "needs n >= 1");
  }

  if (a % 2 == 0 && n >= 2) {
    s.run("Hamiltonian cycle", [&](bool& ok) {
      const auto w = hamiltonian_cycle(g);
      const bool kind_ok = w.kind == (n % 2 ? WitnessKind::cycle : WitnessKind::near_cycle);
      ok = kind_ok && validate_witness(g, w).valid;
      return std::string(to_string(w.kind)) + " of length " + std::to_string(w.sequence.size()) +
             (w.missed ? ", missing " + g.label(*w.missed) : std::string());
    });
  } else {
    s.skip("Hamiltonian cycle", a % 2 ? "constructed for even a only" : "needs n >= 2");
  }
  return s.out;
}

bool all_passed(const std::vector<Verdict>& vs) {
  for (const auto& v : vs) {
    if (v.status == VerdictStatus::fail) return false;
  }
  return true;
}

void write_verdicts(const std::vector<Verdict>& vs, std::ostream& out) {
  for (const auto& v : vs) {
    const char* tag = v.status == VerdictStatus::pass ? "PASS" : v.status == VerdictStatus::fail ? "FAIL" : "SKIP";
    out << tag << ' ' << v.name << ": " << v.detail << '\n';
  }
}

}  // namespace metallic
