#include "cli.hpp"

#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "metallic/counting.hpp"
#include "metallic/error.hpp"
#include "metallic/graph.hpp"
#include "metallic/hamilton.hpp"
#include "metallic/metrics.hpp"
#include "metallic/structure.hpp"
#include "metallic/verify.hpp"

namespace metallic::cli {
namespace {

struct RunConfig {
  unsigned a = 0;
  unsigned n = 0;
  unsigned max_a = 6;
  unsigned max_n = 8;
  std::string format;
  std::string table;
  std::string method = "brute";
  std::string validate_file;
  std::string vertex;
  bool check = false;
  bool cycle = false;
  bool matching = false;
  std::uint64_t vertex_cap = kDefaultVertexCap;
  std::uint64_t allpairs_cap = kDefaultAllPairsCap;
  std::uint64_t seed = 1;
};

void add_an(CLI::App* sub, RunConfig& c) {
  sub->add_option("--a", c.a, "alphabet parameter")->required()->check(CLI::Range(1u, 255u));
  sub->add_option("--n", c.n, "word length")->required()->check(CLI::Range(0u, 4096u));
}

void add_vertex_cap(CLI::App* sub, RunConfig& c) {
  sub->add_option("--vertex-cap", c.vertex_cap, "refuse to build larger cubes")
      ->check(CLI::PositiveNumber);
}

void add_allpairs_cap(CLI::App* sub, RunConfig& c) {
  sub->add_option("--allpairs-cap", c.allpairs_cap, "largest cube for all-pairs BFS")
      ->check(CLI::PositiveNumber);
}

nlohmann::ordered_json big_json(const BigInt& x) {
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<std::uint64_t>(x);
  }
  return x.str();
}

DegreeTable degree_table(const RunConfig& c, const std::string& method) {
  if (method == "closed") return degree_distribution_closed(c.a, c.n);
  if (method == "gf") return degree_distribution_gf(c.a, c.n);
  return degree_distribution_brute(MetallicCube::build(c.a, c.n, c.vertex_cap));
}

int cmd_generate(const RunConfig& c, std::ostream& out) {
  const auto g = MetallicCube::build(c.a, c.n, c.vertex_cap);
  write_graph(g, parse_export_format(c.format), out);
  return kExitOk;
}

int cmd_tables(const RunConfig& c, std::ostream& out) {
  if (c.table == "vertices") {
    write_vertex_table_csv(c.max_a, c.max_n, out);
  } else if (c.table == "edges") {
    write_edge_table_csv(c.max_a, c.max_n, out);
  } else {
    write_degree_table_csv(c.max_a, c.max_n, out, c.vertex_cap);
  }
  return kExitOk;
}

int cmd_degrees(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const DegreeTable t = degree_table(c, c.method);
  int status = kExitOk;
  if (c.check) {
    if (c.a < 2) throw Unsupported("degree cross-check needs a >= 2");
    for (const char* other : {"brute", "closed", "gf"}) {
      if (other == c.method) continue;
      if (!degree_table(c, other).same_counts(t)) {
        err << "degrees: " << c.method << " and " << other << " disagree\n";
        status = kExitVerifyFailed;
      }
    }
  }
  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["a"] = c.a;
    j["n"] = c.n;
    j["method"] = to_string(t.method);
    auto& counts = j["counts"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : t.counts) counts[std::to_string(k)] = big_json(v);
    out << j.dump() << '\n';
  } else {
    out << "degree,count\n";
    for (const auto& [k, v] : t.counts) out << k << ',' << v << '\n';
  }
  return status;
}

int cmd_metrics(const RunConfig& c, std::ostream& out) {
  const auto g = MetallicCube::build(c.a, c.n, c.vertex_cap);
  const MetricReport r = metric_report(g, c.allpairs_cap);
  write_json(r, c.check, out);
  return c.check && !r.all_ok() ? kExitVerifyFailed : kExitOk;
}

int cmd_decompose(const RunConfig& c, std::ostream& out) {
  const auto g = MetallicCube::build(c.a, c.n, c.vertex_cap);
  nlohmann::ordered_json j;
  bool ok = true;
  if (c.n >= 2) {
    const auto d = canonical_decomposition(g, c.check);
    j["canonical"] = report_json(d);
    ok = ok && d.valid();
  } else {
    j["canonical"] = nullptr;
  }
  const auto grid = grid_decomposition(g);
  j["grid"] = report_json(g, grid);
  ok = ok && grid.valid();
  if (c.n >= 1) {
    const auto q = quotient_graph(g);
    j["quotient"] = report_json(q);
    ok = ok && q.isomorphic;
  } else {
    j["quotient"] = nullptr;
  }
  out << j.dump(2) << '\n';
  return c.check && !ok ? kExitVerifyFailed : kExitOk;
}

int cmd_embed(const RunConfig& c, std::ostream& out) {
  if (!c.vertex.empty()) {
    const auto w = parse_letters(c.vertex, c.a);
    if (!is_valid(w, c.a)) throw InvalidWord("not a metallic word: " + c.vertex);
    out << to_text(w, c.a) << ' ' << sigma_embed(w, c.a).to_text() << '\n';
    return kExitOk;
  }
  const auto g = MetallicCube::build(c.a, c.n, c.vertex_cap);
  for (VertexId v = 0; v < g.size(); ++v) {
    out << g.label(v) << ' ' << sigma_embed(g.word(v), c.a).to_text() << '\n';
  }
  return kExitOk;
}

int cmd_hamilton(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto g = MetallicCube::build(c.a, c.n, c.vertex_cap);
  if (!c.validate_file.empty()) {
    std::ifstream in(c.validate_file);
    if (!in) throw DomainError("cannot open " + c.validate_file);
    const WitnessKind kind =
        !c.cycle ? WitnessKind::path : c.n % 2 ? WitnessKind::cycle : WitnessKind::near_cycle;
    const PathWitness w = read_witness(g, in, kind);
    const WitnessVerdict v = validate_witness(g, w);
    if (v.valid) {
      out << "valid " << to_string(w.kind) << ' ' << w.sequence.size() << '\n';
      return kExitOk;
    }
    out << "invalid " << to_string(w.kind) << ": " << v.violation;
    if (v.position != static_cast<std::size_t>(-1)) out << " at entry " << v.position;
    out << '\n';
    return kExitVerifyFailed;
  }

  const PathWitness w = c.cycle ? hamiltonian_cycle(g) : hamiltonian_path(g);
  if (c.matching) {
    const Matching m = matching_from_path(c.cycle ? hamiltonian_path(g) : w);
    for (auto [u, v] : m) out << g.label(u) << ' ' << g.label(v) << '\n';
    const auto mv = check_matching(g, m);
    err << m.size() << " edges, " << (mv.perfect ? "perfect" : "semi-perfect") << '\n';
    return kExitOk;
  }
  write_witness(g, w, out);
  err << to_string(w.kind) << " of length " << w.sequence.size();
  if (w.missed) err << ", missing " << g.label(*w.missed);
  err << '\n';
  return kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  VerifyOptions opt;
  opt.vertex_cap = c.vertex_cap;
  opt.allpairs_cap = c.allpairs_cap;
  opt.seed = c.seed;
  const auto verdicts = verify_all(c.a, c.n, opt);
  write_verdicts(verdicts, out);
  for (const auto& v : verdicts) {
    if (v.status == VerdictStatus::skip) err << "warning: skipped " << v.name << " (" << v.detail << ")\n";
  }
  return all_passed(verdicts) ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Metallic cubes: generation, tables, metrics, decompositions, Hamiltonicity", "metallic"};
  app.require_subcommand(1);
  RunConfig c;

  auto* generate = app.add_subcommand("generate", "write the cube as DOT, JSON or an edge list");
  add_an(generate, c);
  add_vertex_cap(generate, c);
  c.format = "edgelist";
  generate->add_option("--format", c.format)->check(CLI::IsMember({"dot", "json", "edgelist"}));

  auto* tables = app.add_subcommand("tables", "vertex, edge or degree table as CSV");
  tables->add_option("table", c.table)->required()->check(CLI::IsMember({"vertices", "edges", "degrees"}));
  tables->add_option("--max-a", c.max_a)->check(CLI::Range(1u, 255u));
  tables->add_option("--max-n", c.max_n)->check(CLI::Range(1u, 4096u));
  tables->add_option("--format", c.format)->check(CLI::IsMember({"csv"}));
  add_vertex_cap(tables, c);

  auto* degrees = app.add_subcommand("degrees", "degree distribution of one cube");
  add_an(degrees, c);
  add_vertex_cap(degrees, c);
  degrees->add_option("--format", c.format)->check(CLI::IsMember({"csv", "json"}));
  degrees->add_option("--method", c.method)->check(CLI::IsMember({"brute", "closed", "gf"}));
  degrees->add_flag("--check", c.check, "compare against the other two routes");

  auto* metrics = app.add_subcommand("metrics", "eccentricities, radius, diameter, center, periphery");
  add_an(metrics, c);
  add_vertex_cap(metrics, c);
  add_allpairs_cap(metrics, c);
  metrics->add_option("--format", c.format)->check(CLI::IsMember({"json"}));
  metrics->add_flag("--check", c.check, "compare with the closed forms; exit 1 on mismatch");

  auto* decompose = app.add_subcommand("decompose", "canonical and grid decompositions, quotient");
  add_an(decompose, c);
  add_vertex_cap(decompose, c);
  decompose->add_flag("--check,--verify", c.check, "also check the induced copies; exit 1 on failure");

  auto* embed = app.add_subcommand("embed", "binary image of every vertex");
  embed->add_option("--a", c.a)->required()->check(CLI::Range(1u, 255u));
  embed->add_option("--n", c.n)->check(CLI::Range(0u, 4096u));
  embed->add_option("--vertex", c.vertex, "embed one word only");
  add_vertex_cap(embed, c);

  auto* hamilton = app.add_subcommand("hamilton", "Hamiltonian path or cycle, or validate one");
  add_an(hamilton, c);
  add_vertex_cap(hamilton, c);
  hamilton->add_flag("--cycle", c.cycle, "cycle (odd n) or near-cycle (even n); even a only");
  hamilton->add_flag("--matching", c.matching, "print the matching read off the path");
  hamilton->add_option("--validate", c.validate_file, "check a witness file, one vertex per line");

  auto* verify = app.add_subcommand("verify", "every formula against its oracle");
  add_an(verify, c);
  add_vertex_cap(verify, c);
  add_allpairs_cap(verify, c);
  verify->add_option("--seed", c.seed, "median sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate) return cmd_generate(c, out);
    if (*tables) return cmd_tables(c, out);
    if (*degrees) return cmd_degrees(c, out, err);
    if (*metrics) return cmd_metrics(c, out);
    if (*decompose) return cmd_decompose(c, out);
    if (*embed) return cmd_embed(c, out);
    if (*hamilton) return cmd_hamilton(c, out, err);
    return cmd_verify(c, out, err);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const ConstructionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const InternalInconsistency& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace metallic::cli
