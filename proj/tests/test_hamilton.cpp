#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "metallic/error.hpp"
#include "metallic/hamilton.hpp"
#include "oracles.hpp"

using namespace metallic;

namespace {

std::vector<std::string> labels(const MetallicCube& g, const PathWitness& w) {
  std::vector<std::string> out;
  for (VertexId v : w.sequence) out.push_back(g.label(v));
  return out;
}

PathWitness from_labels(const MetallicCube& g, const std::vector<std::string>& ls, WitnessKind kind) {
  PathWitness w;
  w.a = g.alphabet();
  w.n = g.length();
  w.kind = kind;
  for (const auto& l : ls) w.sequence.push_back(g.index_of(MetallicString::parse(l, g.alphabet())));
  return w;
}

// Undirected edge set of a closed walk.
std::set<std::pair<VertexId, VertexId>> cycle_edges(const std::vector<VertexId>& seq) {
  std::set<std::pair<VertexId, VertexId>> out;
  for (std::size_t i = 0; i < seq.size(); ++i) out.insert(std::minmax(seq[i], seq[(i + 1) % seq.size()]));
  return out;
}

const std::vector<std::string> kPrintedCycle{"111", "110", "100", "101", "102", "002",
                                             "001", "000", "010", "020", "021", "011"};

// Checks the witness with the test-side scans only.
void expect_spanning(const MetallicCube& g, const PathWitness& w, bool closed, std::size_t missing) {
  const auto ws = oracle::words(g.alphabet(), g.length());
  ASSERT_EQ(w.sequence.size() + missing, ws.size());
  std::set<VertexId> seen(w.sequence.begin(), w.sequence.end());
  ASSERT_EQ(seen.size(), w.sequence.size());
  for (std::size_t i = 0; i + 1 < w.sequence.size(); ++i) {
    ASSERT_EQ(oracle::dist(ws[w.sequence[i]], ws[w.sequence[i + 1]]), 1u) << i;
  }
  if (closed) {
    ASSERT_EQ(oracle::dist(ws[w.sequence.front()], ws[w.sequence.back()]), 1u);
  }
}

}  // namespace

TEST(Path, PrintedExamples) {
  const auto g3 = MetallicCube::build(3, 2);
  EXPECT_EQ(labels(g3, hamiltonian_path(g3)),
            (std::vector<std::string>{"03", "02", "01", "00", "10", "11", "12", "22", "21", "20"}));
  const auto g2 = MetallicCube::build(2, 2);
  EXPECT_EQ(labels(g2, hamiltonian_path(g2)), (std::vector<std::string>{"02", "01", "00", "10", "11"}));
  const auto w = hamiltonian_path(4, 3);
  EXPECT_EQ(w.sequence.size(), 72u);
  EXPECT_TRUE(w.valid);
}

TEST(Path, ValidEverywhere) {
  for (unsigned a = 1; a <= 6; ++a) {
    for (unsigned n = 1; n <= 6; ++n) {
      if (word_count(a, n) > 60000) continue;
      const auto g = MetallicCube::build(a, n);
      const auto w = hamiltonian_path(g);
      EXPECT_EQ(w.kind, WitnessKind::path);
      EXPECT_TRUE(validate_witness(g, w).valid) << a << "," << n;
      expect_spanning(g, w, false, 0);
      const auto [first, last] = path_endpoints(a, n);
      EXPECT_EQ(g.vertex(w.sequence.front()), first) << a << "," << n;
      EXPECT_EQ(g.vertex(w.sequence.back()), last) << a << "," << n;
    }
  }
}

TEST(Path, Endpoints) {
  auto e = path_endpoints(4, 3);
  EXPECT_EQ(e.first.to_text(), "040");
  EXPECT_EQ(e.second.to_text(), "333");
  e = path_endpoints(3, 4);
  EXPECT_EQ(e.first.to_text(), "0320");
  EXPECT_EQ(e.second.to_text(), "2032");
}

TEST(Cycle, PrintedCycleIsValid) {
  const auto g = MetallicCube::build(2, 3);
  const auto printed = from_labels(g, kPrintedCycle, WitnessKind::cycle);
  EXPECT_TRUE(validate_witness(g, printed).valid);
  const auto ours = hamiltonian_cycle(g);
  EXPECT_EQ(ours.kind, WitnessKind::cycle);
  EXPECT_EQ(cycle_edges(ours.sequence), cycle_edges(printed.sequence));
}

TEST(Cycle, NearCycleMissesZeroA) {
  const auto g = MetallicCube::build(2, 2);
  const auto w = hamiltonian_cycle(g);
  EXPECT_EQ(w.kind, WitnessKind::near_cycle);
  EXPECT_EQ(w.sequence.size(), 4u);
  ASSERT_TRUE(w.missed);
  EXPECT_EQ(g.label(*w.missed), "02");
  EXPECT_TRUE(validate_witness(g, w).valid);
}

TEST(Cycle, EvenAlphabets) {
  for (unsigned a : {2u, 4u, 6u}) {
    for (unsigned n = 2; n <= 6; ++n) {
      if (word_count(a, n) > 60000) continue;
      const auto g = MetallicCube::build(a, n);
      const auto w = hamiltonian_cycle(g);
      EXPECT_TRUE(validate_witness(g, w).valid) << a << "," << n;
      if (n % 2) {
        EXPECT_EQ(w.kind, WitnessKind::cycle);
        expect_spanning(g, w, true, 0);
      } else {
        EXPECT_EQ(w.kind, WitnessKind::near_cycle);
        expect_spanning(g, w, true, 1);
        std::vector<Letter> miss;
        for (unsigned i = 0; i < n / 2; ++i) miss.insert(miss.end(), {0, static_cast<Letter>(a)});
        EXPECT_EQ(*w.missed, g.index_of(miss));
      }
    }
  }
  EXPECT_EQ(hamiltonian_cycle(4, 3).sequence.size(), 72u);
}

TEST(Cycle, Preconditions) {
  EXPECT_THROW(hamiltonian_cycle(3, 3), Unsupported);
  EXPECT_THROW(hamiltonian_cycle(2, 1), DomainError);
}

TEST(Validate, Violations) {
  const auto g = MetallicCube::build(2, 3);
  auto swapped = kPrintedCycle;
  std::swap(swapped[3], swapped[7]);
  const auto v = validate_witness(g, from_labels(g, swapped, WitnessKind::cycle));
  EXPECT_FALSE(v.valid);
  EXPECT_FALSE(v.violation.empty());
  EXPECT_EQ(v.position, 3u);  // 000 -> 102

  auto short_path = hamiltonian_path(g);
  short_path.sequence.pop_back();
  const auto c = validate_witness(g, short_path);
  EXPECT_FALSE(c.valid);

  auto repeat = hamiltonian_path(g);
  repeat.sequence.back() = repeat.sequence.front();
  EXPECT_FALSE(validate_witness(g, repeat).valid);

  auto open_cycle = from_labels(g, kPrintedCycle, WitnessKind::cycle);
  std::swap(open_cycle.sequence.front(), open_cycle.sequence.back());
  EXPECT_FALSE(validate_witness(g, open_cycle).valid);
}

TEST(Matching, Examples) {
  const auto g23 = MetallicCube::build(2, 3);
  auto m = matching_from_path(hamiltonian_path(g23));
  auto v = check_matching(g23, m);
  EXPECT_EQ(m.size(), 6u);
  EXPECT_TRUE(v.edges_ok && v.disjoint && v.perfect);

  const auto g33 = MetallicCube::build(3, 3);
  m = matching_from_path(hamiltonian_path(g33));
  v = check_matching(g33, m);
  EXPECT_EQ(m.size(), 16u);
  EXPECT_EQ(v.covered, 32u);
  EXPECT_FALSE(v.perfect);

  for (unsigned a = 1; a <= 8; ++a) EXPECT_EQ(matching_from_path(a, 1).size(), a / 2);
}

TEST(Matching, PerfectIffEven) {
  for (unsigned a = 1; a <= 5; ++a) {
    for (unsigned n = 1; n <= 6; ++n) {
      const auto g = MetallicCube::build(a, n);
      const auto m = matching_from_path(hamiltonian_path(g));
      const auto v = check_matching(g, m);
      EXPECT_TRUE(v.edges_ok && v.disjoint);
      EXPECT_EQ(v.covered, g.size() - g.size() % 2);
      EXPECT_EQ(v.perfect, g.size() % 2 == 0);
    }
  }
}

TEST(WitnessIo, RoundTrip) {
  const auto g = MetallicCube::build(4, 3);
  const auto w = hamiltonian_cycle(g);
  std::stringstream s;
  write_witness(g, w, s);
  const auto back = read_witness(g, s, WitnessKind::cycle);
  EXPECT_EQ(back.sequence, w.sequence);
  EXPECT_TRUE(validate_witness(g, back).valid);

  std::istringstream hdr("# kind=near_cycle\n\n01\n00\n10\n11\n");
  const auto nc = read_witness(MetallicCube::build(2, 2), hdr, WitnessKind::path);
  EXPECT_EQ(nc.kind, WitnessKind::near_cycle);
  EXPECT_TRUE(validate_witness(MetallicCube::build(2, 2), nc).valid);

  std::istringstream bad("00\n30\n");
  EXPECT_THROW(read_witness(MetallicCube::build(3, 2), bad, WitnessKind::path), VertexNotFound);
}
