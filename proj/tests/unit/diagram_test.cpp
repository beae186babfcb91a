#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "kostant/diagram.hpp"

using kostant::bit;
using kostant::MarkedDiagram;

namespace {

// Relabel a diagram by a permutation of its internal indices.
MarkedDiagram permuted(const MarkedDiagram& d, const std::vector<int>& perm) {
  const int n = d.size();
  std::vector<std::vector<int>> c(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<int> ids(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    ids[static_cast<std::size_t>(i)] = 100 + perm[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = d.cartan(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  }
  return MarkedDiagram(ids, c);
}

}  // namespace

TEST(Diagram, RecognizesStandardTypes) {
  const std::vector<std::pair<char, int>> types = {{'A', 1}, {'A', 5}, {'B', 3}, {'B', 6}, {'C', 4}, {'D', 4}, {'D', 7},
                                                   {'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}};
  for (auto [t, n] : types) {
    const MarkedDiagram d = MarkedDiagram::standard(t, n);
    const auto comps = d.components();
    ASSERT_EQ(comps.size(), 1u);
    EXPECT_EQ(comps[0].type, t);
    EXPECT_EQ(comps[0].rank, n);
    for (int k = 0; k < n; ++k) EXPECT_EQ(comps[0].bourbaki[static_cast<std::size_t>(k)], k) << t << n;
  }
}

TEST(Diagram, RecognitionSurvivesRelabeling) {
  std::mt19937 rng(7);
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'B', 5}, {'C', 5}, {'D', 6}, {'E', 7}, {'F', 4}}) {
    const MarkedDiagram d = MarkedDiagram::standard(t, n);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const MarkedDiagram q = permuted(d, perm);
    const auto c = q.components().at(0);
    EXPECT_EQ(c.type, t);
    EXPECT_EQ(c.rank, n);
  }
}

TEST(Diagram, SmallRankCoincidences) {
  EXPECT_EQ(MarkedDiagram::standard('D', 3).type_name(), "A3");
  EXPECT_EQ(MarkedDiagram::standard('D', 2).type_name(), "A1xA1");
  EXPECT_EQ(MarkedDiagram::standard('C', 2).type_name(), "B2");
  EXPECT_EQ(MarkedDiagram::standard('B', 1).type_name(), "A1");
}

TEST(Diagram, RejectsNonDynkinGraphs) {
  // Triangle of simple bonds.
  std::vector<std::vector<int>> tri = {{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
  EXPECT_FALSE(MarkedDiagram({1, 2, 3}, tri).finite_type());
  nlohmann::json bad = {{"nodes", {1, 2, 3, 4, 5}}, {"edges", {{1, 2}, {1, 3}, {1, 4}, {1, 5}}}};
  EXPECT_THROW(MarkedDiagram::from_json(bad), kostant::DiagramError);
  nlohmann::json dangling = {{"nodes", {1, 2}}, {"edges", {{1, 3}}}};
  EXPECT_THROW(MarkedDiagram::from_json(dangling), kostant::DiagramError);
  try {
    MarkedDiagram::from_json(dangling);
  } catch (const kostant::DiagramError& e) {
    EXPECT_NE(std::string(e.what()).find('3'), std::string::npos);
  }
}

TEST(Diagram, JsonInputWithLabels) {
  nlohmann::json j = {{"type", "F4"}, {"crossed", {"a"}}, {"singular", {4}}, {"labels", {{"1", "a"}, {"2", "b"}, {"3", "c"}, {"4", "d"}}}};
  const MarkedDiagram d = MarkedDiagram::from_json(j);
  EXPECT_EQ(d.crossed(), bit(0));
  EXPECT_EQ(d.singular(), bit(3));
  EXPECT_EQ(d.resolve("c"), 2);
  EXPECT_EQ(d.levi(), bit(1) | bit(2) | bit(3));
  nlohmann::json e = {{"nodes", {1, 2, 3}}, {"edges", {{1, 2}, {3, 2, 2}}}, {"crossed", {1}}};
  EXPECT_EQ(MarkedDiagram::from_json(e).type_name(), "C3");
}

TEST(Diagram, SubdiagramFlags) {
  const MarkedDiagram f4 = MarkedDiagram::standard('F', 4).with_crossed(bit(0));
  auto empty = kostant::subdiagram(f4, 0);
  EXPECT_TRUE(empty.diagram.empty());
  EXPECT_TRUE(empty.components.empty());
  auto ab = kostant::subdiagram(f4, bit(0) | bit(1));
  ASSERT_EQ(ab.components.size(), 1u);
  EXPECT_FALSE(ab.s_trivial[0]);
  auto bc = kostant::subdiagram(f4, bit(1) | bit(2));
  ASSERT_EQ(bc.components.size(), 1u);
  EXPECT_TRUE(bc.s_trivial[0]);
  auto ad = kostant::subdiagram(f4, bit(0) | bit(3));
  EXPECT_EQ(ad.components.size(), 2u);
  EXPECT_TRUE(ad.has_s_trivial_component());
}

TEST(Diagram, DualIsInvolution) {
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'B', 4}, {'C', 3}, {'F', 4}, {'G', 2}, {'E', 6}}) {
    const MarkedDiagram d = MarkedDiagram::standard(t, n).with_crossed(bit(0));
    EXPECT_EQ(kostant::dual_diagram(kostant::dual_diagram(d)), d);
  }
  EXPECT_EQ(kostant::dual_diagram(MarkedDiagram::standard('B', 4)).type_name(), "C4");
}

TEST(Diagram, SimplyLacedCovers) {
  const MarkedDiagram b3 = MarkedDiagram::standard('B', 3).with_crossed(bit(0));
  const MarkedDiagram cb = kostant::cover_of_dual(b3);
  EXPECT_EQ(cb.signature(), "A5[1]");
  const MarkedDiagram c3 = MarkedDiagram::standard('C', 3).with_crossed(bit(2));
  const MarkedDiagram cc = kostant::cover_of_dual(c3);
  EXPECT_EQ(cc.type_name(), "D4");
  EXPECT_EQ(cc.crossed(), bit(3));
  EXPECT_THROW(kostant::simply_laced_cover(MarkedDiagram::standard('A', 3).with_crossed(bit(0))), kostant::DomainError);
  EXPECT_THROW(kostant::simply_laced_cover(MarkedDiagram::standard('F', 4).with_crossed(bit(0))), kostant::DomainError);
}

TEST(Diagram, SignatureModuloAutomorphisms) {
  EXPECT_EQ(MarkedDiagram::standard('A', 5).with_crossed(bit(4)).signature(), "A5[1]");
  EXPECT_EQ(MarkedDiagram::standard('E', 6).with_crossed(bit(5)).signature(), "E6[1]");
  EXPECT_EQ(MarkedDiagram::standard('D', 4).with_crossed(bit(3)).signature(), "D4[1]");
  EXPECT_EQ(MarkedDiagram::standard('D', 5).with_crossed(bit(3)).signature(), "D5[4]");
  EXPECT_EQ(MarkedDiagram().signature(), "empty");
  EXPECT_EQ(MarkedDiagram::from_type_string("A2xA1").type_name(), "A2xA1");
}
