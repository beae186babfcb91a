#include <gtest/gtest.h>

#include <random>

#include "kostant/coset_poset.hpp"
#include "kostant/poset_kit.hpp"
#include "oracles.hpp"

using kostant::bit;
using kostant::CosetPoset;
using kostant::MarkedDiagram;

namespace {

struct Named {
  const char* type;
  kostant::NodeSet crossed;
};

// Checks a coset poset against the matrix-group oracle: element set, lengths,
// transitions and the Bruhat order induced from W.
void check_against_oracle(const MarkedDiagram& d) {
  const oracle::MatrixGroup g(d);
  const CosetPoset p(d);
  const kostant::NodeSet S = d.levi();
  std::vector<int> reps;
  for (int x = 0; x < g.size(); ++x)
    if (g.is_min_rep(x, S)) reps.push_back(x);
  ASSERT_EQ(p.size(), reps.size()) << d.signature();

  std::vector<int> to_oracle(p.size());
  std::map<int, std::uint32_t> from_oracle;
  for (std::uint32_t x = 0; x < p.size(); ++x) {
    const int o = g.eval(p.reduced_word(x));
    to_oracle[x] = o;
    ASSERT_TRUE(g.is_min_rep(o, S));
    ASSERT_EQ(g.length[static_cast<std::size_t>(o)], p.length(x));
    ASSERT_EQ(p.inversion_count(x), p.length(x));
    from_oracle[o] = x;
  }
  ASSERT_EQ(from_oracle.size(), p.size());

  for (std::uint32_t x = 0; x < p.size(); ++x)
    for (int i = 0; i < d.size(); ++i) {
      const int xs = g.right_mul(to_oracle[x], i);
      const std::int32_t expect = g.is_min_rep(xs, S) ? static_cast<std::int32_t>(from_oracle.at(xs)) : CosetPoset::kSameCoset;
      EXPECT_EQ(p.transition(x, i), expect);
    }

  for (std::uint32_t w = 0; w < p.size(); ++w) {
    const auto ideal = g.bruhat_ideal(to_oracle[w]);
    const auto lib = p.lower_ideal(w);
    for (std::uint32_t x = 0; x < p.size(); ++x) {
      const bool below = ideal.count(to_oracle[x]) > 0;
      EXPECT_EQ(p.leq(x, w), below) << d.signature() << " " << x << " " << w;
      EXPECT_EQ(lib.test(x), below);
    }
  }

  // covers from the ideals: x < w, length difference 1 is not required in a quotient,
  // so compute the Hasse diagram of the induced order directly
  std::set<std::pair<std::uint32_t, std::uint32_t>> hasse;
  for (std::uint32_t w = 0; w < p.size(); ++w)
    for (std::uint32_t x = 0; x < p.size(); ++x) {
      if (x == w || !p.leq(x, w)) continue;
      bool cover = true;
      for (std::uint32_t y = 0; y < p.size() && cover; ++y)
        if (y != x && y != w && p.leq(x, y) && p.leq(y, w)) cover = false;
      if (cover) hasse.insert({x, w});
    }
  std::set<std::pair<std::uint32_t, std::uint32_t>> got;
  for (const auto& c : p.covers()) {
    got.insert({c.lo, c.hi});
    EXPECT_EQ(p.length(c.hi), p.length(c.lo) + 1);
    if (c.label >= 0) {
      EXPECT_EQ(p.transition(c.lo, c.label), static_cast<std::int32_t>(c.hi));
    }
  }
  EXPECT_EQ(got, hasse) << d.signature();
}

}  // namespace

TEST(CosetPoset, FullWeylGroupsMatchOracle) {
  for (const char* t : {"A3", "B3", "A2xA1", "G2"}) {
    const MarkedDiagram d = MarkedDiagram::from_type_string(t);
    check_against_oracle(d.with_crossed(d.all()));
  }
}

TEST(CosetPoset, QuotientsMatchOracle) {
  check_against_oracle(MarkedDiagram::standard('A', 3).with_crossed(bit(1)));
  check_against_oracle(MarkedDiagram::standard('B', 3).with_crossed(bit(0)));
  check_against_oracle(MarkedDiagram::standard('C', 3).with_crossed(bit(2)));
  check_against_oracle(MarkedDiagram::standard('D', 4).with_crossed(bit(0) | bit(3)));
  check_against_oracle(MarkedDiagram::standard('A', 4).with_crossed(bit(1) | bit(2)));
}

TEST(CosetPoset, Gr24Diamond) {
  const CosetPoset p(MarkedDiagram::standard('A', 3).with_crossed(bit(1)));
  ASSERT_EQ(p.size(), 6u);
  EXPECT_EQ(kostant::poincare_polynomial(p, p.top()), (kostant::IntPolynomial{1, 1, 2, 1, 1}));
  EXPECT_EQ(p.elements_of_length(2).size(), 2u);
  const auto three = p.elements_of_length(3);
  ASSERT_EQ(three.size(), 1u);
  const auto poincare = kostant::poincare_polynomial(p, three[0]);
  EXPECT_EQ(poincare, (kostant::IntPolynomial{1, 1, 2, 1}));
  EXPECT_FALSE(kostant::is_palindromic(poincare));
  EXPECT_TRUE(kostant::is_palindromic(kostant::poincare_polynomial(p, p.top())));
  const auto iv = kostant::interval(p, 0, p.top());
  EXPECT_TRUE(iv.graded);
  EXPECT_EQ(iv.slices.size(), 5u);
}

TEST(CosetPoset, F4FirstQuotient) {
  const CosetPoset p(MarkedDiagram::standard('F', 4).with_crossed(bit(0)));
  ASSERT_EQ(p.size(), 24u);
  EXPECT_EQ(p.max_length(), 15);
  std::vector<std::int64_t> levels = {1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1};
  EXPECT_EQ(kostant::poincare_polynomial(p, p.top()), kostant::IntPolynomial(levels));
  EXPECT_EQ(p.reduced_word(p.top()).size(), 15u);
}

TEST(CosetPoset, TopHasFullSupport) {
  std::mt19937 rng(20240611);
  const std::vector<std::pair<char, int>> types = {{'A', 5}, {'B', 4}, {'C', 4}, {'D', 5}, {'E', 6}, {'F', 4}, {'G', 2}};
  for (int trial = 0; trial < 20; ++trial) {
    auto [t, n] = types[rng() % types.size()];
    kostant::NodeSet crossed = 0;
    while (!crossed) crossed = static_cast<kostant::NodeSet>(rng()) & (bit(n) - 1);
    const CosetPoset p(MarkedDiagram::standard(t, n).with_crossed(crossed));
    EXPECT_EQ(p.support(p.top()), bit(n) - 1) << t << n << " " << crossed;
    EXPECT_EQ(p.size(), p.roots().group_order() / p.roots().parabolic_order(p.levi()));
  }
}

TEST(CosetPoset, SizeLimit) {
  EXPECT_THROW(CosetPoset(MarkedDiagram::standard('E', 8).with_crossed(bit(0) | bit(7)), 1000), kostant::SizeLimitError);
}

TEST(CosetPoset, WordsAndLookup) {
  const CosetPoset p(MarkedDiagram::standard('B', 3).with_crossed(bit(0)));
  for (std::uint32_t x = 0; x < p.size(); ++x) {
    EXPECT_EQ(p.apply_word(0, p.reduced_word(x)), x);
    EXPECT_EQ(p.find(p.key(x)), x);
  }
  EXPECT_FALSE(p.try_apply_word(0, {1}).has_value());
  EXPECT_THROW(p.apply_word(0, {1}), kostant::DomainError);
}

TEST(CosetPoset, SingularSubposetAndAntidominant) {
  const MarkedDiagram d = MarkedDiagram::standard('A', 3).with_crossed(bit(1));
  const CosetPoset p(d);
  // J = {alpha_2}: elements w with w s_2 > w in ^S W
  const auto s = kostant::singular_subposet(p, bit(1));
  for (std::uint32_t x = 0; x < p.size(); ++x)
    EXPECT_EQ(s.position(x).has_value(), p.transition(x, 1) >= 0 && p.ascends(x, 1));
  const auto ad = kostant::antidominant_data(p.roots(), {0, -1, 0});
  EXPECT_EQ(ad.J, bit(1));
  for (auto v : ad.nu) EXPECT_LE(v, 0);
}
