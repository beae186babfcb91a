#include <gtest/gtest.h>

#include <set>

#include "kostant/kostant.hpp"
#include "type_a.hpp"

using kostant::bit;
using kostant::ClassifyOptions;
using kostant::CosetPoset;
using kostant::MarkedDiagram;
using kostant::Method;

using oracle::shuffle_patterns;
using oracle::type_a_string;

TEST(Classifier, F4C3) {
  const CosetPoset p(MarkedDiagram::standard('F', 4).with_crossed(bit(0)));
  ClassifyOptions opt;
  opt.method = Method::Both;
  const auto r = kostant::classify_regular(p, opt);
  EXPECT_EQ(r.entries.size(), 24u);
  EXPECT_EQ(r.kostant_count, 8u);
  EXPECT_EQ(r.standard_count, 5u);
  EXPECT_TRUE(r.methods_agree);
  for (const auto& e : r.entries)
    if (e.standard) EXPECT_TRUE(e.kostant);
}

TEST(Classifier, D4A2) {
  const CosetPoset p(MarkedDiagram::standard('D', 4).with_crossed(bit(2) | bit(3)));
  ClassifyOptions opt;
  opt.method = Method::Both;
  const auto r = kostant::classify_regular(p, opt);
  EXPECT_EQ(r.entries.size(), 32u);
  EXPECT_EQ(r.kostant_count, 22u);
  EXPECT_TRUE(r.methods_agree);
  EXPECT_EQ(r.criterion, "rational smoothness criterion");
  EXPECT_FALSE(r.pruning_applied);
}

TEST(Classifier, TypeAShufflePatterns) {
  for (int n = 2; n <= 9; ++n)
    for (int r = 1; r < n; ++r) {
      const CosetPoset p(MarkedDiagram::standard('A', n - 1).with_crossed(bit(r - 1)));
      const auto rep = kostant::classify_regular(p);
      EXPECT_EQ(rep.kostant_count, static_cast<std::size_t>(r * (n - r) + 1)) << n << " " << r;
      std::set<std::vector<int>> got;
      for (std::uint32_t w : rep.kostant_elements()) got.insert(type_a_string(p, w, r));
      EXPECT_EQ(got, shuffle_patterns(n, r)) << n << " " << r;
    }
}

TEST(Classifier, Gr24AllKostantAreStandard) {
  const CosetPoset p(MarkedDiagram::standard('A', 3).with_crossed(bit(1)));
  const auto rep = kostant::classify_regular(p);
  EXPECT_EQ(rep.kostant_count, 5u);
  EXPECT_EQ(rep.standard_count, 5u);
  EXPECT_EQ(kostant::standard_kostant(p).at(0), 0u);
}

TEST(Classifier, HermitianNonSimplyLaced) {
  for (int n = 2; n <= 6; ++n) {
    const CosetPoset b(MarkedDiagram::standard('B', n).with_crossed(bit(0)));
    const auto vb = kostant::verify_bijection(b);
    EXPECT_TRUE(vb.applies);
    EXPECT_TRUE(vb.holds) << "B" << n;
    EXPECT_EQ(vb.palindromic, static_cast<std::size_t>(2 * n));
    if (n < 3) continue;
    const CosetPoset c(MarkedDiagram::standard('C', n).with_crossed(bit(n - 1)));
    const auto vc = kostant::verify_bijection(c);
    EXPECT_TRUE(vc.applies);
    EXPECT_TRUE(vc.holds) << "C" << n;
    EXPECT_EQ(vc.palindromic, static_cast<std::size_t>(2 * n));
  }
}

TEST(Classifier, SimplyLacedBijection) {
  for (int r = 0; r < 6; ++r) {
    const CosetPoset p(MarkedDiagram::standard('E', 6).with_crossed(bit(r)));
    const auto v = kostant::verify_bijection(p);
    EXPECT_TRUE(v.holds) << r;
  }
  for (int r = 0; r < 5; ++r) {
    const CosetPoset p(MarkedDiagram::standard('D', 5).with_crossed(bit(r)));
    EXPECT_TRUE(kostant::verify_bijection(p).holds) << r;
  }
  const CosetPoset f4(MarkedDiagram::standard('F', 4).with_crossed(bit(0)));
  EXPECT_FALSE(kostant::verify_bijection(f4).applies);
}

TEST(Classifier, StandardIntervalsAreParabolicQuotients) {
  std::vector<MarkedDiagram> ds = {MarkedDiagram::standard('F', 4).with_crossed(bit(0)),
                                   MarkedDiagram::standard('D', 4).with_crossed(bit(2) | bit(3))};
  for (int r = 0; r < 6; ++r) ds.push_back(MarkedDiagram::standard('E', 6).with_crossed(bit(r)));
  for (const MarkedDiagram& d : ds) {
    const CosetPoset p(d);
    for (auto [I, x] : kostant::standard_kostant(p)) {
      const kostant::Bitset ideal = p.lower_ideal(x);
      for (std::uint32_t y = 0; y < p.size(); ++y) EXPECT_EQ(ideal.test(y), (p.support(y) & ~I) == 0);
      const auto sub = kostant::subdiagram(d, I);
      if (I == 0) continue;
      const CosetPoset q(sub.diagram);
      EXPECT_EQ(kostant::poincare_polynomial(q, q.top()), kostant::poincare_polynomial(p, x));
      EXPECT_TRUE(kostant::poincare_polynomial(p, x).is_palindromic());
      EXPECT_TRUE(kostant::interval(p, 0, x).graded);
    }
  }
}

TEST(Classifier, PruningIsSound) {
  // classify_regular throws if a pruned element is palindromic
  for (int r = 0; r < 7; ++r) EXPECT_NO_THROW(kostant::classify_regular(CosetPoset(MarkedDiagram::standard('E', 7).with_crossed(bit(r)))));
  for (int r = 0; r < 6; ++r) EXPECT_NO_THROW(kostant::classify_regular(CosetPoset(MarkedDiagram::standard('D', 6).with_crossed(bit(r)))));
}

TEST(Classifier, JobsDoNotChangeResults) {
  const CosetPoset p(MarkedDiagram::standard('E', 6).with_crossed(bit(3)));
  EXPECT_EQ(kostant::palindromic_elements(p, 1), kostant::palindromic_elements(p, 3));
}

TEST(UCohomology, RoutesAgree) {
  const CosetPoset p(MarkedDiagram::standard('D', 4).with_crossed(bit(2) | bit(3)));
  const kostant::KLTable kl(p);
  for (std::uint32_t w = 0; w < p.size(); ++w) {
    const auto a = kostant::u_cohomology(p, w);
    const auto b = kostant::u_cohomology(p, w, &kl);
    EXPECT_EQ(a.kostant, b.kostant);
    if (a.kostant) EXPECT_EQ(a.degrees, b.degrees) << w;
  }
  const auto e = kostant::u_cohomology(p, 0);
  ASSERT_EQ(e.degrees.size(), 1u);
  EXPECT_EQ(e.degrees.at(0), std::vector<std::uint32_t>{0});
}

TEST(UCohomology, F4TopIsLengthSlices) {
  const CosetPoset p(MarkedDiagram::standard('F', 4).with_crossed(bit(0)));
  const kostant::KLTable kl(p);
  const auto u = kostant::u_cohomology(p, p.top(), &kl);
  EXPECT_TRUE(u.kostant);
  for (int i = 0; i <= 15; ++i) EXPECT_EQ(u.degrees.at(i), p.elements_of_length(15 - i));
}

TEST(GradedIntervalTest, MatchesKLVerdictOnRegularBlocks) {
  for (const MarkedDiagram& d : {MarkedDiagram::standard('D', 4).with_crossed(bit(2) | bit(3)), MarkedDiagram::standard('F', 4).with_crossed(bit(0))}) {
    const CosetPoset p(d);
    const kostant::KLTable kl(p);
    const auto& order = p.bruhat_poset();
    for (std::uint32_t w = 0; w < p.size(); ++w) {
      const auto t = kostant::graded_interval_test(order, w, [&](std::uint32_t x) { return kl.ext(0, x, w); });
      EXPECT_EQ(t.kostant, kl.column_is_trivial(w)) << d.signature() << " " << w;
      if (t.kostant) EXPECT_EQ(*t.v, 0u);
    }
  }
}
