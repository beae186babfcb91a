#include "kostant/bgg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "kostant/poset_kit.hpp"

namespace kostant {

int SignedComplex::arrow_index(std::uint32_t lo, std::uint32_t hi) const {
  auto it = std::lower_bound(arrows.begin(), arrows.end(), std::make_pair(hi, lo),
                             [](const Arrow& a, const std::pair<std::uint32_t, std::uint32_t>& k) { return std::make_pair(a.hi, a.lo) < k; });
  if (it == arrows.end() || it->lo != lo || it->hi != hi) return -1;
  return static_cast<int>(it - arrows.begin());
}

namespace {

// Depth-first search over arrows in the given order. A square is checked
// when its last arrow (in that order) is assigned.
std::vector<int> solve_signs(const SignedComplex& c, const std::vector<std::uint32_t>& order, std::size_t& backtracks) {
  const std::size_t m = order.size();
  std::vector<std::size_t> pos(m);
  for (std::size_t k = 0; k < m; ++k) pos[order[k]] = k;
  std::vector<std::vector<std::uint32_t>> closing(m);
  for (std::uint32_t s = 0; s < c.squares.size(); ++s) {
    std::size_t last = 0;
    for (std::uint32_t a : c.squares[s]) last = std::max(last, pos[a]);
    closing[last].push_back(s);
  }
  std::vector<int> sign(c.arrows.size(), 0);
  std::vector<int> tried(m, 0);  // 0: none, 1: +1 tried, 2: both tried
  auto consistent = [&](std::size_t k) {
    for (std::uint32_t s : closing[k]) {
      int prod = 1;
      for (std::uint32_t a : c.squares[s]) prod *= sign[a];
      if (prod != -1) return false;
    }
    return true;
  };
  std::size_t k = 0;
  while (k < m) {
    const std::uint32_t a = order[k];
    bool placed = false;
    while (tried[k] < 2 && !placed) {
      sign[a] = tried[k] == 0 ? 1 : -1;
      ++tried[k];
      placed = consistent(k);
    }
    if (placed) {
      ++k;
      continue;
    }
    sign[a] = 0;
    tried[k] = 0;
    if (k == 0) throw ConsistencyError("no sign assignment satisfies every square");
    ++backtracks;
    --k;
  }
  return sign;
}

}  // namespace

SignedComplex build_signed_complex(const FinitePoset& order, ArrowOrder arrow_order) {
  std::vector<std::uint32_t> seq(order.hasse().size());
  std::iota(seq.begin(), seq.end(), 0u);
  if (arrow_order == ArrowOrder::Decreasing) std::reverse(seq.begin(), seq.end());
  return build_signed_complex(order, seq);
}

SignedComplex build_signed_complex(const FinitePoset& order, const std::vector<std::uint32_t>& seq) {
  SignedComplex c;
  const std::size_t n = order.size();
  if (n == 0) throw DomainError("empty poset");
  const auto top = static_cast<std::uint32_t>(n - 1);
  const GradedInterval g = interval(order, 0, top);
  if (g.elements.size() != n) throw DomainError("poset is not an interval from its first to its last element");
  if (!g.graded) throw DomainError("interval is not graded: " + g.witness);
  c.labels.resize(n);
  std::iota(c.labels.begin(), c.labels.end(), 0u);
  c.rank = g.rank;
  const int R = c.rank[top];
  c.terms.assign(static_cast<std::size_t>(R) + 1, {});
  for (std::uint32_t x = 0; x < n; ++x) c.terms[static_cast<std::size_t>(R - c.rank[x])].push_back(x);
  for (auto [lo, hi] : order.hasse()) c.arrows.push_back({lo, hi, 1});

  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t b : order.covers_up(x))
      for (std::uint32_t z : order.covers_up(b)) {
        // enumerate each (x, z) pair once, from its smallest middle
        std::vector<std::uint32_t> mids;
        for (std::uint32_t y : order.covers_up(x))
          if (order.leq(y, z) && std::find(order.covers_down(z).begin(), order.covers_down(z).end(), y) != order.covers_down(z).end())
            mids.push_back(y);
        std::sort(mids.begin(), mids.end());
        if (mids.front() != b) continue;
        for (std::size_t i = 0; i < mids.size(); ++i)
          for (std::size_t j = i + 1; j < mids.size(); ++j)
            c.squares.push_back({static_cast<std::uint32_t>(c.arrow_index(x, mids[i])), static_cast<std::uint32_t>(c.arrow_index(mids[i], z)),
                                 static_cast<std::uint32_t>(c.arrow_index(x, mids[j])), static_cast<std::uint32_t>(c.arrow_index(mids[j], z))});
      }

  {
    std::vector<std::uint32_t> check = seq;
    std::sort(check.begin(), check.end());
    bool perm = check.size() == c.arrows.size();
    for (std::uint32_t k = 0; perm && k < check.size(); ++k) perm = check[k] == k;
    if (!perm) throw DomainError("arrow sequence is not a permutation of the Hasse edges");
  }
  const std::vector<int> sign = solve_signs(c, seq, c.backtracks);
  for (std::size_t a = 0; a < c.arrows.size(); ++a) c.arrows[a].sign = sign[a];

  c.differentials.assign(c.terms.size(), {});
  for (std::size_t i = 1; i < c.terms.size(); ++i) {
    auto& D = c.differentials[i];
    D.assign(c.terms[i - 1].size(), std::vector<int>(c.terms[i].size(), 0));
    for (std::size_t r = 0; r < c.terms[i - 1].size(); ++r)
      for (std::size_t col = 0; col < c.terms[i].size(); ++col) {
        const int a = c.arrow_index(c.terms[i][col], c.terms[i - 1][r]);
        if (a >= 0) D[r][col] = c.arrows[static_cast<std::size_t>(a)].sign;
      }
  }
  return c;
}

SignedComplex build_bgg(const CosetPoset& p, std::uint32_t w) {
  const GradedInterval g = interval(p, 0, w);
  if (!g.graded) throw DomainError("[e, " + std::to_string(w) + "] is not graded: " + g.witness);
  const std::size_t n = g.elements.size();
  std::vector<Bitset> below(n, Bitset(n));
  for (std::size_t j = 0; j < n; ++j) {
    const Bitset ideal = p.lower_ideal(g.elements[j]);
    for (std::size_t i = 0; i <= j; ++i)
      if (ideal.test(g.elements[i])) below[j].set(i);
  }
  SignedComplex c = build_signed_complex(FinitePoset::from_lower_sets(std::move(below)));
  c.labels = g.elements;
  c.kostant = poincare_polynomial(p, w).is_palindromic();
  return c;
}

ComplexVerdict verify_complex(const SignedComplex& c) {
  ComplexVerdict v;
  auto label = [&](std::uint32_t x) { return std::to_string(c.labels[x]); };
  for (const auto& s : c.squares) {
    ++v.squares_checked;
    int prod = 1;
    for (std::uint32_t a : s) prod *= c.arrows[a].sign;
    if (prod != -1) {
      const auto& ab = c.arrows[s[0]];
      const auto& cd = c.arrows[s[3]];
      v.ok = false;
      v.violations.push_back("square " + label(ab.lo) + " < {" + label(ab.hi) + ", " + label(cd.lo) + "} < " + label(cd.hi) +
                             " has sign product +1");
    }
  }
  for (std::size_t i = 2; i < c.terms.size(); ++i) {
    const auto& A = c.differentials[i - 1];  // C_{i-1} -> C_{i-2}
    const auto& B = c.differentials[i];      // C_i -> C_{i-1}
    for (std::size_t r = 0; r < c.terms[i - 2].size(); ++r)
      for (std::size_t col = 0; col < c.terms[i].size(); ++col) {
        int sum = 0, mids = 0;
        for (std::size_t k = 0; k < c.terms[i - 1].size(); ++k) {
          sum += A[r][k] * B[k][col];
          mids += (A[r][k] != 0 && B[k][col] != 0);
        }
        const std::string pair = label(c.terms[i][col]) + " < " + label(c.terms[i - 2][r]);
        if (mids > 2) {
          v.ok = false;
          v.violations.push_back("pair " + pair + " has " + std::to_string(mids) + " middle elements");
        } else if (mids == 1) {
          ++v.single_middle_pairs;
        } else if (sum != 0) {
          v.ok = false;
          v.violations.push_back("entry of D_" + std::to_string(i - 1) + " D_" + std::to_string(i) + " at " + pair + " is " + std::to_string(sum));
        }
      }
  }
  return v;
}

std::string complex_summary(const SignedComplex& c) {
  std::ostringstream os;
  os << "0";
  for (std::size_t i = c.terms.size(); i-- > 0;) os << " -> C_" << i << "[" << c.terms[i].size() << "]";
  os << " -> L_" << c.labels[c.top()] << " -> 0\n";
  os << c.arrows.size() << " arrows, " << c.squares.size() << " squares, " << (c.kostant ? "Kostant (exact)" : "not Kostant (not exact)") << "\n";
  return os.str();
}

std::string complex_json(const SignedComplex& c) {
  nlohmann::json j;
  j["w"] = c.labels[c.top()];
  j["kostant"] = c.kostant;
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : c.terms) {
    nlohmann::json ids = nlohmann::json::array();
    for (std::uint32_t x : t) ids.push_back(c.labels[x]);
    terms.push_back(ids);
  }
  j["terms"] = terms;
  nlohmann::json arrows = nlohmann::json::array();
  for (const auto& a : c.arrows) arrows.push_back({{"lo", c.labels[a.lo]}, {"hi", c.labels[a.hi]}, {"sign", a.sign}});
  j["arrows"] = arrows;
  nlohmann::json diffs = nlohmann::json::array();
  for (std::size_t i = 1; i < c.differentials.size(); ++i) diffs.push_back({{"i", i}, {"matrix", c.differentials[i]}});
  j["differentials"] = diffs;
  return j.dump(1) + "\n";
}

}  // namespace kostant
