#include "kostant/hermitian.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include <json.hpp>

#include "kostant/kostant.hpp"
#include "kostant/poset_kit.hpp"

namespace kostant {

std::string family_name(HSPair::Family f) {
  switch (f) {
    case HSPair::Family::A: return "A";
    case HSPair::Family::B: return "B";
    case HSPair::Family::C: return "C";
    case HSPair::Family::DD: return "DD";
    case HSPair::Family::DA: return "DA";
    case HSPair::Family::E6: return "E6";
    case HSPair::Family::E7: return "E7";
  }
  return "?";
}

std::string HSPair::name() const { return "(" + std::string(1, type) + std::to_string(rank) + "," + (levi_type.empty() ? "0" : levi_type) + ")"; }

std::optional<HSPair> hermitian_pair(const MarkedDiagram& d, std::string* reason) {
  auto reject = [&](const std::string& why) -> std::optional<HSPair> {
    if (reason) *reason = why;
    return std::nullopt;
  };
  if (d.empty()) return reject("empty diagram");
  if (!d.connected()) return reject("diagram " + d.type_name() + " is not connected");
  if (popcount(d.crossed()) != 1) return reject("expected exactly one crossed node, found " + std::to_string(popcount(d.crossed())));
  const Component c = d.components().front();
  const RootSystem rs(d);
  HSPair hs;
  hs.diagram = d;
  hs.alpha = members(d.crossed()).front();
  hs.alpha_number = c.bourbaki_number(hs.alpha);
  hs.coefficient = rs.highest_root(hs.alpha)[static_cast<std::size_t>(hs.alpha)];
  hs.type = c.type;
  hs.rank = c.rank;
  hs.levi_type = subdiagram(d, d.levi()).diagram.type_name();
  if (hs.coefficient != 1)
    return reject("node " + std::to_string(d.id(hs.alpha)) + " has coefficient " + std::to_string(hs.coefficient) + " in the highest root of " + c.name());
  const int a = hs.alpha_number, n = hs.rank;
  switch (c.type) {
    case 'A': hs.family = HSPair::Family::A; break;
    case 'B': hs.family = HSPair::Family::B; break;
    case 'C': hs.family = HSPair::Family::C; break;
    case 'D': hs.family = a == 1 ? HSPair::Family::DD : HSPair::Family::DA; break;
    case 'E': hs.family = n == 6 ? HSPair::Family::E6 : HSPair::Family::E7; break;
    default: return reject("type " + c.name() + " has no cominuscule node");
  }
  (void)n;
  if (reason) reason->clear();
  return hs;
}

bool is_hermitian(const MarkedDiagram& d) { return hermitian_pair(d).has_value(); }

HSPair require_hermitian(const MarkedDiagram& d) {
  std::string why;
  auto hs = hermitian_pair(d, &why);
  if (!hs) throw DomainError("not a Hermitian symmetric pair: " + why);
  return *hs;
}

namespace {

// Short relative to Phi^(i-1) = roots orthogonal to `prev`: no shorter root
// of Phi^(i-1) pairs nontrivially with r. A component of Phi^(i-1) with one
// root length thus counts as short.
bool short_in_subsystem(const RootSystem& rs, const Root& r, const std::vector<Root>& prev) {
  const int n = rs.norm(r);
  for (const Root& b : rs.positive_roots()) {
    if (rs.norm(b) >= n || rs.root_inner_product(b, r) == 0) continue;
    bool orth = true;
    for (const Root& g : prev) orth = orth && rs.root_inner_product(b, g) == 0;
    if (orth) return false;
  }
  return true;
}

}  // namespace

std::vector<Root> strongly_orthogonal(const HSPair& hs) {
  const RootSystem rs(hs.diagram);
  std::vector<Root> out;
  while (true) {
    const Root* best = nullptr;
    bool tie = false;
    for (const Root& r : rs.positive_roots()) {
      if (r[static_cast<std::size_t>(hs.alpha)] == 0) continue;
      bool orth = true;
      for (const Root& g : out) orth = orth && rs.root_inner_product(r, g) == 0;
      if (!orth || !short_in_subsystem(rs, r, out)) continue;
      if (!best || RootSystem::height(r) > RootSystem::height(*best)) {
        best = &r;
        tie = false;
      } else if (RootSystem::height(r) == RootSystem::height(*best)) {
        tie = true;
      }
    }
    if (!best) break;
    if (tie) throw ConsistencyError("no unique highest short root left in Phi(u) for " + hs.name());
    out.push_back(*best);
  }
  return out;
}

namespace {

// Nodes of D^(t) as a subset of the original nodes; 0 for the empty answer.
NodeSet reduced_nodes(const HSPair& hs, const RootSystem& rs, const std::vector<Root>& gammas, int t) {
  NodeSet cur = hs.diagram.all();
  for (int i = 0; i < t; ++i) {
    const Root& g = gammas[static_cast<std::size_t>(i)];
    if ((rs.support(g) & ~cur) != 0) throw ConsistencyError("gamma_" + std::to_string(i + 1) + " leaves D^(" + std::to_string(i) + ")");
    NodeSet adjacent = 0;
    for (int b : members(cur)) {
      Root simple(static_cast<std::size_t>(rs.rank()), 0);
      simple[static_cast<std::size_t>(b)] = 1;
      if (rs.root_inner_product(simple, g) != 0) adjacent |= bit(b);
    }
    cur &= ~adjacent;
    if (!contains(cur, hs.alpha)) return 0;
    const Subdiagram sub = subdiagram(hs.diagram, cur);
    for (NodeSet comp : sub.components)
      if (contains(comp, hs.alpha)) cur = comp;
  }
  return cur;
}

}  // namespace

MarkedDiagram reduced_diagram(const HSPair& hs, int t) {
  const RootSystem rs(hs.diagram);
  const std::vector<Root> gammas = strongly_orthogonal(hs);
  if (t < 0 || t > static_cast<int>(gammas.size()))
    throw DomainError("t = " + std::to_string(t) + " out of range 0.." + std::to_string(gammas.size()) + " for " + hs.name());
  const NodeSet nodes = reduced_nodes(hs, rs, gammas, t);
  if (nodes == 0) return {};
  return subdiagram(hs.diagram, nodes).diagram;
}

std::string DPrime::signature() const { return empty() ? "empty" : diagram.signature(); }

int DPrime::alpha_number() const { return empty() ? 0 : canonical_crossed_number(diagram); }

DPrime dprime(const HSPair& hs, NodeSet J) {
  DPrime out;
  out.t = popcount(J);
  MarkedDiagram d = reduced_diagram(hs, out.t);
  if (!d.empty() && !d.simply_laced()) d = cover_of_dual(d);
  out.diagram = std::move(d);
  if (!hs.diagram.simply_laced()) {
    // Two copies when J has a long simple root, unless the reduction used a
    // long gamma (then the block is a single module).
    const RootSystem rs(hs.diagram);
    const std::vector<Root> gammas = strongly_orthogonal(hs);
    bool long_gamma = false;
    for (int i = 0; i < out.t; ++i) long_gamma = long_gamma || !rs.is_short(gammas[static_cast<std::size_t>(i)]);
    for (int j : members(J))
      if (rs.symmetrizer(j) > 1 && !long_gamma) out.copies = 2;
  }
  return out;
}

bool block_nonempty(const CosetPoset& p, NodeSet J) {
  for (int j : members(J))
    if (p.diagram().neighbours(j) & J) return false;
  for (std::uint32_t w = 0; w < p.size(); ++w)
    if (in_singular_subposet(p, J, w)) return true;
  return false;
}

std::vector<NodeSet> independent_subsets(const MarkedDiagram& d) {
  std::vector<NodeSet> out;
  const NodeSet all = d.all();
  for (NodeSet J = 0;; ++J) {
    bool ok = true;
    for (int j : members(J)) ok = ok && (d.neighbours(j) & J) == 0;
    if (ok) out.push_back(J);
    if (J == all) break;
  }
  return out;
}

FinitePoset dprime_poset(const DPrime& dp) {
  if (dp.empty()) {
    Bitset b(1);
    b.set(0);
    return FinitePoset::from_lower_sets({b});
  }
  const CosetPoset q(dp.diagram);
  return q.bruhat_poset();
}

std::size_t dprime_subdiagram_count(const DPrime& dp) { return dp.empty() ? 1 : subdiagrams_without_s_trivial(dp.diagram).size(); }

Ordering parse_ordering(const std::string& s) {
  if (s == "bruhat") return Ordering::Bruhat;
  if (s == "mu") return Ordering::Mu;
  throw DomainError("unknown ordering '" + s + "' (expected bruhat or mu)");
}

std::string ordering_name(Ordering o) { return o == Ordering::Bruhat ? "bruhat" : "mu"; }

std::map<int, std::vector<std::uint32_t>> singular_u_cohomology(const KLTable& kl, const SingularSubposet& s, std::uint32_t w) {
  std::map<int, std::vector<std::uint32_t>> out;
  const auto wp = s.position(w);
  if (!wp) throw DomainError("element " + std::to_string(w) + " is not in ^S W^J");
  for (std::uint32_t x = 0; x <= *wp; ++x) {
    if (!s.bruhat.leq(x, *wp)) continue;
    for (auto [i, dim] : kl.ext(s.J, s.ids[x], w).dims)
      for (std::int64_t m = 0; m < dim; ++m) out[i].push_back(s.ids[x]);
  }
  return out;
}

SingularKostantReport classify_singular(const KLTable& kl, const SingularSubposet& s, const FinitePoset& order, Ordering o) {
  SingularKostantReport r;
  r.J = s.J;
  r.ordering = o;
  r.definition = o == Ordering::Bruhat ? "graded-interval definition" : "mu-ordering definition";
  r.components = s.size() == 0 ? 0 : order.components().size();
  for (std::uint32_t j = 0; j < s.size(); ++j) {
    SingularEntry e;
    e.id = s.ids[j];
    std::map<std::uint32_t, ExtVector> ext;
    for (std::uint32_t x = 0; x <= j; ++x)
      if (s.bruhat.leq(x, j)) ext[x] = kl.ext(s.J, s.ids[x], s.ids[j]);
    for (const auto& [x, v] : ext)
      for (auto [i, dim] : v.dims)
        for (std::int64_t m = 0; m < dim; ++m) e.cohomology[i].push_back(s.ids[x]);
    const IntervalTest t = graded_interval_test(order, j, [&](std::uint32_t x) {
      auto it = ext.find(x);
      return it == ext.end() ? ExtVector{} : it->second;
    });
    e.kostant = t.kostant;
    if (t.v) e.v = s.ids[*t.v];
    e.reason = t.reason;
    r.kostant_count += e.kostant;
    r.entries.push_back(std::move(e));
  }
  return r;
}

SingularKostantReport classify_singular(const KLTable& kl, const SingularSubposet& s, Ordering o) {
  if (o == Ordering::Bruhat) return classify_singular(kl, s, s.bruhat, o);
  return classify_singular(kl, s, mu_ordering(kl, s), o);
}

int wallach_constant(const HSPair& hs) {
  switch (hs.family) {
    case HSPair::Family::A: return 1;
    case HSPair::Family::DA: return 2;
    case HSPair::Family::DD: return hs.rank - 2;
    case HSPair::Family::E6: return 3;
    case HSPair::Family::E7: return 4;
    default: break;
  }
  throw ConfigError("no Wallach constant is configured for " + hs.name());
}

int wallach_rank(const HSPair& hs) {
  wallach_constant(hs);
  return static_cast<int>(strongly_orthogonal(hs).size());
}

WallachBlock wallach_block(const HSPair& hs, int k) {
  WallachBlock b;
  b.k = k;
  b.c = wallach_constant(hs);
  const int r = wallach_rank(hs);
  if (k < 0 || k > r) throw DomainError("k = " + std::to_string(k) + " out of range 0.." + std::to_string(r) + " for " + hs.name());
  const RootSystem rs(hs.diagram);
  b.lambda = Weight(static_cast<std::size_t>(rs.rank()), 0);
  b.lambda[static_cast<std::size_t>(hs.alpha)] = -static_cast<std::int64_t>(k) * b.c;
  b.data = antidominant_data(rs, b.lambda);
  const NodeSet J = b.data.J;
  if (popcount(J) != k)
    throw ConfigError("Wallach constant c = " + std::to_string(b.c) + " for " + hs.name() + " gives |J| = " + std::to_string(popcount(J)) +
                      " at k = " + std::to_string(k));
  for (int j : members(J))
    if (hs.diagram.neighbours(j) & J) throw ConfigError("Wallach constant for " + hs.name() + " gives a singular set that is not of type A1^k");
  return b;
}

namespace {

// S-dominant W_S-conjugate; throws when the weight is S-singular.
Weight s_dominant(const RootSystem& rs, NodeSet S, Weight w) {
  while (true) {
    int i = -1;
    for (int j : members(S)) {
      if (w[static_cast<std::size_t>(j)] == 0) throw ConsistencyError("weight is singular for the Levi subalgebra");
      if (w[static_cast<std::size_t>(j)] < 0) {
        i = j;
        break;
      }
    }
    if (i < 0) return w;
    w = rs.reflect(w, i);
  }
}

}  // namespace

ResolutionData minimal_resolution(const CosetPoset& p, const HSPair& hs, int k) {
  if (!(p.diagram() == hs.diagram)) throw DomainError("coset poset does not belong to " + hs.name());
  const WallachBlock wb = wallach_block(hs, k);
  const RootSystem& rs = p.roots();
  const NodeSet J = wb.data.J, S = p.levi();
  const SingularSubposet s = singular_subposet(p, J);
  if (s.size() == 0) throw ConsistencyError("the Wallach block of " + hs.name() + " is empty");

  ResolutionData r;
  r.pair = hs.name();
  r.k = k;
  r.J = J;
  const DPrime dp = dprime(hs, J);
  r.dprime = dp.signature();
  if (!isomorphic(s.bruhat, dprime_poset(dp))) throw ConsistencyError("^S W^J is not isomorphic to the poset of D' = " + r.dprime);

  const std::size_t m = s.size();
  std::vector<Weight> hw(m);
  std::int32_t top = -1;
  for (std::size_t j = 0; j < m; ++j) {
    const std::vector<int> word = p.reduced_word(s.ids[j]);
    Weight v = wb.data.nu;
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = rs.reflect(v, *it);
    v = s_dominant(rs, S, v);
    for (auto& c : v) c -= 1;
    hw[j] = v;
    if (v == wb.lambda) top = static_cast<std::int32_t>(j);
  }
  if (top != static_cast<std::int32_t>(m - 1)) throw ConsistencyError("the Wallach module is not the top of ^S W^J");
  const auto tp = static_cast<std::uint32_t>(top);
  r.top = s.ids[tp];
  const GradedInterval g = interval(s.bruhat, 0, tp);
  if (g.elements.size() != m || !g.graded) throw ConsistencyError("^S W^J is not a graded interval: " + g.witness);

  // Possible shifts along maximal chains of ^S W from each element to the top.
  const Bitset ideal = p.lower_ideal(r.top);
  std::vector<std::set<int>> chain(p.size());
  chain[r.top] = {0};
  std::vector<Cover> edges = p.covers();
  std::sort(edges.begin(), edges.end(), [](const Cover& a, const Cover& b) { return a.lo > b.lo; });
  for (const Cover& e : edges) {
    if (!ideal.test(e.hi)) continue;
    const int add = (e.label >= 0 && contains(J, e.label)) ? 0 : 1;
    for (int c : chain[e.hi]) chain[e.lo].insert(c + add);
  }

  const int R = *g.rank_of(tp);
  r.betti.assign(static_cast<std::size_t>(R) + 1, 0);
  r.shifts.assign(static_cast<std::size_t>(R) + 1, {});
  for (std::size_t j = 0; j < m; ++j) {
    ResolutionTerm t;
    t.id = s.ids[j];
    t.degree = R - *g.rank_of(static_cast<std::uint32_t>(j));
    const auto& c = chain[t.id];
    if (c.size() != 1) throw ConsistencyError("degree shift of element " + std::to_string(t.id) + " depends on the chain");
    t.shift = *c.begin();
    Weight diff = wb.lambda;
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= hw[j][i];
    const Rational grade = rs.weight_to_root_coords(diff)[static_cast<std::size_t>(hs.alpha)];
    if (grade != Rational(t.shift))
      throw ConsistencyError("degree shift of element " + std::to_string(t.id) + " is " + std::to_string(t.shift) + " along chains but " +
                             grade.str() + " from the grading");
    t.highest_weight = hw[j];
    t.dimension = rs.weyl_dimension(S, hw[j]);
    r.betti[static_cast<std::size_t>(t.degree)] += t.dimension;
    r.shifts[static_cast<std::size_t>(t.degree)][t.shift] += t.dimension;
    r.terms.push_back(std::move(t));
  }
  std::sort(r.terms.begin(), r.terms.end(), [](const ResolutionTerm& a, const ResolutionTerm& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.id < b.id;
  });
  return r;
}

std::string resolution_text(const ResolutionData& r) {
  std::ostringstream os;
  auto term = [&](int shift, std::uint64_t rank) {
    std::string s = shift == 0 ? "R" : "R(-" + std::to_string(shift) + ")";
    if (rank != 1) s += "^" + std::to_string(rank);
    return s;
  };
  os << "0";
  for (std::size_t i = r.shifts.size(); i-- > 0;) {
    os << " -> ";
    bool first = true;
    for (auto it = r.shifts[i].rbegin(); it != r.shifts[i].rend(); ++it) {
      if (!first) os << " + ";
      os << term(it->first, it->second);
      first = false;
    }
  }
  os << " -> C[X_" << r.k << "] -> 0\n";
  os << "i  b_i  shifts\n";
  for (std::size_t i = 0; i < r.betti.size(); ++i) {
    os << i << "  " << r.betti[i] << " ";
    for (auto [sh, b] : r.shifts[i]) os << " " << sh << "^" << b;
    os << "\n";
  }
  return os.str();
}

std::string resolution_json(const ResolutionData& r) {
  nlohmann::json j;
  j["pair"] = r.pair;
  j["k"] = r.k;
  j["dprime"] = r.dprime;
  j["length"] = r.length();
  j["betti"] = r.betti;
  nlohmann::json shifts = nlohmann::json::array();
  for (const auto& m : r.shifts) {
    nlohmann::json row = nlohmann::json::array();
    for (auto [sh, b] : m) row.push_back({{"shift", sh}, {"rank", b}});
    shifts.push_back(row);
  }
  j["shifts"] = shifts;
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : r.terms)
    terms.push_back({{"id", t.id}, {"degree", t.degree}, {"shift", t.shift}, {"dimension", t.dimension}, {"highest_weight", t.highest_weight}});
  j["terms"] = terms;
  return j.dump(1) + "\n";
}

bool isomorphic(const FinitePoset& a, const FinitePoset& b) {
  const std::size_t n = a.size();
  if (n != b.size() || a.hasse().size() != b.hasse().size()) return false;
  using Sig = std::array<std::size_t, 4>;
  auto sig = [](const FinitePoset& p, std::uint32_t x) {
    return Sig{p.below(x).count(), p.above(x).count(), p.covers_down(x).size(), p.covers_up(x).size()};
  };
  std::vector<Sig> sa(n), sb(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    sa[x] = sig(a, x);
    sb[x] = sig(b, x);
  }
  {
    auto ca = sa, cb = sb;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return false;
  }
  std::vector<std::int64_t> f(n, -1);
  std::vector<char> used(n, 0);
  // Assign a's elements in order; a's numbering is a linear extension so
  // every earlier element is either below or incomparable.
  std::vector<std::uint32_t> next(n, 0);
  std::size_t i = 0;
  while (i < n) {
    bool placed = false;
    if (f[i] >= 0) {
      used[static_cast<std::size_t>(f[i])] = 0;
      f[i] = -1;
    }
    for (std::uint32_t y = next[i]; y < n && !placed; ++y) {
      if (used[y] || sb[y] != sa[i]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) {
        const auto fk = static_cast<std::uint32_t>(f[k]);
        ok = a.leq(static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(i)) == b.leq(fk, y) &&
             a.leq(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(k)) == b.leq(y, fk);
      }
      if (ok) {
        f[i] = y;
        used[y] = 1;
        next[i] = y + 1;
        placed = true;
      }
    }
    if (placed) {
      ++i;
      if (i < n) next[i] = 0;
      continue;
    }
    if (i == 0) return false;
    next[i] = 0;
    --i;
  }
  return true;
}

}  // namespace kostant
