#include "kostant/kostant.hpp"

#include <algorithm>
#include <future>
#include <set>

namespace kostant {

Method parse_method(const std::string& s) {
  if (s == "palindromic") return Method::Palindromic;
  if (s == "kl") return Method::KL;
  if (s == "both") return Method::Both;
  throw DomainError("unknown method '" + s + "' (expected palindromic, kl or both)");
}

std::string method_name(Method m) {
  switch (m) {
    case Method::Palindromic: return "palindromic";
    case Method::KL: return "kl";
    case Method::Both: return "both";
  }
  return "?";
}

std::vector<std::uint32_t> KostantReport::kostant_elements() const {
  std::vector<std::uint32_t> out;
  for (const auto& e : entries)
    if (e.kostant) out.push_back(e.id);
  return out;
}

namespace {

bool palindromic_ideal(const CosetPoset& p, const Bitset& ideal, std::uint32_t w, std::vector<std::int64_t>& counts) {
  const int l = p.length(w);
  counts.assign(static_cast<std::size_t>(l) + 1, 0);
  for (std::size_t y = ideal.find_first(); y != Bitset::npos; y = ideal.find_next(y)) ++counts[static_cast<std::size_t>(p.length(static_cast<std::uint32_t>(y)))];
  for (int k = 0; k <= l / 2; ++k)
    if (counts[static_cast<std::size_t>(k)] != counts[static_cast<std::size_t>(l - k)]) return false;
  return true;
}

// Depth-first walk of the parent tree below `root`, whose ideal is given.
void walk(const CosetPoset& p, std::uint32_t root, Bitset root_ideal, std::vector<char>& out) {
  struct Frame {
    std::uint32_t node;
    Bitset ideal;
    std::size_t next_child;
  };
  std::vector<std::int64_t> counts;
  std::vector<Frame> stack;
  out[root] = palindromic_ideal(p, root_ideal, root, counts);
  stack.push_back({root, std::move(root_ideal), 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& kids = p.children(f.node);
    if (f.next_child == kids.size()) {
      stack.pop_back();
      continue;
    }
    const std::uint32_t c = kids[f.next_child++];
    Bitset ideal = p.extend_ideal(f.ideal, c);
    out[c] = palindromic_ideal(p, ideal, c, counts);
    stack.push_back({c, std::move(ideal), 0});
  }
}

}  // namespace

std::vector<bool> palindromic_elements(const CosetPoset& p, unsigned jobs) {
  std::vector<char> out(p.size(), 0);
  Bitset e(p.size());
  e.set(0);
  out[0] = 1;
  const auto& roots = p.children(0);
  if (jobs <= 1 || roots.size() <= 1) {
    for (std::uint32_t c : roots) walk(p, c, p.extend_ideal(e, c), out);
  } else {
    std::vector<std::future<void>> tasks;
    const std::size_t n = std::min<std::size_t>(jobs, roots.size());
    for (std::size_t t = 0; t < n; ++t)
      tasks.push_back(std::async(std::launch::async, [&, t] {
        for (std::size_t k = t; k < roots.size(); k += n) walk(p, roots[k], p.extend_ideal(e, roots[k]), out);
      }));
    for (auto& t : tasks) t.get();
  }
  return {out.begin(), out.end()};
}

std::vector<NodeSet> subdiagrams_without_s_trivial(const MarkedDiagram& d) {
  std::vector<NodeSet> out;
  const NodeSet all = d.all();
  for (NodeSet I = 0;; ++I) {
    const Subdiagram sub = subdiagram(d, I);
    if (!sub.has_s_trivial_component()) out.push_back(I);
    if (I == all) break;
  }
  return out;
}

std::map<NodeSet, std::uint32_t> standard_kostant(const CosetPoset& p) {
  std::map<NodeSet, std::uint32_t> out;
  std::map<std::uint32_t, NodeSet> inverse;
  for (NodeSet I : subdiagrams_without_s_trivial(p.diagram())) {
    const std::uint32_t x = p.phi(I);
    if (auto [it, fresh] = inverse.emplace(x, I); !fresh)
      throw ConsistencyError("phi is not injective: two subdiagrams map to element " + std::to_string(x));
    out[I] = x;
  }
  return out;
}

KostantReport classify_regular(const CosetPoset& p, const ClassifyOptions& opt) {
  KostantReport r;
  r.signature = p.diagram().signature();
  r.method = opt.method;
  const bool maximal = popcount(p.diagram().crossed()) == 1;
  r.criterion = maximal ? "palindromic Poincare polynomial" : "rational smoothness criterion";
  r.pruning_applied = maximal && opt.prune;
  r.entries.resize(p.size());

  std::vector<bool> pal;
  if (opt.method != Method::KL) pal = palindromic_elements(p, opt.jobs);
  std::unique_ptr<KLTable> own;
  const KLTable* kl = opt.kl;
  if (opt.method != Method::Palindromic && !kl) {
    own = std::make_unique<KLTable>(p);
    kl = own.get();
  }

  for (std::uint32_t w = 0; w < p.size(); ++w) {
    KostantEntry& e = r.entries[w];
    e.id = w;
    e.pruned = r.pruning_applied && p.descent_count(w) > 1;
    if (!pal.empty()) {
      e.palindromic = pal[w];
      if (e.pruned && pal[w])
        throw ConsistencyError("element " + std::to_string(w) + " has a palindromic Poincare polynomial but several descents");
    }
    if (kl) e.kl_trivial = kl->column_is_trivial(w);
    if (e.palindromic.has_value() && e.kl_trivial.has_value() && *e.palindromic != *e.kl_trivial) r.methods_agree = false;
    e.kostant = e.palindromic.has_value() ? *e.palindromic : *e.kl_trivial;
    r.kostant_count += e.kostant;
  }
  for (auto [I, x] : standard_kostant(p)) {
    r.entries[x].standard = I;
    ++r.standard_count;
  }
  return r;
}

namespace {

std::size_t count_subdiagrams(const MarkedDiagram& d) { return subdiagrams_without_s_trivial(d).size(); }

}  // namespace

BijectionVerdict verify_bijection(const CosetPoset& p) {
  const MarkedDiagram& d = p.diagram();
  BijectionVerdict v;
  if (!d.connected() || popcount(d.crossed()) != 1) {
    v.theorem = "theorem does not apply";
    return v;
  }
  const std::vector<bool> pal = palindromic_elements(p);
  v.palindromic = static_cast<std::size_t>(std::count(pal.begin(), pal.end(), true));
  if (d.simply_laced()) {
    v.applies = true;
    v.theorem = "simply-laced maximal parabolic";
    const auto std_map = standard_kostant(p);
    v.subdiagrams = std_map.size();
    std::set<std::uint32_t> image;
    for (auto [I, x] : std_map) {
      image.insert(x);
      if (!pal[x]) v.unmatched_subdiagrams.push_back(I);
    }
    for (std::uint32_t w = 0; w < p.size(); ++w)
      if (pal[w] && !image.count(w)) v.unmatched_elements.push_back(w);
    v.holds = v.unmatched_elements.empty() && v.unmatched_subdiagrams.empty() && v.palindromic == v.subdiagrams;
    return v;
  }
  try {
    const MarkedDiagram cover = cover_of_dual(d);
    v.applies = true;
    v.theorem = "Hermitian symmetric, cover of the dual " + cover.signature();
    v.subdiagrams = count_subdiagrams(cover);
    v.holds = v.palindromic == v.subdiagrams;
  } catch (const DomainError&) {
    v.theorem = "theorem does not apply";
  }
  return v;
}

UCohomology u_cohomology(const CosetPoset& p, std::uint32_t w, const KLTable* kl) {
  UCohomology u;
  const Bitset ideal = p.lower_ideal(w);
  if (!kl) {
    std::vector<std::int64_t> counts;
    u.kostant = palindromic_ideal(p, ideal, w, counts);
    for (std::size_t x = ideal.find_first(); x != Bitset::npos; x = ideal.find_next(x))
      u.degrees[p.length(w) - p.length(static_cast<std::uint32_t>(x))].push_back(static_cast<std::uint32_t>(x));
    return u;
  }
  u.kostant = true;
  for (std::size_t x = ideal.find_first(); x != Bitset::npos; x = ideal.find_next(x)) {
    const auto xs = static_cast<std::uint32_t>(x);
    const IntPolynomial f = kl->relative(xs, w);
    if (f != IntPolynomial{1}) u.kostant = false;
    for (auto [i, dim] : ext_from_polynomial(f, p.length(w) - p.length(xs)).dims)
      for (std::int64_t k = 0; k < dim; ++k) u.degrees[i].push_back(xs);
  }
  return u;
}

IntervalTest graded_interval_test(const FinitePoset& order, std::uint32_t w, const std::function<ExtVector(std::uint32_t)>& ext) {
  IntervalTest r;
  std::map<std::uint32_t, int> degree;
  for (std::uint32_t x = 0; x <= w; ++x) {
    const ExtVector e = ext(x);
    if (e.empty()) continue;
    if (e.dims.size() != 1 || e.dims.begin()->second != 1) {
      r.reason = "Ext(N_" + std::to_string(x) + ", L_w) is not a single dimension one";
      return r;
    }
    degree[x] = e.dims.begin()->first;
  }
  for (auto [v, iv] : degree) {
    if (!order.leq(v, w)) continue;
    const GradedInterval g = interval(order, v, w);
    if (g.elements.size() != degree.size() || !g.graded) continue;
    bool ok = true;
    const int top = *g.rank_of(w);
    for (std::uint32_t x : g.elements) {
      auto it = degree.find(x);
      if (it == degree.end() || top - *g.rank_of(x) != it->second) {
        ok = false;
        break;
      }
    }
    if (ok) {
      r.kostant = true;
      r.v = v;
      return r;
    }
  }
  r.reason = "the Ext support is not a graded interval with matching ranks";
  return r;
}

}  // namespace kostant
