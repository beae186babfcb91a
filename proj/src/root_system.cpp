#include "kostant/root_system.hpp"

#include <algorithm>
#include <deque>

#include <boost/multiprecision/cpp_int.hpp>

namespace kostant {

namespace {

std::vector<std::vector<Rational>> invert(const MarkedDiagram& d) {
  const int n = d.size();
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(2 * n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = d.cartan(i, j);
    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)] == Rational(0)) ++piv;
    if (piv == n) throw DiagramError("Cartan matrix is singular");
    std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(col)]);
    const Rational p = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    for (auto& x : a[static_cast<std::size_t>(col)]) x /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const Rational f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (f == Rational(0)) continue;
      for (int k = 0; k < 2 * n; ++k)
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] -= f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(k)];
    }
  }
  std::vector<std::vector<Rational>> inv(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)];
  return inv;
}

}  // namespace

RootSystem::RootSystem(const MarkedDiagram& d) : diagram_(d), rank_(d.size()) {
  const auto comps = d.components();  // validates finite type
  const auto n = static_cast<std::size_t>(rank_);
  d_.assign(n, 0);
  component_of_.assign(n, -1);

  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const NodeSet comp = comps[ci].nodes();
    std::vector<Rational> dr(n, Rational(0));
    const int start = members(comp).front();
    dr[static_cast<std::size_t>(start)] = 1;
    std::deque<int> q{start};
    NodeSet seen = bit(start);
    while (!q.empty()) {
      const int i = q.front();
      q.pop_front();
      for (int j : members(d.neighbours(i) & ~seen)) {
        dr[static_cast<std::size_t>(j)] = dr[static_cast<std::size_t>(i)] * Rational(d.cartan(i, j)) / Rational(d.cartan(j, i));
        seen |= bit(j);
        q.push_back(j);
      }
    }
    Rational mn = dr[static_cast<std::size_t>(start)];
    for (int i : members(comp)) mn = std::min(mn, dr[static_cast<std::size_t>(i)]);
    for (int i : members(comp)) {
      d_[static_cast<std::size_t>(i)] = static_cast<int>((dr[static_cast<std::size_t>(i)] / mn).to_integer());
      component_of_[static_cast<std::size_t>(i)] = static_cast<int>(ci);
    }
  }

  // Close the simple roots under simple reflections.
  std::vector<Root> found;
  std::map<Root, int> seen;
  for (int i = 0; i < rank_; ++i) {
    Root r(n, 0);
    r[static_cast<std::size_t>(i)] = 1;
    seen.emplace(r, 0);
    found.push_back(r);
  }
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (int i = 0; i < rank_; ++i) {
      const Root r = reflect_root(found[k], i);
      if (std::any_of(r.begin(), r.end(), [](int c) { return c < 0; })) continue;
      if (seen.emplace(r, 0).second) found.push_back(r);
    }
  }
  std::sort(found.begin(), found.end(), [](const Root& a, const Root& b) {
    const int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  pos_ = std::move(found);
  for (std::size_t k = 0; k < pos_.size(); ++k) index_[pos_[k]] = static_cast<int>(k);
  simple_idx_.resize(n);
  for (int i = 0; i < rank_; ++i) {
    Root r(n, 0);
    r[static_cast<std::size_t>(i)] = 1;
    simple_idx_[static_cast<std::size_t>(i)] = index_.at(r);
  }

  highest_.assign(comps.size(), -1);
  highest_short_.assign(comps.size(), -1);
  for (std::size_t k = 0; k < pos_.size(); ++k) {
    const int ci = component_of_[static_cast<std::size_t>(members(support(pos_[k])).front())];
    highest_[static_cast<std::size_t>(ci)] = static_cast<int>(k);
    if (is_short(pos_[k])) highest_short_[static_cast<std::size_t>(ci)] = static_cast<int>(k);
  }
  inverse_cartan_ = invert(d);
}

int RootSystem::root_index(const Root& r) const {
  auto it = index_.find(r);
  return it == index_.end() ? -1 : it->second;
}

bool RootSystem::is_root(const Root& r) const {
  if (root_index(r) >= 0) return true;
  Root neg = r;
  for (auto& c : neg) c = -c;
  return root_index(neg) >= 0;
}

int RootSystem::height(const Root& r) {
  int h = 0;
  for (int c : r) h += c;
  return h;
}

NodeSet RootSystem::support(const Root& r) const {
  NodeSet s = 0;
  for (int i = 0; i < rank_; ++i)
    if (r[static_cast<std::size_t>(i)] != 0) s |= bit(i);
  return s;
}

std::int64_t RootSystem::root_inner_product(const Root& a, const Root& b) const {
  if (static_cast<int>(a.size()) != rank_ || static_cast<int>(b.size()) != rank_) throw DomainError("root dimension mismatch");
  std::int64_t s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < rank_; ++j) s += static_cast<std::int64_t>(a[static_cast<std::size_t>(i)]) * b[static_cast<std::size_t>(j)] * form(i, j);
  }
  return s;
}

int RootSystem::norm(const Root& r) const { return static_cast<int>(root_inner_product(r, r) / 2); }

bool RootSystem::is_short(const Root& r) const { return norm(r) == 1; }

std::int64_t RootSystem::coroot_pairing(const Weight& lambda, const Root& beta) const {
  if (static_cast<int>(lambda.size()) != rank_ || static_cast<int>(beta.size()) != rank_) throw DomainError("weight dimension mismatch");
  std::int64_t s = 0;
  for (int i = 0; i < rank_; ++i) s += static_cast<std::int64_t>(beta[static_cast<std::size_t>(i)]) * d_[static_cast<std::size_t>(i)] * lambda[static_cast<std::size_t>(i)];
  const int nb = norm(beta);
  if (s % nb != 0) throw ConsistencyError("non-integral coroot pairing");
  return s / nb;
}

int RootSystem::root_simple_pairing(const Root& beta, int i) const {
  int s = 0;
  for (int j = 0; j < rank_; ++j) s += beta[static_cast<std::size_t>(j)] * cartan(i, j);
  return s;
}

Weight RootSystem::root_to_weight(const Root& r) const {
  Weight w(static_cast<std::size_t>(rank_), 0);
  for (int i = 0; i < rank_; ++i) w[static_cast<std::size_t>(i)] = root_simple_pairing(r, i);
  return w;
}

std::vector<Rational> RootSystem::weight_to_root_coords(const Weight& w) const {
  if (static_cast<int>(w.size()) != rank_) throw DomainError("weight dimension mismatch");
  std::vector<Rational> c(static_cast<std::size_t>(rank_), Rational(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      c[static_cast<std::size_t>(i)] += inverse_cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * Rational(w[static_cast<std::size_t>(j)]);
  return c;
}

Rational RootSystem::inner_product(const Weight& a, const Weight& b) const {
  if (static_cast<int>(b.size()) != rank_) throw DomainError("weight dimension mismatch");
  const auto c = weight_to_root_coords(a);
  Rational s(0);
  for (int j = 0; j < rank_; ++j) s += c[static_cast<std::size_t>(j)] * Rational(d_[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(j)]);
  return s;
}

Weight RootSystem::fundamental_weight(int i) const {
  Weight w(static_cast<std::size_t>(rank_), 0);
  w.at(static_cast<std::size_t>(i)) = 1;
  return w;
}

Weight RootSystem::reflect(const Weight& w, int i) const {
  Weight r = w;
  const std::int64_t k = w[static_cast<std::size_t>(i)];
  if (k == 0) return r;
  for (int j = 0; j < rank_; ++j) r[static_cast<std::size_t>(j)] -= k * cartan(j, i);
  return r;
}

Weight RootSystem::reflect(const Weight& w, const Root& beta) const {
  const std::int64_t k = coroot_pairing(w, beta);
  Weight r = w;
  if (k == 0) return r;
  const Weight b = root_to_weight(beta);
  for (int j = 0; j < rank_; ++j) r[static_cast<std::size_t>(j)] -= k * b[static_cast<std::size_t>(j)];
  return r;
}

Root RootSystem::reflect_root(const Root& r, int i) const {
  Root out = r;
  out[static_cast<std::size_t>(i)] -= root_simple_pairing(r, i);
  return out;
}

const Root& RootSystem::highest_root(int node) const {
  return pos_.at(static_cast<std::size_t>(highest_.at(static_cast<std::size_t>(component_of_.at(static_cast<std::size_t>(node))))));
}

const Root& RootSystem::highest_short_root(int node) const {
  return pos_.at(static_cast<std::size_t>(highest_short_.at(static_cast<std::size_t>(component_of_.at(static_cast<std::size_t>(node))))));
}

std::vector<int> RootSystem::levi_positive_roots(NodeSet S) const {
  std::vector<int> out;
  for (std::size_t k = 0; k < pos_.size(); ++k)
    if ((support(pos_[k]) & ~S) == 0) out.push_back(static_cast<int>(k));
  return out;
}

std::uint64_t RootSystem::weyl_dimension(NodeSet S, const Weight& hw) const {
  if (static_cast<int>(hw.size()) != rank_) throw DomainError("weight dimension mismatch");
  for (int i : members(S))
    if (hw[static_cast<std::size_t>(i)] < 0)
      throw DomainError("weight is not dominant for simple root alpha_" + std::to_string(diagram_.id(i)));
  using boost::multiprecision::cpp_int;
  cpp_int num = 1, den = 1;
  const Weight r = rho();
  Weight shifted = hw;
  for (int i = 0; i < rank_; ++i) shifted[static_cast<std::size_t>(i)] += 1;
  for (int k : levi_positive_roots(S)) {
    num *= coroot_pairing(shifted, pos_[static_cast<std::size_t>(k)]);
    den *= coroot_pairing(r, pos_[static_cast<std::size_t>(k)]);
  }
  if (num % den != 0) throw ConsistencyError("Weyl dimension formula produced a non-integer");
  const cpp_int q = num / den;
  if (q > std::numeric_limits<std::uint64_t>::max()) throw ConsistencyError("Weyl dimension exceeds 64 bits");
  return static_cast<std::uint64_t>(q);
}

std::uint64_t RootSystem::group_order() const {
  std::uint64_t order = 1;
  const std::size_t ncomp = highest_.size();
  for (std::size_t ci = 0; ci < ncomp; ++ci) {
    std::vector<int> count;
    for (const Root& r : pos_) {
      if (component_of_[static_cast<std::size_t>(members(support(r)).front())] != static_cast<int>(ci)) continue;
      const auto h = static_cast<std::size_t>(height(r));
      if (count.size() <= h + 1) count.resize(h + 2, 0);
      ++count[h];
    }
    // The number of exponents equal to k is n_k - n_{k+1}.
    for (std::size_t k = 1; k + 1 < count.size(); ++k)
      for (int m = 0; m < count[k] - count[k + 1]; ++m) order = static_cast<std::uint64_t>(detail::checked_mul(static_cast<std::int64_t>(order), static_cast<std::int64_t>(k + 1)));
  }
  return order;
}

std::uint64_t RootSystem::parabolic_order(NodeSet S) const {
  if (S == 0) return 1;
  return RootSystem(subdiagram(diagram_, S).diagram).group_order();
}

}  // namespace kostant
