#include "kostant/kl.hpp"

#include <algorithm>

namespace kostant {

CanonicalBasis::CanonicalBasis(const CosetPoset& p, ModuleKind kind) : p_(&p), kind_(kind) {}

std::size_t CanonicalBasis::computed_columns() const {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  return columns_.size();
}

const CanonicalBasis::Column& CanonicalBasis::column(std::uint32_t w) const {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  return column_locked(w);
}

LaurentPolynomial CanonicalBasis::h(std::uint32_t x, std::uint32_t w) const {
  const Column& c = column(w);
  auto it = std::lower_bound(c.xs.begin(), c.xs.end(), x);
  if (it == c.xs.end() || *it != x) return {};
  return c.h[static_cast<std::size_t>(it - c.xs.begin())];
}

IntPolynomial CanonicalBasis::polynomial(std::uint32_t x, std::uint32_t w) const {
  const LaurentPolynomial hx = h(x, w);
  if (hx.is_zero()) return {};
  const int d = p_->length(w) - p_->length(x);
  std::vector<std::int64_t> c(static_cast<std::size_t>(d / 2) + 1, 0);
  for (int e = hx.low_degree(); e <= hx.high_degree(); ++e) {
    const std::int64_t a = hx.coeff(e);
    if (!a) continue;
    if ((d - e) % 2 != 0 || e > d || e < 0 || (x != w && e == 0))
      throw ConsistencyError("canonical basis coefficient h_{" + std::to_string(x) + "," + std::to_string(w) + "} has a term v^" +
                             std::to_string(e) + " outside the admissible range");
    c[static_cast<std::size_t>((d - e) / 2)] = a;
  }
  return IntPolynomial(std::move(c));
}

const CanonicalBasis::Column& CanonicalBasis::column_locked(std::uint32_t w) const {
  if (auto it = columns_.find(w); it != columns_.end()) return *it->second;
  std::map<std::uint32_t, LaurentPolynomial> acc;
  if (w == 0) {
    acc[0] = LaurentPolynomial::monomial(0);
  } else {
    const auto v = static_cast<std::uint32_t>(p_->parent(w));
    const int s = p_->parent_generator(w);
    const LaurentPolynomial up = LaurentPolynomial::monomial(1);
    const LaurentPolynomial down = LaurentPolynomial::monomial(-1);
    const LaurentPolynomial both = up + down;
    // Columns live behind unique_ptr, so references survive rehashing.
    const Column& prev = column_locked(v);
    for (std::size_t k = 0; k < prev.xs.size(); ++k) {
      const std::uint32_t x = prev.xs[k];
      const LaurentPolynomial& hx = prev.h[k];
      const std::int32_t t = p_->transition(x, s);
      if (t == CosetPoset::kSameCoset) {
        if (kind_ == ModuleKind::Trivial) acc[x] += hx * both;
        continue;
      }
      acc[static_cast<std::uint32_t>(t)] += hx;
      acc[x] += hx * (p_->ascends(x, s) ? up : down);
    }
    // Remove the non-positive degree parts below w, largest element first.
    auto it = acc.find(w);
    while (it != acc.begin()) {
      --it;
      const std::uint32_t z = it->first;
      const LaurentPolynomial& c = it->second;
      if (c.is_zero() || c.low_degree() > 0) continue;
      LaurentPolynomial sym;
      for (int e = c.low_degree(); e <= 0; ++e) {
        const std::int64_t a = c.coeff(e);
        if (!a) continue;
        sym.add_monomial(e, a);
        if (e) sym.add_monomial(-e, a);
      }
      const Column& cz = column_locked(z);
      for (std::size_t k = 0; k < cz.xs.size(); ++k) acc[cz.xs[k]] -= sym * cz.h[k];
      it = acc.find(z);
    }
  }
  auto col = std::make_unique<Column>();
  for (auto& [x, hx] : acc) {
    if (hx.is_zero()) continue;
    col->xs.push_back(x);
    col->h.push_back(std::move(hx));
  }
  const Column& ref = *col;
  columns_.emplace(w, std::move(col));
  return ref;
}

std::string convention_name(Convention c) {
  switch (c) {
    case Convention::MaximalRepresentatives: return "maximal-representatives";
    case Convention::MinimalRepresentatives: return "minimal-representatives";
    case Convention::AlternatingSum: return "alternating-sum";
  }
  return "?";
}

Convention parse_convention(const std::string& s) {
  for (Convention c : {Convention::MaximalRepresentatives, Convention::MinimalRepresentatives, Convention::AlternatingSum})
    if (convention_name(c) == s) return c;
  throw DomainError("unknown KL convention '" + s + "'");
}

ExtVector ext_from_polynomial(const IntPolynomial& p, int length_difference) {
  ExtVector e;
  for (int k = 0; k <= p.degree(); ++k)
    if (const std::int64_t a = p.coeff(k)) e.dims[length_difference - 2 * k] = a;
  return e;
}

KLTable::KLTable(const CosetPoset& p, Convention c, Route r, std::size_t full_group_cap)
    : p_(p), convention_(c), route_(r), cap_(full_group_cap) {
  if (route_ == Route::Auto) route_ = p.roots().group_order() <= cap_ ? Route::FullGroup : Route::Quotient;
  if (route_ == Route::Quotient) {
    if (convention_ == Convention::MinimalRepresentatives)
      throw ConfigError("the minimal-representatives convention needs the full Weyl group");
    CanonicalBasis::ModuleKind kind = kCalibratedModule;
    if (convention_ == Convention::AlternatingSum)
      kind = kCalibratedModule == CanonicalBasis::ModuleKind::Sign ? CanonicalBasis::ModuleKind::Trivial : CanonicalBasis::ModuleKind::Sign;
    quotient_basis_ = std::make_unique<CanonicalBasis>(p_, kind);
  }
}

KLTable::~KLTable() = default;

const CosetPoset& KLTable::full_group() const {
  std::call_once(full_once_, [this] {
    const std::uint64_t order = p_.roots().group_order();
    if (order > cap_)
      throw SizeLimitError("full-group KL polynomials for " + p_.diagram().type_name() + " need |W| = " + std::to_string(order) +
                           " elements, above the cap of " + std::to_string(cap_) + "; use the quotient route");
    if (p_.levi() == 0) {
      full_ = &p_;
    } else {
      full_owned_ = std::make_unique<CosetPoset>(p_.diagram().with_crossed(p_.diagram().all()), cap_);
      full_ = full_owned_.get();
    }
    full_basis_ = std::make_unique<CanonicalBasis>(*full_, CanonicalBasis::ModuleKind::Sign);
    for (std::uint32_t z = 0; z < full_->size(); ++z)
      if ((full_->support(z) & ~p_.levi()) == 0) levi_.push_back(z);
    longest_levi_ = full_->phi(p_.levi());
  });
  return *full_;
}

IntPolynomial KLTable::ordinary(std::uint32_t a, std::uint32_t b) const {
  full_group();
  return full_basis_->polynomial(a, b);
}

std::uint32_t KLTable::full_id(std::uint32_t x) const { return full_group().apply_word(0, p_.reduced_word(x)); }

const std::vector<std::uint32_t>& KLTable::levi_elements() const {
  full_group();
  return levi_;
}

IntPolynomial KLTable::compute_full(std::uint32_t x, std::uint32_t w) const {
  const CosetPoset& g = full_group();
  const auto wx = p_.reduced_word(x);
  const auto ww = p_.reduced_word(w);
  switch (convention_) {
    case Convention::MinimalRepresentatives:
      return ordinary(g.apply_word(0, wx), g.apply_word(0, ww));
    case Convention::MaximalRepresentatives:
      return ordinary(g.apply_word(longest_levi_, wx), g.apply_word(longest_levi_, ww));
    case Convention::AlternatingSum: {
      const std::uint32_t fw = g.apply_word(0, ww);
      IntPolynomial sum;
      for (std::uint32_t z : levi_elements()) {
        const IntPolynomial t = ordinary(g.apply_word(z, wx), fw);
        sum = g.length(z) % 2 ? sum - t : sum + t;
      }
      return sum;
    }
  }
  return {};
}

IntPolynomial KLTable::relative_checked(std::uint32_t x, std::uint32_t w) const {
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    if (auto it = memo_.find({x, w}); it != memo_.end()) return it->second;
  }
  IntPolynomial r = route_ == Route::FullGroup ? compute_full(x, w) : quotient_basis_->polynomial(x, w);
  const int d = p_.length(w) - p_.length(x);
  if (x == w && r != IntPolynomial{1}) throw ConsistencyError("relative KL polynomial P_{w,w} differs from 1");
  if (x != w && !r.is_zero() && 2 * r.degree() > d - 1)
    throw ConsistencyError("relative KL polynomial P_{" + std::to_string(x) + "," + std::to_string(w) + "} = " + r.str('q') +
                           " violates the degree bound");
  if (!r.has_nonnegative_coefficients())
    throw ConsistencyError("relative KL polynomial P_{" + std::to_string(x) + "," + std::to_string(w) + "} = " + r.str('q') +
                           " has a negative coefficient under the " + convention_name(convention_) + " convention");
  std::lock_guard<std::mutex> lock(memo_mutex_);
  memo_.emplace(std::make_pair(x, w), r);
  return r;
}

IntPolynomial KLTable::relative(std::uint32_t x, std::uint32_t w) const {
  if (x >= p_.size() || w >= p_.size()) throw DomainError("element id out of range");
  if (!p_.leq(x, w)) return {};
  return relative_checked(x, w);
}

bool KLTable::column_is_trivial(std::uint32_t w) const {
  const Bitset ideal = p_.lower_ideal(w);
  for (std::size_t x = ideal.find_first(); x != Bitset::npos; x = ideal.find_next(x))
    if (relative_checked(static_cast<std::uint32_t>(x), w) != IntPolynomial{1}) return false;
  return true;
}

std::vector<std::vector<int>> parabolic_words(const MarkedDiagram& d, NodeSet J) {
  if ((J & d.all()) == 0) return {{}};
  const Subdiagram sub = subdiagram(d, J);
  const std::vector<int> idx = members(J & d.all());
  const CosetPoset w(sub.diagram.with_crossed(sub.diagram.all()));
  std::vector<std::vector<int>> out;
  for (std::uint32_t z = 0; z < w.size(); ++z) {
    std::vector<int> word;
    for (int g : w.reduced_word(z)) word.push_back(idx[static_cast<std::size_t>(g)]);
    out.push_back(std::move(word));
  }
  return out;
}

IntPolynomial KLTable::singular(NodeSet J, std::uint32_t x, std::uint32_t w) const {
  if (!in_singular_subposet(p_, J, x) || !in_singular_subposet(p_, J, w))
    throw DomainError("singular KL polynomial requested outside ^S W^J");
  IntPolynomial sum;
  for (const auto& z : parabolic_words(p_.diagram(), J)) {
    // xz outside ^S W contributes nothing.
    const auto xz = p_.try_apply_word(x, z);
    if (!xz) continue;
    if (p_.length(*xz) != p_.length(x) + static_cast<int>(z.size()))
      throw ConsistencyError("length is not additive on x W_J");
    const IntPolynomial t = relative(*xz, w);
    sum = z.size() % 2 ? sum - t : sum + t;
  }
  if (!sum.has_nonnegative_coefficients())
    throw ConsistencyError("singular KL polynomial P^J_{" + std::to_string(x) + "," + std::to_string(w) + "} = " + sum.str('q') +
                           " has a negative coefficient under the " + convention_name(convention_) + " convention");
  return sum;
}

ExtVector KLTable::ext(NodeSet J, std::uint32_t x, std::uint32_t w) const {
  return ext_from_polynomial(singular(J, x, w), p_.length(w) - p_.length(x));
}

FinitePoset mu_ordering(const KLTable& kl, const SingularSubposet& s) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> rel;
  for (std::uint32_t j = 0; j < s.size(); ++j)
    for (std::uint32_t i = 0; i < j; ++i)
      if (s.bruhat.leq(i, j) && kl.ext(s.J, s.ids[i], s.ids[j]).at(1) != 0) rel.emplace_back(i, j);
  return FinitePoset::from_relations(static_cast<std::uint32_t>(s.size()), rel);
}

}  // namespace kostant
