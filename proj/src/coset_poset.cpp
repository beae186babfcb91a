#include "kostant/coset_poset.hpp"

#include <algorithm>
#include <string>

namespace kostant {

namespace {

std::uint64_t hash_key(std::span<const int> k) {
  std::uint64_t h = 1469598103934665603ull;
  for (int v : k) {
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 1099511628211ull;
  }
  return h ^ (h >> 29);
}

}  // namespace

CosetPoset::CosetPoset(const MarkedDiagram& d, std::size_t max_elements)
    : roots_(std::make_shared<const RootSystem>(d)), levi_(d.levi()), rank_(d.size()) {
  if (rank_ == 0) throw DiagramError("coset poset of the empty diagram");
  const std::uint64_t order = roots_->group_order();
  const std::uint64_t sub = roots_->parabolic_order(levi_);
  const std::uint64_t expected = order / sub;
  if (expected > max_elements) {
    throw SizeLimitError("poset too large: " + d.signature() + " has " + std::to_string(expected) +
                         " elements, cap is " + std::to_string(max_elements));
  }
  const auto n = static_cast<std::size_t>(expected);
  const auto r = static_cast<std::size_t>(rank_);
  std::size_t cap = 16;
  while (cap < 2 * n) cap <<= 1;
  table_.assign(cap, 0);
  table_mask_ = cap - 1;
  keys_.reserve(n * r);
  length_.reserve(n);
  trans_.reserve(n * r);
  parent_.reserve(n);
  parent_gen_.reserve(n);
  support_.reserve(n);

  auto insert = [&](const std::vector<int>& k, int len, std::int32_t par, int gen) {
    const auto id = static_cast<std::uint32_t>(length_.size());
    if (id >= n) throw ConsistencyError("coset enumeration exceeded |W|/|W_S|");
    keys_.insert(keys_.end(), k.begin(), k.end());
    length_.push_back(len);
    parent_.push_back(par);
    parent_gen_.push_back(gen);
    support_.push_back(par < 0 ? 0 : (support_[static_cast<std::size_t>(par)] | bit(gen)));
    std::size_t slot = hash_key(k) & table_mask_;
    while (table_[slot] != 0) slot = (slot + 1) & table_mask_;
    table_[slot] = id + 1;
    return id;
  };

  std::vector<int> k0(r, 0);
  for (int i : members(d.crossed())) k0[static_cast<std::size_t>(i)] = 1;
  insert(k0, 0, -1, -1);
  std::vector<int> k(r);
  for (std::size_t x = 0; x < length_.size(); ++x) {
    for (int i = 0; i < rank_; ++i) {
      const int c = keys_[x * r + static_cast<std::size_t>(i)];
      if (c == 0) {
        trans_.push_back(kSameCoset);
        continue;
      }
      for (std::size_t j = 0; j < r; ++j) k[j] = keys_[x * r + j] - c * d.cartan(static_cast<int>(j), i);
      auto found = find(k);
      if (c > 0 && !found) {
        found = insert(k, length_[x] + 1, static_cast<std::int32_t>(x), i);
      }
      if (!found) throw ConsistencyError("descent target missing during coset enumeration");
      trans_.push_back(static_cast<std::int32_t>(*found));
    }
  }
  if (length_.size() != n) {
    throw ConsistencyError("coset enumeration found " + std::to_string(length_.size()) + " elements, expected " + std::to_string(n));
  }
  children_.assign(n, {});
  for (std::size_t x = 1; x < n; ++x) children_[static_cast<std::size_t>(parent_[x])].push_back(static_cast<std::uint32_t>(x));
  if (n <= kIdealMemoThreshold) ideal_memo_.resize(n);
}

Weight CosetPoset::key_weight(std::uint32_t x) const {
  const auto k = key(x);
  return Weight(k.begin(), k.end());
}

int CosetPoset::descent_count(std::uint32_t x) const {
  int c = 0;
  for (int i = 0; i < rank_; ++i) c += descends(x, i) ? 1 : 0;
  return c;
}

std::vector<int> CosetPoset::reduced_word(std::uint32_t x) const {
  std::vector<int> w;
  for (std::int32_t y = static_cast<std::int32_t>(x); parent_[static_cast<std::size_t>(y)] >= 0; y = parent_[static_cast<std::size_t>(y)])
    w.push_back(parent_gen_[static_cast<std::size_t>(y)]);
  std::reverse(w.begin(), w.end());
  return w;
}

int CosetPoset::inversion_count(std::uint32_t x) const {
  const Weight k = key_weight(x);
  int c = 0;
  for (const Root& b : roots_->positive_roots())
    if (roots_->coroot_pairing(k, b) < 0) ++c;
  return c;
}

std::optional<std::uint32_t> CosetPoset::find(std::span<const int> k) const {
  std::size_t slot = hash_key(k) & table_mask_;
  const auto r = static_cast<std::size_t>(rank_);
  while (table_[slot] != 0) {
    const std::uint32_t id = table_[slot] - 1;
    if (std::equal(k.begin(), k.end(), keys_.begin() + static_cast<std::ptrdiff_t>(id * r))) return id;
    slot = (slot + 1) & table_mask_;
  }
  return std::nullopt;
}

std::optional<std::uint32_t> CosetPoset::try_apply_word(std::uint32_t x, const std::vector<int>& word) const {
  for (int g : word) {
    const std::int32_t t = transition(x, g);
    if (t == kSameCoset) return std::nullopt;
    x = static_cast<std::uint32_t>(t);
  }
  return x;
}

std::uint32_t CosetPoset::apply_word(std::uint32_t x, const std::vector<int>& word) const {
  auto r = try_apply_word(x, word);
  if (!r) throw DomainError("word leaves the set of minimal coset representatives");
  return *r;
}

std::vector<std::uint32_t> CosetPoset::elements_of_length(int l) const {
  std::vector<std::uint32_t> out;
  const auto lo = std::lower_bound(length_.begin(), length_.end(), l);
  const auto hi = std::upper_bound(length_.begin(), length_.end(), l);
  for (auto it = lo; it != hi; ++it) out.push_back(static_cast<std::uint32_t>(it - length_.begin()));
  return out;
}

bool CosetPoset::leq(std::uint32_t x, std::uint32_t w) const {
  while (true) {
    if (length_[x] > length_[w]) return false;
    if (length_[x] == length_[w]) return x == w;
    if (x == 0) return true;
    // Now l(x) < l(w) and w != e. Lift along s with ws < w.
    const int s = parent_gen_[w];
    const std::int32_t xs = transition(x, s);
    if (xs != kSameCoset && descends(x, s)) x = static_cast<std::uint32_t>(xs);
    w = static_cast<std::uint32_t>(parent_[w]);
  }
}

Bitset CosetPoset::extend_ideal(const Bitset& parent_ideal, std::uint32_t w) const {
  const int s = parent_gen_[w];
  Bitset out = parent_ideal;
  for (std::size_t y = parent_ideal.find_first(); y != Bitset::npos; y = parent_ideal.find_next(y)) {
    if (ascends(static_cast<std::uint32_t>(y), s)) out.set(static_cast<std::size_t>(transition(static_cast<std::uint32_t>(y), s)));
  }
  return out;
}

Bitset CosetPoset::lower_ideal(std::uint32_t w) const {
  std::vector<std::uint32_t> chain;
  if (ideal_memo_.empty()) {
    for (std::int32_t y = static_cast<std::int32_t>(w); y >= 0; y = parent_[static_cast<std::size_t>(y)]) chain.push_back(static_cast<std::uint32_t>(y));
    Bitset cur(size());
    cur.set(0);
    for (std::size_t k = chain.size() - 1; k-- > 0;) cur = extend_ideal(cur, chain[k]);
    return cur;
  }
  std::lock_guard<std::mutex> lock(mutex_);
  std::int32_t y = static_cast<std::int32_t>(w);
  while (y >= 0 && !ideal_memo_[static_cast<std::size_t>(y)]) {
    chain.push_back(static_cast<std::uint32_t>(y));
    y = parent_[static_cast<std::size_t>(y)];
  }
  std::reverse(chain.begin(), chain.end());
  for (std::uint32_t z : chain) {
    if (z == 0) {
      auto b = std::make_unique<Bitset>(size());
      b->set(0);
      ideal_memo_[0] = std::move(b);
      continue;
    }
    ideal_memo_[z] = std::make_unique<Bitset>(extend_ideal(*ideal_memo_[static_cast<std::size_t>(parent_[z])], z));
  }
  return *ideal_memo_[w];
}

void CosetPoset::compute_covers() const {
  std::call_once(covers_once_, [this] {
    const std::size_t n = size();
    const auto r = static_cast<std::size_t>(rank_);
    covers_below_.assign(n, {});
    covers_above_.assign(n, {});
    const auto& pos = roots_->positive_roots();
    std::vector<Weight> beta_w;
    for (const Root& b : pos) beta_w.push_back(roots_->root_to_weight(b));
    std::vector<int> k(r);
    for (std::uint32_t w = 1; w < n; ++w) {
      const Weight kw = key_weight(w);
      std::vector<Cover>& out = covers_below_[w];
      for (std::size_t b = 0; b < pos.size(); ++b) {
        const std::int64_t c = roots_->coroot_pairing(kw, pos[b]);
        if (c == 0) continue;
        for (std::size_t j = 0; j < r; ++j) k[j] = static_cast<int>(kw[j] - c * beta_w[b][j]);
        auto x = find(k);
        if (!x || length_[*x] != length_[w] - 1) continue;
        if (std::any_of(out.begin(), out.end(), [&](const Cover& cv) { return cv.lo == *x; })) continue;
        if (!leq(*x, w)) continue;
        int label = -1;
        for (int i = 0; i < rank_; ++i)
          if (transition(*x, i) == static_cast<std::int32_t>(w)) label = i;
        out.push_back({*x, w, label});
      }
      std::sort(out.begin(), out.end(), [](const Cover& a, const Cover& b) { return a.lo < b.lo; });
      for (const Cover& cv : out) {
        covers_above_[cv.lo].push_back(w);
        all_covers_.push_back(cv);
      }
    }
  });
}

const std::vector<Cover>& CosetPoset::covers_below(std::uint32_t w) const {
  compute_covers();
  return covers_below_[w];
}

const std::vector<Cover>& CosetPoset::covers() const {
  compute_covers();
  return all_covers_;
}

const std::vector<std::uint32_t>& CosetPoset::covers_above(std::uint32_t x) const {
  compute_covers();
  return covers_above_[x];
}

std::uint32_t CosetPoset::phi(NodeSet I) const {
  std::uint32_t x = 0;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : members(I & diagram().all())) {
      if (ascends(x, i)) {
        x = static_cast<std::uint32_t>(transition(x, i));
        moved = true;
        break;
      }
    }
  }
  return x;
}

const FinitePoset& CosetPoset::bruhat_poset() const {
  if (size() > kIdealMemoThreshold) throw SizeLimitError("full Bruhat relation requested for a poset above the materialization threshold");
  std::call_once(poset_once_, [this] {
    std::vector<Bitset> below;
    below.reserve(size());
    for (std::uint32_t w = 0; w < size(); ++w) below.push_back(lower_ideal(w));
    poset_ = FinitePoset::from_lower_sets(std::move(below));
  });
  return poset_;
}

std::optional<std::uint32_t> SingularSubposet::position(std::uint32_t id) const {
  auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || *it != id) return std::nullopt;
  return static_cast<std::uint32_t>(it - ids.begin());
}

bool in_singular_subposet(const CosetPoset& p, NodeSet J, std::uint32_t w) {
  for (int a : members(J))
    if (!p.ascends(w, a)) return false;
  return true;
}

SingularSubposet singular_subposet(const CosetPoset& p, NodeSet J) {
  SingularSubposet s;
  s.J = J;
  for (std::uint32_t w = 0; w < p.size(); ++w)
    if (in_singular_subposet(p, J, w)) s.ids.push_back(w);
  const std::size_t m = s.ids.size();
  std::vector<Bitset> below(m, Bitset(m));
  for (std::size_t j = 0; j < m; ++j) {
    const Bitset ideal = p.lower_ideal(s.ids[j]);
    for (std::size_t i = 0; i <= j; ++i)
      if (ideal.test(s.ids[i])) below[j].set(i);
  }
  s.bruhat = FinitePoset::from_lower_sets(std::move(below));
  return s;
}

AntidominantData antidominant_data(const RootSystem& rs, const Weight& lambda) {
  if (static_cast<int>(lambda.size()) != rs.rank()) throw DomainError("weight dimension mismatch");
  Weight nu = lambda;
  for (auto& c : nu) c += 1;
  while (true) {
    int i = 0;
    while (i < rs.rank() && nu[static_cast<std::size_t>(i)] <= 0) ++i;
    if (i == rs.rank()) break;
    nu = rs.reflect(nu, i);
  }
  AntidominantData out;
  out.nu = nu;
  for (int i = 0; i < rs.rank(); ++i)
    if (nu[static_cast<std::size_t>(i)] == 0) out.J |= bit(i);
  out.mu = nu;
  for (auto& c : out.mu) c -= 1;
  return out;
}

}  // namespace kostant
