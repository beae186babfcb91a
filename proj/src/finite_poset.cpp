#include "kostant/finite_poset.hpp"

#include <algorithm>
#include <numeric>

#include "kostant/error.hpp"

namespace kostant {

FinitePoset FinitePoset::from_relations(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& rel) {
  std::vector<std::vector<std::uint32_t>> direct(n);
  for (auto [a, b] : rel) {
    if (a >= n || b >= n) throw DomainError("relation references an element out of range");
    if (a >= b) throw DomainError("relation " + std::to_string(a) + " < " + std::to_string(b) + " contradicts the element numbering");
    direct[b].push_back(a);
  }
  std::vector<Bitset> below(n, Bitset(n));
  for (std::size_t b = 0; b < n; ++b) {
    below[b].set(b);
    for (std::uint32_t a : direct[b]) below[b] |= below[a];
  }
  return from_lower_sets(std::move(below));
}

FinitePoset FinitePoset::from_lower_sets(std::vector<Bitset> below) {
  FinitePoset p;
  p.below_ = std::move(below);
  for (std::size_t b = 0; b < p.below_.size(); ++b) {
    if (!p.below_[b].test(b)) throw DomainError("lower set does not contain its element");
    if (p.below_[b].find_next(b) != Bitset::npos) throw DomainError("lower set contradicts the element numbering");
  }
  p.finish();
  return p;
}

void FinitePoset::finish() {
  const std::size_t n = below_.size();
  above_.assign(n, Bitset(n));
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = below_[b].find_first(); a != Bitset::npos; a = below_[b].find_next(a)) above_[a].set(b);
  up_.assign(n, {});
  down_.assign(n, {});
  hasse_.clear();
  for (std::size_t b = 0; b < n; ++b) {
    Bitset marked(n);
    std::vector<std::uint32_t> cov;
    // Walk strictly-lower elements from the top; an element not covered by a
    // previously found cover is itself a cover.
    for (std::size_t a = b; a-- > 0;) {
      if (!below_[b].test(a) || marked.test(a)) continue;
      cov.push_back(static_cast<std::uint32_t>(a));
      marked |= below_[a];
    }
    std::sort(cov.begin(), cov.end());
    for (std::uint32_t a : cov) {
      hasse_.push_back({a, static_cast<std::uint32_t>(b)});
      up_[a].push_back(static_cast<std::uint32_t>(b));
      down_[b].push_back(a);
    }
  }
  for (auto& v : up_) std::sort(v.begin(), v.end());
}

FinitePoset FinitePoset::induced(const std::vector<std::uint32_t>& elems) const {
  const std::size_t k = elems.size();
  std::vector<Bitset> below(k, Bitset(k));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i <= j; ++i)
      if (leq(elems[i], elems[j])) below[j].set(i);
  return from_lower_sets(std::move(below));
}

std::vector<std::vector<std::uint32_t>> FinitePoset::components() const {
  const std::size_t n = size();
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto root = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : hasse_) parent[root(a)] = root(b);
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<int> slot(n, -1);
  for (std::uint32_t x = 0; x < n; ++x) {
    const std::uint32_t r = root(x);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[r])].push_back(x);
  }
  return out;
}

}  // namespace kostant
