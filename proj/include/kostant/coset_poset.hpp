#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "kostant/diagram.hpp"
#include "kostant/finite_poset.hpp"
#include "kostant/root_system.hpp"

namespace kostant {

/// Hasse edge lo -> hi of a coset poset. `label` is the internal index of a
/// simple root when hi = lo * s_label, otherwise -1.
struct Cover {
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;
  int label = -1;

  friend bool operator==(const Cover&, const Cover&) = default;
};

/// The set ^S W of minimal length representatives of W_S \ W, where S is the
/// uncrossed part of the diagram.
///
/// Each coset W_S x is identified by its canonical key x^{-1}(lambda0), with
/// lambda0 the sum of the fundamental weights of the crossed nodes. Right
/// multiplication by s_i acts on keys by the simple reflection s_i. Ids are
/// assigned in breadth-first order, so they increase with length and id 0 is
/// the identity.
class CosetPoset {
public:
  static constexpr std::int32_t kSameCoset = -1;
  static constexpr std::size_t kDefaultMaxElements = std::size_t{1} << 20;
  static constexpr std::size_t kIdealMemoThreshold = 20000;

  explicit CosetPoset(const MarkedDiagram& d, std::size_t max_elements = kDefaultMaxElements);
  CosetPoset(const CosetPoset&) = delete;
  CosetPoset& operator=(const CosetPoset&) = delete;

  const MarkedDiagram& diagram() const { return roots_->diagram(); }
  const RootSystem& roots() const { return *roots_; }
  std::shared_ptr<const RootSystem> roots_ptr() const { return roots_; }
  NodeSet levi() const { return levi_; }
  int rank() const { return rank_; }

  std::size_t size() const { return length_.size(); }
  std::uint32_t top() const { return static_cast<std::uint32_t>(size() - 1); }
  int length(std::uint32_t x) const { return length_[x]; }
  int max_length() const { return length_.back(); }
  std::span<const int> key(std::uint32_t x) const {
    return {keys_.data() + static_cast<std::size_t>(x) * static_cast<std::size_t>(rank_), static_cast<std::size_t>(rank_)};
  }
  Weight key_weight(std::uint32_t x) const;

  /// Coset representative of x * s_i, or kSameCoset when x s_i is not in ^S W.
  std::int32_t transition(std::uint32_t x, int i) const { return trans_[static_cast<std::size_t>(x) * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(i)]; }
  bool ascends(std::uint32_t x, int i) const { return key(x)[static_cast<std::size_t>(i)] > 0; }
  bool descends(std::uint32_t x, int i) const { return key(x)[static_cast<std::size_t>(i)] < 0; }
  /// Number of simple i with x s_i < x inside ^S W.
  int descent_count(std::uint32_t x) const;

  /// BFS parent p with x = p * s_g, g = parent_generator(x); -1 for e.
  std::int32_t parent(std::uint32_t x) const { return parent_[x]; }
  int parent_generator(std::uint32_t x) const { return parent_gen_[x]; }
  /// Children of x in the BFS parent tree.
  const std::vector<std::uint32_t>& children(std::uint32_t x) const { return children_[x]; }
  /// Reduced word (internal indices) from the parent chain.
  std::vector<int> reduced_word(std::uint32_t x) const;
  NodeSet support(std::uint32_t x) const { return support_[x]; }
  /// #{beta > 0 : <key(x), beta^vee> < 0}; equals length(x).
  int inversion_count(std::uint32_t x) const;

  std::optional<std::uint32_t> find(std::span<const int> key) const;
  /// x * s_{w_1} * ... * s_{w_k}, each step required to stay in ^S W.
  std::optional<std::uint32_t> try_apply_word(std::uint32_t x, const std::vector<int>& word) const;
  std::uint32_t apply_word(std::uint32_t x, const std::vector<int>& word) const;
  std::vector<std::uint32_t> elements_of_length(int l) const;

  /// Bruhat order via the lifting property; O(l(w)).
  bool leq(std::uint32_t x, std::uint32_t w) const;
  /// Lower Bruhat ideal of w. Memoized when size() <= kIdealMemoThreshold.
  Bitset lower_ideal(std::uint32_t w) const;
  /// ideal(w) from ideal(parent(w)) in one lifting step.
  Bitset extend_ideal(const Bitset& parent_ideal, std::uint32_t w) const;

  /// Covers x -> w for a fixed w, sorted by lo.
  const std::vector<Cover>& covers_below(std::uint32_t w) const;
  /// All Hasse edges, sorted by (hi, lo).
  const std::vector<Cover>& covers() const;
  /// Upward covers of x.
  const std::vector<std::uint32_t>& covers_above(std::uint32_t x) const;

  /// Maximal element of ^{S cap I} W_I, by greedy ascent with generators in I.
  std::uint32_t phi(NodeSet I) const;

  /// The whole poset as a FinitePoset (ids preserved). Requires size() <=
  /// kIdealMemoThreshold.
  const FinitePoset& bruhat_poset() const;

private:
  void compute_covers() const;

  std::shared_ptr<const RootSystem> roots_;
  NodeSet levi_ = 0;
  int rank_ = 0;
  std::vector<int> keys_;
  std::vector<int> length_;
  std::vector<std::int32_t> trans_;
  std::vector<std::int32_t> parent_;
  std::vector<int> parent_gen_;
  std::vector<NodeSet> support_;
  std::vector<std::vector<std::uint32_t>> children_;
  std::vector<std::uint32_t> table_;  // open-addressing key index, entries id+1
  std::size_t table_mask_ = 0;

  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<Bitset>> ideal_memo_;
  mutable std::once_flag covers_once_;
  mutable std::vector<std::vector<Cover>> covers_below_;
  mutable std::vector<std::vector<std::uint32_t>> covers_above_;
  mutable std::vector<Cover> all_covers_;
  mutable std::once_flag poset_once_;
  mutable FinitePoset poset_;
};

/// ^S W^J: elements w with w < w s_alpha in ^S W for every alpha in J, with
/// the Bruhat order induced from ^S W.
struct SingularSubposet {
  NodeSet J = 0;
  std::vector<std::uint32_t> ids;  // increasing coset-poset ids
  FinitePoset bruhat;              // over positions 0..ids.size()-1

  std::size_t size() const { return ids.size(); }
  std::optional<std::uint32_t> position(std::uint32_t id) const;
  /// Hasse edge (positions) spans a length gap > 1.
  bool dashed(const CosetPoset& p, std::uint32_t lo_pos, std::uint32_t hi_pos) const {
    return p.length(ids[hi_pos]) - p.length(ids[lo_pos]) > 1;
  }
};

bool in_singular_subposet(const CosetPoset& p, NodeSet J, std::uint32_t w);
SingularSubposet singular_subposet(const CosetPoset& p, NodeSet J);

/// nu = antidominant W-conjugate of lambda + rho, J = simple roots with
/// <nu, alpha^vee> = 0, mu = nu - rho.
struct AntidominantData {
  Weight nu;
  NodeSet J = 0;
  Weight mu;
};

AntidominantData antidominant_data(const RootSystem& rs, const Weight& lambda);

}  // namespace kostant
