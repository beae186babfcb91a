#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace kostant {

using Bitset = boost::dynamic_bitset<>;

/// Finite poset on 0..n-1 whose numbering is a linear extension (a < b in the
/// order implies a < b as integers). Stores the full order as lower sets and
/// the Hasse diagram.
class FinitePoset {
public:
  FinitePoset() = default;

  /// Order generated by the pairs (a, b), a < b. Throws DomainError if a
  /// pair contradicts the numbering.
  static FinitePoset from_relations(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& rel);
  /// below[b] must contain b and be closed downward.
  static FinitePoset from_lower_sets(std::vector<Bitset> below);

  std::size_t size() const { return below_.size(); }
  bool leq(std::uint32_t a, std::uint32_t b) const { return below_[b].test(a); }
  bool less(std::uint32_t a, std::uint32_t b) const { return a != b && leq(a, b); }
  const Bitset& below(std::uint32_t b) const { return below_[b]; }
  const Bitset& above(std::uint32_t a) const { return above_[a]; }

  /// Hasse edges (lo, hi), sorted by (hi, lo).
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& hasse() const { return hasse_; }
  const std::vector<std::uint32_t>& covers_up(std::uint32_t a) const { return up_[a]; }
  const std::vector<std::uint32_t>& covers_down(std::uint32_t b) const { return down_[b]; }

  /// Sub-poset induced on the given (increasing) elements, renumbered 0..k-1.
  FinitePoset induced(const std::vector<std::uint32_t>& elems) const;
  /// Connected components of the Hasse diagram, each as increasing element list.
  std::vector<std::vector<std::uint32_t>> components() const;

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) { return a.below_ == b.below_; }

private:
  void finish();

  std::vector<Bitset> below_;
  std::vector<Bitset> above_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> hasse_;
  std::vector<std::vector<std::uint32_t>> up_;
  std::vector<std::vector<std::uint32_t>> down_;
};

}  // namespace kostant
