#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "kostant/diagram.hpp"
#include "kostant/rational.hpp"

namespace kostant {

/// Root in simple-root coordinates.
using Root = std::vector<int>;
/// Integral weight in fundamental-weight coordinates, lambda_i = <lambda, alpha_i^vee>.
using Weight = std::vector<std::int64_t>;

/// Root datum of a (possibly disconnected) finite-type diagram. Immutable
/// after construction.
class RootSystem {
public:
  explicit RootSystem(const MarkedDiagram& d);

  const MarkedDiagram& diagram() const { return diagram_; }
  int rank() const { return rank_; }
  int cartan(int i, int j) const { return diagram_.cartan(i, j); }
  /// d_i = (alpha_i, alpha_i) / 2; the shortest roots of each component have d = 1.
  int symmetrizer(int i) const { return d_[static_cast<std::size_t>(i)]; }
  /// Symmetrized form B(i,j) = (alpha_i, alpha_j) = d_i C(i,j).
  int form(int i, int j) const { return d_[static_cast<std::size_t>(i)] * cartan(i, j); }

  /// Positive roots ordered by height, then lexicographically.
  const std::vector<Root>& positive_roots() const { return pos_; }
  int num_positive() const { return static_cast<int>(pos_.size()); }
  /// Index into positive_roots(), or -1.
  int root_index(const Root& r) const;
  bool is_root(const Root& r) const;
  int simple_root_index(int i) const { return simple_idx_[static_cast<std::size_t>(i)]; }

  static int height(const Root& r);
  NodeSet support(const Root& r) const;
  /// (beta, beta) / 2.
  int norm(const Root& r) const;
  /// Short in the sense that all roots of a simply-laced component are short.
  bool is_short(const Root& r) const;

  /// (beta, gamma) for roots in simple-root coordinates.
  std::int64_t root_inner_product(const Root& a, const Root& b) const;
  /// <lambda, beta^vee>, exact.
  std::int64_t coroot_pairing(const Weight& lambda, const Root& beta) const;
  /// <beta, alpha_i^vee> of a root with a simple coroot.
  int root_simple_pairing(const Root& beta, int i) const;

  Weight root_to_weight(const Root& r) const;
  /// Expansion of a weight in simple-root coordinates (rational in general).
  std::vector<Rational> weight_to_root_coords(const Weight& w) const;
  /// (lambda, mu) for weights in fundamental-weight coordinates.
  Rational inner_product(const Weight& a, const Weight& b) const;

  Weight rho() const { return Weight(static_cast<std::size_t>(rank_), 1); }
  Weight fundamental_weight(int i) const;

  Weight reflect(const Weight& w, int i) const;
  Weight reflect(const Weight& w, const Root& beta) const;
  Root reflect_root(const Root& r, int i) const;

  /// Highest root / highest short root of the component containing node i
  /// (of the whole system when connected).
  const Root& highest_root(int node = 0) const;
  const Root& highest_short_root(int node = 0) const;

  /// Positive roots with support inside S.
  std::vector<int> levi_positive_roots(NodeSet S) const;

  /// Weyl dimension of the irreducible Levi(S)-module of highest weight hw.
  /// Throws DomainError naming the first simple root of S with <hw, alpha^vee> < 0.
  std::uint64_t weyl_dimension(NodeSet S, const Weight& hw) const;

  /// |W| from the exponents read off the height distribution.
  std::uint64_t group_order() const;
  /// |W_S| for the parabolic subgroup on S.
  std::uint64_t parabolic_order(NodeSet S) const;

private:
  MarkedDiagram diagram_;
  int rank_ = 0;
  std::vector<int> d_;
  std::vector<Root> pos_;
  std::map<Root, int> index_;
  std::vector<int> simple_idx_;
  std::vector<int> component_of_;
  std::vector<int> highest_;
  std::vector<int> highest_short_;
  std::vector<std::vector<Rational>> inverse_cartan_;
};

}  // namespace kostant
