#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kostant/coset_poset.hpp"
#include "kostant/finite_poset.hpp"
#include "kostant/polynomial.hpp"

namespace kostant {

/// Canonical basis of a right module over the Hecke algebra of W, with
/// standard basis N_x indexed by a coset poset. Columns are computed lazily
/// by the usual C_s recursion and memoized.
///
/// With C_s = H_s + v:
///   N_x C_s = N_{xs} + v N_x        if xs > x
///             N_{xs} + v^{-1} N_x   if xs < x
///             (u + v) N_x           if xs is not in ^S W
/// where u = -v (ModuleKind::Sign) or u = v^{-1} (ModuleKind::Trivial). For
/// the full group the two kinds coincide.
class CanonicalBasis {
public:
  enum class ModuleKind { Sign, Trivial };

  struct Column {
    std::vector<std::uint32_t> xs;  // increasing
    std::vector<LaurentPolynomial> h;
  };

  CanonicalBasis(const CosetPoset& p, ModuleKind kind);

  const CosetPoset& poset() const { return *p_; }
  ModuleKind kind() const { return kind_; }

  /// h_{x,w} in v, zero unless x <= w.
  LaurentPolynomial h(std::uint32_t x, std::uint32_t w) const;
  const Column& column(std::uint32_t w) const;
  /// P_{x,w}(q) from h_{x,w} = v^{l(w)-l(x)} P_{x,w}(v^{-2}).
  IntPolynomial polynomial(std::uint32_t x, std::uint32_t w) const;
  std::size_t computed_columns() const;

private:
  const Column& column_locked(std::uint32_t w) const;

  const CosetPoset* p_;
  ModuleKind kind_;
  mutable std::recursive_mutex mutex_;
  mutable std::unordered_map<std::uint32_t, std::unique_ptr<Column>> columns_;
};

/// Candidate identifications of relative KL polynomials with ordinary ones.
///   MaximalRepresentatives:  ^S P_{x,w} = P_{w_S x, w_S w}
///   MinimalRepresentatives:  ^S P_{x,w} = P_{x,w}
///   AlternatingSum:          ^S P_{x,w} = sum_{z in W_S} (-1)^{l(z)} P_{z x, w}
enum class Convention { MaximalRepresentatives, MinimalRepresentatives, AlternatingSum };

/// Fixed by the calibration test (tests/unit/kl_calibration_test.cpp).
inline constexpr Convention kCalibratedConvention = Convention::MaximalRepresentatives;
/// Hecke module reproducing MaximalRepresentatives without the full group.
inline constexpr CanonicalBasis::ModuleKind kCalibratedModule = CanonicalBasis::ModuleKind::Trivial;

std::string convention_name(Convention c);
Convention parse_convention(const std::string& s);

/// dim Ext^i for i = l(w)-l(x)-2k, read off the coefficient of q^k.
struct ExtVector {
  std::map<int, std::int64_t> dims;  // only nonzero entries

  std::int64_t at(int i) const {
    auto it = dims.find(i);
    return it == dims.end() ? 0 : it->second;
  }
  bool empty() const { return dims.empty(); }
};

ExtVector ext_from_polynomial(const IntPolynomial& p, int length_difference);

/// Relative, singular and ordinary KL polynomials for one coset poset.
///
/// Route::FullGroup translates every query to ordinary KL polynomials of
/// the full Weyl group through the convention. Route::Quotient works in the
/// parabolic Hecke module directly and supports MaximalRepresentatives and
/// AlternatingSum. Route::Auto picks the full group when |W| fits the cap.
class KLTable {
public:
  enum class Route { Auto, FullGroup, Quotient };
  static constexpr std::size_t kFullGroupCap = 50000;

  explicit KLTable(const CosetPoset& p, Convention c = kCalibratedConvention, Route r = Route::Auto,
                   std::size_t full_group_cap = kFullGroupCap);
  ~KLTable();
  KLTable(const KLTable&) = delete;
  KLTable& operator=(const KLTable&) = delete;

  const CosetPoset& poset() const { return p_; }
  Convention convention() const { return convention_; }
  Route route() const { return route_; }

  /// ^S P_{x,w}; zero unless x <= w.
  IntPolynomial relative(std::uint32_t x, std::uint32_t w) const;
  /// ^S P^J_{x,w} = sum_{z in W_J} (-1)^{l(z)} ^S P_{xz,w} for x, w in ^S W^J.
  IntPolynomial singular(NodeSet J, std::uint32_t x, std::uint32_t w) const;
  ExtVector ext(NodeSet J, std::uint32_t x, std::uint32_t w) const;

  /// Whether every ^S P_{x,w} with x <= w equals 1 (equivalently lies in {0,1}).
  bool column_is_trivial(std::uint32_t w) const;

  /// The full Weyl group as a coset poset with every node crossed; built on
  /// first use. Throws SizeLimitError above the cap.
  const CosetPoset& full_group() const;
  /// Ordinary KL polynomial, arguments are full_group() ids.
  IntPolynomial ordinary(std::uint32_t a, std::uint32_t b) const;
  /// Id in full_group() of the minimal representative x.
  std::uint32_t full_id(std::uint32_t x) const;

private:
  IntPolynomial relative_checked(std::uint32_t x, std::uint32_t w) const;
  IntPolynomial compute_full(std::uint32_t x, std::uint32_t w) const;
  const std::vector<std::uint32_t>& levi_elements() const;

  const CosetPoset& p_;
  Convention convention_;
  Route route_;
  std::size_t cap_;

  mutable std::once_flag full_once_;
  mutable std::unique_ptr<CosetPoset> full_owned_;
  mutable const CosetPoset* full_ = nullptr;
  mutable std::unique_ptr<CanonicalBasis> full_basis_;
  mutable std::unique_ptr<CanonicalBasis> quotient_basis_;
  mutable std::vector<std::uint32_t> levi_;  // W_S in full_group() ids
  mutable std::uint32_t longest_levi_ = 0;
  mutable std::mutex memo_mutex_;
  mutable std::map<std::pair<std::uint32_t, std::uint32_t>, IntPolynomial> memo_;
};

/// Reduced words of W_J for J a set of internal indices, shortest first.
std::vector<std::vector<int>> parabolic_words(const MarkedDiagram& d, NodeSet J);

/// Transitive closure of the relation x < w whenever Ext^1(N_x, L_w) != 0,
/// over positions of the singular subposet.
FinitePoset mu_ordering(const KLTable& kl, const SingularSubposet& s);

}  // namespace kostant
