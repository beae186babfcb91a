#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "kostant/coset_poset.hpp"
#include "kostant/finite_poset.hpp"

namespace kostant {

/// Combinatorial BGG complex on a graded poset with a top element w:
/// C_i collects the elements of rank r(w) - i, each Hasse arrow carries a
/// sign and each square (two distinct middles between ranks differing by
/// two) has sign product -1.
struct SignedComplex {
  struct Arrow {
    std::uint32_t lo = 0;  // element positions
    std::uint32_t hi = 0;
    int sign = 1;
  };
  using Matrix = std::vector<std::vector<int>>;

  std::vector<std::uint32_t> labels;  // external id of each position (coset ids for build_bgg)
  std::vector<int> rank;              // rank of each position, top has the largest
  std::vector<std::vector<std::uint32_t>> terms;  // terms[i] = positions of rank top-i
  std::vector<Arrow> arrows;                      // sorted by (hi, lo)
  std::vector<std::array<std::uint32_t, 4>> squares;  // arrow indices (a->b, b->d, a->c, c->d)
  /// D_i : C_i -> C_{i-1}; rows follow terms[i-1], columns terms[i].
  std::vector<Matrix> differentials;  // differentials[i] for i >= 1, [0] empty
  std::size_t backtracks = 0;
  bool kostant = false;  // exactness proxy: palindromic P_w

  std::uint32_t top() const { return static_cast<std::uint32_t>(rank.size() - 1); }
  int length() const { return static_cast<int>(terms.size()) - 1; }
  int arrow_index(std::uint32_t lo, std::uint32_t hi) const;
};

enum class ArrowOrder { Increasing, Decreasing };

/// Signs for a graded poset with unique maximal element (the last
/// position). Throws DomainError if not graded and ConsistencyError if no
/// sign assignment satisfies every square.
SignedComplex build_signed_complex(const FinitePoset& order, ArrowOrder arrow_order = ArrowOrder::Increasing);
/// Same with an explicit processing order: a permutation of the Hasse edge
/// indices of `order` (edges sorted by (hi, lo)).
SignedComplex build_signed_complex(const FinitePoset& order, const std::vector<std::uint32_t>& arrow_sequence);

/// The complex of the interval [e, w] of ^S W.
SignedComplex build_bgg(const CosetPoset& p, std::uint32_t w);

struct ComplexVerdict {
  bool ok = true;
  std::size_t squares_checked = 0;
  /// Rank-two pairs with a single middle element; their composite vanishes
  /// as a map of modules, which the integer matrices cannot express.
  std::size_t single_middle_pairs = 0;
  std::vector<std::string> violations;
};

/// Recompute the square products and D_{i-1} D_i from the arrows.
ComplexVerdict verify_complex(const SignedComplex& c);

std::string complex_summary(const SignedComplex& c);
std::string complex_json(const SignedComplex& c);

}  // namespace kostant
