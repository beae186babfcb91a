#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kostant/coset_poset.hpp"
#include "kostant/diagram.hpp"
#include "kostant/finite_poset.hpp"
#include "kostant/kl.hpp"
#include "kostant/root_system.hpp"

namespace kostant {

/// A connected diagram with one crossed node whose coefficient in the
/// highest root is 1.
struct HSPair {
  enum class Family { A, B, C, DD, DA, E6, E7 };

  MarkedDiagram diagram;
  int alpha = 0;         // internal index of the crossed node
  int alpha_number = 0;  // its Bourbaki number
  int coefficient = 1;   // coefficient of alpha in the highest root
  char type = 'A';
  int rank = 0;
  Family family = Family::A;
  std::string levi_type;

  /// "(C4,A3)" style name of the pair.
  std::string name() const;
};

std::string family_name(HSPair::Family f);

/// Recognition; nullopt when the diagram is disconnected, has other than one
/// crossed node, or the crossed node is not cominuscule. `reason` receives
/// the rejection cause.
std::optional<HSPair> hermitian_pair(const MarkedDiagram& d, std::string* reason = nullptr);
bool is_hermitian(const MarkedDiagram& d);
/// Throws DomainError with the rejection cause.
HSPair require_hermitian(const MarkedDiagram& d);

/// gamma_1 = highest short root of Phi(u), gamma_i = highest short root of
/// Phi(u) orthogonal to gamma_1..gamma_{i-1}, until none is left. Shortness
/// is taken in the subsystem orthogonal to the earlier gammas, where a
/// component with one root length is all short.
std::vector<Root> strongly_orthogonal(const HSPair& hs);

/// D^(t): attach -gamma_i, delete it and its neighbours, keep the component
/// of alpha. An empty diagram stands for the empty answer. Throws DomainError
/// unless 0 <= t <= #gammas.
MarkedDiagram reduced_diagram(const HSPair& hs, int t);

/// (D', alpha', copies) for a singular set J.
struct DPrime {
  MarkedDiagram diagram;  // empty for the empty answer; one crossed node otherwise
  int copies = 1;
  int t = 0;

  bool empty() const { return diagram.empty(); }
  /// Signature of D' such as "D6[1]", or "empty".
  std::string signature() const;
  /// Bourbaki number of alpha' (0 for the empty answer).
  int alpha_number() const;
};

/// D^(t) with t = |J| when simply laced, otherwise its cover of the dual.
/// Copies: 2 for (B_n, B_{n-1}) with a long root in J and for (C_n, A_{n-1})
/// with the long simple root in J, otherwise 1. When the reduction had to use
/// a long gamma (C_n, n odd, t = (n+1)/2) the block is one module and copies is 1.
DPrime dprime(const HSPair& hs, NodeSet J);

/// False when J has two adjacent nodes or ^S W^J is empty.
bool block_nonempty(const CosetPoset& p, NodeSet J);
/// Non-adjacent subsets J (including the empty set) of a diagram.
std::vector<NodeSet> independent_subsets(const MarkedDiagram& d);

/// ^{S'}W' of D' as a finite poset; the one-element poset for the empty answer.
FinitePoset dprime_poset(const DPrime& dp);
/// Connected subdiagrams of D' containing alpha', plus the empty one.
std::size_t dprime_subdiagram_count(const DPrime& dp);

enum class Ordering { Bruhat, Mu };
Ordering parse_ordering(const std::string& s);
std::string ordering_name(Ordering o);

struct SingularEntry {
  std::uint32_t id = 0;  // coset-poset id
  bool kostant = false;
  std::optional<std::uint32_t> v;  // coset-poset id of the bottom of the interval
  std::string reason;
  /// H^i(u, L_w) as coset-poset ids per degree, with multiplicity.
  std::map<int, std::vector<std::uint32_t>> cohomology;
};

struct SingularKostantReport {
  NodeSet J = 0;
  Ordering ordering = Ordering::Bruhat;
  /// "graded-interval definition" (Bruhat) or "mu-ordering definition".
  std::string definition;
  std::vector<SingularEntry> entries;  // one per element of ^S W^J, by position
  std::size_t kostant_count = 0;
  std::size_t components = 1;  // connected components of the chosen order
};

/// Graded-interval test of every w in ^S W^J under the chosen order.
SingularKostantReport classify_singular(const KLTable& kl, const SingularSubposet& s, Ordering o);
/// Same with a precomputed mu-ordering.
SingularKostantReport classify_singular(const KLTable& kl, const SingularSubposet& s, const FinitePoset& order, Ordering o);

/// Per-degree list of x with Ext^i(N_x, L_w) != 0 (with multiplicity).
std::map<int, std::vector<std::uint32_t>> singular_u_cohomology(const KLTable& kl, const SingularSubposet& s, std::uint32_t w);

/// Shipped Wallach constants: A 1, (D_n, A_{n-1}) 2, (D_n, D_{n-1}) n-2,
/// E6 3, E7 4. Throws ConfigError for other pairs.
int wallach_constant(const HSPair& hs);
/// Number of Wallach points with |J| = k, i.e. the rank of the pair.
int wallach_rank(const HSPair& hs);

struct WallachBlock {
  int k = 0;
  int c = 0;
  Weight lambda;  // -k c zeta
  AntidominantData data;
};

/// lambda = -k c zeta and its antidominant data. Throws DomainError unless
/// 0 <= k <= rank and ConfigError when |J| != k or Phi_J is not of type A1^k.
WallachBlock wallach_block(const HSPair& hs, int k);

struct ResolutionTerm {
  std::uint32_t id = 0;  // coset-poset id
  int degree = 0;        // homological degree (rank from the top of ^S W^J)
  int shift = 0;         // from chains in ^S W
  std::uint64_t dimension = 0;
  Weight highest_weight;  // of F_x
};

struct ResolutionData {
  std::string pair;
  int k = 0;
  NodeSet J = 0;
  std::uint32_t top = 0;  // coset-poset id of the Wallach module
  std::string dprime;     // signature of D'
  std::vector<ResolutionTerm> terms;
  std::vector<std::uint64_t> betti;                   // b_i
  std::vector<std::map<int, std::uint64_t>> shifts;  // per degree: shift -> rank
  int length() const { return static_cast<int>(betti.size()) - 1; }
};

/// BGG resolution of the k-th Wallach module of a simply-laced pair. The
/// shifts are counted along chains of ^S W without J-labelled edges and
/// checked against the zeta-grading of the highest weights.
ResolutionData minimal_resolution(const CosetPoset& p, const HSPair& hs, int k);

/// "0 -> R(-15) -> R(-13)^27 -> ... -> R -> C[X_k] -> 0"
std::string resolution_text(const ResolutionData& r);
std::string resolution_json(const ResolutionData& r);

/// Tests whether two finite posets are isomorphic.
bool isomorphic(const FinitePoset& a, const FinitePoset& b);

}  // namespace kostant
