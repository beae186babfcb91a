#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kostant/coset_poset.hpp"
#include "kostant/finite_poset.hpp"
#include "kostant/kl.hpp"
#include "kostant/poset_kit.hpp"

namespace kostant {

enum class Method { Palindromic, KL, Both };
Method parse_method(const std::string& s);
std::string method_name(Method m);

struct KostantEntry {
  std::uint32_t id = 0;
  bool kostant = false;
  /// Failed the one-descent necessary condition and was not tested further.
  bool pruned = false;
  std::optional<bool> palindromic;
  std::optional<bool> kl_trivial;
  /// Subdiagram I with phi(I) = id, when id is a standard Kostant element.
  std::optional<NodeSet> standard;
};

/// Kostant verdicts for every element of a regular block.
struct KostantReport {
  std::string signature;
  Method method = Method::Palindromic;
  /// "rational smoothness criterion" for non-maximal parabolics.
  std::string criterion;
  bool pruning_applied = false;
  std::vector<KostantEntry> entries;  // indexed by id
  std::size_t kostant_count = 0;
  std::size_t standard_count = 0;
  /// Palindromic and KL verdicts coincide wherever both were computed.
  bool methods_agree = true;

  std::vector<std::uint32_t> kostant_elements() const;
};

struct ClassifyOptions {
  Method method = Method::Palindromic;
  /// Apply the one-descent pruning on maximal parabolics.
  bool prune = true;
  unsigned jobs = 1;
  /// Shared KL table for the KL method; built internally when null.
  const KLTable* kl = nullptr;
};

/// Palindromicity of every P_w(t), computed by one walk of the BFS parent
/// tree that extends lower ideals one lifting step at a time.
std::vector<bool> palindromic_elements(const CosetPoset& p, unsigned jobs = 1);

KostantReport classify_regular(const CosetPoset& p, const ClassifyOptions& opt = {});

/// All I (no S-trivial component) with phi(I), keyed by I. Throws
/// ConsistencyError if phi fails to be injective.
std::map<NodeSet, std::uint32_t> standard_kostant(const CosetPoset& p);

/// Subsets I such that every component of D(I) contains a crossed node;
/// includes the empty set.
std::vector<NodeSet> subdiagrams_without_s_trivial(const MarkedDiagram& d);

struct BijectionVerdict {
  bool applies = false;
  bool holds = false;
  std::string theorem;  // which statement was checked
  std::size_t palindromic = 0;
  std::size_t subdiagrams = 0;
  /// Palindromic elements not of the form phi(I), and phi(I) that are not palindromic.
  std::vector<std::uint32_t> unmatched_elements;
  std::vector<NodeSet> unmatched_subdiagrams;
};

/// Simply-laced maximal parabolic: Kostant elements are exactly phi(I) for
/// connected I containing the crossed node. Hermitian (B_n, B_{n-1}) and
/// (C_n, A_{n-1}): the count equals that of the simply-laced cover of the dual.
BijectionVerdict verify_bijection(const CosetPoset& p);

/// H^i(u, L_w) as lists of x (with multiplicity) per degree i.
struct UCohomology {
  bool kostant = false;
  std::map<int, std::vector<std::uint32_t>> degrees;
};

/// Palindromic route: the slices of [e, w] by length. With a KL table the
/// multiplicities are read from ^S P_{x,w}.
UCohomology u_cohomology(const CosetPoset& p, std::uint32_t w, const KLTable* kl = nullptr);

/// Result of the graded-interval test for one w.
struct IntervalTest {
  bool kostant = false;
  std::optional<std::uint32_t> v;  // bottom of the witnessing interval
  std::string reason;              // why w fails, empty when Kostant
};

/// w is Kostant iff the set E = {x : Ext(N_x, L_w) != 0} is a graded
/// interval [v, w] of `order` with every x in E having a single Ext^i of
/// dimension 1 and i = r(w) - r(x) in the rank function of the interval.
/// `ext(x)` returns the Ext vector of (x, w); elements are positions of
/// `order`.
IntervalTest graded_interval_test(const FinitePoset& order, std::uint32_t w, const std::function<ExtVector(std::uint32_t)>& ext);

}  // namespace kostant
