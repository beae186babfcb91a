#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kostant/coset_poset.hpp"
#include "kostant/finite_poset.hpp"
#include "kostant/polynomial.hpp"

namespace kostant {

/// P_w(t) = sum over v <= w of t^{l(v)}.
IntPolynomial poincare_polynomial(const CosetPoset& p, std::uint32_t w);
/// Same from an already computed lower ideal.
IntPolynomial poincare_polynomial(const CosetPoset& p, const Bitset& ideal);

bool is_palindromic(const IntPolynomial& f);

/// The interval [v, w] of a FinitePoset with its gradedness verdict. When
/// graded, rank[k] is the rank of elements[k] (r(v) = 0) and slices[j] lists
/// the elements of rank j. When not graded, `witness` describes an element
/// reached by maximal chains of different lengths.
struct GradedInterval {
  std::uint32_t v = 0;
  std::uint32_t w = 0;
  std::vector<std::uint32_t> elements;
  bool graded = false;
  std::vector<int> rank;
  std::vector<std::vector<std::uint32_t>> slices;
  std::string witness;

  std::optional<int> rank_of(std::uint32_t x) const;
};

GradedInterval interval(const FinitePoset& order, std::uint32_t v, std::uint32_t w);
/// Interval of ^S W under the Bruhat order (ids are coset-poset ids).
GradedInterval interval(const CosetPoset& p, std::uint32_t v, std::uint32_t w);

/// A drawable Hasse diagram: node names and lengths plus edges with optional
/// label and dashed style. Emitters render it as DOT or JSON.
struct HasseView {
  struct Node {
    std::uint32_t id = 0;
    int length = 0;
    std::string name;
    bool circled = false;
    std::string note;
  };
  struct Edge {
    std::uint32_t lo = 0;
    std::uint32_t hi = 0;
    std::string label;
    bool dashed = false;
  };
  std::string title;
  std::vector<Node> nodes;
  std::vector<Edge> edges;
};

/// Node names default to reduced words written with node labels (or ids).
HasseView hasse_view(const CosetPoset& p);
HasseView hasse_view(const CosetPoset& p, const SingularSubposet& s);
/// View of an arbitrary order on a subset of coset-poset ids.
HasseView hasse_view(const CosetPoset& p, const std::vector<std::uint32_t>& ids, const FinitePoset& order);

std::string word_name(const CosetPoset& p, std::uint32_t x);

enum class ExportFormat { Dot, Json };
ExportFormat parse_export_format(const std::string& s);
std::string to_dot(const HasseView& v);
std::string to_json(const HasseView& v);
std::string export_view(const HasseView& v, ExportFormat f);

/// Poset serialization {schema:1, diagram, elements, transitions, covers}.
std::string serialize_poset(const CosetPoset& p);

}  // namespace kostant
