#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kostant/error.hpp"

namespace kostant {

/// Bit set over the internal node indices of a diagram (rank <= 31).
using NodeSet = std::uint32_t;

inline constexpr int kMaxRank = 31;

inline bool contains(NodeSet s, int i) { return (s >> i) & 1u; }
inline NodeSet bit(int i) { return NodeSet{1} << i; }
inline int popcount(NodeSet s) { return __builtin_popcount(s); }
std::vector<int> members(NodeSet s);

/// One bond of a Dynkin diagram. For multiplicity > 1, `a` is the long end.
struct Bond {
  int a = 0;
  int b = 0;
  int multiplicity = 1;
};

/// A connected component of a finite-type diagram after type recognition.
/// `bourbaki[k]` is the internal index of the node playing the role of
/// alpha_{k+1} in Bourbaki numbering.
struct Component {
  char type = 'A';
  int rank = 0;
  std::vector<int> bourbaki;

  std::string name() const { return std::string(1, type) + std::to_string(rank); }
  NodeSet nodes() const;
  /// Bourbaki number (1-based) of an internal index, or 0 if absent.
  int bourbaki_number(int index) const;
};

/// Dynkin diagram with crossed nodes (the complement of S) and singular
/// nodes (J). Nodes have internal indices 0..n-1, external integer ids and
/// optional text labels. The diagram is stored through its Cartan matrix
/// C(i,j) = <alpha_i^vee, alpha_j>.
///
/// Construction only checks generalized-Cartan sanity, so extended
/// diagrams can be represented; finite_type() and components() perform the
/// full A-G classification.
class MarkedDiagram {
public:
  MarkedDiagram() = default;
  MarkedDiagram(std::vector<int> ids, std::vector<std::vector<int>> cartan);

  /// Bourbaki-numbered diagram of type X_n. Ids are 1..n. Small ranks such
  /// as D2, D3, B1 are accepted and built from the graph description.
  static MarkedDiagram standard(char type, int rank);
  /// "F4", "E7", "A2xA1" (components numbered consecutively).
  static MarkedDiagram from_type_string(std::string_view s);
  /// JSON input, see docs/schemas.md.
  static MarkedDiagram from_json(const nlohmann::json& j);

  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  NodeSet all() const { return size() == 0 ? 0 : (size() == 32 ? ~NodeSet{0} : bit(size()) - 1); }

  int id(int index) const { return ids_.at(static_cast<std::size_t>(index)); }
  const std::vector<int>& ids() const { return ids_; }
  /// Internal index of an external id; throws DiagramError if absent.
  int index_of(int id) const;
  std::optional<int> find(int id) const;
  /// Resolve a node reference given either as an id or a label.
  int resolve(std::string_view ref) const;

  const std::string& label(int index) const { return labels_.at(static_cast<std::size_t>(index)); }
  void set_label(int index, std::string label) { labels_.at(static_cast<std::size_t>(index)) = std::move(label); }

  int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  std::vector<Bond> bonds() const;
  NodeSet neighbours(int i) const;
  bool simply_laced() const;

  NodeSet crossed() const { return crossed_; }
  NodeSet singular() const { return singular_; }
  /// S, the uncrossed nodes.
  NodeSet levi() const { return all() & ~crossed_; }
  MarkedDiagram with_crossed(NodeSet c) const;
  MarkedDiagram with_singular(NodeSet j) const;
  MarkedDiagram with_crossed_ids(const std::vector<int>& ids) const;
  MarkedDiagram with_singular_ids(const std::vector<int>& ids) const;

  /// Connected components as node sets, ordered by smallest index.
  std::vector<NodeSet> connected_components() const;
  bool connected() const { return connected_components().size() == 1; }

  /// Type recognition of every component; throws DiagramError naming the
  /// offending node or bond when a component is not of finite type A-G.
  std::vector<Component> components() const;
  bool finite_type() const;
  /// E.g. "F4", "A2xA1", "" for the empty diagram.
  std::string type_name() const;

  /// Canonical description of the marked diagram up to diagram
  /// automorphisms, e.g. "D6[1]" or "A3[2]xA1[]". Crossed nodes are given
  /// in Bourbaki numbering, minimized over automorphisms.
  std::string signature() const;

  /// Canonical JSON descriptor (used for cache keys and serialization).
  nlohmann::json to_json() const;

  friend bool operator==(const MarkedDiagram&, const MarkedDiagram&) = default;

private:
  void validate_cartan() const;

  std::vector<int> ids_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> cartan_;
  NodeSet crossed_ = 0;
  NodeSet singular_ = 0;
};

/// Induced subdiagram on I together with its connected components (as node
/// sets of the parent diagram) and the S-trivial flags (component has no
/// crossed node).
struct Subdiagram {
  MarkedDiagram diagram;
  std::vector<NodeSet> components;
  std::vector<bool> s_trivial;

  bool has_s_trivial_component() const;
};

Subdiagram subdiagram(const MarkedDiagram& d, NodeSet I);

/// Same nodes with long and short roots exchanged (Cartan transpose).
MarkedDiagram dual_diagram(const MarkedDiagram& d);

/// Simply-laced cover of a folded diagram: (C_n, alpha_1) -> (A_{2n-1},
/// alpha_1) and (B_n, alpha_n) -> (D_{n+1}, alpha_{n+1}). Any other input
/// raises DomainError.
MarkedDiagram simply_laced_cover(const MarkedDiagram& d);

/// simply_laced_cover(dual_diagram(d)); accepts (B_n, B_{n-1}) and
/// (C_n, A_{n-1}).
MarkedDiagram cover_of_dual(const MarkedDiagram& d);

/// Bourbaki number of the crossed node of the component containing it, for a
/// diagram with exactly one crossed node (canonical up to automorphism).
int canonical_crossed_number(const MarkedDiagram& d);

}  // namespace kostant
