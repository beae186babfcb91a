#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kostant/hermitian.hpp"

namespace kostant {

/// Integer value of a linear expression such as "n+1-2t" over named variables.
/// Throws ConfigError on syntax errors and unknown variables.
long eval_linear(const std::string& expr, const std::map<char, long>& vars);

/// One row of the shipped singular Hermitian table.
struct Table2Row {
  std::string family;  // "A", "B", "C", "DD", "DA", "E6", "E7"
  std::string size;    // |J| expression
  std::string kind;    // "any", "short" (no long root in J), "long" (one long root), "set"
  std::vector<std::string> nodes;  // for kind "set", Bourbaki numbers as expressions
  std::optional<char> out_type;    // nullopt for the empty answer
  std::string out_rank, out_alpha;
  int copies = 1;
};

std::vector<Table2Row> parse_table2(const nlohmann::json& j);

/// What a row predicts for one block: the signature of D' ("empty" for the
/// empty answer) and the number of copies. `in_domain` is false when the
/// row's D rank evaluates below 1.
struct Table2Prediction {
  const Table2Row* row = nullptr;
  bool in_domain = true;
  std::string signature;
  int copies = 1;
};

/// The unique row matching (hs, J); nullopt when no row applies. Throws
/// ConfigError if two rows match.
std::optional<Table2Prediction> predict_table2(const std::vector<Table2Row>& rows, const HSPair& hs, NodeSet J);

/// Every nonempty singular block of every Hermitian pair of rank <= max_rank
/// compared with the table.
struct Table2Comparison {
  std::size_t blocks = 0;
  std::size_t matched = 0;
  std::vector<std::string> mismatches;   // first entries name the divergent value
  std::vector<std::string> out_of_domain;  // blocks the table does not cover
  std::vector<std::string> unused_rows;  // rows no block matched
  bool ok() const { return mismatches.empty() && unused_rows.empty(); }
};

Table2Comparison compare_table2(const std::vector<Table2Row>& rows, int max_rank);

/// Result of one golden check; `lines` is the human-readable report.
struct GoldenResult {
  std::string name;
  bool ok = true;
  std::string divergence;  // first divergent value when !ok
  std::vector<std::string> lines;
};

struct GoldenOptions {
  std::filesystem::path golden_dir;
  bool allow_large = false;
  unsigned jobs = 1;
};

/// Names accepted by run_golden: E6, E7, E8, table2, figures, resolution.
std::vector<std::string> golden_names();
GoldenResult run_golden(const std::string& name, const GoldenOptions& opt);

/// Default golden directory (compile-time data path).
std::filesystem::path default_golden_dir();

}  // namespace kostant
