#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pk/diagram.hpp"
#include "pk/linalg.hpp"
#include "pk/notation.hpp"

namespace pk::families {

using linalg::Integer;

/// Parameter values keyed by name (p, q, r, s, k, m, n).
using Params = std::map<char, long>;

/// One parametric pseudoknot family.
///
/// Templates use plain Conway syntax in which a parenthesised arithmetic
/// expression such as (2p+1) stands for the integer it evaluates to, and
/// (i^{2k-1}) for the pseudotwist of that length.
struct FamilySpec {
  int rowId = 0;
  std::string templ;
  std::string formula;
  std::string note;

  /// Parameter names used by the template or formula, in the order pqrskmn.
  std::vector<char> parameters() const;
};

/// The 60 tabulated families, rows 1..60.
const std::vector<FamilySpec>& familyTable();
/// Extra families checked the same way (rows 61 and up).
const std::vector<FamilySpec>& supplementaryRows();
/// familyTable() followed by supplementaryRows().
std::vector<FamilySpec> allRows();
/// Throws UnknownRow.
const FamilySpec& familyRow(int rowId);

/// Exact value of an integer expression with implicit multiplication and
/// gcd(...). Throws InvalidFormula or InvalidParameters.
Integer evaluateFormula(std::string_view formula, const Params& params);

/// Throws InvalidParameters when a parameter is missing or below 1.
std::string instantiateSymbol(const FamilySpec& spec, const Params& params);
diagram::PseudoDiagram instantiate(const FamilySpec& spec, const Params& params);
Integer predictedD(const FamilySpec& spec, const Params& params);

/// Every parameter over {1, 2}.
std::vector<Params> defaultGrid(const FamilySpec& spec);

/// Grid text such as "p=1..3;k=1,2". Parameters not mentioned take {1, 2};
/// names the row does not use are ignored.
std::vector<Params> parseGrid(const FamilySpec& spec, std::string_view text);

struct PointResult {
  Params params;
  std::string symbol;
  std::optional<Integer> computed;
  Integer predicted;
  bool match = false;
  std::string error;
};

enum class RowStatus { Pass, Flagged, Error };

std::string_view statusName(RowStatus status);

struct VerificationReport {
  int rowId = 0;
  std::string templ;
  std::string formula;
  std::vector<PointResult> results;
  RowStatus status = RowStatus::Pass;

  nlohmann::json toJson() const;
};

/// Computed pseudodeterminant against the formula at every grid point.
/// Computation errors are recorded per point.
VerificationReport verifyRow(const FamilySpec& spec, const std::vector<Params>& grid,
                             int cap = diagram::kDefaultPrecrossingCap);

/// Tangles that may replace a simple pseudotwist (i).
enum class Replacement { IOneOne, IMinusMinus, IIOne, IIMinus, III, IOneMinus };

inline constexpr Replacement kAllReplacements[] = {
    Replacement::IOneOne, Replacement::IMinusMinus, Replacement::IIOne,
    Replacement::IIMinus, Replacement::III,         Replacement::IOneMinus};

/// "(i,1,1)" and so on.
std::string replacementSymbol(Replacement r);

/// Number of single i atoms in the expression, counted in preorder.
int pseudotwistCount(const notation::ConwayExpr& expr);

/// Replaces the location-th single i atom. Throws NoPseudotwistAtLocation.
notation::ConwayExpr replacePseudotwist(const notation::ConwayExpr& expr, int location,
                                        Replacement r);

/// Whether the replacement leaves the pseudodeterminant unchanged.
bool twistReplacementCheck(const notation::ConwayExpr& expr, int location, Replacement r,
                           int cap = diagram::kDefaultPrecrossingCap);

}  // namespace pk::families
