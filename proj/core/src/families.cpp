#include "pk/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "pk/error.hpp"
#include "pk/invariants.hpp"

namespace pk::families {

namespace {

constexpr std::string_view kParameterNames = "pqrskmn";

bool isArithmetic(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '*' ||
           c == '(' || c == ')' || c == ' ' || kParameterNames.find(c) != std::string_view::npos;
  });
}

std::size_t matchingParen(std::string_view s, std::size_t open) {
  int depth = 0;
  for (std::size_t k = open; k < s.size(); ++k) {
    if (s[k] == '(') ++depth;
    if (s[k] == ')' && --depth == 0) return k;
  }
  throw Error(ErrorKind::InvalidTemplate, "unbalanced template '" + std::string(s) + "'");
}

long toLong(const Integer& v) {
  if (!v.fits_slong_p()) throw Error(ErrorKind::InvalidParameters, "parameter value too large");
  return v.get_si();
}

std::string expand(std::string_view t, const Params& params) {
  std::string out;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k] != '(') {
      out += t[k];
      continue;
    }
    const std::size_t close = matchingParen(t, k);
    const std::string_view inner = t.substr(k + 1, close - k - 1);
    if (inner.size() > 4 && inner.substr(0, 3) == "i^{" && inner.back() == '}') {
      const long n = toLong(evaluateFormula(inner.substr(3, inner.size() - 4), params));
      if (n < 1) throw Error(ErrorKind::InvalidParameters, "pseudotwist length below 1");
      out += n == 1 ? "i" : "i^" + std::to_string(n);
    } else if (isArithmetic(inner)) {
      out += std::to_string(toLong(evaluateFormula(inner, params)));
    } else {
      out += "(" + expand(inner, params) + ")";
    }
    k = close;
  }
  return out;
}

void checkParams(const FamilySpec& spec, const Params& params) {
  for (char name : spec.parameters()) {
    auto it = params.find(name);
    if (it == params.end()) {
      throw Error(ErrorKind::InvalidParameters,
                  "row " + std::to_string(spec.rowId) + " needs parameter '" + name + "'");
    }
    if (it->second < 1) {
      throw Error(ErrorKind::InvalidParameters,
                  std::string("parameter '") + name + "' must be at least 1");
    }
  }
}

}  // namespace

std::vector<char> FamilySpec::parameters() const {
  std::vector<char> out;
  for (char name : kParameterNames) {
    // 'i' and gcd never collide with parameter letters.
    if (templ.find(name) != std::string::npos || formula.find(name) != std::string::npos) {
      out.push_back(name);
    }
  }
  return out;
}

std::vector<FamilySpec> allRows() {
  std::vector<FamilySpec> out = familyTable();
  const auto& extra = supplementaryRows();
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

const FamilySpec& familyRow(int rowId) {
  for (const auto* list : {&familyTable(), &supplementaryRows()}) {
    for (const FamilySpec& spec : *list) {
      if (spec.rowId == rowId) return spec;
    }
  }
  throw Error(ErrorKind::UnknownRow, "no family row " + std::to_string(rowId));
}

std::string instantiateSymbol(const FamilySpec& spec, const Params& params) {
  checkParams(spec, params);
  return expand(spec.templ, params);
}

diagram::PseudoDiagram instantiate(const FamilySpec& spec, const Params& params) {
  return diagram::buildDiagram(instantiateSymbol(spec, params));
}

Integer predictedD(const FamilySpec& spec, const Params& params) {
  checkParams(spec, params);
  return abs(evaluateFormula(spec.formula, params));
}

std::vector<Params> defaultGrid(const FamilySpec& spec) { return parseGrid(spec, ""); }

std::vector<Params> parseGrid(const FamilySpec& spec, std::string_view text) {
  std::map<char, std::vector<long>> values;
  for (char name : spec.parameters()) values[name] = {1, 2};

  auto number = [&](std::string_view s) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 1) {
      throw Error(ErrorKind::InvalidParameters, "bad grid value '" + std::string(s) + "'");
    }
    return v;
  };
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = text.substr(start, end - start);
    start = end + 1;
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq != 1 || kParameterNames.find(item[0]) == std::string_view::npos) {
      throw Error(ErrorKind::InvalidParameters, "bad grid entry '" + std::string(item) + "'");
    }
    std::vector<long> list;
    std::string_view rest = item.substr(2);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      std::size_t comma = rest.find(',', pos);
      if (comma == std::string_view::npos) comma = rest.size();
      const std::string_view part = rest.substr(pos, comma - pos);
      const std::size_t dots = part.find("..");
      if (dots != std::string_view::npos) {
        const long lo = number(part.substr(0, dots));
        const long hi = number(part.substr(dots + 2));
        if (hi < lo || hi - lo > 1000) {
          throw Error(ErrorKind::InvalidParameters, "bad grid range '" + std::string(part) + "'");
        }
        for (long v = lo; v <= hi; ++v) list.push_back(v);
      } else {
        list.push_back(number(part));
      }
      pos = comma + 1;
    }
    if (values.count(item[0])) values[item[0]] = list;
  }

  std::vector<Params> grid{Params{}};
  for (const auto& [name, list] : values) {
    std::vector<Params> next;
    for (const Params& base : grid) {
      for (long v : list) {
        Params p = base;
        p[name] = v;
        next.push_back(std::move(p));
      }
    }
    grid = std::move(next);
  }
  return grid;
}

std::string_view statusName(RowStatus status) {
  switch (status) {
    case RowStatus::Pass: return "PASS";
    case RowStatus::Flagged: return "FLAGGED";
    case RowStatus::Error: return "ERROR";
  }
  return "?";
}

VerificationReport verifyRow(const FamilySpec& spec, const std::vector<Params>& grid, int cap) {
  VerificationReport report;
  report.rowId = spec.rowId;
  report.templ = spec.templ;
  report.formula = spec.formula;
  bool mismatch = false;
  bool error = false;
  for (const Params& params : grid) {
    PointResult point;
    point.params = params;
    try {
      point.predicted = predictedD(spec, params);
      point.symbol = instantiateSymbol(spec, params);
      point.computed =
          invariants::pseudodeterminant(diagram::buildDiagram(point.symbol), cap).pseudodet;
      point.match = *point.computed == point.predicted;
      mismatch = mismatch || !point.match;
    } catch (const Error& e) {
      point.error = e.what();
      error = true;
    }
    report.results.push_back(std::move(point));
  }
  report.status = error ? RowStatus::Error : mismatch ? RowStatus::Flagged : RowStatus::Pass;
  return report;
}

nlohmann::json VerificationReport::toJson() const {
  nlohmann::json points = nlohmann::json::array();
  for (const PointResult& r : results) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [name, value] : r.params) params[std::string(1, name)] = value;
    nlohmann::json entry = {{"params", std::move(params)},
                            {"symbol", r.symbol},
                            {"predicted", invariants::integerJson(r.predicted)},
                            {"match", r.match}};
    entry["computed"] = r.computed ? invariants::integerJson(*r.computed) : nlohmann::json(nullptr);
    if (!r.error.empty()) entry["error"] = r.error;
    points.push_back(std::move(entry));
  }
  return {{"row", rowId},
          {"template", templ},
          {"formula", formula},
          {"status", statusName(status)},
          {"results", std::move(points)}};
}

std::string replacementSymbol(Replacement r) {
  switch (r) {
    case Replacement::IOneOne: return "(i,1,1)";
    case Replacement::IMinusMinus: return "(i,-1,-1)";
    case Replacement::IIOne: return "(i,i,1)";
    case Replacement::IIMinus: return "(i,i,-1)";
    case Replacement::III: return "(i,i,i)";
    case Replacement::IOneMinus: return "(i,1,-1)";
  }
  return "";
}

namespace {

bool isSimplePseudotwist(const notation::ConwayExpr& e) {
  return e.op == notation::ConwayExpr::Op::Elementary && e.kind == notation::Elementary::Pre;
}

int countSimple(const notation::ConwayExpr& e) {
  if (isSimplePseudotwist(e)) return 1;
  int n = 0;
  for (const auto& c : e.children) n += countSimple(c);
  return n;
}

bool replaceAt(notation::ConwayExpr& e, int& location, const notation::ConwayExpr& with) {
  if (isSimplePseudotwist(e)) {
    if (location-- == 0) {
      e = with;
      return true;
    }
    return false;
  }
  for (auto& c : e.children) {
    if (replaceAt(c, location, with)) return true;
  }
  return false;
}

}  // namespace

int pseudotwistCount(const notation::ConwayExpr& expr) { return countSimple(expr); }

notation::ConwayExpr replacePseudotwist(const notation::ConwayExpr& expr, int location,
                                        Replacement r) {
  notation::ConwayExpr out = expr;
  int remaining = location;
  if (location < 0 || !replaceAt(out, remaining, notation::parse(replacementSymbol(r)))) {
    throw Error(ErrorKind::NoPseudotwistAtLocation,
                "no simple pseudotwist number " + std::to_string(location));
  }
  return out;
}

bool twistReplacementCheck(const notation::ConwayExpr& expr, int location, Replacement r,
                           int cap) {
  const notation::ConwayExpr replaced = replacePseudotwist(expr, location, r);
  const Integer before = invariants::pseudodeterminant(diagram::buildDiagram(expr), cap).pseudodet;
  const Integer after =
      invariants::pseudodeterminant(diagram::buildDiagram(replaced), cap).pseudodet;
  return before == after;
}

}  // namespace pk::families
