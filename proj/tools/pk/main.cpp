// pk: command-line front end for the pseudoknot library.
//
// Exit status: 0 on success, 1 on a domain error (bad symbol, cap exceeded,
// failed computation), 2 on a usage error.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pk/diagram.hpp"
#include "pk/error.hpp"
#include "pk/families.hpp"
#include "pk/invariants.hpp"
#include "pk/notation.hpp"
#include "pk/polyhedra.hpp"

namespace {

using nlohmann::json;
using pk::linalg::Integer;
namespace dg = pk::diagram;
namespace inv = pk::invariants;
namespace fam = pk::families;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  int maxPrecrossings = dg::kDefaultPrecrossingCap;
  std::string templates;
  bool readStdin = false;
  std::vector<std::string> symbols;
  long modulus = 0;
  long bound = 100;
  bool witness = false;
  bool emitDiagram = false;
  bool strong = false;
  long limit = 20;
  std::string file;
  std::string rows;
  std::string grid;
  int row = 0;

  bool json() const { return format == "json"; }
};

pk::PolyhedronRegistry registry(const Options& o) {
  pk::PolyhedronRegistry r = pk::PolyhedronRegistry::builtin();
  if (!o.templates.empty()) {
    std::ifstream in(o.templates);
    if (!in) throw UsageError("cannot read template file " + o.templates);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::exception& e) {
      throw pk::Error(pk::ErrorKind::InvalidTemplate, e.what());
    }
    r.merge(doc);
  }
  return r;
}

std::vector<std::string> readLines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

std::vector<std::string> inputSymbols(const Options& o) {
  if (o.readStdin) {
    if (!o.symbols.empty()) throw UsageError("give symbols either as arguments or with --stdin");
    return readLines(std::cin);
  }
  if (o.symbols.empty()) throw UsageError("missing symbol");
  return o.symbols;
}

std::string errorText(const pk::Error& e) { return e.what(); }

std::string joined(const std::vector<std::int64_t>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? " " : "") + std::to_string(values[i]);
  return s;
}

std::int64_t smallModulus(long p) {
  if (p < 2) throw UsageError("--mod must be at least 2");
  return p;
}

// One result per symbol; text is what plain output prints for it.
struct Outcome {
  json doc;
  std::string text;
};

using Handler = std::function<Outcome(const std::string&, const dg::PseudoDiagram&)>;

// Runs `handler` for every input symbol. A single argument prints one
// document; several symbols or --stdin print a JSON array.
int forEachSymbol(const Options& o, const Handler& handler) {
  const pk::PolyhedronRegistry reg = registry(o);
  const std::vector<std::string> symbols = inputSymbols(o);
  const bool many = o.readStdin || symbols.size() > 1;
  json all = json::array();
  int failures = 0;
  for (const std::string& symbol : symbols) {
    try {
      Outcome out = handler(symbol, dg::buildDiagram(symbol, reg));
      if (o.json()) {
        all.push_back(std::move(out.doc));
      } else {
        if (many) std::cout << symbol << ": ";
        std::cout << out.text << "\n";
      }
    } catch (const pk::Error& e) {
      ++failures;
      std::cerr << "pk: " << symbol << ": " << errorText(e) << "\n";
      if (o.json() && many) all.push_back({{"symbol", symbol}, {"error", errorText(e)}});
    }
  }
  if (o.json()) {
    if (many) {
      std::cout << all.dump(2) << "\n";
    } else if (!all.empty()) {
      std::cout << all[0].dump(2) << "\n";
    }
  }
  return failures ? 1 : 0;
}

std::optional<inv::Coloring> firstColoring(const dg::PseudoDiagram& d, std::int64_t p,
                                           bool strong) {
  std::optional<inv::Coloring> found;
  inv::forEachColoring(d, p, strong, [&](const inv::Coloring& c) {
    found = c;
    return false;
  });
  return found;
}

json coloringJson(const inv::Coloring& c) {
  return {{"values", c.values}, {"colors", inv::countColors(c)}};
}

// ---------------------------------------------------------------------------

int cmdParse(const Options& o) {
  const pk::PolyhedronRegistry reg = registry(o);
  const std::vector<std::string> symbols = inputSymbols(o);
  const bool many = o.readStdin || symbols.size() > 1;
  json all = json::array();
  int failures = 0;
  for (const std::string& symbol : symbols) {
    try {
      const pk::notation::ConwayExpr expr = pk::notation::parse(symbol, reg);
      const dg::PseudoDiagram d = dg::buildDiagram(expr, reg);
      json doc = {{"input", symbol},
                  {"unreduced", pk::notation::render(expr, false)},
                  {"reduced", pk::notation::render(expr, true)},
                  {"ast", pk::notation::summary(expr)},
                  {"nodes", d.nodeCount()},
                  {"precrossings", d.precrossingCount()},
                  {"components", d.components()}};
      if (o.emitDiagram) doc["diagram"] = dg::toJson(d);
      if (o.json()) {
        all.push_back(std::move(doc));
        continue;
      }
      std::cout << doc["unreduced"].get<std::string>() << "\n"
                << "  reduced: " << doc["reduced"].get<std::string>() << "\n"
                << "  ast: " << doc["ast"].get<std::string>() << "\n"
                << "  nodes: " << d.nodeCount() << ", precrossings: " << d.precrossingCount()
                << ", components: " << d.components() << "\n";
      if (o.emitDiagram) std::cout << dg::toJson(d).dump(2) << "\n";
    } catch (const pk::Error& e) {
      ++failures;
      std::cerr << "pk: " << symbol << ": " << errorText(e) << "\n";
      if (o.json() && many) all.push_back({{"input", symbol}, {"error", errorText(e)}});
    }
  }
  if (o.json()) {
    if (many) {
      std::cout << all.dump(2) << "\n";
    } else if (!all.empty()) {
      std::cout << all[0].dump(2) << "\n";
    }
  }
  return failures ? 1 : 0;
}

int cmdDet(const Options& o) {
  return forEachSymbol(o, [](const std::string& symbol, const dg::PseudoDiagram& d) {
    const Integer det = inv::determinant(d);
    return Outcome{{{"symbol", symbol}, {"determinant", inv::integerJson(det)}}, det.get_str()};
  });
}

int cmdPseudodet(const Options& o) {
  return forEachSymbol(o, [&](const std::string& symbol, const dg::PseudoDiagram& d) {
    inv::PseudoDetReport report = inv::pseudodeterminant(d, o.maxPrecrossings);
    report.symbol = symbol;
    std::string text = report.pseudodet.get_str();
    if (o.witness) {
      for (const auto& r : report.resolutions) {
        text += "\n  " + (r.assignment.empty() ? std::string("(classical)") : r.assignment) +
                " " + r.det.get_str();
      }
    }
    return Outcome{report.toJson(), text};
  });
}

int cmdColorable(const Options& o) {
  const std::int64_t p = smallModulus(o.modulus);
  return forEachSymbol(o, [&](const std::string& symbol, const dg::PseudoDiagram& d) {
    const bool colorable = inv::isColorable(d, Integer(p), o.maxPrecrossings);
    json doc = {{"symbol", symbol}, {"modulus", p}, {"colorable", colorable}};
    std::string text = colorable ? "true" : "false";
    if (o.witness && colorable) {
      json witnesses = json::array();
      dg::forEachResolution(
          d,
          [&](const dg::Resolution& r, const dg::PseudoDiagram& resolved) {
            const auto c = firstColoring(resolved, p, false);
            const std::string a = dg::assignmentString(d, r);
            witnesses.push_back({{"assignment", a}, {"coloring", coloringJson(*c)}});
            text += "\n  " + (a.empty() ? std::string("(classical)") : a) + " " + joined(c->values);
            return true;
          },
          o.maxPrecrossings);
      doc["witnesses"] = std::move(witnesses);
    }
    return Outcome{doc, text};
  });
}

int cmdStrong(const Options& o) {
  const std::int64_t p = smallModulus(o.modulus);
  return forEachSymbol(o, [&](const std::string& symbol, const dg::PseudoDiagram& d) {
    const bool strong = inv::isStrongColorable(d, Integer(p));
    json doc = {{"symbol", symbol}, {"modulus", p}, {"strong", strong}};
    std::string text = strong ? "true" : "false";
    if (o.witness && strong) {
      const auto c = firstColoring(d, p, true);
      doc["witness"] = coloringJson(*c);
      text += "\n  " + joined(c->values);
    }
    return Outcome{doc, text};
  });
}

int cmdColorings(const Options& o) {
  const std::int64_t p = smallModulus(o.modulus);
  if (o.limit < 0) throw UsageError("--limit must be non-negative");
  return forEachSymbol(o, [&](const std::string& symbol, const dg::PseudoDiagram& d) {
    json groups = json::array();
    std::string text;
    auto collect = [&](const std::string& assignment, const dg::PseudoDiagram& target,
                       bool strong) {
      json list = json::array();
      std::set<int> counts;
      std::uint64_t total = 0;
      inv::forEachColoring(target, p, strong, [&](const inv::Coloring& c) {
        ++total;
        counts.insert(inv::countColors(c));
        if (static_cast<long>(list.size()) < o.limit) list.push_back(coloringJson(c));
        return true;
      });
      groups.push_back({{"assignment", assignment},
                        {"total", total},
                        {"colorCounts", std::vector<int>(counts.begin(), counts.end())},
                        {"colorings", list}});
      if (!text.empty()) text += "\n";
      text += (assignment.empty() ? std::string("(all)") : assignment) + ": " +
              std::to_string(total) + " colorings, color counts";
      for (int n : counts) text += " " + std::to_string(n);
      for (const auto& c : list) {
        text += "\n  " + joined(c["values"].get<std::vector<std::int64_t>>());
      }
    };
    if (o.strong || d.precrossingCount() == 0) {
      collect("", d, o.strong);
    } else {
      dg::forEachResolution(
          d,
          [&](const dg::Resolution& r, const dg::PseudoDiagram& resolved) {
            collect(dg::assignmentString(d, r), resolved, false);
            return true;
          },
          o.maxPrecrossings);
    }
    return Outcome{{{"symbol", symbol}, {"modulus", p}, {"strong", o.strong}, {"groups", groups}},
                   text};
  });
}

int cmdKH(const Options& o) {
  return forEachSymbol(o, [&](const std::string& symbol, const dg::PseudoDiagram& d) {
    const inv::KHResult kh = inv::khProperty(d, o.maxPrecrossings);
    const bool alternating = dg::isPseudoalternating(d);
    json witnesses = json::array();
    std::string text = std::string(kh.holds ? "true" : "false") +
                       "\n  modulus: " + kh.modulus.get_str() +
                       "\n  pseudoalternating: " + (alternating ? "true" : "false");
    for (const auto& w : kh.witnesses) {
      witnesses.push_back({{"assignment", w.assignment}, {"coloring", coloringJson(w.coloring)}});
      text += "\n  " + w.assignment + " " + joined(w.coloring.values) + " (" +
              std::to_string(inv::countColors(w.coloring)) + " colors)";
    }
    return Outcome{{{"symbol", symbol},
                    {"holds", kh.holds},
                    {"modulus", inv::integerJson(kh.modulus)},
                    {"pseudoalternating", alternating},
                    {"witnesses", witnesses}},
                   text};
  });
}

int cmdColoringNumbers(const Options& o) {
  if (o.bound < 2) throw UsageError("--bound must be at least 2");
  return forEachSymbol(o, [&](const std::string& symbol, const dg::PseudoDiagram& d) {
    const inv::PseudoDetReport report = inv::pseudodeterminant(d, o.maxPrecrossings);
    const std::vector<long> numbers = inv::coloringNumbers(report, o.bound);
    std::string text;
    for (long n : numbers) text += (text.empty() ? "" : " ") + std::to_string(n);
    return Outcome{{{"symbol", symbol},
                    {"bound", o.bound},
                    {"pseudodet", inv::integerJson(report.pseudodet)},
                    {"numbers", numbers}},
                   text.empty() ? "(none)" : text};
  });
}

int cmdCensus(const Options& o) {
  if (o.bound < 2) throw UsageError("--bound must be at least 2");
  std::vector<std::string> lines;
  if (o.readStdin) {
    if (!o.file.empty()) throw UsageError("give a census file or --stdin, not both");
    lines = readLines(std::cin);
  } else {
    if (o.file.empty()) throw UsageError("missing census file");
    std::ifstream in(o.file);
    if (!in) throw UsageError("cannot read " + o.file);
    lines = readLines(in);
  }
  const pk::PolyhedronRegistry reg = registry(o);
  json entries = json::array();
  std::map<Integer, long> histogram;
  long failed = 0;
  for (const std::string& symbol : lines) {
    try {
      const inv::PseudoDetReport report =
          inv::pseudodeterminant(dg::buildDiagram(symbol, reg), o.maxPrecrossings);
      const std::vector<long> numbers = inv::coloringNumbers(report, o.bound);
      ++histogram[report.pseudodet];
      entries.push_back({{"symbol", symbol},
                         {"pseudodet", inv::integerJson(report.pseudodet)},
                         {"coloringNumbers", numbers}});
      if (!o.json()) {
        std::cout << symbol << "\t" << report.pseudodet.get_str() << "\t";
        for (std::size_t i = 0; i < numbers.size(); ++i) std::cout << (i ? " " : "") << numbers[i];
        std::cout << "\n";
      }
    } catch (const pk::Error& e) {
      ++failed;
      entries.push_back({{"symbol", symbol}, {"error", errorText(e)}});
      std::cerr << "pk: " << symbol << ": " << errorText(e) << "\n";
    }
  }
  json hist = json::array();
  std::string summary;
  for (const auto& [d, n] : histogram) {
    hist.push_back({{"pseudodet", inv::integerJson(d)}, {"count", n}});
    summary += (summary.empty() ? "" : ", ") + std::to_string(n) + " with d=" + d.get_str();
  }
  if (o.json()) {
    std::cout << json{{"total", lines.size()},
                      {"failed", failed},
                      {"bound", o.bound},
                      {"entries", entries},
                      {"histogram", hist}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "total " << lines.size() << ", failed " << failed << "\n";
    std::cout << "histogram: " << (summary.empty() ? "(empty)" : summary) << "\n";
  }
  return !lines.empty() && failed == static_cast<long>(lines.size()) ? 1 : 0;
}

// ---------------------------------------------------------------------------

json specJson(const fam::FamilySpec& spec) {
  std::string params;
  for (char c : spec.parameters()) params += c;
  json j = {{"row", spec.rowId},
            {"template", spec.templ},
            {"formula", spec.formula},
            {"parameters", params}};
  if (!spec.note.empty()) j["note"] = spec.note;
  return j;
}

const fam::FamilySpec& rowOrUsage(int row) {
  try {
    return fam::familyRow(row);
  } catch (const pk::Error& e) {
    throw UsageError(e.what());
  }
}

std::vector<int> parseRows(const std::string& text) {
  std::vector<int> rows;
  if (text.empty()) {
    for (const auto& spec : fam::allRows()) rows.push_back(spec.rowId);
    return rows;
  }
  auto number = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw UsageError("bad row list '" + text + "'");
    }
    return v;
  };
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) {
      rows.push_back(number(item));
      continue;
    }
    const int lo = number(std::string_view(item).substr(0, dash));
    const int hi = number(std::string_view(item).substr(dash + 1));
    if (hi < lo) throw UsageError("bad row range '" + item + "'");
    for (int r = lo; r <= hi; ++r) rows.push_back(r);
  }
  for (int r : rows) rowOrUsage(r);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return rows;
}

int cmdFamiliesList(const Options& o) {
  json list = json::array();
  for (const auto& spec : fam::allRows()) {
    list.push_back(specJson(spec));
    if (!o.json()) {
      std::cout << spec.rowId << "\t" << spec.templ << "\t" << spec.formula << "\n";
    }
  }
  if (o.json()) std::cout << list.dump(2) << "\n";
  return 0;
}

int cmdFamiliesShow(const Options& o) {
  const fam::FamilySpec& spec = rowOrUsage(o.row);
  const json j = specJson(spec);
  if (o.json()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "row " << spec.rowId << "\n"
              << "  template: " << spec.templ << "\n"
              << "  formula: " << spec.formula << "\n"
              << "  parameters: " << j["parameters"].get<std::string>() << "\n";
    if (!spec.note.empty()) std::cout << "  note: " << spec.note << "\n";
  }
  return 0;
}

int cmdFamiliesVerify(const Options& o) {
  const std::vector<int> rows = parseRows(o.rows);
  json reports = json::array();
  std::map<std::string, long> counts{{"PASS", 0}, {"FLAGGED", 0}, {"ERROR", 0}};
  for (int row : rows) {
    const fam::FamilySpec& spec = fam::familyRow(row);
    std::vector<fam::Params> grid;
    try {
      grid = fam::parseGrid(spec, o.grid);
    } catch (const pk::Error& e) {
      throw UsageError(e.what());
    }
    const fam::VerificationReport report = fam::verifyRow(spec, grid, o.maxPrecrossings);
    ++counts[std::string(fam::statusName(report.status))];
    reports.push_back(report.toJson());
    if (o.json()) continue;
    std::cout << "row " << row << " " << fam::statusName(report.status) << "  " << spec.templ
              << "  d = " << spec.formula << "\n";
    for (const auto& r : report.results) {
      if (r.match) continue;
      std::cout << "  ";
      for (const auto& [name, value] : r.params) std::cout << name << "=" << value << " ";
      std::cout << r.symbol << ": ";
      if (!r.error.empty()) {
        std::cout << "error " << r.error << "\n";
      } else {
        std::cout << "computed " << r.computed->get_str() << ", predicted " << r.predicted.get_str()
                  << "\n";
      }
    }
  }
  if (o.json()) {
    std::cout << json{{"reports", reports}, {"summary", counts}}.dump(2) << "\n";
  } else {
    std::cout << counts["PASS"] << " passed, " << counts["FLAGGED"] << " flagged, "
              << counts["ERROR"] << " with errors\n";
  }
  return counts["ERROR"] ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudoknot diagrams in extended Conway notation: colorings and invariants."};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--max-precrossings", o.maxPrecrossings, "Resolution enumeration cap")
      ->check(CLI::Range(0, 30))
      ->capture_default_str();
  app.add_option("--templates", o.templates, "Extra polyhedron template file (JSON)");

  auto symbolCommand = [&](const std::string& name, const std::string& help) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->add_option("symbol", o.symbols, "Conway symbol(s); quote symbols containing spaces");
    cmd->add_flag("--stdin", o.readStdin, "Read one symbol per line from standard input");
    return cmd;
  };

  std::function<int()> run;

  CLI::App* parse = symbolCommand("parse", "Parse a symbol and print its normal forms");
  parse->add_flag("--emit-diagram", o.emitDiagram, "Include the diagram JSON");
  parse->callback([&] { run = [&] { return cmdParse(o); }; });

  symbolCommand("det", "Determinant of a classical diagram")->callback([&] {
    run = [&] { return cmdDet(o); };
  });

  CLI::App* pseudodet = symbolCommand("pseudodet", "Pseudodeterminant");
  pseudodet->add_flag("--witness", o.witness, "List every resolution determinant");
  pseudodet->callback([&] { run = [&] { return cmdPseudodet(o); }; });

  CLI::App* colorable = symbolCommand("colorable", "Colorability mod p");
  colorable->add_option("--mod", o.modulus, "Modulus p")->required();
  colorable->add_flag("--witness", o.witness, "Print one coloring per resolution");
  colorable->callback([&] { run = [&] { return cmdColorable(o); }; });

  CLI::App* strong = symbolCommand("strong", "Strong colorability mod p");
  strong->add_option("--mod", o.modulus, "Modulus p")->required();
  strong->add_flag("--witness", o.witness, "Print one strong coloring");
  strong->callback([&] { run = [&] { return cmdStrong(o); }; });

  CLI::App* colorings = symbolCommand("colorings", "Enumerate nontrivial colorings mod p");
  colorings->add_option("--mod", o.modulus, "Modulus p")->required();
  colorings->add_flag("--strong", o.strong, "Colorings of the strong system");
  colorings->add_option("--limit", o.limit, "Colorings listed per group")->capture_default_str();
  colorings->callback([&] { run = [&] { return cmdColorings(o); }; });

  symbolCommand("kh", "Kauffman-Harary property mod the pseudodeterminant")->callback([&] {
    run = [&] { return cmdKH(o); };
  });

  CLI::App* numbers = symbolCommand("coloring-numbers", "Moduli up to a bound that admit colorings");
  numbers->add_option("--bound", o.bound, "Largest modulus")->capture_default_str();
  numbers->callback([&] { run = [&] { return cmdColoringNumbers(o); }; });

  CLI::App* census = app.add_subcommand("census", "Pseudodeterminant census of a symbol list");
  census->add_option("file", o.file, "Newline-separated symbols, '#' starts a comment");
  census->add_flag("--stdin", o.readStdin, "Read the list from standard input");
  census->add_option("--bound", o.bound, "Largest coloring modulus")->capture_default_str();
  census->callback([&] { run = [&] { return cmdCensus(o); }; });

  CLI::App* families = app.add_subcommand("families", "Parametric pseudoknot families");
  families->require_subcommand(1);
  families->add_subcommand("list", "List every row")->callback([&] {
    run = [&] { return cmdFamiliesList(o); };
  });
  CLI::App* show = families->add_subcommand("show", "Show one row");
  show->add_option("row", o.row, "Row number")->required();
  show->callback([&] { run = [&] { return cmdFamiliesShow(o); }; });
  CLI::App* verify = families->add_subcommand("verify", "Check formulas against computation");
  verify->add_option("--rows", o.rows, "Rows such as 1,3-5 (default: all)");
  verify->add_option("--grid", o.grid, "Grid such as p=1..3;k=1,2 (default: each over {1,2})");
  verify->callback([&] { run = [&] { return cmdFamiliesVerify(o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return run();
  } catch (const UsageError& e) {
    std::cerr << "pk: " << e.what() << "\n";
    return 2;
  } catch (const pk::Error& e) {
    std::cerr << "pk: " << errorText(e) << "\n";
    return 1;
  }
}
