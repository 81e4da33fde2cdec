#include "fog/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "fog/dsl.hpp"
#include "fog/errors.hpp"
#include "fog/json_io.hpp"

namespace fog {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw UsageError("cannot read file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Grade> parse_grid(const std::string& spec) {
  std::vector<Grade> grid;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t comma = spec.find(',', start);
    std::string item = spec.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      grid.push_back(Grade::parse(item));
    } catch (const std::invalid_argument& e) {
      throw UsageError("bad grid entry '" + item + "': " + e.what());
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return grid;
}

json grid_json(const std::vector<Grade>& grid) {
  json out = json::array();
  for (const Grade& g : grid) out.push_back(g.str());
  return out;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

const dsl::NamedFuzzy& find_fuzzy_or_fail(const dsl::Document& doc,
                                          const std::string& name) {
  const dsl::NamedFuzzy* f = doc.find_fuzzy(name);
  if (f == nullptr) {
    throw UsageError("no fuzzy subset named '" + name + "' in the document");
  }
  return *f;
}

struct ValidateCmd {
  std::string file;
  bool json_mode = false;

  int run(std::ostream& out, std::ostream&) const {
    try {
      dsl::Document doc = dsl::parse(read_file(file));
      if (json_mode) {
        emit(out, json{{"command", "validate"},
                       {"inputs", {{"file", file}}},
                       {"results", json::array()},
                       {"valid", true},
                       {"counts",
                        {{"structures", doc.structures.size()},
                         {"fuzzies", doc.fuzzies.size()},
                         {"sets", doc.sets.size()}}}});
      } else {
        out << "ok: " << doc.structures.size() << " structure(s), "
            << doc.fuzzies.size() << " fuzzy subset(s), " << doc.sets.size()
            << " set(s)\n";
      }
      return 0;
    } catch (const dsl::ParseError& e) {
      if (e.kind != dsl::ErrorKind::axiom) throw;
      if (json_mode) {
        emit(out, json{{"command", "validate"},
                       {"inputs", {{"file", file}}},
                       {"results", json::array()},
                       {"valid", false},
                       {"error", e.what()}});
      } else {
        out << "invalid: " << e.what() << "\n";
      }
      return 1;
    }
  }
};

struct CheckCmd {
  std::string file;
  std::string fuzzy_name;
  bool def1 = false;
  bool def2 = false;
  bool property_a = false;
  std::string oracle_grid;
  bool json_mode = false;

  int run(std::ostream& out, std::ostream&) const {
    dsl::Document doc = dsl::parse(read_file(file));
    const dsl::NamedFuzzy& f = find_fuzzy_or_fail(doc, fuzzy_name);

    bool any_selected = def1 || def2 || property_a || !oracle_grid.empty();
    std::vector<WitnessReport> reports;
    json deciders = json::array();
    if (def1 || !any_selected) {
      reports.push_back(is_semiprime_def1(f.value));
      deciders.push_back("def1");
    }
    if (def2 || !any_selected) {
      reports.push_back(is_semiprime_def2(f.value));
      deciders.push_back("def2");
    }
    if (property_a || !any_selected) {
      reports.push_back(has_property_a(f.value));
      deciders.push_back("property-a");
    }
    if (!oracle_grid.empty()) {
      reports.push_back(def2_bruteforce(f.value, parse_grid(oracle_grid)));
      deciders.push_back("def2-bruteforce");
    }

    bool all_hold = true;
    for (const WitnessReport& r : reports) all_hold = all_hold && r.holds;

    if (json_mode) {
      json results = json::array();
      for (const WitnessReport& r : reports) results.push_back(to_json(r));
      emit(out, json{{"command", "check"},
                     {"inputs",
                      {{"file", file},
                       {"fuzzy", fuzzy_name},
                       {"deciders", std::move(deciders)}}},
                     {"results", std::move(results)}});
    } else {
      for (const WitnessReport& r : reports) out << describe(r) << "\n";
    }
    return all_hold ? 0 : 1;
  }
};

struct ComposeCmd {
  std::string file;
  std::string left;
  std::string right;
  bool json_mode = false;

  int run(std::ostream& out, std::ostream&) const {
    dsl::Document doc = dsl::parse(read_file(file));
    const dsl::NamedFuzzy& f = find_fuzzy_or_fail(doc, left);
    const dsl::NamedFuzzy& g = find_fuzzy_or_fail(doc, right);
    FuzzySubset h = compose(f.value, g.value);
    if (json_mode) {
      json elements = json::array();
      for (int x = 0; x < h.size(); ++x) {
        elements.push_back(h.structure().label(x));
      }
      emit(out, json{{"command", "compose"},
                     {"inputs",
                      {{"file", file}, {"left", left}, {"right", right}}},
                     {"results", json::array()},
                     {"composition",
                      {{"elements", std::move(elements)},
                       {"grades", to_json(h)}}}});
    } else {
      for (int x = 0; x < h.size(); ++x) {
        out << h.structure().label(x) << ": " << h.at(x).str() << "\n";
      }
    }
    return 0;
  }
};

struct CrispCmd {
  std::string file;
  std::string set_name;
  bool json_mode = false;

  int run(std::ostream& out, std::ostream&) const {
    dsl::Document doc = dsl::parse(read_file(file));
    const dsl::NamedSet* t = doc.find_set(set_name);
    if (t == nullptr) {
      throw UsageError("no set named '" + set_name + "' in the document");
    }
    const dsl::NamedStructure* host = doc.find_structure(t->structure);
    WitnessReport report = crisp_semiprime(*host->value, t->members);
    if (json_mode) {
      emit(out, json{{"command", "crisp"},
                     {"inputs", {{"file", file}, {"set", set_name}}},
                     {"results", json::array({to_json(report)})}});
    } else {
      out << describe(report) << "\n";
    }
    return report.holds ? 0 : 1;
  }
};

struct SearchCmd {
  int max_n = 2;
  std::string grid;
  std::string goal;
  std::int64_t budget = 10'000'000;
  bool json_mode = false;

  int run(std::ostream& out, std::ostream&) const {
    SearchTask task;
    task.max_n = max_n;
    task.grid = parse_grid(grid);
    task.goal = goal;
    task.budget = budget;
    SearchResult result = run_search(task);

    json inputs{{"max_n", max_n},
                {"grid", grid_json(task.grid)},
                {"goal", goal},
                {"budget", budget}};
    if (json_mode) {
      json results = json::array();
      json found = json::array();
      for (const SearchHit& hit : result.found) {
        results.push_back(to_json(hit.report));
        found.push_back(to_json(hit));
      }
      emit(out, json{{"command", "search"},
                     {"inputs", std::move(inputs)},
                     {"results", std::move(results)},
                     {"found", std::move(found)},
                     {"summary",
                      {{"examined", result.examined},
                       {"exhausted", result.exhausted},
                       {"found", result.found.size()}}}});
    } else {
      for (const SearchHit& hit : result.found) {
        out << to_json(hit).dump() << "\n";
      }
      out << "examined=" << result.examined
          << " found=" << result.found.size() << " exhausted="
          << (result.exhausted ? "true" : "false") << "\n";
    }
    // The two scan goals assert the absence of counterexamples, so any hit
    // is a failed property; the hunt goals just report what they find.
    bool scan_goal = goal == "theorem4-scan" || goal == "theorem5-scan";
    return scan_goal && !result.found.empty() ? 1 : 0;
  }
};

struct PaperCmd {
  bool theorem4 = false;
  bool remark6 = false;
  int window = gallery::kDefaultWindow;
  bool json_mode = false;

  int run(std::ostream& out, std::ostream&) const {
    if (theorem4 == remark6) {
      throw UsageError("pass exactly one of --theorem4 or --remark6");
    }
    std::vector<gallery::GalleryCheck> checks;
    json inputs;
    if (theorem4) {
      inputs = json{{"check", "theorem4"}, {"window", window}};
      checks.push_back(gallery::theorem4_def1(window));
      checks.push_back(gallery::theorem4_def2(window));
    } else {
      inputs = json{{"check", "remark6"}};
      gallery::Remark6Result r = gallery::remark6();
      checks.push_back(std::move(r.def1));
      checks.push_back(std::move(r.property_a));
    }

    bool all_hold = true;
    for (const auto& c : checks) all_hold = all_hold && c.report.holds;

    if (json_mode) {
      json results = json::array();
      json transcripts = json::array();
      for (const auto& c : checks) {
        results.push_back(to_json(c.report));
        transcripts.push_back(c.transcript);
      }
      emit(out, json{{"command", "paper"},
                     {"inputs", std::move(inputs)},
                     {"results", std::move(results)},
                     {"transcripts", std::move(transcripts)}});
    } else {
      for (const auto& c : checks) {
        for (const std::string& line : c.transcript) out << line << "\n";
        out << describe(c.report) << "\n";
      }
    }
    return all_hold ? 0 : 1;
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"verification and search toolkit for fuzzy subsets of finite "
               "ordered groupoids"};
  app.name("fog");
  app.require_subcommand(1);

  ValidateCmd validate_cmd;
  auto* validate = app.add_subcommand(
      "validate", "parse a document and check the structure axioms");
  validate->add_option("file", validate_cmd.file, "document path")
      ->required();
  validate->add_flag("--json", validate_cmd.json_mode, "JSON output");

  CheckCmd check_cmd;
  auto* check = app.add_subcommand(
      "check", "run semiprimeness deciders on a named fuzzy subset");
  check->add_option("file", check_cmd.file, "document path")->required();
  check->add_option("--fuzzy", check_cmd.fuzzy_name, "fuzzy subset name")
      ->required();
  check->add_flag("--def1", check_cmd.def1, "grade-of-square decider");
  check->add_flag("--def2", check_cmd.def2, "composition decider");
  check->add_flag("--property-a", check_cmd.property_a,
                  "triple condition decider");
  check->add_option("--oracle", check_cmd.oracle_grid,
                    "exhaustive composition oracle over this grade grid, "
                    "e.g. 0,1/2,1");
  check->add_flag("--json", check_cmd.json_mode, "JSON output");

  ComposeCmd compose_cmd;
  auto* compose = app.add_subcommand(
      "compose", "print the sup-min composition of two fuzzy subsets");
  compose->add_option("file", compose_cmd.file, "document path")->required();
  compose->add_option("--left", compose_cmd.left, "left fuzzy subset")
      ->required();
  compose->add_option("--right", compose_cmd.right, "right fuzzy subset")
      ->required();
  compose->add_flag("--json", compose_cmd.json_mode, "JSON output");

  CrispCmd crisp_cmd;
  auto* crisp = app.add_subcommand(
      "crisp", "check a crisp subset for semiprimeness");
  crisp->add_option("file", crisp_cmd.file, "document path")->required();
  crisp->add_option("--set", crisp_cmd.set_name, "set name")->required();
  crisp->add_flag("--json", crisp_cmd.json_mode, "JSON output");

  SearchCmd search_cmd;
  auto* search = app.add_subcommand(
      "search", "enumerate small structures hunting for witnesses");
  search->add_option("--max-n", search_cmd.max_n, "largest carrier size")
      ->required();
  search->add_option("--grid", search_cmd.grid,
                     "comma-separated grade grid, e.g. 0,1/2,1")
      ->required();
  search
      ->add_option("--goal", search_cmd.goal,
                   "def2-not-def1 | property-a-violations | nonassoc-compose "
                   "| theorem4-scan | theorem5-scan")
      ->required();
  search->add_option("--budget", search_cmd.budget,
                     "maximum (structure, subsets) combinations to examine");
  search->add_flag("--json", search_cmd.json_mode, "JSON output");

  PaperCmd paper_cmd;
  auto* paper = app.add_subcommand(
      "paper", "reproduce the built-in counterexample gallery");
  paper->add_flag("--theorem4", paper_cmd.theorem4,
                  "step subset on the naturals from 2 up");
  paper->add_flag("--remark6", paper_cmd.remark6,
                  "identity subset on the rational unit interval");
  paper->add_option("--window", paper_cmd.window,
                    "window bound for the naturals check");
  paper->add_flag("--json", paper_cmd.json_mode, "JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << app.help();
    return 2;
  }

  try {
    if (validate->parsed()) return validate_cmd.run(out, err);
    if (check->parsed()) return check_cmd.run(out, err);
    if (compose->parsed()) return compose_cmd.run(out, err);
    if (crisp->parsed()) return crisp_cmd.run(out, err);
    if (search->parsed()) return search_cmd.run(out, err);
    if (paper->parsed()) return paper_cmd.run(out, err);
  } catch (const dsl::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {  // usage, structural, resource, range
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace fog
