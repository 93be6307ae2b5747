// Command-line front end: load or construct finite semigroups, classify
// them, verify the registered statements, enumerate small orders, and
// convert between the table formats.
//
// Exit codes: 0 success; 1 a check failed (a statement reported a
// counterexample); 2 input error (malformed file, non-associative table,
// unknown name).

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "finsemi/classes.hpp"
#include "finsemi/constructions.hpp"
#include "finsemi/enumerate.hpp"
#include "finsemi/errors.hpp"
#include "finsemi/io.hpp"
#include "finsemi/verify.hpp"

namespace {

finsemi::FiniteSemigroup load_input(const std::string& path) {
  if (path == "-") {
    return finsemi::parse_table_auto(std::cin);
  }
  std::ifstream in(path);
  if (!in) {
    throw finsemi::ParseError("cannot open input file: " + path);
  }
  return finsemi::parse_table_auto(in);
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw finsemi::ParseError("cannot open output file: " + path);
  }
  out << content;
}

int run_analyze(const std::string& input, const std::string& format) {
  const finsemi::FiniteSemigroup S = load_input(input);
  const finsemi::ClassificationReport report = finsemi::classify(S);
  if (format == "json") {
    std::cout << finsemi::to_json_string(report, S);
  } else {
    std::cout << finsemi::to_text(report, S);
  }
  return 0;
}

int run_verify(const std::string& input, std::vector<std::string> theorem_list,
               const std::string& format) {
  const finsemi::FiniteSemigroup S = load_input(input);
  if (theorem_list.empty()) {
    theorem_list = finsemi::theorem_ids();
  }
  const finsemi::VerifyContext ctx = finsemi::make_context(S);
  std::vector<finsemi::TheoremReport> reports;
  reports.reserve(theorem_list.size());
  for (const std::string& id : theorem_list) {
    reports.push_back(finsemi::verify(ctx, id));
  }
  bool any_failed = false;
  if (format == "json") {
    std::cout << finsemi::to_json_string(reports);
    for (const finsemi::TheoremReport& r : reports) {
      any_failed = any_failed || !r.holds();
    }
  } else {
    for (const finsemi::TheoremReport& r : reports) {
      std::cout << to_string(r.outcome) << "\t" << r.theorem_id << "\t"
                << r.detail << "\n";
      any_failed = any_failed || !r.holds();
    }
  }
  return any_failed ? 1 : 0;
}

int run_enumerate(const finsemi::EnumerationConfig& config, bool count_only,
                  bool do_sweep, std::vector<std::string> theorem_list,
                  const std::string& format) {
  if (do_sweep) {
    if (theorem_list.empty()) {
      theorem_list = finsemi::theorem_ids();
    }
    const finsemi::SweepReport report = finsemi::sweep(config, theorem_list);
    if (format == "json") {
      std::cout << finsemi::to_json_string(report);
    } else {
      std::cout << "semigroups: " << report.semigroup_count << "\n";
      for (const auto& [id, entry] : report.theorems) {
        std::cout << id << "\tholds=" << entry.holds << "\tvacuous="
                  << entry.vacuous << "\tfails=" << entry.fails << "\n";
      }
      std::cout << "total failures: " << report.total_failures() << "\n";
    }
    return report.total_failures() > 0 ? 1 : 0;
  }
  if (count_only) {
    std::cout << finsemi::count_semigroups(config) << "\n";
    return 0;
  }
  bool first = true;
  finsemi::for_each_semigroup(config, [&](const finsemi::FiniteSemigroup& S) {
    if (!first) {
      std::cout << "\n";
    }
    first = false;
    std::cout << finsemi::to_table_text(S);
    return true;
  });
  return 0;
}

int run_generate(const std::string& construction,
                 const std::vector<std::pair<std::string, unsigned>>& given,
                 const std::string& format, const std::string& output) {
  // Parameters in each construction's canonical order.
  std::vector<unsigned> params;
  std::string key = construction;
  std::replace(key.begin(), key.end(), '-', '_');
  const auto value_of = [&](const std::string& name) -> std::optional<unsigned> {
    for (const auto& [k, v] : given) {
      if (k == name) {
        return v;
      }
    }
    return std::nullopt;
  };
  const auto require = [&](const std::string& name) {
    const std::optional<unsigned> v = value_of(name);
    if (!v.has_value()) {
      throw finsemi::PreconditionError("construction '" + construction
                                       + "' requires --" + name);
    }
    params.push_back(*v);
  };
  if (key == "symmetric_inverse") {
    require("degree");
  } else if (key == "rectangular_band") {
    require("rows");
    require("cols");
  } else if (key == "group_adjoin") {
    require("group-order");
    require("element");
  } else if (key != "s7") {
    require("order");
  }
  const finsemi::FiniteSemigroup S = finsemi::stock(construction, params);
  write_output(output, format == "json" ? finsemi::to_table_json(S)
                                        : finsemi::to_table_text(S));
  return 0;
}

int run_export(const std::string& input, const std::string& to,
               const std::string& output) {
  const finsemi::FiniteSemigroup S = load_input(input);
  write_output(output, to == "json" ? finsemi::to_table_json(S)
                                    : finsemi::to_table_text(S));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite semigroup analysis: Green's relations, generalized "
               "inverses and class membership"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format = "text";
  std::string output;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "classify a semigroup given by its Cayley table");
  analyze->add_option("input", input, "table file, or - for standard input");
  analyze->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> theorem_list;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "run registered statements against a semigroup");
  verify_cmd->add_option("input", input, "table file, or - for standard input");
  verify_cmd->add_option("--theorem", theorem_list, "theorem id (repeatable)");
  verify_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  finsemi::EnumerationConfig config;
  bool count_only = false;
  bool do_sweep = false;
  CLI::App* enumerate_cmd = app.add_subcommand(
      "enumerate", "enumerate all semigroups of a small order");
  enumerate_cmd->add_option("--order", config.order, "order (1..5)")->required();
  enumerate_cmd->add_flag("--up-to-iso", config.up_to_iso,
                          "emit only orbit-minimal tables");
  std::string filter;
  enumerate_cmd->add_option("--filter", filter,
                            "keep only semigroups with this classification flag");
  enumerate_cmd->add_flag("--count-only", count_only, "print the count only");
  enumerate_cmd->add_flag("--sweep", do_sweep,
                          "run registered statements over the enumeration");
  enumerate_cmd->add_option("--theorem", theorem_list,
                            "theorem id for --sweep (repeatable; default all)");
  enumerate_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string construction;
  std::vector<std::pair<std::string, unsigned>> given;
  unsigned degree = 0, order_param = 0, rows = 0, cols = 0, group_order = 0,
           element_param = 0;
  CLI::App* generate = app.add_subcommand(
      "generate", "write a stock construction in the table format");
  generate->add_option("--construction", construction,
                       "one of: cyclic-group, left-zero, right-zero, null, "
                       "rectangular-band, semilattice-chain, "
                       "symmetric-inverse, s7, group-adjoin")
      ->required();
  generate->add_option("--degree", degree, "degree for symmetric-inverse");
  generate->add_option("--order", order_param, "order for the one-parameter constructions");
  generate->add_option("--rows", rows, "rows for rectangular-band");
  generate->add_option("--cols", cols, "columns for rectangular-band");
  generate->add_option("--group-order", group_order,
                       "cyclic group order for group-adjoin");
  generate->add_option("--element", element_param,
                       "distinguished group element for group-adjoin");
  generate->add_option("--output,-o", output, "output file (default stdout)");
  generate->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string to = "text";
  CLI::App* export_cmd = app.add_subcommand(
      "export", "parse a table and re-serialize it");
  export_cmd->add_option("input", input, "table file, or - for standard input");
  export_cmd->add_option("--to", to, "target format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  export_cmd->add_option("--output,-o", output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) {
      return run_analyze(input, format);
    }
    if (verify_cmd->parsed()) {
      return run_verify(input, theorem_list, format);
    }
    if (enumerate_cmd->parsed()) {
      if (!filter.empty()) {
        config.filter = filter;
      }
      return run_enumerate(config, count_only, do_sweep, theorem_list, format);
    }
    if (generate->parsed()) {
      if (generate->count("--degree")) given.emplace_back("degree", degree);
      if (generate->count("--order")) given.emplace_back("order", order_param);
      if (generate->count("--rows")) given.emplace_back("rows", rows);
      if (generate->count("--cols")) given.emplace_back("cols", cols);
      if (generate->count("--group-order"))
        given.emplace_back("group-order", group_order);
      if (generate->count("--element"))
        given.emplace_back("element", element_param);
      return run_generate(construction, given, format, output);
    }
    if (export_cmd->parsed()) {
      return run_export(input, to, output);
    }
  } catch (const finsemi::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
