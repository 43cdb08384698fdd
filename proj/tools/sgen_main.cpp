#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "sgen/report.hpp"

namespace {

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) {
    std::cerr << "cannot open " << out_path << "\n";
    return 2;
  }
  os << text;
  return 0;
}

sgen::FamilyId parse_or_throw(const std::vector<std::string>& tokens) {
  auto id = sgen::parse_selector(tokens);
  if (!id) {
    std::string joined;
    for (const auto& t : tokens) joined += (joined.empty() ? "" : " ") + t;
    throw sgen::usage_error("unknown family selector '" + joined + "'");
  }
  return *id;
}

bool keep_family(const sgen::FamilyId& id, const std::string& only) {
  if (only.empty()) return true;
  if (only == "classical") return !id.is_cartan();
  if (only == "cartan") return id.is_cartan();
  auto head = id.selector().substr(0, id.selector().find(' '));
  return head == only;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"builds simple Lie superalgebras over Q and certifies that a "
               "single explicit element generates each of them"};
  app.require_subcommand(1);

  bool json = false, fixture = false, graded = false, allow_large = false;
  std::string out_path, only;
  std::size_t budget = 8;
  std::vector<std::string> selector;

  auto add_common = [&](CLI::App* c) {
    c->add_flag("--json", json, "machine-readable output");
    c->add_option("--out", out_path, "write output to a file");
  };

  auto* c_list = app.add_subcommand("list", "supported families");
  add_common(c_list);

  auto* c_verify = app.add_subcommand(
      "verify", "build one family and certify single-element generation");
  add_common(c_verify);
  c_verify->add_option("selector", selector, "family selector, e.g. A 1 1");
  c_verify->add_option("--budget", budget, "separating-element retry budget");
  c_verify->add_flag("--graded-closure", graded,
                     "split closure insertions by parity");
  c_verify->add_flag("--allow-large", allow_large,
                     "lift the dimension cap of 400");

  auto* c_tables = app.add_subcommand("tables", "basis and weight tables");
  add_common(c_tables);
  c_tables->add_option("selector", selector, "family selector");
  c_tables->add_flag("--fixture", fixture,
                     "emit the full table + weight fixture document");
  c_tables->add_flag("--allow-large", allow_large,
                     "lift the dimension cap of 400");

  auto* c_suite = app.add_subcommand("suite", "certify the whole matrix");
  add_common(c_suite);
  c_suite->add_option("--only", only,
                      "restrict to classical, cartan or one family letter");
  c_suite->add_option("--budget", budget, "separating-element retry budget");
  c_suite->add_flag("--graded-closure", graded,
                    "split closure insertions by parity");
  c_suite->add_flag("--allow-large", allow_large,
                    "lift the dimension cap of 400");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  sgen::RunOptions opt;
  opt.budget = budget;
  opt.mode = graded ? sgen::ClosureMode::graded : sgen::ClosureMode::ungraded;
  opt.allow_large = allow_large;

  try {
    if (c_list->parsed()) {
      return write_output(json ? sgen::catalog_json() : sgen::catalog_text(),
                          out_path);
    }
    if (c_verify->parsed()) {
      auto id = parse_or_throw(selector);
      auto run = sgen::run_family(id, opt);
      int rc = write_output(
          json ? sgen::family_run_json(run) : sgen::family_run_text(run),
          out_path);
      if (rc != 0) return rc;
      return run.ok() ? 0 : 1;
    }
    if (c_tables->parsed()) {
      auto id = parse_or_throw(selector);
      if (!allow_large && sgen::family_dimension_formula(id) > 400)
        throw sgen::usage_error(id.display() +
                                ": dimension cap exceeded (pass --allow-large)");
      auto fam = sgen::build_family(id);
      std::string text = fixture ? sgen::fixture_json(fam)
                         : json  ? sgen::weight_table_json(fam)
                                 : sgen::weight_table_text(fam);
      return write_output(text, out_path);
    }
    // suite
    std::vector<sgen::FamilyRun> runs;
    bool all_ok = true;
    for (const auto& id : sgen::acceptance_matrix()) {
      if (!keep_family(id, only)) continue;
      runs.push_back(sgen::run_family(id, opt));
      all_ok = all_ok && runs.back().ok();
    }
    int rc = write_output(json ? sgen::run_report_json(std::move(runs))
                               : sgen::run_report_text(std::move(runs)),
                          out_path);
    if (rc != 0) return rc;
    return all_ok ? 0 : 1;
  } catch (const sgen::usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
