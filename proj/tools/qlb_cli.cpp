// qlb: verify Lie quasi-bialgebras given by structure constants.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "qlb/cli_io.hpp"

namespace {

constexpr int exit_input = 2;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw qlb::InputError(path + ": cannot write file");
  out << text;
}

int emit(const qlb::RunResult& res, const std::string& report_path, bool quiet) {
  if (!report_path.empty()) write_file(report_path, res.report.dump(2) + "\n");
  if (!quiet) std::cout << qlb::summarize(res.report);
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Lie quasi-bialgebras, their doubles and the representation on the exterior algebra"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  qlb::RunFlags flags;
  std::string report_path;
  bool quiet = false;
  app.add_option("--max-dim", flags.max_dim, "largest dimension accepted by rep-verify")->capture_default_str();
  app.add_option("--suite-max-dim", flags.suite_max_dim,
                 "largest dimension for which check runs the operator suites")
      ->capture_default_str();
  app.add_option("--report", report_path, "write the JSON report here");
  app.add_flag("--quiet", quiet, "no summary on stdout");

  std::string input, out_path, example;
  bool emit_doc = false;
  auto* check = app.add_subcommand("check", "validate axioms, relations and Laplacian identities");
  check->add_option("file", input, "structure document")->required();
  auto* dbl = app.add_subcommand("double", "build the double and emit its exact structure");
  dbl->add_option("file", input, "structure document")->required();
  dbl->add_option("--out", out_path, "where to write the double's document")->required();
  auto* rep = app.add_subcommand("rep-verify", "verify the representation on the exterior algebra and the Q map");
  rep->add_option("file", input, "structure document")->required();
  auto* ex = app.add_subcommand("example", "check a built-in example, or print it with --emit");
  ex->add_option("name", example, "abelian2, heisenberg3, sl2-bialgebra, sl2-exact-r, sl2-quasitriangular")
      ->required();
  ex->add_flag("--emit", emit_doc, "print the document instead of checking it");
  for (auto* sub : {check, dbl, rep, ex}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_input;
  }

  try {
    if (*ex) {
      auto doc = qlb::example_catalog(example);
      if (emit_doc) {
        std::cout << qlb::serialize(doc);
        return 0;
      }
      return emit(qlb::run_check(doc, flags), report_path, quiet);
    }
    auto doc = qlb::read_document(input);
    if (*check) return emit(qlb::run_check(doc, flags), report_path, quiet);
    if (*rep) return emit(qlb::run_rep_verify(doc, flags), report_path, quiet);
    auto res = qlb::run_double(doc, flags);
    if (res.emitted) write_file(out_path, qlb::serialize(*res.emitted));
    return emit(res, report_path, quiet);
  } catch (const qlb::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }
}
