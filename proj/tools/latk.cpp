#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "latk/error.hpp"
#include "latk/input.hpp"
#include "latk/pipeline.hpp"

namespace {

int exit_code(latk::ErrorCode code) {
  using latk::ErrorCode;
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::InvalidInput:
    case ErrorCode::Io:
      return 2;
    case ErrorCode::EmptyLattice:
    case ErrorCode::EmptyModule:
      return 3;
    case ErrorCode::InexactDivision:
    case ErrorCode::ArithmeticOverflow:
    case ErrorCode::SingularSimplex:
      return 4;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert bases, Hilbert series and related invariants of lattice points in rational polyhedra"};
  std::string input_path;
  std::string out_path;
  latk::RunConfig config;
  app.add_option("input", input_path, "input file")->required();
  app.add_option("--out", out_path, "write the report here instead of standard output");
  app.add_flag("--hilbert-basis", config.hilbert_basis, "compute the Hilbert basis");
  app.add_flag("--hilbert-series", config.hilbert_series, "compute the Hilbert series");
  app.add_flag("--hsop", config.hsop, "Hilbert series with HSOP denominator");
  app.add_flag("--class-group", config.class_group, "compute the divisor class group");
  app.add_flag("--module-generators", config.module_generators,
               "module generators of the normalization over the input monoid");
  app.add_flag("--triangulation", config.triangulation, "list the triangulation");
  app.add_flag("-b,--bottom", config.bottom, "force the bottom decomposition");
  app.add_option("--threads", config.threads, "number of worker threads")->check(CLI::Range(1u, 1024u));
  app.add_flag("--verbose", config.verbose, "progress messages on standard error");
  CLI11_PARSE(app, argc, argv);
  config.log = &std::cerr;

  try {
    std::ifstream in(input_path);
    if (!in) throw latk::Error(latk::ErrorCode::Io, "cannot open '" + input_path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    latk::InputSystem system = latk::parse_input(buffer.str());
    latk::Report report = latk::run(system, config);
    std::string text = latk::format_report(report);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      out << text;
      if (!out) throw latk::Error(latk::ErrorCode::Io, "cannot write '" + out_path + "'");
    }
    if (report.empty_outcome) return exit_code(*report.empty_outcome);
    return 0;
  } catch (const latk::Error& e) {
    std::cerr << "latk: " << latk::to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "latk: " << e.what() << '\n';
    return 1;
  }
}
