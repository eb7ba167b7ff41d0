// uchain: command-line front end. Prints one JSON document per run.
//
// Exit codes: 0 ok, 1 invalid input (∂² ≠ 0, bad grading, ...), 2 violated
// precondition, 3 parse error, 4 failed internal cross-check.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "uchain/error.hpp"
#include "uchain/f2_linalg.hpp"
#include "uchain/homology.hpp"
#include "uchain/json_io.hpp"
#include "uchain/lefschetz.hpp"
#include "uchain/normal_form.hpp"
#include "uchain/text_format.hpp"

using namespace uchain;

namespace {

int exit_code(ErrorKind kind) {
  switch (category(kind)) {
    case ErrorCategory::Validation: return 1;
    case ErrorCategory::Precondition: return 2;
    case ErrorCategory::Parse: return 3;
    case ErrorCategory::Internal: return 4;
  }
  return 4;
}

struct Sink {
  std::string path;

  void write(const Json& j) const {
    std::string text = j.dump() + "\n";
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::ParameterOutOfRange, "cannot write '" + path + "'");
    out << text;
  }
};

// Rank over F2 of a matrix given by its rows.
std::size_t pairing_rank(const std::vector<std::vector<bool>>& m) {
  Reducer r(m.empty() ? 0 : m[0].size(), 0);
  std::size_t rank = 0;
  for (const auto& row : m) {
    BitVector v(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j]) v.set(j);
    }
    if (r.insert(v)) ++rank;
  }
  return rank;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact chain complexes over F2[U]"};
  app.require_subcommand(1);

  std::string output;
  app.add_option("--output", output, "Write the JSON result to this file");

  std::string complex_path, map_path, target_path;
  std::string flavor = "minus";
  std::uint64_t seed = 0;
  long long trials = 100;
  int max_rank = 8, max_exponent = 6, jobs = 1, steps = 20;

  auto* classify_cmd = app.add_subcommand("classify", "Normal form over F2[[U]]");
  classify_cmd->add_option("complex", complex_path)->required();

  auto* homology_cmd = app.add_subcommand("homology", "Homology in one flavor");
  homology_cmd->add_option("complex", complex_path)->required();
  homology_cmd->add_option("--flavor", flavor, "minus|plus|infinity|red-minus|red-plus");

  auto* delta_cmd = app.add_subcommand("delta-quantity", "The U^-1 coefficient of tr (F x Phi^) d^-1 cotr(1)");
  delta_cmd->add_option("complex", complex_path)->required();
  delta_cmd->add_option("map", map_path)->required();

  auto* lefschetz_cmd = app.add_subcommand("lefschetz", "Trace of F on H+ by brute force");
  lefschetz_cmd->add_option("complex", complex_path)->required();
  lefschetz_cmd->add_option("map", map_path)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Seeded campaign comparing delta-quantity with the trace on H+");
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--trials", trials);
  verify_cmd->add_option("--max-rank", max_rank);
  verify_cmd->add_option("--max-exponent", max_exponent);
  verify_cmd->add_option("--jobs", jobs);
  bool mutate = false;
  // Fault injection for testing failure reports; not part of the public interface.
  verify_cmd->add_flag("--mutate", mutate)->group("");

  auto* cone_cmd = app.add_subcommand("cone", "Mapping cone of a degree-0 map");
  cone_cmd->add_option("source", complex_path)->required();
  cone_cmd->add_option("map", map_path)->required();
  cone_cmd->add_option("target", target_path, "Target complex (defaults to the source)");

  auto* torus_cmd = app.add_subcommand("mapping-torus", "F2 Betti numbers of cone(id + phi)");
  torus_cmd->add_option("complex", complex_path)->required();
  torus_cmd->add_option("map", map_path)->required();

  auto* pairing_cmd = app.add_subcommand("pairing-check", "Pairing between H+(C) and the torsion of H-(C^)");
  pairing_cmd->add_option("complex", complex_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    Error err(ErrorKind::ParseError, std::string("command line: ") + e.what());
    std::cout << error_json(err).dump() << "\n";
    return 3;
  }

  Sink sink{output};
  try {
    if (classify_cmd->parsed()) {
      sink.write(to_json(classify(read_complex_file(complex_path))));
    } else if (homology_cmd->parsed()) {
      Flavor f = parse_flavor(flavor);
      GradedComplex c = read_complex_file(complex_path);
      sink.write(to_json(c, homology(c, f)));
    } else if (delta_cmd->parsed()) {
      GradedComplex c = read_complex_file(complex_path);
      ChainMap f = read_chain_map_file(map_path, c, c);
      sink.write(Json{{"value", static_cast<int>(delta_quantity(c, f))}});
    } else if (lefschetz_cmd->parsed()) {
      GradedComplex c = read_complex_file(complex_path);
      ChainMap f = read_chain_map_file(map_path, c, c);
      LefschetzTrace t = lefschetz_trace(c, f);
      sink.write(Json{{"value", static_cast<int>(t.value)},
                      {"trace_even", static_cast<int>(t.even)},
                      {"trace_odd", static_cast<int>(t.odd)},
                      {"h_plus_dimension", t.dimension}});
    } else if (verify_cmd->parsed()) {
      VerifyOptions options;
      options.campaign_seed = seed;
      options.trials = trials;
      options.max_rank = max_rank;
      options.max_exponent = max_exponent;
      options.jobs = jobs;
      options.max_steps = steps;
      options.delta.replace_phi_dual_with_identity = mutate;
      VerificationReport report = verify_proposition(options);
      sink.write(to_json(report));
      return report.passed() ? 0 : 4;
    } else if (cone_cmd->parsed()) {
      GradedComplex src = read_complex_file(complex_path);
      GradedComplex tgt = target_path.empty() ? src : read_complex_file(target_path);
      ChainMap f = read_chain_map_file(map_path, src, tgt);
      GradedComplex c = cone(f);
      sink.write(Json{{"complex", format_complex(c)}, {"normal_form", to_json(classify(c))}});
    } else if (torus_cmd->parsed()) {
      GradedComplex c = read_complex_file(complex_path);
      ChainMap f = read_chain_map_file(map_path, c, c);
      sink.write(Json{{"betti", to_json(mapping_torus_betti(c, f))}});
    } else if (pairing_cmd->parsed()) {
      GradedComplex c = read_complex_file(complex_path);
      HomologyPresentation plus = h_plus(c);
      if (!plus.f2_dimension) throw Error(ErrorKind::InfinityNotZero, "H+ is infinite, so the pairing is not finite");
      HomologyPresentation red = h_red(dual(c), Side::Minus);
      std::vector<std::vector<bool>> m(plus.basis.size(), std::vector<bool>(red.basis.size()));
      for (std::size_t i = 0; i < plus.basis.size(); ++i) {
        for (std::size_t j = 0; j < red.basis.size(); ++j) m[i][j] = f2_pairing(plus.basis[i], red.basis[j]);
      }
      std::size_t rank = pairing_rank(m);
      bool perfect = plus.basis.size() == red.basis.size() && rank == plus.basis.size();
      sink.write(Json{{"plus_dimension", plus.basis.size()},
                      {"red_minus_dual_dimension", red.basis.size()},
                      {"rank", rank},
                      {"perfect", perfect}});
    }
  } catch (const Error& e) {
    std::cout << error_json(e).dump() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cout << error_json(Error(ErrorKind::InternalCheck, e.what())).dump() << "\n";
    return 4;
  }
  return 0;
}
