#include "normqr/cli.hpp"

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "normqr/experiments.hpp"

namespace normqr {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitIo = 3;

struct FactorArgs {
  std::string matrix_path;
  std::string norm;
  double breakdown_tol = 1e-10;
  std::string out_q;
  std::string out_r;
};

int run_factor(const FactorArgs& args) {
  const Matrix a = read_matrix_file(args.matrix_path);
  const QRFactors f = gen_qr(a, parse_norm_name(args.norm), args.breakdown_tol);
  if (!args.out_q.empty()) write_matrix_file(args.out_q, f.q);
  if (!args.out_r.empty()) write_matrix_file(args.out_r, f.r);
  if (args.out_q.empty() && args.out_r.empty()) {
    std::cout << "Q\n";
    write_matrix(std::cout, f.q);
    std::cout << "R\n";
    write_matrix(std::cout, f.r);
  }
  std::cerr << "kept " << f.kept.size() << " of " << a.cols() << " columns\n";
  return kExitOk;
}

struct SweepArgs {
  std::string norm;
  std::vector<int> m_list = {4, 8, 16, 32, 64};
  std::vector<double> kappa_list = {1e1, 1e4, 1e8, 1e12};
  int trials = 10;
  std::uint64_t seed = 0;
  std::string out;
};

int run_sweep(const SweepArgs& args) {
  ExperimentConfig cfg;
  cfg.norm_kind = parse_norm_name(args.norm);
  cfg.m_list = args.m_list;
  cfg.kappa_list = args.kappa_list;
  cfg.trials = args.trials;
  cfg.seed = args.seed;
  cfg.output_path = args.out;
  const SweepResult result = run_bound_sweep(cfg);
  if (result.failures > 0) {
    std::cerr << result.failures << " trial(s) failed numerically (NaN rows in "
              << args.out << ")\n";
    return kExitNumerical;
  }
  return kExitOk;
}

struct BasisArgs {
  int m = 400;
  int n = 5;
  std::string norm;
  std::string out;
};

int run_basis(const BasisArgs& args) {
  const BasisExperimentResult result =
      run_basis_experiment(args.m, args.n, parse_norm_name(args.norm), args.out);
  for (std::size_t j = 0; j < result.cheb_corr.size(); ++j)
    std::cerr << "cheb_corr_" << (j + 2) << " = " << result.cheb_corr[j] << '\n';
  return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"norm-generalized QR factorization experiments"};
  app.require_subcommand(1);

  FactorArgs factor_args;
  CLI::App* factor = app.add_subcommand("factor", "factor a matrix from the text format");
  factor->add_option("matrix-file", factor_args.matrix_path, "input matrix file")->required();
  factor->add_option("--norm", factor_args.norm, "working norm: l1, l2 or linf")->required();
  factor->add_option("--breakdown-tol", factor_args.breakdown_tol,
                     "relative breakdown tolerance");
  factor->add_option("--out-q", factor_args.out_q, "write Q here instead of stdout");
  factor->add_option("--out-r", factor_args.out_r, "write R here instead of stdout");

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep", "kappa(Q) sweep over (m, kappa(A))");
  sweep->add_option("--norm", sweep_args.norm, "working norm: l1, l2 or linf")->required();
  sweep->add_option("--m-list", sweep_args.m_list, "matrix sizes")->delimiter(',');
  sweep->add_option("--kappa-list", sweep_args.kappa_list, "target condition numbers")
      ->delimiter(',');
  sweep->add_option("--trials", sweep_args.trials, "trials per grid point");
  sweep->add_option("--seed", sweep_args.seed, "random seed");
  sweep->add_option("--out", sweep_args.out, "output CSV path")->required();

  BasisArgs basis_args;
  CLI::App* basis = app.add_subcommand("basis", "Vandermonde basis experiment");
  basis->add_option("--m", basis_args.m, "grid points");
  basis->add_option("--n", basis_args.n, "basis size");
  basis->add_option("--norm", basis_args.norm, "working norm: l1, l2 or linf")->required();
  basis->add_option("--out", basis_args.out, "output CSV path")->required();

  try {
    app.parse(argc, argv);
    if (factor->parsed()) return run_factor(factor_args);
    if (sweep->parsed()) return run_sweep(sweep_args);
    if (basis->parsed()) return run_basis(basis_args);
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace normqr
