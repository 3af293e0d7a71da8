// pdk: exact Schwartz-Bruhat calculus on Q_p^m from the command line.
//
// Exit codes: 0 on success, 1 when a checked property is violated (a
// witness is printed), 2 on input errors.

#include <CLI11.hpp>

#include "pdk/io.hpp"
#include "pdk/verify.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace pdk;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

struct Options {
  bool approx = false;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("PDK_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0x9d2c5680u;
}

io::ExprFile load(const std::string& path) {
  return io::load_expr_file(path);
}

SBFunction load_sb(const std::string& path) {
  auto file = load(path);
  if (auto* f = std::get_if<SBFunction>(&file.payload)) return std::move(*f);
  throw io::ParseError("payload", path + ": expected an sb payload");
}

Distribution load_distribution(const std::string& path) {
  auto file = load(path);
  if (auto* u = std::get_if<Distribution>(&file.payload)) return std::move(*u);
  if (auto* k = std::get_if<Kernel>(&file.payload)) return k->distribution();
  throw io::ParseError("payload", path + ": expected a distribution payload");
}

Kernel load_kernel(const std::string& path, const std::vector<std::int64_t>& split_flag) {
  auto file = load(path);
  if (auto* k = std::get_if<Kernel>(&file.payload)) return std::move(*k);
  if (auto* u = std::get_if<Distribution>(&file.payload)) {
    if (split_flag.size() != 2) {
      throw io::ParseError("payload",
                           path + ": distribution payload needs --split n1,n2");
    }
    return Kernel(std::move(*u), split_flag[0], split_flag[1]);
  }
  throw io::ParseError("payload", path + ": expected a kernel payload");
}

PAdicPoint parse_point_arg(const std::string& text, std::int64_t p) {
  std::vector<Rational> coords;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    coords.push_back(parse_rational(part));
  }
  return PAdicPoint(p, std::move(coords));
}

void print_scalar(const CycScalar& value, const Options& opt) {
  std::cout << io::scalar_repr(value, opt.approx) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact p-adic Schwartz-Bruhat calculus, distributions and kernels"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--approx", opt.approx, "append float renderings to exact scalars");

  std::string file_a, file_b, file_c, at_arg, eta_arg, out_path;
  std::int64_t split_pos = 1, depth = 2;
  std::vector<std::int64_t> split_pair;
  std::int64_t trials = 100;
  std::uint64_t seed = default_seed();

  auto* canon = app.add_subcommand("canon", "canonicalize an sb file");
  canon->add_option("file", file_a)->required();
  canon->add_option("-o,--out", out_path, "write the canonical file here");

  auto* eval_cmd = app.add_subcommand("eval", "evaluate an sb function at a point");
  eval_cmd->add_option("file", file_a)->required();
  eval_cmd->add_option("--at", at_arg, "comma-separated rational coordinates")->required();

  auto* integrate_cmd = app.add_subcommand("integrate", "Haar integral of an sb function");
  integrate_cmd->add_option("file", file_a)->required();

  auto* fourier_cmd = app.add_subcommand("fourier", "exact Fourier transform");
  fourier_cmd->add_option("file", file_a)->required();
  fourier_cmd->add_option("-o,--out", out_path);

  auto* convolve_cmd = app.add_subcommand("convolve", "exact convolution of two sb files");
  convolve_cmd->add_option("file", file_a)->required();
  convolve_cmd->add_option("other", file_b)->required();
  convolve_cmd->add_option("-o,--out", out_path);

  auto* tensor_cmd = app.add_subcommand("tensor", "tensor product of two sb files");
  tensor_cmd->add_option("file", file_a)->required();
  tensor_cmd->add_option("other", file_b)->required();
  tensor_cmd->add_option("-o,--out", out_path);

  auto* tdec = app.add_subcommand("tensor-decompose",
                                  "write a product-space function as a sum of tensors");
  tdec->add_option("file", file_a)->required();
  tdec->add_option("--split", split_pos, "dimension of the left factor")->required();

  auto* pair_cmd = app.add_subcommand("pair", "pair a distribution with an sb function");
  pair_cmd->add_option("distribution", file_a)->required();
  pair_cmd->add_option("function", file_b)->required();

  auto* mpair = app.add_subcommand("modulated-pair",
                                   "pair against phi Psi(<., eta>)");
  mpair->add_option("distribution", file_a)->required();
  mpair->add_option("function", file_b)->required();
  mpair->add_option("--eta", eta_arg, "comma-separated rational coordinates")->required();

  auto* kapply = app.add_subcommand("kernel-apply", "apply the kernel of u to psi");
  kapply->add_option("kernel", file_a)->required();
  kapply->add_option("psi", file_b)->required();
  kapply->add_option("--split", split_pair, "n1,n2 when the file is a bare distribution");
  kapply->add_option("-o,--out", out_path);

  auto* kround = app.add_subcommand(
      "kernel-roundtrip", "check the kernel identity and reconstruction on a basis");
  kround->add_option("kernel", file_a)->required();
  kround->add_option("--split", split_pair);
  kround->add_option("--depth", depth, "basis depth (default 2)");

  auto* indep = app.add_subcommand("independence",
                                   "pair u against random re-decompositions of phi");
  indep->add_option("distribution", file_a)->required();
  indep->add_option("function", file_b)->required();
  indep->add_option("--trials", trials);
  indep->add_option("--seed", seed);

  auto* wf = app.add_subcommand("wf", "wave front set queries");
  wf->require_subcommand(1);
  auto* wf_check = wf->add_subcommand("check", "run one microlocal smoothness query");
  wf_check->add_option("query", file_a)->required();
  auto* wf_grid = wf->add_subcommand("grid", "run a query grid against a distribution");
  wf_grid->add_option("distribution", file_a)->required();
  wf_grid->add_option("grid", file_b)->required();
  auto* wf_incl = wf->add_subcommand("kernel-inclusion",
                                     "check the wave-front inclusion for a kernel");
  wf_incl->add_option("kernel", file_a)->required();
  wf_incl->add_option("psi", file_b)->required();
  wf_incl->add_option("grid", file_c)->required();
  wf_incl->add_option("--split", split_pair);

  std::int64_t extra_depth = 0;
  int only_criterion = 0;
  auto* verify_cmd = app.add_subcommand("verify-all", "run the acceptance criteria");
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--depth", extra_depth,
                         "extra sweep depth on top of the pinned acceptance values");
  verify_cmd->add_option("--only", only_criterion, "run a single criterion by id");

  // global flags (--approx) remain reachable after a subcommand name
  const auto all = [](const CLI::App*) { return true; };
  for (auto* sub : app.get_subcommands(all)) {
    sub->fallthrough();
    for (auto* nested : sub->get_subcommands(all)) {
      nested->fallthrough();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  auto write_or_print = [&](const std::string& text) {
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path);
      out << text;
    }
  };

  try {
    if (*canon) {
      write_or_print(io::emit(load_sb(file_a)));
    } else if (*eval_cmd) {
      const SBFunction f = load_sb(file_a);
      print_scalar(f.eval(parse_point_arg(at_arg, f.prime())), opt);
    } else if (*integrate_cmd) {
      print_scalar(load_sb(file_a).integrate(), opt);
    } else if (*fourier_cmd) {
      write_or_print(io::emit(load_sb(file_a).fourier()));
    } else if (*convolve_cmd) {
      write_or_print(io::emit(load_sb(file_a).convolve(load_sb(file_b))));
    } else if (*tensor_cmd) {
      write_or_print(io::emit(load_sb(file_a).tensor(load_sb(file_b))));
    } else if (*tdec) {
      for (const auto& t : load_sb(file_a).tensor_decompose(split_pos)) {
        std::cout << io::scalar_repr(t.coef, opt.approx) << " on " << t.left.to_string()
                  << " x " << t.right.to_string() << "\n";
      }
    } else if (*pair_cmd) {
      print_scalar(load_distribution(file_a).pair(load_sb(file_b)), opt);
    } else if (*mpair) {
      const Distribution u = load_distribution(file_a);
      const SBFunction phi = load_sb(file_b);
      print_scalar(u.modulated_pair(phi, parse_point_arg(eta_arg, u.prime())), opt);
    } else if (*kapply) {
      const Kernel k = load_kernel(file_a, split_pair);
      write_or_print(io::emit(k.apply(load_sb(file_b))));
    } else if (*kround) {
      const Kernel k = load_kernel(file_a, split_pair);
      const auto report = kernel_roundtrip(k, depth);
      if (!report.pass) {
        std::cout << "FAIL " << report.detail << "\n";
        return kExitViolation;
      }
      std::cout << "OK kernel roundtrip at depth " << depth << "\n";
    } else if (*indep) {
      const Distribution u = load_distribution(file_a);
      const SBFunction phi = load_sb(file_b);
      const auto report = independence_check(u, phi, trials, seed);
      std::cout << "seed " << report.seed << " trials " << report.trials << " reference "
                << io::scalar_repr(report.reference, opt.approx) << "\n";
      if (!report.pass) {
        std::cout << "FAIL " << report.detail << "\n";
        return kExitViolation;
      }
      std::cout << "OK all decompositions agree\n";
    } else if (*wf_check) {
      auto file = load(file_a);
      auto* q = std::get_if<MicrolocalQuery>(&file.payload);
      if (!q) throw io::ParseError("payload", file_a + ": expected a query payload");
      const auto verdict = is_smooth_at(*q);
      std::cout << io::verdict_json(verdict, opt.approx) << "\n";
      if (std::holds_alternative<NotSmoothWitness>(verdict)) return kExitViolation;
    } else if (*wf_grid) {
      const Distribution u = load_distribution(file_a);
      auto file = load(file_b);
      auto* grid = std::get_if<io::GridSpec>(&file.payload);
      if (!grid) throw io::ParseError("payload", file_b + ": expected a grid payload");
      for (const auto& [x0, xi0] : grid->points) {
        MicrolocalQuery q{u, x0, xi0, grid->lambda, grid->nbhd_radius,
                          grid->probe_depth, grid->ord_floor};
        std::cout << io::verdict_json(is_smooth_at(q), opt.approx) << "\n";
      }
    } else if (*wf_incl) {
      const Kernel k = load_kernel(file_a, split_pair);
      const SBFunction psi = load_sb(file_b);
      auto file = load(file_c);
      auto* grid = std::get_if<io::GridSpec>(&file.payload);
      if (!grid) throw io::ParseError("payload", file_c + ": expected a grid payload");
      const auto report = check_wf_inclusion(k, psi, grid->points, grid->lambda,
                                             grid->nbhd_radius, grid->probe_depth,
                                             grid->ord_floor);
      for (const auto& pt : report.points) {
        std::cout << "{\"x0\":" << io::point_json(pt.x0) << ",\"xi0\":"
                  << io::point_json(pt.xi0) << ",\"lhs\":" << (pt.lhs_member ? "true" : "false")
                  << ",\"rhs\":" << (pt.rhs_member ? "true" : "false")
                  << ",\"violation\":" << (pt.violation ? "true" : "false") << "}\n";
      }
      std::cout << "violations " << report.violations << "\n";
      if (report.violations != 0) return kExitViolation;
    } else if (*verify_cmd) {
      std::vector<verify::CriterionResult> results;
      if (only_criterion != 0) {
        results.push_back(verify::run_criterion(only_criterion, seed, extra_depth));
      } else {
        results = verify::run_all(seed, extra_depth);
      }
      bool all_pass = true;
      for (const auto& result : results) {
        std::cout << verify::format_result(result) << "\n";
        all_pass = all_pass && result.pass;
      }
      std::cout << "seed " << seed << "\n";
      if (!all_pass) return kExitViolation;
    }
  } catch (const io::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
