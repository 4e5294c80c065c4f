#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "hilbertkit/json_io.hpp"
#include "hilbertkit/norms.hpp"
#include "hilbertkit/psumming.hpp"
#include "hilbertkit/states.hpp"
#include "hilbertkit/teleport.hpp"
#include "hilbertkit/tensor.hpp"
#include "hilbertkit/verify.hpp"

namespace {

using hilbertkit::json_io::json;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitNoConvergence = 2;
constexpr int kExitVerifyFailed = 3;

struct Options {
  std::string input_path;  // empty = stdin
  std::uint64_t seed = 42;
  std::uint64_t budget = 50;
  double tol = 1.0;
  bool quiet = false;
};

json read_input(const Options& opts) {
  std::string text;
  if (opts.input_path.empty()) {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream file(opts.input_path);
    if (!file) {
      throw hilbertkit::InvalidArgument("cannot open input file: " +
                                        opts.input_path);
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  return json::parse(text);
}

void emit(const json& out) { std::cout << out.dump(2) << "\n"; }

int cmd_kron(const Options& opts) {
  const json in = read_input(opts);
  if (!in.is_object() || !in.contains("a") || !in.contains("b")) {
    throw hilbertkit::InvalidArgument("kron input needs matrices a and b");
  }
  const auto a = hilbertkit::json_io::matrix_from_json(in["a"]);
  const auto b = hilbertkit::json_io::matrix_from_json(in["b"]);
  emit(hilbertkit::json_io::matrix_to_json(hilbertkit::kron(a, b)));
  return kExitOk;
}

int cmd_vec(const Options& opts) {
  const auto a = hilbertkit::json_io::matrix_from_json(read_input(opts));
  emit(hilbertkit::json_io::ket_to_json(hilbertkit::vec(a)));
  return kExitOk;
}

int cmd_schmidt(const Options& opts) {
  const auto element = hilbertkit::json_io::tensor_from_json(read_input(opts));
  const hilbertkit::SchmidtForm form = hilbertkit::schmidt(element);
  json left = json::array();
  json right = json::array();
  for (const auto& k : form.left) {
    left.push_back(hilbertkit::json_io::ket_to_json(k));
  }
  for (const auto& k : form.right) {
    right.push_back(hilbertkit::json_io::ket_to_json(k));
  }
  emit(json{{"coefficients", form.coeffs},
            {"left", std::move(left)},
            {"right", std::move(right)}});
  return kExitOk;
}

int cmd_norms(const Options& opts) {
  const auto a = hilbertkit::json_io::matrix_from_json(read_input(opts));
  const hilbertkit::NormReport report = hilbertkit::norm_report(a);
  emit(json{{"operator", report.operator_norm},
            {"hs", report.hs_norm},
            {"nuclear", report.nuclear_norm},
            {"singulars", report.singulars}});
  return kExitOk;
}

int cmd_duality(const Options& opts) {
  const auto a = hilbertkit::json_io::matrix_from_json(read_input(opts));
  const hilbertkit::TraceDualityResult result =
      hilbertkit::trace_duality_max(a);
  emit(json{{"value", result.value},
            {"maximizer",
             hilbertkit::json_io::matrix_to_json(result.maximizer)}});
  return kExitOk;
}

int cmd_teleport(const Options& opts) {
  const json in = read_input(opts);
  if (!in.is_object() || !in.contains("xi")) {
    throw hilbertkit::InvalidArgument("teleport input needs field xi");
  }
  const hilbertkit::Ket xi = hilbertkit::make_ket(
      hilbertkit::json_io::complex_vector_from_json(in["xi"]));
  const auto outcomes = hilbertkit::teleport(xi);

  const hilbertkit::Gate t = hilbertkit::teleport_matrix();
  const hilbertkit::Ket w = hilbertkit::make_ket(
      matmul(t.matrix,
             hilbertkit::ComplexMatrix(
                 8, 1, kron(xi, hilbertkit::bell_phi_plus()).coords))
          .column(0));

  json branches = json::array();
  for (const auto& out : outcomes) {
    branches.push_back(json{
        {"branch", out.branch},
        {"probability", out.probability},
        {"post_state",
         hilbertkit::json_io::complex_vector_to_json(out.post_state.coords)},
        {"corrected",
         hilbertkit::json_io::complex_vector_to_json(out.corrected.coords)},
        {"residual", hilbertkit::norm(out.corrected - xi)}});
  }
  emit(json{{"w", hilbertkit::json_io::complex_vector_to_json(w.coords)},
            {"branches", std::move(branches)}});
  return kExitOk;
}

int cmd_gleason(const Options& opts) {
  const json in = read_input(opts);
  if (!in.is_object() || !in.contains("dim") || !in.contains("samples")) {
    throw hilbertkit::InvalidArgument("gleason input needs dim and samples");
  }
  if (!in["dim"].is_number_integer() || in["dim"].get<long long>() < 1) {
    throw hilbertkit::InvalidArgument("dim must be a positive integer");
  }
  const std::size_t dim = in["dim"].get<std::size_t>();
  const json& samples = in["samples"];
  if (!samples.is_array() || samples.empty()) {
    throw hilbertkit::InvalidArgument("samples must be a nonempty array");
  }

  std::vector<std::pair<hilbertkit::ComplexMatrix, double>> table;
  table.reserve(samples.size());
  for (const json& s : samples) {
    if (!s.is_object() || !s.contains("projection") || !s.contains("value") ||
        !s["value"].is_number()) {
      throw hilbertkit::InvalidArgument(
          "each sample needs a projection matrix and a numeric value");
    }
    table.emplace_back(hilbertkit::json_io::matrix_from_json(s["projection"]),
                       s["value"].get<double>());
  }

  const hilbertkit::ProjectionMeasure measure =
      [&table](const hilbertkit::ComplexMatrix& p) {
        for (const auto& [projection, value] : table) {
          if (projection.rows() == p.rows() && projection.cols() == p.cols() &&
              hilbertkit::max_abs_diff(projection, p) <= 1e-8) {
            return value;
          }
        }
        throw hilbertkit::InconsistentMeasure(
            "sample table lacks a required probe projection");
      };

  const hilbertkit::DensityOperator density =
      hilbertkit::gleason_reconstruct(measure, dim);

  double max_residual = 0.0;
  for (const auto& [projection, value] : table) {
    const double predicted =
        std::real(hilbertkit::trace(matmul(projection, density.matrix())));
    max_residual = std::max(max_residual, std::abs(predicted - value));
  }
  emit(json{{"density", hilbertkit::json_io::matrix_to_json(density.matrix())},
            {"spectrum", density.spectrum()},
            {"max_residual", max_residual},
            {"samples", table.size()}});
  return kExitOk;
}

int cmd_psum(const Options& opts) {
  const json in = read_input(opts);
  if (!in.is_object() || !in.contains("matrix") || !in.contains("p")) {
    throw hilbertkit::InvalidArgument("psum input needs matrix and p");
  }
  const auto t = hilbertkit::json_io::matrix_from_json(in["matrix"]);
  if (!in["p"].is_number()) {
    throw hilbertkit::InvalidArgument("p must be 1 or 2");
  }
  const double p = in["p"].get<double>();
  std::uint64_t budget = opts.budget;
  std::uint64_t seed = opts.seed;
  if (in.contains("budget")) {
    if (!in["budget"].is_number_integer() || in["budget"].get<long long>() < 1) {
      throw hilbertkit::InvalidArgument("budget must be a positive integer");
    }
    budget = in["budget"].get<std::uint64_t>();
  }
  if (in.contains("seed")) {
    if (!in["seed"].is_number_integer()) {
      throw hilbertkit::InvalidArgument("seed must be an integer");
    }
    seed = in["seed"].get<std::uint64_t>();
  }

  const hilbertkit::SummingEstimate estimate = [&] {
    if (p == 2.0) return hilbertkit::pi2_certify(t);
    if (p == 1.0) return hilbertkit::pi1_lower_bound(t, budget, seed);
    throw hilbertkit::UnsupportedP("p must be 1 or 2");
  }();
  json family = json::array();
  for (const auto& k : estimate.witness_family) {
    family.push_back(hilbertkit::json_io::ket_to_json(k));
  }
  emit(json{{"p", estimate.p},
            {"lower_bound", estimate.lower_bound},
            {"witness_family", std::move(family)},
            {"iterations", estimate.iterations},
            {"exact", estimate.exact}});
  return kExitOk;
}

int cmd_verify(const Options& opts) {
  const hilbertkit::VerifyReport report =
      hilbertkit::verify_suite(opts.seed, opts.tol, opts.budget);
  json suite = json::array();
  for (const auto& entry : report.suite) {
    suite.push_back(json{{"id", entry.id},
                         {"passed", entry.passed},
                         {"residual", entry.residual},
                         {"tolerance", entry.tolerance},
                         {"seed", entry.seed}});
    if (!opts.quiet) {
      std::cerr << (entry.passed ? "PASS" : "FAIL") << "  " << entry.id
                << "  residual=" << entry.residual
                << "  tolerance=" << entry.tolerance << "\n";
    }
  }
  emit(json{{"suite", std::move(suite)},
            {"summary",
             json{{"total", report.total},
                  {"passed", report.passed},
                  {"failed", report.failed}}},
            {"version", report.version}});
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("HILBERTKIT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw hilbertkit::InvalidArgument(
          "HILBERTKIT_SEED must be a nonnegative integer");
    }
  }
  return 42;
}

int run(int argc, char** argv) {
  Options opts;
  opts.seed = default_seed();

  CLI::App app{"finite-dimensional tensor, norm and channel calculators"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--input", opts.input_path,
                 "read the JSON payload from FILE instead of stdin");
  app.add_option("--seed", opts.seed,
                 "random seed (default 42; HILBERTKIT_SEED overrides)");
  app.add_option("--budget", opts.budget, "search budget for estimators");
  app.add_option("--tol", opts.tol, "scale factor on default tolerances");
  app.add_flag("--quiet", opts.quiet, "suppress progress text on stderr");

  int (*handler)(const Options&) = nullptr;
  app.add_subcommand("kron", "Kronecker product of two matrices")
      ->callback([&] { handler = cmd_kron; });
  app.add_subcommand("vec", "column-stacking of a matrix")
      ->callback([&] { handler = cmd_vec; });
  app.add_subcommand("schmidt", "Schmidt form of a tensor element")
      ->callback([&] { handler = cmd_schmidt; });
  app.add_subcommand("norms", "operator/HS/nuclear norm report")
      ->callback([&] { handler = cmd_norms; });
  app.add_subcommand("duality", "trace-duality value and maximizer")
      ->callback([&] { handler = cmd_duality; });
  app.add_subcommand("teleport", "run the teleportation pipeline on xi")
      ->callback([&] { handler = cmd_teleport; });
  app.add_subcommand("gleason", "reconstruct a density from probe samples")
      ->callback([&] { handler = cmd_gleason; });
  app.add_subcommand("psum", "p-summing norm estimate")
      ->callback([&] { handler = cmd_psum; });
  app.add_subcommand("verify", "run the full identity suite")
      ->callback([&] { handler = cmd_verify; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }
  return handler(opts);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hilbertkit::NoConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const hilbertkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const json::exception& e) {
    std::cerr << "error: invalid JSON: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}
