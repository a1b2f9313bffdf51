#include "minctrl/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "minctrl/controllability.hpp"
#include "minctrl/error.hpp"
#include "minctrl/experiments.hpp"
#include "minctrl/greedy.hpp"
#include "minctrl/io.hpp"
#include "minctrl/oracles.hpp"
#include "minctrl/rank.hpp"
#include "minctrl/ranker.hpp"
#include "minctrl/reductions.hpp"

namespace minctrl::cli {
namespace {

namespace fs = std::filesystem;
using io::json;

struct SolveArgs {
  std::string matrix;
  std::string mode = "vector";
  std::string algo = "det";
  std::string backend;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
};

struct ReduceArgs {
  std::string instance;
  bool symmetric = false;
  std::string out_dir;
};

struct OracleArgs {
  std::string target;
  std::string kind = "hitting-set";
  bool override_guard = false;
  std::string out;
};

struct ExperimentArgs {
  std::string config;
  std::string out;
  std::string csv;
};

struct VerifyArgs {
  std::string matrix;
  std::string b;
  std::string backend;
  std::string out;
};

// Flag value, else the environment default, else exact.
RankBackend resolve_backend(const std::string& flag) {
  if (!flag.empty()) return parse_rank_backend(flag);
  if (const char* env = std::getenv(kBackendEnv); env != nullptr && *env != '\0') {
    return parse_rank_backend(env);
  }
  return RankBackend::kExact;
}

void emit(const json& payload, const std::string& path, std::ostream& out) {
  const std::string text = payload.dump(2) + "\n";
  if (path.empty()) {
    out << text;
  } else {
    io::write_text_file(path, text);
  }
}

RationalMatrix exact_of(const io::MatrixFile& f) {
  return f.exact ? *f.exact : RationalMatrix::from_dense(f.dense);
}

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const RankBackend backend = resolve_backend(a.backend);
  const io::MatrixFile file = io::read_matrix_file(a.matrix);
  if (!file.dense.is_square()) throw InvalidInput("system matrix must be square");
  const auto ranker = backend == RankBackend::kExact && file.exact
                          ? make_ranker(*file.exact, backend)
                          : make_ranker(file.dense, backend);
  SolveResult result;
  if (a.mode == "diagonal") {
    result = greedy_diagonal(*ranker);
  } else if (a.algo == "rand") {
    result = randomized_greedy_vector(*ranker, a.seed);
  } else {
    result = deterministic_greedy_vector(*ranker);
  }
  json payload = io::to_json(result);
  payload["mode"] = a.mode;
  if (a.mode == "vector" && a.algo == "rand") payload["seed"] = a.seed;
  emit(payload, a.out, out);
  return result.controllable ? kExitSuccess : kExitInfeasible;
}

int cmd_reduce(const ReduceArgs& a, std::ostream& out) {
  const HittingSetInstance inst = io::read_instance_file(a.instance);
  const ReductionOutput red = build_reduction(inst);
  json eigenvalues = json::array();
  for (const auto& e : red.eigenvalues) eigenvalues.push_back(to_string(e));
  json meta{{"schema_version", io::kSchemaVersion},
            {"instance", io::to_json(inst)},
            {"index_map", io::to_json(red.index_map)},
            {"eigenvalues", std::move(eigenvalues)}};

  std::optional<SymmetricExtensionOutput> ext;
  if (a.symmetric) ext = build_symmetric_extension(inst);

  if (a.out_dir.empty()) {
    json bundle = meta;
    bundle["V"] = io::to_json(red.v);
    bundle["A"] = io::to_json(red.a);
    if (ext) {
      json sym = io::to_json(*ext);
      sym["V_hat"] = io::to_json(ext->v_hat);
      sym["A_hat"] = io::to_json(ext->a_hat);
      bundle["symmetric"] = std::move(sym);
    }
    out << bundle.dump(2) << "\n";
    return kExitSuccess;
  }

  const fs::path dir(a.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InvalidInput("cannot create '" + dir.string() + "': " + ec.message());
  emit(io::to_json(red.v), (dir / "V.json").string(), out);
  emit(io::to_json(red.a), (dir / "A.json").string(), out);
  emit(meta, (dir / "reduction.json").string(), out);
  if (ext) {
    json sym = io::to_json(*ext);
    sym["schema_version"] = io::kSchemaVersion;
    emit(io::to_json(ext->v_hat), (dir / "V_hat.json").string(), out);
    emit(io::to_json(ext->a_hat), (dir / "A_hat.json").string(), out);
    emit(sym, (dir / "symmetric.json").string(), out);
  }
  return kExitSuccess;
}

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
  const OracleOptions opts{a.override_guard};
  OracleResult r;
  if (a.kind == "hitting-set") {
    r = brute_force_hitting_set(io::read_instance_file(a.target), opts);
  } else {
    const RationalMatrix rows = exact_of(io::read_matrix_file(a.target));
    r = a.kind == "min-vector" ? brute_force_min_vector_support(rows, opts)
                               : brute_force_min_diagonal_support(rows, opts);
  }
  json payload = io::to_json(r);
  payload["kind"] = a.kind;
  emit(payload, a.out, out);
  return kExitSuccess;
}

int cmd_experiment(const ExperimentArgs& a, std::ostream& out) {
  const json cfg_json = [&] {
    try {
      return json::parse(io::read_text_file(a.config));
    } catch (const json::parse_error& e) {
      throw InvalidInput(std::string("malformed config: ") + e.what());
    }
  }();
  const ExperimentReport report = run_experiment(io::parse_experiment_config(cfg_json));
  emit(io::to_json(report), a.out, out);
  if (!a.csv.empty()) io::write_text_file(a.csv, io::trial_records_csv(report));
  return kExitSuccess;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const RankBackend backend = resolve_backend(a.backend);
  const io::MatrixFile fa = io::read_matrix_file(a.matrix);
  io::MatrixFile fb = io::read_matrix_file(a.b);
  if (!fa.dense.is_square()) throw InvalidInput("system matrix must be square");
  const std::size_t n = fa.dense.rows();
  // A single row of length n is read as a column vector.
  if (fb.dense.rows() == 1 && fb.dense.cols() == n && n != 1) {
    fb.dense = DenseMatrix(fb.dense.eigen().transpose());
    if (fb.exact) fb.exact = fb.exact->transpose();
  }
  if (fb.dense.rows() != n) {
    throw InvalidInput("input has " + std::to_string(fb.dense.rows()) + " rows, system has " +
                       std::to_string(n));
  }
  std::size_t rank = 0;
  if (backend == RankBackend::kExact) {
    rank = rank_exact(controllability_matrix(exact_of(fa), exact_of(fb)));
  } else {
    rank = make_ranker(fa.dense, backend)->matrix_rank(fb.dense);
  }
  const bool controllable = rank == n;
  emit(json{{"schema_version", io::kSchemaVersion},
            {"backend", std::string(to_string(backend))},
            {"n", n},
            {"rank", rank},
            {"controllable", controllable}},
       a.out, out);
  return controllable ? kExitSuccess : kExitInfeasible;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparse actuator selection for linear systems", "minctrl"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Run a greedy solver on a system matrix");
  s->add_option("matrix", solve.matrix, "Matrix file (JSON or CSV)")->required();
  s->add_option("--mode", solve.mode)->check(CLI::IsMember({"vector", "diagonal"}));
  s->add_option("--algo", solve.algo)->check(CLI::IsMember({"rand", "det"}));
  s->add_option("--backend", solve.backend, "svd, pbh or exact");
  s->add_option("--seed", solve.seed, "Seed for --algo rand");
  s->add_option("--out", solve.out, "Write JSON here instead of stdout");

  ReduceArgs reduce;
  auto* r = app.add_subcommand("reduce", "Compile a hitting-set instance into a system");
  r->add_option("instance", reduce.instance, "Instance JSON")->required();
  r->add_flag("--symmetric", reduce.symmetric, "Also build the symmetric extension");
  r->add_option("--out-dir", reduce.out_dir, "Directory for the output files");

  OracleArgs oracle;
  auto* o = app.add_subcommand("oracle", "Exact optimum by exhaustive search");
  o->add_option("target", oracle.target, "Instance JSON or left-eigenvector matrix")->required();
  o->add_option("--kind", oracle.kind)
      ->check(CLI::IsMember({"hitting-set", "min-vector", "min-diagonal"}));
  o->add_flag("--override-guard", oracle.override_guard, "Search past the size guard");
  o->add_option("--out", oracle.out);

  ExperimentArgs experiment;
  auto* e = app.add_subcommand("experiment", "Random-graph experiment");
  e->add_option("config", experiment.config, "Config JSON")->required();
  e->add_option("--out", experiment.out);
  e->add_option("--csv", experiment.csv, "Per-trial CSV");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check controllability of (A, B)");
  v->add_option("matrix", verify.matrix)->required();
  v->add_option("b", verify.b)->required();
  v->add_option("--backend", verify.backend, "svd, pbh or exact");
  v->add_option("--out", verify.out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kExitSuccess : kExitInvalid;
  }

  try {
    if (s->parsed()) return cmd_solve(solve, out);
    if (r->parsed()) return cmd_reduce(reduce, out);
    if (o->parsed()) return cmd_oracle(oracle, out);
    if (e->parsed()) return cmd_experiment(experiment, out);
    if (v->parsed()) return cmd_verify(verify, out);
    return kExitInvalid;
  } catch (const InvalidInput& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitInvalid;
  } catch (const NumericError& ex) {
    err << "numeric error: " << ex.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace minctrl::cli
