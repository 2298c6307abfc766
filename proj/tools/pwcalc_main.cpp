// pwcalc_main.cpp — command line front end: compute, compare, convexity, entropy.
//
// Exit codes: 0 success, 2 mathematical precondition failure (NotPSD, NotInvertible,
// infinite value on a finite route, ...), 3 parse / usage / IO failure. Reports are
// deterministic JSON on stdout (or --out); timing goes to stderr only.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pwcalc/convexity.hpp"
#include "pwcalc/errors.hpp"
#include "pwcalc/homfun.hpp"
#include "pwcalc/matrix_io.hpp"
#include "pwcalc/pw.hpp"
#include "pwcalc/quantities.hpp"
#include "pwcalc/report.hpp"
#include "pwcalc/routes.hpp"

#ifndef PWCALC_VERSION
#define PWCALC_VERSION "0.0.0"
#endif

namespace {

using namespace pwcalc;

struct CommonOpts {
  double herm_tol = default_herm_tol;
  double rank_tol = 0.0;  // 0 = unset: fall back to file metadata, then the default
  double inv_tol = default_inv_tol;
  std::string out;
};

struct FnOpts {
  std::string fn;
  std::optional<double> alpha;
  std::optional<std::string> scalar;
  std::vector<double> rescale_ab;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--herm-tol", c.herm_tol, "relative Hermiticity tolerance for operands");
  cmd->add_option("--rank-tol", c.rank_tol, "relative rank threshold (overrides file metadata)");
  cmd->add_option("--inv-tol", c.inv_tol, "relative invertibility threshold");
  cmd->add_option("--out", c.out, "write the JSON report to this file instead of stdout");
}

void add_fn(CLI::App* cmd, FnOpts& f, bool required) {
  auto* opt = cmd->add_option("--fn", f.fn, "catalogue function name");
  if (required) opt->required();
  cmd->add_option("--alpha", f.alpha, "parameter for weighted_geometric and renyi");
  cmd->add_option("--scalar", f.scalar, "named scalar generator (perspective_of, --section)");
  cmd->add_option("--rescale", f.rescale_ab, "factors a b: wrap as g(r,s) = f(r/a, s/b)")
      ->expected(2);
}

HomogeneousFunction resolve_function(const FnOpts& o) {
  CatalogueParams p;
  p.alpha = o.alpha;
  p.g = o.scalar;
  HomogeneousFunction fn = catalogue(o.fn, p);
  if (!o.rescale_ab.empty()) return rescale(fn, o.rescale_ab[0], o.rescale_ab[1]);
  return fn;
}

double resolve_rank_tol(const CommonOpts& c, const MatrixFile* fa = nullptr,
                        const MatrixFile* fb = nullptr) {
  if (c.rank_tol > 0.0) return c.rank_tol;
  if (fa && fa->rank_tol) return *fa->rank_tol;
  if (fb && fb->rank_tol) return *fb->rank_tol;
  return default_rank_tol;
}

void emit_header(JsonEmitter& e, const std::string& command,
                 const std::vector<std::string>& args) {
  e.key("tool");
  e.string_value("pwcalc");
  e.key("version");
  e.string_value(PWCALC_VERSION);
  e.key("command");
  e.string_value(command);
  e.key("argv");
  e.begin_array();
  for (const auto& a : args) e.string_value(a);
  e.end_array();
}

void emit_operand(JsonEmitter& e, const char* key, const MatrixFile& f) {
  e.key(key);
  e.begin_object();
  e.key("name");
  e.string_value(f.name);
  e.key("dim");
  e.int_value(f.entries.rows());
  e.end_object();
}

void deliver(const CommonOpts& c, const std::string& text) {
  if (c.out.empty())
    std::fputs(text.c_str(), stdout);
  else
    write_text_file(c.out, text);
}

// ---------------------------------- compute ----------------------------------

struct ComputeOpts {
  CommonOpts common;
  FnOpts fn;
  std::string a, b;
  std::string route = "pw";
  bool extended = false;
  std::vector<double> eps;
};

int run_compute(const std::vector<std::string>& args, const ComputeOpts& o) {
  if (!o.eps.empty() && o.route != "pw")
    throw pwcalc::ParseError("--eps applies to the pw route only");
  if (o.extended && o.route != "pw")
    throw pwcalc::ParseError("--extended applies to the pw route only");
  if (o.extended && !o.eps.empty())
    throw pwcalc::ParseError("--extended and --eps are mutually exclusive");

  const MatrixFile fa = read_matrix_file(o.a);
  const MatrixFile fb = read_matrix_file(o.b);
  const double rank_tol = resolve_rank_tol(o.common, &fa, &fb);
  const HermitianMatrix a = to_hermitian(fa, o.common.herm_tol);
  const HermitianMatrix b = to_hermitian(fb, o.common.herm_tol);
  const HomogeneousFunction fn = resolve_function(o.fn);

  JsonEmitter e;
  e.begin_object();
  emit_header(e, "compute", args);
  e.key("function");
  e.string_value(fn.name());
  e.key("route");
  e.string_value(o.eps.empty() ? o.route : "eps");
  emit_operand(e, "a", fa);
  emit_operand(e, "b", fb);
  e.key("rank_tol");
  e.number_value(rank_tol);

  if (o.extended) {
    const ExtendedOperator out = pw_apply_extended(a, b, fn, rank_tol);
    const double inf_tol = default_trace_inf_rel * spectral_norm(a.mat() + b.mat());
    const bool live = out.has_infinite_part(inf_tol);
    emit_named_matrix(e, "result", out.finite_part().mat());
    e.key("has_infinite_part");
    e.bool_value(live);
    if (live) emit_named_matrix(e, "infinite_part", out.infinite_part().mat());
    e.key("trace");
    e.extended_value(out.trace(inf_tol));
  } else {
    const HermitianMatrix out = [&] {
      if (!o.eps.empty())
        return epsilon_regularized(a, b, fn, o.eps[0], o.eps[1], rank_tol, o.common.inv_tol);
      if (o.route == "left") return perspective_left(a, b, fn, o.common.inv_tol);
      if (o.route == "right") return perspective_right(a, b, fn, o.common.inv_tol);
      return pw_apply(a, b, fn, rank_tol, o.common.inv_tol);
    }();
    emit_named_matrix(e, "result", out.mat());
    e.key("trace");
    e.number_value(out.mat().trace().real());
  }
  e.end_object();
  deliver(o.common, e.take());
  return 0;
}

// ---------------------------------- compare ----------------------------------

struct CompareOpts {
  CommonOpts common;
  FnOpts fn;
  std::string a, b;
  bool eps_study = false;
};

int run_compare(const std::vector<std::string>& args, const CompareOpts& o) {
  const MatrixFile fa = read_matrix_file(o.a);
  const MatrixFile fb = read_matrix_file(o.b);
  const double rank_tol = resolve_rank_tol(o.common, &fa, &fb);
  const HermitianMatrix a = to_hermitian(fa, o.common.herm_tol);
  const HermitianMatrix b = to_hermitian(fb, o.common.herm_tol);
  const HomogeneousFunction fn = resolve_function(o.fn);

  const HermitianMatrix f_pw = pw_apply(a, b, fn, rank_tol, o.common.inv_tol);
  // A perspective route joins the table only when its pivot passes the
  // invertibility gate; on singular operands the spectral route stands alone.
  std::optional<HermitianMatrix> f_left, f_right;
  if (numerically_invertible(a, o.common.inv_tol))
    f_left = perspective_left(a, b, fn, o.common.inv_tol);
  if (numerically_invertible(b, o.common.inv_tol))
    f_right = perspective_right(a, b, fn, o.common.inv_tol);

  JsonEmitter e;
  e.begin_object();
  emit_header(e, "compare", args);
  e.key("function");
  e.string_value(fn.name());
  emit_operand(e, "a", fa);
  emit_operand(e, "b", fb);
  e.key("rank_tol");
  e.number_value(rank_tol);
  emit_named_matrix(e, "result", f_pw.mat());
  e.key("agreement_scale");
  e.number_value(1.0 + f_pw.norm2());
  e.key("deviations");
  e.begin_object();
  if (f_left) {
    e.key("left");
    e.number_value(spectral_norm(f_pw.mat() - f_left->mat()));
  }
  if (f_right) {
    e.key("right");
    e.number_value(spectral_norm(f_pw.mat() - f_right->mat()));
  }
  if (f_left && f_right) {
    e.key("left_right");
    e.number_value(spectral_norm(f_left->mat() - f_right->mat()));
  }
  e.end_object();
  if (o.eps_study) {
    e.key("epsilon_study");
    e.begin_array();
    for (const auto& [eps, err] : limit_study(a, b, fn, default_eps_grid(), rank_tol,
                                              o.common.inv_tol)) {
      e.begin_object();
      e.key("eps");
      e.number_value(eps);
      e.key("error");
      e.number_value(err);
      e.end_object();
    }
    e.end_array();
  }
  e.end_object();
  deliver(o.common, e.take());
  return 0;
}

// ---------------------------------- convexity ----------------------------------

struct ConvexityOpts {
  CommonOpts common;
  FnOpts fn;
  std::string a, b, v;
  std::string direction = "convex";
  bool falsify = false;
  bool section = false;
  int trials = 100;
  int dim = 3;
  std::vector<int> dims = {2, 3, 4};
  std::vector<double> interval = {0.05, 0.95};
  std::uint64_t seed = 20260819ull;
  double tol = 1e-8;
  std::string witness_dir;
};

void emit_check(JsonEmitter& e, const CheckResult& res, bool with_v) {
  e.key("passed");
  e.bool_value(res.passed);
  e.key("margin");
  e.number_value(res.margin);
  if (res.witness) {
    const Witness& w = *res.witness;
    e.key("witness");
    e.begin_object();
    e.key("seed");
    e.int_value(static_cast<long long>(w.seed));
    e.key("trial");
    e.int_value(static_cast<long long>(w.trial));
    e.key("margin");
    e.number_value(w.margin);
    emit_named_matrix(e, "a", w.a);
    emit_named_matrix(e, "b", w.b);
    if (with_v && w.v) emit_named_matrix(e, "v", *w.v);
    e.end_object();
  }
}

int run_convexity(const std::vector<std::string>& args, const ConvexityOpts& o) {
  const Direction dir = o.direction == "concave" ? Direction::concave : Direction::convex;
  const double rank_tol = resolve_rank_tol(o.common);

  JsonEmitter e;
  e.begin_object();
  emit_header(e, "convexity", args);

  if (o.section) {
    if (!o.fn.scalar) throw pwcalc::ParseError("--section requires --scalar");
    if (o.interval.size() != 2 || !(o.interval[0] < o.interval[1]))
      throw pwcalc::ParseError("--interval needs lo < hi");
    const auto psi = named_scalar_function(*o.fn.scalar);
    const CheckResult res = section_operator_convexity_scan(psi, o.interval[0], o.interval[1],
                                                            o.dim, o.trials, o.seed, o.tol);
    e.key("mode");
    e.string_value("section");
    e.key("scalar");
    e.string_value(*o.fn.scalar);
    e.key("interval");
    e.begin_array();
    e.number_value(o.interval[0]);
    e.number_value(o.interval[1]);
    e.end_array();
    e.key("dim");
    e.int_value(o.dim);
    e.key("trials");
    e.int_value(o.trials);
    e.key("seed");
    e.int_value(static_cast<long long>(o.seed));
    e.key("direction");
    e.string_value("convex");
    emit_check(e, res, false);
  } else if (o.falsify) {
    if (o.fn.fn.empty()) throw pwcalc::ParseError("--falsify requires --fn");
    const HomogeneousFunction fn = resolve_function(o.fn);
    const CheckResult res =
        falsify_transformer(fn, o.dims, o.trials, o.seed, o.tol, rank_tol, o.common.inv_tol);
    e.key("mode");
    e.string_value("falsify");
    e.key("function");
    e.string_value(fn.name());
    e.key("direction");
    e.string_value("convex");
    e.key("trials");
    e.int_value(o.trials);
    e.key("dims");
    e.begin_array();
    for (int d : o.dims) e.int_value(d);
    e.end_array();
    e.key("seed");
    e.int_value(static_cast<long long>(o.seed));
    emit_check(e, res, true);
    if (res.witness && !o.witness_dir.empty()) {
      namespace fs = std::filesystem;
      fs::create_directories(o.witness_dir);
      const Witness& w = *res.witness;
      write_matrix_file((fs::path(o.witness_dir) / "witness_a.json").string(), "witness_a",
                        w.a);
      write_matrix_file((fs::path(o.witness_dir) / "witness_b.json").string(), "witness_b",
                        w.b);
      if (w.v)
        write_matrix_file((fs::path(o.witness_dir) / "witness_v.json").string(), "witness_v",
                          *w.v);
      e.key("witness_files");
      e.begin_array();
      e.string_value("witness_a.json");
      e.string_value("witness_b.json");
      if (w.v) e.string_value("witness_v.json");
      e.end_array();
    }
  } else {
    if (o.fn.fn.empty() || o.a.empty() || o.b.empty() || o.v.empty())
      throw pwcalc::ParseError("transformer mode needs --fn, --a, --b and --v");
    const HomogeneousFunction fn = resolve_function(o.fn);
    const MatrixFile fa = read_matrix_file(o.a);
    const MatrixFile fb = read_matrix_file(o.b);
    const MatrixFile fv = read_matrix_file(o.v);
    const HermitianMatrix a = to_hermitian(fa, o.common.herm_tol);
    const HermitianMatrix b = to_hermitian(fb, o.common.herm_tol);
    const CheckResult res = transformer_check(fn, a, b, fv.entries, dir, o.tol,
                                              resolve_rank_tol(o.common, &fa, &fb),
                                              o.common.inv_tol);
    e.key("mode");
    e.string_value("transformer");
    e.key("function");
    e.string_value(fn.name());
    e.key("direction");
    e.string_value(o.direction);
    emit_operand(e, "a", fa);
    emit_operand(e, "b", fb);
    e.key("v");
    e.begin_object();
    e.key("name");
    e.string_value(fv.name);
    e.key("rows");
    e.int_value(fv.entries.rows());
    e.key("cols");
    e.int_value(fv.entries.cols());
    e.end_object();
    emit_check(e, res, false);
  }
  e.end_object();
  deliver(o.common, e.take());
  return 0;
}

// ---------------------------------- entropy ----------------------------------

struct EntropyOpts {
  CommonOpts common;
  std::string a, b;
  std::vector<double> alphas = {0.5, 2.0};
};

int run_entropy(const std::vector<std::string>& args, const EntropyOpts& o) {
  const MatrixFile fa = read_matrix_file(o.a);
  const MatrixFile fb = read_matrix_file(o.b);
  const double rank_tol = resolve_rank_tol(o.common, &fa, &fb);
  const HermitianMatrix a = to_hermitian(fa, o.common.herm_tol);
  const HermitianMatrix b = to_hermitian(fb, o.common.herm_tol);

  JsonEmitter e;
  e.begin_object();
  emit_header(e, "entropy", args);
  emit_operand(e, "a", fa);
  emit_operand(e, "b", fb);
  e.key("rank_tol");
  e.number_value(rank_tol);
  e.key("bs_entropy");
  e.extended_value(bs_relative_entropy(a, b, rank_tol));
  e.key("renyi");
  e.begin_array();
  for (double alpha : o.alphas) {
    e.begin_object();
    e.key("alpha");
    e.number_value(alpha);
    e.key("trace");
    e.extended_value(renyi_trace(a, b, alpha, rank_tol));
    e.end_object();
  }
  e.end_array();
  e.end_object();
  deliver(o.common, e.take());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);

  CLI::App app{"Two-variable operator calculus for positive semidefinite matrices"};
  app.require_subcommand(1);

  ComputeOpts co;
  auto* compute = app.add_subcommand("compute", "evaluate f(A, B) and report the operator");
  compute->add_option("--a", co.a, "matrix document for A")->required();
  compute->add_option("--b", co.b, "matrix document for B")->required();
  compute->add_option("--route", co.route, "evaluation route")
      ->check(CLI::IsMember({"pw", "left", "right"}));
  compute->add_flag("--extended", co.extended, "extended calculus (structural +inf part)");
  compute->add_option("--eps", co.eps, "evaluate f(A + e1 I, B + e2 I)")->expected(2);
  add_fn(compute, co.fn, true);
  add_common(compute, co.common);

  CompareOpts cm;
  auto* compare = app.add_subcommand("compare", "agreement of the evaluation routes");
  compare->add_option("--a", cm.a, "matrix document for A")->required();
  compare->add_option("--b", cm.b, "matrix document for B")->required();
  compare->add_flag("--eps-study", cm.eps_study, "include the epsilon limit error table");
  add_fn(compare, cm.fn, true);
  add_common(compare, cm.common);

  ConvexityOpts cv;
  auto* conv = app.add_subcommand("convexity", "transformer inequality and convexity checks");
  conv->add_option("--a", cv.a, "matrix document for A (transformer mode)");
  conv->add_option("--b", cv.b, "matrix document for B (transformer mode)");
  conv->add_option("--v", cv.v, "matrix document for the map V (transformer mode)");
  conv->add_option("--direction", cv.direction, "inequality direction")
      ->check(CLI::IsMember({"convex", "concave"}));
  conv->add_flag("--falsify", cv.falsify, "random search for a violation");
  conv->add_flag("--section", cv.section, "midpoint operator-convexity scan of --scalar");
  conv->add_option("--trials", cv.trials, "trial count for --falsify / --section");
  conv->add_option("--dims", cv.dims, "operand dimensions for --falsify");
  conv->add_option("--dim", cv.dim, "operand dimension for --section");
  conv->add_option("--interval", cv.interval, "spectrum interval for --section")->expected(2);
  conv->add_option("--seed", cv.seed, "master seed for the randomized modes");
  conv->add_option("--tol", cv.tol, "margin tolerance");
  conv->add_option("--witness-dir", cv.witness_dir, "persist a found witness here");
  add_fn(conv, cv.fn, false);
  add_common(conv, cv.common);

  EntropyOpts en;
  auto* entropy = app.add_subcommand("entropy", "relative entropy and Renyi traces");
  entropy->add_option("--a", en.a, "matrix document for A")->required();
  entropy->add_option("--b", en.b, "matrix document for B")->required();
  entropy->add_option("--alpha", en.alphas, "Renyi orders to evaluate");
  add_common(entropy, en.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  const auto t0 = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    if (compute->parsed())
      rc = run_compute(args, co);
    else if (compare->parsed())
      rc = run_compare(args, cm);
    else if (conv->parsed())
      rc = run_convexity(args, cv);
    else if (entropy->parsed())
      rc = run_entropy(args, en);
  } catch (const pwcalc::ParseError& e) {
    std::fprintf(stderr, "pwcalc: error: %s\n", e.what());
    rc = 3;
  } catch (const pwcalc::PreconditionError& e) {
    std::fprintf(stderr, "pwcalc: error: %s\n", e.what());
    rc = 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "pwcalc: error: %s\n", e.what());
    rc = 2;
  }
  const auto t1 = std::chrono::steady_clock::now();
  std::fprintf(stderr, "pwcalc: %.3f ms\n",
               std::chrono::duration<double, std::milli>(t1 - t0).count());
  return rc;
}
