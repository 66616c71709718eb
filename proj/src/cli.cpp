#include "qiquad/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

#include "qiquad/error.hpp"
#include "qiquad/expression.hpp"
#include "qiquad/format.hpp"
#include "qiquad/integrand.hpp"
#include "qiquad/peano.hpp"
#include "qiquad/quadrature.hpp"
#include "qiquad/report.hpp"
#include "qiquad/spline_qi.hpp"

namespace qiquad::cli {
namespace {

constexpr const char* expression_help =
    "Integrand: f1, f2, f3 (built-in examples) or expr:<text>. Expressions use the "
    "variable x, numbers, + - * / ^ (right-associative, binds tighter than unary minus), "
    "parentheses and sin cos exp log sqrt abs, e.g. expr:16*x^(3/2)*sin(x^2)";

struct PartitionArgs {
  std::string spec = "uniform";
  std::optional<double> a;
  std::optional<double> b;
  std::optional<int> n;
};

void add_partition_options(CLI::App* cmd, PartitionArgs& args) {
  cmd->add_option("--partition", args.spec, "uniform, chebyshev or file:<path> (one knot per line)")
      ->capture_default_str();
  cmd->add_option("--a", args.a, "Left end of the interval");
  cmd->add_option("--b", args.b, "Right end of the interval");
  cmd->add_option("--n", args.n, "Number of subintervals")->check(CLI::PositiveNumber);
}

Partition make_partition(const PartitionArgs& args, double default_a, double default_b) {
  if (args.spec.rfind("file:", 0) == 0) {
    auto p = read_partition_file(args.spec.substr(5));
    if (args.n && *args.n != p.n()) {
      throw Error(Errc::invalid_argument, "--n " + std::to_string(*args.n) + " does not match the " +
                                              std::to_string(p.n()) + " subintervals in " + args.spec);
    }
    return p;
  }
  const double a = args.a.value_or(default_a);
  const double b = args.b.value_or(default_b);
  const int n = args.n.value_or(64);
  if (args.spec == "uniform") return Partition::uniform(a, b, n);
  if (args.spec == "chebyshev") return Partition::chebyshev(a, b, n);
  throw Error(Errc::invalid_argument,
              "unknown partition '" + args.spec + "' (expected uniform, chebyshev or file:<path>)");
}

Integrand make_integrand(const std::string& spec, double a, double b) {
  if (spec.rfind("expr:", 0) == 0) return expression_integrand(spec.substr(5), a, b);
  return builtin(spec);
}

MomentFormula parse_moments(const std::string& s) {
  return s == "published" ? MomentFormula::published : MomentFormula::exact;
}

struct IntegrateArgs {
  std::string fn;
  std::string rule = "qi";
  std::string moments = "exact";
  double oracle_tol = 1e-13;
  PartitionArgs partition;
};

void cmd_integrate(const IntegrateArgs& args, std::ostream& out) {
  double default_a = 0.0, default_b = 1.0;
  if (args.fn.rfind("expr:", 0) != 0) {
    const auto f = builtin(args.fn);
    default_a = f.a;
    default_b = f.b;
  }
  const auto p = make_partition(args.partition, default_a, default_b);
  auto f = make_integrand(args.fn, p.a(), p.b());
  if (f.a != p.a() || f.b != p.b()) {
    // Builtin integrated over a different interval: its stored integral no longer applies.
    f.exact.reset();
    f.a = p.a();
    f.b = p.b();
  }

  DoubleDouble value;
  if (args.rule == "qi") {
    value = apply_rule_extended(build_qi_rule(p, parse_moments(args.moments)), f.eval);
  } else if (args.rule == "simpson") {
    value = simpson_extended(p, f.eval);
  } else {
    value = extrapolated_qs_extended(p, f.eval);
  }

  out << "integrand " << f.label << '\n';
  out << "rule " << args.rule << '\n';
  out << "interval " << shortest(p.a()) << ' ' << shortest(p.b()) << '\n';
  out << "n " << p.n() << '\n';
  out << "value " << significant(value.value(), 17) << '\n';
  if (f.exact) {
    out << "exact " << significant(f.exact->value(), 17) << '\n';
    out << "error " << significant(signed_error(*f.exact, value), 17) << '\n';
  } else {
    double reference = 0.0;
    try {
      reference = oracle_integral(f.eval, p.a(), p.b(), args.oracle_tol);
    } catch (const Error& e) {
      throw Error(e.code(), std::string("reference integral failed: ") + e.what());
    }
    out << "reference " << significant(reference, 17) << " (adaptive Gauss-Kronrod)\n";
    out << "error " << significant(signed_error({reference, 0.0}, value), 17) << '\n';
  }
}

struct TableArgs {
  int example = 1;
  std::string format = "csv";
};

void cmd_table(const TableArgs& args, std::ostream& out) {
  const auto ex = table_example(args.example);
  const auto report = convergence_report(ex.integrand, ex.ns);
  if (args.format == "markdown") {
    write_markdown(out, report);
  } else {
    write_csv(out, report);
  }
}

struct KernelArgs {
  int n = 16;
  int samples = 1000;
};

void cmd_kernel(const KernelArgs& args, std::ostream& out) {
  if (args.n < 5) {
    throw Error(Errc::invalid_size, "kernel needs n >= 5: the uniform closed-form weights "
                                    "h[1/9, 7/8, 73/72, 1, ...] are only valid from n = 5 on");
  }
  const PeanoKernel k(args.n);
  out << "t,k\n";
  for (const auto& s : sample_kernel(k, args.samples)) out << shortest(s.t) << ',' << shortest(s.k) << '\n';

  const double h = k.h();
  const auto got = kernel_piece_integrals(k);
  const auto ref = reference_piece_integrals(h);
  out << "# n=" << args.n << " h=" << shortest(h) << '\n';
  out << "# root 4h/9=" << shortest(4.0 * h / 9.0) << '\n';
  out << "# root 1-4h/9=" << shortest(1.0 - 4.0 * h / 9.0) << '\n';
  const std::tuple<const char*, double, double> rows[] = {
      {"neg_lobe", got.neg_lobe, ref.neg_lobe},
      {"first_partial", got.first_partial, ref.first_partial},
      {"first_full", got.first_full, ref.first_full},
      {"interior", got.interior, ref.interior},
      {"total", got.total, ref.total},
  };
  for (const auto& [name, value, reference] : rows) {
    out << "# " << name << '=' << shortest(value) << " reference=" << shortest(reference) << '\n';
  }
}

struct LebesgueArgs {
  int samples_per_interval = 40;
  PartitionArgs partition;
};

void cmd_lebesgue(const LebesgueArgs& args, std::ostream& out) {
  const QuasiInterpolant q(make_partition(args.partition, 0.0, 1.0));
  const double norm = q.norm_estimate(args.samples_per_interval);
  out << "n " << q.n() << '\n';
  out << "norm_estimate " << significant(norm, 17) << '\n';
  out << "bound3_ok " << (norm <= 3.0 ? "true" : "false") << '\n';
}

struct WeightsArgs {
  std::string rule = "qi";
  std::string moments = "exact";
  PartitionArgs partition;
};

void cmd_weights(const WeightsArgs& args, std::ostream& out) {
  const auto p = make_partition(args.partition, 0.0, 1.0);
  const auto rule = args.rule == "simpson" ? build_simpson_rule(p) : build_qi_rule(p, parse_moments(args.moments));
  out << "theta,w\n";
  for (std::size_t i = 0; i < rule.size(); ++i) {
    out << shortest(rule.nodes[i]) << ',' << shortest(rule.weights[i]) << '\n';
  }
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::non_convergence:
    case Errc::evaluation_failure: return numeric_failure;
    default: return usage_error;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quadratic spline quasi-interpolant quadrature", "qiquad"};
  app.require_subcommand(1);

  IntegrateArgs integrate;
  auto* integrate_cmd = app.add_subcommand("integrate", "Integrate a function with one rule");
  integrate_cmd->add_option("--fn", integrate.fn, expression_help)->required();
  integrate_cmd->add_option("--rule", integrate.rule, "qi, simpson or qs")
      ->check(CLI::IsMember({"qi", "simpson", "qs"}))
      ->capture_default_str();
  integrate_cmd->add_option("--moments", integrate.moments, "B-spline integrals: exact or published")
      ->check(CLI::IsMember({"exact", "published"}))
      ->capture_default_str();
  integrate_cmd->add_option("--oracle-tol", integrate.oracle_tol, "Tolerance of the reference integrator")
      ->capture_default_str();
  add_partition_options(integrate_cmd, integrate.partition);

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Error table E_Q, E_S, E_QS of a worked example");
  table_cmd->add_option("--example", table.example, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
  table_cmd->add_option("--format", table.format, "csv or markdown")
      ->check(CLI::IsMember({"csv", "markdown"}))
      ->capture_default_str();

  KernelArgs kernel;
  auto* kernel_cmd = app.add_subcommand("kernel", "Sample the Peano kernel on [0,1] as CSV t,k");
  kernel_cmd->add_option("--n", kernel.n, "Subintervals (>= 5)")->required();
  kernel_cmd->add_option("--samples", kernel.samples, "Number of sample intervals")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  LebesgueArgs lebesgue;
  auto* lebesgue_cmd = app.add_subcommand("lebesgue", "Sampled norm of the quasi-interpolant");
  lebesgue_cmd->add_option("--samples-per-interval", lebesgue.samples_per_interval, "Grid density (>= 2)")
      ->capture_default_str();
  add_partition_options(lebesgue_cmd, lebesgue.partition);

  WeightsArgs weights;
  auto* weights_cmd = app.add_subcommand("weights", "Dump rule nodes and weights as CSV theta,w");
  weights_cmd->add_option("--rule", weights.rule, "qi or simpson")
      ->check(CLI::IsMember({"qi", "simpson"}))
      ->capture_default_str();
  weights_cmd->add_option("--moments", weights.moments, "B-spline integrals: exact or published")
      ->check(CLI::IsMember({"exact", "published"}))
      ->capture_default_str();
  add_partition_options(weights_cmd, weights.partition);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? success : usage_error;
  }

  try {
    if (*integrate_cmd) cmd_integrate(integrate, out);
    if (*table_cmd) cmd_table(table, out);
    if (*kernel_cmd) cmd_kernel(kernel, out);
    if (*lebesgue_cmd) cmd_lebesgue(lebesgue, out);
    if (*weights_cmd) cmd_weights(weights, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return numeric_failure;
  }
  return success;
}

}  // namespace qiquad::cli
