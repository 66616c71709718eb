#include "qiquad/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "qiquad/error.hpp"
#include "qiquad/format.hpp"
#include "qiquad/quadrature.hpp"

namespace qiquad {

std::optional<double> fit_order(std::span<const int> ns, std::span<const double> errors) {
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < ns.size() && i < errors.size(); ++i) {
    if (std::abs(errors[i]) > fp_floor) {
      xs.push_back(std::log(static_cast<double>(ns[i])));
      ys.push_back(std::log(std::abs(errors[i])));
    }
  }
  if (xs.size() < 2) return std::nullopt;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(ys.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  // log|E| ~ p log(1/n) = -p log n
  return -sxy / sxx;
}

std::optional<double> local_order(int n_prev, double e_prev, int n, double e) {
  if (std::abs(e_prev) <= fp_floor || std::abs(e) <= fp_floor) return std::nullopt;
  return std::log(std::abs(e_prev) / std::abs(e)) / std::log(static_cast<double>(n) / n_prev);
}

ConvergenceReport convergence_report(const Integrand& f, std::span<const int> ns) {
  if (!f.exact) {
    throw Error(Errc::invalid_argument, "convergence report for '" + f.label + "' needs a reference integral");
  }
  ConvergenceReport report;
  report.integrand_label = f.label;
  std::vector<double> eq, es, eqs;
  for (int n : ns) {
    const auto values = evaluate_rules(Partition::uniform(f.a, f.b, n), f.eval);
    ConvergenceRow row{n, signed_error(*f.exact, values.qi), signed_error(*f.exact, values.simpson),
                       signed_error(*f.exact, values.qs)};
    report.rows.push_back(row);
    eq.push_back(row.e_q);
    es.push_back(row.e_s);
    eqs.push_back(row.e_qs);
  }
  report.fitted_orders = {fit_order(ns, eq), fit_order(ns, es), fit_order(ns, eqs)};
  return report;
}

TableExample table_example(int id) {
  switch (id) {
    case 1: return {builtin("f1"), {64, 128, 256, 512, 1024}};
    case 2: return {builtin("f2"), {64, 128, 256, 512, 1024}};
    case 3: return {builtin("f3"), {256, 512, 1024, 2048, 4096}};
    default:
      throw Error(Errc::invalid_argument, "unknown example " + std::to_string(id) + " (expected 1, 2 or 3)");
  }
}

namespace {

std::string opt(const std::optional<double>& v) { return v ? shortest(*v) : std::string(); }

std::string cell(double e) {
  std::string s = significant(e, 3);
  if (std::abs(e) < fp_floor) s += " ~0 (fp floor)";
  return s;
}

}  // namespace

void write_csv(std::ostream& out, const ConvergenceReport& report) {
  out << "n,e_q,e_s,e_qs,order_q,order_s,order_qs\n";
  const ConvergenceRow* prev = nullptr;
  std::vector<std::string> floor_notes;
  for (const auto& row : report.rows) {
    out << row.n << ',' << shortest(row.e_q) << ',' << shortest(row.e_s) << ',' << shortest(row.e_qs);
    if (prev) {
      out << ',' << opt(local_order(prev->n, prev->e_q, row.n, row.e_q)) << ','
          << opt(local_order(prev->n, prev->e_s, row.n, row.e_s)) << ','
          << opt(local_order(prev->n, prev->e_qs, row.n, row.e_qs));
    } else {
      out << ",,,";
    }
    out << '\n';
    const std::pair<const char*, double> cols[] = {{"e_q", row.e_q}, {"e_s", row.e_s}, {"e_qs", row.e_qs}};
    for (const auto& [name, e] : cols) {
      if (std::abs(e) < fp_floor) floor_notes.push_back("n=" + std::to_string(row.n) + " " + name);
    }
    prev = &row;
  }
  out << "# integrand " << report.integrand_label << '\n';
  out << "# fitted_order q=" << opt(report.fitted_orders.q) << " s=" << opt(report.fitted_orders.s)
      << " qs=" << opt(report.fitted_orders.qs) << '\n';
  for (const auto& note : floor_notes) out << "# ~0 (fp floor) " << note << '\n';
}

void write_markdown(std::ostream& out, const ConvergenceReport& report) {
  out << "Integrand: `" << report.integrand_label << "`\n\n";
  out << "| n | E_Q | E_S | E_QS |\n|---:|---:|---:|---:|\n";
  for (const auto& row : report.rows) {
    out << "| " << row.n << " | " << cell(row.e_q) << " | " << cell(row.e_s) << " | " << cell(row.e_qs)
        << " |\n";
  }
  const auto fitted = [](const std::optional<double>& v) {
    if (!v) return std::string("n/a");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", *v);
    return std::string(buf);
  };
  out << "\nFitted orders: Q " << fitted(report.fitted_orders.q) << ", S " << fitted(report.fitted_orders.s)
      << ", QS " << fitted(report.fitted_orders.qs) << '\n';
}

}  // namespace qiquad
