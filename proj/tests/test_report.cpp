#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "qiquad/error.hpp"
#include "qiquad/report.hpp"

using namespace qiquad;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Report, FitOrderExactPowerLaw) {
  const std::vector<int> ns{8, 16, 32, 64};
  std::vector<double> errors;
  for (int n : ns) errors.push_back(-3.0 * std::pow(n, -4.0));
  const auto p = fit_order(ns, errors);
  ASSERT_TRUE(p);
  EXPECT_NEAR(*p, 4.0, 1e-12);
}

TEST(Report, FitOrderSkipsFloor) {
  const std::vector<int> ns{8, 16, 32, 64};
  const std::vector<double> errors{1e-8, 1e-13, 6.25e-10, 1e-14};
  const auto p = fit_order(ns, errors);
  ASSERT_TRUE(p);
  EXPECT_NEAR(*p, 2.0, 1e-12);
  EXPECT_FALSE(fit_order(ns, std::vector<double>{1e-8, 1e-13, 0, 0}));
}

TEST(Report, LocalOrder) {
  EXPECT_NEAR(*local_order(10, 1e-4, 20, 6.25e-6), 4.0, 1e-12);
  EXPECT_FALSE(local_order(10, 1e-4, 20, 1e-13));
}

TEST(Report, TableExamples) {
  EXPECT_EQ(table_example(1).ns, (std::vector<int>{64, 128, 256, 512, 1024}));
  EXPECT_EQ(table_example(2).integrand.label, "f2");
  EXPECT_EQ(table_example(3).ns, (std::vector<int>{256, 512, 1024, 2048, 4096}));
  EXPECT_THROW(table_example(4), Error);
}

TEST(Report, NeedsReferenceValue) {
  const auto f = expression_integrand("x", 0, 1);
  const std::vector<int> ns{8};
  EXPECT_THROW(convergence_report(f, ns), Error);
}

TEST(Report, ConvergenceRowsForExampleOne) {
  const auto ex = table_example(1);
  const auto r = convergence_report(ex.integrand, ex.ns);
  ASSERT_EQ(r.rows.size(), 5u);
  EXPECT_EQ(r.integrand_label, "f1");
  EXPECT_NEAR(r.rows[0].e_q, -8.64e-8, 0.01e-8);
  EXPECT_NEAR(r.rows[0].e_s, 1.23e-7, 0.01e-7);
  EXPECT_NEAR(r.rows[0].e_qs, 1.13e-9, 0.01e-9);
  ASSERT_TRUE(r.fitted_orders.q && r.fitted_orders.s);
  EXPECT_NEAR(*r.fitted_orders.q, 4.0, 0.05);
  EXPECT_NEAR(*r.fitted_orders.s, 4.0, 0.05);
}

TEST(Report, CsvLayout) {
  ConvergenceReport r;
  r.integrand_label = "demo";
  r.rows = {{8, -1e-6, 2e-6, 1e-8}, {16, -6.25e-8, 1.25e-7, 1e-13}};
  r.fitted_orders = {4.0, 4.0, std::nullopt};
  std::ostringstream out;
  write_csv(out, r);
  const auto l = lines(out.str());
  ASSERT_EQ(l.size(), 6u);
  EXPECT_EQ(l[0], "n,e_q,e_s,e_qs,order_q,order_s,order_qs");
  EXPECT_EQ(l[1], "8,-1e-06,2e-06,1e-08,,,");
  EXPECT_EQ(l[2], "16,-6.25e-08,1.25e-07,1e-13,4,4,");
  EXPECT_EQ(l[3], "# integrand demo");
  EXPECT_EQ(l[4], "# fitted_order q=4 s=4 qs=");
  EXPECT_EQ(l[5], "# ~0 (fp floor) n=16 e_qs");
}

TEST(Report, CsvRoundTripsValues) {
  const auto ex = table_example(2);
  const auto r = convergence_report(ex.integrand, ex.ns);
  std::ostringstream out;
  write_csv(out, r);
  const auto l = lines(out.str());
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    std::istringstream row(l[i + 1]);
    std::string field;
    std::getline(row, field, ',');
    EXPECT_EQ(std::stoi(field), r.rows[i].n);
    std::getline(row, field, ',');
    EXPECT_EQ(std::stod(field), r.rows[i].e_q);
    std::getline(row, field, ',');
    EXPECT_EQ(std::stod(field), r.rows[i].e_s);
    std::getline(row, field, ',');
    EXPECT_EQ(std::stod(field), r.rows[i].e_qs);
  }
}

TEST(Report, MarkdownMarksFloor) {
  ConvergenceReport r;
  r.integrand_label = "demo";
  r.rows = {{16, -6.25e-8, 1.25e-7, 1e-13}};
  std::ostringstream out;
  write_markdown(out, r);
  const std::string text = out.str();
  EXPECT_NE(text.find("| 16 | -6.25e-08 | 1.25e-07 | 1.00e-13 ~0 (fp floor) |"), std::string::npos) << text;
  EXPECT_NE(text.find("Fitted orders: Q n/a, S n/a, QS n/a"), std::string::npos) << text;
}
