// Command-line front end: run the whole identity catalog or single entries,
// evaluate the product kernel at a point, and dump located roots.
// Exit status: 0 all verifications passed, 1 verification failure,
// 2 usage/argument error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "triprod/errors.hpp"
#include "triprod/identity_catalog.hpp"
#include "triprod/product.hpp"
#include "triprod/roots.hpp"

namespace {

std::string fmt_cplx(triprod::ComplexValue v) {
  char buf[96];
  if (v.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.12g", v.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", v.real(), v.imag());
  }
  return buf;
}

int emit_reports(const std::vector<triprod::IdentityReport>& reports,
                 const std::string& format, const std::string& output_path) {
  const std::string text = (format == "machine") ? triprod::reports_to_json(reports)
                                                 : triprod::reports_to_table(reports);
  if (!output_path.empty()) {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open output path " << output_path << "\n";
      return 2;
    }
    out << text;
  } else {
    std::cout << text;
  }
  for (const auto& r : reports)
    if (!r.pass) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"triprod: numerical verification of integrals built on the "
               "triple-gamma product P_b(x)"};
  app.require_subcommand(1);

  std::string id, format = "table", output_path, filter;
  std::optional<double> tol, b_param, alpha_param, a_param, x_param;
  int count = 5;
  double roots_tol = 1e-12;

  auto* verify_cmd = app.add_subcommand("verify", "verify a single identity");
  verify_cmd->add_option("--id", id, "identity id")->required();
  verify_cmd->add_option("--tol", tol, "pass/fail tolerance override");
  verify_cmd->add_option("--b", b_param, "parameter b");
  verify_cmd->add_option("--alpha", alpha_param, "parameter alpha");
  verify_cmd->add_option("--a", a_param, "parameter a (real part)");
  verify_cmd->add_option("--format", format, "table|machine")
      ->check(CLI::IsMember({"table", "machine"}));
  verify_cmd->add_option("--output", output_path, "write the report here");

  auto* all_cmd = app.add_subcommand("verify-all", "run the full catalog");
  all_cmd->add_option("--filter", filter, "id prefix filter");
  all_cmd->add_option("--tol", tol, "pass/fail tolerance override");
  all_cmd->add_option("--format", format, "table|machine")
      ->check(CLI::IsMember({"table", "machine"}));
  all_cmd->add_option("--output", output_path, "write the report here");

  auto* eval_cmd = app.add_subcommand("eval-product", "evaluate P_b(x)");
  eval_cmd->add_option("--b", b_param, "parameter b (default 1)");
  eval_cmd->add_option("--x", x_param, "evaluation point")->required();

  auto* roots_cmd = app.add_subcommand("roots", "locate upper half-plane roots of "
                                                "e^{i sqrt3 z} + 2 cosh z");
  roots_cmd->add_option("--count", count, "number of roots");
  roots_cmd->add_option("--tol", roots_tol, "residual tolerance");

  auto* report_cmd = app.add_subcommand("report", "full catalog, machine format");
  report_cmd->add_option("--output", output_path, "write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  triprod::QuadConfig cfg;
  if (tol) {
    // A tighter pass threshold also tightens the quadrature budget so that an
    // unreachable tolerance surfaces as an unconverged (failed) report.
    cfg.abs_tol = std::min(cfg.abs_tol, *tol / 10.0);
    cfg.rel_tol = std::min(cfg.rel_tol, *tol / 10.0);
  }

  try {
    if (verify_cmd->parsed()) {
      std::optional<triprod::ParamSet> params;
      if (b_param || alpha_param || a_param) {
        triprod::ParamSet p;
        if (b_param) p.set("b", {*b_param, 0.0});
        if (alpha_param) p.set("alpha", {*alpha_param, 0.0});
        if (a_param) p.set("a", {*a_param, 0.0});
        params = std::move(p);
      }
      return emit_reports(triprod::verify(id, cfg, params, tol), format, output_path);
    }
    if (all_cmd->parsed()) {
      return emit_reports(triprod::run_all(cfg, filter), format, output_path);
    }
    if (report_cmd->parsed()) {
      return emit_reports(triprod::run_all(cfg), "machine", output_path);
    }
    if (eval_cmd->parsed()) {
      const triprod::ProductParams params(b_param.value_or(1.0));
      const triprod::ComplexValue v =
          triprod::product_gamma_form(params, {*x_param, 0.0});
      std::cout << fmt_cplx(v) << "\n";
      return 0;
    }
    if (roots_cmd->parsed()) {
      const auto records = triprod::find_roots_upper(count, roots_tol);
      std::printf("%-4s %-22s %-22s %-12s %s\n", "n", "re(root)", "im(root)",
                  "residual", "iterations");
      for (const auto& r : records) {
        std::printf("%-4d %-22.15g %-22.15g %-12.3e %d\n", r.index, r.root.real(),
                    r.root.imag(), r.residual, r.iterations);
      }
      return 0;
    }
  } catch (const triprod::UnknownIdentity& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const triprod::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const triprod::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
