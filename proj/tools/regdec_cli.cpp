// regdec: reproduce the regular-decomposition constructions and print
// certificates. Exit status 0 when every check passed, 2 when one failed,
// 1 on bad usage, 3 on an internal consistency failure.

#include <iostream>

#include <CLI11.hpp>

#include "regdec/error.hpp"
#include "regdec/scenarios.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kAssertionFailed = 2;
constexpr int kInternal = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular decompositions of graded algebras over finite fields"};
  app.require_subcommand(1);

  bool json = false;
  std::string dump_dir;
  app.add_flag("--json", json, "Print reports as JSON");
  app.add_option("--dump", dump_dir, "Write decomposition matrices as CSV files into this directory");

  std::uint32_t p = 0, t = 0, q = 0, q1 = 0;
  regdec::ScanOptions scan;

  auto* zn = app.add_subcommand("counterexample-zn", "Sign/root-of-unity bicharacter on Z_2t x Z_2t");
  zn->add_option("--p", p, "Characteristic (odd prime)")->required();
  zn->add_option("--t", t, "Odd prime different from p")->required();

  auto* quot = app.add_subcommand("counterexample-quotient", "Quotient of a twisted algebra on Z_p^3");
  quot->add_option("--p", p, "Characteristic (odd prime)")->required();

  auto* pos = app.add_subcommand("positive-example", "Sign cocycle on Z_{q-1} x Z_{q1-1}");
  pos->add_option("--p", p, "Characteristic (odd prime)")->required();
  pos->add_option("--q", q, "Odd prime")->required();
  pos->add_option("--q1", q1, "Odd prime")->required();

  auto* ex = app.add_subcommand("examples", "Worked small examples");

  auto* sc = app.add_subcommand("scan", "Sweep abelian groups and cocycle families");
  sc->add_option("--max-order", scan.max_order, "Largest group order")->required();
  sc->add_option("--p", scan.p, "Characteristic (odd prime)")->required();
  sc->add_option("--k", scan.k, "Field degree")->capture_default_str();
  sc->add_option("--seed", scan.seed, "Random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  std::vector<regdec::ScenarioReport> reports;
  try {
    if (zn->parsed()) reports.push_back(regdec::run_counterexample_zn(p, t));
    if (quot->parsed()) reports.push_back(regdec::run_counterexample_quotient(p));
    if (pos->parsed()) reports.push_back(regdec::run_positive_example(p, q, q1));
    if (ex->parsed()) reports = regdec::run_examples_suite();
    if (sc->parsed()) reports = regdec::run_scan(scan);
    if (!dump_dir.empty())
      for (const auto& path : regdec::dump_matrices(reports, dump_dir)) std::cerr << "wrote " << path << "\n";
  } catch (const regdec::ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.get_subcommands().front()->help();
    return kUsage;
  } catch (const regdec::ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kInternal;
  }

  if (json) {
    if (zn->parsed() || quot->parsed() || pos->parsed())
      std::cout << regdec::to_json(reports.front()) << "\n";
    else
      std::cout << regdec::to_json(reports) << "\n";
  } else {
    for (const auto& r : reports) std::cout << regdec::to_text(r);
  }

  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  return ok ? kOk : kAssertionFailed;
}
