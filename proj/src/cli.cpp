#include "fnspect/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "fnspect/errors.hpp"
#include "fnspect/report.hpp"
#include "fnspect/spec_parser.hpp"

namespace fnspect::cli {

namespace {

struct CommandArgs {
  std::string spec_path;
  std::vector<std::string> at;
  int grid = 0;
  std::string tol = "1/1000000";
  int max_depth = 30;
};

FunctionModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

std::vector<Rational> parse_points(const std::vector<std::string>& texts) {
  std::vector<Rational> points;
  for (const auto& t : texts) {
    auto q = Rational::parse(t);
    if (!q) throw std::invalid_argument("invalid rational '" + t + "'");
    points.push_back(*q);
  }
  return points;
}

Rational parse_tol(const std::string& text) {
  auto q = Rational::parse(text);
  if (!q || q->sign() <= 0)
    throw std::invalid_argument("tolerance must be a positive rational, got '" +
                                text + "'");
  return *q;
}

std::vector<Rational> uniform_grid(const FunctionModel& f, int n) {
  std::vector<Rational> grid;
  Rational lo = f.domain_lo();
  Rational span = f.domain_hi() - f.domain_lo();
  for (int j = 0; j <= n; ++j)
    grid.push_back(lo + span * Rational(j) / Rational(n));
  return grid;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact envelope, semicontinuity, and integration analysis of "
               "piecewise-defined functions"};
  app.fallthrough(true);

  std::string csv_path;
  bool quiet = false;
  app.add_option("--csv", csv_path, "write the CSV table to this path");
  app.add_flag("--quiet", quiet, "suppress the text report");

  CommandArgs classify_args, envelope_args, analyze_args, integrate_args,
      compare_args;

  CLI::App* classify = app.add_subcommand(
      "classify", "semicontinuity and one-sided continuity at query points");
  classify->add_option("spec", classify_args.spec_path, "function spec file")
      ->required();
  classify->add_option("--at", classify_args.at, "query point (repeatable)")
      ->required();

  CLI::App* envelope = app.add_subcommand(
      "envelope", "two-sided and one-sided envelope values on a grid");
  envelope->add_option("spec", envelope_args.spec_path, "function spec file")
      ->required();
  envelope->add_option("--at", envelope_args.at, "query point (repeatable)");
  envelope->add_option("--grid", envelope_args.grid,
                       "number of uniform cells; evaluates at the n+1 edges");

  CLI::App* analyze = app.add_subcommand(
      "analyze", "exceptional points and measurability certificate");
  analyze->add_option("spec", analyze_args.spec_path, "function spec file")
      ->required();

  CLI::App* integrate =
      app.add_subcommand("integrate", "Darboux and Lebesgue integrals");
  integrate->add_option("spec", integrate_args.spec_path, "function spec file")
      ->required();
  integrate->add_option("--tol", integrate_args.tol, "enclosure tolerance (p/q)");
  integrate->add_option("--max-depth", integrate_args.max_depth,
                        "dyadic refinement depth cap");

  CLI::App* compare = app.add_subcommand(
      "compare", "Riemann-vs-Lebesgue comparison with certificates");
  compare->add_option("spec", compare_args.spec_path, "function spec file")
      ->required();
  compare->add_option("--tol", compare_args.tol, "enclosure tolerance (p/q)");
  compare->add_option("--max-depth", compare_args.max_depth,
                      "dyadic refinement depth cap");

  app.require_subcommand(1);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    ReportDocument doc;
    if (classify->parsed()) {
      FunctionModel f = load_model(classify_args.spec_path);
      doc = classify_report(f, parse_points(classify_args.at));
    } else if (envelope->parsed()) {
      FunctionModel f = load_model(envelope_args.spec_path);
      std::vector<Rational> grid;
      if (envelope_args.grid > 0 && !envelope_args.at.empty())
        throw std::invalid_argument("use either --grid or --at, not both");
      if (envelope_args.grid > 0)
        grid = uniform_grid(f, envelope_args.grid);
      else if (!envelope_args.at.empty())
        grid = parse_points(envelope_args.at);
      else
        throw std::invalid_argument("envelope needs --grid <n> or --at <x>");
      doc = envelope_report(f, grid);
    } else if (analyze->parsed()) {
      FunctionModel f = load_model(analyze_args.spec_path);
      doc = analyze_report(f);
    } else if (integrate->parsed()) {
      FunctionModel f = load_model(integrate_args.spec_path);
      if (integrate_args.max_depth < 1)
        throw std::invalid_argument("--max-depth must be >= 1");
      doc = integrate_report(f, parse_tol(integrate_args.tol),
                             integrate_args.max_depth);
    } else if (compare->parsed()) {
      FunctionModel f = load_model(compare_args.spec_path);
      if (compare_args.max_depth < 1)
        throw std::invalid_argument("--max-depth must be >= 1");
      doc = compare_report_document(f, parse_tol(compare_args.tol),
                                    compare_args.max_depth);
    }

    if (!csv_path.empty()) {
      std::ofstream csv(csv_path);
      if (!csv) throw std::invalid_argument("cannot write CSV to '" + csv_path + "'");
      csv << doc.csv;
    }
    if (!quiet) out << doc.text;
    return 0;
  } catch (const SpecError& e) {
    err << "spec error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace fnspect::cli
