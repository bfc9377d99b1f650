#include "cli.hpp"

#include "pfpos/classifier.hpp"
#include "pfpos/prover.hpp"
#include "pfpos/region.hpp"
#include "pfpos/spec_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace pfpos::cli {

namespace {

constexpr int kBadInput = 3;
constexpr int kUnderdetermined = 4;

struct Options {
  std::string input, inline_spec, algorithm = "auto", format, output, grid_step = "1/20";
  long max_iter = 50, index = 0;
  int rho_max = 10;
  unsigned threads = 0;
};

std::string read_input(const Options& o) {
  if (!o.inline_spec.empty()) {
    if (!o.input.empty()) throw std::invalid_argument("give either a spec file or --spec, not both");
    return o.inline_spec;
  }
  if (o.input.empty()) throw std::invalid_argument("no spec given (file path, '-' for stdin, or --spec)");
  if (o.input == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(o.input, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read '" + o.input + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SequenceSpec load(const Options& o) {
  SequenceSpec s = parse_spec(read_input(o));
  validate_spec(s);
  return s;
}

void flatten(const nlohmann::json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.output.empty() || o.output == "-") {
    out << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write '" + o.output + "'");
  f << text;
}

std::string render(const Options& o, const nlohmann::json& j) {
  if (o.format == "text") {
    std::ostringstream ss;
    flatten(j, "", ss);
    return ss.str();
  }
  return j.dump(2) + "\n";
}

int cmd_prove(const Options& o, std::ostream& out) {
  SequenceSpec s = load(o);
  Verdict v = o.algorithm == "gk"   ? prove_gk(s, o.max_iter)
              : o.algorithm == "mu" ? prove_mu(s, o.max_iter)
                                    : prove_auto(s, o.max_iter);
  emit(o, out, render(o, to_json(v)));
  switch (v.status) {
    case Status::True: return 0;
    case Status::False: return 1;
    default: return 2;
  }
}

int cmd_classify(const Options& o, std::ostream& out) {
  emit(o, out, render(o, to_json(classify(load(o)))));
  return 0;
}

int cmd_eval(const Options& o, std::ostream& out) {
  if (o.index < 0) throw std::invalid_argument("index must be nonnegative");
  emit(o, out, eval_sequence(load(o), o.index).get_str() + "\n");
  return 0;
}

int cmd_map(const Options& o, std::ostream& out, std::ostream& err) {
  const Rational step = parse_rational(o.grid_step);
  auto rows = map_region(step, o.rho_max, o.threads);
  Rational cov = coverage_fraction(step);
  std::ostringstream cov_text;
  cov_text << "coverage = " << cov.get_str() << " (" << cov.get_d() << ")\n";
  if (o.format == "json") {
    nlohmann::json j = {{"grid_step", step.get_str()},
                        {"rho_max", o.rho_max},
                        {"coverage", cov.get_str()},
                        {"rows", to_json(rows)},
                        {"findings", to_json(summarize(rows))}};
    emit(o, out, j.dump(2) + "\n");
  } else {
    emit(o, out, to_csv(rows));
  }
  // Keep stdout clean for the data itself.
  (o.output.empty() || o.output == "-" ? err : out) << cov_text.str();
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Positivity proofs for P-finite sequences"};
  app.require_subcommand(1);
  Options o;

  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("file", o.input, "spec file (text or JSON), '-' for stdin");
    sub->add_option("--spec", o.inline_spec, "inline spec, JSON or text");
    sub->add_option("-o,--output", o.output, "output path (default stdout)");
  };

  auto* prove = app.add_subcommand("prove", "decide positivity");
  add_spec(prove);
  prove->add_option("-a,--algorithm", o.algorithm)->check(CLI::IsMember({"gk", "mu", "auto"}))->capture_default_str();
  prove->add_option("--max-iter", o.max_iter)->check(CLI::PositiveNumber)->capture_default_str();
  prove->add_option("-f,--format", o.format)->check(CLI::IsMember({"json", "text"}));

  auto* classify_cmd = app.add_subcommand("classify", "predict which prover terminates");
  add_spec(classify_cmd);
  classify_cmd->add_option("-f,--format", o.format)->check(CLI::IsMember({"json", "text"}));

  auto* eval = app.add_subcommand("eval", "exact term f(n)");
  eval->add_option("n", o.index, "index")->required();
  add_spec(eval);

  auto* map = app.add_subcommand("map", "order-3 termination map over the (u, v) triangle");
  map->add_option("--grid-step", o.grid_step, "rational grid step in (0, 1/4]")->capture_default_str();
  map->add_option("--rho-max", o.rho_max)->check(CLI::Range(3, 16))->capture_default_str();
  map->add_option("--threads", o.threads, "worker threads, 0 for all cores");
  map->add_option("-f,--format", o.format)->check(CLI::IsMember({"csv", "json"}));
  map->add_option("-o,--output", o.output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*prove) return cmd_prove(o, out);
    if (*classify_cmd) return cmd_classify(o, out);
    if (*eval) return cmd_eval(o, out);
    return cmd_map(o, out, err);
  } catch (const UnderdeterminedError& e) {
    err << "error: " << e.what() << '\n';
    return kUnderdetermined;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
}

}  // namespace pfpos::cli
