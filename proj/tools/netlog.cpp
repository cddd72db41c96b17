#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "netlog/cli/runner.hpp"

using namespace netlog;
using cli::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::pair<int, int> parse_range(const std::string& s, const char* what) {
  auto pos = s.find("..");
  if (pos == std::string::npos) throw InputError(std::string(what) + " must look like a..b");
  try {
    std::size_t used = 0;
    int a = std::stoi(s.substr(0, pos), &used);
    if (used != pos) throw std::invalid_argument(s);
    std::string rest = s.substr(pos + 2);
    int b = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(s);
    if (a > b) throw InputError(std::string(what) + " is empty");
    return {a, b};
  } catch (const std::logic_error&) {
    throw InputError(std::string(what) + " must look like a..b, got '" + s + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"netlog: net logarithmic tangent sheaves with exact arithmetic"};
  app.require_subcommand(1);
  app.set_version_flag("--version", cli::kVersion);

  std::string problem_path, window, catalog_path, range = "-2..3", scan = "-2..2", sheaf;
  std::vector<std::string> curves;
  int cap = 0;
  bool as_json = false, exactness = false, serial = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("problem", problem_path, "problem file (JSON)")->required();
    sub->add_option("--degree-window", window, "Hilbert function window a..b");
    sub->add_option("--gb-degree-cap", cap, "Groebner basis degree cap")->check(CLI::PositiveNumber);
    sub->add_flag("--json", as_json, "print the JSON report");
    sub->add_flag("--verify-exactness", exactness, "run every Hilbert-additivity check on the pair");
    sub->add_option("--catalog", catalog_path, "curve catalog (JSON)");
    sub->add_flag("--serial", serial, "run tasks one at a time");
  };
  auto* run = app.add_subcommand("run", "run the tasks listed in the problem file");
  auto* classify = app.add_subcommand("classify", "classify the singularities of the hyperplane section");
  auto* restrict = app.add_subcommand("restrict", "splitting types along catalog curves");
  auto* stability = app.add_subcommand("stability", "Gieseker scan on the quadric, line evidence on a cubic");
  auto* cohomology = app.add_subcommand("cohomology", "table of h^i(E(t))");
  for (auto* s : {run, classify, restrict, stability, cohomology}) common(s);
  restrict->add_option("--curve", curves, "restrict only to these catalog curves");
  for (auto* s : {restrict, stability, cohomology}) s->add_option("--sheaf", sheaf, "net, reflexive, tangent, ...");
  stability->add_option("--window", scan, "bidegree window a..b for the scan");
  cohomology->add_option("--range", range, "twist range a..b");

  CLI11_PARSE(app, argc, argv);

  try {
    json problem = cli::parse_json_text(read_file(problem_path), problem_path);
    if (!problem.is_object()) throw InputError(problem_path + ": problem file must be a JSON object");
    cli::RunFlags flags;
    if (!window.empty()) std::tie(flags.lo, flags.hi) = parse_range(window, "--degree-window");
    if (cap > 0) flags.gb_degree_cap = cap;
    flags.verify_exactness = exactness;
    flags.parallel = !serial;
    if (!catalog_path.empty()) flags.catalog = cli::parse_json_text(read_file(catalog_path), catalog_path);

    json task;
    if (*classify) task = {{"task", "classify"}};
    if (*restrict) {
      task = {{"task", "restrict"}};
      if (!curves.empty()) task["curves"] = curves;
    }
    if (*stability) {
      auto [a, b] = parse_range(scan, "--window");
      task = {{"task", "stability"}, {"window", {a, b}}};
    }
    if (*cohomology) {
      auto [a, b] = parse_range(range, "--range");
      task = {{"task", "cohomology"}, {"range", {a, b}}};
    }
    if (!task.is_null()) {
      if (!sheaf.empty()) task["sheaf"] = sheaf;
      problem["tasks"] = json::array({task});
    }

    json report = cli::run(problem, flags);
    if (as_json) std::cout << report.dump(2) << "\n";
    else cli::print_human(std::cout, report);
    const int code = cli::exit_code(report);
    for (auto& r : report["results"])
      if (r.contains("error")) std::cerr << "error: " << r["error"].get<std::string>() << "\n";
    return code;
  } catch (const CapExceeded& e) {
    std::cerr << "error: computation cap: " << e.what() << "\n";
    return cli::kCapHit;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kInputRejected;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kInputRejected;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return cli::kInternal;
  }
}
