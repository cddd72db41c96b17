#pragma once

#include <json.hpp>

#include <chrono>
#include <functional>
#include <future>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "netlog/curves.hpp"
#include "netlog/errors.hpp"
#include "netlog/graded.hpp"
#include "netlog/pipeline.hpp"
#include "netlog/stability.hpp"

namespace netlog::cli {

using json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

struct RunFlags {
  int lo = -2, hi = 6;  // Hilbert function window
  std::optional<int> gb_degree_cap;
  bool verify_exactness = false;
  std::optional<json> catalog;  // curve catalog loaded from --catalog
  bool parallel = true;
};

enum ExitCode { kOk = 0, kInternal = 1, kInputRejected = 2, kCapHit = 3 };

inline const std::set<std::string>& task_names() {
  static const std::set<std::string> names = {"compute", "classify", "restrict", "stability", "cohomology",
                                              "recover-cubic"};
  return names;
}

// Structural validation; polynomials are parsed later against the ring.
inline json normalize_problem(json j) {
  if (!j.is_object()) throw InputError("problem file must be a JSON object");
  if (!j.contains("field")) j["field"] = {{"kind", "QQ"}};
  field_from_json(j["field"]);
  auto need_strings = [&](const char* key, bool nonempty) {
    if (!j.contains(key)) {
      if (nonempty) throw InputError(std::string("problem file is missing '") + key + "'");
      j[key] = json::array();
    }
    const json& a = j[key];
    if (!a.is_array()) throw InputError(std::string("'") + key + "' must be an array of strings");
    for (auto& s : a)
      if (!s.is_string()) throw InputError(std::string("'") + key + "' must be an array of strings");
    if (nonempty && a.empty()) throw InputError(std::string("'") + key + "' must not be empty");
  };
  need_strings("variables", true);
  need_strings("X", true);
  need_strings("Y", false);
  if (!j.contains("tasks")) j["tasks"] = json::array();
  if (!j["tasks"].is_array()) throw InputError("'tasks' must be an array");
  for (auto& t : j["tasks"]) {
    if (!t.is_object() || !t.contains("task") || !t["task"].is_string())
      throw InputError("every task needs a string field 'task'");
    if (!task_names().count(t["task"].get<std::string>()))
      throw InputError("unknown task '" + t["task"].get<std::string>() + "'");
  }
  return j;
}

// Parse with a line/column diagnostic.
inline json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON (" +
                     e.what() + ")");
  }
}

namespace detail {

inline json z(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

inline json hilbert_json(const HilbertData& d) {
  json vals = json::array();
  for (auto& v : d.values) vals.push_back(z(v));
  return {{"window", {d.lo, d.hi}},
          {"values", vals},
          {"polynomial", hp_string(d.polynomial)},
          {"agreement_index", d.agreement_index},
          {"window_confirms", d.window_confirms}};
}

inline std::pair<int, int> int_pair(const json& t, const char* key, std::pair<int, int> def) {
  if (!t.contains(key)) return def;
  const json& a = t.at(key);
  if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
    throw InputError(std::string("'") + key + "' must be a pair of integers");
  std::pair<int, int> p{a[0].get<int>(), a[1].get<int>()};
  if (p.first > p.second) throw InputError(std::string("'") + key + "' is an empty range");
  return p;
}

template <class K>
struct Context {
  RingPtr<K> R;
  CIPair<K> P;
  GroebnerOptions opt;
  RunFlags flags;
  json problem;

  bool reduced() const { return is_reduced_section(P, opt); }
  bool surface_in_p3() const { return P.N() == 3 && P.r() == 1; }

  PresentedModule<K> sheaf(const std::string& name) const {
    if (name == "net") return net_log_tangent(P, opt);
    if (name == "reflexive") return reflexive_log_tangent(P, opt);
    if (name == "tangent") return tangent_sheaf(P, opt);
    if (name == "normal") return residue_data(P, opt).normal;
    if (name == "jacobian") return residue_data(P, opt).jacobian;
    if (name == "tor") return tor_defect(P, opt);
    throw InputError("unknown sheaf '" + name + "' (net, reflexive, tangent, normal, jacobian, tor)");
  }
  std::string default_sheaf() const { return reduced() ? "reflexive" : "net"; }

  std::vector<RationalCurve<K>> curves(const json& task) const {
    json cat;
    if (task.contains("catalog")) cat = task.at("catalog");
    else if (problem.contains("catalog")) cat = problem.at("catalog");
    else if (flags.catalog) cat = *flags.catalog;
    std::vector<RationalCurve<K>> out;
    if (cat.is_string()) {
      if (cat.get<std::string>() != "fermat-lines") throw InputError("unknown builtin catalog '" + cat.get<std::string>() + "'");
      for (auto& c : fermat_lines(projective_line<K>(R->context())))
        if (curve_lies_on(c, P.F)) out.push_back(make_rational_curve(c.name, c.line, c.forms, P.F, P.G, opt));
    } else if (cat.is_object()) {
      out = curves_from_json(cat, R, P.F, P.G, opt);
    } else if (!cat.is_null()) {
      throw InputError("'catalog' must be a catalog object or the name of a builtin catalog");
    }
    if (task.contains("curves")) {
      std::vector<RationalCurve<K>> chosen;
      for (auto& n : task.at("curves")) {
        const std::string name = n.get<std::string>();
        auto it = std::find_if(out.begin(), out.end(), [&](auto& c) { return c.name == name; });
        if (it == out.end()) throw InputError("curve '" + name + "' is not in the catalog");
        chosen.push_back(*it);
      }
      out = std::move(chosen);
    }
    return out;
  }
};

template <class K>
json points_json(const std::vector<ProjectivePoint<K>>& pts) {
  json a = json::array();
  for (auto& p : pts) a.push_back({{"point", point_string(p)}, {"multiplicity", p.multiplicity}});
  return a;
}

template <class K>
json task_compute(const Context<K>& c, const json&) {
  const PolyRing<K>& S = *c.R;
  json res;
  json jac = json::array();
  for (auto& row : jacobian_rows(c.P.D_ideal(), S.nvars())) {
    json r = json::array();
    for (auto& p : row) r.push_back(to_string(p, S));
    jac.push_back(r);
  }
  res["jacobian"] = jac;
  auto net = net_log_tangent(c.P, c.opt);
  res["net"] = hilbert_json(net.hilbert(c.flags.lo, c.flags.hi));
  const bool reduced = c.reduced();
  res["reduced_section"] = reduced;
  if (reduced) {
    auto refl = reflexive_log_tangent(c.P, c.opt);
    res["reflexive"] = hilbert_json(refl.hilbert(c.flags.lo, c.flags.hi));
    res["reflexive_minus_net"] = hp_string(refl.hilbert_polynomial() - net.hilbert_polynomial());
    res["tor_defect"] = hp_string(tor_defect(c.P, c.opt).hilbert_polynomial());
    if (c.P.r() == 1 && c.P.s() == 1) {
      auto rd = residue_data(c.P, c.opt);
      res["residue"] = {{"normal", hp_string(rd.normal.hilbert_polynomial())},
                        {"jacobian", hp_string(rd.jacobian.hilbert_polynomial())}};
    }
  }
  if (c.surface_in_p3() && net.hilbert_series().dimension() == 3) {
    const long d = c.P.F[0].degree();
    long e = 0;
    for (auto& g : c.P.G) e += g.degree();
    SurfaceData X{d, d - 4, binomial(d - 1, 3).get_si() + 1};
    const long m = 4 - d - e;  // c1 = m·H
    ChernOptions co;
    co.lo = c.flags.lo;
    co.hi = c.flags.hi;
    co.h_requests = {{0, 0}, {0, 1}};
    co.check_locally_free = false;
    auto rep = chern_report(net, X, co, c.opt);
    json ch = {{"rank", rep.rank}, {"c1_dot_H", z(rep.c1_dot_H)}, {"c1sq_minus_2c2", z(rep.c1sq_minus_2c2)}};
    if (rep.c1_dot_H == m * d) {
      auto r2 = chern_from_polynomial(net.hilbert_polynomial(), X, mpz_class(m * m * d));
      ch["c1"] = std::to_string(m) + "H";
      if (r2.c2) ch["c2"] = z(*r2.c2);
      if (r2.expected_moduli_dim) ch["expected_moduli_dim"] = z(*r2.expected_moduli_dim);
    }
    ch["h0"] = {{"t=0", z(rep.h_table.at({0, 0}))}, {"t=1", z(rep.h_table.at({0, 1}))}};
    res["chern"] = ch;
    auto lf = is_locally_free(net, rep.rank, c.opt);
    res["locally_free"] = lf.locally_free;
    if (!lf.locally_free) {
      auto pts = rational_points(c.R, lf.singular_support, c.opt);
      res["singular_support"] = points_json(pts.points);
      res["singular_support_residual"] = pts.residual;
      json planes = json::array();
      for (auto& p : pts.points) {
        try {
          planes.push_back(to_string(tangent_plane(S, c.P.F[0], p.coords), S));
        } catch (const CheckFailed&) {
          planes.push_back(nullptr);
        }
      }
      res["tangent_planes"] = planes;
    }
    res["h0_tangent"] = z(Cohomology<K>(tangent_sheaf(c.P, c.opt), c.opt).h(0, 0));
    if (is_standard_quadric(net)) {
      auto bd = bidegree_c1(net, c.opt);
      res["bidegree_c1"] = {bd.a, bd.b};
    }
    if (d == 3 && rep.rank == 2 && rep.c1sq_minus_2c2 == -18 && rep.c1_dot_H == 0) {
      auto lc = log_character_test(net, c.opt);
      res["log_character"] = {{"result", lc.result}, {"h0_E1", z(lc.h0_E1)}, {"globally_generated", lc.globally_generated}};
    }
  }
  return res;
}

template <class K>
json task_classify(const Context<K>& c, const json&) {
  if (c.P.r() != 1 || c.P.s() != 1) throw InputError("classify needs one form X and one linear form Y");
  auto s = section_singularities(c.R, c.P.F[0], c.P.G[0], c.opt);
  json res = {{"points", points_json(s.points)},
              {"multiplicities", s.multiplicities},
              {"degree", s.degree},
              {"residual", s.residual},
              {"non_rational_support", s.non_rational_support},
              {"label", s.label}};
  res["r0_length"] = s.r0_length ? json(*s.r0_length) : json(nullptr);
  return res;
}

template <class K>
json task_restrict(const Context<K>& c, const json& t) {
  const std::string which = t.value("sheaf", c.default_sheaf());
  auto E = c.sheaf(which);
  json rows = json::array();
  for (auto& C : c.curves(t)) {
    auto s = restrict_to_curve(E, C, c.opt);
    rows.push_back({{"curve", C.name}, {"in_D", C.in_D}, {"splitting", s.degrees}});
  }
  return {{"sheaf", which}, {"curves", rows}};
}

template <class K>
json task_stability(const Context<K>& c, const json& t) {
  const std::string which = t.value("sheaf", std::string("net"));
  auto E = c.sheaf(which);
  if (is_standard_quadric(E)) {
    auto [lo, hi] = int_pair(t, "window", {-2, 2});
    ScanOptions so;
    so.lo = lo;
    so.hi = hi;
    so.parallel = c.flags.parallel;
    auto v = gieseker_scan_quadric(E, so, c.opt);
    json cells = json::array();
    for (auto& cell : v.cells) {
      json j = {{"class", {cell.a, cell.b}}, {"h0_hull_twist", z(cell.h0_hull_twist)}, {"outcome", cell.outcome}};
      if (cell.z) {
        j["h0_twist"] = z(cell.h0_twist);
        j["z"] = *cell.z;
        j["P_F"] = hp_string(cell.P_F);
        j["reverified"] = cell.reverified;
      }
      cells.push_back(j);
    }
    json res = {{"sheaf", which},        {"polarization", v.polarization}, {"window", {v.lo, v.hi}},
                {"P_E", hp_string(v.P_E)}, {"cells", cells},              {"verdict", v.verdict},
                {"explanation", v.explanation}};
    res["witness"] = v.witness ? json({v.witness->first, v.witness->second}) : json(nullptr);
    return res;
  }
  if (c.surface_in_p3() && c.P.F[0].degree() == 3) {
    auto ev = mu_evidence_cubic(E, c.curves(t), c.opt);
    json rows = json::array();
    for (auto& l : ev.lines)
      rows.push_back({{"curve", l.name}, {"in_D", l.in_D}, {"splitting", l.splitting.degrees}, {"flag", l.flag}});
    return {{"sheaf", which},
            {"mu_evidence", rows},
            {"h0_E", z(ev.h0_E)},
            {"sections_flag", ev.sections_flag},
            {"flagged", ev.any_flag()}};
  }
  throw InputError("stability runs on the quadric x0*x3-x1*x2 (Gieseker scan) or on a cubic surface in P^3");
}

template <class K>
json task_cohomology(const Context<K>& c, const json& t) {
  const std::string which = t.value("sheaf", c.default_sheaf());
  auto [lo, hi] = int_pair(t, "range", {-2, 3});
  auto M = c.sheaf(which);
  const int dim = M.hilbert_series().dimension() - 1;
  Cohomology<K> coh(M, c.opt);
  json table = json::array();
  for (int tw = lo; tw <= hi; ++tw) {
    json row = {{"t", tw}};
    json hs = json::array();
    for (int i = 0; i <= std::max(dim, 0); ++i) hs.push_back(z(coh.h(i, tw)));
    row["h"] = hs;
    table.push_back(row);
  }
  return {{"sheaf", which}, {"dimension", dim}, {"table", table}};
}

template <class K>
json task_recover_cubic(const Context<K>& c, const json& t) {
  if (!t.contains("quadrics") || !t["quadrics"].is_array() || t["quadrics"].size() != 3)
    throw InputError("recover-cubic needs 'quadrics': three strings");
  std::vector<Poly<K>> Q;
  for (auto& s : t["quadrics"]) Q.push_back(parse_poly(s.get<std::string>(), *c.R));
  auto r = recover_cubic_from_gradient(*c.R, Q);
  json res = {{"solvable", r.cubic.has_value()}};
  if (r.cubic) {
    res["cubic"] = to_string(*r.cubic, *c.R);
    res["family_dimension"] = r.family_dimension;
  }
  return res;
}

template <class K>
json run_task(const Context<K>& c, const json& t) {
  const std::string name = t.at("task").get<std::string>();
  if (name == "compute") return task_compute(c, t);
  if (name == "classify") return task_classify(c, t);
  if (name == "restrict") return task_restrict(c, t);
  if (name == "stability") return task_stability(c, t);
  if (name == "cohomology") return task_cohomology(c, t);
  return task_recover_cubic(c, t);
}

struct TaskOutcome {
  json result;
  double ms = 0;
};

template <class K>
TaskOutcome guarded(const Context<K>& c, const json& t) {
  auto t0 = std::chrono::steady_clock::now();
  TaskOutcome o;
  try {
    o.result = {{"status", "ok"}, {"result", run_task(c, t)}};
  } catch (const CapExceeded& e) {
    o.result = {{"status", "cap"}, {"error", e.what()}};
  } catch (const InputError& e) {
    o.result = {{"status", "rejected"}, {"error", e.what()}};
  }
  o.result["task"] = t.at("task");
  o.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return o;
}

template <class K>
json run_typed(const json& problem, const RunFlags& flags) {
  auto R = ring_from_json<K>({{"field", problem.at("field")}, {"variables", problem.at("variables")}});
  std::vector<Poly<K>> X, Y;
  for (auto& s : problem.at("X")) X.push_back(parse_poly(s.get<std::string>(), *R));
  for (auto& s : problem.at("Y")) Y.push_back(parse_poly(s.get<std::string>(), *R));
  GroebnerOptions opt;
  if (flags.gb_degree_cap) opt.degree_cap = *flags.gb_degree_cap;
  auto t0 = std::chrono::steady_clock::now();
  Context<K> c{R, make_ci_pair(R, X, Y, opt), opt, flags, problem};

  const json& tasks = problem.at("tasks");
  std::vector<TaskOutcome> outs;
  if (flags.parallel && tasks.size() > 1) {
    std::vector<std::future<TaskOutcome>> jobs;
    for (auto& t : tasks) jobs.push_back(std::async(std::launch::async, [&c, &t] { return guarded(c, t); }));
    for (auto& j : jobs) outs.push_back(j.get());
  } else {
    for (auto& t : tasks) outs.push_back(guarded(c, t));
  }

  json report;
  report["tool"] = "netlog";
  report["version"] = kVersion;
  json echo = problem;
  echo["flags"] = {{"degree_window", {flags.lo, flags.hi}}, {"verify_exactness", flags.verify_exactness}};
  if (flags.gb_degree_cap) echo["flags"]["gb_degree_cap"] = *flags.gb_degree_cap;
  if (flags.catalog && !problem.contains("catalog")) echo["catalog"] = *flags.catalog;
  report["input"] = echo;
  report["results"] = json::array();
  report["warnings"] = json::array();
  json timing = {{"tasks_ms", json::array()}};
  for (std::size_t i = 0; i < outs.size(); ++i) {
    auto& r = outs[i].result;
    if (r["status"] == "cap") report["warnings"].push_back("task " + std::to_string(i) + ": computation cap hit");
    if (r["status"] == "rejected") report["warnings"].push_back("task " + std::to_string(i) + ": input rejected");
    if (r["status"] == "ok" && r["result"].contains("verdict") && r["result"]["verdict"] == "inconclusive")
      report["warnings"].push_back("task " + std::to_string(i) + ": inconclusive verdict");
    report["results"].push_back(r);
    timing["tasks_ms"].push_back(outs[i].ms);
  }
  if (flags.verify_exactness) {
    json checks = json::array();
    try {
      for (auto& ck : verify_exactness(c.P, flags.lo, flags.hi, opt)) {
        checks.push_back({{"name", ck.name}, {"passed", ck.passed}, {"detail", ck.detail}});
        if (!ck.passed) report["warnings"].push_back("exactness check failed: " + ck.name);
      }
    } catch (const CapExceeded& e) {
      report["warnings"].push_back(std::string("exactness: computation cap hit: ") + e.what());
      checks.push_back({{"name", "cap"}, {"passed", false}, {"detail", e.what()}});
    }
    report["exactness"] = checks;
  }
  timing["total_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  report["timing"] = timing;
  return report;
}

}  // namespace detail

// Runs every task of a normalized problem. Problem-level failures throw;
// task-level failures are recorded in the report.
inline json run(const json& problem_in, const RunFlags& flags = {}) {
  json problem = normalize_problem(problem_in);
  if (field_from_json(problem.at("field")).is_extension())
    return detail::run_typed<AlgebraicNumber>(problem, flags);
  return detail::run_typed<Rational>(problem, flags);
}

inline int exit_code(const json& report) {
  bool cap = false, rejected = false, failed = false;
  for (auto& r : report.at("results")) {
    cap = cap || r["status"] == "cap";
    rejected = rejected || r["status"] == "rejected";
  }
  if (report.contains("exactness"))
    for (auto& c : report["exactness"]) {
      if (c["name"] == "cap") cap = true;
      else if (!c["passed"].get<bool>()) failed = true;
    }
  if (cap) return kCapHit;
  if (rejected) return kInputRejected;
  if (failed) return kInternal;
  return kOk;
}

// Report without the timing block, for determinism comparisons.
inline json strip_timing(json report) {
  report.erase("timing");
  return report;
}

namespace detail {

inline std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array()) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
    return s + ")";
  }
  return v.dump();
}

inline bool flat(const json& v) {
  if (v.is_object()) return false;
  if (v.is_array())
    for (auto& x : v)
      if (x.is_object() || (x.is_array() && !flat(x))) return false;
  return true;
}

inline void print_tree(std::ostream& os, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (auto& [k, x] : v.items()) {
      if (flat(x)) {
        os << pad << k << ": " << scalar_text(x) << "\n";
      } else {
        os << pad << k << ":\n";
        print_tree(os, x, indent + 2);
      }
    }
  } else if (v.is_array()) {
    for (auto& x : v) {
      if (flat(x)) {
        os << pad << "- " << scalar_text(x) << "\n";
      } else {
        os << pad << "-\n";
        print_tree(os, x, indent + 2);
      }
    }
  } else {
    os << pad << scalar_text(v) << "\n";
  }
}

}  // namespace detail

inline void print_human(std::ostream& os, const json& report) {
  os << "netlog " << report.value("version", "") << "\n";
  const auto& results = report.at("results");
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    os << "[" << i << "] " << r.at("task").get<std::string>() << " (" << r.at("status").get<std::string>() << ")\n";
    if (r.contains("error")) os << "  error: " << r["error"].get<std::string>() << "\n";
    if (r.contains("result")) detail::print_tree(os, r["result"], 2);
  }
  if (report.contains("exactness")) {
    os << "exactness:\n";
    for (auto& c : report["exactness"])
      os << "  " << (c["passed"].get<bool>() ? "ok   " : "FAIL ") << c["name"].get<std::string>() << "\n";
  }
  for (auto& w : report.at("warnings")) os << "warning: " << w.get<std::string>() << "\n";
}

}  // namespace netlog::cli
