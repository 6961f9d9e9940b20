#include "unilat/report.hpp"

#include <chrono>
#include <sstream>

#include "unilat/config.hpp"
#include "unilat/errors.hpp"
#include "unilat/lattice.hpp"
#include "unilat/qseries.hpp"

namespace unilat::report {

using nlohmann::json;

namespace {

json strings(const std::vector<Rat>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.get_str());
  return out;
}

json result(bool ok, json data) {
  return {{"status", ok ? "pass" : "fail"}, {"data", std::move(data)}};
}

json info(json data) { return {{"status", "pass"}, {"data", std::move(data)}}; }

json skipped(const std::string& reason) {
  return {{"status", "skipped"}, {"data", {{"reason", reason}}}};
}

class Stopwatch {
 public:
  long long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json envelope(const std::string& command, json inputs, json results, const Stopwatch& watch) {
  return {{"command", command},
          {"inputs", std::move(inputs)},
          {"results", std::move(results)},
          {"version", kVersion},
          {"timing", {{"elapsed_ms", watch.elapsed_ms()}}}};
}

std::string describe_variable(const NormVariable& v) {
  if (v.scale == 1) return std::string(1, v.name) + " = <x0,x0>";
  return std::string(1, v.name) + " with <x0,x0> = " + v.scale.get_str() + v.name;
}

json problem_json(const ConfigProblem& p) {
  json degrees = json::array();
  for (int d : p.degree_set) degrees.push_back(d);
  return {{"rank", p.rank},
          {"m", p.m},
          {"min_norm", p.min_norm},
          {"ip_bound", p.ip_bound},
          {"shell_count", p.shell_count.get_str()},
          {"design_strength", p.design_strength},
          {"degree_set", degrees},
          {"norm_variable", describe_variable(p.var)},
          {"default_formulation", to_string(p.default_formulation)}};
}

json system_json(const LinearSystem& sys) {
  json rows = json::array();
  for (std::size_t r = 0; r < sys.extended.rows(); ++r) {
    json entries = json::array();
    for (std::size_t c = 0; c < sys.extended.cols(); ++c) entries.push_back(sys.extended.at(r, c).to_string());
    rows.push_back({{"tag", sys.rows[r].label()}, {"entries", entries}});
  }
  json columns = json::array();
  for (int i = 0; i <= sys.problem.ip_bound; ++i) columns.push_back("N_" + std::to_string(i));
  columns.push_back("rhs");
  return {{"formulation", to_string(sys.formulation)},
          {"size", std::to_string(sys.extended.rows()) + "x" + std::to_string(sys.extended.cols())},
          {"variable", std::string(1, sys.extended.var())},
          {"columns", columns},
          {"rows", rows}};
}

json roots_json(const Verdict& v) {
  return {{"rational_roots", strings(v.rational_roots)},
          {"positive_real_root_count", v.positive_real_root_count},
          {"admissible_norms", strings(v.admissible_norms)},
          {"blocking_roots", strings(v.blocking_roots)}};
}

void add_verdict(json& results, const Verdict& v) {
  json det = {{"determinant", v.determinant.to_string()},
              {"content", v.content.get_str()},
              {"primitive_part", v.primitive.to_string()},
              {"sign", sgn(v.content) < 0 ? "-" : "+"}};
  if (auto pub = published_constant(v.rank)) {
    det["published_constant"] = pub->value.get_str();
    det["published_sign"] = sgn(pub->value) < 0 ? "-" : "+";
    det["sign_matches_published"] = (sgn(pub->value) == sgn(v.content));
    det["content_matches_published"] = (Rat(pub->value) == v.content);
  }
  results["determinant"] = info(det);

  if (!v.factors.empty()) {
    json checks = json::array();
    for (const auto& fc : v.factors) {
      checks.push_back({{"factor", fc.factor.to_string()}, {"divides", fc.divides}});
    }
    json data = {{"factors", checks}};
    if (v.cofactor) data["cofactor"] = v.cofactor->to_string();
    results["stated_factors"] = result(v.factors_ok, data);
  }
  results["roots"] = info(roots_json(v));
  json notes = json::array();
  for (const auto& n : v.notes) notes.push_back(n);
  results["conclusion"] =
      result(v.conclusion == Conclusion::generated_by_minimal_vectors,
             {{"conclusion", to_string(v.conclusion)}, {"notes", notes}});
}

}  // namespace

json verify(int rank, const std::string& formulation) {
  Stopwatch watch;
  const ConfigProblem problem = make_problem(rank);
  const bool both = formulation == "both";
  Formulation primary = problem.default_formulation;
  if (formulation != "default" && !both) primary = parse_formulation(formulation);

  json results;
  results["problem"] = info(problem_json(problem));
  const LinearSystem sys = build_system(problem, primary);
  results["system"] = info({{"formulation", to_string(primary)},
                            {"size", std::to_string(sys.extended.rows()) + "x" +
                                         std::to_string(sys.extended.cols())}});
  const Verdict v = analyze(sys);
  add_verdict(results, v);

  if (both) {
    const Formulation other =
        primary == Formulation::moment ? Formulation::zonal : Formulation::moment;
    try {
      const Verdict w = analyze(build_system(problem, other));
      const bool same = w.rational_roots == v.rational_roots &&
                        w.positive_real_root_count == v.positive_real_root_count;
      results["formulation_crosscheck"] =
          result(same, {{to_string(primary), roots_json(v)},
                        {to_string(other), roots_json(w)},
                        {to_string(other) + "_primitive_part", w.primitive.to_string()}});
    } catch (const ArgumentError& e) {
      results["formulation_crosscheck"] = skipped(e.what());
    }
  }
  return envelope("verify", {{"rank", rank}, {"formulation", formulation}}, results, watch);
}

json theta(int rank, int terms) {
  Stopwatch watch;
  if (rank <= 0 || rank % 8 != 0) {
    throw ArgumentError("rank must be a positive multiple of 8, got " + std::to_string(rank));
  }
  const int m = extremal_m(rank);
  const int order = terms > 0 ? terms : m + 10;
  if (order <= m) {
    throw ArgumentError("--terms must exceed m = " + std::to_string(m) + " for rank " +
                        std::to_string(rank));
  }
  const QSeries th = extremal_theta(rank, static_cast<std::size_t>(order));
  json results;
  results["extremal_theta"] = result(th.has_integer_coeffs(), {{"m", m},
                                                              {"coefficients", strings(th.coeffs())},
                                                              {"series", th.to_string()}});
  results["kissing_number"] = info({{"value", th[static_cast<std::size_t>(m)].get_str()},
                                    {"min_norm", 2 * m}});
  return envelope("theta", {{"rank", rank}, {"terms", order}}, results, watch);
}

json system(int rank, const std::string& formulation) {
  Stopwatch watch;
  const ConfigProblem problem = make_problem(rank);
  const Formulation f =
      formulation == "default" ? problem.default_formulation : parse_formulation(formulation);
  const LinearSystem sys = build_system(problem, f);
  json results;
  results["problem"] = info(problem_json(problem));
  json data = system_json(sys);
  data["determinant"] = det_fraction_free(sys.extended).to_string();
  results["system"] = info(data);
  return envelope("system", {{"rank", rank}, {"formulation", formulation}}, results, watch);
}

namespace {

struct OracleContext {
  GramLattice lattice;
  int rank;
  int min_norm;
  ShellVectors shell;
};

json oracle_theta(const OracleContext& ctx) {
  const int max_norm = ctx.min_norm;
  const QSeries counted = theta_by_enumeration(ctx.lattice, max_norm);
  const QSeries expected = ctx.rank == 8 ? eisenstein(4, counted.order())
                                         : extremal_theta(ctx.rank, counted.order());
  return result(counted == expected, {{"max_norm", max_norm},
                                      {"enumerated", strings(counted.coeffs())},
                                      {"modular_form", strings(expected.coeffs())}});
}

json oracle_kissing(const OracleContext& ctx) {
  bool below_empty = true;
  for (int norm = 2; norm < ctx.min_norm; norm += 2) {
    if (enumerate_shell(ctx.lattice, Rat(norm)).size() != 0) below_empty = false;
  }
  const Int expected = kissing_number(ctx.rank);
  const Int counted = to_int(static_cast<unsigned long long>(ctx.shell.size()));
  return result(below_empty && counted == expected, {{"min_norm", ctx.min_norm},
                                                     {"value", counted.get_str()},
                                                     {"expected", expected.get_str()},
                                                     {"no_shorter_vectors", below_empty}});
}

json oracle_design(const OracleContext& ctx, int strength, std::uint64_t seed, int probes) {
  const DesignReport rep = design_sums(ctx.shell, ctx.lattice, strength, probes, seed);
  json nonzero = json::array();
  for (const auto& s : rep.sums) {
    if (s.sum != 0) nonzero.push_back({{"probe", s.probe}, {"degree", s.degree}, {"sum", s.sum.get_str()}});
  }
  return result(rep.passed, {{"strength", strength},
                             {"random_probes", probes},
                             {"sums_checked", rep.sums.size()},
                             {"nonzero_sums", nonzero}});
}

json oracle_profile(const OracleContext& ctx) {
  const auto first = ctx.shell[0];
  const std::vector<long long> x0(first.begin(), first.end());
  const NProfile prof = n_profile(ctx.shell, ctx.lattice, x0);
  const LinearSystem sys = build_system(make_oracle_problem(ctx.rank));
  const Rat norm = ctx.lattice.inner(x0, x0);
  const auto solved = solve_at(sys, norm);

  json enumerated = json::array();
  for (const auto& c : prof.counts) enumerated.push_back(c.get_str());
  json data = {{"x0_norm", norm.get_str()}, {"enumerated", enumerated}};
  bool same = false;
  if (solved) {
    data["solved"] = strings(*solved);
    same = true;
    for (std::size_t i = 0; i < solved->size(); ++i) {
      const Int have = i < prof.counts.size() ? prof.counts[i] : Int(0);
      if ((*solved)[i] != Rat(have)) same = false;
    }
    if (prof.counts.size() > solved->size()) same = false;
  } else {
    data["solved"] = "inconsistent";
  }
  return result(same, data);
}

std::vector<std::string> split_checks(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

json oracle(const std::string& lattice, const std::string& checks, std::uint64_t seed, int probes) {
  Stopwatch watch;
  if (lattice != "e8" && lattice != "leech") {
    throw ArgumentError("unknown lattice '" + lattice + "' (expected e8 or leech)");
  }
  const int rank = lattice == "e8" ? 8 : 24;
  std::vector<std::string> names = split_checks(checks);
  if (names.empty()) {
    names = {"theta", "kissing", "design:" + std::to_string(design_strength_for(rank)), "profile"};
  }
  // Validate every name before doing any work.
  std::vector<int> strengths(names.size(), 0);
  for (std::size_t k = 0; k < names.size(); ++k) {
    const std::string& n = names[k];
    if (n == "theta" || n == "kissing" || n == "profile") continue;
    if (n.rfind("design:", 0) == 0) {
      const std::string arg = n.substr(7);
      try {
        std::size_t used = 0;
        strengths[k] = std::stoi(arg, &used);
        if (used != arg.size() || strengths[k] < 2) throw std::invalid_argument(arg);
      } catch (const std::exception&) {
        throw ArgumentError("bad design strength in check '" + n + "'");
      }
      continue;
    }
    throw ArgumentError("unknown check '" + n + "' (expected theta, kissing, design:<t>, profile)");
  }
  if (probes < 1) throw ArgumentError("--probes must be >= 1");

  GramLattice l = lattice == "e8" ? e8() : leech();
  const int min_norm = 2 * extremal_m(rank);
  ShellVectors shell = enumerate_shell(l, Rat(min_norm));
  const OracleContext ctx{std::move(l), rank, min_norm, std::move(shell)};

  json results = json::object();
  for (std::size_t k = 0; k < names.size(); ++k) {
    const std::string& n = names[k];
    if (n == "theta") results[n] = oracle_theta(ctx);
    else if (n == "kissing") results[n] = oracle_kissing(ctx);
    else if (n == "profile") results[n] = oracle_profile(ctx);
    else results[n] = oracle_design(ctx, strengths[k], seed, probes);
  }
  json checks_in = json::array();
  for (const auto& n : names) checks_in.push_back(n);
  return envelope("oracle",
                  {{"lattice", lattice},
                   {"checks", checks_in},
                   {"seed", std::to_string(seed)},
                   {"probes", probes}},
                  results, watch);
}

bool passed(const json& report) {
  for (const auto& [name, r] : report.at("results").items()) {
    if (r.at("status") == "fail") return false;
  }
  return true;
}

json without_timing(json report) {
  report.erase("timing");
  return report;
}

namespace {

void render_value(std::ostringstream& os, const json& v, const std::string& indent) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) {
      if (x.is_structured() && !(x.is_array() && std::all_of(x.begin(), x.end(), [](const json& e) {
                                   return e.is_primitive();
                                 }))) {
        os << indent << k << ":\n";
        render_value(os, x, indent + "  ");
      } else {
        os << indent << k << ": ";
        render_value(os, x, "");
        os << '\n';
      }
    }
  } else if (v.is_array()) {
    if (std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_primitive(); })) {
      os << '[';
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        render_value(os, v[i], "");
      }
      os << ']';
    } else {
      for (const auto& e : v) {
        os << indent << "-\n";
        render_value(os, e, indent + "  ");
      }
    }
  } else if (v.is_string()) {
    os << v.get<std::string>();
  } else {
    os << v.dump();
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream os;
  os << "unilat " << report.value("version", "") << " :: " << report.value("command", "") << '\n';
  os << "inputs:\n";
  render_value(os, report.at("inputs"), "  ");
  for (const auto& [name, r] : report.at("results").items()) {
    os << '[' << r.at("status").get<std::string>() << "] " << name << '\n';
    render_value(os, r.at("data"), "    ");
  }
  os << (passed(report) ? "OK" : "FAILED") << '\n';
  return os.str();
}

}  // namespace unilat::report
