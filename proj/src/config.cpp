#include "unilat/config.hpp"

#include <algorithm>

#include "unilat/errors.hpp"
#include "unilat/linsolve.hpp"
#include "unilat/qseries.hpp"
#include "unilat/roots.hpp"

namespace unilat {

std::string to_string(Formulation f) {
  return f == Formulation::moment ? "moment" : "zonal";
}

Formulation parse_formulation(const std::string& name) {
  if (name == "moment") return Formulation::moment;
  if (name == "zonal") return Formulation::zonal;
  throw ArgumentError("unknown formulation '" + name + "' (expected moment or zonal)");
}

std::string to_string(Conclusion c) {
  return c == Conclusion::generated_by_minimal_vectors ? "generated_by_minimal_vectors"
                                                       : "inconclusive";
}

std::string RowTag::label() const {
  switch (kind) {
    case RowKind::cardinality:
      return "cardinality";
    case RowKind::moment:
      return "moment k=" + std::to_string(index);
    case RowKind::zonal:
      return "zonal d=" + std::to_string(index);
  }
  return "?";
}

int design_strength_for(int rank) {
  switch (rank % 24) {
    case 0:
      return 11;
    case 8:
      return 7;
    case 16:
      return 3;
    default:
      throw ArgumentError("design strength: rank must be a multiple of 8");
  }
}

std::vector<int> vanishing_degrees(int rank, std::size_t count) {
  std::vector<int> out;
  // dim M_k vanishes for every k below 0, so the search is bounded.
  for (int d = 2; out.size() < count && d <= 12 * extremal_m(rank) + 4; d += 2) {
    if (cusp_vanishing_check(rank, d)) out.push_back(d);
  }
  if (out.size() < count) throw ArgumentError("not enough vanishing degrees for this rank");
  return out;
}

namespace {

ConfigProblem base_problem(int rank, int ip_bound) {
  ConfigProblem p;
  p.rank = rank;
  p.m = extremal_m(rank);
  p.min_norm = 2 * p.m;
  p.ip_bound = ip_bound;
  p.shell_count = kissing_number(rank);
  p.design_strength = design_strength_for(rank);
  p.degree_set = vanishing_degrees(rank, static_cast<std::size_t>(ip_bound) + 1);
  return p;
}

}  // namespace

ConfigProblem make_problem(int rank) {
  switch (rank) {
    case 32:
    case 48:
    case 56:
    case 72:
    case 96:
      break;
    default:
      throw ArgumentError("unsupported rank " + std::to_string(rank) +
                          " (expected 32, 48, 56, 72 or 96)");
  }
  // For x in the shell, |<x0,x>| > m would give a shorter x -/+ x0 in the class.
  ConfigProblem p = base_problem(rank, extremal_m(rank));
  if (rank == 96) {
    // x0 lives in the dual of the sublattice spanned by the shell; its norm
    // is any rational s.
    p.var = NormVariable::s();
  } else {
    p.var = NormVariable::t();
  }
  p.default_formulation = (rank == 72) ? Formulation::moment : Formulation::zonal;
  return p;
}

ConfigProblem make_oracle_problem(int rank) {
  if (rank != 8 && rank != 24) {
    throw ArgumentError("oracle systems exist for ranks 8 and 24 only");
  }
  ConfigProblem p = base_problem(rank, 2 * extremal_m(rank));
  p.var = NormVariable::s();
  p.default_formulation = Formulation::zonal;
  p.oracle_analogue = true;
  return p;
}

namespace {

// Weight of N_i in p_{2l} = sum over the shell of <x,x0>^(2l), folded by sign.
Int power_sum_weight(int i, int l) {
  if (i == 0) return l == 0 ? Int(1) : Int(0);
  return 2 * pow_int(Int(i), static_cast<unsigned long>(2 * l));
}

}  // namespace

LinearSystem build_system(const ConfigProblem& problem, Formulation formulation) {
  const int b = problem.ip_bound;
  const std::size_t size = static_cast<std::size_t>(b) + 2;
  const std::size_t rhs = size - 1;
  const char var = problem.var.name;
  LinearSystem sys{problem, formulation, PolyMatrix(size, size, var), {}};

  // N_0 + 2 sum_{i>=1} N_i = shell size.
  sys.rows.push_back({RowKind::cardinality, 0});
  for (int i = 0; i <= b; ++i) {
    sys.extended.set(0, static_cast<std::size_t>(i), UniPoly::constant(Rat(i == 0 ? 1 : 2), var));
  }
  sys.extended.set(0, rhs, UniPoly::constant(Rat(problem.shell_count), var));

  const Rat shell_norm(problem.min_norm);
  if (formulation == Formulation::moment) {
    if (problem.design_strength < 2 * (b + 1)) {
      throw ArgumentError("moment formulation at rank " + std::to_string(problem.rank) +
                          " needs a design of strength " + std::to_string(2 * (b + 1)) +
                          ", shells here are only " +
                          std::to_string(problem.design_strength) + "-designs");
    }
    for (int k = 1; k <= b + 1; ++k) {
      const std::size_t row = static_cast<std::size_t>(k);
      sys.rows.push_back({RowKind::moment, k});
      for (int i = 0; i <= b; ++i) {
        sys.extended.set(row, static_cast<std::size_t>(i),
                         UniPoly::constant(Rat(power_sum_weight(i, k)), var));
      }
      // |shell| * avg * (r s)^k with r = 2m and s = scale * var.
      const Rat c = Rat(problem.shell_count) * sphere_moment(problem.rank, k) *
                    pow_rat(shell_norm * problem.var.scale, static_cast<unsigned long>(k));
      sys.extended.set(row, rhs, UniPoly::monomial(c, static_cast<unsigned>(k), var));
    }
    return sys;
  }

  if (problem.degree_set.size() != static_cast<std::size_t>(b) + 1) {
    throw ArgumentError("degree set must have B + 1 members");
  }
  for (std::size_t r = 0; r < problem.degree_set.size(); ++r) {
    const int d = problem.degree_set[r];
    const std::size_t row = r + 1;
    sys.rows.push_back({RowKind::zonal, d});
    const PowerSumForm form = shell_sum_form(zonal_poly(problem.rank, d), shell_norm, problem.var);
    for (int i = 0; i <= b; ++i) {
      UniPoly entry(var);
      for (const auto& [l, c] : form.terms) entry += c * Rat(power_sum_weight(i, l));
      sys.extended.set(row, static_cast<std::size_t>(i), entry);
    }
    sys.extended.set(row, rhs, UniPoly(var));
  }
  return sys;
}

LinearSystem build_system(const ConfigProblem& problem) {
  return build_system(problem, problem.default_formulation);
}

std::vector<UniPoly> stated_factors(int rank) {
  switch (rank) {
    case 72:
      return {UniPoly::identity('t'),
              UniPoly::from_ints_desc({168, -2800, 17745, -50635, 54834}, 't')};
    case 96:
      return {UniPoly::identity('s'), UniPoly::from_ints_desc({1, -12}, 's'),
              UniPoly::from_ints_desc({25, -1275, 26112, -267444, 1362720, -2741760}, 's')};
    case 56:
      return {UniPoly::monomial(Rat(1), 2, 't'),
              UniPoly::from_ints_desc(
                  {8976, -76120, 104624, 533337, -972400, -1952280, 3644256}, 't')};
    default:
      return {};
  }
}

std::optional<PublishedConstant> published_constant(int rank) {
  auto pp = [](std::initializer_list<std::pair<unsigned long, unsigned long>> f) {
    Int v = 1;
    for (const auto& [p, e] : f) v *= pow_int(Int(p), e);
    return v;
  };
  switch (rank) {
    case 72:
      return PublishedConstant{pp({{2, 25}, {3, 9}, {5, 4}, {7, 2}})};
    case 96:
      return PublishedConstant{-pp({{2, 42}, {3, 15}, {5, 10}, {7, 5}, {11, 1}, {13, 1},
                                    {17, 1}, {19, 1}, {29, 1}, {47, 1}, {53, 1}, {59, 1}})};
    case 56:
      return PublishedConstant{-pp({{2, 28}, {3, 8}, {5, 3}, {7, 1}, {29, 1}, {31, 1}})};
    default:
      return std::nullopt;
  }
}

Verdict analyze(const LinearSystem& sys) {
  const ConfigProblem& p = sys.problem;
  const char var = p.var.name;
  Verdict v;
  v.rank = p.rank;
  v.formulation = sys.formulation;
  v.determinant = det_fraction_free(sys.extended);
  if (v.determinant.degree() < 1) {
    throw InvariantError("configuration determinant is constant; system is degenerate");
  }
  std::tie(v.content, v.primitive) = content_and_primitive(v.determinant);

  UniPoly rest = v.determinant;
  for (const auto& f : stated_factors(p.rank)) {
    auto q = exact_divide(rest, f);
    v.factors.push_back({f, q.has_value()});
    if (q) {
      rest = *q;
    } else {
      v.factors_ok = false;
    }
  }
  if (!v.factors.empty()) {
    if (v.factors_ok && rest.degree() == 0) {
      v.cofactor = rest;
    } else if (v.factors_ok) {
      v.factors_ok = false;
      v.cofactor = rest;
      v.notes.push_back("factor mismatch: after removing the stated factors the cofactor " +
                        rest.to_string() + " is not constant");
    } else {
      for (const auto& fc : v.factors) {
        if (!fc.divides) {
          v.notes.push_back("factor mismatch: stated factor " + fc.factor.to_string() +
                            " does not divide the determinant " + v.primitive.to_string());
        }
      }
    }
  }

  v.rational_roots = rational_roots(v.determinant);
  v.positive_real_root_count =
      sturm_count(v.determinant, ExtendedRat::at(Rat(0)), ExtendedRat::pos_inf());
  for (const auto& r : v.rational_roots) {
    if (r >= 0) v.admissible_norms.push_back(r * p.var.scale);
  }

  bool excluded = false;
  if (var == 't') {
    // Nonzero class representatives have norm 2t with integer t >= m + 1.
    for (const auto& r : v.rational_roots) {
      if (r.get_den() == 1 && r >= p.m + 1) v.blocking_roots.push_back(r);
    }
    excluded = v.blocking_roots.empty();
    const bool no_positive_real = v.positive_real_root_count == 0;
    if (excluded && !no_positive_real) {
      v.notes.push_back("determinant has " + std::to_string(v.positive_real_root_count) +
                        " positive real root(s) but no integer root t >= " +
                        std::to_string(p.m + 1) + "; the conclusion rests on integrality");
    } else if (excluded) {
      v.notes.push_back("no positive real root: every class norm 2t > " +
                        std::to_string(p.min_norm) + " makes the system inconsistent");
    } else {
      std::string roots;
      for (const auto& r : v.blocking_roots) roots += (roots.empty() ? "" : ", ") + r.get_str();
      v.notes.push_back("system is consistent at t in {" + roots +
                        "}, a norm a nontrivial minimal class representative can have");
    }
  } else {
    // Norms of dual-class representatives are arbitrary positive rationals;
    // the argument needs every admissible norm in 2Z.
    for (const auto& r : v.rational_roots) {
      if (r > 0 && !(r.get_den() == 1 && mpz_even_p(r.get_num_mpz_t()))) {
        v.blocking_roots.push_back(r);
      }
    }
    excluded = v.blocking_roots.empty();
    if (excluded) {
      std::string norms;
      for (const auto& r : v.admissible_norms) norms += (norms.empty() ? "" : ", ") + r.get_str();
      v.notes.push_back(
          "admissible norms {" + norms +
          "} are even integers, so every class of the dual of the sublattice generated by the "
          "minimal vectors has even norm; that dual is then even, hence integral, forcing "
          "index 1 (not re-proved here)");
    }
  }

  v.conclusion = (excluded && v.factors_ok) ? Conclusion::generated_by_minimal_vectors
                                            : Conclusion::inconclusive;
  return v;
}

std::optional<std::vector<Rat>> solve_at(const LinearSystem& sys, const Rat& value) {
  return solve_overdetermined(sys.extended.evaluate(value));
}

}  // namespace unilat
