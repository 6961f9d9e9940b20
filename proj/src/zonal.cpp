#include "unilat/zonal.hpp"

#include <map>
#include <tuple>

#include "unilat/errors.hpp"

namespace unilat {

Rat ZonalPoly::operator()(const Rat& u, const Rat& r, const Rat& s) const {
  Rat total = 0;
  const Rat rs = r * s;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    total += coeffs[j] * pow_rat(u, static_cast<unsigned long>(degree - 2 * static_cast<int>(j))) *
             pow_rat(rs, static_cast<unsigned long>(j));
  }
  return total;
}

namespace {

// Coefficient of u^a r^(b-1) s^(b) in the Laplacian of u^a r^b s^b, and of
// u^(a-2) r^b s^(b+1); see laplacian() for the formula.
Rat radial_factor(int n, int a, int b) {
  return Rat(2 * b * (n + 2 * b - 2) + 4 * a * b);
}

}  // namespace

ZonalPoly zonal_poly(int n, int d) {
  if (n < 2) throw ArgumentError("zonal_poly: dimension must be >= 2");
  if (d < 2 || d % 2 != 0) {
    throw ArgumentError("zonal_poly: degree must be even and >= 2, got " + std::to_string(d));
  }
  // Harmonicity pairs term j-1 (through d^2/du^2) with term j (through the
  // r-derivatives); both land on u^(d-2j) r^(j-1) s^j.
  ZonalPoly p{n, d, {Rat(1)}};
  for (int j = 1; j <= d / 2; ++j) {
    const int a_prev = d - 2 * j + 2;
    const Rat from_prev = Rat(a_prev * (a_prev - 1)) * p.coeffs.back();
    p.coeffs.push_back(-from_prev / radial_factor(n, d - 2 * j, j));
  }
  return p;
}

std::vector<InvariantTerm> laplacian(const ZonalPoly& p) {
  // Delta(u^a r^b) = a(a-1) s u^(a-2) r^b + (2b(n+2b-2) + 4ab) u^a r^(b-1)
  std::map<std::tuple<int, int, int>, Rat> acc;
  for (std::size_t j = 0; j < p.coeffs.size(); ++j) {
    const Rat& c = p.coeffs[j];
    if (c == 0) continue;
    const int a = p.degree - 2 * static_cast<int>(j);
    const int b = static_cast<int>(j);
    // The (r s)^j factor carries s^j along unchanged.
    if (a >= 2) acc[{a - 2, b, b + 1}] += c * Rat(a * (a - 1));
    if (b >= 1) acc[{a, b - 1, b}] += c * radial_factor(p.dimension, a, b);
  }
  std::vector<InvariantTerm> out;
  for (const auto& [key, c] : acc) {
    if (c == 0) continue;
    out.push_back({c, std::get<0>(key), std::get<1>(key), std::get<2>(key)});
  }
  return out;
}

bool laplacian_is_zero(const ZonalPoly& p) { return laplacian(p).empty(); }

Rat sphere_moment(int n, int k) {
  if (n < 1 || k < 0) throw ArgumentError("sphere_moment: need n >= 1, k >= 0");
  Rat m = 1;
  for (int i = 1; i <= k; ++i) m *= make_rat(Int(2 * i - 1), Int(n + 2 * i - 2));
  return m;
}

UniPoly PowerSumForm::coeff(int l, char var) const {
  for (const auto& [power, c] : terms)
    if (power == l) return c;
  return UniPoly(var);
}

PowerSumForm shell_sum_form(const ZonalPoly& p, const Rat& shell_norm, const NormVariable& var) {
  if (p.degree % 2 != 0) throw ArgumentError("shell_sum_form: odd-degree shell sums vanish");
  PowerSumForm form;
  for (std::size_t j = 0; j < p.coeffs.size(); ++j) {
    const int l = (p.degree - 2 * static_cast<int>(j)) / 2;
    // a_j (r s)^j with r = shell_norm, s = scale * var.
    const Rat c = p.coeffs[j] * pow_rat(shell_norm * var.scale, static_cast<unsigned long>(j));
    form.terms.emplace_back(l, UniPoly::monomial(c, static_cast<unsigned>(j), var.name));
  }
  return form;
}

}  // namespace unilat
