#include "unilat/qseries.hpp"

#include <algorithm>
#include <sstream>

#include "unilat/errors.hpp"
#include "unilat/linsolve.hpp"

namespace unilat {

QSeries QSeries::truncated(std::size_t order) const {
  std::vector<Rat> c(coeffs_.begin(),
                     coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order, coeffs_.size())));
  return QSeries(std::move(c));
}

std::size_t QSeries::valuation() const {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
  return k;
}

bool QSeries::has_integer_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rat& c) { return c.get_den() == 1; });
}

QSeries& QSeries::operator+=(const QSeries& rhs) {
  coeffs_.resize(std::min(order(), rhs.order()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs) {
  coeffs_.resize(std::min(order(), rhs.order()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

QSeries& QSeries::operator*=(const Rat& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  QSeries out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

QSeries QSeries::pow(unsigned e) const {
  QSeries out(order());
  if (order() > 0) out.coeffs_[0] = 1;
  QSeries base = *this;
  while (e > 0) {
    if (e & 1U) out = out * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return out;
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rat& c = coeffs_[k];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    Rat mag = abs(c);
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'q';
    if (k > 1) os << '^' << k;
  }
  if (first) os << '0';
  os << " + O(q^" << coeffs_.size() << ')';
  return os.str();
}

Int divisor_sigma(unsigned long n, unsigned k) {
  Int total = 0;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    total += pow_int(Int(d), k);
    if (d != n / d) total += pow_int(Int(n / d), k);
  }
  return total;
}

QSeries eisenstein(int weight, std::size_t order) {
  if (order == 0) throw ArgumentError("eisenstein: order must be >= 1");
  long factor = 0;
  unsigned power = 0;
  switch (weight) {
    case 4:
      factor = 240;
      power = 3;
      break;
    case 6:
      factor = -504;
      power = 5;
      break;
    default:
      throw ArgumentError("eisenstein: only weights 4 and 6 are supported");
  }
  QSeries e(order);
  e[0] = 1;
  for (std::size_t n = 1; n < order; ++n) e[n] = Rat(factor * divisor_sigma(n, power));
  return e;
}

QSeries delta_form(std::size_t order) {
  QSeries num = eisenstein(4, order).pow(3) - eisenstein(6, order).pow(2);
  for (std::size_t k = 0; k < num.order(); ++k) {
    if (!mpz_divisible_ui_p(num[k].get_num_mpz_t(), 1728)) {
      throw InvariantError("E4^3 - E6^2 coefficient not divisible by 1728");
    }
  }
  return num * Rat(1, 1728);
}

int dim_M(int k) {
  if (k < 0 || k % 2 != 0) return 0;
  if (k % 12 == 2) return k / 12;
  return k / 12 + 1;
}

FormSpace form_space(int weight, std::size_t order) {
  FormSpace fs;
  fs.weight = weight;
  fs.dimension = dim_M(weight);
  if (weight < 0 || weight % 2 != 0) return fs;
  const QSeries e4 = eisenstein(4, order);
  const QSeries e6 = eisenstein(6, order);
  for (int a = weight / 4; a >= 0; --a) {
    const int rest = weight - 4 * a;
    if (rest % 6 != 0) continue;
    const int b = rest / 6;
    fs.exponents.emplace_back(a, b);
    fs.basis.push_back(e4.pow(static_cast<unsigned>(a)) * e6.pow(static_cast<unsigned>(b)));
  }
  return fs;
}

int extremal_m(int rank) { return rank / 24 + 1; }

QSeries extremal_theta(int rank, std::size_t order) {
  if (rank <= 0 || rank % 8 != 0) {
    throw ArgumentError("extremal_theta: rank must be a positive multiple of 8, got " +
                        std::to_string(rank));
  }
  const int m = extremal_m(rank);
  if (order <= static_cast<std::size_t>(m)) {
    throw ArgumentError("extremal_theta: order must exceed m = " + std::to_string(m));
  }
  const FormSpace fs = form_space(rank / 2, order);
  const std::size_t dim = fs.basis.size();
  if (static_cast<int>(dim) != fs.dimension || fs.dimension != m) {
    throw InvariantError("extremal_theta: monomial basis has unexpected size");
  }
  // Conditions a(0) = 1, a(1..m-1) = 0 on the coefficients of the basis.
  RatMatrix sys(static_cast<std::size_t>(m), dim + 1);
  for (std::size_t k = 0; k < static_cast<std::size_t>(m); ++k) {
    for (std::size_t j = 0; j < dim; ++j) sys(k, j) = fs.basis[j][k];
    sys(k, dim) = (k == 0) ? 1 : 0;
  }
  auto x = solve_overdetermined(sys);
  if (!x) throw InvariantError("extremal_theta: conditions are inconsistent");
  QSeries theta(order);
  for (std::size_t j = 0; j < dim; ++j) theta += fs.basis[j] * (*x)[j];
  return theta;
}

Int kissing_number(int rank) {
  const int m = extremal_m(rank);
  const QSeries theta = extremal_theta(rank, static_cast<std::size_t>(m) + 1);
  const Rat& c = theta[static_cast<std::size_t>(m)];
  if (c.get_den() != 1) throw InvariantError("kissing number is not an integer");
  return c.get_num();
}

bool cusp_vanishing_check(int rank, int degree) {
  const int m = extremal_m(rank);
  return dim_M(rank / 2 + degree - 12 * m) == 0;
}

}  // namespace unilat
