#include "unilat/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "unilat/errors.hpp"

namespace unilat {

UniPoly::UniPoly(std::vector<Rat> coeffs, char var)
    : coeffs_(std::move(coeffs)), var_(var) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

UniPoly UniPoly::constant(const Rat& c, char var) {
  return UniPoly(std::vector<Rat>{c}, var);
}

UniPoly UniPoly::monomial(const Rat& c, unsigned degree, char var) {
  std::vector<Rat> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v), var);
}

UniPoly UniPoly::from_ints_desc(std::initializer_list<long long> desc, char var) {
  std::vector<Rat> v;
  v.reserve(desc.size());
  for (auto it = std::rbegin(desc); it != std::rend(desc); ++it) {
    v.emplace_back(Int(static_cast<long>(*it)));
  }
  return UniPoly(std::move(v), var);
}

Rat UniPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rat(0);
}

Rat UniPoly::leading() const { return is_zero() ? Rat(0) : coeffs_.back(); }

Rat UniPoly::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly(var_);
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
  return UniPoly(std::move(d), var_);
}

UniPoly UniPoly::with_var(char var) const {
  UniPoly out = *this;
  out.var_ = var;
  return out;
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

char UniPoly::check_var(const UniPoly& rhs) const {
  if (var_ == rhs.var_) return var_;
  if (rhs.degree() <= 0) return var_;
  if (degree() <= 0) return rhs.var_;
  throw DimensionError(std::string("cannot combine polynomials in '") + var_ +
                       "' and '" + rhs.var_ + "'");
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  var_ = check_var(rhs);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  var_ = check_var(rhs);
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
  var_ = check_var(rhs);
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rat> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
  if (a.coeffs_ != b.coeffs_) return false;
  return a.degree() <= 0 || a.var_ == b.var_;
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << var_;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& p, const UniPoly& d) {
  if (d.is_zero()) throw UndefinedError("division by the zero polynomial");
  char var = p.degree() > 0 ? p.var() : d.var();
  if (p.degree() > 0 && d.degree() > 0 && p.var() != d.var()) {
    throw DimensionError("divmod: variable mismatch");
  }
  std::vector<Rat> rem = p.coeffs();
  const int dd = d.degree();
  if (p.degree() < dd) return {UniPoly(var), p.with_var(var)};
  std::vector<Rat> quot(static_cast<std::size_t>(p.degree() - dd + 1));
  const Rat lead = d.leading();
  for (int i = p.degree(); i >= dd; --i) {
    const Rat& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    Rat q = top / lead;
    quot[static_cast<std::size_t>(i - dd)] = q;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(i - dd + j)] -= q * d.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  return {UniPoly(std::move(quot), var), UniPoly(std::move(rem), var)};
}

std::optional<UniPoly> exact_divide(const UniPoly& p, const UniPoly& d) {
  auto [q, r] = divmod(p, d);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

std::pair<Rat, UniPoly> content_and_primitive(const UniPoly& p) {
  if (p.is_zero()) throw UndefinedError("content of the zero polynomial is undefined");
  Int num_gcd = 0;
  Int den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    if (c == 0) continue;
    num_gcd = gcd(num_gcd, c.get_num());
    den_lcm = lcm(den_lcm, c.get_den());
  }
  Rat content = make_rat(num_gcd, den_lcm);
  if (p.leading() < 0) content = -content;
  UniPoly prim = p * Rat(1 / content);
  return {content, prim};
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x * Rat(1 / x.leading());
}

UniPoly square_free_part(const UniPoly& p) {
  if (p.degree() <= 0) return p;
  UniPoly g = poly_gcd(p, p.derivative());
  return divmod(p, g).first;
}

unsigned zero_root_multiplicity(const UniPoly& p) {
  if (p.is_zero()) throw UndefinedError("zero polynomial");
  unsigned k = 0;
  while (p.coeffs()[k] == 0) ++k;
  return k;
}

}  // namespace unilat
