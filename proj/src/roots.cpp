#include "unilat/roots.hpp"

#include <algorithm>
#include <set>

#include "unilat/errors.hpp"

namespace unilat {

std::vector<Int> positive_divisors(const Int& n_in) {
  if (n_in == 0) throw ArgumentError("divisors of zero");
  Int n = abs(n_in);
  std::vector<std::pair<Int, unsigned>> factors;
  Int d = 2;
  constexpr unsigned long kTrialLimit = 20'000'000;
  unsigned long steps = 0;
  while (d * d <= n) {
    if (++steps > kTrialLimit) {
      if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0) {
        throw ArgumentError("cannot factor " + n.get_str() + " by trial division");
      }
      break;
    }
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      unsigned e = 0;
      while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
        n /= d;
        ++e;
      }
      factors.emplace_back(d, e);
    }
    d += (d == 2) ? 1 : 2;
  }
  if (n > 1) factors.emplace_back(n, 1);

  std::vector<Int> divs{Int(1)};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divs.size();
    Int pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

bool operator<(const ExtendedRat& a, const ExtendedRat& b) {
  using K = ExtendedRat::Kind;
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  return a.kind == K::finite && a.value < b.value;
}

namespace {

UniPoly strip_zero_roots(const UniPoly& p) {
  const unsigned k = zero_root_multiplicity(p);
  std::vector<Rat> c(p.coeffs().begin() + k, p.coeffs().end());
  return UniPoly(std::move(c), p.var());
}

}  // namespace

std::vector<Rat> rational_root_candidates(const UniPoly& p) {
  if (p.is_zero()) throw UndefinedError("rational roots of the zero polynomial");
  UniPoly q = content_and_primitive(strip_zero_roots(p)).second;
  if (q.degree() <= 0) return {};
  const auto num_divs = positive_divisors(q.coeff(0).get_num());
  const auto den_divs = positive_divisors(q.leading().get_num());
  std::set<Rat> out;
  for (const auto& a : num_divs) {
    for (const auto& b : den_divs) {
      Rat c = make_rat(a, b);
      out.insert(c);
      out.insert(-c);
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Rat> rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw UndefinedError("rational roots of the zero polynomial");
  std::vector<Rat> roots;
  if (zero_root_multiplicity(p) > 0) roots.emplace_back(0);
  UniPoly q = strip_zero_roots(p);
  for (const auto& c : rational_root_candidates(q)) {
    if (q(c) == 0) roots.push_back(c);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  if (p.is_zero()) throw UndefinedError("Sturm sequence of the zero polynomial");
  // Positive rescaling keeps every sign evaluation intact.
  auto normalize = [](const UniPoly& f) {
    if (f.is_zero()) return f;
    Rat c = content_and_primitive(f).first;
    return f * Rat(1 / abs(c));
  };
  std::vector<UniPoly> seq{normalize(p)};
  if (p.degree() <= 0) return seq;
  seq.push_back(normalize(p.derivative()));
  while (seq.back().degree() > 0) {
    UniPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(normalize(-r));
  }
  return seq;
}

namespace {

int sign_at(const UniPoly& f, const ExtendedRat& x) {
  using K = ExtendedRat::Kind;
  switch (x.kind) {
    case K::pos_infinity:
      return sgn(f.leading());
    case K::neg_infinity:
      return (f.degree() % 2 == 0) ? sgn(f.leading()) : -sgn(f.leading());
    case K::finite:
      break;
  }
  return sgn(f(x.value));
}

int sign_variations(const std::vector<UniPoly>& seq, const ExtendedRat& x) {
  int changes = 0;
  int last = 0;
  for (const auto& f : seq) {
    int s = sign_at(f, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int sturm_count(const UniPoly& p, const ExtendedRat& lo, const ExtendedRat& hi) {
  if (p.is_zero()) throw UndefinedError("Sturm count of the zero polynomial");
  if (!(lo < hi)) throw ArgumentError("sturm_count requires lo < hi");
  UniPoly q = square_free_part(p);
  // Roots sitting exactly on a finite endpoint are outside the open interval.
  for (const ExtendedRat* end : {&lo, &hi}) {
    if (end->is_finite() && q.degree() > 0 && q(end->value) == 0) {
      UniPoly lin({-end->value, Rat(1)}, q.var());
      q = divmod(q, lin).first;
    }
  }
  if (q.degree() <= 0) return 0;
  auto seq = sturm_sequence(q);
  return sign_variations(seq, lo) - sign_variations(seq, hi);
}

}  // namespace unilat
