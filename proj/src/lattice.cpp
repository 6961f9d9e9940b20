#include "unilat/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <map>
#include <random>
#include <thread>

#include "unilat/errors.hpp"
#include "unilat/golay.hpp"
#include "unilat/polymatrix.hpp"

namespace unilat {

GramLattice::GramLattice(std::string name, int rank, std::vector<Rat> gram)
    : name_(std::move(name)), rank_(rank), gram_(std::move(gram)) {
  const auto n = static_cast<std::size_t>(rank_);
  if (rank_ <= 0 || gram_.size() != n * n) throw DimensionError("Gram matrix has the wrong size");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gram_[i * n + j] != gram_[j * n + i]) throw ArgumentError("Gram matrix is not symmetric");

  pivots_.assign(n, Rat(0));
  upper_.assign(n * n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    Rat d = gram_[i * n + i];
    for (std::size_t k = 0; k < i; ++k) d -= upper_[k * n + i] * upper_[k * n + i] * pivots_[k];
    if (d <= 0) throw ArgumentError("Gram matrix of " + name_ + " is not positive definite");
    pivots_[i] = d;
    upper_[i * n + i] = 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      Rat v = gram_[i * n + j];
      for (std::size_t k = 0; k < i; ++k) v -= upper_[k * n + i] * upper_[k * n + j] * pivots_[k];
      upper_[i * n + j] = v / d;
    }
  }
}

Rat GramLattice::determinant() const {
  Rat det = 1;
  for (const auto& d : pivots_) det *= d;
  return det;
}

bool GramLattice::is_integral() const {
  return std::all_of(gram_.begin(), gram_.end(), [](const Rat& x) { return x.get_den() == 1; });
}

bool GramLattice::is_even() const {
  if (!is_integral()) return false;
  for (int i = 0; i < rank_; ++i)
    if (!mpz_even_p((*this)(i, i).get_num_mpz_t())) return false;
  return true;
}

Rat GramLattice::inner(std::span<const long long> x, std::span<const long long> y) const {
  const auto n = static_cast<std::size_t>(rank_);
  if (x.size() != n || y.size() != n) throw DimensionError("coordinate vector has the wrong length");
  Rat total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    Rat row = 0;
    for (std::size_t j = 0; j < n; ++j) row += gram_[i * n + j] * Rat(static_cast<long>(y[j]));
    total += Rat(static_cast<long>(x[i])) * row;
  }
  return total;
}

GramLattice e8() {
  // Cartan matrix, Bourbaki numbering: chain 1-3-4-5-6-7-8 with 2 on 4.
  const int edges[][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
  std::vector<Rat> g(64, Rat(0));
  for (int i = 0; i < 8; ++i) g[static_cast<std::size_t>(i * 8 + i)] = 2;
  for (const auto& e : edges) {
    const int a = e[0] - 1;
    const int b = e[1] - 1;
    g[static_cast<std::size_t>(a * 8 + b)] = -1;
    g[static_cast<std::size_t>(b * 8 + a)] = -1;
  }
  GramLattice l("e8", 8, std::move(g));
  if (!l.is_even() || l.determinant() != 1) throw InvariantError("E8 Gram is not even unimodular");
  return l;
}

namespace {

using IntRow = std::vector<Int>;

// Row-style Hermite normal form of the lattice spanned by `rows`.
std::vector<IntRow> hermite_basis(std::vector<IntRow> rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    while (true) {
      std::size_t pivot = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (pivot == rows.size() || abs(rows[i][c]) < abs(rows[pivot][c])) pivot = i;
      }
      if (pivot == rows.size()) break;
      std::swap(rows[r], rows[pivot]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (r < rows.size() && rows[r][c] != 0) {
      if (rows[r][c] < 0)
        for (auto& x : rows[r]) x = -x;
      for (std::size_t i = 0; i < r; ++i) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[r][j];
      }
      ++r;
    }
  }
  rows.resize(r);
  return rows;
}

GramLattice build_leech() {
  const BinaryCode golay = extended_golay_code();
  constexpr std::size_t n = 24;
  std::vector<IntRow> gens;
  for (std::uint32_t word : golay.generator) {
    IntRow v(n, Int(0));
    for (std::size_t i = 0; i < n; ++i)
      if (word & (1U << i)) v[i] = 2;
    gens.push_back(std::move(v));
  }
  for (std::size_t j = 1; j < n; ++j) {
    IntRow v(n, Int(0));
    v[0] = 4;
    v[j] = -4;
    gens.push_back(std::move(v));
  }
  {
    IntRow v(n, Int(0));
    v[0] = 8;
    gens.push_back(std::move(v));
  }
  {
    IntRow v(n, Int(1));
    v[0] = -3;
    gens.push_back(std::move(v));
  }
  const auto basis = hermite_basis(std::move(gens), n);
  if (basis.size() != n) throw InvariantError("Leech generators do not span a rank-24 lattice");

  std::vector<Rat> gram(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Int dot = 0;
      for (std::size_t k = 0; k < n; ++k) dot += basis[i][k] * basis[j][k];
      gram[i * n + j] = make_rat(Int(dot), Int(8));
    }
  }
  GramLattice l("leech", 24, std::move(gram));
  if (!l.is_even()) throw InvariantError("Leech Gram is not even");
  if (l.determinant() != 1) throw InvariantError("Leech Gram is not unimodular");
  if (enumerate_shell(l, Rat(2)).size() != 0) throw InvariantError("Leech lattice has roots");
  return l;
}

// Floating-point copy of the LDL^T data plus the exact integer Gram.
struct SearchData {
  int n = 0;
  std::vector<long long> gram;
  std::vector<double> pivots;
  std::vector<double> upper;
};

SearchData search_data(const GramLattice& lattice) {
  if (!lattice.is_integral()) throw ArgumentError("enumeration needs an integral Gram matrix");
  SearchData d;
  d.n = lattice.rank();
  const auto n = static_cast<std::size_t>(d.n);
  d.gram.resize(n * n);
  for (int i = 0; i < d.n; ++i)
    for (int j = 0; j < d.n; ++j) {
      const Int& v = lattice(i, j).get_num();
      if (!v.fits_slong_p()) throw ArgumentError("Gram entry too large for enumeration");
      d.gram[static_cast<std::size_t>(i * d.n + j)] = v.get_si();
    }
  for (const auto& p : lattice.ldl_pivots()) d.pivots.push_back(p.get_d());
  for (const auto& u : lattice.ldl_upper()) d.upper.push_back(u.get_d());
  return d;
}

// Depth-first Fincke-Pohst search. Floats only prune; the leaf norm is
// recomputed exactly from the integer Gram.
class ShortVectorSearch {
 public:
  ShortVectorSearch(const SearchData& d, long long bound)
      : d_(d), bound_(bound), limit_(static_cast<double>(bound) + kSlack),
        x_(static_cast<std::size_t>(d.n), 0) {}

  std::vector<std::int32_t> values_at_top() {
    std::vector<std::int32_t> out;
    const int top = d_.n - 1;
    for_each_value(top, 0.0, [&](std::int32_t v, double) { out.push_back(v); });
    return out;
  }

  template <class Visit>
  void run_with_top(std::int32_t top_value, Visit& visit) {
    const int top = d_.n - 1;
    const auto t = static_cast<std::size_t>(top);
    const double y = top_value;
    const double used = d_.pivots[t] * y * y;
    x_[t] = top_value;
    const long long exact = d_.gram[t * static_cast<std::size_t>(d_.n) + t] * top_value * top_value;
    if (top == 0) {
      if (exact > 0 && exact <= bound_) visit(std::span<const std::int32_t>(x_), exact);
      return;
    }
    descend(top - 1, used, exact, visit);
  }

 private:
  static constexpr double kSlack = 1e-6;

  double center(int i) const {
    const auto n = static_cast<std::size_t>(d_.n);
    double c = 0;
    for (int j = i + 1; j < d_.n; ++j) c -= d_.upper[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] * x_[static_cast<std::size_t>(j)];
    return c;
  }

  template <class Fn>
  void for_each_value(int i, double used, Fn&& fn) {
    const double remaining = limit_ - used;
    if (remaining < 0) return;
    const double c = center(i);
    const double radius = std::sqrt(remaining / d_.pivots[static_cast<std::size_t>(i)]);
    const auto lo = static_cast<std::int32_t>(std::ceil(c - radius));
    const auto hi = static_cast<std::int32_t>(std::floor(c + radius));
    for (std::int32_t v = lo; v <= hi; ++v) {
      const double y = v - c;
      const double next = used + d_.pivots[static_cast<std::size_t>(i)] * y * y;
      if (next > limit_) continue;
      fn(v, next);
    }
  }

  template <class Visit>
  void descend(int i, double used, long long exact_above, Visit& visit) {
    const auto n = static_cast<std::size_t>(d_.n);
    const auto ui = static_cast<std::size_t>(i);
    long long h = 0;
    for (std::size_t j = ui + 1; j < n; ++j) h += d_.gram[ui * n + j] * x_[j];
    const long long gii = d_.gram[ui * n + ui];
    for_each_value(i, used, [&](std::int32_t v, double next) {
      x_[ui] = v;
      const long long exact = exact_above + gii * v * v + 2 * v * h;
      if (i == 0) {
        if (exact > 0 && exact <= bound_) visit(std::span<const std::int32_t>(x_), exact);
      } else {
        descend(i - 1, next, exact, visit);
      }
    });
    x_[ui] = 0;
  }

  const SearchData& d_;
  long long bound_;
  double limit_;
  std::vector<std::int32_t> x_;
};

// Runs make_sink() once per worker, feeds each worker a share of the top
// coordinate values and returns the sinks.
template <class Sink, class MakeSink>
std::vector<Sink> run_partitioned(const SearchData& d, long long bound, MakeSink make_sink) {
  std::vector<std::int32_t> tops = ShortVectorSearch(d, bound).values_at_top();
  const std::size_t workers = std::max<std::size_t>(
      1, std::min<std::size_t>(tops.size(), std::max(1U, std::thread::hardware_concurrency())));
  std::vector<Sink> sinks;
  for (std::size_t w = 0; w < workers; ++w) sinks.push_back(make_sink());
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      ShortVectorSearch search(d, bound);
      for (std::size_t k = w; k < tops.size(); k += workers) search.run_with_top(tops[k], sinks[w]);
    }));
  }
  for (auto& j : jobs) j.get();
  return sinks;
}

struct CollectSink {
  long long target = 0;
  std::vector<std::int32_t> coords;
  void operator()(std::span<const std::int32_t> x, long long norm) {
    if (norm == target) coords.insert(coords.end(), x.begin(), x.end());
  }
};

struct CountSink {
  std::vector<unsigned long long> counts;
  void operator()(std::span<const std::int32_t>, long long norm) {
    ++counts[static_cast<std::size_t>(norm)];
  }
};

struct ForwardSink {
  const std::function<void(std::span<const std::int32_t>, long long)>* fn;
  void operator()(std::span<const std::int32_t> x, long long norm) { (*fn)(x, norm); }
};

}  // namespace

GramLattice leech() {
  static const GramLattice cached = build_leech();
  return cached;
}

void enumerate_short_vectors(const GramLattice& lattice, long long bound,
                             const std::function<void(std::span<const std::int32_t>, long long)>& visit) {
  if (bound <= 0) return;
  const SearchData d = search_data(lattice);
  run_partitioned<ForwardSink>(d, bound, [&] { return ForwardSink{&visit}; });
}

ShellVectors enumerate_shell(const GramLattice& lattice, const Rat& norm) {
  if (norm <= 0) throw ArgumentError("enumerate_shell: norm must be positive");
  ShellVectors shell;
  shell.norm = norm;
  shell.dim = lattice.rank();
  const SearchData d = search_data(lattice);
  if (norm.get_den() != 1) return shell;
  if (!norm.get_num().fits_slong_p()) throw ArgumentError("enumerate_shell: norm too large");
  const long long target = norm.get_num().get_si();
  auto sinks = run_partitioned<CollectSink>(d, target, [&] { return CollectSink{target, {}}; });

  const auto dim = static_cast<std::size_t>(shell.dim);
  std::vector<std::vector<std::int32_t>> rows;
  for (auto& s : sinks) {
    for (std::size_t k = 0; k < s.coords.size(); k += dim) {
      rows.emplace_back(s.coords.begin() + static_cast<std::ptrdiff_t>(k),
                        s.coords.begin() + static_cast<std::ptrdiff_t>(k + dim));
    }
  }
  std::sort(rows.begin(), rows.end());
  shell.coords.reserve(rows.size() * dim);
  for (const auto& r : rows) shell.coords.insert(shell.coords.end(), r.begin(), r.end());
  return shell;
}

QSeries theta_by_enumeration(const GramLattice& lattice, int max_norm) {
  if (max_norm < 2) throw ArgumentError("theta_by_enumeration: max_norm must be >= 2");
  if (!lattice.is_even()) throw ArgumentError("theta_by_enumeration: lattice must be even");
  const SearchData d = search_data(lattice);
  const auto sinks = run_partitioned<CountSink>(d, max_norm, [&] {
    return CountSink{std::vector<unsigned long long>(static_cast<std::size_t>(max_norm) + 1, 0)};
  });
  QSeries theta(static_cast<std::size_t>(max_norm / 2) + 1);
  theta[0] = 1;
  for (const auto& s : sinks) {
    for (std::size_t norm = 1; norm < s.counts.size(); ++norm) {
      if (s.counts[norm] == 0) continue;
      if (norm % 2 != 0) throw InvariantError("odd norm found in an even lattice");
      theta[norm / 2] += Rat(to_int(s.counts[norm]));
    }
  }
  return theta;
}

Int NProfile::folded_total() const {
  Int total = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) total += (i == 0 ? 1 : 2) * counts[i];
  return total;
}

namespace {

std::vector<long long> gram_times(const SearchData& d, std::span<const long long> v) {
  const auto n = static_cast<std::size_t>(d.n);
  if (v.size() != n) throw DimensionError("probe has the wrong length");
  std::vector<long long> w(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w[i] += d.gram[i * n + j] * v[j];
  return w;
}

long long dot(std::span<const std::int32_t> x, const std::vector<long long>& w) {
  long long s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += static_cast<long long>(x[i]) * w[i];
  return s;
}

}  // namespace

NProfile n_profile(const ShellVectors& shell, const GramLattice& lattice,
                   std::span<const long long> x0) {
  const SearchData d = search_data(lattice);
  const auto w = gram_times(d, x0);
  const Rat x0_norm = lattice.inner(x0, x0);
  const Rat bound = shell.norm * x0_norm;
  NProfile prof;
  prof.x0.assign(x0.begin(), x0.end());
  std::map<long long, unsigned long long> hist;
  for (std::size_t k = 0; k < shell.size(); ++k) {
    const long long ip = dot(shell[k], w);
    if (Rat(to_int(ip) * to_int(ip)) > bound) {
      throw InvariantError("Cauchy-Schwarz violated in n_profile");
    }
    ++hist[ip < 0 ? -ip : ip];
  }
  const long long top = hist.empty() ? 0 : hist.rbegin()->first;
  prof.counts.assign(static_cast<std::size_t>(top) + 1, Int(0));
  for (const auto& [i, c] : hist) {
    // +-i both land in bucket |i|; N_i counts one sign.
    const Int count = to_int(c);
    prof.counts[static_cast<std::size_t>(i)] = (i == 0) ? count : Int(count / 2);
  }
  return prof;
}

std::vector<Probe> design_probes(const ShellVectors& shell, int count, std::uint64_t seed) {
  const auto n = static_cast<std::size_t>(shell.dim);
  std::vector<Probe> probes;
  probes.push_back({std::vector<long long>(n, 1), 1, "all-ones"});
  if (shell.size() > 0) {
    const auto v = shell[0];
    probes.push_back({std::vector<long long>(v.begin(), v.end()), 1, "shell[0]"});
  }
  // Plain modular reduction keeps the stream identical across standard libraries.
  std::mt19937_64 rng(seed);
  for (int k = 0; k < count; ++k) {
    Probe p;
    p.numerators.resize(n);
    for (auto& x : p.numerators) x = static_cast<long long>(rng() % 195) - 97;
    p.denominator = static_cast<long long>(rng() % 97) + 1;
    p.label = "random#" + std::to_string(k);
    probes.push_back(std::move(p));
  }
  return probes;
}

namespace {

struct ProbeStats {
  std::map<long long, unsigned long long> hist;  // numerator of <x,x0> -> count
  Rat s;                                          // <x0,x0>
  long long den = 1;

  Rat power_sum(int e) const {
    Int total = 0;
    for (const auto& [u, c] : hist) {
      total += pow_int(to_int(u), static_cast<unsigned long>(e)) * to_int(c);
    }
    return Rat(total) / Rat(pow_int(to_int(den), static_cast<unsigned long>(e)));
  }
};

ProbeStats probe_stats(const ShellVectors& shell, const SearchData& d, const GramLattice& lattice,
                       const Probe& probe) {
  if (probe.denominator <= 0) throw ArgumentError("probe denominator must be positive");
  ProbeStats st;
  st.den = probe.denominator;
  const auto w = gram_times(d, probe.numerators);
  for (std::size_t k = 0; k < shell.size(); ++k) ++st.hist[dot(shell[k], w)];
  st.s = lattice.inner(probe.numerators, probe.numerators) /
         Rat(pow_int(to_int(probe.denominator), 2));
  return st;
}

Rat zonal_sum(const ProbeStats& st, const ZonalPoly& p, const Rat& shell_norm) {
  Rat total = 0;
  const Rat rs = shell_norm * st.s;
  for (std::size_t j = 0; j < p.coeffs.size(); ++j) {
    if (p.coeffs[j] == 0) continue;
    const int e = p.degree - 2 * static_cast<int>(j);
    total += p.coeffs[j] * pow_rat(rs, static_cast<unsigned long>(j)) * st.power_sum(e);
  }
  return total;
}

}  // namespace

Rat zonal_shell_sum(const ShellVectors& shell, const GramLattice& lattice, const ZonalPoly& p,
                    const Probe& probe) {
  const SearchData d = search_data(lattice);
  return zonal_sum(probe_stats(shell, d, lattice, probe), p, shell.norm);
}

DesignReport design_sums(const ShellVectors& shell, const GramLattice& lattice, int strength,
                         int probes, std::uint64_t seed) {
  if (probes < 1) throw ArgumentError("design check needs at least one random probe");
  const SearchData d = search_data(lattice);
  DesignReport report;
  for (const auto& probe : design_probes(shell, probes, seed)) {
    const ProbeStats st = probe_stats(shell, d, lattice, probe);
    for (int deg = 2; deg <= strength; deg += 2) {
      Rat sum = zonal_sum(st, zonal_poly(lattice.rank(), deg), shell.norm);
      if (sum != 0) report.passed = false;
      report.sums.push_back({probe.label, deg, sum});
    }
  }
  return report;
}

bool design_check(const ShellVectors& shell, const GramLattice& lattice, int strength, int probes,
                  std::uint64_t seed) {
  return design_sums(shell, lattice, strength, probes, seed).passed;
}

}  // namespace unilat
