#include "twisted/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <tuple>

#include "twisted/error.hpp"

namespace twisted {

int mobius(std::uint64_t n) {
  if (n == 0) throw InputError("mobius is defined for n >= 1");
  int result = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw InputError("divisors are defined for n >= 1");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool ZetaForm::is_rational() const {
  return std::all_of(factors.begin(), factors.end(),
                     [](const CyclotomicFactor& f) { return f.exponent.get_den() == 1; });
}

PowerSeries ZetaForm::expand(std::size_t order) const {
  PowerSeries result = PowerSeries::one(order);
  for (const auto& f : polynomials) {
    PowerSeries p(order);
    for (std::size_t i = 0; i < f.poly.coeffs.size() && i <= order; ++i) p[i] = f.poly.coeffs[i];
    if (f.exponent < 0) p = p.reciprocal();
    for (long k = 0; k < std::labs(f.exponent); ++k) result = result * p;
  }
  for (const auto& f : factors) result = result * binomial_factor(f.d, f.exponent, order);
  return result;
}

namespace {

std::string poly_factor(const IntPoly& p, long e) {
  std::string s = "(" + to_string(p, 'z') + ")";
  if (e > 1) s += "^" + std::to_string(e);
  return s;
}

std::string cyclotomic(std::uint64_t d) {
  return d == 1 ? "(1-z)" : "(1-z^" + std::to_string(d) + ")";
}

} // namespace

std::string to_string(const ZetaForm& form) {
  std::string out;
  if (form.factors.empty()) {
    std::string num, den;
    std::size_t den_count = 0;
    for (const auto& f : form.polynomials) {
      if (f.exponent > 0) num += poly_factor(f.poly, f.exponent);
      if (f.exponent < 0) {
        den += poly_factor(f.poly, -f.exponent);
        ++den_count;
      }
    }
    if (num.empty() && den.empty()) return "1";
    out = num.empty() ? "1" : num;
    if (!den.empty()) out += "/" + (den_count > 1 ? "(" + den + ")" : den);
    return out;
  }
  for (const auto& f : form.polynomials)
    out += "(" + to_string(f.poly, 'z') + ")" + (f.exponent == 1 ? "" : "^(" + std::to_string(f.exponent) + ")");
  for (const auto& f : form.factors)
    out += cyclotomic(f.d) + (f.exponent == 1 ? "" : "^(" + f.exponent.get_str() + ")");
  return out.empty() ? "1" : out;
}

LefschetzZeta lefschetz_zeta(const std::vector<IntMatrix>& maps, std::size_t order) {
  if (order > kMaxTruncation)
    throw InputError("truncation order is limited to " + std::to_string(kMaxTruncation));
  LefschetzZeta z;

  for (std::size_t k = 0; k < maps.size(); ++k) {
    IntPoly p = det_one_minus_z(maps[k]);
    p.normalize();
    if (p.coeffs.size() <= 1) continue;
    const long e = k % 2 == 0 ? -1 : 1;
    auto it = std::find_if(z.form.polynomials.begin(), z.form.polynomials.end(),
                           [&](const PolynomialFactor& f) { return f.poly == p; });
    if (it == z.form.polynomials.end())
      z.form.polynomials.push_back({p, e});
    else
      it->exponent += e;
  }
  std::erase_if(z.form.polynomials, [](const PolynomialFactor& f) { return f.exponent == 0; });

  std::vector<IntMatrix> powers = maps;
  for (std::size_t n = 1; n <= order; ++n) {
    mpz_class l = 0;
    for (std::size_t k = 0; k < maps.size(); ++k) {
      if (k % 2 == 0)
        l += powers[k].trace();
      else
        l -= powers[k].trace();
      if (n < order) powers[k] = powers[k] * maps[k];
    }
    z.lefschetz.push_back(l);
  }

  z.series = exp_of_weighted_sum(z.lefschetz, order);
  const PowerSeries closed = z.form.expand(order);
  for (std::size_t i = 0; i <= order; ++i)
    if (closed[i] != z.series[i])
      throw VerificationError("Lefschetz closed form " + to_string(z.form) + " differs from exp-series at z^" +
                              std::to_string(i) + ": " + closed[i].get_str() + " vs " + z.series[i].get_str());
  return z;
}

namespace {

// Integer "Hurwitz" scaling F_n = n!·f_n turns both sides of the periodic
// identity into integer recurrences, avoiding rational normalisation.
struct HurwitzTables {
  std::vector<mpz_class> factorial;
  std::vector<std::vector<mpz_class>> binom;    // C(n, k)
  std::vector<std::vector<mpz_class>> falling;  // (n−1)!/(n−k)!, 1 ≤ k ≤ n
};

const HurwitzTables& hurwitz_tables(std::size_t order) {
  thread_local std::map<std::size_t, HurwitzTables> cache;
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  HurwitzTables t;
  t.factorial.resize(order + 1);
  t.factorial[0] = 1;
  for (std::size_t i = 1; i <= order; ++i) t.factorial[i] = t.factorial[i - 1] * static_cast<unsigned long>(i);
  t.binom.assign(order + 1, {});
  for (std::size_t n = 0; n <= order; ++n) {
    t.binom[n].resize(n + 1);
    t.binom[n][0] = t.binom[n][n] = 1;
    for (std::size_t k = 1; k < n; ++k) t.binom[n][k] = t.binom[n - 1][k - 1] + t.binom[n - 1][k];
  }
  t.falling.assign(order + 1, {});
  for (std::size_t n = 1; n <= order; ++n) {
    t.falling[n].resize(n + 1);
    t.falling[n][1] = 1;
    for (std::size_t k = 2; k <= n; ++k) t.falling[n][k] = t.falling[n][k - 1] * static_cast<unsigned long>(n - k + 1);
  }
  return cache.emplace(order, std::move(t)).first->second;
}

// Scaled coefficients of (1 − z^d)^{−P/d}: entry j is the z^{dj} coefficient
// times (dj)!, i.e. Π_{i<j}(P + i·d) · (dj)! / (d^j · j!).
const std::vector<mpz_class>& scaled_binomial(std::uint64_t d, long long p, std::size_t order) {
  thread_local std::map<std::tuple<std::uint64_t, long long, std::size_t>, std::vector<mpz_class>> cache;
  const auto key = std::make_tuple(d, p, order);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const auto& t = hurwitz_tables(order);
  std::vector<mpz_class> b;
  mpz_class rising = 1, dpow = 1;
  for (std::size_t j = 0; j * d <= order; ++j) {
    if (j > 0) {
      rising *= mpz_class(static_cast<long>(p)) + static_cast<unsigned long>((j - 1) * d);
      dpow *= static_cast<unsigned long>(d);
    }
    mpz_class q = t.factorial[j * d];
    mpz_class den = dpow * t.factorial[j];
    mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), den.get_mpz_t());
    b.push_back(rising * q);
  }
  return cache.emplace(key, std::move(b)).first->second;
}

// Compares ∏_d (1 − z^d)^{−P(d)/d} with exp(Σ N_n z^n / n) up to `order`.
std::optional<std::size_t> floer_mismatch(const FloerZeta& f, std::size_t order) {
  const auto& t = hurwitz_tables(order);
  const std::uint64_t m = f.period;
  std::vector<long> n_of(order + 1, 0);
  for (std::size_t n = 1; n <= order; ++n) {
    const std::uint64_t g = std::gcd<std::uint64_t>(n, m);
    const auto pos = std::lower_bound(f.divisors.begin(), f.divisors.end(), g) - f.divisors.begin();
    n_of[n] = static_cast<long>(f.values[pos]);
  }

  std::vector<mpz_class> lhs(order + 1), rhs(order + 1);
  mpz_class w;
  lhs[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    mpz_class acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (!n_of[k]) continue;
      mpz_mul_si(w.get_mpz_t(), t.falling[n][k].get_mpz_t(), n_of[k]);
      mpz_addmul(acc.get_mpz_t(), w.get_mpz_t(), lhs[n - k].get_mpz_t());
    }
    lhs[n] = acc;
  }

  rhs[0] = 1;
  std::vector<mpz_class> next(order + 1);
  for (std::size_t i = 0; i < f.divisors.size(); ++i) {
    const auto& p = f.primitive[i];
    if (p == 0) continue;
    const std::uint64_t d = f.divisors[i];
    const auto& b = scaled_binomial(d, p.get_si(), order);
    for (std::size_t n = 0; n <= order; ++n) {
      mpz_class acc = 0;
      for (std::size_t j = 0; j * d <= n; ++j) {
        if (rhs[n - j * d] == 0) continue;
        mpz_mul(w.get_mpz_t(), t.binom[n][j * d].get_mpz_t(), b[j].get_mpz_t());
        mpz_addmul(acc.get_mpz_t(), w.get_mpz_t(), rhs[n - j * d].get_mpz_t());
      }
      next[n] = acc;
    }
    std::swap(rhs, next);
  }
  for (std::size_t n = 0; n <= order; ++n)
    if (lhs[n] != rhs[n]) return n;
  return std::nullopt;
}

} // namespace

FloerZeta periodic_floer_zeta(std::uint64_t m, const std::vector<long long>& values, std::size_t order) {
  if (m == 0) throw InputError("period m must be positive");
  if (order > kMaxTruncation)
    throw InputError("truncation order is limited to " + std::to_string(kMaxTruncation));
  for (auto v : values)
    if (v < 0) throw InputError("N values must be nonnegative");
  FloerZeta f;
  f.period = m;
  f.divisors = divisors(m);
  if (values.size() == f.divisors.size()) {
    f.values.assign(values.begin(), values.end());
  } else if (values.size() == m) {
    for (std::uint64_t n = 1; n <= m; ++n) {
      const std::uint64_t g = std::gcd(n, m);
      if (values[n - 1] != values[g - 1])
        throw InputError("N_" + std::to_string(n) + " = " + std::to_string(values[n - 1]) + " but N_" +
                         std::to_string(g) + " = " + std::to_string(values[g - 1]) +
                         "; a periodic sequence must satisfy N_n = N_gcd(n,m)");
    }
    for (auto d : f.divisors) f.values.push_back(static_cast<std::uint64_t>(values[d - 1]));
  } else {
    throw InputError("expected " + std::to_string(f.divisors.size()) + " values (one per divisor of " +
                     std::to_string(m) + ") or a full period of " + std::to_string(m) + ", got " +
                     std::to_string(values.size()));
  }

  for (std::size_t i = 0; i < f.divisors.size(); ++i) {
    const std::uint64_t d = f.divisors[i];
    mpz_class p = 0;
    for (std::size_t j = 0; j <= i; ++j) {
      const std::uint64_t d1 = f.divisors[j];
      if (d % d1) continue;
      const int mu = mobius(d1);
      if (mu == 0) continue;
      const auto pos = std::lower_bound(f.divisors.begin(), f.divisors.end(), d / d1) - f.divisors.begin();
      p += mu * mpz_class(static_cast<unsigned long>(f.values[pos]));
    }
    f.primitive.push_back(p);
    if (p != 0) f.form.factors.push_back({d, mpq_class(mpz_class(-p), mpz_class(static_cast<unsigned long>(d)))});
  }
  for (auto& c : f.form.factors) c.exponent.canonicalize();

  if (auto n = floer_mismatch(f, order))
    throw VerificationError("periodic zeta product " + to_string(f.form) +
                            " differs from exp-series at z^" + std::to_string(*n));
  return f;
}

PowerSeries reidemeister_zeta_series(const ReidemeisterSequence& seq, std::size_t order) {
  if (order > kMaxTruncation)
    throw InputError("truncation order is limited to " + std::to_string(kMaxTruncation));
  if (seq.terms.size() < order)
    throw InputError("sequence has " + std::to_string(seq.terms.size()) + " terms, order " +
                     std::to_string(order) + " needs more");
  std::vector<mpz_class> terms;
  for (std::size_t n = 1; n <= order; ++n) {
    if (seq.terms[n - 1].is_infinite())
      throw InputError("R(phi^" + std::to_string(n) + ") is infinite; the Reidemeister zeta series is undefined");
    terms.push_back(seq.terms[n - 1].value());
  }
  return exp_of_weighted_sum(terms, order);
}

CongruenceAudit congruence_audit(const ReidemeisterSequence& seq, std::size_t max_n) {
  if (max_n > seq.terms.size())
    throw InputError("max-n " + std::to_string(max_n) + " exceeds the sequence length " +
                     std::to_string(seq.terms.size()));
  CongruenceAudit audit;
  audit.source = seq.source;
  audit.max_n = max_n;
  for (std::size_t n = 1; n <= max_n; ++n) {
    CongruenceRow row;
    row.n = n;
    mpz_class sum = 0;
    bool skipped = false;
    for (auto d : divisors(n)) {
      const auto& term = seq.terms[n / d - 1];
      if (term.is_infinite()) {
        skipped = true;
        break;
      }
      sum += mobius(d) * term.value();
    }
    if (skipped) {
      row.status = CongruenceRow::Status::skipped;
      audit.skipped.push_back(n);
    } else {
      mpz_class r;
      mpz_class modulus = static_cast<unsigned long>(n);
      mpz_fdiv_r(r.get_mpz_t(), sum.get_mpz_t(), modulus.get_mpz_t());
      row.sum = sum;
      row.residue = r;
      if (r != 0) {
        row.status = CongruenceRow::Status::violation;
        audit.violations.push_back(n);
      }
    }
    audit.rows.push_back(std::move(row));
  }
  return audit;
}

std::string to_string(CongruenceRow::Status status) {
  switch (status) {
    case CongruenceRow::Status::pass: return "pass";
    case CongruenceRow::Status::violation: return "violation";
    case CongruenceRow::Status::skipped: return "skipped";
  }
  return "?";
}

namespace {

double log_abs(const mpz_class& v) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

} // namespace

GrowthEstimate growth_rate(const std::vector<mpz_class>& seq, std::optional<std::size_t> window) {
  const std::size_t len = seq.size();
  if (len == 0) throw InputError("growth rate of an empty sequence");
  GrowthEstimate g;
  g.window = window ? *window : std::max<std::size_t>(1, len / 2);
  if (g.window == 0 || g.window > len)
    throw InputError("window must lie in 1.." + std::to_string(len));
  for (std::size_t n = 1; n <= len; ++n)
    g.roots.push_back(seq[n - 1] == 0 ? 0.0 : std::exp(log_abs(seq[n - 1]) / static_cast<double>(n)));

  const std::size_t w = g.window;
  if (2 * w <= len) {
    mpz_class a = 0, b = 0;
    for (std::size_t i = len - w; i < len; ++i) a = std::max(a, mpz_class(abs(seq[i])));
    for (std::size_t i = len - 2 * w; i < len - w; ++i) b = std::max(b, mpz_class(abs(seq[i])));
    g.method = "envelope-ratio";
    if (a == 0 || a <= b) {
      g.estimate = 1.0;
      return g;
    }
    if (b != 0) {
      g.estimate = std::max(1.0, std::exp((log_abs(a) - log_abs(b)) / static_cast<double>(w)));
      return g;
    }
  }
  g.method = "root";
  g.estimate = 1.0;
  for (std::size_t n = len - w + 1; n <= len; ++n) g.estimate = std::max(g.estimate, g.roots[n - 1]);
  return g;
}

} // namespace twisted
