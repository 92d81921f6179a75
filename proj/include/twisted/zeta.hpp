#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "twisted/int_matrix.hpp"
#include "twisted/lattice.hpp"
#include "twisted/power_series.hpp"

namespace twisted {

inline constexpr std::size_t kDefaultTruncation = 30;
inline constexpr std::size_t kMaxTruncation = 128;

/// μ(n); throws InputError for n = 0.
int mobius(std::uint64_t n);
/// Positive divisors of n in ascending order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// (1 − z^d)^exponent
struct CyclotomicFactor {
  std::uint64_t d = 1;
  mpq_class exponent;
};

/// poly^exponent with poly(0) = 1.
struct PolynomialFactor {
  IntPoly poly;
  long exponent = 1;
};

/// A product ∏ p_i(z)^{e_i} · ∏ (1 − z^d)^{e_d}. Integer exponents give a
/// rational function, fractional ones a radical of a rational function.
struct ZetaForm {
  std::vector<PolynomialFactor> polynomials;
  std::vector<CyclotomicFactor> factors;

  bool is_rational() const;
  PowerSeries expand(std::size_t order) const;
};

/// "(1-3z+z^2)/(1-z)^2" for polynomial parts, "(1-z)^(-1)(1-z^2)^(-1/2)"
/// for cyclotomic factors, "1" for the empty product.
std::string to_string(const ZetaForm& form);

struct LefschetzZeta {
  ZetaForm form;
  PowerSeries series;                    // exp(Σ L(φ^n) z^n / n)
  std::vector<mpz_class> lefschetz;      // L(φ^1), ..., L(φ^N)
};

/// maps[k] is the induced map on H_k (a 0×0 matrix for a vanishing group).
/// The closed form ∏_k det(I − z φ_{*k})^{(−1)^{k+1}} is compared with the
/// exp-series coefficient by coefficient; a mismatch throws VerificationError.
LefschetzZeta lefschetz_zeta(const std::vector<IntMatrix>& maps, std::size_t order = kDefaultTruncation);

struct FloerZeta {
  std::uint64_t period = 1;
  std::vector<std::uint64_t> divisors;    // of the period, ascending
  std::vector<std::uint64_t> values;      // N_d per divisor
  std::vector<mpz_class> primitive;       // P(d) per divisor
  ZetaForm form;
};

/// Zeta function of a periodic map with N(φ^n) = N_{gcd(n, m)}.
/// `values` holds N_d for each divisor d of m in ascending order, or a full
/// period N_1, ..., N_m that must depend on n only through gcd(n, m).
/// The product form is checked against exp(Σ N_n z^n / n) up to `order`;
/// a mismatch throws VerificationError.
FloerZeta periodic_floer_zeta(std::uint64_t m, const std::vector<long long>& values,
                              std::size_t order = kDefaultTruncation);

/// exp(Σ R_n z^n / n) over the first `order` terms; InputError on an infinite term.
PowerSeries reidemeister_zeta_series(const ReidemeisterSequence& seq, std::size_t order = kDefaultTruncation);

struct CongruenceRow {
  enum class Status { pass, violation, skipped };
  std::size_t n = 0;
  Status status = Status::pass;
  std::optional<mpz_class> sum;      // Σ_{d|n} μ(d) R_{n/d}
  std::optional<mpz_class> residue;  // sum mod n, in [0, n)
};

struct CongruenceAudit {
  std::string source;
  std::size_t max_n = 0;
  std::vector<CongruenceRow> rows;
  std::vector<std::size_t> violations;
  std::vector<std::size_t> skipped;

  bool passed() const noexcept { return violations.empty(); }
};

CongruenceAudit congruence_audit(const ReidemeisterSequence& seq, std::size_t max_n);

std::string to_string(CongruenceRow::Status status);

struct GrowthEstimate {
  double estimate = 1.0;
  std::size_t window = 0;
  std::string method;          // "envelope-ratio" or "root"
  std::vector<double> roots;   // |a_n|^{1/n} for every n
};

/// Estimate of max{1, limsup |a_n|^{1/n}}. With window w (default len/2) the
/// estimate is max(1, (A/B)^{1/w}), where A and B are the largest |a_n| over
/// the last w terms and the w terms before them; equal envelopes give
/// exactly 1. When B = 0 or the sequence is too short for two blocks, the
/// root test max(1, max |a_n|^{1/n}) over the last w terms is used instead.
GrowthEstimate growth_rate(const std::vector<mpz_class>& seq, std::optional<std::size_t> window = std::nullopt);

} // namespace twisted
