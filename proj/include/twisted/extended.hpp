#pragma once

#include <optional>
#include <string>

#include <gmpxx.h>

namespace twisted {

/// A value in ℕ ∪ {∞}. Reidemeister numbers of lattice automorphisms are
/// infinite exactly when det(I − M) = 0, and that is data, not an error.
class ExtendedNatural {
public:
  ExtendedNatural() = default;  // ∞
  explicit ExtendedNatural(mpz_class v) : value_(std::move(v)) {}

  static ExtendedNatural infinity() { return ExtendedNatural(); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }
  const mpz_class& value() const { return value_.value(); }

  /// Decimal digits, or "inf".
  std::string to_string() const { return value_ ? value_->get_str() : "inf"; }

  friend bool operator==(const ExtendedNatural& a, const ExtendedNatural& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
    return *a.value_ == *b.value_;
  }

private:
  std::optional<mpz_class> value_;
};

} // namespace twisted
