#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace enritch {

/// Exact element of the extended half line [0, ∞].
///
/// Finite values are arbitrary precision rationals kept in lowest terms with a
/// positive denominator. Infinity is a separate tag and never a rational.
/// Ordering is the numeric one; the reversed quantale order lives in Lawvere.
class ExtRat {
 public:
  ExtRat() = default;
  ExtRat(long n);  // NOLINT: implicit so literals read naturally
  ExtRat(long num, long den);
  explicit ExtRat(mpq_class value);

  static ExtRat infinity();

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }
  bool is_zero() const noexcept { return !infinite_ && sgn(value_) == 0; }

  /// Throws std::domain_error for infinity.
  const mpq_class& rational() const;

  ExtRat& operator+=(const ExtRat& other);
  friend ExtRat operator+(ExtRat a, const ExtRat& b) { return a += b; }

  /// Truncated difference *this ⊖ p: 0 when p = ∞ (even for ∞ ⊖ ∞),
  /// ∞ when only *this is infinite, max(0, q - p) otherwise.
  ExtRat monus(const ExtRat& p) const;

  friend bool operator==(const ExtRat& a, const ExtRat& b);
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b);

  /// "n", "p/q" or "inf".
  std::string str() const;
  /// Inverse of str(). Throws SchemaError on anything else.
  static ExtRat parse(std::string_view text);

 private:
  bool infinite_ = false;
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const ExtRat& x);

}  // namespace enritch
