#pragma once

#include <cmath>
#include <limits>
#include <ostream>

namespace cosmo {

/// Signed number stored as sign and natural log of its magnitude.
///
/// Products and quotients only add ln-magnitudes, so values like e^(2.6e123)
/// are carried without overflow. Sums use log-sum-exp with the larger
/// magnitude factored out. When two opposite-signed operands agree to within
/// `kCancellationThreshold` in ln-magnitude the sum is returned as zero with
/// the sticky `cancelled()` flag set; the flag propagates through later
/// arithmetic.
class LogFloat {
 public:
  static constexpr double kCancellationThreshold = 1e-10;

  LogFloat() = default;
  explicit LogFloat(double value);

  /// sign * e^ln_mag. ln_mag = -inf (or sign 0) yields zero.
  static LogFloat from_ln(double ln_mag, int sign = 1);
  static LogFloat zero() { return LogFloat(); }

  int sign() const noexcept { return sign_; }
  double ln_mag() const noexcept { return ln_mag_; }
  bool is_zero() const noexcept { return sign_ == 0; }
  bool cancelled() const noexcept { return cancelled_; }

  /// log10 of the magnitude; -inf for zero.
  double log10_abs() const noexcept;
  /// Plain double; may be +-inf or 0 when out of range.
  double to_double() const noexcept;

  LogFloat abs() const noexcept;
  /// Requires a non-negative value.
  LogFloat pow(double exponent) const;
  LogFloat sqrt() const { return pow(0.5); }

  LogFloat operator-() const noexcept;
  LogFloat& operator+=(const LogFloat& rhs);
  LogFloat& operator-=(const LogFloat& rhs);
  LogFloat& operator*=(const LogFloat& rhs);
  LogFloat& operator/=(const LogFloat& rhs);

  friend LogFloat operator+(LogFloat lhs, const LogFloat& rhs) { return lhs += rhs; }
  friend LogFloat operator-(LogFloat lhs, const LogFloat& rhs) { return lhs -= rhs; }
  friend LogFloat operator*(LogFloat lhs, const LogFloat& rhs) { return lhs *= rhs; }
  friend LogFloat operator/(LogFloat lhs, const LogFloat& rhs) { return lhs /= rhs; }

  /// Bitwise equality of (sign, ln_mag). The cancellation flag is not compared.
  friend bool operator==(const LogFloat& a, const LogFloat& b) noexcept {
    return a.sign_ == b.sign_ && (a.sign_ == 0 || a.ln_mag_ == b.ln_mag_);
  }
  friend bool operator<(const LogFloat& a, const LogFloat& b) noexcept;
  friend bool operator>(const LogFloat& a, const LogFloat& b) noexcept { return b < a; }
  friend bool operator<=(const LogFloat& a, const LogFloat& b) noexcept { return !(b < a); }
  friend bool operator>=(const LogFloat& a, const LogFloat& b) noexcept { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const LogFloat& x);

 private:
  int sign_ = 0;
  double ln_mag_ = -std::numeric_limits<double>::infinity();
  bool cancelled_ = false;
};

/// Relative difference |a - b| / max(|a|, |b|) evaluated in log space.
double relative_difference(const LogFloat& a, const LogFloat& b);

}  // namespace cosmo
