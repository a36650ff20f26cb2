#include "cosmo_entropy/logfloat.hpp"

#include <iomanip>
#include <stdexcept>
#include <utility>

namespace cosmo {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kLn10 = 2.302585092994045684017991454684364208;
}  // namespace

LogFloat::LogFloat(double value) {
  if (std::isnan(value)) throw std::domain_error("LogFloat from NaN");
  if (value == 0.0) return;
  sign_ = value > 0 ? 1 : -1;
  ln_mag_ = std::log(std::fabs(value));
}

LogFloat LogFloat::from_ln(double ln_mag, int sign) {
  if (std::isnan(ln_mag)) throw std::domain_error("LogFloat from NaN log-magnitude");
  if (ln_mag == std::numeric_limits<double>::infinity())
    throw std::domain_error("LogFloat log-magnitude is +inf");
  LogFloat out;
  if (sign == 0 || ln_mag == kNegInf) return out;
  out.sign_ = sign > 0 ? 1 : -1;
  out.ln_mag_ = ln_mag;
  return out;
}

double LogFloat::log10_abs() const noexcept { return sign_ == 0 ? kNegInf : ln_mag_ / kLn10; }

double LogFloat::to_double() const noexcept {
  if (sign_ == 0) return 0.0;
  return sign_ * std::exp(ln_mag_);
}

LogFloat LogFloat::abs() const noexcept {
  LogFloat out = *this;
  if (out.sign_ != 0) out.sign_ = 1;
  return out;
}

LogFloat LogFloat::pow(double exponent) const {
  if (sign_ < 0) throw std::domain_error("LogFloat::pow of a negative value");
  if (sign_ == 0) {
    if (exponent <= 0) throw std::domain_error("LogFloat::pow of zero with non-positive exponent");
    return *this;
  }
  LogFloat out = from_ln(ln_mag_ * exponent, 1);
  out.cancelled_ = cancelled_;
  return out;
}

LogFloat LogFloat::operator-() const noexcept {
  LogFloat out = *this;
  out.sign_ = -out.sign_;
  return out;
}

LogFloat& LogFloat::operator+=(const LogFloat& rhs) {
  const bool flag = cancelled_ || rhs.cancelled_;
  if (rhs.sign_ == 0) {
    cancelled_ = flag;
    return *this;
  }
  if (sign_ == 0) {
    *this = rhs;
    cancelled_ = flag;
    return *this;
  }
  const LogFloat* big = this;
  const LogFloat* small = &rhs;
  if (small->ln_mag_ > big->ln_mag_) std::swap(big, small);
  const double d = small->ln_mag_ - big->ln_mag_;  // <= 0
  const int sign = big->sign_;
  double ln = 0;
  if (big->sign_ == small->sign_) {
    ln = big->ln_mag_ + std::log1p(std::exp(d));
  } else {
    if (-d < kCancellationThreshold) {
      *this = LogFloat();
      cancelled_ = true;
      return *this;
    }
    ln = big->ln_mag_ + std::log(-std::expm1(d));
  }
  sign_ = sign;
  ln_mag_ = ln;
  cancelled_ = flag;
  return *this;
}

LogFloat& LogFloat::operator-=(const LogFloat& rhs) { return *this += -rhs; }

LogFloat& LogFloat::operator*=(const LogFloat& rhs) {
  const bool flag = cancelled_ || rhs.cancelled_;
  if (sign_ == 0 || rhs.sign_ == 0) {
    *this = LogFloat();
  } else {
    sign_ *= rhs.sign_;
    ln_mag_ += rhs.ln_mag_;
  }
  cancelled_ = flag;
  return *this;
}

LogFloat& LogFloat::operator/=(const LogFloat& rhs) {
  if (rhs.sign_ == 0) throw std::domain_error("LogFloat division by zero");
  const bool flag = cancelled_ || rhs.cancelled_;
  if (sign_ != 0) {
    sign_ *= rhs.sign_;
    ln_mag_ -= rhs.ln_mag_;
  }
  cancelled_ = flag;
  return *this;
}

bool operator<(const LogFloat& a, const LogFloat& b) noexcept {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
  if (a.sign_ == 0) return false;
  return a.sign_ > 0 ? a.ln_mag_ < b.ln_mag_ : a.ln_mag_ > b.ln_mag_;
}

std::ostream& operator<<(std::ostream& os, const LogFloat& x) {
  const auto flags = os.flags();
  const auto prec = os.precision();
  os << "LogFloat(" << (x.sign_ > 0 ? '+' : (x.sign_ < 0 ? '-' : '0')) << ", "
     << std::setprecision(17) << x.ln_mag_ << ")";
  os.flags(flags);
  os.precision(prec);
  return os;
}

double relative_difference(const LogFloat& a, const LogFloat& b) {
  if (a == b) return 0.0;
  const LogFloat diff = (a - b).abs();
  const LogFloat scale = a.abs() > b.abs() ? a.abs() : b.abs();
  if (diff.is_zero()) return 0.0;
  return (diff / scale).to_double();
}

}  // namespace cosmo
