#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cosmo {

/// Malformed or invalid configuration document. `key()` names the offending entry.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& what)
      : std::runtime_error(what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// Adaptive quadrature could not meet its tolerance within the subdivision budget.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(int subdivisions, double best_estimate, double error_estimate)
      : std::runtime_error("quadrature did not converge after " + std::to_string(subdivisions) +
                           " subdivisions (estimate " + std::to_string(best_estimate) + ", error " +
                           std::to_string(error_estimate) + ")"),
        subdivisions_(subdivisions),
        best_estimate_(best_estimate),
        error_estimate_(error_estimate) {}
  int subdivisions() const noexcept { return subdivisions_; }
  /// For log-domain quadrature this is the natural log of the magnitude.
  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  int subdivisions_;
  double best_estimate_;
  double error_estimate_;
};

/// |psi| vanished at an interior grid point, so the phase is undefined there.
class ZeroAmplitude : public std::runtime_error {
 public:
  explicit ZeroAmplitude(std::size_t index)
      : std::runtime_error("wavefunction amplitude is zero at interior grid index " +
                           std::to_string(index)),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Argument outside the region where an evaluator keeps double precision.
class OutOfValidityRange : public std::runtime_error {
 public:
  OutOfValidityRange(double magnitude, const std::string& what)
      : std::runtime_error(what), magnitude_(magnitude) {}
  double magnitude() const noexcept { return magnitude_; }

 private:
  double magnitude_;
};

class PoleAtGamma : public std::domain_error {
 public:
  PoleAtGamma() : std::domain_error("1F1 lower parameter is a non-positive integer") {}
};

class NotNormalized : public std::runtime_error {
 public:
  explicit NotNormalized(double norm)
      : std::runtime_error("wavefunction norm is " + std::to_string(norm) + ", expected 1"),
        norm_(norm) {}
  double norm() const noexcept { return norm_; }

 private:
  double norm_;
};

class ZeroPotentialExpectation : public std::runtime_error {
 public:
  ZeroPotentialExpectation() : std::runtime_error("<V> vanishes; <Q>/<V> is undefined") {}
};

}  // namespace cosmo
