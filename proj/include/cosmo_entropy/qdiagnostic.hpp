#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cosmo_entropy/freewaves.hpp"
#include "cosmo_entropy/quadrature.hpp"

namespace cosmo::qdiag {

using cplx = std::complex<double>;

/// l = 0 wavefunction psi(r) on [r_min, r_max] with measure 4 pi r^2 dr.
/// When dpsi is empty the derivative is taken by central differences.
struct RadialWavefunction {
  std::function<cplx(double)> psi;
  double r_min = 0;
  double r_max = 1;
  std::function<cplx(double)> dpsi;
};

enum class NormalizationPolicy {
  require,  // throw NotNormalized unless 4 pi int |psi|^2 r^2 dr = 1 within tolerance
  apply,    // divide every expectation by the computed norm
};

struct QOptions {
  QuadratureSpec quad{};
  NormalizationPolicy normalization = NormalizationPolicy::apply;
  double normalization_tolerance = 1e-6;
  /// Points with |psi| below node_cutoff * max|psi| are dropped from the bracket.
  double node_cutoff = 1e-12;
};

/// The three bracket integrals of the <Q> identity, each with the radial
/// measure. A term that does not converge on its own (e.g. |psi'|^2 r^2 ~ 1/r^2
/// at the origin) is left empty; `total` integrates the pointwise sum and is
/// always well defined.
struct BracketTerms {
  std::optional<cplx> conj_over_psi;       // psi* psi^-1 (psi')^2
  std::optional<cplx> psi_over_conj;       // psi (psi*)^-1 (psi*')^2
  std::optional<cplx> cross;               // -2 |psi'|^2
  cplx total;
};

struct QVReport {
  double E = 0;
  double V_expect = 0;
  double Q_expect = 0;
  double ratio = 0;
  BracketTerms bracket{};
  double norm = 1;               // 4 pi int |psi|^2 r^2 dr before normalisation
  double excluded_fraction = 0;  // share of the measure dropped near nodes
};

/// 4 pi int |psi|^2 r^2 dr.
double norm_integral(const RadialWavefunction& wf, const QuadratureSpec& spec = {});

/// <V> = 4 pi int |psi|^2 V r^2 dr (divided by the norm under `apply`).
double potential_expectation(const RadialWavefunction& wf, const std::function<double(double)>& V,
                             const QOptions& opts = {});

/// <Q>/<V> via the eigenstate identity
///   <Q> = E - <V> + hbar^2/(8m) int [psi* psi^-1 (psi')^2 + c.c. - 2 |psi'|^2].
/// Throws ZeroPotentialExpectation when <V> vanishes.
QVReport qv_ratio(const RadialWavefunction& wf, double E, const std::function<double(double)>& V,
                  double m, double hbar, const QOptions& opts = {});

/// Same report for a box plane wave in the Hubble potential -m H0^2 |r|^2 / 2.
/// The state factorises over the axes, so every integral is a product of
/// one-dimensional ones.
QVReport qv_ratio_plane(const freewaves::PlaneWaveState& s, double E, double m, double hbar,
                        double H0, const QOptions& opts = {});

enum class Compliance { compliant, marginal, violated };

/// Default threshold for |<Q>/<V>|. The source gives no number for "small
/// enough"; 0.1 is a choice made here.
inline constexpr double kDefaultThreshold = 0.1;

/// |ratio| <= threshold -> compliant, <= 10 threshold -> marginal, else violated.
Compliance violation_assessment(const QVReport& report, double threshold = kDefaultThreshold);
Compliance violation_assessment(double ratio, double threshold = kDefaultThreshold);
std::string_view to_string(Compliance c);

/// A state named on the command line, in desk units (m = hbar = 1):
///   matched:sigma=100,x0=0.5,parity=sinh,mode=exact    R0 = 1, H0 = sigma
///   exact:branch=1,lambda=3,a=1,rmin=0.1,rmax=4         H0 = a^2
///   spherical:kappa=3,R0=1,H0=1,sign=1
///   plane:kx=1,ky=0,kz=0,R0=1,H0=1
/// Each carries its Hubble potential and a natural energy for `--E auto`.
struct DiagnosticProblem {
  std::string kind;
  std::string description;
  RadialWavefunction wf;
  std::function<double(double)> V;
  double E_auto = 0;
  double m = 1;
  double hbar = 1;
  double H0 = 1;
  std::optional<freewaves::PlaneWaveState> plane;
};

/// Throws std::invalid_argument on malformed specs.
DiagnosticProblem parse_state(std::string_view spec);

QVReport diagnose(const DiagnosticProblem& problem, double E, const QOptions& opts = {});

struct LambdaSweepPoint {
  double lambda;
  QVReport report;
};

/// Regular exact states at fixed a over a list of lambda values, each with
/// E = lambda hbar H0 / 2. Lets one see where |<Q>/<V>| is smallest.
std::vector<LambdaSweepPoint> lambda_sweep(double a, const std::vector<double>& lambdas,
                                           double r_min, double r_max, const QOptions& opts = {});

}  // namespace cosmo::qdiag
