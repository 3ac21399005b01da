#pragma once

/// \file
/// Limit transitions as executable parameter paths, plus convergence sweeps
/// that measure and fit the approach to the limit.

#include "qaskey/families.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qaskey {

/// Paired source/target values on an x-grid.
template <RealScalar T>
struct PairedValues {
  std::vector<T> x;
  std::vector<T> source;
  std::vector<T> target;

  T sup_error() const;
};

// ---------------------------------------------------------------------------
// Individual transitions. Each returns (source at the path value, target).

/// R_n(x/(q^{N+1}a); b, a, q^{-N-1}, c/a | q) against P_n(x; a, b, c; q)/P_n(qc; a, b, c; q).
template <RealScalar T>
PairedValues<T> lim_qracah_to_bigqjacobi(int n, const BigQJacobiParams<T>& p, int N, const std::vector<T>& xs);

/// Exact identity at delta = 0: R_n(x; b, a, q^{-N-1}, 0 | q) against Q_n(x; b, a, N; q).
template <RealScalar T>
PairedValues<T> lim_qracah_to_qhahn_identity(int n, const T& a, const T& b, int N, const QBase<T>& q,
                                             const std::vector<T>& xs);

/// Q_n(x/(q^{N+1}a); b, a, N; q) against p_n(x/(qa); b, a; q).
template <RealScalar T>
PairedValues<T> lim_qhahn_to_littleqjacobi(int n, const T& a, const T& b, const QBase<T>& q, int N,
                                           const std::vector<T>& xs);

/// Q_n(1 + h x; q^alpha, q^beta, N; q) against Q_n(x; alpha, beta, N), q = 1 - h.
template <RealScalar T>
PairedValues<T> lim_qhahn_to_hahn(int n, const T& alpha, const T& beta, int N, const T& h, const std::vector<T>& xs);

/// h^{-3n} p_n(1 - h^2 x / 2; q^a, q^b, q^c, q^d | q) against W_n(x; a, b, c, d).
template <RealScalar T>
PairedValues<T> lim_aw_to_wilson(int n, const WilsonParams<T>& p, const T& h, const std::vector<T>& xs);

/// R_n(1 + q^{delta-N} + h^2 x; q^alpha, q^beta, q^{-N-1}, q^delta | q) against
/// R_n(x; alpha, beta, -N-1, delta).
template <RealScalar T>
PairedValues<T> lim_qracah_to_racah(int n, const RacahParams<T>& p, const T& h, const std::vector<T>& xs);

/// p_n(x; q^alpha, q^beta; q) against the normalized Jacobi polynomial.
template <RealScalar T>
PairedValues<T> lim_little_to_jacobi(int n, const JacobiParams<T>& p, const T& h, const std::vector<T>& xs);

/// Q_n(N x; alpha, beta, N) against the normalized Jacobi polynomial.
template <RealScalar T>
PairedValues<T> lim_hahn_to_jacobi(int n, const JacobiParams<T>& p, int N, const std::vector<T>& xs);

/// |cos(y log q) - (1 - h^2 y^2 / 2)|: the trigonometric argument against the
/// polynomial one at x = y^2.
template <RealScalar T>
T aw_argument_discrepancy(const T& y, const T& h);

/// x_y = -(1 - q^{delta-N+y})(1 - q^{-y}) / h^2, the exact preimage of the
/// lattice point q^{-y} + q^{delta-N+y} under x -> 1 + q^{delta-N} + h^2 x.
template <RealScalar T>
T racah_lattice_x(int y, const T& delta, int N, const T& h);

/// |q^{-y} + q^{delta-N+y} - (1 + q^{delta-N} + h^2 y (y + delta - N))|.
template <RealScalar T>
T racah_argument_discrepancy(int y, const T& delta, int N, const T& h);

/// delta -> 0 along the four-parameter q-Racah with q alpha = q^{-N}.
template <RealScalar T>
struct KlsDemoReport {
  std::vector<T> deltas;
  std::vector<T> max_deviation;  // from the q-Hahn values, per delta
  bool big_q_jacobi_admissible = false;
  std::vector<bool> positive_weight;  // q-Racah recurrence criterion, per delta
};

/// Compares R_n(q^{-y} + c delta q^{y+1}; q^{-N-1}, b, c, delta | q), y = 0..N,
/// with Q_n(q^{-y}; c, b q^{-N-1}/c, N; q). Throws DegreeExceedsN for n > N.
template <RealScalar T>
KlsDemoReport<T> kls_limit_demo(int n, const T& b, const T& c, int N, const QBase<T>& q, const std::vector<T>& deltas);

// ---------------------------------------------------------------------------
// Descriptors and sweeps

enum class PathKind {
  GeometricN,         // path value N -> infinity, errors ~ q^N
  AlgebraicQ,         // path value h = 1 - q -> 0
  AlgebraicInverseN,  // path value h = 1/N -> 0
};

std::string to_string(PathKind kind);

/// A named transition with its parameters kept as decimal strings, so every
/// precision tier parses them itself.
struct LimitDescriptor {
  std::string name;
  std::string source;
  std::string target;
  PathKind path;
  int grid_points = 10;
  std::map<std::string, std::string> parameters;
};

/// Names of all transitions known to make_limit_descriptor.
std::vector<std::string> limit_names();

/// Descriptor with defaults, overridden by `overrides`. Throws
/// std::invalid_argument for unknown names, unknown or malformed parameters.
LimitDescriptor make_limit_descriptor(const std::string& name,
                                      const std::map<std::string, std::string>& overrides = {});

/// Source/target pair at one path value (N for GeometricN, h otherwise).
template <RealScalar T>
PairedValues<T> limit_pair(const LimitDescriptor& d, int n, const T& path_value, const std::vector<T>& xs);

/// Equispaced grid over the target family's natural interval.
template <RealScalar T>
std::vector<T> default_grid(const LimitDescriptor& d);

/// "[lo, hi] x points" in scientific notation.
std::string grid_description(const LimitDescriptor& d);

/// N = 10..40 step 2 for GeometricN, h = 2^-3..2^-12 otherwise.
std::vector<std::string> default_path(const LimitDescriptor& d);

struct ConvergenceRow {
  Real100 h;  // N for GeometricN
  Real100 sup_error;
  int grid_points = 0;
  int precision_digits = 0;
};

struct ConvergenceReport {
  std::string limit;
  PathKind path = PathKind::AlgebraicQ;
  std::string grid;
  std::vector<ConvergenceRow> rows;
  double fitted_order = 0.0;  // slope of log error vs N for GeometricN
  double fit_constant = 0.0;
  double fit_residual = 0.0;
  std::optional<std::size_t> monotone_from;  // first row of the non-increasing tail
};

/// Sweeps `path` (N increasing, or h decreasing), at least 4 values. Rows
/// with q = 1 - h and h <= 2^-10 are evaluated with at least 50 digits.
/// The fit uses the last ceil(len/2) rows; throws FitUnstable if its RMS
/// residual in log space exceeds 0.5 or an error in that window is zero.
template <RealScalar T>
ConvergenceReport convergence_sweep(const LimitDescriptor& d, int n, const std::vector<T>& xs,
                                    const std::vector<T>& path);

}  // namespace qaskey
