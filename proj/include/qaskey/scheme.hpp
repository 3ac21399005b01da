#pragma once

/// \file
/// The three-parameter family on the closed orthant (c, 1/N, 1-q): which
/// classical family each boundary stratum carries, the proportionality
/// constants, and continuity along paths into the boundary.

#include "qaskey/recurrence.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qaskey {

enum class SpecializationId { QRacahInterior, BigQJacobi, QHahn, Hahn, LittleQJacobi, Jacobi };

std::string to_string(SpecializationId id);

/// Which coordinates of (c, 1/N, 1-q) vanish.
struct ZeroPattern {
  bool c_zero = false;
  bool inv_n_zero = false;
  bool h_zero = false;

  bool operator==(const ZeroPattern&) const = default;
};

template <RealScalar T>
ZeroPattern zero_pattern(const SchemePoint<T>& s);

SpecializationId classify(const ZeroPattern& z);

template <RealScalar T>
SpecializationId classify(const SchemePoint<T>& s) {
  return classify(zero_pattern(s));
}

/// Monic value from the continuously extended recurrence; valid on the whole orthant.
template <RealScalar T>
T eval_scheme(int n, const T& x, const SchemePoint<T>& s);

/// The classical family carried by the stratum of s, in its own normalization:
///   interior        R_n(1 - q^{-N} c + q^{-beta-1}(q^{-N}-1) x; q^alpha, q^beta, q^{-N-1}, -c | q)
///   (c, 0, h)       P_n(x - q^{beta+1} c; q^beta, q^alpha, -q^beta c; q)
///   (0, 1/N, h)     Q_n(1 + q^{-beta-1}(q^{-N}-1) x; q^alpha, q^beta, N; q)
///   (c, 1/N, 0)     Q_n(N x / (1 + c); alpha, beta, N)
///   (0, 0, h)       p_n(q^{-beta-1} x; q^alpha, q^beta; q)
///   (c, 0, 0)       2F1(-n, n+alpha+beta+1; alpha+1; x / (1 + c))
template <RealScalar T>
T classical_reference(int n, const T& x, const SchemePoint<T>& s);

/// Twenty abscissae away from the nodes: ten in [-1, -0.05] and ten in
/// [U + 0.05, U + 1], U = q^{beta+1}(1 + c) the top of the support.
template <RealScalar T>
std::vector<T> ratio_grid(const SchemePoint<T>& s);

template <RealScalar T>
struct BoundaryConstant {
  T value;
  T probe;
  T relative_spread;  // std-dev / |mean| of the ratio over the grid
};

/// eval_scheme / classical_reference at a probe, with constancy over
/// ratio_grid enforced (relative spread <= 1e-10, else NonConstantRatio).
/// Without an explicit probe the grid points are tried in turn; an explicit
/// probe where the classical form vanishes throws ZeroProbe.
template <RealScalar T>
BoundaryConstant<T> boundary_constant(int n, const SchemePoint<T>& s, std::optional<T> probe = std::nullopt);

template <RealScalar T>
struct ContinuityRow {
  SchemePoint<T> point;
  T factor;         // (1-q)/(1-q^N) at the point
  T coeff_A_dev;    // max_{k <= n} |A_k(point) - A_k(boundary)|
  T coeff_C_dev;
  T value_dev;      // max over the grid of |p_n(point) - p_n(boundary)|
};

template <RealScalar T>
struct ContinuityReport {
  SchemePoint<T> boundary;
  int n = 0;
  std::vector<ContinuityRow<T>> rows;
  bool monotone = false;         // all three deviations non-increasing along the whole path
  std::size_t monotone_from = 0;  // first row of the non-increasing tail
  T final_deviation{0};           // largest of the three at the last path point
  bool passed = false;            // tail covers the second half and final_deviation <= tolerance
};

template <RealScalar T>
ContinuityReport<T> continuity_check(int n, const std::vector<SchemePoint<T>>& path, const SchemePoint<T>& boundary,
                                     const std::vector<T>& xs, const T& tolerance);

/// N = 2^k, 1 - q = 2^-k, k = k_first..k_last, at fixed c, alpha, beta.
template <RealScalar T>
std::vector<SchemePoint<T>> diagonal_path(const T& c, const T& alpha, const T& beta, int k_first, int k_last);

/// Largest (1-q)/(1-q^N) - (1-q0)/(1-q0^{N0}) over the lattice q in qs with
/// q >= q0, N in Ns with N >= N0. The bound holds when the result is <= 0.
double size_factor_bound_excess(double q0, int N0, const std::vector<double>& qs, const std::vector<int>& Ns);

/// One arrow of the boundary diagram: zeroing one coordinate.
struct SchemeEdge {
  ZeroPattern from;
  ZeroPattern to;
  int coordinate;  // 0: c, 1: 1/N, 2: 1-q
};

/// The twelve edges of the cube of zero patterns, each directed toward zero.
std::vector<SchemeEdge> scheme_edges();

/// A path realizing `edge` from a representative point of its source
/// stratum (c = 1, N = 8, 1-q = 1/2 where nonzero): the moving coordinate
/// goes through 2^-k (c and 1-q) or N = 2^{k+2}, k = 1..steps; N paths stop
/// at k = 28. Returns the path and its limit point.
template <RealScalar T>
std::pair<std::vector<SchemePoint<T>>, SchemePoint<T>> edge_path(const SchemeEdge& edge, const T& alpha,
                                                                 const T& beta, int steps);

}  // namespace qaskey
