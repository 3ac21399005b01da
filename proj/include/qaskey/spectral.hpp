#pragma once

/// \file
/// Jacobi matrices, their spectral quadrature, and Gram matrices of a monic
/// family against that quadrature. Binary64 throughout.

#include "qaskey/recurrence.hpp"

#include <Eigen/Dense>

#include <vector>

namespace qaskey {

struct SymTridiagonal {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;  // size - 1 entries
};

struct QuadratureRule {
  std::vector<double> nodes;    // strictly increasing
  std::vector<double> weights;  // total mass 1
};

/// Diagonal origin + A_n + C_n, off-diagonal sqrt(A_{n-1} C_n).
/// Throws NumericError(NegativeProduct) if some A_{n-1} C_n < 0.
SymTridiagonal jacobi_matrix(const MonicRecurrence<double>& rec, int size);

/// Nodes are the eigenvalues, weights the squared first eigenvector
/// components. Throws EigenFailure when the solver does not converge or an
/// eigenpair residual exceeds 1e-14 ||T||.
QuadratureRule spectral_quadrature(const SymTridiagonal& t);

/// G_{mn} = sum_y w_y p_m(x_y) p_n(x_y), 0 <= m, n <= n_max.
Eigen::MatrixXd gram_matrix(const MonicRecurrence<double>& rec, const QuadratureRule& rule, int n_max);

/// max_{m != n} |G_{mn}| / sqrt(G_{mm} G_{nn}).
double max_offdiagonal_ratio(const Eigen::MatrixXd& gram);

}  // namespace qaskey
