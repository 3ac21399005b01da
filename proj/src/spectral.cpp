#include "qaskey/spectral.hpp"

#include "qaskey/error.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

namespace qaskey {

SymTridiagonal jacobi_matrix(const MonicRecurrence<double>& rec, int size) {
  if (size < 1) {
    throw std::invalid_argument("Jacobi matrix needs size >= 1");
  }
  SymTridiagonal t;
  t.diagonal.reserve(size);
  t.off_diagonal.reserve(size - 1);
  double a_prev = 0.0;
  for (int n = 0; n < size; ++n) {
    double a_n = rec.A(n);
    double c_n = rec.C(n);
    t.diagonal.push_back(rec.origin + a_n + c_n);
    if (n > 0) {
      double product = a_prev * c_n;
      if (product < 0.0) {
        throw NumericError(ErrorKind::NegativeProduct, "A_{n-1} C_n < 0 at n = " + std::to_string(n));
      }
      t.off_diagonal.push_back(std::sqrt(product));
    }
    a_prev = a_n;
  }
  return t;
}

QuadratureRule spectral_quadrature(const SymTridiagonal& t) {
  const Eigen::Index size = static_cast<Eigen::Index>(t.diagonal.size());
  if (size == 0 || t.off_diagonal.size() + 1 != t.diagonal.size()) {
    throw std::invalid_argument("malformed tridiagonal matrix");
  }
  Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(t.diagonal.data(), size);
  Eigen::VectorXd sub(size - 1);
  for (Eigen::Index i = 0; i + 1 < size; ++i) {
    sub[i] = t.off_diagonal[static_cast<std::size_t>(i)];
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw NumericError(ErrorKind::EigenFailure, "tridiagonal eigensolver did not converge");
  }

  const Eigen::VectorXd& values = solver.eigenvalues();
  const Eigen::MatrixXd& vectors = solver.eigenvectors();
  const double norm = values.cwiseAbs().maxCoeff();
  for (Eigen::Index k = 0; k < size; ++k) {
    Eigen::VectorXd v = vectors.col(k);
    Eigen::VectorXd r = diag.cwiseProduct(v) - values[k] * v;
    for (Eigen::Index i = 0; i + 1 < size; ++i) {
      r[i] += sub[i] * v[i + 1];
      r[i + 1] += sub[i] * v[i];
    }
    if (r.norm() > 1e-14 * std::max(norm, 1e-300)) {
      throw NumericError(ErrorKind::EigenFailure, "eigenpair residual above 1e-14 ||T||");
    }
  }

  QuadratureRule rule;
  rule.nodes.assign(values.data(), values.data() + size);
  rule.weights.resize(static_cast<std::size_t>(size));
  double mass = 0.0;
  for (Eigen::Index k = 0; k < size; ++k) {
    double w = vectors(0, k) * vectors(0, k);
    rule.weights[static_cast<std::size_t>(k)] = w;
    mass += w;
  }
  for (double& w : rule.weights) {
    w /= mass;
  }
  return rule;
}

Eigen::MatrixXd gram_matrix(const MonicRecurrence<double>& rec, const QuadratureRule& rule, int n_max) {
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(n_max + 1, n_max + 1);
  for (std::size_t y = 0; y < rule.nodes.size(); ++y) {
    std::vector<double> p = eval_monic_all(n_max, rule.nodes[y], rec);
    for (int m = 0; m <= n_max; ++m) {
      for (int n = m; n <= n_max; ++n) {
        gram(m, n) += rule.weights[y] * p[m] * p[n];
      }
    }
  }
  gram.triangularView<Eigen::StrictlyLower>() = gram.transpose().triangularView<Eigen::StrictlyLower>();
  return gram;
}

double max_offdiagonal_ratio(const Eigen::MatrixXd& gram) {
  double worst = 0.0;
  for (Eigen::Index m = 0; m < gram.rows(); ++m) {
    for (Eigen::Index n = 0; n < gram.cols(); ++n) {
      if (m != n) {
        worst = std::max(worst, std::abs(gram(m, n)) / std::sqrt(gram(m, m) * gram(n, n)));
      }
    }
  }
  return worst;
}

}  // namespace qaskey
