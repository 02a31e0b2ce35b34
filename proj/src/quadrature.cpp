#include "korovkin/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "korovkin/error.hpp"

namespace korovkin {

// Golub-Welsch on the Jacobi matrix of the weight (1+x)^beta on [-1, 1],
// mapped to [0, 1].
QuadratureRule gauss_jacobi_unit(std::size_t n, double beta) {
  if (n == 0) throw Error(ErrorKind::invalid_argument, "quadrature needs at least one node");
  if (!(beta > -1.0)) throw Error(ErrorKind::invalid_argument, "Jacobi exponent must exceed -1");

  const double b = beta;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 1);
  for (std::size_t k = 0; k < n; ++k) {
    const double s = 2.0 * static_cast<double>(k) + b;
    diag[static_cast<Eigen::Index>(k)] = b == 0.0 ? 0.0 : (b * b) / (s * (s + 2.0));
  }
  for (std::size_t k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    const double s = 2.0 * kk + b;
    const double num = 4.0 * kk * kk * (kk + b) * (kk + b);
    const double den = s * s * (s + 1.0) * (s - 1.0);
    sub[static_cast<Eigen::Index>(k - 1)] = std::sqrt(num / den);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(static_cast<Eigen::Index>(n - 1)),
                                Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorKind::invalid_argument, "Jacobi eigenproblem did not converge");

  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double mass = 1.0 / (b + 1.0);
  for (std::size_t k = 0; k < n; ++k) {
    const auto idx = static_cast<Eigen::Index>(k);
    const double v0 = solver.eigenvectors()(0, idx);
    rule.nodes[k] = 0.5 * (1.0 + solver.eigenvalues()[idx]);
    rule.weights[k] = mass * v0 * v0;
  }
  return rule;
}

}  // namespace korovkin
