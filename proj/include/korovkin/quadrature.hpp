#pragma once

#include <cstddef>
#include <vector>

namespace korovkin {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss rule for ∫_0^1 t^beta g(t) dt, exact for polynomial g of degree
/// <= 2n - 1. Weights sum to 1/(beta + 1).
QuadratureRule gauss_jacobi_unit(std::size_t n, double beta);

inline QuadratureRule gauss_legendre_unit(std::size_t n) { return gauss_jacobi_unit(n, 0.0); }

}  // namespace korovkin
