#include "cgq/weights.hpp"

#include <string>

#include "cgq/error.hpp"

namespace cgq {

Polynomial lagrange_basis(std::span<const BigReal> nodes, std::size_t j) {
  if (j >= nodes.size()) {
    fail(ErrorKind::InvalidArgument, "Lagrange index " + std::to_string(j) + " out of range");
  }
  Polynomial basis(std::vector<BigReal>{BigReal(1)});
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i == j) continue;
    const BigReal scale = BigReal(1) / (nodes[j] - nodes[i]);
    basis = poly_mul(basis, Polynomial(std::vector<BigReal>{-nodes[i] * scale, scale}));
  }
  return basis;
}

std::vector<BigReal> weights_from_nodes(std::span<const BigReal> nodes, const MomentSequence& mu) {
  WorkingPrecision scope(mu.precision);
  std::vector<BigReal> weights;
  weights.reserve(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const Polynomial basis = lagrange_basis(nodes, j);
    BigReal w = integrate(poly_mul(basis, basis), mu);
    if (!(w.sign() > 0)) {
      fail(ErrorKind::NonPositiveWeight, "weight " + std::to_string(j + 1) + " is " +
                                             to_scientific(w, 6) + " at " +
                                             std::to_string(mu.precision.bits) + " bits");
    }
    weights.push_back(std::move(w));
  }
  return weights;
}

}  // namespace cgq
