#pragma once

#include <complex>
#include <random>

#include "qconcept/qlinalg.hpp"

// Shared generators for the randomized suites. Seeds are fixed per test so
// failures reproduce.

namespace testutil {

inline qconcept::qlinalg::Vec random_unit_vector(std::mt19937& rng, Eigen::Index dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  qconcept::qlinalg::Vec v(dim);
  do {
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = {gauss(rng), gauss(rng)};
  } while (v.norm() == 0.0);
  return v / v.norm();
}

// Random diagonal 0/1 projector; may be the null or identity operator.
inline qconcept::qlinalg::Op random_diagonal_projector(std::mt19937& rng, Eigen::Index dim) {
  std::bernoulli_distribution coin(0.5);
  qconcept::qlinalg::Op m = qconcept::qlinalg::Op::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    if (coin(rng)) m(i, i) = 1.0;
  return m;
}

}  // namespace testutil
