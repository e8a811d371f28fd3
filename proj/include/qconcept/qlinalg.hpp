#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <vector>

// Minimal complex linear algebra on top of Eigen: unit state vectors,
// orthogonal projectors, spectral families, Born probabilities and collapse.
// All functions are pure; inputs are never mutated. Value-producing
// operations throw std::invalid_argument / std::domain_error when a
// precondition fails, predicates simply return false.

namespace qconcept::qlinalg {

// Numeric policy. Structural checks (unit norm, hermiticity, idempotency,
// spectral-family closure) use kStructuralTol; identities that should hold
// to machine accuracy use kArithmeticTol. Vector orthogonality gets the
// looser kOrthogonalityTol because state vectors are typically assembled
// from fitted, finite-precision parameters.
inline constexpr double kStructuralTol = 1e-10;
inline constexpr double kArithmeticTol = 1e-12;
inline constexpr double kOrthogonalityTol = 1e-8;

template <typename Scalar = double>
using Complex = std::complex<Scalar>;

template <typename Scalar = double>
using Vector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar = double>
using Operator = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

// A spectral family is a list of mutually orthogonal projectors that sum to
// the identity; see validate_spectral_family.
template <typename Scalar = double>
using SpectralFamily = std::vector<Operator<Scalar>>;

using Vec = Vector<double>;
using Op = Operator<double>;

namespace detail {

inline void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace detail

/// Bra-ket inner product: anti-linear in the bra, linear in the ket.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar inner_product(const Eigen::MatrixBase<DerivedA>& bra,
                                         const Eigen::MatrixBase<DerivedB>& ket) {
  detail::require(bra.size() == ket.size(),
                  "inner_product: dimension mismatch between bra and ket");
  return bra.derived().dot(ket.derived());
}

template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real norm(
    const Eigen::MatrixBase<Derived>& v) {
  return v.norm();
}

/// True when the squared length is 1 within tol.
template <typename Derived>
bool is_unit(const Eigen::MatrixBase<Derived>& v, double tol = kStructuralTol) {
  using std::abs;
  return abs(v.squaredNorm() - 1.0) <= tol;
}

/// Rescales v to unit length. The zero vector has no direction and is
/// rejected as a degenerate state.
template <typename Derived>
typename Derived::PlainObject normalize(const Eigen::MatrixBase<Derived>& v) {
  typename Derived::PlainObject out = v.derived();
  const auto n = out.norm();
  if (!(n > 0)) throw std::domain_error("normalize: zero vector has no unit direction");
  out /= n;
  return out;
}

/// Equal-weight normalized superposition (a + b)/sqrt(2). The 1/sqrt(2)
/// normalization is only correct for unit, mutually orthogonal inputs, so
/// both are checked (within kOrthogonalityTol).
template <typename DerivedA, typename DerivedB>
typename DerivedA::PlainObject superpose(const Eigen::MatrixBase<DerivedA>& a,
                                         const Eigen::MatrixBase<DerivedB>& b) {
  detail::require(a.size() == b.size(), "superpose: dimension mismatch");
  detail::require(is_unit(a, kOrthogonalityTol) && is_unit(b, kOrthogonalityTol),
                  "superpose: inputs must be unit vectors");
  using std::abs;
  detail::require(abs(a.derived().dot(b.derived())) <= kOrthogonalityTol,
                  "superpose: inputs must be orthogonal");
  return (a.derived() + b.derived()) / std::sqrt(2.0);
}

/// Hermitian and idempotent within tol. Non-square matrices are never
/// projectors.
template <typename Derived>
bool is_projector(const Eigen::MatrixBase<Derived>& m, double tol = kStructuralTol) {
  if (m.rows() != m.cols()) return false;
  typename Derived::PlainObject mm = m.derived();
  if ((mm - mm.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
  return ((mm * mm) - mm).cwiseAbs().maxCoeff() <= tol;
}

/// max-norm test of MN - NM. Operators of mismatched shape never commute.
template <typename DerivedA, typename DerivedB>
bool commutes(const Eigen::MatrixBase<DerivedA>& m, const Eigen::MatrixBase<DerivedB>& n,
              double tol = kStructuralTol) {
  if (m.rows() != m.cols() || n.rows() != n.cols() || m.rows() != n.rows()) return false;
  typename DerivedA::PlainObject mm = m.derived();
  typename DerivedB::PlainObject nn = n.derived();
  return ((mm * nn) - (nn * mm)).cwiseAbs().maxCoeff() <= tol;
}

/// A valid spectral family consists of projectors with vanishing pairwise
/// products whose sum is the identity.
template <typename Scalar>
bool validate_spectral_family(const SpectralFamily<Scalar>& family,
                              double tol = kStructuralTol) {
  if (family.empty()) return false;
  const Eigen::Index d = family.front().rows();
  for (const auto& p : family) {
    if (p.rows() != d || p.cols() != d) return false;
    if (!is_projector(p, tol)) return false;
  }
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if ((family[i] * family[j]).cwiseAbs().maxCoeff() > tol) return false;
  Operator<Scalar> sum = Operator<Scalar>::Zero(d, d);
  for (const auto& p : family) sum += p;
  sum -= Operator<Scalar>::Identity(d, d);
  return sum.cwiseAbs().maxCoeff() <= tol;
}

/// Born probability <A|M|A> of the outcome projected by m in unit state.
template <typename DerivedS, typename DerivedM>
typename Eigen::NumTraits<typename DerivedS::Scalar>::Real born_probability(
    const Eigen::MatrixBase<DerivedS>& state, const Eigen::MatrixBase<DerivedM>& m) {
  detail::require(m.rows() == m.cols() && state.size() == m.rows(),
                  "born_probability: operator and state dimensions disagree");
  detail::require(is_unit(state), "born_probability: state must be a unit vector");
  detail::require(is_projector(m), "born_probability: operator must be a projector");
  using std::real;
  return real(state.derived().dot(m.derived() * state.derived()));
}

/// Post-measurement state M|A>/||M|A>||. A vanishing projection means the
/// outcome has probability zero and cannot be conditioned on; because the
/// projection of a unit state carries absolute rounding error, norms at or
/// below kArithmeticTol count as vanished.
template <typename DerivedS, typename DerivedM>
typename DerivedS::PlainObject collapse(const Eigen::MatrixBase<DerivedS>& state,
                                        const Eigen::MatrixBase<DerivedM>& m) {
  detail::require(m.rows() == m.cols() && state.size() == m.rows(),
                  "collapse: operator and state dimensions disagree");
  detail::require(is_unit(state), "collapse: state must be a unit vector");
  detail::require(is_projector(m), "collapse: operator must be a projector");
  typename DerivedS::PlainObject projected = m.derived() * state.derived();
  const auto n = projected.norm();
  if (!(n > kArithmeticTol))
    throw std::domain_error("collapse: projection has zero norm (impossible outcome)");
  projected /= n;
  return projected;
}

// -- constructors ------------------------------------------------------

template <typename Scalar = double>
Operator<Scalar> identity(Eigen::Index d) {
  detail::require(d >= 1, "identity: dimension must be at least 1");
  return Operator<Scalar>::Identity(d, d);
}

template <typename Scalar = double>
Operator<Scalar> null_operator(Eigen::Index d) {
  detail::require(d >= 1, "null_operator: dimension must be at least 1");
  return Operator<Scalar>::Zero(d, d);
}

/// Diagonal projector from a 0/1 pattern, e.g. {1, 1, 0}.
template <typename Scalar = double>
Operator<Scalar> diagonal_projector(const std::vector<int>& pattern) {
  detail::require(!pattern.empty(), "diagonal_projector: empty pattern");
  Operator<Scalar> m = Operator<Scalar>::Zero(pattern.size(), pattern.size());
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    detail::require(pattern[i] == 0 || pattern[i] == 1,
                    "diagonal_projector: pattern entries must be 0 or 1");
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = Scalar(pattern[i]);
  }
  return m;
}

template <typename Scalar = double>
Vector<Scalar> basis_vector(Eigen::Index d, Eigen::Index i) {
  detail::require(d >= 1 && i >= 0 && i < d, "basis_vector: index out of range");
  Vector<Scalar> v = Vector<Scalar>::Zero(d);
  v(i) = Scalar(1);
  return v;
}

/// Two-outcome family {M, 1 - M} of a yes/no measurement.
template <typename Scalar = double>
SpectralFamily<Scalar> binary_family(const Operator<Scalar>& m) {
  detail::require(m.rows() == m.cols(), "binary_family: operator must be square");
  return {m, Operator<Scalar>(Operator<Scalar>::Identity(m.rows(), m.cols()) - m)};
}

}  // namespace qconcept::qlinalg
