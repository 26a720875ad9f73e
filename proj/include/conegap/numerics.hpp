#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace conegap {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

/// Dense square complex matrix, row-major.
class CMat {
 public:
  CMat() = default;
  explicit CMat(std::size_t n) : n_(n), a_(n * n) {}
  static CMat identity(std::size_t n);

  std::size_t dim() const { return n_; }
  Complex& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  CVec row(std::size_t i) const;
  Complex trace() const;
  double frobenius_norm() const;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> a_;
};

double norm2(const CVec& v);
CVec scaled(const CVec& v, Complex s);
bool all_finite(const CVec& v);
bool all_finite(const CMat& m);

/// y_k = sum_j a_{kj} x_j. Throws on dimension mismatch.
CVec mat_apply(const CMat& A, const CVec& x);

/// coeff[k] multiplies lambda^k; leading coefficient nonzero.
struct Polynomial {
  std::vector<Complex> coeff;

  std::size_t degree() const { return coeff.size() - 1; }
  Complex eval(Complex z) const;
  Polynomial& normalize();  // make monic
};

/// Monic char. polynomial det(lambda I - A) by the Faddeev-LeVerrier recurrence.
/// Verification oracle only; n <= 12.
Polynomial characteristic_polynomial(const CMat& A);

/// All roots by Durand-Kerner simultaneous iteration from a perturbed circle.
/// Throws std::runtime_error on non-convergence.
std::vector<Complex> polynomial_roots(const Polynomial& p, double tol = 1e-10);

/// Eigenvalue oracle (n <= 12), sorted by modulus descending; ties broken by
/// descending real part, then descending imaginary part. Triangular matrices
/// return their diagonal exactly. Never used inside certification paths.
std::vector<Complex> eigenvalues(const CMat& A);

}  // namespace conegap
