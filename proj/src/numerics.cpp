#include "conegap/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace conegap {

CMat CMat::identity(std::size_t n) {
  CMat m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CVec CMat::row(std::size_t i) const {
  return CVec(a_.begin() + static_cast<std::ptrdiff_t>(i * n_),
              a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
}

Complex CMat::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double CMat::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

double norm2(const CVec& v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return std::sqrt(s);
}

CVec scaled(const CVec& v, Complex s) {
  CVec out = v;
  for (Complex& z : out) z *= s;
  return out;
}

bool all_finite(const CVec& v) {
  for (const Complex& z : v)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

bool all_finite(const CMat& m) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const Complex z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  return true;
}

CVec mat_apply(const CMat& A, const CVec& x) {
  const std::size_t n = A.dim();
  if (x.size() != n) throw std::invalid_argument("mat_apply: dimension mismatch");
  CVec y(n, Complex{0.0});
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) y[k] += A(k, j) * x[j];
  return y;
}

Complex Polynomial::eval(Complex z) const {
  Complex acc = 0.0;
  for (std::size_t i = coeff.size(); i-- > 0;) acc = acc * z + coeff[i];
  return acc;
}

Polynomial& Polynomial::normalize() {
  const Complex lead = coeff.back();
  if (lead == Complex{0.0}) throw std::invalid_argument("Polynomial: zero leading coefficient");
  for (Complex& c : coeff) c /= lead;
  return *this;
}

Polynomial characteristic_polynomial(const CMat& A) {
  const std::size_t n = A.dim();
  if (n == 0 || n > 12) throw std::invalid_argument("characteristic_polynomial: n must be in [1,12]");

  // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr M_1,
  //   M_k = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k.
  std::vector<Complex> c(n + 1);
  c[n] = 1.0;
  CMat M = A;
  c[n - 1] = -M.trace();
  for (std::size_t k = 2; k <= n; ++k) {
    CMat shifted = M;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) += c[n - k + 1];
    CMat next(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Complex s = 0.0;
        for (std::size_t m = 0; m < n; ++m) s += A(i, m) * shifted(m, j);
        next(i, j) = s;
      }
    M = next;
    c[n - k] = -M.trace() / static_cast<double>(k);
  }
  return Polynomial{std::move(c)};
}

std::vector<Complex> polynomial_roots(const Polynomial& p, double tol) {
  if (p.coeff.size() < 2) throw std::invalid_argument("polynomial_roots: degree >= 1 required");
  Polynomial mono = p;
  mono.normalize();
  const std::size_t n = mono.degree();

  double coeff_scale = 0.0;
  for (const Complex& c : mono.coeff) coeff_scale = std::max(coeff_scale, std::abs(c));

  double rad = 0.0;
  for (std::size_t i = 0; i < n; ++i) rad = std::max(rad, std::abs(mono.coeff[i]));
  rad += 1.0;

  // Equispaced on a circle, rotated by an irrational angle so no initial
  // guess coincides with a symmetric root configuration.
  constexpr double kRotation = 2.0 * std::numbers::pi * 0.3819660112501051;
  std::vector<Complex> z(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double ang = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n) + kRotation;
    z[j] = rad * Complex{std::cos(ang), std::sin(ang)};
  }

  const int max_iter = 500 + 100 * static_cast<int>(n);
  for (int it = 0; it < max_iter; ++it) {
    double max_step = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      Complex denom = 1.0;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) denom *= (z[j] - z[k]);
      if (denom == Complex{0.0}) {
        z[j] += Complex{1e-8 * rad, 1e-8 * rad};
        continue;
      }
      const Complex step = mono.eval(z[j]) / denom;
      z[j] -= step;
      max_step = std::max(max_step, std::abs(step));
    }
    if (max_step <= 1e-15 * rad) break;
  }

  for (const Complex& r : z)
    if (std::abs(mono.eval(r)) > tol * std::max(coeff_scale, 1.0) * 1e3)
      throw std::runtime_error("polynomial_roots: Durand-Kerner did not converge");
  return z;
}

namespace {

bool is_lower_triangular(const CMat& A) {
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = i + 1; j < A.dim(); ++j)
      if (A(i, j) != Complex{0.0}) return false;
  return true;
}

bool is_upper_triangular(const CMat& A) {
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (A(i, j) != Complex{0.0}) return false;
  return true;
}

void sort_by_modulus(std::vector<Complex>& v) {
  std::sort(v.begin(), v.end(), [](const Complex& a, const Complex& b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (std::abs(ma - mb) > 1e-9 * (1.0 + std::max(ma, mb))) return ma > mb;
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
}

}  // namespace

std::vector<Complex> eigenvalues(const CMat& A) {
  const std::size_t n = A.dim();
  if (n == 0 || n > 12) throw std::invalid_argument("eigenvalues: n must be in [1,12]");

  std::vector<Complex> out;
  if (is_lower_triangular(A) || is_upper_triangular(A)) {
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(A(i, i));
  } else {
    out = polynomial_roots(characteristic_polynomial(A), 1e-8);
    // A couple of Newton polishing steps sharpen the roots cheaply.
    const Polynomial p = characteristic_polynomial(A);
    Polynomial dp;
    dp.coeff.resize(p.coeff.size() - 1);
    for (std::size_t i = 1; i < p.coeff.size(); ++i)
      dp.coeff[i - 1] = p.coeff[i] * static_cast<double>(i);
    for (Complex& r : out)
      for (int s = 0; s < 3; ++s) {
        const Complex d = dp.eval(r);
        if (std::abs(d) < 1e-300) break;
        r -= p.eval(r) / d;
      }
  }
  sort_by_modulus(out);
  return out;
}

}  // namespace conegap
