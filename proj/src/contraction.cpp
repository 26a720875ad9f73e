#include "conegap/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "conegap/numerics.hpp"

namespace conegap {

ConditionReport check_condition(const CMat& A) {
  const std::size_t n = A.dim();
  if (n == 0) throw std::invalid_argument("check_condition: empty matrix");
  if (!all_finite(A)) throw std::invalid_argument("check_condition: non-finite entry");

  ConditionReport report;
  report.holds = true;
  report.margin = kInf;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          const double lhs = (std::conj(A(k, p)) * A(l, q) + std::conj(A(k, q)) * A(l, p)).real();
          const double rhs = std::abs(A(k, p) * A(l, q) - A(k, q) * A(l, p));
          const double margin = lhs - rhs;
          if (margin < report.margin) report.margin = margin;
          if (margin <= 0.0 && !report.first_violation) {
            report.holds = false;
            report.first_violation = {{k, l, p, q}};
          }
        }
  return report;
}

std::optional<ThetaSigma> theta_sigma(const CMat& A) {
  const std::size_t n = A.dim();
  if (!check_condition(A).holds) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (A(i, j) == Complex{0.0}) return std::nullopt;  // sigma undefined

  double theta = 0.0, sigma_sq = 1.0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          const double lhs = (std::conj(A(k, p)) * A(l, q) + std::conj(A(k, q)) * A(l, p)).real();
          const double det = std::abs(A(k, p) * A(l, q) - A(k, q) * A(l, p));
          theta = std::max(theta, det / lhs);
          sigma_sq = std::max(sigma_sq, std::abs(A(k, p) * A(l, q)) / std::abs(A(k, q) * A(l, p)));
        }
  // theta = 0 (all cross determinants vanish) falls outside (0,1); clamp.
  theta = std::max(theta, 1e-15);
  const double sigma = std::sqrt(sigma_sq);
  const double bound = 8.0 * std::log((1.0 + theta) / (1.0 - theta)) + 2.0 * std::log(sigma);
  return ThetaSigma{theta, sigma, bound};
}

DiameterBounds diameter_bounds(const CMat& A, int samples) {
  if (!check_condition(A).holds)
    throw std::invalid_argument("diameter_bounds: cone-preservation condition fails");
  const std::size_t n = A.dim();

  DiameterBounds out;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l) {
      const CVec rk = A.row(k), rl = A.row(l);
      out.delta1 = std::max(out.delta1, delta(rk, rl));

      std::vector<Disk> disks;
      for (const RegionPart& part : e_region(rk, rl).parts)
        disks.push_back(std::get<Disk>(part));
      const DiameterEstimate est = rhp_union_diameter(disks, samples);
      out.delta2.lower = std::max(out.delta2.lower, est.lower);
      out.delta2.upper = std::max(out.delta2.upper, est.upper);
    }
  out.lower = std::max(out.delta1, out.delta2.lower);
  out.upper = out.delta1 + 2.0 * out.delta2.upper;
  return out;
}

double contraction_coefficient(double diam) {
  if (diam < 0.0) throw std::invalid_argument("contraction_coefficient: negative diameter");
  return std::tanh(diam / 4.0);
}

namespace {

// Phase-minimizing alignment that tolerates an infinite delta (which can
// happen on the very first step when x0 is on the cone boundary).
Complex raw_phase(const CVec& x, const CVec& y) {
  Complex ip = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) ip += y[k] * std::conj(x[k]);
  return (ip == Complex{0.0}) ? Complex{1.0} : std::conj(ip) / std::abs(ip);
}

PowerResult power_iterate_with_c(const CMat& A, const CVec& x0, double tol, int max_iter,
                                 double c) {
  const std::size_t n = A.dim();
  if (x0.size() != n) throw std::invalid_argument("power_iterate: dimension mismatch");
  if (classify(x0) == ConeClass::outside)
    throw std::invalid_argument("power_iterate: x0 must belong to the cone");
  if (tol <= 0.0) throw std::invalid_argument("power_iterate: tol must be positive");

  const double K = std::sqrt(static_cast<double>(n));
  PowerResult res;
  CVec x = scaled(x0, 1.0 / norm2(x0));
  for (int m = 0; m < max_iter; ++m) {
    CVec y = mat_apply(A, x);
    y = scaled(y, 1.0 / norm2(y));
    const CVec next = scaled(y, raw_phase(x, y));
    const double d = delta(x, next);
    const double bound = (c < 1.0) ? K * c * d / (1.0 - c) : kInf;
    res.trace.push_back({d, bound});
    x = next;
    res.iters = m + 1;
    if (d <= tol) {
      res.v = x;
      res.error_bound = bound;
      const CVec Av = mat_apply(A, x);
      Complex num = 0.0, den = 0.0;  // m0 = (1,...,1) never vanishes on the cone
      for (std::size_t k = 0; k < n; ++k) {
        num += Av[k];
        den += x[k];
      }
      res.lambda = num / den;
      double rsq = 0.0;
      for (std::size_t k = 0; k < n; ++k) rsq += std::norm(Av[k] - res.lambda * x[k]);
      res.residual = std::sqrt(rsq);
      return res;
    }
  }
  throw std::runtime_error("power_iterate: max_iter exceeded");
}

double combined_upper_bound(const CMat& A, int samples) {
  const DiameterBounds db = diameter_bounds(A, samples);
  const std::optional<ThetaSigma> ts = theta_sigma(A);
  return ts ? std::min(db.upper, ts->diam_bound) : db.upper;
}

}  // namespace

PowerResult power_iterate(const CMat& A, const CVec& x0, double tol, int max_iter, int samples) {
  const double c = contraction_coefficient(combined_upper_bound(A, samples));
  return power_iterate_with_c(A, x0, tol, max_iter, c);
}

GapCertificate certify(const CMat& A, bool run_oracle, int samples, double tol, int max_iter) {
  GapCertificate cert;
  cert.condition = check_condition(A);
  cert.K = std::sqrt(static_cast<double>(A.dim()));
  if (!cert.condition.holds) return cert;

  cert.diam = diameter_bounds(A, samples);
  cert.ts = theta_sigma(A);
  cert.delta_up = cert.ts ? std::min(cert.diam->upper, cert.ts->diam_bound) : cert.diam->upper;
  cert.c = contraction_coefficient(cert.delta_up);
  cert.leading = power_iterate_with_c(A, CVec(A.dim(), Complex{1.0}), tol, max_iter, cert.c);

  if (run_oracle && A.dim() <= 12) {
    const std::vector<Complex> ev = eigenvalues(A);
    const double ratio = (ev.size() > 1) ? std::abs(ev[1]) / std::abs(ev[0]) : 0.0;
    cert.oracle_ratio = ratio;
    if (ratio > cert.c + 1e-9)
      throw std::logic_error("certify: eigen oracle contradicts the certified gap");
  }
  return cert;
}

}  // namespace conegap
