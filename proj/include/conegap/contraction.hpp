#pragma once

#include <array>
#include <optional>

#include "conegap/cone_cpn.hpp"

namespace conegap {

/// Verdict of the entrywise cone-preservation condition
/// Re(conj(a_kp) a_lq + conj(a_kq) a_lp) > |a_kp a_lq - a_kq a_lp|.
struct ConditionReport {
  bool holds = false;
  double margin = 0.0;  // min over tuples of LHS - RHS
  std::optional<std::array<std::size_t, 4>> first_violation;  // (k,l,p,q), 0-based
};

/// Exhaustive n^4 scan, lexicographic order.
ConditionReport check_condition(const CMat& A);

struct ThetaSigma {
  double theta;       // max |a_kp a_lq - a_kq a_lp| / Re(conj(a_kp) a_lq + conj(a_kq) a_lp)
  double sigma;       // sqrt(max |a_kp a_lq| / |a_kq a_lp|)
  double diam_bound;  // 8 log((1+theta)/(1-theta)) + 2 log sigma
};

/// Absent when the condition fails or a zero entry makes sigma undefined.
std::optional<ThetaSigma> theta_sigma(const CMat& A);

struct DiameterBounds {
  double delta1 = 0.0;       // max over row pairs of delta(lambda_k, lambda_l)
  DiameterEstimate delta2;   // max over row pairs of the RHP diameter of E(lambda_k, lambda_l)
  double lower = 0.0;        // max(delta1, delta2.lower)
  double upper = 0.0;        // delta1 + 2 delta2.upper
};

/// The two-sided sandwich max(D1,D2) <= delta-diam(A(C+^n\0)) <= D1 + 2 D2.
/// Requires the condition to hold.
DiameterBounds diameter_bounds(const CMat& A, int samples = 256);

/// tanh(diam/4), the contraction coefficient of the projective metric.
double contraction_coefficient(double diam);

struct PowerStep {
  double step_delta;   // delta(x_{m-1}, x_m), +inf possible on the first step
  double error_bound;  // K c delta(x_{m-1}, x_m)/(1 - c), certified norm error of x_m
};

struct PowerResult {
  Complex lambda;
  CVec v;          // unit leading eigenvector estimate
  int iters = 0;
  double error_bound = 0.0;
  double residual = 0.0;  // ||Av - lambda v|| / ||v||
  std::vector<PowerStep> trace;
};

/// Metric-contraction power iteration with phase alignment each step.
/// Stops when delta(x_m, x_{m+1}) <= tol; throws when max_iter is exceeded
/// or the condition fails.
PowerResult power_iterate(const CMat& A, const CVec& x0, double tol = 1e-9,
                          int max_iter = 10000, int samples = 256);

struct GapCertificate {
  ConditionReport condition;
  std::optional<DiameterBounds> diam;
  std::optional<ThetaSigma> ts;
  double delta_up = kInf;  // min of the two diameter upper bounds
  double c = 1.0;          // tanh(delta_up/4)
  double K = 1.0;          // sqrt(n), sectional aperture constant
  std::optional<PowerResult> leading;
  std::optional<double> oracle_ratio;  // |lambda_2| / |lambda_1| from the eigen oracle
};

/// Full certification pipeline. The eigen oracle is a cross-check only and
/// never feeds the bounds; when run, oracle_ratio <= c + 1e-9 is asserted.
GapCertificate certify(const CMat& A, bool run_oracle = true, int samples = 256,
                       double tol = 1e-9, int max_iter = 10000);

}  // namespace conegap
