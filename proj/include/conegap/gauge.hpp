#pragma once

#include <string>
#include <utility>

#include "conegap/cone_cpn.hpp"

namespace conegap {

/// Certified interval for the hyperbolic gauge d_C. No point estimate is
/// ever reported; on multi-disk regions only bounds are available.
struct DcInterval {
  double lower = 0.0;
  double upper = kInf;
  std::vector<std::string> methods;  // which bounds were active
};

/// lower = max(delta/2, best single-disk complement distance);
/// upper = min(pi sqrt(2) e^{delta/2}, sector/Omega_alpha bound).
/// A single-disk region is exact: lower = upper = log(b/a).
DcInterval dc_bounds(const Region& r, double delta_value);

struct DtildeBounds {
  double lower = 0.0;
  double upper = kInf;
};

/// Bounds on the chained pseudo-metric between the endpoints of the supplied
/// chain: lower = delta(endpoints)/2; upper = min of the direct-pair upper
/// and the sum of per-link dc uppers. No automatic chain search.
DtildeBounds dtilde_bounds(std::span<const CVec> chain);

/// Theorem-level contraction coefficient for d~: tanh(pi e^{diam} / (2 sqrt 2)).
double dtilde_contraction_bound(double diam);

/// Rugh's contraction coefficient for d: tanh(diam/2).
double rugh_contraction_bound(double diam);

/// Vectors of C+^3 exhibiting unbounded d growth against bounded delta.
struct SequenceTriple {
  CVec x, y, z;
};

/// x_k, y_k, z_k for parameter k >= 1; each verified to lie in C+^3.
SequenceTriple remark_sequences(int k);

/// The multi-disk counterexample pair
/// x=(1,e^{-i pi/12},e^{i pi/12}), y=(2+e^{i pi/3},(2-i)e^{-i pi/12},(3-i)e^{i pi/12}).
std::pair<CVec, CVec> figure_pair();

struct InequalityReport {
  double delta = 0.0;
  DcInterval dc;
  DtildeBounds dtilde;
  bool half_delta_ok = false;
  bool exp_bound_ok = false;
  bool finiteness_consistent = false;
};

/// delta, d-bounds and the comparison-inequality flags for one pair.
InequalityReport inequality_report(const CVec& x, const CVec& y);

}  // namespace conegap
