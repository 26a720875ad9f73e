#include "conegap/cone_cpn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace conegap {

namespace {

constexpr double kSignTol = 1e-12;  // relative to |v_k||v_l|
constexpr double kColinearTol = 1e-13;

bool colinear(const CVec& x, const CVec& y) {
  const double scale = norm2(x) * norm2(y);
  for (std::size_t k = 0; k < x.size(); ++k)
    for (std::size_t l = k + 1; l < x.size(); ++l)
      if (std::abs(x[k] * y[l] - x[l] * y[k]) > kColinearTol * scale) return false;
  return true;
}

void require_nonzero(const CVec& v, const char* who) {
  if (v.empty() || norm2(v) == 0.0) throw std::invalid_argument(std::string(who) + ": zero vector");
  if (!all_finite(v)) throw std::invalid_argument(std::string(who) + ": non-finite entry");
}

// delta for interior x via the disk decomposition; +inf when the region
// reaches 0 (up to scale-free tolerance).
double delta_oriented(const CVec& x, const CVec& y) {
  const ModBounds mb = region_mod_bounds(e_region(x, y));
  if (mb.inf_mod <= kSignTol * mb.sup_mod) return kInf;
  return std::log(mb.sup_mod / mb.inf_mod);
}

}  // namespace

ConeClass classify(const CVec& v) {
  require_nonzero(v, "classify");
  bool on_boundary = false;
  for (std::size_t k = 0; k < v.size(); ++k)
    for (std::size_t l = k + 1; l < v.size(); ++l) {
      const double s = (v[k] * std::conj(v[l])).real();
      const double scale = std::abs(v[k]) * std::abs(v[l]);
      if (s < -kSignTol * scale) return ConeClass::outside;
      if (s <= kSignTol * scale) on_boundary = true;
    }
  return on_boundary ? ConeClass::boundary : ConeClass::interior;
}

Region e_region(const CVec& x, const CVec& y) {
  require_nonzero(x, "e_region");
  require_nonzero(y, "e_region");
  if (x.size() != y.size()) throw std::invalid_argument("e_region: dimension mismatch");
  if (classify(x) != ConeClass::interior)
    throw std::invalid_argument("e_region: base point must be interior");

  Region r;
  for (std::size_t k = 0; k < x.size(); ++k)
    for (std::size_t l = k; l < x.size(); ++l) {
      if (k == l) {
        r.parts.push_back(Disk{y[k] / x[k], 0.0});
        continue;
      }
      const double denom = 2.0 * (x[k] * std::conj(x[l])).real();
      const Complex center = (std::conj(x[l]) * y[k] + std::conj(x[k]) * y[l]) / denom;
      const double radius = std::abs(x[l] * y[k] - x[k] * y[l]) / denom;
      r.parts.push_back(Disk{center, radius});
    }
  return r;
}

double delta(const CVec& x, const CVec& y) {
  require_nonzero(x, "delta");
  require_nonzero(y, "delta");
  if (x.size() != y.size()) throw std::invalid_argument("delta: dimension mismatch");
  if (colinear(x, y)) return 0.0;

  const ConeClass cx = classify(x), cy = classify(y);
  if (cx == ConeClass::interior && cy == ConeClass::interior) {
    const double d1 = delta_oriented(x, y);
    const double d2 = delta_oriented(y, x);
    if (std::isfinite(d1) != std::isfinite(d2) ||
        (std::isfinite(d1) && std::abs(d1 - d2) > 1e-9 * (1.0 + d1)))
      throw std::logic_error("delta: orientation self-check failed");
    return std::max(d1, d2);
  }
  if (cx == ConeClass::interior) return delta_oriented(x, y);
  if (cy == ConeClass::interior) return delta_oriented(y, x);
  // Neither point interior: the region is unbounded or touches 0.
  return kInf;
}

double hilbert_rplus(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.empty()) throw std::invalid_argument("hilbert_rplus: dimension mismatch");
  double lo = kInf, hi = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] <= 0.0 || y[k] <= 0.0)
      throw std::invalid_argument("hilbert_rplus: coordinates must be positive");
    const double ratio = y[k] / x[k];
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  return std::log(hi / lo);
}

ApertureWitness aperture_witness(std::size_t n) {
  if (n == 0) throw std::invalid_argument("aperture_witness: n >= 1 required");
  return {std::sqrt(static_cast<double>(n)), CVec(n, Complex{1.0})};
}

Alignment align(const CVec& x, const CVec& y) {
  require_nonzero(x, "align");
  require_nonzero(y, "align");
  if (std::abs(norm2(x) - 1.0) > 1e-9 || std::abs(norm2(y) - 1.0) > 1e-9)
    throw std::invalid_argument("align: unit vectors required");
  const double d = delta(x, y);
  if (!std::isfinite(d)) throw std::invalid_argument("align: delta(x,y) is infinite");

  Complex ip = 0.0;  // <y,x> = sum y_k conj(x_k)
  for (std::size_t k = 0; k < x.size(); ++k) ip += y[k] * std::conj(x[k]);
  const Complex alpha = (ip == Complex{0.0}) ? Complex{1.0} : std::conj(ip) / std::abs(ip);
  return {alpha, std::sqrt(static_cast<double>(x.size())) * d};
}

}  // namespace conegap
