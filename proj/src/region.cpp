#include "conegap/region.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace conegap {

namespace {
constexpr double kZeroTol = 1e-12;
}

Complex MoebiusMap::apply(Complex w) const { return (a * w + b) / (c * w + d); }

MoebiusMap MoebiusMap::compose(const MoebiusMap& g) const {
  return {a * g.a + b * g.c, a * g.b + b * g.d, c * g.a + d * g.c, c * g.b + d * g.d};
}

RegionPart moebius_image_rhp(const MoebiusMap& phi) {
  const double scale = std::max({std::abs(phi.a), std::abs(phi.b), std::abs(phi.c), std::abs(phi.d)});
  if (scale == 0.0 || std::abs(phi.a * phi.d - phi.b * phi.c) <= kZeroTol * scale * scale)
    throw std::invalid_argument("moebius_image_rhp: degenerate map");

  // Normalize coefficients to unit scale before the sign tests.
  const Complex a = phi.a / scale, b = phi.b / scale, c = phi.c / scale, d = phi.d / scale;

  // z = phi(w), Re(w) >= 0  <=>  -P|z|^2 + Re(Q z) - R0 >= 0 with
  //   P = Re(d conj(c)),  Q = d conj(a) + conj(b) c,  R0 = Re(b conj(a)).
  const double P = (d * std::conj(c)).real();
  const Complex Q = d * std::conj(a) + std::conj(b) * c;
  const double R0 = (b * std::conj(a)).real();

  if (std::abs(P) <= kZeroTol) {
    if (std::abs(Q) <= kZeroTol) throw std::invalid_argument("moebius_image_rhp: degenerate map");
    return HalfPlane{std::conj(Q) / std::abs(Q), R0 / std::abs(Q)};
  }

  const Complex center = std::conj(Q) / (2.0 * P);
  const double rad_sq = std::norm(Q) / (4.0 * P * P) - R0 / P;
  if (P > 0.0) return Disk{center, std::sqrt(std::max(rad_sq, 0.0))};
  if (rad_sq <= 0.0) throw std::invalid_argument("moebius_image_rhp: degenerate map");
  return DiskComplement{Disk{center, std::sqrt(rad_sq)}};
}

ModBounds region_mod_bounds(const Region& r) {
  if (r.parts.empty()) throw std::invalid_argument("region_mod_bounds: empty region");
  double a = kInf, b = 0.0;
  for (const RegionPart& part : r.parts) {
    double pa = 0.0, pb = kInf;
    if (const Disk* d = std::get_if<Disk>(&part)) {
      pa = std::max(std::abs(d->center) - d->radius, 0.0);
      pb = std::abs(d->center) + d->radius;
    } else if (const HalfPlane* h = std::get_if<HalfPlane>(&part)) {
      pa = std::max(h->offset, 0.0);
      pb = kInf;
    } else {
      const Disk& ex = std::get<DiskComplement>(part).excluded;
      pa = std::max(ex.radius - std::abs(ex.center), 0.0);
      pb = kInf;
    }
    a = std::min(a, pa);
    b = std::max(b, pb);
  }
  return {a, b};
}

double rhp_poincare(Complex a, Complex b) {
  if (a.real() <= 0.0 || b.real() <= 0.0)
    throw std::invalid_argument("rhp_poincare: arguments must lie in the open right half-plane");
  const double num = std::abs(a + std::conj(b)) + std::abs(a - b);
  const double den = std::abs(a + std::conj(b)) - std::abs(a - b);
  if (den <= 0.0) return kInf;
  return std::log(num / den);
}

double disk_rhp_diameter(const Disk& d) {
  if (d.radius < 0.0) throw std::invalid_argument("disk_rhp_diameter: negative radius");
  const double re = d.center.real();
  if (re - d.radius <= kZeroTol * (std::abs(d.center) + d.radius))
    throw std::invalid_argument("disk_rhp_diameter: disk not strictly inside the right half-plane");
  if (d.radius == 0.0) return 0.0;
  return std::log((re + d.radius) / (re - d.radius));
}

namespace {

Complex boundary_point(const Disk& d, double theta) {
  return d.center + d.radius * Complex{std::cos(theta), std::sin(theta)};
}

// One-dimensional golden-section maximization of f over [lo, hi].
template <typename F>
double golden_max(F f, double lo, double hi, int iters) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = hi - kInvPhi * (hi - lo), x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    }
  }
  return std::max(f1, f2);
}

}  // namespace

std::vector<Disk> dominant_disks(std::span<const Disk> disks) {
  std::vector<Disk> kept;
  for (std::size_t i = 0; i < disks.size(); ++i) {
    bool covered = false;
    for (std::size_t j = 0; j < disks.size() && !covered; ++j) {
      if (i == j) continue;
      const double slack = disks[j].radius - disks[i].radius - std::abs(disks[j].center - disks[i].center);
      const double tol = kZeroTol * (std::abs(disks[j].center) + disks[j].radius);
      if (slack > tol || (slack >= -tol && (disks[j].radius > disks[i].radius + tol || j < i)))
        covered = true;  // ties resolved by index so mutually-covering disks keep one
    }
    if (!covered) kept.push_back(disks[i]);
  }
  return kept;
}

DiameterEstimate rhp_union_diameter(std::span<const Disk> input, int samples) {
  if (samples < 16) throw std::invalid_argument("rhp_union_diameter: samples >= 16 required");
  if (input.empty()) throw std::invalid_argument("rhp_union_diameter: empty union");

  for (const Disk& d : input) {
    const double scale = std::abs(d.center) + d.radius;
    if (d.center.real() - d.radius <= kZeroTol * scale)
      throw std::invalid_argument("rhp_union_diameter: disk touching the imaginary axis");
  }
  const std::vector<Disk> disks = dominant_disks(input);

  // Lower estimate: exact per-disk diameters plus sampled boundary pairs.
  double lower = 0.0;
  for (const Disk& d : disks) lower = std::max(lower, disk_rhp_diameter(d));

  struct SamplePoint {
    Complex z;
    std::size_t disk;
    double theta;
  };
  std::vector<SamplePoint> pts;
  for (std::size_t i = 0; i < disks.size(); ++i) {
    if (disks[i].radius == 0.0) {
      pts.push_back({disks[i].center, i, 0.0});
      continue;
    }
    for (int j = 0; j < samples; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / samples;
      pts.push_back({boundary_point(disks[i], theta), i, theta});
    }
  }

  std::size_t best_p = 0, best_q = 0;
  for (std::size_t p = 0; p < pts.size(); ++p)
    for (std::size_t q = p + 1; q < pts.size(); ++q) {
      const double rho = rhp_poincare(pts[p].z, pts[q].z);
      if (rho > lower) {
        lower = rho;
        best_p = p;
        best_q = q;
      }
    }

  if (best_q != best_p) {
    // Local refinement around the best sampled pair, one angle at a time.
    const Disk& dp = disks[pts[best_p].disk];
    const Disk& dq = disks[pts[best_q].disk];
    const double step = 2.0 * std::numbers::pi / samples;
    double tp = pts[best_p].theta, tq = pts[best_q].theta;
    for (int round = 0; round < 3; ++round) {
      if (dp.radius > 0.0)
        lower = std::max(lower, golden_max(
                                    [&](double t) {
                                      const double v = rhp_poincare(boundary_point(dp, t), boundary_point(dq, tq));
                                      return v;
                                    },
                                    tp - step, tp + step, 40));
      if (dq.radius > 0.0)
        lower = std::max(lower, golden_max(
                                    [&](double t) {
                                      return rhp_poincare(boundary_point(dp, tp), boundary_point(dq, t));
                                    },
                                    tq - step, tq + step, 40));
    }
  }

  // Upper bound: within one disk the diameter suffices; across disks chain
  // through the euclidean centers.
  double upper = 0.0;
  std::vector<double> diam(disks.size());
  for (std::size_t i = 0; i < disks.size(); ++i) {
    diam[i] = disk_rhp_diameter(disks[i]);
    upper = std::max(upper, diam[i]);
  }
  for (std::size_t i = 0; i < disks.size(); ++i)
    for (std::size_t j = i + 1; j < disks.size(); ++j)
      upper = std::max(upper, diam[i] + rhp_poincare(disks[i].center, disks[j].center) + diam[j]);

  return {std::min(lower, upper), upper};
}

double poincare_complement_disk(const Disk& d) {
  if (d.radius < 0.0) throw std::invalid_argument("poincare_complement_disk: negative radius");
  const double c = std::abs(d.center);
  if (c - d.radius <= kZeroTol * (c + d.radius))
    throw std::invalid_argument("poincare_complement_disk: disk containing or touching 0");
  if (d.radius == 0.0) return 0.0;
  return std::log((c + d.radius) / (c - d.radius));
}

double omega_alpha_distance(double a, double b, double alpha) {
  if (!(0.0 < a && a <= b)) throw std::invalid_argument("omega_alpha_distance: need 0 < a <= b");
  if (alpha < 1.0) throw std::invalid_argument("omega_alpha_distance: alpha >= 1 required");
  return alpha * std::log(b / a);
}

double sector_upper_bound(const Region& r) {
  // Inapplicability is a value here, not an error.
  std::vector<Disk> disks;
  for (const RegionPart& part : r.parts) {
    const Disk* d = std::get_if<Disk>(&part);
    if (d == nullptr) return kInf;
    disks.push_back(*d);
  }
  if (disks.empty()) return kInf;

  const ModBounds mb = region_mod_bounds(r);
  if (mb.inf_mod <= kZeroTol * mb.sup_mod) return kInf;

  // Rotate by the argument of the modulus-weighted mean center, then measure
  // the widest angular reach of the parts.
  Complex mean = 0.0;
  for (const Disk& d : disks) mean += std::abs(d.center) * d.center;
  if (mean == Complex{0.0}) return kInf;
  const double rot = std::arg(mean);

  double theta_max = 0.0;
  for (const Disk& d : disks) {
    const double c = std::abs(d.center);
    if (d.radius >= c) return kInf;
    const double reach = std::abs(std::arg(d.center * std::polar(1.0, -rot))) + std::asin(d.radius / c);
    theta_max = std::max(theta_max, reach);
  }
  if (theta_max >= std::numbers::pi / 2.0 - 1e-9) return kInf;

  const double log_ba = std::log(mb.sup_mod / mb.inf_mod);
  const double sig = (mb.sup_mod - mb.inf_mod) / (mb.sup_mod + mb.inf_mod);

  // Sector of half-angle Theta is covered by the complement of Omega_alpha
  // iff 2 atan(sig / tan(pi/(2 alpha))) >= Theta; the left side grows with
  // alpha, so the smallest admissible alpha gives the tightest bound.
  if (theta_max <= 1e-9) return kSectorAlphaCap * log_ba;

  auto coverage = [&](double alpha) {
    return 2.0 * std::atan(sig / std::tan(std::numbers::pi / (2.0 * alpha))) - theta_max;
  };
  if (coverage(kSectorAlphaCap) < 0.0) return kInf;
  double lo = 1.0, hi = kSectorAlphaCap;
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    if (coverage(mid) >= 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return hi * log_ba;
}

}  // namespace conegap
