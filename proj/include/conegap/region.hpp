#pragma once

#include <limits>
#include <span>
#include <variant>
#include <vector>

#include "conegap/numerics.hpp"

namespace conegap {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Closed disk; radius 0 is a legitimate point-disk.
struct Disk {
  Complex center;
  double radius = 0.0;
};

/// {z : Re(z * conj(normal)) >= offset}, |normal| = 1.
struct HalfPlane {
  Complex normal;
  double offset = 0.0;
};

/// {z : |z - excluded.center| >= excluded.radius} together with the point at infinity.
struct DiskComplement {
  Disk excluded;
};

using RegionPart = std::variant<Disk, HalfPlane, DiskComplement>;

/// Finite union of parts representing E_C(x,y).
struct Region {
  std::vector<RegionPart> parts;
};

/// w -> (a w + b)/(c w + d), ad - bc != 0.
struct MoebiusMap {
  Complex a, b, c, d;

  Complex apply(Complex w) const;
  MoebiusMap inverse() const { return {d, -b, -c, a}; }
  MoebiusMap compose(const MoebiusMap& inner) const;
};

/// Exact image of the closed right half-plane (with its boundary point at
/// infinity) under a nondegenerate Moebius map: a closed disk, a half-plane,
/// or the complement of an open disk, in closed form.
RegionPart moebius_image_rhp(const MoebiusMap& phi);

struct ModBounds {
  double inf_mod = 0.0;   // a
  double sup_mod = kInf;  // b, may be +inf
};

/// a = inf |z|, b = sup |z| over the union.
ModBounds region_mod_bounds(const Region& r);

/// Poincare metric of the right half-plane:
/// rho(a,b) = log[(|a+conj(b)| + |a-b|) / (|a+conj(b)| - |a-b|)].
double rhp_poincare(Complex a, Complex b);

/// Hyperbolic diameter of a closed disk strictly inside the RHP:
/// log((Re c + r)/(Re c - r)).
double disk_rhp_diameter(const Disk& d);

struct DiameterEstimate {
  double lower = 0.0;  // certified achieved value (boundary sampling + exact single-disk diameters)
  double upper = 0.0;  // certified upper bound via center-to-center chaining
};

/// RHP-diameter of a union of disks. The lower estimate samples `samples`
/// boundary points per circle and refines the best pair by golden section;
/// the upper bound is max over pairs of diam_i + rho(c_i,c_j) + diam_j.
// Drops disks contained in another disk of the family (duplicates included);
// the union of the survivors is unchanged.
std::vector<Disk> dominant_disks(std::span<const Disk> disks);

DiameterEstimate rhp_union_diameter(std::span<const Disk> disks, int samples = 256);

/// Poincare distance between 0 and infinity in the complement of the closed
/// disk: log((|c|+r)/(|c|-r)). Requires |center| > radius.
double poincare_complement_disk(const Disk& d);

/// d_{Omega_alpha}(0, infinity) = alpha log(b/a), where Omega_alpha is the
/// complement of two disks through a and b meeting the real axis at angle
/// pi/(2 alpha).
double omega_alpha_distance(double a, double b, double alpha);

/// Upper bound on the hyperbolic distance 0 <-> infinity outside the region,
/// via the smallest admissible Omega_alpha covering the region's sector.
/// Returns +inf when the bound does not apply (non-disk parts, sector too
/// wide, or alpha beyond the cap of 16).
double sector_upper_bound(const Region& r);

inline constexpr double kSectorAlphaCap = 16.0;

}  // namespace conegap
