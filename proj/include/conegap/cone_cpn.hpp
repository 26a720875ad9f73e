#pragma once

#include "conegap/region.hpp"

namespace conegap {

/// Membership class w.r.t. C+^n = {v : Re(v_k conj(v_l)) >= 0 for all k,l}.
enum class ConeClass { interior, boundary, outside };

/// Exhaustive pairwise sign test with tolerance 1e-12 relative to |v_k||v_l|.
ConeClass classify(const CVec& v);

/// Disk decomposition of E(x,y) for interior x: one disk per unordered index
/// pair, center (conj(x_l) y_k + conj(x_k) y_l)/(2 Re(x_k conj(x_l))), radius
/// |x_l y_k - x_k y_l|/(2 Re(x_k conj(x_l))); k = l gives the point y_k/x_k.
Region e_region(const CVec& x, const CVec& y);

/// Projective metric on C+^n: log(sup|E|/inf|E|); 0 for colinear pairs, +inf
/// when neither point is interior or the region reaches 0. When both points
/// are interior, both orientations are computed and checked to agree.
double delta(const CVec& x, const CVec& y);

/// Hilbert metric of R+^n: log(max_k(y_k/x_k) / min_k(y_k/x_k)).
double hilbert_rplus(const std::vector<double>& x, const std::vector<double>& y);

struct ApertureWitness {
  double K;
  CVec m;
};

/// m = (1,...,1), K = sqrt(n): for u in C+^n, |<m,u>|^2 >= ||u||_2^2.
ApertureWitness aperture_witness(std::size_t n);

struct Alignment {
  Complex alpha;  // |alpha| = 1
  double bound;   // K * delta(x,y), guarantees ||alpha y - x|| <= bound
};

/// Optimal unit-modulus phase aligning y onto x (both unit vectors,
/// delta(x,y) finite).
Alignment align(const CVec& x, const CVec& y);

}  // namespace conegap
