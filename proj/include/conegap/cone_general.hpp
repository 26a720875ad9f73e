#pragma once

#include "conegap/region.hpp"

namespace conegap {

/// Finite family S of complex functionals, each acting by <m,x> = sum m_k x_k,
/// defining the cone C = {x : Re(<m,x> conj(<l,x>)) >= 0 for all m,l in S}.
/// Closure/properness conditions on S are the caller's responsibility.
struct ConeSpec {
  std::vector<CVec> functionals;
};

enum class Membership { inside, outside };

/// Pairwise test Re(<m,x> conj(<l,x>)) >= -tol over S x S.
Membership member(const ConeSpec& spec, const CVec& x);

/// Membership in the convex cone R = {x : <m,x> in closed first quadrant}.
Membership member_R(const ConeSpec& spec, const CVec& x);

/// E(x,y) as a union of Moebius images of the right half-plane, one per
/// functional pair with nonvanishing cross determinant; degenerate pairs
/// contribute the point <m,y>/<m,x>.
Region e_region_general(const ConeSpec& spec, const CVec& x, const CVec& y);

/// log(sup|E|/inf|E|) over e_region_general; 0 for colinear pairs, +inf when
/// the region is unbounded or reaches 0.
double delta_general(const ConeSpec& spec, const CVec& x, const CVec& y);

/// Canonical complexification of a polyhedral Birkhoff cone given a finite
/// generating set of its dual cone. A single generator yields a degenerate
/// spec (properness fails); it is accepted as documented.
ConeSpec complexify_birkhoff(const std::vector<std::vector<double>>& dual_generators);

}  // namespace conegap
