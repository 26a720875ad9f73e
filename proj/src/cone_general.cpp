#include "conegap/cone_general.hpp"

#include <cmath>
#include <stdexcept>

namespace conegap {

namespace {

constexpr double kTol = 1e-12;

Complex pair_value(const CVec& m, const CVec& x) {
  if (m.size() != x.size()) throw std::invalid_argument("ConeSpec: functional dimension mismatch");
  Complex s = 0.0;
  for (std::size_t k = 0; k < m.size(); ++k) s += m[k] * x[k];
  return s;
}

void validate(const ConeSpec& spec) {
  if (spec.functionals.empty()) throw std::invalid_argument("ConeSpec: empty functional family");
  for (const CVec& m : spec.functionals)
    if (m.empty() || norm2(m) == 0.0) throw std::invalid_argument("ConeSpec: zero functional");
}

void require_nonzero(const CVec& x) {
  if (x.empty() || norm2(x) == 0.0) throw std::invalid_argument("cone_general: zero vector");
}

std::vector<Complex> evaluate_all(const ConeSpec& spec, const CVec& x) {
  std::vector<Complex> out;
  out.reserve(spec.functionals.size());
  for (const CVec& m : spec.functionals) out.push_back(pair_value(m, x));
  return out;
}

bool colinear(const CVec& x, const CVec& y) {
  const double scale = norm2(x) * norm2(y);
  for (std::size_t k = 0; k < x.size(); ++k)
    for (std::size_t l = k + 1; l < x.size(); ++l)
      if (std::abs(x[k] * y[l] - x[l] * y[k]) > 1e-13 * scale) return false;
  return true;
}

}  // namespace

Membership member(const ConeSpec& spec, const CVec& x) {
  validate(spec);
  require_nonzero(x);
  const std::vector<Complex> vals = evaluate_all(spec, x);
  for (std::size_t i = 0; i < vals.size(); ++i)
    for (std::size_t j = i; j < vals.size(); ++j) {
      const double scale = std::abs(vals[i]) * std::abs(vals[j]);
      if ((vals[i] * std::conj(vals[j])).real() < -kTol * scale) return Membership::outside;
    }
  return Membership::inside;
}

Membership member_R(const ConeSpec& spec, const CVec& x) {
  validate(spec);
  require_nonzero(x);
  for (const Complex& v : evaluate_all(spec, x)) {
    const double scale = std::abs(v);
    if (v.real() < -kTol * scale || v.imag() < -kTol * scale) return Membership::outside;
  }
  return Membership::inside;
}

Region e_region_general(const ConeSpec& spec, const CVec& x, const CVec& y) {
  validate(spec);
  require_nonzero(x);
  require_nonzero(y);

  const std::vector<Complex> mx = evaluate_all(spec, x);
  const std::vector<Complex> my = evaluate_all(spec, y);
  const double scale_x = norm2(x), scale_y = norm2(y);

  Region r;
  for (std::size_t i = 0; i < mx.size(); ++i)
    for (std::size_t j = i; j < mx.size(); ++j) {
      const Complex det = my[i] * mx[j] - my[j] * mx[i];
      const double fn = norm2(spec.functionals[i]) * norm2(spec.functionals[j]);
      if (std::abs(det) > kTol * fn * scale_x * scale_y) {
        r.parts.push_back(moebius_image_rhp(MoebiusMap{my[i], my[j], mx[i], mx[j]}));
      } else if (std::abs(mx[i]) > kTol * norm2(spec.functionals[i]) * scale_x) {
        r.parts.push_back(Disk{my[i] / mx[i], 0.0});
      } else if (std::abs(mx[j]) > kTol * norm2(spec.functionals[j]) * scale_x) {
        r.parts.push_back(Disk{my[j] / mx[j], 0.0});
      }
    }
  if (r.parts.empty())
    throw std::invalid_argument("e_region_general: all functionals vanish on x (degenerate input)");
  return r;
}

double delta_general(const ConeSpec& spec, const CVec& x, const CVec& y) {
  if (member(spec, x) == Membership::outside || member(spec, y) == Membership::outside)
    throw std::invalid_argument("delta_general: point outside the cone");
  if (colinear(x, y)) return 0.0;

  const ModBounds mb = region_mod_bounds(e_region_general(spec, x, y));
  if (!std::isfinite(mb.sup_mod)) return kInf;
  if (mb.inf_mod <= kTol * mb.sup_mod) return kInf;
  return std::log(mb.sup_mod / mb.inf_mod);
}

ConeSpec complexify_birkhoff(const std::vector<std::vector<double>>& dual_generators) {
  if (dual_generators.empty())
    throw std::invalid_argument("complexify_birkhoff: empty generator list");
  ConeSpec spec;
  for (const std::vector<double>& g : dual_generators) {
    CVec m;
    m.reserve(g.size());
    for (double v : g) m.emplace_back(v, 0.0);
    spec.functionals.push_back(std::move(m));
  }
  validate(spec);
  return spec;
}

}  // namespace conegap
