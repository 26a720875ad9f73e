#include "conegap/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace conegap {

namespace {

constexpr double kPiSqrt2 = std::numbers::pi * std::numbers::sqrt2;

bool all_disks(const Region& r) {
  for (const RegionPart& part : r.parts)
    if (!std::holds_alternative<Disk>(part)) return false;
  return true;
}

}  // namespace

DcInterval dc_bounds(const Region& r, double delta_value) {
  DcInterval out;
  if (!std::isfinite(delta_value)) {
    out.lower = kInf;
    out.upper = kInf;
    out.methods = {"delta-infinite"};
    return out;
  }
  if (delta_value < 0.0) throw std::invalid_argument("dc_bounds: negative delta");

  std::vector<Disk> disks;
  if (all_disks(r)) {
    for (const RegionPart& part : r.parts) disks.push_back(std::get<Disk>(part));
    disks = dominant_disks(disks);
    // Exact case: the complement of one disk is the whole domain.
    if (disks.size() == 1) {
      const double exact = poincare_complement_disk(disks.front());
      return {exact, exact, {"single-disk"}};
    }
  }

  out.lower = delta_value / 2.0;
  out.methods.push_back("half-delta");
  for (const Disk& d : disks) {
    // Domain monotonicity: the complement of one disk contains the domain.
    const double lb = poincare_complement_disk(d);
    if (lb > out.lower) {
      out.lower = lb;
      if (out.methods.back() != "single-disk") out.methods.push_back("single-disk");
    }
  }

  out.upper = kPiSqrt2 * std::exp(delta_value / 2.0);
  out.methods.push_back("exp-half-delta");
  const double sector = sector_upper_bound(r);
  if (sector < out.upper) {
    out.upper = sector;
    out.methods.push_back("sector");
  }
  return out;
}

DtildeBounds dtilde_bounds(std::span<const CVec> chain) {
  if (chain.size() < 2) throw std::invalid_argument("dtilde_bounds: need at least two points");

  auto link_upper = [](const CVec& x, const CVec& y) {
    const double d = delta(x, y);
    if (d == 0.0) return 0.0;
    if (!std::isfinite(d)) throw std::invalid_argument("dtilde_bounds: infinite delta on a link");
    const ConeClass cx = classify(x);
    const Region r = (cx == ConeClass::interior) ? e_region(x, y) : e_region(y, x);
    return dc_bounds(r, d).upper;
  };

  const CVec& first = chain.front();
  const CVec& last = chain.back();
  DtildeBounds out;
  out.lower = delta(first, last) / 2.0;

  double chained = 0.0;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) chained += link_upper(chain[i], chain[i + 1]);
  out.upper = std::min(chained, link_upper(first, last));
  return out;
}

double dtilde_contraction_bound(double diam) {
  if (diam < 0.0) throw std::invalid_argument("dtilde_contraction_bound: negative diameter");
  return std::tanh(std::numbers::pi * std::exp(diam) / (2.0 * std::numbers::sqrt2));
}

double rugh_contraction_bound(double diam) {
  if (diam < 0.0) throw std::invalid_argument("rugh_contraction_bound: negative diameter");
  return std::tanh(diam / 2.0);
}

SequenceTriple remark_sequences(int k) {
  if (k < 1) throw std::invalid_argument("remark_sequences: k >= 1 required");
  const double phase = std::numbers::pi / 2.0 - std::numbers::pi / (2.0 * k);
  const Complex e = std::polar(1.0, phase);
  const double cos_half = std::cos(std::numbers::pi / (2.0 * k));
  const double sin_half = std::sin(std::numbers::pi / (2.0 * k));

  SequenceTriple t;
  t.x = {Complex{1.0}, e, e};
  t.y = {Complex{2.0}, e, e + Complex{0.0, 2.0 * cos_half}};
  t.z = {Complex{2.0 / (std::sqrt(3.0) * cos_half + sin_half)}, Complex{1.0}, Complex{1.0}};
  for (const CVec* v : {&t.x, &t.y, &t.z})
    if (classify(*v) == ConeClass::outside)
      throw std::logic_error("remark_sequences: vector fell outside C+^3");
  return t;
}

std::pair<CVec, CVec> figure_pair() {
  const Complex em = std::polar(1.0, -std::numbers::pi / 12.0);
  const Complex ep = std::polar(1.0, std::numbers::pi / 12.0);
  CVec x = {Complex{1.0}, em, ep};
  CVec y = {Complex{2.0} + std::polar(1.0, std::numbers::pi / 3.0), Complex{2.0, -1.0} * em,
            Complex{3.0, -1.0} * ep};
  return {std::move(x), std::move(y)};
}

InequalityReport inequality_report(const CVec& x, const CVec& y) {
  InequalityReport rep;
  rep.delta = delta(x, y);

  if (!std::isfinite(rep.delta)) {
    rep.dc = {kInf, kInf, {"delta-infinite"}};
    rep.dtilde = {kInf, kInf};
    rep.half_delta_ok = true;
    rep.exp_bound_ok = true;
    rep.finiteness_consistent = true;
    return rep;
  }
  if (rep.delta == 0.0) {
    rep.dc = {0.0, 0.0, {"colinear"}};
    rep.dtilde = {0.0, 0.0};
    rep.half_delta_ok = true;
    rep.exp_bound_ok = true;
    rep.finiteness_consistent = true;
    return rep;
  }

  const ConeClass cx = classify(x);
  const Region r = (cx == ConeClass::interior) ? e_region(x, y) : e_region(y, x);
  rep.dc = dc_bounds(r, rep.delta);
  rep.dtilde = {rep.delta / 2.0, rep.dc.upper};

  const double tol = 1e-9;
  rep.half_delta_ok = rep.delta / 2.0 <= rep.dc.lower + tol;
  rep.exp_bound_ok = rep.dc.upper <= kPiSqrt2 * std::exp(rep.delta / 2.0) + tol;
  rep.finiteness_consistent = std::isfinite(rep.delta) == std::isfinite(rep.dc.upper);
  return rep;
}

}  // namespace conegap
