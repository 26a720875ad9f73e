#pragma once

// Shared randomized generators and Monte-Carlo oracles for the test suites.
// Everything is seeded explicitly so failures reproduce.

#include <cmath>
#include <numbers>
#include <random>

#include "conegap/cone_cpn.hpp"
#include "conegap/contraction.hpp"

namespace testsupport {

using conegap::CMat;
using conegap::Complex;
using conegap::CVec;

// Interior point of the pairwise-positivity cone: moduli in [0.5, 2] and
// arguments within ±0.95 * pi/4, so every pairwise angle stays below pi/2.
inline CVec random_interior(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> mod(0.5, 2.0);
  std::uniform_real_distribution<double> arg(-0.95 * std::numbers::pi / 4.0, 0.95 * std::numbers::pi / 4.0);
  CVec v(n);
  for (auto& z : v) z = std::polar(mod(rng), arg(rng));
  return v;
}

// Boundary point: an interior point with one coordinate zeroed.
inline CVec random_boundary(std::mt19937_64& rng, std::size_t n) {
  CVec v = random_interior(rng, n);
  v[rng() % n] = Complex{0.0};
  return v;
}

// Matrix passing the cone-preservation test: dominant positive entries in
// [1, 2] plus a complex perturbation, shrunk until the check holds.
inline CMat random_contracting(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> base(1.0, 2.0);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  CMat A(n);
  CMat noise(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      A(i, k) = Complex{base(rng)};
      noise(i, k) = Complex{unit(rng), unit(rng)};
    }
  double eta = 0.25;
  for (int attempt = 0; attempt < 60; ++attempt, eta *= 0.5) {
    CMat B = A;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) B(i, k) += eta * noise(i, k);
    if (conegap::check_condition(B).holds) return B;
  }
  return A;  // eta -> 0 always succeeds for positive entries
}

// Monte-Carlo lower bound for the projective diameter of A applied to the
// cone: max over sampled interior/boundary preimages, basis vectors included.
inline double mc_diameter(std::mt19937_64& rng, const CMat& A, int pairs) {
  const std::size_t n = A.dim();
  std::vector<CVec> images;
  for (std::size_t k = 0; k < n; ++k) {
    CVec e(n, Complex{0.0});
    e[k] = 1.0;
    images.push_back(conegap::mat_apply(A, e));
  }
  for (int s = 0; s < pairs; ++s) {
    images.push_back(conegap::mat_apply(A, random_interior(rng, n)));
    images.push_back(conegap::mat_apply(A, random_boundary(rng, n)));
  }
  double best = 0.0;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      best = std::max(best, conegap::delta(images[i], images[j]));
  return best;
}

}  // namespace testsupport
