#include "entmono/variational.hpp"

#include "entmono/rng.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace entmono {

namespace {

using Vec4 = std::array<double, 4>;  // (theta_a, phi_a, theta_b, phi_b)

// -|<phi_A phi_B|psi>|^2; smooth in the angles, minimum is -F_max.
double objective(const Vec4& x, const CVector& amps) {
  const std::complex<double> a0{std::cos(0.5 * x[0]), 0.0};
  const std::complex<double> a1 = std::polar(std::sin(0.5 * x[0]), x[1]);
  const std::complex<double> b0{std::cos(0.5 * x[2]), 0.0};
  const std::complex<double> b1 = std::polar(std::sin(0.5 * x[2]), x[3]);
  const std::complex<double> s = std::conj(a0 * b0) * amps(0) + std::conj(a0 * b1) * amps(1) +
                                 std::conj(a1 * b0) * amps(2) + std::conj(a1 * b1) * amps(3);
  return -std::norm(s);
}

struct Point {
  Vec4 x;
  double f;
};

// Standard Nelder-Mead on 4 parameters. The angles are unconstrained: the
// parametrization covers the sphere for any real values, so no projection is
// needed.
Point nelder_mead(const Vec4& start, double step, const CVector& amps, double tol,
                  int max_iter) {
  constexpr double alpha = 1.0, gamma = 2.0, beta = 0.5, sigma = 0.5;
  std::array<Point, 5> simplex;
  simplex[0] = {start, objective(start, amps)};
  for (int i = 0; i < 4; ++i) {
    Vec4 v = start;
    v[i] += step;
    simplex[i + 1] = {v, objective(v, amps)};
  }

  for (int iter = 0; iter < max_iter; ++iter) {
    std::sort(simplex.begin(), simplex.end(),
              [](const Point& a, const Point& b) { return a.f < b.f; });
    if (simplex[4].f - simplex[0].f < tol) break;

    Vec4 centroid{0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
      for (int d = 0; d < 4; ++d) centroid[d] += simplex[i].x[d] / 4.0;
    }
    auto blend = [&](double t) {
      Vec4 v;
      for (int d = 0; d < 4; ++d) v[d] = centroid[d] + t * (centroid[d] - simplex[4].x[d]);
      return v;
    };

    const Vec4 xr = blend(alpha);
    const double fr = objective(xr, amps);
    if (fr < simplex[0].f) {
      const Vec4 xe = blend(gamma);
      const double fe = objective(xe, amps);
      simplex[4] = (fe < fr) ? Point{xe, fe} : Point{xr, fr};
      continue;
    }
    if (fr < simplex[3].f) {
      simplex[4] = {xr, fr};
      continue;
    }
    const Vec4 xc = blend(fr < simplex[4].f ? beta : -beta);
    const double fc = objective(xc, amps);
    if (fc < std::min(fr, simplex[4].f)) {
      simplex[4] = {xc, fc};
      continue;
    }
    for (int i = 1; i < 5; ++i) {  // shrink toward the best vertex
      for (int d = 0; d < 4; ++d) {
        simplex[i].x[d] = simplex[0].x[d] + sigma * (simplex[i].x[d] - simplex[0].x[d]);
      }
      simplex[i].f = objective(simplex[i].x, amps);
    }
  }
  std::sort(simplex.begin(), simplex.end(),
            [](const Point& a, const Point& b) { return a.f < b.f; });
  return simplex[0];
}

}  // namespace

double max_product_overlap(const StateVector& psi, const VariationalOptions& opts) {
  if (psi.n_qubits() != 2) {
    throw std::invalid_argument("max_product_overlap: two-qubit state required");
  }
  if (opts.grid_per_axis < 2 || opts.n_starts < 1) {
    throw std::invalid_argument("max_product_overlap: bad optimizer options");
  }
  const CVector& amps = psi.amplitudes();
  const int g = opts.grid_per_axis;

  // Coarse 4-angle grid, cell centers.
  std::vector<Point> seeds;
  seeds.reserve(static_cast<std::size_t>(g) * g * g * g);
  for (int ia = 0; ia < g; ++ia) {
    const double ta = (ia + 0.5) * std::numbers::pi / g;
    for (int ja = 0; ja < g; ++ja) {
      const double pa = (ja + 0.5) * 2.0 * std::numbers::pi / g;
      for (int ib = 0; ib < g; ++ib) {
        const double tb = (ib + 0.5) * std::numbers::pi / g;
        for (int jb = 0; jb < g; ++jb) {
          const double pb = (jb + 0.5) * 2.0 * std::numbers::pi / g;
          const Vec4 x{ta, pa, tb, pb};
          seeds.push_back({x, objective(x, amps)});
        }
      }
    }
  }
  const std::size_t n_starts = std::min<std::size_t>(opts.n_starts, seeds.size());
  std::partial_sort(seeds.begin(), seeds.begin() + n_starts, seeds.end(),
                    [](const Point& a, const Point& b) { return a.f < b.f; });

  Rng jitter(opts.seed);
  double best = 0.0;  // best squared overlap found
  for (std::size_t s = 0; s < n_starts; ++s) {
    Vec4 start = seeds[s].x;
    for (double& v : start) v += jitter.uniform(-0.02, 0.02);
    Point p = nelder_mead(start, 0.15, amps, opts.tol, opts.max_iterations);
    // restart with a tight simplex to polish
    p = nelder_mead(p.x, 1e-3, amps, opts.tol, opts.max_iterations);
    best = std::max(best, -p.f);
  }
  return std::sqrt(std::clamp(best, 0.0, 1.0));
}

double min_geometric_pure(const StateVector& psi, const VariationalOptions& opts) {
  const double s = max_product_overlap(psi, opts);
  return std::max(0.0, 1.0 - s * s);
}

double min_bures_pure(const StateVector& psi, const VariationalOptions& opts) {
  const double s = max_product_overlap(psi, opts);
  return std::max(0.0, 2.0 - 2.0 * s);
}

}  // namespace entmono
