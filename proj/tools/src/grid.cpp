#include "harmshear/cli/grid.hpp"

#include <numeric>

namespace harmshear::cli {

void DiskGrid::validate() const {
  if (n_rays < 1 || n_circles < 0) {
    throw ParamError("grid needs at least one ray and a nonnegative circle count");
  }
  if (!(r_max > 0.0) || !(r_max < 1.0)) {
    throw ParamError("grid r_max must lie in (0, 1)");
  }
  if (samples_per_curve < 16) {
    throw ParamError("grid needs at least 16 samples per curve");
  }
}

double fraction_angle(long num, long den) {
  const long g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return 2.0 * kPi * static_cast<double>(num) / static_cast<double>(den);
}

double DiskGrid::ray_angle(int k) const { return fraction_angle(k, n_rays); }

double DiskGrid::circle_radius(int j) const {
  return r_max * static_cast<double>(j) / static_cast<double>(n_circles);
}

std::vector<GridCurve> generate_grid(const DiskGrid& grid) {
  grid.validate();
  const int samples = grid.samples_per_curve;
  std::vector<GridCurve> curves;
  curves.reserve(static_cast<std::size_t>(grid.n_rays + grid.n_circles));

  for (int k = 0; k < grid.n_rays; ++k) {
    GridCurve ray{GridCurve::Kind::Ray, k, false, {}};
    ray.points.reserve(static_cast<std::size_t>(samples));
    const double angle = grid.ray_angle(k);
    for (int i = 0; i < samples; ++i) {
      const double r = grid.r_max * static_cast<double>(i) / static_cast<double>(samples - 1);
      ray.points.push_back(std::polar(r, angle));
    }
    curves.push_back(std::move(ray));
  }
  for (int j = 1; j <= grid.n_circles; ++j) {
    GridCurve circle{GridCurve::Kind::Circle, j, true, {}};
    circle.points.reserve(static_cast<std::size_t>(samples));
    const double r = grid.circle_radius(j);
    for (int i = 0; i < samples; ++i) {
      circle.points.push_back(std::polar(r, fraction_angle(i, samples)));
    }
    curves.push_back(std::move(circle));
  }
  return curves;
}

}  // namespace harmshear::cli
