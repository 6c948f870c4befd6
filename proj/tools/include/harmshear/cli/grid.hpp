#pragma once

#include <vector>

#include "harmshear/numerics.hpp"

namespace harmshear::cli {

/// Polar grid on the disk: rays from the origin and concentric circles.
struct DiskGrid {
  int n_rays = 16;
  int n_circles = 12;
  double r_max = 0.98;
  int samples_per_curve = 256;

  /// Throws ParamError on n_rays < 1, n_circles < 0, r_max outside (0, 1),
  /// or samples_per_curve < 16 (2 is accepted for a bare ray pair).
  void validate() const;

  /// Angle of ray k: 2 pi k / n_rays.
  double ray_angle(int k) const;
  /// Radius of circle j (1-based): r_max * j / n_circles.
  double circle_radius(int j) const;
};

struct GridCurve {
  enum class Kind { Ray, Circle };

  Kind kind;
  int index;    // ray index, or 1-based circle index
  bool closed;  // circles are closed polylines
  std::vector<Complex> points;
};

/// 2 pi num / den with the fraction reduced first, so equal fractions give
/// bitwise-equal angles.
double fraction_angle(long num, long den);

/// Rays by angle, then circles by radius; samples_per_curve points each.
std::vector<GridCurve> generate_grid(const DiskGrid& grid);

}  // namespace harmshear::cli
