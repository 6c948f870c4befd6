#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "harmshear/shear.hpp"

namespace harmshear::cli {

enum class VerifyScope { All, Slit, Polygon, Surface };

VerifyScope parse_scope(const std::string& name);

struct VerifyOptions {
  int samples = 24;  // random points per configuration, |z| <= 0.9
  std::uint64_t seed = 20240611;
  int b_term_sign = kSlitBTermSign;
  QuadratureConfig quadrature;
};

/// One invariant: the maximum (or, for lower bounds, minimum) over all configurations.
struct VerifyCheck {
  std::string name;
  double value;
  double limit;
  bool lower_bound = false;  // value must exceed limit instead of staying below it

  bool pass() const { return lower_bound ? value > limit : value < limit; }
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  bool ok() const;
  /// One line per check: "PASS name value=... limit=...".
  std::string text() const;
};

/// Deterministic points uniformly distributed in |z| <= radius.
std::vector<Complex> random_disk_points(std::size_t count, double radius, std::uint64_t seed);

VerifyReport run_verify(VerifyScope scope, const VerifyOptions& options = {});

struct EndpointReport {
  std::vector<SlitEndpointTrace> traces;
  double real_limit = 1e-2;
  double imag_limit = 1e-3;

  bool ok() const;
  std::string text() const;
};

/// Traces every omitted half-line of p at radius r and compares with its anchor.
EndpointReport run_endpoints(const SlitMapParams& p, double r = 0.9999);

}  // namespace harmshear::cli
