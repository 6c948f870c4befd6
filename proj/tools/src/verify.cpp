#include "harmshear/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "harmshear/minsurf.hpp"

namespace harmshear::cli {

namespace {

struct Tally {
  VerifyCheck check;

  explicit Tally(std::string name, double limit, bool lower = false)
      : check{std::move(name), lower ? std::numeric_limits<double>::infinity() : 0.0, limit,
              lower} {}

  void add(double v) {
    // NaN must fail the check, so it replaces the running value.
    if (std::isnan(v)) {
      check.value = v;
    } else if (!std::isnan(check.value)) {
      check.value = check.lower_bound ? std::min(check.value, v) : std::max(check.value, v);
    }
  }
};

struct ShearTallies {
  Tally construction;
  Tally dilatation;
  Tally jacobian;
  Tally closed_form;
  Tally fd_dilatation;

  explicit ShearTallies(const std::string& prefix, const ShearThresholds& t = {})
      : construction(prefix + ".construction", t.construction),
        dilatation(prefix + ".dilatation", t.dilatation),
        jacobian(prefix + ".min_jacobian", 0.0, true),
        closed_form(prefix + ".closed_vs_oracle", t.closed_form),
        fd_dilatation(prefix + ".fd_dilatation", t.fd_dilatation) {}

  void add(const ShearReport& r) {
    construction.add(r.max_construction_residual);
    dilatation.add(r.max_dilatation_residual);
    jacobian.add(r.min_jacobian);
    if (r.max_closed_form_deviation) closed_form.add(*r.max_closed_form_deviation);
    if (r.max_fd_dilatation_residual) fd_dilatation.add(*r.max_fd_dilatation_residual);
  }

  void flush(VerifyReport& report) const {
    for (const Tally* t : {&construction, &dilatation, &jacobian, &closed_form, &fd_dilatation}) {
      report.checks.push_back(t->check);
    }
  }
};

void verify_slit(const VerifyOptions& opt, const std::vector<Complex>& pts, VerifyReport& report) {
  ShearTallies tallies("slit");
  auto run = [&](const SlitMapParams& p, int n) {
    tallies.add(verify_shear(ConformalMapSpec::four_slit(p), MonomialDilatation(n), pts,
                             opt.quadrature, {}, opt.b_term_sign));
  };
  for (int n = 1; n <= 6; ++n) {
    run(SlitMapParams::from_rational_gamma(1.0, 1.0, 1, 4), n);
    run(SlitMapParams::from_rational_gamma(1.0, 1.0, 1, 3), n);
    for (int m = 1; 2 * m < n; ++m) {
      run(SlitMapParams::from_rational_gamma(1.0, 1.0, m, n), n);
    }
  }
  // Irrational gamma exercises the floating resonance test and the generic branch.
  run(SlitMapParams::from_gamma(0.5, 2.0, 1.0), 3);
  tallies.flush(report);

  Tally corollary("slit.corollary_vs_oracle", 1e-9);
  for (double alpha : {kPi / 3.0, kPi / 5.0}) {
    const ConformalMapSpec map = ConformalMapSpec::four_slit(corollary_slit_params(alpha));
    for (int n = 1; n <= 6; ++n) {
      const MonomialDilatation dil(n);
      for (Complex z : pts) {
        const ShearEvaluation closed = corollary_shear(alpha, n, z);
        const ShearEvaluation oracle = shear_oracle(map, dil, z, opt.quadrature);
        corollary.add(std::max(std::abs(closed.h - oracle.h), std::abs(closed.g - oracle.g)));
      }
    }
  }
  report.checks.push_back(corollary.check);
}

void verify_polygon(const VerifyOptions& opt, const std::vector<Complex>& pts,
                    VerifyReport& report) {
  ShearTallies tallies("polygon");
  for (int n = 3; n <= 7; ++n) {
    const ConformalMapSpec map = ConformalMapSpec::regular_ngon(NGonParams(n));
    tallies.add(verify_shear(map, MonomialDilatation(2 * n), pts, opt.quadrature));
    if (n % 2 == 1) {
      tallies.add(verify_shear(map, MonomialDilatation(2), pts, opt.quadrature));
    }
  }
  tallies.flush(report);
}

void verify_surface(const VerifyOptions& opt, const std::vector<Complex>& pts,
                    VerifyReport& report) {
  Tally isothermal("surface.isothermal", 1e-12);
  Tally projection("surface.projection", 1e-10);
  Tally real_axis("surface.real_axis_height", 1e-12);
  Tally lift("surface.lift_vs_oracle", 1e-9);

  std::vector<std::pair<ConformalMapSpec, MonomialDilatation>> configs;
  for (int n : {3, 4, 5}) {
    configs.emplace_back(ConformalMapSpec::regular_ngon(NGonParams(n)), MonomialDilatation(2 * n));
  }
  for (int n : {3, 5, 7}) {
    configs.emplace_back(ConformalMapSpec::regular_ngon(NGonParams(n)), MonomialDilatation(2));
  }
  configs.emplace_back(ConformalMapSpec::four_slit(SlitMapParams::from_rational_gamma(1, 1, 1, 4)),
                       MonomialDilatation(2));

  SpecfunConfig sf;
  sf.quadrature = opt.quadrature;
  for (const auto& [map, dil] : configs) {
    for (Complex z : pts) {
      const ShearEvaluation shear = shear_evaluate(map, dil, z, opt.quadrature);
      isothermal.add(weierstrass_triple(shear.h_prime, shear.g_prime, dil.q(z))
                         .relative_isotropy_residual());

      const SurfaceSample s = surface_point(map, dil, z, opt.quadrature);
      const ShearEvaluation oracle = shear_oracle(map, dil, z, opt.quadrature);
      projection.add(std::abs(Complex{s.u, s.v} - oracle.f));

      if (auto closed = psi_closed_form(map, dil, z, sf)) {
        lift.add(std::abs(*closed - psi_oracle(map, dil, z, opt.quadrature)));
      }
    }
    if (map.is_ngon()) {
      for (double x : {-0.9, -0.45, 0.0, 0.3, 0.9}) {
        real_axis.add(std::abs(surface_point(map, dil, Complex{x, 0.0}, opt.quadrature).w));
      }
    }
  }
  for (const Tally* t : {&isothermal, &projection, &real_axis, &lift}) {
    report.checks.push_back(t->check);
  }
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

}  // namespace

VerifyScope parse_scope(const std::string& name) {
  if (name == "all") return VerifyScope::All;
  if (name == "slit") return VerifyScope::Slit;
  if (name == "polygon") return VerifyScope::Polygon;
  if (name == "surface") return VerifyScope::Surface;
  throw ParamError("unknown verify scope '" + name + "'");
}

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.pass(); });
}

std::string VerifyReport::text() const {
  std::string out;
  for (const VerifyCheck& c : checks) {
    out += c.pass() ? "PASS " : "FAIL ";
    out += c.name + (c.lower_bound ? " min=" : " max=") + num(c.value) +
           (c.lower_bound ? " limit>" : " limit<") + num(c.limit) + '\n';
  }
  return out;
}

std::vector<Complex> random_disk_points(std::size_t count, double radius, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Complex> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double r = radius * std::sqrt(unit(rng));
    pts.push_back(std::polar(r, 2.0 * kPi * unit(rng)));
  }
  return pts;
}

VerifyReport run_verify(VerifyScope scope, const VerifyOptions& options) {
  if (options.samples < 1) {
    throw ParamError("verify needs at least one sample per configuration");
  }
  const auto pts = random_disk_points(static_cast<std::size_t>(options.samples), 0.9, options.seed);
  VerifyReport report;
  if (scope == VerifyScope::All || scope == VerifyScope::Slit) verify_slit(options, pts, report);
  if (scope == VerifyScope::All || scope == VerifyScope::Polygon) {
    verify_polygon(options, pts, report);
  }
  if (scope == VerifyScope::All || scope == VerifyScope::Surface) {
    verify_surface(options, pts, report);
  }
  return report;
}

bool EndpointReport::ok() const {
  return std::all_of(traces.begin(), traces.end(), [&](const SlitEndpointTrace& t) {
    return t.real_gap() < real_limit && t.imag_gap() < imag_limit;
  });
}

std::string EndpointReport::text() const {
  std::string out;
  for (const SlitEndpointTrace& t : traces) {
    const bool pass = t.real_gap() < real_limit && t.imag_gap() < imag_limit;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "%s anchor=(%.12g, %.12g) direction=%s theta=%.12g traced=(%.12g, %.12g) "
                  "real_gap=%.3e imag_gap=%.3e\n",
                  pass ? "PASS" : "FAIL", t.halfline.anchor.real(), t.halfline.anchor.imag(),
                  t.halfline.sign() > 0 ? "+inf" : "-inf", t.theta, t.traced.real(),
                  t.traced.imag(), t.real_gap(), t.imag_gap());
    out += buf;
  }
  return out;
}

EndpointReport run_endpoints(const SlitMapParams& p, double r) {
  EndpointReport report;
  report.traces = trace_slit_endpoints(p, r);
  return report;
}

}  // namespace harmshear::cli
