#include <cstdio>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "harmshear/cli/render.hpp"
#include "harmshear/cli/verify.hpp"

namespace {

using namespace harmshear;
using namespace harmshear::cli;

enum ExitCode { kOk = 0, kInvariant = 1, kUsage = 2, kNumerical = 3 };

struct MapOptions {
  std::string map = "slit";
  double A = 1.0;
  double B = 1.0;
  std::optional<double> c;
  std::optional<double> gamma;
  int n = 3;
  int omega_power = 0;
  DiskGrid grid;
  std::optional<double> tol;
};

void add_map_options(CLI::App* app, MapOptions& o, bool with_grid) {
  app->add_option("--map", o.map, "Conformal map: slit or ngon")
      ->check(CLI::IsMember({"slit", "ngon"}))
      ->capture_default_str();
  app->add_option("--A", o.A, "Slit map log coefficient")->capture_default_str();
  app->add_option("--B", o.B, "Slit map rational coefficient")->capture_default_str();
  auto* c = app->add_option("--c", o.c, "Slit map c in [-2, 2] (default 0)");
  auto* gamma = app->add_option("--gamma", o.gamma, "Slit map gamma in (0, pi)");
  c->excludes(gamma);
  app->add_option("--n", o.n, "Polygon order")->capture_default_str();
  if (!with_grid) {
    return;
  }
  app->add_option("--omega-power", o.omega_power, "Dilatation omega = z^m")
      ->capture_default_str();
  app->add_option("--grid-rays", o.grid.n_rays)->capture_default_str();
  app->add_option("--grid-circles", o.grid.n_circles)->capture_default_str();
  app->add_option("--r-max", o.grid.r_max)->capture_default_str();
  app->add_option("--samples", o.grid.samples_per_curve, "Points per grid curve")
      ->capture_default_str();
  app->add_option("--tol", o.tol, "Relative quadrature tolerance");
}

SlitMapParams slit_params(const MapOptions& o) {
  if (o.gamma) {
    return SlitMapParams::from_gamma(o.A, o.B, *o.gamma);
  }
  if (o.c && *o.c != 0.0) {
    return SlitMapParams::from_c(o.A, o.B, *o.c);
  }
  return SlitMapParams::from_rational_gamma(o.A, o.B, 1, 4);
}

ConformalMapSpec map_spec(const MapOptions& o) {
  if (o.map == "ngon") {
    return ConformalMapSpec::regular_ngon(NGonParams(o.n));
  }
  return ConformalMapSpec::four_slit(slit_params(o));
}

QuadratureConfig quadrature(const std::optional<double>& tol) {
  QuadratureConfig cfg;
  if (tol) {
    cfg.rel_tol = *tol;
  }
  cfg.validate();
  return cfg;
}

RenderJob make_job(const MapOptions& o, const std::string& format, const std::string& out) {
  return RenderJob{map_spec(o), MonomialDilatation(o.omega_power), o.grid, parse_format(format),
                   out, quadrature(o.tol)};
}

int report_error(const char* kind, const std::exception& e, int code) {
  std::fprintf(stderr, "harmshear: %s: %s\n", kind, e.what());
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harmonic shears of slit and polygon maps, minimal-surface lifts and exports"};
  app.require_subcommand(1);

  MapOptions render_opts;
  std::string render_format = "svg";
  std::string render_out = "-";
  auto* render = app.add_subcommand("render", "Image of the polar disk grid under f (svg or csv)");
  add_map_options(render, render_opts, true);
  render->add_option("--format", render_format)
      ->check(CLI::IsMember({"svg", "csv"}))
      ->capture_default_str();
  render->add_option("--out", render_out, "Output path, '-' for stdout")->capture_default_str();

  MapOptions surface_opts;
  std::string surface_format = "obj";
  std::string surface_out = "-";
  auto* surface = app.add_subcommand("surface", "Minimal-surface mesh over the polar grid (obj)");
  add_map_options(surface, surface_opts, true);
  surface->add_option("--format", surface_format)
      ->check(CLI::IsMember({"obj"}))
      ->capture_default_str();
  surface->add_option("--out", surface_out, "Output path, '-' for stdout")->capture_default_str();

  std::string scope = "all";
  VerifyOptions verify_opts;
  bool flip_b_sign = false;
  std::optional<double> verify_tol;
  auto* verify = app.add_subcommand("verify", "Run the invariant suite and report max residuals");
  verify->add_option("scope", scope, "all, slit, polygon or surface")
      ->check(CLI::IsMember({"all", "slit", "polygon", "surface"}))
      ->capture_default_str();
  verify->add_option("--samples", verify_opts.samples, "Random points per configuration")
      ->capture_default_str();
  verify->add_option("--seed", verify_opts.seed)->capture_default_str();
  verify->add_option("--tol", verify_tol, "Relative quadrature tolerance");
  verify->add_flag("--flip-b-sign", flip_b_sign)->group("");

  MapOptions endpoint_opts;
  double radius = 0.9999;
  auto* endpoints =
      app.add_subcommand("endpoints", "Compare omitted half-line anchors with radial limits");
  add_map_options(endpoints, endpoint_opts, false);
  endpoints->add_option("--radius", radius, "Tracing radius")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*render) {
      render_map(make_job(render_opts, render_format, render_out));
      return kOk;
    }
    if (*surface) {
      render_surface(make_job(surface_opts, surface_format, surface_out));
      return kOk;
    }
    if (*verify) {
      verify_opts.quadrature = quadrature(verify_tol);
      if (flip_b_sign) {
        verify_opts.b_term_sign = -kSlitBTermSign;
      }
      const VerifyReport report = run_verify(parse_scope(scope), verify_opts);
      std::fputs(report.text().c_str(), stdout);
      return report.ok() ? kOk : kInvariant;
    }
    if (*endpoints) {
      if (endpoint_opts.map != "slit") {
        throw ParamError("endpoints applies to the slit map only");
      }
      const EndpointReport report = run_endpoints(slit_params(endpoint_opts), radius);
      std::fputs(report.text().c_str(), stdout);
      return report.ok() ? kOk : kInvariant;
    }
  } catch (const ParamError& e) {
    return report_error("invalid parameters", e, kUsage);
  } catch (const NotLiftableError& e) {
    return report_error("invalid parameters", e, kUsage);
  } catch (const UnsupportedError& e) {
    return report_error("unsupported", e, kUsage);
  } catch (const ParityError& e) {
    return report_error("invalid parameters", e, kUsage);
  } catch (const IndexError& e) {
    return report_error("invalid parameters", e, kUsage);
  } catch (const IoError& e) {
    return report_error("io", e, kNumerical);
  } catch (const Error& e) {
    return report_error("numerical failure", e, kNumerical);
  }
  return kUsage;
}
