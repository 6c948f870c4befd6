#include "harmshear/cli/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace harmshear::cli {

namespace {

std::string fmt(const char* spec, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

std::string full(double x) { return fmt("%.17g", x); }
std::string svg_num(double x) { return fmt("%.10g", x); }

bool finite(Complex w) { return std::isfinite(w.real()) && std::isfinite(w.imag()); }

std::string point_context(const GridCurve& curve, std::size_t i) {
  return std::string(curve.kind == GridCurve::Kind::Ray ? "ray " : "circle ") +
         std::to_string(curve.index) + ", point " + std::to_string(i);
}

// Rethrows the active harmshear::Error with grid context, keeping its dynamic type.
template <typename E>
[[noreturn]] void rethrow_as(const E& e, const std::string& where) {
  throw E(where + ": " + e.what());
}

template <typename Fn>
auto with_context(const std::string& where, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const NonConvergenceError& e) {
    rethrow_as(e, where);
  } catch (const NonFiniteError& e) {
    rethrow_as(e, where);
  } catch (const DomainError& e) {
    rethrow_as(e, where);
  } catch (const PoleError& e) {
    rethrow_as(e, where);
  }
}

struct Box {
  double x0 = std::numeric_limits<double>::infinity();
  double x1 = -std::numeric_limits<double>::infinity();
  double y0 = std::numeric_limits<double>::infinity();
  double y1 = -std::numeric_limits<double>::infinity();

  void add(Complex w) {
    x0 = std::min(x0, w.real());
    x1 = std::max(x1, w.real());
    y0 = std::min(y0, w.imag());
    y1 = std::max(y1, w.imag());
  }
  bool empty() const { return !(x0 <= x1); }
};

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "svg") return OutputFormat::Svg;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "obj") return OutputFormat::Obj;
  throw ParamError("unknown output format '" + name + "'");
}

const char* format_name(OutputFormat format) {
  switch (format) {
    case OutputFormat::Svg:
      return "svg";
    case OutputFormat::Csv:
      return "csv";
    case OutputFormat::Obj:
      return "obj";
  }
  return "?";
}

void RenderJob::validate() const {
  grid.validate();
  if (grid.r_max > kMaxRadius) {
    throw ParamError("r_max must not exceed 0.999");
  }
  if (format == OutputFormat::Obj && !dilatation.liftable()) {
    throw NotLiftableError("obj output needs an even omega power");
  }
}

std::vector<MappedCurve> map_grid(const RenderJob& job) {
  job.validate();
  std::vector<MappedCurve> out;
  for (GridCurve& curve : generate_grid(job.grid)) {
    MappedCurve mapped{std::move(curve), {}};
    mapped.image.reserve(mapped.source.points.size());
    for (std::size_t i = 0; i < mapped.source.points.size(); ++i) {
      const Complex z = mapped.source.points[i];
      mapped.image.push_back(with_context(point_context(mapped.source, i), [&] {
        return shear_evaluate(job.map, job.dilatation, z, job.quadrature).f;
      }));
    }
    out.push_back(std::move(mapped));
  }
  return out;
}

std::string format_csv(const std::vector<MappedCurve>& curves) {
  std::string out = "curve_id,point_index,z_re,z_im,w_re,w_im\n";
  for (std::size_t c = 0; c < curves.size(); ++c) {
    const MappedCurve& curve = curves[c];
    for (std::size_t i = 0; i < curve.image.size(); ++i) {
      const Complex z = curve.source.points[i];
      const Complex w = curve.image[i];
      out += std::to_string(c) + ',' + std::to_string(i) + ',' + full(z.real()) + ',' +
             full(z.imag()) + ',' + full(w.real()) + ',' + full(w.imag()) + '\n';
    }
  }
  return out;
}

std::vector<HalfLine> dashed_halflines(const RenderJob& job) {
  if (!job.map.is_slit() || !job.dilatation.is_zero()) {
    return {};
  }
  try {
    return slit_omitted_halflines(job.map.slit());
  } catch (const UnsupportedError&) {
    return {};
  }
}

std::string format_svg(const std::vector<MappedCurve>& curves,
                       const std::vector<HalfLine>& halflines) {
  Box box;
  for (const MappedCurve& curve : curves) {
    for (Complex w : curve.image) {
      if (finite(w)) box.add(w);
    }
  }
  if (box.empty()) {
    box = Box{-1.0, 1.0, -1.0, 1.0};
  }
  double width = box.x1 - box.x0;
  double height = box.y1 - box.y0;
  if (width == 0.0) width = 1.0;
  if (height == 0.0) height = 1.0;
  const double vx0 = box.x0 - 0.05 * width;
  const double vx1 = box.x1 + 0.05 * width;
  const double vy0 = box.y0 - 0.05 * height;
  const double vy1 = box.y1 + 0.05 * height;
  const double stroke = 0.002 * std::max(vx1 - vx0, vy1 - vy0);

  // SVG y grows downward; emit -Im w so the picture keeps its orientation.
  auto xy = [](Complex w) { return svg_num(w.real()) + ' ' + svg_num(-w.imag()); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << svg_num(vx0)
      << ' ' << svg_num(-vy1) << ' ' << svg_num(vx1 - vx0) << ' ' << svg_num(vy1 - vy0)
      << "\">\n"
      << "<g fill=\"none\" stroke=\"black\" stroke-width=\"" << svg_num(stroke)
      << "\" stroke-linejoin=\"round\">\n";
  for (std::size_t c = 0; c < curves.size(); ++c) {
    const MappedCurve& curve = curves[c];
    std::string d;
    bool pen_down = false;
    bool all_finite = true;
    for (Complex w : curve.image) {
      if (!finite(w)) {
        pen_down = false;
        all_finite = false;
        continue;
      }
      d += (d.empty() ? "" : " ");
      d += pen_down ? "L " : "M ";
      d += xy(w);
      pen_down = true;
    }
    if (curve.source.closed && all_finite && !d.empty()) {
      d += " Z";
    }
    out << "<path id=\"curve-" << c << "\" d=\"" << d << "\"/>\n";
  }
  out << "</g>\n";

  if (!halflines.empty()) {
    out << "<g fill=\"none\" stroke=\"red\" stroke-width=\"" << svg_num(stroke)
        << "\" stroke-dasharray=\"" << svg_num(6.0 * stroke) << ' ' << svg_num(4.0 * stroke)
        << "\">\n";
    for (const HalfLine& line : halflines) {
      const double y = line.anchor.imag();
      const double x = line.anchor.real();
      if (y < vy0 || y > vy1) continue;
      const double x_end = line.sign() > 0 ? vx1 : vx0;
      if ((line.sign() > 0 && x >= vx1) || (line.sign() < 0 && x <= vx0)) continue;
      const double x_start = std::clamp(x, vx0, vx1);
      out << "<path class=\"slit\" d=\"M " << xy({x_start, y}) << " L " << xy({x_end, y})
          << "\"/>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_map_payload(const RenderJob& job) {
  if (job.format == OutputFormat::Obj) {
    throw ParamError("render_map produces svg or csv; use render_surface for obj");
  }
  const std::vector<MappedCurve> curves = map_grid(job);
  if (job.format == OutputFormat::Csv) {
    return format_csv(curves);
  }
  return format_svg(curves, dashed_halflines(job));
}

void render_map(const RenderJob& job) { write_file(job.out_path, render_map_payload(job)); }

std::vector<SurfaceSample> surface_grid(const RenderJob& job) {
  job.validate();
  if (!job.dilatation.liftable()) {
    throw NotLiftableError("surface needs an even omega power");
  }
  const DiskGrid& grid = job.grid;
  std::vector<SurfaceSample> out;
  out.reserve(1 + static_cast<std::size_t>(grid.n_rays * grid.n_circles));
  auto sample = [&](Complex z, const std::string& where) {
    return with_context(where, [&] {
      return surface_point(job.map, job.dilatation, z, job.quadrature);
    });
  };
  out.push_back(sample(Complex{}, "center"));
  for (int j = 1; j <= grid.n_circles; ++j) {
    const double r = grid.circle_radius(j);
    for (int k = 0; k < grid.n_rays; ++k) {
      out.push_back(sample(std::polar(r, grid.ray_angle(k)),
                           "circle " + std::to_string(j) + ", ray " + std::to_string(k)));
    }
  }
  return out;
}

std::string format_obj(const std::vector<SurfaceSample>& vertices, int n_rays, int n_circles) {
  std::string out;
  for (const SurfaceSample& s : vertices) {
    out += "v " + full(s.u) + ' ' + full(s.v) + ' ' + full(s.w) + '\n';
  }
  if (n_rays < 3) {
    return out;
  }
  // OBJ indices are 1-based; the center is vertex 1.
  auto index = [n_rays](int j, int k) { return 2 + (j - 1) * n_rays + (k % n_rays); };
  if (n_circles >= 1) {
    for (int k = 0; k < n_rays; ++k) {
      out += "f 1 " + std::to_string(index(1, k)) + ' ' + std::to_string(index(1, k + 1)) + '\n';
    }
  }
  for (int j = 1; j < n_circles; ++j) {
    for (int k = 0; k < n_rays; ++k) {
      out += "f " + std::to_string(index(j, k)) + ' ' + std::to_string(index(j + 1, k)) + ' ' +
             std::to_string(index(j + 1, k + 1)) + ' ' + std::to_string(index(j, k + 1)) + '\n';
    }
  }
  return out;
}

std::string render_surface_payload(const RenderJob& job) {
  if (job.format != OutputFormat::Obj) {
    throw ParamError("render_surface produces obj only");
  }
  return format_obj(surface_grid(job), job.grid.n_rays, job.grid.n_circles);
}

void render_surface(const RenderJob& job) { write_file(job.out_path, render_surface_payload(job)); }

std::vector<CsvRow> parse_csv(const std::string& payload) {
  std::istringstream in(payload);
  std::string line;
  if (!std::getline(in, line) || line != "curve_id,point_index,z_re,z_im,w_re,w_im") {
    throw ParamError("csv header mismatch");
  }
  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    if (cells.size() != 6) {
      throw ParamError("csv row with " + std::to_string(cells.size()) + " fields");
    }
    try {
      rows.push_back({std::stoi(cells[0]), std::stoi(cells[1]),
                      {std::stod(cells[2]), std::stod(cells[3])},
                      {std::stod(cells[4]), std::stod(cells[5])}});
    } catch (const std::logic_error&) {
      throw ParamError("malformed csv row: " + line);
    }
  }
  return rows;
}

void write_file(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  if (!out) {
    throw IoError("write to '" + path + "' failed");
  }
}

}  // namespace harmshear::cli
