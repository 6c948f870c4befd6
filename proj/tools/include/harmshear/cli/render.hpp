#pragma once

#include <string>
#include <vector>

#include "harmshear/cli/grid.hpp"
#include "harmshear/minsurf.hpp"
#include "harmshear/shear.hpp"

namespace harmshear::cli {

class IoError : public Error {
 public:
  using Error::Error;
};

enum class OutputFormat { Svg, Csv, Obj };

OutputFormat parse_format(const std::string& name);
const char* format_name(OutputFormat format);

struct RenderJob {
  ConformalMapSpec map;
  MonomialDilatation dilatation{0};
  DiskGrid grid;
  OutputFormat format = OutputFormat::Svg;
  std::string out_path;
  QuadratureConfig quadrature;

  /// Throws ParamError when the format and dilatation are incompatible.
  void validate() const;
};

struct MappedCurve {
  GridCurve source;
  std::vector<Complex> image;
};

/// Images of every grid curve under f (which is phi when m = 0).
std::vector<MappedCurve> map_grid(const RenderJob& job);

std::string format_csv(const std::vector<MappedCurve>& curves);
std::string format_svg(const std::vector<MappedCurve>& curves,
                       const std::vector<HalfLine>& halflines);

/// Half-lines to draw dashed: slit map, omega = 0, c in {-2, 0, 2}. Empty otherwise.
std::vector<HalfLine> dashed_halflines(const RenderJob& job);

/// Rendered svg or csv payload.
std::string render_map_payload(const RenderJob& job);
/// Writes render_map_payload to job.out_path.
void render_map(const RenderJob& job);

/// Surface samples in mesh order: center, then (circle, ray) row-major.
std::vector<SurfaceSample> surface_grid(const RenderJob& job);
std::string format_obj(const std::vector<SurfaceSample>& vertices, int n_rays, int n_circles);

std::string render_surface_payload(const RenderJob& job);
void render_surface(const RenderJob& job);

struct CsvRow {
  int curve_id;
  int point_index;
  Complex z;
  Complex w;
};

/// Parses a payload produced by format_csv. Throws ParamError on malformed input.
std::vector<CsvRow> parse_csv(const std::string& payload);

void write_file(const std::string& path, const std::string& payload);

}  // namespace harmshear::cli
