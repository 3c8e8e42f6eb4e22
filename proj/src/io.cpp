#include "curvefold/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace curvefold {
namespace io {

namespace {

void append_fixed(std::string& out, double v, int decimals) {
  char buf[64];
  if (std::abs(v) < 0.5 * std::pow(10.0, -decimals)) v = 0.0;  // avoid "-0.000000"
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  out += buf;
}

void append_vertex(std::string& out, const Vec3& p) {
  out += "v ";
  append_fixed(out, p.x(), 6);
  out += ' ';
  append_fixed(out, p.y(), 6);
  out += ' ';
  append_fixed(out, p.z(), 6);
  out += '\n';
}

void append_mesh(std::string& out, const StripMesh& mesh, int vertex_base) {
  for (const auto& p : mesh.vertices) append_vertex(out, p);
  for (const auto& f : mesh.faces) {
    out += "f " + std::to_string(f[0] + 1 + vertex_base) + ' ' +
           std::to_string(f[1] + 1 + vertex_base) + ' ' + std::to_string(f[2] + 1 + vertex_base) +
           '\n';
  }
}

void append_crease_polyline(std::string& out, const StripMesh& mesh, int vertex_base) {
  // The crease is the v = 0 row when present, else the inner edge.
  int j0 = 0;
  double best = 1e300;
  for (int j = 0; j < mesh.nv; ++j) {
    const double v = std::abs(mesh.sv[j].second);
    if (v < best) {
      best = v;
      j0 = j;
    }
  }
  out += "l";
  for (int i = 0; i < mesh.ns; ++i) out += ' ' + std::to_string(vertex_base + i * mesh.nv + j0 + 1);
  if (mesh.wrap) out += ' ' + std::to_string(vertex_base + j0 + 1);
  out += '\n';
}

}  // namespace

std::string obj_from_mesh(const StripMesh& mesh, bool crease_polyline) {
  std::string out;
  out.reserve(mesh.vertices.size() * 32);
  out += "# developable strip, " + std::to_string(mesh.ns) + " x " + std::to_string(mesh.nv) +
         " samples\n";
  append_mesh(out, mesh, 0);
  if (crease_polyline) append_crease_polyline(out, mesh, 0);
  return out;
}

std::string obj_from_origami(const OrigamiMap& om, int n_v) {
  if (n_v <= 0) n_v = defaults().mesh.n_v;
  const int half = n_v / 2 + 1;
  StripMesh up = sample_mesh(om.upper, half, 0.0, om.upper.width);
  StripMesh down = sample_mesh(om.lower, half, -om.lower.width, 0.0);
  std::string out;
  out += "# curved folding: upper strip, dual strip, crease polyline\n";
  out += "o upper\n";
  append_mesh(out, up, 0);
  out += "o lower\n";
  append_mesh(out, down, static_cast<int>(up.vertices.size()));
  append_crease_polyline(out, up, 0);
  return out;
}

std::string svg_from_pattern(const PlaneCurve& pattern, const std::vector<double>& beta_left,
                             const std::vector<double>& beta_right, double tick_len,
                             int tick_every) {
  const int n = pattern.size();
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& p : pattern.point) {
    xmin = std::min(xmin, p.x());
    xmax = std::max(xmax, p.x());
    ymin = std::min(ymin, p.y());
    ymax = std::max(ymax, p.y());
  }
  const double pad = 2.0 * tick_len;
  xmin -= pad;
  ymin -= pad;
  xmax += pad;
  ymax += pad;

  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
                "viewBox=\"%.4f %.4f %.4f %.4f\">\n",
                xmin, -ymax, xmax - xmin, ymax - ymin);
  out += buf;
  // Flip y so the mathematical orientation (counterclockwise positive) is kept.
  out += "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-linecap=\"round\">\n";

  const double w = 0.004 * std::max(xmax - xmin, ymax - ymin);
  out += "<polyline stroke=\"black\" stroke-width=\"" ;
  append_fixed(out, w, 4);
  out += "\" points=\"";
  for (int i = 0; i < n; ++i) {
    append_fixed(out, pattern.point[i].x(), 4);
    out += ',';
    append_fixed(out, pattern.point[i].y(), 4);
    if (i + 1 < n) out += ' ';
  }
  out += "\"/>\n";

  // Tangent directions from forward differences; ticks at beta_left to the
  // left of the tangent and beta_right to the right.
  auto tick = [&](int i, double angle, int side, const char* color) {
    const int i2 = std::min(i + 1, n - 1);
    Vec2 t = (pattern.point[i2] - pattern.point[std::max(i2 - 1, 0)]).normalized();
    const double rot = side * angle;
    Vec2 dir(t.x() * std::cos(rot) - t.y() * std::sin(rot),
             t.x() * std::sin(rot) + t.y() * std::cos(rot));
    const Vec2 a = pattern.point[i];
    const Vec2 b = a + tick_len * dir;
    out += "<line stroke=\"";
    out += color;
    out += "\" stroke-width=\"";
    append_fixed(out, 0.6 * w, 4);
    out += "\" x1=\"";
    append_fixed(out, a.x(), 4);
    out += "\" y1=\"";
    append_fixed(out, a.y(), 4);
    out += "\" x2=\"";
    append_fixed(out, b.x(), 4);
    out += "\" y2=\"";
    append_fixed(out, b.y(), 4);
    out += "\"/>\n";
  };
  for (int i = 0; i < n; i += tick_every) {
    if (i < static_cast<int>(beta_left.size())) tick(i, beta_left[i], +1, "#1f6fbf");
    if (i < static_cast<int>(beta_right.size())) tick(i, beta_right[i], -1, "#bf3f1f");
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::string csv_from_columns(const std::vector<std::string>& header,
                             const std::vector<std::vector<double>>& columns) {
  std::string out;
  for (size_t k = 0; k < header.size(); ++k) {
    out += header[k];
    out += (k + 1 < header.size()) ? ',' : '\n';
  }
  if (columns.empty()) return out;
  const size_t rows = columns[0].size();
  char buf[64];
  for (size_t r = 0; r < rows; ++r) {
    for (size_t k = 0; k < columns.size(); ++k) {
      std::snprintf(buf, sizeof(buf), "%.9g", columns[k][r]);
      out += buf;
      out += (k + 1 < columns.size()) ? ',' : '\n';
    }
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorCode::InvalidConfig, "cannot open output file " + path);
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace io
}  // namespace curvefold
