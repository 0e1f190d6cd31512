#include "mahlervol/svg_render.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "mahlervol/common.hpp"

namespace mahlervol {
namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

// Scene units: the circumcircle is drawn with radius 100 regardless of the
// polygon's metric radius, so strokes and padding are uniform across figures.
constexpr double kR = 100.0;
constexpr double kPad = 130.0;

}  // namespace

std::string polygon_svg(const AdmissiblePolygon& poly) {
  const auto& v = poly.vertices;
  if (v.size() < 3) throw domain_error("polygon_svg: polygon has no vertices");
  double scale = kR / poly.radius;

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-" + num(kPad) +
       " -" + num(kPad) + " " + num(2 * kPad) + " " + num(2 * kPad) +
       "\" width=\"520\" height=\"520\">\n";
  s += "<defs>\n"
       "<marker id=\"au\" viewBox=\"0 0 10 10\" refX=\"7\" refY=\"5\" "
       "markerWidth=\"7\" markerHeight=\"7\" orient=\"auto\">"
       "<path d=\"M0,0 L10,5 L0,10 z\" fill=\"#265d8c\"/></marker>\n"
       "<marker id=\"at\" viewBox=\"0 0 10 10\" refX=\"7\" refY=\"5\" "
       "markerWidth=\"5\" markerHeight=\"5\" orient=\"auto\">"
       "<path d=\"M0,0 L10,5 L0,10 z\" fill=\"#a63a2a\"/></marker>\n"
       "</defs>\n";
  s += "<g transform=\"scale(1,-1)\">\n";
  s += "<circle cx=\"0\" cy=\"0\" r=\"" + num(kR) +
       "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"0.8\" "
       "stroke-dasharray=\"6 5\"/>\n";

  int n = poly.params.n, m = poly.params.m;
  for (int i = 0; i < n + m; ++i) {
    double x1 = v[i].real() * scale, y1 = v[i].imag() * scale;
    double x2 = v[i + 1].real() * scale, y2 = v[i + 1].imag() * scale;
    bool unit_chord = i < n;
    std::string attrs =
        unit_chord ? "stroke=\"#265d8c\" stroke-width=\"1.4\""
                   : "stroke=\"#a63a2a\" stroke-width=\"4.2\"";
    // winding arrows on the first chord of each family
    if (i == 0) attrs += " marker-end=\"url(#au)\"";
    if (i == n) attrs += " marker-end=\"url(#at)\"";
    s += "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" +
         num(x2) + "\" y2=\"" + num(y2) + "\" " + attrs + "/>\n";
  }
  for (int i = 0; i < n + m; ++i) {
    s += "<circle cx=\"" + num(v[i].real() * scale) + "\" cy=\"" +
         num(v[i].imag() * scale) + "\" r=\"2.2\" fill=\"#222222\"/>\n";
  }
  s += "</g>\n";

  char label[160];
  std::snprintf(label, sizeof label,
                "m=%d n=%d t=%g  eta=%.6f tau=%.6f h=%d %s", m, n,
                poly.params.t, poly.eta, poly.tau, poly.winding_h,
                poly.same_direction ? "same" : "opposite");
  s += "<text x=\"-" + num(kPad - 6.0) + "\" y=\"-" + num(kPad - 16.0) +
       "\" font-family=\"monospace\" font-size=\"9\" fill=\"#222222\">" +
       label + "</text>\n";
  s += "</svg>\n";
  return s;
}

std::string polygon_svg_filename(const AdmissiblePolygon& poly, int index) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "polygon_m%d_n%d_t%g_%d.svg", poly.params.m,
                poly.params.n, poly.params.t, index);
  return buf;
}

std::vector<std::string> write_polygon_svgs(
    const std::vector<SignedPolygon>& polys, const std::string& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw io_error("cannot create directory: " + out_dir);
  std::vector<std::string> paths;
  for (size_t i = 0; i < polys.size(); ++i) {
    std::string name = polygon_svg_filename(polys[i].polygon, int(i) + 1);
    std::string path = out_dir + "/" + name;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open output file: " + path);
    f << polygon_svg(polys[i].polygon);
    f.flush();
    if (!f) throw io_error("failed writing output file: " + path);
    paths.push_back(path);
  }
  return paths;
}

}  // namespace mahlervol
