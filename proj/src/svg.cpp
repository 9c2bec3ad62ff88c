#include "qtoric/svg.hpp"

#include <algorithm>
#include <sstream>

#include "qtoric/cones.hpp"
#include "qtoric/qample.hpp"

namespace qtoric {

namespace {

// Viewport [-2,2]^2 mapped onto a 400x400 canvas, y pointing up.
std::string coord(const Rat& v, bool flip) {
  Rat mapped = flip ? Rat((Rat(2) - v) * 100) : Rat((v + 2) * 100);
  // fixed 4-decimal rendering, exact rounding half away from zero
  Int scaled;
  Rat t = mapped * 10000;
  Int num = t.get_num(), den = t.get_den();
  Int twice = 2 * num + (sgn(num) >= 0 ? den : -den);
  mpz_fdiv_q(scaled.get_mpz_t(), twice.get_mpz_t(), Int(2 * den).get_mpz_t());
  std::ostringstream out;
  Int whole = scaled / 10000, frac = abs(scaled % 10000);
  out << whole << '.';
  std::string fs = frac.get_str();
  out << std::string(4 - fs.size(), '0') << fs;
  return out.str();
}

std::string point(const RatVec& p) { return coord(p[0], false) + "," + coord(p[1], true); }

// Vertices of the cone closure clipped to the viewport, in convex order.
std::vector<RatVec> clipped_polygon(const POCone& cone) {
  Polyhedron poly;
  poly.dim = 2;
  for (const auto& row : cone.constraints)
    poly.add({Rat(row.normal[0]), Rat(row.normal[1])}, Rat(0));
  poly.add({Rat(1), Rat(0)}, Rat(2));
  poly.add({Rat(-1), Rat(0)}, Rat(2));
  poly.add({Rat(0), Rat(1)}, Rat(2));
  poly.add({Rat(0), Rat(-1)}, Rat(2));
  std::vector<RatVec> verts = vertices(poly);
  if (verts.size() < 3) return verts;
  RatVec c{0, 0};
  for (const auto& v : verts) {
    c[0] += v[0];
    c[1] += v[1];
  }
  c[0] /= static_cast<int>(verts.size());
  c[1] /= static_cast<int>(verts.size());
  auto half = [&](const RatVec& p) {
    Rat dy = p[1] - c[1], dx = p[0] - c[0];
    return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
  };
  std::sort(verts.begin(), verts.end(), [&](const RatVec& a, const RatVec& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Rat cross = (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]);
    if (cross != 0) return cross > 0;
    return a < b;
  });
  return verts;
}

void emit_region(std::ostringstream& svg, const POCone& cone, const std::string& fill) {
  POCone canon = prune(canonicalize(cone));
  std::vector<RatVec> verts = clipped_polygon(canon);
  if (verts.size() >= 3) {
    svg << "<path d=\"M " << point(verts[0]);
    for (std::size_t i = 1; i < verts.size(); ++i) svg << " L " << point(verts[i]);
    svg << " Z\" fill=\"" << fill << "\" stroke=\"none\"/>\n";
  }
  // boundary edges: polygon edges lying on a constraint line through 0
  std::size_t n = verts.size();
  for (const auto& row : canon.constraints) {
    for (std::size_t i = 0; i < n; ++i) {
      const RatVec& a = verts[i];
      const RatVec& b = verts[(i + 1) % n];
      Rat va = Rat(row.normal[0]) * a[0] + Rat(row.normal[1]) * a[1];
      Rat vb = Rat(row.normal[0]) * b[0] + Rat(row.normal[1]) * b[1];
      if (va != 0 || vb != 0) continue;
      svg << "<line x1=\"" << coord(a[0], false) << "\" y1=\"" << coord(a[1], true) << "\" x2=\""
          << coord(b[0], false) << "\" y2=\"" << coord(b[1], true) << "\" stroke=\"#333333\""
          << (row.strict ? " stroke-dasharray=\"7 5\"" : "") << " stroke-width=\"2\"/>\n";
      if (n == 2) return;  // a degenerate (segment) region has one edge
    }
  }
}

}  // namespace

std::string emit_figure(const Fan& f, std::size_t q) {
  if (class_lattice(f).rank != 2)
    throw QtError("UnsupportedRank", "figures are drawn for Picard rank 2 only");
  ObstructionRegion region = obstruction_region(f, q);
  QAmpleCone amp = q_ample_cone(f, q);

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" "
         "viewBox=\"0 0 400 400\">\n";
  svg << "<defs><pattern id=\"hatch\" width=\"8\" height=\"8\" "
         "patternTransform=\"rotate(45)\" patternUnits=\"userSpaceOnUse\">"
         "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"8\" stroke=\"#888888\" stroke-width=\"2\"/>"
         "</pattern></defs>\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"400\" height=\"400\" fill=\"#ffffff\"/>\n";
  // axes
  svg << "<line x1=\"0\" y1=\"200\" x2=\"400\" y2=\"200\" stroke=\"#cccccc\"/>\n";
  svg << "<line x1=\"200\" y1=\"0\" x2=\"200\" y2=\"400\" stroke=\"#cccccc\"/>\n";

  for (const POCone& image : region.closed_images) emit_region(svg, image, "url(#hatch)");
  for (const POCone& cell : amp.cells) emit_region(svg, cell, "#cfe3f7");

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace qtoric
