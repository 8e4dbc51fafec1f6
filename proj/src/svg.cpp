#include "kleekit/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "kleekit/errors.hpp"

namespace kleekit {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

SvgWriter::SvgWriter(double width_px, double height_px) : width_(width_px), height_(height_px) {}

void SvgWriter::set_world_box(Vec2 lo, Vec2 hi) {
  const double mx = std::max(1e-9, (hi.x - lo.x) * 0.08);
  const double my = std::max(1e-9, (hi.y - lo.y) * 0.08);
  world_lo_ = {lo.x - mx, lo.y - my};
  world_hi_ = {hi.x + mx, hi.y + my};
}

Vec2 SvgWriter::to_px(const Vec2& w) const {
  const double sx = width_ / (world_hi_.x - world_lo_.x);
  const double sy = height_ / (world_hi_.y - world_lo_.y);
  const double s = std::min(sx, sy);  // isotropic; geometry must not shear
  const Vec2 center = (world_lo_ + world_hi_) * 0.5;
  return {width_ * 0.5 + (w.x - center.x) * s, height_ * 0.5 - (w.y - center.y) * s};
}

void SvgWriter::add_polygon(const std::vector<Vec2>& pts, const std::string& stroke,
                            const std::string& fill, double stroke_width, double fill_opacity) {
  body_ += "<polygon points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Vec2 p = to_px(pts[i]);
    if (i) body_ += ' ';
    body_ += fmt(p.x) + "," + fmt(p.y);
  }
  body_ += "\" stroke=\"" + stroke + "\" fill=\"" + fill + "\" stroke-width=\"" +
           fmt(stroke_width) + "\" fill-opacity=\"" + fmt(fill_opacity) + "\"/>\n";
}

void SvgWriter::add_polyline(const std::vector<Vec2>& pts, const std::string& stroke,
                             double stroke_width, bool dashed) {
  body_ += "<polyline points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Vec2 p = to_px(pts[i]);
    if (i) body_ += ' ';
    body_ += fmt(p.x) + "," + fmt(p.y);
  }
  body_ += "\" stroke=\"" + stroke + "\" fill=\"none\" stroke-width=\"" + fmt(stroke_width) + "\"";
  if (dashed) body_ += " stroke-dasharray=\"6,4\"";
  body_ += "/>\n";
}

void SvgWriter::add_circle(const Vec2& center, double radius_px, const std::string& fill) {
  const Vec2 p = to_px(center);
  body_ += "<circle cx=\"" + fmt(p.x) + "\" cy=\"" + fmt(p.y) + "\" r=\"" + fmt(radius_px) +
           "\" fill=\"" + fill + "\"/>\n";
}

void SvgWriter::add_text(const Vec2& world_pos, const std::string& text, const std::string& fill) {
  const Vec2 p = to_px(world_pos);
  add_label(p.x, p.y, text, fill);
}

void SvgWriter::add_label(double x_px, double y_px, const std::string& text,
                          const std::string& fill) {
  body_ += "<text x=\"" + fmt(x_px) + "\" y=\"" + fmt(y_px) +
           "\" font-family=\"monospace\" font-size=\"12\" fill=\"" + fill + "\">" + text +
           "</text>\n";
}

std::string SvgWriter::str() const {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width_) + "\" height=\"" +
         fmt(height_) + "\" viewBox=\"0 0 " + fmt(width_) + " " + fmt(height_) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += body_;
  out += "</svg>\n";
  return out;
}

void SvgWriter::write_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << str();
}

}  // namespace kleekit
