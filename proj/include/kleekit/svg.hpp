#pragma once

#include <string>
#include <vector>

#include "kleekit/vec.hpp"

namespace kleekit {

// Minimal deterministic SVG builder: world coordinates in, one fixed
// world-to-viewport transform per document, four-decimal output so repeated
// renders of the same data are byte-identical.
class SvgWriter {
 public:
  SvgWriter(double width_px, double height_px);

  // Fit the world box (with a margin) into the viewport; call before adding.
  void set_world_box(Vec2 lo, Vec2 hi);

  void add_polygon(const std::vector<Vec2>& pts, const std::string& stroke,
                   const std::string& fill, double stroke_width = 1.5,
                   double fill_opacity = 0.15);
  void add_polyline(const std::vector<Vec2>& pts, const std::string& stroke,
                    double stroke_width = 1.0, bool dashed = false);
  void add_circle(const Vec2& center, double radius_px, const std::string& fill);
  void add_text(const Vec2& world_pos, const std::string& text, const std::string& fill = "#333");
  void add_label(double x_px, double y_px, const std::string& text,
                 const std::string& fill = "#333");

  std::string str() const;
  void write_file(const std::string& path) const;

 private:
  Vec2 to_px(const Vec2& w) const;

  double width_, height_;
  Vec2 world_lo_{-1.0, -1.0}, world_hi_{1.0, 1.0};
  std::string body_;
};

}  // namespace kleekit
