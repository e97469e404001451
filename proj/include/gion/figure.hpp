#pragma once

// SVG drawings of the figure (the tablet design) and of the compass
// construction that locates the large circle's center.
//
// Geometry is built as a Scene in model coordinates (the segment_geometry
// frame, y up) and flipped once by the Viewport when serialized. Output is
// byte-deterministic: fixed element order and 6-decimal coordinates.

#include <string>
#include <variant>
#include <vector>

#include "gion/geometry.hpp"

namespace gion {

struct RenderStyle {
  double stroke_width = 2.0;
  double dash_length = 8.0;
  double dash_gap = 5.0;
  double canvas_width = 800.0;
  double canvas_height = 600.0;
  double margin = 40.0;
  bool show_labels = true;
  double font_size = 20.0;
  std::string line_color = "#000000";
  std::string construction_color = "#808080";
  std::string dashed_color = "#8b0000";

  /// Throws DomainError on non-positive sizes or margin >= min(canvas) / 2.
  void validate() const;
};

enum class Pen { kSolid, kConstruction, kDashed };

struct Bounds {
  double min_x = 0.0, min_y = 0.0, max_x = 0.0, max_y = 0.0;

  void include(Point p);
  bool contains(Point p, double slack = 0.0) const;
};

/// Maps model coordinates onto the canvas with uniform scale, y flipped.
struct Viewport {
  double scale = 1.0;
  double offset_x = 0.0;
  double offset_y = 0.0;

  Point to_canvas(Point model) const;
  Point to_model(Point canvas) const;
};

Viewport fit_viewport(const Bounds& model_bounds, const RenderStyle& style);

namespace shape {

struct Line {
  std::string id;
  Point from, to;
  Pen pen = Pen::kSolid;
};

/// Counter-clockwise (in model space) from start_angle to end_angle.
struct Arc {
  std::string id;
  Point center;
  double radius = 0.0;
  double start_angle = 0.0;
  double end_angle = 0.0;
  Pen pen = Pen::kSolid;

  Point start() const;
  Point end() const;
};

struct Polygon {
  std::string id;
  std::vector<Point> points;
  Pen pen = Pen::kSolid;
};

struct Circle {
  std::string id;
  Point center;
  double radius = 0.0;
  Pen pen = Pen::kSolid;
};

/// Filled point marker; drawn as a path so it is not confused with circles.
struct Dot {
  std::string id;
  Point center;
};

/// Text anchored at a model point, shifted by (dx, dy) canvas units.
struct Text {
  std::string id;
  Point anchor;
  double dx = 0.0;
  double dy = 0.0;
  std::string text;
};

}  // namespace shape

using Shape = std::variant<shape::Line, shape::Arc, shape::Polygon,
                           shape::Circle, shape::Dot, shape::Text>;

Bounds shape_bounds(const Shape& s);

struct Scene {
  RenderStyle style;
  Viewport viewport;
  Bounds model_bounds;
  std::vector<Shape> shapes;
  /// Large-circle center found by the compass construction (figure 7 only).
  Point located_center;
};

Scene figure6_scene(const SegmentConfig& cfg, const RenderStyle& style = {});
Scene figure7_scene(const SegmentConfig& cfg, const RenderStyle& style = {});

std::string to_svg(const Scene& scene);

std::string render_figure6(const SegmentConfig& cfg,
                           const RenderStyle& style = {});
std::string render_figure7(const SegmentConfig& cfg,
                           const RenderStyle& style = {});

/// Fixed 6-decimal formatting used for every coordinate.
std::string format_coord(double v);

}  // namespace gion
