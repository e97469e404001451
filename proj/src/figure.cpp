#include "gion/figure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace gion {
namespace {

constexpr double kTwoPi = 2.0 * kPi;
constexpr double kDiameterAngle = kPi / 4.0;
constexpr double kCompassSweep = degrees_to_radians(10.0);

Point add(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
Point sub(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
Point mul(Point p, double k) { return {p.x * k, p.y * k}; }
Point polar(Point c, double radius, double angle) {
  return {c.x + radius * std::cos(angle), c.y + radius * std::sin(angle)};
}

double normalize_angle(double a) {
  a = std::fmod(a, kTwoPi);
  return a < 0.0 ? a + kTwoPi : a;
}

struct BoundsVisitor {
  Bounds& b;
  void operator()(const shape::Line& l) const {
    b.include(l.from);
    b.include(l.to);
  }
  void operator()(const shape::Arc& a) const {
    b.include(a.start());
    b.include(a.end());
    const double sweep = normalize_angle(a.end_angle - a.start_angle);
    for (int k = 0; k < 4; ++k) {
      const double cardinal = k * kPi / 2.0;
      if (normalize_angle(cardinal - a.start_angle) <= sweep) {
        b.include(polar(a.center, a.radius, cardinal));
      }
    }
  }
  void operator()(const shape::Polygon& p) const {
    for (const Point& q : p.points) b.include(q);
  }
  void operator()(const shape::Circle& c) const {
    b.include({c.center.x - c.radius, c.center.y - c.radius});
    b.include({c.center.x + c.radius, c.center.y + c.radius});
  }
  void operator()(const shape::Dot& d) const { b.include(d.center); }
  void operator()(const shape::Text& t) const { b.include(t.anchor); }
};

Bounds empty_bounds() {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return {inf, inf, -inf, -inf};
}

// Figure 6 content shared by both drawings, minus the labels.
std::vector<Shape> design_shapes(const SegmentMetrics& m) {
  const double half_chord = m.a / 2.0;
  const Point O = m.big_center();
  const Point left{-half_chord, 0.0};
  const Point right{half_chord, 0.0};
  const Point diameter_dir{std::cos(kDiameterAngle), std::sin(kDiameterAngle)};

  std::vector<Shape> out;
  out.push_back(shape::Arc{"segment-arc", O, m.R, kPi / 2.0 - m.theta,
                           kPi / 2.0 + m.theta, Pen::kSolid});
  out.push_back(shape::Line{"chord", left, right, Pen::kSolid});
  out.push_back(shape::Line{"bisector", {0.0, 0.0}, {0.0, m.m}, Pen::kSolid});
  out.push_back(shape::Polygon{
      "square",
      {m.square_origin, {0.0, 0.0}, {0.0, m.s}, {-m.s, m.s}},
      Pen::kSolid});
  out.push_back(
      shape::Circle{"inscribed-circle", m.circle_center, m.r, Pen::kSolid});
  out.push_back(shape::Line{"circle-diameter",
                            sub(m.circle_center, mul(diameter_dir, m.r)),
                            add(m.circle_center, mul(diameter_dir, m.r)),
                            Pen::kSolid});
  out.push_back(shape::Dot{"circle-center", m.circle_center});
  return out;
}

void append_labels(std::vector<Shape>& shapes, const SegmentMetrics& m,
                   const RenderStyle& style) {
  const double fs = style.font_size;
  shapes.push_back(shape::Text{"label-a", {m.a / 4.0, 0.0}, 0.0, fs, "a"});
  shapes.push_back(shape::Text{"label-m", {0.0, m.m}, 0.6 * fs, 1.1 * fs, "m"});
  shapes.push_back(
      shape::Text{"label-s", {-m.s / 2.0, m.s / 2.0}, 0.0, 0.35 * fs, "s"});
  shapes.push_back(shape::Text{
      "label-r", polar(m.circle_center, m.r / 2.0, -kDiameterAngle), 0.0,
      0.35 * fs, "r"});
}

Scene finish_scene(std::vector<Shape> shapes, const RenderStyle& style) {
  Scene scene;
  scene.style = style;
  scene.model_bounds = empty_bounds();
  BoundsVisitor visitor{scene.model_bounds};
  for (const Shape& s : shapes) {
    if (!std::holds_alternative<shape::Text>(s)) std::visit(visitor, s);
  }
  scene.viewport = fit_viewport(scene.model_bounds, style);
  scene.shapes = std::move(shapes);
  return scene;
}

std::string stroke_attrs(Pen pen, const RenderStyle& style) {
  switch (pen) {
    case Pen::kSolid:
      return "stroke=\"" + style.line_color + "\" stroke-width=\"" +
             format_coord(style.stroke_width) + "\"";
    case Pen::kConstruction:
      return "stroke=\"" + style.construction_color + "\" stroke-width=\"" +
             format_coord(0.6 * style.stroke_width) + "\"";
    case Pen::kDashed:
      return "stroke=\"" + style.dashed_color + "\" stroke-width=\"" +
             format_coord(style.stroke_width) + "\" stroke-dasharray=\"" +
             format_coord(style.dash_length) + " " +
             format_coord(style.dash_gap) + "\"";
  }
  return {};
}

std::string xy(Point p) { return format_coord(p.x) + " " + format_coord(p.y); }

struct SvgWriter {
  const Scene& scene;
  std::string& out;

  Point at(Point model) const { return scene.viewport.to_canvas(model); }
  std::string stroke(Pen pen) const { return stroke_attrs(pen, scene.style); }

  void operator()(const shape::Line& l) const {
    const Point p = at(l.from), q = at(l.to);
    out += "  <line id=\"" + l.id + "\" x1=\"" + format_coord(p.x) +
           "\" y1=\"" + format_coord(p.y) + "\" x2=\"" + format_coord(q.x) +
           "\" y2=\"" + format_coord(q.y) + "\" " + stroke(l.pen) + "/>\n";
  }
  void operator()(const shape::Arc& a) const {
    // Counter-clockwise in model space is sweep-flag 0 once y is flipped.
    const double sweep = normalize_angle(a.end_angle - a.start_angle);
    const std::string rad = format_coord(a.radius * scene.viewport.scale);
    out += "  <path id=\"" + a.id + "\" d=\"M " + xy(at(a.start())) + " A " +
           rad + " " + rad + " 0 " + (sweep > kPi ? "1" : "0") + " 0 " +
           xy(at(a.end())) + "\" fill=\"none\" " + stroke(a.pen) + "/>\n";
  }
  void operator()(const shape::Polygon& p) const {
    std::string d;
    for (std::size_t i = 0; i < p.points.size(); ++i) {
      d += (i == 0 ? "M " : " L ") + xy(at(p.points[i]));
    }
    out += "  <path id=\"" + p.id + "\" d=\"" + d + " Z\" fill=\"none\" " +
           stroke(p.pen) + "/>\n";
  }
  void operator()(const shape::Circle& c) const {
    const Point p = at(c.center);
    out += "  <circle id=\"" + c.id + "\" cx=\"" + format_coord(p.x) +
           "\" cy=\"" + format_coord(p.y) + "\" r=\"" +
           format_coord(c.radius * scene.viewport.scale) +
           "\" fill=\"none\" " + stroke(c.pen) + "/>\n";
  }
  void operator()(const shape::Dot& d) const {
    const Point p = at(d.center);
    const double rad = 1.5 * scene.style.stroke_width;
    const std::string r = format_coord(rad);
    out += "  <path id=\"" + d.id + "\" d=\"M " +
           xy({p.x - rad, p.y}) + " a " + r + " " + r + " 0 1 0 " +
           format_coord(2.0 * rad) + " 0 a " + r + " " + r + " 0 1 0 " +
           format_coord(-2.0 * rad) + " 0 Z\" fill=\"" +
           scene.style.line_color + "\" stroke=\"none\"/>\n";
  }
  void operator()(const shape::Text& t) const {
    const Point p = at(t.anchor);
    out += "  <text id=\"" + t.id + "\" x=\"" + format_coord(p.x + t.dx) +
           "\" y=\"" + format_coord(p.y + t.dy) + "\" font-family=\"serif\" " +
           "font-size=\"" + format_coord(scene.style.font_size) +
           "\" text-anchor=\"middle\" fill=\"" + scene.style.line_color +
           "\">" + t.text + "</text>\n";
  }
};

}  // namespace

void RenderStyle::validate() const {
  const auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(stroke_width) || !positive(dash_length) ||
      !positive(dash_gap) || !positive(canvas_width) ||
      !positive(canvas_height) || !positive(font_size)) {
    throw DomainError("render style sizes must be positive");
  }
  if (!std::isfinite(margin) || margin < 0.0 ||
      margin >= std::min(canvas_width, canvas_height) / 2.0) {
    throw DomainError("render margin must be in [0, min(canvas) / 2)");
  }
}

void Bounds::include(Point p) {
  min_x = std::min(min_x, p.x);
  min_y = std::min(min_y, p.y);
  max_x = std::max(max_x, p.x);
  max_y = std::max(max_y, p.y);
}

bool Bounds::contains(Point p, double slack) const {
  return p.x >= min_x - slack && p.x <= max_x + slack &&
         p.y >= min_y - slack && p.y <= max_y + slack;
}

Point Viewport::to_canvas(Point model) const {
  return {offset_x + scale * model.x, offset_y - scale * model.y};
}

Point Viewport::to_model(Point canvas) const {
  return {(canvas.x - offset_x) / scale, (offset_y - canvas.y) / scale};
}

Viewport fit_viewport(const Bounds& b, const RenderStyle& style) {
  style.validate();
  const double width = b.max_x - b.min_x;
  const double height = b.max_y - b.min_y;
  const double avail_w = style.canvas_width - 2.0 * style.margin;
  const double avail_h = style.canvas_height - 2.0 * style.margin;
  Viewport vp;
  vp.scale = std::min(avail_w / width, avail_h / height);
  // Centre the drawing on the canvas.
  vp.offset_x = style.canvas_width / 2.0 - vp.scale * (b.min_x + b.max_x) / 2.0;
  vp.offset_y =
      style.canvas_height / 2.0 + vp.scale * (b.min_y + b.max_y) / 2.0;
  return vp;
}

Point shape::Arc::start() const { return polar(center, radius, start_angle); }
Point shape::Arc::end() const { return polar(center, radius, end_angle); }

Bounds shape_bounds(const Shape& s) {
  Bounds b = empty_bounds();
  std::visit(BoundsVisitor{b}, s);
  return b;
}

Scene figure6_scene(const SegmentConfig& cfg, const RenderStyle& style) {
  style.validate();
  const SegmentMetrics m = metrics(cfg);
  std::vector<Shape> shapes = design_shapes(m);
  if (style.show_labels) append_labels(shapes, m, style);
  return finish_scene(std::move(shapes), style);
}

Scene figure7_scene(const SegmentConfig& cfg, const RenderStyle& style) {
  style.validate();
  const SegmentMetrics m = metrics(cfg);
  std::vector<Shape> shapes = design_shapes(m);

  const Point apex{0.0, m.m};
  const Point left{-m.a / 2.0, 0.0};
  const Point right{m.a / 2.0, 0.0};

  // Compass construction: equal circles about the apex and the right chord
  // end meet on the perpendicular bisector of that sub-chord, which is normal
  // to the arc and passes through the large circle's center.
  const double span = distance(apex, right);
  const Point mid = mul(add(apex, right), 0.5);
  const Point along = mul(sub(right, apex), 1.0 / span);
  const Point normal{-along.y, along.x};
  const double compass = 0.75 * span;
  const double reach =
      std::sqrt(compass * compass - 0.25 * span * span);
  const Point cross_a = add(mid, mul(normal, reach));
  const Point cross_b = sub(mid, mul(normal, reach));

  // Where the arc normal meets the extended bisector x = 0.
  const double t_center = cross_a.x / (cross_a.x - cross_b.x);
  const Point located = add(cross_a, mul(sub(cross_b, cross_a), t_center));
  const double t_lo = std::min({0.0, 1.0, t_center});
  const double t_hi = std::max({0.0, 1.0, t_center});

  shapes.push_back(
      shape::Line{"bisector-extension", {0.0, 0.0}, located,
                  Pen::kConstruction});
  int arc_index = 0;
  for (const Point& crossing : {cross_a, cross_b}) {
    for (const Point& pivot : {apex, right}) {
      const Point d = sub(crossing, pivot);
      const double phi = std::atan2(d.y, d.x);
      shapes.push_back(shape::Arc{"compass-arc-" + std::to_string(++arc_index),
                                  pivot, compass, phi - kCompassSweep,
                                  phi + kCompassSweep, Pen::kConstruction});
    }
  }
  shapes.push_back(shape::Line{
      "arc-normal", add(cross_a, mul(sub(cross_b, cross_a), t_lo)),
      add(cross_a, mul(sub(cross_b, cross_a), t_hi)), Pen::kConstruction});
  shapes.push_back(shape::Dot{"located-center", located});
  shapes.push_back(shape::Line{"radius-left", located, left, Pen::kDashed});
  shapes.push_back(shape::Line{"radius-right", located, right, Pen::kDashed});
  shapes.push_back(shape::Arc{"angle-mark", located, 0.18 * m.R,
                              kPi / 2.0 - m.theta, kPi / 2.0 + m.theta,
                              Pen::kConstruction});
  char angle_text[32];
  std::snprintf(angle_text, sizeof angle_text, "%.1f°", cfg.central_degrees());
  shapes.push_back(shape::Text{"angle-annotation",
                               {located.x, located.y + 0.28 * m.R}, 0.0,
                               0.35 * style.font_size, angle_text});

  if (style.show_labels) {
    append_labels(shapes, m, style);
    shapes.push_back(shape::Text{"label-O", located, 0.7 * style.font_size,
                                 0.9 * style.font_size, "O"});
  }
  Scene scene = finish_scene(std::move(shapes), style);
  scene.located_center = located;
  return scene;
}

std::string to_svg(const Scene& scene) {
  const RenderStyle& st = scene.style;
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         format_coord(st.canvas_width) + "\" height=\"" +
         format_coord(st.canvas_height) + "\" viewBox=\"0 0 " +
         format_coord(st.canvas_width) + " " + format_coord(st.canvas_height) +
         "\">\n";
  SvgWriter writer{scene, out};
  for (const Shape& s : scene.shapes) std::visit(writer, s);
  out += "</svg>\n";
  return out;
}

std::string render_figure6(const SegmentConfig& cfg, const RenderStyle& style) {
  return to_svg(figure6_scene(cfg, style));
}

std::string render_figure7(const SegmentConfig& cfg, const RenderStyle& style) {
  return to_svg(figure7_scene(cfg, style));
}

std::string format_coord(double v) {
  char buf[64];
  // Adding 0.0 folds -0.0 into +0.0.
  std::snprintf(buf, sizeof buf, "%.6f", v + 0.0);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

}  // namespace gion
