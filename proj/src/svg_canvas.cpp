#include "svg_canvas.hpp"

#include <algorithm>
#include <cstdio>

namespace ttflow::cli {

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

void Bounds::include(const PlanePoint& p) {
  x1_min = std::min(x1_min, p.x1);
  x1_max = std::max(x1_max, p.x1);
  x0_min = std::min(x0_min, p.x0);
  x0_max = std::max(x0_max, p.x0);
}

Bounds Bounds::padded(double fraction) const {
  const double d1 = fraction * (x1_max - x1_min);
  const double d0 = fraction * (x0_max - x0_min);
  return {x1_min - d1, x1_max + d1, x0_min - d0, x0_max + d0};
}

SvgCanvas::SvgCanvas(const Bounds& world, double width_px) : world_(world), width_(width_px) {
  const double span1 = world_.x1_max - world_.x1_min;
  const double span0 = world_.x0_max - world_.x0_min;
  height_ = width_px * span0 / span1;
}

double SvgCanvas::px(double x1) const {
  return (x1 - world_.x1_min) / (world_.x1_max - world_.x1_min) * width_;
}

double SvgCanvas::py(double x0) const {
  return (world_.x0_max - x0) / (world_.x0_max - world_.x0_min) * height_;
}

std::string SvgCanvas::points_attr(const std::vector<PlanePoint>& pts) const {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ' ';
    s += fixed6(px(pts[i].x1)) + ',' + fixed6(py(pts[i].x0));
  }
  return s;
}

void SvgCanvas::polygon(const std::vector<PlanePoint>& pts, const std::string& attrs) {
  body_.push_back("<polygon points=\"" + points_attr(pts) + "\" " + attrs + "/>");
}

void SvgCanvas::polyline(const std::vector<PlanePoint>& pts, const std::string& attrs) {
  body_.push_back("<polyline points=\"" + points_attr(pts) + "\" " + attrs + "/>");
}

void SvgCanvas::line(const PlanePoint& a, const PlanePoint& b, const std::string& attrs) {
  body_.push_back("<line x1=\"" + fixed6(px(a.x1)) + "\" y1=\"" + fixed6(py(a.x0)) + "\" x2=\"" +
                  fixed6(px(b.x1)) + "\" y2=\"" + fixed6(py(b.x0)) + "\" " + attrs + "/>");
}

void SvgCanvas::raw(const std::string& element) { body_.push_back(element); }

std::string SvgCanvas::str() const {
  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fixed6(width_) +
       "\" height=\"" + fixed6(height_) + "\" viewBox=\"0 0 " + fixed6(width_) + ' ' +
       fixed6(height_) + "\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + fixed6(width_) + "\" height=\"" + fixed6(height_) +
       "\" fill=\"#ffffff\"/>\n";
  for (const auto& e : body_) {
    s += e;
    s += '\n';
  }
  s += "</svg>\n";
  return s;
}

}  // namespace ttflow::cli
