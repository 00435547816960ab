#pragma once

// Minimal SVG 1.1 writer for spacetime diagrams: x1 runs right, x0 runs up.
// Output is deterministic: fixed 6-decimal coordinates and insertion order.

#include <string>
#include <vector>

namespace ttflow::cli {

struct PlanePoint {
  double x1;
  double x0;
};

struct Bounds {
  double x1_min;
  double x1_max;
  double x0_min;
  double x0_max;

  void include(const PlanePoint& p);
  Bounds padded(double fraction) const;
};

class SvgCanvas {
 public:
  SvgCanvas(const Bounds& world, double width_px);

  void polygon(const std::vector<PlanePoint>& pts, const std::string& attrs);
  void polyline(const std::vector<PlanePoint>& pts, const std::string& attrs);
  void line(const PlanePoint& a, const PlanePoint& b, const std::string& attrs);
  void raw(const std::string& element);

  const Bounds& world() const { return world_; }
  std::string str() const;

 private:
  std::string points_attr(const std::vector<PlanePoint>& pts) const;
  double px(double x1) const;
  double py(double x0) const;

  Bounds world_;
  double width_;
  double height_;
  std::vector<std::string> body_;
};

}  // namespace ttflow::cli
