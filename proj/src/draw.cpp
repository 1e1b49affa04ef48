#include "fluct/draw.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace fluct {

namespace {

constexpr double kSize = 400.0;
constexpr double kCenter = kSize / 2;
constexpr double kOuter = 170.0;
constexpr double kInner = 80.0;
constexpr double kMiddle = (kOuter + kInner) / 2;
constexpr double kPi = 3.14159265358979323846;

const char* const kPalette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
                                "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};

struct Point {
  double x;
  double y;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string xy(const Point& p) { return num(p.x) + "," + num(p.y); }

double angle_of(int i, const AnnulusShape& shape) {
  if (shape.on_outer(i)) return -kPi / 2 + 2 * kPi * (i - 1) / shape.p();
  return -kPi / 2 - 2 * kPi * (i - shape.p() - 1) / shape.q();
}

double radius_of(int i, const AnnulusShape& shape) { return shape.on_outer(i) ? kOuter : kInner; }

Point at(double angle, double radius) {
  return {kCenter + radius * std::cos(angle), kCenter + radius * std::sin(angle)};
}

Point position(int i, const AnnulusShape& shape) { return at(angle_of(i, shape), radius_of(i, shape)); }

// Control point: the point pushed radially toward the middle circle.
Point handle(int i, const AnnulusShape& shape) {
  const double r = radius_of(i, shape);
  return at(angle_of(i, shape), r + 0.6 * (kMiddle - r));
}

Point centroid(const std::vector<int>& cycle, const AnnulusShape& shape) {
  Point c{0, 0};
  for (int i : cycle) {
    const Point p = position(i, shape);
    c.x += p.x;
    c.y += p.y;
  }
  c.x /= static_cast<double>(cycle.size());
  c.y /= static_cast<double>(cycle.size());
  return c;
}

std::string cycle_element(const std::vector<int>& cycle, int index, const AnnulusShape& shape) {
  const char* colour = kPalette[index % 10];
  if (cycle.size() == 1) {
    const Point p = position(cycle.front(), shape);
    return "  <circle class=\"cycle\" cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"6.00\" fill=\"" +
           colour + "\"/>\n";
  }
  std::string d = "M " + xy(position(cycle.front(), shape));
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    const int a = cycle[k];
    const int b = cycle[(k + 1) % cycle.size()];
    d += " C " + xy(handle(a, shape)) + " " + xy(handle(b, shape)) + " " + xy(position(b, shape));
  }
  d += " Z";
  return "  <path class=\"cycle\" d=\"" + d + "\" fill=\"" + colour +
         "\" fill-opacity=\"0.35\" stroke=\"" + colour + "\" stroke-width=\"2\"/>\n";
}

std::string render(const Permutation& perm, const AnnulusShape& shape,
                   const std::vector<std::pair<int, int>>& tunnels) {
  if (perm.size() != shape.total()) throw std::invalid_argument("draw: permutation size differs from p + q");
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"400\" height=\"400\" "
      "viewBox=\"0 0 400 400\">\n";
  out += "  <title>" + perm.to_string() + " on the " + shape.to_string() + "-annulus</title>\n";
  out += "  <circle class=\"circle\" cx=\"200.00\" cy=\"200.00\" r=\"" + num(kOuter) +
         "\" fill=\"none\" stroke=\"#333\"/>\n";
  out += "  <circle class=\"circle\" cx=\"200.00\" cy=\"200.00\" r=\"" + num(kInner) +
         "\" fill=\"none\" stroke=\"#333\"/>\n";
  for (int c = 0; c < perm.cycle_count(); ++c) {
    out += cycle_element(perm.cycles()[static_cast<std::size_t>(c)], c, shape);
  }
  for (auto [a, b] : tunnels) {
    const Point pa = centroid(perm.cycles()[static_cast<std::size_t>(a)], shape);
    const Point pb = centroid(perm.cycles()[static_cast<std::size_t>(b)], shape);
    out += "  <line class=\"tunnel\" x1=\"" + num(pa.x) + "\" y1=\"" + num(pa.y) + "\" x2=\"" + num(pb.x) +
           "\" y2=\"" + num(pb.y) + "\" stroke=\"#000\" stroke-width=\"2\" stroke-dasharray=\"4,4\"/>\n";
  }
  for (int i = 1; i <= shape.total(); ++i) {
    const double r = radius_of(i, shape) + (shape.on_outer(i) ? 16 : -16);
    const Point p = at(angle_of(i, shape), r);
    out += "  <text x=\"" + num(p.x) + "\" y=\"" + num(p.y) +
           "\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">" + std::to_string(i) +
           "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace

std::string draw_annulus(const Permutation& perm, const AnnulusShape& shape) {
  return render(perm, shape, {});
}

std::string draw_annulus(const PartitionedPermutation& vp, const AnnulusShape& shape) {
  std::vector<std::pair<int, int>> tunnels;
  for (const auto& group : vp.cycles_by_block()) {
    for (std::size_t k = 1; k < group.size(); ++k) tunnels.emplace_back(group[0], group[k]);
  }
  return render(vp.perm(), shape, tunnels);
}

}  // namespace fluct
