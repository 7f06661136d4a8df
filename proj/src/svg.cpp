#include "morsekit/svg.hpp"

#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <deque>
#include <unordered_map>
#include <vector>

namespace morsekit {

namespace {

void appendf(std::string& out, const char* fmt, ...) {
  char buf[256];
  va_list ap;
  va_start(ap, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, ap);
  va_end(ap);
  out += buf;
}

constexpr double kCanvas = 800.0;

struct Mapper {
  double lo, hi;
  double px(double x) const { return (x - lo) / (hi - lo) * kCanvas; }
  double py(double y) const { return (hi - y) / (hi - lo) * kCanvas; }
};

struct Point {
  double x, y;
};

// Marching squares on the sign grid of g. Intersection points are computed
// once per grid edge, so the two cells sharing an edge chain seamlessly.
class CurveTracer {
 public:
  CurveTracer(const FiberArrangement& arr, int res)
      : arr_(arr), res_(res), h_((arr.box_hi - arr.box_lo) / res) {
    corner_.resize(static_cast<size_t>(res + 1) * (res + 1));
    for (int b = 0; b <= res; ++b)
      for (int a = 0; a <= res; ++a)
        corner_[idx(a, b)] =
            arr.curve.eval_double(arr.box_lo + a * h_, arr.box_lo + b * h_);
  }

  // chains of edge keys; second element marks a closed loop
  std::vector<std::pair<std::vector<std::int64_t>, bool>> trace() {
    collect_segments();
    std::vector<std::pair<std::vector<std::int64_t>, bool>> out;
    std::vector<char> used(segs_.size(), 0);
    for (size_t s = 0; s < segs_.size(); ++s) {
      if (used[s]) continue;
      used[s] = 1;
      std::deque<std::int64_t> path{segs_[s].first, segs_[s].second};
      extend(path, used, /*forward=*/true);
      extend(path, used, /*forward=*/false);
      const bool closed = path.size() > 2 && path.front() == path.back();
      std::vector<std::int64_t> edges(path.begin(), path.end());
      if (closed) edges.pop_back();
      out.emplace_back(std::move(edges), closed);
    }
    return out;
  }

  Point edge_point(std::int64_t key) const { return points_.at(key); }

 private:
  size_t idx(int a, int b) const {
    return static_cast<size_t>(b) * (res_ + 1) + a;
  }
  bool inside(int a, int b) const { return corner_[idx(a, b)] > 0.0; }

  std::int64_t hkey(int a, int b) const {
    return (static_cast<std::int64_t>(b) * (res_ + 1) + a) * 2;
  }
  std::int64_t vkey(int a, int b) const {
    return (static_cast<std::int64_t>(b) * (res_ + 1) + a) * 2 + 1;
  }

  std::int64_t cut(int a1, int b1, int a2, int b2, std::int64_t key) {
    if (!points_.count(key)) {
      const double u = corner_[idx(a1, b1)];
      const double v = corner_[idx(a2, b2)];
      double t = (u == v) ? 0.5 : u / (u - v);
      if (!(t >= 0.0 && t <= 1.0)) t = 0.5;
      const double x1 = arr_.box_lo + a1 * h_, y1 = arr_.box_lo + b1 * h_;
      const double x2 = arr_.box_lo + a2 * h_, y2 = arr_.box_lo + b2 * h_;
      points_[key] = Point{x1 + t * (x2 - x1), y1 + t * (y2 - y1)};
    }
    return key;
  }

  void add_seg(std::int64_t e1, std::int64_t e2) {
    const int id = static_cast<int>(segs_.size());
    segs_.emplace_back(e1, e2);
    incident_[e1].push_back(id);
    incident_[e2].push_back(id);
  }

  void collect_segments() {
    for (int b = 0; b < res_; ++b)
      for (int a = 0; a < res_; ++a) {
        const int mask = (inside(a, b) ? 1 : 0) | (inside(a + 1, b) ? 2 : 0) |
                         (inside(a + 1, b + 1) ? 4 : 0) |
                         (inside(a, b + 1) ? 8 : 0);
        if (mask == 0 || mask == 15) continue;
        const auto B = [&] { return cut(a, b, a + 1, b, hkey(a, b)); };
        const auto T = [&] { return cut(a, b + 1, a + 1, b + 1, hkey(a, b + 1)); };
        const auto L = [&] { return cut(a, b, a, b + 1, vkey(a, b)); };
        const auto R = [&] { return cut(a + 1, b, a + 1, b + 1, vkey(a + 1, b)); };
        switch (mask) {
          case 1: add_seg(L(), B()); break;
          case 2: add_seg(B(), R()); break;
          case 3: add_seg(L(), R()); break;
          case 4: add_seg(R(), T()); break;
          case 5:
            if (center_inside(a, b)) {
              add_seg(B(), R());
              add_seg(T(), L());
            } else {
              add_seg(L(), B());
              add_seg(R(), T());
            }
            break;
          case 6: add_seg(B(), T()); break;
          case 7: add_seg(L(), T()); break;
          case 8: add_seg(T(), L()); break;
          case 9: add_seg(B(), T()); break;
          case 10:
            if (center_inside(a, b)) {
              add_seg(L(), B());
              add_seg(R(), T());
            } else {
              add_seg(B(), R());
              add_seg(T(), L());
            }
            break;
          case 11: add_seg(R(), T()); break;
          case 12: add_seg(L(), R()); break;
          case 13: add_seg(B(), R()); break;
          case 14: add_seg(L(), B()); break;
          default: break;
        }
      }
  }

  bool center_inside(int a, int b) const {
    return arr_.curve.eval_double(arr_.box_lo + (a + 0.5) * h_,
                                  arr_.box_lo + (b + 0.5) * h_) > 0.0;
  }

  void extend(std::deque<std::int64_t>& path, std::vector<char>& used,
              bool forward) {
    for (;;) {
      if (path.size() > 2 && path.front() == path.back()) return;  // loop
      const std::int64_t tip = forward ? path.back() : path.front();
      int next = -1;
      auto it = incident_.find(tip);
      if (it != incident_.end())
        for (int s : it->second)
          if (!used[s]) {
            next = s;
            break;
          }
      if (next < 0) return;
      used[next] = 1;
      const auto& seg = segs_[next];
      const std::int64_t other = (seg.first == tip) ? seg.second : seg.first;
      if (forward)
        path.push_back(other);
      else
        path.push_front(other);
    }
  }

  const FiberArrangement& arr_;
  int res_;
  double h_;
  std::vector<double> corner_;
  std::vector<std::pair<std::int64_t, std::int64_t>> segs_;
  std::unordered_map<std::int64_t, std::vector<int>> incident_;
  std::unordered_map<std::int64_t, Point> points_;
};

}  // namespace

std::string render_arrangement_svg(const FiberArrangement& arr,
                                   int curve_resolution) {
  if (curve_resolution < 8)
    throw std::invalid_argument(
        "render_arrangement_svg: curve resolution must be >= 8");
  const Mapper map{arr.box_lo, arr.box_hi};
  std::string svg;
  svg +=
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      "viewBox=\"0 0 800 800\" width=\"800\" height=\"800\">\n";
  svg += "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";

  for (double p : arr.net) {
    appendf(svg,
            "<line x1=\"%.2f\" y1=\"0.00\" x2=\"%.2f\" y2=\"800.00\" "
            "stroke=\"#888\" stroke-width=\"1\"/>\n",
            map.px(p), map.px(p));
    appendf(svg,
            "<line x1=\"0.00\" y1=\"%.2f\" x2=\"800.00\" y2=\"%.2f\" "
            "stroke=\"#888\" stroke-width=\"1\"/>\n",
            map.py(p), map.py(p));
  }

  svg +=
      "<line x1=\"0.00\" y1=\"800.00\" x2=\"800.00\" y2=\"0.00\" "
      "stroke=\"#444\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";

  CurveTracer tracer(arr, curve_resolution);
  for (const auto& [edges, closed] : tracer.trace()) {
    std::string d;
    for (size_t i = 0; i < edges.size(); ++i) {
      const Point w = tracer.edge_point(edges[i]);
      appendf(d, "%s%.3f %.3f", i == 0 ? "M" : " L", map.px(w.x),
              map.py(w.y));
    }
    if (closed) d += " Z";
    svg += "<path d=\"" + d +
           "\" stroke=\"#c00\" stroke-width=\"2\" fill=\"none\"/>\n";
  }

  svg +=
      "<text x=\"770\" y=\"792\" fill=\"#333\" font-family=\"sans-serif\" "
      "font-size=\"16\">b1</text>\n";
  svg +=
      "<text x=\"8\" y=\"20\" fill=\"#333\" font-family=\"sans-serif\" "
      "font-size=\"16\">b2</text>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace morsekit
