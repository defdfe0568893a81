#pragma once

// Planar primitives: points, segments, arc-length parametrized polylines,
// and segment-vs-wall visibility tests.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace btt {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2& a, const Point2& b) {
        return a.x == b.x && a.y == b.y;
    }
};

struct Segment {
    Point2 a;
    Point2 b;
};

inline double dist(const Point2& a, const Point2& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

// Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right turn, 0 collinear.
inline int orientation(const Point2& a, const Point2& b, const Point2& c) {
    const double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    if (v > 0.0) return 1;
    if (v < 0.0) return -1;
    return 0;
}

// Assumes a, b, c collinear; true when c lies within the bounding box of ab.
inline bool on_segment(const Point2& a, const Point2& b, const Point2& c) {
    return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
}

// Closed-segment intersection: shared endpoints and collinear overlap count.
inline bool segments_intersect(const Point2& p1, const Point2& p2,
                               const Point2& q1, const Point2& q2) {
    const int o1 = orientation(p1, p2, q1);
    const int o2 = orientation(p1, p2, q2);
    const int o3 = orientation(q1, q2, p1);
    const int o4 = orientation(q1, q2, p2);

    if (o1 != o2 && o3 != o4) return true;

    if (o1 == 0 && on_segment(p1, p2, q1)) return true;
    if (o2 == 0 && on_segment(p1, p2, q2)) return true;
    if (o3 == 0 && on_segment(q1, q2, p1)) return true;
    if (o4 == 0 && on_segment(q1, q2, p2)) return true;
    return false;
}

// True when the open line of sight from p to q crosses no wall. A degenerate
// sight line (p == q) is blocked only if the point itself sits on a wall.
inline bool visible(const Point2& p, const Point2& q, const std::vector<Segment>& walls) {
    for (const Segment& w : walls) {
        if (segments_intersect(p, q, w.a, w.b)) return false;
    }
    return true;
}

// Piecewise-linear curve evaluated by normalized arc length t in [0,1].
class Polyline {
  public:
    Polyline() = default;

    explicit Polyline(std::vector<Point2> vertices) : verts_(std::move(vertices)) {
        if (verts_.size() < 2) {
            throw std::invalid_argument("polyline needs at least 2 vertices");
        }
        cum_.resize(verts_.size());
        cum_[0] = 0.0;
        for (std::size_t i = 1; i < verts_.size(); ++i) {
            cum_[i] = cum_[i - 1] + dist(verts_[i - 1], verts_[i]);
        }
    }

    const std::vector<Point2>& vertices() const { return verts_; }
    double length() const { return cum_.empty() ? 0.0 : cum_.back(); }

    // Point at fraction t of total arc length; t must lie in [0,1].
    Point2 eval(double t) const {
        if (verts_.empty()) throw std::logic_error("eval on empty polyline");
        if (!(t >= 0.0 && t <= 1.0)) {
            throw std::invalid_argument("polyline parameter outside [0,1]");
        }
        const double L = length();
        if (L == 0.0) return verts_.front();
        const double s = t * L;
        // First knot with cum_ > s; segment index is one before it.
        auto it = std::upper_bound(cum_.begin(), cum_.end(), s);
        std::size_t i = (it == cum_.end()) ? cum_.size() - 1 : std::size_t(it - cum_.begin());
        if (i == 0) i = 1;
        const double seg = cum_[i] - cum_[i - 1];
        const double u = (seg > 0.0) ? (s - cum_[i - 1]) / seg : 0.0;
        const Point2& a = verts_[i - 1];
        const Point2& b = verts_[i];
        return {a.x + u * (b.x - a.x), a.y + u * (b.y - a.y)};
    }

    friend bool operator==(const Polyline& a, const Polyline& b) {
        return a.verts_ == b.verts_;
    }

  private:
    std::vector<Point2> verts_;
    std::vector<double> cum_;
};

inline Point2 polyline_eval(const Polyline& curve, double t) { return curve.eval(t); }

}  // namespace btt
