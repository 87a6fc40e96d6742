#include "rrkit/plane_curve.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rrkit/error.hpp"

namespace rrkit {

namespace {

long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return static_cast<long>(a.first - o.first) * (b.second - o.second) -
         static_cast<long>(a.second - o.second) * (b.first - o.first);
}

}  // namespace

NewtonPolygon newton_polygon(const BPoly& f) {
  if (f.is_zero()) throw DomainError("Newton polygon of the zero polynomial");
  NewtonPolygon out;
  for (const auto& [key, c] : f.terms()) out.support.push_back(key);
  std::sort(out.support.begin(), out.support.end());
  const auto& pts = out.support;
  if (pts.size() == 1) {
    out.hull = pts;
    return out;
  }
  // Monotone chain; popping on cross <= 0 drops collinear vertices.
  std::vector<LatticePoint> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  out.hull = std::move(h);
  return out;
}

LatticeCount lattice_count(const NewtonPolygon& poly) {
  LatticeCount out;
  const auto& h = poly.hull;
  const std::size_t n = h.size();
  if (n < 3) {
    if (n == 2) {
      out.boundary = std::gcd(std::abs(h[1].first - h[0].first), std::abs(h[1].second - h[0].second)) + 1;
    } else {
      out.boundary = static_cast<long>(n);
    }
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = h[i];
    const auto& b = h[(i + 1) % n];
    out.area2 += static_cast<long>(a.first) * b.second - static_cast<long>(b.first) * a.second;
    out.boundary += std::gcd(std::abs(b.first - a.first), std::abs(b.second - a.second));
  }
  int x0 = h[0].first, x1 = x0, y0 = h[0].second, y1 = y0;
  for (const auto& p : h) {
    x0 = std::min(x0, p.first);
    x1 = std::max(x1, p.first);
    y0 = std::min(y0, p.second);
    y1 = std::max(y1, p.second);
  }
  for (int x = x0; x <= x1; ++x) {
    for (int y = y0; y <= y1; ++y) {
      bool inside = true;
      for (std::size_t i = 0; i < n && inside; ++i) {
        inside = cross(h[i], h[(i + 1) % n], {x, y}) > 0;
      }
      if (inside) ++out.interior;
    }
  }
  const long pick = (out.area2 - out.boundary + 2) / 2;
  if (out.area2 <= 0 || pick != out.interior) {
    throw InternalError("lattice enumeration disagrees with Pick's theorem");
  }
  return out;
}

long interior_lattice_count(const NewtonPolygon& poly) { return lattice_count(poly).interior; }

SimpleBranching simple_branching(const BPoly& f, int v_infinity) {
  SimpleBranching out;
  out.sheets = f.degree_w().is_neg_inf() ? 0 : f.degree_w().value();
  if (out.sheets < 2) throw DomainError("simple branching needs deg_w F >= 2");
  if (v_infinity < 0) throw DomainError("V_inf must be nonnegative");
  out.discriminant = discriminant_w(f);
  if (out.discriminant.is_zero() || !is_squarefree(out.discriminant)) {
    throw DomainError("discriminant is not squarefree; branching is not simple");
  }
  out.discriminant_degree = out.discriminant.degree().value();
  out.v_infinity = v_infinity;
  out.v_total = out.discriminant_degree + static_cast<long>(v_infinity);
  if (out.v_total % 2 != 0) throw DomainError("odd ramification total V = " + std::to_string(out.v_total));
  const long g = -static_cast<long>(out.sheets) + 1 + out.v_total / 2;
  if (g < 0) throw DomainError("negative genus; check V_inf");
  out.genus = static_cast<int>(g);
  return out;
}

int genus_simple_branching(const BPoly& f, int v_infinity) { return simple_branching(f, v_infinity).genus; }

}  // namespace rrkit
