#include "latgeom/latwidth.hpp"

#include <algorithm>
#include <numeric>

namespace latgeom {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

// Rational polygon scaled to integer coordinates: K = vertices / denominator.
struct IntegerPolygon {
  std::vector<std::array<std::int64_t, 2>> vertices;
  Integer denominator;
};

bool integer_form(const Polygon& k, IntegerPolygon& out) {
  Integer lcm = 1;
  for (const Point& v : k.vertices()) {
    if (!v.x.is_rational() || !v.y.is_rational()) return false;
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.x.a().get_den_mpz_t());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.y.a().get_den_mpz_t());
  }
  const Integer limit = Integer(1) << 62;
  out.vertices.clear();
  for (const Point& v : k.vertices()) {
    Rational x = v.x.a() * Rational(lcm), y = v.y.a() * Rational(lcm);
    Integer xi = x.get_num(), yi = y.get_num();
    if (abs(xi) >= limit || abs(yi) >= limit) return false;
    out.vertices.push_back({xi.get_si(), yi.get_si()});
  }
  out.denominator = lcm;
  return true;
}

i128 scaled_width(const IntegerPolygon& k, std::int64_t u1, std::int64_t u2) {
  i128 hi = 0, lo = 0;
  bool first = true;
  for (const auto& v : k.vertices) {
    i128 s = static_cast<i128>(v[0]) * u1 + static_cast<i128>(v[1]) * u2;
    if (first) {
      hi = lo = s;
      first = false;
    } else {
      hi = std::max(hi, s);
      lo = std::min(lo, s);
    }
  }
  return hi - lo;
}

Integer to_integer(i128 v) {
  bool negative = v < 0;
  u128 m = negative ? -static_cast<u128>(v) : static_cast<u128>(v);
  Integer out = static_cast<unsigned long>(m >> 64);
  out <<= 64;
  out += static_cast<unsigned long>(m & 0xFFFFFFFFFFFFFFFFULL);
  return negative ? Integer(-out) : out;
}

}  // namespace

std::vector<Direction> directions_within(const Polygon& k, const Scalar& bound) {
  Polygon region = scale(polar(difference_body(k)), bound);
  std::vector<Direction> out;
  for (const LatticePoint& p : lattice_points(region, LatticeMode::All))
    if (p.x != 0 || p.y != 0) out.emplace_back(p.x, p.y);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LatticeWidth lattice_width(const Polygon& k) {
  Scalar w0 = min(width_function(k, Direction(1, 0)), width_function(k, Direction(0, 1)));
  LatticeWidth result{w0, {}};
  for (const Direction& u : directions_within(k, w0)) {
    Scalar w = width_function(k, u);
    int c = compare(w, result.w);
    if (c < 0) {
      result.w = std::move(w);
      result.minimizers.clear();
    }
    if (c <= 0) result.minimizers.push_back(u);
  }
  return result;
}

std::int64_t certified_search_radius(const Polygon& k) {
  Scalar w0 = min(width_function(k, Direction(1, 0)), width_function(k, Direction(0, 1)));
  Point c = vertex_centroid(k);
  // Largest s with c + [-s, s]^2 inside K: min over edges of (n.(v - c)) / |n|_1.
  bool have = false;
  Scalar s;
  for (std::size_t i = 0; i < k.size(); ++i) {
    Point e = k.edge(i);
    Point normal{e.y, -e.x};
    Scalar slack = dot(normal, k.vertex(i) - c) / (normal.x.abs() + normal.y.abs());
    if (!have || slack < s) s = slack;
    have = true;
  }
  // A square of half-side s has w(square, u) = 2 s |u|_1 >= 2 s |u|_inf.
  Integer radius = (w0 / (Scalar(2) * s)).ceil();
  if (radius < 1) radius = 1;
  if (!radius.fits_slong_p()) throw Error(ErrorCode::InvalidInput, "polygon too thin for exhaustive search");
  return radius.get_si();
}

Scalar lattice_width_bruteforce(const Polygon& k, std::int64_t radius) {
  std::int64_t needed = certified_search_radius(k);
  if (radius < needed)
    throw Error(ErrorCode::RadiusTooSmall,
                "radius " + std::to_string(radius) + " below certified " + std::to_string(needed));

  IntegerPolygon scaled;
  if (integer_form(k, scaled)) {
    bool have = false;
    i128 best = 0;
    for (std::int64_t u1 = 0; u1 <= radius; ++u1) {
      for (std::int64_t u2 = -radius; u2 <= radius; ++u2) {
        if (u1 == 0 && u2 <= 0) continue;
        if (std::gcd(u1, u2) != 1) continue;
        i128 w = scaled_width(scaled, u1, u2);
        if (!have || w < best) best = w;
        have = true;
      }
    }
    return Scalar(Rational(to_integer(best), scaled.denominator));
  }

  bool have = false;
  Scalar best;
  for (std::int64_t u1 = 0; u1 <= radius; ++u1) {
    for (std::int64_t u2 = -radius; u2 <= radius; ++u2) {
      if (u1 == 0 && u2 <= 0) continue;
      if (std::gcd(u1, u2) != 1) continue;
      Scalar w = width_function(k, Direction(u1, u2));
      if (!have || w < best) best = std::move(w);
      have = true;
    }
  }
  return best;
}

}  // namespace latgeom
