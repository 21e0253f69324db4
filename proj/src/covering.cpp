#include "latgeom/covering.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>

#include "latgeom/latwidth.hpp"

namespace latgeom {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

constexpr int kMaxLevel = 40;
constexpr int kScaleBits = kMaxLevel + 1;

Integer to_integer(i128 v) {
  bool neg = v < 0;
  u128 mag = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  Integer hi(static_cast<unsigned long>(mag >> 64));
  Integer lo(static_cast<unsigned long>(mag & 0xFFFFFFFFFFFFFFFFULL));
  Integer out = (hi << 64) + lo;
  return neg ? Integer(-out) : out;
}

i128 to_i128(const Integer& v) {
  Integer mag = abs(v);
  Integer hi = mag >> 64;
  Integer lo = mag - (hi << 64);
  i128 out = (static_cast<i128>(hi.get_ui()) << 64) + static_cast<i128>(lo.get_ui());
  return v < 0 ? -out : out;
}

std::int64_t to_int64(const Integer& v) {
  if (!v.fits_slong_p()) throw Error(ErrorCode::InvalidInput, "coordinate does not fit in 64 bits");
  return v.get_si();
}

void require_alpha(const Scalar& alpha) {
  if (alpha.sign() < 0 || !(alpha < Scalar(1)))
    throw Error(ErrorCode::AlphaOutOfRange, "alpha " + alpha.to_string() + " not in [0, 1)");
}

struct Cell {
  i128 upper;
  int level;
  std::int64_t i;
  std::int64_t j;

  bool operator<(const Cell& other) const { return upper < other.upper; }
};

// Exact evaluation of D * 2^S * min_z ||c - z||_K at grid points c = (cx, cy) / 2^S.
class ScaledDistance {
 public:
  ScaledDistance(std::vector<std::array<std::int64_t, 2>> normals, std::int64_t radius)
      : normals_(std::move(normals)), radius_(radius) {}

  i128 operator()(i128 cx, i128 cy) const {
    const i128 unit = static_cast<i128>(1) << kScaleBits;
    i128 best = std::numeric_limits<i128>::max();
    for (std::int64_t zx = -radius_; zx <= 1 + radius_; ++zx) {
      i128 dx = cx - zx * unit;
      for (std::int64_t zy = -radius_; zy <= 1 + radius_; ++zy) {
        i128 dy = cy - zy * unit;
        i128 norm = std::numeric_limits<i128>::min();
        for (const auto& v : normals_) {
          i128 value = v[0] * dx + v[1] * dy;
          if (value > norm) {
            norm = value;
            if (norm >= best) break;
          }
        }
        best = std::min(best, norm);
      }
    }
    return best;
  }

 private:
  std::vector<std::array<std::int64_t, 2>> normals_;
  std::int64_t radius_;
};

}  // namespace

Scalar mu1(const Polygon& k) { return Scalar(1) / lattice_width(k).w; }

Scalar minkowski_norm(const Polygon& k, const Point& x) {
  if (!is_origin_symmetric(k)) throw Error(ErrorCode::NotSymmetric, "gauge needs an origin-symmetric body");
  return support(polar(k), x);
}

Polygon diamond(const Scalar& alpha) {
  require_alpha(alpha);
  return Polygon{Point{1, alpha}, Point{-1, -alpha}, Point{0, 1}, Point{0, -1}};
}

Scalar mu2_diamond(const Scalar& alpha) {
  require_alpha(alpha);
  return max(Scalar(1) + alpha, Scalar(2) - alpha) / Scalar(2);
}

Point diamond_deep_point(const Scalar& alpha) {
  require_alpha(alpha);
  const Scalar half(Rational(1, 2));
  // (x1, x2) -> (x1, x1 - x2) swaps K_alpha and K_{1 - alpha}.
  if (!(half < alpha)) return {half, half};
  return {half, Scalar(0)};
}

Mu2Interval mu2_approx(const Polygon& k, const Rational& eps, std::size_t max_cells) {
  if (!is_origin_symmetric(k)) throw Error(ErrorCode::NotSymmetric, "second covering minimum needs an origin-symmetric body");
  for (const Point& v : k.vertices())
    if (!v.x.is_rational() || !v.y.is_rational())
      throw Error(ErrorCode::IrrationalInput, "certified covering search needs rational vertices");
  if (eps <= 0) throw Error(ErrorCode::EpsTooSmall, "tolerance must be positive");

  Polygon dual = polar(k);
  Integer denom = 1;
  for (const Point& v : dual.vertices()) {
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), v.x.rational().get_den_mpz_t());
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), v.y.rational().get_den_mpz_t());
  }
  std::vector<std::array<std::int64_t, 2>> normals;
  std::int64_t lipschitz = 0;
  for (const Point& v : dual.vertices()) {
    Rational sx = v.x.rational() * denom, sy = v.y.rational() * denom;
    std::int64_t nx = to_int64(sx.get_num()), ny = to_int64(sy.get_num());
    normals.push_back({nx, ny});
    lipschitz = std::max(lipschitz, std::abs(nx) + std::abs(ny));
  }
  if (lipschitz > (std::int64_t{1} << 40)) throw Error(ErrorCode::InvalidInput, "dual vertices too large for the scaled search");

  Rational rho = 0;
  for (const Point& v : k.vertices()) rho = std::max({rho, Rational(abs(v.x.rational())), Rational(abs(v.y.rational()))});
  Rational reach = rho * lipschitz / (2 * Rational(denom));
  std::int64_t radius = to_int64(ceil_div(reach));

  const i128 unit = static_cast<i128>(1) << kScaleBits;
  Integer threshold_big = floor_div(eps * Rational(denom) * Rational(to_integer(unit)));
  i128 threshold = std::numeric_limits<i128>::max() / 4;
  if (threshold_big < to_integer(threshold)) threshold = to_i128(threshold_big);

  ScaledDistance distance(std::move(normals), radius);
  auto centre = [&](int level, std::int64_t idx) {
    return (2 * static_cast<i128>(idx) + 1) * (static_cast<i128>(1) << (kScaleBits - level - 1));
  };
  auto slack = [&](int level) { return static_cast<i128>(lipschitz) * (static_cast<i128>(1) << (kScaleBits - level - 1)); };

  std::priority_queue<Cell> open;
  i128 best = distance(centre(0, 0), centre(0, 0));
  i128 best_x = centre(0, 0), best_y = centre(0, 0);
  open.push({best + slack(0), 0, 0, 0});
  std::size_t cells = 1;

  i128 upper = best;
  while (!open.empty()) {
    Cell top = open.top();
    if (top.upper - best <= threshold) {
      upper = std::max(top.upper, best);
      break;
    }
    open.pop();
    if (top.level + 1 >= kMaxLevel) throw Error(ErrorCode::EpsTooSmall, "refinement depth exhausted");
    if (cells + 4 > max_cells) throw Error(ErrorCode::EpsTooSmall, "cell budget exhausted");
    for (int di = 0; di < 2; ++di) {
      for (int dj = 0; dj < 2; ++dj) {
        Cell child{0, top.level + 1, 2 * top.i + di, 2 * top.j + dj};
        i128 cx = centre(child.level, child.i), cy = centre(child.level, child.j);
        i128 value = distance(cx, cy);
        ++cells;
        if (value > best) {
          best = value;
          best_x = cx;
          best_y = cy;
        }
        child.upper = value + slack(child.level);
        if (child.upper > best) open.push(child);
      }
    }
    upper = best;
  }

  Rational scale = Rational(denom) * Rational(to_integer(unit));
  Mu2Interval out;
  out.lo = Rational(to_integer(best)) / scale;
  out.hi = Rational(to_integer(upper)) / scale;
  out.lo.canonicalize();
  out.hi.canonicalize();
  Rational wx = Rational(to_integer(best_x)) / Rational(to_integer(unit));
  Rational wy = Rational(to_integer(best_y)) / Rational(to_integer(unit));
  wx.canonicalize();
  wy.canonicalize();
  out.witness = Point{wx, wy};
  out.cells = cells;
  return out;
}

bool tiles_by_integer_translates(const Polygon& p) {
  if (!(area(p) == Scalar(1))) return false;
  Scalar xmin = p.vertex(0).x, xmax = xmin, ymin = p.vertex(0).y, ymax = ymin;
  for (const Point& v : p.vertices()) {
    xmin = min(xmin, v.x);
    xmax = max(xmax, v.x);
    ymin = min(ymin, v.y);
    ymax = max(ymax, v.y);
  }
  std::int64_t rx = to_int64((xmax - xmin).ceil()), ry = to_int64((ymax - ymin).ceil());

  std::vector<std::pair<Point, Scalar>> axes;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Point e = p.edge(i);
    Point n{e.y, -e.x};
    axes.emplace_back(n, support(p, n) + support(p, -n));
  }
  for (std::int64_t zx = -rx; zx <= rx; ++zx) {
    for (std::int64_t zy = -ry; zy <= ry; ++zy) {
      if (zx == 0 && zy == 0) continue;
      Point z = LatticePoint{zx, zy}.to_point();
      bool separated = std::any_of(axes.begin(), axes.end(),
                                   [&](const auto& axis) { return !(dot(axis.first, z).abs() < axis.second); });
      if (!separated) return false;
    }
  }
  return true;
}

Polygon canonical_tiling_parallelogram(const Scalar& alpha) {
  const Scalar half(Rational(1, 2));
  Point a{half * (-alpha - Scalar(1)), half};
  Point b{half * (Scalar(1) - alpha), half};
  return Polygon{a, b, -a, -b};
}

ParallelogramForm parallelogram_normal_form(const Polygon& p) {
  if (p.size() != 4 || !is_origin_symmetric(p) || !tiles_by_integer_translates(p))
    throw Error(ErrorCode::NotTilingParallelogram, "expected an origin-symmetric parallelogram tiling by Z^2");

  std::array<Point, 2> edges{p.edge(0), p.edge(1)};
  std::optional<ParallelogramForm> chosen;
  for (std::size_t first = 0; first < 2; ++first) {
    for (int s1 : {1, -1}) {
      Point f1 = Scalar(s1) * edges[first];
      if (!is_lattice_point(f1)) continue;
      std::int64_t a = to_int64(f1.x.rational().get_num()), b = to_int64(f1.y.rational().get_num());
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), Integer(a).get_mpz_t(), Integer(b).get_mpz_t());
      if (g != 1) continue;
      // det(f1, n) = a * s + b * t = 1 for n = (-t, s).
      Point n = LatticePoint{-to_int64(t), to_int64(s)}.to_point();
      for (int s2 : {-1, 1}) {
        Point f2 = Scalar(s2) * edges[1 - first];
        Scalar gamma = cross(f1, f2);
        if (!(gamma.abs() == Scalar(1))) continue;
        Scalar beta = cross(f2, n);
        Scalar shift = Scalar(Rational(beta.floor()));
        Scalar alpha = beta - shift;
        Point m2 = -shift * f1 - gamma * n;
        IntMatrix2 inverse{a, to_int64(m2.x.rational().get_num()), b, to_int64(m2.y.rational().get_num())};
        IntMatrix2 m = inverse.inverse();
        if (!(unimodular_apply(p, m) == canonical_tiling_parallelogram(alpha))) continue;
        bool better = !chosen || alpha < chosen->alpha || (alpha == chosen->alpha && m.det() == 1 && chosen->m.det() != 1);
        if (better) chosen = ParallelogramForm{m, alpha};
      }
    }
  }
  if (!chosen) throw Error(ErrorCode::NotTilingParallelogram, "no unimodular normal form found");
  return *chosen;
}

}  // namespace latgeom
