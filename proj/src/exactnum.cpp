#include "latgeom/exactnum.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

namespace latgeom {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MixedRadicand: return "MixedRadicand";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::IrrationalInput: return "IrrationalInput";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::RadiusTooSmall: return "RadiusTooSmall";
    case ErrorCode::NotTriangleOrQuad: return "NotTriangleOrQuad";
    case ErrorCode::SingularParams: return "SingularParams";
    case ErrorCode::DegenerateFrame: return "DegenerateFrame";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::EpsTooSmall: return "EpsTooSmall";
    case ErrorCode::NotTilingParallelogram: return "NotTilingParallelogram";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::WidthOutOfRange: return "WidthOutOfRange";
    case ErrorCode::RatioOutOfRange: return "RatioOutOfRange";
    case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::CertificationFailed: return "CertificationFailed";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

namespace {

bool parse_integer(std::string_view text, Integer& out) {
  std::string s(text);
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  if (s[0] == '+') s.erase(0, 1);
  return out.set_str(s, 10) == 0;
}

std::string trim(std::string_view text) {
  std::size_t lo = 0, hi = text.size();
  while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
  while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) --hi;
  return std::string(text.substr(lo, hi - lo));
}

// Splits n = k^2 * m with m squarefree. Trial division handles every radicand
// below 10^12 exactly; a leftover cofactor is only checked for being a square.
void split_square(Integer n, Integer& k, Integer& m) {
  k = 1;
  m = 1;
  for (unsigned long p = 2; p <= 1000000UL; ++p) {
    Integer pp = Integer(p) * p;
    if (pp > n) break;
    while (n % pp == 0) {
      n /= pp;
      k *= p;
    }
    if (n % p == 0) {
      n /= p;
      m *= p;
    }
  }
  if (n > 1 && mpz_perfect_square_p(n.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    k *= r;
  } else {
    m *= n;
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s = trim(text);
  auto bad = [&]() { return Error(ErrorCode::InvalidInput, "not a rational: '" + s + "'"); };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer num, den;
    if (!parse_integer(s.substr(0, slash), num) || !parse_integer(s.substr(slash + 1), den)) throw bad();
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + s + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    Integer w, f = 0;
    if (!parse_integer(whole, w)) throw bad();
    if (!frac.empty() && !parse_integer(frac, f)) throw bad();
    if (!frac.empty() && (frac[0] == '-' || frac[0] == '+')) throw bad();
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer magnitude = abs(w) * scale + f;
    Rational r(negative ? Integer(-magnitude) : magnitude, scale);
    r.canonicalize();
    return r;
  }
  Integer num;
  if (!parse_integer(s, num)) throw bad();
  return Rational(num);
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Integer floor_div(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil_div(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Scalar Scalar::quadratic(const Rational& a, const Rational& b, const Integer& radicand) {
  if (radicand < 0) throw Error(ErrorCode::InvalidInput, "negative radicand " + radicand.get_str());
  Scalar out;
  out.a_ = a;
  out.a_.canonicalize();
  if (b == 0 || radicand == 0) return out;
  Integer k, m;
  split_square(radicand, k, m);
  Rational coeff = b * Rational(k);
  if (m == 1) {
    out.a_ += coeff;
    return out;
  }
  if (!m.fits_slong_p()) throw Error(ErrorCode::InvalidInput, "radicand too large: " + m.get_str());
  out.b_ = coeff;
  out.d_ = m.get_si();
  out.normalize();
  return out;
}

Scalar Scalar::sqrt(const Rational& value) {
  if (value < 0) throw Error(ErrorCode::InvalidInput, "square root of negative " + latgeom::to_string(value));
  // sqrt(p/q) = sqrt(p*q)/q
  return quadratic(Rational(0), Rational(1, value.get_den()) , value.get_num() * value.get_den());
}

const Rational& Scalar::rational() const {
  if (d_ != 0) throw Error(ErrorCode::IrrationalInput, "expected a rational, got " + to_string());
  return a_;
}

void Scalar::normalize() {
  if (b_ == 0) d_ = 0;
  if (d_ == 0) b_ = 0;
}

std::int64_t Scalar::common_radicand(const Scalar& rhs) const {
  if (d_ == 0) return rhs.d_;
  if (rhs.d_ == 0 || rhs.d_ == d_) return d_;
  throw Error(ErrorCode::MixedRadicand,
              "cannot combine sqrt(" + std::to_string(d_) + ") with sqrt(" + std::to_string(rhs.d_) + ")");
}

Scalar Scalar::conjugate() const {
  Scalar out = *this;
  out.b_ = -out.b_;
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  d_ = common_radicand(rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  d_ = common_radicand(rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  std::int64_t d = common_radicand(rhs);
  if (d == 0) {
    a_ *= rhs.a_;
    return *this;
  }
  Rational a = a_ * rhs.a_ + b_ * rhs.b_ * Rational(d);
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = a;
  b_ = b;
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  if (rhs.d_ == 0) {
    common_radicand(rhs);
    a_ /= rhs.a_;
    b_ /= rhs.a_;
    return *this;
  }
  // x / y = x * conj(y) / N(y), with N(y) = a^2 - b^2 d nonzero for squarefree d > 1
  Rational norm = rhs.a_ * rhs.a_ - rhs.b_ * rhs.b_ * Rational(rhs.d_);
  *this *= rhs.conjugate();
  a_ /= norm;
  b_ /= norm;
  return *this;
}

int Scalar::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * Rational(d_);
  return lhs > rhs ? sa : sb;
}

double Scalar::to_double() const {
  if (d_ == 0) return a_.get_d();
  mpf_class root(0, 256), a(a_, 256), b(b_, 256);
  mpf_class radicand(static_cast<double>(d_), 256);
  root = ::sqrt(radicand);
  mpf_class value(a + b * root, 256);
  return value.get_d();
}

Integer Scalar::floor() const {
  if (d_ == 0) return floor_div(a_);
  Integer guess(std::floor(to_double()));
  while (*this < Scalar(Rational(guess))) guess -= 1;
  while (!(*this < Scalar(Rational(guess + 1)))) guess += 1;
  return guess;
}

Integer Scalar::ceil() const {
  Integer f = floor();
  return *this == Scalar(Rational(f)) ? f : Integer(f + 1);
}

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
  int c = compare(x, y);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
  if (d_ == 0) return latgeom::to_string(a_);
  std::ostringstream os;
  Rational mag = ::abs(b_);
  std::string coeff;
  if (mag != 1) coeff = mag.get_den() == 1 ? latgeom::to_string(mag) : "(" + latgeom::to_string(mag) + ")";
  std::string radical = coeff + "√" + std::to_string(d_);
  if (a_ == 0) {
    os << (b_ < 0 ? "-" : "") << radical;
  } else {
    os << latgeom::to_string(a_) << (b_ < 0 ? " - " : " + ") << radical;
  }
  return os.str();
}

Scalar quad_arith(const Scalar& lhs, const Scalar& rhs, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return lhs + rhs;
    case ArithOp::Sub: return lhs - rhs;
    case ArithOp::Mul: return lhs * rhs;
    case ArithOp::Div: return lhs / rhs;
  }
  throw Error(ErrorCode::InvalidInput, "unknown arithmetic operation");
}

int quad_sign(const Scalar& x) { return x.sign(); }

double to_float(const Scalar& x) { return x.to_double(); }

int compare(const Scalar& x, const Scalar& y) {
  if (x.d() == 0 || y.d() == 0 || x.d() == y.d()) return (x - y).sign();
  // sign(X + Y) with X = (x.a - y.a) + x.b*sqrt(dx) and Y = -y.b*sqrt(dy)
  Scalar big_x = Scalar::quadratic(x.a() - y.a(), x.b(), x.d());
  int sx = big_x.sign();
  int sy = -sgn(y.b());
  if (sx == 0) return sy;
  if (sy == 0 || sx == sy) return sx;
  Scalar diff = big_x * big_x - Scalar(Rational(y.b() * y.b() * Rational(y.d())));
  return diff.sign() > 0 ? sx : sy;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

}  // namespace latgeom
