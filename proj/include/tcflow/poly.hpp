#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "tcflow/errors.hpp"
#include "tcflow/geometry.hpp"
#include "tcflow/rational.hpp"

namespace tcflow {

/// Monomial x^dx * y^dy.
struct Mono {
  int dx = 0;
  int dy = 0;
  int total() const { return dx + dy; }
  friend bool operator==(Mono a, Mono b) { return a.dx == b.dx && a.dy == b.dy; }
};

/// Graded-lex order with x > y: compare total degree first, then x-degree.
struct GradedLex {
  bool operator()(Mono a, Mono b) const {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.dx < b.dx;
  }
};

/// Dense double-precision form of a Poly2 for fast repeated evaluation.
/// Evaluates by nested Horner: outer in x, inner in y.
class CompiledPoly {
 public:
  CompiledPoly() : nx_(0), ny_(0), c_(1, 0.0) {}
  CompiledPoly(int nx, int ny, std::vector<double> c) : nx_(nx), ny_(ny), c_(std::move(c)) {}

  double operator()(double x, double y) const {
    double acc = 0.0;
    for (int i = nx_; i >= 0; --i) {
      const double* row = &c_[static_cast<std::size_t>(i) * (ny_ + 1)];
      double ry = 0.0;
      for (int j = ny_; j >= 0; --j) ry = ry * y + row[j];
      acc = acc * x + ry;
    }
    return acc;
  }
  double operator()(Vec2 z) const { return (*this)(z.x, z.y); }

 private:
  int nx_, ny_;
  std::vector<double> c_;  // c_[i*(ny+1)+j] = coefficient of x^i y^j
};

/// Exact bivariate polynomial over the rationals. Immutable in spirit:
/// all operations return new values, stored coefficients are never zero.
class Poly2 {
 public:
  using TermMap = std::map<Mono, Rational, GradedLex>;

  Poly2() = default;
  explicit Poly2(const Rational& c) {
    if (!c.is_zero()) terms_[{0, 0}] = c;
  }

  static Poly2 constant(const Rational& c) { return Poly2(c); }
  static Poly2 monomial(int dx, int dy, const Rational& c = Rational(1)) {
    Poly2 p;
    if (!c.is_zero()) p.terms_[{dx, dy}] = c;
    return p;
  }
  static Poly2 var_x() { return monomial(1, 0); }
  static Poly2 var_y() { return monomial(0, 1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{0, 0}); }

  Rational coeff(int dx, int dy) const {
    auto it = terms_.find({dx, dy});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.total(); }
  int degree_x() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.dx);
    return d;
  }
  int degree_y() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.dy);
    return d;
  }

  /// Leading term under graded-lex.
  std::pair<Mono, Rational> leading() const { return *terms_.rbegin(); }

  friend Poly2 operator+(const Poly2& a, const Poly2& b) {
    Poly2 r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }
  friend Poly2 operator-(const Poly2& a, const Poly2& b) {
    Poly2 r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }
  Poly2 operator-() const {
    Poly2 r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }
  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term({ma.dx + mb.dx, ma.dy + mb.dy}, ca * cb);
    return r;
  }
  friend Poly2 operator*(const Rational& s, const Poly2& a) {
    Poly2 r;
    if (s.is_zero()) return r;
    for (const auto& [m, c] : a.terms_) r.terms_[m] = s * c;
    return r;
  }
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

  Poly2 pow(unsigned e) const {
    Poly2 r = constant(Rational(1));
    Poly2 b = *this;
    while (e != 0) {
      if (e & 1u) r = r * b;
      b = b * b;
      e >>= 1u;
    }
    return r;
  }

  /// Exact evaluation at a rational point.
  Rational eval_exact(const Rational& x, const Rational& y) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_)
      acc += c * tcflow::pow(x, static_cast<unsigned>(m.dx)) * tcflow::pow(y, static_cast<unsigned>(m.dy));
    return acc;
  }

  CompiledPoly compile() const {
    int nx = std::max(0, degree_x());
    int ny = std::max(0, degree_y());
    std::vector<double> c(static_cast<std::size_t>(nx + 1) * (ny + 1), 0.0);
    for (const auto& [m, v] : terms_) c[static_cast<std::size_t>(m.dx) * (ny + 1) + m.dy] = v.to_double();
    return CompiledPoly(nx, ny, std::move(c));
  }

  std::string str() const;

 private:
  void add_term(Mono m, const Rational& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_[m] = c;
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  TermMap terms_;
};

/// Horner-style evaluation; error ~ machine epsilon times term count.
inline double eval_poly(const Poly2& p, Vec2 z) { return p.compile()(z); }

/// Exact formal partial derivative.
inline Poly2 diff_poly(const Poly2& p, char var) {
  Poly2 r;
  for (const auto& [m, c] : p.terms()) {
    if (var == 'x' && m.dx > 0) r = r + Poly2::monomial(m.dx - 1, m.dy, Rational(m.dx) * c);
    if (var == 'y' && m.dy > 0) r = r + Poly2::monomial(m.dx, m.dy - 1, Rational(m.dy) * c);
  }
  return r;
}

/// Exact quotient p/q when the division has zero remainder, nullopt otherwise.
inline std::optional<Poly2> try_divide_exact(const Poly2& p, const Poly2& q) {
  if (q.is_zero()) return std::nullopt;
  Poly2 rem = p;
  Poly2 quot;
  const auto [qm, qc] = q.leading();
  while (!rem.is_zero()) {
    const auto [rm, rc] = rem.leading();
    if (rm.dx < qm.dx || rm.dy < qm.dy) return std::nullopt;
    Poly2 t = Poly2::monomial(rm.dx - qm.dx, rm.dy - qm.dy, rc / qc);
    quot = quot + t;
    rem = rem - t * q;
  }
  return quot;
}

// ---------------------------------------------------------------------------
// GCD via subresultant pseudo-remainder sequences. We clear denominators and
// work over Z[x][y]; the coefficient ring of the outer PRS is Z[x], whose own
// gcd comes from the same algorithm one level down over Z.
// ---------------------------------------------------------------------------
namespace detail {

using ZP = std::vector<mpz_class>;  // univariate over Z, index = degree

inline void zp_strip(ZP& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
inline bool zp_is_zero(const ZP& p) { return p.empty(); }
inline int zp_deg(const ZP& p) { return static_cast<int>(p.size()) - 1; }
inline ZP zp_const(const mpz_class& c) { return c == 0 ? ZP{} : ZP{c}; }

inline ZP zp_add(const ZP& a, const ZP& b) {
  ZP r(std::max(a.size(), b.size()), mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  zp_strip(r);
  return r;
}
inline ZP zp_neg(const ZP& a) {
  ZP r = a;
  for (auto& c : r) c = -c;
  return r;
}
inline ZP zp_sub(const ZP& a, const ZP& b) { return zp_add(a, zp_neg(b)); }
inline ZP zp_mul(const ZP& a, const ZP& b) {
  if (zp_is_zero(a) || zp_is_zero(b)) return {};
  ZP r(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  zp_strip(r);
  return r;
}
inline ZP zp_pow(ZP b, unsigned e) {
  ZP r = zp_const(1);
  while (e != 0) {
    if (e & 1u) r = zp_mul(r, b);
    b = zp_mul(b, b);
    e >>= 1u;
  }
  return r;
}

/// Exact division a/b in Z[x]; throws DivisionNotExact on failure.
inline ZP zp_divexact(const ZP& a, const ZP& b) {
  if (zp_is_zero(b)) throw DivisionNotExact("univariate division by zero");
  if (zp_is_zero(a)) return {};
  ZP rem = a;
  ZP quot(a.size(), mpz_class(0));
  const mpz_class& lb = b.back();
  while (!zp_is_zero(rem) && zp_deg(rem) >= zp_deg(b)) {
    mpz_class q = rem.back() / lb;
    if (q * lb != rem.back()) throw DivisionNotExact("leading coefficient does not divide");
    int shift = zp_deg(rem) - zp_deg(b);
    quot[shift] = q;
    for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= q * b[i];
    zp_strip(rem);
  }
  if (!zp_is_zero(rem)) throw DivisionNotExact("univariate division left a remainder");
  zp_strip(quot);
  return quot;
}

inline mpz_class zp_int_content(const ZP& p) {
  mpz_class g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;  // 0 for the zero polynomial, positive otherwise
}
inline ZP zp_div_int(const ZP& p, const mpz_class& d) {
  ZP r = p;
  for (auto& c : r) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    c = q;
  }
  return r;
}

/// Pseudo-remainder with the lc(v)^(delta+1) normalization so that the
/// subresultant divisions below stay exact.
inline ZP zp_prem(const ZP& u, const ZP& v) {
  ZP r = u;
  const int dv = zp_deg(v);
  int e = zp_deg(u) - dv + 1;
  while (!zp_is_zero(r) && zp_deg(r) >= dv) {
    ZP t(static_cast<std::size_t>(zp_deg(r) - dv) + 1, mpz_class(0));
    t.back() = r.back();
    r = zp_sub(zp_mul(zp_const(v.back()), r), zp_mul(t, v));
    --e;
  }
  for (; e > 0; --e) r = zp_mul(zp_const(v.back()), r);
  return r;
}

/// Primitive gcd of primitive u, v in Z[x], both of degree >= 1.
inline ZP zp_subres_gcd(ZP u, ZP v) {
  if (zp_deg(u) < zp_deg(v)) std::swap(u, v);
  mpz_class g = 1, h = 1;
  while (true) {
    int delta = zp_deg(u) - zp_deg(v);
    ZP r = zp_prem(u, v);
    if (zp_is_zero(r)) break;
    if (zp_deg(r) == 0) return zp_const(1);
    u = v;
    mpz_class hp;
    mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    v = zp_div_int(r, g * hp);
    g = u.back();
    if (delta > 0) {
      mpz_class gp;
      mpz_pow_ui(gp.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
      if (delta == 1) {
        h = gp;
      } else {
        mpz_class hd;
        mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
        mpz_divexact(h.get_mpz_t(), gp.get_mpz_t(), hd.get_mpz_t());
      }
    }
  }
  ZP res = zp_div_int(v, zp_int_content(v));
  if (res.back() < 0) res = zp_neg(res);
  return res;
}

/// gcd in Z[x] (full: content times primitive part), sign-normalized positive.
inline ZP zp_gcd(const ZP& a, const ZP& b) {
  if (zp_is_zero(a) && zp_is_zero(b)) return {};
  if (zp_is_zero(a) || zp_is_zero(b)) {
    ZP r = zp_is_zero(a) ? b : a;
    if (r.back() < 0) r = zp_neg(r);
    return r;
  }
  mpz_class ca = zp_int_content(a), cb = zp_int_content(b), d;
  mpz_gcd(d.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  ZP pa = zp_div_int(a, ca), pb = zp_div_int(b, cb);
  ZP pg;
  if (zp_deg(pa) == 0 || zp_deg(pb) == 0) {
    pg = zp_const(1);  // a primitive polynomial of degree 0 is a unit
  } else {
    pg = zp_subres_gcd(pa, pb);
  }
  ZP r = zp_mul(zp_const(d), pg);
  if (r.back() < 0) r = zp_neg(r);
  return r;
}

using ZYP = std::vector<ZP>;  // polynomial in y with Z[x] coefficients

inline void zyp_strip(ZYP& p) {
  while (!p.empty() && zp_is_zero(p.back())) p.pop_back();
}
inline bool zyp_is_zero(const ZYP& p) { return p.empty(); }
inline int zyp_deg(const ZYP& p) { return static_cast<int>(p.size()) - 1; }

inline ZYP zyp_sub(const ZYP& a, const ZYP& b) {
  ZYP r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    ZP ai = i < a.size() ? a[i] : ZP{};
    ZP bi = i < b.size() ? b[i] : ZP{};
    r[i] = zp_sub(ai, bi);
  }
  zyp_strip(r);
  return r;
}
inline ZYP zyp_mul(const ZYP& a, const ZYP& b) {
  if (zyp_is_zero(a) || zyp_is_zero(b)) return {};
  ZYP r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = zp_add(r[i + j], zp_mul(a[i], b[j]));
  zyp_strip(r);
  return r;
}
inline ZYP zyp_scale(const ZP& s, const ZYP& a) {
  ZYP r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = zp_mul(s, a[i]);
  zyp_strip(r);
  return r;
}
inline ZYP zyp_divexact_coeff(const ZYP& a, const ZP& d) {
  ZYP r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = zp_divexact(a[i], d);
  return r;
}

inline ZP zyp_content(const ZYP& p) {
  ZP g;
  for (const auto& c : p) g = zp_gcd(g, c);
  return g;
}

inline ZYP zyp_prem(const ZYP& u, const ZYP& v) {
  ZYP r = u;
  const int dv = zyp_deg(v);
  int e = zyp_deg(u) - dv + 1;
  while (!zyp_is_zero(r) && zyp_deg(r) >= dv) {
    ZYP t(static_cast<std::size_t>(zyp_deg(r) - dv) + 1);
    t.back() = r.back();
    r = zyp_sub(zyp_scale(v.back(), r), zyp_mul(t, v));
    --e;
  }
  for (; e > 0; --e) r = zyp_scale(v.back(), r);
  return r;
}

/// Primitive gcd of y-primitive u, v in (Z[x])[y], both of y-degree >= 1.
inline ZYP zyp_subres_gcd(ZYP u, ZYP v) {
  if (zyp_deg(u) < zyp_deg(v)) std::swap(u, v);
  ZP g = zp_const(1), h = zp_const(1);
  while (true) {
    int delta = zyp_deg(u) - zyp_deg(v);
    ZYP r = zyp_prem(u, v);
    if (zyp_is_zero(r)) break;
    if (zyp_deg(r) == 0) return {zp_const(1)};
    u = v;
    v = zyp_divexact_coeff(r, zp_mul(g, zp_pow(h, static_cast<unsigned>(delta))));
    g = u.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = zp_divexact(zp_pow(g, static_cast<unsigned>(delta)), zp_pow(h, static_cast<unsigned>(delta - 1)));
    }
  }
  return zyp_divexact_coeff(v, zyp_content(v));
}

inline ZYP poly_to_zyp(const Poly2& p, mpz_class& denom_out) {
  mpz_class lcm = 1;
  for (const auto& [m, c] : p.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
  ZYP r(static_cast<std::size_t>(std::max(0, p.degree_y())) + 1);
  for (const auto& [m, c] : p.terms()) {
    auto& row = r[static_cast<std::size_t>(m.dy)];
    if (zp_deg(row) < m.dx) row.resize(static_cast<std::size_t>(m.dx) + 1, mpz_class(0));
    row[static_cast<std::size_t>(m.dx)] = c.numerator() * (lcm / c.denominator());
  }
  zyp_strip(r);
  denom_out = lcm;
  return r;
}

inline Poly2 zyp_to_poly(const ZYP& p) {
  Poly2 r;
  for (int j = 0; j <= zyp_deg(p); ++j)
    for (int i = 0; i <= zp_deg(p[static_cast<std::size_t>(j)]); ++i) {
      const mpz_class& c = p[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (c != 0) r = r + Poly2::monomial(i, j, Rational(c));
    }
  return r;
}

}  // namespace detail

/// Canonical form: integer coefficients with content 1 and positive leading
/// coefficient under graded-lex; equals the input up to a positive rational.
inline Poly2 normalize_poly(const Poly2& p) {
  if (p.is_zero()) return p;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
  }
  Rational scale = Rational(mpq_class(mpq_class(den_lcm) / mpq_class(num_gcd)));
  Poly2 r = scale * p;
  if (r.leading().second.sign() < 0) r = -r;
  return r;
}

/// Normalized gcd (content 1, positive leading coefficient); divides both
/// inputs exactly. Throws BothZero when p = q = 0.
inline Poly2 gcd_poly(const Poly2& p, const Poly2& q) {
  using namespace detail;
  if (p.is_zero() && q.is_zero()) throw BothZero("gcd_poly(0, 0) is undefined");
  if (p.is_zero()) return normalize_poly(q);
  if (q.is_zero()) return normalize_poly(p);
  mpz_class dp, dq;
  ZYP a = poly_to_zyp(p, dp);
  ZYP b = poly_to_zyp(q, dq);

  ZP ca = zyp_content(a), cb = zyp_content(b);
  ZP d = zp_gcd(ca, cb);
  ZYP pa = zyp_divexact_coeff(a, ca), pb = zyp_divexact_coeff(b, cb);

  ZYP pg;
  if (zyp_deg(pa) == 0 || zyp_deg(pb) == 0) {
    pg = {zp_const(1)};  // y-primitive with y-degree 0 means unit
  } else {
    pg = zyp_subres_gcd(pa, pb);
  }
  return normalize_poly(zyp_to_poly(zyp_scale(d, pg)));
}

// ---------------------------------------------------------------------------
// Canonical printing (graded-lex descending). The printer emits the same
// grammar the parser accepts, e.g. "4*x*y^2 - 1/3".
// ---------------------------------------------------------------------------
inline std::string Poly2::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = c;
    if (out.empty()) {
      if (a.sign() < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a.sign() < 0 ? " - " : " + ";
      if (a.sign() < 0) a = -a;
    }
    const bool has_vars = m.dx > 0 || m.dy > 0;
    std::string mono;
    if (m.dx > 0) {
      mono += "x";
      if (m.dx > 1) mono += "^" + std::to_string(m.dx);
    }
    if (m.dy > 0) {
      if (!mono.empty()) mono += "*";
      mono += "y";
      if (m.dy > 1) mono += "^" + std::to_string(m.dy);
    }
    if (!has_vars) {
      out += a.str();
    } else if (a == Rational(1)) {
      out += mono;
    } else {
      out += a.str() + "*" + mono;
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Poly2& p) { return os << p.str(); }

}  // namespace tcflow
