#ifndef HYPTORSION_POLY_HPP
#define HYPTORSION_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hyptorsion/exactnum.hpp"

namespace hyptorsion {

inline constexpr int kZeroDegree = -1;

// Dense univariate polynomial, coefficients ascending, no trailing zeros.
// zero_ carries the coefficient ring (prime, extension field).
template <class R>
class Poly {
 public:
  using scalar_type = R;

  Poly() = default;
  explicit Poly(const R& like) : zero_(zero_like(like)) {}
  Poly(std::vector<R> coeffs, const R& like) : c_(std::move(coeffs)), zero_(zero_like(like)) { trim(); }

  static Poly constant(const R& c) { return Poly(std::vector<R>{c}, c); }
  static Poly monomial(const R& c, int n) {
    std::vector<R> v(static_cast<std::size_t>(n) + 1, zero_like(c));
    v[n] = c;
    return Poly(std::move(v), c);
  }
  static Poly x(const R& like) { return monomial(one_like(like), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const R& operator[](int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : zero_;
  }
  const R& leading() const { return c_.empty() ? zero_ : c_.back(); }
  const std::vector<R>& coefficients() const { return c_; }
  const R& zero() const { return zero_; }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const R& s) {
    if (hyptorsion::is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c = c * s;
    trim();
    return *this;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && hyptorsion::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<R> c_;
  R zero_{};
};

template <class R>
bool is_zero(const Poly<R>& f) {
  return f.is_zero();
}

namespace detail {

inline constexpr std::size_t kKaratsubaThreshold = 32;

template <class R>
std::vector<R> mul_schoolbook(const std::vector<R>& a, const std::vector<R>& b, const R& zero) {
  std::vector<R> out(a.size() + b.size() - 1, zero);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<Integer> mul_schoolbook(const std::vector<Integer>& a, const std::vector<Integer>& b,
                                    const Integer& zero);
std::vector<Fp> mul_schoolbook(const std::vector<Fp>& a, const std::vector<Fp>& b, const Fp& zero);

template <class R>
void add_shifted(std::vector<R>& out, const std::vector<R>& v, std::size_t shift, const R& zero) {
  if (out.size() < v.size() + shift) out.resize(v.size() + shift, zero);
  for (std::size_t i = 0; i < v.size(); ++i) out[i + shift] += v[i];
}

template <class R>
std::vector<R> mul_dense(const std::vector<R>& a, const std::vector<R>& b, const R& zero) {
  if (a.empty() || b.empty()) return {};
  if (a.size() < kKaratsubaThreshold || b.size() < kKaratsubaThreshold) return mul_schoolbook(a, b, zero);
  const std::vector<R>& longer = a.size() >= b.size() ? a : b;
  const std::vector<R>& shorter = a.size() >= b.size() ? b : a;
  std::size_t m = longer.size() / 2;
  std::vector<R> out;
  if (shorter.size() <= m) {
    // unbalanced: multiply slices of the longer operand by the shorter one
    std::size_t step = shorter.size();
    for (std::size_t pos = 0; pos < longer.size(); pos += step) {
      std::size_t end = std::min(longer.size(), pos + step);
      std::vector<R> slice(longer.begin() + pos, longer.begin() + end);
      add_shifted(out, mul_dense(slice, shorter, zero), pos, zero);
    }
    return out;
  }
  std::vector<R> a0(a.begin(), a.begin() + m), a1(a.begin() + m, a.end());
  std::vector<R> b0(b.begin(), b.begin() + m), b1(b.begin() + m, b.end());
  std::vector<R> z0 = mul_dense(a0, b0, zero);
  std::vector<R> z2 = mul_dense(a1, b1, zero);
  std::vector<R> sa = a0, sb = b0;
  add_shifted(sa, a1, 0, zero);
  add_shifted(sb, b1, 0, zero);
  std::vector<R> z1 = mul_dense(sa, sb, zero);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];
  out.assign(a.size() + b.size() - 1, zero);
  add_shifted(out, z0, 0, zero);
  add_shifted(out, z1, m, zero);
  add_shifted(out, z2, 2 * m, zero);
  out.resize(a.size() + b.size() - 1);
  return out;
}

}  // namespace detail

template <class R>
Poly<R> operator+(Poly<R> a, const Poly<R>& b) {
  return a += b;
}
template <class R>
Poly<R> operator-(Poly<R> a, const Poly<R>& b) {
  return a -= b;
}
template <class R>
Poly<R> operator*(const Poly<R>& a, const Poly<R>& b) {
  return Poly<R>(detail::mul_dense(a.coefficients(), b.coefficients(), a.zero()), a.zero());
}
template <class R>
Poly<R>& operator*=(Poly<R>& a, const Poly<R>& b) {
  return a = a * b;
}
template <class R>
Poly<R> operator*(Poly<R> a, const R& s) {
  return a *= s;
}
template <class R>
Poly<R> operator*(const R& s, Poly<R> a) {
  return a *= s;
}

template <class R>
Poly<R> pow(const Poly<R>& f, unsigned long e) {
  Poly<R> result = Poly<R>::constant(one_like(f.zero()));
  Poly<R> base = f;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

template <class R>
Poly<R> shift_up(const Poly<R>& f, int n) {
  if (f.is_zero()) return f;
  std::vector<R> v(static_cast<std::size_t>(n), f.zero());
  v.insert(v.end(), f.coefficients().begin(), f.coefficients().end());
  return Poly<R>(std::move(v), f.zero());
}

// ---- division ----

// Quotient and remainder over a field.
template <class R>
std::pair<Poly<R>, Poly<R>> divrem(const Poly<R>& a, const Poly<R>& b) {
  static_assert(is_field_v<R>, "divrem needs a field; use exact_div over the integers");
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  const R& zero = a.zero();
  if (a.degree() < b.degree()) return {Poly<R>(zero), a};
  std::vector<R> r = a.coefficients();
  const std::vector<R>& bc = b.coefficients();
  int db = b.degree();
  std::vector<R> q(static_cast<std::size_t>(a.degree() - db) + 1, zero);
  const R inv = is_one(b.leading()) ? b.leading() : inverse(b.leading());
  for (int i = a.degree() - db; i >= 0; --i) {
    R t = r[i + db] * inv;
    if (is_zero(t)) continue;
    q[i] = t;
    for (int j = 0; j < db; ++j) r[i + j] -= t * bc[j];
    r[i + db] = zero;
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly<R>(std::move(q), zero), Poly<R>(std::move(r), zero)};
}

template <class R>
Poly<R> operator%(const Poly<R>& a, const Poly<R>& b) {
  return divrem(a, b).second;
}

// Division known to be exact; any remainder is reported as a theorem violation.
template <class R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw DomainError("exact_div by the zero polynomial");
  const R& zero = a.zero();
  if (a.is_zero()) return Poly<R>(zero);
  if (a.degree() < b.degree()) throw TheoremViolation("exact_div: nonzero remainder");
  if constexpr (is_field_v<R>) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw TheoremViolation("exact_div: nonzero remainder");
    return q;
  } else {
    std::vector<R> r = a.coefficients();
    const std::vector<R>& bc = b.coefficients();
    int db = b.degree();
    std::vector<R> q(static_cast<std::size_t>(a.degree() - db) + 1, zero);
    for (int i = a.degree() - db; i >= 0; --i) {
      if (is_zero(r[i + db])) continue;
      R t = exact_quotient(r[i + db], b.leading());
      for (int j = 0; j <= db; ++j) r[i + j] -= t * bc[j];
      q[i] = std::move(t);
    }
    for (int j = 0; j < db; ++j)
      if (!is_zero(r[j])) throw TheoremViolation("exact_div: nonzero remainder");
    return Poly<R>(std::move(q), zero);
  }
}

template <class R>
Poly<R> exact_quotient(const Poly<R>& a, const Poly<R>& b) {
  return exact_div(a, b);
}

// lc(b)^(deg a - deg b + 1) a = q b + r
Poly<Integer> pseudo_remainder(const Poly<Integer>& a, const Poly<Integer>& b);

// ---- derivatives and evaluation ----

template <class R>
Poly<R> derivative(const Poly<R>& f) {
  if (f.degree() < 1) return Poly<R>(f.zero());
  std::vector<R> v;
  v.reserve(f.coefficients().size() - 1);
  for (int i = 1; i <= f.degree(); ++i) v.push_back(f[i] * from_int(f.zero(), i));
  return Poly<R>(std::move(v), f.zero());
}

// D_n(x^m) = C(m,n) x^(m-n)
template <class R>
Poly<R> hasse_derivative(const Poly<R>& f, int n) {
  if (n < 0) throw DomainError("hasse_derivative: negative order");
  if (f.degree() < n) return Poly<R>(f.zero());
  std::vector<R> v;
  v.reserve(static_cast<std::size_t>(f.degree() - n) + 1);
  Integer binom;
  for (int m = n; m <= f.degree(); ++m) {
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(n));
    v.push_back(f[m] * from_integer(f.zero(), binom));
  }
  return Poly<R>(std::move(v), f.zero());
}

inline Rational lift_scalar(const Integer& c, const Rational&) { return Rational(c); }
inline Integer lift_scalar(const Integer& c, const Integer&) { return c; }
inline Fp lift_scalar(const Integer& c, const Fp& like) { return from_integer(like, c); }
inline Gf lift_scalar(const Integer& c, const Gf& like) { return from_integer(like, c); }
inline Rational lift_scalar(const Rational& c, const Rational&) { return c; }
inline Fp lift_scalar(const Fp& c, const Fp&) { return c; }
inline Gf lift_scalar(const Fp& c, const Gf& like) { return embed_scalar(c, like.field()); }
inline Gf lift_scalar(const Gf& c, const Gf&) { return c; }

template <class R, class X>
X evaluate(const Poly<R>& f, const X& x) {
  X acc = zero_like(x);
  for (int i = f.degree(); i >= 0; --i) acc = acc * x + lift_scalar(f[i], x);
  return acc;
}

template <class R, class S, class Fn>
Poly<S> map_coefficients(const Poly<R>& f, const S& like, Fn fn) {
  std::vector<S> v;
  v.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) v.push_back(fn(c));
  return Poly<S>(std::move(v), like);
}

template <class R, class X>
Poly<X> lift_poly(const Poly<R>& f, const X& like) {
  return map_coefficients(f, like, [&](const R& c) { return lift_scalar(c, like); });
}

// ---- gcd family (fields) ----

template <class R>
Poly<R> monic(const Poly<R>& f) {
  if (f.is_zero() || is_one(f.leading())) return f;
  return f * inverse(f.leading());
}

Poly<Integer> content_free(const Poly<Integer>& f);  // primitive part, positive lc
Integer content(const Poly<Integer>& f);
Poly<Integer> primitive_gcd(const Poly<Integer>& a, const Poly<Integer>& b);
Poly<Rational> to_rational(const Poly<Integer>& f);
// Primitive integer multiple of f with positive leading coefficient.
Poly<Integer> integer_primitive(const Poly<Rational>& f);
Poly<Fp> reduce_mod(const Poly<Integer>& f, std::uint64_t p);
Poly<Fp> reduce_mod(const Poly<Rational>& f, std::uint64_t p);
Poly<Integer> lift_residues(const Poly<Fp>& f);

template <class R>
Poly<R> gcd(const Poly<R>& a, const Poly<R>& b) {
  static_assert(!std::is_same_v<R, Integer>, "gcd over the integers: use primitive_gcd or map to the rationals");
  if constexpr (std::is_same_v<R, Rational>) {
    if (a.is_zero() && b.is_zero()) return a;
    Poly<Integer> g = primitive_gcd(integer_primitive(a), integer_primitive(b));
    return monic(to_rational(g));
  } else {
    Poly<R> x = a, y = b;
    while (!y.is_zero()) {
      Poly<R> r = x % y;
      x = std::move(y);
      y = std::move(r);
    }
    return monic(x);
  }
}

template <class R>
struct Bezout {
  Poly<R> g, s, t;  // s a + t b = g, g monic
};

template <class R>
Bezout<R> xgcd(const Poly<R>& a, const Poly<R>& b) {
  const R& zero = a.zero();
  Poly<R> r0 = a, r1 = b;
  Poly<R> s0 = Poly<R>::constant(one_like(zero)), s1(zero);
  Poly<R> t0(zero), t1 = Poly<R>::constant(one_like(zero));
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<R> s2 = s0 - q * s1;
    Poly<R> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  R inv = inverse(r0.leading());
  return {r0 * inv, s0 * inv, t0 * inv};
}

template <class R>
Poly<R> powmod(const Poly<R>& base, const Integer& e, const Poly<R>& mod) {
  Poly<R> result = Poly<R>::constant(one_like(base.zero())) % mod;
  Poly<R> b = base % mod;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % mod;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % mod;
  }
  return result;
}

// f(x) = h(x^p) with coefficients of h replaced by their p-th roots.
template <class R>
Poly<R> pth_root_poly(const Poly<R>& f) {
  std::uint64_t p = characteristic(f.zero());
  std::vector<R> v;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) v.push_back(pth_root(f[i]));
  return Poly<R>(std::move(v), f.zero());
}

template <class R>
Poly<R> squarefree_part(const Poly<R>& f) {
  if (f.is_zero()) throw DomainError("squarefree_part of the zero polynomial");
  Poly<R> m = monic(f);
  if (m.degree() <= 0) return Poly<R>::constant(one_like(f.zero()));
  Poly<R> d = derivative(m);
  if constexpr (is_finite_field_v<R>) {
    if (d.is_zero()) return squarefree_part(pth_root_poly(m));
    Poly<R> g = gcd(m, d);
    Poly<R> w = exact_div(m, g);
    for (Poly<R> t = gcd(g, w); t.degree() > 0; t = gcd(g, w)) g = exact_div(g, t);
    if (g.degree() <= 0) return w;
    return monic(w * squarefree_part(pth_root_poly(g)));
  } else {
    return monic(exact_div(m, gcd(m, d)));
  }
}

// Iteratively divide out common factors with f.
template <class R>
Poly<R> prime_to(const Poly<R>& g, const Poly<R>& f) {
  Poly<R> h = g;
  for (Poly<R> t = gcd(h, f); t.degree() > 0; t = gcd(h, f)) h = exact_div(h, t);
  return h;
}

// ---- resultants: Res(f,g) = lc(g)^deg f * prod f(beta), beta over roots of g ----

Integer resultant(const Poly<Integer>& f, const Poly<Integer>& g);

template <class R>
R resultant(const Poly<R>& f, const Poly<R>& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant of the zero polynomial");
  R factor = one_like(f.zero());
  Poly<R> a = f, b = g;
  while (true) {
    int m = a.degree(), n = b.degree();
    if (n == 0) return factor * pow(b.leading(), static_cast<unsigned long>(m));
    if (m == 0) return factor * pow(a.leading(), static_cast<unsigned long>(n));
    Poly<R> r = a % b;
    if (r.is_zero()) return zero_like(f.zero());
    int dr = r.degree();
    factor = factor * pow(b.leading(), static_cast<unsigned long>(m - dr));
    if ((n * dr) % 2 == 1) factor = -factor;
    a = std::move(b);
    b = std::move(r);
  }
}

// ---- roots over finite fields ----

// Monic irreducible factors of a squarefree f, by degree and then canonically.
std::vector<Poly<Fp>> irreducible_factors(const Poly<Fp>& f);

// Distinct roots of f lying in its coefficient field, canonically sorted.
template <class K>
std::vector<K> roots_in_field(const Poly<K>& f);

// Embedding of one finite field into another whose degree is a multiple.
class Embedding {
 public:
  Embedding(FieldRef from, FieldRef to);
  Gf operator()(const Gf& a) const;
  Gf operator()(const Fp& a) const { return embed_scalar(a, to_); }
  const FieldRef& target() const { return to_; }

 private:
  FieldRef from_, to_;
  std::vector<Gf> powers_;  // images of t^i
};

Poly<Gf> embed_poly(const Poly<Fp>& f, const FieldRef& to);
Poly<Gf> embed_poly(const Poly<Gf>& f, const FieldRef& to);

// Roots whose degree over the coefficient field is d, for d = 1..max_deg;
// each list lives in the extension of degree d*k of F_p.
std::map<int, std::vector<Gf>> roots_by_degree(const Poly<Fp>& f, int max_deg);
std::map<int, std::vector<Gf>> roots_by_degree(const Poly<Gf>& f, int max_deg);

// Rational roots of a nonzero polynomial over Q, sorted ascending.
std::vector<Rational> rational_roots(const Poly<Rational>& f);
std::vector<Rational> rational_roots(const Poly<Integer>& f);

// ---- text forms ----

std::string to_string(const Poly<Integer>& f, const std::string& var = "x");
std::string to_string(const Poly<Rational>& f, const std::string& var = "x");
std::string to_string(const Poly<Fp>& f, const std::string& var = "x");
std::string to_string(const Poly<Gf>& f, const std::string& var = "x");

std::string to_csv(const Poly<Integer>& f);
std::string to_csv(const Poly<Rational>& f);
std::string to_csv(const Poly<Fp>& f);
std::string to_csv(const Poly<Gf>& f);  // elements separated by ';'

// Accepts either form: "3*x^2 - x + 1/2" or "1/2,-1,3".
Poly<Rational> parse_poly_rational(const std::string& text);
Poly<Integer> parse_poly_integer(const std::string& text);
Poly<Fp> parse_poly_fp(const std::string& text, std::uint64_t p);

}  // namespace hyptorsion

#endif
