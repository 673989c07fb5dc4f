#ifndef HYPTORSION_EXACTNUM_HPP
#define HYPTORSION_EXACTNUM_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "hyptorsion/errors.hpp"

namespace hyptorsion {

using Integer = mpz_class;
using Rational = mpq_class;

bool is_prime(std::uint64_t n);

// Residue modulo a prime p < 2^32.
class Fp {
 public:
  Fp() = default;
  Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}
  static Fp from_signed(std::int64_t value, std::uint64_t p);

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  Fp& operator+=(const Fp& o) {
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    v_ = v_ * o.v_ % p_;
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }
  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp inverse() const;

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

 private:
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 1;
};

// F_p[t]/(m(t)) with m monic irreducible of degree k; k = 1 uses m = t.
struct FiniteField {
  std::uint64_t p = 2;
  int k = 1;
  std::vector<std::uint64_t> modulus;  // ascending, size k+1, monic
  mpz_class order;
  std::vector<std::uint64_t> nonresidue;  // smallest non-square (odd p)
  std::vector<std::uint64_t> trace_one;   // smallest element of absolute trace 1
};

using FieldRef = std::shared_ptr<const FiniteField>;

bool same_field(const FieldRef& a, const FieldRef& b);

class Gf {
 public:
  Gf() = default;
  explicit Gf(FieldRef field);
  Gf(FieldRef field, std::vector<std::uint64_t> coeffs);
  static Gf constant(FieldRef field, std::uint64_t c);
  static Gf generator(FieldRef field);

  const FieldRef& field() const { return field_; }
  std::uint64_t characteristic() const { return field_->p; }
  int degree() const { return field_->k; }
  const std::vector<std::uint64_t>& coefficients() const { return c_; }
  bool is_zero() const;

  Gf& operator+=(const Gf& o);
  Gf& operator-=(const Gf& o);
  Gf& operator*=(const Gf& o);
  Gf& operator/=(const Gf& o) { return *this *= o.inverse(); }
  Gf operator-() const;
  Gf inverse() const;

  friend Gf operator+(Gf a, const Gf& b) { return a += b; }
  friend Gf operator-(Gf a, const Gf& b) { return a -= b; }
  friend Gf operator*(Gf a, const Gf& b) { return a *= b; }
  friend Gf operator/(Gf a, const Gf& b) { return a /= b; }
  friend bool operator==(const Gf& a, const Gf& b) { return a.c_ == b.c_ && same_field(a.field_, b.field_); }

 private:
  void check_same(const Gf& o) const;
  FieldRef field_;
  std::vector<std::uint64_t> c_;
};

class FieldSpec {
 public:
  enum class Kind { rationals, prime_field, ext_field };

  FieldSpec() = default;
  static FieldSpec rationals() { return FieldSpec(); }
  static FieldSpec finite(FieldRef field);
  static FieldSpec prime_field(std::uint64_t p);

  Kind kind() const;
  std::uint64_t characteristic() const { return field_ ? field_->p : 0; }
  int degree() const { return field_ ? field_->k : 1; }
  const FieldRef& field() const { return field_; }
  std::string describe() const;

 private:
  FieldRef field_;
};

// First monic irreducible of degree k in increasing order of sum c_i p^i.
FieldSpec make_extension(std::uint64_t p, int k);
FieldRef extension_field(std::uint64_t p, int k);
// F_p[t]/(m) for a given monic irreducible m (ascending coefficients, degree >= 2).
FieldRef field_from_modulus(std::uint64_t p, const std::vector<std::uint64_t>& modulus);

template <class T>
inline constexpr bool is_finite_field_v = std::is_same_v<T, Fp> || std::is_same_v<T, Gf>;
template <class T>
inline constexpr bool is_field_v = !std::is_same_v<T, Integer>;

// ---- uniform scalar interface ----

inline bool is_zero(const Integer& a) { return sgn(a) == 0; }
inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool is_zero(const Fp& a) { return a.value() == 0; }
inline bool is_zero(const Gf& a) { return a.is_zero(); }

inline Integer zero_like(const Integer&) { return 0; }
inline Rational zero_like(const Rational&) { return 0; }
inline Fp zero_like(const Fp& a) { return Fp(0, a.modulus()); }
inline Gf zero_like(const Gf& a) { return Gf(a.field()); }

inline Integer one_like(const Integer&) { return 1; }
inline Rational one_like(const Rational&) { return 1; }
inline Fp one_like(const Fp& a) { return Fp(1, a.modulus()); }
inline Gf one_like(const Gf& a) { return Gf::constant(a.field(), 1); }

std::uint64_t mod_ui(const Integer& n, std::uint64_t p);

inline Integer from_integer(const Integer&, const Integer& n) { return n; }
inline Rational from_integer(const Rational&, const Integer& n) { return Rational(n); }
inline Fp from_integer(const Fp& like, const Integer& n) { return Fp(mod_ui(n, like.modulus()), like.modulus()); }
inline Gf from_integer(const Gf& like, const Integer& n) {
  return Gf::constant(like.field(), mod_ui(n, like.characteristic()));
}
template <class T>
T from_int(const T& like, long n) {
  return from_integer(like, Integer(n));
}

inline bool is_one(const Integer& a) { return a == 1; }
inline bool is_one(const Rational& a) { return a == 1; }
inline bool is_one(const Fp& a) { return a.value() == 1; }
inline bool is_one(const Gf& a) { return a == one_like(a); }

inline std::uint64_t characteristic(const Integer&) { return 0; }
inline std::uint64_t characteristic(const Rational&) { return 0; }
inline std::uint64_t characteristic(const Fp& a) { return a.modulus(); }
inline std::uint64_t characteristic(const Gf& a) { return a.characteristic(); }

Rational inverse(const Rational& a);
inline Fp inverse(const Fp& a) { return a.inverse(); }
inline Gf inverse(const Gf& a) { return a.inverse(); }

Integer exact_quotient(const Integer& a, const Integer& b);
inline Rational exact_quotient(const Rational& a, const Rational& b) { return a * inverse(b); }
inline Fp exact_quotient(const Fp& a, const Fp& b) { return a / b; }
inline Gf exact_quotient(const Gf& a, const Gf& b) { return a / b; }

template <class T>
T pow(const T& base, const Integer& e) {
  if (sgn(e) < 0) return pow(inverse(base), Integer(-e));
  T result = one_like(base);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = result * result;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = result * base;
  }
  return result;
}
template <class T>
T pow(const T& base, unsigned long e) {
  return pow(base, Integer(e));
}

// ---- finite-field helpers ----

Integer field_order(const Fp& a);
Integer field_order(const Gf& a);
inline int ext_degree(const Fp&) { return 1; }
inline int ext_degree(const Gf& a) { return a.degree(); }

// Canonical index sum c_i p^i; the canonical element order.
Integer canonical_index(const Fp& a);
Integer canonical_index(const Gf& a);
Fp element_at(const Fp& like, const Integer& index);
Gf element_at(const Gf& like, const Integer& index);

Rational frobenius(const Rational& a);  // throws
Fp frobenius(const Fp& a);
Gf frobenius(const Gf& a);
Fp pth_root(const Fp& a);
Gf pth_root(const Gf& a);

// Absolute trace to F_p.
Fp absolute_trace(const Fp& a);
Fp absolute_trace(const Gf& a);

Gf embed_scalar(const Fp& a, const FieldRef& field);

bool canonical_less(const Integer& a, const Integer& b);
bool canonical_less(const Rational& a, const Rational& b);
bool canonical_less(const Fp& a, const Fp& b);
bool canonical_less(const Gf& a, const Gf& b);

std::optional<Rational> square_root(const Rational& a);
std::optional<Fp> square_root(const Fp& a);
std::optional<Gf> square_root(const Gf& a);

// Roots of a t^2 + b t + c in the field of the coefficients, sorted canonically.
std::vector<Rational> solve_quadratic(const Rational& a, const Rational& b, const Rational& c);
std::vector<Fp> solve_quadratic(const Fp& a, const Fp& b, const Fp& c);
std::vector<Gf> solve_quadratic(const Gf& a, const Gf& b, const Gf& c);

// ---- text forms ----

std::string to_text(const Integer& a);
std::string to_text(const Rational& a);
std::string to_text(const Fp& a);
std::string to_text(const Gf& a);

Integer parse_integer(const std::string& text);
Rational parse_rational(const std::string& text);
Fp parse_fp(const std::string& text, std::uint64_t p);
Gf parse_gf(const std::string& text, const FieldRef& field);

}  // namespace hyptorsion

#endif
