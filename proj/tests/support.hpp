#ifndef HYPTORSION_TESTS_SUPPORT_HPP
#define HYPTORSION_TESTS_SUPPORT_HPP

#include <random>
#include <stdexcept>
#include <vector>

#include "hyptorsion/curve.hpp"
#include "hyptorsion/poly.hpp"

namespace testing_support {

using namespace hyptorsion;

inline std::vector<Gf> all_elements(const FieldRef& field) {
  std::vector<Gf> out;
  Gf like(field);
  Integer q = field_order(like);
  for (Integer i = 0; i < q; ++i) out.push_back(element_at(like, i));
  return out;
}

inline Gf random_gf(const FieldRef& field, std::mt19937_64& rng) {
  std::vector<std::uint64_t> c;
  for (int i = 0; i < field->k; ++i) c.push_back(rng() % field->p);
  return Gf(field, c);
}

inline Fp random_fp(std::uint64_t p, std::mt19937_64& rng) { return Fp(rng() % p, p); }

inline Integer random_integer(std::mt19937_64& rng, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return Integer(d(rng));
}

inline Poly<Integer> random_int_poly(std::mt19937_64& rng, int degree, long bound) {
  std::vector<Integer> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_integer(rng, -bound, bound));
  if (sgn(c.back()) == 0) c.back() = 1;
  return Poly<Integer>(c, Integer(0));
}

inline Poly<Fp> random_fp_poly(std::mt19937_64& rng, std::uint64_t p, int degree) {
  std::vector<Fp> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_fp(p, rng));
  if (is_zero(c.back())) c.back() = Fp(1, p);
  return Poly<Fp>(c, Fp(0, p));
}

inline Poly<Gf> random_gf_poly(std::mt19937_64& rng, const FieldRef& field, int degree) {
  std::vector<Gf> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_gf(field, rng));
  if (c.back().is_zero()) c.back() = Gf::constant(field, 1);
  return Poly<Gf>(c, Gf(field));
}

// Determinant by cofactor expansion; independent of the library's elimination.
inline Integer cofactor_det(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer total = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (sgn(m[0][col]) == 0) continue;
    std::vector<std::vector<Integer>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(row);
    }
    Integer term = m[0][col] * cofactor_det(minor);
    total += (col % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

// Sylvester-matrix resultant (classical sign convention).
inline Integer sylvester_resultant(const Poly<Integer>& f, const Poly<Integer>& g) {
  const int m = f.degree(), n = g.degree();
  const int size = m + n;
  std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size, 0));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[r][r + i] = f[m - i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[n + r][r + i] = g[n - i];
  return cofactor_det(s);
}

inline Poly<Integer> Z(const std::string& text) { return parse_poly_integer(text); }

// Random model over Q with integer coefficients, smooth over Q.
inline IntegerModel random_integer_model(std::mt19937_64& rng, int g, long bound) {
  while (true) {
    Poly<Integer> P = random_int_poly(rng, 2 * g + 1, bound);
    std::vector<Integer> pc = P.coefficients();
    pc.back() = 1;
    P = Poly<Integer>(pc, Integer(0));
    Poly<Integer> Q = (rng() % 3 == 0) ? Poly<Integer>(Integer(0)) : random_int_poly(rng, static_cast<int>(rng() % (g + 1)), bound);
    if (!is_smooth(to_rational(P), to_rational(Q))) continue;
    return integer_model(HyperellipticModel<Rational>::make(to_rational(P), to_rational(Q)));
  }
}

// Random smooth model over F_p with deg Q <= g.
inline HyperellipticModel<Fp> random_fp_model(std::mt19937_64& rng, std::uint64_t p, int g) {
  while (true) {
    Poly<Fp> P = random_fp_poly(rng, p, 2 * g + 1);
    std::vector<Fp> pc = P.coefficients();
    pc.back() = Fp(1, p);
    P = Poly<Fp>(pc, Fp(0, p));
    Poly<Fp> Q = random_fp_poly(rng, p, static_cast<int>(rng() % (g + 1)));
    if (p != 2 && rng() % 2 == 0) Q = Poly<Fp>(Fp(0, p));
    if (!is_smooth(P, Q)) continue;
    return HyperellipticModel<Fp>::make(P, Q);
  }
}

// Classical division polynomials of y^2 = E(x), stored as A(x) y^e with e in {0,1}.
struct Psi {
  Poly<Rational> a;
  int e = 0;
};

class ClassicalPsi {
 public:
  ClassicalPsi(const Rational& a, const Rational& b) : E_(std::vector<Rational>{b, a, 0, 1}, Rational(0)) {
    const Rational zero(0);
    psi_.push_back({Poly<Rational>(zero), 0});
    psi_.push_back({Poly<Rational>::constant(Rational(1)), 0});
    psi_.push_back({Poly<Rational>::constant(Rational(2)), 1});
    psi_.push_back({Poly<Rational>(std::vector<Rational>{-a * a, 12 * b, 6 * a, 0, 3}, zero), 0});
    Poly<Rational> phi(std::vector<Rational>{-8 * b * b - a * a * a, -4 * a * b, -5 * a * a, 20 * b, 5 * a, 0, 1}, zero);
    psi_.push_back({phi * Rational(4), 1});
  }

  Psi get(int n) {
    while (static_cast<int>(psi_.size()) <= n) {
      const int k = static_cast<int>(psi_.size());
      const int m = k / 2;
      if (k % 2 == 1) {
        psi_.push_back(sub(mul({psi_[m + 2], psi_[m], psi_[m], psi_[m]}), mul({psi_[m - 1], psi_[m + 1], psi_[m + 1], psi_[m + 1]})));
      } else {
        Psi bracket = sub(mul({psi_[m + 2], psi_[m - 1], psi_[m - 1]}), mul({psi_[m - 2], psi_[m + 1], psi_[m + 1]}));
        Psi t = mul({psi_[m], bracket});
        // divide by 2y
        Psi r;
        if (t.e == 1) {
          r = {t.a * Rational(1, 2), 0};
        } else {
          r = {exact_div(t.a, E_) * Rational(1, 2), 1};
        }
        psi_.push_back(r);
      }
    }
    return psi_[n];
  }

 private:
  Psi mul(std::initializer_list<Psi> factors) {
    Psi r{Poly<Rational>::constant(Rational(1)), 0};
    int raw = 0;
    for (const Psi& f : factors) {
      r.a = r.a * f.a;
      raw += f.e;
    }
    for (; raw >= 2; raw -= 2) r.a = r.a * E_;
    r.e = raw;
    return r;
  }
  static Psi sub(const Psi& x, const Psi& y) {
    if (x.a.is_zero()) return {-y.a, y.e};
    if (y.a.is_zero()) return x;
    if (x.e != y.e) throw std::logic_error("mismatched y-parity");
    return {x.a - y.a, x.e};
  }
  Poly<Rational> E_;
  std::vector<Psi> psi_;
};

}  // namespace testing_support

#endif
