#ifndef HYPTORSION_JACOBIAN_HPP
#define HYPTORSION_JACOBIAN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hyptorsion/curve.hpp"
#include "hyptorsion/divpoly.hpp"
#include "hyptorsion/torsion.hpp"

namespace hyptorsion {

// Reduced divisor class (u, v): u monic, deg v < deg u <= g, u | v^2 + Qv - P.
template <class K>
struct MumfordDivisor {
  Poly<K> u, v;
  friend bool operator==(const MumfordDivisor& a, const MumfordDivisor& b) { return a.u == b.u && a.v == b.v; }
};

// Cantor composition and reduction on y^2 + Q(x) y = P(x) over K.
template <class K>
class Jacobian {
 public:
  Jacobian(Poly<K> P, Poly<K> Q);

  int genus() const { return g_; }
  const Poly<K>& P() const { return P_; }
  const Poly<K>& Q() const { return Q_; }
  const K& zero() const { return P_.zero(); }

  MumfordDivisor<K> identity() const;
  bool is_identity(const MumfordDivisor<K>& d) const { return d.u.degree() == 0; }
  bool is_reduced(const MumfordDivisor<K>& d) const;
  bool on_curve(const K& x0, const K& y0) const;

  // [(x0, y0)] - [inf]; throws DomainError off the curve.
  MumfordDivisor<K> embed_point(const K& x0, const K& y0) const;
  MumfordDivisor<K> add(const MumfordDivisor<K>& a, const MumfordDivisor<K>& b) const;
  MumfordDivisor<K> negate(const MumfordDivisor<K>& d) const;
  MumfordDivisor<K> scalar_mul(const MumfordDivisor<K>& d, const Integer& n) const;

 private:
  MumfordDivisor<K> reduce(Poly<K> u, Poly<K> v) const;
  Poly<K> P_, Q_;
  int g_;
};

// Jacobian of an integral model with coefficients mapped into the field of `like`.
template <class K>
Jacobian<K> jacobian_over(const IntegerModel& model, const K& like) {
  return Jacobian<K>(lift_poly(model.P, like), lift_poly(model.Q, like));
}

// One certified root of U~_N.
struct CertificateRow {
  std::string field;   // "Q" or "F_p^k"
  int x0_degree = 1;   // degree of x0 over the prime field (or over Q)
  std::string x0, y0;  // canonical text
  bool order_divides_N = false;
  bool in_two_torsion = false;
  bool witness = false;  // certified on a reduction rather than over Q
  bool passed() const { return order_divides_N && !in_two_torsion; }
};

struct Certificate {
  int N = 0;
  std::uint64_t characteristic = 0;
  std::uint64_t witness_prime = 0;  // char 0 only: prime used for non-rational roots
  std::vector<CertificateRow> rows;
  bool all_passed() const;
};

// Certifies every root of U~_N over F_p (p > 0) or over Q with a reduction
// witness for the roots that are not rational. Throws TheoremViolation when a
// root fails.
Certificate verify_utilde(const SSequence& seq, int N, std::uint64_t p, const TorsionOptions& options = {});

// Certifies the roots of a given locus mod p.
Certificate certify_roots(const IntegerModel& model, const Poly<Fp>& locus, int N);

// (x0, y0) with N D = 0 and 2 D != 0, D = [(x0, y0)] - [inf].
template <class K>
bool in_tilde_torsion(const Jacobian<K>& jac, const K& x0, const K& y0, int N) {
  const auto d = jac.embed_point(x0, y0);
  return jac.is_identity(jac.scalar_mul(d, Integer(N))) && !jac.is_identity(jac.scalar_mul(d, Integer(2)));
}

}  // namespace hyptorsion

#endif
