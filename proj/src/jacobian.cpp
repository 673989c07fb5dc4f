#include "hyptorsion/jacobian.hpp"

#include <map>

namespace hyptorsion {

template <class K>
Jacobian<K>::Jacobian(Poly<K> P, Poly<K> Q) : P_(std::move(P)), Q_(Q.coefficients(), P_.zero()) {
  const int d = P_.degree();
  if (d < 3 || d % 2 == 0 || !is_one(P_.leading())) throw DomainError("P must be monic of odd degree >= 3");
  g_ = (d - 1) / 2;
  if (Q_.degree() > g_) throw DomainError("deg Q exceeds the genus");
}

template <class K>
MumfordDivisor<K> Jacobian<K>::identity() const {
  return {Poly<K>::constant(one_like(zero())), Poly<K>(zero())};
}

template <class K>
bool Jacobian<K>::is_reduced(const MumfordDivisor<K>& d) const {
  if (d.u.is_zero() || !is_one(d.u.leading())) return false;
  if (d.u.degree() > g_ || d.v.degree() >= d.u.degree()) return false;
  return ((d.v * d.v + Q_ * d.v - P_) % d.u).is_zero();
}

template <class K>
bool Jacobian<K>::on_curve(const K& x0, const K& y0) const {
  return is_zero(y0 * y0 + evaluate(Q_, x0) * y0 - evaluate(P_, x0));
}

template <class K>
MumfordDivisor<K> Jacobian<K>::embed_point(const K& x0, const K& y0) const {
  if (!on_curve(x0, y0)) throw DomainError("point is not on the curve");
  return {Poly<K>(std::vector<K>{-x0, one_like(x0)}, zero()), Poly<K>::constant(y0) + Poly<K>(zero())};
}

template <class K>
MumfordDivisor<K> Jacobian<K>::reduce(Poly<K> u, Poly<K> v) const {
  u = monic(u);
  v = v % u;
  while (u.degree() > g_) {
    Poly<K> u2 = exact_div(P_ - v * Q_ - v * v, u);
    Poly<K> v2 = (-Q_ - v) % u2;
    u = monic(u2);
    v = v2 % u;
  }
  return {std::move(u), std::move(v)};
}

template <class K>
MumfordDivisor<K> Jacobian<K>::add(const MumfordDivisor<K>& a, const MumfordDivisor<K>& b) const {
  Bezout<K> first = xgcd(a.u, b.u);
  Bezout<K> second = xgcd(first.g, a.v + b.v + Q_);
  const Poly<K>& d = second.g;
  const Poly<K> s1 = second.s * first.s, s2 = second.s * first.t, s3 = second.t;
  Poly<K> u = exact_div(a.u * b.u, d * d);
  Poly<K> v = exact_div(s1 * a.u * b.v + s2 * b.u * a.v + s3 * (a.v * b.v + P_), d);
  return reduce(std::move(u), std::move(v));
}

template <class K>
MumfordDivisor<K> Jacobian<K>::negate(const MumfordDivisor<K>& d) const {
  return {d.u, (-d.v - Q_) % d.u};
}

template <class K>
MumfordDivisor<K> Jacobian<K>::scalar_mul(const MumfordDivisor<K>& d, const Integer& n) const {
  if (sgn(n) < 0) return scalar_mul(negate(d), Integer(-n));
  MumfordDivisor<K> result = identity();
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = add(result, result);
    if (mpz_tstbit(n.get_mpz_t(), i)) result = add(result, d);
  }
  return result;
}

template class Jacobian<Rational>;
template class Jacobian<Fp>;
template class Jacobian<Gf>;

bool Certificate::all_passed() const {
  for (const auto& r : rows)
    if (!r.passed()) return false;
  return true;
}

namespace {

std::string field_name(std::uint64_t p, int k) {
  return "F_" + std::to_string(p) + (k == 1 ? "" : "^" + std::to_string(k));
}

// Quadratic extension of each root field, built once per degree.
struct Lift {
  FieldRef big;
  Embedding embed;
};

CertificateRow certify_finite(const IntegerModel& model, const Gf& x0, int x0_degree, int N,
                              std::map<int, Lift>& lifts) {
  const FieldRef& field = x0.field();
  const std::uint64_t p = field->p;
  Jacobian<Gf> jac = jacobian_over(model, x0);
  std::vector<Gf> ys = solve_quadratic(one_like(x0), evaluate(jac.Q(), x0), -evaluate(jac.P(), x0));
  Gf X = x0;
  if (ys.empty()) {
    auto it = lifts.find(field->k);
    if (it == lifts.end()) {
      const FieldRef big = extension_field(p, 2 * field->k);
      it = lifts.emplace(field->k, Lift{big, Embedding(field, big)}).first;
    }
    X = it->second.embed(x0);
    jac = jacobian_over(model, X);
    ys = solve_quadratic(one_like(X), evaluate(jac.Q(), X), -evaluate(jac.P(), X));
    if (ys.empty()) throw TheoremViolation("no y-coordinate over a quadratic extension");
  }
  CertificateRow row;
  row.x0_degree = x0_degree;
  row.field = field_name(p, X.degree());
  row.x0 = to_text(X);
  row.y0 = to_text(ys.front());
  const auto d = jac.embed_point(X, ys.front());
  row.order_divides_N = jac.is_identity(jac.scalar_mul(d, Integer(N)));
  row.in_two_torsion = jac.is_identity(jac.scalar_mul(d, Integer(2)));
  return row;
}

}  // namespace

Certificate certify_roots(const IntegerModel& model, const Poly<Fp>& locus, int N) {
  Certificate cert;
  cert.N = N;
  cert.characteristic = locus.zero().modulus();
  if (locus.degree() <= 0) return cert;
  std::map<int, Lift> lifts;
  for (const auto& [d, roots] : roots_by_degree(locus, locus.degree()))
    for (const Gf& r : roots) cert.rows.push_back(certify_finite(model, r, d, N, lifts));
  return cert;
}

Certificate verify_utilde(const SSequence& seq, int N, std::uint64_t p, const TorsionOptions& options) {
  const IntegerModel& model = seq.model();
  Certificate cert;
  if (p != 0) {
    cert = certify_roots(model, utilde(seq, N, p, options).utilde, N);
  } else {
    cert.N = N;
    const Poly<Rational> U = utilde(seq, N, options).utilde;
    Poly<Rational> rest = U;
    Jacobian<Rational> jac = jacobian_over(model, Rational(0));
    for (const Rational& x0 : rational_roots(U)) {
      std::vector<Rational> ys = solve_quadratic(Rational(1), evaluate(jac.Q(), x0), -evaluate(jac.P(), x0));
      if (ys.empty()) continue;
      CertificateRow row;
      row.field = "Q";
      row.x0 = to_text(x0);
      row.y0 = to_text(ys.front());
      const auto d = jac.embed_point(x0, ys.front());
      row.order_divides_N = jac.is_identity(jac.scalar_mul(d, Integer(N)));
      row.in_two_torsion = jac.is_identity(jac.scalar_mul(d, Integer(2)));
      cert.rows.push_back(row);
      rest = exact_div(rest, Poly<Rational>(std::vector<Rational>{-x0, Rational(1)}, Rational(0)));
    }
    if (rest.degree() > 0) {
      // the remaining roots are certified on a reduction of good prime
      std::uint64_t q = 3;
      for (;; q += 2) {
        if (!is_prime(q) || N % static_cast<int>(q) == 0) continue;
        if (!reduce_mod_p(model, q)) continue;
        bool integral = true;
        for (const auto& c : rest.coefficients())
          if (mod_ui(Integer(c.get_den()), q) == 0) integral = false;
        if (!integral) continue;
        const Poly<Fp> r = reduce_mod(rest, q);
        if (r.degree() != rest.degree() || gcd(r, derivative(r)).degree() != 0) continue;
        if (gcd(r, reduce_mod(model.F, q)).degree() != 0) continue;
        break;
      }
      cert.witness_prime = q;
      Certificate w = certify_roots(model, reduce_mod(rest, q), N);
      for (auto& row : w.rows) {
        row.witness = true;
        cert.rows.push_back(row);
      }
    }
  }
  if (!cert.all_passed()) throw TheoremViolation("a root of U~_" + std::to_string(N) + " failed certification");
  return cert;
}

}  // namespace hyptorsion
