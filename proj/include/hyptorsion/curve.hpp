#ifndef HYPTORSION_CURVE_HPP
#define HYPTORSION_CURVE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "hyptorsion/errors.hpp"
#include "hyptorsion/exactnum.hpp"
#include "hyptorsion/poly.hpp"

namespace hyptorsion {

struct MuNu {
  int N = 0;
  int mu = 0;
  int nu = 0;
};

// mu = floor((N-2g-1)/2), nu = floor(N/2)+1.
MuNu mu_nu(int g, int N);

// Affine model y^2 + Q(x) y = P(x) with P monic of degree 2g+1 and deg Q <= g.
template <class K>
class HyperellipticModel {
 public:
  // Validates degrees and smoothness; throws DomainError or NotSmooth.
  static HyperellipticModel make(const Poly<K>& P, const Poly<K>& Q);

  const Poly<K>& P() const { return P_; }
  const Poly<K>& Q() const { return Q_; }
  const Poly<K>& F() const { return F_; }  // 4P + Q^2
  int genus() const { return g_; }
  std::uint64_t characteristic() const { return hyptorsion::characteristic(P_.zero()); }
  const K& zero() const { return P_.zero(); }

  // Left side minus right side of the equation at (x0, y0).
  template <class X>
  X equation_at(const X& x0, const X& y0) const {
    return y0 * y0 + evaluate(Q_, x0) * y0 - evaluate(P_, x0);
  }

 private:
  HyperellipticModel(Poly<K> P, Poly<K> Q, Poly<K> F, int g)
      : P_(std::move(P)), Q_(std::move(Q)), F_(std::move(F)), g_(g) {}
  Poly<K> P_, Q_, F_;
  int g_ = 0;
};

// Integral model over Z, the input of the division-polynomial engine.
struct IntegerModel {
  Poly<Integer> P, Q, F;
  int genus = 0;
};

// Degree and smoothness test shared by every coefficient domain.
template <class K>
bool is_smooth(const Poly<K>& P, const Poly<K>& Q);

// Validated integer model; throws when a coefficient is not integral.
IntegerModel integer_model(const HyperellipticModel<Rational>& model);
HyperellipticModel<Rational> rational_model(const IntegerModel& model);

// Least nonnegative residues; prime-field models only.
HyperellipticModel<Rational> lift_to_integers(const HyperellipticModel<Fp>& model);
HyperellipticModel<Rational> lift_to_integers(const HyperellipticModel<Gf>& model);  // throws unless k = 1

// Reduction of an integral model; nullopt when the reduced model is singular.
std::optional<HyperellipticModel<Fp>> reduce_mod_p(const HyperellipticModel<Rational>& model, std::uint64_t p);
std::optional<HyperellipticModel<Fp>> reduce_mod_p(const IntegerModel& model, std::uint64_t p);

// Squarefree part of F: x-coordinates of the affine 2-torsion points.
template <class K>
Poly<K> two_torsion_x(const HyperellipticModel<K>& model) {
  if (model.F().degree() <= 0) return Poly<K>::constant(one_like(model.zero()));
  return squarefree_part(model.F());
}

// Curve file: lines "char: <0|p>", "P: c0,c1,...", "Q: c0,...".
struct CurveFile {
  std::uint64_t characteristic = 0;
  Poly<Rational> P, Q;
};

CurveFile parse_curve(const std::string& text);
CurveFile load_curve(const std::string& path);
std::string format_curve(const CurveFile& curve);

}  // namespace hyptorsion

#endif
