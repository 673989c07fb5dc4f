#include "hyptorsion/curve.hpp"

#include <fstream>
#include <sstream>

namespace hyptorsion {

MuNu mu_nu(int g, int N) {
  if (g < 1) throw DomainError("genus must be positive");
  if (N < 2 * g + 1) throw DomainError("N = " + std::to_string(N) + " is below 2g+1 = " + std::to_string(2 * g + 1));
  return MuNu{N, (N - 2 * g - 1) / 2, N / 2 + 1};
}

template <class K>
bool is_smooth(const Poly<K>& P, const Poly<K>& Q) {
  if (characteristic(P.zero()) == 2) {
    Poly<K> dP = derivative(P), dQ = derivative(Q);
    return gcd(Q, dP * dP + dQ * dQ * P).degree() == 0;
  }
  Poly<K> F = P * from_int(P.zero(), 4) + Q * Q;
  return gcd(F, derivative(F)).degree() == 0;
}

template <class K>
HyperellipticModel<K> HyperellipticModel<K>::make(const Poly<K>& P, const Poly<K>& Q_in) {
  const int d = P.degree();
  if (d < 3 || d % 2 == 0) throw DomainError("P must have odd degree at least 3");
  if (!is_one(P.leading())) throw DomainError("P must be monic");
  const int g = (d - 1) / 2;
  Poly<K> Q(Q_in.coefficients(), P.zero());
  if (Q.degree() > g) throw DomainError("deg Q exceeds the genus");
  if (!is_smooth(P, Q)) throw NotSmooth("the affine model is singular");
  Poly<K> F = P * from_int(P.zero(), 4) + Q * Q;
  return HyperellipticModel(P, std::move(Q), std::move(F), g);
}

template class HyperellipticModel<Rational>;
template class HyperellipticModel<Fp>;
template class HyperellipticModel<Gf>;
template bool is_smooth(const Poly<Rational>&, const Poly<Rational>&);
template bool is_smooth(const Poly<Fp>&, const Poly<Fp>&);
template bool is_smooth(const Poly<Gf>&, const Poly<Gf>&);

namespace {

Poly<Integer> integral_part(const Poly<Rational>& f) {
  return map_coefficients(f, Integer(0), [](const Rational& c) {
    if (c.get_den() != 1) throw DomainError("coefficient " + c.get_str() + " is not an integer");
    return Integer(c.get_num());
  });
}

}  // namespace

IntegerModel integer_model(const HyperellipticModel<Rational>& model) {
  return IntegerModel{integral_part(model.P()), integral_part(model.Q()), integral_part(model.F()), model.genus()};
}

HyperellipticModel<Rational> rational_model(const IntegerModel& model) {
  return HyperellipticModel<Rational>::make(to_rational(model.P), to_rational(model.Q));
}

HyperellipticModel<Rational> lift_to_integers(const HyperellipticModel<Fp>& model) {
  return HyperellipticModel<Rational>::make(to_rational(lift_residues(model.P())),
                                            to_rational(lift_residues(model.Q())));
}

HyperellipticModel<Rational> lift_to_integers(const HyperellipticModel<Gf>& model) {
  if (model.zero().degree() != 1) throw DomainError("extension-field coefficients cannot be lifted to the integers");
  auto lift = [](const Poly<Gf>& f) {
    return map_coefficients(f, Rational(0), [](const Gf& c) { return Rational(Integer(c.coefficients()[0])); });
  };
  return HyperellipticModel<Rational>::make(lift(model.P()), lift(model.Q()));
}

namespace {

std::optional<HyperellipticModel<Fp>> reduce_checked(const Poly<Fp>& P, const Poly<Fp>& Q) {
  if (!is_smooth(P, Q)) return std::nullopt;
  return HyperellipticModel<Fp>::make(P, Q);
}

}  // namespace

std::optional<HyperellipticModel<Fp>> reduce_mod_p(const HyperellipticModel<Rational>& model, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  return reduce_checked(reduce_mod(model.P(), p), reduce_mod(model.Q(), p));
}

std::optional<HyperellipticModel<Fp>> reduce_mod_p(const IntegerModel& model, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  return reduce_checked(reduce_mod(model.P, p), reduce_mod(model.Q, p));
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

CurveFile parse_curve(const std::string& text) {
  CurveFile out;
  bool have_char = false, have_p = false;
  out.Q = Poly<Rational>(Rational(0));
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw DomainError("malformed curve line: '" + line + "'");
    const std::string key = trim(line.substr(0, colon));
    const std::string value = trim(line.substr(colon + 1));
    if (key == "char") {
      Integer c = parse_integer(value);
      if (sgn(c) < 0 || !c.fits_ulong_p()) throw DomainError("invalid characteristic '" + value + "'");
      out.characteristic = c.get_ui();
      if (out.characteristic != 0 && !is_prime(out.characteristic))
        throw DomainError("characteristic " + value + " is not prime");
      have_char = true;
    } else if (key == "P") {
      out.P = parse_poly_rational(value);
      have_p = true;
    } else if (key == "Q") {
      out.Q = parse_poly_rational(value);
    } else {
      throw DomainError("unknown curve key '" + key + "'");
    }
  }
  if (!have_char || !have_p) throw DomainError("curve file needs 'char:' and 'P:' lines");
  return out;
}

CurveFile load_curve(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read curve file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_curve(buf.str());
}

std::string format_curve(const CurveFile& curve) {
  std::string q = curve.Q.is_zero() ? "0" : to_csv(curve.Q);
  return "char: " + std::to_string(curve.characteristic) + "\nP: " + to_csv(curve.P) + "\nQ: " + q + "\n";
}

}  // namespace hyptorsion
