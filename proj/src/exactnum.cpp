#include "hyptorsion/exactnum.hpp"

#include <algorithm>
#include <sstream>

#include "hyptorsion/poly.hpp"

namespace hyptorsion {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  Integer z(std::to_string(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

std::uint64_t mod_ui(const Integer& n, std::uint64_t p) {
  return mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(p));
}

// ---- Fp ----

Fp Fp::from_signed(std::int64_t value, std::uint64_t p) {
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  return Fp(static_cast<std::uint64_t>(r), p);
}

Fp Fp::inverse() const {
  if (v_ == 0) throw DomainError("inverse of zero");
  std::int64_t a = static_cast<std::int64_t>(v_), m = static_cast<std::int64_t>(p_);
  std::int64_t x0 = 1, x1 = 0;
  while (m != 0) {
    std::int64_t q = a / m;
    std::int64_t t = a - q * m;
    a = m;
    m = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return from_signed(x0, p_);
}

// ---- Gf ----

bool same_field(const FieldRef& a, const FieldRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->p == b->p && a->k == b->k && a->modulus == b->modulus;
}

Gf::Gf(FieldRef field) : field_(std::move(field)), c_(static_cast<std::size_t>(field_->k), 0) {}

Gf::Gf(FieldRef field, std::vector<std::uint64_t> coeffs) : field_(std::move(field)) {
  const std::uint64_t p = field_->p;
  const int k = field_->k;
  for (auto& c : coeffs) c %= p;
  const auto& m = field_->modulus;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= k; --i) {
    std::uint64_t t = coeffs[i];
    if (t == 0) continue;
    for (int j = 0; j < k; ++j) {
      std::uint64_t s = t * m[j] % p;
      auto& c = coeffs[i - k + j];
      c = c >= s ? c - s : c + p - s;
    }
    coeffs[i] = 0;
  }
  coeffs.resize(static_cast<std::size_t>(k), 0);
  c_ = std::move(coeffs);
}

Gf Gf::constant(FieldRef field, std::uint64_t c) {
  Gf r(std::move(field));
  r.c_[0] = c % r.field_->p;
  return r;
}

Gf Gf::generator(FieldRef field) {
  if (field->k == 1) return Gf(field, {field->p - field->modulus[0]});
  Gf r(std::move(field));
  r.c_[1] = 1;
  return r;
}

bool Gf::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint64_t c) { return c == 0; });
}

void Gf::check_same(const Gf& o) const {
  if (!same_field(field_, o.field_)) throw DomainError("finite-field elements from different fields");
}

Gf& Gf::operator+=(const Gf& o) {
  check_same(o);
  const std::uint64_t p = field_->p;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    c_[i] += o.c_[i];
    if (c_[i] >= p) c_[i] -= p;
  }
  return *this;
}

Gf& Gf::operator-=(const Gf& o) {
  check_same(o);
  const std::uint64_t p = field_->p;
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] >= o.c_[i] ? c_[i] - o.c_[i] : c_[i] + p - o.c_[i];
  return *this;
}

Gf& Gf::operator*=(const Gf& o) {
  check_same(o);
  const std::uint64_t p = field_->p;
  const std::size_t k = c_.size();
  if (k == 1) {
    c_[0] = c_[0] * o.c_[0] % p;
    return *this;
  }
  constexpr std::size_t kStack = 64;
  std::uint64_t stack_buf[2 * kStack];
  std::vector<std::uint64_t> heap_buf;
  std::uint64_t* r = stack_buf;
  if (k > kStack) {
    heap_buf.resize(2 * k);
    r = heap_buf.data();
  }
  for (std::size_t t = 0; t + 1 < 2 * k; ++t) {
    unsigned __int128 acc = 0;
    std::size_t lo = t >= k ? t - k + 1 : 0, hi = std::min(t, k - 1);
    for (std::size_t i = lo; i <= hi; ++i) acc += c_[i] * o.c_[t - i];
    r[t] = static_cast<std::uint64_t>(acc % p);
  }
  const auto& m = field_->modulus;
  for (std::size_t i = 2 * k - 1; i-- > k;) {
    std::uint64_t t = r[i];
    if (t == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      std::uint64_t s = t * m[j] % p;
      std::uint64_t& c = r[i - k + j];
      c = c >= s ? c - s : c + p - s;
    }
  }
  for (std::size_t i = 0; i < k; ++i) c_[i] = r[i];
  return *this;
}

Gf Gf::operator-() const {
  Gf r = *this;
  const std::uint64_t p = field_->p;
  for (auto& c : r.c_) c = c == 0 ? 0 : p - c;
  return r;
}

Gf Gf::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  Integer q = field_order(*this);
  return pow(*this, Integer(q - 2));
}

// ---- FieldSpec ----

FieldSpec FieldSpec::finite(FieldRef field) {
  FieldSpec s;
  s.field_ = std::move(field);
  return s;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) { return make_extension(p, 1); }

FieldSpec::Kind FieldSpec::kind() const {
  if (!field_) return Kind::rationals;
  return field_->k == 1 ? Kind::prime_field : Kind::ext_field;
}

std::string FieldSpec::describe() const {
  if (!field_) return "Q";
  if (field_->k == 1) return "F_" + std::to_string(field_->p);
  std::ostringstream os;
  os << "F_" << field_->p << "^" << field_->k << " = F_" << field_->p << "[t]/(";
  std::vector<Fp> m;
  for (auto c : field_->modulus) m.emplace_back(c, field_->p);
  os << to_string(Poly<Fp>(m, Fp(0, field_->p)), "t") << ")";
  return os.str();
}

namespace {

bool irreducible(const Poly<Fp>& f, std::uint64_t p) {
  const int k = f.degree();
  const Poly<Fp> x = Poly<Fp>::x(f.zero());
  Integer pz(std::to_string(p));
  std::vector<int> prime_divisors;
  for (int r = 2, n = k; n > 1; ++r) {
    if (n % r == 0) {
      prime_divisors.push_back(r);
      while (n % r == 0) n /= r;
    }
  }
  // x^(p^i) mod f for i = 1..k
  std::vector<Poly<Fp>> frob(static_cast<std::size_t>(k) + 1, Poly<Fp>(f.zero()));
  frob[0] = x;
  for (int i = 1; i <= k; ++i) frob[i] = powmod(frob[i - 1], pz, f);
  if (!(frob[k] == x % f)) return false;
  for (int r : prime_divisors) {
    if (gcd(frob[k / r] - x, f).degree() > 0) return false;
  }
  return true;
}

// Smallest non-square and smallest trace-one element in canonical order.
void fill_special_elements(FiniteField& field) {
  auto view = std::make_shared<FiniteField>(field);
  const Gf like(view);
  const Integer& q = field.order;
  for (Integer idx = 1; idx < q; ++idx) {
    Gf e = element_at(like, idx);
    if (field.trace_one.empty() && !is_zero(absolute_trace(e))) field.trace_one = e.coefficients();
    if (field.nonresidue.empty() && field.p != 2 && !is_one(pow(e, Integer((q - 1) / 2))))
      field.nonresidue = e.coefficients();
    if (!field.trace_one.empty() && (field.p == 2 || !field.nonresidue.empty())) break;
  }
}

}  // namespace

FieldRef extension_field(std::uint64_t p, int k) {
  if (!is_prime(p)) throw DomainError("make_extension: " + std::to_string(p) + " is not prime");
  if (p >= (1ULL << 32)) throw DomainError("make_extension: characteristic must be below 2^32");
  if (k < 1) throw DomainError("make_extension: degree must be positive");
  auto field = std::make_shared<FiniteField>();
  field->p = p;
  field->k = k;
  mpz_ui_pow_ui(field->order.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
  if (k == 1) {
    field->modulus = {0, 1};
    fill_special_elements(*field);
    return field;
  }
  const Fp zero(0, p);
  std::vector<std::uint64_t> digits(static_cast<std::size_t>(k), 0);
  while (true) {
    std::vector<Fp> coeffs;
    for (auto d : digits) coeffs.emplace_back(d, p);
    coeffs.emplace_back(1, p);
    Poly<Fp> f(coeffs, zero);
    if (digits[0] != 0 && irreducible(f, p)) {
      field->modulus = digits;
      field->modulus.push_back(1);
      fill_special_elements(*field);
      return field;
    }
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
    if (i == digits.size()) throw TheoremViolation("no irreducible polynomial found");
  }
}

FieldSpec make_extension(std::uint64_t p, int k) { return FieldSpec::finite(extension_field(p, k)); }

FieldRef field_from_modulus(std::uint64_t p, const std::vector<std::uint64_t>& modulus) {
  if (!is_prime(p) || p >= (1ULL << 32)) throw DomainError("field_from_modulus: bad characteristic");
  if (modulus.size() < 3 || modulus.back() != 1) throw DomainError("field_from_modulus: need a monic modulus of degree >= 2");
  std::vector<Fp> coeffs;
  for (auto c : modulus) {
    if (c >= p) throw DomainError("field_from_modulus: coefficient out of range");
    coeffs.emplace_back(c, p);
  }
  if (!irreducible(Poly<Fp>(coeffs, Fp(0, p)), p)) throw DomainError("field_from_modulus: modulus is reducible");
  auto field = std::make_shared<FiniteField>();
  field->p = p;
  field->k = static_cast<int>(modulus.size()) - 1;
  field->modulus = modulus;
  mpz_ui_pow_ui(field->order.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(field->k));
  fill_special_elements(*field);
  return field;
}

// ---- scalar helpers ----

Rational inverse(const Rational& a) {
  if (sgn(a) == 0) throw DomainError("inverse of zero");
  return 1 / a;
}

Integer exact_quotient(const Integer& a, const Integer& b) {
  if (sgn(b) == 0) throw DomainError("integer division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) throw TheoremViolation("non-exact integer division");
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer field_order(const Fp& a) { return Integer(std::to_string(a.modulus())); }

Integer field_order(const Gf& a) { return a.field()->order; }

Integer canonical_index(const Fp& a) { return Integer(std::to_string(a.value())); }

Integer canonical_index(const Gf& a) {
  Integer idx = 0;
  Integer p(std::to_string(a.characteristic()));
  const auto& c = a.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) idx = idx * p + Integer(std::to_string(c[i]));
  return idx;
}

Fp element_at(const Fp& like, const Integer& index) { return from_integer(like, index); }

Gf element_at(const Gf& like, const Integer& index) {
  std::vector<std::uint64_t> c;
  Integer n = index;
  const unsigned long p = static_cast<unsigned long>(like.characteristic());
  for (int i = 0; i < like.degree(); ++i) {
    c.push_back(mpz_fdiv_q_ui(n.get_mpz_t(), n.get_mpz_t(), p));
  }
  return Gf(like.field(), std::move(c));
}

Rational frobenius(const Rational&) { throw DomainError("frobenius: the rationals have characteristic 0"); }
Fp frobenius(const Fp& a) { return a; }
Gf frobenius(const Gf& a) { return pow(a, static_cast<unsigned long>(a.characteristic())); }
Fp pth_root(const Fp& a) { return a; }

Gf pth_root(const Gf& a) {
  Gf r = a;
  for (int i = 1; i < a.degree(); ++i) r = frobenius(r);
  return r;
}

Fp absolute_trace(const Fp& a) { return a; }

Fp absolute_trace(const Gf& a) {
  Gf sum = a, t = a;
  for (int i = 1; i < a.degree(); ++i) {
    t = frobenius(t);
    sum += t;
  }
  return Fp(sum.coefficients()[0], a.characteristic());
}

Gf embed_scalar(const Fp& a, const FieldRef& field) {
  if (a.modulus() != field->p) throw DomainError("embedding between different characteristics");
  return Gf::constant(field, a.value());
}

bool canonical_less(const Integer& a, const Integer& b) { return a < b; }
bool canonical_less(const Rational& a, const Rational& b) { return a < b; }
bool canonical_less(const Fp& a, const Fp& b) { return a.value() < b.value(); }
bool canonical_less(const Gf& a, const Gf& b) {
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
}

// ---- square roots and quadratics ----

std::optional<Rational> square_root(const Rational& a) {
  if (sgn(a) < 0) return std::nullopt;
  const mpz_srcptr num = a.get_num_mpz_t();
  const mpz_srcptr den = a.get_den_mpz_t();
  if (!mpz_perfect_square_p(num) || !mpz_perfect_square_p(den)) return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num);
  mpz_sqrt(rd.get_mpz_t(), den);
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

namespace {

Fp nonresidue_like(const Fp& a) {
  const std::uint64_t p = a.modulus();
  for (std::uint64_t v = 2; v < p; ++v)
    if (!is_one(pow(Fp(v, p), static_cast<unsigned long>((p - 1) / 2)))) return Fp(v, p);
  return Fp(0, p);
}
Gf nonresidue_like(const Gf& a) { return Gf(a.field(), a.field()->nonresidue); }
Fp trace_one_like(const Fp& a) { return Fp(1, a.modulus()); }
Gf trace_one_like(const Gf& a) { return Gf(a.field(), a.field()->trace_one); }

template <class T>
std::optional<T> finite_square_root(const T& a) {
  if (is_zero(a)) return a;
  const Integer q = field_order(a);
  if (characteristic(a) == 2) return pow(a, Integer(q / 2));
  const T one = one_like(a);
  if (!(pow(a, Integer((q - 1) / 2)) == one)) return std::nullopt;
  Integer t = q - 1;
  unsigned long s = 0;
  while (mpz_even_p(t.get_mpz_t())) {
    t /= 2;
    ++s;
  }
  T z = nonresidue_like(a);
  unsigned long m = s;
  T c = pow(z, t);
  T tt = pow(a, t);
  T r = pow(a, Integer((t + 1) / 2));
  while (!(tt == one)) {
    unsigned long i = 0;
    T sq = tt;
    while (!(sq == one)) {
      sq = sq * sq;
      ++i;
    }
    T b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b;
    m = i;
    c = b * b;
    tt = tt * c;
    r = r * b;
  }
  return r;
}

template <class T>
std::vector<T> sorted_unique(std::vector<T> v) {
  std::sort(v.begin(), v.end(), [](const T& x, const T& y) { return canonical_less(x, y); });
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

template <class T>
std::vector<T> odd_quadratic(const T& a, const T& b, const T& c) {
  T disc = b * b - from_int(a, 4) * a * c;
  auto s = square_root(disc);
  if (!s) return {};
  T two_a = from_int(a, 2) * a;
  return sorted_unique(std::vector<T>{(-b + *s) / two_a, (-b - *s) / two_a});
}

// Solves z^2 + z = c over F_{2^k}, trace(c) = 0 assumed.
template <class T>
T artin_schreier_root(const T& c) {
  const int k = ext_degree(c);
  if (k % 2 == 1) {
    T h = c, term = c;
    for (int i = 1; i <= (k - 1) / 2; ++i) {
      term = frobenius(frobenius(term));
      h += term;
    }
    return h;
  }
  T tau = trace_one_like(c);
  T z = zero_like(c), partial = zero_like(c), cpow = c, tpow = tau;
  for (int i = 1; i < k; ++i) {
    partial += cpow;
    cpow = frobenius(cpow);
    tpow = frobenius(tpow);
    z += partial * tpow;
  }
  return z;
}

template <class T>
std::vector<T> finite_quadratic(const T& a, const T& b, const T& c) {
  if (is_zero(a)) throw DomainError("solve_quadratic: leading coefficient is zero");
  if (characteristic(a) != 2) return odd_quadratic(a, b, c);
  if (is_zero(b)) return {*finite_square_root(c / a)};
  T rhs = a * c / (b * b);
  if (!is_zero(absolute_trace(rhs))) return {};
  T z = artin_schreier_root(rhs);
  T scale = b / a;
  return sorted_unique(std::vector<T>{scale * z, scale * (z + one_like(z))});
}

}  // namespace

std::optional<Fp> square_root(const Fp& a) { return finite_square_root(a); }
std::optional<Gf> square_root(const Gf& a) { return finite_square_root(a); }

std::vector<Rational> solve_quadratic(const Rational& a, const Rational& b, const Rational& c) {
  if (sgn(a) == 0) throw DomainError("solve_quadratic: leading coefficient is zero");
  return odd_quadratic(a, b, c);
}
std::vector<Fp> solve_quadratic(const Fp& a, const Fp& b, const Fp& c) { return finite_quadratic(a, b, c); }
std::vector<Gf> solve_quadratic(const Gf& a, const Gf& b, const Gf& c) { return finite_quadratic(a, b, c); }

// ---- text ----

std::string to_text(const Integer& a) { return a.get_str(); }
std::string to_text(const Rational& a) { return a.get_str(); }
std::string to_text(const Fp& a) { return std::to_string(a.value()) + " mod " + std::to_string(a.modulus()); }
std::string to_text(const Gf& a) {
  std::string s;
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a.coefficients()[i]);
  }
  return s;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Integer parse_integer(const std::string& text) {
  std::string t = trim(text);
  if (!t.empty() && t[0] == '+') t = t.substr(1);
  Integer z;
  if (t.empty() || z.set_str(t, 10) != 0) throw DomainError("malformed integer: '" + text + "'");
  return z;
}

Rational parse_rational(const std::string& text) {
  std::string t = trim(text);
  auto slash = t.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(t));
  Integer num = parse_integer(t.substr(0, slash));
  Integer den = parse_integer(t.substr(slash + 1));
  if (sgn(den) == 0) throw DomainError("zero denominator: '" + text + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Fp parse_fp(const std::string& text, std::uint64_t p) {
  std::string t = trim(text);
  auto pos = t.find("mod");
  if (pos != std::string::npos) {
    Integer m = parse_integer(t.substr(pos + 3));
    if (m != Integer(std::to_string(p))) throw DomainError("residue modulus mismatch: '" + text + "'");
    t = t.substr(0, pos);
  }
  Rational q = parse_rational(t);
  Fp den = from_integer(Fp(0, p), q.get_den());
  if (is_zero(den)) throw DomainError("denominator divisible by p: '" + text + "'");
  return from_integer(Fp(0, p), q.get_num()) / den;
}

Gf parse_gf(const std::string& text, const FieldRef& field) {
  std::vector<std::uint64_t> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) c.push_back(mod_ui(parse_integer(item), field->p));
  if (c.empty() || static_cast<int>(c.size()) > field->k) throw DomainError("malformed field element: '" + text + "'");
  return Gf(field, std::move(c));
}

}  // namespace hyptorsion
