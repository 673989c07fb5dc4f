#include "hyptorsion/poly.hpp"

#include <sstream>

namespace hyptorsion {

namespace detail {

std::vector<Integer> mul_schoolbook(const std::vector<Integer>& a, const std::vector<Integer>& b, const Integer&) {
  std::vector<Integer> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return out;
}

std::vector<Fp> mul_schoolbook(const std::vector<Fp>& a, const std::vector<Fp>& b, const Fp& zero) {
  const std::uint64_t p = zero.modulus();
  std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint64_t ai = a[i].value();
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += ai * b[j].value();
  }
  std::vector<Fp> out;
  out.reserve(acc.size());
  for (auto v : acc) out.emplace_back(static_cast<std::uint64_t>(v % p), p);
  return out;
}

}  // namespace detail

Poly<Integer> pseudo_remainder(const Poly<Integer>& a, const Poly<Integer>& b) {
  if (b.is_zero()) throw DomainError("pseudo_remainder by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> r = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  const Integer& lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Integer t = r[i];
    for (int j = 0; j < i; ++j) r[j] *= lb;
    r[i] = 0;
    if (sgn(t) != 0)
      for (int j = 0; j < db; ++j) mpz_submul(r[i - db + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
  }
  r.resize(static_cast<std::size_t>(db));
  return Poly<Integer>(std::move(r), Integer(0));
}

Integer content(const Poly<Integer>& f) {
  Integer g = 0;
  for (const auto& c : f.coefficients()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly<Integer> content_free(const Poly<Integer>& f) {
  if (f.is_zero()) return f;
  Integer c = content(f);
  if (sgn(f.leading()) < 0) c = -c;
  if (c == 1) return f;
  std::vector<Integer> v;
  for (const auto& x : f.coefficients()) v.push_back(exact_quotient(x, c));
  return Poly<Integer>(std::move(v), Integer(0));
}

Poly<Integer> primitive_gcd(const Poly<Integer>& a, const Poly<Integer>& b) {
  Poly<Integer> x = content_free(a), y = content_free(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  if (y.degree() > 0) {
    // coprime modulo a prime not dividing either leading coefficient means coprime over Q
    std::uint64_t p = 2147483647;
    while (!is_prime(p) || mod_ui(x.leading(), p) == 0 || mod_ui(y.leading(), p) == 0) --p;
    if (gcd(reduce_mod(x, p), reduce_mod(y, p)).degree() == 0) return Poly<Integer>::constant(Integer(1));
  }
  while (!y.is_zero()) {
    Poly<Integer> r = pseudo_remainder(x, y);
    x = std::move(y);
    y = content_free(r);
  }
  if (x.degree() == 0) return Poly<Integer>::constant(Integer(1));
  return x;
}

Poly<Rational> to_rational(const Poly<Integer>& f) {
  return map_coefficients(f, Rational(0), [](const Integer& c) { return Rational(c); });
}

Poly<Integer> integer_primitive(const Poly<Rational>& f) {
  Integer l = 1;
  for (const auto& c : f.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Poly<Integer> g = map_coefficients(f, Integer(0), [&](const Rational& c) {
    Integer v = l / Integer(c.get_den());
    return Integer(v * c.get_num());
  });
  return content_free(g);
}

Poly<Fp> reduce_mod(const Poly<Integer>& f, std::uint64_t p) {
  const Fp zero(0, p);
  return map_coefficients(f, zero, [&](const Integer& c) { return from_integer(zero, c); });
}

Poly<Fp> reduce_mod(const Poly<Rational>& f, std::uint64_t p) {
  const Fp zero(0, p);
  return map_coefficients(f, zero, [&](const Rational& c) {
    Fp den = from_integer(zero, c.get_den());
    if (is_zero(den)) throw DomainError("coefficient " + c.get_str() + " is not integral at " + std::to_string(p));
    return from_integer(zero, c.get_num()) / den;
  });
}

Poly<Integer> lift_residues(const Poly<Fp>& f) {
  return map_coefficients(f, Integer(0), [](const Fp& c) { return Integer(std::to_string(c.value())); });
}

// Subresultant algorithm; the standard Sylvester resultant, then the sign is
// adjusted to lc(g)^deg f * prod f(beta).
Integer resultant(const Poly<Integer>& f, const Poly<Integer>& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant of the zero polynomial");
  Poly<Integer> A = f, B = g;
  const int m = f.degree(), n = g.degree();
  if (m == 0 && n == 0) return 1;
  if (n == 0) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), g.leading().get_mpz_t(), static_cast<unsigned long>(m));
    return r;
  }
  if (m == 0) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), f.leading().get_mpz_t(), static_cast<unsigned long>(n));
    return r;
  }
  Integer a = content(A), b = content(B);
  A = content_free(A);
  B = content_free(B);
  if (sgn(f.leading()) < 0) a = -a;
  if (sgn(g.leading()) < 0) b = -b;
  Integer t, tb;
  mpz_pow_ui(t.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(B.degree()));
  mpz_pow_ui(tb.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(A.degree()));
  t *= tb;
  Integer gg = 1, h = 1;
  int s = 1;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if (A.degree() % 2 == 1 && B.degree() % 2 == 1) s = -1;
  }
  while (true) {
    const int delta = A.degree() - B.degree();
    if (A.degree() % 2 == 1 && B.degree() % 2 == 1) s = -s;
    Poly<Integer> R = pseudo_remainder(A, B);
    A = B;
    if (R.is_zero()) return 0;
    Integer hd;
    mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    Integer div = gg * hd;
    B = map_coefficients(R, Integer(0), [&](const Integer& c) { return exact_quotient(c, div); });
    gg = A.leading();
    if (delta >= 1) {
      Integer gd, hd1;
      mpz_pow_ui(gd.get_mpz_t(), gg.get_mpz_t(), static_cast<unsigned long>(delta));
      mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      h = exact_quotient(gd, hd1);
    }
    if (B.degree() == 0) break;
  }
  const int da = A.degree();
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), B.leading().get_mpz_t(), static_cast<unsigned long>(da));
  mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(da - 1));
  h = exact_quotient(num, den);
  Integer res = s * t * h;
  if ((m * n) % 2 == 1) res = -res;
  return res;
}

// ---- roots over finite fields ----

namespace {

template <class K>
void split_linear(const Poly<K>& h, std::vector<K>& out) {
  if (h.degree() <= 0) return;
  if (h.degree() == 1) {
    out.push_back(-h[0] / h[1]);
    return;
  }
  const K like = h.zero();
  const K one = one_like(like);
  const Integer q = field_order(like);
  const Poly<K> x = Poly<K>::x(like);
  const bool even = characteristic(like) == 2;
  for (Integer idx = even ? 1 : 0; idx < q; ++idx) {
    const K c = element_at(like, idx);
    Poly<K> w(like);
    if (!even) {
      w = powmod(x + Poly<K>::constant(c), Integer((q - 1) / 2), h) - Poly<K>::constant(one);
    } else {
      Poly<K> t = (x * c) % h;
      w = t;
      for (int i = 1; i < ext_degree(like); ++i) {
        t = (t * t) % h;
        w += t;
      }
    }
    Poly<K> d = gcd(h, w);
    if (d.degree() > 0 && d.degree() < h.degree()) {
      split_linear(d, out);
      split_linear(exact_div(h, d), out);
      return;
    }
  }
  throw TheoremViolation("equal-degree splitting found no separating element");
}

template <class K>
std::vector<K> roots_in_field_impl(const Poly<K>& f) {
  if (f.is_zero()) throw DomainError("roots of the zero polynomial");
  Poly<K> m = monic(f);
  std::vector<K> out;
  if (m.degree() <= 0) return out;
  const K like = f.zero();
  const Poly<K> x = Poly<K>::x(like);
  Poly<K> h = gcd(m, powmod(x, field_order(like), m) - x);
  split_linear(h, out);
  std::sort(out.begin(), out.end(), [](const K& a, const K& b) { return canonical_less(a, b); });
  return out;
}

template <class K>
std::map<int, std::vector<Gf>> roots_by_degree_impl(const Poly<K>& f, int max_deg) {
  if (f.is_zero()) throw DomainError("roots_by_degree of the zero polynomial");
  if (max_deg < 1) throw DomainError("roots_by_degree: max_deg must be positive");
  const K like = f.zero();
  const std::uint64_t p = characteristic(like);
  const int k = ext_degree(like);
  const Integer q = field_order(like);
  std::map<int, std::vector<Gf>> out;
  for (int d = 1; d <= max_deg; ++d) out[d] = {};
  Poly<K> rest = squarefree_part(f);
  const Poly<K> x = Poly<K>::x(like);
  if (rest.degree() < 1) return out;
  Poly<K> h = x % rest;
  for (int d = 1; d <= max_deg && rest.degree() >= d; ++d) {
    h = powmod(h, q, rest);
    Poly<K> g = gcd(rest, h - x);
    if (g.degree() <= 0) continue;
    FieldRef target = extension_field(p, d * k);
    out[d] = roots_in_field(embed_poly(g, target));
    rest = exact_div(rest, g);
    if (rest.degree() < 1) break;
    h = h % rest;
  }
  return out;
}

}  // namespace

template <class K>
std::vector<K> roots_in_field(const Poly<K>& f) {
  return roots_in_field_impl(f);
}
template std::vector<Fp> roots_in_field(const Poly<Fp>&);
template std::vector<Gf> roots_in_field(const Poly<Gf>&);

namespace {

// Polynomial of degree < n whose coefficients are the base-p digits of idx.
Poly<Fp> poly_at_index(std::uint64_t idx, std::uint64_t p, int n) {
  std::vector<Fp> c;
  for (int i = 0; i < n && idx > 0; ++i, idx /= p) c.emplace_back(idx % p, p);
  return Poly<Fp>(std::move(c), Fp(0, p));
}

// Splits a product of irreducibles of degree d (Cantor-Zassenhaus, deterministic element order).
void split_equal_degree(const Poly<Fp>& h, int d, std::vector<Poly<Fp>>& out) {
  if (h.degree() == d) {
    out.push_back(monic(h));
    return;
  }
  const std::uint64_t p = h.zero().modulus();
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  const Poly<Fp> one = Poly<Fp>::constant(Fp(1, p));
  for (std::uint64_t idx = p; ; ++idx) {
    const Poly<Fp> a = poly_at_index(idx, p, h.degree());
    if (a.degree() <= 0) continue;
    Poly<Fp> w(h.zero());
    if (p != 2) {
      w = powmod(a, Integer((q - 1) / 2), h) - one;
    } else {
      Poly<Fp> t = a % h;
      w = t;
      for (int i = 1; i < d; ++i) {
        t = (t * t) % h;
        w = w + t;
      }
    }
    const Poly<Fp> g = gcd(h, w);
    if (g.degree() > 0 && g.degree() < h.degree()) {
      split_equal_degree(g, d, out);
      split_equal_degree(exact_div(h, g), d, out);
      return;
    }
  }
}

}  // namespace

std::vector<Poly<Fp>> irreducible_factors(const Poly<Fp>& f) {
  if (f.is_zero()) throw DomainError("irreducible_factors of the zero polynomial");
  Poly<Fp> rest = monic(f);
  std::vector<Poly<Fp>> out;
  if (rest.degree() <= 0) return out;
  if (gcd(rest, derivative(rest)).degree() > 0) throw DomainError("irreducible_factors needs a squarefree polynomial");
  const std::uint64_t p = f.zero().modulus();
  const Poly<Fp> x = Poly<Fp>::x(f.zero());
  Poly<Fp> h = x % rest;
  for (int d = 1; rest.degree() >= 2 * d; ++d) {
    h = powmod(h, Integer(static_cast<unsigned long>(p)), rest);
    const Poly<Fp> g = gcd(rest, h - x);
    if (g.degree() <= 0) continue;
    std::vector<Poly<Fp>> part;
    split_equal_degree(g, d, part);
    std::sort(part.begin(), part.end(), [](const Poly<Fp>& a, const Poly<Fp>& b) {
      const auto& ca = a.coefficients();
      const auto& cb = b.coefficients();
      return std::lexicographical_compare(ca.rbegin(), ca.rend(), cb.rbegin(), cb.rend(),
                                          [](const Fp& u, const Fp& v) { return u.value() < v.value(); });
    });
    out.insert(out.end(), part.begin(), part.end());
    rest = exact_div(rest, g);
    h = h % rest;
  }
  if (rest.degree() > 0) out.push_back(rest);
  return out;
}

Embedding::Embedding(FieldRef from, FieldRef to) : from_(std::move(from)), to_(std::move(to)) {
  if (from_->p != to_->p || to_->k % from_->k != 0) throw DomainError("no embedding between these fields");
  Gf image = Gf::constant(to_, 0);
  if (from_->k > 1) {
    std::vector<Gf> m;
    for (auto c : from_->modulus) m.push_back(Gf::constant(to_, c));
    auto roots = roots_in_field(Poly<Gf>(m, Gf(to_)));
    if (roots.empty()) throw TheoremViolation("modulus has no root in the target field");
    image = roots.front();
  }
  Gf power = Gf::constant(to_, 1);
  for (int i = 0; i < from_->k; ++i) {
    powers_.push_back(power);
    power *= image;
  }
}

Gf Embedding::operator()(const Gf& a) const {
  if (!same_field(a.field(), from_)) throw DomainError("element outside the embedding's source field");
  Gf r(to_);
  for (int i = 0; i < from_->k; ++i) {
    std::uint64_t c = a.coefficients()[i];
    if (c != 0) r += Gf::constant(to_, c) * powers_[i];
  }
  return r;
}

Poly<Gf> embed_poly(const Poly<Fp>& f, const FieldRef& to) {
  return map_coefficients(f, Gf(to), [&](const Fp& c) { return embed_scalar(c, to); });
}

Poly<Gf> embed_poly(const Poly<Gf>& f, const FieldRef& to) {
  if (same_field(f.zero().field(), to)) return f;
  Embedding e(f.zero().field(), to);
  return map_coefficients(f, Gf(to), [&](const Gf& c) { return e(c); });
}

std::map<int, std::vector<Gf>> roots_by_degree(const Poly<Fp>& f, int max_deg) {
  return roots_by_degree_impl(f, max_deg);
}
std::map<int, std::vector<Gf>> roots_by_degree(const Poly<Gf>& f, int max_deg) {
  return roots_by_degree_impl(f, max_deg);
}

// ---- rational roots: Hensel lifting plus rational reconstruction ----

namespace {

Integer eval_mod(const Poly<Integer>& f, const Integer& a, const Integer& m) {
  Integer acc = 0;
  for (int i = f.degree(); i >= 0; --i) {
    acc = acc * a + f[i];
    mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
  }
  return acc;
}

bool reconstruct(const Integer& a, const Integer& m, Rational& out) {
  Integer bound;
  Integer half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  Integer r0 = m, r1 = a, s0 = 0, s1 = 1;
  mpz_fdiv_r(r1.get_mpz_t(), r1.get_mpz_t(), m.get_mpz_t());
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1, s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (sgn(s1) == 0 || abs(s1) > bound) return false;
  out = Rational(r1, s1);
  out.canonicalize();
  return true;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly<Integer>& f0) {
  if (f0.is_zero()) throw DomainError("rational_roots of the zero polynomial");
  std::vector<Rational> roots;
  Poly<Integer> f = content_free(f0);
  int shift = 0;
  while (shift <= f.degree() && sgn(f[shift]) == 0) ++shift;
  if (shift > 0) {
    roots.push_back(0);
    std::vector<Integer> v(f.coefficients().begin() + shift, f.coefficients().end());
    f = Poly<Integer>(std::move(v), Integer(0));
  }
  if (f.degree() >= 1) {
    Poly<Integer> g = integer_primitive(squarefree_part(to_rational(f)));
    Integer bmax = std::max(Integer(abs(g[0])), Integer(abs(g.leading())));
    Integer bound = 2 * bmax * bmax + 1;
    std::uint64_t p = 3;
    for (;; p += 2) {
      if (!is_prime(p)) continue;
      Poly<Fp> gp = reduce_mod(g, p);
      if (gp.degree() != g.degree()) continue;
      if (gcd(gp, derivative(gp)).degree() == 0) break;
    }
    const Integer pz(std::to_string(p));
    const Poly<Integer> dg = derivative(g);
    for (const Fp& r : roots_in_field(reduce_mod(g, p))) {
      Integer a(std::to_string(r.value())), m = pz;
      while (m < bound) {
        Integer m2 = m * m;
        Integer fv = eval_mod(g, a, m2), dv = eval_mod(dg, a, m2), inv;
        if (mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), m2.get_mpz_t()) == 0)
          throw TheoremViolation("Hensel lifting met a singular root");
        a = a - fv * inv;
        mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), m2.get_mpz_t());
        m = m2;
      }
      Rational cand;
      if (reconstruct(a, m, cand) && sgn(evaluate(g, cand)) == 0) roots.push_back(cand);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<Rational> rational_roots(const Poly<Rational>& f) {
  if (f.is_zero()) throw DomainError("rational_roots of the zero polynomial");
  return rational_roots(integer_primitive(f));
}

// ---- text ----

namespace {

struct Term {
  bool negative;
  std::string magnitude;  // empty when the magnitude is one
};

Term term_of(const Integer& c) {
  Integer a = abs(c);
  return {sgn(c) < 0, a == 1 ? "" : a.get_str()};
}
Term term_of(const Rational& c) {
  Rational a = abs(c);
  return {sgn(c) < 0, a == 1 ? "" : a.get_str()};
}
Term term_of(const Fp& c) { return {false, c.value() == 1 ? "" : std::to_string(c.value())}; }
Term term_of(const Gf& c) { return {false, is_one(c) ? "" : "(" + to_text(c) + ")"}; }

template <class R>
std::string human(const Poly<R>& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    if (is_zero(f[i])) continue;
    Term t = term_of(f[i]);
    if (first) {
      if (t.negative) os << "-";
    } else {
      os << (t.negative ? " - " : " + ");
    }
    first = false;
    std::string mag = t.magnitude;
    if (i == 0) {
      os << (mag.empty() ? "1" : mag);
      continue;
    }
    if (!mag.empty()) os << mag << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

template <class R, class Fn>
std::string csv(const Poly<R>& f, const std::string& sep, Fn fn) {
  std::string s;
  for (int i = 0; i <= f.degree(); ++i) {
    if (i) s += sep;
    s += fn(f[i]);
  }
  return s.empty() ? "0" : s;
}

std::string strip_spaces(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  return t;
}

}  // namespace

std::string to_string(const Poly<Integer>& f, const std::string& var) { return human(f, var); }
std::string to_string(const Poly<Rational>& f, const std::string& var) { return human(f, var); }
std::string to_string(const Poly<Fp>& f, const std::string& var) { return human(f, var); }
std::string to_string(const Poly<Gf>& f, const std::string& var) { return human(f, var); }

std::string to_csv(const Poly<Integer>& f) {
  return csv(f, ",", [](const Integer& c) { return c.get_str(); });
}
std::string to_csv(const Poly<Rational>& f) {
  return csv(f, ",", [](const Rational& c) { return c.get_str(); });
}
std::string to_csv(const Poly<Fp>& f) {
  return csv(f, ",", [](const Fp& c) { return std::to_string(c.value()); });
}
std::string to_csv(const Poly<Gf>& f) {
  return csv(f, ";", [](const Gf& c) { return to_text(c); });
}

Poly<Rational> parse_poly_rational(const std::string& text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw DomainError("empty polynomial text");
  std::vector<Rational> coeffs;
  if (s.find('x') == std::string::npos) {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(parse_rational(item));
    return Poly<Rational>(std::move(coeffs), Rational(0));
  }
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = pos + 1;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    pos = end;
    bool negative = false;
    while (!term.empty() && (term[0] == '+' || term[0] == '-')) {
      if (term[0] == '-') negative = !negative;
      term = term.substr(1);
    }
    if (term.empty()) throw DomainError("malformed polynomial: '" + text + "'");
    auto xpos = term.find('x');
    Rational c = 1;
    long e = 0;
    if (xpos == std::string::npos) {
      c = parse_rational(term);
    } else {
      std::string cs = term.substr(0, xpos);
      if (!cs.empty() && cs.back() == '*') cs.pop_back();
      if (!cs.empty()) c = parse_rational(cs);
      std::string es = term.substr(xpos + 1);
      if (es.empty()) {
        e = 1;
      } else if (es[0] == '^') {
        Integer ez = parse_integer(es.substr(1));
        if (sgn(ez) < 0 || ez > 1000000) throw DomainError("bad exponent in '" + text + "'");
        e = ez.get_si();
      } else {
        throw DomainError("malformed term '" + term + "'");
      }
    }
    if (negative) c = -c;
    if (coeffs.size() <= static_cast<std::size_t>(e)) coeffs.resize(static_cast<std::size_t>(e) + 1, Rational(0));
    coeffs[e] += c;
  }
  return Poly<Rational>(std::move(coeffs), Rational(0));
}

Poly<Integer> parse_poly_integer(const std::string& text) {
  Poly<Rational> f = parse_poly_rational(text);
  return map_coefficients(f, Integer(0), [&](const Rational& c) {
    if (c.get_den() != 1) throw DomainError("non-integer coefficient in '" + text + "'");
    return Integer(c.get_num());
  });
}

Poly<Fp> parse_poly_fp(const std::string& text, std::uint64_t p) { return reduce_mod(parse_poly_rational(text), p); }

}  // namespace hyptorsion
