#include "hyptorsion/torsion.hpp"

#include <cstdlib>

#include "hyptorsion/parallel.hpp"

namespace hyptorsion {

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HYPTORSION_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

namespace {

Poly<Integer> ring_gcd(const Poly<Integer>& a, const Poly<Integer>& b) { return primitive_gcd(a, b); }
Poly<Fp> ring_gcd(const Poly<Fp>& a, const Poly<Fp>& b) { return gcd(a, b); }

Poly<Rational> to_field(const Poly<Integer>& f) { return to_rational(f); }
Poly<Fp> to_field(const Poly<Fp>& f) { return f; }

template <class R, class K>
TorsionLocus<K> utilde_impl(const SSequence& seq, int N, const R& like, std::uint64_t p, const TorsionOptions& options) {
  if (N < 3) throw DomainError("utilde needs N >= 3");
  const int g = seq.genus();
  TorsionLocus<K> out;
  out.N = N;
  out.genus = g;
  out.characteristic = p;
  const K one = to_field(Poly<R>::constant(one_like(like))).leading();
  if (N <= 2 * g) {
    out.utilde = Poly<K>::constant(one);
    out.below_range = true;
    return out;
  }
  if (seq.n_max() < N - 1)
    throw DomainError("s-sequence computed to " + std::to_string(seq.n_max()) + ", need " + std::to_string(N - 1));
  const SValues<R> values(seq, like);
  const std::vector<SubdetIndex> indices = subdet_indices(g, N);
  const unsigned threads = std::max(1u, options.threads);

  Poly<R> acc(zero_like(like));
  bool have = false, finished = false;
  std::size_t used_after_nonzero = 0;
  for (std::size_t pos = 0; pos < indices.size() && !finished; pos += threads) {
    const std::size_t count = std::min<std::size_t>(threads, indices.size() - pos);
    std::vector<Poly<R>> pis = parallel_map<Poly<R>>(
        count, threads, [&](std::size_t i) { return pi_subdet(values, N, indices[pos + i]); });
    for (std::size_t i = 0; i < count; ++i) {
      out.subdets_used.push_back(indices[pos + i]);
      const Poly<R>& pi = pis[i];
      if (pos + i == 0 && pi.is_zero()) out.delta_vanished = true;
      if (have) ++used_after_nonzero;
      if (!pi.is_zero()) {
        acc = have ? ring_gcd(acc, pi) : pi;
        if (!have) used_after_nonzero = 1;
        have = true;
        if (acc.degree() == 0) {
          finished = true;
          break;
        }
      }
      if (have && options.max_subdets > 0 && used_after_nonzero >= options.max_subdets) {
        out.exhaustive = pos + i + 1 == indices.size();
        finished = true;
        break;
      }
    }
  }
  if (!have) throw TheoremViolation("every subdeterminant of M_" + std::to_string(N) + " vanishes");
  const Poly<K> F = to_field(values.F());
  const Poly<K> h = prime_to(to_field(acc), F);
  out.utilde = h.degree() <= 0 ? Poly<K>::constant(one) : squarefree_part(h);
  return out;
}

template <class X, class Eval>
RankReport rank_with(const SSequence& seq, int N, const X& x0, Eval at_x0) {
  const MuNu mn = mu_nu(seq.genus(), N);
  if (seq.n_max() < N - 1) throw DomainError("s-sequence too short for M_N");
  const X Fx = at_x0(seq.model().F);
  if (is_zero(Fx)) throw CriterionInapplicable("F(x0) = 0: 2-torsion locus, criterion inapplicable");
  const int lo = mn.nu - mn.mu;
  std::vector<X> sv(static_cast<std::size_t>(N), zero_like(x0));
  for (int n = lo; n <= N - 1; ++n) sv[n] = at_x0(seq.s(n));
  const int cols = mn.mu + seq.genus();
  Matrix<X> M(static_cast<std::size_t>(mn.mu) + 1, static_cast<std::size_t>(cols), zero_like(x0));
  for (int i = 0; i <= mn.mu; ++i)
    for (int c = 0; c < cols; ++c) {
      const int m = mn.nu + c;
      X acc = zero_like(x0);
      X Fl = one_like(x0);
      for (int l = 0; l <= i; ++l) {
        Integer b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(l));
        acc = acc + from_integer(x0, b) * pow(x0, static_cast<unsigned long>(i - l)) * Fl * sv[m - l];
        Fl = Fl * Fx;
      }
      M(i, c) = acc;
    }
  RankReport out;
  out.rank = rank(std::move(M));
  out.is_torsion_x = out.rank < static_cast<std::size_t>(mn.mu) + 1;
  return out;
}

}  // namespace

Poly<Fp> refine_by_rank(const SSequence& seq, int N, const Poly<Fp>& multiple) {
  const Fp zero = multiple.zero();
  const std::uint64_t p = zero.modulus();
  Poly<Fp> out = Poly<Fp>::constant(one_like(zero));
  for (const Poly<Fp>& h : irreducible_factors(multiple)) {
    bool torsion = false;
    if (h.degree() == 1) {
      torsion = rank_at(seq, N, -h[0]).is_torsion_x;
    } else {
      std::vector<std::uint64_t> m;
      for (const Fp& c : h.coefficients()) m.push_back(c.value());
      const FieldRef field = field_from_modulus(p, m);
      // s_n(t) in F_p[t]/(h) from the residue of s_n mod h
      auto at_root = [&](const Poly<Integer>& f) {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(h.degree()), 0);
        const Poly<Fp> r = reduce_mod(f, p) % h;
        for (int i = 0; i <= r.degree(); ++i) c[static_cast<std::size_t>(i)] = r[i].value();
        return Gf(field, c);
      };
      torsion = rank_with(seq, N, Gf::generator(field), at_root).is_torsion_x;
    }
    if (torsion) out *= h;
  }
  return out;
}

TorsionLocus<Rational> utilde(const SSequence& seq, int N, const TorsionOptions& options) {
  return utilde_impl<Integer, Rational>(seq, N, Integer(0), 0, options);
}

TorsionLocus<Fp> utilde(const SSequence& seq, int N, std::uint64_t p, const TorsionOptions& options) {
  if (!reduce_mod_p(seq.model(), p)) throw NotSmooth("the model is singular mod " + std::to_string(p));
  TorsionLocus<Fp> out = utilde_impl<Fp, Fp>(seq, N, Fp(0, p), p, options);
  if (!out.exhaustive && options.refine_capped && out.utilde.degree() > 0) {
    out.utilde = refine_by_rank(seq, N, out.utilde);
    out.exhaustive = true;
  }
  return out;
}

long epsilon(int r, int g) {
  if (r < 0 || r > 2 * g - 2) throw DomainError("epsilon needs 0 <= r <= 2g-2");
  return static_cast<long>(g - (r + 1) / 2) * (r / 2 + 1);
}

BoundReport bounds(int g, int N, std::uint64_t p, bool purely_inseparable) {
  if (g < 1 || N < 3) throw DomainError("bounds need g >= 1 and N >= 3");
  BoundReport out;
  out.g = g;
  out.N = N;
  const long G = g, n = N;
  if (N >= 2 * g + 1) {
    out.delta_bound = delta_degree(g, N);
    if (p == 0 || p >= static_cast<std::uint64_t>(N)) out.separable_bound = 2 * *out.delta_bound / G;
    out.worst_bound = n % 2 == 0 ? G * (n * n - 4 * G * G) : G * (n * n - (2 * G - 1) * (2 * G - 1));
  }
  bool power_of_p = false;
  if (p > 1) {
    std::uint64_t m = static_cast<std::uint64_t>(N - 1);
    while (m % p == 0) m /= p;
    power_of_p = m == 1;
  }
  out.inseparable_branch = purely_inseparable && power_of_p;
  if (out.inseparable_branch)
    out.general_bound = (N == 3 && p == 2) ? 25 * G : G * (n + 1) * (n + 1);
  else
    out.general_bound = G * (n - 1) * (n - 1);
  for (int r = 0; r <= 2 * g - 2; ++r) out.epsilon_row.push_back(epsilon(r, g));
  return out;
}

long subdet_count_bound(int g, int N, const SubdetIndex& j) {
  const long mu = static_cast<long>(j.size()) - 1;
  long sum = 0;
  for (int v : j) sum += v;
  pi_degree_bound(g, N, j);  // validates j
  return (4L * g * sum - 2L * g * mu * (mu + 1)) / (N - j.back());
}

namespace {

template <class R, class K>
DivisibilityReport divisibility_impl(const SSequence& seq, int N, int r, const R& like, const TorsionLocus<K>& locus) {
  DivisibilityReport out;
  out.N = N;
  out.r = r;
  out.epsilon = epsilon(r, seq.genus());
  out.utilde_degree = locus.utilde.degree();
  const SValues<R> values(seq, like);
  const Poly<K> d = to_field(delta(values, N + r));
  if (d.is_zero()) {
    out.vacuous = true;
    out.passed = true;
    return out;
  }
  out.delta_degree = d.degree();
  Poly<K> rest = d;
  out.passed = true;
  for (long k = 0; k < out.epsilon && out.passed; ++k) {
    auto [q, rem] = divrem(rest, locus.utilde);
    if (!rem.is_zero()) out.passed = false;
    rest = std::move(q);
  }
  return out;
}

}  // namespace

DivisibilityReport divisibility_check(const SSequence& seq, int N, int r, std::uint64_t p,
                                      const TorsionOptions& options) {
  mu_nu(seq.genus(), N);
  if (seq.n_max() < N + r - 1) throw DomainError("s-sequence too short for Delta_(N+r)");
  if (p == 0) return divisibility_impl(seq, N, r, Integer(0), utilde(seq, N, options));
  return divisibility_impl(seq, N, r, Fp(0, p), utilde(seq, N, p, options));
}

template <class X>
RankReport rank_at(const SSequence& seq, int N, const X& x0) {
  return rank_with(seq, N, x0, [&](const Poly<Integer>& f) { return evaluate(f, x0); });
}

template RankReport rank_at(const SSequence&, int, const Rational&);
template RankReport rank_at(const SSequence&, int, const Fp&);
template RankReport rank_at(const SSequence&, int, const Gf&);

}  // namespace hyptorsion
