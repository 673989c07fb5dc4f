#include "hyptorsion/search.hpp"

#include <algorithm>
#include <limits>

#include "hyptorsion/parallel.hpp"

namespace hyptorsion {

// ---- integer factorization ----

namespace {

bool probable_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Brent's variant; returns a nontrivial factor or 0 on failure.
Integer rho_factor(const Integer& n, unsigned long seed) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  const Integer c = seed;
  auto step = [&](const Integer& v) {
    Integer w = v * v + c;
    mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
    return w;
  };
  Integer y = 2, x, ys, q = 1, d = 1;
  const unsigned long block = 128, limit = 1UL << 22;
  for (unsigned long r = 1; d == 1 && r <= limit; r *= 2) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = step(y);
    for (unsigned long k = 0; k < r && d == 1; k += block) {
      ys = y;
      for (unsigned long i = 0; i < std::min(block, r - k); ++i) {
        y = step(y);
        Integer diff = abs(x - y);
        q = q * diff;
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
    }
  }
  if (d == n) {
    do {
      ys = step(ys);
      Integer diff = abs(x - ys);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (d == 1);
  }
  return d == 1 || d == n ? Integer(0) : d;
}

void rho_split(const Integer& n, std::vector<Integer>& primes, std::vector<Integer>& stuck) {
  if (n == 1) return;
  if (probable_prime(n)) {
    primes.push_back(n);
    return;
  }
  for (unsigned long seed = 1; seed <= 8; ++seed) {
    const Integer d = rho_factor(n, seed);
    if (d != 0) {
      rho_split(d, primes, stuck);
      rho_split(Integer(n / d), primes, stuck);
      return;
    }
  }
  stuck.push_back(n);
}

}  // namespace

IntegerFactorization factor_integer(const Integer& n, std::uint64_t trial_bound, bool use_rho) {
  if (n == 0) throw DomainError("cannot factor 0");
  IntegerFactorization out;
  Integer m = abs(n);
  for (std::uint64_t d = 2; d <= trial_bound && Integer(d) * Integer(d) <= m; d += (d == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), d) == 0) continue;
    int e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), d) != 0) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
      ++e;
    }
    out.primes.emplace_back(Integer(d), e);
  }
  std::vector<Integer> found, stuck;
  if (m != 1) {
    if (probable_prime(m))
      found.push_back(m);
    else if (use_rho)
      rho_split(m, found, stuck);
    else
      stuck.push_back(m);
  }
  std::sort(found.begin(), found.end());
  for (const Integer& p : found) {
    if (!out.primes.empty() && out.primes.back().first == p)
      ++out.primes.back().second;
    else
      out.primes.emplace_back(p, 1);
  }
  for (const Integer& s : stuck) out.cofactor *= s;
  std::sort(out.primes.begin(), out.primes.end());
  return out;
}

std::optional<Rational> rational_reconstruction(const Integer& r, const Integer& m) {
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), Integer(m / 2).get_mpz_t());
  Integer r0 = m, r1 = r % m, s0 = 0, s1 = 1;
  if (r1 < 0) r1 += m;
  while (r1 > bound) {
    const Integer q = r0 / r1;
    Integer t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (s1 == 0 || abs(s1) > bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), s1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational out(r1, s1);
  out.canonicalize();
  return out;
}

// ---- reduction scan ----

std::string to_string(ScanVerdict v) {
  switch (v) {
    case ScanVerdict::empty: return "EMPTY";
    case ScanVerdict::candidate: return "CANDIDATE";
    case ScanVerdict::undecided: return "UNDECIDED";
  }
  return "UNDECIDED";
}

namespace {

constexpr std::size_t kMaxCombinations = 4096;

bool coprime_denominator(const Rational& x, std::uint64_t p) { return mod_ui(Integer(x.get_den()), p) != 0; }

// Rational numbers whose residues are roots of every chosen locus.
std::vector<Rational> crt_candidates(const std::vector<std::pair<std::uint64_t, Poly<Fp>>>& loci) {
  std::vector<std::pair<std::uint64_t, std::vector<Fp>>> roots;
  for (const auto& [p, f] : loci) roots.emplace_back(p, roots_in_field(f));
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.second.size() < b.second.size(); });
  if (roots.empty() || roots.front().second.empty()) return {};
  std::vector<std::pair<Integer, Integer>> partial = {{Integer(0), Integer(1)}};  // (residue, modulus)
  for (const auto& [p, rs] : roots) {
    if (partial.size() * rs.size() > kMaxCombinations) break;
    std::vector<std::pair<Integer, Integer>> next;
    for (const auto& [a, m] : partial)
      for (const Fp& r : rs) {
        // a + m t = r mod p
        const Fp t = (Fp(r.value(), p) - from_integer(r, a)) * from_integer(r, m).inverse();
        next.emplace_back(a + m * Integer(static_cast<unsigned long>(t.value())), m * Integer(static_cast<unsigned long>(p)));
      }
    partial = std::move(next);
  }
  std::vector<Rational> out;
  for (const auto& [a, m] : partial)
    if (auto x = rational_reconstruction(a, m)) {
      bool fits = true;
      for (const auto& [p, f] : loci)
        if (coprime_denominator(*x, p) && !is_zero(evaluate(f, Fp(mod_ui(Integer(x->get_num()), p), p) /
                                                            Fp(mod_ui(Integer(x->get_den()), p), p))))
          fits = false;
      if (fits && std::find(out.begin(), out.end(), *x) == out.end()) out.push_back(*x);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<CertificateRow> certify_rational(const SSequence& seq, int N, const Rational& x0,
                                               const std::vector<std::uint64_t>& witness_primes) {
  const IntegerModel& model = seq.model();
  if (is_zero(evaluate(to_rational(model.F), x0))) return std::nullopt;
  if (!rank_at(seq, N, x0).is_torsion_x) return std::nullopt;
  Jacobian<Rational> jac = jacobian_over(model, Rational(0));
  const auto ys = solve_quadratic(Rational(1), evaluate(jac.Q(), x0), -evaluate(jac.P(), x0));
  CertificateRow row;
  if (!ys.empty()) {
    const auto d = jac.embed_point(x0, ys.front());
    row.field = "Q";
    row.x0 = to_text(x0);
    row.y0 = to_text(ys.front());
    row.order_divides_N = jac.is_identity(jac.scalar_mul(d, Integer(N)));
    row.in_two_torsion = jac.is_identity(jac.scalar_mul(d, Integer(2)));
  } else {
    bool done = false;
    for (std::uint64_t p : witness_primes) {
      if (!coprime_denominator(x0, p)) continue;
      const Poly<Fp> linear = reduce_mod(Poly<Rational>(std::vector<Rational>{-x0, Rational(1)}, Rational(0)), p);
      Certificate c = certify_roots(model, linear, N);
      row = c.rows.front();
      row.witness = true;
      row.x0 = to_text(x0);
      done = true;
      break;
    }
    if (!done) return std::nullopt;
  }
  if (!row.passed())
    throw TheoremViolation("rank criterion and Jacobian disagree at x0 = " + to_text(x0) + ", N = " + std::to_string(N));
  return row;
}

void follow_up(const SSequence& seq, ScanEntry& entry, const std::vector<std::pair<std::uint64_t, Poly<Fp>>>& loci,
               const ScanOptions& options) {
  entry.upper_bound = std::numeric_limits<int>::max();
  std::vector<std::uint64_t> witness_primes;
  for (const auto& [p, f] : loci) {
    entry.upper_bound = std::min(entry.upper_bound, f.degree());
    witness_primes.push_back(p);
  }
  Poly<Rational> product = Poly<Rational>::constant(Rational(1));
  for (const Rational& x0 : crt_candidates(loci)) {
    if (auto row = certify_rational(seq, entry.N, x0, witness_primes)) {
      entry.certified.push_back(*row);
      product *= Poly<Rational>(std::vector<Rational>{-x0, Rational(1)}, Rational(0));
    }
  }
  if (static_cast<int>(entry.certified.size()) == entry.upper_bound) {
    entry.exact = true;
    entry.utilde = product;
  } else if (options.direct) {
    entry.utilde = utilde(seq, entry.N, options.torsion).utilde;
    entry.exact = true;
  }
  if (entry.exact && entry.utilde->degree() == 0) entry.verdict = ScanVerdict::empty;
}

}  // namespace

std::vector<ScanEntry> reduction_scan(const SSequence& seq, int n_from, int n_to,
                                      const std::vector<std::uint64_t>& primes, const ScanOptions& options) {
  const IntegerModel& model = seq.model();
  const int g = seq.genus();
  if (n_from < 3 || n_to < n_from) throw DomainError("scan range must satisfy 3 <= from <= to");
  for (std::uint64_t p : primes)
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  std::vector<bool> good;
  for (std::uint64_t p : primes) good.push_back(reduce_mod_p(model, p).has_value());

  std::vector<ScanEntry> out;
  for (int N = n_from; N <= n_to; ++N) {
    ScanEntry entry;
    entry.N = N;
    if (N <= 2 * g) {
      entry.verdict = ScanVerdict::empty;
      entry.exact = true;
      entry.utilde = Poly<Rational>::constant(Rational(1));
      out.push_back(entry);
      continue;
    }
    TorsionOptions capped = options.torsion;
    capped.max_subdets = options.subdets_per_prime;
    std::vector<std::pair<std::uint64_t, Poly<Fp>>> loci;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const std::uint64_t p = primes[i];
      if (!good[i] || N % static_cast<long>(p) == 0) {
        entry.skipped.push_back(p);
        continue;
      }
      const TorsionLocus<Fp> loc = utilde(seq, N, p, capped);
      entry.trials.push_back({p, loc.utilde.degree(), loc.exhaustive});
      if (loc.utilde.degree() == 0) {
        entry.verdict = ScanVerdict::empty;
        entry.witness = p;
        entry.exact = true;
        entry.utilde = Poly<Rational>::constant(Rational(1));
        break;
      }
      loci.emplace_back(p, loc.utilde);
    }
    if (entry.verdict != ScanVerdict::empty && !entry.trials.empty()) {
      entry.verdict = ScanVerdict::candidate;
      if (options.follow_up) follow_up(seq, entry, loci, options);
    }
    out.push_back(entry);
  }
  return out;
}

// ---- characteristic search ----

std::vector<Integer> CharacteristicSearch::exceptional_primes() const {
  std::vector<Integer> out;
  for (const auto& c : candidates)
    if (c.confirmed) out.push_back(c.p);
  return out;
}

namespace {

// Removes every irreducible factor shared with f.
Poly<Integer> strip_factors(Poly<Integer> r, const Poly<Integer>& f) {
  if (f.degree() <= 0) return r;
  for (Poly<Integer> h = primitive_gcd(r, f); h.degree() > 0; h = primitive_gcd(r, f)) r = exact_div(r, h);
  return r;
}

}  // namespace

CharacteristicSearch characteristic_search(const SSequence& seq, int N, const SearchOptions& options) {
  const IntegerModel& model = seq.model();
  const int g = seq.genus();
  mu_nu(g, N);
  if (seq.n_max() < N - 1) throw DomainError("s-sequence too short for M_" + std::to_string(N));
  const SValues<Integer> values(seq, Integer(0));
  const std::vector<SubdetIndex> indices = subdet_indices(g, N);
  const std::vector<Poly<Integer>> pis = parallel_map<Poly<Integer>>(
      indices.size(), resolve_threads(options.torsion.threads),
      [&](std::size_t i) { return pi_subdet(values, N, indices[i]); });

  CharacteristicSearch out;
  out.N = N;
  Poly<Integer> g0(Integer(0));
  bool have = false;
  for (const auto& pi : pis) {
    if (pi.is_zero()) continue;
    g0 = have ? primitive_gcd(g0, pi) : content_free(pi);
    have = true;
  }
  if (!have) throw TheoremViolation("every subdeterminant of M_" + std::to_string(N) + " vanishes");
  out.generic_factor = monic(to_rational(g0));
  const Poly<Rational> h = prime_to(out.generic_factor, to_rational(model.F));
  out.generic_locus = h.degree() <= 0 ? Poly<Rational>::constant(Rational(1)) : squarefree_part(h);

  for (const auto& pi : pis) {
    if (pi.is_zero()) continue;
    Poly<Integer> r = content_free(strip_factors(strip_factors(pi, g0), model.F));
    if (std::find(out.remainders.begin(), out.remainders.end(), r) == out.remainders.end()) out.remainders.push_back(r);
  }

  out.resultant_gcd = 0;
  for (std::size_t i = 0; i < out.remainders.size() && out.resultant_gcd != 1; ++i)
    for (std::size_t j = i + 1; j < out.remainders.size() && out.resultant_gcd != 1; ++j) {
      const Integer res = resultant(out.remainders[i], out.remainders[j]);
      if (res == 0) continue;
      ++out.resultant_pairs;
      mpz_gcd(out.resultant_gcd.get_mpz_t(), out.resultant_gcd.get_mpz_t(), res.get_mpz_t());
    }
  if (out.resultant_gcd == 0) {
    Poly<Integer> common(Integer(0));
    for (const auto& r : out.remainders) common = common.is_zero() ? r : primitive_gcd(common, r);
    if (!common.is_zero()) out.common_remainder_factor = monic(to_rational(common));
    return out;
  }

  out.factorization = factor_integer(out.resultant_gcd, options.trial_bound, options.use_rho);
  const Poly<Integer> generic_int = integer_primitive(out.generic_locus);
  for (const auto& [q, e] : out.factorization.primes) {
    ExceptionalPrime c;
    c.p = q;
    if (q > Integer(std::numeric_limits<std::uint32_t>::max())) {
      c.out_of_range = true;
      out.candidates.push_back(c);
      continue;
    }
    const std::uint64_t p = q.get_ui();
    if (!reduce_mod_p(model, p)) {
      c.bad_reduction = true;
      out.candidates.push_back(c);
      continue;
    }
    const Poly<Fp> locus = utilde(seq, N, p, options.torsion).utilde;
    const Poly<Fp> extra = exact_div(locus, gcd(locus, reduce_mod(generic_int, p)));
    c.locus = locus;
    c.extra = extra;
    if (extra.degree() > 0) {
      c.certificate = certify_roots(model, extra, N);
      c.confirmed = c.certificate->all_passed();
      if (!c.confirmed) throw TheoremViolation("extra roots mod " + std::to_string(p) + " fail Jacobian certification");
    }
    out.candidates.push_back(c);
  }
  return out;
}

}  // namespace hyptorsion
