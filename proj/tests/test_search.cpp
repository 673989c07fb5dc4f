#include "doctest.h"
#include "hyptorsion/search.hpp"
#include "support.hpp"

using namespace hyptorsion;
using namespace testing_support;

namespace {

IntegerModel model_of(const std::string& P, const std::string& Q) {
  return integer_model(HyperellipticModel<Rational>::make(parse_poly_rational(P), parse_poly_rational(Q)));
}

IntegerModel random_model(std::mt19937_64& rng, int g, long bound) {
  return random_integer_model(rng, g, bound);
}

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("factor_integer") {
    auto f = factor_integer(Integer(-360));
    REQUIRE(f.primes.size() == 3);
    CHECK(f.primes[0] == std::make_pair(Integer(2), 3));
    CHECK(f.primes[1] == std::make_pair(Integer(3), 2));
    CHECK(f.primes[2] == std::make_pair(Integer(5), 1));
    CHECK(f.complete());
    CHECK(factor_integer(Integer(1)).primes.empty());
    CHECK_THROWS_AS(factor_integer(Integer(0)), DomainError);

    // two primes above the trial bound: only rho separates them
    const Integer p("1000000007"), q("998244353");
    auto g = factor_integer(p * p * q, 1000);
    REQUIRE(g.primes.size() == 2);
    CHECK(g.primes[0] == std::make_pair(q, 1));
    CHECK(g.primes[1] == std::make_pair(p, 2));
    auto h = factor_integer(Integer(12) * p * q, 1000, false);
    CHECK(h.cofactor == p * q);
    CHECK(!h.complete());

    std::mt19937_64 rng(9);
    for (int t = 0; t < 30; ++t) {
      Integer n = 1;
      for (int k = 0; k < 4; ++k) n *= random_integer(rng, 2, 100000);
      auto r = factor_integer(n, 500);
      Integer back = r.cofactor;
      for (const auto& [pr, e] : r.primes) {
        CHECK(mpz_probab_prime_p(pr.get_mpz_t(), 30) > 0);
        for (int i = 0; i < e; ++i) back *= pr;
      }
      CHECK(back == n);
      CHECK(r.complete());
    }
  }

  TEST_CASE("rational_reconstruction") {
    const Integer m = Integer("1000000007") * Integer("998244353");
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
      Rational x(random_integer(rng, -20000, 20000), random_integer(rng, 1, 20000));
      x.canonicalize();
      Integer inv;
      Integer den(x.get_den());
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
      Integer r = Integer(x.get_num()) * inv % m;
      if (r < 0) r += m;
      auto back = rational_reconstruction(r, m);
      REQUIRE(back.has_value());
      CHECK(*back == x);
    }
    CHECK(!rational_reconstruction(Integer(3), Integer(11)).has_value());
  }

  TEST_CASE("reduction_scan on y^2 + y = x^5") {
    SSequence ex1(model_of("x^5", "1"), 9);
    auto entries = reduction_scan(ex1, 3, 9, {3, 5, 7, 11});
    REQUIRE(entries.size() == 7);
    CHECK(entries[0].verdict == ScanVerdict::empty);  // N = 3 <= 2g
    CHECK(entries[1].verdict == ScanVerdict::empty);
    const ScanEntry& five = entries[2];
    CHECK(five.N == 5);
    CHECK(five.verdict == ScanVerdict::candidate);
    CHECK(std::find(five.skipped.begin(), five.skipped.end(), 5ULL) != five.skipped.end());
    CHECK(five.upper_bound == 6);
    REQUIRE(five.certified.size() == 2);
    CHECK(five.certified[0].x0 == "0");
    CHECK(!five.certified[0].witness);
    CHECK(five.certified[1].x0 == "1");
    CHECK(five.certified[1].witness);
    CHECK(!five.exact);
    for (int i = 3; i < 7; ++i) {
      CHECK(entries[i].verdict == ScanVerdict::empty);
      CHECK(entries[i].witness.has_value());
    }

    ScanOptions direct;
    direct.direct = true;
    auto d = reduction_scan(ex1, 5, 5, {3}, direct);
    CHECK(d[0].exact);
    CHECK(*d[0].utilde == parse_poly_rational("x^6 - x"));

    auto undecided = reduction_scan(ex1, 5, 5, {5});
    CHECK(undecided[0].verdict == ScanVerdict::undecided);
    CHECK(undecided[0].trials.empty());
    CHECK_THROWS_AS(reduction_scan(ex1, 5, 5, {4}), DomainError);
  }

  TEST_CASE("EMPTY verdicts are sound and monotone on random curves") {
    std::mt19937_64 rng(808);
    for (int t = 0; t < 6; ++t) {
      IntegerModel m = random_model(rng, 2, 4);
      SSequence seq(m, 8);
      auto few = reduction_scan(seq, 5, 9, {7});
      auto more = reduction_scan(seq, 5, 9, {7, 3, 11, 13});
      for (std::size_t i = 0; i < few.size(); ++i) {
        if (few[i].verdict == ScanVerdict::empty) CHECK(more[i].verdict == ScanVerdict::empty);
        if (more[i].verdict == ScanVerdict::empty) CHECK(utilde(seq, more[i].N).utilde.degree() == 0);
        if (more[i].exact && more[i].utilde) CHECK(*more[i].utilde == utilde(seq, more[i].N).utilde);
      }
    }
  }

  TEST_CASE("characteristic_search examples") {
    SSequence ex1(model_of("x^5", "1"), 7);
    auto r = characteristic_search(ex1, 7);
    CHECK(r.generic_locus == parse_poly_rational("1"));
    REQUIRE(r.exceptional_primes() == std::vector<Integer>{911});
    const ExceptionalPrime* c911 = nullptr;
    for (const auto& c : r.candidates)
      if (c.p == 911) c911 = &c;
    REQUIRE(c911 != nullptr);
    CHECK(*c911->locus == parse_poly_fp("x^5 - 433", 911));
    CHECK(c911->certificate->rows.size() == 5);
    CHECK(c911->certificate->all_passed());
    CHECK(r.factorization.complete());

    auto five = characteristic_search(ex1, 5);
    CHECK(five.generic_factor == parse_poly_rational("x^6 - x"));
    CHECK(five.resultant_gcd == 1);
    CHECK(five.exceptional_primes().empty());

    SSequence ex5(model_of("x^7", "1"), 6);
    auto s = characteristic_search(ex5, 7);
    CHECK(s.generic_factor == parse_poly_rational("x"));
    CHECK(s.generic_locus == parse_poly_rational("x"));
    CHECK(s.exceptional_primes() == std::vector<Integer>{13});
  }

  TEST_CASE("common roots of the remainders mod p divide the resultant gcd") {
    std::mt19937_64 rng(1212);
    int checked = 0;
    for (int t = 0; t < 4; ++t) {
      IntegerModel m = random_model(rng, 2, 3);
      SSequence seq(m, 7);
      for (int N : {7, 8}) {
        auto r = characteristic_search(seq, N, {TorsionOptions{}, 1000, false});
        if (r.resultant_gcd == 0 || r.remainders.size() < 2) continue;
        for (std::uint64_t p = 2; p <= 50; ++p) {
          if (!is_prime(p)) continue;
          Poly<Fp> common(Fp(0, p));
          for (const auto& rem : r.remainders) common = gcd(common, reduce_mod(rem, p));
          if (common.degree() > 0) {
            CHECK(mod_ui(r.resultant_gcd, p) == 0);
            ++checked;
          }
        }
      }
    }
    CHECK(checked > 0);
  }
}
