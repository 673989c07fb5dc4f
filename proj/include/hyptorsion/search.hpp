#ifndef HYPTORSION_SEARCH_HPP
#define HYPTORSION_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyptorsion/jacobian.hpp"
#include "hyptorsion/torsion.hpp"

namespace hyptorsion {

// ---- integer factorization ----

struct IntegerFactorization {
  std::vector<std::pair<Integer, int>> primes;  // ascending
  Integer cofactor = 1;                         // composite part left unfactored, 1 when complete
  bool complete() const { return cofactor == 1; }
};

// Trial division up to trial_bound, then Pollard rho (Brent) on what remains.
// Primality of large factors is decided by GMP's probabilistic test.
IntegerFactorization factor_integer(const Integer& n, std::uint64_t trial_bound = 1000000, bool use_rho = true);

// a/b with |a|, |b| <= sqrt(m/2) and a = r b mod m, when one exists.
std::optional<Rational> rational_reconstruction(const Integer& r, const Integer& m);

// ---- reduction scan ----

enum class ScanVerdict { empty, candidate, undecided };
std::string to_string(ScanVerdict v);

struct PrimeTrial {
  std::uint64_t p = 0;
  int locus_degree = 0;  // degree of a multiple of U~_(N,p)
  bool exhaustive = true;
};

struct ScanEntry {
  int N = 0;
  ScanVerdict verdict = ScanVerdict::undecided;
  std::optional<std::uint64_t> witness;  // prime with constant U~_(N,p)
  std::vector<PrimeTrial> trials;
  std::vector<std::uint64_t> skipped;  // p | N or bad reduction
  // Candidate follow-up: deg U~_N(Q) <= upper_bound; the certified rows are
  // rational roots of U~_N(Q). exact when their number reaches the bound.
  int upper_bound = -1;
  std::vector<CertificateRow> certified;
  bool exact = false;
  std::optional<Poly<Rational>> utilde;  // known when exact or computed directly
};

struct ScanOptions {
  TorsionOptions torsion;
  // Nonzero subdeterminants folded per prime; a capped gcd still bounds deg U~_(N,p).
  std::size_t subdets_per_prime = 4;
  bool follow_up = true;
  // Compute U~_N over Q directly for candidates left inexact.
  bool direct = false;
};

// Needs seq.n_max() >= n_to - 1.
std::vector<ScanEntry> reduction_scan(const SSequence& seq, int n_from, int n_to,
                                      const std::vector<std::uint64_t>& primes, const ScanOptions& options = {});

// ---- characteristic search ----

struct ExceptionalPrime {
  Integer p;
  bool confirmed = false;       // extra roots mod p, all certified by the Jacobian
  bool bad_reduction = false;
  bool out_of_range = false;    // too large for the prime-field arithmetic
  std::optional<Poly<Fp>> locus;  // U~_(N,p)
  std::optional<Poly<Fp>> extra;  // part of the locus not coming from the generic factor
  std::optional<Certificate> certificate;
};

struct CharacteristicSearch {
  int N = 0;
  Poly<Rational> generic_factor;  // gcd over Q of every Pi
  Poly<Rational> generic_locus;   // U~_N over Q
  std::vector<Poly<Integer>> remainders;  // Pi with the generic factor, F-part and content removed
  std::size_t resultant_pairs = 0;
  Integer resultant_gcd;  // 0 when every remainder pair shares a factor over Q
  std::optional<Poly<Rational>> common_remainder_factor;  // reported when resultant_gcd = 0
  IntegerFactorization factorization;
  std::vector<ExceptionalPrime> candidates;
  std::vector<Integer> exceptional_primes() const;
};

struct SearchOptions {
  TorsionOptions torsion;
  std::uint64_t trial_bound = 1000000;
  bool use_rho = true;
};

// Needs seq.n_max() >= N - 1.
CharacteristicSearch characteristic_search(const SSequence& seq, int N, const SearchOptions& options = {});

}  // namespace hyptorsion

#endif
