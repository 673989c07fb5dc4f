#ifndef HYPTORSION_TORSION_HPP
#define HYPTORSION_TORSION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hyptorsion/divpoly.hpp"

namespace hyptorsion {

struct TorsionOptions {
  unsigned threads = 1;
  std::size_t max_subdets = 0;  // 0: no cap
  // Mod p: when the cap stops the gcd early, keep only the roots that pass the rank criterion.
  bool refine_capped = true;
};

// U~_N with bookkeeping. K is Rational (char 0) or Fp.
template <class K>
struct TorsionLocus {
  int N = 0;
  int genus = 0;
  std::uint64_t characteristic = 0;
  Poly<K> utilde;
  std::vector<SubdetIndex> subdets_used;
  bool delta_vanished = false;  // Pi at the leftmost tuple is zero
  bool below_range = false;     // 3 <= N <= 2g
  // False when max_subdets stopped the gcd before it became constant or
  // exhausted S_0 and no refinement ran; utilde is then a multiple of the true locus.
  bool exhaustive = true;
};

// Needs seq.n_max() >= N-1 when N >= 2g+1.
TorsionLocus<Rational> utilde(const SSequence& seq, int N, const TorsionOptions& options = {});
// Throws NotSmooth when the model is singular mod p.
TorsionLocus<Fp> utilde(const SSequence& seq, int N, std::uint64_t p, const TorsionOptions& options = {});

// Divisor of a squarefree multiple of U~_(N,p), prime to F, keeping the roots where
// M_N drops rank; equals U~_(N,p).
Poly<Fp> refine_by_rank(const SSequence& seq, int N, const Poly<Fp>& multiple);

// Number of affine points in X meet J~[N]: twice the degree of U~_N.
template <class K>
long count_tilde(const TorsionLocus<K>& locus) {
  return 2L * locus.utilde.degree();
}

// epsilon_(r,g) = (g - floor((r+1)/2)) (floor(r/2) + 1)
long epsilon(int r, int g);

struct BoundReport {
  int g = 0;
  int N = 0;
  std::optional<long> delta_bound;     // delta_(N,g), N >= 2g+1
  std::optional<long> separable_bound;  // 2 delta / g, valid when p = 0 or p >= N
  std::optional<long> worst_bound;     // N >= 2g+1
  long general_bound = 0;              // on #(X meet J[N]), N >= 3
  bool inseparable_branch = false;
  std::vector<long> epsilon_row;       // r = 0..2g-2
};

// p = 0 for characteristic zero; purely_inseparable only matters when p > 0.
BoundReport bounds(int g, int N, std::uint64_t p = 0, bool purely_inseparable = false);

// floor((4g sum j - 2g mu(mu+1)) / (N - j_last)), valid when Pi_j != 0.
long subdet_count_bound(int g, int N, const SubdetIndex& j);

struct DivisibilityReport {
  int N = 0;
  int r = 0;
  long epsilon = 0;
  int utilde_degree = 0;
  int delta_degree = -1;  // -1 when Delta_(N+r) = 0
  bool vacuous = false;
  bool passed = false;
};

// U~_N^epsilon divides Delta_(N+r); needs seq.n_max() >= N+r-1.
DivisibilityReport divisibility_check(const SSequence& seq, int N, int r, std::uint64_t p = 0,
                                      const TorsionOptions& options = {});

struct RankReport {
  std::size_t rank = 0;
  bool is_torsion_x = false;
};

// rank of M_N(x0); throws CriterionInapplicable when F(x0) = 0.
template <class X>
RankReport rank_at(const SSequence& seq, int N, const X& x0);

}  // namespace hyptorsion

#endif
