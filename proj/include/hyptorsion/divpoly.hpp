#ifndef HYPTORSION_DIVPOLY_HPP
#define HYPTORSION_DIVPOLY_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "hyptorsion/curve.hpp"
#include "hyptorsion/matrix.hpp"
#include "hyptorsion/poly.hpp"

namespace hyptorsion {

// s_n for g < n <= n_max over Z, driven by the scaled recursion
// T_0 = 1, T_{n+1} = 2 T_n' F + (1-2n) T_n F', with r~_n = T_n / 2^(n+1)
// and s_n = r~_n / n!.
class SSequence {
 public:
  SSequence(IntegerModel model, int n_max);

  const IntegerModel& model() const { return model_; }
  int genus() const { return model_.genus; }
  int n_max() const { return static_cast<int>(t_.size()) - 1; }

  // Throws TheoremViolation when some s_n is not integral.
  void extend(int n_max);

  const Poly<Integer>& s(int n) const;
  const Poly<Integer>& scaled(int n) const;  // T_n
  Poly<Rational> r_tilde(int n) const;
  // s_{i,m} = sum_l C(i,l) x^(i-l) F^l s_(m-l); needs m - i > g.
  Poly<Integer> entry(int i, int m) const;

  // Content key of (P, Q, n_max) for the on-disk cache.
  std::string cache_key() const;
  void save(std::ostream& out) const;
  static SSequence load(std::istream& in, const IntegerModel& model);

 private:
  SSequence(IntegerModel model) : model_(std::move(model)) {}
  void check_index(int n) const;
  IntegerModel model_;
  std::vector<Poly<Integer>> t_;
  std::vector<Poly<Integer>> s_;  // empty for n <= g
};

// Loads from cache_dir when a matching file exists, otherwise computes and stores.
SSequence cached_sequence(const IntegerModel& model, int n_max, const std::string& cache_dir);

// The s-values mapped into R (Integer or Fp), with F alongside.
template <class R>
class SValues {
 public:
  SValues(const SSequence& seq, const R& like);

  int genus() const { return genus_; }
  int n_max() const { return n_max_; }
  const Poly<R>& F() const { return F_; }
  const R& zero() const { return F_.zero(); }
  const Poly<R>& s(int n) const;
  Poly<R> entry(int i, int m) const;

 private:
  int genus_, n_max_;
  Poly<R> F_;
  std::vector<Poly<R>> s_;
};

// Strictly increasing column indices nu <= j_1 < ... < j_(mu+1) <= N-1.
using SubdetIndex = std::vector<int>;

// All of S_0 in colexicographic order, leftmost tuple first.
std::vector<SubdetIndex> subdet_indices(int g, int N);
SubdetIndex leftmost_index(int g, int N);

// (mu+1) x (mu+g) matrix with entry (i, c) = s_(i, nu+c).
template <class R>
Matrix<Poly<R>> build_M(const SValues<R>& values, int N);

// det Sigma_j: columns j of M_N.
template <class R>
Poly<R> sigma_det(const SValues<R>& values, int N, const SubdetIndex& j);

// Pi_j = det S_j with S_j(i, l) = s_(j_l - i).
template <class R>
Poly<R> pi_subdet(const SValues<R>& values, int N, const SubdetIndex& j);

template <class R>
Poly<R> gamma(const SValues<R>& values, int N);

// Gamma / F^(mu(mu+1)/2), cross-checked against Pi at the leftmost tuple.
template <class R>
Poly<R> delta(const SValues<R>& values, int N);

// Sign relating Delta_N to Cantor's P_(N-g+1).
int cantor_sign(int g, int N);

template <class R>
Poly<R> cantor_P(const SValues<R>& values, int N) {
  Poly<R> d = delta(values, N);
  return cantor_sign(values.genus(), N) < 0 ? -d : d;
}

// ---- closed forms ----

// C_(m,n) = prod_(r<n) (m - 2r)
Integer cmn(long m, long n);

long delta_degree(int g, int N);
Rational delta_leading(int g, int N);
long gamma_degree(int g, int N);
Rational gamma_leading(int g, int N);
long r_tilde_degree(int g, int n);
Integer r_tilde_leading(int g, int n);
long sigma_degree_bound(int g, int N, const SubdetIndex& j);
long pi_degree_bound(int g, int N, const SubdetIndex& j);

// Leading-coefficient matrix of M_N: entry (i, c) = 2^(nu+c-1) C_(2(g+i)+1, nu+c) / (nu+c)!
// at degree 2g(nu+c) + i, rows i = 0..mu.
Matrix<Rational> leading_matrix(int g, int N);

}  // namespace hyptorsion

#endif
