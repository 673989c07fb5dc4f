#include "hyptorsion/divpoly.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace hyptorsion {

namespace {

Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer power_of_two(long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

Integer binomial(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// sum_l C(i,l) x^(i-l) F^l s_(m-l)
template <class R, class SFn>
Poly<R> expand_entry(const Poly<R>& F, int i, int m, SFn s) {
  const R& zero = F.zero();
  Poly<R> acc(zero);
  Poly<R> Fl = Poly<R>::constant(one_like(zero));
  for (int l = 0; l <= i; ++l) {
    Poly<R> term = shift_up(Fl * s(m - l), i - l);
    acc += term * from_integer(zero, binomial(i, l));
    Fl = Fl * F;
  }
  return acc;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string sequence_key(const IntegerModel& model, int n_max) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(
                    fnv1a(to_csv(model.P) + "|" + to_csv(model.Q) + "|" + std::to_string(n_max))));
  return buf;
}

}  // namespace

// ---- SSequence ----

SSequence::SSequence(IntegerModel model, int n_max) : model_(std::move(model)) {
  if (n_max < model_.genus + 1) throw DomainError("n_max must be at least g+1");
  t_.push_back(Poly<Integer>::constant(Integer(1)));
  s_.emplace_back(Integer(0));
  extend(n_max);
}

void SSequence::extend(int n_max) {
  const Poly<Integer>& F = model_.F;
  const Poly<Integer> dF = derivative(F);
  while (this->n_max() < n_max) {
    const int n = this->n_max();
    const Poly<Integer>& T = t_.back();
    Poly<Integer> next = derivative(T) * F * Integer(2) + T * dF * Integer(1 - 2 * n);
    t_.push_back(std::move(next));
    const int k = n + 1;
    if (k <= model_.genus) {
      s_.emplace_back(Integer(0));
      continue;
    }
    const Integer d = power_of_two(k + 1) * factorial(k);
    s_.push_back(map_coefficients(t_.back(), Integer(0), [&](const Integer& c) {
      if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
        throw TheoremViolation("s_" + std::to_string(k) + " is not integral");
      return Integer(c / d);
    }));
  }
}

void SSequence::check_index(int n) const {
  if (n <= model_.genus || n > n_max())
    throw DomainError("s_" + std::to_string(n) + " outside (g, n_max] = (" + std::to_string(model_.genus) + ", " +
                      std::to_string(n_max()) + "]");
}

const Poly<Integer>& SSequence::s(int n) const {
  check_index(n);
  return s_[n];
}

const Poly<Integer>& SSequence::scaled(int n) const {
  if (n < 0 || n > n_max()) throw DomainError("T_" + std::to_string(n) + " outside [0, n_max]");
  return t_[n];
}

Poly<Rational> SSequence::r_tilde(int n) const {
  return to_rational(scaled(n)) * Rational(Integer(1), power_of_two(n + 1));
}

Poly<Integer> SSequence::entry(int i, int m) const {
  if (i < 0 || m - i <= model_.genus) throw DomainError("s_{i,m} needs m - i > g");
  check_index(m);
  return expand_entry(model_.F, i, m, [&](int n) -> const Poly<Integer>& { return s(n); });
}

std::string SSequence::cache_key() const { return sequence_key(model_, n_max()); }

void SSequence::save(std::ostream& out) const {
  out << "sseq 1\nP: " << to_csv(model_.P) << "\nQ: " << to_csv(model_.Q) << "\nn_max: " << n_max() << "\n";
  for (const auto& t : t_) out << to_csv(t) << "\n";
}

SSequence SSequence::load(std::istream& in, const IntegerModel& model) {
  std::string header, p_line, q_line, n_line;
  if (!std::getline(in, header) || header != "sseq 1") throw DomainError("not an s-sequence cache file");
  std::getline(in, p_line);
  std::getline(in, q_line);
  std::getline(in, n_line);
  if (p_line != "P: " + to_csv(model.P) || q_line != "Q: " + to_csv(model.Q))
    throw DomainError("cache file belongs to another model");
  if (n_line.rfind("n_max: ", 0) != 0) throw DomainError("malformed cache header");
  const int n_max = std::stoi(n_line.substr(7));
  SSequence seq(model);
  std::string line;
  for (int n = 0; n <= n_max; ++n) {
    if (!std::getline(in, line)) throw DomainError("truncated cache file");
    Poly<Integer> t = line.empty() ? Poly<Integer>(Integer(0)) : parse_poly_integer(line);
    if (n == 0) {
      seq.t_.push_back(std::move(t));
      seq.s_.emplace_back(Integer(0));
      continue;
    }
    seq.t_.push_back(std::move(t));
    if (n <= model.genus) {
      seq.s_.emplace_back(Integer(0));
      continue;
    }
    const Integer d = power_of_two(n + 1) * factorial(n);
    seq.s_.push_back(map_coefficients(seq.t_.back(), Integer(0), [&](const Integer& c) { return exact_quotient(c, d); }));
  }
  // spot check of the stored recursion
  SSequence fresh(model, model.genus + 1);
  if (!(fresh.scaled(model.genus + 1) == seq.scaled(model.genus + 1))) throw DomainError("cache file is corrupt");
  return seq;
}

SSequence cached_sequence(const IntegerModel& model, int n_max, const std::string& cache_dir) {
  if (cache_dir.empty()) return SSequence(model, n_max);
  namespace fs = std::filesystem;
  const std::string key = sequence_key(model, n_max);
  const fs::path path = fs::path(cache_dir) / ("sseq-" + key + ".txt");
  if (fs::exists(path)) {
    std::ifstream in(path);
    try {
      return SSequence::load(in, model);
    } catch (const DomainError&) {
      // fall through and rebuild
    }
  }
  SSequence seq(model, n_max);
  fs::create_directories(cache_dir);
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    seq.save(out);
  }
  fs::rename(tmp, path);
  return seq;
}

// ---- SValues ----

template <class R>
SValues<R>::SValues(const SSequence& seq, const R& like)
    : genus_(seq.genus()), n_max_(seq.n_max()), F_(lift_poly(seq.model().F, like)) {
  s_.reserve(static_cast<std::size_t>(n_max_) + 1);
  for (int n = 0; n <= n_max_; ++n)
    s_.push_back(n <= genus_ ? Poly<R>(zero_like(like)) : lift_poly(seq.s(n), like));
}

template <class R>
const Poly<R>& SValues<R>::s(int n) const {
  if (n <= genus_ || n > n_max_) throw DomainError("s_" + std::to_string(n) + " outside the computed range");
  return s_[n];
}

template <class R>
Poly<R> SValues<R>::entry(int i, int m) const {
  if (i < 0 || m - i <= genus_) throw DomainError("s_{i,m} needs m - i > g");
  return expand_entry(F_, i, m, [&](int n) -> const Poly<R>& { return s(n); });
}

// ---- subdeterminants ----

std::vector<SubdetIndex> subdet_indices(int g, int N) {
  const MuNu mn = mu_nu(g, N);
  const int k = mn.mu + 1;
  std::vector<SubdetIndex> out;
  SubdetIndex j(k);
  for (int i = 0; i < k; ++i) j[i] = mn.nu + i;
  // colex successor: bump the first entry that can move, reset the ones before it
  while (true) {
    out.push_back(j);
    int i = 0;
    while (i < k && j[i] + 1 == (i + 1 < k ? j[i + 1] : N)) ++i;
    if (i == k) break;
    ++j[i];
    for (int r = 0; r < i; ++r) j[r] = mn.nu + r;
  }
  return out;
}

SubdetIndex leftmost_index(int g, int N) {
  const MuNu mn = mu_nu(g, N);
  SubdetIndex j(static_cast<std::size_t>(mn.mu) + 1);
  for (int i = 0; i <= mn.mu; ++i) j[i] = mn.nu + i;
  return j;
}

namespace {

void check_subdet_index(int g, int N, const SubdetIndex& j) {
  const MuNu mn = mu_nu(g, N);
  bool ok = static_cast<int>(j.size()) == mn.mu + 1;
  for (std::size_t i = 0; ok && i < j.size(); ++i) {
    if (j[i] < mn.nu || j[i] > N - 1) ok = false;
    if (i > 0 && j[i] <= j[i - 1]) ok = false;
  }
  if (!ok) throw DomainError("invalid subdeterminant index tuple");
}

template <class R>
void check_range(const SValues<R>& values, int N) {
  if (values.n_max() < N - 1)
    throw DomainError("s-sequence computed to " + std::to_string(values.n_max()) + ", need " + std::to_string(N - 1));
}

}  // namespace

template <class R>
Matrix<Poly<R>> build_M(const SValues<R>& values, int N) {
  const MuNu mn = mu_nu(values.genus(), N);
  check_range(values, N);
  const int cols = mn.mu + values.genus();
  Matrix<Poly<R>> M(static_cast<std::size_t>(mn.mu) + 1, static_cast<std::size_t>(cols), Poly<R>(values.zero()));
  for (int i = 0; i <= mn.mu; ++i)
    for (int c = 0; c < cols; ++c) M(i, c) = values.entry(i, mn.nu + c);
  return M;
}

template <class R>
Poly<R> sigma_det(const SValues<R>& values, int N, const SubdetIndex& j) {
  check_subdet_index(values.genus(), N, j);
  check_range(values, N);
  const std::size_t k = j.size();
  Matrix<Poly<R>> S(k, k, Poly<R>(values.zero()));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l) S(i, l) = values.entry(static_cast<int>(i), j[l]);
  return determinant(std::move(S));
}

template <class R>
Poly<R> pi_subdet(const SValues<R>& values, int N, const SubdetIndex& j) {
  check_subdet_index(values.genus(), N, j);
  check_range(values, N);
  const std::size_t k = j.size();
  Matrix<Poly<R>> S(k, k, Poly<R>(values.zero()));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l) S(i, l) = values.s(j[l] - static_cast<int>(i));
  return determinant(std::move(S));
}

template <class R>
Poly<R> gamma(const SValues<R>& values, int N) {
  return sigma_det(values, N, leftmost_index(values.genus(), N));
}

template <class R>
Poly<R> delta(const SValues<R>& values, int N) {
  const MuNu mn = mu_nu(values.genus(), N);
  const unsigned long k = static_cast<unsigned long>(mn.mu) * static_cast<unsigned long>(mn.mu + 1) / 2;
  Poly<R> d = exact_div(gamma(values, N), pow(values.F(), k));
  if (!(d == pi_subdet(values, N, leftmost_index(values.genus(), N))))
    throw TheoremViolation("Delta_" + std::to_string(N) + " differs between the two determinant routes");
  return d;
}

#define HYPTORSION_INSTANTIATE(R)                                                    \
  template class SValues<R>;                                                         \
  template Matrix<Poly<R>> build_M(const SValues<R>&, int);                          \
  template Poly<R> sigma_det(const SValues<R>&, int, const SubdetIndex&);            \
  template Poly<R> pi_subdet(const SValues<R>&, int, const SubdetIndex&);            \
  template Poly<R> gamma(const SValues<R>&, int);                                    \
  template Poly<R> delta(const SValues<R>&, int);

HYPTORSION_INSTANTIATE(Integer)
HYPTORSION_INSTANTIATE(Fp)
#undef HYPTORSION_INSTANTIATE

int cantor_sign(int g, int N) {
  const MuNu mn = mu_nu(g, N);
  const long e = static_cast<long>(1 - N / 2) * (mn.mu + 1) + (mn.mu + 1) / 2;
  return (e % 2 == 0) ? 1 : -1;
}

// ---- closed forms ----

Integer cmn(long m, long n) {
  Integer r = 1;
  for (long k = 0; k < n; ++k) r *= Integer(m - 2 * k);
  return r;
}

long delta_degree(int g, int N) {
  mu_nu(g, N);
  const long G = g, n = N;
  return n % 2 == 0 ? G * (n + 2) * (n - 2 * G) / 2 : G * (n + 1) * (n - 2 * G + 1) / 2;
}

long gamma_degree(int g, int N) {
  const MuNu mn = mu_nu(g, N);
  const long G = g, n = N, nu = mn.nu, mu = mn.mu;
  return G * ((n - G) * (n - G + 1) - nu * (nu - 1)) + mu * (mu + 1) / 2;
}

namespace {

Rational leading_without_two(int g, const MuNu& mn) {
  Integer num = 1, den = 1;
  for (int i = 1; i <= mn.mu + 1; ++i) num *= cmn(2 * g + 2 * i - 1, mn.nu);
  for (int j = 1; j <= mn.mu + 1; ++j) {
    num *= factorial(j - 1);
    den *= factorial(mn.nu + j - 1);
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

Rational gamma_leading(int g, int N) {
  const MuNu mn = mu_nu(g, N);
  return leading_without_two(g, mn) * Rational(power_of_two(static_cast<long>(mn.nu + mn.mu - 1) * (mn.mu + 1)));
}

Rational delta_leading(int g, int N) {
  const MuNu mn = mu_nu(g, N);
  return leading_without_two(g, mn) * Rational(power_of_two(static_cast<long>(mn.nu - 1) * (mn.mu + 1)));
}

long r_tilde_degree(int g, int n) { return 2L * g * n; }

Integer r_tilde_leading(int g, int n) {
  if (n < 1) throw DomainError("r_tilde_leading needs n >= 1");
  return power_of_two(n - 1) * cmn(2 * g + 1, n);
}

long sigma_degree_bound(int g, int N, const SubdetIndex& j) {
  check_subdet_index(g, N, j);
  const long mu = static_cast<long>(j.size()) - 1;
  long sum = 0;
  for (int v : j) sum += v;
  return 2L * g * sum + mu * (mu + 1) / 2;
}

long pi_degree_bound(int g, int N, const SubdetIndex& j) {
  check_subdet_index(g, N, j);
  const long mu = static_cast<long>(j.size()) - 1;
  long sum = 0;
  for (int v : j) sum += v;
  return 2L * g * sum - g * mu * (mu + 1);
}

Matrix<Rational> leading_matrix(int g, int N) {
  const MuNu mn = mu_nu(g, N);
  const int cols = mn.mu + g;
  Matrix<Rational> L(static_cast<std::size_t>(mn.mu) + 1, static_cast<std::size_t>(cols), Rational(0));
  for (int i = 0; i <= mn.mu; ++i)
    for (int c = 0; c < cols; ++c) {
      const long n = mn.nu + c;
      Rational v(power_of_two(n - 1) * cmn(2 * (g + i) + 1, n), factorial(n));
      v.canonicalize();
      L(i, c) = v;
    }
  return L;
}

}  // namespace hyptorsion
