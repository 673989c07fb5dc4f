#include "hyptorsion/cli.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hyptorsion/parallel.hpp"
#include "hyptorsion/search.hpp"
#include "json.hpp"

namespace hyptorsion::cli {

namespace {

using json = nlohmann::json;

struct Options {
  std::string curve, P, Q = "0";
  long long characteristic = -1;
  bool json = false;
  std::string cache_dir;
  unsigned threads = 0;
  int N = 0;
  int r = 0;
  std::string x0;
  int degree = 1;
  int genus = 0;
  bool inseparable = false;
  int n_from = 0, n_to = 0;
  std::vector<std::uint64_t> primes;
  bool direct = false;
  std::size_t subdets_per_prime = 4;
  std::size_t max_subdets = 0;
  std::uint64_t trial_bound = 1000000;
  bool no_rho = false;
};

struct Context {
  IntegerModel model;
  std::uint64_t p = 0;
};

Context load_context(const Options& o) {
  CurveFile file;
  if (!o.curve.empty()) {
    file = load_curve(o.curve);
  } else if (!o.P.empty()) {
    const long long c = std::max(o.characteristic, 0LL);
    file = parse_curve("char: " + std::to_string(c) + "\nP: " + o.P + "\nQ: " + o.Q + "\n");
  } else {
    throw CLI::ValidationError("curve", "give --curve FILE or --P/--Q");
  }
  Context ctx;
  ctx.p = o.characteristic >= 0 ? static_cast<std::uint64_t>(o.characteristic) : file.characteristic;
  if (file.characteristic != 0 && ctx.p != file.characteristic)
    throw DomainError("curve is defined in characteristic " + std::to_string(file.characteristic));
  if (ctx.p != 0 && !is_prime(ctx.p)) throw DomainError("characteristic must be 0 or a prime");
  if (file.characteristic == 0) {
    ctx.model = integer_model(HyperellipticModel<Rational>::make(file.P, file.Q));
    if (ctx.p != 0 && !reduce_mod_p(ctx.model, ctx.p))
      throw NotSmooth("the model is singular mod " + std::to_string(ctx.p));
  } else {
    const auto fp = HyperellipticModel<Fp>::make(reduce_mod(file.P, ctx.p), reduce_mod(file.Q, ctx.p));
    ctx.model = integer_model(lift_to_integers(fp));
  }
  return ctx;
}

SSequence sequence(const Context& ctx, const Options& o, int n_max) {
  n_max = std::max(n_max, ctx.model.genus + 1);
  if (!o.cache_dir.empty()) return cached_sequence(ctx.model, n_max, o.cache_dir);
  return SSequence(ctx.model, n_max);
}

TorsionOptions torsion_options(const Options& o) {
  TorsionOptions t;
  t.threads = resolve_threads(o.threads);
  t.max_subdets = o.max_subdets;
  return t;
}

std::string coefficient_text(const Integer& c) { return c.get_str(); }
std::string coefficient_text(const Rational& c) { return to_text(c); }
std::string coefficient_text(const Fp& c) { return std::to_string(c.value()); }

template <class R>
json poly_json(const Poly<R>& f) {
  json coeffs = json::array();
  for (const R& c : f.coefficients()) coeffs.push_back(coefficient_text(c));
  return {{"degree", f.degree()}, {"coefficients", coeffs}, {"text", to_string(f)}};
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

json row_json(const CertificateRow& r) {
  return {{"field", r.field},   {"x0_field_degree", r.x0_degree}, {"x0", r.x0},
          {"y0", r.y0},         {"order_divides_N", r.order_divides_N}, {"in_two_torsion", r.in_two_torsion},
          {"witness", r.witness}, {"passed", r.passed()}};
}

void print_row(std::ostream& out, const CertificateRow& r) {
  out << "  x0=" << r.x0 << " y0=" << r.y0 << " field=" << r.field << " x0_field_degree=" << r.x0_degree
      << " order_divides_N=" << (r.order_divides_N ? "true" : "false")
      << " in_two_torsion=" << (r.in_two_torsion ? "true" : "false") << (r.witness ? " witness" : "") << "\n";
}

const char* kBelowRangeNote = "3<=N<=2g: empty";

// ---- divpoly ----

template <class R>
Poly<R> divpoly_value(const SSequence& seq, const R& like, int N, bool cantor) {
  const SValues<R> values(seq, like);
  return cantor ? cantor_P(values, N) : delta(values, N);
}

int cmd_divpoly(const Options& o, bool cantor, std::ostream& out) {
  const Context ctx = load_context(o);
  mu_nu(ctx.model.genus, o.N);
  const SSequence seq = sequence(ctx, o, o.N - 1);
  json j = {{"N", o.N}, {"char", ctx.p}, {"kind", cantor ? "cantor-p" : "delta"}};
  std::string text;
  if (ctx.p == 0) {
    const Poly<Integer> f = divpoly_value(seq, Integer(0), o.N, cantor);
    j.update(poly_json(f));
    text = to_string(f);
  } else {
    const Poly<Fp> f = divpoly_value(seq, Fp(0, ctx.p), o.N, cantor);
    j.update(poly_json(f));
    text = to_string(f);
  }
  if (o.json)
    emit(out, j);
  else
    out << text << "\n";
  return kExitOk;
}

// ---- torsion ----

template <class K>
json locus_json(const TorsionLocus<K>& loc) {
  json j = {{"N", loc.N},
            {"char", loc.characteristic},
            {"genus", loc.genus},
            {"count", count_tilde(loc)},
            {"delta_vanished", loc.delta_vanished},
            {"below_range", loc.below_range},
            {"exhaustive", loc.exhaustive},
            {"subdets_used", loc.subdets_used.size()}};
  j["utilde"] = poly_json(loc.utilde);
  if (loc.below_range) j["note"] = kBelowRangeNote;
  return j;
}

template <class K>
int report_locus(const Options& o, const TorsionLocus<K>& loc, bool count_only, std::ostream& out) {
  if (o.json) {
    emit(out, locus_json(loc));
  } else if (count_only) {
    out << count_tilde(loc) << "\n";
  } else {
    out << to_string(loc.utilde) << "\n";
    if (loc.below_range) out << "note: " << kBelowRangeNote << "\n";
  }
  return kExitOk;
}

int cmd_utilde(const Options& o, bool count_only, std::ostream& out) {
  const Context ctx = load_context(o);
  if (o.N < 3) throw DomainError("N must be at least 3");
  const SSequence seq = sequence(ctx, o, o.N - 1);
  if (ctx.p == 0) return report_locus(o, utilde(seq, o.N, torsion_options(o)), count_only, out);
  return report_locus(o, utilde(seq, o.N, ctx.p, torsion_options(o)), count_only, out);
}

int cmd_bounds(const Options& o, std::ostream& out) {
  int g = o.genus;
  std::uint64_t p = o.characteristic > 0 ? static_cast<std::uint64_t>(o.characteristic) : 0;
  if (!o.curve.empty() || !o.P.empty()) {
    const Context ctx = load_context(o);
    g = ctx.model.genus;
    p = ctx.p;
  }
  if (g < 1) throw CLI::ValidationError("bounds", "give a curve or --g");
  const BoundReport b = bounds(g, o.N, p, o.inseparable);
  json j = {{"g", b.g}, {"N", b.N}, {"char", p}, {"general_bound", b.general_bound},
            {"inseparable_branch", b.inseparable_branch}, {"epsilon_row", b.epsilon_row}};
  j["delta_bound"] = b.delta_bound ? json(*b.delta_bound) : json(nullptr);
  j["separable_bound"] = b.separable_bound ? json(*b.separable_bound) : json(nullptr);
  j["worst_bound"] = b.worst_bound ? json(*b.worst_bound) : json(nullptr);
  if (o.json) {
    emit(out, j);
    return kExitOk;
  }
  auto opt = [](const std::optional<long>& v) { return v ? std::to_string(*v) : std::string("n/a"); };
  out << "g: " << b.g << "\nN: " << b.N << "\nchar: " << p << "\ndelta_bound: " << opt(b.delta_bound)
      << "\nseparable_bound: " << opt(b.separable_bound) << "\nworst_bound: " << opt(b.worst_bound)
      << "\ngeneral_bound: " << b.general_bound << "\ninseparable_branch: " << (b.inseparable_branch ? "true" : "false")
      << "\nepsilon_row:";
  for (long e : b.epsilon_row) out << " " << e;
  out << "\n";
  return kExitOk;
}

int cmd_check_div(const Options& o, std::ostream& out) {
  const Context ctx = load_context(o);
  const SSequence seq = sequence(ctx, o, o.N + o.r - 1);
  const DivisibilityReport d = divisibility_check(seq, o.N, o.r, ctx.p, torsion_options(o));
  json j = {{"N", d.N}, {"r", d.r}, {"char", ctx.p}, {"epsilon", d.epsilon}, {"utilde_degree", d.utilde_degree},
            {"delta_degree", d.delta_degree}, {"vacuous", d.vacuous}, {"passed", d.passed}};
  if (o.json)
    emit(out, j);
  else
    out << "N: " << d.N << "\nr: " << d.r << "\nepsilon: " << d.epsilon << "\nutilde_degree: " << d.utilde_degree
        << "\ndelta_degree: " << d.delta_degree << "\nvacuous: " << (d.vacuous ? "true" : "false")
        << "\npassed: " << (d.passed ? "true" : "false") << "\n";
  if (!d.passed) throw TheoremViolation("U~_N^epsilon does not divide Delta_(N+r)");
  return kExitOk;
}

int cmd_rank_at(const Options& o, std::ostream& out) {
  const Context ctx = load_context(o);
  if (o.x0.empty()) throw CLI::ValidationError("x0", "--x0 is required");
  const SSequence seq = sequence(ctx, o, o.N - 1);
  RankReport rep;
  if (ctx.p == 0) {
    rep = rank_at(seq, o.N, parse_rational(o.x0));
  } else if (o.degree == 1) {
    rep = rank_at(seq, o.N, parse_fp(o.x0, ctx.p));
  } else {
    rep = rank_at(seq, o.N, parse_gf(o.x0, extension_field(ctx.p, o.degree)));
  }
  const MuNu mn = mu_nu(ctx.model.genus, o.N);
  json j = {{"N", o.N}, {"char", ctx.p}, {"x0", o.x0}, {"rank", rep.rank}, {"rows", mn.mu + 1},
            {"is_torsion_x", rep.is_torsion_x}};
  if (o.json)
    emit(out, j);
  else
    out << "rank: " << rep.rank << " of " << mn.mu + 1 << " rows\nis_torsion_x: " << (rep.is_torsion_x ? "true" : "false")
        << "\n";
  return kExitOk;
}

// ---- jacobian ----

int cmd_verify(const Options& o, std::ostream& out) {
  const Context ctx = load_context(o);
  const SSequence seq = sequence(ctx, o, o.N - 1);
  const Certificate c = verify_utilde(seq, o.N, ctx.p, torsion_options(o));
  if (o.json) {
    json rows = json::array();
    for (const auto& r : c.rows) rows.push_back(row_json(r));
    emit(out, {{"N", c.N}, {"char", ctx.p}, {"witness_prime", c.witness_prime}, {"all_passed", c.all_passed()},
               {"rows", rows}});
  } else {
    out << "N: " << c.N << "\nchar: " << ctx.p << "\nroots: " << c.rows.size();
    if (c.witness_prime != 0) out << "\nwitness_prime: " << c.witness_prime;
    out << "\nall_passed: " << (c.all_passed() ? "true" : "false") << "\n";
    for (const auto& r : c.rows) print_row(out, r);
  }
  return kExitOk;
}

// ---- search ----

int cmd_scan(const Options& o, std::ostream& out) {
  const Context ctx = load_context(o);
  if (ctx.p != 0) throw DomainError("scan works over Q: use --char 0");
  if (o.primes.empty()) throw CLI::ValidationError("primes", "--primes is required");
  const SSequence seq = sequence(ctx, o, o.n_to - 1);
  ScanOptions so;
  so.torsion = torsion_options(o);
  so.subdets_per_prime = o.subdets_per_prime;
  so.direct = o.direct;
  const auto entries = reduction_scan(seq, o.n_from, o.n_to, o.primes, so);
  json arr = json::array();
  for (const auto& e : entries) {
    json trials = json::array();
    for (const auto& t : e.trials) trials.push_back({{"p", t.p}, {"locus_degree", t.locus_degree}});
    json rows = json::array();
    for (const auto& r : e.certified) rows.push_back(row_json(r));
    json j = {{"N", e.N}, {"verdict", to_string(e.verdict)}, {"trials", trials}, {"skipped", e.skipped},
              {"exact", e.exact}, {"certified", rows}};
    j["witness"] = e.witness ? json(*e.witness) : json(nullptr);
    j["upper_bound"] = e.upper_bound >= 0 ? json(e.upper_bound) : json(nullptr);
    j["utilde"] = e.utilde ? poly_json(*e.utilde) : json(nullptr);
    arr.push_back(j);
  }
  if (o.json) {
    emit(out, {{"entries", arr}});
    return kExitOk;
  }
  for (const auto& e : entries) {
    out << "N=" << e.N << " " << to_string(e.verdict);
    if (e.witness) out << " witness=" << *e.witness;
    if (e.upper_bound >= 0) out << " upper_bound=" << e.upper_bound << " certified=" << e.certified.size();
    if (e.utilde) out << " utilde=" << to_string(*e.utilde);
    if (!e.skipped.empty()) {
      out << " skipped=";
      for (std::size_t i = 0; i < e.skipped.size(); ++i) out << (i ? "," : "") << e.skipped[i];
    }
    out << "\n";
    for (const auto& r : e.certified) print_row(out, r);
  }
  return kExitOk;
}

int cmd_char_search(const Options& o, std::ostream& out) {
  const Context ctx = load_context(o);
  if (ctx.p != 0) throw DomainError("char-search works over Z: use --char 0");
  const SSequence seq = sequence(ctx, o, o.N - 1);
  SearchOptions so;
  so.torsion = torsion_options(o);
  so.trial_bound = o.trial_bound;
  so.use_rho = !o.no_rho;
  const CharacteristicSearch r = characteristic_search(seq, o.N, so);
  json factors = json::array();
  for (const auto& [p, e] : r.factorization.primes) factors.push_back({{"p", p.get_str()}, {"e", e}});
  json cands = json::array();
  for (const auto& c : r.candidates) {
    json j = {{"p", c.p.get_str()}, {"confirmed", c.confirmed}, {"bad_reduction", c.bad_reduction},
              {"out_of_range", c.out_of_range}};
    j["locus"] = c.locus ? poly_json(*c.locus) : json(nullptr);
    j["extra"] = c.extra ? poly_json(*c.extra) : json(nullptr);
    if (c.certificate) {
      json rows = json::array();
      for (const auto& row : c.certificate->rows) rows.push_back(row_json(row));
      j["certificate"] = rows;
    }
    cands.push_back(j);
  }
  json ex = json::array();
  for (const Integer& p : r.exceptional_primes()) ex.push_back(p.get_str());
  json j = {{"N", r.N},
            {"generic_factor", poly_json(r.generic_factor)},
            {"generic_locus", poly_json(r.generic_locus)},
            {"remainders", r.remainders.size()},
            {"resultant_pairs", r.resultant_pairs},
            {"resultant_gcd", r.resultant_gcd.get_str()},
            {"factors", factors},
            {"unfactored_cofactor", r.factorization.cofactor.get_str()},
            {"candidates", cands},
            {"exceptional_primes", ex}};
  j["common_remainder_factor"] = r.common_remainder_factor ? poly_json(*r.common_remainder_factor) : json(nullptr);
  if (o.json) {
    emit(out, j);
    return kExitOk;
  }
  out << "N: " << r.N << "\ngeneric_factor: " << to_string(r.generic_factor)
      << "\ngeneric_locus: " << to_string(r.generic_locus) << "\nresultant_gcd: " << r.resultant_gcd << "\nfactors:";
  for (const auto& [p, e] : r.factorization.primes) out << " " << p << "^" << e;
  out << "\nunfactored_cofactor: " << r.factorization.cofactor;
  if (r.common_remainder_factor) out << "\ncommon_remainder_factor: " << to_string(*r.common_remainder_factor);
  out << "\n";
  for (const auto& c : r.candidates) {
    out << "p=" << c.p << (c.confirmed ? " exceptional" : " not exceptional");
    if (c.bad_reduction) out << " (bad reduction)";
    if (c.out_of_range) out << " (not checked: too large)";
    if (c.locus) out << " locus=" << to_string(*c.locus);
    out << "\n";
  }
  out << "exceptional_primes:";
  for (const Integer& p : r.exceptional_primes()) out << " " << p;
  out << "\n";
  return kExitOk;
}

void add_curve_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--curve", o.curve, "curve file");
  cmd->add_option("--P", o.P, "inline P coefficients c0,c1,...");
  cmd->add_option("--Q", o.Q, "inline Q coefficients c0,c1,...");
  cmd->add_option("--char", o.characteristic, "characteristic (0 or a prime); defaults to the curve file's");
  cmd->add_flag("--json", o.json, "JSON output");
  cmd->add_option("--cache-dir", o.cache_dir, "directory for memoized s-sequences");
  cmd->add_option("--threads", o.threads, "worker threads (HYPTORSION_THREADS when unset)");
  cmd->add_option("--max-subdets", o.max_subdets, "cap on subdeterminants folded into the gcd");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Division polynomials and torsion loci of odd-degree hyperelliptic curves"};
  app.name("hyptorsion");
  app.require_subcommand(1);

  enum class Cmd { none, delta, cantor, utilde, count, bounds, check_div, rank_at, verify, scan, char_search };
  Cmd which = Cmd::none;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Cmd c) {
    CLI::App* cmd = parent->add_subcommand(name, help);
    add_curve_options(cmd, o);
    cmd->callback([&which, c] { which = c; });
    return cmd;
  };

  CLI::App* divpoly = app.add_subcommand("divpoly", "Delta_N and Cantor's P");
  divpoly->require_subcommand(1);
  for (auto [name, c] : {std::pair{"delta", Cmd::delta}, std::pair{"cantor-p", Cmd::cantor}})
    leaf(divpoly, name, name, c)->add_option("--N", o.N, "N")->required();

  CLI::App* torsion = app.add_subcommand("torsion", "torsion loci");
  torsion->require_subcommand(1);
  leaf(torsion, "utilde", "the locus U~_N", Cmd::utilde)->add_option("--N", o.N, "N")->required();
  leaf(torsion, "count", "#(X meet J~[N])", Cmd::count)->add_option("--N", o.N, "N")->required();
  CLI::App* b = leaf(torsion, "bounds", "degree and count bounds", Cmd::bounds);
  b->add_option("--N", o.N, "N")->required();
  b->add_option("--g", o.genus, "genus when no curve is given");
  b->add_flag("--inseparable", o.inseparable, "multiplication by p is purely inseparable");
  CLI::App* cd = leaf(torsion, "check-div", "U~_N^epsilon divides Delta_(N+r)", Cmd::check_div);
  cd->add_option("--N", o.N, "N")->required();
  cd->add_option("--r", o.r, "r")->required();
  CLI::App* ra = leaf(torsion, "rank-at", "rank criterion at x0", Cmd::rank_at);
  ra->add_option("--N", o.N, "N")->required();
  ra->add_option("--x0", o.x0, "x-coordinate (rational, residue, or c0,c1,... in F_p^k)")->required();
  ra->add_option("--degree", o.degree, "k for x0 in F_p^k");

  CLI::App* jac = app.add_subcommand("jacobian", "Jacobian certification");
  jac->require_subcommand(1);
  leaf(jac, "verify", "certify every root of U~_N", Cmd::verify)->add_option("--N", o.N, "N")->required();

  CLI::App* scan = leaf(&app, "scan", "emptiness by reduction", Cmd::scan);
  scan->add_option("--n-from", o.n_from, "first N")->required();
  scan->add_option("--n-to", o.n_to, "last N")->required();
  scan->add_option("--primes", o.primes, "witness primes")->delimiter(',')->required();
  scan->add_option("--subdets", o.subdets_per_prime, "nonzero subdeterminants per prime");
  scan->add_flag("--direct", o.direct, "compute U~_N over Q for candidates left open");

  CLI::App* cs = leaf(&app, "char-search", "exceptional characteristics via resultants", Cmd::char_search);
  cs->add_option("--N", o.N, "N")->required();
  cs->add_option("--trial-bound", o.trial_bound, "trial division bound");
  cs->add_flag("--no-rho", o.no_rho, "skip Pollard rho");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    switch (which) {
      case Cmd::delta: return cmd_divpoly(o, false, out);
      case Cmd::cantor: return cmd_divpoly(o, true, out);
      case Cmd::utilde: return cmd_utilde(o, false, out);
      case Cmd::count: return cmd_utilde(o, true, out);
      case Cmd::bounds: return cmd_bounds(o, out);
      case Cmd::check_div: return cmd_check_div(o, out);
      case Cmd::rank_at: return cmd_rank_at(o, out);
      case Cmd::verify: return cmd_verify(o, out);
      case Cmd::scan: return cmd_scan(o, out);
      case Cmd::char_search: return cmd_char_search(o, out);
      case Cmd::none: break;
    }
    err << app.help();
    return kExitUsage;
  } catch (const TheoremViolation& e) {
    err << "theorem violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace hyptorsion::cli
