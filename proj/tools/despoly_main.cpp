// Command-line front end: compute descent/ascent polynomials by a chosen
// route, verify the identities connecting the routes, certify
// real-rootedness / log-concavity / unimodality, and sweep whole families.
// One JSON object per line on stdout; --pretty switches to a human layout.
//
// Exit codes: 0 success / all checks positive, 1 verification or verdict
// failure, 2 usage error, 3 enumeration cap exceeded.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <despoly/errors.hpp>
#include <despoly/identities.hpp>
#include <despoly/real_roots.hpp>

using json = nlohmann::ordered_json;
using namespace despoly;

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

json coeff_strings(const IntPolynomial& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.str());
  return a;
}

json term_tuples(const QZPolynomial& p) {
  json a = json::array();
  for (const auto& [t, q, z, c] : term_list(p)) a.push_back(json::array({t, q, z, c.str()}));
  return a;
}

json mismatch_json(const CoeffDifference& d) {
  return json{{"degree", d.degree}, {"lhs", d.lhs.str()}, {"rhs", d.rhs.str()}};
}

json mismatch_json(const QZDifference& d) {
  return json{{"t", d.t_exp},       {"q", d.q_exp},       {"z", d.z_exp},
              {"lhs", d.lhs.str()}, {"rhs", d.rhs.str()}};
}

BigRat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return BigRat(BigInt(text));
    BigInt num(text.substr(0, slash)), den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return BigRat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid rational '" + text + "'");
  }
}

std::vector<int> to_multiplicities(const std::vector<long long>& values) {
  std::vector<int> m;
  m.reserve(values.size());
  for (long long v : values) {
    if (v < 1 || v > 1'000'000) throw std::invalid_argument("multiplicities must be in [1, 1e6]");
    m.push_back(static_cast<int>(v));
  }
  return m;
}

int single_n(const std::vector<long long>& values, const char* who) {
  if (values.size() != 1)
    throw std::invalid_argument(std::string(who) + " expects exactly one value n");
  if (values[0] < 1 || values[0] > 1'000'000)
    throw std::invalid_argument(std::string(who) + ": n must be >= 1");
  return static_cast<int>(values[0]);
}

void emit(const json& line, bool /*pretty handled separately*/) { std::cout << line.dump() << "\n"; }

// ---------------------------------------------------------------------------

struct Options {
  std::vector<long long> values;
  std::string target, route = "brute";
  std::optional<std::string> q_value, z_value;
  std::vector<long long> m_flag, s_flag;
  std::optional<long long> n_flag;
  std::vector<std::string> coeff_flag;
  long long sweep_bound = 0;
  Caps caps;
  bool pretty = false;

  // Inputs may come positionally or through exactly one of --m/--s/--n.
  std::vector<long long> inputs(bool allow_m, bool allow_s, bool allow_n) const {
    int sources = (!values.empty() ? 1 : 0) + (!m_flag.empty() ? 1 : 0) +
                  (!s_flag.empty() ? 1 : 0) + (n_flag ? 1 : 0);
    if (sources > 1)
      throw std::invalid_argument("give inputs either positionally or via one of --m/--s/--n");
    if (!m_flag.empty()) {
      if (!allow_m) throw std::invalid_argument("--m does not apply to this target");
      return m_flag;
    }
    if (!s_flag.empty()) {
      if (!allow_s) throw std::invalid_argument("--s does not apply to this target");
      return s_flag;
    }
    if (n_flag) {
      if (!allow_n) throw std::invalid_argument("--n does not apply to this target");
      return {*n_flag};
    }
    return values;
  }
};

json certificate_json(const SturmCertificate& cert) {
  json factors = json::array();
  for (const auto& f : cert.factors) {
    factors.push_back(json{{"degree", f.factor.degree()},
                           {"multiplicity", f.multiplicity},
                           {"coeffs", coeff_strings(f.factor)},
                           {"chain_length", f.chain_length},
                           {"variations_lo", f.variations_lo},
                           {"variations_hi", f.variations_hi},
                           {"distinct_real_roots", f.distinct_real_roots}});
  }
  return json{{"power_of_t", cert.power_of_t},
              {"bound", cert.bound.str()},
              {"interval_lo", cert.interval_lo.str()},
              {"interval_hi", cert.interval_hi.str()},
              {"factors", factors}};
}

struct CertifyOutcome {
  json report;
  bool all_positive;
};

CertifyOutcome certify_polynomial(const IntPolynomial& poly) {
  if (poly.is_zero()) throw std::invalid_argument("certify: zero polynomial");
  for (const auto& c : poly.coeffs())
    if (c < 0)
      throw std::invalid_argument(
          "certify: negative coefficients (log-concavity and unimodality are "
          "defined for nonnegative coefficient sequences)");
  SturmCertificate cert = is_real_rooted(poly);
  bool lc = is_log_concave(poly);
  bool um = is_unimodal(poly);
  json rep{{"degree", poly.degree()},
           {"coeffs", coeff_strings(poly)},
           {"real_rooted", cert.real_rooted},
           {"log_concave", lc},
           {"unimodal", um},
           {"certificate", certificate_json(cert)}};
  return {std::move(rep), cert.real_rooted && lc && um};
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

// -- compute -----------------------------------------------------------------

int run_compute(const Options& opt) {
  auto start = Clock::now();
  json rep{{"cmd", "compute"}, {"target", opt.target}, {"route", opt.route}};

  const bool is_qz_target = opt.target == "qz-des" || opt.target == "macmahon";
  if ((opt.q_value || opt.z_value) && !is_qz_target)
    throw std::invalid_argument("--q/--z only apply to targets qz-des and macmahon");

  std::optional<IntPolynomial> t_poly;
  std::optional<QZPolynomial> qz_poly;

  auto route_unavailable = [&]() {
    throw std::invalid_argument("route '" + opt.route + "' is not available for target '" +
                                opt.target + "'");
  };

  if (opt.target == "signed-des" || opt.target == "unsigned-des") {
    MultiplicityVector m(to_multiplicities(opt.inputs(true, false, false)));
    rep["m"] = m.counts();
    bool sgn = opt.target == "signed-des";
    if (opt.route == "brute") {
      t_poly = descent_poly_bruteforce(m, sgn, opt.caps);
    } else if (opt.route == "gf") {
      t_poly = sgn ? signed_descent_poly_gf(m, opt.caps)
                   : specialize(macmahon_poly_gf(m, opt.caps), 1, 1);
    } else if (opt.route == "recurrence" && sgn) {
      for (int c : m.counts())
        if (c != 2)
          throw std::invalid_argument(
              "route 'recurrence' needs every multiplicity equal to 2");
      t_poly = descent_poly_recurrence(m.size());
    } else {
      route_unavailable();
    }
  } else if (opt.target == "qz-des" || opt.target == "macmahon") {
    MultiplicityVector m(to_multiplicities(opt.inputs(true, false, false)));
    rep["m"] = m.counts();
    if (opt.route == "brute") {
      qz_poly = opt.target == "qz-des" ? qz_descent_poly_bruteforce(m, opt.caps)
                                       : major_index_poly_bruteforce(m, opt.caps);
    } else if (opt.route == "gf") {
      qz_poly = opt.target == "qz-des" ? qz_descent_poly_gf(m, opt.caps)
                                       : macmahon_poly_gf(m, opt.caps);
    } else {
      route_unavailable();
    }
    if (opt.q_value) {
      rep["q"] = *opt.q_value;
      qz_poly = substitute_q(*qz_poly, parse_rational(*opt.q_value));
    }
    if (opt.z_value) {
      rep["z"] = *opt.z_value;
      qz_poly = substitute_z(*qz_poly, parse_rational(*opt.z_value));
    }
    if (opt.q_value && opt.z_value) {
      t_poly = specialize(*qz_poly, 1, 1);  // exponents already collapsed
      qz_poly.reset();
    }
  } else if (opt.target == "asc-s") {
    auto entries = opt.inputs(false, true, false);
    if (entries.empty()) throw std::invalid_argument("asc-s needs the bound sequence");
    SSequence s(std::move(entries));
    rep["s"] = s.entries();
    if (opt.route != "brute") route_unavailable();
    t_poly = ascent_poly_bruteforce(s, opt.caps);
  } else if (opt.target == "sv-signed" || opt.target == "sv-unsigned") {
    int n = single_n(opt.inputs(false, false, true), opt.target.c_str());
    rep["n"] = n;
    bool sgn = opt.target == "sv-signed";
    SSequence s = sgn ? sv_signed_s(n) : sv_unsigned_s(n);
    rep["s"] = s.entries();
    if (opt.route == "brute") {
      t_poly = ascent_poly_bruteforce(s, opt.caps);
    } else if (opt.route == "recurrence" && sgn) {
      t_poly = ascent_poly_recurrence(n);
    } else if (opt.route == "gf" && sgn) {
      t_poly = ascent_poly_ehrhart(n);
    } else {
      route_unavailable();
    }
  } else {
    throw std::invalid_argument(
        "unknown target '" + opt.target +
        "' (expected signed-des, unsigned-des, qz-des, macmahon, asc-s, sv-signed, sv-unsigned)");
  }

  if (t_poly) {
    rep["degree"] = t_poly->degree();
    rep["coeffs"] = coeff_strings(*t_poly);
  } else {
    rep["terms"] = term_tuples(*qz_poly);
  }
  rep["ms"] = ms_since(start);

  if (opt.pretty) {
    std::cout << "compute " << opt.target << " route=" << opt.route << "\n  "
              << (t_poly ? to_string(*t_poly) : to_string(*qz_poly)) << "\n";
  } else {
    emit(rep, opt.pretty);
  }
  return 0;
}

// -- verify ------------------------------------------------------------------

json routes_json(const MultiRouteReport& r) {
  json routes = json::array();
  for (const auto& rp : r.routes)
    routes.push_back(
        json{{"route", rp.route}, {"degree", rp.poly.degree()}, {"coeffs", coeff_strings(rp.poly)}});
  json mism = json::array();
  for (const auto& mm : r.mismatches) {
    json j = mismatch_json(mm.diff);
    j["routes"] = json::array({mm.route_a, mm.route_b});
    mism.push_back(std::move(j));
  }
  json out{{"identity", r.identity}, {"n", r.n}, {"routes", routes}, {"equal", r.all_equal}};
  if (!r.mismatches.empty()) out["mismatches"] = mism;
  return out;
}

int run_verify(const Options& opt) {
  auto start = Clock::now();
  json rep{{"cmd", "verify"}};
  bool ok = false;

  if (opt.target == "equidistribution" || opt.target == "unsigned-equidistribution" ||
      opt.target == "ehrhart") {
    int n = single_n(opt.inputs(false, false, true), opt.target.c_str());
    MultiRouteReport r = opt.target == "equidistribution"
                             ? verify_equidistribution(n, opt.caps)
                             : opt.target == "unsigned-equidistribution"
                                   ? verify_unsigned_equidistribution(n, opt.caps)
                                   : verify_series_extraction(n, opt.caps);
    rep.update(routes_json(r));
    if (opt.target == "ehrhart") rep["guard_ok"] = true;  // extraction would have thrown
    ok = r.all_equal;
    if (opt.pretty) {
      std::cout << "verify " << r.identity << " n=" << r.n << ": "
                << (ok ? "all routes equal" : "MISMATCH") << "\n";
      for (const auto& rp : r.routes)
        std::cout << "  " << rp.route << ": " << to_string(rp.poly) << "\n";
    }
  } else if (opt.target == "qz-gf") {
    MultiplicityVector m(to_multiplicities(opt.inputs(true, false, false)));
    auto r = verify_trivariate_gf(m, opt.caps);
    rep["identity"] = "qz-gf";
    rep["m"] = r.m;
    rep["trivariate_equal"] = r.trivariate_equal;
    rep["z0_matches_unsigned"] = r.z0_matches_unsigned;
    rep["q1z1_matches_descent"] = r.q1z1_matches_descent;
    rep["equal"] = r.ok();
    rep["terms"] = term_tuples(r.gf);
    if (r.mismatch) rep["mismatch"] = mismatch_json(*r.mismatch);
    ok = r.ok();
    if (opt.pretty)
      std::cout << "verify qz-gf: trivariate=" << yesno(r.trivariate_equal)
                << " z0->unsigned=" << yesno(r.z0_matches_unsigned)
                << " q1z1->descent=" << yesno(r.q1z1_matches_descent) << "\n  "
                << to_string(r.gf) << "\n";
  } else if (opt.target == "macmahon") {
    MultiplicityVector m(to_multiplicities(opt.inputs(true, false, false)));
    auto r = verify_major_index_gf(m, opt.caps);
    rep["identity"] = "macmahon";
    rep["m"] = r.m;
    rep["equal"] = r.equal;
    rep["terms"] = term_tuples(r.gf);
    if (r.mismatch) rep["mismatch"] = mismatch_json(*r.mismatch);
    ok = r.equal;
    if (opt.pretty)
      std::cout << "verify macmahon: " << (ok ? "equal" : "MISMATCH") << "\n  " << to_string(r.gf)
                << "\n";
  } else if (opt.target == "signed-gf") {
    MultiplicityVector m(to_multiplicities(opt.inputs(true, false, false)));
    auto r = verify_signed_gf(m, opt.caps);
    rep["identity"] = "signed-gf";
    rep["m"] = r.m;
    rep["equal"] = r.equal;
    rep["degree"] = r.gf.degree();
    rep["coeffs"] = coeff_strings(r.gf);
    if (r.mismatch) rep["mismatch"] = mismatch_json(*r.mismatch);
    ok = r.equal;
    if (opt.pretty)
      std::cout << "verify signed-gf: " << (ok ? "equal" : "MISMATCH") << "\n  " << to_string(r.gf)
                << "\n";
  } else {
    throw std::invalid_argument("unknown identity '" + opt.target +
                                "' (expected equidistribution, unsigned-equidistribution, qz-gf, "
                                "macmahon, ehrhart, signed-gf)");
  }

  rep["ms"] = ms_since(start);
  if (!opt.pretty) emit(rep, opt.pretty);
  return ok ? 0 : 1;
}

// -- certify -------------------------------------------------------------------

int run_certify(const Options& opt) {
  auto start = Clock::now();
  if (opt.m_flag.empty() == opt.coeff_flag.empty())
    throw std::invalid_argument("certify needs exactly one of --m or --coeffs");

  json rep{{"cmd", "certify"}};
  IntPolynomial poly;
  if (!opt.m_flag.empty()) {
    MultiplicityVector m(to_multiplicities(opt.m_flag));
    rep["m"] = m.counts();
    poly = signed_descent_poly_gf(m, opt.caps);
  } else {
    std::vector<BigInt> c;
    c.reserve(opt.coeff_flag.size());
    for (const auto& s : opt.coeff_flag) {
      try {
        c.emplace_back(s);
      } catch (const std::exception&) {
        throw std::invalid_argument("invalid integer coefficient '" + s + "'");
      }
    }
    poly = IntPolynomial(std::move(c));
  }

  auto outcome = certify_polynomial(poly);
  rep.update(outcome.report);
  rep["ms"] = ms_since(start);
  if (opt.pretty) {
    const json& r = outcome.report;
    std::cout << "certify: " << to_string(poly) << "\n  real-rooted: "
              << yesno(r["real_rooted"].get<bool>())
              << "\n  log-concave: " << yesno(r["log_concave"].get<bool>())
              << "\n  unimodal:    " << yesno(r["unimodal"].get<bool>()) << "\n";
  } else {
    emit(rep, opt.pretty);
  }
  return outcome.all_positive ? 0 : 1;
}

// -- sweep -------------------------------------------------------------------

int run_sweep(const Options& opt) {
  auto total_start = Clock::now();
  if (opt.sweep_bound < 1) throw std::invalid_argument("sweep bound must be >= 1");
  if (opt.sweep_bound > opt.caps.max_total) {
    std::ostringstream os;
    os << "sweep: bound " << opt.sweep_bound << " exceeds cap " << opt.caps.max_total;
    throw CapExceeded(os.str());
  }

  int vectors = 0, failures = 0;
  for (int total = 1; total <= opt.sweep_bound; ++total) {
    for (const auto& counts : canonical_multiplicity_vectors(total)) {
      auto start = Clock::now();
      MultiplicityVector m(counts);
      auto triv = verify_trivariate_gf(m, opt.caps);
      auto mac = verify_major_index_gf(m, opt.caps);
      auto sgf = verify_signed_gf(m, opt.caps);
      auto cert = certify_polynomial(sgf.brute);
      bool ok = triv.ok() && mac.equal && sgf.equal && cert.all_positive;
      ++vectors;
      if (!ok) ++failures;
      json rep{{"cmd", "sweep"},
               {"m", counts},
               {"trivariate_equal", triv.trivariate_equal},
               {"z0_matches_unsigned", triv.z0_matches_unsigned},
               {"q1z1_matches_descent", triv.q1z1_matches_descent},
               {"macmahon_equal", mac.equal},
               {"signed_gf_equal", sgf.equal},
               {"real_rooted", cert.report["real_rooted"]},
               {"log_concave", cert.report["log_concave"]},
               {"unimodal", cert.report["unimodal"]},
               {"ok", ok},
               {"ms", ms_since(start)}};
      if (opt.pretty) {
        std::cout << "m=[";
        for (size_t i = 0; i < counts.size(); ++i) std::cout << (i ? "," : "") << counts[i];
        std::cout << "] " << (ok ? "ok" : "FAIL") << "  " << to_string(sgf.brute) << "\n";
      } else {
        emit(rep, opt.pretty);
      }
    }
  }
  json summary{{"cmd", "sweep"},
               {"vectors", vectors},
               {"failures", failures},
               {"ok", failures == 0},
               {"ms", ms_since(total_start)}};
  if (opt.pretty) {
    std::cout << vectors << " vectors, " << failures << " failures\n";
  } else {
    emit(summary, opt.pretty);
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact descent/ascent polynomials of signed multiset permutations and "
      "inversion sequences: multi-route computation, identity verification, "
      "and real-rootedness certification"};
  app.require_subcommand(1);

  Options opt;

  auto add_caps = [&](CLI::App* cmd) {
    cmd->add_option("--max-total", opt.caps.max_total,
                    "largest multiset size allowed in enumerations");
    cmd->add_option("--max-product", opt.caps.max_product,
                    "largest inversion-sequence family allowed in enumerations");
    cmd->add_flag("--pretty", opt.pretty, "human-readable output instead of JSON lines");
  };

  CLI::App* compute = app.add_subcommand("compute", "compute one polynomial by one route");
  compute->add_option("target", opt.target,
                      "signed-des | unsigned-des | qz-des | macmahon | asc-s | sv-signed | "
                      "sv-unsigned")
      ->required();
  compute->add_option("values", opt.values, "multiplicities, bound sequence, or n");
  compute->add_option("--m", opt.m_flag, "multiplicities (alternative to positionals)");
  compute->add_option("--s", opt.s_flag, "bound sequence (alternative to positionals)");
  compute->add_option("--n", opt.n_flag, "size n (alternative to positionals)");
  compute->add_option("--route", opt.route, "brute | recurrence | gf (default brute)");
  std::string qv, zv;
  auto* qopt = compute->add_option("--q", qv, "substitute a rational value for q");
  auto* zopt = compute->add_option("--z", zv, "substitute a rational value for z");
  add_caps(compute);

  CLI::App* verify = app.add_subcommand("verify", "check an identity across its routes");
  verify->add_option("identity", opt.target,
                     "equidistribution | unsigned-equidistribution | qz-gf | macmahon | ehrhart | "
                     "signed-gf")
      ->required();
  verify->add_option("values", opt.values, "multiplicities or n");
  verify->add_option("--m", opt.m_flag, "multiplicities (alternative to positionals)");
  verify->add_option("--n", opt.n_flag, "size n (alternative to positionals)");
  add_caps(verify);

  CLI::App* certify =
      app.add_subcommand("certify", "certify real-rootedness, log-concavity, unimodality");
  certify->add_option("--m", opt.m_flag, "multiplicities; certifies the signed descent polynomial");
  certify->add_option("--coeffs", opt.coeff_flag, "explicit integer coefficients, ascending degree");
  add_caps(certify);

  CLI::App* sweep =
      app.add_subcommand("sweep", "verify + certify every canonical multiplicity vector");
  sweep->add_option("bound", opt.sweep_bound, "largest multiset size to visit")->required();
  add_caps(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (qopt->count()) opt.q_value = qv;
  if (zopt->count()) opt.z_value = zv;

  try {
    if (app.got_subcommand(compute)) return run_compute(opt);
    if (app.got_subcommand(verify)) return run_verify(opt);
    if (app.got_subcommand(certify)) return run_certify(opt);
    return run_sweep(opt);
  } catch (const CapExceeded& e) {
    std::cerr << "despoly: " << e.what() << "\n";
    return 3;
  } catch (const GuardCheckFailed& e) {
    std::cerr << "despoly: " << e.what() << "\n";
    return 1;
  } catch (const NonIntegerCoefficient& e) {
    std::cerr << "despoly: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "despoly: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "despoly: internal error: " << e.what() << "\n";
    return 2;
  }
}
