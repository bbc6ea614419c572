#include "cli.hpp"

#include "syz/bundle.hpp"
#include "syz/constructions.hpp"
#include "syz/errors.hpp"
#include "syz/json_io.hpp"
#include "syz/monomial.hpp"
#include "syz/rational.hpp"
#include "syz/report.hpp"
#include "syz/slope.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

namespace syz::cli {

namespace {

using nlohmann::json;

struct Globals {
  bool json = false;
  bool oracle = false;
  bool approx = false;
  int threads = 1;
  std::string cache_path;
  std::size_t closure_cap = kDefaultClosureCap;
};

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      std::int64_t v = std::stoll(text);
      return {v, v};
    }
    return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range '" + text + "' (use N or LO:HI)");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
}

MonomialSet load_set(const std::string& path, std::optional<std::int64_t> n) {
  std::string text = read_file(path);
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') return set_from_json(text);
  if (!n) throw std::invalid_argument("text input needs --n to fix the variable count");
  return MonomialSet::parse_text(text, static_cast<std::size_t>(*n));
}

SlopeProfile profile_of(const MonomialSet& s, const Globals& g) {
  return g.oracle ? mu_max_bruteforce(s) : mu_max_closure(s, g.closure_cap);
}

// ---- k ----
void cmd_k(std::int64_t n, const Globals& g, std::ostream& out) {
  std::int64_t k = k_of(n);
  if (g.json) {
    json j{{"n", n}, {"k", k}};
    out << j.dump() << "\n";
  } else {
    out << "k(" << n << ") = " << k << "\n";
  }
}

// ---- bound ----
void cmd_bound(std::int64_t n, std::int64_t d, const Globals& g, std::ostream& out) {
  Rational B = bound_B(n, d);
  auto interval = a_interval(n, d);
  if (g.json) {
    json j;
    j["n"] = n;
    j["d"] = d;
    j["B"] = to_pq_string(B);
    j["interval_nonempty"] = interval.has_value();
    if (interval) {
      j["A_low"] = to_pq_string(interval->first);
      j["A_high"] = to_pq_string(interval->second);
    } else {
      j["A_low"] = nullptr;
      j["A_high"] = nullptr;
    }
    j["d_min"] = min_degree_for_interval(n);
    out << j.dump() << "\n";
  } else {
    out << "B(" << n << "," << d << ") = " << render_rational(B, g.approx) << "\n";
    if (interval)
      out << "A in [" << render_rational(interval->first, g.approx) << ", "
          << render_rational(interval->second, g.approx) << "]\n";
    else
      out << "A interval empty (need d >= " << min_degree_for_interval(n) << ")\n";
  }
}

// ---- mumax ----
struct MumaxArgs {
  std::string input;
  std::optional<std::int64_t> n;
  bool verdict = false;
};

void cmd_mumax(const MumaxArgs& a, const Globals& g, std::ostream& out) {
  MonomialSet s = load_set(a.input, a.n);
  SlopeProfile p = profile_of(s, g);
  std::optional<SemistableVerdict> v;
  if (a.verdict) v = semistable_verdict(s, g.closure_cap);
  if (g.json) {
    json j = json::parse(profile_to_json(p));
    if (v) {
      j["mu"] = to_pq_string(v->mu);
      j["semistable"] = v->semistable;
      j["stable_strictly"] = v->stable_strictly;
    }
    out << j.dump() << "\n";
  } else {
    out << render_profile(p, s, g.approx);
    if (v) {
      out << "mu = " << render_rational(v->mu, g.approx) << "\n";
      out << "semistable: " << (v->semistable ? "yes" : "no") << "\n";
      out << "strictly stable: " << (v->stable_strictly ? "yes" : "no") << "\n";
    }
  }
}

// ---- construct ----
struct ConstructArgs {
  std::string kind;
  std::optional<std::int64_t> n;
  std::int64_t d = 0;
  std::string A;
  std::optional<std::int64_t> m;
  std::string out_base;
};

MonomialSet build_construction(const ConstructArgs& a) {
  if (a.kind == "c1") {
    if (!a.n) throw std::invalid_argument("construct c1 needs --n");
    ConstructionParams params =
        a.A.empty() ? default_params(*a.n, a.d)
                    : ConstructionParams{*a.n, a.d, parse_pq_string(a.A)};
    return a.m ? construction1_dropped(params, *a.m) : construction1(params);
  }
  if (!a.A.empty() || a.m)
    throw std::invalid_argument("--A and --m apply to the c1 kind only");
  if (a.kind == "e81") {
    if (a.n && *a.n != 2) throw std::invalid_argument("e81 lives on P^2");
    return e81_generators(a.d);
  }
  if (a.kind == "e91") {
    if (a.n && *a.n != 2) throw std::invalid_argument("e91 lives on P^2");
    return e91_generators(a.d);
  }
  if (a.kind == "pure") {
    if (!a.n) throw std::invalid_argument("construct pure needs --n");
    return pure_powers(*a.n, a.d);
  }
  throw std::invalid_argument("unknown construction kind '" + a.kind + "'");
}

void cmd_construct(const ConstructArgs& a, const Globals& g, std::ostream& out) {
  MonomialSet s = build_construction(a);
  if (!a.out_base.empty()) {
    write_file(a.out_base + ".json", set_to_json(s, 2) + "\n");
    write_file(a.out_base + ".txt", s.to_text());
    out << "wrote " << a.out_base << ".json and " << a.out_base << ".txt ("
        << s.size() << " monomials)\n";
  } else if (g.json) {
    out << set_to_json(s, 2) << "\n";
  } else {
    out << s.to_text();
  }
}

// ---- certify ----
void cmd_certify(std::int64_t a, std::int64_t b, std::int64_t n,
                 std::optional<std::int64_t> d, const Globals& g, std::ostream& out) {
  StabilityCertificate cert = certify(a, b, n, d);
  if (g.json)
    out << certificate_to_json(cert, 2) << "\n";
  else
    out << render_certificate(cert, g.approx);
}

// ---- verify lemma1 ----
struct Lemma1Args {
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::string A;
};

int cmd_verify_lemma1(const Lemma1Args& a, const Globals& g, std::ostream& out) {
  if (!a_interval(a.n, a.d))
    throw HypothesisError("verification needs d >= " +
                          std::to_string(min_degree_for_interval(a.n)) + " at n = " +
                          std::to_string(a.n) + "; got d = " + std::to_string(a.d));
  ConstructionParams params = a.A.empty()
                                  ? default_params(a.n, a.d)
                                  : ConstructionParams{a.n, a.d, parse_pq_string(a.A)};
  MonomialSet s = construction1(params);
  SlopeProfile p = mu_max_closure(s, g.closure_cap);
  bool oracle_agrees = true;
  if (g.oracle && s.size() <= kBruteForceCap) {
    SlopeProfile q = mu_max_bruteforce(s);
    oracle_agrees = q.mu_max == p.mu_max && q.mu_max_r == p.mu_max_r;
    for (const auto& [r, entry] : p.per_size)
      oracle_agrees = oracle_agrees && q.per_size.at(r).value == entry.value;
  }
  Rational B = bound_B(a.n, a.d);
  bool pass = p.mu_max <= B && oracle_agrees;
  if (g.json) {
    json j;
    j["n"] = a.n;
    j["d"] = a.d;
    j["A"] = to_pq_string(params.A);
    j["k"] = s.size();
    j["mu_max"] = to_pq_string(p.mu_max);
    j["B"] = to_pq_string(B);
    j["oracle_checked"] = g.oracle;
    j["pass"] = pass;
    out << j.dump() << "\n";
  } else {
    out << "family: " << s.size() << " monomials of degree " << a.d << " on P^" << a.n
        << ", A = " << to_pq_string(params.A) << "\n";
    out << "mu_max = " << render_rational(p.mu_max, g.approx) << " at r = " << p.mu_max_r
        << "\n";
    out << "B = " << render_rational(B, g.approx) << "\n";
    if (g.oracle) out << "oracle agreement: " << (oracle_agrees ? "yes" : "NO") << "\n";
    out << (pass ? "PASS" : "FAIL") << ": mu_max " << (p.mu_max <= B ? "<=" : ">")
        << " B\n";
  }
  return pass ? 0 : 1;
}

// ---- verify prop6 ----
int cmd_verify_prop6(std::int64_t d, const Globals& g, std::ostream& out) {
  if (d < 3)
    throw HypothesisError("verification needs d >= 3; got d = " + std::to_string(d));
  MonomialSet e81 = e81_generators(d);
  MonomialSet e91 = e91_generators(d);
  SlopeProfile p81 = profile_of(e81, g);
  SlopeProfile p91 = profile_of(e91, g);

  Rational mu_e = slope(KernelBundleClass{2, 17, 2, d});
  Rational mu81 = p81.mu_max;
  Rational mu91_proper = *p91.mu_max_proper();

  // Quotient-side full-rank branch: mu(W) <= (r2*row81(r2) - 9d)/(8 + r2),
  // maximized over the sub-side rank r2 (the full row bounds full-rank W2).
  bool have_w2 = false;
  Rational w2_bound;
  std::size_t w2_r2 = 0;
  for (const auto& [r, entry] : p81.per_size) {
    const auto r2 = static_cast<std::int64_t>(r - 1);
    Rational v = (entry.value * r2 - Rational(9) * d) / (8 + r2);
    if (!have_w2 || v > w2_bound) {
      w2_bound = v;
      w2_r2 = static_cast<std::size_t>(r2);
      have_w2 = true;
    }
  }

  bool pass81 = mu81 < mu_e;
  bool pass91 = mu91_proper < mu_e;
  bool pass_w2 = w2_bound <= mu_e;
  bool pass = pass81 && pass91 && pass_w2;

  if (g.json) {
    json j;
    j["d"] = d;
    j["mu_E17_2"] = to_pq_string(mu_e);
    j["e81_profile"] = json::parse(profile_to_json(p81));
    j["e91_profile"] = json::parse(profile_to_json(p91));
    j["mu_max_e81"] = to_pq_string(mu81);
    j["mu_max_proper_e91"] = to_pq_string(mu91_proper);
    j["w2_branch_bound"] = to_pq_string(w2_bound);
    j["w2_branch_r2"] = w2_r2;
    j["pass_e81"] = pass81;
    j["pass_e91"] = pass91;
    j["pass_w2"] = pass_w2;
    j["pass"] = pass;
    out << j.dump() << "\n";
  } else {
    out << "mu(E_{17,2}) = " << render_rational(mu_e, g.approx) << " at d = " << d << "\n";
    out << "e81 per-rank table (7 monomials, kernel class (7,1)):\n"
        << render_per_rank_table(p81, g.approx);
    out << "e91 per-rank table:\n" << render_per_rank_table(p91, g.approx);
    out << "mu_max(e81) = " << render_rational(mu81, g.approx) << " "
        << (pass81 ? "<" : ">=") << " mu(E_{17,2})\n";
    out << "mu_max_proper(e91) = " << render_rational(mu91_proper, g.approx) << " "
        << (pass91 ? "<" : ">=") << " mu(E_{17,2})\n";
    out << "sub-branch bound = " << render_rational(w2_bound, g.approx) << " at r2 = "
        << w2_r2 << " " << (pass_w2 ? "<=" : ">") << " mu(E_{17,2})\n";
    out << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? 0 : 1;
}

// ---- atlas ----
struct AtlasArgs {
  std::vector<std::int64_t> ns;
  std::string b_range;
  std::string a_range;
  std::string m_range;
  std::string j_range = "0:0";
  std::vector<std::int64_t> ds;
  std::string out_path;
};

void cmd_atlas(const AtlasArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  AtlasJob job;
  job.ns = a.ns;
  job.b_range = parse_range(a.b_range);
  if (!a.a_range.empty()) job.a_range = parse_range(a.a_range);
  if (!a.m_range.empty()) job.m_range = parse_range(a.m_range);
  job.j_range = parse_range(a.j_range);
  job.ds = a.ds;
  job.threads = g.threads;
  if (!g.cache_path.empty()) job.cache_path = g.cache_path;

  AtlasOutcome outcome = run_atlas(job);
  std::string body;
  for (const auto& line : outcome.lines) {
    body += line;
    body += '\n';
  }
  if (!a.out_path.empty())
    write_file(a.out_path, body);
  else
    out << body;
  err << "atlas: " << outcome.lines.size() << " cells, " << outcome.cache_hits
      << " cache hits, " << outcome.computed << " computed\n";
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact slope arithmetic for monomial kernel bundles"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "emit JSON instead of text");
  app.add_flag("--oracle", g.oracle, "use the exhaustive subset oracle instead of the closure");
  app.add_flag("--approx", g.approx, "append decimal approximations to rationals");
  app.add_option("--threads", g.threads, "worker threads for atlas")->check(CLI::PositiveNumber);
  app.add_option("--cache", g.cache_path, "JSONL result cache path");
  app.add_option("--closure-cap", g.closure_cap, "max divisor-closure size before giving up");

  int exit_code = 0;

  auto* k_cmd = app.add_subcommand("k", "largest covered multiplier k(n)");
  auto k_n = std::make_shared<std::int64_t>(0);
  k_cmd->add_option("--n", *k_n, "ambient dimension")->required();
  k_cmd->callback([&, k_n] { cmd_k(*k_n, g, out); });

  auto* bound_cmd = app.add_subcommand("bound", "slope bound B(n,d) and the A-interval");
  auto bound_n = std::make_shared<std::int64_t>(0);
  auto bound_d = std::make_shared<std::int64_t>(0);
  bound_cmd->add_option("--n", *bound_n, "ambient dimension")->required();
  bound_cmd->add_option("--d", *bound_d, "degree")->required();
  bound_cmd->callback([&, bound_n, bound_d] { cmd_bound(*bound_n, *bound_d, g, out); });

  auto* mumax_cmd = app.add_subcommand("mumax", "maximal subsheaf slope of a monomial set");
  auto mumax_args = std::make_shared<MumaxArgs>();
  auto mumax_n = std::make_shared<std::int64_t>(-1);
  mumax_cmd->add_option("--input", mumax_args->input, "monomial set file (JSON or text)")
      ->required();
  mumax_cmd->add_option("--n", *mumax_n, "dimension (required for text input)");
  mumax_cmd->add_flag("--verdict", mumax_args->verdict,
                      "also decide semistability (needs basepoint-free input)");
  mumax_cmd->callback([&, mumax_args, mumax_n] {
    if (*mumax_n >= 0) mumax_args->n = *mumax_n;
    cmd_mumax(*mumax_args, g, out);
  });

  auto* construct_cmd = app.add_subcommand("construct", "emit a monomial family");
  auto construct_args = std::make_shared<ConstructArgs>();
  auto construct_n = std::make_shared<std::int64_t>(-1);
  construct_cmd
      ->add_option("kind", construct_args->kind, "family kind: c1, e81, e91, pure")
      ->required()
      ->check(CLI::IsMember({"c1", "e81", "e91", "pure"}));
  construct_cmd->add_option("--n", *construct_n, "ambient dimension");
  construct_cmd->add_option("--d", construct_args->d, "degree")->required();
  construct_cmd->add_option("--A", construct_args->A, "parameter A as p/q (c1 only)");
  auto construct_m = std::make_shared<std::int64_t>(-1);
  construct_cmd->add_option("--m", *construct_m, "keep only the first m monomials (c1 only)");
  construct_cmd->add_option("--out", construct_args->out_base,
                            "write BASE.json and BASE.txt instead of stdout");
  construct_cmd->callback([&, construct_args, construct_n, construct_m] {
    if (*construct_n >= 0) construct_args->n = *construct_n;
    if (*construct_m >= 0) construct_args->m = *construct_m;
    cmd_construct(*construct_args, g, out);
  });

  auto* certify_cmd = app.add_subcommand("certify", "coverage and degree-threshold certificate");
  auto cert_n = std::make_shared<std::int64_t>(0);
  auto cert_a = std::make_shared<std::int64_t>(0);
  auto cert_b = std::make_shared<std::int64_t>(0);
  auto cert_d = std::make_shared<std::int64_t>(-1);
  certify_cmd->add_option("--n", *cert_n, "ambient dimension")->required();
  certify_cmd->add_option("--a", *cert_a, "number of forms")->required();
  certify_cmd->add_option("--b", *cert_b, "target rank")->required();
  certify_cmd->add_option("--d", *cert_d, "evaluate the certificate at this degree");
  certify_cmd->callback([&, cert_n, cert_a, cert_b, cert_d] {
    std::optional<std::int64_t> d;
    if (*cert_d >= 0) d = *cert_d;
    cmd_certify(*cert_a, *cert_b, *cert_n, d, g, out);
  });

  auto* verify_cmd = app.add_subcommand("verify", "check the bound or the extension pipeline");
  verify_cmd->require_subcommand(1);
  auto* lemma1_cmd = verify_cmd->add_subcommand("lemma1", "mu_max(c1 family) <= B(n,d)");
  auto lemma1_args = std::make_shared<Lemma1Args>();
  lemma1_cmd->add_option("--n", lemma1_args->n, "ambient dimension")->required();
  lemma1_cmd->add_option("--d", lemma1_args->d, "degree")->required();
  lemma1_cmd->add_option("--A", lemma1_args->A, "override the default A = A_low");
  lemma1_cmd->callback([&, lemma1_args] { exit_code = cmd_verify_lemma1(*lemma1_args, g, out); });

  auto* prop6_cmd = verify_cmd->add_subcommand("prop6", "E_{17,2} extension pipeline at d");
  auto prop6_d = std::make_shared<std::int64_t>(0);
  prop6_cmd->add_option("--d", *prop6_d, "degree")->required();
  prop6_cmd->callback([&, prop6_d] { exit_code = cmd_verify_prop6(*prop6_d, g, out); });

  auto* atlas_cmd = app.add_subcommand("atlas", "batch certificates over a parameter grid");
  auto atlas_args = std::make_shared<AtlasArgs>();
  atlas_cmd->add_option("--n", atlas_args->ns, "dimensions (repeatable)")->required();
  atlas_cmd->add_option("--b", atlas_args->b_range, "b range as N or LO:HI")->required();
  atlas_cmd->add_option("--a", atlas_args->a_range, "a range as N or LO:HI");
  atlas_cmd->add_option("--m", atlas_args->m_range, "m range as N or LO:HI");
  atlas_cmd->add_option("--j", atlas_args->j_range, "j range as N or LO:HI (with --m)");
  atlas_cmd->add_option("--d", atlas_args->ds, "degrees (repeatable)");
  atlas_cmd->add_option("--out", atlas_args->out_path, "JSONL output path");
  atlas_cmd->callback([&, atlas_args] { cmd_atlas(*atlas_args, g, out, err); });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const HypothesisError& e) {
    err << "hypothesis violation: " << e.what() << "\n";
    return 3;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

} // namespace syz::cli
