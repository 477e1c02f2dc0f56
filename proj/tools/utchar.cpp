// Command line front end: every library operation plus the bundled
// verification suites, JSON on stdout, human summary on stderr.
// Exit codes: 0 success/pass, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ut/json_io.hpp"
#include "ut/pairing.hpp"

namespace {

using ut::json;

std::vector<ut::Rational> parse_rationals(const std::string& csv) {
  std::vector<ut::Rational> out;
  if (csv.empty()) return out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(ut::Rational::from_string(item));
  return out;
}

json load_doc(const std::string& arg) {
  const std::size_t first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    json j = json::parse(arg, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed inline JSON");
    return j;
  }
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot open file: " + arg);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON in file: " + arg);
  return j;
}

struct ParamFlags {
  std::string variant;
  std::size_t k = 0;
  std::size_t m = 0;
  std::string lambdas;
  std::string lambdas1;
  std::string gammas;

  void add_to(CLI::App* cmd, bool values_required) {
    cmd->add_option("--variant", variant,
                    "regular-even | regular-odd | subregular-even | subregular-odd")
        ->required();
    cmd->add_option("--k", k, "inner antidiagonal length")->required();
    cmd->add_option("--m", m, "outer antidiagonal length (subregular)");
    auto* l = cmd->add_option("--lambdas", lambdas, "comma-separated rationals, length k");
    cmd->add_option("--lambdas1", lambdas1, "comma-separated rationals, length m (subregular)");
    cmd->add_option("--gammas", gammas, "comma-separated rationals g1,g2,g3 (subregular)");
    if (values_required) l->required();
  }

  bool has_values() const { return !lambdas.empty() || !gammas.empty(); }

  ut::OrbitParams resolve() const {
    ut::OrbitParams p;
    p.variant = ut::variant_from_name(variant);
    p.k = k;
    p.m = ut::is_subregular(p.variant) ? m : 0;
    p.lambdas = parse_rationals(lambdas);
    if (ut::is_subregular(p.variant)) {
      p.lambdas1 = parse_rationals(lambdas1);
      std::vector<ut::Rational> gs = parse_rationals(gammas);
      if (gs.size() != 3)
        throw std::invalid_argument("--gammas must hold exactly three rationals");
      p.gammas = {gs[0], gs[1], gs[2]};
    }
    p.validate();
    return p;
  }
};

ut::OrbitParams random_params(ut::OrbitVariant v, std::size_t k, std::size_t m, ut::Rng& rng) {
  ut::OrbitParams p;
  p.variant = v;
  p.k = k;
  p.m = ut::is_subregular(v) ? m : 0;
  for (std::size_t i = 0; i < k; ++i) p.lambdas.push_back(rng.nonzero_rational(6, 4));
  if (ut::is_subregular(v)) {
    for (std::size_t i = 0; i < m; ++i) p.lambdas1.push_back(rng.nonzero_rational(6, 4));
    p.gammas = {rng.nonzero_rational(6, 4), rng.nonzero_rational(6, 4), rng.rational(6, 4)};
  }
  p.validate();
  return p;
}

// phi document: {"default": {"center","sigma"}, "factors": [{"row","col","center","sigma"}]}
// with 1-based row < col.  Missing pieces fall back to center 0, sigma 1/4.
ut::TestFunction phi_from_doc(std::size_t n, const std::optional<json>& doc) {
  ut::GaussianFactor def{0.0, 0.25};
  if (doc && doc->contains("default")) {
    const json& d = doc->at("default");
    def.center = d.value("center", 0.0);
    def.sigma = d.value("sigma", 0.25);
  }
  ut::TestFunction phi(n, def);
  if (doc && doc->contains("factors")) {
    for (const json& f : doc->at("factors")) {
      const std::size_t row = f.at("row").get<std::size_t>();
      const std::size_t col = f.at("col").get<std::size_t>();
      if (row < 1 || col <= row || col > n)
        throw std::invalid_argument("phi: factor position must satisfy 1 <= row < col <= n");
      phi.set_factor(row - 1, col - 1,
                     {f.value("center", def.center), f.value("sigma", def.sigma)});
    }
  }
  return phi;
}

json phi_to_json(const ut::TestFunction& phi) {
  json factors = json::array();
  for (std::size_t i = 0; i < phi.n(); ++i)
    for (std::size_t j = i + 1; j < phi.n(); ++j)
      factors.push_back(json{{"row", i + 1},
                             {"col", j + 1},
                             {"center", phi.factor(i, j).center},
                             {"sigma", phi.factor(i, j).sigma}});
  return json{{"n", phi.n()}, {"factors", std::move(factors)}};
}

const char* status_name(ut::SupportStatus s) {
  switch (s) {
    case ut::SupportStatus::OnSupport: return "on-support";
    case ut::SupportStatus::OffSupport: return "off-support";
    case ut::SupportStatus::OutsideLocalization: return "outside-localization";
  }
  return "?";
}

struct Outcome {
  json report;
  bool pass = true;
  std::string summary;
};

// ---- verification building blocks ----------------------------------

Outcome lemma_sweep(ut::OrbitVariant v, std::size_t k, std::size_t m, std::uint64_t seed,
                    std::uint64_t trials) {
  ut::Rng rng(seed);
  std::uint64_t failures = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const ut::OrbitParams p = random_params(v, k, m, rng);
    const ut::CoadjointElement f = ut::canonical_form(p);
    if (!ut::same_span(ut::stabilizer_algebra(f), ut::predicted_stabilizer(p), p.n()))
      ++failures;
  }
  Outcome o;
  o.pass = failures == 0;
  o.report = json{{"trials", trials}, {"failures", failures}, {"pass", o.pass}};
  o.summary = (o.pass ? "PASS" : "FAIL") + std::string(": computed stabilizer span vs closed form, ") +
              std::to_string(trials) + " random instantiations, " + std::to_string(failures) +
              " failures";
  return o;
}

Outcome membership_sweep(const ut::OrbitParams& p, std::uint64_t seed, std::uint64_t samples) {
  ut::SupportSampler sampler(p, seed);
  std::uint64_t on = 0, outside = 0, failures = 0;
  for (std::uint64_t t = 0; t < samples; ++t) {
    const ut::GroupElement g = sampler.next();
    const ut::SupportStatus st = ut::support_membership(g, p);
    const bool localized = !ut::d_of_g(g, p).is_zero();
    if (localized) {
      if (st == ut::SupportStatus::OnSupport)
        ++on;
      else
        ++failures;
    } else {
      if (st == ut::SupportStatus::OutsideLocalization)
        ++outside;
      else
        ++failures;
    }
  }
  Outcome o;
  o.pass = failures == 0;
  o.report = json{{"samples", samples},
                  {"on_support", on},
                  {"outside_localization", outside},
                  {"failures", failures},
                  {"pass", o.pass}};
  o.summary = (o.pass ? "PASS" : "FAIL") +
              std::string(": conjugated stabilizer samples on the support zero set; ") +
              std::to_string(on) + " on-support, " + std::to_string(outside) +
              " outside localization, " + std::to_string(failures) + " failures";
  return o;
}

Outcome trace_consistency(std::size_t n, const std::vector<ut::Rational>& lambdas,
                          const ut::TestFunction& phi, std::uint64_t samples,
                          std::uint64_t seed, double tolerance) {
  ut::OrbitParams p;
  p.variant = n % 2 == 0 ? ut::OrbitVariant::RegularEven : ut::OrbitVariant::RegularOdd;
  p.k = n / 2;
  p.lambdas = lambdas;
  p.validate();
  if (p.n() != n) throw std::invalid_argument("trace-check: lambdas length does not match n");

  ut::TraceOptions opts;
  opts.samples = samples;
  opts.seed = seed;
  const ut::MCEstimate trace = ut::operator_trace(p, phi, opts);
  const ut::MCEstimate pair = ut::pair_character(p, phi);
  const double diff = std::abs(trace.value - pair.value);
  const double combined =
      std::sqrt(trace.std_error * trace.std_error + pair.std_error * pair.std_error);
  const double threshold = 3.0 * combined + tolerance;

  Outcome o;
  o.pass = diff <= threshold;
  o.report = json{{"n", n},
                  {"trace", ut::to_json(trace)},
                  {"pairing", ut::to_json(pair)},
                  {"difference", diff},
                  {"threshold", threshold},
                  {"pass", o.pass}};
  std::ostringstream s;
  s << (o.pass ? "PASS" : "FAIL") << ": n=" << n << " |trace - pairing| = " << diff
    << (o.pass ? " <= " : " > ") << threshold;
  o.summary = s.str();
  return o;
}

Outcome subregular_exact_checks(ut::OrbitVariant v, std::size_t k, std::size_t m,
                                std::uint64_t seed, std::uint64_t samples) {
  ut::Rng rng(seed);
  const ut::OrbitParams p = random_params(v, k, m, rng);
  ut::SupportSampler sampler(p, seed + 1);
  const ut::SupportSystem sys = ut::support_system(p);
  std::uint64_t checked = 0, route_failures = 0, membership_failures = 0,
                perturbation_failures = 0;
  for (std::uint64_t t = 0; t < samples; ++t) {
    const ut::GroupElement g = sampler.next();
    if (ut::d_of_g(g, p).is_zero()) continue;
    ++checked;
    if (ut::support_membership(g, p) != ut::SupportStatus::OnSupport) ++membership_failures;
    const ut::CharacterValue a =
        ut::subregular_character(g, p, ut::PhaseRoute::Gamma1OverCorner);
    const ut::CharacterValue b = ut::subregular_character(g, p, ut::PhaseRoute::Gamma2OverC23);
    if (!(a.on_support && b.on_support && !a.singular && !b.singular &&
          a.modulus == b.modulus && a.phase == b.phase))
      ++route_failures;
    if (!sys.s1.empty()) {
      // Adding 1 to one bullet-block entry moves that c-tilde to 1.
      ut::RationalMatrix pm = g.mat();
      pm.at(sys.s1.front().row, sys.s1.front().col) += ut::Rational(1);
      if (ut::support_membership(ut::GroupElement(std::move(pm)), p) !=
          ut::SupportStatus::OffSupport)
        ++perturbation_failures;
    }
  }
  Outcome o;
  o.pass = checked > 0 && route_failures == 0 && membership_failures == 0 &&
           perturbation_failures == 0;
  o.report = json{{"params", ut::to_json(p)},
                  {"samples", samples},
                  {"checked", checked},
                  {"route_failures", route_failures},
                  {"membership_failures", membership_failures},
                  {"perturbation_failures", perturbation_failures},
                  {"pass", o.pass}};
  std::ostringstream s;
  s << (o.pass ? "PASS" : "FAIL") << ": " << checked
    << " on-support samples; phase-route, membership and perturbation failures: "
    << route_failures << ", " << membership_failures << ", " << perturbation_failures;
  o.summary = s.str();
  return o;
}

int emit(const std::string& subcommand, json config, Outcome o, const std::string& output) {
  o.report["command"] = subcommand;
  o.report["config"] = std::move(config);
  std::cout << o.report.dump(2) << "\n";
  if (!output.empty()) {
    std::ofstream out(output);
    if (!out) throw std::invalid_argument("cannot write output file: " + output);
    out << o.report.dump(2) << "\n";
  }
  std::cerr << o.summary << "\n";
  return o.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact coadjoint-orbit characters for UT(n) with a numerical harness"};
  app.require_subcommand(1);

  std::uint64_t seed = 1, samples = 0;
  double tolerance = -1.0;
  std::string output, matrix_arg, phi_arg;
  bool exact = false;
  app.add_option("--seed", seed, "RNG seed")->capture_default_str();
  app.add_option("--samples", samples, "sample/trial count (0: per-command default)");
  app.add_option("--tolerance", tolerance, "pass tolerance (negative: per-command default)");
  app.add_option("--output", output, "also write the JSON report to this path");
  app.add_flag("--exact", exact, "print rationals as p/q strings instead of doubles");

  ParamFlags stab_p, dim_p, canon_p, char_p, supp_p, ct_p, lemma_p, prop_p, pair_p;

  CLI::App* c_stab = app.add_subcommand("stabilizer", "orbit stabilizer basis");
  stab_p.add_to(c_stab, true);

  CLI::App* c_dim = app.add_subcommand("orbit-dim", "coadjoint orbit dimension");
  c_dim->add_option("--matrix", matrix_arg, "coadjoint element, JSON path or inline");
  dim_p.variant = "regular-even";  // placeholder; params only used when --matrix absent
  CLI::App* c_dim_params = c_dim;  // same flags, optional
  c_dim_params->add_option("--variant", dim_p.variant, "orbit variant (with --k etc.)");
  c_dim_params->add_option("--k", dim_p.k, "");
  c_dim_params->add_option("--m", dim_p.m, "");
  c_dim_params->add_option("--lambdas", dim_p.lambdas, "");
  c_dim_params->add_option("--lambdas1", dim_p.lambdas1, "");
  c_dim_params->add_option("--gammas", dim_p.gammas, "");

  CLI::App* c_canon = app.add_subcommand("canonical", "canonical orbit representative");
  canon_p.add_to(c_canon, true);

  std::string route_name = "gamma1";
  CLI::App* c_char = app.add_subcommand("char-eval", "character value at a group element");
  char_p.add_to(c_char, true);
  c_char->add_option("--matrix", matrix_arg, "group element, JSON path or inline")->required();
  c_char->add_option("--route", route_name, "subregular phase route: gamma1 | gamma2");

  CLI::App* c_supp = app.add_subcommand("support-check", "support membership of a group element");
  supp_p.add_to(c_supp, true);
  c_supp->add_option("--matrix", matrix_arg, "group element, JSON path or inline")->required();

  std::size_t ct_row = 0, ct_col = 0;
  CLI::App* c_ct = app.add_subcommand("c-tilde", "bordered-minor ratio at one entry");
  ct_p.add_to(c_ct, true);
  c_ct->add_option("--matrix", matrix_arg, "group element, JSON path or inline")->required();
  c_ct->add_option("--row", ct_row, "1-based row of the entry")->required();
  c_ct->add_option("--col", ct_col, "1-based column of the entry")->required();

  CLI::App* c_lemma = app.add_subcommand("verify-lemma",
                                         "computed stabilizer span equals the closed form");
  lemma_p.add_to(c_lemma, false);

  CLI::App* c_prop = app.add_subcommand(
      "verify-proposition", "conjugated stabilizer samples satisfy the support system");
  prop_p.add_to(c_prop, false);

  int theorem = 0;
  CLI::App* c_thm = app.add_subcommand("verify-theorem", "bundled per-theorem verification");
  c_thm->add_option("theorem", theorem, "theorem number 1..5")
      ->required()
      ->check(CLI::Range(1, 5));

  CLI::App* c_pair = app.add_subcommand("pair", "pair the character density with a test function");
  pair_p.add_to(c_pair, true);
  c_pair->add_option("--phi", phi_arg, "test function, JSON path or inline");

  std::size_t tc_n = 0;
  std::string tc_lambdas;
  CLI::App* c_trace = app.add_subcommand("trace-check",
                                         "operator trace vs density pairing consistency");
  c_trace->add_option("--n", tc_n, "group size, 2..4")->required();
  c_trace->add_option("--lambdas", tc_lambdas, "comma-separated rationals, length floor(n/2)");
  c_trace->add_option("--phi", phi_arg, "test function, JSON path or inline");

  std::string dc_lambdas = "1/2,1,3";
  double dc_window = 0.0, dc_sigma = 1.0, dc_center = 0.0;
  CLI::App* c_delta = app.add_subcommand("delta-check", "windowed delta identity quadrature");
  c_delta->add_option("--lambdas", dc_lambdas, "comma-separated nonzero frequencies")
      ->capture_default_str();
  c_delta->add_option("--window", dc_window, "window width (0: auto 6/|lambda|)");
  c_delta->add_option("--sigma", dc_sigma, "Gaussian sigma")->capture_default_str();
  c_delta->add_option("--center", dc_center, "Gaussian center")->capture_default_str();

  for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    json config{{"seed", seed}, {"exact", exact}};

    if (*c_stab) {
      const ut::OrbitParams p = stab_p.resolve();
      config["params"] = ut::to_json(p);
      const ut::CoadjointElement f = ut::canonical_form(p);
      const ut::StabilizerBasis computed = ut::stabilizer_algebra(f);
      Outcome o;
      json basis = json::array();
      for (const ut::AlgebraElement& e : computed.elements) basis.push_back(ut::to_json(e));
      o.report = json{{"orbit_dimension", ut::orbit_dimension(f)},
                      {"stabilizer_dimension", computed.elements.size()},
                      {"basis", std::move(basis)}};
      std::string extra;
      if (ut::is_subregular(p.variant)) {
        const ut::StabilizerBasis predicted = ut::predicted_stabilizer(p);
        json pj = json::array();
        for (const ut::AlgebraElement& e : predicted.elements) pj.push_back(ut::to_json(e));
        const bool match = ut::same_span(computed, predicted, p.n());
        o.report["predicted"] = std::move(pj);
        o.report["spans_match"] = match;
        extra = match ? "; closed-form span matches" : "; closed-form span DIFFERS";
      }
      o.summary = "stabilizer dimension " + std::to_string(computed.elements.size()) + extra;
      return emit("stabilizer", config, o, output);
    }

    if (*c_dim) {
      ut::CoadjointElement f = ut::CoadjointElement::zero(2);
      if (!matrix_arg.empty()) {
        const json doc = load_doc(matrix_arg);
        config["matrix"] = doc;
        f = ut::coadjoint_from_json(doc);
      } else {
        const ut::OrbitParams p = dim_p.resolve();
        config["params"] = ut::to_json(p);
        f = ut::canonical_form(p);
      }
      Outcome o;
      const std::size_t d = ut::orbit_dimension(f);
      o.report = json{{"dimension", d}};
      o.summary = "orbit dimension " + std::to_string(d);
      return emit("orbit-dim", config, o, output);
    }

    if (*c_canon) {
      const ut::OrbitParams p = canon_p.resolve();
      config["params"] = ut::to_json(p);
      Outcome o;
      o.report = json{{"element", ut::to_json(ut::canonical_form(p))},
                      {"partition", ut::to_json(p.partition())}};
      o.summary = "canonical form for " + ut::variant_name(p.variant) + " (n = " +
                  std::to_string(p.n()) + ")";
      return emit("canonical", config, o, output);
    }

    if (*c_char) {
      const ut::OrbitParams p = char_p.resolve();
      const json doc = load_doc(matrix_arg);
      config["params"] = ut::to_json(p);
      config["matrix"] = doc;
      config["route"] = route_name;
      const ut::GroupElement g = ut::group_from_json(doc);
      ut::PhaseRoute route;
      if (route_name == "gamma1")
        route = ut::PhaseRoute::Gamma1OverCorner;
      else if (route_name == "gamma2")
        route = ut::PhaseRoute::Gamma2OverC23;
      else
        throw std::invalid_argument("--route must be gamma1 or gamma2");
      const ut::CharacterValue v = ut::is_subregular(p.variant)
                                       ? ut::subregular_character(g, p, route)
                                       : ut::regular_character(g, p);
      Outcome o;
      o.report = json{{"value", ut::to_json(v, exact)}};
      if (v.outside_localization)
        o.summary = "outside the localization (d(g) = 0)";
      else if (!v.on_support)
        o.summary = "off the support; value 0";
      else if (v.singular)
        o.summary = "on the support but a required minor vanishes";
      else
        o.summary = "modulus " + v.modulus.str() + ", phase " + v.phase.str() + " of a turn";
      return emit("char-eval", config, o, output);
    }

    if (*c_supp) {
      const ut::OrbitParams p = supp_p.resolve();
      const json doc = load_doc(matrix_arg);
      config["params"] = ut::to_json(p);
      config["matrix"] = doc;
      const ut::GroupElement g = ut::group_from_json(doc);
      Outcome o;
      const ut::SupportStatus st = ut::support_membership(g, p);
      o.report = json{{"status", status_name(st)}, {"d", ut::d_of_g(g, p).str()}};
      o.summary = status_name(st);
      return emit("support-check", config, o, output);
    }

    if (*c_ct) {
      const ut::OrbitParams p = ct_p.resolve();
      const json doc = load_doc(matrix_arg);
      config["params"] = ut::to_json(p);
      config["matrix"] = doc;
      config["row"] = ct_row;
      config["col"] = ct_col;
      if (ct_row < 1 || ct_col < 1) throw std::invalid_argument("--row/--col are 1-based");
      const ut::GroupElement g = ut::group_from_json(doc);
      const ut::PhiSet phi = p.variant == ut::OrbitVariant::SubregularEven ? ut::phi_even()
                                                                           : ut::phi_odd();
      const std::optional<ut::Rational> v =
          ut::c_tilde(g, p.partition(), ct_row - 1, ct_col - 1, phi);
      Outcome o;
      o.report = json{{"defined", v.has_value()}};
      if (v) {
        o.report["value"] = v->str();
        o.summary = "c~(" + std::to_string(ct_row) + "," + std::to_string(ct_col) + ") = " +
                    v->str();
      } else {
        o.summary = "undefined: the phi-subset minor vanishes";
      }
      return emit("c-tilde", config, o, output);
    }

    if (*c_lemma) {
      const std::uint64_t trials = samples ? samples : 20;
      config["samples"] = trials;
      Outcome o;
      if (lemma_p.has_values()) {
        const ut::OrbitParams p = lemma_p.resolve();
        config["params"] = ut::to_json(p);
        const bool match = ut::same_span(ut::stabilizer_algebra(ut::canonical_form(p)),
                                         ut::predicted_stabilizer(p), p.n());
        o.pass = match;
        o.report = json{{"trials", 1}, {"failures", match ? 0 : 1}, {"pass", match}};
        o.summary = std::string(match ? "PASS" : "FAIL") +
                    ": computed stabilizer span vs closed form";
      } else {
        config["variant"] = lemma_p.variant;
        config["k"] = lemma_p.k;
        config["m"] = lemma_p.m;
        o = lemma_sweep(ut::variant_from_name(lemma_p.variant), lemma_p.k, lemma_p.m, seed,
                        trials);
      }
      return emit("verify-lemma", config, o, output);
    }

    if (*c_prop) {
      const std::uint64_t n_samples = samples ? samples : 200;
      config["samples"] = n_samples;
      ut::Rng rng(seed);
      const ut::OrbitParams p =
          prop_p.has_values()
              ? prop_p.resolve()
              : random_params(ut::variant_from_name(prop_p.variant), prop_p.k, prop_p.m, rng);
      config["params"] = ut::to_json(p);
      return emit("verify-proposition", config, membership_sweep(p, seed, n_samples), output);
    }

    if (*c_thm) {
      config["theorem"] = theorem;
      Outcome o;
      json parts = json::array();
      auto fold = [&](Outcome part) {
        o.pass = o.pass && part.pass;
        o.summary += (o.summary.empty() ? "" : "\n") + part.summary;
        parts.push_back(std::move(part.report));
      };
      if (theorem == 1 || theorem == 2) {
        const std::uint64_t n_samples = samples ? samples : 1000000;
        config["samples"] = n_samples;
        const double tol = tolerance < 0 ? 0.0 : tolerance;
        for (std::size_t n : theorem == 1 ? std::vector<std::size_t>{2, 4}
                                          : std::vector<std::size_t>{3}) {
          std::vector<ut::Rational> ls =
              n == 4 ? parse_rationals("1/2,1/2") : parse_rationals("1");
          fold(trace_consistency(n, ls, ut::TestFunction(n, {0.0, 0.25}), n_samples, seed, tol));
        }
      } else if (theorem == 3 || theorem == 4) {
        const std::uint64_t n_samples = samples ? samples : 100;
        config["samples"] = n_samples;
        const ut::OrbitVariant v = theorem == 3 ? ut::OrbitVariant::SubregularEven
                                                : ut::OrbitVariant::SubregularOdd;
        fold(subregular_exact_checks(v, 1, 1, seed, n_samples));
        fold(subregular_exact_checks(v, 2, 1, seed + 1, n_samples));
      } else {
        const std::uint64_t n_samples = samples ? samples : 200;
        config["samples"] = n_samples;
        ut::Rng rng(seed);
        for (const ut::OrbitVariant v :
             {ut::OrbitVariant::SubregularEven, ut::OrbitVariant::SubregularOdd}) {
          for (const auto [kk, mm] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}}) {
            const ut::OrbitParams p = random_params(v, kk, mm, rng);
            Outcome part = membership_sweep(p, seed, n_samples);
            part.report["params"] = ut::to_json(p);
            fold(std::move(part));
          }
        }
      }
      o.report = json{{"checks", std::move(parts)}, {"pass", o.pass}};
      return emit("verify-theorem", config, o, output);
    }

    if (*c_pair) {
      const ut::OrbitParams p = pair_p.resolve();
      config["params"] = ut::to_json(p);
      std::optional<json> phi_doc;
      if (!phi_arg.empty()) phi_doc = load_doc(phi_arg);
      const ut::TestFunction phi = phi_from_doc(p.n(), phi_doc);
      config["phi"] = phi_to_json(phi);
      Outcome o;
      const ut::MCEstimate est = ut::pair_character(p, phi);
      o.report = json{{"result", ut::to_json(est)}};
      std::ostringstream s;
      s << "pairing = " << est.value.real() << (est.value.imag() < 0 ? " - " : " + ")
        << std::abs(est.value.imag()) << "i (err ~ " << est.std_error << ")";
      o.summary = s.str();
      return emit("pair", config, o, output);
    }

    if (*c_trace) {
      if (tc_n < 2 || tc_n > 4)
        throw std::invalid_argument("trace-check: --n must be 2, 3 or 4");
      const std::uint64_t n_samples = samples ? samples : 1000000;
      const double tol = tolerance < 0 ? 0.0 : tolerance;
      std::vector<ut::Rational> ls =
          tc_lambdas.empty()
              ? parse_rationals(tc_n == 4 ? "1/2,1/2" : "1")
              : parse_rationals(tc_lambdas);
      std::optional<json> phi_doc;
      if (!phi_arg.empty()) phi_doc = load_doc(phi_arg);
      const ut::TestFunction phi = phi_from_doc(tc_n, phi_doc);
      config["n"] = tc_n;
      config["samples"] = n_samples;
      config["tolerance"] = tol;
      json lj = json::array();
      for (const ut::Rational& l : ls) lj.push_back(l.str());
      config["lambdas"] = std::move(lj);
      config["phi"] = phi_to_json(phi);
      return emit("trace-check", config,
                  trace_consistency(tc_n, ls, phi, n_samples, seed, tol), output);
    }

    if (*c_delta) {
      const double tol = tolerance < 0 ? 1e-3 : tolerance;
      config["lambdas"] = dc_lambdas;
      config["window"] = dc_window;
      config["tolerance"] = tol;
      config["phi"] = json{{"center", dc_center}, {"sigma", dc_sigma}};
      Outcome o;
      json checks = json::array();
      double worst = 0.0;
      for (const ut::Rational& lr : parse_rationals(dc_lambdas)) {
        const ut::DeltaReport rep =
            ut::delta_identity_check(lr.to_double(), {dc_center, dc_sigma}, dc_window);
        worst = std::max(worst, rep.rel_error);
        json cj = ut::to_json(rep);
        cj["pass"] = rep.rel_error < tol;
        o.pass = o.pass && rep.rel_error < tol;
        checks.push_back(std::move(cj));
      }
      o.report = json{{"checks", std::move(checks)}, {"pass", o.pass}};
      std::ostringstream s;
      s << (o.pass ? "PASS" : "FAIL") << ": worst relative error " << worst
        << " against tolerance " << tol;
      o.summary = s.str();
      return emit("delta-check", config, o, output);
    }

    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
