#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cliff/algebra.hpp"
#include "cliff/conformal.hpp"
#include "cliff/json_io.hpp"
#include "cliff/purespinor.hpp"
#include "cliff/twistor.hpp"
#include "cliff/verify.hpp"

namespace cliff::cli {

namespace {

struct Options {
  std::uint64_t seed = 0;
  bool use_float = false;
  double tolerance = kDefaultTolerance;
  std::string input_path;
  std::string output_path;
  std::string payload;
};

// Exact reals print as "num/den" strings, complex values as [re, im] pairs.
template <CliffordScalar S>
json scalar_out(const S& s, double tol) {
  if constexpr (ScalarTraits<S>::exact) {
    if (s.is_real()) return format_rational(s.real());
    return scalar_pair_to_json(s);
  } else {
    if (std::abs(s.imag()) <= tol) return s.real();
    return scalar_pair_to_json(s);
  }
}

template <CliffordScalar S>
json coords_out(const Multivector<S>& x, double tol) {
  json a = json::array();
  for (const auto& c : paravector_coords(x)) a.push_back(scalar_out(c, tol));
  return a;
}

template <CliffordScalar S>
json pairs_out(const DiracSpinor<S>& psi) {
  json a = json::array();
  for (const auto& c : psi.components) a.push_back(scalar_pair_to_json(c));
  return a;
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InputError(std::string("payload needs \"") + name + "\"");
  return j.at(name);
}

template <CliffordScalar S>
Multivector<S> paravector_in(const json& j) {
  auto v = scalar_list_from_json<S>(j, 4);
  return paravector<S>({v[0], v[1], v[2], v[3]});
}

template <CliffordScalar S>
SpacetimeVector<S> vector_in(const json& j) {
  auto v = scalar_list_from_json<S>(j, 4);
  return {v[0], v[1], v[2], v[3]};
}

// "pi": four components, or "xi": the two dotted components.
template <CliffordScalar S>
WeylSpinor<S> spinor_in(const json& j, double tol) {
  if (j.is_object() && j.contains("xi")) {
    auto xi = scalar_list_from_json<S>(j.at("xi"), 2);
    return WeylSpinor<S>::dotted(xi[0], xi[1]);
  }
  auto c = scalar_list_from_json<S>(field(j, "pi"), 4);
  return WeylSpinor<S>({{c[0], c[1], c[2], c[3]}}, Chirality::dotted, tol);
}

template <CliffordScalar S>
MobiusElement<S> map_in(const json& spec, double tol) {
  if (spec.is_array()) {
    if (spec.empty()) throw InputError("map word must not be empty");
    auto g = map_in<S>(spec[0], tol);
    for (std::size_t k = 1; k < spec.size(); ++k) g = compose(g, map_in<S>(spec[k], tol), tol);
    return g;
  }
  const json& type = field(spec, "type");
  if (!type.is_string()) throw InputError("map \"type\" must be a string");
  const std::string t = type.get<std::string>();
  if (t == "identity") return make_identity<S>();
  if (t == "translation") return make_translation(paravector_in<S>(field(spec, "h")));
  if (t == "transvection") return make_transvection(paravector_in<S>(field(spec, "h")));
  if (t == "dilation") return make_dilation(scalar_pair_from_json<S>(field(spec, "rho")));
  if (t == "inversion") return make_inversion<S>();
  if (t == "rotation") {
    json g = field(spec, "g");
    if (g.is_object() && !g.contains("sig")) g["sig"] = json::array({3, 0});
    auto rotor = multivector_from_json<S>(g);
    if (!(rotor.signature() == sig::cl30())) throw InputError("rotation \"g\" must lie in Cl(3,0)");
    return make_rotation(rotor, tol);
  }
  throw InputError("unknown map type \"" + t + "\"");
}

template <CliffordScalar S>
json run_transform(const json& payload, double tol) {
  const auto g = map_in<S>(field(payload, "map"), tol);
  const auto x = paravector_in<S>(field(payload, "point"));
  json out;
  try {
    auto image = apply_mobius(g, x, tol);
    out["x"] = coords_out(image.x, tol);
    out["delta"] = scalar_out(image.delta, tol);
    out["at_infinity"] = false;
  } catch (const AtInfinity&) {
    const S norm = scalar_value(x * clifford_conjugation(x), tol, "x x̄");
    auto p = twisted_adjoint(g, ParavectorPoint<S>{x, norm, scalar_from_int<S>(1)}, tol);
    out["x"] = nullptr;
    out["delta"] = scalar_out(S{}, tol);
    out["at_infinity"] = true;
    out["projective"] = {{"x", coords_out(p.x, tol)}, {"lambda", scalar_out(p.lambda, tol)}, {"mu", scalar_out(p.mu, tol)}};
  }
  return out;
}

template <CliffordScalar S>
json run_twistor(const std::string& mode, const json& payload, double tol) {
  const auto pi = spinor_in<S>(payload, tol);
  if (mode == "build") {
    const auto x = vector_in<S>(field(payload, "x"));
    return {{"eta", pairs_out(reference_twistor(x, pi).eta)}};
  }
  if (mode == "incidence") {
    const auto x = vector_in<S>(field(payload, "x"));
    const auto xp = vector_in<S>(field(payload, "x_prime"));
    return {{"J", scalar_pair_to_json(incidence(x, xp, pi))}};
  }
  const auto x = vector_in<S>(field(payload, "x"));
  long lo = -2, hi = 2;
  if (payload.contains("grid")) {
    const json& grid = payload.at("grid");
    const json& jl = field(grid, "lo");
    const json& jh = field(grid, "hi");
    if (!jl.is_number_integer() || !jh.is_number_integer()) throw InputError("grid bounds must be integers");
    lo = jl.get<long>();
    hi = jh.get<long>();
    if (lo > hi || hi - lo > 20) throw InputError("grid bounds must satisfy lo <= hi and hi - lo <= 20");
  }
  json hits = json::array();
  for (const auto& h : robinson_locus(x, pi, integer_grid<S>(lo, hi), tol)) {
    json p = json::array();
    for (const auto& c : h) p.push_back(scalar_out(c, tol));
    hits.push_back(p);
  }
  return {{"grid", {{"lo", lo}, {"hi", hi}}}, {"count", hits.size()}, {"hits", hits}};
}

json multivector_out(const Multivector<Exact>& m, bool use_float) {
  return use_float ? multivector_to_json(to_complex(m)) : multivector_to_json(m);
}

json run_pure(const std::string& mode, const json& payload, bool use_float) {
  const json& spinor = payload.is_object() && payload.contains("spinor") ? payload.at("spinor") : payload;
  const auto u = fock_spinor_from_json(spinor);
  if (u.is_zero()) throw InputError("spinor must be nonzero");
  if (mode == "check") {
    const auto s = annihilator(u);
    return {{"pure", s.dim() == static_cast<std::size_t>(u.n())}, {"dim", s.dim()}, {"n", u.n()}};
  }
  if (mode == "orbit-dim") return {{"dim", orbit_dimension(u)}, {"coset_dim", coset_dim(u.n())}};
  json out;
  out["p"] = multivector_out(flag_vector(u), use_float);
  out["F"] = multivector_out(penrose_flagpole(u), use_float);
  const bool identity = conjugation_identity_holds(u);
  out["conjugation_identity"] = identity;
  out["G"] = identity ? multivector_out(generalized_flagpole(u), use_float) : json(nullptr);
  return out;
}

json read_payload(const Options& opt) {
  std::string text = opt.payload;
  if (!opt.input_path.empty()) {
    if (!text.empty()) throw InputError("give the payload inline or with --input, not both");
    std::ifstream in(opt.input_path);
    if (!in) throw InputError("cannot read " + opt.input_path);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  if (text.empty()) throw InputError("missing JSON payload (inline argument or --input)");
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

int emit(const json& doc, const Options& opt, std::ostream& out, std::ostream& err) {
  const std::string text = doc.dump(2) + "\n";
  if (opt.output_path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(opt.output_path, std::ios::binary);
  if (!file) {
    err << "error: cannot write " << opt.output_path << "\n";
    return kExitUsage;
  }
  file << text;
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Clifford-algebra toolkit for spacetime conformal maps, twistors and pure spinors", "cliff"};
  app.require_subcommand(1);
  // Global options are accepted before or after the subcommand.
  app.fallthrough();
  Options opt;
  app.add_option("--seed", opt.seed, "Seed for randomized sweeps");
  app.add_flag("--float", opt.use_float, "Use double-precision complex arithmetic");
  app.add_option("--tolerance", opt.tolerance, "Zero tolerance in float mode")->check(CLI::PositiveNumber);
  app.add_option("--input", opt.input_path, "Read the JSON payload from a file");
  app.add_option("--output", opt.output_path, "Write the result to a file");

  std::string scope = "all";
  auto* verify = app.add_subcommand("verify", "Run identity suites and print a report");
  verify->add_option("scope", scope, "all | algebra | conformal | generators | twistor | pure");
  std::string convention = "standard";
  verify->add_option("--m-convention", convention, "Rotation generator index order: standard | reversed")
      ->check(CLI::IsMember({"standard", "reversed"}));

  auto* transform = app.add_subcommand("transform", "Apply a conformal map to a paravector point");
  transform->add_option("payload", opt.payload, "Inline JSON payload");

  std::string mode;
  auto* twistor = app.add_subcommand("twistor", "Twistor construction, incidence and locus");
  twistor->add_option("mode", mode, "build | incidence | locus")->required()->check(
      CLI::IsMember({"build", "incidence", "locus"}));
  twistor->add_option("payload", opt.payload, "Inline JSON payload");

  auto* pure = app.add_subcommand("pure", "Purity, orbit dimension and flagpoles of Fock spinors");
  pure->add_option("mode", mode, "check | orbit-dim | flagpole")->required()->check(
      CLI::IsMember({"check", "orbit-dim", "flagpole"}));
  pure->add_option("payload", opt.payload, "Inline JSON payload");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (verify->parsed()) {
      auto parsed = parse_scope(scope);
      if (!parsed) {
        err << "usage error: unknown scope \"" << scope << "\"\n";
        return kExitUsage;
      }
      const auto conv = convention == "standard" ? MConvention::standard : MConvention::reversed;
      auto report = run_verify(*parsed, opt.seed, conv);
      json doc = report.to_json();
      doc["seed"] = opt.seed;
      doc["m_convention"] = convention;
      int rc = emit(doc, opt, out, err);
      if (rc != kExitOk) return rc;
      return report.passed() ? kExitOk : kExitChecksFailed;
    }
    const json payload = read_payload(opt);
    json result;
    if (transform->parsed()) {
      result = opt.use_float ? run_transform<Complex>(payload, opt.tolerance) : run_transform<Exact>(payload, opt.tolerance);
    } else if (twistor->parsed()) {
      result = opt.use_float ? run_twistor<Complex>(mode, payload, opt.tolerance)
                             : run_twistor<Exact>(mode, payload, opt.tolerance);
    } else {
      result = run_pure(mode, payload, opt.use_float);
    }
    return emit(result, opt, out, err);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const NotInvertible& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const SignatureMismatch& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace cliff::cli
