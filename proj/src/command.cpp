#include "triality/command.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "triality/error.hpp"
#include "triality/json_io.hpp"

namespace triality {

namespace {

using io::json;

struct Ctx {
  const json& input;
  const json& options;
  ScalarMode mode = ScalarMode::rational;

  // Option value, falling back to the input field of the same name.
  const json* get(const char* key) const {
    if (options.is_object()) {
      auto it = options.find(key);
      if (it != options.end() && !it->is_null()) return &*it;
    }
    if (input.is_object()) {
      auto it = input.find(key);
      if (it != input.end() && !it->is_null()) return &*it;
    }
    return nullptr;
  }

  const json& need(const char* key) const {
    if (const json* j = get(key)) return *j;
    throw ParseError(std::string("/") + key, "missing field");
  }

  long integer(const char* key, long fallback) const {
    const json* j = get(key);
    if (!j) return fallback;
    if (j->is_number_integer()) return j->get<long>();
    if (j->is_string()) {
      try {
        std::size_t used = 0;
        const std::string s = j->get<std::string>();
        long v = std::stol(s, &used);
        if (used == s.size()) return v;
      } catch (const std::logic_error&) {
      }
    }
    throw ParseError(std::string("/") + key, "expected an integer");
  }

  bool boolean(const char* key, bool fallback) const {
    const json* j = get(key);
    if (!j) return fallback;
    if (!j->is_boolean()) throw ParseError(std::string("/") + key, "expected a boolean");
    return j->get<bool>();
  }

  // Explicit prime list, or empty.
  std::vector<std::uint64_t> primes() const {
    std::vector<std::uint64_t> out;
    const json* j = get("primes");
    if (!j) return out;
    if (!j->is_array()) throw ParseError("/primes", "expected an array of primes");
    for (std::size_t i = 0; i < j->size(); ++i) {
      const json& v = (*j)[i];
      if (!v.is_number_integer() || v.get<long>() < 2) {
        throw ParseError("/primes/" + std::to_string(i), "expected a prime");
      }
      out.push_back(v.get<std::uint64_t>());
    }
    return out;
  }
};

json doc(json body) {
  json out{{"schema", io::kSchema}};
  for (auto& [k, v] : body.items()) out[k] = std::move(v);
  return out;
}

// Primes at which every constituent of the parameter has data.
std::vector<std::uint64_t> common_primes(const ArthurParam& p) {
  std::vector<std::uint64_t> out;
  if (p.terms.empty()) return out;
  for (const auto& [prime, m] : p.terms.front().pi.satake) {
    bool all = true;
    for (const auto& t : p.terms) all = all && t.pi.satake.count(prime);
    if (all) out.push_back(prime);
  }
  return out;
}

json evaluations(const ArthurParam& p, const std::vector<std::uint64_t>& primes, ScalarMode mode) {
  json ev = json::object();
  for (auto prime : primes) ev[std::to_string(prime)] = io::write_multiset(param_satake_at_p(p, prime, mode));
  return ev;
}

// -------------------------------------------------------------- spin8

json cmd_verify_triple(const Ctx& c) {
  auto g = io::read_triple_matrices(c.input, "", c.mode);
  auto diag = diagnose_spin_triple(g[0], g[1], g[2]);
  json out{{"valid", !diag.has_value()}};
  if (diag) out["reason"] = diag->describe();
  return out;
}

json cmd_theta(const Ctx& c) {
  SpinTriple s = io::read_triple(c.input, "", c.mode);
  const long power = ((c.integer("power", 1) % 3) + 3) % 3;
  for (long k = 0; k < power; ++k) s = triality_theta(s);
  return json{{"triple", io::write_triple(s)}};
}

json cmd_lift(const Ctx& c) {
  const Octonion x = io::read_octonion(c.need("x"), "/x", c.mode);
  const Octonion y = io::read_octonion(c.need("y"), "/y", c.mode);
  const SpinTriple s = lift_reflection_pair(x, y);
  return json{{"triple", io::write_triple(s)},
              {"spinor_norm", io::write_scalar(oct_norm(x) * oct_norm(y))},
              {"rho1_is_reflection_product", rho(1, s) == reflection(x) * reflection(y)}};
}

json signs_json(const CenterElement& e) { return json::array({e.signs[0], e.signs[1], e.signs[2]}); }

json cmd_center(const Ctx&) {
  json elements = json::array();
  for (const auto& e : center_enumerate()) elements.push_back(json{{"signs", signs_json(e)}, {"label", e.label()}});
  json kernels = json::object();
  json theta = json::object();
  for (int j = 1; j <= 3; ++j) {
    json k = json::array();
    for (const auto& e : kernel_of_rho(j)) k.push_back(signs_json(e));
    kernels[std::to_string(j)] = k;
    theta[std::to_string(j)] = theta_on_center(CenterElement::from_label(j)).label();
  }
  return json{{"elements", elements}, {"kernels", kernels}, {"theta_on_labels", theta}};
}

json cmd_trispin_check(const Ctx& c) {
  const TriSpinElement z = io::read_trispin(c.input, "", c.mode);
  const SpinTriple& s = z.spin();
  const Scalar t = c.get("j_t") ? io::read_scalar(*c.get("j_t"), "/j_t", c.mode) : z.t(1);
  if (t.is_zero()) throw Error(ErrorCode::ZeroScalar, "j_t must be nonzero");
  json checks = json::object();
  bool all = true;
  auto record = [&](const std::string& name, bool ok) {
    checks[name] = ok;
    all = all && ok;
  };
  record("theta_order_3", trispin_theta(trispin_theta(trispin_theta(z))) == z);
  for (int label = 1; label <= 3; ++label) {
    const CenterElement e = CenterElement::from_label(label);
    const CenterElement e1 = theta_on_center(e);
    const std::string suffix = "_e" + std::to_string(label);
    record("rho_e_equals_rho_next_theta" + suffix, trispin_rho_e(e, z) == trispin_rho_e(e1, trispin_theta(z)));
    record("theta_j_e_equals_j_next_theta" + suffix,
           trispin_theta(trispin_j_e(e, t, s)) == trispin_j_e(e1, t, triality_theta(s)));
    const GsoElement killed = trispin_rho_e(e, trispin_j_e(e, t, s));
    record("rho_e_j_e_kills_scalar" + suffix, killed.matrix == rho(label, s) && killed.similitude.is_one());
    const GsoElement scaled = tilde_rho2(e, t, s);
    record("rho_next_j_e_scales_by_t" + suffix,
           scaled.matrix == t * rho(e1.label(), s) && scaled.similitude == t * t);
    record("rho_next_j_e_factors_through_theta" + suffix,
           scaled == trispin_rho_e(e, trispin_theta_inverse(trispin_j_e(e, t, s))));
  }
  return json{{"checks", checks}, {"all", all}, {"canonical", io::write_trispin(z.canonical())}};
}

// -------------------------------------------------------------- satake

GSpinParam param_input(const Ctx& c) {
  const json& j = c.input.contains("param") ? c.input["param"] : c.input;
  return io::read_param(j, c.input.contains("param") ? "/param" : "", c.mode);
}

GSpinOddParam odd_input(const Ctx& c) {
  const bool nested = c.input.contains("param");
  return io::read_odd_param(nested ? c.input["param"] : c.input, nested ? "/param" : "", c.mode);
}

GSpinEvenParam even_input(const Ctx& c) {
  const bool nested = c.input.contains("param");
  return io::read_even_param(nested ? c.input["param"] : c.input, nested ? "/param" : "", c.mode);
}

json cmd_satake_spin(const Ctx& c) {
  const auto p = odd_input(c);
  return json{{"dimension", std::size_t{1} << p.rank()}, {"eigenvalues", io::write_multiset(spin_eigen(p))}};
}

json cmd_satake_std(const Ctx& c) {
  const GSpinParam p = param_input(c);
  const EigenMultiset m = std::visit([](const auto& x) { return std_eigen(x); }, p);
  return json{{"dimension", m.size()}, {"eigenvalues", io::write_multiset(m)}};
}

json cmd_satake_halfspin(const Ctx& c) {
  const auto p = even_input(c);
  int sign = 1;
  if (const json* s = c.get("sign")) {
    if (s->is_string() && (*s == "+" || *s == "plus")) sign = 1;
    else if (s->is_string() && (*s == "-" || *s == "minus")) sign = -1;
    else if (s->is_number_integer() && (s->get<int>() == 1 || s->get<int>() == -1)) sign = s->get<int>();
    else throw ParseError("/sign", "expected \"+\" or \"-\"");
  }
  const EigenMultiset m = halfspin_eigen(p, sign);
  return json{{"sign", sign > 0 ? "+" : "-"}, {"dimension", m.size()}, {"eigenvalues", io::write_multiset(m)}};
}

json cmd_satake_embed(const Ctx& c) {
  const std::string kind = c.need("case").is_string() ? c.need("case").get<std::string>() : "";
  const json& in = c.input;
  auto get = [&](const char* key) -> const json& {
    if (!in.contains(key)) throw ParseError(std::string("/") + key, "missing field");
    return in[key];
  };
  auto ptr = [](const char* key) { return std::string("/") + key; };
  if (kind == "iota") {
    return json{{"param", io::write_param(iota_7to8(io::read_odd_param(get("c"), "/c", c.mode)))}};
  }
  if (kind == "nu") {
    return json{{"param", io::write_param(nu_embed(io::read_gl2(get("A"), "/A", c.mode),
                                                   io::read_gl2(get("B"), "/B", c.mode),
                                                   io::read_gl2(get("C"), "/C", c.mode)))}};
  }
  if (kind == "gspin4") {
    return json{{"param", io::write_param(gspin4_from_gl2_pair(io::read_gl2(get("A"), "/A", c.mode),
                                                               io::read_gl2(get("B"), "/B", c.mode)))}};
  }
  if (kind == "gspin3") {
    return json{{"param", io::write_param(gspin3_from_gl2(io::read_gl2(get("C"), "/C", c.mode)))}};
  }
  static const std::map<std::string, EmbedCase> cases{
      {"OddOdd", EmbedCase::OddOdd}, {"EvenEven", EmbedCase::EvenEven}, {"OddEvenToOdd", EmbedCase::OddEvenToOdd}};
  auto it = cases.find(kind);
  if (it == cases.end()) {
    throw ParseError("/case", "expected OddOdd, EvenEven, OddEvenToOdd, iota, nu, gspin4 or gspin3");
  }
  const GSpinParam c1 = io::read_param(get("c1"), ptr("c1"), c.mode);
  const GSpinParam c2 = io::read_param(get("c2"), ptr("c2"), c.mode);
  return json{{"param", io::write_param(embed_spin_torus(it->second, c1, c2))}};
}

json cmd_satake_theta_lift(const Ctx& c) {
  const auto p = odd_input(c);
  if (const json* n = c.get("n")) {
    const long nv = c.integer("n", 0);
    (void)n;
    if (nv < 0 || static_cast<std::size_t>(nv) != p.rank()) {
      throw ParseError("/chi", "parameter has rank " + std::to_string(p.rank()) + " but n = " + std::to_string(nv));
    }
  }
  const long m = c.integer("m", -1);
  if (m < 0) throw ParseError("/m", "missing or negative m");
  Scalar q;
  if (const json* qj = c.get("q")) {
    q = io::read_scalar(*qj, "/q", c.mode);
  } else if (c.mode == ScalarMode::qhalf) {
    q = Scalar::u() * Scalar::u();
  } else if (static_cast<std::size_t>(m) == p.rank() + 1) {
    q = Scalar::one(c.mode);  // no q-power occurs
  } else {
    throw ParseError("/q", "q is required outside the qhalf mode when m > n + 1");
  }
  const GSpinEvenParam out = theta_satake(p, static_cast<std::size_t>(m), q);
  return json{{"param", io::write_param(out)}, {"std", io::write_multiset(std_eigen(out))}};
}

json cmd_satake_g2(const Ctx& c) {
  const auto p = odd_input(c);
  const bool g2 = g2_test(p);
  const EigenMultiset spin = spin_eigen(p);
  const EigenMultiset with_one = EigenMultiset({Scalar::one(p.mode())}) + std_eigen(p);
  return json{{"g2", g2},
              {"spin", io::write_multiset(spin)},
              {"std", io::write_multiset(std_eigen(p))},
              {"spin_equals_one_plus_std", spin == with_one}};
}

json cmd_satake_weights(const Ctx& c) {
  ArchWeightParam wp;
  if (const json* k = c.get("k")) wp = io::read_weights(*k, "/k");
  else wp = io::read_weights(c.input, "");
  json out = io::write_weights(wp);
  out["spin"] = arch_spin(wp);
  out["std"] = arch_std(wp);
  return out;
}

json cmd_satake_spinbar(const Ctx& c) {
  if (c.input.contains("c1")) {
    const auto a = spinbar(io::read_odd_param(c.input["c1"], "/c1", c.mode));
    if (!c.input.contains("c2")) throw ParseError("/c2", "missing field");
    const auto b = spinbar(io::read_odd_param(c.input["c2"], "/c2", c.mode));
    return json{{"equal", a == b}};
  }
  const auto p = spinbar(odd_input(c));
  json out{{"representative", io::write_multiset(p.representative())}};
  if (c.mode != ScalarMode::complex) out["canonical"] = io::write_scalars(p.canonical());
  return out;
}

// -------------------------------------------------------------- arthur

ArthurParam arthur_input(const Ctx& c, const char* key = "param") {
  if (c.input.is_array()) return io::read_arthur(c.input, "", c.mode);
  if (!c.input.contains(key)) throw ParseError(std::string("/") + key, "missing field");
  return io::read_arthur(c.input[key], std::string("/") + key, c.mode);
}

SiegelStdShape shape_input(const Ctx& c) {
  if (c.input.contains("shape")) return io::read_shape(c.input["shape"], "/shape", c.mode);
  return io::read_shape(c.input, "", c.mode);
}

json cmd_arthur_validate(const Ctx& c) {
  const ArthurParam p = arthur_input(c);
  const long target = c.integer("target_degree", p.total_degree());
  const ParamDiagnostics d = validate_param(p, static_cast<int>(target), c.boolean("discrete", false));
  json issues = json::array();
  for (const auto& i : d.issues) issues.push_back(json{{"code", i.code}, {"message", i.message}});
  return json{{"valid", d.valid}, {"total_degree", d.total_degree}, {"target_degree", target}, {"issues", issues}};
}

json cmd_arthur_eval(const Ctx& c) {
  const ArthurParam p = arthur_input(c);
  auto primes = c.primes();
  if (primes.empty()) primes = common_primes(p);
  return json{{"degree", p.total_degree()}, {"evaluations", evaluations(p, primes, c.mode)}};
}

json cmd_arthur_spin_shape(const Ctx& c) {
  const SiegelStdShape s = shape_input(c);
  const ArthurParam spin = spin_shape_of_siegel(s);
  const ArthurParam std7 = std_param_of_siegel(s);
  json out{{"spin", io::write_arthur(spin)},
           {"spin_degree", spin.total_degree()},
           {"std", io::write_arthur(std7)},
           {"std_degree", std7.total_degree()},
           {"pole_at_one", predicts_pole_at_one(spin)}};
  const auto primes = c.primes();
  if (!primes.empty()) out["evaluations"] = evaluations(spin, primes, c.mode);
  return out;
}

json cmd_arthur_variant(const Ctx& c) {
  const std::string src = c.need("source").is_string() ? c.need("source").get<std::string>() : "";
  VariantSource source;
  if (src == "PGSp2") source = VariantSource::PGSp2;
  else if (src == "PGSp4") source = VariantSource::PGSp4;
  else throw ParseError("/source", "expected \"PGSp2\" or \"PGSp4\"");
  auto con = [&](const char* key) {
    if (!c.input.contains(key)) throw ParseError(std::string("/") + key, "missing field");
    return io::read_constituent(c.input[key], std::string("/") + key, c.mode);
  };
  const VariantShapes v = variant_shape(source, con("std"), con("spin"));
  return json{{"f1", io::write_arthur(v.f1)},
              {"f1_degree", v.f1.total_degree()},
              {"f2", io::write_arthur(v.f2)},
              {"f2_degree", v.f2.total_degree()}};
}

json cmd_arthur_remix(const Ctx& c) {
  auto con = [&](const char* key) {
    if (!c.input.contains(key)) throw ParseError(std::string("/") + key, "missing field");
    return io::read_constituent(c.input[key], std::string("/") + key, c.mode);
  };
  const RemixResult r = remix(RemixQuad{con("heart"), con("diamond"), con("spade"), con("club")});
  auto primes = c.primes();
  if (primes.empty()) primes = common_primes(r.before);
  json ev = json::object();
  for (auto p : primes) {
    const EigenMultiset b = param_satake_at_p(r.before, p, c.mode);
    const EigenMultiset a = param_satake_at_p(r.after, p, c.mode);
    ev[std::to_string(p)] = json{{"before", io::write_multiset(b)}, {"after", io::write_multiset(a)}, {"equal", a == b}};
  }
  return json{{"before", io::write_arthur(r.before)}, {"after", io::write_arthur(r.after)}, {"evaluations", ev}};
}

json cmd_arthur_tensor(const Ctx& c) {
  const EigenMultiset a = io::read_multiset(c.need("c2"), "/c2", c.mode);
  const EigenMultiset b = io::read_multiset(c.need("c4"), "/c4", c.mode);
  return json{{"eigenvalues", io::write_multiset(rankin_selberg_tensor(a, b))}};
}

// -------------------------------------------------------------- lfun

json cmd_lfun_factor(const Ctx& c) {
  const long p = c.integer("p", -1);
  if (p < 2) throw ParseError("/p", "missing or invalid prime");
  const auto prime = static_cast<std::uint64_t>(p);
  EigenMultiset m;
  if (c.input.contains("eigenvalues")) {
    m = io::read_multiset(c.input["eigenvalues"], "/eigenvalues", c.mode);
  } else if (c.input.contains("arthur")) {
    m = param_satake_at_p(io::read_arthur(c.input["arthur"], "/arthur", c.mode), prime, c.mode);
  } else {
    const GSpinParam par = param_input(c);
    const std::string rep = c.get("rep") && c.get("rep")->is_string() ? c.get("rep")->get<std::string>() : "spin";
    if (rep == "std") {
      m = std::visit([](const auto& x) { return std_eigen(x); }, par);
    } else if (rep == "spin") {
      auto* o = std::get_if<GSpinOddParam>(&par);
      if (!o) throw ParseError("/rep", "spin needs a GSpinOdd parameter");
      m = spin_eigen(*o);
    } else if (rep == "halfspin+" || rep == "halfspin-") {
      auto* e = std::get_if<GSpinEvenParam>(&par);
      if (!e) throw ParseError("/rep", "half-spin needs a GSpinEven parameter");
      m = halfspin_eigen(*e, rep.back() == '+' ? 1 : -1);
    } else {
      throw ParseError("/rep", "expected spin, std, halfspin+ or halfspin-");
    }
  }
  const LocalFactor f = local_factor(m, prime, c.mode);
  json out = io::write_factor(f);
  out["degree"] = f.degree();
  out["palindromic"] = f.is_palindromic();
  return out;
}

json cmd_lfun_gamma(const Ctx& c) {
  ArchWeightParam wp;
  if (const json* k = c.get("k")) wp = io::read_weights(*k, "/k");
  else throw ParseError("/k", "missing field");
  const GammaProduct gp = gamma_factor(wp);
  json out{{"shifts", gp.shifts}};
  if (const json* s = c.get("s")) out["value"] = io::write_complex(gamma_eval(gp, io::read_complex(*s, "/s")));
  return out;
}

json nullable(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json cmd_lfun_euler(const Ctx& c) {
  const Complex s = io::read_complex(c.need("s"), "/s");
  const long cutoff = c.integer("cutoff", 1000);
  if (cutoff < 1) throw ParseError("/cutoff", "cutoff must be positive");
  EulerOptions opts;
  if (const json* b = c.get("beta")) {
    if (!b->is_number()) throw ParseError("/beta", "expected a number");
    opts.beta = b->get<double>();
  }
  EulerResult r;
  const json& fam = c.need("family");
  if (fam.is_string()) {
    if (fam != "zeta") throw ParseError("/family", "unknown named family (expected \"zeta\")");
    r = euler_eval(std::function<LocalFactor(std::uint64_t)>([](std::uint64_t p) {
                     return LocalFactor(p, {Scalar::one(ScalarMode::rational), Scalar::integer(-1, ScalarMode::rational)});
                   }),
                   s, static_cast<std::uint64_t>(cutoff), opts);
  } else {
    if (!fam.is_array()) throw ParseError("/family", "expected an array of factors or \"zeta\"");
    std::map<std::uint64_t, LocalFactor> family;
    for (std::size_t i = 0; i < fam.size(); ++i) {
      LocalFactor f = io::read_factor(fam[i], "/family/" + std::to_string(i), c.mode);
      const auto p = f.prime();
      if (!family.emplace(p, std::move(f)).second) {
        throw ParseError("/family/" + std::to_string(i) + "/p", "duplicate prime");
      }
    }
    r = euler_eval(family, s, static_cast<std::uint64_t>(cutoff), opts);
  }
  json out{{"value", io::write_complex(r.value)},
           {"cutoff", r.cutoff},
           {"primes_used", r.primes_used},
           {"last_term", r.last_term},
           {"tail_estimate", nullable(r.tail_estimate)},
           {"abscissa", r.abscissa}};
  if (r.warning) out["warning"] = json{{"code", "ConvergenceWarning"}, {"message", *r.warning}};
  return out;
}

json cmd_lfun_epsilon(const Ctx& c) {
  ArthurParam p;
  if (c.input.contains("shape")) p = spin_shape_of_siegel(io::read_shape(c.input["shape"], "/shape", c.mode));
  else p = arthur_input(c);
  const EpsilonResult e = epsilon_sign(p, c.boolean("generic", false));
  const SpinLMetadata meta = spin_l_metadata(p);
  return json{{"sign", e.sign},
              {"trace", e.trace},
              {"pole_at_one", meta.pole_at_one},
              {"functional_equation", meta.functional_equation},
              {"functional_equation_verified", false}};
}

json cmd_lfun_g2_identity(const Ctx& c) {
  const auto p = odd_input(c);
  const long prime = c.integer("p", 0);
  const G2IdentityReport r = g2_euler_identity(p, static_cast<std::uint64_t>(std::max(0L, prime)));
  return json{{"g2_type", r.g2_type},
              {"holds", r.holds},
              {"spin_factor", io::write_scalars(r.spin.coeffs())},
              {"one_minus_T_times_std_factor", io::write_scalars(r.rhs.coeffs())}};
}

using Handler = std::function<json(const Ctx&)>;

const std::map<std::pair<std::string, std::string>, Handler>& handlers() {
  static const std::map<std::pair<std::string, std::string>, Handler> table{
      {{"verify-triple", ""}, cmd_verify_triple},
      {{"theta", ""}, cmd_theta},
      {{"lift", ""}, cmd_lift},
      {{"center", ""}, cmd_center},
      {{"trispin-check", ""}, cmd_trispin_check},
      {{"satake", "spin"}, cmd_satake_spin},
      {{"satake", "std"}, cmd_satake_std},
      {{"satake", "halfspin"}, cmd_satake_halfspin},
      {{"satake", "embed"}, cmd_satake_embed},
      {{"satake", "theta-lift"}, cmd_satake_theta_lift},
      {{"satake", "g2"}, cmd_satake_g2},
      {{"satake", "weights"}, cmd_satake_weights},
      {{"satake", "spinbar"}, cmd_satake_spinbar},
      {{"arthur", "validate"}, cmd_arthur_validate},
      {{"arthur", "eval"}, cmd_arthur_eval},
      {{"arthur", "spin-shape"}, cmd_arthur_spin_shape},
      {{"arthur", "variant"}, cmd_arthur_variant},
      {{"arthur", "remix"}, cmd_arthur_remix},
      {{"arthur", "tensor"}, cmd_arthur_tensor},
      {{"lfun", "factor"}, cmd_lfun_factor},
      {{"lfun", "gamma"}, cmd_lfun_gamma},
      {{"lfun", "euler"}, cmd_lfun_euler},
      {{"lfun", "epsilon"}, cmd_lfun_epsilon},
      {{"lfun", "g2-identity"}, cmd_lfun_g2_identity},
  };
  return table;
}

ScalarMode resolve_mode(const json& input, const json& options) {
  std::optional<ScalarMode> from_opt, from_in;
  if (options.is_object() && options.contains("mode") && !options["mode"].is_null()) {
    from_opt = io::mode_of(options, "", ScalarMode::rational);
  }
  if (input.is_object() && input.contains("mode")) from_in = io::mode_of(input, "", ScalarMode::rational);
  if (from_opt && from_in && *from_opt != *from_in) {
    throw ParseError("/mode", "input declares mode " + std::string(mode_name(*from_in)) + " but --mode is " +
                                  std::string(mode_name(*from_opt)));
  }
  return from_opt ? *from_opt : from_in ? *from_in : ScalarMode::rational;
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& command_table() {
  static const std::vector<std::pair<std::string, std::string>> names = [] {
    std::vector<std::pair<std::string, std::string>> v;
    for (const auto& [k, h] : handlers()) v.push_back(k);
    return v;
  }();
  return names;
}

nlohmann::json run_command(const std::string& command, const std::string& subcommand, const nlohmann::json& input,
                           const nlohmann::json& options) {
  auto it = handlers().find({command, subcommand});
  if (it == handlers().end()) {
    const std::string name = subcommand.empty() ? command : command + " " + subcommand;
    throw Error(ErrorCode::UnknownCommand, "unknown command '" + name + "'");
  }
  if (input.is_object() && input.contains("schema") && input["schema"] != io::kSchema) {
    throw ParseError("/schema", "unsupported schema (expected \"v1\")");
  }
  Ctx ctx{input, options};
  ctx.mode = resolve_mode(input, options);
  return doc(it->second(ctx));
}

}  // namespace triality
