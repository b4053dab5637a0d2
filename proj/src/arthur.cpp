#include "triality/arthur.hpp"

#include <set>

#include "triality/error.hpp"

namespace triality {

namespace {

std::string prime_str(std::uint64_t p) { return std::to_string(p); }

std::set<std::uint64_t> primes_of(const CuspConstituent& c) {
  std::set<std::uint64_t> out;
  for (const auto& [p, m] : c.satake) out.insert(p);
  return out;
}

ArthurTerm term(CuspConstituent c, int d = 1) { return ArthurTerm{std::move(c), d}; }

CuspConstituent trivial_on(const std::set<std::uint64_t>& primes, ScalarMode mode) {
  return CuspConstituent::trivial(std::vector<std::uint64_t>(primes.begin(), primes.end()), mode);
}

ScalarMode mode_of(const CuspConstituent& c) {
  for (const auto& [p, m] : c.satake) {
    if (!m.empty()) return m.items().front().mode();
  }
  return ScalarMode::rational;
}

CuspConstituent dual_constituent(const CuspConstituent& c) {
  CuspConstituent out = c;
  out.label = c.label + "^v";
  for (auto& [p, m] : out.satake) m = m.dual();
  return out;
}

void require_degree(const CuspConstituent& c, int degree, const char* role) {
  c.validate();
  if (c.degree != degree) {
    throw Error(ErrorCode::ShapeInvalid, std::string(role) + " '" + c.label + "' must have degree " +
                                             std::to_string(degree) + ", got " + std::to_string(c.degree));
  }
}

}  // namespace

std::string_view selfdual_name(SelfDualType t) {
  switch (t) {
    case SelfDualType::orthogonal: return "orthogonal";
    case SelfDualType::symplectic: return "symplectic";
    case SelfDualType::none: return "none";
    case SelfDualType::unspecified: return "unspecified";
  }
  return "unspecified";
}

SelfDualType parse_selfdual(std::string_view name) {
  if (name == "orthogonal") return SelfDualType::orthogonal;
  if (name == "symplectic") return SelfDualType::symplectic;
  if (name == "none") return SelfDualType::none;
  if (name == "unspecified") return SelfDualType::unspecified;
  throw ParseError("", "unknown self-duality type '" + std::string(name) + "'");
}

// ---------------------------------------------------------- constituents

void CuspConstituent::validate() const {
  if (degree < 1) throw Error(ErrorCode::DegreeMismatch, "constituent '" + label + "' has degree < 1");
  if (selfdual == SelfDualType::symplectic && degree % 2 != 0) {
    throw Error(ErrorCode::DegreeMismatch, "symplectic constituent '" + label + "' needs even degree");
  }
  if (root_number && *root_number != 1 && *root_number != -1) {
    throw Error(ErrorCode::ShapeInvalid, "root number of '" + label + "' must be +1 or -1");
  }
  for (const auto& [p, m] : satake) {
    if (m.size() != static_cast<std::size_t>(degree)) {
      throw Error(ErrorCode::SizeMismatch, "constituent '" + label + "' at p = " + prime_str(p) +
                                               " has " + std::to_string(m.size()) +
                                               " Satake entries, expected " + std::to_string(degree));
    }
  }
}

const EigenMultiset& CuspConstituent::satake_at(std::uint64_t p) const {
  auto it = satake.find(p);
  if (it == satake.end()) {
    throw Error(ErrorCode::MissingSatakeData, "no Satake data for '" + label + "' at p = " + prime_str(p));
  }
  return it->second;
}

CuspConstituent CuspConstituent::trivial(const std::vector<std::uint64_t>& primes, ScalarMode mode) {
  CuspConstituent c;
  c.label = "1";
  c.degree = 1;
  c.selfdual = SelfDualType::orthogonal;
  c.central_character = "1";
  for (auto p : primes) c.satake[p] = EigenMultiset({Scalar::one(mode)});
  return c;
}

int ArthurParam::total_degree() const {
  int n = 0;
  for (const auto& t : terms) n += t.pi.degree * t.d;
  return n;
}

ArthurParam operator+(const ArthurParam& a, const ArthurParam& b) {
  ArthurParam r = a;
  r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
  return r;
}

// ------------------------------------------------------------ validation

ParamDiagnostics validate_param(const ArthurParam& p, int target_degree, bool discrete) {
  ParamDiagnostics diag;
  auto issue = [&](std::string code, std::string msg) {
    diag.valid = false;
    diag.issues.push_back(ParamIssue{std::move(code), std::move(msg)});
  };
  for (const auto& t : p.terms) {
    try {
      t.pi.validate();
    } catch (const Error& e) {
      issue("constituent", e.what());
    }
    if (t.d < 1) issue("constituent", "term '" + t.pi.label + "' has d < 1");
    diag.total_degree += t.pi.degree * t.d;
  }
  if (diag.total_degree != target_degree) {
    issue("degree", "total degree " + std::to_string(diag.total_degree) + " != target " +
                        std::to_string(target_degree));
  }
  if (discrete) {
    for (const auto& t : p.terms) {
      const SelfDualType want = t.d % 2 == 0 ? SelfDualType::symplectic : SelfDualType::orthogonal;
      if (t.pi.selfdual != want) {
        issue("selfduality", "term ('" + t.pi.label + "', d=" + std::to_string(t.d) + ") needs a " +
                                 std::string(selfdual_name(want)) + " constituent, got " +
                                 std::string(selfdual_name(t.pi.selfdual)));
      }
    }
    for (std::size_t i = 0; i < p.terms.size(); ++i) {
      for (std::size_t j = i + 1; j < p.terms.size(); ++j) {
        if (p.terms[i].pi.label == p.terms[j].pi.label && p.terms[i].d == p.terms[j].d) {
          issue("distinctness", "term ('" + p.terms[i].pi.label + "', d=" + std::to_string(p.terms[i].d) +
                                    ") appears more than once");
        }
      }
    }
  }
  return diag;
}

// ------------------------------------------------------------ evaluation

Scalar q_of_prime(std::uint64_t prime, ScalarMode mode) {
  if (mode == ScalarMode::qhalf) return Scalar::u() * Scalar::u();
  return Scalar::integer(static_cast<long>(prime), mode);
}

EigenMultiset param_satake_at_p(const ArthurParam& p, std::uint64_t prime, const Scalar& q) {
  std::vector<Scalar> out;
  for (const auto& t : p.terms) {
    const EigenMultiset& c = t.pi.satake_at(prime);
    for (int k = 0; k < t.d; ++k) {
      const Scalar shift = half_power(q, t.d - 1 - 2 * k);
      for (const auto& x : c.items()) out.push_back(x * shift);
    }
  }
  return EigenMultiset(std::move(out));
}

EigenMultiset param_satake_at_p(const ArthurParam& p, std::uint64_t prime, ScalarMode mode) {
  return param_satake_at_p(p, prime, q_of_prime(prime, mode));
}

CuspConstituent tensor_constituent(const CuspConstituent& a, const CuspConstituent& b) {
  CuspConstituent c;
  c.label = a.label + "⊠" + b.label;
  c.degree = a.degree * b.degree;
  using S = SelfDualType;
  const bool a_sd = a.selfdual == S::orthogonal || a.selfdual == S::symplectic;
  const bool b_sd = b.selfdual == S::orthogonal || b.selfdual == S::symplectic;
  if (a_sd && b_sd) c.selfdual = a.selfdual == b.selfdual ? S::orthogonal : S::symplectic;
  else c.selfdual = S::none;
  if (a.central_character && b.central_character) {
    c.central_character = *a.central_character + "^" + std::to_string(b.degree) + "*" +
                          *b.central_character + "^" + std::to_string(a.degree);
  }
  for (const auto& [p, m] : a.satake) {
    auto it = b.satake.find(p);
    if (it != b.satake.end()) c.satake[p] = tensor(m, it->second);
  }
  return c;
}

CuspConstituent sym2_normalized(const CuspConstituent& pi) {
  if (pi.degree != 2) throw Error(ErrorCode::DegreeMismatch, "Sym^2 needs a degree-2 constituent");
  pi.validate();
  CuspConstituent c;
  c.label = "Sym2(" + pi.label + ")";
  c.degree = 3;
  c.selfdual = SelfDualType::orthogonal;
  c.central_character = "1";
  for (const auto& [p, m] : pi.satake) {
    const Scalar& g1 = m.items()[0];
    const Scalar& g2 = m.items()[1];
    c.satake[p] = EigenMultiset({g1 / g2, Scalar::one(g1.mode()), g2 / g1});
  }
  return c;
}

// ---------------------------------------------------------------- shapes

void validate_shape(const SiegelStdShape& s) {
  if (auto g = std::get_if<GenericCuspidal>(&s)) {
    require_degree(g->std7, 7, "standard constituent");
    if (g->spin8) require_degree(*g->spin8, 8, "spin constituent");
    for (const auto& [p, c] : g->torus) {
      if (c.rank() != 3) throw Error(ErrorCode::ShapeInvalid, "torus data must have rank 3");
      if (g->g2 && !g2_test(c)) {
        throw Error(ErrorCode::ShapeInvalid,
                    "shape is flagged G2 but the torus parameter at p = " + prime_str(p) + " fails the criterion");
      }
    }
  } else if (auto e = std::get_if<EndoscopicTempered>(&s)) {
    require_degree(e->pi1, 2, "pi1");
    require_degree(e->pi2, 2, "pi2");
    require_degree(e->pi3, 2, "pi3");
    if (e->pi1.label == e->pi2.label) {
      throw Error(ErrorCode::ShapeInvalid, "endoscopic shape needs pi1 != pi2");
    }
  } else {
    const auto& n = std::get<NonTempered>(s);
    require_degree(n.pi1, 2, "pi1");
    require_degree(n.pi3, 2, "pi3");
  }
}

namespace {

// Standard constituent of a generic shape, with Satake data filled in from
// the torus where the user supplied none.
CuspConstituent completed_std7(const GenericCuspidal& g) {
  CuspConstituent c = g.std7;
  for (const auto& [p, t] : g.torus) {
    if (!c.satake.count(p)) c.satake[p] = std_eigen(t);
  }
  return c;
}

}  // namespace

ArthurParam std_param_of_siegel(const SiegelStdShape& s) {
  validate_shape(s);
  ArthurParam r;
  if (auto g = std::get_if<GenericCuspidal>(&s)) {
    r.terms.push_back(term(completed_std7(*g)));
  } else if (auto e = std::get_if<EndoscopicTempered>(&s)) {
    // pi2 is self-dual up to its central character; the dual keeps the
    // multiplicative form A (x) B^-1 exact for det-matched data.
    CuspConstituent t = tensor_constituent(e->pi1, dual_constituent(e->pi2));
    t.label = e->pi1.label + "⊠" + e->pi2.label;
    r.terms.push_back(term(std::move(t)));
    r.terms.push_back(term(sym2_normalized(e->pi3)));
  } else {
    const auto& n = std::get<NonTempered>(s);
    r.terms.push_back(term(n.pi1, 2));
    r.terms.push_back(term(sym2_normalized(n.pi3)));
  }
  return r;
}

ArthurParam spin_shape_of_siegel(const SiegelStdShape& s) {
  validate_shape(s);
  ArthurParam r;
  if (auto g = std::get_if<GenericCuspidal>(&s)) {
    if (g->g2) {
      CuspConstituent std7 = completed_std7(*g);
      r.terms.push_back(term(trivial_on(primes_of(std7), mode_of(std7))));
      r.terms.push_back(term(std::move(std7)));
    } else if (g->spin8) {
      r.terms.push_back(term(*g->spin8));
    } else {
      CuspConstituent c;
      c.label = "spin(" + g->std7.label + ")";
      c.degree = 8;
      c.selfdual = SelfDualType::orthogonal;
      for (const auto& [p, t] : g->torus) c.satake[p] = spin_eigen(t);
      r.terms.push_back(term(std::move(c)));
    }
  } else if (auto e = std::get_if<EndoscopicTempered>(&s)) {
    r.terms.push_back(term(tensor_constituent(e->pi1, e->pi3)));
    r.terms.push_back(term(tensor_constituent(e->pi2, e->pi3)));
  } else {
    const auto& n = std::get<NonTempered>(s);
    r.terms.push_back(term(tensor_constituent(n.pi1, n.pi3)));
    r.terms.push_back(term(n.pi3, 2));
  }
  if (r.total_degree() != 8) {
    throw Error(ErrorCode::ShapeInvalid, "spin shape has degree " + std::to_string(r.total_degree()));
  }
  return r;
}

VariantShapes variant_shape(VariantSource source, const CuspConstituent& std_datum,
                            const CuspConstituent& spin_datum) {
  const int std_deg = source == VariantSource::PGSp2 ? 3 : 5;
  const int spin_deg = source == VariantSource::PGSp2 ? 2 : 4;
  const char* name = source == VariantSource::PGSp2 ? "PGSp2" : "PGSp4";
  if (std_datum.degree != std_deg) {
    throw Error(ErrorCode::DegreeMismatch, std::string(name) + " source needs a degree-" +
                                               std::to_string(std_deg) + " standard datum");
  }
  if (spin_datum.degree != spin_deg) {
    throw Error(ErrorCode::DegreeMismatch, std::string(name) + " source needs a degree-" +
                                               std::to_string(spin_deg) + " spin datum");
  }
  std_datum.validate();
  spin_datum.validate();
  VariantShapes out;
  out.f1.terms.push_back(term(std_datum));
  out.f1.terms.push_back(term(trivial_on(primes_of(std_datum), mode_of(std_datum)), 8 - std_deg));
  out.f2.terms.push_back(term(spin_datum, 8 / spin_deg));
  return out;
}

EigenMultiset rankin_selberg_tensor(const EigenMultiset& c2, const EigenMultiset& c4) {
  if (c2.size() != 2 || c4.size() != 4) {
    throw Error(ErrorCode::SizeMismatch, "Rankin-Selberg tensor needs sizes 2 and 4, got " +
                                             std::to_string(c2.size()) + " and " + std::to_string(c4.size()));
  }
  return tensor(c2, c4);
}

RemixResult remix(const RemixQuad& quad) {
  auto same = [](const CuspConstituent& a, const CuspConstituent& b, const char* what) {
    if (!a.central_character || !b.central_character) {
      throw Error(ErrorCode::CentralCharacterMismatch,
                  std::string(what) + ": central characters must be declared");
    }
    if (*a.central_character != *b.central_character) {
      throw Error(ErrorCode::CentralCharacterMismatch, std::string(what) + ": '" + *a.central_character +
                                                           "' != '" + *b.central_character + "'");
    }
  };
  same(quad.heart, quad.diamond, "heart/diamond");
  same(quad.spade, quad.club, "spade/club");
  for (const auto* c : {&quad.heart, &quad.diamond, &quad.spade, &quad.club}) require_degree(*c, 2, "remix input");
  RemixResult r;
  r.before.terms = {term(tensor_constituent(quad.heart, quad.diamond)),
                    term(tensor_constituent(quad.spade, quad.club))};
  r.after.terms = {term(tensor_constituent(quad.heart, quad.spade)),
                   term(tensor_constituent(quad.diamond, quad.club))};
  return r;
}

}  // namespace triality
