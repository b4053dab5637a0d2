#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "triality/satake.hpp"

namespace triality {

enum class SelfDualType { orthogonal, symplectic, none, unspecified };

std::string_view selfdual_name(SelfDualType t);
/// Throws ParseError for unknown names.
SelfDualType parse_selfdual(std::string_view name);

/// Cuspidal automorphic representation of GL_n, recorded only through its
/// bookkeeping data and whatever unramified Satake parameters the user
/// supplies.
struct CuspConstituent {
  std::string label;
  int degree = 1;
  SelfDualType selfdual = SelfDualType::unspecified;
  std::map<std::uint64_t, EigenMultiset> satake;
  /// Declared epsilon(1/2) for symplectic constituents.
  std::optional<int> root_number;
  /// Declared central character label.
  std::optional<std::string> central_character;

  /// Checks degree >= 1, multiset sizes, and even degree for symplectic
  /// type. Throws SizeMismatch / DegreeMismatch.
  void validate() const;
  /// Satake multiset at p; MissingSatakeData when absent.
  const EigenMultiset& satake_at(std::uint64_t p) const;

  /// The trivial representation of GL_1, with c_p = {1} at the given primes.
  static CuspConstituent trivial(const std::vector<std::uint64_t>& primes, ScalarMode mode);
};

/// One isobaric summand pi [x] S_d.
struct ArthurTerm {
  CuspConstituent pi;
  int d = 1;
};

struct ArthurParam {
  std::vector<ArthurTerm> terms;

  int total_degree() const;
  /// Isobaric sum.
  friend ArthurParam operator+(const ArthurParam& a, const ArthurParam& b);
};

struct ParamIssue {
  std::string code;  // "degree", "selfduality", "distinctness", "constituent"
  std::string message;
};

struct ParamDiagnostics {
  bool valid = true;
  int total_degree = 0;
  std::vector<ParamIssue> issues;
};

/// Never throws. The self-duality rule for discrete parameters of an
/// orthogonal target: d even needs a symplectic constituent, d odd an
/// orthogonal one.
ParamDiagnostics validate_param(const ArthurParam& p, int target_degree, bool discrete);

/// Disjoint union over terms of c(pi)_p (x) {q^{(d-1)/2}, ..., q^{-(d-1)/2}}.
EigenMultiset param_satake_at_p(const ArthurParam& p, std::uint64_t prime, const Scalar& q);
/// Same with q = prime, written u^2 in the qhalf mode.
EigenMultiset param_satake_at_p(const ArthurParam& p, std::uint64_t prime, ScalarMode mode);

/// q for the given prime in the given mode (u^2 in qhalf).
Scalar q_of_prime(std::uint64_t prime, ScalarMode mode);

/// Tensor product constituent of degree n1 n2 with Satake data at the common
/// primes. Self-duality: orthogonal x orthogonal and symplectic x symplectic
/// are orthogonal, mixed pairs symplectic, anything else none.
CuspConstituent tensor_constituent(const CuspConstituent& a, const CuspConstituent& b);
/// Sym^2 pi / omega_pi for a degree-2 constituent: {g1/g2, 1, g2/g1}.
CuspConstituent sym2_normalized(const CuspConstituent& pi);

struct GenericCuspidal {
  /// Degree-7 standard constituent.
  CuspConstituent std7;
  bool g2 = false;
  /// Optional torus parameters (PGSp6) keyed by prime, used to derive the
  /// spin side when no explicit degree-8 datum is given.
  std::map<std::uint64_t, GSpinOddParam> torus;
  /// Optional cuspidal degree-8 spin datum for the non-G2 case.
  std::optional<CuspConstituent> spin8;
};

struct EndoscopicTempered {
  CuspConstituent pi1, pi2, pi3;
};

struct NonTempered {
  CuspConstituent pi1, pi3;
};

using SiegelStdShape = std::variant<GenericCuspidal, EndoscopicTempered, NonTempered>;

/// Throws ShapeInvalid on wrong degrees or pi1 = pi2 in the endoscopic case.
void validate_shape(const SiegelStdShape& s);
/// The degree-7 standard parameter of the shape.
ArthurParam std_param_of_siegel(const SiegelStdShape& s);
/// The degree-8 spin parameter.
ArthurParam spin_shape_of_siegel(const SiegelStdShape& s);

enum class VariantSource { PGSp2, PGSp4 };

/// std_datum has degree 3 (PGSp2) or 5 (PGSp4); spin_datum has degree 2 or 4.
struct VariantShapes {
  ArthurParam f1;  // std_datum [+] S_{8 - deg}
  ArthurParam f2;  // spin_datum [x] S_{8 / deg}
};
VariantShapes variant_shape(VariantSource source, const CuspConstituent& std_datum,
                            const CuspConstituent& spin_datum);

/// c2 (x) c4; SizeMismatch unless the sizes are 2 and 4.
EigenMultiset rankin_selberg_tensor(const EigenMultiset& c2, const EigenMultiset& c4);

struct RemixQuad {
  CuspConstituent heart, diamond, spade, club;
};
struct RemixResult {
  ArthurParam before;  // (heart x diamond) [+] (spade x club)
  ArthurParam after;   // (heart x spade) [+] (diamond x club)
};
/// Needs declared central characters with heart = diamond and spade = club.
RemixResult remix(const RemixQuad& quad);

}  // namespace triality
