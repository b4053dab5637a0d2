#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "triality/octonion.hpp"

namespace triality {

/// Why a candidate triple fails to lie in Spin(V,*,N).
struct TripleDiagnostic {
  /// 1-based component that is not special orthogonal, or 0.
  int bad_component = 0;
  /// First basis pair (i, j) with g1(e_i * e_j) != g2(e_i) * g3(e_j).
  std::optional<std::pair<std::size_t, std::size_t>> bad_relation;
  std::string describe() const;
};

/// Checks the three SO(8) memberships and all 64 basis relations
/// g1(e_i * e_j) = g2(e_i) * g3(e_j). Returns nullopt when valid.
std::optional<TripleDiagnostic> diagnose_spin_triple(const Mat8& g1, const Mat8& g2, const Mat8& g3);
bool is_spin_triple(const Mat8& g1, const Mat8& g2, const Mat8& g3);

/// Element of Spin(8) realized as related triples. Always valid: the only
/// public constructor validates and throws InvalidTriple.
class SpinTriple {
 public:
  static SpinTriple make(Mat8 g1, Mat8 g2, Mat8 g3);
  static SpinTriple identity(ScalarMode mode);

  const Mat8& g(int j) const { return g_.at(static_cast<std::size_t>(j - 1)); }
  ScalarMode mode() const { return g_[0].mode(); }

  friend bool operator==(const SpinTriple& a, const SpinTriple& b) { return a.g_ == b.g_; }
  friend bool operator!=(const SpinTriple& a, const SpinTriple& b) { return !(a == b); }

 private:
  friend class SpinOps;
  explicit SpinTriple(std::array<Mat8, 3> g) : g_(std::move(g)) {}
  std::array<Mat8, 3> g_;
};

SpinTriple spin_mul(const SpinTriple& a, const SpinTriple& b);
SpinTriple spin_inv(const SpinTriple& a);

/// Triality automorphism (g1,g2,g3) -> (g2,g3,g1); rho_j o theta = rho_{j+1}.
SpinTriple triality_theta(const SpinTriple& a);
SpinTriple triality_theta_inverse(const SpinTriple& a);

/// Projection to the j-th SO(8) factor, j in {1,2,3}.
const Mat8& rho(int j, const SpinTriple& a);

/// Lift of sigma_x sigma_y to Spin(8). The lift uses the identity
///   sigma_x(u * v) = -(1/N(x)) (v * x) * (x * u),
/// so rho_2 = s^-1 R_x L_y and rho_3 = s^-1 L_x R_y with s^2 = N(x)N(y).
/// The root s is the canonical one of Scalar::sqrt(); a rational lift
/// exists only when N(x)N(y) is a square (NonSquareSpinorNorm otherwise).
SpinTriple lift_reflection_pair(const Octonion& x, const Octonion& y);

/// Central element (e1 I, e2 I, e3 I) with e1 = e2 e3.
struct CenterElement {
  std::array<int, 3> signs{1, 1, 1};

  bool is_identity() const { return signs == std::array<int, 3>{1, 1, 1}; }
  /// For a nontrivial element, the unique j with rho_j(e) = I; 0 for the identity.
  int label() const;
  static CenterElement from_label(int j);
  SpinTriple as_triple(ScalarMode mode) const;

  friend bool operator==(const CenterElement&, const CenterElement&) = default;
  friend auto operator<=>(const CenterElement&, const CenterElement&) = default;
};

/// Scans all 8 sign patterns and keeps those satisfying the Spin relation.
std::vector<CenterElement> center_enumerate();
std::vector<CenterElement> kernel_of_rho(int j);
/// Image of a central element under theta.
CenterElement theta_on_center(const CenterElement& e);

/// g1 = g2 = g3, i.e. g1 is an automorphism of the para-octonions (a point of G2).
bool is_triality_fixed(const SpinTriple& a);

/// Element of (G_m^E x Spin8) / (iota x id)(Z). Coordinates of G_m^E are
/// indexed by the labels 1..3 of the nontrivial central elements.
class TriSpinElement {
 public:
  TriSpinElement(std::array<Scalar, 3> t, SpinTriple s);

  const Scalar& t(int label) const { return t_.at(static_cast<std::size_t>(label - 1)); }
  const std::array<Scalar, 3>& t() const { return t_; }
  const SpinTriple& spin() const { return s_; }

  /// Representative with t_2 and t_3 of positive sign, chosen by acting
  /// with the unique central element that achieves it.
  TriSpinElement canonical() const;
  /// Representative (iota(z) t, z s).
  TriSpinElement twisted_by(const CenterElement& z) const;

  friend bool operator==(const TriSpinElement& a, const TriSpinElement& b);

 private:
  std::array<Scalar, 3> t_;
  SpinTriple s_;
};

TriSpinElement trispin_mul(const TriSpinElement& a, const TriSpinElement& b);
/// Extends theta by moving the G_m^E coordinate at f to theta(f).
TriSpinElement trispin_theta(const TriSpinElement& z);
TriSpinElement trispin_theta_inverse(const TriSpinElement& z);

/// j_e : GSpin8^e -> tri-spin; e-component 1, the other two t.
TriSpinElement trispin_j_e(const CenterElement& e, const Scalar& t, const SpinTriple& s);

/// Similitude-valued output of rho_e.
struct GsoElement {
  Mat8 matrix;
  Scalar similitude;
  friend bool operator==(const GsoElement& a, const GsoElement& b) {
    return a.matrix == b.matrix && a.similitude == b.similitude;
  }
};

/// rho_e(t, s) = (t_{e'} / t_{e''}) rho_i(s) with i the label of e,
/// e' = theta(e), e'' = theta(e').
GsoElement trispin_rho_e(const CenterElement& e, const TriSpinElement& z);

/// rho_{theta(e)} o j_e, the GSpin8 -> GSO8 isogeny that sends the central
/// G_m to scalar multiplication.
GsoElement tilde_rho2(const CenterElement& e, const Scalar& t, const SpinTriple& s);

}  // namespace triality
