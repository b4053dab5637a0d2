#pragma once

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

#include "triality/scalar.hpp"

namespace triality {

/// Order-free multiset of eigenvalues. Equality is exact in exact modes and
/// tolerance matching in complex mode.
class EigenMultiset {
 public:
  EigenMultiset() = default;
  explicit EigenMultiset(std::vector<Scalar> items);

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const std::vector<Scalar>& items() const { return items_; }
  /// Items sorted by Scalar::compare.
  std::vector<Scalar> sorted() const;

  std::size_t count(const Scalar& x) const;
  bool contains(const Scalar& x) const { return count(x) > 0; }

  /// Disjoint union.
  friend EigenMultiset operator+(const EigenMultiset& a, const EigenMultiset& b);
  /// All pairwise products, with multiplicity.
  friend EigenMultiset tensor(const EigenMultiset& a, const EigenMultiset& b);
  EigenMultiset scaled(const Scalar& s) const;
  /// Elementwise inverses.
  EigenMultiset dual() const;
  bool is_inverse_closed() const { return dual() == *this; }
  /// Removes one copy of x; nullopt when absent.
  std::optional<EigenMultiset> without(const Scalar& x) const;

  friend bool operator==(const EigenMultiset& a, const EigenMultiset& b);
  friend bool operator!=(const EigenMultiset& a, const EigenMultiset& b) { return !(a == b); }

 private:
  std::vector<Scalar> items_;
};

/// Torus parameter (x_1..x_n; mu) of GSpin_{2n+1}: spin eigenvalues are
/// mu * prod_{i in S} x_i over subsets S, std eigenvalues x_i^{+-1} and 1,
/// and the similitude character is mu^2 * prod x_i.
struct GSpinOddParam {
  std::vector<Scalar> chi;
  Scalar mu;

  /// Throws ZeroScalar for zero entries, ScalarModeMismatch for mixed modes.
  static GSpinOddParam make(std::vector<Scalar> chi, Scalar mu);
  std::size_t rank() const { return chi.size(); }
  ScalarMode mode() const { return mu.mode(); }
  friend bool operator==(const GSpinOddParam&, const GSpinOddParam&) = default;
};

/// Torus parameter (x_1..x_n; mu) of GSpin_{2n}: std eigenvalues x_i^{+-1},
/// half-spin + over even-size subsets, half-spin - over odd-size subsets.
struct GSpinEvenParam {
  std::vector<Scalar> chi;
  Scalar mu;

  static GSpinEvenParam make(std::vector<Scalar> chi, Scalar mu);
  std::size_t rank() const { return chi.size(); }
  ScalarMode mode() const { return mu.mode(); }
  friend bool operator==(const GSpinEvenParam&, const GSpinEvenParam&) = default;
};

using GSpinParam = std::variant<GSpinOddParam, GSpinEvenParam>;

EigenMultiset std_eigen(const GSpinOddParam& c);
EigenMultiset std_eigen(const GSpinEvenParam& c);
EigenMultiset spin_eigen(const GSpinOddParam& c);
/// sign = +1 for even-size subsets, -1 for odd-size subsets.
EigenMultiset halfspin_eigen(const GSpinEvenParam& c, int sign);
/// mu^2 * prod x_i.
Scalar similitude_character(const GSpinOddParam& c);

/// Weyl move x_i -> 1/x_i, mu -> mu x_i (0-based index).
GSpinOddParam weyl_invert(const GSpinOddParam& c, std::size_t index);

/// GSpin7 x GSpin1 -> GSpin8: appends the coordinate 1 and keeps mu.
GSpinEvenParam iota_7to8(const GSpinOddParam& c);

/// Block-diagonal embeddings GSpin(V1) x GSpin(V2) -> GSpin(V1 + V2). On
/// tori all three concatenate the coordinates and multiply similitudes;
/// odd + odd gains one extra coordinate equal to 1.
GSpinEvenParam embed_odd_odd(const GSpinOddParam& c1, const GSpinOddParam& c2);
GSpinEvenParam embed_even_even(const GSpinEvenParam& c1, const GSpinEvenParam& c2);
GSpinOddParam embed_odd_even(const GSpinOddParam& c1, const GSpinEvenParam& c2);

enum class EmbedCase { OddOdd, EvenEven, OddEvenToOdd };
/// Dispatching form; RankMismatch when the parameter kinds do not fit the case.
GSpinParam embed_spin_torus(EmbedCase which, const GSpinParam& c1, const GSpinParam& c2);

using Gl2Param = std::array<Scalar, 2>;

/// GSpin4 = (GL2 x GL2)^{det = det}: the half-spins are A (+) and B (-).
/// Throws DeterminantMismatch unless a1 a2 = b1 b2.
GSpinEvenParam gspin4_from_gl2_pair(const Gl2Param& a, const Gl2Param& b);
/// GSpin3 = GL2: spin is C, std is Sym^2 C / det C.
GSpinOddParam gspin3_from_gl2(const Gl2Param& c);
/// nu : GSpin4 x GSpin3 -> GSpin7 in closed form
///   (b1/a1, c1/c2, b2/a1; a1 c2),
/// so spin_7 = (A + B) x C and std_7 = A x B^-1 + Sym^2 C / det C.
GSpinOddParam nu_embed(const Gl2Param& a, const Gl2Param& b, const Gl2Param& c);

/// q^(k/2). Needs a square root of q when k is odd (NeedsHalfPowerMode when
/// none exists in the scalar mode).
Scalar half_power(const Scalar& q, long twice_exponent);

/// Satake parameter of the trivial representation of GSp_{2n}:
/// ((q^n, ..., q); q^{-n(n+1)/4}).
GSpinOddParam satake_of_trivial(std::size_t n, const Scalar& q);

/// Unramified similitude theta lift GSp_{2n} -> GSO_{2m}, m >= n+1:
/// chi gains (q^{m-n-1}, ..., q, 1) and mu is multiplied by
/// q^{-(m-n)(m-n-1)/4}.
GSpinEvenParam theta_satake(const GSpinOddParam& c, std::size_t m, const Scalar& q);

/// G2 criterion for a PGSp6 parameter (mu^2 x1 x2 x3 = 1): 1 is a spin
/// eigenvalue. Throws WrongRank or NotPGSp6Param.
bool g2_test(const GSpinOddParam& c);

struct ArchWeightParam {
  int k1 = 0, k2 = 0, k3 = 0;
  int a = 0, b = 0, c = 0;
  std::array<int, 4> w{};
};

/// Weights k1 >= k2 >= k3 >= 4 with even sum; throws WeightConstraintViolated.
ArchWeightParam siegel_weights(int k1, int k2, int k3);
/// {+-w1, ..., +-w4}, sorted ascending.
std::vector<int> arch_spin(const ArchWeightParam& wp);
/// {0, +-a, +-b, +-c}, sorted ascending.
std::vector<int> arch_std(const ArchWeightParam& wp);

/// Multiset of a projective (PGL) class: equality up to a common scalar.
class ProjectiveMultiset {
 public:
  explicit ProjectiveMultiset(EigenMultiset m);
  const EigenMultiset& representative() const { return m_; }
  /// Exact modes: the lexicographically least of the rescalings m / x for
  /// x in m, which is independent of the representative. Throws
  /// Unsupported in complex mode.
  std::vector<Scalar> canonical() const;
  friend bool operator==(const ProjectiveMultiset& a, const ProjectiveMultiset& b);

 private:
  EigenMultiset m_;
};

ProjectiveMultiset spinbar(const GSpinOddParam& c);

}  // namespace triality
