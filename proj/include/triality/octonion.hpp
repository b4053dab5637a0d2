#pragma once

#include <array>
#include <functional>
#include <optional>

#include "triality/scalar.hpp"

namespace triality {

/// Split octonion in Zorn vector-matrix form (a, v; w, b) with a, b scalars
/// and v, w in F^3. Coordinates are frozen in the order
///   0: a   1-3: v1 v2 v3   4-6: w1 w2 w3   7: b
/// so the unit is (1,0;0,1) = e0 + e7. The product is
///   (a1,v1;w1,b1)(a2,v2;w2,b2) =
///     (a1a2 + v1.w2,  a1v2 + b2v1 - w1 x w2;  a2w1 + b1w2 + v1 x v2,  b1b2 + w1.v2)
/// with norm N = ab - v.w and conjugate (b,-v;-w,a).
class Octonion {
 public:
  static constexpr std::size_t kDim = 8;
  using Coords = std::array<Scalar, kDim>;

  Octonion() : Octonion(ScalarMode::rational) {}
  explicit Octonion(ScalarMode mode);
  /// Throws ScalarModeMismatch unless all coordinates share a mode.
  explicit Octonion(Coords coords);

  static Octonion zero(ScalarMode mode) { return Octonion(mode); }
  static Octonion one(ScalarMode mode);
  static Octonion basis(std::size_t index, ScalarMode mode);

  ScalarMode mode() const { return mode_; }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  const Coords& coords() const { return c_; }

  friend Octonion operator+(const Octonion& x, const Octonion& y);
  friend Octonion operator-(const Octonion& x, const Octonion& y);
  Octonion operator-() const;
  friend Octonion operator*(const Scalar& s, const Octonion& x);
  friend bool operator==(const Octonion& x, const Octonion& y);
  friend bool operator!=(const Octonion& x, const Octonion& y) { return !(x == y); }

 private:
  Coords c_;
  ScalarMode mode_;
};

Octonion oct_mul(const Octonion& x, const Octonion& y);
Octonion oct_conj(const Octonion& x);
Scalar oct_norm(const Octonion& x);
/// Polar form b_N(x,y) = N(x+y) - N(x) - N(y).
Scalar oct_bilinear(const Octonion& x, const Octonion& y);
/// Para-octonion product x * y = conj(x) conj(y).
Octonion para_mul(const Octonion& x, const Octonion& y);

/// 8x8 matrix acting on Zorn coordinates; column j is the image of basis
/// vector j.
class Mat8 {
 public:
  static constexpr std::size_t kDim = 8;
  using Rows = std::array<std::array<Scalar, kDim>, kDim>;

  Mat8() : Mat8(ScalarMode::rational) {}
  explicit Mat8(ScalarMode mode);
  explicit Mat8(Rows rows);

  static Mat8 identity(ScalarMode mode) { return scalar(Scalar::one(mode)); }
  static Mat8 scalar(const Scalar& s);
  /// Matrix of a linear map given by its action on the basis.
  static Mat8 from_map(const std::function<Octonion(const Octonion&)>& f, ScalarMode mode);

  ScalarMode mode() const { return mode_; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return m_[r][c]; }
  const Rows& rows() const { return m_; }

  Octonion apply(const Octonion& x) const;
  Mat8 transpose() const;
  Scalar determinant() const;
  /// Throws DivisionByZero for singular matrices.
  Mat8 inverse() const;

  friend Mat8 operator*(const Mat8& a, const Mat8& b);
  friend Mat8 operator*(const Scalar& s, const Mat8& a);
  friend Mat8 operator+(const Mat8& a, const Mat8& b);
  Mat8 operator-() const;
  friend bool operator==(const Mat8& a, const Mat8& b);
  friend bool operator!=(const Mat8& a, const Mat8& b) { return !(a == b); }

 private:
  Rows m_;
  ScalarMode mode_;
};

/// Gram matrix G_ij = b_N(e_i, e_j), derived from the norm form and cached
/// per scalar mode.
const Mat8& gram_matrix(ScalarMode mode);

/// Orthogonal reflection y -> y - (b_N(x,y)/N(x)) x. Throws IsotropicVector
/// when N(x) = 0.
Mat8 reflection(const Octonion& x);

/// M^T G M = G and det M = 1.
bool is_special_orthogonal(const Mat8& m);
/// The scalar lambda with M^T G M = lambda G, or nullopt.
std::optional<Scalar> try_similitude_factor(const Mat8& m);
/// Throws NotASimilitude when no such lambda exists.
Scalar similitude_factor(const Mat8& m);

}  // namespace triality
