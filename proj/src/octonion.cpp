#include "triality/octonion.hpp"

#include <cmath>
#include <mutex>

#include "triality/error.hpp"

namespace triality {

namespace {

using Vec3 = std::array<Scalar, 3>;

Scalar dot(const Vec3& x, const Vec3& y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]; }

Vec3 cross(const Vec3& x, const Vec3& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

Vec3 v_part(const Octonion& x) { return {x[1], x[2], x[3]}; }
Vec3 w_part(const Octonion& x) { return {x[4], x[5], x[6]}; }

Octonion assemble(Scalar a, const Vec3& v, const Vec3& w, Scalar b) {
  return Octonion(Octonion::Coords{std::move(a), v[0], v[1], v[2], w[0], w[1], w[2], std::move(b)});
}

void require_same_mode(ScalarMode a, ScalarMode b) {
  if (a != b) {
    throw Error(ErrorCode::ScalarModeMismatch, "operands use scalar modes " +
                                                   std::string(mode_name(a)) + " and " +
                                                   std::string(mode_name(b)));
  }
}

}  // namespace

// -------------------------------------------------------------- Octonion

Octonion::Octonion(ScalarMode mode) : mode_(mode) { c_.fill(Scalar::zero(mode)); }

Octonion::Octonion(Coords coords) : c_(std::move(coords)), mode_(c_[0].mode()) {
  for (const auto& s : c_) require_same_mode(mode_, s.mode());
}

Octonion Octonion::one(ScalarMode mode) {
  Octonion x(mode);
  x.c_[0] = Scalar::one(mode);
  x.c_[7] = Scalar::one(mode);
  return x;
}

Octonion Octonion::basis(std::size_t index, ScalarMode mode) {
  Octonion x(mode);
  x.c_.at(index) = Scalar::one(mode);
  return x;
}

Octonion operator+(const Octonion& x, const Octonion& y) {
  require_same_mode(x.mode_, y.mode_);
  Octonion r = x;
  for (std::size_t i = 0; i < Octonion::kDim; ++i) r.c_[i] += y.c_[i];
  return r;
}

Octonion operator-(const Octonion& x, const Octonion& y) { return x + (-y); }

Octonion Octonion::operator-() const {
  Octonion r = *this;
  for (auto& s : r.c_) s = -s;
  return r;
}

Octonion operator*(const Scalar& s, const Octonion& x) {
  require_same_mode(s.mode(), x.mode_);
  Octonion r = x;
  for (auto& c : r.c_) c = s * c;
  return r;
}

bool operator==(const Octonion& x, const Octonion& y) {
  require_same_mode(x.mode_, y.mode_);
  for (std::size_t i = 0; i < Octonion::kDim; ++i) {
    if (x.c_[i] != y.c_[i]) return false;
  }
  return true;
}

Octonion oct_mul(const Octonion& x, const Octonion& y) {
  require_same_mode(x.mode(), y.mode());
  const Scalar& a1 = x[0];
  const Scalar& b1 = x[7];
  const Scalar& a2 = y[0];
  const Scalar& b2 = y[7];
  const Vec3 v1 = v_part(x), w1 = w_part(x), v2 = v_part(y), w2 = w_part(y);
  const Vec3 wxw = cross(w1, w2);
  const Vec3 vxv = cross(v1, v2);
  Vec3 v, w;
  for (std::size_t i = 0; i < 3; ++i) {
    v[i] = a1 * v2[i] + b2 * v1[i] - wxw[i];
    w[i] = a2 * w1[i] + b1 * w2[i] + vxv[i];
  }
  return assemble(a1 * a2 + dot(v1, w2), v, w, b1 * b2 + dot(w1, v2));
}

Octonion oct_conj(const Octonion& x) {
  const Vec3 v = v_part(x), w = w_part(x);
  return assemble(x[7], {-v[0], -v[1], -v[2]}, {-w[0], -w[1], -w[2]}, x[0]);
}

Scalar oct_norm(const Octonion& x) { return x[0] * x[7] - dot(v_part(x), w_part(x)); }

Scalar oct_bilinear(const Octonion& x, const Octonion& y) {
  require_same_mode(x.mode(), y.mode());
  return x[0] * y[7] + x[7] * y[0] - dot(v_part(x), w_part(y)) - dot(w_part(x), v_part(y));
}

Octonion para_mul(const Octonion& x, const Octonion& y) {
  return oct_mul(oct_conj(x), oct_conj(y));
}

// ------------------------------------------------------------------ Mat8

Mat8::Mat8(ScalarMode mode) : mode_(mode) {
  for (auto& row : m_) row.fill(Scalar::zero(mode));
}

Mat8::Mat8(Rows rows) : m_(std::move(rows)), mode_(m_[0][0].mode()) {
  for (const auto& row : m_) {
    for (const auto& s : row) require_same_mode(mode_, s.mode());
  }
}

Mat8 Mat8::scalar(const Scalar& s) {
  Mat8 m(s.mode());
  for (std::size_t i = 0; i < kDim; ++i) m.m_[i][i] = s;
  return m;
}

Mat8 Mat8::from_map(const std::function<Octonion(const Octonion&)>& f, ScalarMode mode) {
  Mat8 m(mode);
  for (std::size_t j = 0; j < kDim; ++j) {
    Octonion image = f(Octonion::basis(j, mode));
    require_same_mode(mode, image.mode());
    for (std::size_t i = 0; i < kDim; ++i) m.m_[i][j] = image[i];
  }
  return m;
}

Octonion Mat8::apply(const Octonion& x) const {
  require_same_mode(mode_, x.mode());
  Octonion::Coords out;
  for (std::size_t i = 0; i < kDim; ++i) {
    Scalar acc = Scalar::zero(mode_);
    for (std::size_t j = 0; j < kDim; ++j) {
      if (!x[j].is_zero()) acc += m_[i][j] * x[j];
    }
    out[i] = std::move(acc);
  }
  return Octonion(std::move(out));
}

Mat8 Mat8::transpose() const {
  Mat8 t(mode_);
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) t.m_[i][j] = m_[j][i];
  }
  return t;
}

namespace {

// Row index of the pivot for column `col` among rows >= col, or kDim.
std::size_t choose_pivot(const Mat8::Rows& a, std::size_t col, ScalarMode mode) {
  std::size_t best = Mat8::kDim;
  if (mode == ScalarMode::complex) {
    double best_abs = 0.0;
    for (std::size_t r = col; r < Mat8::kDim; ++r) {
      double v = std::abs(*a[r][col].as_complex());
      if (v > best_abs) {
        best_abs = v;
        best = r;
      }
    }
    if (best_abs == 0.0) return Mat8::kDim;
    return best;
  }
  for (std::size_t r = col; r < Mat8::kDim; ++r) {
    if (!a[r][col].is_zero()) return r;
  }
  return best;
}

}  // namespace

Scalar Mat8::determinant() const {
  Rows a = m_;
  Scalar det = Scalar::one(mode_);
  for (std::size_t col = 0; col < kDim; ++col) {
    std::size_t p = choose_pivot(a, col, mode_);
    if (p == kDim) return Scalar::zero(mode_);
    if (p != col) {
      std::swap(a[p], a[col]);
      det = -det;
    }
    det *= a[col][col];
    const Scalar inv = a[col][col].inverse();
    for (std::size_t r = col + 1; r < kDim; ++r) {
      if (a[r][col].is_zero()) continue;
      const Scalar f = a[r][col] * inv;
      for (std::size_t c = col; c < kDim; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

Mat8 Mat8::inverse() const {
  Rows a = m_;
  Rows inv = Mat8::identity(mode_).m_;
  for (std::size_t col = 0; col < kDim; ++col) {
    std::size_t p = choose_pivot(a, col, mode_);
    if (p == kDim) throw Error(ErrorCode::DivisionByZero, "singular matrix");
    std::swap(a[p], a[col]);
    std::swap(inv[p], inv[col]);
    const Scalar pinv = a[col][col].inverse();
    for (std::size_t c = 0; c < kDim; ++c) {
      a[col][c] *= pinv;
      inv[col][c] *= pinv;
    }
    for (std::size_t r = 0; r < kDim; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Scalar f = a[r][col];
      for (std::size_t c = 0; c < kDim; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return Mat8(std::move(inv));
}

Mat8 operator*(const Mat8& a, const Mat8& b) {
  require_same_mode(a.mode_, b.mode_);
  Mat8 r(a.mode_);
  for (std::size_t i = 0; i < Mat8::kDim; ++i) {
    for (std::size_t k = 0; k < Mat8::kDim; ++k) {
      if (a.m_[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < Mat8::kDim; ++j) r.m_[i][j] += a.m_[i][k] * b.m_[k][j];
    }
  }
  return r;
}

Mat8 operator*(const Scalar& s, const Mat8& a) {
  require_same_mode(s.mode(), a.mode_);
  Mat8 r = a;
  for (auto& row : r.m_) {
    for (auto& x : row) x = s * x;
  }
  return r;
}

Mat8 operator+(const Mat8& a, const Mat8& b) {
  require_same_mode(a.mode_, b.mode_);
  Mat8 r = a;
  for (std::size_t i = 0; i < Mat8::kDim; ++i) {
    for (std::size_t j = 0; j < Mat8::kDim; ++j) r.m_[i][j] += b.m_[i][j];
  }
  return r;
}

Mat8 Mat8::operator-() const { return Scalar::integer(-1, mode_) * *this; }

bool operator==(const Mat8& a, const Mat8& b) {
  require_same_mode(a.mode_, b.mode_);
  for (std::size_t i = 0; i < Mat8::kDim; ++i) {
    for (std::size_t j = 0; j < Mat8::kDim; ++j) {
      if (a.m_[i][j] != b.m_[i][j]) return false;
    }
  }
  return true;
}

// --------------------------------------------------------- form helpers

const Mat8& gram_matrix(ScalarMode mode) {
  static std::once_flag flags[3];
  static Mat8 cache[3];
  const auto idx = static_cast<std::size_t>(mode);
  std::call_once(flags[idx], [&] {
    Mat8::Rows g;
    for (std::size_t i = 0; i < Mat8::kDim; ++i) {
      for (std::size_t j = 0; j < Mat8::kDim; ++j) {
        g[i][j] = oct_bilinear(Octonion::basis(i, mode), Octonion::basis(j, mode));
      }
    }
    cache[idx] = Mat8(std::move(g));
  });
  return cache[idx];
}

Mat8 reflection(const Octonion& x) {
  const Scalar n = oct_norm(x);
  if (n.is_zero()) throw Error(ErrorCode::IsotropicVector, "reflection in an isotropic vector");
  const Scalar inv = n.inverse();
  return Mat8::from_map(
      [&](const Octonion& y) { return y - (oct_bilinear(x, y) * inv) * x; }, x.mode());
}

std::optional<Scalar> try_similitude_factor(const Mat8& m) {
  const Mat8& g = gram_matrix(m.mode());
  const Mat8 form = m.transpose() * g * m;
  // G(0,7) = b_N(e0, e7) = 1 in the Zorn basis.
  const Scalar lambda = form(0, 7) / g(0, 7);
  if (lambda.is_zero() || form != lambda * g) return std::nullopt;
  return lambda;
}

Scalar similitude_factor(const Mat8& m) {
  auto lambda = try_similitude_factor(m);
  if (!lambda) throw Error(ErrorCode::NotASimilitude, "matrix does not scale the norm form");
  return *lambda;
}

bool is_special_orthogonal(const Mat8& m) {
  auto lambda = try_similitude_factor(m);
  return lambda && lambda->is_one() && m.determinant().is_one();
}

}  // namespace triality
