#include "triality/spin8.hpp"

#include <algorithm>

#include "triality/error.hpp"

namespace triality {

// Constructs triples known to be valid by construction (products,
// inverses, rotations and central twists of valid triples).
class SpinOps {
 public:
  static SpinTriple unchecked(Mat8 g1, Mat8 g2, Mat8 g3) {
    return SpinTriple({std::move(g1), std::move(g2), std::move(g3)});
  }
};

std::string TripleDiagnostic::describe() const {
  if (bad_component != 0) {
    return "component g" + std::to_string(bad_component) + " is not special orthogonal";
  }
  if (bad_relation) {
    return "relation g1(e" + std::to_string(bad_relation->first) + " * e" +
           std::to_string(bad_relation->second) + ") = g2(e" + std::to_string(bad_relation->first) +
           ") * g3(e" + std::to_string(bad_relation->second) + ") fails";
  }
  return "valid";
}

std::optional<TripleDiagnostic> diagnose_spin_triple(const Mat8& g1, const Mat8& g2, const Mat8& g3) {
  const std::array<const Mat8*, 3> gs{&g1, &g2, &g3};
  const ScalarMode mode = g1.mode();
  for (int j = 0; j < 3; ++j) {
    if (gs[j]->mode() != mode) {
      throw Error(ErrorCode::ScalarModeMismatch, "triple components use different scalar modes");
    }
    if (!is_special_orthogonal(*gs[j])) {
      TripleDiagnostic d;
      d.bad_component = j + 1;
      return d;
    }
  }
  std::array<Octonion, 8> img2, img3;
  for (std::size_t i = 0; i < 8; ++i) {
    img2[i] = g2.apply(Octonion::basis(i, mode));
    img3[i] = g3.apply(Octonion::basis(i, mode));
  }
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      const Octonion lhs = g1.apply(para_mul(Octonion::basis(i, mode), Octonion::basis(j, mode)));
      if (lhs != para_mul(img2[i], img3[j])) {
        TripleDiagnostic d;
        d.bad_relation = std::make_pair(i, j);
        return d;
      }
    }
  }
  return std::nullopt;
}

bool is_spin_triple(const Mat8& g1, const Mat8& g2, const Mat8& g3) {
  return !diagnose_spin_triple(g1, g2, g3).has_value();
}

SpinTriple SpinTriple::make(Mat8 g1, Mat8 g2, Mat8 g3) {
  if (auto diag = diagnose_spin_triple(g1, g2, g3)) {
    throw Error(ErrorCode::InvalidTriple, "not a Spin(8) triple: " + diag->describe());
  }
  return SpinTriple({std::move(g1), std::move(g2), std::move(g3)});
}

SpinTriple SpinTriple::identity(ScalarMode mode) {
  const Mat8 id = Mat8::identity(mode);
  return SpinOps::unchecked(id, id, id);
}

SpinTriple spin_mul(const SpinTriple& a, const SpinTriple& b) {
  return SpinOps::unchecked(a.g(1) * b.g(1), a.g(2) * b.g(2), a.g(3) * b.g(3));
}

SpinTriple spin_inv(const SpinTriple& a) {
  // For M in SO(N): M^-1 = G^-1 M^T G.
  const Mat8& g = gram_matrix(a.mode());
  const Mat8 ginv = g.inverse();
  auto inv = [&](const Mat8& m) { return ginv * m.transpose() * g; };
  return SpinOps::unchecked(inv(a.g(1)), inv(a.g(2)), inv(a.g(3)));
}

SpinTriple triality_theta(const SpinTriple& a) {
  return SpinOps::unchecked(a.g(2), a.g(3), a.g(1));
}

SpinTriple triality_theta_inverse(const SpinTriple& a) {
  return SpinOps::unchecked(a.g(3), a.g(1), a.g(2));
}

const Mat8& rho(int j, const SpinTriple& a) {
  if (j < 1 || j > 3) throw Error(ErrorCode::WrongRank, "rho index must be 1, 2 or 3");
  return a.g(j);
}

SpinTriple lift_reflection_pair(const Octonion& x, const Octonion& y) {
  const Scalar nx = oct_norm(x);
  const Scalar ny = oct_norm(y);
  if (nx.is_zero() || ny.is_zero()) {
    throw Error(ErrorCode::IsotropicVector, "reflection pair needs anisotropic vectors");
  }
  auto root = (nx * ny).sqrt();
  if (!root) {
    throw Error(ErrorCode::NonSquareSpinorNorm,
                "N(x)N(y) = " + (nx * ny).to_string() +
                    " is not a square; sigma_x sigma_y has no lift over this field");
  }
  const ScalarMode mode = x.mode();
  const Scalar inv_root = root->inverse();
  Mat8 g1 = reflection(x) * reflection(y);
  Mat8 g2 = Mat8::from_map([&](const Octonion& u) { return inv_root * para_mul(para_mul(y, u), x); }, mode);
  Mat8 g3 = Mat8::from_map([&](const Octonion& v) { return inv_root * para_mul(x, para_mul(v, y)); }, mode);
  return SpinTriple::make(std::move(g1), std::move(g2), std::move(g3));
}

// ---------------------------------------------------------------- center

int CenterElement::label() const {
  if (is_identity()) return 0;
  for (int j = 0; j < 3; ++j) {
    if (signs[static_cast<std::size_t>(j)] == 1) return j + 1;
  }
  throw Error(ErrorCode::InvalidTriple, "sign pattern is not central in Spin(8)");
}

CenterElement CenterElement::from_label(int j) {
  if (j < 1 || j > 3) throw Error(ErrorCode::ParseError, "center label must be 1, 2 or 3");
  CenterElement e;
  e.signs = {-1, -1, -1};
  e.signs[static_cast<std::size_t>(j - 1)] = 1;
  return e;
}

SpinTriple CenterElement::as_triple(ScalarMode mode) const {
  auto m = [&](int s) { return Mat8::scalar(Scalar::integer(s, mode)); };
  return SpinTriple::make(m(signs[0]), m(signs[1]), m(signs[2]));
}

std::vector<CenterElement> center_enumerate() {
  std::vector<CenterElement> out;
  for (int mask = 0; mask < 8; ++mask) {
    CenterElement e;
    for (int j = 0; j < 3; ++j) e.signs[static_cast<std::size_t>(j)] = (mask >> j) & 1 ? -1 : 1;
    auto m = [&](int s) { return Mat8::scalar(Scalar::integer(s, ScalarMode::rational)); };
    if (is_spin_triple(m(e.signs[0]), m(e.signs[1]), m(e.signs[2]))) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CenterElement> kernel_of_rho(int j) {
  if (j < 1 || j > 3) throw Error(ErrorCode::WrongRank, "rho index must be 1, 2 or 3");
  std::vector<CenterElement> out;
  for (const auto& e : center_enumerate()) {
    if (e.signs[static_cast<std::size_t>(j - 1)] == 1) out.push_back(e);
  }
  return out;
}

CenterElement theta_on_center(const CenterElement& e) {
  CenterElement r;
  r.signs = {e.signs[1], e.signs[2], e.signs[0]};
  return r;
}

bool is_triality_fixed(const SpinTriple& a) { return a.g(1) == a.g(2) && a.g(2) == a.g(3); }

// -------------------------------------------------------------- tri-spin

TriSpinElement::TriSpinElement(std::array<Scalar, 3> t, SpinTriple s)
    : t_(std::move(t)), s_(std::move(s)) {
  for (const auto& x : t_) {
    if (x.is_zero()) throw Error(ErrorCode::ZeroScalar, "tri-spin torus coordinates must be nonzero");
    if (x.mode() != s_.mode()) {
      throw Error(ErrorCode::ScalarModeMismatch, "torus and spin parts use different scalar modes");
    }
  }
}

TriSpinElement TriSpinElement::twisted_by(const CenterElement& z) const {
  const ScalarMode mode = s_.mode();
  std::array<Scalar, 3> t = t_;
  for (std::size_t k = 0; k < 3; ++k) t[k] = Scalar::integer(z.signs[k], mode) * t[k];
  return TriSpinElement(std::move(t), spin_mul(s_, z.as_triple(mode)));
}

TriSpinElement TriSpinElement::canonical() const {
  CenterElement z;
  z.signs = {t_[1].sign() * t_[2].sign(), t_[1].sign(), t_[2].sign()};
  if (z.is_identity()) return *this;
  return twisted_by(z);
}

bool operator==(const TriSpinElement& a, const TriSpinElement& b) {
  const TriSpinElement ca = a.canonical();
  const TriSpinElement cb = b.canonical();
  return ca.t_ == cb.t_ && ca.s_ == cb.s_;
}

TriSpinElement trispin_mul(const TriSpinElement& a, const TriSpinElement& b) {
  std::array<Scalar, 3> t;
  for (std::size_t k = 0; k < 3; ++k) t[k] = a.t()[k] * b.t()[k];
  return TriSpinElement(std::move(t), spin_mul(a.spin(), b.spin()));
}

namespace {

TriSpinElement rotate_torus(const TriSpinElement& z, const SpinTriple& new_spin, bool forward) {
  std::array<Scalar, 3> t = z.t();
  for (int f = 1; f <= 3; ++f) {
    const CenterElement e = CenterElement::from_label(f);
    const CenterElement target = forward ? theta_on_center(e) : theta_on_center(theta_on_center(e));
    t[static_cast<std::size_t>(target.label() - 1)] = z.t(f);
  }
  return TriSpinElement(std::move(t), new_spin);
}

void require_nontrivial(const CenterElement& e) {
  if (e.is_identity()) throw Error(ErrorCode::InvalidTriple, "e must be a nontrivial central element");
  (void)e.label();
}

}  // namespace

TriSpinElement trispin_theta(const TriSpinElement& z) {
  return rotate_torus(z, triality_theta(z.spin()), true);
}

TriSpinElement trispin_theta_inverse(const TriSpinElement& z) {
  return rotate_torus(z, triality_theta_inverse(z.spin()), false);
}

TriSpinElement trispin_j_e(const CenterElement& e, const Scalar& t, const SpinTriple& s) {
  require_nontrivial(e);
  if (t.is_zero()) throw Error(ErrorCode::ZeroScalar, "j_e needs a nonzero scalar");
  std::array<Scalar, 3> coords{t, t, t};
  coords[static_cast<std::size_t>(e.label() - 1)] = Scalar::one(t.mode());
  return TriSpinElement(std::move(coords), s);
}

GsoElement trispin_rho_e(const CenterElement& e, const TriSpinElement& z) {
  require_nontrivial(e);
  const CenterElement e1 = theta_on_center(e);
  const CenterElement e2 = theta_on_center(e1);
  const Scalar factor = z.t(e1.label()) / z.t(e2.label());
  return GsoElement{factor * rho(e.label(), z.spin()), factor * factor};
}

GsoElement tilde_rho2(const CenterElement& e, const Scalar& t, const SpinTriple& s) {
  return trispin_rho_e(theta_on_center(e), trispin_j_e(e, t, s));
}

}  // namespace triality
