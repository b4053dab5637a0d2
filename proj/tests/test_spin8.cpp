#include "doctest.h"
#include "test_support.hpp"
#include "triality/error.hpp"

using namespace triality;

namespace {

constexpr ScalarMode kQ = ScalarMode::rational;

Scalar q(long n, long d = 1) { return Scalar::rational(n, d, kQ); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Unsupported;
}

}  // namespace

TEST_CASE("identity and scalar triples") {
  const Mat8 id = Mat8::identity(kQ);
  CHECK(is_spin_triple(id, id, id));
  CHECK(is_spin_triple(id, -id, -id));
  CHECK_FALSE(is_spin_triple(-id, id, id));
  const auto diag = diagnose_spin_triple(-id, id, id);
  REQUIRE(diag.has_value());
  CHECK(diag->bad_relation.has_value());
  CHECK(code_of([&] { (void)SpinTriple::make(-id, id, id); }) == ErrorCode::InvalidTriple);
  const Mat8 refl = reflection(tt::Gen(3).anisotropic());
  const auto d2 = diagnose_spin_triple(refl, id, id);
  REQUIRE(d2.has_value());
  CHECK(d2->bad_component == 1);
}

TEST_CASE("property: reflection-pair lifts satisfy all relations") {
  tt::Gen g(77);
  for (int i = 0; i < 40; ++i) {
    CAPTURE(i);
    auto [x, y] = g.liftable_pair();
    const SpinTriple s = lift_reflection_pair(x, y);
    CHECK(is_spin_triple(s.g(1), s.g(2), s.g(3)));
    CHECK(rho(1, s) == reflection(x) * reflection(y));
    // The other lift differs by (I, -I, -I).
    CHECK(is_spin_triple(s.g(1), -s.g(2), -s.g(3)));
    CHECK(spin_mul(s, CenterElement::from_label(1).as_triple(kQ)).g(2) == -s.g(2));
  }
}

TEST_CASE("lift of a vector with itself is central") {
  tt::Gen g(8);
  for (int i = 0; i < 20; ++i) {
    const Octonion x = g.anisotropic();
    const SpinTriple s = lift_reflection_pair(x, x);
    CHECK(s.g(1) == Mat8::identity(kQ));
    CHECK((s == SpinTriple::identity(kQ) || s == CenterElement::from_label(1).as_triple(kQ)));
  }
}

TEST_CASE("lift errors") {
  const Octonion iso = Octonion::basis(0, kQ);
  const Octonion one = Octonion::one(kQ);
  CHECK(code_of([&] { (void)lift_reflection_pair(iso, one); }) == ErrorCode::IsotropicVector);
  // N(1) = 1, N(2 e0 + e7) = 2: not a square.
  const Octonion two = q(2) * Octonion::basis(0, kQ) + Octonion::basis(7, kQ);
  CHECK(code_of([&] { (void)lift_reflection_pair(one, two); }) == ErrorCode::NonSquareSpinorNorm);
}

TEST_CASE("property: group laws and triality") {
  tt::Gen g(99);
  for (int i = 0; i < 15; ++i) {
    CAPTURE(i);
    const SpinTriple a = g.spin_element(), b = g.spin_element();
    const SpinTriple ab = spin_mul(a, b);
    CHECK(is_spin_triple(ab.g(1), ab.g(2), ab.g(3)));
    const SpinTriple ai = spin_inv(a);
    CHECK(is_spin_triple(ai.g(1), ai.g(2), ai.g(3)));
    CHECK(spin_mul(a, ai) == SpinTriple::identity(kQ));
    CHECK(triality_theta(triality_theta(triality_theta(a))) == a);
    CHECK(triality_theta_inverse(triality_theta(a)) == a);
    CHECK(triality_theta(ab) == spin_mul(triality_theta(a), triality_theta(b)));
    const SpinTriple t = triality_theta(a);
    CHECK(is_spin_triple(t.g(1), t.g(2), t.g(3)));
    for (int j = 1; j <= 3; ++j) CHECK(rho(j, t) == rho(j % 3 + 1, a));
  }
}

TEST_CASE("center of Spin(8)") {
  const auto center = center_enumerate();
  REQUIRE(center.size() == 4);
  for (const auto& e : center) CHECK(e.signs[0] == e.signs[1] * e.signs[2]);
  for (int j = 1; j <= 3; ++j) {
    const auto k = kernel_of_rho(j);
    CHECK(k.size() == 2);
    CHECK(std::count_if(k.begin(), k.end(), [](const CenterElement& e) { return e.is_identity(); }) == 1);
    CHECK(CenterElement::from_label(j).label() == j);
  }
  // theta permutes the nontrivial elements cyclically.
  const CenterElement e1 = CenterElement::from_label(1);
  const CenterElement e2 = theta_on_center(e1), e3 = theta_on_center(e2);
  CHECK(e2 != e1);
  CHECK(e3 != e1);
  CHECK(e3 != e2);
  CHECK(theta_on_center(e3) == e1);
  // and this matches theta on the triples themselves
  for (int j = 1; j <= 3; ++j) {
    const CenterElement e = CenterElement::from_label(j);
    CHECK(triality_theta(e.as_triple(kQ)) == theta_on_center(e).as_triple(kQ));
  }
}

TEST_CASE("triality-fixed elements") {
  CHECK(is_triality_fixed(SpinTriple::identity(kQ)));
  tt::Gen g(4);
  auto [x, y] = g.liftable_pair();
  const SpinTriple s = lift_reflection_pair(x, y);
  if (!(s == SpinTriple::identity(kQ))) CHECK_FALSE(is_triality_fixed(s));
}

TEST_CASE("tri-spin quotient and canonical form") {
  tt::Gen g(12);
  const SpinTriple s = g.spin_element(1);
  const TriSpinElement z({q(2), q(-3), q(5, 7)}, s);
  for (const auto& c : center_enumerate()) {
    const TriSpinElement w = z.twisted_by(c);
    CHECK(w == z);
    const TriSpinElement cw = w.canonical();
    CHECK(cw.t(2).sign() > 0);
    CHECK(cw.t(3).sign() > 0);
  }
  const TriSpinElement other({q(2), q(3), q(5, 7)}, s);
  CHECK_FALSE(other == z);
  CHECK(code_of([&] { TriSpinElement({q(0), q(1), q(1)}, s); }) == ErrorCode::ZeroScalar);
}

TEST_CASE("property: tri-spin identities") {
  tt::Gen g(31);
  for (int i = 0; i < 10; ++i) {
    CAPTURE(i);
    const SpinTriple s = g.spin_element(1);
    const TriSpinElement z({g.nonzero_rational(), g.nonzero_rational(), g.nonzero_rational()}, s);
    const Scalar t = g.nonzero_rational();
    CHECK(trispin_theta(trispin_theta(trispin_theta(z))) == z);
    CHECK(trispin_theta_inverse(trispin_theta(z)) == z);
    for (int label = 1; label <= 3; ++label) {
      const CenterElement e = CenterElement::from_label(label);
      const CenterElement e1 = theta_on_center(e);
      CHECK(trispin_rho_e(e, z) == trispin_rho_e(e1, trispin_theta(z)));
      CHECK(trispin_theta(trispin_j_e(e, t, s)) == trispin_j_e(e1, t, triality_theta(s)));
      const GsoElement killed = trispin_rho_e(e, trispin_j_e(e, t, s));
      CHECK(killed.matrix == rho(label, s));
      CHECK(killed.similitude == q(1));
      const GsoElement scaled = tilde_rho2(e, t, s);
      CHECK(scaled.matrix == t * rho(e1.label(), s));
      CHECK(scaled.similitude == t * t);
      CHECK(similitude_factor(scaled.matrix) == t * t);
      CHECK(scaled == trispin_rho_e(e, trispin_theta_inverse(trispin_j_e(e, t, s))));
      // rho_e is well defined on the quotient
      for (const auto& c : center_enumerate()) CHECK(trispin_rho_e(e, z.twisted_by(c)) == trispin_rho_e(e, z));
    }
  }
}

TEST_CASE("tri-spin on the identity: rho_{e'} o j_e sends t to t I") {
  const SpinTriple id = SpinTriple::identity(kQ);
  for (int label = 1; label <= 3; ++label) {
    const GsoElement r = tilde_rho2(CenterElement::from_label(label), q(5, 3), id);
    CHECK(r.matrix == Mat8::scalar(q(5, 3)));
  }
  CHECK(code_of([&] { (void)trispin_j_e(CenterElement{}, q(2), id); }) == ErrorCode::InvalidTriple);
  CHECK(code_of([&] { (void)trispin_j_e(CenterElement::from_label(1), q(0), id); }) == ErrorCode::ZeroScalar);
}
