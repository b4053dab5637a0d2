#include "doctest.h"
#include "test_support.hpp"
#include "triality/error.hpp"
#include "triality/lfunction.hpp"

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

CuspConstituent gl(std::string label, int degree, SelfDualType t, std::optional<int> root = std::nullopt) {
  CuspConstituent c;
  c.label = std::move(label);
  c.degree = degree;
  c.selfdual = t;
  c.root_number = root;
  return c;
}

std::vector<Scalar> binomial_row(int n, long sign) {
  std::vector<Scalar> c{q(1)};
  for (int i = 0; i < n; ++i) c = tt::poly_mul_oracle(c, {q(1), q(sign)}, kQ);
  return c;
}

}  // namespace

TEST_CASE("local factors") {
  CHECK(local_factor(EigenMultiset(std::vector<Scalar>(8, q(1))), 3).coeffs() == binomial_row(8, -1));
  const Scalar a = q(5, 2);
  CHECK(local_factor(EigenMultiset({a, a.inverse()}), 3).coeffs() ==
        std::vector<Scalar>{q(1), -(a + a.inverse()), q(1)});
  const auto empty = local_factor(EigenMultiset(), 2);
  CHECK(empty.degree() == 0);
  CHECK(code_of([] { LocalFactor(2, {q(2), q(1)}); }) == ErrorCode::ParseError);
  const auto f = local_factor(EigenMultiset({q(2), q(3)}), 5);
  CHECK(std::abs(f.evaluate(Complex(0.5, 0)) - Complex(0.0, 0)) < 1e-12);
  const auto h = local_factor(EigenMultiset({Scalar::u()}), 7, ScalarMode::qhalf);
  CHECK(std::abs(h.evaluate(Complex(1, 0)) - Complex(1 - std::sqrt(7.0), 0)) < 1e-12);
}

TEST_CASE("property: local factor multiplicativity and palindromes") {
  tt::Gen g(41);
  for (int i = 0; i < 50; ++i) {
    std::vector<Scalar> x, y;
    for (long k = g.integer(0, 5); k > 0; --k) x.push_back(g.nonzero_rational());
    for (long k = g.integer(0, 5); k > 0; --k) y.push_back(g.nonzero_rational());
    const EigenMultiset mx(x), my(y);
    CHECK(local_factor(mx + my, 7) == local_factor(mx, 7) * local_factor(my, 7));
    CHECK(local_factor(mx, 7).coeffs() == tt::char_poly_oracle(x, kQ));
    std::vector<Scalar> closed;
    for (int k = 0; k < 4; ++k) {
      const Scalar v = g.nonzero_rational();
      closed.push_back(v);
      closed.push_back(v.inverse());
    }
    const auto pal = local_factor(EigenMultiset(closed), 11);
    CHECK(pal.degree() == 8);
    CHECK(pal.is_palindromic());
  }
  CHECK_FALSE(local_factor(EigenMultiset({q(2), q(3)}), 2).is_palindromic());
}

TEST_CASE("G2 Euler identity") {
  CHECK(g2_euler_identity_check(GSpinOddParam::make({q(1), q(1), q(1)}, q(1))));
  const auto c = GSpinOddParam::make({q(4), q(9), q(1, 36)}, q(1));
  CHECK(g2_euler_identity_check(c));
  // independent expansion: (1 - T) * prod over std of (1 - l T)
  std::vector<Scalar> rhs{q(1), q(-1)};
  for (const auto& l : tt::pm_oracle(c.chi, true, kQ)) rhs = tt::poly_mul_oracle(rhs, {q(1), -l}, kQ);
  CHECK(g2_euler_identity(c).spin.coeffs() == rhs);

  const auto d = GSpinOddParam::make({q(4), q(9), q(25)}, q(1, 30));
  const auto report = g2_euler_identity(d);
  CHECK_FALSE(report.g2_type);
  CHECK_FALSE(report.holds);
  CHECK(report.spin != report.rhs);
  CHECK(code_of([&] { (void)g2_euler_identity_check(d); }) == ErrorCode::NotG2Type);

  tt::Gen g(42);
  for (int i = 0; i < 100; ++i) {
    const auto p = g.g2_param();
    const auto r = g2_euler_identity(p);
    CHECK(r.g2_type);
    CHECK(r.holds);
  }
}

TEST_CASE("constituent product check") {
  tt::Gen g(43);
  // single cuspidal constituent
  CuspConstituent pi;
  pi.label = "pi";
  pi.degree = 2;
  pi.selfdual = SelfDualType::symplectic;
  pi.satake[3] = EigenMultiset({q(2), q(1, 2)});
  CHECK(constituent_product_check(pi.satake_at(3), ArthurParam{{ArthurTerm{pi, 1}}}, 3, q(3)));
  CHECK_FALSE(constituent_product_check(EigenMultiset({q(2), q(2)}), ArthurParam{{ArthurTerm{pi, 1}}}, 3, q(3)));
  // S_d shifts
  CHECK(constituent_product_check(EigenMultiset({q(6), q(3, 2), q(2, 3), q(1, 6)}), ArthurParam{{ArthurTerm{pi, 2}}}, 3,
                                  q(9)));
  // endoscopic shape: the degree-8 polynomial splits into two degree-4 factors
  for (int i = 0; i < 10; ++i) {
    CuspConstituent a = pi, b = pi, c = pi;
    a.label = "a";
    b.label = "b";
    c.label = "c";
    const Gl2Param ga = g.gl2(), gb = g.det_matched(ga), gc = g.gl2();
    a.satake[3] = EigenMultiset({ga[0], ga[1]});
    b.satake[3] = EigenMultiset({gb[0], gb[1]});
    c.satake[3] = EigenMultiset({gc[0], gc[1]});
    const auto shape = spin_shape_of_siegel(EndoscopicTempered{a, b, c});
    const auto nu = spin_eigen(nu_embed(ga, gb, gc));
    CHECK(constituent_product_check(nu, shape, 3, q(3)));
    const auto f = local_factor(nu, 3);
    CHECK(f.coeffs() == tt::char_poly_oracle(nu.items(), kQ));
  }
  // G2-flagged shape
  GenericCuspidal gc;
  gc.std7.label = "Pi";
  gc.std7.degree = 7;
  gc.std7.selfdual = SelfDualType::orthogonal;
  gc.g2 = true;
  const auto t = GSpinOddParam::make({q(4), q(9), q(1, 36)}, q(1));
  gc.torus[5] = t;
  CHECK(constituent_product_check(spin_eigen(t), spin_shape_of_siegel(gc), 5, q(5)));
}

TEST_CASE("archimedean gamma factors") {
  CHECK(std::abs(gamma_c(Complex(1, 0)) - Complex(1 / M_PI, 0)) < 1e-13);
  CHECK(std::abs(complex_gamma(Complex(5, 0)) - Complex(24, 0)) < 1e-10);
  CHECK(std::abs(complex_gamma(Complex(0.5, 0)) - Complex(std::sqrt(M_PI), 0)) < 1e-12);
  CHECK(std::abs(complex_gamma(Complex(-0.5, 0)) - Complex(-2 * std::sqrt(M_PI), 0)) < 1e-12);
  // |Gamma(1+i)|^2 = pi / sinh(pi)
  CHECK(std::abs(std::norm(complex_gamma(Complex(1, 1))) - M_PI / std::sinh(M_PI)) < 1e-12);
  CHECK(code_of([] { (void)gamma_c(Complex(0, 0)); }) == ErrorCode::PoleAt);
  CHECK(code_of([] { (void)complex_gamma(Complex(-3, 0)); }) == ErrorCode::PoleAt);
  const auto gp = gamma_factor(siegel_weights(12, 12, 12));
  CHECK(gp.shifts == std::vector<int>{15, 6, 5, 4});
  const Complex s(0.5, 2.0);
  Complex expect(1, 0);
  for (int w : {15, 6, 5, 4}) expect *= gamma_c(s + Complex(w, 0));
  CHECK(std::abs(gamma_eval(gp, s) - expect) < 1e-12 * std::abs(expect));
  CHECK(code_of([] { (void)gamma_eval(GammaProduct{{-2}}, Complex(1, 0)); }) == ErrorCode::PoleAt);
}

TEST_CASE("Euler products") {
  auto zeta = [](std::uint64_t p) { return local_factor(EigenMultiset({q(1)}), p); };
  const auto r = euler_eval(zeta, Complex(2, 0), 10000);
  CHECK(std::abs(r.value.real() - tt::zeta_partial_oracle(2.0, 10000)) < 1e-10);
  CHECK(std::abs(r.value.imag()) < 1e-14);
  CHECK(r.primes_used == 1229);
  CHECK_FALSE(r.warning.has_value());
  CHECK(std::abs(r.value.real() - M_PI * M_PI / 6) < 1e-3);

  const auto e = euler_eval(std::map<std::uint64_t, LocalFactor>{}, Complex(2, 0), 1000);
  CHECK(e.value == Complex(1, 0));
  CHECK(e.primes_used == 0);

  const auto below = euler_eval(zeta, Complex(1.2, 0), 100);
  CHECK(below.warning.has_value());
  CHECK(std::isinf(below.tail_estimate));

  // degree-8 synthetic family with bounded eigenvalues, at Re(s) = 3
  auto family = [](std::uint64_t p) {
    const Scalar a = q(4, 3) + Scalar::rational(1, static_cast<long>(p), kQ);
    return local_factor(EigenMultiset({a, a.inverse(), a, a.inverse(), q(1), q(1), q(-1), q(-1)}), p);
  };
  const auto x3 = euler_eval(family, Complex(3, 0.5), 1000);
  const auto x4 = euler_eval(family, Complex(3, 0.5), 10000);
  const auto x5 = euler_eval(family, Complex(3, 0.5), 100000);
  CHECK(std::isfinite(x5.value.real()));
  const double err3 = std::abs(x3.value - x5.value), err4 = std::abs(x4.value - x5.value);
  CHECK(err4 < err3);
  CHECK(x5.tail_estimate < x4.tail_estimate);
  CHECK(x4.tail_estimate < x3.tail_estimate);
  CHECK(primes_up_to(30) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("epsilon signs") {
  const auto o = gl("o", 3, SelfDualType::orthogonal);
  CHECK(epsilon_sign(ArthurParam{{ArthurTerm{o, 1}, ArthurTerm{gl("o2", 4, SelfDualType::orthogonal), 1}}}, true)
            .sign == 1);
  const auto sp_minus = gl("s", 2, SelfDualType::symplectic, -1);
  CHECK(epsilon_sign(ArthurParam{{ArthurTerm{sp_minus, 1}}}, true).sign == -1);
  CHECK(epsilon_sign(ArthurParam{{ArthurTerm{sp_minus, 2}}}, false).sign == 1);
  CHECK(epsilon_sign(ArthurParam{{ArthurTerm{sp_minus, 3}}}, false).sign == -1);
  const auto sp_unknown = gl("u", 2, SelfDualType::symplectic);
  CHECK(epsilon_sign(ArthurParam{{ArthurTerm{sp_unknown, 2}}}, false).sign == 1);
  CHECK(code_of([&] { (void)epsilon_sign(ArthurParam{{ArthurTerm{sp_unknown, 1}}}, false); }) ==
        ErrorCode::MissingRootNumber);
  CHECK(code_of([&] { (void)epsilon_sign(ArthurParam{{ArthurTerm{gl("n", 2, SelfDualType::none), 1}}}, false); }) ==
        ErrorCode::MissingSelfdualType);
  CHECK(code_of([&] { (void)epsilon_sign(ArthurParam{{ArthurTerm{o, 3}}}, true); }) == ErrorCode::ShapeInvalid);
  CHECK_FALSE(epsilon_sign(ArthurParam{{ArthurTerm{o, 1}}}, true).trace.empty());

  // nontempered spin shape: pi1 x pi3 is orthogonal and pi3 [x] S_2 contributes a square
  for (int sgn : {1, -1}) {
    const auto pi1 = gl("pi1", 2, SelfDualType::symplectic, sgn);
    const auto pi3 = gl("pi3", 2, SelfDualType::symplectic, -sgn);
    CHECK(epsilon_sign(spin_shape_of_siegel(NonTempered{pi1, pi3}), false).sign == 1);
    const auto pi2 = gl("pi2", 2, SelfDualType::symplectic, sgn);
    CHECK(epsilon_sign(spin_shape_of_siegel(EndoscopicTempered{pi1, pi2, pi3}), true).sign == 1);
  }
}

TEST_CASE("spin L-function metadata") {
  const auto one = CuspConstituent::trivial({}, kQ);
  const auto o7 = gl("Pi", 7, SelfDualType::orthogonal);
  CHECK(predicts_pole_at_one(ArthurParam{{ArthurTerm{one, 1}, ArthurTerm{o7, 1}}}));
  CHECK_FALSE(predicts_pole_at_one(ArthurParam{{ArthurTerm{gl("Pi8", 8, SelfDualType::orthogonal), 1}}}));
  CHECK_FALSE(predicts_pole_at_one(ArthurParam{{ArthurTerm{one, 3}}}));
  const auto m = spin_l_metadata(ArthurParam{{ArthurTerm{one, 1}, ArthurTerm{o7, 1}}});
  CHECK(m.pole_at_one);
  CHECK(m.epsilon == 1);
}
