#include "doctest.h"
#include "test_support.hpp"
#include "triality/error.hpp"

using namespace triality;

namespace {

constexpr ScalarMode kQ = ScalarMode::rational;

Scalar q(long n, long d = 1) { return Scalar::rational(n, d, kQ); }

std::vector<Scalar> qs(std::initializer_list<std::pair<long, long>> v) {
  std::vector<Scalar> out;
  for (auto [n, d] : v) out.push_back(q(n, d));
  return out;
}

std::vector<Scalar> ints(std::initializer_list<long> v) {
  std::vector<Scalar> out;
  for (long n : v) out.push_back(q(n));
  return out;
}

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

TEST_CASE("multiset equality ignores order") {
  CHECK(EigenMultiset(ints({1, 2, 2, 3})) == EigenMultiset(ints({2, 3, 1, 2})));
  CHECK(EigenMultiset(ints({1, 2, 2})) != EigenMultiset(ints({1, 1, 2})));
  CHECK(EigenMultiset(ints({1, 2})) != EigenMultiset(ints({1, 2, 2})));
  const EigenMultiset c({Scalar(Complex(1, 1)), Scalar(Complex(2, 0))});
  const EigenMultiset d({Scalar(Complex(2 + 1e-13, 0)), Scalar(Complex(1, 1 - 1e-13))});
  CHECK(c == d);
}

TEST_CASE("std eigenvalues") {
  const auto ones = GSpinOddParam::make(ints({1, 1, 1}), q(1));
  CHECK(std_eigen(ones) == EigenMultiset(ints({1, 1, 1, 1, 1, 1, 1})));
  // principal SL2 weights with x = (q^3, q^2, q) in the qhalf mode
  const Scalar qq = Scalar::u() * Scalar::u();
  const auto principal = GSpinOddParam::make({qq.pow(3), qq.pow(2), qq}, qq.pow(-3));
  std::vector<Scalar> expect;
  for (long k = -3; k <= 3; ++k) expect.push_back(qq.pow(k));
  CHECK(std_eigen(principal) == EigenMultiset(expect));
  const auto even = GSpinEvenParam::make(ints({2, 3, 5, 7}), q(1));
  CHECK(std_eigen(even) == EigenMultiset(qs({{2, 1}, {1, 2}, {3, 1}, {1, 3}, {5, 1}, {1, 5}, {7, 1}, {1, 7}})));
}

TEST_CASE("spin eigenvalues") {
  CHECK(spin_eigen(GSpinOddParam::make(ints({1, 1, 1}), q(1))) == EigenMultiset(ints({1, 1, 1, 1, 1, 1, 1, 1})));
  const Scalar qq = Scalar::u() * Scalar::u();
  const auto principal = GSpinOddParam::make({qq.pow(3), qq.pow(2), qq}, qq.pow(-3));
  std::vector<Scalar> expect{Scalar::one(ScalarMode::qhalf)};
  for (long k = -3; k <= 3; ++k) expect.push_back(qq.pow(k));
  CHECK(spin_eigen(principal) == EigenMultiset(expect));
}

TEST_CASE("property: spin and half-spin match subset enumeration") {
  tt::Gen g(5);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = static_cast<std::size_t>(g.integer(0, 4));
    const auto c = g.odd_param(n);
    CHECK(spin_eigen(c) == EigenMultiset(tt::spin_oracle(c.chi, c.mu)));
    CHECK(std_eigen(c) == EigenMultiset(tt::pm_oracle(c.chi, true, kQ)));
    const auto e = g.even_param(n + 1);
    CHECK(halfspin_eigen(e, 1) == EigenMultiset(tt::spin_oracle(e.chi, e.mu, 0)));
    CHECK(halfspin_eigen(e, -1) == EigenMultiset(tt::spin_oracle(e.chi, e.mu, 1)));
    CHECK(halfspin_eigen(e, 1).size() == (std::size_t{1} << n));
  }
}

TEST_CASE("property: Weyl invariance") {
  tt::Gen g(6);
  for (int i = 0; i < 60; ++i) {
    const auto c = g.odd_param(3);
    const std::size_t k = static_cast<std::size_t>(g.integer(0, 2));
    const auto w = weyl_invert(c, k);
    CHECK(spin_eigen(w) == spin_eigen(c));
    CHECK(std_eigen(w) == std_eigen(c));
    CHECK(similitude_character(w) == similitude_character(c));
    auto p = c;
    std::shuffle(p.chi.begin(), p.chi.end(), g.engine());
    CHECK(spin_eigen(p) == spin_eigen(c));
  }
}

TEST_CASE("property: spin tensor spin is the twisted exterior algebra of std") {
  tt::Gen g(7);
  for (int i = 0; i < 25; ++i) {
    const auto c = g.odd_param(3);
    const auto s = spin_eigen(c);
    const auto ss = tensor(s, s);
    std::vector<Scalar> ext;
    const auto st = tt::pm_oracle(c.chi, true, kQ);
    for (std::size_t k = 0; k <= 3; ++k) {
      for (auto& v : tt::exterior_power(st, k, kQ)) ext.push_back(v * similitude_character(c));
    }
    CHECK(ext.size() == 64);
    CHECK(ss == EigenMultiset(ext));
  }
}

TEST_CASE("iota 7 -> 8") {
  const auto ones = GSpinOddParam::make(ints({1, 1, 1}), q(1));
  CHECK(iota_7to8(ones) == GSpinEvenParam::make(ints({1, 1, 1, 1}), q(1)));
  CHECK(code_of([] { (void)iota_7to8(GSpinOddParam::make(ints({1, 1}), q(1))); }) == ErrorCode::WrongRank);
  tt::Gen g(8);
  for (int i = 0; i < 40; ++i) {
    const auto c = g.odd_param(3);
    const auto e = iota_7to8(c);
    CHECK(e.mu == c.mu);
    CHECK(std_eigen(e) == EigenMultiset(tt::pm_oracle(c.chi, true, kQ)) + EigenMultiset({q(1)}));
    CHECK(halfspin_eigen(e, 1) == spin_eigen(c));
    CHECK(halfspin_eigen(e, -1) == spin_eigen(c));
  }
}

TEST_CASE("nu worked example") {
  const Gl2Param a{q(2), q(3)}, b{q(6), q(1)}, c{q(5), q(7)};
  const auto nu = nu_embed(a, b, c);
  CHECK(nu.chi == qs({{3, 1}, {5, 7}, {1, 2}}));
  CHECK(nu.mu == q(14));
  CHECK(spin_eigen(nu) == EigenMultiset(ints({14, 42, 10, 7, 30, 21, 5, 15})));
  CHECK(spin_eigen(nu) == EigenMultiset(ints({5, 7, 10, 14, 15, 21, 30, 42})));
  CHECK(std_eigen(nu) == EigenMultiset(qs({{3, 1}, {1, 3}, {1, 2}, {2, 1}, {5, 7}, {7, 5}, {1, 1}})));
  CHECK(code_of([&] { (void)nu_embed(a, Gl2Param{q(1), q(1)}, c); }) == ErrorCode::DeterminantMismatch);
  const auto trivial = nu_embed({q(1), q(1)}, {q(1), q(1)}, {q(1), q(1)});
  CHECK(trivial == GSpinOddParam::make(ints({1, 1, 1}), q(1)));
}

TEST_CASE("property: nu branching") {
  tt::Gen g(9);
  for (int i = 0; i < 60; ++i) {
    const Gl2Param a = g.gl2(), b = g.det_matched(a), c = g.gl2();
    const auto nu = nu_embed(a, b, c);
    std::vector<Scalar> spin, stdv;
    for (const auto& x : {a[0], a[1], b[0], b[1]})
      for (const auto& y : c) spin.push_back(x * y);
    for (const auto& x : a)
      for (const auto& y : b) stdv.push_back(x / y);
    stdv.push_back(c[0] / c[1]);
    stdv.push_back(q(1));
    stdv.push_back(c[1] / c[0]);
    CHECK(spin_eigen(nu) == EigenMultiset(spin));
    CHECK(std_eigen(nu) == EigenMultiset(stdv));
  }
}

TEST_CASE("GSpin4 and GSpin3 from GL2 data") {
  tt::Gen g(10);
  for (int i = 0; i < 30; ++i) {
    const Gl2Param a = g.gl2(), b = g.det_matched(a);
    const auto p = gspin4_from_gl2_pair(a, b);
    CHECK(halfspin_eigen(p, 1) == EigenMultiset({a[0], a[1]}));
    CHECK(halfspin_eigen(p, -1) == EigenMultiset({b[0], b[1]}));
    CHECK(std_eigen(p) == EigenMultiset({a[0] / b[0], a[0] / b[1], a[1] / b[0], a[1] / b[1]}));
    const auto c3 = gspin3_from_gl2(a);
    CHECK(spin_eigen(c3) == EigenMultiset({a[0], a[1]}));
    CHECK(std_eigen(c3) == EigenMultiset({a[0] / a[1], q(1), a[1] / a[0]}));
  }
}

TEST_CASE("property: branching identities of the three embeddings") {
  tt::Gen g(11);
  for (int i = 0; i < 30; ++i) {
    const auto o1 = g.odd_param(static_cast<std::size_t>(g.integer(0, 2)));
    const auto o2 = g.odd_param(static_cast<std::size_t>(g.integer(0, 2)));
    const auto e1 = g.even_param(static_cast<std::size_t>(g.integer(1, 2)));
    const auto e2 = g.even_param(static_cast<std::size_t>(g.integer(1, 2)));
    // odd + odd: both half-spins restrict to S1 x S2
    const auto oo = std::get<GSpinEvenParam>(embed_spin_torus(EmbedCase::OddOdd, o1, o2));
    const auto s12 = tensor(spin_eigen(o1), spin_eigen(o2));
    CHECK(halfspin_eigen(oo, 1) == s12);
    CHECK(halfspin_eigen(oo, -1) == s12);
    CHECK(std_eigen(oo) == std_eigen(o1) + std_eigen(o2));
    // even + even: S+ restricts to S1+ x S2+ (+) S1- x S2-
    const auto ee = std::get<GSpinEvenParam>(embed_spin_torus(EmbedCase::EvenEven, e1, e2));
    CHECK(halfspin_eigen(ee, 1) ==
          tensor(halfspin_eigen(e1, 1), halfspin_eigen(e2, 1)) + tensor(halfspin_eigen(e1, -1), halfspin_eigen(e2, -1)));
    CHECK(halfspin_eigen(ee, -1) ==
          tensor(halfspin_eigen(e1, 1), halfspin_eigen(e2, -1)) + tensor(halfspin_eigen(e1, -1), halfspin_eigen(e2, 1)));
    CHECK(std_eigen(ee) == std_eigen(e1) + std_eigen(e2));
    // odd + even -> odd: S = S1 x S2+ (+) S1 x S2-
    const auto oe = std::get<GSpinOddParam>(embed_spin_torus(EmbedCase::OddEvenToOdd, o1, e1));
    CHECK(spin_eigen(oe) == tensor(spin_eigen(o1), halfspin_eigen(e1, 1)) + tensor(spin_eigen(o1), halfspin_eigen(e1, -1)));
    CHECK(std_eigen(oe) == std_eigen(o1) + std_eigen(e1));
  }
  const auto o = g.odd_param(1);
  const auto e = g.even_param(1);
  CHECK(code_of([&] { (void)embed_spin_torus(EmbedCase::OddOdd, o, e); }) == ErrorCode::RankMismatch);
  CHECK(code_of([&] { (void)embed_spin_torus(EmbedCase::EvenEven, o, e); }) == ErrorCode::RankMismatch);
  CHECK(code_of([&] { (void)embed_spin_torus(EmbedCase::OddEvenToOdd, e, o); }) == ErrorCode::RankMismatch);
}

TEST_CASE("satake of the trivial representation") {
  const Scalar qq = Scalar::u() * Scalar::u();
  const auto t0 = satake_of_trivial(0, qq);
  CHECK(t0.chi.empty());
  CHECK(t0.mu.is_one());
  const auto t3 = satake_of_trivial(3, qq);
  CHECK(t3.chi == std::vector<Scalar>{qq.pow(3), qq.pow(2), qq});
  CHECK(t3.mu == qq.pow(-3));
  const auto t1 = satake_of_trivial(1, qq);
  CHECK(t1.mu == Scalar::u().pow(-1));
  CHECK(code_of([] { (void)satake_of_trivial(1, q(3)); }) == ErrorCode::NeedsHalfPowerMode);
  CHECK(satake_of_trivial(1, q(4)).mu == q(1, 2));
}

TEST_CASE("theta lift satake map") {
  const Scalar u = Scalar::u();
  const Scalar qq = u * u;
  const auto one = Scalar::one(ScalarMode::qhalf);
  const auto ones = GSpinOddParam::make({one, one, one}, one);
  CHECK(theta_satake(ones, 4, qq) == GSpinEvenParam::make({one, one, one, one}, one));
  const Scalar x1 = u.pow(3) + one;
  const auto c1 = GSpinOddParam::make({x1}, u);
  const auto out = theta_satake(c1, 4, qq);
  CHECK(out.chi == std::vector<Scalar>{x1, qq.pow(2), qq, one});
  CHECK(out.mu == u * u.pow(-3));
  CHECK(code_of([&] { (void)theta_satake(ones, 3, qq); }) == ErrorCode::RankTooSmall);
  // m = n + 1 adds exactly one std eigenvalue 1 and keeps mu
  tt::Gen g(12);
  for (int i = 0; i < 10; ++i) {
    const auto c = g.odd_param(static_cast<std::size_t>(g.integer(1, 3)));
    const auto t = theta_satake(c, c.rank() + 1, q(5));
    CHECK(t.mu == c.mu);
    CHECK(std_eigen(t) == std_eigen(c) + EigenMultiset({q(1)}));
  }
}

TEST_CASE("G2 criterion examples") {
  CHECK(g2_test(GSpinOddParam::make(ints({1, 1, 1}), q(1))));
  const auto c = GSpinOddParam::make(qs({{4, 1}, {9, 1}, {1, 36}}), q(1));
  CHECK(g2_test(c));
  CHECK(spin_eigen(c) == EigenMultiset(qs({{1, 1}, {1, 1}, {4, 1}, {1, 4}, {9, 1}, {1, 9}, {36, 1}, {1, 36}})));
  CHECK(spin_eigen(c) == EigenMultiset({q(1)}) + std_eigen(c));
  const auto d = GSpinOddParam::make(ints({4, 9, 25}), q(1, 30));
  CHECK_FALSE(g2_test(d));
  CHECK(code_of([] { (void)g2_test(GSpinOddParam::make(ints({4, 9, 25}), q(1, 29))); }) ==
        ErrorCode::NotPGSp6Param);
  CHECK(code_of([] { (void)g2_test(GSpinOddParam::make(ints({4, 9}), q(1, 6))); }) == ErrorCode::WrongRank);
}

TEST_CASE("property: G2 criterion equivalence") {
  tt::Gen g(13);
  int g2_count = 0;
  for (int i = 0; i < 200; ++i) {
    const auto c = i % 2 == 0 ? g.g2_param() : g.pgsp6_param();
    const bool has_one = g2_test(c);
    const bool splits = spin_eigen(c) == EigenMultiset({q(1)}) + std_eigen(c);
    CHECK(has_one == splits);
    g2_count += has_one;
  }
  CHECK(g2_count >= 100);
}

TEST_CASE("Siegel weights") {
  const auto w = siegel_weights(12, 12, 12);
  CHECK(w.a == 11);
  CHECK(w.b == 10);
  CHECK(w.c == 9);
  CHECK(w.w == std::array<int, 4>{15, 6, 5, 4});
  CHECK(siegel_weights(4, 4, 4).w == std::array<int, 4>{3, 2, 1, 0});
  CHECK(arch_spin(w) == std::vector<int>{-15, -6, -5, -4, 4, 5, 6, 15});
  CHECK(arch_std(w) == std::vector<int>{-11, -10, -9, 0, 9, 10, 11});
  CHECK(code_of([] { (void)siegel_weights(5, 4, 4); }) == ErrorCode::WeightConstraintViolated);
  CHECK(code_of([] { (void)siegel_weights(4, 5, 5); }) == ErrorCode::WeightConstraintViolated);
  CHECK(code_of([] { (void)siegel_weights(6, 4, 2); }) == ErrorCode::WeightConstraintViolated);
}

TEST_CASE("spinbar") {
  const auto c = GSpinOddParam::make(ints({2, 3, 5}), q(1));
  auto doubled = c;
  doubled.mu = q(2);
  CHECK(spinbar(c) == spinbar(doubled));
  CHECK(spinbar(c).canonical() == spinbar(doubled).canonical());
  CHECK_FALSE(spinbar(c) == spinbar(GSpinOddParam::make(ints({2, 3, 7}), q(1))));
  CHECK(spinbar(GSpinOddParam::make(ints({1, 1, 1}), q(1))).canonical() == ints({1, 1, 1, 1, 1, 1, 1, 1}));
  tt::Gen g(14);
  for (int i = 0; i < 30; ++i) {
    const auto p = g.odd_param(3);
    auto r = p;
    r.mu = p.mu * g.nonzero_rational();
    CHECK(spinbar(p) == spinbar(r));
    CHECK(spinbar(p).canonical() == spinbar(r).canonical());
    CHECK(spinbar(weyl_invert(p, 1)).canonical() == spinbar(p).canonical());
  }
}
