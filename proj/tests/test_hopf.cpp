#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "qhaar/hopf.hpp"
#include "qhaar/rng.hpp"

using namespace qhaar;
using namespace qhaar::hopf;

namespace {

Element random_element(Rng& rng, const AlgebraParams& P, int max_b_deg, int terms = 4) {
  Element e;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    m.p = static_cast<int>(rng.next_int(-2, 2));
    m.pbar = static_cast<int>(rng.next_int(P.mode == Mode::Quotient ? 0 : -2, 2));
    m.r = static_cast<int>(rng.next_int(0, max_b_deg));
    m.rbar = static_cast<int>(rng.next_int(0, max_b_deg - m.r));
    auto [mm, ph] = quotient_reduce(m, 1.0, P);
    e.add_term(mm, rng.next_gaussian() * ph);
  }
  return e;
}

double diff(const Element& x, const Element& y) { return (x - y).norm(); }

}  // namespace

TEST_CASE("multiply: spec examples") {
  auto P = AlgebraParams::make(3);
  // b a = lambda^{-1} a b
  auto ba = multiply(Element::gen_b(), Element::gen_a(), P);
  Element want = P.lam(-1) * Element::monomial({1, 0, 1, 0}, 1.0);
  CHECK(diff(ba, want) < 1e-12);

  // a a^{-1} = 1
  CHECK(diff(multiply(Element::gen_a(1), Element::gen_a(-1), P), Element::one()) < 1e-15);

  // (a^{-1} b)^2 = lambda a^{-2} b^2
  Element aib = Element::monomial({-1, 0, 1, 0}, 1.0);
  auto sq = multiply(aib, aib, P);
  CHECK(diff(sq, P.lambda * Element::monomial({-2, 0, 2, 0}, 1.0)) < 1e-12);
}

TEST_CASE("multiply agrees with the word rewriter") {
  for (int n : {2, 3, 5}) {
    for (Mode mode : {Mode::Free, Mode::Quotient}) {
      auto P = AlgebraParams::make(n, mode);
      Rng rng = Rng::derive(7, "mul-oracle", n * 10 + (mode == Mode::Quotient));
      for (int it = 0; it < 20; ++it) {
        auto x = random_element(rng, P, 3);
        auto y = random_element(rng, P, 3);
        CHECK(diff(multiply(x, y, P), qhaar::testing::oracle_multiply(x, y, P)) < 1e-9);
      }
    }
  }
}

TEST_CASE("multiply is associative") {
  auto P = AlgebraParams::make(5);
  Rng rng = Rng::derive(11, "assoc");
  for (int it = 0; it < 10; ++it) {
    auto x = random_element(rng, P, 2);
    auto y = random_element(rng, P, 2);
    auto z = random_element(rng, P, 2);
    auto l = multiply(multiply(x, y, P), z, P);
    auto r = multiply(x, multiply(y, z, P), P);
    CHECK(diff(l, r) < 1e-9);
  }
}

TEST_CASE("adjoint: involution and anti-multiplicativity") {
  auto P = AlgebraParams::make(3);
  // (c ab)* = conj(c) b* a* = conj(c) lambda^{-1} a* b*
  cplx c{0.3, -1.1};
  auto x = c * Element::monomial({1, 0, 1, 0}, 1.0);
  CHECK(diff(adjoint(x, P), std::conj(c) * P.lam(-1) * Element::monomial({0, 1, 0, 1}, 1.0)) <
        1e-15);
  CHECK(diff(adjoint(Element::one(), P), Element::one()) < 1e-15);

  Rng rng = Rng::derive(3, "adj");
  for (int it = 0; it < 10; ++it) {
    auto u = random_element(rng, P, 3);
    auto v = random_element(rng, P, 3);
    CHECK(diff(adjoint(adjoint(u, P), P), u) < 1e-12);
    CHECK(diff(adjoint(multiply(u, v, P), P), multiply(adjoint(v, P), adjoint(u, P), P)) < 1e-9);
  }
}

TEST_CASE("comultiply: generator images and homomorphism") {
  auto P = AlgebraParams::make(3);
  auto db = comultiply(Element::gen_b(), P);
  Tensor2 want;
  want.add_term({Monomial{1, 0, 0, 0}, Monomial{0, 0, 1, 0}}, 1.0);
  want.add_term({Monomial{0, 0, 1, 0}, Monomial{}}, 1.0);
  CHECK((db - want).norm() < 1e-15);

  CHECK((comultiply(Element::one(), P) - Tensor2::one()).norm() < 1e-15);

  // Delta(b^2) = a^2 (x) b^2 + (1 + lambda^{-1}) ab (x) b + b^2 (x) 1
  auto db2 = comultiply(Element::gen_b(2), P);
  Tensor2 w2;
  w2.add_term({Monomial{2, 0, 0, 0}, Monomial{0, 0, 2, 0}}, 1.0);
  w2.add_term({Monomial{1, 0, 1, 0}, Monomial{0, 0, 1, 0}}, 1.0 + P.lam(-1));
  w2.add_term({Monomial{0, 0, 2, 0}, Monomial{}}, 1.0);
  CHECK((db2 - w2).norm() < 1e-12);

  Rng rng = Rng::derive(5, "comul");
  for (int it = 0; it < 8; ++it) {
    auto x = random_element(rng, P, 2);
    auto y = random_element(rng, P, 2);
    auto l = comultiply(multiply(x, y, P), P);
    auto r = multiply(comultiply(x, P), comultiply(y, P), P);
    CHECK((l - r).norm() < 1e-9);
  }
}

TEST_CASE("counit values and homomorphism") {
  auto P = AlgebraParams::make(4);
  CHECK(std::abs(counit(Element::gen_a(), P) - 1.0) < 1e-15);
  CHECK(std::abs(counit(Element::gen_b(), P)) < 1e-15);
  CHECK(std::abs(counit(Element::gen_a(-2), P) - 1.0) < 1e-15);
  Rng rng = Rng::derive(9, "counit");
  for (int it = 0; it < 10; ++it) {
    auto x = random_element(rng, P, 2);
    auto y = random_element(rng, P, 2);
    CHECK(std::abs(counit(multiply(x, y, P), P) - counit(x, P) * counit(y, P)) < 1e-9);
  }
}

TEST_CASE("antipode: generator images, powers, inverse") {
  auto P = AlgebraParams::make(3);
  CHECK(diff(antipode(Element::gen_b(), P), Element::monomial({-1, 0, 1, 0}, -1.0)) < 1e-15);
  // S(b^2) = lambda a^{-2} b^2
  CHECK(diff(antipode(Element::gen_b(2), P), P.lambda * Element::monomial({-2, 0, 2, 0}, 1.0)) <
        1e-12);
  // S(b^n) = (-1)^n lambda^{n(n-1)/2} a^{-n} b^n
  for (int n : {2, 3, 4, 5}) {
    auto Pn = AlgebraParams::make(n);
    auto sbn = antipode(Element::gen_b(n), Pn);
    cplx coeff = (n % 2 == 0 ? 1.0 : -1.0) * Pn.lam(n * (n - 1) / 2);
    CHECK(diff(sbn, coeff * Element::monomial({-n, 0, n, 0}, 1.0)) < 1e-11);
  }
  // S^{-1}(S(x)) = x
  Rng rng = Rng::derive(2, "antipode");
  for (int it = 0; it < 10; ++it) {
    auto x = random_element(rng, P, 3);
    CHECK(diff(antipode(antipode(x, P), P, true), x) < 1e-9);
  }
  // anti-homomorphism
  for (int it = 0; it < 8; ++it) {
    auto x = random_element(rng, P, 2);
    auto y = random_element(rng, P, 2);
    CHECK(diff(antipode(multiply(x, y, P), P),
               multiply(antipode(y, P), antipode(x, P), P)) < 1e-9);
  }
}

TEST_CASE("generator maps: R, tau, sigma and relation rejection") {
  auto P = AlgebraParams::make(3);
  auto R = unitary_antipode_map(P);
  CHECK(relation_residual(R, P) < 1e-12);
  // R(b) = -q a^{-1} b, R(R(b)) = b
  auto rb = apply_generator_map(R, Element::gen_b(), P);
  CHECK(diff(rb, -P.q * Element::monomial({-1, 0, 1, 0}, 1.0)) < 1e-12);
  CHECK(diff(apply_generator_map(R, rb, P), Element::gen_b()) < 1e-12);

  // tau_{i/2}(b) = q b
  auto ti = scaling_apply(Element::gen_b(), cplx(0.0, 0.5), P);
  CHECK(diff(ti, P.q * Element::gen_b()) < 1e-12);

  // map a -> a, b -> b* violates ab = lambda ba
  GeneratorMap bad;
  bad.name = "bad";
  bad.img_a = Element::gen_a();
  bad.img_a_inv = Element::gen_a(-1);
  bad.img_astar = Element::gen_astar();
  bad.img_astar_inv = Element::gen_astar(-1);
  bad.img_b = Element::gen_bstar();
  bad.img_bstar = Element::gen_b();
  CHECK(relation_residual(bad, P) > 1e-3);
  CHECK_THROWS_AS(apply_generator_map(bad, Element::gen_b(), P), RelationViolated);
}

TEST_CASE("pairing: generator table and Sweedler duality") {
  auto P = AlgebraParams::make(3);
  cplx t{0.0, 1.3};
  CHECK(std::abs(pair(Element::gen_a(), Element::gen_a(), t, P) - P.lambda) < 1e-14);
  CHECK(std::abs(pair(Element::gen_b(), Element::gen_a(), t, P)) < 1e-14);
  CHECK(std::abs(pair(Element::gen_a(), Element::gen_b(), t, P)) < 1e-14);
  CHECK(std::abs(pair(Element::gen_b(), Element::gen_b(), t, P) - t) < 1e-14);

  // <a^2, a^2> = lambda^4 ; <b^2, b^2> = (1 + lambda) t^2
  CHECK(std::abs(pair(Element::gen_a(2), Element::gen_a(2), t, P) - P.lam(4)) < 1e-13);
  CHECK(std::abs(pair(Element::gen_b(2), Element::gen_b(2), t, P) - (1.0 + P.lambda) * t * t) <
        1e-12);

  // duality identities on random unstarred monomials of degree <= 3
  Rng rng = Rng::derive(17, "pair");
  for (int it = 0; it < 12; ++it) {
    Monomial mx{static_cast<int>(rng.next_int(-1, 2)), 0, static_cast<int>(rng.next_int(0, 2)), 0};
    Monomial my{static_cast<int>(rng.next_int(-1, 2)), 0, static_cast<int>(rng.next_int(0, 2)), 0};
    Monomial mz{static_cast<int>(rng.next_int(-1, 2)), 0, static_cast<int>(rng.next_int(0, 2)), 0};
    auto X = Element::monomial(mx, 1.0);
    auto Y = Element::monomial(my, 1.0);
    auto Z = Element::monomial(mz, 1.0);
    // <xy, z> = <x (x) y, Delta z>
    cplx lhs = pair(multiply(X, Y, P), Z, t, P);
    cplx rhs = 0.0;
    Tensor2 dz = comultiply(Z, P);
    for (const auto& [k, c] : dz.terms())
      rhs += c * pair(X, Element::monomial(k.leg[0], 1.0), t, P) *
             pair(Y, Element::monomial(k.leg[1], 1.0), t, P);
    CHECK(std::abs(lhs - rhs) < 1e-9);
    // <x, yz> = <Delta x, y (x) z>
    cplx lhs2 = pair(X, multiply(Y, Z, P), t, P);
    cplx rhs2 = 0.0;
    Tensor2 dx = comultiply(X, P);
    for (const auto& [k, c] : dx.terms())
      rhs2 += c * pair(Element::monomial(k.leg[0], 1.0), Y, t, P) *
              pair(Element::monomial(k.leg[1], 1.0), Z, t, P);
    CHECK(std::abs(lhs2 - rhs2) < 1e-9);
  }

  CHECK_THROWS_AS(pair(Element::gen_bstar(), Element::gen_b(), t, P), UnsupportedOperand);
}

TEST_CASE("quotient mode: canonical exponents and reductions") {
  auto P = AlgebraParams::make(3, Mode::Quotient);
  // a*^3 -> a^3
  auto x = multiply(Element::gen_astar(2), Element::gen_astar(2), P);
  for (const auto& [m, c] : x.terms()) {
    (void)c;
    CHECK(m.pbar >= 0);
    CHECK(m.pbar < 3);
    CHECK(m.rbar >= 0);
    CHECK(m.rbar < 3);
  }
  CHECK(diff(x, Element::monomial({3, 1, 0, 0}, 1.0)) < 1e-15);
  // b*^4 -> b^3 b*
  auto y = power(Element::gen_bstar(), 4, P);
  CHECK(diff(y, Element::monomial({0, 0, 3, 1}, 1.0)) < 1e-15);
}

TEST_CASE("serialization golden form") {
  CHECK(Element::zero().to_string() == "0");
  auto two_terms = Element::gen_a() + cplx(0.5, 0.25) * Element::gen_b();
  CHECK(two_terms.to_string() ==
        "0.5+0.25i * a^0 a*^0 b^1 b*^0 + 1+0i * a^1 a*^0 b^0 b*^0");
  auto neg = Element::monomial({-2, 1, 0, 3}, cplx(-0.125, 2.0));
  CHECK(neg.to_string() == "-0.125+2i * a^-2 a*^1 b^0 b*^3");
}
