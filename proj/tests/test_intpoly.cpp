#include <catch2/catch_amalgamated.hpp>

#include "mbkit/intpoly.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using mbkit::Int;
using mbkit::IntPolynomial;

TEST_CASE("canonical form trims trailing zeros") {
  CHECK(IntPolynomial({1, 2, 1}).degree() == 2);
  CHECK(IntPolynomial({1, 0, 0}).degree() == 0);
  CHECK(IntPolynomial({0, 0, 0}) == IntPolynomial::zero());
  CHECK(IntPolynomial().degree() == -1);
  CHECK(IntPolynomial({1, 0, 0}) == IntPolynomial({1}));
}

TEST_CASE("coefficient access past the degree is zero") {
  IntPolynomial p({3, 0, 5});
  CHECK(p.coefficient(0) == 3);
  CHECK(p.coefficient(1) == 0);
  CHECK(p.coefficient(2) == 5);
  CHECK(p.coefficient(17) == 0);
}

TEST_CASE("sum of two linear polynomials") {
  IntPolynomial a({1, 1});
  IntPolynomial b({0, 1, 1});
  CHECK(a + b == IntPolynomial({1, 2, 1}));
}

TEST_CASE("product of binomials") {
  IntPolynomial one_plus_t({1, 1});
  CHECK(one_plus_t * one_plus_t == IntPolynomial({1, 2, 1}));
  CHECK(one_plus_t * IntPolynomial::zero() == IntPolynomial::zero());
  CHECK(IntPolynomial::monomial(2, 3) * IntPolynomial::monomial(-1, 1) ==
        IntPolynomial::monomial(-2, 4));
}

TEST_CASE("subtraction reaching zero collapses to the empty polynomial") {
  IntPolynomial p({4, -2, 7});
  CHECK(p - p == IntPolynomial::zero());
  CHECK((p - p).degree() == -1);
}

TEST_CASE("ring laws on random polynomials") {
  gen::Rng rng(20260801);
  for (int i = 0; i < 300; ++i) {
    IntPolynomial a = gen::random_polynomial(rng);
    IntPolynomial b = gen::random_polynomial(rng);
    IntPolynomial c = gen::random_polynomial(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * IntPolynomial::one() == a);
    CHECK(a + IntPolynomial::zero() == a);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  gen::Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    IntPolynomial a = gen::random_polynomial(rng);
    IntPolynomial b = gen::random_polynomial(rng);
    Int x = gen::rand_long(rng, -3, 3);
    CHECK((a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x));
    CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
  }
}

TEST_CASE("shift multiplies by a power of t") {
  IntPolynomial p({1, 1});
  CHECK(p.shifted(2) == IntPolynomial({0, 0, 1, 1}));
  CHECK(p.shifted(0) == p);
  CHECK(IntPolynomial::zero().shifted(5) == IntPolynomial::zero());
}

TEST_CASE("nonnegativity checks every coefficient") {
  CHECK(IntPolynomial({0, 1, 2}).is_nonnegative());
  CHECK(IntPolynomial::zero().is_nonnegative());
  CHECK_FALSE(IntPolynomial({1, -1}).is_nonnegative());
}

TEST_CASE("division by 1 + t on worked examples") {
  auto r = mbkit::divide_by_one_plus_t(IntPolynomial({0, 1, 2, 1}));
  CHECK(r.exact);
  CHECK(r.quotient == IntPolynomial({0, 1, 1}));

  auto inexact = mbkit::divide_by_one_plus_t(IntPolynomial({0, 0, 1}));
  CHECK_FALSE(inexact.exact);
  CHECK(inexact.quotient == IntPolynomial::zero());

  auto z = mbkit::divide_by_one_plus_t(IntPolynomial::zero());
  CHECK(z.exact);
  CHECK(z.quotient == IntPolynomial::zero());
}

TEST_CASE("division agrees with the alternating-tail oracle") {
  gen::Rng rng(99);
  for (int i = 0; i < 500; ++i) {
    IntPolynomial p = gen::random_polynomial(rng, 8, -6, 6);
    auto lib = mbkit::divide_by_one_plus_t(p);
    auto ref = oracle::alternating_tail_division(p);
    CHECK(lib.exact == ref.exact);
    if (lib.exact) {
      CHECK(lib.quotient == ref.quotient);
      CHECK(IntPolynomial({1, 1}) * lib.quotient == p);
    }
  }
}

TEST_CASE("multiples of 1 + t divide exactly and recover the factor") {
  gen::Rng rng(123);
  for (int i = 0; i < 200; ++i) {
    IntPolynomial q = gen::random_polynomial(rng);
    auto r = mbkit::divide_by_one_plus_t(IntPolynomial({1, 1}) * q);
    CHECK(r.exact);
    CHECK(r.quotient == q);
  }
}

TEST_CASE("exactness is equivalent to vanishing at t = -1") {
  gen::Rng rng(456);
  for (int i = 0; i < 200; ++i) {
    IntPolynomial p = gen::random_polynomial(rng);
    CHECK(mbkit::divide_by_one_plus_t(p).exact == (p.evaluate(-1) == 0));
  }
}

TEST_CASE("reversal about a degree cap") {
  CHECK(mbkit::reverse(IntPolynomial({1, 1}), 2) == IntPolynomial({0, 1, 1}));
  CHECK(mbkit::reverse(IntPolynomial({1, 2, 1}), 2) ==
        IntPolynomial({1, 2, 1}));
  CHECK(mbkit::reverse(IntPolynomial({1}), 3) == IntPolynomial({0, 0, 0, 1}));
  CHECK(mbkit::reverse(IntPolynomial::zero(), 4) == IntPolynomial::zero());
  CHECK_THROWS_AS(mbkit::reverse(IntPolynomial({0, 0, 1}), 1),
                  mbkit::input_error);
}

TEST_CASE("reversal is an involution") {
  gen::Rng rng(31415);
  for (int i = 0; i < 1000; ++i) {
    IntPolynomial p = gen::random_polynomial(rng);
    long cap = p.degree() < 0 ? gen::rand_long(rng, 0, 6)
                              : p.degree() + gen::rand_long(rng, 0, 3);
    std::size_t m = static_cast<std::size_t>(cap);
    CHECK(mbkit::reverse(mbkit::reverse(p, m), m) == p);
  }
}

TEST_CASE("printing uses ascending powers of t") {
  CHECK(IntPolynomial({1, 2, 1}).str() == "1 + 2t + t^2");
  CHECK(IntPolynomial({-1, 1}).str() == "-1 + t");
  CHECK(IntPolynomial({0, 1, 2, 1}).str() == "t + 2t^2 + t^3");
  CHECK(IntPolynomial({0, 0, -2}).str() == "-2t^2");
  CHECK(IntPolynomial::zero().str() == "0");
  CHECK(IntPolynomial({7}).str() == "7");
}
