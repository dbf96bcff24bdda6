#include <random>

#include "doctest.h"
#include "schnizer/complex_field.hpp"
#include "schnizer/cyclotomic.hpp"
#include "schnizer/errors.hpp"

using namespace schnizer;

namespace {

std::vector<long> as_longs(const std::vector<Integer>& p) {
  std::vector<long> out;
  for (const auto& c : p) out.push_back(c.get_si());
  return out;
}

CycScalar random_scalar(const CyclotomicField& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<Rational> coeffs;
  for (int k = 0; k < f.order(); ++k) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    coeffs.push_back(r);
  }
  return f.from_poly(coeffs);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(as_longs(cyclotomic_poly(1)) == std::vector<long>{-1, 1});
  CHECK(as_longs(cyclotomic_poly(3)) == std::vector<long>{1, 1, 1});
  CHECK(as_longs(cyclotomic_poly(5)) == std::vector<long>{1, 1, 1, 1, 1});
  CHECK(as_longs(cyclotomic_poly(9)) == std::vector<long>{1, 0, 0, 1, 0, 0, 1});
  CHECK(as_longs(cyclotomic_poly(15)) == std::vector<long>{1, -1, 0, 1, -1, 1, 0, -1, 1});
  CHECK_THROWS_AS(cyclotomic_poly(0), InvalidParameter);
}

TEST_CASE("root order validation") {
  CHECK_THROWS_AS(RootOrder(1), InvalidRootOrder);
  CHECK_THROWS_AS(RootOrder(4), InvalidRootOrder);
  CHECK(RootOrder(7).value() == 7);
}

TEST_CASE("epsilon powers") {
  const auto& f = CyclotomicField::get(3);
  CHECK(f.epsilon_pow(0).is_one());
  CHECK(f.epsilon_pow(3).is_one());
  const auto half = f.epsilon_pow(Rational(1, 2));
  CHECK(half == f.eps_int(2));
  CHECK(half * half == f.eps_int(1));
  CHECK_THROWS_AS(f.epsilon_pow(Rational(1, 3)), NonInvertibleDenominator);
  CHECK(f.eps_int(-1) * f.eps_int(1) == f.one());
}

TEST_CASE("epsilon_pow is a homomorphism") {
  for (int l : {5, 7, 9, 15}) {
    const auto& f = CyclotomicField::get(l);
    for (int p1 = -6; p1 <= 6; ++p1) {
      for (int q1 : {1, 2, 4, 8}) {
        Rational e1(p1, q1);
        e1.canonicalize();
        Rational e2(3, 2);
        CHECK(f.epsilon_pow(e1 + e2) == f.epsilon_pow(e1) * f.epsilon_pow(e2));
        CycScalar pw = f.one();
        for (int k = 0; k < q1; ++k) pw *= f.epsilon_pow(e1);
        CHECK(pw == f.epsilon_pow(p1));
      }
    }
  }
}

TEST_CASE("q-integers") {
  const auto& f = CyclotomicField::get(3);
  CHECK(f.q_int(0).is_zero());
  CHECK(f.q_int(1).is_one());
  CHECK(f.q_int(3).is_zero());
  for (int r = -8; r <= 8; ++r) CHECK(f.q_int(-r) == -f.q_int(r));
  const auto& g = CyclotomicField::get(5);
  CHECK((g.eps_int(1) - g.eps_int(-1)) * g.q_int(2) == g.eps_int(2) - g.eps_int(-2));
}

TEST_CASE("q-integer identity [r][s+1] - [r+1][s] = [r-s]") {
  for (int l : {3, 5, 7, 9, 15}) {
    const auto& f = CyclotomicField::get(l);
    for (int r = -10; r <= 10; ++r) {
      for (int s = -10; s <= 10; ++s) {
        CHECK(f.q_int(r) * f.q_int(s + 1) - f.q_int(r + 1) * f.q_int(s) == f.q_int(r - s));
      }
    }
  }
}

TEST_CASE("q-factorials and binomials") {
  const auto& f = CyclotomicField::get(3);
  CHECK(f.q_factorial(0).is_one());
  CHECK(f.q_factorial(3).is_zero());
  for (int r = -6; r <= 6; ++r) CHECK(f.q_binomial(r, 0).is_one());
  // Where [m]! is invertible the product form is an independent oracle.
  for (int l : {3, 5, 7}) {
    const auto& g = CyclotomicField::get(l);
    for (int m = 0; m < l; ++m) {
      for (int r = -10; r <= 10; ++r) {
        CycScalar num = g.one();
        for (int k = 0; k < m; ++k) num *= g.q_int(r - k);
        CHECK(g.q_binomial(r, m) == num / g.q_factorial(m));
      }
    }
  }
  // At m = l the balanced Gaussian binomial [l choose l] is still 1.
  CHECK(f.q_binomial(3, 3).is_one());
  CHECK(f.q_binomial(2, 3).is_zero());
}

TEST_CASE("field operations") {
  const auto& f = CyclotomicField::get(3);
  CHECK(f.eps_int(1).inverse() * f.eps_int(1) == f.one());
  CHECK((f.eps_int(2) + f.eps_int(1) + f.one()).is_zero());
  CHECK_THROWS_AS(f.zero().inverse(), DivisionByZero);
  CHECK_THROWS_AS(f.one() / f.zero(), DivisionByZero);
  const auto& g = CyclotomicField::get(5);
  CHECK_THROWS_AS(f.one() + g.one(), FieldMismatch);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(20240611);
  for (int l : {3, 5, 9, 15}) {
    const auto& f = CyclotomicField::get(l);
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());
      if (!a.is_zero()) CHECK(a * a.inverse() == f.one());
      CHECK(static_cast<int>(a.coeffs().size()) <= f.degree());
    }
  }
}

TEST_CASE("float backend agrees with the exact backend") {
  std::mt19937_64 rng(7);
  for (int l : {3, 5, 7, 9, 11, 13, 15}) {
    const auto& f = CyclotomicField::get(l);
    const auto& c = ComplexField::get(l);
    for (int k = -2 * l; k <= 2 * l; ++k) {
      CHECK(std::abs(f.eps_int(k).to_complex() - c.eps_int(k)) < 1e-10);
      CHECK(std::abs(f.q_int(k).to_complex() - c.q_int(k)) < 1e-10);
    }
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = random_scalar(f, rng), b = random_scalar(f, rng);
      const auto ac = a.to_complex(), bc = b.to_complex();
      CHECK(std::abs((a * b).to_complex() - ac * bc) < 1e-10 * (1 + std::abs(ac * bc)));
      CHECK(std::abs((a + b).to_complex() - (ac + bc)) < 1e-10);
      if (!b.is_zero()) CHECK(std::abs((a / b).to_complex() - ac / bc) < 1e-9 * (1 + std::abs(ac / bc)));
    }
  }
}

TEST_CASE("parsing and printing") {
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  const auto& f = CyclotomicField::get(5);
  CHECK((f.from_int(2) + f.eps_int(1) - f.eps_int(3) * f.from_int(3)).to_string() == "2 + eps - 3*eps^3");
  CHECK(f.zero().to_string() == "0");
}
