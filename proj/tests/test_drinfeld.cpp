#include "doctest.h"
#include "schnizer/drinfeld.hpp"

using namespace schnizer;

namespace {

using Exact = CyclotomicField;
using Eval = EvaluationModule<Exact>;

std::vector<WeightVector> all_weights(int n, int l) {
  std::vector<WeightVector> out;
  WeightVector w(n, 0);
  while (true) {
    out.push_back(w);
    int k = n - 1;
    while (k >= 0 && w[k] == l - 1) w[k--] = 0;
    if (k < 0) break;
    ++w[k];
  }
  return out;
}

Eval evaluation(int l, const WeightVector& lambda, Sign sign, const CycScalar& a) {
  const auto& f = Exact::get(l);
  return Eval(SchnizerModule<Exact>(ModuleParams<Exact>::distinguished(f, lambda)), sign, a);
}

}  // namespace

TEST_CASE("closed Drinfeld polynomials") {
  const auto& f = Exact::get(5);
  CHECK(drinfeld_closed(f, {0, 3}, f.one(), Sign::Plus, 1).is_one());
  const auto p = drinfeld_closed(f, {2}, f.one(), Sign::Plus, 1);
  // (t - eps^2)(t - 1)
  CHECK(p.degree() == 2);
  CHECK(p.coeffs[2].is_one());
  CHECK(p.coeffs[1] == f.zero() - f.eps_int(2) - f.one());
  CHECK(p.coeffs[0] == f.eps_int(2));
  // Roots form an eps-string around a_{(+-,i)}.
  const WeightVector lambda{3, 1, 2};
  for (auto sign : {Sign::Plus, Sign::Minus}) {
    for (int i = 1; i <= 3; ++i) {
      const auto a = f.eps_int(2) * f.from_int(3);
      const auto poly = drinfeld_closed(f, lambda, a, sign, i);
      CHECK(poly.degree() == lambda[i - 1]);
      CHECK(poly.coeffs.back().is_one());
      CHECK_FALSE(poly.coeffs.front().is_zero());
      const auto center = string_center(f, lambda, a, sign, i);
      CHECK(center == f.eps_int(sign_value(sign) * (lambda_super(lambda, i) + i)) / a);
      for (long p = 1; p <= lambda[i - 1]; ++p) {
        CHECK(poly.evaluate(f.eps_int(lambda[i - 1] - 2 * p + 1) * center).is_zero());
      }
    }
  }
}

TEST_CASE("psi_{i,1} on the highest weight vector") {
  const auto& f = Exact::get(3);
  const auto ev = evaluation(3, {1, 1}, Sign::Plus, f.one());
  CHECK(psi1_coefficient(ev, 1) == f.eps_int(1) - f.eps_int(-1));
  const auto zero = evaluation(3, {0, 2}, Sign::Plus, f.one());
  CHECK(psi1_coefficient(zero, 1).is_zero());
  CHECK_THROWS_AS(drinfeld_from_module(zero, 1), ZeroWeight);
  // a eps^{lambda_i - lambda^{(i)} - i - 1}(eps^{lambda_i} - eps^{-lambda_i}) for the plus module.
  for (int l : {3, 5}) {
    const auto& g = Exact::get(l);
    for (const auto& lambda : all_weights(2, l)) {
      const auto a = g.eps_int(1) * g.from_int(2);
      const auto plus = evaluation(l, lambda, Sign::Plus, a);
      for (int i : support(lambda)) {
        const long li = lambda[i - 1];
        CHECK(psi1_coefficient(plus, i) ==
              a * g.eps_int(li - lambda_super(lambda, i) - i - 1) * (g.eps_int(li) - g.eps_int(-li)));
      }
    }
  }
}

TEST_CASE("Drinfeld polynomials extracted from the modules") {
  for (int l : {3, 5}) {
    const auto& f = Exact::get(l);
    for (const auto& lambda : all_weights(2, l)) {
      for (auto sign : {Sign::Plus, Sign::Minus}) {
        for (const auto& a : {f.one(), f.eps_int(1), f.eps_int(2)}) {
          const auto ev = evaluation(l, lambda, sign, a);
          for (int i : support(lambda)) {
            CAPTURE(l);
            CAPTURE(i);
            CAPTURE(to_string(sign));
            CHECK(extracted_center(ev, i) == string_center(f, lambda, a, sign, i));
            CHECK(drinfeld_from_module(ev, i).equals(drinfeld_closed(f, lambda, a, sign, i)));
          }
        }
      }
    }
  }
}

TEST_CASE("scaling a moves the roots by c^{-1}") {
  const auto& f = Exact::get(5);
  const WeightVector lambda{2, 3};
  const auto c = f.from_int(3);
  for (auto sign : {Sign::Plus, Sign::Minus}) {
    const auto r1 = extracted_center(evaluation(5, lambda, sign, f.one()), 2);
    const auto r2 = extracted_center(evaluation(5, lambda, sign, c), 2);
    CHECK(r2 == r1 / c);
  }
}

TEST_CASE("isomorphism conditions: examples") {
  const auto& f = Exact::get(3);
  CHECK(iso_direct(f, {0, 0}, f.one(), f.eps_int(1)).verdict);
  CHECK(iso_direct(f, {1, 1}, f.one(), f.one()).verdict);
  CHECK_FALSE(iso_direct(f, {1, 1}, f.eps_int(1), f.one()).verdict);
  CHECK(iso_explicit(f, {1, 1}, f.one(), f.one()).verdict);
  CHECK_FALSE(iso_explicit(f, {1, 1}, f.eps_int(1), f.one()).verdict);
  CHECK(iso_witness(f, {1, 1}, f.one(), f.one()).verdict);
  const auto bad = iso_witness(f, {1, 1}, f.eps_int(1), f.one());
  CHECK_FALSE(bad.verdict);
  CHECK(!bad.details["differing"].empty());
  const auto trivial = iso_witness(f, {0, 0}, f.one(), f.eps_int(2));
  CHECK(trivial.verdict);
  CHECK(trivial.details["nil_dim"] == 1);
  // Singleton support: (b) reduces to the direct condition.
  for (const auto& lambda : std::vector<WeightVector>{{2, 0}, {0, 1}}) {
    for (long k = 0; k < 3; ++k) {
      CHECK(iso_explicit(f, lambda, f.eps_int(k), f.one()).verdict ==
            iso_direct(f, lambda, f.eps_int(k), f.one()).verdict);
    }
  }
  CHECK_THROWS_AS(iso_witness(f, {1}, f.one(), f.one()), RankTooSmall);
}

TEST_CASE("direct, explicit and witness criteria agree") {
  for (int l : {3, 5}) {
    const auto& f = Exact::get(l);
    for (const auto& lambda : all_weights(2, l)) {
      for (long p = 0; p < l; ++p) {
        const auto a_plus = f.eps_int(p);
        const auto a_minus = f.one();
        const bool direct = iso_direct(f, lambda, a_plus, a_minus).verdict;
        CHECK(iso_explicit(f, lambda, a_plus, a_minus).verdict == direct);
        if (l == 3 || p < 2) {
          CAPTURE(lambda[0]);
          CAPTURE(lambda[1]);
          CAPTURE(p);
          CHECK(iso_witness(f, lambda, a_plus, a_minus).verdict == direct);
        }
      }
    }
  }
}

TEST_CASE("coincidence with two-element support") {
  const auto& f = Exact::get(3);
  const WeightVector lambda{1, 1};
  CHECK(support(lambda).size() == 2);
  CHECK(iso_direct(f, lambda, f.one(), f.one()).verdict);
  CHECK(iso_witness(f, lambda, f.one(), f.one()).verdict);
}
