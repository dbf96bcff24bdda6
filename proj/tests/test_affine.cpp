#include <random>

#include "doctest.h"
#include "schnizer/affine.hpp"

using namespace schnizer;

namespace {

using Exact = CyclotomicField;
using Mod = SchnizerModule<Exact>;
using Eval = EvaluationModule<Exact>;

// Random nonzero a_{i,j} of the form +-k eps^e and integer b_{i,j}.
ModuleParams<Exact> random_params(const Exact& f, int n, std::mt19937_64& rng, bool generic) {
  std::uniform_int_distribution<long> lam(0, f.order() - 1), small(-3, 3), e(0, f.order() - 1);
  WeightVector lambda(n);
  for (auto& x : lambda) x = lam(rng);
  auto p = ModuleParams<Exact>::distinguished(f, lambda);
  if (!generic) return p;
  for (auto& a : p.a) {
    long k = 0;
    while (k == 0) k = small(rng);
    a = f.from_int(k) * f.eps_int(e(rng));
  }
  for (auto& b : p.b) b = Rational(small(rng));
  return p;
}

bool same_on_basis(const LinearMap<Exact>& u, const LinearMap<Exact>& v) {
  for (std::size_t idx = 0; idx < u.dim(); ++idx) {
    if (!u.column(idx).equals(v.column(idx))) return false;
  }
  return true;
}

template <class Fn>
bool closed_matches(const LinearMap<Exact>& op, std::size_t dim, const Exact& f, Fn closed) {
  for (std::size_t idx = 0; idx < dim; ++idx) {
    if (!op.column(idx).equals(closed(ModuleVector<Exact>::basis(f, idx)))) return false;
  }
  return true;
}

const std::vector<std::pair<int, int>> kGrid = {{2, 3}, {2, 5}, {3, 3}};

}  // namespace

TEST_CASE("q_bracket examples") {
  const auto& f = Exact::get(3);
  const Mod mod(ModuleParams<Exact>::distinguished(f, WeightVector{1, 2}));
  const auto& u = mod.F_(1);
  const auto eps = f.eps_int(1);
  CHECK(same_on_basis(q_bracket(u, u, eps), scaled(f.one() - eps, compose(u, u))));
  CHECK(same_on_basis(commutator(mod.E(1), mod.F_(2)),
                      LinearMap<Exact>(f, mod.dim(), "0", [&f](std::size_t) { return ModuleVector<Exact>(f); })));
  const auto k1 = mod.K_alpha(1), k2 = mod.K_alpha(2);
  CHECK(same_on_basis(q_bracket(k1, k2, f.eps_int(-1)), scaled(f.one() - f.eps_int(-1), compose(k1, k2))));
}

TEST_CASE("theta operators for small i") {
  const auto& f = Exact::get(3);
  const Mod mod(ModuleParams<Exact>::distinguished(f, WeightVector{1, 1}));
  auto [e1, f1] = theta_ops(mod, 1);
  CHECK(same_on_basis(e1, mod.E(1)));
  CHECK(same_on_basis(f1, mod.F_(1)));
  auto [e2, f2] = theta_ops(mod, 2);
  const auto expected = combine<Exact>({{f.one(), compose(mod.F_(2), mod.F_(1))},
                                        {f.zero() - f.eps_int(-1), compose(mod.F_(1), mod.F_(2))}},
                                       "F2F1-eps^-1F1F2");
  CHECK(same_on_basis(f2, expected));
  CHECK(f2.apply(mod.basis(0)).equals(theta_closed(mod, 2, mod.basis(0), DescentType::F)));
  CHECK(theta_closed(mod, 2, mod.zero_vector(), DescentType::F).is_zero());
  CHECK_THROWS_AS(theta_ops(mod, 3), IndexOutOfRange);
}

TEST_CASE("theta closed forms equal the bracket chains") {
  std::mt19937_64 rng(515);
  for (auto [n, l] : kGrid) {
    const auto& f = Exact::get(l);
    for (int trial = 0; trial < 3; ++trial) {
      const Mod mod(random_params(f, n, rng, trial > 0));
      CAPTURE(n);
      CAPTURE(l);
      CAPTURE(trial);
      for (int i = 1; i <= n; ++i) {
        auto [e, fo] = theta_ops(mod, i);
        CHECK(closed_matches(fo, mod.dim(), f, [&](const auto& v) {
          return theta_closed(mod, i, v, DescentType::F);
        }));
        CHECK(closed_matches(e, mod.dim(), f, [&](const auto& v) {
          return theta_closed(mod, i, v, DescentType::E);
        }));
        if (i == n) {
          CHECK(closed_matches(fo, mod.dim(), f, [&](const auto& v) {
            return theta_closed_top(mod, v, DescentType::F);
          }));
          CHECK(closed_matches(e, mod.dim(), f, [&](const auto& v) {
            return theta_closed_top(mod, v, DescentType::E);
          }));
        }
      }
    }
  }
}

TEST_CASE("printed E-theta weight disagrees with the bracket chain") {
  const auto& f = Exact::get(5);
  const Mod mod(ModuleParams<Exact>::distinguished(f, WeightVector{2, 1}));
  auto [e, fo] = theta_ops(mod, 2);
  CHECK_FALSE(closed_matches(e, mod.dim(), f, [&](const auto& v) {
    return theta_closed(mod, 2, v, DescentType::E, ThetaEWeight::Printed);
  }));
}

TEST_CASE("closed E_0, F_0 equal the bracket route") {
  std::mt19937_64 rng(2718);
  for (auto [n, l] : kGrid) {
    const auto& f = Exact::get(l);
    for (int trial = 0; trial < 3; ++trial) {
      const Mod mod(random_params(f, n, rng, trial > 0));
      for (auto sign : {Sign::Plus, Sign::Minus}) {
        for (const auto& a : {f.one(), f.eps_int(1), f.from_int(-2)}) {
          const Eval ev(mod, sign, a);
          CAPTURE(n);
          CAPTURE(l);
          CAPTURE(trial);
          CAPTURE(to_string(sign));
          CHECK(closed_matches(ev.E(0), ev.dim(), f, [&](const auto& v) {
            return ev.ev_zero_closed(Generator::Kind::E, v);
          }));
          CHECK(closed_matches(ev.F_(0), ev.dim(), f, [&](const auto& v) {
            return ev.ev_zero_closed(Generator::Kind::F, v);
          }));
          const Eval closed(mod, sign, a, Route::Closed);
          CHECK(same_on_basis(closed.E(0), ev.E(0)));
          CHECK(same_on_basis(closed.F_(0), ev.F_(0)));
        }
      }
    }
  }
}

TEST_CASE("printed F_0 subscript disagrees once b is nonzero") {
  const auto& f = Exact::get(5);
  auto p = ModuleParams<Exact>::distinguished(f, WeightVector{1, 2});
  p.b = {Rational(1), Rational(2), Rational(-1)};
  const Eval ev(Mod(p), Sign::Plus, f.one());
  CHECK(closed_matches(ev.F_(0), ev.dim(), f, [&](const auto& v) {
    return ev.ev_zero_closed(Generator::Kind::F, v, F0Subscript::Shifted);
  }));
  CHECK_FALSE(closed_matches(ev.F_(0), ev.dim(), f, [&](const auto& v) {
    return ev.ev_zero_closed(Generator::Kind::F, v, F0Subscript::Printed);
  }));
}

TEST_CASE("E_0 on the lowest vector at the distinguished point") {
  const auto& f = Exact::get(3);
  const WeightVector lambda{1, 1};
  const Mod mod(ModuleParams<Exact>::distinguished(f, lambda));
  for (auto sign : {Sign::Plus, Sign::Minus}) {
    const Eval ev(mod, sign, f.one());
    const auto out = ev.E(0).apply(mod.basis(0));
    // a Sum_{R^F} (-1)^{s+n} eps^{-+(lambda^{(s)}+s)+n} [-lambda_s] v(eps_r)
    ModuleVector<Exact> expected(f);
    const long pm = sign_value(sign);
    for (const auto& d : enumerate_descents(2, 2, DescentType::F)) {
      const long e = -pm * (lambda_super(lambda, d.s) + d.s) + 2;
      const auto coeff = sign_power(f, d.s + 2) * f.eps_int(e) * f.q_int(-lambda[d.s - 1]);
      expected.add_term(mod.space().shift(0, descent_shift(mod.space(), d)), coeff);
    }
    CHECK(out.equals(expected));
    CHECK(out.size() == 2);
  }
  const Mod trivial(ModuleParams<Exact>::distinguished(f, WeightVector{0, 0}));
  CHECK(Eval(trivial, Sign::Plus, f.one()).E(0).apply(trivial.basis(0)).is_zero());
}

TEST_CASE("evaluation modules at (n, l) = (2, 3) with non-admissible lambda") {
  const auto& f = Exact::get(3);
  const Mod mod(ModuleParams<Exact>::distinguished(f, WeightVector{1, 0}));
  const Eval ev(mod, Sign::Plus, f.one());
  CHECK_THROWS_AS(ev.eval_parameter(), NonInvertibleDenominator);
  // The torus factors and a^lambda combine into integral powers.
  CHECK_NOTHROW(ev.E(0).apply(mod.basis(5)));
  CHECK_NOTHROW(ev.F_(0).apply(mod.basis(5)));
}

TEST_CASE("scaling covariance and K_{alpha_0}") {
  const auto& f = Exact::get(5);
  std::mt19937_64 rng(99);
  const Mod mod(random_params(f, 2, rng, true));
  const auto c = f.from_int(3) * f.eps_int(2);
  for (auto sign : {Sign::Plus, Sign::Minus}) {
    const Eval ev(mod, sign, f.eps_int(1));
    const Eval scaled_ev(mod, sign, f.eps_int(1) * c);
    CHECK(same_on_basis(scaled_ev.E(0), scaled(c, ev.E(0))));
    CHECK(same_on_basis(scaled_ev.F_(0), scaled(f.one() / c, ev.F_(0))));
    for (int i = 1; i <= 2; ++i) {
      CHECK(same_on_basis(scaled_ev.E(i), ev.E(i)));
      CHECK(same_on_basis(scaled_ev.F_(i), ev.F_(i)));
    }
    CHECK(same_on_basis(compose(ev.K_alpha(0), ev.K(RootLatticeElement::highest(2))),
                        identity_map(f, ev.dim())));
    CHECK(same_on_basis(compose(ev.K_alpha(0), ev.K_alpha_inv(0)), identity_map(f, ev.dim())));
  }
  CHECK_THROWS_AS(EvaluationModule<Exact>(Mod(ModuleParams<Exact>::distinguished(f, WeightVector{1})),
                                          Sign::Plus, f.one()),
                  RankTooSmall);
}

TEST_CASE("float evaluation module matches the exact one") {
  const auto& f = Exact::get(3);
  const auto& g = ComplexField::get(3);
  const WeightVector lambda{1, 2};
  const Eval ev(Mod(ModuleParams<Exact>::distinguished(f, lambda)), Sign::Minus, f.eps_int(1));
  const EvaluationModule<ComplexField> fl(
      SchnizerModule<ComplexField>(ModuleParams<ComplexField>::distinguished(g, lambda)), Sign::Minus,
      g.eps_int(1));
  for (std::size_t idx = 0; idx < ev.dim(); ++idx) {
    for (int gen = 0; gen < 2; ++gen) {
      const auto& x = gen ? ev.E(0).column(idx) : ev.F_(0).column(idx);
      const auto& y = gen ? fl.E(0).column(idx) : fl.F_(0).column(idx);
      CHECK(x.size() == y.size());
      for (const auto& [k, v] : x.terms()) CHECK(std::abs(v.to_complex() - y.coeff(k)) < 1e-9);
    }
  }
}
