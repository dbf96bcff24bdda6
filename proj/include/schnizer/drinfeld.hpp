#pragma once

// Drinfeld polynomials of the evaluation modules and the criterion for
// V^0(lambda)^+_{a_+} and V^0(lambda)^-_{a_-} to coincide.

#include <string>
#include <vector>

#include "schnizer/serialize.hpp"

namespace schnizer {

/// Monic polynomial, coefficients constant term first.
template <ScalarField F>
struct DrinfeldPolynomial {
  using Scalar = typename F::Scalar;

  const F* field = nullptr;
  std::vector<Scalar> coeffs;

  static DrinfeldPolynomial constant_one(const F& f) { return {&f, {f.one()}}; }

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_one() const { return degree() == 0; }

  bool equals(const DrinfeldPolynomial& other) const {
    if (coeffs.size() != other.coeffs.size()) return false;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (!field->equal(coeffs[k], other.coeffs[k])) return false;
    }
    return true;
  }

  /// this * (t - root)
  void multiply_linear(const Scalar& root) {
    std::vector<Scalar> out(coeffs.size() + 1, field->zero());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      out[k + 1] = out[k + 1] + coeffs[k];
      out[k] = out[k] - root * coeffs[k];
    }
    coeffs = std::move(out);
  }

  Scalar evaluate(const Scalar& t) const {
    Scalar acc = field->zero();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  Json to_json() const {
    Json out = Json::array();
    for (const auto& c : coeffs) out.push_back(scalar_json(c));
    return out;
  }
};

/// prod_{p=1}^{degree} (t - eps^{degree-2p+1} root)
template <ScalarField F>
DrinfeldPolynomial<F> string_polynomial(const F& f, long degree, const typename F::Scalar& root) {
  auto p = DrinfeldPolynomial<F>::constant_one(f);
  for (long k = 1; k <= degree; ++k) p.multiply_linear(f.eps(f.exponent(degree - 2 * k + 1)) * root);
  return p;
}

/// a_{(+-,i)} = a^{-1} eps^{+-(lambda^{(i)} + i)}
template <ScalarField F>
typename F::Scalar string_center(const F& f, const WeightVector& lambda, const typename F::Scalar& a,
                                 Sign sign, int i) {
  const long e = sign_value(sign) * (lambda_super(lambda, i) + i);
  return f.eps(f.exponent(e)) / a;
}

template <ScalarField F>
DrinfeldPolynomial<F> drinfeld_closed(const F& f, const WeightVector& lambda,
                                      const typename F::Scalar& a, Sign sign, int i) {
  if (i < 1 || i > static_cast<int>(lambda.size())) throw IndexOutOfRange("Drinfeld index");
  if (f.is_zero(a)) throw InvalidParameter("spectral parameter must be nonzero");
  if (lambda[i - 1] == 0) return DrinfeldPolynomial<F>::constant_one(f);
  return string_polynomial(f, lambda[i - 1], string_center(f, lambda, a, sign, i));
}

namespace detail {

template <ScalarField F>
long integral_weight(const F& f, const typename F::Exponent& e) {
  if constexpr (F::exact) {
    (void)f;
    if (!is_integral(e)) throw InvalidParameter("lambda must be integral");
    return to_long(e);
  } else {
    const double r = std::round(e.real());
    if (std::abs(e - typename F::Exponent(r, 0.0)) > f.tolerance()) {
      throw InvalidParameter("lambda must be integral");
    }
    return static_cast<long>(r);
  }
}

}  // namespace detail

template <ScalarField F>
WeightVector module_weight(const EvaluationModule<F>& ev) {
  WeightVector out;
  for (const auto& x : ev.base().params().lambda) out.push_back(detail::integral_weight(ev.field(), x));
  return out;
}

/// psi_{i,1} on v(0), from e_i ... e_1 e_{i+1} ... e_n e_0 v(0) (e_0 first).
template <ScalarField F>
typename F::Scalar psi1_coefficient(const EvaluationModule<F>& ev, int i) {
  const int n = ev.rank();
  if (i < 1 || i > n) throw IndexOutOfRange("psi index");
  const auto& f = ev.field();
  auto v = ev.E(0).apply(ev.base().basis(0));
  for (int k = n; k >= i + 1; --k) v = ev.E(k).apply(v);
  for (int k = 1; k <= i; ++k) v = ev.E(k).apply(v);
  for (const auto& [idx, c] : v.terms()) {
    if (idx != 0) throw NotHighestWeight("word image leaves the line of v(0) at " + ev.base().space().label(idx));
  }
  const auto& lambda_i = ev.base().params().lambda[i - 1];
  const auto eps = f.eps(f.exponent(1L));
  return v.coeff(0) * (eps - f.one() / eps) * sign_power(f, i + 1) *
         f.eps(lambda_i - f.exponent(static_cast<long>(n + 1)));
}

/// a_{(+-,i)} recovered from psi_{i,1} = (eps^{lambda_i} - eps^{-lambda_i}) a_{(+-,i)}^{-1} eps^{lambda_i - 1}.
template <ScalarField F>
typename F::Scalar extracted_center(const EvaluationModule<F>& ev, int i) {
  const auto& f = ev.field();
  const long li = module_weight(ev).at(i - 1);
  if (li % f.order() == 0) throw ZeroWeight("lambda_" + std::to_string(i) + " = 0");
  const auto psi = psi1_coefficient(ev, i);
  if (f.is_zero(psi)) throw NotHighestWeight("psi_{i,1} vanishes");
  const auto gap = f.eps(f.exponent(li)) - f.eps(f.exponent(-li));
  return gap * f.eps(f.exponent(li - 1)) / psi;
}

template <ScalarField F>
DrinfeldPolynomial<F> drinfeld_from_module(const EvaluationModule<F>& ev, int i) {
  const long li = module_weight(ev).at(i - 1);
  return string_polynomial(ev.field(), li, extracted_center(ev, i));
}

struct IsoDecision {
  bool verdict = false;
  std::string method;
  Json details;
};

/// a_+ = a_- eps^{2(lambda^{(i)} + i)} for every i in supp(lambda).
template <ScalarField F>
IsoDecision iso_direct(const F& f, const WeightVector& lambda, const typename F::Scalar& a_plus,
                       const typename F::Scalar& a_minus) {
  IsoDecision d{true, "direct", {{"conditions", Json::array()}}};
  for (int i : support(lambda)) {
    const long e = 2 * (lambda_super(lambda, i) + i);
    const bool ok = f.equal(a_plus, a_minus * f.eps(f.exponent(e)));
    d.details["conditions"].push_back({{"i", i}, {"exponent", mod_floor(e, f.order())}, {"holds", ok}});
    d.verdict = d.verdict && ok;
  }
  if constexpr (!F::exact) d.details["tolerance"] = f.tolerance();
  return d;
}

/// Congruence (a) on the support and the parity formula (b) for a_+ / a_-.
template <ScalarField F>
IsoDecision iso_explicit(const F& f, const WeightVector& lambda, const typename F::Scalar& a_plus,
                         const typename F::Scalar& a_minus) {
  const auto supp = support(lambda);
  const long l = f.order();
  IsoDecision d{true, "explicit", {{"support", supp}, {"congruences", Json::array()}}};
  if (supp.empty()) {
    d.details["trivial"] = true;
    return d;
  }
  const long m = static_cast<long>(supp.size());
  auto idx = [&](long r) { return static_cast<long>(supp[r - 1]); };
  for (long r = 2; r <= m; ++r) {
    long rhs = (r % 2 == 0 ? -1 : 1) * lambda[idx(1) - 1] + (r % 2 == 0 ? 1 : -1) * idx(1) - idx(r);
    for (long k = 2; k <= r - 1; ++k) rhs += 2 * ((r - 1 + k) % 2 == 0 ? 1 : -1) * idx(k);
    const bool ok = mod_floor(rhs, l) != 0 && mod_floor(lambda[idx(r) - 1] - rhs, l) == 0;
    d.details["congruences"].push_back({{"r", r}, {"rhs", mod_floor(rhs, l)}, {"holds", ok}});
    d.verdict = d.verdict && ok;
  }
  long e = 0;
  if (m % 2 == 1) {
    for (long k = 1; k <= m; ++k) e += (k % 2 == 1 ? 1 : -1) * idx(k);
  } else {
    e = lambda[idx(1) - 1];
    for (long k = 2; k <= m; ++k) e += (k % 2 == 0 ? 1 : -1) * idx(k);
  }
  e *= 2;
  const bool ratio = f.equal(a_plus, a_minus * f.eps(f.exponent(e)));
  d.details["ratio_exponent"] = mod_floor(e, l);
  d.details["ratio_holds"] = ratio;
  d.verdict = d.verdict && ratio;
  if constexpr (!F::exact) d.details["tolerance"] = f.tolerance();
  return d;
}

/// Compares every generator of V^0(lambda)^+_{a_+} and V^0(lambda)^-_{a_-}
/// on L^nil(lambda).
template <ScalarField F>
IsoDecision iso_witness(const F& f, const WeightVector& lambda, const typename F::Scalar& a_plus,
                        const typename F::Scalar& a_minus) {
  const SchnizerModule<F> mod(ModuleParams<F>::distinguished(f, lambda));
  if (mod.rank() < 2) throw RankTooSmall("operator witness needs n >= 2");
  const EvaluationModule<F> plus(mod, Sign::Plus, a_plus), minus(mod, Sign::Minus, a_minus);
  const auto nil = nil_submodule(mod);
  IsoDecision d{true, "operator-witness", {{"nil_dim", nil.dim()}, {"differing", Json::array()}}};
  for (int i = 0; i <= mod.rank(); ++i) {
    const std::pair<const LinearMap<F>*, const LinearMap<F>*> pairs[] = {
        {&plus.E(i), &minus.E(i)}, {&plus.F_(i), &minus.F_(i)}, {&plus.K_alpha(i), &minus.K_alpha(i)}};
    for (const auto& [p, q] : pairs) {
      if (!materialize(*p, nil).equals(materialize(*q, nil))) {
        d.verdict = false;
        d.details["differing"].push_back(p->name());
      }
    }
  }
  return d;
}

}  // namespace schnizer
