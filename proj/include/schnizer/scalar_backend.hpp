#pragma once

#include <complex>
#include <concepts>
#include <string>

#include "schnizer/complex_field.hpp"
#include "schnizer/cyclotomic.hpp"
#include "schnizer/errors.hpp"

namespace schnizer {

/// What the module code needs from a coefficient field.
template <class F>
concept ScalarField = requires(const F& f, const typename F::Scalar& s,
                               const typename F::Exponent& e, const Rational& r) {
  { f.order() } -> std::convertible_to<int>;
  { f.zero() } -> std::same_as<typename F::Scalar>;
  { f.one() } -> std::same_as<typename F::Scalar>;
  { f.scalar(1L) } -> std::same_as<typename F::Scalar>;
  { f.from_rational(r) } -> std::same_as<typename F::Scalar>;
  { f.eps(e) } -> std::convertible_to<typename F::Scalar>;
  { f.q_num(e) } -> std::convertible_to<typename F::Scalar>;
  { f.exponent(r) } -> std::same_as<typename F::Exponent>;
  { f.exponent(1L) } -> std::same_as<typename F::Exponent>;
  { f.is_zero(s) } -> std::same_as<bool>;
  { f.equal(s, s) } -> std::same_as<bool>;
  { f.to_complex(s) } -> std::same_as<std::complex<double>>;
  { f.describe() } -> std::convertible_to<std::string>;
  { F::exact } -> std::convertible_to<bool>;
  { s + s } -> std::convertible_to<typename F::Scalar>;
  { s * s } -> std::convertible_to<typename F::Scalar>;
  { s / s } -> std::convertible_to<typename F::Scalar>;
  { e + e } -> std::convertible_to<typename F::Exponent>;
  { e - e } -> std::convertible_to<typename F::Exponent>;
};

static_assert(ScalarField<CyclotomicField>);
static_assert(ScalarField<ComplexField>);

enum class Backend { Exact, Float };

inline std::string to_string(Backend b) { return b == Backend::Exact ? "exact" : "float"; }

/// (-1)^k as a field element.
template <ScalarField F>
typename F::Scalar sign_power(const F& f, long k) {
  return (k % 2 == 0) ? f.one() : f.scalar(-1);
}

/// s^k for integer k of either sign; throws DivisionByZero for 0^{-k}.
template <ScalarField F>
typename F::Scalar int_power(const F& f, const typename F::Scalar& s, long k) {
  typename F::Scalar base = s;
  if (k < 0) {
    if (f.is_zero(s)) throw DivisionByZero("negative power of zero");
    base = f.one() / s;
    k = -k;
  }
  typename F::Scalar acc = f.one();
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

}  // namespace schnizer
