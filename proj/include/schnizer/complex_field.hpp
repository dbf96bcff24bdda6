#pragma once

// Floating-point stand-in for Q(eps) with eps = exp(2 pi i / l). Exponents
// may be arbitrary complex numbers; eps^z uses the principal branch.

#include <complex>
#include <string>

#include "schnizer/cyclotomic.hpp"

namespace schnizer {

class ComplexField {
 public:
  using Scalar = std::complex<double>;
  using Exponent = std::complex<double>;

  static constexpr double kDefaultTolerance = 1e-10;

  /// Interned per (l, tolerance) so that modules may hold plain pointers.
  static const ComplexField& get(RootOrder l, double tolerance = kDefaultTolerance);
  static const ComplexField& get(int l, double tolerance = kDefaultTolerance) {
    return get(RootOrder(l), tolerance);
  }

  int order() const { return l_; }
  double tolerance() const { return tol_; }

  Scalar zero() const { return {0.0, 0.0}; }
  Scalar one() const { return {1.0, 0.0}; }
  Scalar from_rational(const Rational& r) const { return {r.get_d(), 0.0}; }
  Scalar from_int(long k) const { return {static_cast<double>(k), 0.0}; }
  Scalar scalar(long k) const { return from_int(k); }

  /// exp(2 pi i z / l).
  Scalar eps(const Exponent& z) const;
  Scalar eps_int(long k) const { return eps(Exponent(static_cast<double>(k), 0.0)); }
  /// (eps^z - eps^-z) / (eps - eps^-1).
  Scalar q_num(const Exponent& z) const;
  Scalar q_int(long r) const { return q_num(Exponent(static_cast<double>(r), 0.0)); }

  static constexpr bool exact = false;
  Exponent exponent(const Rational& r) const { return {r.get_d(), 0.0}; }
  Exponent exponent(long k) const { return {static_cast<double>(k), 0.0}; }
  bool is_zero(const Scalar& s) const { return std::abs(s) <= tol_; }
  bool equal(const Scalar& a, const Scalar& b) const { return std::abs(a - b) <= tol_; }
  std::complex<double> to_complex(const Scalar& s) const { return s; }
  std::string describe() const;

 private:
  ComplexField(int l, double tol) : l_(l), tol_(tol) {}

  int l_;
  double tol_;
};

}  // namespace schnizer
