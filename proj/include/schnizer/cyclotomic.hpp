#pragma once

// Exact arithmetic in the cyclotomic field Q(eps), eps a primitive l-th root
// of unity, realised as Q[x] / Phi_l(x).

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace schnizer {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(const std::string& text);

bool is_integral(const Rational& r);

/// Integer value of an integral rational; throws InvalidParameter otherwise.
long to_long(const Rational& r);

/// Residue of k modulo l in [0, l).
inline long mod_floor(long k, long l) {
  long r = k % l;
  return r < 0 ? r + l : r;
}

/// The l-th cyclotomic polynomial, constant coefficient first.
std::vector<Integer> cyclotomic_poly(int l);

/// Order of the root of unity: odd, at least 3.
class RootOrder {
 public:
  explicit RootOrder(int l);
  int value() const { return l_; }

 private:
  int l_;
};

class CyclotomicField;

/// An element of Q(eps) in canonical form: a polynomial in eps of degree
/// below deg Phi_l. The default-constructed value is an unbound zero that
/// adopts the field of whatever it is combined with.
class CycScalar {
 public:
  CycScalar() = default;

  const CyclotomicField* field() const { return field_; }
  int order() const;
  /// Coefficients of 1, eps, eps^2, ...; empty for zero.
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of eps^k for 0 <= k < degree.
  Rational coeff(std::size_t k) const;

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;

  CycScalar& operator+=(const CycScalar& rhs);
  CycScalar& operator-=(const CycScalar& rhs);
  CycScalar& operator*=(const CycScalar& rhs);
  CycScalar& operator/=(const CycScalar& rhs);
  CycScalar operator-() const;

  friend CycScalar operator+(CycScalar lhs, const CycScalar& rhs) { return lhs += rhs; }
  friend CycScalar operator-(CycScalar lhs, const CycScalar& rhs) { return lhs -= rhs; }
  friend CycScalar operator*(CycScalar lhs, const CycScalar& rhs) { return lhs *= rhs; }
  friend CycScalar operator/(CycScalar lhs, const CycScalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const CycScalar& a, const CycScalar& b);
  friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

  /// Multiplicative inverse; throws DivisionByZero on zero.
  CycScalar inverse() const;

  /// Image under eps -> exp(2 pi i / l).
  std::complex<double> to_complex() const;

  /// Human readable form, e.g. "1/2 + eps - 3*eps^2".
  std::string to_string() const;

 private:
  friend class CyclotomicField;
  CycScalar(const CyclotomicField* field, std::vector<Rational> coeffs);
  void normalize();
  const CyclotomicField* bind(const CycScalar& other) const;

  const CyclotomicField* field_ = nullptr;
  std::vector<Rational> coeffs_;
};

/// Arithmetic context for Q(eps). Instances are interned per order and live
/// for the whole program, so scalars can refer to them by pointer.
class CyclotomicField {
 public:
  using Scalar = CycScalar;
  using Exponent = Rational;

  static const CyclotomicField& get(RootOrder l);
  static const CyclotomicField& get(int l) { return get(RootOrder(l)); }

  int order() const { return l_; }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  const std::vector<Integer>& modulus() const { return modulus_; }

  CycScalar zero() const { return CycScalar(this, {}); }
  CycScalar one() const { return from_rational(Rational(1)); }
  CycScalar from_rational(const Rational& r) const;
  CycScalar from_int(long k) const { return from_rational(Rational(k)); }
  /// Builds sum_k coeffs[k] eps^k for arbitrary length, reducing mod Phi_l.
  CycScalar from_poly(const std::vector<Rational>& coeffs) const;

  /// eps^k for integer k.
  const CycScalar& eps_int(long k) const;
  /// eps^(p/q) := eps^(p q^{-1} mod l); NonInvertibleDenominator unless
  /// gcd(q, l) = 1.
  CycScalar epsilon_pow(const Rational& e) const;

  /// [r]_eps as an integer combination of powers of eps.
  const CycScalar& q_int(long r) const;
  CycScalar q_factorial(long m) const;
  /// Gaussian binomial evaluated from its Laurent polynomial form in q.
  CycScalar q_binomial(long r, long m) const;

  // Scalar backend interface shared with ComplexField.
  static constexpr bool exact = true;
  CycScalar eps(const Rational& e) const { return epsilon_pow(e); }
  /// [e]_eps; non-integral e goes through epsilon_pow.
  CycScalar q_num(const Rational& e) const;
  Rational exponent(const Rational& r) const { return r; }
  Rational exponent(long k) const { return Rational(k); }
  CycScalar scalar(long k) const { return from_int(k); }
  bool is_zero(const CycScalar& s) const { return s.is_zero(); }
  bool equal(const CycScalar& a, const CycScalar& b) const { return a == b; }
  std::complex<double> to_complex(const CycScalar& s) const { return s.to_complex(); }
  std::string describe() const;

 private:
  explicit CyclotomicField(int l);
  friend class CycScalar;
  void reduce(std::vector<Rational>& poly) const;
  CycScalar q_int_denominator() const;

  int l_;
  std::vector<Integer> modulus_;
  // powers_[k] = eps^k for 0 <= k < l; qints_[k] = [k]_eps.
  std::vector<CycScalar> powers_;
  std::vector<CycScalar> qints_;
};

}  // namespace schnizer
