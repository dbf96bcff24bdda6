#pragma once

// Type A_n Cartan data, fundamental weights and the weight-derived scalars
// used by the evaluation representations.

#include <string>
#include <vector>

#include "schnizer/cyclotomic.hpp"
#include "schnizer/errors.hpp"
#include "schnizer/scalar_backend.hpp"

namespace schnizer {

enum class Sign { Plus, Minus };

inline int sign_value(Sign s) { return s == Sign::Plus ? 1 : -1; }
inline Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline std::string to_string(Sign s) { return s == Sign::Plus ? "+" : "-"; }
Sign parse_sign(const std::string& text);

/// Integer highest weight (lambda_1, ..., lambda_n), 0-based storage.
using WeightVector = std::vector<long>;

/// Element sum_i coeffs[i-1] alpha_i of the finite root lattice.
struct RootLatticeElement {
  std::vector<long> coeffs;

  static RootLatticeElement simple(int n, int i);
  /// theta = alpha_1 + ... + alpha_n.
  static RootLatticeElement highest(int n);
  RootLatticeElement operator-() const;
  RootLatticeElement operator+(const RootLatticeElement& other) const;
  bool operator==(const RootLatticeElement&) const = default;
};

class CartanData {
 public:
  explicit CartanData(int n, bool affine = false);

  int rank() const { return n_; }
  bool affine() const { return affine_; }
  /// a_{ij} for 1 <= i, j <= n, or 0 <= i, j <= n when affine.
  int entry(int i, int j) const;
  /// (mu, nu) for root lattice elements.
  long pairing(const RootLatticeElement& mu, const RootLatticeElement& nu) const;
  /// (mu, alpha_j); j = 0 uses alpha_0 = -theta.
  long pairing_simple(const RootLatticeElement& mu, int j) const;

 private:
  int n_;
  bool affine_;
};

/// gcd(l, n + 1) == 1.
bool coprime_rank(int n, int l);

/// Coordinates of Lambda_i in the basis alpha_1..alpha_n.
std::vector<Rational> fundamental_weight(int i, int n);

/// (Lambda_i, Lambda_j).
Rational weight_pairing(int i, int j, int n);

/// lambda_{Lambda_i} = sum_j lambda_j (Lambda_i, Lambda_j).
Rational lambda_weight(const WeightVector& lambda, int i);

/// lambda^{(i)} = sum_{k<i} lambda_k - sum_{k>i} lambda_k.
long lambda_super(const WeightVector& lambda, int i);

/// Indices i (1-based) with lambda_i != 0.
std::vector<int> support(const WeightVector& lambda);

/// lambda_{Lambda_i} for exponents in an arbitrary backend.
template <ScalarField F>
typename F::Exponent lambda_weight(const F& f, const std::vector<typename F::Exponent>& lambda,
                                   int i) {
  const int n = static_cast<int>(lambda.size());
  auto acc = f.exponent(0L);
  for (int j = 1; j <= n; ++j) acc = acc + lambda[j - 1] * f.exponent(weight_pairing(i, j, n));
  return acc;
}

/// Exponent of eps in a^lambda_{+-} / a (without the sign (-1)^{n+1}).
template <ScalarField F>
typename F::Exponent eval_parameter_exponent(const F& f,
                                             const std::vector<typename F::Exponent>& lambda,
                                             Sign sign) {
  const int n = static_cast<int>(lambda.size());
  const auto l1 = lambda_weight(f, lambda, 1);
  const auto ln = lambda_weight(f, lambda, n);
  if (sign == Sign::Plus) return ln - l1 + f.exponent(static_cast<long>(n));
  return l1 - ln + f.exponent(static_cast<long>(2 * n + 1));
}

/// a^lambda_+ = a eps^{-l1+ln+n}, a^lambda_- = a (-1)^{n+1} eps^{l1-ln+2n+1}.
template <ScalarField F>
typename F::Scalar eval_parameter(const F& f, const typename F::Scalar& a,
                                  const std::vector<typename F::Exponent>& lambda, Sign sign) {
  if (f.is_zero(a)) throw InvalidParameter("spectral parameter must be nonzero");
  const int n = static_cast<int>(lambda.size());
  typename F::Scalar out = a * f.eps(eval_parameter_exponent(f, lambda, sign));
  if (sign == Sign::Minus) out = out * sign_power(f, n + 1);
  return out;
}

template <ScalarField F>
std::vector<typename F::Exponent> to_exponents(const F& f, const WeightVector& lambda) {
  std::vector<typename F::Exponent> out;
  out.reserve(lambda.size());
  for (long x : lambda) out.push_back(f.exponent(x));
  return out;
}

}  // namespace schnizer
