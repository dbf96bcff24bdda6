#include "schnizer/root_data.hpp"

#include <cstdlib>
#include <numeric>

namespace schnizer {

namespace {

void check_index(int i, int lo, int hi, const char* what) {
  if (i < lo || i > hi) {
    throw IndexOutOfRange(std::string(what) + " index " + std::to_string(i) + " outside [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

int finite_entry(int i, int j) {
  if (i == j) return 2;
  return std::abs(i - j) == 1 ? -1 : 0;
}

}  // namespace

Sign parse_sign(const std::string& text) {
  if (text == "+" || text == "plus") return Sign::Plus;
  if (text == "-" || text == "minus") return Sign::Minus;
  throw ParseError("sign must be '+' or '-', got '" + text + "'");
}

RootLatticeElement RootLatticeElement::simple(int n, int i) {
  check_index(i, 1, n, "simple root");
  RootLatticeElement out{std::vector<long>(n, 0)};
  out.coeffs[i - 1] = 1;
  return out;
}

RootLatticeElement RootLatticeElement::highest(int n) {
  return RootLatticeElement{std::vector<long>(n, 1)};
}

RootLatticeElement RootLatticeElement::operator-() const {
  RootLatticeElement out = *this;
  for (auto& c : out.coeffs) c = -c;
  return out;
}

RootLatticeElement RootLatticeElement::operator+(const RootLatticeElement& other) const {
  if (other.coeffs.size() != coeffs.size()) throw InvalidParameter("root lattice rank mismatch");
  RootLatticeElement out = *this;
  for (std::size_t k = 0; k < coeffs.size(); ++k) out.coeffs[k] += other.coeffs[k];
  return out;
}

CartanData::CartanData(int n, bool affine) : n_(n), affine_(affine) {
  if (n < 1) throw InvalidParameter("rank must be positive");
  if (affine && n < 2) throw RankTooSmall("affine Cartan data needs n >= 2");
}

int CartanData::entry(int i, int j) const {
  const int lo = affine_ ? 0 : 1;
  check_index(i, lo, n_, "Cartan row");
  check_index(j, lo, n_, "Cartan column");
  if (i == j) return 2;
  if (i == 0 || j == 0) {
    const int k = i == 0 ? j : i;
    return (k == 1 || k == n_) ? -1 : 0;
  }
  return finite_entry(i, j);
}

long CartanData::pairing(const RootLatticeElement& mu, const RootLatticeElement& nu) const {
  if (mu.coeffs.size() != static_cast<std::size_t>(n_) || nu.coeffs.size() != mu.coeffs.size()) {
    throw InvalidParameter("root lattice rank mismatch");
  }
  long acc = 0;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) acc += mu.coeffs[i - 1] * nu.coeffs[j - 1] * finite_entry(i, j);
  }
  return acc;
}

long CartanData::pairing_simple(const RootLatticeElement& mu, int j) const {
  if (j == 0) return -pairing(mu, RootLatticeElement::highest(n_));
  return pairing(mu, RootLatticeElement::simple(n_, j));
}

bool coprime_rank(int n, int l) { return std::gcd(l, n + 1) == 1; }

std::vector<Rational> fundamental_weight(int i, int n) {
  check_index(i, 1, n, "fundamental weight");
  // Lambda_i = ((n-i+1) sum_{k<=i} k alpha_k + i sum_{k>i} (n-k+1) alpha_k) / (n+1)
  std::vector<Rational> out(n);
  for (int k = 1; k <= n; ++k) {
    const long num = k <= i ? static_cast<long>(n - i + 1) * k : static_cast<long>(i) * (n - k + 1);
    out[k - 1] = Rational(num, n + 1);
    out[k - 1].canonicalize();
  }
  return out;
}

Rational weight_pairing(int i, int j, int n) {
  check_index(i, 1, n, "weight");
  check_index(j, 1, n, "weight");
  const auto wi = fundamental_weight(i, n);
  const auto wj = fundamental_weight(j, n);
  Rational acc = 0;
  for (int p = 1; p <= n; ++p) {
    for (int q = 1; q <= n; ++q) {
      const int a = finite_entry(p, q);
      if (a != 0) acc += wi[p - 1] * wj[q - 1] * a;
    }
  }
  return acc;
}

Rational lambda_weight(const WeightVector& lambda, int i) {
  const int n = static_cast<int>(lambda.size());
  check_index(i, 1, n, "weight");
  Rational acc = 0;
  for (int j = 1; j <= n; ++j) acc += weight_pairing(i, j, n) * lambda[j - 1];
  return acc;
}

long lambda_super(const WeightVector& lambda, int i) {
  const int n = static_cast<int>(lambda.size());
  check_index(i, 1, n, "weight");
  long acc = 0;
  for (int k = 1; k < i; ++k) acc += lambda[k - 1];
  for (int k = i + 1; k <= n; ++k) acc -= lambda[k - 1];
  return acc;
}

std::vector<int> support(const WeightVector& lambda) {
  std::vector<int> out;
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    if (lambda[k] != 0) out.push_back(static_cast<int>(k) + 1);
  }
  return out;
}

}  // namespace schnizer
