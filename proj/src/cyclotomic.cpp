#include "schnizer/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "schnizer/errors.hpp"

namespace schnizer {

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of num / den over Q; den nonzero.
std::pair<RatPoly, RatPoly> divmod(RatPoly num, const RatPoly& den) {
  trim(num);
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) return {{}, num};
  RatPoly quot(num.size() - dd, Rational(0));
  for (std::size_t k = num.size(); k-- > dd;) {
    if (num[k] == 0) continue;
    Rational c = num[k] / den[dd];
    quot[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
  }
  num.resize(dd);
  trim(num);
  trim(quot);
  return {quot, num};
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

RatPoly poly_sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

long mod_inverse(long a, long m) {
  long t = 0, new_t = 1, r = m, new_r = mod_floor(a, m);
  while (new_r != 0) {
    long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return mod_floor(t, m);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0 ||
      mpz_sgn(mpq_denref(r.get_mpq_t())) == 0) {
    throw ParseError("not a rational number: '" + text + "'");
  }
  r.canonicalize();
  return r;
}

bool is_integral(const Rational& r) { return r.get_den() == 1; }

long to_long(const Rational& r) {
  if (!is_integral(r) || !r.get_num().fits_slong_p()) {
    throw InvalidParameter("expected an integer, got " + r.get_str());
  }
  return r.get_num().get_si();
}

std::vector<Integer> cyclotomic_poly(int l) {
  if (l < 1) throw InvalidParameter("cyclotomic_poly needs l >= 1");
  // x^l - 1 divided by Phi_d for every proper divisor d of l.
  RatPoly p(static_cast<std::size_t>(l) + 1, Rational(0));
  p[0] = -1;
  p[l] = 1;
  for (int d = 1; d < l; ++d) {
    if (l % d != 0) continue;
    const auto phi_d = cyclotomic_poly(d);
    RatPoly den(phi_d.begin(), phi_d.end());
    auto [quot, rem] = divmod(p, den);
    p = std::move(quot);
  }
  std::vector<Integer> out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(c.get_num());
  return out;
}

RootOrder::RootOrder(int l) : l_(l) {
  if (l < 3 || l % 2 == 0) {
    throw InvalidRootOrder("root order must be odd and at least 3, got " + std::to_string(l));
  }
}

// ---------------------------------------------------------------------------
// CycScalar

CycScalar::CycScalar(const CyclotomicField* field, std::vector<Rational> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  normalize();
}

void CycScalar::normalize() {
  if (field_ != nullptr) field_->reduce(coeffs_);
  trim(coeffs_);
}

int CycScalar::order() const { return field_ ? field_->order() : 0; }

Rational CycScalar::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

bool CycScalar::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

const CyclotomicField* CycScalar::bind(const CycScalar& other) const {
  if (field_ == nullptr) return other.field_;
  if (other.field_ != nullptr && other.field_ != field_) {
    throw FieldMismatch("scalars from Q(eps_" + std::to_string(field_->order()) + ") and Q(eps_" +
                        std::to_string(other.field_->order()) + ") combined");
  }
  return field_;
}

CycScalar& CycScalar::operator+=(const CycScalar& rhs) {
  field_ = bind(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim(coeffs_);
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& rhs) {
  field_ = bind(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim(coeffs_);
  return *this;
}

CycScalar& CycScalar::operator*=(const CycScalar& rhs) {
  field_ = bind(rhs);
  coeffs_ = poly_mul(coeffs_, rhs.coeffs_);
  normalize();
  return *this;
}

CycScalar& CycScalar::operator/=(const CycScalar& rhs) { return *this *= rhs.inverse(); }

CycScalar CycScalar::operator-() const {
  CycScalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  if (a.field_ && b.field_ && a.field_ != b.field_) return false;
  return a.coeffs_ == b.coeffs_;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(eps)");
  if (field_ == nullptr) throw DivisionByZero("inverse of an unbound scalar");
  // Extended Euclid: track s with s * a == r (mod Phi).
  RatPoly modulus(field_->modulus_.begin(), field_->modulus_.end());
  RatPoly r0 = modulus, r1 = coeffs_;
  RatPoly s0, s1 = {Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    RatPoly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant since Phi is irreducible.
  const Rational c = r0.at(0);
  for (auto& x : s0) x /= c;
  return CycScalar(field_, std::move(s0));
}

std::complex<double> CycScalar::to_complex() const {
  if (coeffs_.empty()) return {0.0, 0.0};
  const double l = field_->order();
  std::complex<double> out{0.0, 0.0};
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    out += coeffs_[k].get_d() * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / l);
  }
  return out;
}

std::string CycScalar::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    Rational c = coeffs_[k];
    if (c == 0) continue;
    if (!first) {
      out << (c < 0 ? " - " : " + ");
      c = abs(c);
    } else if (c < 0 && k > 0 && c == -1) {
      out << "-";
      c = 1;
    }
    first = false;
    if (k == 0) {
      out << c.get_str();
      continue;
    }
    if (c != 1) out << c.get_str() << "*";
    out << "eps";
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// CyclotomicField

const CyclotomicField& CyclotomicField::get(RootOrder l) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicField>> registry;
  std::lock_guard lock(mutex);
  auto& slot = registry[l.value()];
  if (!slot) slot.reset(new CyclotomicField(l.value()));
  return *slot;
}

CyclotomicField::CyclotomicField(int l) : l_(l), modulus_(cyclotomic_poly(l)) {
  powers_.reserve(l);
  for (int k = 0; k < l; ++k) {
    RatPoly p(static_cast<std::size_t>(k) + 1, Rational(0));
    p[k] = 1;
    powers_.push_back(CycScalar(this, std::move(p)));
  }
  // [k] = eps^{k-1} + eps^{k-3} + ... + eps^{1-k}
  qints_.reserve(l);
  for (int k = 0; k < l; ++k) {
    CycScalar acc = zero();
    for (int j = 0; j < k; ++j) acc += eps_int(k - 1 - 2 * j);
    qints_.push_back(acc);
  }
}

void CyclotomicField::reduce(std::vector<Rational>& poly) const {
  const std::size_t deg = modulus_.size() - 1;
  for (std::size_t k = poly.size(); k-- > deg;) {
    if (poly[k] == 0) continue;
    const Rational c = poly[k];
    for (std::size_t j = 0; j <= deg; ++j) poly[k - deg + j] -= c * modulus_[j];
  }
  if (poly.size() > deg) poly.resize(deg);
}

CycScalar CyclotomicField::from_rational(const Rational& r) const {
  if (r == 0) return zero();
  return CycScalar(this, {r});
}

CycScalar CyclotomicField::from_poly(const std::vector<Rational>& coeffs) const {
  // Fold exponents modulo l first so long inputs stay cheap.
  RatPoly folded(static_cast<std::size_t>(l_), Rational(0));
  for (std::size_t k = 0; k < coeffs.size(); ++k) folded[k % l_] += coeffs[k];
  return CycScalar(this, std::move(folded));
}

const CycScalar& CyclotomicField::eps_int(long k) const { return powers_[mod_floor(k, l_)]; }

CycScalar CyclotomicField::epsilon_pow(const Rational& e) const {
  const Integer& q = e.get_den();
  Integer g;
  mpz_gcd_ui(g.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(l_));
  if (g != 1) {
    throw NonInvertibleDenominator("eps^(" + e.get_str() + ") is undefined: gcd(" + q.get_str() +
                                   ", " + std::to_string(l_) + ") != 1");
  }
  Integer p_mod = e.get_num() % l_;
  Integer q_mod = q % l_;
  const long p = mod_floor(p_mod.get_si(), l_);
  const long qi = mod_inverse(q_mod.get_si(), l_);
  return eps_int(p * qi);
}

const CycScalar& CyclotomicField::q_int(long r) const {
  // [r + l] = [r] and [-r] = -[r] both follow from eps^l = 1; table covers Z.
  return qints_[mod_floor(r, l_)];
}

CycScalar CyclotomicField::q_num(const Rational& e) const {
  if (is_integral(e)) {
    Integer k = e.get_num() % l_;
    return q_int(k.get_si());
  }
  return (epsilon_pow(e) - epsilon_pow(-e)) / q_int_denominator();
}

CycScalar CyclotomicField::q_int_denominator() const { return eps_int(1) - eps_int(-1); }

CycScalar CyclotomicField::q_factorial(long m) const {
  if (m < 0) throw InvalidParameter("q_factorial needs m >= 0");
  CycScalar acc = one();
  for (long k = 1; k <= m; ++k) acc *= q_int(k);
  return acc;
}

CycScalar CyclotomicField::q_binomial(long r, long m) const {
  if (m < 0) throw InvalidParameter("q_binomial needs m >= 0");
  if (m == 0) return one();
  long sign = 1;
  if (r < 0) {
    // [r choose m] = (-1)^m [m - r - 1 choose m]
    sign = (m % 2 == 0) ? 1 : -1;
    r = m - r - 1;
  }
  if (m > r) return zero();
  // Balanced Gaussian binomials as Laurent polynomials in q:
  // G(k, j) = q^{-j} G(k-1, j) + q^{k-j} G(k-1, j-1).
  using Laurent = std::map<long, Integer>;
  std::vector<Laurent> row(static_cast<std::size_t>(m) + 1);
  row[0][0] = 1;
  for (long k = 1; k <= r; ++k) {
    std::vector<Laurent> next(row.size());
    for (long j = 0; j <= std::min(k, m); ++j) {
      if (j <= k - 1) {
        for (const auto& [e, c] : row[j]) next[j][e - j] += c;
      }
      if (j >= 1) {
        for (const auto& [e, c] : row[j - 1]) next[j][e + k - j] += c;
      }
    }
    row = std::move(next);
  }
  CycScalar acc = zero();
  for (const auto& [e, c] : row[m]) acc += eps_int(e) * from_rational(Rational(c));
  return sign > 0 ? acc : -acc;
}

std::string CyclotomicField::describe() const {
  return "exact Q(eps), eps a primitive " + std::to_string(l_) + "-th root of unity";
}

}  // namespace schnizer
