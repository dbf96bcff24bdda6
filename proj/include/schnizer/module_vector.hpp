#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "schnizer/errors.hpp"
#include "schnizer/scalar_backend.hpp"

namespace schnizer {

/// Finite linear combination of basis vectors v(m), keyed by linear index.
/// Zero coefficients are never stored.
template <ScalarField F>
class ModuleVector {
 public:
  using Scalar = typename F::Scalar;
  using Terms = std::map<std::size_t, Scalar>;

  explicit ModuleVector(const F& field) : field_(&field) {}
  static ModuleVector basis(const F& field, std::size_t idx) {
    ModuleVector out(field);
    out.terms_.emplace(idx, field.one());
    return out;
  }

  const F& field() const { return *field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coeff(std::size_t idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? field_->zero() : it->second;
  }

  /// this += c v(idx)
  void add_term(std::size_t idx, const Scalar& c) {
    if (field_->is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(idx, c);
    if (fresh) return;
    it->second = it->second + c;
    if (field_->is_zero(it->second)) terms_.erase(it);
  }

  /// this += c * other
  void axpy(const Scalar& c, const ModuleVector& other) {
    if (field_->is_zero(c)) return;
    for (const auto& [idx, x] : other.terms_) add_term(idx, c * x);
  }

  ModuleVector& operator+=(const ModuleVector& other) {
    for (const auto& [idx, x] : other.terms_) add_term(idx, x);
    return *this;
  }
  ModuleVector& operator-=(const ModuleVector& other) {
    for (const auto& [idx, x] : other.terms_) add_term(idx, field_->zero() - x);
    return *this;
  }
  ModuleVector scaled(const Scalar& c) const {
    ModuleVector out(*field_);
    out.axpy(c, *this);
    return out;
  }
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }

  /// Coefficientwise equality under the field's notion of equality.
  bool equals(const ModuleVector& other) const {
    return (*this - other).is_zero();
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [idx, x] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + scalar_text(x) + ")*[" + std::to_string(idx) + "]";
    }
    return out;
  }

 private:
  static std::string scalar_text(const Scalar& x) {
    if constexpr (F::exact) {
      return x.to_string();
    } else {
      return std::to_string(x.real()) + (x.imag() < 0 ? "" : "+") + std::to_string(x.imag()) + "i";
    }
  }

  const F* field_;
  Terms terms_;
};

}  // namespace schnizer
