#pragma once

// Subspaces of V_N held as a fully reduced row echelon basis. The pivot of a
// row is its lowest basis index, pivot coefficients are 1 and every pivot
// column is zero in all other rows, so coordinates can be read off directly.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "schnizer/module_vector.hpp"

namespace schnizer {

template <ScalarField F>
class SubmoduleBasis {
 public:
  using Scalar = typename F::Scalar;
  using Vec = ModuleVector<F>;

  explicit SubmoduleBasis(const F& field) : field_(&field) {}

  const F& field() const { return *field_; }
  std::size_t dim() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  /// Rows in increasing pivot order.
  std::vector<Vec> vectors() const {
    std::vector<Vec> out;
    out.reserve(rows_.size());
    for (const auto& [p, row] : rows_) out.push_back(row);
    return out;
  }
  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> out;
    for (const auto& [p, row] : rows_) out.push_back(p);
    return out;
  }

  /// v minus its projection along the pivots; zero iff v lies in the span.
  Vec residual(const Vec& v) const {
    Vec out = v;
    for (const auto& [p, row] : rows_) {
      const Scalar c = out.coeff(p);
      if (!field_->is_zero(c)) out.axpy(field_->zero() - c, row);
    }
    return out;
  }

  bool contains(const Vec& v) const { return residual(v).is_zero(); }

  /// Adds v to the span; returns the new normalised row, or nothing if v was
  /// already in the span.
  std::optional<Vec> insert(const Vec& v) {
    Vec r = residual(v);
    if (r.is_zero()) return std::nullopt;
    const std::size_t p = r.terms().begin()->first;
    r = r.scaled(field_->one() / r.terms().begin()->second);
    for (auto& [q, row] : rows_) {
      const Scalar c = row.coeff(p);
      if (!field_->is_zero(c)) row.axpy(field_->zero() - c, r);
    }
    rows_.emplace(p, r);
    return r;
  }

  /// Coordinates of v in the row basis; nothing if v is outside the span.
  std::optional<std::vector<Scalar>> coordinates(const Vec& v) const {
    if (!contains(v)) return std::nullopt;
    std::vector<Scalar> out;
    out.reserve(rows_.size());
    for (const auto& [p, row] : rows_) out.push_back(v.coeff(p));
    return out;
  }

  /// sum_k coords[k] row_k
  Vec combine(const std::vector<Scalar>& coords) const {
    if (coords.size() != rows_.size()) throw InvalidParameter("coordinate vector length");
    Vec out(*field_);
    std::size_t k = 0;
    for (const auto& [p, row] : rows_) out.axpy(coords[k++], row);
    return out;
  }

  /// Same subspace (equal reduced bases).
  bool same_space(const SubmoduleBasis& other) const {
    if (dim() != other.dim()) return false;
    for (const auto& [p, row] : rows_) {
      if (!other.contains(row)) return false;
    }
    return true;
  }

 private:
  const F* field_;
  std::map<std::size_t, Vec> rows_;  // pivot -> row
};

}  // namespace schnizer
