#pragma once

// Descent sequences r = (r_1, ..., r_i) with pivot s:
//   r_1 >= ... >= r_{s-1} >= r_s < r_{s+1} < ... < r_i,
// F-type with k <= r_k <= n, E-type with 1 <= r_k <= k, and the linear forms
// attached to them by the closed formulas for the theta operators.

#include <string>
#include <vector>

#include "schnizer/schnizer_module.hpp"

namespace schnizer {

enum class DescentType { F, E };

struct DescentSequence {
  DescentType type;
  int s;               // pivot, 1 <= s <= length
  std::vector<int> r;  // r[k-1] = r_k

  int length() const { return static_cast<int>(r.size()); }
  int at(int k) const { return r[k - 1]; }
  bool operator==(const DescentSequence&) const = default;
  std::string to_string() const;
};

/// All sequences of length i for rank n, ordered by pivot then
/// lexicographically. The i = n case gives the full sets R^F, R^E.
/// Results are cached per (n, i, type).
const std::vector<DescentSequence>& enumerate_descents(int n, int i, DescentType type);

/// eps_r = sum_k eps_{k,r_k} for F-type, alpha_r = sum_k alpha_{k,r_k} for E-type.
SignedIndex descent_shift(const IndexSpace& space, const DescentSequence& d);

enum class FormKind { Ci, Di, C, D, CE, DF };

std::string to_string(FormKind kind);

namespace detail {

inline void check_kind(const IndexSpace& space, const DescentSequence& d, FormKind kind) {
  const bool f_kind = kind == FormKind::Ci || kind == FormKind::C || kind == FormKind::CE;
  if ((d.type == DescentType::F) != f_kind) {
    throw KindMismatch("form " + to_string(kind) + " applied to a sequence of the other type");
  }
  const bool full = kind != FormKind::Ci && kind != FormKind::Di;
  if (full && d.length() != space.rank()) {
    throw KindMismatch("form " + to_string(kind) + " needs a full-length sequence");
  }
}

// sum_{k=1}^{s-1} sum_{p=r_{k+1}}^{r_k - 1} c_{k,p} - sum_{k=1}^{s} sum_{p=r_k+1}^{r_{k-1}} c_{k,p},
// with r_0 = n.
template <class T>
T staircase(const SlotValues<T>& c, const DescentSequence& d) {
  const int n = c.space().rank();
  T acc = c.zero();
  for (int k = 1; k <= d.s - 1; ++k) {
    for (int p = d.at(k + 1); p <= d.at(k) - 1; ++p) acc = acc + c(k, p);
  }
  for (int k = 1; k <= d.s; ++k) {
    const int upper = k == 1 ? n : d.at(k - 1);
    for (int p = d.at(k) + 1; p <= upper; ++p) acc = acc - c(k, p);
  }
  return acc;
}

// sum_{k=s+1}^{n} (c_{r_k-1, n-k+r_k} - c_{r_k, n-k+r_k})
template <class T>
T e_tail(const SlotValues<T>& c, const DescentSequence& d) {
  const int n = c.space().rank();
  T acc = c.zero();
  for (int k = d.s + 1; k <= n; ++k) {
    const int rk = d.at(k);
    acc = acc + c(rk - 1, n - k + rk) - c(rk, n - k + rk);
  }
  return acc;
}

}  // namespace detail

/// Evaluates C_i, D_i (any length) or C, D, C_E, D_F (length n) at c.
template <class T>
T descent_form(const SlotValues<T>& c, const DescentSequence& d, FormKind kind) {
  const auto& space = c.space();
  detail::check_kind(space, d, kind);
  const int n = space.rank();
  T acc = c.zero();
  switch (kind) {
    case FormKind::Ci:
      for (int k = 1; k <= d.s - 1; ++k) acc = acc + form_M(c, k, d.at(k));
      for (int k = d.s + 1; k <= d.length(); ++k) acc = acc - form_M(c, k, d.at(k));
      return acc;
    case FormKind::Di:
      for (int k = 1; k <= d.s - 1; ++k) acc = acc + form_N(c, k, d.at(k));
      for (int k = d.s + 1; k <= d.length(); ++k) acc = acc - form_N(c, k, d.at(k));
      return acc;
    case FormKind::C:
      acc = c(d.s - 1, d.s - 1) - c(n, n);
      for (int k = 1; k <= n; ++k) acc = acc + c(1, k);
      return acc + detail::staircase(c, d);
    case FormKind::CE:
      return c(d.s - 1, d.s - 1) + detail::staircase(c, d);
    case FormKind::D:
      for (int k = n - d.s + 2; k <= n; ++k) acc = acc - c(1, k);
      return acc - detail::e_tail(c, d);
    case FormKind::DF:
      acc = c.zero() - c(n, n);
      for (int k = 1; k <= n - d.s + 1; ++k) acc = acc + c(1, k);
      return acc - detail::e_tail(c, d);
  }
  return acc;
}

}  // namespace schnizer
