#pragma once

// Linear operators on V_N given by their action on basis vectors. Columns are
// computed on demand and cached, so composite operators built from brackets
// stay cheap when applied repeatedly.

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "schnizer/module_vector.hpp"

namespace schnizer {

template <ScalarField F>
class LinearMap {
 public:
  using Scalar = typename F::Scalar;
  using Vec = ModuleVector<F>;
  using ColumnFn = std::function<Vec(std::size_t)>;

  LinearMap() = default;
  LinearMap(const F& field, std::size_t dim, std::string name, ColumnFn column)
      : state_(std::make_shared<State>(&field, dim, std::move(name), std::move(column))) {}

  bool valid() const { return static_cast<bool>(state_); }
  const F& field() const { return *state_->field; }
  std::size_t dim() const { return state_->dim; }
  const std::string& name() const { return state_->name; }

  /// Image of the basis vector with linear index idx.
  const Vec& column(std::size_t idx) const {
    std::lock_guard lock(state_->mutex);
    auto it = state_->cache.find(idx);
    if (it != state_->cache.end()) return it->second;
    // Computing may recurse into other maps but never into this one.
    Vec image = state_->fn(idx);
    return state_->cache.emplace(idx, std::move(image)).first->second;
  }

  Vec apply(const Vec& v) const {
    Vec out(field());
    for (const auto& [idx, c] : v.terms()) out.axpy(c, column(idx));
    return out;
  }
  Vec operator()(const Vec& v) const { return apply(v); }

  /// Same action with a different display name; shares the cache.
  LinearMap renamed(std::string name) const {
    const LinearMap self = *this;
    return LinearMap(field(), dim(), std::move(name),
                     [self](std::size_t idx) { return self.column(idx); });
  }

 private:
  struct State {
    State(const F* f, std::size_t d, std::string n, ColumnFn c)
        : field(f), dim(d), name(std::move(n)), fn(std::move(c)) {}
    const F* field;
    std::size_t dim;
    std::string name;
    ColumnFn fn;
    std::recursive_mutex mutex;
    std::unordered_map<std::size_t, Vec> cache;
  };
  std::shared_ptr<State> state_;
};

template <ScalarField F>
LinearMap<F> identity_map(const F& field, std::size_t dim) {
  return LinearMap<F>(field, dim, "1",
                      [&field](std::size_t idx) { return ModuleVector<F>::basis(field, idx); });
}

/// u v: v acts first.
template <ScalarField F>
LinearMap<F> compose(const LinearMap<F>& u, const LinearMap<F>& v) {
  return LinearMap<F>(u.field(), u.dim(), u.name() + " " + v.name(),
                      [u, v](std::size_t idx) { return u.apply(v.column(idx)); });
}

template <ScalarField F>
LinearMap<F> compose(const std::vector<LinearMap<F>>& factors) {
  if (factors.empty()) throw InvalidParameter("empty operator product");
  LinearMap<F> acc = factors.back();
  for (std::size_t k = factors.size() - 1; k-- > 0;) acc = compose(factors[k], acc);
  return acc;
}

/// sum_k c_k A_k
template <ScalarField F>
LinearMap<F> combine(const std::vector<std::pair<typename F::Scalar, LinearMap<F>>>& terms,
                     std::string name) {
  if (terms.empty()) throw InvalidParameter("empty linear combination");
  const auto& field = terms.front().second.field();
  return LinearMap<F>(field, terms.front().second.dim(), std::move(name), [terms, &field](std::size_t idx) {
    ModuleVector<F> out(field);
    for (const auto& [c, op] : terms) out.axpy(c, op.column(idx));
    return out;
  });
}

template <ScalarField F>
LinearMap<F> scaled(const typename F::Scalar& c, const LinearMap<F>& u) {
  return combine<F>({{c, u}}, "(" + u.name() + ")*c");
}

/// [u, v]_c = u v - c v u
template <ScalarField F>
LinearMap<F> q_bracket(const LinearMap<F>& u, const LinearMap<F>& v, const typename F::Scalar& c) {
  const auto& f = u.field();
  return combine<F>({{f.one(), compose(u, v)}, {f.zero() - c, compose(v, u)}},
                    "[" + u.name() + "," + v.name() + "]");
}

/// Plain commutator uv - vu.
template <ScalarField F>
LinearMap<F> commutator(const LinearMap<F>& u, const LinearMap<F>& v) {
  return q_bracket(u, v, u.field().one());
}

/// u^k for k >= 0.
template <ScalarField F>
LinearMap<F> power(const LinearMap<F>& u, int k) {
  if (k == 0) return identity_map(u.field(), u.dim());
  std::vector<LinearMap<F>> factors(k, u);
  return compose(factors).renamed("(" + u.name() + ")^" + std::to_string(k));
}

/// [x_1, [x_2, ..., [x_{k-1}, x_k]_c ...]_c with the innermost pair last.
template <ScalarField F>
LinearMap<F> bracket_chain(const std::vector<LinearMap<F>>& ops, const typename F::Scalar& c) {
  if (ops.empty()) throw InvalidParameter("empty bracket chain");
  LinearMap<F> acc = ops.back();
  for (std::size_t k = ops.size() - 1; k-- > 0;) acc = q_bracket(ops[k], acc, c);
  return acc;
}

}  // namespace schnizer
