#pragma once

// The l^N-dimensional module V_eps(a, b, lambda) with basis v(m), m in Z_l^N:
//   E_i v(m) = sum_{j=1}^{i} a(alpha_{i,j}) [N_{i,j}(m+b)] v(m + alpha_{i,j})
//   F_i v(m) = sum_{j=i}^{n} a_{i,j} [M_{i,j}(m+b) - lambda_i] v(m + eps_{i,j})
//   K_{alpha_i} v(m) = eps^{mu_i(m+b) + lambda_i} v(m)
//   K_{Lambda_i} v(m) = eps^{-sum_{k>=i} (m_{i,k} + b_{i,k}) + lambda_{Lambda_i}} v(m)

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "schnizer/index_space.hpp"
#include "schnizer/linear_map.hpp"
#include "schnizer/root_data.hpp"

namespace schnizer {

/// Values c_{i,j} indexed by slot; pairs outside 1 <= i <= j <= n read as 0.
template <class T>
class SlotValues {
 public:
  SlotValues(const IndexSpace& space, std::vector<T> values, T zero)
      : space_(&space), values_(std::move(values)), zero_(std::move(zero)) {}

  const T& operator()(int i, int j) const {
    return space_->in_range(i, j) ? values_[space_->slot(i, j)] : zero_;
  }
  const IndexSpace& space() const { return *space_; }
  const T& zero() const { return zero_; }

 private:
  const IndexSpace* space_;
  std::vector<T> values_;
  T zero_;
};

/// M_{i,j}(c) = sum_{k=i-1}^{j-1}(c_{i,k} - c_{i-1,k}) + sum_{k=i}^{j}(c_{i,k} - c_{i+1,k})
template <class T>
T form_M(const SlotValues<T>& c, int i, int j) {
  const int n = c.space().rank();
  if (!(1 <= i && i <= j && j <= n)) throw IndexOutOfRange("form_M needs 1 <= i <= j <= n");
  T acc = c.zero();
  for (int k = i - 1; k <= j - 1; ++k) acc = acc + c(i, k) - c(i - 1, k);
  for (int k = i; k <= j; ++k) acc = acc + c(i, k) - c(i + 1, k);
  return acc;
}

/// N_{i,j}(c) = c_{j-1,n-i+j} - c_{j,n-i+j}
template <class T>
T form_N(const SlotValues<T>& c, int i, int j) {
  const int n = c.space().rank();
  if (!(1 <= j && j <= i && i <= n)) throw IndexOutOfRange("form_N needs 1 <= j <= i <= n");
  return c(j - 1, n - i + j) - c(j, n - i + j);
}

/// mu_i(c) = sum_{k>=i-1} c_{i-1,k} - 2 sum_{k>=i} c_{i,k} + sum_{k>=i+1} c_{i+1,k}
template <class T>
T form_mu(const SlotValues<T>& c, int i) {
  const int n = c.space().rank();
  if (!(1 <= i && i <= n)) throw IndexOutOfRange("form_mu needs 1 <= i <= n");
  T acc = c.zero();
  for (int k = i - 1; k <= n; ++k) acc = acc + c(i - 1, k);
  for (int k = i; k <= n; ++k) acc = acc - c(i, k) - c(i, k);
  for (int k = i + 1; k <= n; ++k) acc = acc + c(i + 1, k);
  return acc;
}

/// m^lambda_{i,j} = sum_{k=1}^{i} lambda_{j-k+1} mod l.
MultiIndex lowest_index(const IndexSpace& space, const WeightVector& lambda);

template <ScalarField F>
struct ModuleParams {
  using Scalar = typename F::Scalar;
  using Exponent = typename F::Exponent;

  int n = 0;
  const F* field = nullptr;
  std::vector<Scalar> a;         // per slot, nonzero
  std::vector<Exponent> b;       // per slot
  std::vector<Exponent> lambda;  // lambda_1..lambda_n

  /// a = 1, b = 0.
  static ModuleParams distinguished(const F& f, const std::vector<Exponent>& lambda) {
    ModuleParams p;
    p.n = static_cast<int>(lambda.size());
    p.field = &f;
    const int slots = p.n * (p.n + 1) / 2;
    p.a.assign(slots, f.one());
    p.b.assign(slots, f.exponent(0L));
    p.lambda = lambda;
    return p;
  }
  static ModuleParams distinguished(const F& f, const WeightVector& lambda) {
    return distinguished(f, to_exponents(f, lambda));
  }

  bool is_distinguished() const {
    for (const auto& x : a) {
      if (!field->equal(x, field->one())) return false;
    }
    for (const auto& x : b) {
      if (x != field->exponent(0L)) return false;
    }
    return true;
  }

  void validate() const {
    if (n < 1) throw InvalidParameter("rank must be positive");
    if (field == nullptr) throw InvalidParameter("module parameters need a field");
    const std::size_t slots = static_cast<std::size_t>(n) * (n + 1) / 2;
    if (a.size() != slots || b.size() != slots) {
      throw InvalidParameter("parameters a, b need n(n+1)/2 entries");
    }
    if (lambda.size() != static_cast<std::size_t>(n)) throw InvalidParameter("lambda needs n entries");
    for (const auto& x : a) {
      if (field->is_zero(x)) throw InvalidParameter("every a_{i,j} must be nonzero");
    }
  }
};

/// a(c) = prod a_{i,j}^{c_{i,j}}
template <ScalarField F>
typename F::Scalar a_power(const F& f, const std::vector<typename F::Scalar>& a,
                           const SignedIndex& c) {
  typename F::Scalar acc = f.one();
  for (std::size_t s = 0; s < c.d.size(); ++s) {
    if (c.d[s] != 0) acc = acc * int_power(f, a[s], c.d[s]);
  }
  return acc;
}

/// Parameters, index space and precomputed step tables shared by all
/// operators of one module.
template <ScalarField F>
class SchnizerCore {
 public:
  using Scalar = typename F::Scalar;
  using Exponent = typename F::Exponent;
  using Vec = ModuleVector<F>;

  explicit SchnizerCore(ModuleParams<F> params)
      : params_(std::move(params)), space_(params_.n, params_.field->order()) {
    params_.validate();
    const int n = params_.n;
    for (int i = 1; i <= n; ++i) {
      std::vector<Step> steps;
      for (int j = 1; j <= i; ++j) {
        const auto shift = space_.alpha_index(i, j);
        steps.push_back({j, shift, a_power(field(), params_.a, shift)});
      }
      e_steps_.push_back(std::move(steps));
      steps.clear();
      for (int j = i; j <= n; ++j) {
        steps.push_back({j, space_.eps_index(i, j), params_.a[space_.slot(i, j)]});
      }
      f_steps_.push_back(std::move(steps));
    }
  }

  const ModuleParams<F>& params() const { return params_; }
  const F& field() const { return *params_.field; }
  const IndexSpace& space() const { return space_; }
  int rank() const { return params_.n; }

  /// c = m + b at the basis vector idx.
  SlotValues<Exponent> shifted(std::size_t idx) const {
    std::vector<Exponent> c(space_.slots());
    for (int s = 0; s < space_.slots(); ++s) {
      c[s] = field().exponent(static_cast<long>(space_.digit(idx, s))) + params_.b[s];
    }
    return SlotValues<Exponent>(space_, std::move(c), field().exponent(0L));
  }

  Vec e_column(int i, std::size_t idx) const {
    const auto c = shifted(idx);
    Vec out(field());
    for (const auto& st : e_steps_[i - 1]) {
      out.add_term(space_.shift(idx, st.shift), st.weight * field().q_num(form_N(c, i, st.j)));
    }
    return out;
  }

  Vec f_column(int i, std::size_t idx) const {
    const auto c = shifted(idx);
    Vec out(field());
    for (const auto& st : f_steps_[i - 1]) {
      out.add_term(space_.shift(idx, st.shift),
                   st.weight * field().q_num(form_M(c, i, st.j) - params_.lambda[i - 1]));
    }
    return out;
  }

  /// sum_i mu_i (mu_i(m+b) + lambda_i)
  Exponent K_exponent(const RootLatticeElement& mu, std::size_t idx) const {
    const auto c = shifted(idx);
    Exponent acc = field().exponent(0L);
    for (int i = 1; i <= rank(); ++i) {
      const long k = mu.coeffs[i - 1];
      if (k != 0) acc = acc + field().exponent(k) * (form_mu(c, i) + params_.lambda[i - 1]);
    }
    return acc;
  }

  /// -sum_{k=i}^{n} (m_{i,k} + b_{i,k}) + lambda_{Lambda_i}
  Exponent K_Lambda_exponent(int i, std::size_t idx) const {
    const auto c = shifted(idx);
    Exponent acc = lambda_weight(field(), params_.lambda, i);
    for (int k = i; k <= rank(); ++k) acc = acc - c(i, k);
    return acc;
  }

 private:
  struct Step {
    int j;
    SignedIndex shift;
    Scalar weight;
  };

  ModuleParams<F> params_;
  IndexSpace space_;
  std::vector<std::vector<Step>> e_steps_;
  std::vector<std::vector<Step>> f_steps_;
};

template <ScalarField F>
class SchnizerModule {
 public:
  using Scalar = typename F::Scalar;
  using Exponent = typename F::Exponent;
  using Vec = ModuleVector<F>;
  using Map = LinearMap<F>;

  explicit SchnizerModule(ModuleParams<F> params)
      : core_(std::make_shared<const SchnizerCore<F>>(std::move(params))) {
    for (int i = 1; i <= rank(); ++i) {
      const auto core = core_;
      const auto alpha = RootLatticeElement::simple(rank(), i);
      const auto tag = std::to_string(i);
      e_maps_.emplace_back(field(), dim(), "E" + tag,
                           [core, i](std::size_t idx) { return core->e_column(i, idx); });
      f_maps_.emplace_back(field(), dim(), "F" + tag,
                           [core, i](std::size_t idx) { return core->f_column(i, idx); });
      k_maps_.push_back(torus(alpha, "K" + tag));
      k_inv_maps_.push_back(torus(-alpha, "K" + tag + "^-1"));
    }
  }

  const SchnizerCore<F>& core() const { return *core_; }
  const ModuleParams<F>& params() const { return core_->params(); }
  const F& field() const { return core_->field(); }
  const IndexSpace& space() const { return core_->space(); }
  int rank() const { return core_->rank(); }
  std::size_t dim() const { return space().dim(); }

  const Map& E(int i) const { return e_maps_.at(check(i) - 1); }
  const Map& F_(int i) const { return f_maps_.at(check(i) - 1); }
  const Map& K_alpha(int i) const { return k_maps_.at(check(i) - 1); }
  const Map& K_alpha_inv(int i) const { return k_inv_maps_.at(check(i) - 1); }

  /// K_mu for mu in the root lattice.
  Map K(const RootLatticeElement& mu) const {
    if (mu.coeffs.size() != static_cast<std::size_t>(rank())) throw InvalidParameter("K_mu rank");
    return torus(mu, "K" + lattice_label(mu));
  }

  /// K_{Lambda_i}; NonInvertibleDenominator when the exponent is not admissible.
  Map K_Lambda(int i) const {
    check(i);
    const auto core = core_;
    return Map(field(), dim(), "KL" + std::to_string(i), [core, i](std::size_t idx) {
      return Vec::basis(core->field(), idx).scaled(core->field().eps(core->K_Lambda_exponent(i, idx)));
    });
  }

  Vec act_E(int i, const Vec& v) const { return E(i).apply(v); }
  Vec act_F(int i, const Vec& v) const { return F_(i).apply(v); }
  Vec act_K(const RootLatticeElement& mu, const Vec& v) const { return K(mu).apply(v); }
  Vec act_K_Lambda(int i, const Vec& v) const { return K_Lambda(i).apply(v); }

  Vec basis(std::size_t idx) const { return Vec::basis(field(), idx); }
  Vec basis(const MultiIndex& m) const { return basis(space().encode(m)); }
  Vec zero_vector() const { return Vec(field()); }

 private:
  int check(int i) const {
    if (i < 1 || i > rank()) {
      throw IndexOutOfRange("generator index " + std::to_string(i) + " outside 1.." +
                            std::to_string(rank()));
    }
    return i;
  }

  Map torus(const RootLatticeElement& mu, std::string name) const {
    const auto core = core_;
    return Map(field(), dim(), std::move(name), [core, mu](std::size_t idx) {
      return Vec::basis(core->field(), idx).scaled(core->field().eps(core->K_exponent(mu, idx)));
    });
  }

  static std::string lattice_label(const RootLatticeElement& mu) {
    std::string out = "(";
    for (std::size_t k = 0; k < mu.coeffs.size(); ++k) {
      out += (k ? "," : "") + std::to_string(mu.coeffs[k]);
    }
    return out + ")";
  }

  std::shared_ptr<const SchnizerCore<F>> core_;
  std::vector<Map> e_maps_, f_maps_, k_maps_, k_inv_maps_;
};

}  // namespace schnizer
