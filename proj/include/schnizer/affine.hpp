#pragma once

// Iterated eps^{-1}-brackets F_{theta_i}, E_{theta_i}, their closed forms, and
// the evaluation modules V_eps(a, b, lambda)^{+-}_a over the loop algebra.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "schnizer/descents.hpp"

namespace schnizer {

/// Which reading of the printed closed formulas to use. The bracket route is
/// the reference; these switches exist so the tests can tell the readings
/// apart.
enum class ThetaEWeight {
  Dropped,  // [N_{s,1}(m+b)]
  Printed,  // [N_{s,1}(m+b) - lambda_s]
};

enum class F0Subscript {
  Shifted,  // [-m_{1,n-s+1} - b_{1,n-s+1}]
  Printed,  // [-m_{1,n-s+1} - b_{1,n-s}]
};

/// Readings validated against the bracket route (see tests/test_affine.cpp).
inline constexpr ThetaEWeight kThetaEWeight = ThetaEWeight::Dropped;
inline constexpr F0Subscript kF0Subscript = F0Subscript::Shifted;

inline std::string to_string(F0Subscript c) {
  return c == F0Subscript::Shifted ? "b_{1,n-s+1}" : "b_{1,n-s}";
}
inline std::string to_string(ThetaEWeight c) {
  return c == ThetaEWeight::Dropped ? "[N_{s,1}(m+b)]" : "[N_{s,1}(m+b)-lambda_s]";
}

/// (E_{theta_i}, F_{theta_i}) as bracket operators.
template <ScalarField F>
std::pair<LinearMap<F>, LinearMap<F>> theta_ops(const SchnizerModule<F>& mod, int i) {
  if (i < 1 || i > mod.rank()) throw IndexOutOfRange("theta index " + std::to_string(i));
  const auto inv = mod.field().eps(mod.field().exponent(-1L));
  LinearMap<F> e = mod.E(1), f = mod.F_(1);
  for (int k = 2; k <= i; ++k) {
    e = q_bracket(mod.E(k), e, inv);
    f = q_bracket(mod.F_(k), f, inv);
  }
  return {e.renamed("E_theta" + std::to_string(i)), f.renamed("F_theta" + std::to_string(i))};
}

namespace detail {

/// lambda^{(s,i)} = sum_{k<s} lambda_k - sum_{k=s+1}^{i} lambda_k.
template <ScalarField F>
typename F::Exponent lambda_partial(const ModuleParams<F>& p, int s, int i) {
  auto acc = p.field->exponent(0L);
  for (int k = 1; k < s; ++k) acc = acc + p.lambda[k - 1];
  for (int k = s + 1; k <= i; ++k) acc = acc - p.lambda[k - 1];
  return acc;
}

template <ScalarField F>
typename F::Scalar descent_weight(const SchnizerModule<F>& mod, const DescentSequence& d) {
  return a_power(mod.field(), mod.params().a, descent_shift(mod.space(), d));
}

}  // namespace detail

/// Closed form of F_{theta_i} v or E_{theta_i} v as a sum over descent sequences.
template <ScalarField F>
ModuleVector<F> theta_closed(const SchnizerModule<F>& mod, int i, const ModuleVector<F>& v,
                             DescentType type, ThetaEWeight reading = kThetaEWeight) {
  const auto& f = mod.field();
  const auto& p = mod.params();
  const auto& seqs = enumerate_descents(mod.rank(), i, type);
  ModuleVector<F> out(f);
  for (const auto& [idx, coeff] : v.terms()) {
    const auto c = mod.core().shifted(idx);
    for (const auto& d : seqs) {
      const long s = d.s;
      auto scalar = coeff * sign_power(f, i + s) * detail::descent_weight(mod, d);
      if (type == DescentType::F) {
        scalar = scalar *
                 f.eps(descent_form(c, d, FormKind::Ci) - detail::lambda_partial(p, d.s, i) +
                       f.exponent(1 - s)) *
                 f.q_num(form_M(c, d.s, d.at(d.s)) - p.lambda[d.s - 1]);
      } else {
        auto bracket = form_N(c, d.s, 1);
        if (reading == ThetaEWeight::Printed) bracket = bracket - p.lambda[d.s - 1];
        scalar = scalar * f.eps(descent_form(c, d, FormKind::Di) + f.exponent(1 - s)) * f.q_num(bracket);
      }
      out.add_term(mod.space().shift(idx, descent_shift(mod.space(), d)), scalar);
    }
  }
  return out;
}

/// The i = n specialisation written with the full-length forms C and D.
template <ScalarField F>
ModuleVector<F> theta_closed_top(const SchnizerModule<F>& mod, const ModuleVector<F>& v,
                                 DescentType type) {
  const auto& f = mod.field();
  const auto& p = mod.params();
  const int n = mod.rank();
  const auto& seqs = enumerate_descents(n, n, type);
  ModuleVector<F> out(f);
  for (const auto& [idx, coeff] : v.terms()) {
    const auto c = mod.core().shifted(idx);
    for (const auto& d : seqs) {
      const long s = d.s;
      auto scalar = coeff * sign_power(f, s + n) * detail::descent_weight(mod, d);
      if (type == DescentType::F) {
        scalar = scalar *
                 f.eps(descent_form(c, d, FormKind::C) - detail::lambda_partial(p, d.s, n) +
                       f.exponent(1 - s)) *
                 f.q_num(c(d.s, d.s) - c(d.s - 1, d.s - 1) - p.lambda[d.s - 1]);
      } else {
        scalar = scalar * f.eps(descent_form(c, d, FormKind::D) + f.exponent(1 - s)) *
                 f.q_num(c.zero() - c(1, n - d.s + 1));
      }
      out.add_term(mod.space().shift(idx, descent_shift(mod.space(), d)), scalar);
    }
  }
  return out;
}

enum class Route { Bracket, Closed };

inline std::string to_string(Route r) { return r == Route::Bracket ? "bracket" : "closed"; }

/// Affine generator label: E_i, F_i (0 <= i <= n) or K_{alpha_i} (0 <= i <= n).
struct Generator {
  enum class Kind { E, F, K, Kinv };
  Kind kind;
  int index;
  std::string to_string() const {
    const char* k = kind == Kind::E ? "E" : kind == Kind::F ? "F" : "K";
    return k + std::to_string(index) + (kind == Kind::Kinv ? "^-1" : "");
  }
};

/// V_eps(a, b, lambda)^{sign}_a: the Schnizer module pulled back along the
/// evaluation map with spectral parameter a^lambda_{sign}.
template <ScalarField F>
class EvaluationModule {
 public:
  using Scalar = typename F::Scalar;
  using Exponent = typename F::Exponent;
  using Vec = ModuleVector<F>;
  using Map = LinearMap<F>;

  EvaluationModule(SchnizerModule<F> base, Sign sign, Scalar spectral, Route route = Route::Bracket)
      : base_(std::move(base)), sign_(sign), spectral_(std::move(spectral)), route_(route) {
    if (base_.rank() < 2) throw RankTooSmall("evaluation modules need n >= 2");
    if (field().is_zero(spectral_)) throw InvalidParameter("spectral parameter must be nonzero");
    build();
  }

  const SchnizerModule<F>& base() const { return base_; }
  const F& field() const { return base_.field(); }
  int rank() const { return base_.rank(); }
  std::size_t dim() const { return base_.dim(); }
  Sign sign() const { return sign_; }
  const Scalar& spectral() const { return spectral_; }
  Route route() const { return route_; }

  /// a^lambda_{sign}; may throw NonInvertibleDenominator in the exact backend.
  Scalar eval_parameter() const {
    return schnizer::eval_parameter(field(), spectral_, base_.params().lambda, sign_);
  }

  const Map& E(int i) const { return i == 0 ? e0_ : base_.E(i); }
  const Map& F_(int i) const { return i == 0 ? f0_ : base_.F_(i); }
  const Map& K_alpha(int i) const { return i == 0 ? k0_ : base_.K_alpha(i); }
  const Map& K_alpha_inv(int i) const { return i == 0 ? k0_inv_ : base_.K_alpha_inv(i); }
  Map K(const RootLatticeElement& mu) const { return base_.K(mu); }

  const Map& generator(const Generator& g) const {
    switch (g.kind) {
      case Generator::Kind::E: return E(g.index);
      case Generator::Kind::F: return F_(g.index);
      case Generator::Kind::K: return K_alpha(g.index);
      case Generator::Kind::Kinv: return K_alpha_inv(g.index);
    }
    return E(g.index);
  }

  Vec ev_generator(const Generator& g, const Vec& v) const { return generator(g).apply(v); }

  /// E_0 / F_0 via the printed closed formulas.
  Vec ev_zero_closed(Generator::Kind kind, const Vec& v, F0Subscript reading = kF0Subscript) const {
    return kind == Generator::Kind::E ? e0_closed(v) : f0_closed(v, reading);
  }

  /// The eps^{-1}-bracket chain used for E_0 (F-type) or F_0 (E-type).
  const Map& zero_chain(Generator::Kind kind) const {
    return kind == Generator::Kind::E ? f_chain_ : e_chain_;
  }

 private:
  // Exponent and scalar prefactor of the torus part of E_0 / F_0 at the
  // target vector. The lambda_{Lambda} terms of a^lambda and K_{Lambda}
  // cancel, so the total stays integral even when (n + 1) shares a factor
  // with l.
  Exponent twist_exponent(bool e_side, std::size_t target) const {
    const auto& f = field();
    const auto& core = base_.core();
    const int n = rank();
    const Exponent shift = eval_parameter_exponent(f, base_.params().lambda, sign_);
    const Exponent k1 = core.K_Lambda_exponent(1, target);
    const Exponent kn = core.K_Lambda_exponent(n, target);
    const bool plus = sign_ == Sign::Plus;
    if (e_side) {
      // eps^{-1} a^lambda K_{Lambda_1}^{+-1} K_{Lambda_n}^{-+1}
      const Exponent torus = plus ? k1 - kn : kn - k1;
      return f.exponent(-1L) + shift + torus;
    }
    // (-1)^{n-1} eps^n (a^lambda)^{-1} K_{Lambda_1}^{-+1} K_{Lambda_n}^{+-1}
    const Exponent torus = plus ? kn - k1 : k1 - kn;
    return f.exponent(static_cast<long>(n)) - shift + torus;
  }

  Scalar twist_scalar(bool e_side) const {
    const auto& f = field();
    const int n = rank();
    const Scalar sign_part = sign_ == Sign::Minus ? sign_power(f, n + 1) : f.one();
    if (e_side) return spectral_ * sign_part;
    return sign_power(f, n - 1) / (spectral_ * sign_part);
  }

  Map twisted(const Map& chain, bool e_side, std::string name) const {
    const auto self = *this;
    const Scalar pref = twist_scalar(e_side);
    return Map(field(), dim(), std::move(name), [self, chain, e_side, pref](std::size_t idx) {
      Vec out(self.field());
      for (const auto& [target, c] : chain.column(idx).terms()) {
        out.add_term(target, pref * c * self.field().eps(self.twist_exponent(e_side, target)));
      }
      return out;
    });
  }

  void build() {
    const auto& f = field();
    const int n = rank();
    const auto inv = f.eps(f.exponent(-1L));
    std::vector<Map> fs, es;
    for (int i = 1; i <= n; ++i) {
      fs.push_back(base_.F_(i));
      es.push_back(base_.E(i));
    }
    if (sign_ == Sign::Plus) {
      // [X_n, [X_{n-1}, ..., [X_2, X_1]]]
      std::reverse(fs.begin(), fs.end());
      std::reverse(es.begin(), es.end());
    }
    f_chain_ = bracket_chain(fs, inv);
    e_chain_ = bracket_chain(es, inv);
    if (route_ == Route::Bracket) {
      e0_ = twisted(f_chain_, true, "E0");
      f0_ = twisted(e_chain_, false, "F0");
    } else {
      const auto self = *this;
      e0_ = Map(f, dim(), "E0", [self](std::size_t idx) {
        return self.e0_closed(self.base_.basis(idx));
      });
      f0_ = Map(f, dim(), "F0", [self](std::size_t idx) {
        return self.f0_closed(self.base_.basis(idx), kF0Subscript);
      });
    }
    // K_{alpha_0} = K_theta^{-1}
    k0_ = base_.K(-RootLatticeElement::highest(n)).renamed("K0");
    k0_inv_ = base_.K(RootLatticeElement::highest(n)).renamed("K0^-1");
  }

  Vec e0_closed(const Vec& v) const {
    const auto& f = field();
    const auto& p = base_.params();
    const int n = rank();
    const long pm = sign_value(sign_);
    ModuleVector<F> out(f);
    for (const auto& [idx, coeff] : v.terms()) {
      const auto c = base_.core().shifted(idx);
      for (const auto& d : enumerate_descents(n, n, DescentType::F)) {
        const long s = d.s;
        const Exponent inner = descent_form(c, d, FormKind::CE) - lambda_exponent(s) - f.exponent(s);
        const Exponent e = f.exponent(pm) * inner + f.exponent(static_cast<long>(n));
        const auto scalar = coeff * spectral_ * sign_power(f, s + n) * detail::descent_weight(base_, d) *
                            f.eps(e) * f.q_num(c(d.s, d.s) - c(d.s - 1, d.s - 1) - p.lambda[d.s - 1]);
        out.add_term(base_.space().shift(idx, descent_shift(base_.space(), d)), scalar);
      }
    }
    return out;
  }

  Vec f0_closed(const Vec& v, F0Subscript reading) const {
    const auto& f = field();
    const auto& p = base_.params();
    const auto& space = base_.space();
    const int n = rank();
    const long pm = sign_value(sign_);
    ModuleVector<F> out(f);
    for (const auto& [idx, coeff] : v.terms()) {
      const auto c = base_.core().shifted(idx);
      for (const auto& d : enumerate_descents(n, n, DescentType::E)) {
        const long s = d.s;
        const Exponent inner = descent_form(c, d, FormKind::DF) - f.exponent(s) + f.exponent(n + 1L);
        const Exponent e = f.exponent(pm) * inner - f.exponent(static_cast<long>(n));
        const int col = n - d.s + 1;
        const int b_col = reading == F0Subscript::Shifted ? col : col - 1;
        const Exponent b_term = space.in_range(1, b_col) ? p.b[space.slot(1, b_col)] : f.exponent(0L);
        const Exponent m_term = f.exponent(static_cast<long>(space.digit(idx, space.slot(1, col))));
        const auto scalar = coeff / spectral_ * sign_power(f, s - 1) * detail::descent_weight(base_, d) *
                            f.eps(e) * f.q_num(f.exponent(0L) - m_term - b_term);
        out.add_term(space.shift(idx, descent_shift(space, d)), scalar);
      }
    }
    return out;
  }

  /// lambda^{(s)} = sum_{k<s} lambda_k - sum_{k>s} lambda_k
  Exponent lambda_exponent(long s) const {
    return detail::lambda_partial(base_.params(), static_cast<int>(s), rank());
  }

  SchnizerModule<F> base_;
  Sign sign_;
  Scalar spectral_;
  Route route_;
  Map f_chain_, e_chain_, e0_, f0_, k0_, k0_inv_;
};

}  // namespace schnizer
