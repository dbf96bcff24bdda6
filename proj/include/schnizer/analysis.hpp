#pragma once

// Exact linear algebra on modules: operator matrices, joint kernels, span
// closures, relation checks and nilpotency checks.

#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schnizer/affine.hpp"
#include "schnizer/subspace.hpp"

namespace schnizer {

/// Sparse matrix in the basis order of V_N (or of a submodule basis).
template <ScalarField F>
struct OperatorMatrix {
  using Scalar = typename F::Scalar;

  const F* field = nullptr;
  std::string name;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::map<std::pair<std::size_t, std::size_t>, Scalar> entries;

  Scalar at(std::size_t r, std::size_t c) const {
    auto it = entries.find({r, c});
    return it == entries.end() ? field->zero() : it->second;
  }

  bool equals(const OperatorMatrix& other) const {
    if (rows != other.rows || cols != other.cols) return false;
    for (const auto& [rc, x] : entries) {
      if (!field->equal(x, other.at(rc.first, rc.second))) return false;
    }
    for (const auto& [rc, x] : other.entries) {
      if (!field->equal(x, at(rc.first, rc.second))) return false;
    }
    return true;
  }
};

template <ScalarField F>
OperatorMatrix<F> materialize(const LinearMap<F>& op) {
  OperatorMatrix<F> m{&op.field(), op.name(), op.dim(), op.dim(), {}};
  for (std::size_t col = 0; col < op.dim(); ++col) {
    for (const auto& [row, x] : op.column(col).terms()) m.entries.emplace(std::make_pair(row, col), x);
  }
  return m;
}

/// Matrix of op on an invariant subspace, in the coordinates of its rows.
template <ScalarField F>
OperatorMatrix<F> materialize(const LinearMap<F>& op, const SubmoduleBasis<F>& restriction) {
  OperatorMatrix<F> m{&op.field(), op.name(), restriction.dim(), restriction.dim(), {}};
  std::size_t col = 0;
  for (const auto& b : restriction.vectors()) {
    const auto coords = restriction.coordinates(op.apply(b));
    if (!coords) throw NotInvariant(op.name() + " leaves the subspace");
    for (std::size_t row = 0; row < coords->size(); ++row) {
      if (!op.field().is_zero((*coords)[row])) m.entries.emplace(std::make_pair(row, col), (*coords)[row]);
    }
    ++col;
  }
  return m;
}

template <ScalarField F>
struct KernelResult {
  SubmoduleBasis<F> kernel;
  std::size_t image_rank;
};

/// Joint kernel of ops on the span of domain (the whole module if empty).
/// The augmented rows (op_1 v, ..., op_k v | v) are row reduced with image
/// columns first, so rows pivoting in the tracking part span the kernel.
template <ScalarField F>
KernelResult<F> joint_kernel_with_rank(const std::vector<LinearMap<F>>& ops,
                                       const std::vector<ModuleVector<F>>& domain = {}) {
  if (ops.empty()) throw InvalidParameter("joint kernel of an empty operator list");
  const F& f = ops.front().field();
  const std::size_t dim = ops.front().dim();
  const std::size_t offset = ops.size() * dim;
  std::vector<ModuleVector<F>> inputs = domain;
  if (inputs.empty()) {
    for (std::size_t idx = 0; idx < dim; ++idx) inputs.push_back(ModuleVector<F>::basis(f, idx));
  }
  SubmoduleBasis<F> augmented(f);
  for (std::size_t j = 0; j < inputs.size(); ++j) {
    ModuleVector<F> row(f);
    for (std::size_t k = 0; k < ops.size(); ++k) {
      const auto image = ops[k].apply(inputs[j]);
      for (const auto& [idx, x] : image.terms()) row.add_term(k * dim + idx, x);
    }
    row.add_term(offset + j, f.one());
    augmented.insert(row);
  }
  KernelResult<F> out{SubmoduleBasis<F>(f), 0};
  for (const auto& row : augmented.vectors()) {
    if (row.terms().begin()->first < offset) {
      ++out.image_rank;
      continue;
    }
    ModuleVector<F> v(f);
    for (const auto& [key, x] : row.terms()) v.axpy(x, inputs[key - offset]);
    out.kernel.insert(v);
  }
  return out;
}

template <ScalarField F>
SubmoduleBasis<F> joint_kernel(const std::vector<LinearMap<F>>& ops,
                               const std::vector<ModuleVector<F>>& domain = {}) {
  return joint_kernel_with_rank(ops, domain).kernel;
}

/// Smallest subspace containing start and stable under gens.
template <ScalarField F>
SubmoduleBasis<F> span_closure(const F& f, const std::vector<ModuleVector<F>>& start,
                               const std::vector<LinearMap<F>>& gens) {
  SubmoduleBasis<F> basis(f);
  std::deque<ModuleVector<F>> work;
  auto push = [&](const ModuleVector<F>& v) {
    if (auto row = basis.insert(v)) work.push_back(std::move(*row));
  };
  for (const auto& v : start) push(v);
  while (!work.empty()) {
    const auto v = std::move(work.front());
    work.pop_front();
    for (const auto& g : gens) push(g.apply(v));
  }
  return basis;
}

/// Generators of U_eps(sl_{n+1}) (indices 1..n) or of the loop algebra
/// (indices 0..n) acting on one module.
template <ScalarField F>
struct GeneratorSet {
  const F* field = nullptr;
  std::size_t dim = 0;
  int n = 0;
  bool affine = false;
  std::map<int, LinearMap<F>> E, F_, K, Kinv;
  /// K_theta and its inverse; used for the extra conjugation check at index 0.
  std::optional<std::pair<LinearMap<F>, LinearMap<F>>> K_theta;

  int first() const { return affine ? 0 : 1; }

  static GeneratorSet finite(const SchnizerModule<F>& mod) {
    GeneratorSet g{&mod.field(), mod.dim(), mod.rank(), false, {}, {}, {}, {}, std::nullopt};
    for (int i = 1; i <= mod.rank(); ++i) {
      g.E.emplace(i, mod.E(i));
      g.F_.emplace(i, mod.F_(i));
      g.K.emplace(i, mod.K_alpha(i));
      g.Kinv.emplace(i, mod.K_alpha_inv(i));
    }
    return g;
  }

  static GeneratorSet loop(const EvaluationModule<F>& ev) {
    GeneratorSet g{&ev.field(), ev.dim(), ev.rank(), true, {}, {}, {}, {}, std::nullopt};
    for (int i = 0; i <= ev.rank(); ++i) {
      g.E.emplace(i, ev.E(i));
      g.F_.emplace(i, ev.F_(i));
      g.K.emplace(i, ev.K_alpha(i));
      g.Kinv.emplace(i, ev.K_alpha_inv(i));
    }
    const auto theta = RootLatticeElement::highest(ev.rank());
    g.K_theta.emplace(ev.K(theta), ev.K(-theta));
    return g;
  }

  /// E's then F's then K's, in index order.
  std::vector<LinearMap<F>> all() const {
    std::vector<LinearMap<F>> out;
    for (const auto* m : {&E, &F_, &K, &Kinv}) {
      for (const auto& [i, op] : *m) out.push_back(op);
    }
    return out;
  }
  std::vector<LinearMap<F>> raising(bool with_zero = false) const {
    std::vector<LinearMap<F>> out;
    for (const auto& [i, op] : E) {
      if (i != 0 || with_zero) out.push_back(op);
    }
    return out;
  }
  std::vector<LinearMap<F>> lowering(bool with_zero = false) const {
    std::vector<LinearMap<F>> out;
    for (const auto& [i, op] : F_) {
      if (i != 0 || with_zero) out.push_back(op);
    }
    return out;
  }
};

struct RelationWitness {
  std::size_t basis_index;
  std::string basis_label;
  std::string lhs;
  std::string rhs;
};

struct RelationRecord {
  std::string id;
  bool pass = true;
  std::optional<RelationWitness> witness;
};

struct RelationReport {
  std::string level;
  std::size_t dim = 0;
  std::vector<RelationRecord> records;

  bool all_pass() const {
    for (const auto& r : records) {
      if (!r.pass) return false;
    }
    return true;
  }
  std::size_t failures() const {
    std::size_t k = 0;
    for (const auto& r : records) k += !r.pass;
    return k;
  }
};

namespace detail {

template <ScalarField F>
using VecFn = std::function<ModuleVector<F>(const ModuleVector<F>&)>;

template <ScalarField F>
RelationRecord check_identity(const GeneratorSet<F>& g, const IndexSpace& space, std::string id,
                              const VecFn<F>& lhs, const VecFn<F>& rhs) {
  RelationRecord rec{std::move(id), true, std::nullopt};
  for (std::size_t idx = 0; idx < g.dim; ++idx) {
    const auto v = ModuleVector<F>::basis(*g.field, idx);
    const auto l = lhs(v), r = rhs(v);
    if (!l.equals(r)) {
      rec.pass = false;
      rec.witness = RelationWitness{idx, space.label(idx), l.to_string(), r.to_string()};
      break;
    }
  }
  return rec;
}

}  // namespace detail

/// Every defining relation (q = eps) as an operator identity, checked on each
/// basis vector. Failures are recorded with a witness, never thrown.
template <ScalarField F>
RelationReport verify_relations(const GeneratorSet<F>& g, const IndexSpace& space) {
  using Vec = ModuleVector<F>;
  const F& f = *g.field;
  const CartanData cartan(g.n, g.affine);
  RelationReport rep{g.affine ? "affine" : "finite", g.dim, {}};
  const auto eps = f.eps(f.exponent(1L));
  const auto eps_inv = f.eps(f.exponent(-1L));
  const auto q2 = eps + eps_inv;  // [2]
  const auto tag = [](const char* name, int i, int j) {
    return std::string(name) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  auto chain = [](std::vector<const LinearMap<F>*> ops) {
    return [ops](const Vec& v) {
      Vec out = v;
      for (auto it = ops.rbegin(); it != ops.rend(); ++it) out = (*it)->apply(out);
      return out;
    };
  };
  auto check = [&](std::string id, const detail::VecFn<F>& lhs, const detail::VecFn<F>& rhs) {
    rep.records.push_back(detail::check_identity(g, space, std::move(id), lhs, rhs));
  };
  const Vec zero(f);
  auto nothing = [zero](const Vec&) { return zero; };
  auto same = [](const Vec& v) { return v; };

  for (int i = g.first(); i <= g.n; ++i) {
    const auto& Ki = g.K.at(i);
    const auto& Kinv = g.Kinv.at(i);
    check(tag("KKinv", i, i), chain({&Ki, &Kinv}), same);
    for (int j = i + 1; j <= g.n; ++j) {
      const auto& Kj = g.K.at(j);
      check(tag("KK", i, j), chain({&Ki, &Kj}), chain({&Kj, &Ki}));
    }
    for (int j = g.first(); j <= g.n; ++j) {
      const long a = cartan.entry(i, j);
      const auto up = f.eps(f.exponent(a)), down = f.eps(f.exponent(-a));
      const auto& Ej = g.E.at(j);
      const auto& Fj = g.F_.at(j);
      check(tag("KEK", i, j), chain({&Ki, &Ej, &Kinv}),
            [&Ej, up](const Vec& v) { return Ej.apply(v).scaled(up); });
      check(tag("KFK", i, j), chain({&Ki, &Fj, &Kinv}),
            [&Fj, down](const Vec& v) { return Fj.apply(v).scaled(down); });
    }
  }
  if (g.K_theta) {
    // K_theta E_j K_theta^{-1} = eps^{(theta, alpha_j)} E_j, including j = 0.
    const auto& [Kt, Ktinv] = *g.K_theta;
    const auto theta = RootLatticeElement::highest(g.n);
    for (int j = 0; j <= g.n; ++j) {
      const long a = cartan.pairing_simple(theta, j);
      const auto up = f.eps(f.exponent(a)), down = f.eps(f.exponent(-a));
      const auto& Ej = g.E.at(j);
      const auto& Fj = g.F_.at(j);
      check(tag("KthetaEK", 0, j), chain({&Kt, &Ej, &Ktinv}),
            [&Ej, up](const Vec& v) { return Ej.apply(v).scaled(up); });
      check(tag("KthetaFK", 0, j), chain({&Kt, &Fj, &Ktinv}),
            [&Fj, down](const Vec& v) { return Fj.apply(v).scaled(down); });
    }
  }
  const auto denom = f.one() / (eps - eps_inv);
  for (int i = g.first(); i <= g.n; ++i) {
    for (int j = g.first(); j <= g.n; ++j) {
      const auto& Ei = g.E.at(i);
      const auto& Fj = g.F_.at(j);
      auto lhs = [&Ei, &Fj](const Vec& v) { return Ei.apply(Fj.apply(v)) - Fj.apply(Ei.apply(v)); };
      if (i == j) {
        const auto& Ki = g.K.at(i);
        const auto& Kinv = g.Kinv.at(i);
        check(tag("EF", i, j), lhs,
              [&Ki, &Kinv, denom](const Vec& v) { return (Ki.apply(v) - Kinv.apply(v)).scaled(denom); });
      } else {
        check(tag("EF", i, j), lhs, nothing);
      }
    }
  }
  for (int i = g.first(); i <= g.n; ++i) {
    for (int j = g.first(); j <= g.n; ++j) {
      if (i == j) continue;
      for (const auto* family : {&g.E, &g.F_}) {
        const auto& Xi = family->at(i);
        const auto& Xj = family->at(j);
        const char* name = family == &g.E ? "SerreE" : "SerreF";
        if (cartan.entry(i, j) == -1) {
          // X_i^2 X_j - [2] X_i X_j X_i + X_j X_i^2 = 0
          check(tag(name, i, j),
                [&Xi, &Xj, q2](const Vec& v) {
                  const auto xi = Xi.apply(v);
                  Vec out = Xi.apply(Xi.apply(Xj.apply(v)));
                  out.axpy(v.field().zero() - q2, Xi.apply(Xj.apply(xi)));
                  out += Xj.apply(Xi.apply(xi));
                  return out;
                },
                nothing);
        } else if (i < j) {
          check(tag(name, i, j), chain({&Xi, &Xj}), chain({&Xj, &Xi}));
        }
      }
    }
  }
  return rep;
}

struct NilpotencyReport {
  bool nilpotent = true;
  bool type1 = true;
  std::vector<std::string> failures;
};

/// X^l = 0 for the E_i, F_i (i >= 1) and K_{alpha_i}^l = 1.
template <ScalarField F>
NilpotencyReport check_nilpotent_type1(const GeneratorSet<F>& g) {
  NilpotencyReport rep;
  const int l = g.field->order();
  auto power_apply = [l](const LinearMap<F>& op, ModuleVector<F> v) {
    for (int k = 0; k < l; ++k) v = op.apply(v);
    return v;
  };
  for (int i = 1; i <= g.n; ++i) {
    for (std::size_t idx = 0; idx < g.dim; ++idx) {
      const auto v = ModuleVector<F>::basis(*g.field, idx);
      if (!power_apply(g.E.at(i), v).is_zero()) {
        rep.nilpotent = false;
        rep.failures.push_back("E" + std::to_string(i) + "^l != 0 at " + std::to_string(idx));
        break;
      }
    }
    for (std::size_t idx = 0; idx < g.dim; ++idx) {
      const auto v = ModuleVector<F>::basis(*g.field, idx);
      if (!power_apply(g.F_.at(i), v).is_zero()) {
        rep.nilpotent = false;
        rep.failures.push_back("F" + std::to_string(i) + "^l != 0 at " + std::to_string(idx));
        break;
      }
    }
    for (std::size_t idx = 0; idx < g.dim; ++idx) {
      const auto v = ModuleVector<F>::basis(*g.field, idx);
      if (!power_apply(g.K.at(i), v).equals(v)) {
        rep.type1 = false;
        rep.failures.push_back("K" + std::to_string(i) + "^l != 1 at " + std::to_string(idx));
        break;
      }
    }
  }
  return rep;
}

/// Joint kernel of the raising operators, optionally within a subspace.
template <ScalarField F>
SubmoduleBasis<F> primitive_vectors(const GeneratorSet<F>& g,
                                    const SubmoduleBasis<F>* restriction = nullptr,
                                    bool with_zero = false) {
  if (g.dim == 0) return SubmoduleBasis<F>(*g.field);
  if (restriction != nullptr) {
    if (restriction->empty()) return SubmoduleBasis<F>(*g.field);
    return joint_kernel(g.raising(with_zero), restriction->vectors());
  }
  return joint_kernel(g.raising(with_zero));
}

/// L^nil(lambda): the submodule generated by v(0) under the finite generators.
template <ScalarField F>
SubmoduleBasis<F> nil_submodule(const SchnizerModule<F>& mod) {
  return span_closure(mod.field(), {mod.basis(0)}, GeneratorSet<F>::finite(mod).all());
}

}  // namespace schnizer
