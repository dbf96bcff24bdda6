// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "schnizer/commands.hpp"
#include "schnizer/drinfeld.hpp"

using namespace schnizer;

namespace {

using Exact = CyclotomicField;
using Float = ComplexField;
using Mod = SchnizerModule<Exact>;
using Eval = EvaluationModule<Exact>;

constexpr std::uint64_t kSeed = 20240611;
constexpr double kFloatTolerance = 1e-9;

struct Outcome {
  bool pass = true;
  std::size_t checks = 0;
  std::string note;

  void require(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      note = what;
    }
  }
};

std::string weight_text(const WeightVector& w) {
  std::string out = "(";
  for (std::size_t k = 0; k < w.size(); ++k) out += (k ? "," : "") + std::to_string(w[k]);
  return out + ")";
}

// All of Z_l^n for n <= 2 or sample = 0, otherwise `sample` seeded draws.
std::vector<WeightVector> grid_weights(int n, int l, std::size_t sample) {
  RunConfig cfg;
  cfg.n = n;
  cfg.l = l;
  cfg.seed = kSeed;
  cfg.lambda = {n > 2 && sample > 0 ? LambdaMode::Random : LambdaMode::All, sample, {}};
  return select_weights(cfg);
}

Mod distinguished(int l, const WeightVector& lambda) {
  return Mod(ModuleParams<Exact>::distinguished(Exact::get(l), lambda));
}

std::string at(int n, int l, const WeightVector& lambda) {
  return "(n,l)=(" + std::to_string(n) + "," + std::to_string(l) + ") lambda=" + weight_text(lambda);
}

std::string at(int n, int l, const std::vector<Rational>& lambda) {
  WeightVector w;
  for (const auto& x : lambda) w.push_back(to_long(x));
  return at(n, l, w);
}

template <class Fn>
bool closed_matches(const LinearMap<Exact>& op, const Exact& f, Fn closed) {
  for (std::size_t idx = 0; idx < op.dim(); ++idx) {
    if (!op.column(idx).equals(closed(ModuleVector<Exact>::basis(f, idx)))) return false;
  }
  return true;
}

const std::vector<std::pair<int, int>> kFiniteGrid{{1, 3}, {2, 3}, {2, 5}, {3, 3}};
const std::vector<std::pair<int, int>> kAffineGrid{{2, 3}, {2, 5}, {3, 3}};

Outcome finite_relations() {
  Outcome o;
  for (auto [n, l] : kFiniteGrid) {
    for (const auto& lambda : grid_weights(n, l, 20)) {
      const Mod mod = distinguished(l, lambda);
      const auto r = verify_relations(GeneratorSet<Exact>::finite(mod), mod.space());
      o.require(r.all_pass(), at(n, l, lambda));
    }
  }
  return o;
}

Outcome affine_relations() {
  Outcome o;
  for (auto [n, l] : kAffineGrid) {
    const auto& f = Exact::get(l);
    for (const auto& lambda : grid_weights(n, l, 20)) {
      const Mod mod = distinguished(l, lambda);
      for (auto sign : {Sign::Plus, Sign::Minus}) {
        for (const auto& a : {f.one(), f.eps_int(1)}) {
          const Eval ev(mod, sign, a);
          const auto r = verify_relations(GeneratorSet<Exact>::loop(ev), mod.space());
          o.require(r.all_pass(), at(n, l, lambda) + " sign " + to_string(sign));
        }
      }
    }
  }
  return o;
}

// Distinguished points over the grid plus generic (a, b) at a few seeded draws.
std::vector<Mod> closed_form_modules(int n, int l) {
  const auto& f = Exact::get(l);
  std::vector<Mod> out;
  for (const auto& lambda : grid_weights(n, l, 6)) out.push_back(distinguished(l, lambda));
  std::mt19937_64 rng(kSeed + n * 10 + l);
  std::uniform_int_distribution<long> digit(0, l - 1), small(-3, 3);
  for (int trial = 0; trial < 2; ++trial) {
    WeightVector lambda(n);
    for (auto& x : lambda) x = digit(rng);
    auto p = ModuleParams<Exact>::distinguished(f, lambda);
    for (auto& a : p.a) a = f.eps_int(digit(rng)) + f.from_int(small(rng) == 0 ? 2 : 0);
    for (auto& b : p.b) b = Rational(small(rng));
    out.emplace_back(p);
  }
  return out;
}

Outcome closed_forms() {
  Outcome o;
  for (auto [n, l] : kAffineGrid) {
    const auto& f = Exact::get(l);
    for (const auto& mod : closed_form_modules(n, l)) {
      const std::string where = at(n, l, mod.params().lambda);
      for (int i = 1; i <= n; ++i) {
        auto [e, fo] = theta_ops(mod, i);
        o.require(closed_matches(fo, f, [&](const auto& v) { return theta_closed(mod, i, v, DescentType::F); }),
                  where + " F_theta" + std::to_string(i));
        o.require(closed_matches(e, f, [&](const auto& v) { return theta_closed(mod, i, v, DescentType::E); }),
                  where + " E_theta" + std::to_string(i));
        if (i == n) {
          o.require(closed_matches(fo, f, [&](const auto& v) { return theta_closed_top(mod, v, DescentType::F); }),
                    where + " F_theta top");
          o.require(closed_matches(e, f, [&](const auto& v) { return theta_closed_top(mod, v, DescentType::E); }),
                    where + " E_theta top");
        }
      }
      for (auto sign : {Sign::Plus, Sign::Minus}) {
        for (const auto& a : {f.one(), f.eps_int(1)}) {
          const Eval ev(mod, sign, a);
          o.require(closed_matches(ev.E(0), f, [&](const auto& v) {
            return ev.ev_zero_closed(Generator::Kind::E, v);
          }), where + " E0 " + to_string(sign));
          o.require(closed_matches(ev.F_(0), f, [&](const auto& v) {
            return ev.ev_zero_closed(Generator::Kind::F, v);
          }), where + " F0 " + to_string(sign));
        }
      }
    }
  }
  return o;
}

Outcome kernels() {
  Outcome o;
  for (int l : {3, 5}) {
    for (const auto& lambda : grid_weights(2, l, 0)) {
      const Mod mod = distinguished(l, lambda);
      const auto g = GeneratorSet<Exact>::finite(mod);
      const auto ke = joint_kernel(g.raising());
      const auto kf = joint_kernel(g.lowering());
      o.require(ke.dim() == 1 && ke.contains(mod.basis(0)), at(2, l, lambda) + " raising kernel");
      o.require(kf.dim() == 1 && kf.contains(mod.basis(lowest_index(mod.space(), lambda))),
                at(2, l, lambda) + " lowering kernel");
    }
  }
  return o;
}

Outcome drinfeld_reproduction() {
  Outcome o;
  for (int n : {2, 3}) {
    for (int l : {3, 5}) {
      const auto& f = Exact::get(l);
      for (const auto& lambda : grid_weights(n, l, 8)) {
        const Mod mod = distinguished(l, lambda);
        for (auto sign : {Sign::Plus, Sign::Minus}) {
          for (long k : {0L, 1L, 2L}) {
            const auto a = f.eps_int(k);
            const Eval ev(mod, sign, a);
            for (int i : support(lambda)) {
              const long e = sign_value(sign) * (lambda_super(lambda, i) + i);
              const auto expected = f.one() / a * f.eps_int(e);
              const std::string where = at(n, l, lambda) + " sign " + to_string(sign) + " i=" + std::to_string(i);
              o.require(f.equal(extracted_center(ev, i), expected), where + " center");
              o.require(drinfeld_from_module(ev, i).equals(drinfeld_closed(f, lambda, a, sign, i)),
                        where + " polynomial");
            }
          }
        }
      }
    }
  }
  return o;
}

Outcome iso_equivalence() {
  Outcome o;
  for (int n : {2, 3}) {
    for (int l : {3, 5}) {
      const auto& f = Exact::get(l);
      for (const auto& lambda : grid_weights(n, l, 0)) {
        if (support(lambda).empty()) continue;
        bool satisfiable = false;
        bool congruences = true;
        for (long k = 0; k < l; ++k) {
          const auto a_plus = f.eps_int(k);
          const auto direct = iso_direct(f, lambda, a_plus, f.one());
          const auto expl = iso_explicit(f, lambda, a_plus, f.one());
          satisfiable = satisfiable || direct.verdict;
          if (k == 0) {
            for (const auto& c : expl.details["congruences"]) congruences = congruences && c["holds"].get<bool>();
          }
          o.require(direct.verdict == expl.verdict, at(n, l, lambda) + " ratio eps^" + std::to_string(k));
        }
        o.require(satisfiable == congruences, at(n, l, lambda) + " satisfiability");
      }
    }
  }
  return o;
}

Outcome witness() {
  Outcome o;
  const auto& f3 = Exact::get(3);
  const auto anchor = iso_witness(f3, {1, 1}, f3.one(), f3.one());
  o.require(iso_direct(f3, {1, 1}, f3.one(), f3.one()).verdict && anchor.verdict, "(2,3) lambda=(1,1) a=1");
  std::size_t satisfying = 0, violating = 0;
  for (int l : {3, 5}) {
    const auto& f = Exact::get(l);
    for (const auto& lambda : grid_weights(2, l, 0)) {
      if (support(lambda).empty()) continue;
      for (long k = 0; k < l; ++k) {
        const bool want_sat = iso_direct(f, lambda, f.eps_int(k), f.one()).verdict;
        if ((want_sat && satisfying >= 6) || (!want_sat && violating >= 6)) continue;
        const auto w = iso_witness(f, lambda, f.eps_int(k), f.one());
        const std::string where = at(2, l, lambda) + " a+=eps^" + std::to_string(k);
        if (want_sat) {
          ++satisfying;
          o.require(w.verdict, where + " should agree");
        } else {
          ++violating;
          bool zero_differs = false;
          for (const auto& name : w.details["differing"]) {
            zero_differs = zero_differs || name == "E0" || name == "F0";
          }
          o.require(!w.verdict && zero_differs, where + " should differ on E0 or F0");
        }
      }
    }
  }
  o.require(satisfying >= 5 && violating >= 5, "too few triples");
  return o;
}

Outcome nilpotency() {
  Outcome o;
  for (auto [n, l] : kFiniteGrid) {
    for (const auto& lambda : grid_weights(n, l, 20)) {
      const auto r = check_nilpotent_type1(GeneratorSet<Exact>::finite(distinguished(l, lambda)));
      o.require(r.nilpotent && r.type1, at(n, l, lambda));
    }
  }
  return o;
}

Outcome closures() {
  Outcome o;
  for (auto [n, l] : kFiniteGrid) {
    const auto& f = Exact::get(l);
    for (const auto& lambda : grid_weights(n, l, 5)) {
      const Mod mod = distinguished(l, lambda);
      const auto gens = GeneratorSet<Exact>::finite(mod).all();
      const auto top = span_closure(f, {mod.basis(0)}, gens);
      const auto bottom = span_closure(f, {mod.basis(lowest_index(mod.space(), lambda))}, gens);
      o.require(top.same_space(bottom), at(n, l, lambda));
    }
    o.require(nil_submodule(distinguished(l, WeightVector(n, 0))).dim() == 1, at(n, l, WeightVector(n, 0)) + " dim");
  }
  return o;
}

bool close(const OperatorMatrix<Exact>& x, const OperatorMatrix<Float>& y) {
  if (x.rows != y.rows || x.cols != y.cols) return false;
  for (const auto& [rc, z] : y.entries) {
    if (std::abs(x.at(rc.first, rc.second).to_complex() - z) > kFloatTolerance) return false;
  }
  for (const auto& [rc, z] : x.entries) {
    if (std::abs(z.to_complex() - y.at(rc.first, rc.second)) > kFloatTolerance) return false;
  }
  return true;
}

bool close(const DrinfeldPolynomial<Exact>& p, const DrinfeldPolynomial<Float>& q) {
  if (p.coeffs.size() != q.coeffs.size()) return false;
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
    if (std::abs(p.coeffs[k].to_complex() - q.coeffs[k]) > kFloatTolerance) return false;
  }
  return true;
}

Outcome backend_agreement() {
  Outcome o;
  const auto& fe = Exact::get(3);
  const auto& fc = Float::get(3);
  for (const auto& lambda : grid_weights(2, 3, 0)) {
    const Mod me = distinguished(3, lambda);
    const SchnizerModule<Float> mc(ModuleParams<Float>::distinguished(fc, lambda));
    for (auto sign : {Sign::Plus, Sign::Minus}) {
      for (long k : {0L, 1L}) {
        const Eval ee(me, sign, fe.eps_int(k));
        const EvaluationModule<Float> ec(mc, sign, fc.eps(fc.exponent(k)));
        const auto ge = GeneratorSet<Exact>::loop(ee);
        const auto gc = GeneratorSet<Float>::loop(ec);
        const auto ae = ge.all();
        const auto ac = gc.all();
        o.require(ae.size() == ac.size(), at(2, 3, lambda) + " generator count");
        for (std::size_t j = 0; j < ae.size() && j < ac.size(); ++j) {
          o.require(close(materialize(ae[j]), materialize(ac[j])), at(2, 3, lambda) + " " + ae[j].name());
        }
        for (int i : support(lambda)) {
          o.require(close(drinfeld_from_module(ee, i), drinfeld_from_module(ec, i)),
                    at(2, 3, lambda) + " P" + std::to_string(i));
        }
        const auto rc = verify_relations(gc, mc.space());
        o.require(rc.all_pass(), at(2, 3, lambda) + " float relations");
      }
    }
  }
  return o;
}

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "finite relations on the distinguished modules", 300, finite_relations},
      {2, "affine relations on evaluation modules", 600, affine_relations},
      {3, "closed forms equal bracket operators", 600, closed_forms},
      {4, "joint kernels are one-dimensional", 300, kernels},
      {5, "Drinfeld polynomials extracted from modules", 900, drinfeld_reproduction},
      {6, "direct and explicit isomorphism criteria agree", 120, iso_equivalence},
      {7, "operator witness on L^nil", 600, witness},
      {8, "nilpotency and type 1", 120, nilpotency},
      {9, "submodule closures coincide", 300, closures},
      {10, "float backend within 1e-9 of exact", 120, backend_agreement},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) o.require(false, "over time budget");
    all = all && o.pass;
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << o.checks
         << " checks, " << std::fixed;
    line.precision(1);
    line << secs << " s)";
    if (!o.pass) line << " first failure: " << o.note;
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
