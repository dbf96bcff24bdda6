#include "schnizer/commands.hpp"

#include <chrono>
#include <sstream>

#include "schnizer/drinfeld.hpp"

namespace schnizer {

namespace {

std::string weight_text(const WeightVector& w) {
  std::string out = "(";
  for (std::size_t k = 0; k < w.size(); ++k) out += (k ? "," : "") + std::to_string(w[k]);
  return out + ")";
}

template <ScalarField F>
const F& field_for(int l);

template <>
const CyclotomicField& field_for<CyclotomicField>(int l) {
  return CyclotomicField::get(l);
}

template <>
const ComplexField& field_for<ComplexField>(int l) {
  return ComplexField::get(l);
}

template <ScalarField F>
ModuleParams<F> build_params(const RunConfig& cfg, const F& f, const WeightVector& lambda) {
  auto p = ModuleParams<F>::distinguished(f, lambda);
  if (cfg.module_a) {
    for (std::size_t s = 0; s < p.a.size(); ++s) p.a[s] = parse_scalar(f, (*cfg.module_a)[s]);
  }
  if (cfg.module_b) {
    for (std::size_t s = 0; s < p.b.size(); ++s) p.b[s] = f.exponent(parse_rational((*cfg.module_b)[s]));
  }
  return p;
}

template <ScalarField F>
std::vector<typename F::Scalar> scalars(const F& f, const std::vector<std::string>& texts) {
  std::vector<typename F::Scalar> out;
  for (const auto& t : texts) {
    auto x = parse_scalar(f, t);
    if (f.is_zero(x)) throw ConfigError("spectral parameter '" + t + "' is zero");
    out.push_back(x);
  }
  return out;
}

// One coefficient of the first nonzero column of op, negated.
template <ScalarField F>
LinearMap<F> corrupted(const LinearMap<F>& op) {
  std::size_t column = 0;
  while (column < op.dim() && op.column(column).is_zero()) ++column;
  return LinearMap<F>(op.field(), op.dim(), op.name(), [op, column](std::size_t idx) {
    ModuleVector<F> out = op.column(idx);
    if (idx == column && !out.is_zero()) {
      const auto [key, x] = *out.terms().begin();
      out.add_term(key, out.field().zero() - x - x);
    }
    return out;
  });
}

bool wants(const RunConfig& cfg, const std::string& suite) {
  if (cfg.suites.empty()) return suite != "affine" || cfg.n >= 2;
  for (const auto& s : cfg.suites) {
    if (s == suite) return true;
  }
  return false;
}

Json header(const std::string& command, const RunConfig& cfg, const std::string& field) {
  return {{"tool", {{"name", kToolName}, {"version", kToolVersion}}},
          {"command", command},
          {"config", cfg.to_json()},
          {"field", field},
          {"conventions", conventions_json()}};
}

template <ScalarField F>
RunReport verify_impl(const RunConfig& cfg) {
  static const std::vector<std::string> known{"finite", "nilpotent", "kernels", "closure", "affine"};
  for (const auto& s : cfg.suites) {
    if (std::find(known.begin(), known.end(), s) == known.end()) {
      throw ConfigError("field 'suites': unknown suite '" + s + "'");
    }
  }
  validate(cfg, !cfg.suites.empty() && wants(cfg, "affine"));
  const F& f = field_for<F>(cfg.l);
  const auto spectral = scalars(f, cfg.spectral);
  RunReport rep;
  rep.body = header("verify", cfg, f.describe());
  Json cases = Json::array();
  for (const auto& lambda : select_weights(cfg)) {
    const SchnizerModule<F> mod(build_params(cfg, f, lambda));
    const bool distinguished = mod.params().is_distinguished();
    auto gens = GeneratorSet<F>::finite(mod);
    if (cfg.corrupt) gens.F_.at(mod.rank()) = corrupted(gens.F_.at(mod.rank()));
    Json c = {{"lambda", lambda}};
    const std::string tag = "lambda=" + weight_text(lambda);
    auto note = [&](const std::string& suite, bool ok, const std::string& extra) {
      rep.pass = rep.pass && ok;
      rep.lines.push_back(tag + " " + suite + ": " + (ok ? "pass" : "FAIL") + (extra.empty() ? "" : " " + extra));
    };
    if (wants(cfg, "finite")) {
      const auto r = verify_relations(gens, mod.space());
      c["finite"] = relation_report_json(r);
      note("finite", r.all_pass(), "(" + std::to_string(r.records.size()) + " relations)");
    }
    if (wants(cfg, "nilpotent")) {
      const auto r = check_nilpotent_type1(gens);
      c["nilpotent"] = nilpotency_json(r);
      note("nilpotent", r.nilpotent && r.type1, "");
    }
    if (wants(cfg, "kernels")) {
      if (!distinguished) {
        c["kernels"] = {{"skipped", "needs the distinguished point"}};
      } else {
        const auto ke = joint_kernel(gens.raising());
        const auto kf = joint_kernel(gens.lowering());
        const bool ok = ke.dim() == 1 && ke.contains(mod.basis(0)) && kf.dim() == 1 &&
                        kf.contains(mod.basis(lowest_index(mod.space(), lambda)));
        c["kernels"] = {{"raising_dim", ke.dim()}, {"lowering_dim", kf.dim()}, {"pass", ok}};
        note("kernels", ok, "");
      }
    }
    if (wants(cfg, "closure")) {
      if (!distinguished) {
        c["closure"] = {{"skipped", "needs the distinguished point"}};
      } else {
        const auto all = gens.all();
        const auto top = span_closure(f, {mod.basis(0)}, all);
        const auto bottom = span_closure(f, {mod.basis(lowest_index(mod.space(), lambda))}, all);
        const bool ok = top.same_space(bottom);
        c["closure"] = {{"dim_from_top", top.dim()}, {"dim_from_lowest", bottom.dim()}, {"pass", ok}};
        note("closure", ok, "(dim " + std::to_string(top.dim()) + ")");
      }
    }
    if (wants(cfg, "affine")) {
      Json runs = Json::array();
      for (auto sign : cfg.signs) {
        for (std::size_t k = 0; k < spectral.size(); ++k) {
          const EvaluationModule<F> ev(mod, sign, spectral[k]);
          auto loop = GeneratorSet<F>::loop(ev);
          if (cfg.corrupt) loop.F_.at(mod.rank()) = gens.F_.at(mod.rank());
          const auto r = verify_relations(loop, mod.space());
          runs.push_back({{"sign", to_string(sign)}, {"a", cfg.spectral[k]}, {"report", relation_report_json(r)}});
          note("affine sign=" + to_string(sign) + " a=" + cfg.spectral[k], r.all_pass(),
               "(" + std::to_string(r.records.size()) + " relations)");
        }
      }
      c["affine"] = runs;
    }
    cases.push_back(c);
  }
  rep.body["cases"] = cases;
  rep.body["pass"] = rep.pass;
  return rep;
}

template <ScalarField F>
RunReport drinfeld_impl(const RunConfig& cfg) {
  validate(cfg, true);
  const F& f = field_for<F>(cfg.l);
  const auto spectral = scalars(f, cfg.spectral);
  RunReport rep;
  rep.body = header("drinfeld", cfg, f.describe());
  Json cases = Json::array();
  for (const auto& lambda : select_weights(cfg)) {
    const SchnizerModule<F> mod(ModuleParams<F>::distinguished(f, lambda));
    for (auto sign : cfg.signs) {
      for (std::size_t k = 0; k < spectral.size(); ++k) {
        const EvaluationModule<F> ev(mod, sign, spectral[k]);
        Json polys = Json::array();
        bool all_equal = true;
        std::vector<int> indices = cfg.indices;
        if (indices.empty()) {
          for (int i = 1; i <= cfg.n; ++i) indices.push_back(i);
        }
        for (int i : indices) {
          const auto closed = drinfeld_closed(f, lambda, spectral[k], sign, i);
          const auto module = lambda[i - 1] == 0 ? DrinfeldPolynomial<F>::constant_one(f) : drinfeld_from_module(ev, i);
          const bool eq = closed.equals(module);
          all_equal = all_equal && eq;
          Json entry = {{"i", i}, {"coeffs", closed.to_json()}, {"module_coeffs", module.to_json()}, {"equal", eq}};
          if constexpr (!F::exact) entry["tolerance"] = f.tolerance();
          polys.push_back(entry);
        }
        rep.pass = rep.pass && all_equal;
        rep.lines.push_back("lambda=" + weight_text(lambda) + " sign=" + to_string(sign) + " a=" + cfg.spectral[k] +
                            ": " + (all_equal ? "closed = module" : "MISMATCH"));
        cases.push_back({{"lambda", lambda}, {"sign", to_string(sign)}, {"a", cfg.spectral[k]}, {"P", polys},
                         {"equal", all_equal}});
      }
    }
  }
  rep.body["cases"] = cases;
  rep.body["pass"] = rep.pass;
  return rep;
}

Json decision_json(const IsoDecision& d) {
  return {{"verdict", d.verdict}, {"method", d.method}, {"details", d.details}};
}

template <ScalarField F>
RunReport iso_impl(const RunConfig& cfg) {
  validate(cfg, true);
  const F& f = field_for<F>(cfg.l);
  std::vector<std::string> plus_texts = cfg.a_plus, minus_texts = cfg.a_minus;
  if (plus_texts.empty()) {
    for (int k = 0; k < cfg.l; ++k) plus_texts.push_back(k == 0 ? "1" : "eps^" + std::to_string(k));
  }
  if (minus_texts.empty()) minus_texts.push_back("1");
  const auto plus = scalars(f, plus_texts), minus = scalars(f, minus_texts);
  RunReport rep;
  rep.body = header("iso", cfg, f.describe());
  Json cases = Json::array(), coincidences = Json::array();
  bool agreement = true;
  for (const auto& lambda : select_weights(cfg)) {
    for (std::size_t p = 0; p < plus.size(); ++p) {
      for (std::size_t q = 0; q < minus.size(); ++q) {
        const auto direct = iso_direct(f, lambda, plus[p], minus[q]);
        const auto expl = iso_explicit(f, lambda, plus[p], minus[q]);
        const auto witness = iso_witness(f, lambda, plus[p], minus[q]);
        const bool agree = direct.verdict == expl.verdict && direct.verdict == witness.verdict;
        agreement = agreement && agree;
        cases.push_back({{"lambda", lambda},
                         {"a_plus", plus_texts[p]},
                         {"a_minus", minus_texts[q]},
                         {"agree", agree},
                         {"iso", {decision_json(direct), decision_json(expl), decision_json(witness)}}});
        if (direct.verdict && support(lambda).size() > 1) {
          coincidences.push_back({{"lambda", lambda}, {"a_plus", plus_texts[p]}, {"a_minus", minus_texts[q]}});
        }
        rep.lines.push_back("lambda=" + weight_text(lambda) + " a+=" + plus_texts[p] + " a-=" + minus_texts[q] +
                            ": " + (direct.verdict ? "isomorphic" : "not isomorphic") +
                            (agree ? "" : " (METHODS DISAGREE)"));
      }
    }
  }
  rep.pass = agreement;
  rep.lines.push_back("agreement: " + std::string(agreement ? "true" : "false") + ", coincidences: " +
                      std::to_string(coincidences.size()));
  rep.body["cases"] = cases;
  rep.body["agreement"] = agreement;
  rep.body["coincidences"] = coincidences;
  rep.body["pass"] = rep.pass;
  return rep;
}

// "E0", "F2", "K1", "K1^-1", "KL2"
template <ScalarField F>
LinearMap<F> named_operator(const std::string& name, const SchnizerModule<F>& mod,
                            const EvaluationModule<F>* ev) {
  auto index = [&](const std::string& text, std::size_t from) {
    try {
      std::size_t used = 0;
      const int i = std::stoi(text.substr(from), &used);
      if (from + used != text.size()) throw std::invalid_argument(text);
      return i;
    } catch (const std::logic_error&) {
      throw ConfigError("field 'ops': cannot parse operator '" + name + "'");
    }
  };
  if (name.rfind("KL", 0) == 0) return mod.K_Lambda(index(name, 2));
  const bool inverse = name.size() > 3 && name.substr(name.size() - 3) == "^-1";
  const std::string core = inverse ? name.substr(0, name.size() - 3) : name;
  if (core.empty() || (core[0] != 'E' && core[0] != 'F' && core[0] != 'K')) {
    throw ConfigError("field 'ops': unknown operator '" + name + "'");
  }
  const int i = index(core, 1);
  if (i == 0 && ev == nullptr) throw ConfigError("field 'ops': index 0 needs n >= 2");
  if (i < 0 || i > mod.rank()) throw ConfigError("field 'ops': index out of range in '" + name + "'");
  if (core[0] == 'E') return i == 0 ? ev->E(0) : mod.E(i);
  if (core[0] == 'F') return i == 0 ? ev->F_(0) : mod.F_(i);
  if (i == 0) return inverse ? ev->K_alpha_inv(0) : ev->K_alpha(0);
  return inverse ? mod.K_alpha_inv(i) : mod.K_alpha(i);
}

template <ScalarField F>
RunReport dump_impl(const RunConfig& cfg) {
  validate(cfg, false);
  const F& f = field_for<F>(cfg.l);
  const auto weights = select_weights(cfg);
  const auto lambda = weights.front();
  const SchnizerModule<F> mod(build_params(cfg, f, lambda));
  std::optional<EvaluationModule<F>> ev;
  if (mod.rank() >= 2) ev.emplace(mod, cfg.signs.front(), scalars(f, cfg.spectral).front());
  std::vector<std::string> ops = cfg.ops;
  if (ops.empty()) {
    for (int i = ev ? 0 : 1; i <= cfg.n; ++i) {
      ops.push_back("E" + std::to_string(i));
      ops.push_back("F" + std::to_string(i));
    }
  }
  RunReport rep;
  rep.body = header("dump", cfg, f.describe());
  rep.body["lambda"] = lambda;
  rep.body["basis_order"] = "v(m), linear index sum_s m_s l^{N-1-s}, slots (1,1),(1,2),...,(n,n)";
  Json mats = Json::array();
  for (const auto& name : ops) {
    const auto m = materialize(named_operator(name, mod, ev ? &*ev : nullptr));
    auto j = matrix_json(m);
    j["name"] = name;
    mats.push_back(j);
    rep.lines.push_back(name + ": " + std::to_string(m.entries.size()) + " nonzero entries");
  }
  rep.body["operators"] = mats;
  rep.body["pass"] = true;
  return rep;
}

template <class Fn>
RunReport timed(const RunConfig& cfg, Fn fn) {
  const auto start = std::chrono::steady_clock::now();
  RunReport rep = fn();
  if (cfg.timing) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rep.body["timing_ms"] = ms;
  }
  return rep;
}

}  // namespace

Json conventions_json() {
  return {{"f0_bracket_subscript", to_string(kF0Subscript)},
          {"theta_e_bracket", to_string(kThetaEWeight)},
          {"iso_ratio", "a_+ = a_- eps^{2(lambda^{(i)}+i)}"},
          {"bracket_order", "rightmost factor acts first"},
          {"coprime_gate", "fractional eps powers evaluated only when their denominator is invertible mod l"}};
}

std::string RunReport::render(const std::string& format) const {
  if (format == "json") return body.dump(2) + "\n";
  std::ostringstream out;
  out << kToolName << " " << body.value("command", "") << ": " << (pass ? "PASS" : "FAIL") << "\n";
  for (const auto& line : lines) out << "  " << line << "\n";
  return out.str();
}

RunReport cmd_verify(const RunConfig& cfg) {
  return timed(cfg, [&] {
    return cfg.backend == Backend::Exact ? verify_impl<CyclotomicField>(cfg) : verify_impl<ComplexField>(cfg);
  });
}

RunReport cmd_drinfeld(const RunConfig& cfg) {
  return timed(cfg, [&] {
    return cfg.backend == Backend::Exact ? drinfeld_impl<CyclotomicField>(cfg) : drinfeld_impl<ComplexField>(cfg);
  });
}

RunReport cmd_iso(const RunConfig& cfg) {
  return timed(cfg, [&] {
    return cfg.backend == Backend::Exact ? iso_impl<CyclotomicField>(cfg) : iso_impl<ComplexField>(cfg);
  });
}

RunReport cmd_dump(const RunConfig& cfg) {
  return timed(cfg, [&] {
    return cfg.backend == Backend::Exact ? dump_impl<CyclotomicField>(cfg) : dump_impl<ComplexField>(cfg);
  });
}

RunReport run_command(const std::string& name, const RunConfig& cfg) {
  if (name == "verify") return cmd_verify(cfg);
  if (name == "drinfeld") return cmd_drinfeld(cfg);
  if (name == "iso") return cmd_iso(cfg);
  if (name == "dump") return cmd_dump(cfg);
  throw ConfigError("unknown command '" + name + "'");
}

}  // namespace schnizer
