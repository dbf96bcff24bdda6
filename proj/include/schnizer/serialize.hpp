#pragma once

// JSON and text forms of scalars, matrices and reports.

#include <complex>
#include <string>

#include <json.hpp>

#include "schnizer/analysis.hpp"

namespace schnizer {

using Json = nlohmann::ordered_json;

/// {"l": l, "coeffs": [["num", "den"], ...], "text": "..."}, constant first.
Json scalar_json(const CycScalar& s);
/// {"re": x, "im": y}
Json scalar_json(const std::complex<double>& z);

/// Inverse of scalar_json for the exact field; ParseError on bad input.
CycScalar cyc_scalar_from_json(const Json& j);

/// Sum of terms "c", "c*eps^k", "eps^k", "-eps" with rational or decimal c
/// and integer k; "ci" terms are imaginary and only valid in the float
/// backend. ParseError on bad input.
struct ScalarTerm {
  Rational coeff;
  long power;
  bool imaginary = false;
};
std::vector<ScalarTerm> parse_scalar_terms(const std::string& text);

template <ScalarField F>
typename F::Scalar parse_scalar(const F& f, const std::string& text) {
  auto acc = f.zero();
  for (const auto& t : parse_scalar_terms(text)) {
    auto term = f.from_rational(t.coeff) * f.eps(f.exponent(t.power));
    if (t.imaginary) {
      if constexpr (F::exact) {
        throw ParseError("imaginary scalars need the float backend: '" + text + "'");
      } else {
        term = term * typename F::Scalar(0.0, 1.0);
      }
    }
    acc = acc + term;
  }
  return acc;
}

template <ScalarField F>
Json matrix_json(const OperatorMatrix<F>& m) {
  Json entries = Json::array();
  for (const auto& [rc, x] : m.entries) entries.push_back({rc.first, rc.second, scalar_json(x)});
  return {{"name", m.name}, {"rows", m.rows}, {"cols", m.cols}, {"entries", entries}};
}

Json relation_report_json(const RelationReport& rep);
Json nilpotency_json(const NilpotencyReport& rep);

}  // namespace schnizer
