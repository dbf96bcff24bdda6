#include "schnizer/serialize.hpp"

#include <cctype>

namespace schnizer {

namespace {

// "3", "2/3" or a decimal such as "0.75", converted exactly.
Rational parse_number(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) return parse_rational(text);
  const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  const std::size_t places = text.size() - dot - 1;
  if (places == 0 || digits.empty() || digits == "-" || text.find('.', dot + 1) != std::string::npos) {
    throw ParseError("bad decimal '" + text + "'");
  }
  Integer den = 1;
  for (std::size_t k = 0; k < places; ++k) den *= 10;
  Rational r = parse_rational(digits);
  r /= den;
  return r;
}

}  // namespace

Json scalar_json(const CycScalar& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back({c.get_num().get_str(), c.get_den().get_str()});
  return {{"l", s.order()}, {"coeffs", coeffs}, {"text", s.to_string()}};
}

Json scalar_json(const std::complex<double>& z) { return {{"re", z.real()}, {"im", z.imag()}}; }

CycScalar cyc_scalar_from_json(const Json& j) {
  try {
    const auto& f = CyclotomicField::get(j.at("l").get<int>());
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) {
      coeffs.push_back(parse_rational(c.at(0).get<std::string>() + "/" + c.at(1).get<std::string>()));
    }
    return f.from_poly(coeffs);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad scalar JSON: ") + e.what());
  }
}

std::vector<ScalarTerm> parse_scalar_terms(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw ParseError("empty scalar");
  std::vector<ScalarTerm> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!out.empty()) {
      throw ParseError("expected '+' or '-' in scalar '" + text + "'");
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') {
      if (s[end] == '^' && end + 1 < s.size() && s[end + 1] == '-') ++end;
      ++end;
    }
    const std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw ParseError("empty term in scalar '" + text + "'");
    ScalarTerm t{Rational(sign), 0};
    const auto at = term.find("eps");
    if (at == std::string::npos) {
      std::string num = term;
      if (num.back() == 'i') {
        t.imaginary = true;
        num.pop_back();
        if (!num.empty() && num.back() == '*') num.pop_back();
        if (num.empty()) num = "1";
      }
      t.coeff *= parse_number(num);
    } else {
      std::string head = term.substr(0, at);
      if (!head.empty()) {
        if (head.back() != '*') throw ParseError("expected '*' before eps in '" + term + "'");
        head.pop_back();
        t.coeff *= parse_number(head);
      }
      const std::string tail = term.substr(at + 3);
      if (tail.empty()) {
        t.power = 1;
      } else {
        if (tail[0] != '^') throw ParseError("expected '^' after eps in '" + term + "'");
        const Rational p = parse_rational(tail.substr(1));
        if (!is_integral(p)) throw ParseError("eps power must be an integer in '" + term + "'");
        t.power = to_long(p);
      }
    }
    out.push_back(t);
    pos = end;
  }
  return out;
}

Json relation_report_json(const RelationReport& rep) {
  Json records = Json::array();
  for (const auto& r : rep.records) {
    Json j = {{"relation", r.id}, {"status", r.pass ? "pass" : "fail"}};
    if (r.witness) {
      j["witness"] = {{"basis_index", r.witness->basis_index},
                      {"basis_vector", r.witness->basis_label},
                      {"lhs", r.witness->lhs},
                      {"rhs", r.witness->rhs}};
    }
    records.push_back(j);
  }
  return {{"level", rep.level},
          {"dim", rep.dim},
          {"all_pass", rep.all_pass()},
          {"failures", rep.failures()},
          {"relations", records}};
}

Json nilpotency_json(const NilpotencyReport& rep) {
  return {{"nilpotent", rep.nilpotent}, {"type1", rep.type1}, {"failures", rep.failures}};
}

}  // namespace schnizer
