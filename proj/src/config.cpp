#include "schnizer/config.hpp"

#include <cctype>
#include <fstream>
#include <random>
#include <sstream>

namespace schnizer {

namespace {

// Recursive-descent reader for one TOML value.
class TomlValueReader {
 public:
  TomlValueReader(const std::string& text, int line) : s_(text), line_(line) {}

  Json read_all() {
    Json v = value();
    skip_space();
    if (pos_ != s_.size()) fail("trailing characters after value");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError("line " + std::to_string(line_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Json value() {
    skip_space();
    if (pos_ >= s_.size()) fail("missing value");
    const char c = s_[pos_];
    if (c == '"') return string();
    if (c == '[') return array();
    if (s_.compare(pos_, 4, "true") == 0) {
      pos_ += 4;
      return true;
    }
    if (s_.compare(pos_, 5, "false") == 0) {
      pos_ += 5;
      return false;
    }
    return number();
  }

  Json string() {
    ++pos_;
    std::string out;
    while (pos_ < s_.size() && s_[pos_] != '"') {
      if (s_[pos_] == '\\') {
        if (++pos_ >= s_.size()) break;
        const char e = s_[pos_];
        out += e == 'n' ? '\n' : e == 't' ? '\t' : e;
      } else {
        out += s_[pos_];
      }
      ++pos_;
    }
    if (pos_ >= s_.size()) fail("unterminated string");
    ++pos_;
    return out;
  }

  Json array() {
    ++pos_;
    Json out = Json::array();
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == ']') {
      ++pos_;
      return out;
    }
    while (true) {
      out.push_back(value());
      skip_space();
      if (pos_ >= s_.size()) fail("unterminated array");
      if (s_[pos_] == ',') {
        ++pos_;
        skip_space();
        if (pos_ < s_.size() && s_[pos_] == ']') {
          ++pos_;
          return out;
        }
        continue;
      }
      if (s_[pos_] == ']') {
        ++pos_;
        return out;
      }
      fail("expected ',' or ']' in array");
    }
  }

  Json number() {
    const std::size_t start = pos_;
    if (s_[pos_] == '+' || s_[pos_] == '-') ++pos_;
    bool is_float = false;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' ||
                                s_[pos_] == '_' || s_[pos_] == 'e' || s_[pos_] == 'E')) {
      is_float = is_float || s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E';
      ++pos_;
    }
    std::string tok;
    for (std::size_t k = start; k < pos_; ++k) {
      if (s_[k] != '_') tok += s_[k];
    }
    if (tok.empty() || tok == "+" || tok == "-") fail("unrecognised value");
    try {
      std::size_t used = 0;
      if (is_float) {
        const double d = std::stod(tok, &used);
        if (used != tok.size()) fail("bad number '" + tok + "'");
        return d;
      }
      const long long k = std::stoll(tok, &used);
      if (used != tok.size()) fail("bad number '" + tok + "'");
      return k;
    } catch (const std::logic_error&) {
      fail("bad number '" + tok + "'");
    }
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_;
};

std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    if (line[k] == '"' && (k == 0 || line[k - 1] != '\\')) in_string = !in_string;
    if (line[k] == '#' && !in_string) return line.substr(0, k);
  }
  return line;
}

int bracket_balance(const std::string& text) {
  int depth = 0;
  bool in_string = false;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] == '"' && (k == 0 || text[k - 1] != '\\')) in_string = !in_string;
    if (in_string) continue;
    depth += text[k] == '[' ? 1 : text[k] == ']' ? -1 : 0;
  }
  return depth;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw ConfigError("field '" + field + "': " + what);
}

std::string scalar_string(const std::string& field, const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  field_error(field, "expected a scalar string such as \"2/3\" or \"eps^2\"");
}

std::vector<std::string> string_list(const std::string& field, const Json& v) {
  std::vector<std::string> out;
  if (v.is_array()) {
    for (const auto& x : v) out.push_back(scalar_string(field, x));
  } else {
    out.push_back(scalar_string(field, v));
  }
  return out;
}

long integer(const std::string& field, const Json& v) {
  if (!v.is_number_integer()) field_error(field, "expected an integer");
  return v.get<long>();
}

bool boolean(const std::string& field, const Json& v) {
  if (!v.is_boolean()) field_error(field, "expected true or false");
  return v.get<bool>();
}

WeightVector weight_from_json(const std::string& field, const Json& v) {
  if (!v.is_array()) field_error(field, "expected an array of integers");
  WeightVector w;
  for (const auto& x : v) w.push_back(integer(field, x));
  return w;
}

std::vector<Sign> parse_signs(const std::string& field, const Json& v) {
  std::vector<std::string> names;
  if (v.is_array()) {
    for (const auto& x : v) names.push_back(scalar_string(field, x));
  } else {
    names.push_back(scalar_string(field, v));
  }
  std::vector<Sign> out;
  for (const auto& s : names) {
    if (s == "both") {
      out.push_back(Sign::Plus);
      out.push_back(Sign::Minus);
      continue;
    }
    try {
      out.push_back(parse_sign(s));
    } catch (const ParseError& e) {
      field_error(field, e.what());
    }
  }
  return out;
}

}  // namespace

Json parse_toml_subset(const std::string& text) {
  Json out = Json::object();
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[' && line.find('=') == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": tables are not supported");
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    if (key.size() >= 2 && key.front() == '"' && key.back() == '"') key = key.substr(1, key.size() - 2);
    if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    std::string value = trim(line.substr(eq + 1));
    const int start_line = line_no;
    while (bracket_balance(value) > 0 && std::getline(in, raw)) {
      ++line_no;
      value += " " + trim(strip_comment(raw));
    }
    if (out.contains(key)) throw ConfigError("line " + std::to_string(start_line) + ": duplicate key '" + key + "'");
    out[key] = TomlValueReader(value, start_line).read_all();
  }
  return out;
}

LambdaSelector parse_lambda_selector(const std::string& text) {
  LambdaSelector sel;
  if (text == "grid") return sel;
  if (text == "all") {
    sel.mode = LambdaMode::All;
    return sel;
  }
  if (text.rfind("random:", 0) == 0) {
    sel.mode = LambdaMode::Random;
    try {
      const long k = std::stol(text.substr(7));
      if (k <= 0) throw ConfigError("field 'lambda': random count must be positive");
      sel.count = static_cast<std::size_t>(k);
    } catch (const std::logic_error&) {
      throw ConfigError("field 'lambda': bad random count in '" + text + "'");
    }
    return sel;
  }
  sel.mode = LambdaMode::Explicit;
  WeightVector w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const std::string t = trim(item);
      w.push_back(std::stol(t, &used));
      if (used != t.size()) throw std::invalid_argument(t);
    } catch (const std::logic_error&) {
      throw ConfigError("field 'lambda': expected comma-separated integers, 'all' or 'random:k'");
    }
  }
  sel.weights.push_back(w);
  return sel;
}

void apply_config_json(RunConfig& cfg, const Json& j) {
  if (!j.is_object()) throw ConfigError("configuration must be an object");
  for (const auto& [key, v] : j.items()) {
    if (key == "n") {
      cfg.n = static_cast<int>(integer(key, v));
    } else if (key == "l") {
      cfg.l = static_cast<int>(integer(key, v));
    } else if (key == "lambda") {
      if (v.is_string()) {
        cfg.lambda = parse_lambda_selector(v.get<std::string>());
      } else if (v.is_array() && !v.empty() && v.front().is_array()) {
        cfg.lambda = {LambdaMode::Explicit, 0, {}};
        for (const auto& w : v) cfg.lambda.weights.push_back(weight_from_json(key, w));
      } else {
        cfg.lambda = {LambdaMode::Explicit, 0, {weight_from_json(key, v)}};
      }
    } else if (key == "module_a" || key == "module_b") {
      auto& target = key == "module_a" ? cfg.module_a : cfg.module_b;
      if (v.is_string() && v.get<std::string>() == "distinguished") {
        target.reset();
      } else {
        if (!v.is_array()) field_error(key, "expected \"distinguished\" or an array of scalars");
        target = string_list(key, v);
      }
    } else if (key == "spectral" || key == "a") {
      cfg.spectral = string_list(key, v);
    } else if (key == "a_plus") {
      cfg.a_plus = string_list(key, v);
    } else if (key == "a_minus") {
      cfg.a_minus = string_list(key, v);
    } else if (key == "sign") {
      cfg.signs = parse_signs(key, v);
    } else if (key == "backend") {
      const auto b = scalar_string(key, v);
      if (b != "exact" && b != "float") field_error(key, "expected \"exact\" or \"float\"");
      cfg.backend = b == "exact" ? Backend::Exact : Backend::Float;
    } else if (key == "seed") {
      const long s = integer(key, v);
      if (s < 0) field_error(key, "must be non-negative");
      cfg.seed = static_cast<std::uint64_t>(s);
    } else if (key == "suites") {
      cfg.suites = string_list(key, v);
    } else if (key == "indices") {
      cfg.indices.clear();
      if (v.is_array()) {
        for (const auto& x : v) cfg.indices.push_back(static_cast<int>(integer(key, x)));
      } else {
        cfg.indices.push_back(static_cast<int>(integer(key, v)));
      }
    } else if (key == "ops") {
      cfg.ops = string_list(key, v);
    } else if (key == "corrupt") {
      cfg.corrupt = boolean(key, v);
    } else if (key == "strict_gate") {
      cfg.strict_gate = boolean(key, v);
    } else if (key == "timing") {
      cfg.timing = boolean(key, v);
    } else if (key == "out") {
      cfg.out = scalar_string(key, v);
    } else if (key == "format") {
      cfg.format = scalar_string(key, v);
    } else {
      field_error(key, "unknown field");
    }
  }
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  Json j;
  const bool toml = path.size() >= 5 && path.substr(path.size() - 5) == ".toml";
  if (toml) {
    j = parse_toml_subset(buf.str());
  } else {
    try {
      j = Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
      throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
  }
  RunConfig cfg;
  apply_config_json(cfg, j);
  return cfg;
}

void validate(const RunConfig& cfg, bool needs_affine) {
  try {
    RootOrder check(cfg.l);
    (void)check;
  } catch (const InvalidRootOrder& e) {
    field_error("l", e.what());
  }
  if (cfg.n < 1) field_error("n", "rank must be at least 1");
  if (cfg.strict_gate && !coprime_rank(cfg.n, cfg.l)) {
    field_error("l", "gcd(l, n + 1) must be 1 (strict gate)");
  }
  if (needs_affine && cfg.n < 2) {
    field_error("n", "RankTooSmall: loop-algebra suites need n >= 2");
  }
  if (cfg.lambda.mode == LambdaMode::Explicit) {
    if (cfg.lambda.weights.empty()) field_error("lambda", "no weights given");
    for (const auto& w : cfg.lambda.weights) {
      if (w.size() != static_cast<std::size_t>(cfg.n)) field_error("lambda", "needs n entries");
      for (long x : w) {
        if (x < 0 || x >= cfg.l) field_error("lambda", "entries must lie in 0..l-1");
      }
    }
  }
  const std::size_t slots = static_cast<std::size_t>(cfg.n) * (cfg.n + 1) / 2;
  auto check_scalars = [&](const std::string& field, const std::vector<std::string>& values) {
    for (const auto& s : values) {
      try {
        parse_scalar_terms(s);
      } catch (const ParseError& e) {
        field_error(field, e.what());
      }
    }
  };
  if (cfg.module_a) {
    if (cfg.module_a->size() != slots) field_error("module_a", "needs n(n+1)/2 entries");
    check_scalars("module_a", *cfg.module_a);
  }
  if (cfg.module_b) {
    if (cfg.module_b->size() != slots) field_error("module_b", "needs n(n+1)/2 entries");
    for (const auto& s : *cfg.module_b) {
      try {
        parse_rational(s);
      } catch (const ParseError& e) {
        field_error("module_b", e.what());
      }
    }
  }
  if (cfg.spectral.empty()) field_error("spectral", "needs at least one value");
  check_scalars("spectral", cfg.spectral);
  check_scalars("a_plus", cfg.a_plus);
  check_scalars("a_minus", cfg.a_minus);
  if (cfg.signs.empty()) field_error("sign", "needs at least one sign");
  for (int i : cfg.indices) {
    if (i < 1 || i > cfg.n) field_error("indices", "must lie in 1..n");
  }
  if (cfg.format != "json" && cfg.format != "text") field_error("format", "expected \"json\" or \"text\"");
}

std::vector<WeightVector> select_weights(const RunConfig& cfg) {
  LambdaMode mode = cfg.lambda.mode;
  std::size_t count = cfg.lambda.count;
  if (mode == LambdaMode::Grid) {
    mode = cfg.n <= 2 ? LambdaMode::All : LambdaMode::Random;
    count = kGridSample;
  }
  switch (mode) {
    case LambdaMode::Explicit:
      return cfg.lambda.weights;
    case LambdaMode::Random: {
      std::mt19937_64 rng(cfg.seed);
      std::uniform_int_distribution<long> pick(0, cfg.l - 1);
      std::vector<WeightVector> out;
      for (std::size_t k = 0; k < count; ++k) {
        WeightVector w(cfg.n);
        for (auto& x : w) x = pick(rng);
        out.push_back(w);
      }
      return out;
    }
    case LambdaMode::Grid:
    case LambdaMode::All:
      break;
  }
  std::vector<WeightVector> out;
  WeightVector w(cfg.n, 0);
  while (true) {
    out.push_back(w);
    int k = cfg.n - 1;
    while (k >= 0 && w[k] == cfg.l - 1) w[k--] = 0;
    if (k < 0) break;
    ++w[k];
  }
  return out;
}

Json RunConfig::to_json() const {
  Json lam;
  switch (lambda.mode) {
    case LambdaMode::Grid: lam = "grid"; break;
    case LambdaMode::All: lam = "all"; break;
    case LambdaMode::Random: lam = "random:" + std::to_string(lambda.count); break;
    case LambdaMode::Explicit: lam = lambda.weights; break;
  }
  Json signs_json = Json::array();
  for (auto s : signs) signs_json.push_back(to_string(s));
  Json j = {{"n", n},
            {"l", l},
            {"lambda", lam},
            {"module_a", module_a ? Json(*module_a) : Json("distinguished")},
            {"module_b", module_b ? Json(*module_b) : Json("distinguished")},
            {"spectral", spectral},
            {"a_plus", a_plus},
            {"a_minus", a_minus},
            {"sign", signs_json},
            {"backend", schnizer::to_string(backend)},
            {"seed", seed},
            {"suites", suites},
            {"indices", indices},
            {"ops", ops},
            {"corrupt", corrupt},
            {"strict_gate", strict_gate},
            {"format", format}};
  return j;
}

}  // namespace schnizer
