#include "pfpos/spec_io.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace pfpos {

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error(line > 0 ? std::to_string(line) + ":" + std::to_string(column) + ": " + what : what),
      line_(line),
      column_(column) {}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view s, int line, int col0) : s_(s), line_(line), col0_(col0) {}

  UniPoly parse() {
    skip();
    if (at_end()) fail("empty polynomial");
    UniPoly p = expr();
    skip();
    if (!at_end()) fail(std::string("unexpected '") + s_[i_] + "'");
    return p;
  }

 private:
  std::string_view s_;
  size_t i_ = 0;
  int line_, col0_;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, col0_ + static_cast<int>(i_));
  }
  bool at_end() const { return i_ >= s_.size(); }
  void skip() {
    while (!at_end() && (s_[i_] == ' ' || s_[i_] == '\t')) ++i_;
  }
  char peek() {
    skip();
    return at_end() ? '\0' : s_[i_];
  }

  UniPoly expr() {
    UniPoly acc;
    bool first = true;
    for (;;) {
      char c = peek();
      int sgn = 1;
      if (c == '+' || c == '-') {
        sgn = c == '-' ? -1 : 1;
        ++i_;
      } else if (!first) {
        return acc;
      }
      UniPoly t = term();
      if (sgn < 0) acc -= t;
      else acc += t;
      first = false;
    }
  }

  bool starts_primary(char c) const { return std::isdigit(static_cast<unsigned char>(c)) || c == 'n' || c == '('; }

  UniPoly term() {
    UniPoly acc = power();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++i_;
        acc *= power();
      } else if (c == '/') {
        ++i_;
        size_t at = i_;
        UniPoly d = power();
        if (d.degree() > 0) {
          i_ = at;
          fail("division by a non-constant");
        }
        if (d.is_zero()) {
          i_ = at;
          fail("division by zero");
        }
        acc *= Rational(1 / d.coeff(0));
      } else if (starts_primary(c)) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  UniPoly power() {
    UniPoly b = primary();
    if (peek() == '^') {
      ++i_;
      skip();
      size_t start = i_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) fail("expected an exponent");
      if (i_ - start > 3) fail("exponent too large");
      int e = std::stoi(std::string(s_.substr(start, i_ - start)));
      UniPoly r = UniPoly::constant(1);
      for (int k = 0; k < e; ++k) r *= b;
      return r;
    }
    return b;
  }

  UniPoly primary() {
    char c = peek();
    if (c == '(') {
      ++i_;
      UniPoly p = expr();
      if (peek() != ')') fail("expected ')'");
      ++i_;
      return p;
    }
    if (c == 'n') {
      ++i_;
      return UniPoly::x();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = i_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return UniPoly::constant(Rational(Integer(std::string(s_.substr(start, i_ - start)))));
    }
    if (at_end()) fail("unexpected end of polynomial");
    fail(std::string("unexpected '") + c + "'");
  }
};

UniPoly parse_poly_at(std::string_view s, int line, int col0) { return PolyParser(s, line, col0).parse(); }

Rational json_rational(const nlohmann::json& v, const std::string& where) {
  try {
    if (v.is_number_integer()) return Rational(Integer(v.dump()));
    if (v.is_string()) return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what(), 0, 0);
  }
  throw ParseError(where + ": expected an integer or a rational string", 0, 0);
}

SequenceSpec build(std::vector<UniPoly> coeffs, std::vector<Rational> init) {
  if (coeffs.size() < 2) throw ParseError("a recurrence needs at least p0 and p1", 0, 0);
  if (coeffs.back().is_zero()) throw ParseError("the leading coefficient p" + std::to_string(coeffs.size() - 1) + " is zero", 0, 0);
  return {Recurrence(std::move(coeffs)), std::move(init)};
}

}  // namespace

UniPoly parse_poly(std::string_view text) { return parse_poly_at(text, 0, 1); }

SequenceSpec parse_spec(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_spec_json(text) : parse_spec_text(text);
  }
  throw ParseError("empty spec", 0, 0);
}

SequenceSpec parse_spec_text(std::string_view text) {
  std::map<long, UniPoly> coeffs;
  std::optional<std::vector<Rational>> init;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    size_t k = 0;
    while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    if (k == line.size()) continue;
    size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected 'name = value'", line_no, static_cast<int>(k) + 1);
    std::string_view key = line.substr(k, eq - k);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.remove_suffix(1);
    const int vcol = static_cast<int>(eq) + 2;
    std::string_view value = line.substr(eq + 1);
    if (key == "init") {
      if (init) throw ParseError("duplicate init line", line_no, static_cast<int>(k) + 1);
      init.emplace();
      size_t s = 0;
      while (s <= value.size()) {
        size_t c = value.find(',', s);
        if (c == std::string_view::npos) c = value.size();
        std::string_view item = value.substr(s, c - s);
        try {
          init->push_back(parse_rational(item));
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), line_no, vcol + static_cast<int>(s));
        }
        s = c + 1;
      }
      continue;
    }
    if (key.size() >= 2 && key[0] == 'p') {
      std::string idx(key.substr(1));
      bool digits = idx.size() <= 6 && !idx.empty();
      for (char c : idx) digits = digits && std::isdigit(static_cast<unsigned char>(c));
      if (digits) {
        long i = std::stol(idx);
        if (coeffs.count(i)) throw ParseError("duplicate coefficient p" + idx, line_no, static_cast<int>(k) + 1);
        coeffs[i] = parse_poly_at(value, line_no, vcol);
        continue;
      }
    }
    throw ParseError("unknown key '" + std::string(key) + "'", line_no, static_cast<int>(k) + 1);
  }
  if (!init) throw ParseError("missing init line", 0, 0);
  std::vector<UniPoly> cs;
  for (const auto& [i, p] : coeffs) {
    if (i != static_cast<long>(cs.size())) throw ParseError("missing coefficient p" + std::to_string(cs.size()), 0, 0);
    cs.push_back(p);
  }
  return build(std::move(cs), std::move(*init));
}

SequenceSpec spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("spec JSON must be an object", 0, 0);
  for (const auto& [k, v] : j.items())
    if (k != "coeffs" && k != "init") throw ParseError("unknown key '" + k + "'", 0, 0);
  if (!j.contains("coeffs") || !j["coeffs"].is_array()) throw ParseError("missing coeffs array", 0, 0);
  if (!j.contains("init") || !j["init"].is_array()) throw ParseError("missing init array", 0, 0);
  std::vector<UniPoly> cs;
  for (size_t i = 0; i < j["coeffs"].size(); ++i) {
    const auto& row = j["coeffs"][i];
    std::string where = "coeffs[" + std::to_string(i) + "]";
    if (row.is_string()) {
      cs.push_back(parse_poly(row.get<std::string>()));
      continue;
    }
    if (!row.is_array()) throw ParseError(where + ": expected an array", 0, 0);
    std::vector<Rational> c;
    for (size_t k = 0; k < row.size(); ++k) c.push_back(json_rational(row[k], where + "[" + std::to_string(k) + "]"));
    cs.emplace_back(std::move(c));
  }
  std::vector<Rational> init;
  for (size_t k = 0; k < j["init"].size(); ++k) init.push_back(json_rational(j["init"][k], "init[" + std::to_string(k) + "]"));
  return build(std::move(cs), std::move(init));
}

SequenceSpec parse_spec_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // byte offset -> line/column
    size_t off = std::min(e.byte, text.size());
    int line = 1, col = 1;
    for (size_t i = 0; i + 1 < off; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("malformed JSON", line, col);
  }
  return spec_from_json(j);
}

std::string to_text(const SequenceSpec& spec) {
  std::ostringstream out;
  const auto& cs = spec.rec.coeffs();
  for (size_t i = 0; i < cs.size(); ++i) out << 'p' << i << " = " << cs[i].to_string("n") << '\n';
  out << "init = ";
  for (size_t i = 0; i < spec.initial_values.size(); ++i) out << (i ? ", " : "") << spec.initial_values[i].get_str();
  out << '\n';
  return out.str();
}

nlohmann::json to_json(const SequenceSpec& spec) {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& p : spec.rec.coeffs()) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& c : p.coeffs()) row.push_back(c.get_str());
    cs.push_back(row);
  }
  nlohmann::json init = nlohmann::json::array();
  for (const auto& v : spec.initial_values) init.push_back(v.get_str());
  return {{"coeffs", cs}, {"init", init}};
}

}  // namespace pfpos
