#include "epslab/parse.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

namespace epslab {

namespace {

class MonomialLexer {
public:
  MonomialLexer(const std::string& text, std::span<const std::string> names)
      : text_(text), names_(names) {}

  Monomial run() {
    skip_ws();
    if (at_end()) throw error("empty monomial", pos_);
    std::vector<std::uint32_t> exps(names_.size(), 0);
    if (peek() == '1') {
      ++pos_;
      skip_ws();
      if (!at_end()) throw error("'1' must be the whole monomial", pos_);
      return Monomial::from_exponents(exps);
    }
    for (;;) {
      read_factor(exps);
      skip_ws();
      if (at_end()) break;
      if (peek() != '*') throw error("expected '*'", pos_);
      ++pos_;
      skip_ws();
    }
    return Monomial::from_exponents(exps);
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
  }

  ParseError error(const std::string& message, std::size_t pos) const {
    return ParseError(message + " in monomial '" + text_ + "'", 1, pos + 1);
  }

  void read_factor(std::vector<std::uint32_t>& exps) {
    const std::size_t start = pos_;
    if (at_end() || !is_ident_head(peek())) {
      throw error("expected a variable name", pos_);
    }
    while (!at_end() && is_ident_tail(peek())) ++pos_;
    const std::string ident = text_.substr(start, pos_ - start);
    std::size_t var = names_.size();
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == ident) {
        var = i;
        break;
      }
    }
    if (var == names_.size()) {
      throw error("unknown variable '" + ident + "'", start);
    }
    std::uint64_t exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      exponent = read_uint();
    }
    const std::uint64_t sum = exps[var] + exponent;
    if (sum > std::numeric_limits<std::uint32_t>::max()) {
      throw error("exponent too large", start);
    }
    exps[var] = static_cast<std::uint32_t>(sum);
  }

  std::uint64_t read_uint() {
    const std::size_t start = pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      throw error("expected an exponent", pos_);
    }
    std::uint64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (value > std::numeric_limits<std::uint32_t>::max()) {
        throw error("exponent too large", start);
      }
      ++pos_;
    }
    return value;
  }

  static bool is_ident_head(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  }
  static bool is_ident_tail(char c) {
    return is_ident_head(c) || (c >= '0' && c <= '9');
  }

  const std::string& text_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

std::pair<std::size_t, std::size_t> line_column_of(const std::string& text,
                                                   std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::vector<Monomial> parse_monomial_list(const nlohmann::json& node,
                                          const char* key,
                                          std::span<const std::string> names) {
  std::vector<Monomial> out;
  if (!node.contains(key)) return out;
  const auto& list = node.at(key);
  if (!list.is_array()) {
    throw ParseError(std::string("'") + key + "' must be an array of strings",
                     1, 1);
  }
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (!list[i].is_string()) {
      throw ParseError(std::string("'") + key + "[" + std::to_string(i) +
                           "]' must be a string",
                       1, 1);
    }
    try {
      out.push_back(parse_monomial(list[i].get<std::string>(), names));
    } catch (const ParseError& e) {
      throw ParseError(std::string(key) + "[" + std::to_string(i) +
                           "]: " + e.raw_message(),
                       e.line(), e.column());
    }
  }
  return out;
}

int read_bound(const nlohmann::json& node, const char* key, int fallback) {
  if (!node.contains(key)) return fallback;
  const auto& value = node.at(key);
  if (!value.is_number_integer() || value.get<long long>() < 1 ||
      value.get<long long>() > 1000) {
    throw ParseError(std::string("'") + key + "' must be an integer in [1, 1000]",
                     1, 1);
  }
  return value.get<int>();
}

}  // namespace

Monomial parse_monomial(const std::string& text,
                        std::span<const std::string> names) {
  return MonomialLexer(text, names).run();
}

Instance parse_instance_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = line_column_of(text, e.byte);
    throw ParseError(std::string("invalid JSON: ") + e.what(), line, column);
  }
  if (!doc.is_object()) throw ParseError("instance must be a JSON object", 1, 1);
  if (!doc.contains("vars") || !doc.at("vars").is_array() ||
      doc.at("vars").empty()) {
    throw ParseError("'vars' must be a non-empty array of variable names", 1,
                     1);
  }
  std::vector<std::string> names;
  for (const auto& v : doc.at("vars")) {
    if (!v.is_string()) {
      throw ParseError("'vars' entries must be strings", 1, 1);
    }
    names.push_back(v.get<std::string>());
  }

  const std::vector<Monomial> q_gens =
      parse_monomial_list(doc, "quotient", names);
  const std::vector<Monomial> i_gens = parse_monomial_list(doc, "ideal", names);

  MonomialIdeal q = MonomialIdeal::make(
      static_cast<std::uint32_t>(names.size()), q_gens);
  if (q.is_unit()) {
    throw ParseError("'quotient' generates the unit ideal (zero ring)", 1, 1);
  }

  Ring ring = QuotientRing::make(names, std::move(q));
  RingIdeal ideal(ring, i_gens);
  Instance instance{std::move(ring), std::move(ideal), JobParams{}};

  instance.params.nmax = read_bound(doc, "nmax", instance.params.nmax);
  instance.params.mmax = read_bound(doc, "mmax", instance.params.mmax);
  instance.params.kmax = read_bound(doc, "kmax", instance.params.kmax);
  instance.params.bmax = read_bound(doc, "bmax", instance.params.bmax);
  if (doc.contains("seed")) {
    if (!doc.at("seed").is_number_unsigned() &&
        !doc.at("seed").is_number_integer()) {
      throw ParseError("'seed' must be a non-negative integer", 1, 1);
    }
    const long long seed = doc.at("seed").get<long long>();
    if (seed < 0) throw ParseError("'seed' must be non-negative", 1, 1);
    instance.params.seed = static_cast<std::uint64_t>(seed);
  }
  if (doc.contains("tolerance")) {
    if (!doc.at("tolerance").is_string()) {
      throw ParseError("'tolerance' must be a string rational like \"1/20\"",
                       1, 1);
    }
    mpq_class tol = parse_rational(doc.at("tolerance").get<std::string>());
    if (tol <= 0) throw ParseError("'tolerance' must be positive", 1, 1);
    instance.params.tolerance = tol;
  }
  return instance;
}

Instance parse_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open instance file '" + path + "'", 0, 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_instance_text(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.raw_message(), e.line(), e.column());
  }
}

}  // namespace epslab
