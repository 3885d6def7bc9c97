#include "trb/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace trb {

namespace {

std::string trim(const std::string &s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
    ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
    --b;
  return s.substr(a, b - a);
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class PolyParser {
public:
  PolyParser(const std::string &text, const std::vector<std::string> &vars, std::size_t line,
             std::size_t column)
      : s_(text), vars_(vars), line_(line), col0_(column) {}

  RawPolynomial parse() {
    RawPolynomial out;
    skip_ws();
    if (pos_ == s_.size())
      fail("expected a polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail(std::string("expected '+' or '-', found '") + peek() + "'");
      }
      RawTerm t = term();
      if (sign < 0)
        t.coeff = -t.coeff;
      out.push_back(std::move(t));
      first = false;
      skip_ws();
    }
    return out;
  }

private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError(msg, line_, col0_ + pos_);
  }

  RawTerm term() {
    RawTerm t{1, std::vector<Monomial::Exponent>(vars_.size(), 0)};
    bool any = false;
    while (true) {
      skip_ws();
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coeff *= integer();
      } else if (is_ident_start(c)) {
        variable_power(t);
      } else if (any && c == '*') {
        fail("expected a factor after '*'");
      } else {
        if (!any)
          fail(c == '\0' ? "unexpected end of polynomial"
                         : std::string("unexpected character '") + c + "'");
        return t;
      }
      any = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        char n = peek();
        if (!std::isdigit(static_cast<unsigned char>(n)) && !is_ident_start(n))
          fail("expected a factor after '*'");
      }
    }
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    return mpz_class(s_.substr(start, pos_ - start));
  }

  /// Longest variable name that prefixes the remaining identifier text.
  void variable_power(RawTerm &t) {
    std::size_t end = pos_;
    while (end < s_.size() && is_ident_char(s_[end]))
      ++end;
    std::size_t best = vars_.size(), best_len = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const auto &v = vars_[i];
      if (v.size() > best_len && v.size() <= end - pos_ && s_.compare(pos_, v.size(), v) == 0) {
        best = i;
        best_len = v.size();
      }
    }
    if (best == vars_.size())
      fail("unknown variable '" + s_.substr(pos_, end - pos_) + "'");
    pos_ += best_len;
    std::uint64_t e = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        fail("exponent must be a nonnegative integer");
      mpz_class z = integer();
      if (!z.fits_uint_p() || z.get_ui() > 1000000)
        fail("exponent too large");
      e = z.get_ui();
    }
    t.exps[best] += static_cast<Monomial::Exponent>(e);
  }

  const std::string &s_;
  const std::vector<std::string> &vars_;
  std::size_t line_;
  std::size_t col0_;
  std::size_t pos_ = 0;
};

/// Splits "head: rest" at the first colon; returns false when the key differs.
bool keyed(const std::string &line, const std::string &key, std::string &rest,
           std::size_t &rest_col) {
  if (line.compare(0, key.size(), key) != 0)
    return false;
  std::size_t p = key.size();
  while (p < line.size() && line[p] == ' ')
    ++p;
  if (p >= line.size() || line[p] != ':')
    return false;
  ++p;
  rest_col = p + 1;
  rest = line.substr(p);
  return true;
}

std::uint32_t parse_modulus(const std::string &digits, std::size_t line, std::size_t col) {
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](char c) { return std::isdigit((unsigned char)c); }))
    throw ParseError("expected a prime modulus after 'Fp:'", line, col);
  mpz_class z(digits);
  if (!z.fits_uint_p() || z >= mpz_class(1u << 31))
    throw ParseError("modulus must be a prime below 2^31", line, col);
  auto p = static_cast<std::uint32_t>(z.get_ui());
  if (!is_prime(p))
    throw ParseError("modulus " + digits + " is not prime", line, col);
  return p;
}

void parse_ring(const std::string &rest, std::size_t line, std::size_t col, IdealSpec &spec) {
  std::string r = trim(rest);
  std::size_t lead = rest.find_first_not_of(' ');
  col += lead == std::string::npos ? 0 : lead;
  auto open = r.find('[');
  if (open == std::string::npos || r.back() != ']')
    throw ParseError("expected ring: <field>[v1,...,vn]", line, col);
  std::string field = trim(r.substr(0, open));
  if (field == "QQ") {
    spec.modulus = 0;
  } else if (field.rfind("Fp:", 0) == 0) {
    spec.modulus = parse_modulus(field.substr(3), line, col + 3);
  } else {
    throw ParseError("unknown field '" + field + "' (expected QQ or Fp:<prime>)", line, col);
  }
  std::string inner = r.substr(open + 1, r.size() - open - 2);
  std::vector<std::string> vars;
  std::stringstream ss(inner);
  std::string v;
  while (std::getline(ss, v, ',')) {
    v = trim(v);
    if (v.empty() || !is_ident_start(v[0]) ||
        !std::all_of(v.begin(), v.end(), [](char c) { return is_ident_char(c); }))
      throw ParseError("invalid variable name '" + v + "'", line, col + open + 1);
    if (std::find(vars.begin(), vars.end(), v) != vars.end())
      throw ParseError("duplicate variable '" + v + "'", line, col + open + 1);
    vars.push_back(v);
  }
  if (vars.empty())
    throw ParseError("ring needs at least one variable", line, col + open + 1);
  spec.vars = std::move(vars);
}

} // namespace

RawPolynomial parse_polynomial(const std::string &text, const std::vector<std::string> &vars,
                               std::size_t line, std::size_t column) {
  return PolyParser(text, vars, line, column).parse();
}

IdealSpec parse_ideal(const std::string &text) {
  IdealSpec spec;
  bool have_ring = false, in_polys = false;
  std::size_t polys_line = 0;
  std::stringstream ss(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(ss, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r')
      raw.pop_back();
    std::string t = trim(raw);
    if (t.empty() || t[0] == '#')
      continue;
    std::size_t indent = raw.find_first_not_of(" \t");
    std::string rest;
    std::size_t rest_col = 0;
    if (!in_polys && keyed(t, "ring", rest, rest_col)) {
      parse_ring(rest, line, indent + rest_col, spec);
      have_ring = true;
    } else if (!in_polys && keyed(t, "order", rest, rest_col)) {
      spec.order = trim(rest);
      if (spec.order != "lex" && spec.order != "grlex" && spec.order != "grevlex")
        throw ParseError("unknown order '" + spec.order + "' (expected lex, grlex or grevlex)",
                         line, indent + rest_col + 1);
    } else if (!in_polys && keyed(t, "polys", rest, rest_col)) {
      if (!have_ring)
        throw ParseError("'polys:' before 'ring:'", line, indent + 1);
      in_polys = true;
      polys_line = line;
      if (!trim(rest).empty())
        spec.polys.push_back(parse_polynomial(rest, spec.vars, line, indent + rest_col));
    } else if (in_polys) {
      spec.polys.push_back(parse_polynomial(raw, spec.vars, line, 1));
    } else {
      throw ParseError("expected 'ring:', 'order:' or 'polys:'", line, indent + 1);
    }
  }
  if (!have_ring)
    throw ParseError("missing 'ring:' header", line == 0 ? 1 : line, 1);
  if (!in_polys)
    throw ParseError("missing 'polys:' section", line == 0 ? 1 : line, 1);
  if (spec.polys.empty())
    throw ParseError("empty polys section", polys_line, 1);
  return spec;
}

std::string print_raw_polynomial(const RawPolynomial &p, const std::vector<std::string> &vars) {
  if (p.empty())
    return "0";
  std::string s;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const auto &t = p[k];
    mpz_class a = abs(t.coeff);
    bool negative = sgn(t.coeff) < 0;
    if (k == 0)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    std::string mono;
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] == 0)
        continue;
      if (!mono.empty())
        mono += '*';
      mono += vars[i];
      if (t.exps[i] > 1)
        mono += '^' + std::to_string(t.exps[i]);
    }
    if (mono.empty())
      s += a.get_str();
    else if (a == 1)
      s += mono;
    else
      s += a.get_str() + "*" + mono;
  }
  return s;
}

std::string print_ideal(const IdealSpec &spec) {
  std::string out = "ring: ";
  out += spec.modulus == 0 ? "QQ" : "Fp:" + std::to_string(spec.modulus);
  out += "[";
  for (std::size_t i = 0; i < spec.vars.size(); ++i)
    out += (i ? "," : "") + spec.vars[i];
  out += "]\norder: " + spec.order + "\npolys:\n";
  for (const auto &p : spec.polys)
    out += print_raw_polynomial(p, spec.vars) + "\n";
  return out;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ModuleMatrixSpec parse_matrix_spec(const std::string &text, std::size_t nvars,
                                   std::size_t ncomponents) {
  ModuleMatrixSpec spec;
  spec.nvars = nvars;
  spec.ncomponents = ncomponents;
  spec.tie_rows.resize(ncomponents);
  std::stringstream ss(text);
  std::string raw;
  std::size_t line = 0;
  auto numbers = [&](const std::string &rest, std::size_t expected, std::size_t col) {
    std::vector<long long> row;
    std::stringstream rs(rest);
    std::string tok;
    while (rs >> tok) {
      try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size())
          throw std::invalid_argument(tok);
        row.push_back(v);
      } catch (const std::exception &) {
        throw ParseError("expected an integer, found '" + tok + "'", line, col);
      }
    }
    if (row.size() != expected)
      throw ParseError("expected " + std::to_string(expected) + " entries, found " +
                           std::to_string(row.size()),
                       line, col);
    return row;
  };
  while (std::getline(ss, raw)) {
    ++line;
    std::string t = trim(raw);
    if (t.empty() || t[0] == '#')
      continue;
    std::string rest;
    std::size_t col = 0;
    if (keyed(t, "shared", rest, col)) {
      spec.shared.push_back(numbers(rest, nvars + ncomponents, col));
    } else if (t.rfind("component", 0) == 0) {
      auto colon = t.find(':');
      if (colon == std::string::npos)
        throw ParseError("expected 'component <i>: ...'", line, 1);
      std::string idx = trim(t.substr(9, colon - 9));
      std::size_t i = 0;
      try {
        i = std::stoul(idx);
      } catch (const std::exception &) {
        throw ParseError("invalid component index '" + idx + "'", line, 10);
      }
      if (i < 1 || i > ncomponents)
        throw ParseError("component index " + idx + " out of range", line, 10);
      spec.tie_rows[i - 1].push_back(numbers(t.substr(colon + 1), nvars, colon + 2));
    } else {
      throw ParseError("expected 'shared:' or 'component <i>:'", line, 1);
    }
  }
  return spec;
}

} // namespace trb
