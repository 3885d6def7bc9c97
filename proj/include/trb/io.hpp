#pragma once

// Ideal files and module-order matrix files.
//
//   ring: QQ[x1,x2,x3]        or  ring: Fp:32003[x,y,z]
//   order: grevlex            (optional; lex, grlex or grevlex)
//   polys:
//   x1*x4
//   x1*x2 - x2^2
//
// Lines starting with '#' are comments.

#include <gmpxx.h>

#include <algorithm>
#include <string>
#include <vector>

#include "trb/polynomial.hpp"
#include "trb/signature.hpp"

namespace trb {

class ParseError : public Error {
public:
  ParseError(const std::string &msg, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

struct RawTerm {
  mpz_class coeff;
  std::vector<Monomial::Exponent> exps;

  friend bool operator==(const RawTerm &, const RawTerm &) = default;
};

/// Integer-coefficient polynomial in input order, not normalized.
using RawPolynomial = std::vector<RawTerm>;

struct IdealSpec {
  /// 0 for QQ, otherwise the prime modulus.
  std::uint32_t modulus = 0;
  std::vector<std::string> vars;
  std::string order = "grevlex";
  std::vector<RawPolynomial> polys;

  friend bool operator==(const IdealSpec &, const IdealSpec &) = default;
};

IdealSpec parse_ideal(const std::string &text);

/// Parses one polynomial; positions in errors are offset by (line, column).
RawPolynomial parse_polynomial(const std::string &text, const std::vector<std::string> &vars,
                               std::size_t line = 1, std::size_t column = 1);

std::string print_raw_polynomial(const RawPolynomial &p, const std::vector<std::string> &vars);
std::string print_ideal(const IdealSpec &spec);

/// Reads a whole file; throws Error when it cannot be opened.
std::string read_file(const std::string &path);

/// Matrix signature order file:
///   shared: w_1 ... w_n c_1 ... c_d     (any number of such lines)
///   component i: w_1 ... w_n            (1-based i; tie rows for that component)
ModuleMatrixSpec parse_matrix_spec(const std::string &text, std::size_t nvars,
                                   std::size_t ncomponents);

template <class K> Polynomial<K> to_polynomial(const PolyRing<K> &ring, const RawPolynomial &raw) {
  std::vector<Term<K>> terms;
  terms.reserve(raw.size());
  for (const auto &t : raw)
    terms.push_back({ring.field().from_mpz(t.coeff), Monomial(t.exps)});
  return ring.normalize(std::move(terms));
}

template <class K>
std::vector<Polynomial<K>> to_polynomials(const PolyRing<K> &ring,
                                          const std::vector<RawPolynomial> &raw) {
  std::vector<Polynomial<K>> out;
  for (const auto &r : raw)
    out.push_back(to_polynomial(ring, r));
  return out;
}

/// A parsed ideal over a concrete field.
template <class K> struct Instance {
  PolyRing<K> ring;
  std::vector<Polynomial<K>> f;
};

template <class K> Instance<K> make_instance(const IdealSpec &spec, K field) {
  PolyRing<K> ring(std::move(field), MonomialOrder::parse(spec.order, spec.vars.size()),
                   spec.vars);
  auto f = to_polynomials(ring, spec.polys);
  return {std::move(ring), std::move(f)};
}

/// Homogenizes every input with a new last variable (named h, or h1, h2, ...
/// when h is taken).
template <class K> Instance<K> homogenized(const Instance<K> &in) {
  std::string name = "h";
  const auto &names = in.ring.names();
  for (int k = 1; std::find(names.begin(), names.end(), name) != names.end(); ++k)
    name = "h" + std::to_string(k);
  auto ring = in.ring.with_variable(name);
  std::vector<Polynomial<K>> f;
  for (const auto &p : in.f)
    f.push_back(in.ring.homogenize(p, ring));
  return {std::move(ring), std::move(f)};
}

} // namespace trb
