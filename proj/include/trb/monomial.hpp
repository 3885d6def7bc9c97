#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "trb/field.hpp"

namespace trb {

/// Exponent vector of a power product x1^a1 ... xn^an.
class Monomial {
public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial one(std::size_t nvars) { return Monomial(nvars); }
  static Monomial variable(std::size_t nvars, std::size_t var, Exponent e = 1);

  std::size_t nvars() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent> &exponents() const { return exps_; }
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  friend bool operator==(const Monomial &a, const Monomial &b) { return a.exps_ == b.exps_; }

  std::size_t hash() const;

private:
  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

Monomial mono_mul(const Monomial &a, const Monomial &b);
bool mono_divides(const Monomial &a, const Monomial &b);
Monomial mono_lcm(const Monomial &a, const Monomial &b);
Monomial mono_gcd(const Monomial &a, const Monomial &b);
/// b / a; requires a | b.
Monomial mono_div(const Monomial &b, const Monomial &a);
bool mono_coprime(const Monomial &a, const Monomial &b);

/// Exponent-wise lexicographic comparison; for containers only, not a term order.
struct StructuralLess {
  bool operator()(const Monomial &a, const Monomial &b) const {
    return a.exponents() < b.exponents();
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial &m) const { return m.hash(); }
};

using WeightMatrix = std::vector<std::vector<long long>>;

enum class MonomialOrderKind { Lex, Grlex, Grevlex, Matrix };

/// Admissible term order on monomials in a fixed number of variables.
class MonomialOrder {
public:
  MonomialOrder() = default;
  MonomialOrder(MonomialOrderKind kind, std::size_t nvars);
  /// Throws Error unless the rows have full rank n and make 1 the minimum.
  static MonomialOrder matrix(WeightMatrix rows);
  static MonomialOrder parse(const std::string &name, std::size_t nvars);

  MonomialOrderKind kind() const { return kind_; }
  std::size_t nvars() const { return nvars_; }
  std::string name() const;

  std::strong_ordering compare(const Monomial &a, const Monomial &b) const;
  /// Compares a*b against c*d without forming the products.
  std::strong_ordering compare_products(const Monomial &a, const Monomial &b,
                                        const Monomial &c, const Monomial &d) const;
  bool less(const Monomial &a, const Monomial &b) const { return compare(a, b) < 0; }

  /// Weight-matrix encoding of this order (identity for lex, etc).
  WeightMatrix weight_matrix() const;
  /// True when total degree is the first criterion, up to equivalence.
  bool is_degree_compatible() const;

  /// Same order with variables appended (each new variable smaller than the old ones).
  MonomialOrder extended(std::size_t extra) const;

private:
  template <class ExpA, class ExpB>
  std::strong_ordering compare_impl(std::size_t n, const ExpA &a, const ExpB &b) const;

  MonomialOrderKind kind_ = MonomialOrderKind::Grevlex;
  std::size_t nvars_ = 0;
  WeightMatrix rows_;
};

/// Rank over QQ.
std::size_t matrix_rank(const WeightMatrix &rows);
/// Weight matrices defining the same order on Z^n: their Gram-Schmidt
/// orthogonalizations agree row by row up to positive scaling.
bool same_matrix_order(const WeightMatrix &a, const WeightMatrix &b);
/// Rows define an admissible well-order: full rank and 1 below each variable.
bool is_admissible_matrix(const WeightMatrix &rows, std::size_t nvars);

} // namespace trb
