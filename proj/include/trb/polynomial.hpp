#pragma once

// Sparse multivariate polynomials over a field, kept as term lists sorted
// strictly decreasingly under the ring's monomial order.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "trb/field.hpp"
#include "trb/monomial.hpp"

namespace trb {

template <class K> struct Term {
  typename K::Element coeff;
  Monomial mono;

  friend bool operator==(const Term &a, const Term &b) {
    return a.coeff == b.coeff && a.mono == b.mono;
  }
};

/// Invariant: terms strictly decreasing, no zero coefficients. Empty means 0.
template <class K> class Polynomial {
public:
  using Element = typename K::Element;

  Polynomial() = default;
  /// Takes a term list that already satisfies the invariant.
  explicit Polynomial(std::vector<Term<K>> terms) : terms_(std::move(terms)) {}

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term<K>> &terms() const { return terms_; }
  const Term<K> &operator[](std::size_t i) const { return terms_[i]; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  friend bool operator==(const Polynomial &a, const Polynomial &b) { return a.terms_ == b.terms_; }

private:
  std::vector<Term<K>> terms_;
};

template <class K> class PolyRing {
public:
  using Element = typename K::Element;
  using Poly = Polynomial<K>;

  PolyRing(K field, MonomialOrder order, std::vector<std::string> names)
      : field_(std::move(field)), order_(std::move(order)), names_(std::move(names)) {
    if (order_.nvars() != names_.size())
      throw Error("monomial order and variable list disagree on the number of variables");
  }

  const K &field() const { return field_; }
  const MonomialOrder &order() const { return order_; }
  const std::vector<std::string> &names() const { return names_; }
  std::size_t nvars() const { return names_.size(); }

  Monomial one_monomial() const { return Monomial::one(nvars()); }
  Monomial var(std::size_t i, Monomial::Exponent e = 1) const {
    return Monomial::variable(nvars(), i, e);
  }

  Poly zero() const { return Poly(); }
  Poly constant(const Element &c) const {
    if (field_.is_zero(c))
      return Poly();
    return Poly({Term<K>{c, one_monomial()}});
  }
  Poly monomial(const Monomial &m, const Element &c) const {
    if (field_.is_zero(c))
      return Poly();
    return Poly({Term<K>{c, m}});
  }

  /// Sorts, merges equal monomials and drops zeros.
  Poly normalize(std::vector<Term<K>> terms) const {
    std::sort(terms.begin(), terms.end(), [this](const Term<K> &a, const Term<K> &b) {
      return order_.compare(a.mono, b.mono) > 0;
    });
    std::vector<Term<K>> out;
    out.reserve(terms.size());
    for (auto &t : terms) {
      if (!out.empty() && out.back().mono == t.mono)
        out.back().coeff = field_.add(out.back().coeff, t.coeff);
      else
        out.push_back(std::move(t));
      if (field_.is_zero(out.back().coeff))
        out.pop_back();
    }
    return Poly(std::move(out));
  }

  const Term<K> &leading_term(const Poly &p) const {
    if (p.is_zero())
      throw Error("leading term of the zero polynomial");
    return p[0];
  }
  const Monomial &leading_monomial(const Poly &p) const { return leading_term(p).mono; }
  const Element &leading_coeff(const Poly &p) const { return leading_term(p).coeff; }

  Poly add(const Poly &p, const Poly &q) const { return combine(p, field_.one(), one_monomial(), q); }
  Poly sub(const Poly &p, const Poly &q) const {
    return combine(p, field_.neg(field_.one()), one_monomial(), q);
  }
  Poly neg(const Poly &p) const { return scale(field_.neg(field_.one()), one_monomial(), p); }

  /// c * m * p
  Poly scale(const Element &c, const Monomial &m, const Poly &p) const {
    if (field_.is_zero(c))
      return Poly();
    std::vector<Term<K>> out;
    out.reserve(p.size());
    for (const auto &t : p)
      out.push_back({field_.mul(c, t.coeff), mono_mul(m, t.mono)});
    return Poly(std::move(out));
  }
  Poly scale(const Element &c, const Poly &p) const { return scale(c, one_monomial(), p); }
  Poly mul_monomial(const Monomial &m, const Poly &p) const { return scale(field_.one(), m, p); }

  /// p - c * m * q
  Poly sub_scaled(const Poly &p, const Element &c, const Monomial &m, const Poly &q) const {
    return combine(p, field_.neg(c), m, q);
  }

  Poly mul(const Poly &p, const Poly &q) const {
    Poly acc;
    for (const auto &t : q)
      acc = combine(acc, t.coeff, t.mono, p);
    return acc;
  }

  Poly monic(const Poly &p) const {
    if (p.is_zero() || field_.is_one(p[0].coeff))
      return p;
    return scale(field_.inv(p[0].coeff), p);
  }

  std::uint64_t total_degree(const Poly &p) const {
    std::uint64_t d = 0;
    for (const auto &t : p)
      d = std::max(d, t.mono.degree());
    return d;
  }

  bool is_homogeneous(const Poly &p) const {
    for (const auto &t : p)
      if (t.mono.degree() != p[0].mono.degree())
        return false;
    return true;
  }

  /// Ring with one more variable, placed last and smallest.
  PolyRing with_variable(const std::string &name) const {
    auto names = names_;
    names.push_back(name);
    return PolyRing(field_, order_.extended(1), std::move(names));
  }

  /// Lifts every term of p (a polynomial of this ring) to total degree deg(p)
  /// with the last variable of `target`, which must be with_variable(...).
  Poly homogenize(const Poly &p, const PolyRing &target) const {
    if (target.nvars() != nvars() + 1)
      throw Error("homogenize: target ring must have exactly one extra variable");
    const auto d = total_degree(p);
    std::vector<Term<K>> terms;
    for (const auto &t : p) {
      auto e = t.mono.exponents();
      e.push_back(static_cast<Monomial::Exponent>(d - t.mono.degree()));
      terms.push_back({t.coeff, Monomial(std::move(e))});
    }
    return target.normalize(std::move(terms));
  }

  std::string to_string(const Monomial &m) const {
    std::string s;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0)
        continue;
      if (!s.empty())
        s += '*';
      s += names_[i];
      if (m[i] > 1)
        s += '^' + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
  }

  std::string to_string(const Poly &p) const {
    if (p.is_zero())
      return "0";
    std::string s;
    for (std::size_t k = 0; k < p.size(); ++k) {
      const auto &t = p[k];
      std::string c = field_.to_string(t.coeff);
      bool negative = !c.empty() && c[0] == '-';
      if (negative)
        c.erase(0, 1);
      if (k == 0)
        s += negative ? "-" : "";
      else
        s += negative ? " - " : " + ";
      if (t.mono.is_one())
        s += c;
      else if (c == "1")
        s += to_string(t.mono);
      else
        s += c + "*" + to_string(t.mono);
    }
    return s;
  }

private:
  /// p + c * m * q by merging the two sorted term lists.
  Poly combine(const Poly &p, const Element &c, const Monomial &m, const Poly &q) const {
    if (field_.is_zero(c) || q.is_zero())
      return p;
    std::vector<Term<K>> out;
    out.reserve(p.size() + q.size());
    std::size_t i = 0, j = 0;
    const bool unit_mono = m.is_one();
    while (i < p.size() || j < q.size()) {
      if (j == q.size()) {
        out.push_back(p[i++]);
        continue;
      }
      Monomial qm = unit_mono ? q[j].mono : mono_mul(m, q[j].mono);
      auto cmp = i < p.size() ? order_.compare(p[i].mono, qm) : std::strong_ordering::less;
      if (cmp > 0) {
        out.push_back(p[i++]);
      } else if (cmp < 0) {
        out.push_back({field_.mul(c, q[j].coeff), std::move(qm)});
        ++j;
      } else {
        auto s = field_.add(p[i].coeff, field_.mul(c, q[j].coeff));
        if (!field_.is_zero(s))
          out.push_back({std::move(s), std::move(qm)});
        ++i;
        ++j;
      }
    }
    return Poly(std::move(out));
  }

  K field_;
  MonomialOrder order_;
  std::vector<std::string> names_;
};

/// Structural invariant check: strictly decreasing, nonzero coefficients.
template <class K> bool is_normalized(const PolyRing<K> &ring, const Polynomial<K> &p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (ring.field().is_zero(p[i].coeff) || p[i].mono.nvars() != ring.nvars())
      return false;
    if (i > 0 && ring.order().compare(p[i - 1].mono, p[i].mono) <= 0)
      return false;
  }
  return true;
}

} // namespace trb
