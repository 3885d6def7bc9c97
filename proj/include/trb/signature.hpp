#pragma once

// Module monomials m*E_i, signature orders on them, and the compatibility
// test between a signature order and the monomial order.

#include <compare>
#include <string>
#include <vector>

#include "trb/monomial.hpp"
#include "trb/polynomial.hpp"

namespace trb {

/// m * E_{index+1}; the component index is zero-based internally.
struct ModuleMonomial {
  Monomial mono;
  std::size_t index = 0;

  friend bool operator==(const ModuleMonomial &a, const ModuleMonomial &b) {
    return a.index == b.index && a.mono == b.mono;
  }
};

inline ModuleMonomial sig_mul(const Monomial &m, const ModuleMonomial &s) {
  return {mono_mul(m, s.mono), s.index};
}
inline bool sig_divides(const ModuleMonomial &a, const ModuleMonomial &b) {
  return a.index == b.index && mono_divides(a.mono, b.mono);
}
/// b / a as a monomial; requires sig_divides(a, b).
inline Monomial sig_div(const ModuleMonomial &b, const ModuleMonomial &a) {
  if (a.index != b.index)
    throw Error("sig_div: different components");
  return mono_div(b.mono, a.mono);
}

struct ModuleMonomialLess {
  bool operator()(const ModuleMonomial &a, const ModuleMonomial &b) const {
    if (a.index != b.index)
      return a.index < b.index;
    return a.mono.exponents() < b.mono.exponents();
  }
};

std::string sig_to_string(const ModuleMonomial &s, const std::vector<std::string> &names);

enum class SignatureOrderKind {
  Pot,                  // index-major (larger index smaller), then the monomial order
  Schreyer,             // lm(x^a f_i) vs lm(x^b f_j), ties by index
  SchreyerLiteral, // lm(x^a f_j) vs lm(x^b f_i), then lm(f_j) vs lm(f_i), then index
  DegreeFirst,          // deg(x^a f_i), then x^a vs x^b, then index
  ReverseDegree,        // deg(x^a f_i), then reversed lm(x^a f_i), then index
  CustomMatrix,
};

std::string signature_order_kind_name(SignatureOrderKind kind);
/// Accepts pot, schreyer, schreyer-paper, degree, bad-degree-demo, matrix.
SignatureOrderKind parse_signature_order_kind(const std::string &name);

/// Weighted module order: shared rows act on (exponents, component one-hot);
/// ties inside a component fall to that component's own rows, then to the
/// monomial order. Ties across components go to the smaller index.
struct ModuleMatrixSpec {
  std::size_t nvars = 0;
  std::size_t ncomponents = 0;
  WeightMatrix shared;                   // rows of length nvars + ncomponents
  std::vector<WeightMatrix> tie_rows;    // per component, rows of length nvars (may be empty)
};

class SignatureOrder {
public:
  static SignatureOrder pot(MonomialOrder mord, std::size_t ncomponents);
  /// `leads` are the leading monomials of the inputs; they must be nonzero polynomials.
  static SignatureOrder schreyer(MonomialOrder mord, std::vector<Monomial> leads,
                                 bool literal = false);
  static SignatureOrder degree_first(MonomialOrder mord, std::vector<std::uint64_t> degrees);
  static SignatureOrder reverse_degree(MonomialOrder mord, std::vector<Monomial> leads,
                                       std::vector<std::uint64_t> degrees);
  static SignatureOrder custom_matrix(MonomialOrder mord, ModuleMatrixSpec spec);

  SignatureOrderKind kind() const { return kind_; }
  std::size_t ncomponents() const { return ncomponents_; }
  const MonomialOrder &monomial_order() const { return mord_; }
  const ModuleMatrixSpec &matrix_spec() const { return matrix_; }
  std::string name() const;

  std::strong_ordering compare(const ModuleMonomial &a, const ModuleMonomial &b) const;
  bool less(const ModuleMonomial &a, const ModuleMonomial &b) const { return compare(a, b) < 0; }

  /// Restriction of this order to component i, as a weight matrix over the
  /// monomials (closed form per family).
  WeightMatrix component_suborder(std::size_t i) const;

private:
  SignatureOrderKind kind_ = SignatureOrderKind::Pot;
  MonomialOrder mord_;
  std::size_t ncomponents_ = 0;
  std::vector<Monomial> leads_;
  std::vector<std::uint64_t> degrees_;
  ModuleMatrixSpec matrix_;
};

/// Builds a signature order of the given kind from the input list.
/// Kinds depending on the inputs reject zero polynomials.
template <class K>
SignatureOrder make_signature_order(SignatureOrderKind kind, const PolyRing<K> &ring,
                                    const std::vector<Polynomial<K>> &f,
                                    const ModuleMatrixSpec *matrix = nullptr) {
  std::vector<Monomial> leads;
  std::vector<std::uint64_t> degrees;
  if (kind != SignatureOrderKind::Pot && kind != SignatureOrderKind::CustomMatrix) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i].is_zero())
        throw Error("signature order " + signature_order_kind_name(kind) +
                    " needs nonzero inputs; f" + std::to_string(i + 1) + " is zero");
      leads.push_back(ring.leading_monomial(f[i]));
      degrees.push_back(ring.total_degree(f[i]));
    }
  }
  switch (kind) {
  case SignatureOrderKind::Pot:
    return SignatureOrder::pot(ring.order(), f.size());
  case SignatureOrderKind::Schreyer:
    return SignatureOrder::schreyer(ring.order(), std::move(leads), false);
  case SignatureOrderKind::SchreyerLiteral:
    return SignatureOrder::schreyer(ring.order(), std::move(leads), true);
  case SignatureOrderKind::DegreeFirst:
    return SignatureOrder::degree_first(ring.order(), std::move(degrees));
  case SignatureOrderKind::ReverseDegree:
    return SignatureOrder::reverse_degree(ring.order(), std::move(leads), std::move(degrees));
  case SignatureOrderKind::CustomMatrix:
    if (!matrix)
      throw Error("custom matrix signature order needs a matrix");
    if (matrix->ncomponents != f.size() || matrix->nvars != ring.nvars())
      throw Error("matrix signature order dimensions do not match the input");
    return SignatureOrder::custom_matrix(ring.order(), *matrix);
  }
  throw Error("unknown signature order kind");
}

/// The F5 preorder on (index, degree): a larger index is smaller, then the
/// smaller degree. Equal means same index and degree.
inline std::weak_ordering f5_compare(std::size_t index1, std::uint64_t deg1, std::size_t index2,
                                     std::uint64_t deg2) {
  if (index1 != index2)
    return index2 <=> index1;
  return deg1 <=> deg2;
}

enum class Compatibility { Compatible, AlmostCompatible, NotAlmostCompatible, Unknown };
enum class TerminationPrediction { Terminates, MayNotTerminate, Unknown };

struct CompatibilityVerdict {
  Compatibility status = Compatibility::Unknown;
  std::string detail;
};

std::string to_string(Compatibility c);
std::string to_string(TerminationPrediction t);

/// Decides (almost) compatibility by comparing each component's sub-order
/// with the monomial order symbolically.
CompatibilityVerdict check_compatibility(const MonomialOrder &mord, const SignatureOrder &sord);
TerminationPrediction predict_termination(const CompatibilityVerdict &verdict);

} // namespace trb
