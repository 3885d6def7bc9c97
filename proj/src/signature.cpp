#include "trb/signature.hpp"

namespace trb {

std::string sig_to_string(const ModuleMonomial &s, const std::vector<std::string> &names) {
  std::string m;
  for (std::size_t i = 0; i < s.mono.nvars(); ++i) {
    if (s.mono[i] == 0)
      continue;
    m += (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
    if (s.mono[i] > 1)
      m += '^' + std::to_string(s.mono[i]);
    m += '*';
  }
  return m + "E" + std::to_string(s.index + 1);
}

SignatureOrder SignatureOrder::pot(MonomialOrder mord, std::size_t ncomponents) {
  SignatureOrder o;
  o.kind_ = SignatureOrderKind::Pot;
  o.mord_ = std::move(mord);
  o.ncomponents_ = ncomponents;
  return o;
}

SignatureOrder SignatureOrder::schreyer(MonomialOrder mord, std::vector<Monomial> leads,
                                        bool literal) {
  SignatureOrder o;
  o.kind_ = literal ? SignatureOrderKind::SchreyerLiteral : SignatureOrderKind::Schreyer;
  o.mord_ = std::move(mord);
  o.ncomponents_ = leads.size();
  o.leads_ = std::move(leads);
  return o;
}

SignatureOrder SignatureOrder::degree_first(MonomialOrder mord, std::vector<std::uint64_t> degrees) {
  SignatureOrder o;
  o.kind_ = SignatureOrderKind::DegreeFirst;
  o.mord_ = std::move(mord);
  o.ncomponents_ = degrees.size();
  o.degrees_ = std::move(degrees);
  return o;
}

SignatureOrder SignatureOrder::reverse_degree(MonomialOrder mord, std::vector<Monomial> leads,
                                              std::vector<std::uint64_t> degrees) {
  if (leads.size() != degrees.size())
    throw Error("reverse_degree: leads and degrees differ in length");
  SignatureOrder o;
  o.kind_ = SignatureOrderKind::ReverseDegree;
  o.mord_ = std::move(mord);
  o.ncomponents_ = leads.size();
  o.leads_ = std::move(leads);
  o.degrees_ = std::move(degrees);
  return o;
}

namespace {

WeightMatrix stack(std::initializer_list<const WeightMatrix *> parts) {
  WeightMatrix out;
  for (const auto *p : parts)
    out.insert(out.end(), p->begin(), p->end());
  return out;
}

WeightMatrix shared_monomial_part(const ModuleMatrixSpec &spec) {
  WeightMatrix out;
  for (const auto &r : spec.shared)
    out.emplace_back(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(spec.nvars));
  return out;
}

} // namespace

SignatureOrder SignatureOrder::custom_matrix(MonomialOrder mord, ModuleMatrixSpec spec) {
  if (spec.nvars != mord.nvars())
    throw Error("matrix signature order: expected " + std::to_string(mord.nvars()) +
                " variables, got " + std::to_string(spec.nvars));
  for (const auto &r : spec.shared)
    if (r.size() != spec.nvars + spec.ncomponents)
      throw Error("matrix signature order: shared rows need " +
                  std::to_string(spec.nvars + spec.ncomponents) + " entries");
  spec.tie_rows.resize(spec.ncomponents);
  for (const auto &block : spec.tie_rows)
    for (const auto &r : block)
      if (r.size() != spec.nvars)
        throw Error("matrix signature order: component rows need " + std::to_string(spec.nvars) +
                    " entries");
  SignatureOrder o;
  o.kind_ = SignatureOrderKind::CustomMatrix;
  o.mord_ = std::move(mord);
  o.ncomponents_ = spec.ncomponents;
  o.matrix_ = std::move(spec);
  for (std::size_t i = 0; i < o.ncomponents_; ++i)
    if (!is_admissible_matrix(o.component_suborder(i), o.mord_.nvars()))
      throw Error("matrix signature order is not admissible on component " +
                  std::to_string(i + 1));
  return o;
}

std::string SignatureOrder::name() const { return signature_order_kind_name(kind_); }

SignatureOrderKind parse_signature_order_kind(const std::string &name) {
  for (auto k : {SignatureOrderKind::Pot, SignatureOrderKind::Schreyer,
                 SignatureOrderKind::SchreyerLiteral, SignatureOrderKind::DegreeFirst,
                 SignatureOrderKind::ReverseDegree, SignatureOrderKind::CustomMatrix})
    if (signature_order_kind_name(k) == name)
      return k;
  throw Error("unknown signature order '" + name +
              "' (expected pot, schreyer, schreyer-paper, degree, bad-degree-demo or matrix)");
}

std::string signature_order_kind_name(SignatureOrderKind kind) {
  switch (kind) {
  case SignatureOrderKind::Pot:
    return "pot";
  case SignatureOrderKind::Schreyer:
    return "schreyer";
  case SignatureOrderKind::SchreyerLiteral:
    return "schreyer-paper";
  case SignatureOrderKind::DegreeFirst:
    return "degree";
  case SignatureOrderKind::ReverseDegree:
    return "bad-degree-demo";
  case SignatureOrderKind::CustomMatrix:
    return "matrix";
  }
  return "?";
}

std::strong_ordering SignatureOrder::compare(const ModuleMonomial &a,
                                             const ModuleMonomial &b) const {
  const std::size_t i = a.index, j = b.index;
  if (i >= ncomponents_ || j >= ncomponents_)
    throw Error("signature component out of range");
  switch (kind_) {
  case SignatureOrderKind::Pot:
    if (i != j)
      return j <=> i;
    return mord_.compare(a.mono, b.mono);
  case SignatureOrderKind::Schreyer:
    if (auto c = mord_.compare_products(a.mono, leads_[i], b.mono, leads_[j]); c != 0)
      return c;
    return i <=> j;
  case SignatureOrderKind::SchreyerLiteral:
    if (auto c = mord_.compare_products(a.mono, leads_[j], b.mono, leads_[i]); c != 0)
      return c;
    if (auto c = mord_.compare(leads_[j], leads_[i]); c != 0)
      return c;
    return i <=> j;
  case SignatureOrderKind::DegreeFirst:
    if (auto c = a.mono.degree() + degrees_[i] <=> b.mono.degree() + degrees_[j]; c != 0)
      return c;
    if (auto c = mord_.compare(a.mono, b.mono); c != 0)
      return c;
    return i <=> j;
  case SignatureOrderKind::ReverseDegree:
    if (auto c = a.mono.degree() + degrees_[i] <=> b.mono.degree() + degrees_[j]; c != 0)
      return c;
    if (auto c = mord_.compare_products(b.mono, leads_[j], a.mono, leads_[i]); c != 0)
      return c;
    return i <=> j;
  case SignatureOrderKind::CustomMatrix: {
    const auto n = matrix_.nvars;
    for (const auto &row : matrix_.shared) {
      long long wa = row[n + i], wb = row[n + j];
      for (std::size_t k = 0; k < n; ++k) {
        wa += row[k] * static_cast<long long>(a.mono[k]);
        wb += row[k] * static_cast<long long>(b.mono[k]);
      }
      if (auto c = wa <=> wb; c != 0)
        return c;
    }
    if (i != j)
      return i <=> j;
    for (const auto &row : matrix_.tie_rows[i]) {
      long long wa = 0, wb = 0;
      for (std::size_t k = 0; k < n; ++k) {
        wa += row[k] * static_cast<long long>(a.mono[k]);
        wb += row[k] * static_cast<long long>(b.mono[k]);
      }
      if (auto c = wa <=> wb; c != 0)
        return c;
    }
    return mord_.compare(a.mono, b.mono);
  }
  }
  return std::strong_ordering::equal;
}

WeightMatrix SignatureOrder::component_suborder(std::size_t i) const {
  const WeightMatrix m = mord_.weight_matrix();
  const std::size_t n = mord_.nvars();
  switch (kind_) {
  case SignatureOrderKind::Pot:
  case SignatureOrderKind::Schreyer:
  case SignatureOrderKind::SchreyerLiteral:
    return m;
  case SignatureOrderKind::DegreeFirst: {
    WeightMatrix deg{std::vector<long long>(n, 1)};
    return stack({&deg, &m});
  }
  case SignatureOrderKind::ReverseDegree: {
    WeightMatrix deg{std::vector<long long>(n, 1)};
    WeightMatrix neg = m;
    for (auto &r : neg)
      for (auto &x : r)
        x = -x;
    return stack({&deg, &neg});
  }
  case SignatureOrderKind::CustomMatrix: {
    WeightMatrix shared = shared_monomial_part(matrix_);
    return stack({&shared, &matrix_.tie_rows.at(i), &m});
  }
  }
  return m;
}

std::string to_string(Compatibility c) {
  switch (c) {
  case Compatibility::Compatible:
    return "Compatible";
  case Compatibility::AlmostCompatible:
    return "AlmostCompatible";
  case Compatibility::NotAlmostCompatible:
    return "NotAlmostCompatible";
  case Compatibility::Unknown:
    return "Unknown";
  }
  return "?";
}

std::string to_string(TerminationPrediction t) {
  switch (t) {
  case TerminationPrediction::Terminates:
    return "Terminates";
  case TerminationPrediction::MayNotTerminate:
    return "MayNotTerminate";
  case TerminationPrediction::Unknown:
    return "Unknown";
  }
  return "?";
}

CompatibilityVerdict check_compatibility(const MonomialOrder &mord, const SignatureOrder &sord) {
  if (mord.nvars() != sord.monomial_order().nvars())
    return {Compatibility::Unknown, "monomial order and signature order disagree on nvars"};
  const WeightMatrix target = mord.weight_matrix();
  const std::size_t d = sord.ncomponents();
  std::vector<std::size_t> differing;
  for (std::size_t i = 0; i < d; ++i)
    if (!same_matrix_order(sord.component_suborder(i), target))
      differing.push_back(i);

  const std::string pair_name = "(" + mord.name() + ", " + sord.name() + ")";
  if (differing.empty())
    return {Compatibility::Compatible,
            pair_name + ": every component sub-order equals the monomial order"};
  if (differing.size() >= 2)
    return {Compatibility::NotAlmostCompatible,
            pair_name + ": " + std::to_string(differing.size()) +
                " component sub-orders differ from the monomial order (e.g. E" +
                std::to_string(differing[0] + 1) + ", E" + std::to_string(differing[1] + 1) + ")"};
  if (d == 1)
    return {Compatibility::AlmostCompatible,
            pair_name + ": the single component's sub-order differs; no other component exists"};
  // Exactly one differing component among several: the remaining clause
  // (x^a E_k below every other E_i) needs a search we do not implement.
  return {Compatibility::Unknown,
          pair_name + ": only E" + std::to_string(differing[0] + 1) +
              " differs; whether x^a E_k stays below every other E_i is not decided"};
}

TerminationPrediction predict_termination(const CompatibilityVerdict &verdict) {
  switch (verdict.status) {
  case Compatibility::Compatible:
  case Compatibility::AlmostCompatible:
    return TerminationPrediction::Terminates;
  case Compatibility::NotAlmostCompatible:
    return TerminationPrediction::MayNotTerminate;
  case Compatibility::Unknown:
    return TerminationPrediction::Unknown;
  }
  return TerminationPrediction::Unknown;
}

} // namespace trb
