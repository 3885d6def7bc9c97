#include "trb/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace trb {

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

Monomial Monomial::variable(std::size_t nvars, std::size_t var, Exponent e) {
  std::vector<Exponent> exps(nvars, 0);
  exps.at(var) = e;
  return Monomial(std::move(exps));
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto e : exps_) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

void check_dims(const Monomial &a, const Monomial &b) {
  if (a.nvars() != b.nvars())
    throw Error("monomial dimension mismatch: " + std::to_string(a.nvars()) + " vs " +
                std::to_string(b.nvars()));
}

} // namespace

Monomial mono_mul(const Monomial &a, const Monomial &b) {
  check_dims(a, b);
  std::vector<Monomial::Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = a[i] + b[i];
  return Monomial(std::move(e));
}

bool mono_divides(const Monomial &a, const Monomial &b) {
  check_dims(a, b);
  if (a.degree() > b.degree())
    return false;
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

Monomial mono_lcm(const Monomial &a, const Monomial &b) {
  check_dims(a, b);
  std::vector<Monomial::Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial mono_gcd(const Monomial &a, const Monomial &b) {
  check_dims(a, b);
  std::vector<Monomial::Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial mono_div(const Monomial &b, const Monomial &a) {
  if (!mono_divides(a, b))
    throw Error("mono_div: divisor does not divide");
  std::vector<Monomial::Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = b[i] - a[i];
  return Monomial(std::move(e));
}

bool mono_coprime(const Monomial &a, const Monomial &b) {
  check_dims(a, b);
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a[i] != 0 && b[i] != 0)
      return false;
  return true;
}

MonomialOrder::MonomialOrder(MonomialOrderKind kind, std::size_t nvars)
    : kind_(kind), nvars_(nvars) {
  if (kind == MonomialOrderKind::Matrix)
    throw Error("use MonomialOrder::matrix for matrix orders");
}

MonomialOrder MonomialOrder::matrix(WeightMatrix rows) {
  if (rows.empty())
    throw Error("matrix order needs at least one row");
  std::size_t n = rows.front().size();
  for (const auto &r : rows)
    if (r.size() != n)
      throw Error("matrix order rows have unequal lengths");
  if (matrix_rank(rows) != n)
    throw Error("matrix order is rank-deficient (rank " + std::to_string(matrix_rank(rows)) +
                " < " + std::to_string(n) + ")");
  if (!is_admissible_matrix(rows, n))
    throw Error("matrix order is not admissible: the first nonzero entry of every column must be "
                "positive");
  MonomialOrder o;
  o.kind_ = MonomialOrderKind::Matrix;
  o.nvars_ = n;
  o.rows_ = std::move(rows);
  return o;
}

MonomialOrder MonomialOrder::parse(const std::string &name, std::size_t nvars) {
  if (name == "lex")
    return {MonomialOrderKind::Lex, nvars};
  if (name == "grlex" || name == "deglex")
    return {MonomialOrderKind::Grlex, nvars};
  if (name == "grevlex" || name == "degrevlex")
    return {MonomialOrderKind::Grevlex, nvars};
  throw Error("unknown monomial order '" + name + "' (expected lex, grlex or grevlex)");
}

std::string MonomialOrder::name() const {
  switch (kind_) {
  case MonomialOrderKind::Lex:
    return "lex";
  case MonomialOrderKind::Grlex:
    return "grlex";
  case MonomialOrderKind::Grevlex:
    return "grevlex";
  case MonomialOrderKind::Matrix:
    return "matrix";
  }
  return "?";
}

template <class ExpA, class ExpB>
std::strong_ordering MonomialOrder::compare_impl(std::size_t n, const ExpA &a,
                                                 const ExpB &b) const {
  auto degree = [n](const auto &exp) {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < n; ++i)
      d += exp(i);
    return d;
  };
  switch (kind_) {
  case MonomialOrderKind::Lex:
    for (std::size_t i = 0; i < n; ++i)
      if (auto c = a(i) <=> b(i); c != 0)
        return c;
    return std::strong_ordering::equal;
  case MonomialOrderKind::Grlex:
    if (auto c = degree(a) <=> degree(b); c != 0)
      return c;
    for (std::size_t i = 0; i < n; ++i)
      if (auto c = a(i) <=> b(i); c != 0)
        return c;
    return std::strong_ordering::equal;
  case MonomialOrderKind::Grevlex:
    if (auto c = degree(a) <=> degree(b); c != 0)
      return c;
    for (std::size_t i = n; i-- > 0;)
      if (auto c = b(i) <=> a(i); c != 0)
        return c;
    return std::strong_ordering::equal;
  case MonomialOrderKind::Matrix:
    for (const auto &row : rows_) {
      std::int64_t wa = 0, wb = 0;
      for (std::size_t i = 0; i < n; ++i) {
        wa += row[i] * a(i);
        wb += row[i] * b(i);
      }
      if (auto c = wa <=> wb; c != 0)
        return c;
    }
    return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(const Monomial &a, const Monomial &b) const {
  check_dims(a, b);
  const std::size_t n = a.nvars();
  auto ea = [&a](std::size_t i) { return static_cast<std::int64_t>(a[i]); };
  auto eb = [&b](std::size_t i) { return static_cast<std::int64_t>(b[i]); };
  return compare_impl(n, ea, eb);
}

std::strong_ordering MonomialOrder::compare_products(const Monomial &a, const Monomial &b,
                                                     const Monomial &c,
                                                     const Monomial &d) const {
  check_dims(a, b);
  check_dims(c, d);
  check_dims(a, c);
  auto fx = [&](std::size_t i) { return static_cast<std::int64_t>(a[i]) + b[i]; };
  auto fy = [&](std::size_t i) {
    return static_cast<std::int64_t>(c[i]) + d[i];
  };
  return compare_impl(a.nvars(), fx, fy);
}

WeightMatrix MonomialOrder::weight_matrix() const {
  const std::size_t n = nvars_;
  WeightMatrix m;
  auto unit = [n](std::size_t i, long long v) {
    std::vector<long long> r(n, 0);
    r[i] = v;
    return r;
  };
  switch (kind_) {
  case MonomialOrderKind::Lex:
    for (std::size_t i = 0; i < n; ++i)
      m.push_back(unit(i, 1));
    break;
  case MonomialOrderKind::Grlex:
    m.emplace_back(n, 1);
    for (std::size_t i = 0; i < n; ++i)
      m.push_back(unit(i, 1));
    break;
  case MonomialOrderKind::Grevlex:
    m.emplace_back(n, 1);
    for (std::size_t i = n; i-- > 1;)
      m.push_back(unit(i, -1));
    break;
  case MonomialOrderKind::Matrix:
    m = rows_;
    break;
  }
  return m;
}

bool MonomialOrder::is_degree_compatible() const {
  switch (kind_) {
  case MonomialOrderKind::Grlex:
  case MonomialOrderKind::Grevlex:
    return true;
  case MonomialOrderKind::Lex:
    return nvars_ <= 1;
  case MonomialOrderKind::Matrix: {
    WeightMatrix graded{std::vector<long long>(nvars_, 1)};
    for (const auto &r : rows_)
      graded.push_back(r);
    return same_matrix_order(graded, rows_);
  }
  }
  return false;
}

MonomialOrder MonomialOrder::extended(std::size_t extra) const {
  if (kind_ != MonomialOrderKind::Matrix)
    return {kind_, nvars_ + extra};
  WeightMatrix rows = rows_;
  for (auto &r : rows)
    r.resize(nvars_ + extra, 0);
  for (std::size_t j = 0; j < extra; ++j) {
    std::vector<long long> r(nvars_ + extra, 0);
    r[nvars_ + j] = 1;
    rows.push_back(std::move(r));
  }
  return matrix(std::move(rows));
}

namespace {

using QRow = std::vector<mpq_class>;

mpq_class dot(const QRow &a, const QRow &b) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

/// Gram-Schmidt without normalization; dependent rows are dropped.
std::vector<QRow> orthogonalize(const WeightMatrix &rows) {
  std::vector<QRow> out;
  for (const auto &r : rows) {
    QRow v;
    for (long long x : r)
      v.emplace_back(static_cast<long>(x));
    for (const auto &q : out) {
      mpq_class c = dot(v, q) / dot(q, q);
      for (std::size_t i = 0; i < v.size(); ++i)
        v[i] -= c * q[i];
    }
    bool zero = std::all_of(v.begin(), v.end(), [](const mpq_class &x) { return sgn(x) == 0; });
    if (!zero)
      out.push_back(std::move(v));
  }
  return out;
}

} // namespace

std::size_t matrix_rank(const WeightMatrix &rows) { return orthogonalize(rows).size(); }

bool same_matrix_order(const WeightMatrix &a, const WeightMatrix &b) {
  auto qa = orthogonalize(a);
  auto qb = orthogonalize(b);
  if (qa.size() != qb.size())
    return false;
  for (std::size_t k = 0; k < qa.size(); ++k) {
    if (qa[k].size() != qb[k].size())
      return false;
    // qb[k] = lambda * qa[k] with lambda > 0
    mpq_class ab = dot(qa[k], qb[k]);
    if (sgn(ab) <= 0)
      return false;
    mpq_class lambda = ab / dot(qa[k], qa[k]);
    for (std::size_t i = 0; i < qa[k].size(); ++i)
      if (qb[k][i] != lambda * qa[k][i])
        return false;
  }
  return true;
}

bool is_admissible_matrix(const WeightMatrix &rows, std::size_t nvars) {
  if (matrix_rank(rows) != nvars)
    return false;
  for (std::size_t j = 0; j < nvars; ++j) {
    for (const auto &r : rows) {
      if (r[j] < 0)
        return false;
      if (r[j] > 0)
        break;
    }
  }
  return true;
}

} // namespace trb
