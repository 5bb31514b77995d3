#include "nbihom/algebra.hpp"

#include <algorithm>
#include <numeric>

#include "nbihom/error.hpp"

namespace nbihom {

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

void require_twist_shape(const Field& field, std::size_t dim, const Matrix& m, const char* name) {
  if (m.rows() != dim || m.cols() != dim)
    throw Error(ErrorCode::DimensionMismatch, std::string(name) + " must be " + std::to_string(dim) + "x" +
                                                  std::to_string(dim));
  if (!(m.field() == field)) throw Error(ErrorCode::FieldMismatch, std::string(name) + " is over the wrong field");
}

}  // namespace

Algebra::Algebra(const Field& field, std::size_t arity, std::size_t dim, Matrix alpha, Matrix beta)
    : field_(field), arity_(arity), dim_(dim), alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (arity < 2) throw Error(ErrorCode::InvalidAlgebra, "arity must be at least 2");
  if (dim < 1) throw Error(ErrorCode::InvalidAlgebra, "dimension must be at least 1");
  require_twist_shape(field_, dim_, alpha_, "alpha");
  require_twist_shape(field_, dim_, beta_, "beta");
  tensor_.assign(ipow(dim_, arity_), zero_vector(field_, dim_));
}

Algebra Algebra::zero(const Field& field, std::size_t arity, std::size_t dim) {
  return {field, arity, dim, Matrix::identity(field, dim), Matrix::identity(field, dim)};
}

std::size_t Algebra::flat_index(std::span<const std::size_t> args) const {
  if (args.size() != arity_) throw Error(ErrorCode::DimensionMismatch, "tuple length differs from the arity");
  std::size_t flat = 0;
  for (std::size_t i : args) {
    if (i >= dim_) throw Error(ErrorCode::IndexOutOfRange, "basis index out of range");
    flat = flat * dim_ + i;
  }
  return flat;
}

IndexTuple Algebra::tuple_at(std::size_t flat) const {
  IndexTuple t(arity_);
  for (std::size_t k = arity_; k-- > 0;) {
    t[k] = flat % dim_;
    flat /= dim_;
  }
  return t;
}

const Vector& Algebra::structure(std::span<const std::size_t> args) const { return tensor_[flat_index(args)]; }

void Algebra::set_structure(std::span<const std::size_t> args, Vector value) {
  if (value.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "bracket value has the wrong length");
  for (const auto& x : value)
    if (!(x.field() == field_)) throw Error(ErrorCode::FieldMismatch, "bracket value over the wrong field");
  tensor_[flat_index(args)] = std::move(value);
}

Algebra Algebra::with_twists(Matrix alpha, Matrix beta) const {
  Algebra out(field_, arity_, dim_, std::move(alpha), std::move(beta));
  out.tensor_ = tensor_;
  return out;
}

bool operator==(const Algebra& a, const Algebra& b) {
  return a.field_ == b.field_ && a.arity_ == b.arity_ && a.dim_ == b.dim_ && a.alpha_ == b.alpha_ &&
         a.beta_ == b.beta_ && a.tensor_ == b.tensor_;
}

void for_each_tuple(std::size_t d, std::size_t k, const std::function<void(const IndexTuple&)>& fn) {
  IndexTuple t(k, 0);
  if (d == 0 && k > 0) return;
  while (true) {
    fn(t);
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++t[pos] < d) break;
      t[pos] = 0;
      if (pos == 0) return;
    }
    if (k == 0) return;
  }
}

Vector bracket_eval(const Algebra& a, std::span<const Vector> args) {
  const std::size_t n = a.arity();
  const std::size_t d = a.dim();
  if (args.size() != n) throw Error(ErrorCode::DimensionMismatch, "bracket takes exactly n arguments");
  std::vector<std::vector<std::size_t>> support(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (args[k].size() != d) throw Error(ErrorCode::DimensionMismatch, "bracket argument has the wrong length");
    for (std::size_t i = 0; i < d; ++i)
      if (!args[k][i].is_zero()) support[k].push_back(i);
    if (support[k].empty()) return zero_vector(a.field(), d);
  }
  Vector out = zero_vector(a.field(), d);
  std::vector<std::size_t> cursor(n, 0);
  IndexTuple t(n);
  while (true) {
    Scalar coeff = a.field().one();
    for (std::size_t k = 0; k < n; ++k) {
      t[k] = support[k][cursor[k]];
      coeff *= args[k][t[k]];
    }
    axpy(out, coeff, a.structure(t));
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++cursor[pos] < support[pos].size()) break;
      cursor[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

Matrix morphism_power(const Algebra& a, unsigned s, unsigned r) { return a.alpha().pow(s) * a.beta().pow(r); }

int permutation_sign(std::span<const std::size_t> perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

bool check_commuting(const Algebra& a) { return a.alpha() * a.beta() == a.beta() * a.alpha(); }

namespace {

/// [β e_{t1}, ..., β e_{t(n-1)}, α e_{tn}] for every basis tuple.
std::vector<Vector> twisted_table(const Algebra& a) {
  const std::size_t n = a.arity();
  std::vector<Vector> alpha_cols, beta_cols;
  for (std::size_t j = 0; j < a.dim(); ++j) {
    alpha_cols.push_back(a.alpha().column(j));
    beta_cols.push_back(a.beta().column(j));
  }
  std::vector<Vector> table(a.tuple_count());
  std::vector<Vector> args(n);
  for (std::size_t flat = 0; flat < a.tuple_count(); ++flat) {
    IndexTuple t = a.tuple_at(flat);
    for (std::size_t k = 0; k + 1 < n; ++k) args[k] = beta_cols[t[k]];
    args[n - 1] = alpha_cols[t[n - 1]];
    table[flat] = bracket_eval(a, args);
  }
  return table;
}

}  // namespace

std::vector<SkewWitness> check_bihom_skew(const Algebra& a) {
  const std::size_t n = a.arity();
  const auto table = twisted_table(a);
  std::vector<SkewWitness> failures;
  for (std::size_t flat = 0; flat < a.tuple_count(); ++flat) {
    const IndexTuple t = a.tuple_at(flat);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    IndexTuple permuted(n);
    while (std::next_permutation(perm.begin(), perm.end())) {
      for (std::size_t k = 0; k < n; ++k) permuted[k] = t[perm[k]];
      const Vector& lhs = table[flat];
      const Vector& rhs = table[a.flat_index(permuted)];
      const bool ok = permutation_sign(perm) > 0 ? lhs == rhs : is_zero(lhs + rhs);
      if (!ok) failures.push_back({t, perm});
    }
  }
  return failures;
}

std::vector<JacobiWitness> check_bihom_jacobi(const Algebra& a) {
  const std::size_t n = a.arity();
  const std::size_t d = a.dim();
  const Field& f = a.field();
  const auto inner = twisted_table(a);  // [β y1, ..., β y(n-1), α yn]

  // outer[a-tuple] is the d×d matrix v ↦ [β² e_{a1}, ..., β² e_{a(n-1)}, v].
  const Matrix beta2 = a.beta() * a.beta();
  std::vector<Vector> beta2_cols;
  for (std::size_t j = 0; j < d; ++j) beta2_cols.push_back(beta2.column(j));
  const std::size_t outer_count = a.tuple_count() / d;
  std::vector<Matrix> outer(outer_count, Matrix(f, d, d));
  {
    std::vector<Vector> args(n);
    for (std::size_t idx = 0; idx < outer_count; ++idx) {
      IndexTuple head = a.tuple_at(idx * d);  // last slot 0
      for (std::size_t k = 0; k + 1 < n; ++k) args[k] = beta2_cols[head[k]];
      for (std::size_t j = 0; j < d; ++j) {
        args[n - 1] = unit_vector(f, d, j);
        Vector col = bracket_eval(a, args);
        for (std::size_t i = 0; i < d; ++i) outer[idx](i, j) = col[i];
      }
    }
  }
  auto head_index = [d](std::span<const std::size_t> head) {
    std::size_t idx = 0;
    for (std::size_t i : head) idx = idx * d + i;
    return idx;
  };

  // Most terms vanish for sparse brackets; skip them before any arithmetic.
  std::vector<char> inner_zero(inner.size()), outer_zero(outer.size());
  for (std::size_t i = 0; i < inner.size(); ++i) inner_zero[i] = is_zero(inner[i]);
  for (std::size_t i = 0; i < outer.size(); ++i) outer_zero[i] = outer[i].is_zero();

  std::vector<JacobiWitness> failures;
  IndexTuple xy(n);
  IndexTuple y_minus_k(n - 1);
  for_each_tuple(d, n - 1, [&](const IndexTuple& x) {
    const std::size_t hx = head_index(x);
    for (std::size_t k = 0; k + 1 < n; ++k) xy[k] = x[k];
    for_each_tuple(d, n, [&](const IndexTuple& y) {
      const std::size_t fy = a.flat_index(y);
      std::optional<Vector> diff;
      if (!outer_zero[hx] && !inner_zero[fy]) diff = outer[hx].apply(inner[fy]);
      for (std::size_t k = 0; k < n; ++k) {
        xy[n - 1] = y[k];
        const std::size_t fxy = a.flat_index(xy);
        if (inner_zero[fxy]) continue;
        std::size_t pos = 0;
        for (std::size_t j = 0; j < n; ++j)
          if (j != k) y_minus_k[pos++] = y[j];
        const std::size_t hy = head_index(y_minus_k);
        if (outer_zero[hy]) continue;
        // (-1)^{n-k} with one-based k
        const bool negative = (n - (k + 1)) % 2 == 1;
        Vector term = outer[hy].apply(inner[fxy]);
        if (!diff) diff = zero_vector(f, d);
        *diff = negative ? *diff + term : *diff - term;
      }
      if (diff && !is_zero(*diff)) failures.push_back({x, y});
    });
  });
  return failures;
}

std::optional<MorphismWitness> check_multiplicative(const Algebra& a) {
  const std::size_t n = a.arity();
  for (const auto& [name, map] : {std::pair<const char*, const Matrix*>{"alpha", &a.alpha()}, {"beta", &a.beta()}}) {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < a.dim(); ++j) cols.push_back(map->column(j));
    std::vector<Vector> args(n);
    for (std::size_t flat = 0; flat < a.tuple_count(); ++flat) {
      IndexTuple t = a.tuple_at(flat);
      for (std::size_t k = 0; k < n; ++k) args[k] = cols[t[k]];
      if (!(map->apply(a.structure_at(flat)) == bracket_eval(a, args))) return MorphismWitness{name, t};
    }
  }
  return std::nullopt;
}

bool check_regular(const Algebra& a) {
  return !check_multiplicative(a) && is_invertible(a.alpha()) && is_invertible(a.beta());
}

AxiomReport check_axioms(const Algebra& a) {
  AxiomReport report;
  report.commuting = check_commuting(a);
  report.skew_failures = check_bihom_skew(a);
  report.jacobi_failures = check_bihom_jacobi(a);
  report.multiplicative_witness = check_multiplicative(a);
  report.multiplicative = !report.multiplicative_witness;
  report.regular = report.multiplicative && is_invertible(a.alpha()) && is_invertible(a.beta());
  return report;
}

namespace {

void require_ambient(const Algebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) throw Error(ErrorCode::AmbientMismatch, "subspace does not live in the algebra");
  if (!(s.field() == a.field())) throw Error(ErrorCode::FieldMismatch, "subspace over the wrong field");
}

bool twist_stable(const Algebra& a, const Subspace& s) {
  for (const auto& v : s.basis_vectors())
    if (!s.contains(a.alpha().apply(v)) || !s.contains(a.beta().apply(v))) return false;
  return true;
}

}  // namespace

bool is_subalgebra(const Algebra& a, const Subspace& s) {
  require_ambient(a, s);
  if (!twist_stable(a, s)) return false;
  if (s.dim() == 0) return true;
  const auto basis = s.basis_vectors();
  bool closed = true;
  std::vector<Vector> args(a.arity());
  for_each_tuple(s.dim(), a.arity(), [&](const IndexTuple& t) {
    if (!closed) return;
    for (std::size_t k = 0; k < a.arity(); ++k) args[k] = basis[t[k]];
    closed = s.contains(bracket_eval(a, args));
  });
  return closed;
}

bool is_ideal(const Algebra& a, const Subspace& s) {
  require_ambient(a, s);
  if (!twist_stable(a, s)) return false;
  if (s.dim() == 0) return true;
  const auto basis = s.basis_vectors();
  const std::size_t n = a.arity();
  bool closed = true;
  std::vector<Vector> args(n);
  for (std::size_t slot = 0; slot < n && closed; ++slot) {
    for_each_tuple(s.dim(), n - 1, [&](const IndexTuple& t) {
      if (!closed) return;
      for (std::size_t j = 0; j < a.dim() && closed; ++j) {
        std::size_t pos = 0;
        for (std::size_t k = 0; k < n; ++k) args[k] = k == slot ? unit_vector(a.field(), a.dim(), j) : basis[t[pos++]];
        closed = s.contains(bracket_eval(a, args));
      }
    });
  }
  return closed;
}

}  // namespace nbihom
