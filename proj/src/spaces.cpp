#include "nbihom/spaces.hpp"

#include <map>

#include "nbihom/error.hpp"

namespace nbihom {

std::string to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::Der: return "der";
    case SpaceKind::GDer: return "gder";
    case SpaceKind::QDer: return "qder";
    case SpaceKind::C: return "c";
    case SpaceKind::QC: return "qc";
    case SpaceKind::ZDer: return "zder";
  }
  return "?";
}

SpaceKind parse_space_kind(const std::string& text) {
  static const std::map<std::string, SpaceKind> kinds{{"der", SpaceKind::Der}, {"gder", SpaceKind::GDer},
                                                      {"qder", SpaceKind::QDer}, {"c", SpaceKind::C},
                                                      {"qc", SpaceKind::QC},   {"zder", SpaceKind::ZDer}};
  auto it = kinds.find(text);
  if (it == kinds.end()) throw Error(ErrorCode::InvalidParams, "unknown space kind '" + text + "'");
  return it->second;
}

std::vector<Matrix> EndoSubspace::basis_matrices() const {
  std::vector<Matrix> out;
  for (const auto& v : space.basis_vectors()) out.push_back(Matrix::from_vectorized(space.field(), v, algebra_dim, algebra_dim));
  return out;
}

namespace {

/// value(u) = [M_1 e_{u1}, ..., M_n e_{un}] for every basis tuple u, computed
/// by successive mode products on the structure tensor.
std::vector<Vector> slot_twisted_tensor(const Algebra& a, const std::vector<const Matrix*>& maps) {
  const std::size_t n = a.arity();
  const std::size_t d = a.dim();
  std::vector<Vector> cur(a.tuple_count());
  for (std::size_t flat = 0; flat < cur.size(); ++flat) cur[flat] = a.structure_at(flat);
  std::size_t stride = a.tuple_count();
  for (std::size_t q = 0; q < n; ++q) {
    stride /= d;  // stride of slot q in the flat index
    if (maps[q] == nullptr) continue;
    const Matrix& m = *maps[q];
    std::vector<Vector> next(cur.size(), zero_vector(a.field(), d));
    for (std::size_t flat = 0; flat < cur.size(); ++flat) {
      const std::size_t j = (flat / stride) % d;
      const std::size_t base = flat - j * stride;
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar& c = m(k, j);
        if (!c.is_zero()) axpy(next[flat], c, cur[base + k * stride]);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

/// Coefficient rows for one family of vector equations over the unknown
/// blocks X_0, X_1, ... (each d×d, vectorized row-major after each other).
class SystemBuilder {
 public:
  SystemBuilder(const Algebra& a, std::size_t blocks)
      : a_(a), d_(a.dim()), blocks_(blocks), echelon_(a.field(), blocks * a.dim() * a.dim()) {
    clear();
  }

  std::size_t var(std::size_t block, std::size_t i, std::size_t j) const { return block * d_ * d_ + i * d_ + j; }

  void clear() { rows_.assign(d_, zero_vector(a_.field(), blocks_ * d_ * d_)); }

  /// += coeff · X_b w  (per output coordinate i)
  void add_apply(std::size_t b, const Vector& w, const Scalar& coeff) {
    for (std::size_t j = 0; j < d_; ++j) {
      if (w[j].is_zero()) continue;
      const Scalar c = coeff * w[j];
      for (std::size_t i = 0; i < d_; ++i) rows_[i][var(b, i, j)] += c;
    }
  }

  /// += coeff · [..., X_b e_j at slot p, ...] where cols[k] is the bracket
  /// with e_k in slot p and the fixed arguments elsewhere.
  void add_insert(std::size_t b, std::size_t j, const std::vector<const Vector*>& cols, const Scalar& coeff) {
    for (std::size_t k = 0; k < d_; ++k) {
      const Vector& col = *cols[k];
      for (std::size_t i = 0; i < d_; ++i)
        if (!col[i].is_zero()) rows_[i][var(b, k, j)] += coeff * col[i];
    }
  }

  void flush() {
    for (auto& row : rows_)
      if (!is_zero(row)) echelon_.add(std::move(row));
    clear();
  }

  /// X_b α − α X_b = 0 and the same for β.
  void add_commuting(std::size_t b) {
    for (const Matrix* m : {&a_.alpha(), &a_.beta()}) {
      for (std::size_t i = 0; i < d_; ++i) {
        for (std::size_t j = 0; j < d_; ++j) {
          Vector row = zero_vector(a_.field(), blocks_ * d_ * d_);
          for (std::size_t k = 0; k < d_; ++k) {
            row[var(b, i, k)] += (*m)(k, j);
            row[var(b, k, j)] -= (*m)(i, k);
          }
          if (!is_zero(row)) echelon_.add(std::move(row));
        }
      }
    }
  }

  Subspace solutions() const { return echelon_.nullspace(); }

 private:
  const Algebra& a_;
  std::size_t d_;
  std::size_t blocks_;
  RowEchelon echelon_;
  std::vector<Vector> rows_;
};

/// For each slot p, the tensor with every slot except p twisted by P.
std::vector<std::vector<Vector>> insertion_tensors(const Algebra& a, const Matrix& p) {
  std::vector<std::vector<Vector>> out;
  for (std::size_t slot = 0; slot < a.arity(); ++slot) {
    std::vector<const Matrix*> maps(a.arity(), &p);
    maps[slot] = nullptr;
    out.push_back(slot_twisted_tensor(a, maps));
  }
  return out;
}

/// Pointers to the d vectors obtained by replacing slot p of tuple t by k.
std::vector<const Vector*> slot_columns(const Algebra& a, const std::vector<Vector>& tensor, IndexTuple t,
                                        std::size_t p) {
  std::vector<const Vector*> cols(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) {
    t[p] = k;
    cols[k] = &tensor[a.flat_index(t)];
  }
  return cols;
}

EndoSubspace package(const Algebra& a, SRIndex sr, SpaceKind kind, Subspace space) {
  return {a.dim(), sr, kind, std::move(space)};
}

std::vector<std::size_t> first_block(std::size_t d) {
  std::vector<std::size_t> coords(d * d);
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = i;
  return coords;
}

}  // namespace

Subspace center(const Algebra& a, bool strict_all_slots) {
  const std::size_t d = a.dim();
  RowEchelon echelon(a.field(), d);
  const std::size_t slots = strict_all_slots ? a.arity() : 1;
  for (std::size_t p = 0; p < slots; ++p) {
    for_each_tuple(d, a.arity() - 1, [&](const IndexTuple& others) {
      IndexTuple t(a.arity());
      std::size_t pos = 0;
      for (std::size_t k = 0; k < a.arity(); ++k) t[k] = k == p ? 0 : others[pos++];
      for (std::size_t i = 0; i < d; ++i) {
        Vector row(d);
        for (std::size_t j = 0; j < d; ++j) {
          t[p] = j;
          row[j] = a.structure(t)[i];
        }
        if (!is_zero(row)) echelon.add(std::move(row));
      }
    });
  }
  return echelon.nullspace();
}

Subspace ab_center(const Algebra& a, bool strict_all_slots) {
  const std::size_t d = a.dim();
  const Matrix ab = a.alpha() * a.beta();
  RowEchelon echelon(a.field(), d);
  const std::size_t slots = strict_all_slots ? a.arity() : 1;
  for (std::size_t p = 0; p < slots; ++p) {
    std::vector<const Matrix*> maps(a.arity(), &ab);
    maps[p] = nullptr;
    const auto tensor = slot_twisted_tensor(a, maps);
    for_each_tuple(d, a.arity() - 1, [&](const IndexTuple& others) {
      IndexTuple t(a.arity());
      std::size_t pos = 0;
      for (std::size_t k = 0; k < a.arity(); ++k) t[k] = k == p ? 0 : others[pos++];
      for (std::size_t i = 0; i < d; ++i) {
        Vector row(d);
        for (std::size_t j = 0; j < d; ++j) {
          t[p] = j;
          row[j] = tensor[a.flat_index(t)][i];
        }
        if (!is_zero(row)) echelon.add(std::move(row));
      }
    });
  }
  return echelon.nullspace();
}

Subspace derived_subalgebra(const Algebra& a) {
  RowEchelon echelon(a.field(), a.dim());
  for (std::size_t flat = 0; flat < a.tuple_count(); ++flat)
    if (!is_zero(a.structure_at(flat))) echelon.add(a.structure_at(flat));
  return Subspace::row_space(echelon.basis());
}

EndoSubspace der(const Algebra& a, SRIndex sr) {
  const Matrix p = morphism_power(a, sr.s, sr.r);
  const auto ins = insertion_tensors(a, p);
  SystemBuilder sys(a, 1);
  sys.add_commuting(0);
  const Scalar one = a.field().one();
  const Scalar minus_one = a.field().from_int(-1);
  for (std::size_t flat = 0; flat < a.tuple_count(); ++flat) {
    const IndexTuple t = a.tuple_at(flat);
    sys.add_apply(0, a.structure_at(flat), one);
    for (std::size_t slot = 0; slot < a.arity(); ++slot)
      sys.add_insert(0, t[slot], slot_columns(a, ins[slot], t, slot), minus_one);
    sys.flush();
  }
  return package(a, sr, SpaceKind::Der, sys.solutions());
}

WitnessedSpace qder(const Algebra& a, SRIndex sr) {
  const std::size_t d = a.dim();
  const Matrix p = morphism_power(a, sr.s, sr.r);
  const auto ins = insertion_tensors(a, p);
  SystemBuilder sys(a, 2);
  sys.add_commuting(0);
  sys.add_commuting(1);
  const Scalar one = a.field().one();
  const Scalar minus_one = a.field().from_int(-1);
  for (std::size_t flat = 0; flat < a.tuple_count(); ++flat) {
    const IndexTuple t = a.tuple_at(flat);
    sys.add_apply(1, a.structure_at(flat), one);
    for (std::size_t slot = 0; slot < a.arity(); ++slot)
      sys.add_insert(0, t[slot], slot_columns(a, ins[slot], t, slot), minus_one);
    sys.flush();
  }
  Subspace joint = sys.solutions();
  auto coords = first_block(d);
  return {package(a, sr, SpaceKind::QDer, subspace_project(joint, coords)), std::move(joint), 2};
}

WitnessedSpace gder(const Algebra& a, SRIndex sr) {
  const std::size_t n = a.arity();
  const std::size_t d = a.dim();
  const Matrix p = morphism_power(a, sr.s, sr.r);
  const auto ins = insertion_tensors(a, p);
  // blocks: 0 = D, k = D^{(k)} for k = 1..n
  SystemBuilder sys(a, n + 1);
  for (std::size_t b = 0; b <= n; ++b) sys.add_commuting(b);
  const Scalar one = a.field().one();
  const Scalar minus_one = a.field().from_int(-1);
  for (std::size_t flat = 0; flat < a.tuple_count(); ++flat) {
    const IndexTuple t = a.tuple_at(flat);
    sys.add_apply(n, a.structure_at(flat), one);
    sys.add_insert(0, t[0], slot_columns(a, ins[0], t, 0), minus_one);
    for (std::size_t slot = 1; slot < n; ++slot)
      sys.add_insert(slot, t[slot], slot_columns(a, ins[slot], t, slot), minus_one);
    sys.flush();
  }
  Subspace joint = sys.solutions();
  auto coords = first_block(d);
  return {package(a, sr, SpaceKind::GDer, subspace_project(joint, coords)), std::move(joint), n + 1};
}

EndoSubspace centroid(const Algebra& a, SRIndex sr, const SpaceOptions& opts) {
  const Matrix p = morphism_power(a, sr.s, sr.r);
  const auto ins = insertion_tensors(a, p);
  SystemBuilder sys(a, 1);
  if (opts.strict_commuting) sys.add_commuting(0);
  const Scalar one = a.field().one();
  const Scalar minus_one = a.field().from_int(-1);
  for (std::size_t flat = 0; flat < a.tuple_count(); ++flat) {
    const IndexTuple t = a.tuple_at(flat);
    for (std::size_t slot = 0; slot < a.arity(); ++slot) {
      sys.add_apply(0, a.structure_at(flat), one);
      sys.add_insert(0, t[slot], slot_columns(a, ins[slot], t, slot), minus_one);
      sys.flush();
    }
  }
  return package(a, sr, SpaceKind::C, sys.solutions());
}

EndoSubspace qcentroid(const Algebra& a, SRIndex sr, const SpaceOptions& opts) {
  const Matrix p = morphism_power(a, sr.s, sr.r);
  const auto ins = insertion_tensors(a, p);
  SystemBuilder sys(a, 1);
  if (opts.strict_commuting) sys.add_commuting(0);
  const Scalar one = a.field().one();
  const Scalar minus_one = a.field().from_int(-1);
  for (std::size_t flat = 0; flat < a.tuple_count(); ++flat) {
    const IndexTuple t = a.tuple_at(flat);
    const auto first = slot_columns(a, ins[0], t, 0);
    for (std::size_t slot = 1; slot < a.arity(); ++slot) {
      sys.add_insert(0, t[0], first, one);
      sys.add_insert(0, t[slot], slot_columns(a, ins[slot], t, slot), minus_one);
      sys.flush();
    }
  }
  return package(a, sr, SpaceKind::QC, sys.solutions());
}

EndoSubspace zder(const Algebra& a, SRIndex sr, const SpaceOptions& opts) {
  const Matrix p = morphism_power(a, sr.s, sr.r);
  const auto ins = insertion_tensors(a, p);
  SystemBuilder sys(a, 1);
  if (opts.strict_commuting) sys.add_commuting(0);
  const Scalar one = a.field().one();
  for (std::size_t flat = 0; flat < a.tuple_count(); ++flat) {
    const IndexTuple t = a.tuple_at(flat);
    sys.add_apply(0, a.structure_at(flat), one);
    sys.flush();
    for (std::size_t slot = 0; slot < a.arity(); ++slot) {
      sys.add_insert(0, t[slot], slot_columns(a, ins[slot], t, slot), one);
      sys.flush();
    }
  }
  return package(a, sr, SpaceKind::ZDer, sys.solutions());
}

EndoSubspace compute_space(const Algebra& a, SpaceKind kind, SRIndex sr, const SpaceOptions& opts) {
  switch (kind) {
    case SpaceKind::Der: return der(a, sr);
    case SpaceKind::QDer: return qder(a, sr).projected;
    case SpaceKind::GDer: return gder(a, sr).projected;
    case SpaceKind::C: return centroid(a, sr, opts);
    case SpaceKind::QC: return qcentroid(a, sr, opts);
    case SpaceKind::ZDer: return zder(a, sr, opts);
  }
  throw Error(ErrorCode::InvalidParams, "unknown space kind");
}

std::optional<WitnessedMap> WitnessedSpace::witness(const Matrix& d) const {
  const std::size_t dd = projected.algebra_dim * projected.algebra_dim;
  const Field f = joint.field();
  // Columns: the D-blocks of the joint basis; solve for the combination.
  const auto basis = joint.basis_vectors();
  Matrix lhs(f, dd, basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t i = 0; i < dd; ++i) lhs(i, k) = basis[k][i];
  auto coeffs = solve(lhs, d.vectorize());
  if (!coeffs) return std::nullopt;
  Vector combined = zero_vector(f, joint.ambient_dim());
  for (std::size_t k = 0; k < basis.size(); ++k) axpy(combined, (*coeffs)[k], basis[k]);
  const std::size_t n = projected.algebra_dim;
  WitnessedMap out{Matrix::from_vectorized(f, std::span<const Scalar>(combined).subspan(0, dd), n, n), {}};
  for (std::size_t b = 1; b < blocks; ++b)
    out.witnesses.push_back(Matrix::from_vectorized(f, std::span<const Scalar>(combined).subspan(b * dd, dd), n, n));
  return out;
}

std::optional<PowerCycle> power_cycle(const Matrix& m, unsigned limit) {
  std::vector<Matrix> powers{Matrix::identity(m.field(), m.rows())};
  for (unsigned k = 1; k <= limit; ++k) {
    Matrix next = powers.back() * m;
    for (unsigned j = 0; j < powers.size(); ++j)
      if (powers[j] == next) return PowerCycle{j, k - j};
    powers.push_back(std::move(next));
  }
  return std::nullopt;
}

GradedSpace graded_space(const Algebra& a, SpaceKind kind, unsigned s_max, unsigned r_max, const SpaceOptions& opts) {
  GradedSpace g;
  g.kind = kind;
  g.s_max = s_max;
  g.r_max = r_max;
  for (unsigned s = 0; s <= s_max; ++s)
    for (unsigned r = 0; r <= r_max; ++r) g.cells.push_back(compute_space(a, kind, {s, r}, opts));
  g.alpha_cycle = power_cycle(a.alpha());
  g.beta_cycle = power_cycle(a.beta());
  // Spaces depend on (s, r) only through α^s β^r, so a window covering a full
  // cycle in each direction sees every space that occurs.
  g.exhaustive = g.alpha_cycle && g.beta_cycle && s_max + 1 >= g.alpha_cycle->preperiod + g.alpha_cycle->period &&
                 r_max + 1 >= g.beta_cycle->preperiod + g.beta_cycle->period;
  return g;
}

namespace {

bool commutes(const Algebra& a, const Matrix& m) {
  return m * a.alpha() == a.alpha() * m && m * a.beta() == a.beta() * m;
}

std::string tuple_text(const IndexTuple& t) {
  std::string out = "(";
  for (std::size_t k = 0; k < t.size(); ++k) out += (k ? "," : "") + std::to_string(t[k]);
  return out + ")";
}

/// [P e_{t1}, ..., M e_{tp}, ..., P e_{tn}] via bracket_eval.
Vector insert_eval(const Algebra& a, const Matrix& p, const IndexTuple& t, std::size_t slot, const Matrix& m) {
  std::vector<Vector> args(a.arity());
  for (std::size_t k = 0; k < a.arity(); ++k) args[k] = (k == slot ? m : p).column(t[k]);
  return bracket_eval(a, args);
}

Vector plain_eval(const Algebra& a, const IndexTuple& t) {
  std::vector<Vector> args;
  for (std::size_t i : t) args.push_back(unit_vector(a.field(), a.dim(), i));
  return bracket_eval(a, args);
}

}  // namespace

std::optional<std::string> verify_member(const Algebra& a, SpaceKind kind, SRIndex sr, const WitnessedMap& map,
                                         const SpaceOptions& opts) {
  const std::size_t n = a.arity();
  const Matrix p = morphism_power(a, sr.s, sr.r);
  const Matrix& d = map.d;
  const bool need_commuting = kind == SpaceKind::Der || kind == SpaceKind::QDer || kind == SpaceKind::GDer ||
                              opts.strict_commuting;
  if (need_commuting && !commutes(a, d)) return "D does not commute with the twists";
  if (kind == SpaceKind::QDer && map.witnesses.size() != 1) return "QDer membership needs exactly one witness";
  if (kind == SpaceKind::GDer && map.witnesses.size() != n) return "GDer membership needs n witnesses";
  if (kind == SpaceKind::QDer || kind == SpaceKind::GDer)
    for (const auto& w : map.witnesses)
      if (!commutes(a, w)) return "a witness does not commute with the twists";

  std::optional<std::string> failure;
  for_each_tuple(a.dim(), n, [&](const IndexTuple& t) {
    if (failure) return;
    const Vector value = plain_eval(a, t);
    Vector residual = zero_vector(a.field(), a.dim());
    switch (kind) {
      case SpaceKind::Der: {
        residual = d.apply(value);
        for (std::size_t k = 0; k < n; ++k) residual = residual - insert_eval(a, p, t, k, d);
        break;
      }
      case SpaceKind::QDer: {
        residual = map.witnesses[0].apply(value);
        for (std::size_t k = 0; k < n; ++k) residual = residual - insert_eval(a, p, t, k, d);
        break;
      }
      case SpaceKind::GDer: {
        residual = map.witnesses[n - 1].apply(value) - insert_eval(a, p, t, 0, d);
        for (std::size_t k = 1; k < n; ++k) residual = residual - insert_eval(a, p, t, k, map.witnesses[k - 1]);
        break;
      }
      case SpaceKind::C: {
        for (std::size_t k = 0; k < n && is_zero(residual); ++k) residual = d.apply(value) - insert_eval(a, p, t, k, d);
        break;
      }
      case SpaceKind::QC: {
        const Vector first = insert_eval(a, p, t, 0, d);
        for (std::size_t k = 1; k < n && is_zero(residual); ++k) residual = first - insert_eval(a, p, t, k, d);
        break;
      }
      case SpaceKind::ZDer: {
        residual = d.apply(value);
        for (std::size_t k = 0; k < n && is_zero(residual); ++k) residual = insert_eval(a, p, t, k, d);
        break;
      }
    }
    if (!is_zero(residual)) failure = to_string(kind) + " identity fails on basis tuple " + tuple_text(t);
  });
  return failure;
}

}  // namespace nbihom
