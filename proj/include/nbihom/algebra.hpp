#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nbihom/linalg.hpp"

namespace nbihom {

using IndexTuple = std::vector<std::size_t>;

/// A finite-dimensional n-ary algebra with two twisting maps, stored by its
/// structure constants.
///
/// The bracket of every basis tuple (i1, ..., in) in [0, d)^n is kept, with no
/// symmetry normalization: BiHom skew-symmetry relates twisted slots, not raw
/// ones. The type imposes no axioms; the check_* functions diagnose them.
class Algebra {
 public:
  /// Zero bracket with the given twists. Throws InvalidAlgebra for arity < 2
  /// or dim < 1 and DimensionMismatch / FieldMismatch for ill-shaped twists.
  Algebra(const Field& field, std::size_t arity, std::size_t dim, Matrix alpha, Matrix beta);
  /// Zero bracket, identity twists.
  static Algebra zero(const Field& field, std::size_t arity, std::size_t dim);

  [[nodiscard]] const Field& field() const { return field_; }
  [[nodiscard]] std::size_t arity() const { return arity_; }
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const Matrix& alpha() const { return alpha_; }
  [[nodiscard]] const Matrix& beta() const { return beta_; }

  /// Number of basis tuples, d^n.
  [[nodiscard]] std::size_t tuple_count() const { return tensor_.size(); }
  [[nodiscard]] std::size_t flat_index(std::span<const std::size_t> args) const;
  [[nodiscard]] IndexTuple tuple_at(std::size_t flat) const;

  /// Bracket of basis vectors, [e_{i1}, ..., e_{in}].
  [[nodiscard]] const Vector& structure(std::span<const std::size_t> args) const;
  [[nodiscard]] const Vector& structure_at(std::size_t flat) const { return tensor_[flat]; }
  void set_structure(std::span<const std::size_t> args, Vector value);

  /// Same bracket, different twists.
  [[nodiscard]] Algebra with_twists(Matrix alpha, Matrix beta) const;

  friend bool operator==(const Algebra& a, const Algebra& b);

 private:
  Field field_;
  std::size_t arity_;
  std::size_t dim_;
  Matrix alpha_;
  Matrix beta_;
  std::vector<Vector> tensor_;  // indexed by flat_index
};

/// Calls `fn` for every tuple in [0, d)^k in lexicographic order.
void for_each_tuple(std::size_t d, std::size_t k, const std::function<void(const IndexTuple&)>& fn);

/// Full multilinear expansion of [x1, ..., xn]. Throws DimensionMismatch.
[[nodiscard]] Vector bracket_eval(const Algebra& a, std::span<const Vector> args);

/// α^s β^r
[[nodiscard]] Matrix morphism_power(const Algebra& a, unsigned s, unsigned r);

struct SkewWitness {
  IndexTuple tuple;
  /// σ as the list (σ(1), ..., σ(n)), zero-based.
  std::vector<std::size_t> permutation;
};

struct JacobiWitness {
  IndexTuple x;  // n-1 basis indices
  IndexTuple y;  // n basis indices
};

struct MorphismWitness {
  std::string map;  // "alpha" or "beta"
  IndexTuple tuple;
};

struct AxiomReport {
  bool commuting = false;
  std::vector<SkewWitness> skew_failures;
  std::vector<JacobiWitness> jacobi_failures;
  bool multiplicative = false;
  std::optional<MorphismWitness> multiplicative_witness;
  bool regular = false;

  /// The three defining conditions (commuting twists, twisted skew-symmetry,
  /// twisted Jacobi); multiplicativity and regularity are extra properties.
  [[nodiscard]] bool is_bihom_lie() const {
    return commuting && skew_failures.empty() && jacobi_failures.empty();
  }
};

[[nodiscard]] bool check_commuting(const Algebra& a);
/// [β e_{i1}, ..., β e_{i(n-1)}, α e_{in}] = sgn(σ)·(permuted) for every basis
/// tuple and every σ ∈ S_n; returns all failures.
[[nodiscard]] std::vector<SkewWitness> check_bihom_skew(const Algebra& a);
/// The n-ary twisted Jacobi identity on all d^(2n-1) basis instances.
[[nodiscard]] std::vector<JacobiWitness> check_bihom_jacobi(const Algebra& a);
/// α and β are bracket morphisms; the witness names the first failure.
[[nodiscard]] std::optional<MorphismWitness> check_multiplicative(const Algebra& a);
/// Multiplicative and both twists invertible.
[[nodiscard]] bool check_regular(const Algebra& a);
[[nodiscard]] AxiomReport check_axioms(const Algebra& a);

/// α(S) ⊆ S, β(S) ⊆ S and [S, ..., S] ⊆ S.
[[nodiscard]] bool is_subalgebra(const Algebra& a, const Subspace& s);
/// α(S) ⊆ S, β(S) ⊆ S and brackets with n-1 arguments from S and one from the
/// whole algebra land in S, with the free argument tried in every slot.
[[nodiscard]] bool is_ideal(const Algebra& a, const Subspace& s);

/// Sign of a permutation given as a list of images.
[[nodiscard]] int permutation_sign(std::span<const std::size_t> perm);

}  // namespace nbihom
