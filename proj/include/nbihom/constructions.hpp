#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nbihom/algebra.hpp"
#include "nbihom/spaces.hpp"

namespace nbihom {

/// [x1, ..., xn]' = [α x1, ..., α x(n-1), β xn], packaged with α and β.
/// The twists of `seed` are ignored. Throws NonCommutingTwists.
[[nodiscard]] Algebra induce_from_nlie(const Algebra& seed, const Matrix& alpha, const Matrix& beta);

/// 𝔤 ⊕ 𝕂D for a binary algebra: the new basis vector e_d stands for D,
/// [u, D] = D(u), [D, ·] = L with L∘α = -D∘β (L = -D when unsolvable),
/// [D, D] = 0, and both twists fix e_d. Throws ArityMismatch.
[[nodiscard]] Algebra derivation_extension(const Algebra& a, const Matrix& d);

struct TExtension {
  Algebra base;
  /// Coordinates [0, d) carry ⊗t, [d, 2d) carry ⊗tⁿ.
  Algebra extended;
  /// 𝔤 = U ⊕ [𝔤, ..., 𝔤].
  Subspace complement_u;
  /// Projection onto [𝔤, ..., 𝔤] along U.
  Matrix projection;
  /// U is α- and β-stable. When no stable complement exists U falls back to
  /// the standard basis vectors at the non-pivot coordinates of the derived
  /// subalgebra and this is false.
  bool u_twist_stable = false;
};

[[nodiscard]] TExtension t_extension(const Algebra& a);

/// φ(D)(a t + u tⁿ + b tⁿ) = D(a) t + D′(b) tⁿ with u ∈ U, b ∈ [𝔤, ..., 𝔤].
[[nodiscard]] Matrix phi_embed(const TExtension& t, const WitnessedMap& w);

struct TraceSpace {
  /// Covectors τ ∈ 𝕂^d.
  Subspace space;
  /// Row spaces of the separate constraint families.
  std::size_t rank_vanishing = 0;
  std::size_t rank_invariance = 0;
  std::size_t rank_bilinear = 0;
  /// The bilinear family adds nothing beyond vanishing + invariance.
  bool bilinear_redundant = false;
  /// The invariance family adds nothing beyond vanishing + bilinear.
  bool invariance_redundant = false;
};

[[nodiscard]] TraceSpace twisted_trace_space(const Algebra& a);

/// φ_τ(x1, ..., x(n+1)) = Σ_i (-1)^{i-1} τ(x_i) [x1, ..., x̂_i, ..., x(n+1)].
/// Throws InvalidTrace when τ is not in twisted_trace_space(a) unless
/// `override_trace` is set.
[[nodiscard]] Algebra tau_induce(const Algebra& a, const Vector& tau, bool override_trace = false);

struct TransferResult {
  bool condition_holds = false;
  bool is_induced_derivation = false;
  std::optional<IndexTuple> condition_witness;
  std::optional<std::string> derivation_witness;
};

/// Evaluates Σ_i (-1)^{i-1} α^sβ^r(τ(D x_i) [x1, ..., x̂_i, ..., x(n+1)]) = 0
/// on all basis (n+1)-tuples and independently whether D is an
/// (α^s, β^r)-derivation of tau_induce(a, τ).
[[nodiscard]] TransferResult derivation_transfer_check(const Algebra& a, const Vector& tau, const Matrix& d,
                                                       SRIndex sr);
/// Same, with der(tau_induce(a, τ), sr) already computed.
[[nodiscard]] TransferResult derivation_transfer_check(const Algebra& a, const Vector& tau, const Matrix& d, SRIndex sr,
                                                       const Algebra& induced, const EndoSubspace& induced_der);

/// Block-diagonal external direct sum of two algebras of the same arity.
[[nodiscard]] Algebra direct_sum(const Algebra& a, const Algebra& b);

/// Restriction of the bracket and twists to an ideal, in the coordinates of
/// its canonical basis. Throws NotAnIdeal.
[[nodiscard]] Algebra restrict_to_ideal(const Algebra& a, const Subspace& ideal);

}  // namespace nbihom
