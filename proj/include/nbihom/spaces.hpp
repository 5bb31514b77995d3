#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nbihom/algebra.hpp"

namespace nbihom {

struct SRIndex {
  unsigned s = 0;
  unsigned r = 0;
  friend bool operator==(const SRIndex&, const SRIndex&) = default;
};

enum class SpaceKind { Der, GDer, QDer, C, QC, ZDer };

[[nodiscard]] std::string to_string(SpaceKind kind);
/// Accepts der, gder, qder, c, qc, zder. Throws InvalidParams otherwise.
[[nodiscard]] SpaceKind parse_space_kind(const std::string& text);

struct SpaceOptions {
  /// Impose D∘α = α∘D and D∘β = β∘D on C, QC and ZDer as well.
  bool strict_commuting = true;
  /// Centers require vanishing with u in every slot (used where the verifier
  /// tests the trivial-center hypothesis).
  bool strict_all_slots = true;
};

/// A subspace of End(𝔤) ≅ 𝕂^{d²}, vectorized row-major.
struct EndoSubspace {
  std::size_t algebra_dim = 0;
  SRIndex sr;
  SpaceKind kind = SpaceKind::Der;
  Subspace space;

  [[nodiscard]] std::size_t dim() const { return space.dim(); }
  [[nodiscard]] std::vector<Matrix> basis_matrices() const;
  [[nodiscard]] bool contains(const Matrix& m) const { return space.contains(m.vectorize()); }
};

/// D together with the D′ of a quasiderivation, or D^{(1)}, ..., D^{(n)} of a
/// generalized derivation.
struct WitnessedMap {
  Matrix d;
  std::vector<Matrix> witnesses;
};

/// The projected space of QDer or GDer together with the joint solution
/// space over (D, witnesses) it was projected from.
struct WitnessedSpace {
  EndoSubspace projected;
  Subspace joint;
  std::size_t blocks = 1;

  /// Some witness family for D, or nullopt when D is not in the space.
  [[nodiscard]] std::optional<WitnessedMap> witness(const Matrix& d) const;
};

/// u with [u, e_{i2}, ..., e_{in}] = 0 for every basis tuple; with
/// strict_all_slots u is tried in every slot, not only the first.
[[nodiscard]] Subspace center(const Algebra& a, bool strict_all_slots = true);
/// u with [u, αβ e_{i2}, ..., αβ e_{in}] = 0, same slot treatment as center.
[[nodiscard]] Subspace ab_center(const Algebra& a, bool strict_all_slots = true);
/// Span of all bracket values.
[[nodiscard]] Subspace derived_subalgebra(const Algebra& a);

[[nodiscard]] EndoSubspace der(const Algebra& a, SRIndex sr);
[[nodiscard]] WitnessedSpace qder(const Algebra& a, SRIndex sr);
[[nodiscard]] WitnessedSpace gder(const Algebra& a, SRIndex sr);
[[nodiscard]] EndoSubspace centroid(const Algebra& a, SRIndex sr, const SpaceOptions& opts = {});
[[nodiscard]] EndoSubspace qcentroid(const Algebra& a, SRIndex sr, const SpaceOptions& opts = {});
[[nodiscard]] EndoSubspace zder(const Algebra& a, SRIndex sr, const SpaceOptions& opts = {});
/// Dispatch on kind; QDer and GDer return the projected space.
[[nodiscard]] EndoSubspace compute_space(const Algebra& a, SpaceKind kind, SRIndex sr, const SpaceOptions& opts = {});

/// Eventual periodicity of the powers M^0, M^1, ...: M^{k+period} = M^k for
/// all k ≥ preperiod.
struct PowerCycle {
  unsigned preperiod = 0;
  unsigned period = 0;
};
/// nullopt when no repetition occurs among the first `limit` powers.
[[nodiscard]] std::optional<PowerCycle> power_cycle(const Matrix& m, unsigned limit = 64);

struct GradedSpace {
  SpaceKind kind = SpaceKind::Der;
  unsigned s_max = 0;
  unsigned r_max = 0;
  /// s-major, then r.
  std::vector<EndoSubspace> cells;
  std::optional<PowerCycle> alpha_cycle;
  std::optional<PowerCycle> beta_cycle;
  /// Every (s, r) outside the window repeats a space inside it.
  bool exhaustive = false;
};

[[nodiscard]] GradedSpace graded_space(const Algebra& a, SpaceKind kind, unsigned s_max, unsigned r_max,
                                       const SpaceOptions& opts = {});

/// Direct re-evaluation of the defining identity through bracket_eval,
/// independent of the system assembly. Returns a description of the first
/// violation, or nullopt. For QDer and GDer the witnesses are required.
[[nodiscard]] std::optional<std::string> verify_member(const Algebra& a, SpaceKind kind, SRIndex sr,
                                                       const WitnessedMap& map, const SpaceOptions& opts = {});

}  // namespace nbihom
