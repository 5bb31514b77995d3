#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "nbihom/algebra.hpp"
#include "nbihom/io.hpp"
#include "nbihom/spaces.hpp"

namespace nbihom {

enum class Outcome { Pass, Fail, Skipped };
[[nodiscard]] std::string to_string(Outcome o);

struct Hypothesis {
  std::string name;
  bool holds = false;
};

struct Claim {
  std::string name;
  bool holds = true;
};

struct TheoremReport {
  std::string id;
  std::vector<Hypothesis> hypotheses;
  Outcome conclusion = Outcome::Pass;
  std::vector<Claim> claims;
  /// Counterexample payload of the first failing claim; null on success.
  Json witness;
  std::vector<std::string> notes;

  [[nodiscard]] Json to_json() const;
};

/// Explicit list of (s, r) cells.
struct Window {
  std::vector<SRIndex> cells;
  static Window grid(unsigned s_max, unsigned r_max);
  [[nodiscard]] bool empty() const { return cells.empty(); }
};

/// Memoizes space computations for one algebra.
class SpaceCache {
 public:
  explicit SpaceCache(Algebra a, SpaceOptions opts = {}) : a_(std::move(a)), opts_(opts) {}
  const EndoSubspace& get(SpaceKind kind, SRIndex sr);
  /// QDer or GDer with its joint space.
  const WitnessedSpace& witnessed(SpaceKind kind, SRIndex sr);
  const AxiomReport& axioms();
  const Subspace& center_space();
  [[nodiscard]] const Algebra& algebra() const { return a_; }
  [[nodiscard]] const SpaceOptions& options() const { return opts_; }

 private:
  Algebra a_;
  SpaceOptions opts_;
  std::map<std::tuple<int, unsigned, unsigned>, EndoSubspace> plain_;
  std::map<std::tuple<int, unsigned, unsigned>, WitnessedSpace> witnessed_;
  std::optional<AxiomReport> axioms_;
  std::optional<Subspace> center_;
};

[[nodiscard]] TheoremReport check_axiom_report(const Algebra& a);
/// [Der, C] ⊆ C and C∘Der ⊆ Der over all pairs of window cells.
[[nodiscard]] TheoremReport check_der_c_lemma(SpaceCache& cache, const Window& w);
/// [QDer, QC] ⊆ QC, C ⊆ QDer, [QC, QC] ⊆ QDer, QDer + QC ⊆ GDer.
[[nodiscard]] TheoremReport check_qder_lemma(SpaceCache& cache, const Window& w);
/// ZDer = Der ∩ C at one cell; skipped when char | n.
[[nodiscard]] TheoremReport check_zder_identity(SpaceCache& cache, SRIndex sr);
/// With trivial center: Der ∩ C = {0}, Der ⊆ QDer and C ⊆ QDer.
[[nodiscard]] TheoremReport check_trivial_center_sum(SpaceCache& cache, const Window& w);
/// GDer(𝔤) = GDer(I) ⊕ GDer(J). Throws NotAnIdeal / NotComplementary.
[[nodiscard]] TheoremReport check_gder_direct_sum(const Algebra& a, const Subspace& i, const Subspace& j,
                                                  const Window& w, const SpaceOptions& opts = {});
/// Der(ğ) = φ(QDer(𝔤)) ⊕ ZDer(ğ) on the t-extension.
[[nodiscard]] TheoremReport check_qder_embedding(SpaceCache& cache, const Window& w);
/// Der ⊆ QDer ⊆ GDer at every cell.
[[nodiscard]] TheoremReport check_tower(SpaceCache& cache, const Window& w);
/// [Der_(s,r), Der_(s',r')] ⊆ Der_(s+s',r+r').
[[nodiscard]] TheoremReport check_der_commutator(SpaceCache& cache, const Window& w);
/// Every basis element of every space satisfies its identity under direct
/// evaluation; QDer/GDer members are checked with sampled witnesses.
[[nodiscard]] TheoremReport check_reverification(SpaceCache& cache, const Window& w);
/// Each τ in the trace space induces an (n+1)-BiHom-Lie algebra, and for
/// each D in Der the transfer condition implies D is an induced derivation.
[[nodiscard]] TheoremReport check_trace_induction(SpaceCache& cache, const Window& w);
/// Binary algebras with invertible α: 𝔤 ⊕ 𝕂D is BiHom-Lie for D ∈ Der.
[[nodiscard]] TheoremReport check_derivation_extension(SpaceCache& cache);

/// Every check above in a fixed order; empty window ⇒ empty report.
[[nodiscard]] std::vector<TheoremReport> run_all(const Algebra& a, const Window& w, const SpaceOptions& opts = {});

/// Aligned text table, one row per report.
[[nodiscard]] std::string summary_table(const std::vector<TheoremReport>& reports);
/// True when no report has conclusion Fail.
[[nodiscard]] bool all_passed(const std::vector<TheoremReport>& reports);

}  // namespace nbihom
