#include "nbihom/verifier.hpp"

#include <functional>
#include <iomanip>
#include <sstream>

#include "nbihom/constructions.hpp"
#include "nbihom/error.hpp"

namespace nbihom {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Skipped: return "skipped";
  }
  return "?";
}

Json TheoremReport::to_json() const {
  Json hyps = Json::array();
  for (const auto& h : hypotheses) hyps.push_back(Json{{"name", h.name}, {"holds", h.holds}});
  Json cl = Json::array();
  for (const auto& c : claims) cl.push_back(Json{{"name", c.name}, {"holds", c.holds}});
  return Json{{"theorem_id", id},       {"hypotheses_checked", std::move(hyps)},
              {"conclusion", to_string(conclusion)}, {"claims", std::move(cl)},
              {"witness", witness},     {"notes", notes}};
}

Window Window::grid(unsigned s_max, unsigned r_max) {
  Window w;
  for (unsigned s = 0; s <= s_max; ++s)
    for (unsigned r = 0; r <= r_max; ++r) w.cells.push_back({s, r});
  return w;
}

namespace {

std::tuple<int, unsigned, unsigned> key(SpaceKind kind, SRIndex sr) {
  return {static_cast<int>(kind), sr.s, sr.r};
}

SRIndex operator+(SRIndex a, SRIndex b) { return {a.s + b.s, a.r + b.r}; }

Json sr_json(SRIndex sr) { return Json::array({sr.s, sr.r}); }

/// Collects hypotheses and claims; the first failing claim keeps its witness.
class ReportBuilder {
 public:
  explicit ReportBuilder(std::string id) { report_.id = std::move(id); }

  void hypothesis(const std::string& name, bool holds) { report_.hypotheses.push_back({name, holds}); }
  [[nodiscard]] bool hypotheses_hold() const {
    for (const auto& h : report_.hypotheses)
      if (!h.holds) return false;
    return true;
  }
  void note(std::string text) { report_.notes.push_back(std::move(text)); }

  /// Registers a claim (idempotent by name); `ok=false` marks it failed and
  /// records the witness if it is the first failure.
  void claim(const std::string& name, bool ok, const std::function<Json()>& witness = {}) {
    Claim* c = nullptr;
    for (auto& existing : report_.claims)
      if (existing.name == name) c = &existing;
    if (c == nullptr) {
      report_.claims.push_back({name, true});
      c = &report_.claims.back();
    }
    if (ok) return;
    c->holds = false;
    if (report_.witness.is_null()) {
      report_.witness = witness ? witness() : Json::object();
      report_.witness["claim"] = name;
    }
  }

  TheoremReport finish() {
    if (!hypotheses_hold()) {
      report_.conclusion = Outcome::Skipped;
      report_.claims.clear();
      report_.witness = nullptr;
      return report_;
    }
    report_.conclusion = Outcome::Pass;
    for (const auto& c : report_.claims)
      if (!c.holds) report_.conclusion = Outcome::Fail;
    return report_;
  }

 private:
  TheoremReport report_;
};

Json membership_witness(const Matrix& m, SpaceKind kind, SRIndex sr) {
  return Json{{"map", matrix_to_json(m)}, {"expected_in", to_string(kind)}, {"sr", sr_json(sr)}};
}

bool char_divides(const Algebra& a, std::uint64_t k) { return a.field().divides_characteristic(k); }

}  // namespace

const EndoSubspace& SpaceCache::get(SpaceKind kind, SRIndex sr) {
  if (kind == SpaceKind::QDer || kind == SpaceKind::GDer) return witnessed(kind, sr).projected;
  auto k = key(kind, sr);
  auto it = plain_.find(k);
  if (it == plain_.end()) it = plain_.emplace(k, compute_space(a_, kind, sr, opts_)).first;
  return it->second;
}

const WitnessedSpace& SpaceCache::witnessed(SpaceKind kind, SRIndex sr) {
  if (kind != SpaceKind::QDer && kind != SpaceKind::GDer)
    throw Error(ErrorCode::InvalidParams, "only qder and gder carry witnesses");
  auto k = key(kind, sr);
  auto it = witnessed_.find(k);
  if (it == witnessed_.end()) it = witnessed_.emplace(k, kind == SpaceKind::QDer ? qder(a_, sr) : gder(a_, sr)).first;
  return it->second;
}

const AxiomReport& SpaceCache::axioms() {
  if (!axioms_) axioms_ = check_axioms(a_);
  return *axioms_;
}

const Subspace& SpaceCache::center_space() {
  if (!center_) center_ = center(a_, opts_.strict_all_slots);
  return *center_;
}

TheoremReport check_axiom_report(const Algebra& a) {
  ReportBuilder b("axioms");
  const AxiomReport rep = check_axioms(a);
  b.claim("commuting twists", rep.commuting, [&] {
    return Json{{"alpha_beta", matrix_to_json(a.alpha() * a.beta())},
                {"beta_alpha", matrix_to_json(a.beta() * a.alpha())}};
  });
  b.claim("twisted skew-symmetry", rep.skew_failures.empty(), [&] {
    const auto& w = rep.skew_failures.front();
    return Json{{"tuple", w.tuple}, {"permutation", w.permutation}, {"count", rep.skew_failures.size()}};
  });
  b.claim("twisted Jacobi identity", rep.jacobi_failures.empty(), [&] {
    const auto& w = rep.jacobi_failures.front();
    return Json{{"x", w.x}, {"y", w.y}, {"count", rep.jacobi_failures.size()}};
  });
  b.note(std::string("multiplicative: ") + (rep.multiplicative ? "yes" : "no") +
         ", regular: " + (rep.regular ? "yes" : "no"));
  return b.finish();
}

TheoremReport check_der_c_lemma(SpaceCache& cache, const Window& w) {
  ReportBuilder b("lemma-der-c");
  b.hypothesis("bihom-lie", cache.axioms().is_bihom_lie());
  b.note("C∘Der ⊆ Der is checked as a composition statement, not as a direct sum");
  if (!b.hypotheses_hold()) return b.finish();
  for (SRIndex c1 : w.cells) {
    for (SRIndex c2 : w.cells) {
      const SRIndex sum = c1 + c2;
      const auto ders = cache.get(SpaceKind::Der, c1).basis_matrices();
      const auto cs = cache.get(SpaceKind::C, c2).basis_matrices();
      for (const auto& d : ders) {
        for (const auto& c : cs) {
          const Matrix comm = commutator(d, c);
          b.claim("[Der,C] in C", cache.get(SpaceKind::C, sum).contains(comm),
                  [&] { return membership_witness(comm, SpaceKind::C, sum); });
          const Matrix comp = c * d;
          b.claim("C o Der in Der", cache.get(SpaceKind::Der, sum).contains(comp),
                  [&] { return membership_witness(comp, SpaceKind::Der, sum); });
        }
      }
    }
  }
  b.claim("[Der,C] in C", true);
  b.claim("C o Der in Der", true);
  return b.finish();
}

TheoremReport check_qder_lemma(SpaceCache& cache, const Window& w) {
  ReportBuilder b("lemma-qder");
  b.hypothesis("bihom-lie", cache.axioms().is_bihom_lie());
  b.hypothesis("multiplicative", cache.axioms().multiplicative);
  if (!b.hypotheses_hold()) return b.finish();
  for (SRIndex c1 : w.cells) {
    for (SRIndex c2 : w.cells) {
      const SRIndex sum = c1 + c2;
      for (const auto& q : cache.get(SpaceKind::QDer, c1).basis_matrices()) {
        for (const auto& qc : cache.get(SpaceKind::QC, c2).basis_matrices()) {
          const Matrix comm = commutator(q, qc);
          b.claim("[QDer,QC] in QC", cache.get(SpaceKind::QC, sum).contains(comm),
                  [&] { return membership_witness(comm, SpaceKind::QC, sum); });
        }
      }
      for (const auto& x : cache.get(SpaceKind::QC, c1).basis_matrices()) {
        for (const auto& y : cache.get(SpaceKind::QC, c2).basis_matrices()) {
          const Matrix comm = commutator(x, y);
          b.claim("[QC,QC] in QDer", cache.get(SpaceKind::QDer, sum).contains(comm),
                  [&] { return membership_witness(comm, SpaceKind::QDer, sum); });
        }
      }
    }
  }
  for (SRIndex c : w.cells) {
    for (const auto& m : cache.get(SpaceKind::C, c).basis_matrices())
      b.claim("C in QDer", cache.get(SpaceKind::QDer, c).contains(m),
              [&] { return membership_witness(m, SpaceKind::QDer, c); });
    const Subspace sum = subspace_sum(cache.get(SpaceKind::QDer, c).space, cache.get(SpaceKind::QC, c).space);
    const Subspace& g = cache.get(SpaceKind::GDer, c).space;
    b.claim("QDer+QC in GDer", subspace_leq(sum, g), [&] {
      for (const auto& v : sum.basis_vectors())
        if (!g.contains(v)) {
          const std::size_t d = cache.algebra().dim();
          return membership_witness(Matrix::from_vectorized(g.field(), v, d, d), SpaceKind::GDer, c);
        }
      return Json::object();
    });
  }
  for (const char* name : {"[QDer,QC] in QC", "C in QDer", "[QC,QC] in QDer", "QDer+QC in GDer"}) b.claim(name, true);
  return b.finish();
}

TheoremReport check_zder_identity(SpaceCache& cache, SRIndex sr) {
  const Algebra& a = cache.algebra();
  ReportBuilder b("prop-zder-der-cap-c");
  b.hypothesis("bihom-lie", cache.axioms().is_bihom_lie());
  b.hypothesis("char-coprime-to-n", !char_divides(a, a.arity()));
  if (!b.hypotheses_hold()) return b.finish();
  const Subspace rhs = subspace_intersect(cache.get(SpaceKind::Der, sr).space, cache.get(SpaceKind::C, sr).space);
  const Subspace& lhs = cache.get(SpaceKind::ZDer, sr).space;
  b.claim("ZDer = Der cap C at " + std::to_string(sr.s) + "," + std::to_string(sr.r), lhs == rhs, [&] {
    return Json{{"sr", sr_json(sr)}, {"zder", subspace_to_json(lhs)}, {"der_cap_c", subspace_to_json(rhs)}};
  });
  return b.finish();
}

TheoremReport check_trivial_center_sum(SpaceCache& cache, const Window& w) {
  ReportBuilder b("prop-der-plus-c-in-qder");
  b.hypothesis("bihom-lie", cache.axioms().is_bihom_lie());
  b.hypothesis("trivial-center", cache.center_space().is_zero());
  if (!b.hypotheses_hold()) return b.finish();
  for (SRIndex c : w.cells) {
    const Subspace& der_s = cache.get(SpaceKind::Der, c).space;
    const Subspace& c_s = cache.get(SpaceKind::C, c).space;
    const Subspace& q_s = cache.get(SpaceKind::QDer, c).space;
    const Subspace cap = subspace_intersect(der_s, c_s);
    b.claim("Der cap C = 0", cap.is_zero(), [&] { return Json{{"sr", sr_json(c)}, {"intersection", subspace_to_json(cap)}}; });
    b.claim("Der in QDer", subspace_leq(der_s, q_s), [&] { return Json{{"sr", sr_json(c)}}; });
    b.claim("C in QDer", subspace_leq(c_s, q_s), [&] { return Json{{"sr", sr_json(c)}}; });
  }
  return b.finish();
}

namespace {

/// D restricted to an invariant subspace, in the coordinates of its basis.
Matrix restrict_map(const Matrix& d, const Subspace& s) {
  const auto basis = s.basis_vectors();
  Matrix out(d.field(), s.dim(), s.dim());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Vector c = s.coordinates(d.apply(basis[j]));
    for (std::size_t i = 0; i < basis.size(); ++i) out(i, j) = c[i];
  }
  return out;
}

bool preserves(const Matrix& d, const Subspace& s) {
  for (const auto& v : s.basis_vectors())
    if (!s.contains(d.apply(v))) return false;
  return true;
}

}  // namespace

TheoremReport check_gder_direct_sum(const Algebra& a, const Subspace& i, const Subspace& j, const Window& w,
                                    const SpaceOptions& opts) {
  if (!is_ideal(a, i) || !is_ideal(a, j)) throw Error(ErrorCode::NotAnIdeal, "I and J must both be ideals");
  if (!subspace_intersect(i, j).is_zero() || subspace_sum(i, j).dim() != a.dim())
    throw Error(ErrorCode::NotComplementary, "I and J must be complementary");
  SpaceCache cache(a, opts);
  ReportBuilder b("prop-gder-direct-sum");
  b.hypothesis("bihom-lie", cache.axioms().is_bihom_lie());
  b.hypothesis("regular", cache.axioms().regular);
  b.hypothesis("trivial-center", cache.center_space().is_zero());
  if (!b.hypotheses_hold()) return b.finish();
  std::optional<Algebra> ai, aj;
  if (!i.is_zero()) ai = restrict_to_ideal(a, i);
  if (!j.is_zero()) aj = restrict_to_ideal(a, j);
  for (SRIndex c : w.cells) {
    const EndoSubspace& g = cache.get(SpaceKind::GDer, c);
    const std::size_t di = ai ? gder(*ai, c).projected.dim() : 0;
    const std::size_t dj = aj ? gder(*aj, c).projected.dim() : 0;
    std::optional<EndoSubspace> gi, gj;
    if (ai) gi = gder(*ai, c).projected;
    if (aj) gj = gder(*aj, c).projected;
    for (const auto& d : g.basis_matrices()) {
      const bool inv = preserves(d, i) && preserves(d, j);
      b.claim("GDer preserves I and J", inv, [&] { return membership_witness(d, SpaceKind::GDer, c); });
      if (!inv) continue;
      if (gi) {
        const Matrix r = restrict_map(d, i);
        b.claim("restriction to I in GDer(I)", gi->contains(r), [&] { return membership_witness(r, SpaceKind::GDer, c); });
      }
      if (gj) {
        const Matrix r = restrict_map(d, j);
        b.claim("restriction to J in GDer(J)", gj->contains(r), [&] { return membership_witness(r, SpaceKind::GDer, c); });
      }
    }
    b.claim("dim GDer = dim GDer(I) + dim GDer(J)", g.dim() == di + dj, [&] {
      return Json{{"sr", sr_json(c)}, {"dim", g.dim()}, {"dim_i", di}, {"dim_j", dj}};
    });
  }
  return b.finish();
}

TheoremReport check_qder_embedding(SpaceCache& cache, const Window& w) {
  const Algebra& a = cache.algebra();
  ReportBuilder b("prop-qder-embedding");
  b.hypothesis("bihom-lie", cache.axioms().is_bihom_lie());
  b.hypothesis("multiplicative", cache.axioms().multiplicative);
  b.hypothesis("trivial-center", cache.center_space().is_zero());
  if (!b.hypotheses_hold() || w.empty()) return b.finish();
  const TExtension t = t_extension(a);
  if (!t.u_twist_stable) b.note("no twist-stable complement of the derived subalgebra; U is the coordinate complement");
  SpaceCache ext(t.extended, cache.options());
  const std::size_t dd = 4 * a.dim() * a.dim();
  for (SRIndex c : w.cells) {
    const WitnessedSpace& q = cache.witnessed(SpaceKind::QDer, c);
    const Subspace& der_t = ext.get(SpaceKind::Der, c).space;
    const Subspace& zder_t = ext.get(SpaceKind::ZDer, c).space;
    // Joint vectors with zero D-block give alternative witnesses.
    std::vector<Matrix> witness_shifts;
    const std::size_t d2 = a.dim() * a.dim();
    for (const auto& v : q.joint.basis_vectors()) {
      bool zero_d = true;
      for (std::size_t k = 0; k < d2 && zero_d; ++k) zero_d = v[k].is_zero();
      if (zero_d)
        witness_shifts.push_back(
            Matrix::from_vectorized(a.field(), std::span<const Scalar>(v).subspan(d2, d2), a.dim(), a.dim()));
    }
    std::vector<Vector> image;
    for (const auto& d : q.projected.basis_matrices()) {
      auto wm = q.witness(d);
      b.claim("witness exists", wm.has_value(), [&] { return membership_witness(d, SpaceKind::QDer, c); });
      if (!wm) continue;
      const Matrix phi = phi_embed(t, *wm);
      b.claim("phi(QDer) in Der(t-ext)", der_t.contains(phi.vectorize()),
              [&] { return membership_witness(phi, SpaceKind::Der, c); });
      for (const auto& shift : witness_shifts) {
        WitnessedMap other{wm->d, {wm->witnesses.front() + shift}};
        const Matrix phi2 = phi_embed(t, other);
        b.claim("phi independent of the witness", phi == phi2, [&] {
          return Json{{"phi", matrix_to_json(phi)}, {"phi_other", matrix_to_json(phi2)}, {"sr", sr_json(c)}};
        });
      }
      image.push_back(phi.vectorize());
    }
    const Subspace img = Subspace::span(a.field(), dd, image);
    b.claim("phi injective", img.dim() == q.projected.dim(),
            [&] { return Json{{"sr", sr_json(c)}, {"image_dim", img.dim()}, {"qder_dim", q.projected.dim()}}; });
    b.claim("image + ZDer = Der(t-ext)", subspace_sum(img, zder_t) == der_t, [&] {
      return Json{{"sr", sr_json(c)}, {"image_dim", img.dim()}, {"zder_dim", zder_t.dim()}, {"der_dim", der_t.dim()}};
    });
    b.claim("image cap ZDer = 0", subspace_intersect(img, zder_t).is_zero(), [&] {
      return Json{{"sr", sr_json(c)}, {"intersection", subspace_to_json(subspace_intersect(img, zder_t))}};
    });
    b.note("sr " + std::to_string(c.s) + "," + std::to_string(c.r) + ": dim Der(t-ext)=" + std::to_string(der_t.dim()) +
           ", dim QDer=" + std::to_string(q.projected.dim()) + ", dim ZDer(t-ext)=" + std::to_string(zder_t.dim()));
  }
  return b.finish();
}

TheoremReport check_tower(SpaceCache& cache, const Window& w) {
  ReportBuilder b("remark-der-qder-gder-tower");
  for (SRIndex c : w.cells) {
    const Subspace& d = cache.get(SpaceKind::Der, c).space;
    const Subspace& q = cache.get(SpaceKind::QDer, c).space;
    const Subspace& g = cache.get(SpaceKind::GDer, c).space;
    b.claim("Der in QDer", subspace_leq(d, q), [&] { return Json{{"sr", sr_json(c)}}; });
    b.claim("QDer in GDer", subspace_leq(q, g), [&] { return Json{{"sr", sr_json(c)}}; });
  }
  return b.finish();
}

TheoremReport check_der_commutator(SpaceCache& cache, const Window& w) {
  ReportBuilder b("der-commutator-grading");
  b.hypothesis("commuting", cache.axioms().commuting);
  if (!b.hypotheses_hold()) return b.finish();
  for (SRIndex c1 : w.cells) {
    for (SRIndex c2 : w.cells) {
      const SRIndex sum = c1 + c2;
      for (const auto& x : cache.get(SpaceKind::Der, c1).basis_matrices())
        for (const auto& y : cache.get(SpaceKind::Der, c2).basis_matrices()) {
          const Matrix comm = commutator(x, y);
          b.claim("[Der,Der] graded", cache.get(SpaceKind::Der, sum).contains(comm),
                  [&] { return membership_witness(comm, SpaceKind::Der, sum); });
        }
    }
  }
  return b.finish();
}

TheoremReport check_reverification(SpaceCache& cache, const Window& w) {
  const Algebra& a = cache.algebra();
  ReportBuilder b("spaces-reverification");
  for (SRIndex c : w.cells) {
    for (SpaceKind kind : {SpaceKind::Der, SpaceKind::QDer, SpaceKind::GDer, SpaceKind::C, SpaceKind::QC, SpaceKind::ZDer}) {
      const std::string name = to_string(kind) + " members satisfy their identity";
      for (const auto& m : cache.get(kind, c).basis_matrices()) {
        WitnessedMap wm{m, {}};
        if (kind == SpaceKind::QDer || kind == SpaceKind::GDer) {
          auto sampled = cache.witnessed(kind, c).witness(m);
          b.claim(name, sampled.has_value(), [&] { return membership_witness(m, kind, c); });
          if (!sampled) continue;
          wm = *sampled;
        }
        auto failure = verify_member(a, kind, c, wm, cache.options());
        b.claim(name, !failure, [&] {
          Json j = membership_witness(m, kind, c);
          j["violation"] = *failure;
          return j;
        });
      }
      b.claim(name, true);
    }
  }
  return b.finish();
}

TheoremReport check_trace_induction(SpaceCache& cache, const Window& w) {
  const Algebra& a = cache.algebra();
  ReportBuilder b("thm-trace-induction");
  b.hypothesis("bihom-lie", cache.axioms().is_bihom_lie());
  if (!b.hypotheses_hold()) return b.finish();
  const TraceSpace ts = twisted_trace_space(a);
  b.note("trace space dim " + std::to_string(ts.space.dim()) + "; bilinear condition redundant: " +
         (ts.bilinear_redundant ? "yes" : "no") + "; invariance redundant: " + (ts.invariance_redundant ? "yes" : "no"));
  const auto taus = ts.space.basis_vectors();
  for (const auto& tau : taus) {
    const Algebra induced = tau_induce(a, tau);
    SpaceCache induced_cache(induced, cache.options());
    const AxiomReport rep = check_axioms(induced);
    b.claim("induced (n+1)-ary algebra is BiHom-Lie", rep.is_bihom_lie(), [&] {
      Json j{{"tau", vector_to_json(tau)}};
      if (!rep.skew_failures.empty()) j["skew_tuple"] = rep.skew_failures.front().tuple;
      if (!rep.jacobi_failures.empty()) j["jacobi"] = {rep.jacobi_failures.front().x, rep.jacobi_failures.front().y};
      return j;
    });
    for (SRIndex c : w.cells) {
      for (const auto& d : cache.get(SpaceKind::Der, c).basis_matrices()) {
        const TransferResult res =
            derivation_transfer_check(a, tau, d, c, induced, induced_cache.get(SpaceKind::Der, c));
        b.claim("transfer condition implies induced derivation", !res.condition_holds || res.is_induced_derivation, [&] {
          return Json{{"tau", vector_to_json(tau)}, {"map", matrix_to_json(d)}, {"sr", sr_json(c)},
                      {"violation", res.derivation_witness.value_or("")}};
        });
      }
    }
  }
  b.claim("induced (n+1)-ary algebra is BiHom-Lie", true);
  b.claim("transfer condition implies induced derivation", true);
  return b.finish();
}

TheoremReport check_derivation_extension(SpaceCache& cache) {
  const Algebra& a = cache.algebra();
  ReportBuilder b("prop-derivation-extension");
  b.hypothesis("binary", a.arity() == 2);
  if (a.arity() != 2) return b.finish();
  b.hypothesis("bihom-lie", cache.axioms().is_bihom_lie());
  b.hypothesis("alpha-invertible", is_invertible(a.alpha()));
  if (!b.hypotheses_hold()) return b.finish();
  for (const auto& d : cache.get(SpaceKind::Der, {0, 0}).basis_matrices()) {
    const Algebra ext = derivation_extension(a, d);
    const AxiomReport rep = check_axioms(ext);
    b.claim("extension by a derivation is BiHom-Lie", rep.is_bihom_lie(),
            [&] { return membership_witness(d, SpaceKind::Der, {0, 0}); });
  }
  b.claim("extension by a derivation is BiHom-Lie", true);
  return b.finish();
}

std::vector<TheoremReport> run_all(const Algebra& a, const Window& w, const SpaceOptions& opts) {
  std::vector<TheoremReport> out;
  if (w.empty()) return out;
  SpaceCache cache(a, opts);
  out.push_back(check_axiom_report(a));
  out.push_back(check_tower(cache, w));
  out.push_back(check_der_commutator(cache, w));
  out.push_back(check_reverification(cache, w));
  out.push_back(check_der_c_lemma(cache, w));
  out.push_back(check_qder_lemma(cache, w));
  {
    // one report, every cell
    TheoremReport z;
    bool first = true;
    for (SRIndex c : w.cells) {
      TheoremReport r = check_zder_identity(cache, c);
      if (first) {
        z = r;
        first = false;
        continue;
      }
      for (auto& cl : r.claims) z.claims.push_back(cl);
      if (z.conclusion == Outcome::Pass && r.conclusion == Outcome::Fail) {
        z.conclusion = Outcome::Fail;
        z.witness = r.witness;
      }
    }
    out.push_back(z);
  }
  out.push_back(check_trivial_center_sum(cache, w));
  out.push_back(check_qder_embedding(cache, w));
  out.push_back(check_trace_induction(cache, w));
  out.push_back(check_derivation_extension(cache));
  return out;
}

std::string summary_table(const std::vector<TheoremReport>& reports) {
  std::size_t width = 10;
  for (const auto& r : reports) width = std::max(width, r.id.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width)) << "theorem" << "  " << std::setw(8) << "result"
     << "  claims\n";
  for (const auto& r : reports) {
    std::size_t ok = 0;
    for (const auto& c : r.claims) ok += c.holds ? 1 : 0;
    os << std::setw(static_cast<int>(width)) << r.id << "  " << std::setw(8) << to_string(r.conclusion) << "  " << ok
       << "/" << r.claims.size() << "\n";
  }
  return os.str();
}

bool all_passed(const std::vector<TheoremReport>& reports) {
  for (const auto& r : reports)
    if (r.conclusion == Outcome::Fail) return false;
  return true;
}

}  // namespace nbihom
