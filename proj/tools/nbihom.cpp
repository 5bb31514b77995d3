// Command-line front end. Exit status: 0 all checks pass, 1 a mathematical
// check failed, 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nbihom/constructions.hpp"
#include "nbihom/error.hpp"
#include "nbihom/examples.hpp"
#include "nbihom/io.hpp"
#include "nbihom/spaces.hpp"
#include "nbihom/verifier.hpp"

using namespace nbihom;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

constexpr std::size_t kWitnessCap = 20;

struct Output {
  std::string path;

  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::InvalidParams, "cannot write " + path);
    out << text;
  }
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_input(path));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

void warn_if_large(const Algebra& a) {
  if (a.dim() > 6 || a.arity() > 4)
    std::cerr << "warning: dim " << a.dim() << ", arity " << a.arity()
              << " — basis-tuple enumeration grows as d^(2n-1); expect long runtimes\n";
}

Algebra load(const std::string& path) {
  Algebra a = algebra_from_json(read_json(path));
  warn_if_large(a);
  return a;
}

Field parse_field(const std::string& text) {
  if (text == "Q" || text == "q") return Field::rationals();
  std::uint64_t p = 0;
  try {
    std::size_t used = 0;
    p = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidParams, "field must be Q or a prime, got " + text);
  }
  if (p > 0xffffffffULL) throw Error(ErrorCode::InvalidParams, "modulus too large");
  return Field::prime(static_cast<std::uint32_t>(p));
}

Json axiom_report_json(const AxiomReport& r) {
  Json skew = Json::array();
  for (std::size_t i = 0; i < r.skew_failures.size() && i < kWitnessCap; ++i)
    skew.push_back(Json{{"tuple", r.skew_failures[i].tuple}, {"permutation", r.skew_failures[i].permutation}});
  Json jac = Json::array();
  for (std::size_t i = 0; i < r.jacobi_failures.size() && i < kWitnessCap; ++i)
    jac.push_back(Json{{"x", r.jacobi_failures[i].x}, {"y", r.jacobi_failures[i].y}});
  Json mult = nullptr;
  if (r.multiplicative_witness)
    mult = Json{{"map", r.multiplicative_witness->map}, {"tuple", r.multiplicative_witness->tuple}};
  return Json{{"bihom_lie", r.is_bihom_lie()},
              {"commuting", r.commuting},
              {"skew_failure_count", r.skew_failures.size()},
              {"skew_failures", std::move(skew)},
              {"jacobi_failure_count", r.jacobi_failures.size()},
              {"jacobi_failures", std::move(jac)},
              {"multiplicative", r.multiplicative},
              {"multiplicative_witness", std::move(mult)},
              {"regular", r.regular}};
}

Json cycle_json(const std::optional<PowerCycle>& c) {
  if (!c) return nullptr;
  return Json{{"preperiod", c->preperiod}, {"period", c->period}};
}

Vector parse_tau(const Field& f, const std::string& text, std::size_t dim) {
  Vector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(f.parse(item));
  if (out.size() != dim)
    throw Error(ErrorCode::DimensionMismatch, "tau needs " + std::to_string(dim) + " comma-separated entries");
  return out;
}

Matrix load_matrix(const Field& f, const std::string& path, std::size_t dim) {
  const Json j = read_json(path);
  return matrix_from_json(f, j.is_object() && j.contains("map") ? j["map"] : j, dim, dim);
}

Subspace leading_block(const Field& f, std::size_t dim, std::size_t from, std::size_t to) {
  std::vector<Vector> v;
  for (std::size_t i = from; i < to; ++i) v.push_back(unit_vector(f, dim, i));
  return Subspace::span(f, dim, v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"n-ary BiHom-Lie algebra toolkit: axioms, derivation spaces, constructions, theorem checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("-o,--output", out.path, "Write the result here instead of standard output");

  // verify
  std::string verify_in;
  auto* verify = app.add_subcommand("verify", "Check the BiHom-Lie axioms of an algebra document");
  verify->add_option("file", verify_in, "Algebra document, - for stdin")->required();

  // spaces
  std::string spaces_in, kind_text;
  unsigned smax = 0, rmax = 0;
  bool no_strict_commuting = false, no_strict_all_slots = false;
  auto* spaces = app.add_subcommand("spaces", "Compute derivation-type spaces over an (s, r) window");
  spaces->add_option("file", spaces_in, "Algebra document")->required();
  spaces->add_option("--kind", kind_text, "der|gder|qder|c|qc|zder|center|abcenter")->required();
  spaces->add_option("--smax", smax, "Largest power of alpha");
  spaces->add_option("--rmax", rmax, "Largest power of beta");
  spaces->add_flag("--no-strict-commuting", no_strict_commuting, "Drop D∘α = α∘D, D∘β = β∘D for c, qc, zder");
  spaces->add_flag("--no-strict-all-slots", no_strict_all_slots, "Centers: test u in the first slot only");

  // construct
  auto* construct = app.add_subcommand("construct", "Build a new algebra from an existing one");
  construct->require_subcommand(1);
  construct->fallthrough();
  std::string ti_in, ti_twists;
  auto* twist = construct->add_subcommand("twist-induce", "[x1..xn] -> [αx1, .., αx(n-1), βxn]");
  twist->add_option("file", ti_in, "n-Lie algebra document")->required();
  twist->add_option("--twists", ti_twists, "Document with alpha and beta (default: the input's own twists)");
  std::string de_in, de_map;
  auto* dext = construct->add_subcommand("der-extend", "Binary algebra extended by a map D");
  dext->add_option("file", de_in, "Binary algebra document")->required();
  dext->add_option("--map", de_map, "JSON matrix (rows of scalars) or {\"map\": ...}")->required();
  std::string te_in;
  auto* textend = construct->add_subcommand("t-extend", "The 2d-dimensional t-extension");
  textend->add_option("file", te_in, "Algebra document")->required();
  std::string tau_in, tau_text;
  bool override_trace = false;
  auto* tau = construct->add_subcommand("tau-induce", "(n+1)-ary bracket induced by a twisted trace");
  tau->add_option("file", tau_in, "Algebra document")->required();
  tau->add_option("--tau", tau_text, "Comma-separated covector entries, e.g. 0,1/2,0")->required();
  tau->add_flag("--override-trace", override_trace, "Build even when tau is not a twisted trace");

  // theorems
  std::string th_in;
  unsigned th_smax = 0, th_rmax = 0;
  bool th_no_commuting = false, th_no_slots = false;
  std::optional<std::size_t> split;
  auto* theorems = app.add_subcommand("theorems", "Run the theorem suite; JSON lines plus a summary table");
  theorems->add_option("file", th_in, "Algebra document")->required();
  theorems->add_option("--smax", th_smax, "Largest power of alpha");
  theorems->add_option("--rmax", th_rmax, "Largest power of beta");
  theorems->add_flag("--no-strict-commuting", th_no_commuting);
  theorems->add_flag("--no-strict-all-slots", th_no_slots);
  theorems->add_option("--split", split,
                       "Also check GDer(g) = GDer(I) ⊕ GDer(J) with I = first K coordinates, J = the rest");
  bool empty_window = false;
  theorems->add_flag("--empty-window", empty_window, "Run with no (s, r) cells");

  // example
  std::string ex_name, ex_m = "1", ex_n = "1", ex_field = "Q";
  bool ex_twists = false;
  auto* example = app.add_subcommand("example", "Emit a built-in example document");
  example->add_option("name", ex_name, "example-3lie-dim4 | example-3bihom-dim4 | example-bihom-dim2")->required();
  example->add_option("--m", ex_m, "Parameter m (p/q) of example-bihom-dim2");
  example->add_option("--n", ex_n, "Parameter n (p/q) of example-bihom-dim2");
  example->add_option("--field", ex_field, "Q or a prime p");
  example->add_flag("--with-twists", ex_twists, "example-3lie-dim4: carry the twists used for induction");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) {
      const Algebra a = load(verify_in);
      const AxiomReport r = check_axioms(a);
      out.write(dump(axiom_report_json(r)));
      return r.is_bihom_lie() ? kPass : kFail;
    }

    if (*spaces) {
      const Algebra a = load(spaces_in);
      SpaceOptions opts;
      opts.strict_commuting = !no_strict_commuting;
      opts.strict_all_slots = !no_strict_all_slots;
      if (kind_text == "center" || kind_text == "abcenter") {
        const Subspace s =
            kind_text == "center" ? center(a, opts.strict_all_slots) : ab_center(a, opts.strict_all_slots);
        Json j = subspace_to_json(s);
        j["kind"] = kind_text;
        out.write(dump(j));
        return kPass;
      }
      const GradedSpace g = graded_space(a, parse_space_kind(kind_text), smax, rmax, opts);
      Json cells = Json::array();
      for (const auto& c : g.cells) cells.push_back(space_to_json(c));
      out.write(dump(Json{{"kind", to_string(g.kind)},
                          {"s_max", g.s_max},
                          {"r_max", g.r_max},
                          {"alpha_cycle", cycle_json(g.alpha_cycle)},
                          {"beta_cycle", cycle_json(g.beta_cycle)},
                          {"exhaustive", g.exhaustive},
                          {"cells", std::move(cells)}}));
      return kPass;
    }

    if (*twist) {
      const Algebra seed = load(ti_in);
      Matrix al = seed.alpha(), be = seed.beta();
      if (!ti_twists.empty()) {
        const Json j = read_json(ti_twists);
        if (!j.is_object() || !j.contains("alpha") || !j.contains("beta"))
          throw Error(ErrorCode::ParseError, "twists document needs alpha and beta");
        al = matrix_from_json(seed.field(), j["alpha"], seed.dim(), seed.dim());
        be = matrix_from_json(seed.field(), j["beta"], seed.dim(), seed.dim());
      }
      const AxiomReport lie = check_axioms(seed.with_twists(Matrix::identity(seed.field(), seed.dim()),
                                                            Matrix::identity(seed.field(), seed.dim())));
      if (!lie.is_bihom_lie()) std::cerr << "warning: the input bracket is not an n-Lie bracket\n";
      out.write(dump(algebra_to_json(induce_from_nlie(seed, al, be))));
      return kPass;
    }
    if (*dext) {
      const Algebra a = load(de_in);
      out.write(dump(algebra_to_json(derivation_extension(a, load_matrix(a.field(), de_map, a.dim())))));
      return kPass;
    }
    if (*textend) {
      out.write(dump(t_extension_to_json(t_extension(load(te_in)))));
      return kPass;
    }
    if (*tau) {
      const Algebra a = load(tau_in);
      out.write(dump(algebra_to_json(tau_induce(a, parse_tau(a.field(), tau_text, a.dim()), override_trace))));
      return kPass;
    }

    if (*theorems) {
      const Algebra a = load(th_in);
      SpaceOptions opts;
      opts.strict_commuting = !th_no_commuting;
      opts.strict_all_slots = !th_no_slots;
      const Window w = empty_window ? Window{} : Window::grid(th_smax, th_rmax);
      std::vector<TheoremReport> reports = run_all(a, w, opts);
      if (split && !w.empty()) {
        if (*split > a.dim()) throw Error(ErrorCode::InvalidParams, "--split exceeds the dimension");
        reports.push_back(check_gder_direct_sum(a, leading_block(a.field(), a.dim(), 0, *split),
                                                leading_block(a.field(), a.dim(), *split, a.dim()), w, opts));
      }
      std::string lines;
      for (const auto& r : reports) lines += r.to_json().dump() + "\n";
      out.write(lines);
      std::cerr << summary_table(reports);
      return all_passed(reports) ? kPass : kFail;
    }

    if (*example) {
      const Field f = parse_field(ex_field);
      Algebra a = Algebra::zero(f, 2, 1);
      if (ex_name == "example-3lie-dim4") {
        a = example_3lie_dim4(f);
        if (ex_twists) {
          const Matrix al = example_dim4_alpha(f);
          a = a.with_twists(al, al.scaled(f.from_int(-1)));
        }
      } else if (ex_name == "example-3bihom-dim4") {
        a = example_3bihom_dim4(f);
      } else if (ex_name == "example-bihom-dim2") {
        a = example_bihom_dim2(f.parse(ex_m), f.parse(ex_n));
      } else {
        std::string names;
        for (const auto& n : example_names()) names += " " + n;
        throw Error(ErrorCode::InvalidParams, "unknown example " + ex_name + "; available:" + names);
      }
      out.write(dump(algebra_to_json(a)));
      return kPass;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
