#include "cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "qclifford/car.hpp"
#include "qclifford/decomp.hpp"
#include "qclifford/errors.hpp"
#include "qclifford/forms.hpp"
#include "qclifford/reps.hpp"
#include "qclifford/text.hpp"
#include "qclifford/wick.hpp"
#include "spec_file.hpp"

namespace qcl::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct Options {
  bool json = false;
  int max_dim = kDefaultMaxDim;
  unsigned seeds = 32;
  double tol = 1e-9;
  std::uint32_t seed = 0;
  std::vector<std::string> sets;  // name=value parameter overrides
};

ojson texts(const std::vector<Multivector>& v) {
  ojson out = ojson::array();
  for (const auto& u : v) out.push_back(to_text(u));
  return out;
}

ojson index_list(const std::vector<int>& v) {
  ojson out = ojson::array();
  for (int i : v) out.push_back(i);
  return out;
}

// Term-by-term text of a multivector, one entry per blade.
ojson term_texts(const Multivector& u) {
  ojson out = ojson::array();
  for (const auto& [b, c] : u.terms()) out.push_back(to_text(Multivector::blade(u.context(), b, c)));
  return out;
}

std::string join(const ojson& arr) {
  std::string s;
  for (const auto& x : arr) s += (s.empty() ? "" : ", ") + (x.is_string() ? x.get<std::string>() : x.dump());
  return s;
}

int parse_grade(const std::string& text) {
  try {
    std::size_t used = 0;
    const int r = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return r;
  } catch (const std::exception&) {
    throw ParseError("grade must be an integer", 0);
  }
}

class Session {
 public:
  Session(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  void emit(const ojson& doc, const std::string& text) {
    if (opt_.json) out_ << doc.dump(2) << '\n';
    else out_ << text;
  }

  Parameters overrides() const {
    Parameters out;
    for (const auto& s : opt_.sets) {
      const auto eq = s.find('=');
      if (eq == std::string::npos || eq == 0) throw InputError("--set expects name=value, got '" + s + "'");
      out[s.substr(0, eq)] = Scalar::parse_rational(std::string_view(s).substr(eq + 1));
    }
    return out;
  }

  LoadedAlgebra load(const std::string& path, bool gaussian = false) {
    spec_ = load_spec(path);
    return instantiate(spec_, overrides(), opt_.max_dim, gaussian);
  }

  Multivector element(const Algebra& alg, const std::string& text) { return resolve_element(spec_, alg, text); }

  SplitOptions split_options() const {
    SplitOptions s;
    s.seed = opt_.seed;
    s.seeds = opt_.seeds;
    s.tolerance = opt_.tol;
    return s;
  }

  int mul(const std::string& path, const std::string& u, const std::string& v) {
    const Algebra alg = load(path).algebra;
    const Multivector a = element(alg, u), b = element(alg, v);
    const std::string p = to_text(alg.product(a, b));
    emit(ojson{{"left", to_text(a)}, {"right", to_text(b)}, {"product", p}}, p + "\n");
    return kExitOk;
  }

  int table(const std::string& path) {
    const Algebra alg = load(path).algebra;
    const ProductTable& t = alg.table();
    ojson rows = ojson::array();
    std::ostringstream text;
    for (std::uint32_t a = 0; a < alg.basis_size(); ++a)
      for (std::uint32_t b = 0; b < alg.basis_size(); ++b) {
        const std::string l = blade_to_text(Blade(a)), r = blade_to_text(Blade(b));
        const std::string res = to_text(t.product(Blade(a), Blade(b)));
        rows.push_back(ojson{{"left", l}, {"right", r}, {"result", res}});
        text << l << " * " << r << " = " << res << '\n';
      }
    emit(rows, text.str());
    return kExitOk;
  }

  int grade(const std::string& path, const std::string& u, const std::string& r_text) {
    const Algebra alg = load(path).algebra;
    const Multivector x = element(alg, u);
    const int r = parse_grade(r_text);
    const std::string p = to_text(a_grade_project(x, r));
    emit(ojson{{"input", to_text(x)}, {"grade", r}, {"projection", p}}, p + "\n");
    return kExitOk;
  }

  int wick_check(const std::string& path) {
    const Algebra alg = load(path).algebra;
    const WickData data = WickData::build(alg.context());
    std::size_t checked = 0;
    ojson failures = ojson::array();
    for (int i = 1; i <= alg.dim(); ++i)
      for (std::uint32_t b = 0; b < alg.basis_size(); ++b) {
        const WickResiduals r = verify_wick_identities(data.f, alg.e(i), alg.blade(Blade(b)));
        ++checked;
        if (!r.all_zero())
          failures.push_back(ojson{{"x", "e" + std::to_string(i)}, {"u", blade_to_text(Blade(b))},
                                   {"unit", to_text(r.unit)}, {"wedge", to_text(r.wedge)},
                                   {"contraction", to_text(r.contraction)}});
      }
    // The exponential transport from Cl(g) must agree with the dotted basis.
    const ContextPtr classical = symmetric_context(alg.form());
    std::size_t coherence_failures = 0;
    for (std::uint32_t b = 0; b < alg.basis_size(); ++b) {
      const Multivector transported = wick_transport_exponential(Multivector::blade(classical, Blade(b)), alg.context());
      if (transported != data.dotted.dotted_blade(Blade(b))) ++coherence_failures;
    }
    const bool pass = failures.empty() && coherence_failures == 0;
    ojson doc{{"bivector", to_text(data.f)},
              {"exp_bivector", to_text(data.exp_f)},
              {"checked", checked},
              {"identity_failures", failures},
              {"coherence_failures", coherence_failures},
              {"pass", pass}};
    std::ostringstream text;
    text << "F = " << to_text(data.f) << "\n"
         << "e^F = " << to_text(data.exp_f) << "\n"
         << "identities checked on " << checked << " (generator, blade) pairs: "
         << (failures.empty() ? "all residuals zero" : std::to_string(failures.size()) + " failures") << "\n"
         << "dotted basis vs e^F transport: "
         << (coherence_failures == 0 ? "agree" : std::to_string(coherence_failures) + " mismatches") << "\n";
    emit(doc, text.str());
    return pass ? kExitOk : kExitCompute;
  }

  int grading_diff(const std::string& first, const std::string& second) {
    const Algebra a1 = load(first).algebra;
    const Algebra a2 = load(second).algebra;
    const GradingWitness w = grading_witness(a1.context(), a2.context());
    if (w.equal) {
      emit(ojson{{"equal", true}}, "gradings equal\n");
      return kExitOk;
    }
    const std::string p1 = to_text(*w.first_projection), p2 = to_text(*w.second_projection);
    emit(ojson{{"equal", false}, {"blade", blade_to_text(w.blade)}, {"grade", w.grade}, {"first", p1}, {"second", p2}},
         "gradings differ at <" + blade_to_text(w.blade) + ">_" + std::to_string(w.grade) + ": " + p1 + " vs " + p2 +
             "\n");
    return kExitOk;
  }

  int witt(const std::string& path) {
    const Algebra alg = load(path).algebra;
    const WittSplit s = witt_split(alg.form());
    const Signature sig = signature(alg.form());
    ojson doc{{"signature", ojson{{"p", sig.p}, {"q", sig.q}, {"r", sig.r}}},
              {"n", index_list(s.n_indices)},
              {"m", index_list(s.m_indices())},
              {"m_positive", s.m_positive},
              {"m_negative", s.m_negative}};
    emit(doc, "N = {" + join(doc["n"]) + "}, M = {" + join(doc["m"]) + "}\n");
    return kExitOk;
  }

  static ojson map_json(const PeriodicityReport& r) {
    return ojson{{"images", texts(r.map.images)},
                 {"relations", r.left_relations.pass && r.right_relations.pass},
                 {"cross_commute", r.cross_commute},
                 {"span_rank", r.span_rank},
                 {"pass", r.all_pass()}};
  }

  int periodicity(const std::string& path, int p, int q) {
    if (path.empty()) {
      if (p < 1 || q < 1) throw InputError("periodicity needs a spec file or --p and --q");
      const PeriodicityReport r = build_periodicity_map(p, q, opt_.max_dim);
      ojson doc{{"p", p}, {"q", q}};
      doc.update(map_json(r));
      emit(doc, "Cl_{" + std::to_string(p) + "," + std::to_string(q) + "} = Cl_{" + std::to_string(p - 1) + "," +
                    std::to_string(q - 1) + "} (x) Cl_{1,1}: " + (r.all_pass() ? "pass" : "FAIL") + "\n");
      return r.all_pass() ? kExitOk : kExitCompute;
    }
    const Algebra alg = load(path).algebra;
    const Decomposition d = decompose(alg);
    ojson pairs = ojson::array();
    for (const auto& w : d.witness.pairs)
      if (!w.commutator_deviation.is_zero() || !w.anticommutator_residual.is_zero())
        pairs.push_back(ojson{{"n", w.n_index}, {"m", w.m_index}, {"commutator_deviation", to_text(w.commutator_deviation)}});
    ojson coupling = ojson::array();
    for (auto [i, m] : d.g_coupling) coupling.push_back(ojson::array({i, m}));
    ojson doc{{"verdict", verdict_name(d.verdict)},
              {"connecting", term_texts(d.connecting)},
              {"witness_pairs", pairs},
              {"split", ojson{{"n", index_list(d.split.n_indices)}, {"m", index_list(d.split.m_indices())}}},
              {"bivector", to_text(d.bivector)},
              {"g_coupling", coupling},
              {"map", map_json(d.periodicity)}};
    std::ostringstream text;
    text << "verdict: " << verdict_name(d.verdict) << "\n"
         << "N = {" << join(doc["split"]["n"]) << "}, M = {" << join(doc["split"]["m"]) << "}\n"
         << "F = " << to_text(d.bivector) << "\n"
         << "connecting part: " << to_text(d.connecting) << "\n";
    for (const auto& w : pairs)
      text << "commutator deviation at (e" << w["n"] << ", e" << w["m"] << "): "
           << w["commutator_deviation"].get<std::string>() << "\n";
    text << "generator map: " << (d.periodicity.all_pass() ? "pass" : "fails") << "\n";
    emit(doc, text.str());
    return kExitOk;
  }

  int ideal(const std::string& path, const std::string& f_text) {
    const Algebra alg = load(path).algebra;
    const IdealBasis ideal = left_ideal(alg, element(alg, f_text));
    emit(ojson{{"idempotent", to_text(ideal.idempotent)}, {"dimension", ideal.dimension()}, {"basis", texts(ideal.basis)}},
         "dim Cl f = " + std::to_string(ideal.dimension()) + "\n");
    return kExitOk;
  }

  int corner(const std::string& path, const std::string& f_text) {
    const Algebra alg = load(path).algebra;
    const CornerBasis c = peirce_corner(alg, element(alg, f_text));
    emit(ojson{{"idempotent", to_text(c.idempotent)},
               {"dimension", c.dimension()},
               {"primitive", c.primitive()},
               {"basis", texts(c.basis)}},
         "dim f Cl f = " + std::to_string(c.dimension()) + (c.primitive() ? " (primitive)" : "") + "\n");
    return kExitOk;
  }

  int split(const std::string& path, const std::string& f_text, bool recursive) {
    const Algebra alg = load(path).algebra;
    const Multivector f = element(alg, f_text);
    if (recursive) {
      const PrimitiveDecomposition d = primitive_decomposition(alg, f, split_options());
      ojson pieces = ojson::array();
      std::ostringstream text;
      for (const auto& piece : d.pieces) {
        const std::size_t ideal_dim = left_ideal(alg, piece).dimension();
        const std::size_t corner_dim = peirce_corner(alg, piece).dimension();
        pieces.push_back(ojson{{"idempotent", to_text(piece)}, {"ideal_dimension", ideal_dim}, {"corner_dimension", corner_dim}});
        text << to_text(piece) << "  (ideal " << ideal_dim << ", corner " << corner_dim << ")\n";
      }
      text << (d.certified ? "all pieces primitive" : "some pieces not certified primitive") << "\n";
      emit(ojson{{"idempotent", to_text(f)}, {"pieces", pieces}, {"certified", d.certified}}, text.str());
      return kExitOk;
    }
    const SplitResult r = corner_split_search(alg, f, split_options());
    ojson doc{{"outcome", split_outcome_name(r.outcome)},
              {"corner_dimension", r.corner_dimension},
              {"candidates_tried", r.candidates_tried}};
    if (r.outcome == SplitOutcome::Split) {
      ojson poly = ojson::array();
      for (const auto& c : r.minimal_polynomial) poly.push_back(c.to_string());
      doc["f1"] = to_text(*r.f1);
      doc["f2"] = to_text(*r.f2);
      doc["witness"] = to_text(*r.witness);
      doc["minimal_polynomial"] = poly;
    }
    doc["real_split_only"] = r.real_split_only;
    if (r.real_split_only) {
      doc["real_witness"] = to_text(*r.real_witness);
      doc["real_witness_polynomial"] = poly::to_text(r.real_witness_polynomial);
    }
    doc["transcript"] = r.transcript;
    std::string text = std::string("outcome: ") + split_outcome_name(r.outcome) + "\n";
    for (const auto& line : r.transcript) text += "  " + line + "\n";
    emit(doc, text);
    return kExitOk;
  }

  int u2(const std::string& path) {
    const LoadedAlgebra loaded = load(path, true);
    if (!loaded.car) throw InputError("u2 needs a spec file with a car block");
    const CarContext& car = *loaded.car;
    const CarReport car_report = verify_car(car);
    const U2Solution sol = solve_u2_generators(car);
    ojson doc{{"car", car_report.pass}, {"solvable", sol.solvable}};
    std::ostringstream text;
    text << "CAR relations: " << (car_report.pass ? "pass" : "FAIL") << "\n";
    if (sol.solvable) {
      doc["N"] = to_text(*sol.number);
      for (int k = 0; k < 3; ++k) doc["S" + std::to_string(k + 1)] = to_text(*sol.spin[k]);
      doc["number_shift"] = to_text(*sol.number_shift);
      ojson checks = ojson::array();
      for (const auto& c : sol.checks) checks.push_back(ojson{{"relation", c.name}, {"pass", c.pass}});
      doc["checks"] = checks;
      doc["hermitian"] = sol.hermitian;
      doc["pass"] = sol.all_pass();
      text << "N = " << doc["N"].get<std::string>() << "\n";
      for (int k = 1; k <= 3; ++k)
        text << "S" << k << " = " << doc["S" + std::to_string(k)].get<std::string>() << "\n";
      text << "N - sum a_i^dagger a_i = " << doc["number_shift"].get<std::string>() << "\n";
      for (const auto& c : sol.checks) text << (c.pass ? "pass  " : "FAIL  ") << c.name << "\n";
      text << "hermitian: " << (sol.hermitian ? "yes" : "no") << "\n";
    } else {
      text << "relations are inconsistent: no solution in scalars (+) V^V\n";
    }
    emit(doc, text.str());
    return kExitOk;
  }

  int sweep(const std::string& path, const std::string& param, const std::string& from, const std::string& to,
            const std::string& step, const std::string& f_text) {
    const AlgebraSpec spec = load_spec(path);
    spec_ = spec;
    const mpq_class lo = Scalar::parse_rational(from), hi = Scalar::parse_rational(to);
    const mpq_class dx = Scalar::parse_rational(step);
    if (dx <= 0) throw InputError("--step must be positive");
    if (hi < lo) throw InputError("--to must not be below --from");
    if ((hi - lo) / dx > 1000) throw InputError("sweep limited to 1000 points");
    ojson rows = ojson::array();
    std::ostringstream text;
    for (mpq_class v = lo; v <= hi; v += dx) {
      ojson row{{param, rational_to_string(v)}};
      text << param << " = " << rational_to_string(v) << ":";
      try {
        Parameters values = overrides();
        values[param] = v;
        const Algebra alg = instantiate(spec, values, opt_.max_dim).algebra;
        const Signature sig = signature(alg.form());
        row["signature"] = ojson{{"p", sig.p}, {"q", sig.q}, {"r", sig.r}};
        text << " signature (" << sig.p << "," << sig.q << "," << sig.r << ")";
        try {
          const Decomposition d = decompose(alg);
          row["verdict"] = verdict_name(d.verdict);
          row["connecting"] = to_text(d.connecting);
          text << " " << verdict_name(d.verdict);
        } catch (const Error& e) {
          row["verdict"] = nullptr;
          row["verdict_error"] = e.what();
          text << " verdict unavailable (" << e.what() << ")";
        }
        if (!f_text.empty()) {
          const Multivector f = element(alg, f_text);
          const bool idem = is_idempotent(alg, f);
          row["idempotent"] = idem;
          text << (idem ? " idempotent" : " not idempotent");
          if (idem) {
            row["ideal_dimension"] = left_ideal(alg, f).dimension();
            row["corner_dimension"] = peirce_corner(alg, f).dimension();
            text << ", ideal " << row["ideal_dimension"] << ", corner " << row["corner_dimension"];
          }
        }
      } catch (const ComputeError& e) {
        row["error"] = e.what();
        text << " error: " << e.what();
      }
      text << "\n";
      rows.push_back(std::move(row));
    }
    emit(rows, text.str());
    return kExitOk;
  }

 private:
  using Error = std::runtime_error;
  const Options& opt_;
  std::ostream& out_;
  AlgebraSpec spec_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in quantum Clifford algebras Cl(B,V), B = g + A", "qcl"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Machine-readable JSON output");
  app.add_option("--max-dim", opt.max_dim, "Largest accepted dimension")->check(CLI::Range(1, kHardMaxDim));
  app.add_option("--seeds", opt.seeds, "Random candidates in the split search");
  app.add_option("--seed", opt.seed, "Base seed of the split search");
  app.add_option("--set", opt.sets, "Parameter override name=value (repeatable)");
  app.add_option("--tol", opt.tol, "Tolerance of the floating-point split stage")->check(CLI::PositiveNumber);

  std::function<int(Session&)> action;
  std::string spec, spec2, u, v, r, f, param, from, to, step = "1";
  int p = 0, q = 0;
  bool recursive = false;

  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  CLI::App* c = sub("mul", "Clifford product u v");
  c->add_option("spec", spec, "Algebra spec file")->required();
  c->add_option("u", u, "Left factor (text or element name)")->required();
  c->add_option("v", v, "Right factor (text or element name)")->required();
  c->callback([&] { action = [&](Session& s) { return s.mul(spec, u, v); }; });

  c = sub("table", "Blade product table (dimension <= 8)");
  c->add_option("spec", spec, "Algebra spec file")->required();
  c->callback([&] { action = [&](Session& s) { return s.table(spec); }; });

  c = sub("grade", "A-dependent grade projection <u>^A_r");
  c->add_option("spec", spec, "Algebra spec file")->required();
  c->add_option("u", u, "Element")->required();
  c->add_option("r", r, "Grade")->required();
  c->callback([&] { action = [&](Session& s) { return s.grade(spec, u, r); }; });

  c = sub("wick-check", "Exponential identities and transport coherence for all generators and blades");
  c->add_option("spec", spec, "Algebra spec file")->required();
  c->callback([&] { action = [&](Session& s) { return s.wick_check(spec); }; });

  c = sub("grading-diff", "Compare the gradings of two algebras with the same g");
  c->add_option("first", spec, "First spec file")->required();
  c->add_option("second", spec2, "Second spec file")->required();
  c->callback([&] { action = [&](Session& s) { return s.grading_diff(spec, spec2); }; });

  c = sub("witt", "Witt split V = N + M");
  c->add_option("spec", spec, "Algebra spec file")->required();
  c->callback([&] { action = [&](Session& s) { return s.witt(spec); }; });

  c = sub("periodicity", "Tensor decomposition verdict, or the classical map for --p/--q");
  c->add_option("spec", spec, "Algebra spec file");
  c->add_option("--p", p, "Positive directions (without spec)");
  c->add_option("--q", q, "Negative directions (without spec)");
  c->callback([&] { action = [&](Session& s) { return s.periodicity(spec, p, q); }; });

  c = sub("ideal", "Left ideal Cl f");
  c->add_option("spec", spec, "Algebra spec file")->required();
  c->add_option("f", f, "Idempotent")->required();
  c->callback([&] { action = [&](Session& s) { return s.ideal(spec, f); }; });

  c = sub("corner", "Peirce corner f Cl f");
  c->add_option("spec", spec, "Algebra spec file")->required();
  c->add_option("f", f, "Idempotent")->required();
  c->callback([&] { action = [&](Session& s) { return s.corner(spec, f); }; });

  c = sub("split", "Search for an orthogonal splitting of f");
  c->add_option("spec", spec, "Algebra spec file")->required();
  c->add_option("f", f, "Idempotent")->required();
  c->add_flag("--recursive", recursive, "Split down to primitive pieces");
  c->callback([&] { action = [&](Session& s) { return s.split(spec, f, recursive); }; });

  c = sub("u2", "Solve for N and S_k in the index-doubled algebra (ring promoted to Q(i))");
  c->add_option("spec", spec, "Spec file with a car block")->required();
  c->callback([&] { action = [&](Session& s) { return s.u2(spec); }; });

  c = sub("sweep", "Tabulate verdicts and ideal data over a parameter range");
  c->add_option("spec", spec, "Algebra spec file")->required();
  c->add_option("--param", param, "Parameter name")->required();
  c->add_option("--from", from, "First value")->required();
  c->add_option("--to", to, "Last value")->required();
  c->add_option("--step", step, "Increment");
  c->add_option("--element", f, "Idempotent to probe at each value");
  c->callback([&] { action = [&](Session& s) { return s.sweep(spec, param, from, to, step, f); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  Session session(opt, out);
  try {
    return action(session);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ComputeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCompute;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCompute;
  }
}

}  // namespace qcl::cli
