#include "proofforge/cli.hpp"

#include "proofforge/emit.hpp"
#include "proofforge/error.hpp"
#include "proofforge/generators.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

namespace proofforge::cli {

namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io", "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream o(path, std::ios::binary);
  if (!o) throw Error("io", "cannot write " + path);
  o << text;
}

struct Flags {
  std::vector<std::string> files;
  std::string goal, instance, deriver = "auto", format = "json", output;
  std::string measure, bound, bound_encoding = "binary";
  std::size_t max_vertices = 0;
  bool debug = false, witness = false, canonical = false, normalized = false;
  unsigned jobs = 1;
};

// theory + goal + the theory the chosen deriver actually runs on
struct Problem {
  Theory theory;
  Theory working;
  Gci goal;
  DeriverKind kind = DeriverKind::Elk;
  std::optional<InstanceSidecar> sidecar;
};

Budget budget_of(const Flags& f) {
  Budget b = default_budget();
  if (f.max_vertices) b.max_vertices = f.max_vertices;
  return b;
}

std::string sibling_sidecar(const std::string& thy) {
  fs::path p(thy);
  if (p.extension() == ".thy") p.replace_extension(".inst.json");
  else p += ".inst.json";
  return p.string();
}

bool el_only(const Gci& g) { return !g.lhs.mentions_inverse_or_forall() && !g.rhs.mentions_inverse_or_forall(); }

Problem load(const std::string& path, const Flags& f) {
  Problem p;
  p.theory = parse_theory(read_file(path));
  std::string side = f.instance;
  if (side.empty() && f.goal.empty() && fs::exists(sibling_sidecar(path))) side = sibling_sidecar(path);
  if (!side.empty()) p.sidecar = parse_instance_json(read_file(side));

  if (!f.goal.empty()) p.goal = parse_gci(f.goal);
  else if (p.sidecar) p.goal = p.sidecar->goal;
  else throw Error("usage", "no goal: pass --goal or --instance, or put a .inst.json next to the theory");

  std::string d = f.deriver;
  if (d == "auto" && p.sidecar) d = p.sidecar->deriver;
  if (d == "auto") d = p.theory.dialect() == Dialect::EL && el_only(p.goal) ? "elk" : "eli";
  if (d == "elk") {
    p.kind = DeriverKind::Elk;
    p.working = p.theory;
  } else if (d == "eli") {
    p.kind = DeriverKind::Eli;
    p.working = normalize_eli(p.theory).theory;
    if (!is_eli_normal(p.goal) || !p.goal.lhs.name_set())
      throw Error("unsupported-goal", "the eli deriver needs a normalized goal, got " + p.goal.str());
  } else {
    throw Error("usage", "unknown deriver '" + d + "'");
  }
  return p;
}

DerivationStructure materialize(const Problem& p, const Budget& b) {
  return p.kind == DeriverKind::Elk ? elk_materialize(p.working, p.goal, b) : eli_materialize(p.working, p.goal, b);
}

std::string measure_name(const Flags& f, const Problem& p) {
  if (!f.measure.empty()) return f.measure;
  if (p.sidecar) return p.sidecar->measure;
  return "depth";
}

void emit(const Flags& f, const std::string& json, const std::string& dot, std::ostream& out) {
  const std::string& text = f.format == "dot" ? dot : json;
  if (f.output.empty()) out << text;
  else write_file(f.output, text);
}

void check_format(const Flags& f) {
  if (f.format != "json" && f.format != "dot") throw Error("usage", "--format is json or dot");
}

// ---- commands --------------------------------------------------------------

int cmd_parse(const Flags& f, std::ostream& out) {
  Theory t = parse_theory(read_file(f.files.at(0)));
  if (f.normalized) t = normalize_eli(t).theory;
  if (f.canonical || f.normalized) {
    out << print_theory(t);
    return 0;
  }
  out << "ok: " << t.size() << " axioms, dialect " << dialect_name(t.dialect()) << ", "
      << t.concept_names().size() << " concept names, " << t.role_names().size() << " roles\n";
  return 0;
}

int cmd_saturate(const Flags& f, std::ostream& out) {
  check_format(f);
  Problem p = load(f.files.at(0), f);
  auto d = materialize(p, budget_of(f));
  emit(f, structure_json(d), graph_dot(d.graph, d.axiom, d.find(d.goal)), out);
  return 0;
}

int cmd_prove(const Flags& f, std::ostream& out) {
  check_format(f);
  Problem p = load(f.files.at(0), f);
  auto d = materialize(p, budget_of(f));
  const std::string mname = measure_name(f, p);
  SearchResult r;
  std::string weight;
  if (mname == "size") {
    r = brute_force_optimal(d, [](const Proof& q) { return size(q); }, p.goal);
    weight = r.weight.str();
  } else {
    Measure m = measure_by_name(mname);
    r = dijkstra_optimal(d, m, p.goal, DijkstraOptions{f.debug, nullptr});
    const auto& s = r.stats;
    if (s.pop_order_violations || s.double_pops || s.acyclicity_mismatches || s.invalid_intermediate)
      throw Error("invariant", "search invariants failed: pop order " + std::to_string(s.pop_order_violations) +
                                   ", double pops " + std::to_string(s.double_pops) + ", acyclicity " +
                                   std::to_string(s.acyclicity_mismatches) + ", intermediate " +
                                   std::to_string(s.invalid_intermediate));
    weight = m.display(r.weight);
  }
  emit(f, proof_json(r.proof, d.theory), proof_dot(r.proof, d.theory), out);
  out << "weight: " << weight << "\n";
  return 0;
}

struct Verdict {
  int code = 2;
  std::string text;
};

Verdict decide_one(const std::string& path, const Flags& f) {
  Verdict v;
  std::ostringstream o;
  try {
    Problem p = load(path, f);
    const std::string mname = measure_name(f, p);
    Weight q;
    if (!f.bound.empty()) q = Weight::parse(f.bound);
    else if (p.sidecar) q = p.sidecar->threshold;
    else throw Error("usage", "no bound: pass --bound or --instance");
    const Budget b = budget_of(f);

    bool yes = false;
    std::optional<Proof> witness;
    Theory shown = p.working;
    if (mname == "size") {
      auto d = materialize(p, b);
      if (d.find(p.goal)) {
        auto r = brute_force_optimal(d, [](const Proof& x) { return size(x); }, p.goal);
        yes = r.weight <= q;
        if (yes) witness = r.proof;
      }
    } else {
      auto view = lazy_view(p.kind, p.working, p.goal, b);
      DecideOptions opts{f.debug, f.witness};
      Decision dec;
      if (mname == "depth") dec = decide_depth_leq(*view, p.goal, q, opts);
      else if (mname == "logdepth") dec = decide_logdepth_leq(*view, p.goal, q, opts);
      else if (mname == "treesize") dec = decide_treesize_leq(*view, p.goal, q, opts);
      else throw Error("usage", "unknown measure '" + mname + "'");
      yes = dec.yes;
      witness = dec.witness;
      if (f.debug) {
        const auto& s = dec.stats;
        o << "# stats: solve_calls=" << s.solve_calls << " memo_hits=" << s.memo_hits << " steps=" << s.steps
          << " max_s=" << s.max_s << " bound_violations=" << s.bound_violations
          << " tree_violations=" << s.tree_violations << " organization_searches=" << s.organization_searches
          << " unchecked=" << s.unchecked << "\n";
        if (s.bound_violations || s.tree_violations)
          throw Error("invariant", "tuple-set invariants failed on " + path);
      }
    }
    o << (yes ? "yes" : "no") << "\n";
    if (f.witness && yes && witness) o << proof_json(*witness, shown);
    v.code = yes ? 0 : 1;
  } catch (const Error& e) {
    o << "error: " << e.code() << ": " << e.what() << "\n";
    v.code = 2;
  } catch (const std::exception& e) {
    o << "error: internal: " << e.what() << "\n";
    v.code = 2;
  }
  v.text = o.str();
  return v;
}

int cmd_decide(const Flags& f, std::ostream& out, std::ostream& err) {
  std::vector<Verdict> res(f.files.size());
  const unsigned jobs = std::max(1u, std::min<unsigned>(f.jobs, static_cast<unsigned>(f.files.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < f.files.size();) res[i] = decide_one(f.files[i], f);
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  int code = 0;
  const bool many = f.files.size() > 1;
  for (std::size_t i = 0; i < res.size(); ++i) {
    const auto& r = res[i];
    // errors go to stderr, everything else to stdout
    std::istringstream lines(r.text);
    for (std::string line; std::getline(lines, line);) {
      auto& to = line.rfind("error: ", 0) == 0 ? err : out;
      to << (many ? f.files[i] + ": " : "") << line << "\n";
    }
    code = std::max(code, r.code);
  }
  return code;
}

int cmd_gen(const std::string& kind, const Flags& f, const std::vector<std::string>& params, std::ostream& out) {
  if (f.output.empty()) throw Error("usage", "gen needs --out <prefix>");
  auto param = [&](std::size_t i, const char* what) -> const std::string& {
    if (i >= params.size()) throw Error("usage", std::string("gen ") + kind + " needs " + what);
    return params[i];
  };
  ReductionInstance inst;
  if (kind == "chain") {
    Theory t = parse_theory(read_file(param(0, "a theory file")));
    Gci g = parse_gci(param(1, "a goal 'A <= B'"));
    if (!g.lhs.is_name() || !g.rhs.is_name()) throw Error("usage", "chain goals relate two concept names");
    inst = pad_depth_chain(t, g.lhs.name(), g.rhs.name());
  } else if (kind == "deep") {
    std::size_t n = 0;
    try {
      n = std::stoul(param(0, "a counter width"));
    } catch (const std::logic_error&) {
      throw Error("usage", "counter width must be a number");
    }
    auto d = deep_eli_theory(n);
    inst.theory = d.theory;
    inst.goal = d.goal;
    inst.threshold = Weight(std::int64_t(1) << std::min<std::size_t>(n, 62));
    inst.measure = "depth";
    inst.deriver = DeriverKind::Eli;
    inst.meta["note"] = "minimal depth exceeds the threshold";
  } else if (kind == "qbf") {
    const std::string& src = param(0, "a formula or a file");
    inst = qbf_to_eli(parse_qbf(fs::exists(src) ? read_file(src) : src));
  } else if (kind == "tm") {
    auto m = parse_tm(read_file(param(0, "a machine file")));
    inst = tm_to_eli(m, parse_word(m, params.size() > 1 ? params[1] : ""));
  } else {
    throw Error("usage", "gen kinds are chain, deep, qbf, tm");
  }
  const std::string thy = f.output + ".thy", side = f.output + ".inst.json";
  write_file(thy, print_theory(inst.theory));
  write_file(side, instance_json(inst));
  out << thy << "\n" << side << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"optimal proofs for EL/ELI entailments", "proofforge"};
  app.require_subcommand(1);
  Flags f;
  std::string gen_kind;
  std::vector<std::string> gen_params;
  SelftestOptions st;

  auto add_goal = [&](CLI::App* c) {
    c->add_option("--goal", f.goal, "goal sentence, e.g. 'A <= B'");
    c->add_option("--instance", f.instance, "sidecar .inst.json with goal/threshold/measure");
    c->add_option("--deriver", f.deriver, "elk | eli | auto")->check(CLI::IsMember({"elk", "eli", "auto"}));
    c->add_option("--max-vertices", f.max_vertices, "structure size limit");
  };
  auto add_out = [&](CLI::App* c) {
    c->add_option("--format", f.format, "json | dot")->check(CLI::IsMember({"json", "dot"}));
    c->add_option("-o,--out", f.output, "write the document here instead of stdout");
  };

  auto* parse = app.add_subcommand("parse", "check a theory file");
  parse->add_option("theory", f.files)->required()->expected(1);
  parse->add_flag("--canonical", f.canonical, "print the theory in canonical form");
  parse->add_flag("--normalize", f.normalized, "print the normalized theory");

  auto* sat = app.add_subcommand("saturate", "materialize the derivation structure");
  sat->add_option("theory", f.files)->required()->expected(1);
  add_goal(sat);
  add_out(sat);

  auto* prove = app.add_subcommand("prove", "extract an optimal proof");
  prove->add_option("theory", f.files)->required()->expected(1);
  add_goal(prove);
  add_out(prove);
  prove->add_option("--measure", f.measure, "depth | treesize | logdepth | size");
  prove->add_flag("--debug-invariants", f.debug);

  auto* decide = app.add_subcommand("decide", "is there a proof within the bound");
  decide->add_option("theory", f.files, "one or more theory files")->required();
  add_goal(decide);
  decide->add_option("--measure", f.measure, "depth | treesize | logdepth | size");
  decide->add_option("--bound", f.bound, "<num>[/<den>] or a decimal");
  decide->add_option("--bound-encoding", f.bound_encoding, "unary | binary (label only)")
      ->check(CLI::IsMember({"unary", "binary"}));
  decide->add_flag("--witness", f.witness, "print a proof when the answer is yes");
  decide->add_flag("--debug-invariants", f.debug);
  decide->add_option("--jobs", f.jobs, "parallel instances")->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("gen", "write a reduction instance (.thy + .inst.json)");
  gen->add_option("kind", gen_kind, "chain | deep | qbf | tm")->required();
  gen->add_option("params", gen_params,
                  "chain: THEORY GOAL | deep: N | qbf: FORMULA-or-FILE | tm: MACHINE [WORD]");
  gen->add_option("-o,--out", f.output, "output prefix")->required();

  auto* self = app.add_subcommand("selftest", "randomized invariant suites");
  self->add_option("--seed", st.seed);
  self->add_option("--count", st.count);
  self->add_flag("--debug-invariants", st.debug);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*parse) return cmd_parse(f, out);
    if (*sat) return cmd_saturate(f, out);
    if (*prove) return cmd_prove(f, out);
    if (*decide) return cmd_decide(f, out, err);
    if (*gen) return cmd_gen(gen_kind, f, gen_params, out);
    if (*self) return selftest(st, out) == 0 ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.code() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace proofforge::cli
