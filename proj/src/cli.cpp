#include "k5mf/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "k5mf/certify.hpp"
#include "k5mf/colorer.hpp"
#include "k5mf/configs.hpp"
#include "k5mf/decomp.hpp"
#include "k5mf/discharging.hpp"
#include "k5mf/gen_io.hpp"
#include "k5mf/harness.hpp"
#include "k5mf/planarity.hpp"

namespace k5mf::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string in, out, format, lists, witness = "k5mf-witness";
  std::string family = "k5mf", kinds = "all", mode = "dp1", strategy = "uniform";
  std::vector<int> y;
  int lemma = 31, which = 42, n = 30, k = 0, limit = 100, samples = 500;
  std::uint64_t seed = 1, budget = kDefaultMinorBudget;
};

std::string edges_str(const std::vector<Edge>& es) {
  std::string s;
  for (std::size_t i = 0; i < es.size(); ++i)
    s += (i ? "," : "") + std::to_string(es[i].first) + "-" + std::to_string(es[i].second);
  return s.empty() ? "-" : s;
}

std::string ys(const std::vector<int>& y) { return y.empty() ? "-" : harness::join(y, ","); }

std::string binding_str(const ConfigMatch& m) {
  std::string s = to_string(m.kind);
  for (const auto& [role, v] : m.binding) s += " " + role + "=" + std::to_string(v);
  return s;
}

std::string alternator_str(const Alternator& a) {
  return "U=" + harness::join(a.U, ",") + " W=" + harness::join(a.W, ",") + " F=" + edges_str(a.F);
}

GraphFormat parse_format(const std::string& f) {
  if (f == "graph6") return GraphFormat::Graph6;
  if (f == "edgelist") return GraphFormat::Edgelist;
  if (f == "rotfmt") return GraphFormat::Rotfmt;
  throw UsageError("unknown format " + f);
}

GraphFormat input_format(const Options& o) {
  if (!o.format.empty()) return parse_format(o.format);
  auto ends = [&](const char* ext) {
    std::string e(ext);
    return o.in.size() >= e.size() && o.in.compare(o.in.size() - e.size(), e.size(), e) == 0;
  };
  if (ends(".rot")) return GraphFormat::Rotfmt;
  if (ends(".g6")) return GraphFormat::Graph6;
  return GraphFormat::Edgelist;
}

std::unique_ptr<std::istream> open_in(const std::string& path) {
  if (path.empty()) throw UsageError("--in is required");
  auto f = std::make_unique<std::ifstream>(path);
  if (!*f) throw UsageError("cannot open " + path);
  return f;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

Graph read_graph(const Options& o) {
  auto in = open_in(o.in);
  return read_graph_any(*in, input_format(o));
}

PlaneEmbedding read_embedding(const Options& o) {
  if (input_format(o) == GraphFormat::Rotfmt) {
    auto in = open_in(o.in);
    return read_rotfmt(*in);
  }
  auto emb = is_planar(read_graph(o));
  if (!emb) throw UsageError("input graph is not planar");
  return *emb;
}

std::string header(const char* sub, const Options& o, const std::string& extra) {
  std::ostringstream s;
  s << "# k5mf " << sub << " seed=" << o.seed << " budget=" << o.budget;
  if (!o.in.empty()) s << " in=" << o.in;
  if (!extra.empty()) s << ' ' << extra;
  return s.str();
}

// --- gen ---------------------------------------------------------------------

int cmd_gen(const Options& o, std::ostream& out) {
  out << header("gen", o,
                "family=" + o.family +
                    (o.family == "triangulation" || o.family == "k5mf" ? " n=" + std::to_string(o.n) : "") +
                    (o.format.empty() ? "" : " format=" + o.format) +
                    (o.family == "lists" ? " k=" + std::to_string(o.k) + " strategy=" + o.strategy
                                         : ""))
      << '\n';
  std::string text;
  if (o.family == "lists") {
    Graph g = read_graph(o);
    ListStrategy s = o.strategy == "clustered"     ? ListStrategy::Clustered
                     : o.strategy == "exhaustive"  ? ListStrategy::ExhaustiveSmall
                     : o.strategy == "uniform"     ? ListStrategy::UniformRandom
                                                   : throw UsageError("unknown strategy " + o.strategy);
    const int k = o.k > 0 ? o.k : g.max_degree() + 1;
    auto all = adversarial_lists(g, k, s, o.seed, 1);
    if (all.empty()) throw UsageError("no list assignment generated");
    text = write_lists(g, all.front(), k);
  } else {
    std::optional<PlaneEmbedding> emb;
    std::optional<Graph> g;
    std::string note;
    if (o.family == "triangulation") {
      emb = gen_triangulation(o.n, o.seed);
    } else if (o.family == "hub") {
      emb = gen_hub_satellite();
    } else if (o.family == "hub-variant") {
      emb = gen_hub_satellite_variant(o.seed);
    } else if (o.family == "dependents") {
      auto smp = harness::sample_dependents(o.seed);
      emb = smp.emb;
      note = "# y=" + ys(smp.Y) + "\n";
    } else if (o.family == "k5mf") {
      g = gen_k5mf(o.n, o.seed, {.hub_percent = 60});
    } else if (o.family == "wagner") {
      g = wagner_graph();
    } else {
      throw UsageError("unknown family " + o.family);
    }
    std::string fmt = o.format.empty() ? (emb ? "rotfmt" : "edgelist") : o.format;
    const Graph& graph = emb ? emb->graph() : *g;
    switch (parse_format(fmt)) {
      case GraphFormat::Graph6: text = write_graph6(graph) + "\n"; break;
      case GraphFormat::Edgelist: text = write_edgelist(graph); break;
      case GraphFormat::Rotfmt:
        if (!emb) emb = is_planar(*g);
        if (!emb) throw UsageError("graph is not planar; no rotfmt");
        text = write_rotfmt(*emb);
        break;
    }
    out << note;
  }
  if (o.out.empty())
    out << text;
  else
    write_file(o.out, text);
  return kOk;
}

// --- detect ------------------------------------------------------------------

int cmd_detect(const Options& o, std::ostream& out) {
  out << header("detect", o, "y=" + ys(o.y) + " kinds=" + o.kinds + " limit=" + std::to_string(o.limit))
      << '\n';
  std::vector<std::string> kinds;
  if (o.kinds == "all") {
    kinds = {"configs", "cycles", "alternators", "masters"};
  } else {
    std::stringstream ss(o.kinds);
    for (std::string k; std::getline(ss, k, ',');) kinds.push_back(k);
  }
  const bool want_configs = std::find(kinds.begin(), kinds.end(), "configs") != kinds.end();
  for (const auto& k : kinds)
    if (k != "configs" && k != "cycles" && k != "alternators" && k != "masters")
      throw UsageError("unknown kind " + k);

  std::optional<PlaneEmbedding> emb;
  Graph g;
  if (want_configs) {
    emb = read_embedding(o);
    g = emb->graph();
  } else {
    g = read_graph(o);
  }
  for (int v : o.y)
    if (v < 0 || v >= g.vertex_count()) throw UsageError("--y vertex out of range");
  const std::vector<Vertex> Y(o.y.begin(), o.y.end());
  int status = kOk;
  std::string violation;

  for (const auto& kind : kinds) {
    if (kind == "configs") {
      if (Y.empty()) {
        out << "CONFIGS skipped (no --y)\n";
        continue;
      }
      try {
        check_removal_set(*emb, Y);
      } catch (const ConfigError& e) {
        throw UsageError(std::string("invalid --y: ") + e.what());
      }
      auto hyp = harness::lemma31_hypotheses(*emb, Y);
      out << "HYPOTHESES " << (hyp ? "fail " + *hyp : "ok") << " delta=" << g.max_degree() << '\n';
      const auto ctx = DegreeContext::of(g);
      auto matches = find_lemma31_configs(*emb, Y, ctx, static_cast<std::size_t>(o.limit));
      for (const auto& m : matches) {
        auto bad = certify::check_config(*emb, Y, ctx, m);
        out << "CONFIG " << binding_str(m) << " check=" << (bad ? *bad : "ok") << '\n';
        if (bad) violation = "certificate rejected";
      }
      out << "CONFIGS " << matches.size() << '\n';
      if (matches.empty() && !hyp && g.max_degree() >= 8)
        violation = "no configuration although the hypotheses hold";
    } else if (kind == "cycles") {
      auto cycles = find_2alt_cycles(g, static_cast<std::size_t>(o.limit));
      for (const auto& c : cycles) {
        auto bad = certify::check_alternating_cycle(g, c);
        out << "ALTCYCLE " << harness::join(c.vertices) << " check=" << (bad ? *bad : "ok") << '\n';
        if (bad) violation = "certificate rejected";
      }
      out << "ALTCYCLES " << cycles.size() << '\n';
    } else if (kind == "alternators") {
      if (auto a = find_3alternator(g, Y)) {
        auto bad = certify::check_alternator(g, Y, *a);
        out << "ALTERNATOR " << alternator_str(*a) << " check=" << (bad ? *bad : "ok") << '\n';
        if (bad) violation = "certificate rejected";
      } else {
        out << "ALTERNATOR none\n";
      }
    } else {
      auto r = assign_masters(g, Y);
      if (auto* m = std::get_if<MasterAssignment>(&r)) {
        auto bad = certify::check_masters(g, Y, *m);
        std::string pairs;
        for (auto [u, w] : m->pairs) pairs += " " + std::to_string(u) + ">" + std::to_string(w);
        out << "MASTERS total" << pairs << " check=" << (bad ? *bad : "ok") << '\n';
        if (bad) violation = "certificate rejected";
      } else if (auto* a = std::get_if<Alternator>(&r)) {
        auto bad = certify::check_alternator(g, Y, *a);
        out << "MASTERS alternator " << alternator_str(*a) << " check=" << (bad ? *bad : "ok") << '\n';
        if (bad) violation = "certificate rejected";
      } else {
        const auto& b = std::get<AssignmentBlocked>(r);
        out << "MASTERS blocked unassigned=" << harness::join(b.unassigned, ",") << '\n';
      }
    }
  }
  if (!violation.empty()) {
    std::string path = o.witness + (emb ? ".rot" : ".txt");
    write_file(path, emb ? write_rotfmt(*emb) : write_edgelist(g));
    out << "VIOLATION " << violation << '\n';
    out << "WITNESS " << path << " --y " << ys(o.y) << '\n';
    status = kViolation;
  }
  return status;
}

// --- discharge ---------------------------------------------------------------

int cmd_discharge(const Options& o, std::ostream& out) {
  out << header("discharge", o, "lemma=" + std::to_string(o.lemma) + " y=" + ys(o.y)) << '\n';
  if (o.lemma != 31 && o.lemma != 32) throw UsageError("--lemma must be 31 or 32");
  PlaneEmbedding emb = read_embedding(o);
  const std::vector<Vertex> Y(o.y.begin(), o.y.end());
  const ChargeMap initial = initial_charges(emb);
  DischargeResult res;
  if (o.lemma == 31) {
    res = apply_rules_L31(emb, Y, initial);
  } else {
    auto r = assign_masters(emb.graph(), Y);
    if (auto* a = std::get_if<Alternator>(&r)) {
      // the other branch of the dichotomy; nothing to discharge
      out << "MASTERS alternator " << alternator_str(*a) << '\n';
      return kOk;
    }
    if (auto* b = std::get_if<AssignmentBlocked>(&r)) {
      out << "MASTERS blocked unassigned=" << harness::join(b->unassigned, ",") << '\n';
      return kUsage;
    }
    res = apply_rules_L32(emb, Y, std::get<MasterAssignment>(r), initial);
  }
  for (const auto& t : res.ledger)
    out << "MOVE " << t.rule << ' ' << to_string(t.source) << " -> " << to_string(t.target) << ' '
        << to_string(t.amount) << '\n';
  for (const auto& n : res.notes) out << "NOTE " << n << '\n';
  const auto report = charge_report(res.charges);
  for (const auto& [e, c] : report.negatives) out << "NEGATIVE " << to_string(e) << ' ' << to_string(c) << '\n';
  out << "INITIAL " << to_string(initial.total()) << '\n';
  out << format_charges(res.charges);
  if (replay(initial, res.ledger) != res.charges || res.charges.total() != initial.total()) {
    std::string path = o.witness + ".rot";
    write_file(path, write_rotfmt(emb));
    out << "VIOLATION conservation\nWITNESS " << path << " --y " << ys(o.y) << '\n';
    return kViolation;
  }
  return kOk;
}

// --- decompose / minor -------------------------------------------------------

int cmd_decompose(const Options& o, std::ostream& out) {
  out << header("decompose", o, "") << '\n';
  Graph g = read_graph(o);
  auto td = tree_decompose(g, o.budget);
  out << serialize(td);
  if (auto bad = validate_decomposition(g, td)) {
    std::string path = o.witness + ".txt";
    write_file(path, write_edgelist(g));
    out << "INVALID " << *bad << "\nWITNESS " << path << '\n';
    return kViolation;
  }
  out << "VALID bags=" << td.bags.size() << " added=" << td.maximal.edge_count() - g.edge_count() << '\n';
  return kOk;
}

int cmd_minor(const Options& o, std::ostream& out) {
  out << header("minor", o, "") << '\n';
  Graph g = read_graph(o);
  MinorStats stats;
  auto cert = has_k5_minor(g, o.budget, &stats);
  if (!cert) {
    out << "MINOR no\nNODES " << stats.nodes << '\n';
    return kOk;
  }
  out << "MINOR yes\n";
  for (std::size_t i = 0; i < cert->branch_sets.size(); ++i)
    out << "BRANCH " << i << " : " << harness::join(cert->branch_sets[i]) << '\n';
  out << "NODES " << stats.nodes << '\n';
  if (auto bad = check_minor_certificate(g, *cert)) {
    std::string path = o.witness + ".txt";
    write_file(path, write_edgelist(g));
    out << "CERTIFICATE " << *bad << "\nWITNESS " << path << '\n';
    return kViolation;
  }
  out << "CERTIFICATE ok\n";
  return kOk;
}

// --- color -------------------------------------------------------------------

int cmd_color(const Options& o, std::ostream& out) {
  out << header("color", o, "mode=" + o.mode + " lists=" + o.lists) << '\n';
  Graph g = read_graph(o);
  auto lin = open_in(o.lists);
  int k = 0;
  ListAssignment L = read_lists(g, *lin, &k);
  std::optional<EdgeColoring> coloring;
  if (o.mode == "exact") {
    ExactStats stats;
    coloring = exact_list_color(g, L, &stats);
    out << "NODES " << stats.nodes << '\n';
    if (!coloring) {
      out << "UNSAT\n";
      return kOk;
    }
  } else {
    ColorMode mode;
    if (o.mode == "dp1")
      mode = ColorMode::DeltaPlusOne;
    else if (o.mode == "d")
      mode = ColorMode::Delta;
    else
      throw UsageError("--mode must be dp1, d or exact");
    auto res = structured_color(g, L, mode);
    for (const auto& st : res.trace.steps) {
      out << "STEP " << to_string(st.kind) << ' ' << st.method << " removed=" << edges_str(st.removed);
      for (const auto& [e, c] : st.assigned) out << ' ' << e.first << '-' << e.second << '=' << c;
      out << '\n';
    }
    out << "BASE " << res.trace.base.size() << " FALLBACKS " << res.trace.fallbacks << '\n';
    coloring = res.coloring;
    if (!coloring) {
      write_file(o.witness + ".txt", write_edgelist(g));
      write_file(o.witness + ".lists", write_lists(g, L, k));
      out << "VIOLATION no colouring\nWITNESS " << o.witness << ".txt " << o.witness << ".lists\n";
      return kViolation;
    }
  }
  if (!validate_coloring(g, L, *coloring)) {
    out << "VIOLATION invalid colouring\n";
    return kViolation;
  }
  const std::string text = write_coloring(g, *coloring);
  if (o.out.empty())
    out << text;
  else
    write_file(o.out, text);
  out << "VALID\n";
  return kOk;
}

// --- verify-lemma ------------------------------------------------------------

struct SampleResult {
  std::string line;
  bool pass = false;
  bool budget = false;
  std::string witness_ext, witness_text, witness_note;
};

SampleResult verify_31(const PlaneEmbedding& emb, const std::vector<Vertex>& Y) {
  SampleResult r;
  std::ostringstream s;
  s << "n=" << emb.vertex_count() << " y=" << harness::join(Y, ",") << " f0=" << emb.outer_face();
  if (auto hyp = harness::lemma31_hypotheses(emb, Y)) {
    // out of scope rather than a counterexample
    throw UsageError("hypotheses fail: " + *hyp);
  } else {
    const auto ctx = DegreeContext::of(emb.graph());
    auto m = find_lemma31_configs(emb, Y, ctx, 1);
    std::optional<std::string> bad;
    if (!m.empty()) bad = certify::check_config(emb, Y, ctx, m.front());
    r.pass = !m.empty() && !bad;
    r.line = s.str() + (r.pass ? " pass " + binding_str(m.front())
                               : m.empty() ? std::string(" fail no configuration")
                                           : " fail certificate: " + *bad);
  }
  if (!r.pass) {
    r.witness_ext = ".rot";
    r.witness_text = write_rotfmt(emb);
    r.witness_note = " --y " + harness::join(Y, ",");
  }
  return r;
}

SampleResult verify_trichotomy(const Graph& g, int which, std::uint64_t budget) {
  SampleResult r;
  std::ostringstream s;
  s << "n=" << g.vertex_count() << " m=" << g.edge_count() << " delta=" << g.max_degree();
  try {
    Verdict v = which == 42 ? check_trichotomy_L42(g, budget) : check_trichotomy_L43(g);
    r.pass = v.disjunct != Disjunct::FailsAll;
    s << (r.pass ? " pass " : " fail ") << to_string(v.disjunct) << ' ' << v.witness;
  } catch (const DecompError& e) {
    if (e.kind() != DecompError::Kind::BudgetExceeded) throw;
    r.budget = true;
    s << " budget exceeded";
  }
  r.line = s.str();
  if (!r.pass && !r.budget) {
    r.witness_ext = ".txt";
    r.witness_text = write_edgelist(g);
  }
  return r;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const bool single = !o.in.empty();
  out << header("verify-lemma", o,
                "which=" + std::to_string(o.which) +
                    (single ? " y=" + ys(o.y) : " samples=" + std::to_string(o.samples)) +
                    " threads=" + std::to_string(harness::thread_count()))
      << '\n';
  if (o.which != 31 && o.which != 42 && o.which != 43) throw UsageError("--which must be 31, 42 or 43");
  std::vector<SampleResult> results;
  if (single) {
    if (o.which == 31) {
      results.push_back(verify_31(read_embedding(o), std::vector<Vertex>(o.y.begin(), o.y.end())));
    } else {
      Graph g = read_graph(o);
      const int need = o.which == 42 ? 8 : 12;
      if (g.max_degree() < need)
        throw UsageError("maximum degree below " + std::to_string(need));
      results.push_back(verify_trichotomy(g, o.which, o.budget));
    }
  } else {
    if (o.samples < 0) throw UsageError("--samples must be >= 0");
    results.resize(static_cast<std::size_t>(o.samples));
    harness::parallel_for(results.size(), [&](std::size_t i) {
      const auto seed = harness::sample_seed(o.seed, i);
      if (o.which == 31) {
        auto smp = harness::sample_lemma31(seed, i == 0);
        results[i] = verify_31(smp.emb, smp.Y);
      } else {
        results[i] = verify_trichotomy(harness::sample_k5mf(seed, o.which == 42 ? 8 : 12), o.which,
                                       o.budget);
      }
    });
  }
  std::size_t pass = 0, budget = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    out << "SAMPLE " << i << ' ' << r.line << '\n';
    pass += r.pass ? 1 : 0;
    budget += r.budget ? 1 : 0;
    if (!r.witness_text.empty()) {
      std::string path = o.witness + "-" + std::to_string(i) + r.witness_ext;
      write_file(path, r.witness_text);
      out << "WITNESS " << path << r.witness_note << '\n';
    }
  }
  out << pass << '/' << results.size() << " pass\n";
  if (pass + budget < results.size()) return kViolation;
  if (budget > 0) return kBudget;
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"K5-minor-free list edge colouring toolkit", "k5mf"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--in", o.in, "input file");
    sub->add_option("--format", o.format, "graph6, edgelist or rotfmt (default: by extension)")
        ->check(CLI::IsMember({"graph6", "edgelist", "rotfmt"}));
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--budget", o.budget, "minor search node budget");
    sub->add_option("--witness", o.witness, "path prefix for violation witnesses");
  };

  auto* gen = app.add_subcommand("gen", "emit an instance");
  add_common(gen);
  gen->add_option("--family", o.family, "triangulation, hub, hub-variant, dependents, k5mf, wagner, lists");
  gen->add_option("--n", o.n, "vertex count");
  gen->add_option("--k", o.k, "list size for --family lists (default Delta+1)");
  gen->add_option("--strategy", o.strategy, "uniform, clustered or exhaustive");
  gen->add_option("--out", o.out, "output file");

  auto* detect = app.add_subcommand("detect", "configurations, cycles, alternators, masters");
  add_common(detect);
  detect->add_option("--y", o.y, "removal set")->delimiter(',');
  detect->add_option("--kinds", o.kinds, "all or a comma list of configs,cycles,alternators,masters");
  detect->add_option("--limit", o.limit, "maximum matches per kind");

  auto* discharge = app.add_subcommand("discharge", "charge replay and report");
  add_common(discharge);
  discharge->add_option("--lemma", o.lemma, "31 or 32");
  discharge->add_option("--y", o.y, "removal set")->delimiter(',');

  auto* decompose = app.add_subcommand("decompose", "tree decomposition dump");
  add_common(decompose);

  auto* minor = app.add_subcommand("minor", "K5-minor verdict and certificate");
  add_common(minor);

  auto* color = app.add_subcommand("color", "list edge colouring");
  add_common(color);
  color->add_option("--lists", o.lists, "lists file")->required();
  color->add_option("--mode", o.mode, "dp1, d or exact");
  color->add_option("--out", o.out, "colouring output file");

  auto* verify = app.add_subcommand("verify-lemma", "batch harness");
  add_common(verify);
  verify->add_option("--which", o.which, "31, 42 or 43");
  verify->add_option("--samples", o.samples, "sample count");
  verify->add_option("--y", o.y, "removal set for --in with --which 31")->delimiter(',');

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (detect->parsed()) return cmd_detect(o, out);
    if (discharge->parsed()) return cmd_discharge(o, out);
    if (decompose->parsed()) return cmd_decompose(o, out);
    if (minor->parsed()) return cmd_minor(o, out);
    if (color->parsed()) return cmd_color(o, out);
    return cmd_verify(o, out);
  } catch (const DecompError& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == DecompError::Kind::BudgetExceeded ? kBudget : kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::runtime_error& e) {
    // graph, embedding, config, discharge, colour and generator errors
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace k5mf::cli
