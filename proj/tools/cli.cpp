#include "cli.hpp"

#include "criteria.hpp"

#include "msf/caps.hpp"
#include "msf/constructions.hpp"
#include "msf/error.hpp"
#include "msf/group.hpp"
#include "msf/json.hpp"
#include "msf/loopgraph.hpp"
#include "msf/mis.hpp"
#include "msf/sumfree.hpp"
#include "msf/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace msf::cli {

namespace {

using json::Json;

struct Context {
  RunConfig cfg;
  std::ostream& out;
  std::ostream& err;

  EnumOptions enumeration() const {
    EnumOptions o;
    o.max_nodes = cfg.max_nodes;
    o.max_seconds = cfg.max_seconds;
    o.threads = cfg.threads;
    return o;
  }

  Format format_or(Format fallback) const { return cfg.format == Format::kDefault ? fallback : cfg.format; }

  /// Every JSON document starts with the schema tag, command and seed.
  Json envelope() const { return Json{{"schema", json::kSchema}, {"command", cfg.command}, {"seed", cfg.seed}}; }

  void emit(Json body) const {
    Json j = envelope();
    for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
    out << j.dump() << "\n";
  }
};

void reject_format(const Context& ctx, std::initializer_list<Format> allowed) {
  const Format f = ctx.cfg.format;
  if (f == Format::kDefault) return;
  for (Format a : allowed) {
    if (a == f) return;
  }
  throw InvalidArgument("output format not available for '" + ctx.cfg.command + "'");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string indices_line(const ElementSet& s) {
  std::string line;
  for (std::uint32_t x : s.indices()) line += (line.empty() ? "" : ",") + std::to_string(x);
  return line;
}

GroupSpec require_group(const Context& ctx) {
  if (ctx.cfg.group.empty()) throw InvalidArgument("--group is required for '" + ctx.cfg.command + "'");
  return parse_group(ctx.cfg.group);
}

// ---------------------------------------------------------------------------

int cmd_classify(const Context& ctx) {
  const GroupSpec G = require_group(ctx);
  const GroupType t = classify(G);
  switch (ctx.format_or(Format::kText)) {
    case Format::kJson:
      ctx.emit({{"group", G.to_string()}, {"type", t.to_string()},
                {"p", t.kind == GroupType::Kind::kTypeI ? Json(t.p) : Json(nullptr)}});
      break;
    case Format::kCsv:
      ctx.out << "group,type\n" << G.to_string() << "," << t.to_string() << "\n";
      break;
    default:
      ctx.out << t.to_string() << "\n";
  }
  return kExitOk;
}

void write_counts(const Context& ctx, const std::vector<CountReport>& reports) {
  switch (ctx.format_or(Format::kJson)) {
    case Format::kCsv:
      ctx.out << "group,quantity,value,method" << (ctx.cfg.timings ? ",elapsed_s" : "") << "\n";
      for (const CountReport& r : reports) {
        ctx.out << r.group.to_string() << "," << to_string(r.quantity) << "," << to_decimal(r.value) << ","
                << to_string(r.method);
        if (ctx.cfg.timings) ctx.out << "," << r.elapsed.count();
        ctx.out << "\n";
      }
      break;
    case Format::kText:
      for (const CountReport& r : reports) ctx.out << to_decimal(r.value) << "\n";
      break;
    default:
      for (const CountReport& r : reports) ctx.emit(json::count_report(r, ctx.cfg.timings));
  }
}

int cmd_mu(const Context& ctx, bool brute) {
  const GroupSpec G = require_group(ctx);
  std::vector<CountReport> reports = {mu_report(G)};
  if (brute) reports.push_back(mu_bruteforce(G, ctx.enumeration()));
  write_counts(ctx, reports);
  return reports.size() == 2 && reports[0].value != reports[1].value ? kExitCheckFailed : kExitOk;
}

int cmd_count(const Context& ctx, const std::vector<std::string>& what) {
  const GroupSpec G = require_group(ctx);
  std::vector<CountReport> reports;
  for (const std::string& w : what) reports.push_back(count(G, parse_quantity(w), ctx.enumeration()));
  write_counts(ctx, reports);
  return kExitOk;
}

int cmd_enumerate(const Context& ctx, bool distinct, bool all) {
  reject_format(ctx, {Format::kText, Format::kJson});
  const GroupSpec G = require_group(ctx);
  std::vector<ElementSet> sets;
  const SetVisitor keep = [&](const ElementSet& A) { sets.push_back(A); };
  try {
    if (all) {
      enumerate_sumfree(G, distinct ? Variant::kDistinct : Variant::kSumFree, keep, ctx.enumeration());
    } else if (distinct) {
      enumerate_maximal_distinct_sumfree(G, keep, ctx.enumeration());
    } else {
      enumerate_maximal_sumfree(G, keep, ctx.enumeration());
    }
  } catch (const BudgetExceeded&) {
    for (const ElementSet& A : sets) ctx.err << indices_line(A) << "\n";
    throw;
  }
  if (ctx.format_or(Format::kText) == Format::kJson) {
    Json list = Json::array();
    for (const ElementSet& A : sets) list.push_back(json::element_set(A));
    ctx.emit({{"group", G.to_string()},
              {"variant", distinct ? "distinct" : "sumfree"},
              {"maximal_only", !all},
              {"count", std::to_string(sets.size())},
              {"sets", list}});
  } else {
    for (const ElementSet& A : sets) ctx.out << indices_line(A) << "\n";
  }
  return kExitOk;
}

struct GraphInput {
  std::string group_B;
  std::string group_S;
  bool distinct = false;
};

struct BuiltGraph {
  GroupSpec G;
  ElementSet B;
  ElementSet S;
  LoopGraph g;
};

BuiltGraph build_link_graph(const Context& ctx, const GraphInput& in) {
  const GroupSpec G = require_group(ctx);
  if (in.group_B.empty() || in.group_S.empty()) throw InvalidArgument("--B and --S are required");
  const ElementSet B = parse_element_set(in.group_B, G.order());
  const ElementSet S = parse_element_set(in.group_S, G.order());
  const WarningSink warn = [&](const std::string& w) { ctx.err << "warning: " << w << "\n"; };
  LoopGraph g = in.distinct ? distinct_link_graph(G, S, B, warn) : link_graph(G, S, B, warn);
  return BuiltGraph{G, B, S, std::move(g)};
}

int cmd_linkgraph(const Context& ctx, const GraphInput& in, bool dot, bool adjacency) {
  const auto [G, B, S, g] = build_link_graph(ctx, in);
  if (dot) {
    ctx.out << to_dot(g);
  } else if (adjacency) {
    ctx.out << to_adjacency_text(g);
  } else if (ctx.format_or(Format::kJson) == Format::kText) {
    ctx.out << g.size() << " vertices, " << g.edge_count() << " edges, " << g.loop_count() << " loops\n";
    for (const auto& [label, n] : summarize(g).counts) ctx.out << n << " x " << label << "\n";
  } else {
    reject_format(ctx, {Format::kJson, Format::kText});
    Json body{{"group", G.to_string()}, {"B", json::element_set(B)}, {"S", json::element_set(S)},
              {"distinct", in.distinct}};
    body["graph"] = json::graph_summary(g);
    ctx.emit(body);
  }
  return kExitOk;
}

int cmd_mis(const Context& ctx, const std::string& fixture_name, const std::string& graph_file, const GraphInput& in,
            bool list) {
  reject_format(ctx, {Format::kText, Format::kJson});
  LoopGraph g;
  const int sources = !fixture_name.empty() + !graph_file.empty() + !in.group_B.empty();
  if (sources != 1) throw InvalidArgument("give exactly one of --fixture, --graph or --group/--B/--S");
  if (!fixture_name.empty()) {
    g = fixture(fixture_name);
  } else if (!graph_file.empty()) {
    std::stringstream text;
    if (graph_file == "-") {
      text << std::cin.rdbuf();
    } else {
      std::ifstream f(graph_file);
      if (!f) throw InvalidArgument("cannot read " + graph_file);
      text << f.rdbuf();
    }
    g = parse_adjacency_text(text.str());
  } else {
    g = build_link_graph(ctx, in).g;
  }
  const MisCount m = count_mis(g);
  if (ctx.format_or(Format::kText) == Format::kJson) {
    Json body = json::mis_count(m);
    if (list) {
      Json sets = Json::array();
      for (const auto& s : all_mis(g)) {
        Json labels = Json::array();
        for (std::uint32_t v : s) labels.push_back(g.label(v));
        sets.push_back(labels);
      }
      body["sets"] = sets;
    }
    ctx.emit(body);
  } else {
    ctx.out << to_decimal(m.count) << "\n";
    if (list) {
      for (const auto& s : all_mis(g)) {
        std::string line;
        for (std::uint32_t v : s) line += (line.empty() ? "" : ",") + std::to_string(g.label(v));
        ctx.out << line << "\n";
      }
    }
  }
  return kExitOk;
}

struct ConstructArgs {
  std::string family;
  std::uint32_t k = 0;
  std::uint32_t m = 0;
  std::string K;
};

Json z2_pair_json(const GroupSpec& G, const CosetPair& p) {
  ElementSet S(G.order());
  S.insert(p.s);
  const LoopGraph g = link_graph(G, S, p.B);
  return Json{{"hyperplane", p.hyperplane}, {"B", json::element_set(p.B)}, {"s", p.s},
              {"census", json::census(summarize(g))}, {"mis_exact", to_decimal(mis(g))}};
}

void write_report_text(const Context& ctx, const ConstructionReport& r) {
  ctx.out << to_string(r.family) << " " << r.group.to_string();
  if (!r.case_label.empty()) ctx.out << " [" << r.case_label << "]";
  ctx.out << ": mis " << to_decimal(r.mis_exact) << (r.exact_formula ? " = " : " >= ") << r.predicted.approx_string()
          << (r.match ? " ok" : " MISMATCH") << "\n";
}

int cmd_construct(const Context& ctx, const ConstructArgs& a) {
  reject_format(ctx, {Format::kJson, Format::kText});
  const bool text = ctx.format_or(Format::kJson) == Format::kText;
  const std::optional<GroupSpec> K = a.K.empty() ? std::nullopt : std::optional<GroupSpec>(parse_group(a.K));
  const auto need = [&](std::uint32_t v, const char* flag) {
    if (v == 0) throw InvalidArgument(std::string(flag) + " is required for family " + a.family);
    return v;
  };

  if (a.family == "z2-type3" || a.family == "z3-type3") {
    const bool two = a.family == "z2-type3";
    const std::uint32_t k = need(a.k, "--k");
    const GroupSpec G = GroupSpec::make(std::vector<std::uint32_t>(k, two ? 2 : 3));
    Json pairs = Json::array();
    bool ok = true;
    for (const CosetPair& p : two ? z2_type3_pairs(k) : z3_type3_pairs(k)) {
      if (two) {
        pairs.push_back(z2_pair_json(G, p));
      } else {
        const ConstructionReport r = z3_pair_report(G, p);
        ok = ok && r.match;
        pairs.push_back(json::construction(r));
      }
    }
    const BigInt generated = two ? z2_generated_count(k) : z3_generated_count(k);
    if (text) {
      ctx.out << a.family << " " << G.to_string() << ": " << pairs.size() << " pairs, " << to_decimal(generated)
              << " generated sets\n";
    } else {
      ctx.emit({{"family", a.family}, {"group", G.to_string()}, {"pairs", pairs},
                {"generated", to_decimal(generated)}});
    }
    return ok ? kExitOk : kExitCheckFailed;
  }

  if (a.family == "cyclic-5.1") {
    const std::uint32_t m = need(a.m, "--m");
    const CyclicConstruction c = cyclic_construction(m);
    const ProductLowerBound p = product_lower_bound(m, K);
    const bool ok = c.match && (!p.witness || p.witness->match);
    if (text) {
      ctx.out << "Z" << m << " (" << c.case_label << "): mis " << to_decimal(c.mis_gamma) << ", "
              << to_decimal(c.mis_prime) << ", " << to_decimal(c.mis_rtimes) << "; bound "
              << p.bound.approx_string();
      if (p.witness) ctx.out << ", witness mis " << to_decimal(p.witness->mis_exact);
      ctx.out << (ok ? " ok" : " MISMATCH") << "\n";
    } else {
      Json body = json::cyclic(c);
      body["K"] = K ? Json(K->to_string()) : Json(nullptr);
      body["product_bound"] = json::product_bound(p);
      ctx.emit(body);
    }
    return ok ? kExitOk : kExitCheckFailed;
  }

  const ConstructionReport r = [&] {
    if (a.family == "type3-5.3") return type3_construction(need(a.m, "--m"), K);
    if (a.family == "distinct-6.3") return distinct_construction_63(require_group(ctx));
    if (a.family == "distinct-6.4") return distinct_construction_64(require_group(ctx));
    throw InvalidArgument("unknown family '" + a.family +
                          "' (expected z2-type3, z3-type3, cyclic-5.1, type3-5.3, distinct-6.3, distinct-6.4)");
  }();
  if (text) {
    write_report_text(ctx, r);
  } else {
    ctx.emit(json::construction(r));
  }
  return r.match ? kExitOk : kExitCheckFailed;
}

struct VerifyArgs {
  std::vector<std::string> checks;
  std::uint32_t k = 0;
  std::uint64_t trials = 2000;
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  bool witnesses = false;
};

int cmd_verify(const Context& ctx, const VerifyArgs& a) {
  reject_format(ctx, {Format::kJson, Format::kText, Format::kCsv});
  const Format f = ctx.format_or(Format::kJson);
  VerifyOptions opts;
  opts.enumeration = ctx.enumeration();
  opts.record_witnesses = a.witnesses;
  const auto k_or = [&](std::uint32_t fallback) { return a.k == 0 ? fallback : a.k; };

  if (f == Format::kCsv) ctx.out << "check,group,pass,universe\n";
  bool all_pass = true;
  const auto report = [&](const std::string& check, const std::string& group, bool pass, std::uint64_t universe,
                          Json body) {
    all_pass = all_pass && pass;
    if (f == Format::kCsv) {
      ctx.out << check << "," << csv_field(group) << "," << (pass ? "true" : "false") << "," << universe << "\n";
    } else if (f == Format::kText) {
      ctx.out << (pass ? "PASS " : "FAIL ") << check << " " << group << "\n";
    } else {
      ctx.emit(std::move(body));
    }
  };
  const auto outcome = [&](const VerificationOutcome& v) {
    report(v.check, v.group, v.pass(), v.universe, json::verification(v, ctx.cfg.timings));
  };

  for (const std::string& check : a.checks) {
    if (check == "structure-z2") {
      outcome(verify_structure_z2(k_or(4), opts));
    } else if (check == "structure-z3") {
      outcome(verify_structure_z3(k_or(3), opts));
    } else if (check == "extension-lemma") {
      outcome(verify_extension_lemma(require_group(ctx), a.trials, ctx.cfg.seed, opts));
    } else if (check == "fmax-decomposition") {
      outcome(verify_fmax_decomposition(require_group(ctx), opts));
    } else if (check == "overcount-z2" || check == "overcount-z3") {
      const bool two = check == "overcount-z2";
      const std::uint32_t k = k_or(two ? 4 : 2);
      const OvercountResult r = two ? overcount_z2(k) : overcount_z3(k);
      const std::string group = std::string(two ? "Z2^" : "Z3^") + std::to_string(k);
      Json body{{"check", check}, {"pass", r.holds}};
      body.update(json::overcount(group, r));
      report(check, group, r.holds, r.pair_pairs, body);
    } else if (check == "prop34") {
      if (a.m == 0 || a.n == 0) throw InvalidArgument("prop34 needs --m and --n");
      const Prop34Result r = verify_prop34(a.m, a.n);
      Json body{{"check", check}, {"pass", r.holds}};
      body.update(json::prop34(a.m, a.n, r));
      report(check, "m=" + std::to_string(a.m) + " n=" + std::to_string(a.n), r.holds, 1, body);
    } else {
      throw InvalidArgument("unknown check '" + check +
                            "' (expected structure-z2, structure-z3, extension-lemma, fmax-decomposition, "
                            "overcount-z2, overcount-z3, prop34)");
    }
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_caps(const Context& ctx, unsigned k) {
  reject_format(ctx, {Format::kJson, Format::kText, Format::kCsv});
  const BigInt geometric = count_complete_caps(k);
  const BigInt sumfree = caps_via_sumfree(k);
  const bool agree = geometric == sumfree;
  switch (ctx.format_or(Format::kJson)) {
    case Format::kCsv:
      ctx.out << "k,geometric,sumfree,agree\n"
              << k << "," << to_decimal(geometric) << "," << to_decimal(sumfree) << "," << (agree ? "true" : "false")
              << "\n";
      break;
    case Format::kText:
      ctx.out << "PG(" << k << ",2): " << to_decimal(geometric) << " complete caps, f_max(Z2^" << k + 1
              << ") = " << to_decimal(sumfree) << (agree ? ", agree" : ", DISAGREE") << "\n";
      break;
    default:
      ctx.emit({{"k", k}, {"geometric", to_decimal(geometric)}, {"sumfree", to_decimal(sumfree)}, {"agree", agree}});
  }
  return agree ? kExitOk : kExitCheckFailed;
}

int cmd_report(const Context& ctx, const std::vector<int>& only) {
  reject_format(ctx, {Format::kJson, Format::kText, Format::kCsv});
  const Format f = ctx.format_or(Format::kText);
  if (f == Format::kCsv) ctx.out << "id,name,pass" << (ctx.cfg.timings ? ",seconds" : "") << ",detail\n";
  Json rows = Json::array();
  int failed = 0;
  acceptance::run(std::set<int>(only.begin(), only.end()), [&](const acceptance::CriterionResult& r) {
    if (!r.pass) ++failed;
    if (f == Format::kText) {
      ctx.out << acceptance::format_line(r) << std::endl;
    } else if (f == Format::kCsv) {
      ctx.out << r.id << "," << r.name << "," << (r.pass ? "true" : "false");
      if (ctx.cfg.timings) ctx.out << "," << r.seconds;
      ctx.out << "," << csv_field(r.detail) << std::endl;
    } else {
      Json row{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail},
               {"limit_s", r.limit_seconds}};
      if (ctx.cfg.timings) row["elapsed_s"] = r.seconds;
      rows.push_back(row);
    }
  });
  if (f == Format::kJson) {
    ctx.emit({{"criteria", rows}, {"failed", failed}, {"pass", failed == 0}});
  } else if (f == Format::kText) {
    ctx.out << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  }
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

/// Strict parse of a positive environment value; a malformed one is an error
/// rather than silently ignored.
template <typename T>
void env_override(const char* name, T& target) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  const std::string text(raw);
  std::istringstream in(text);
  T value{};
  if (text.front() == '-' || !(in >> value) || !in.eof() || !(value > 0)) {
    throw InvalidArgument(std::string(name) + "='" + text + "' is not a positive number");
  }
  target = value;
}

void apply_environment(RunConfig& cfg) {
  env_override("MSF_MAX_NODES", cfg.max_nodes);
  env_override("MSF_MAX_SECONDS", cfg.max_seconds);
  env_override("MSF_THREADS", cfg.threads);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal sum-free sets in finite abelian groups"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  app.fallthrough();

  RunConfig cfg;
  try {
    apply_environment(cfg);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::string format;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", cfg.seed, "Seed for randomized checks")->capture_default_str();
  app.add_flag("--timings", cfg.timings, "Include wall-clock timings (output is then not reproducible)");
  app.add_option("--threads", cfg.threads, "Worker threads (env MSF_THREADS)")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  app.add_option("--max-nodes", cfg.max_nodes, "Search node budget (env MSF_MAX_NODES)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-seconds", cfg.max_seconds, "Wall-clock budget per search (env MSF_MAX_SECONDS)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  const auto with_group = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("-g,--group", cfg.group, "Group such as Z2^4, Z9*Z3");
    if (required) o->required();
    return sub;
  };

  auto* classify_cmd = with_group(app.add_subcommand("classify", "Type I(p), II or III"), true);

  bool brute = false;
  auto* mu_cmd = with_group(app.add_subcommand("mu", "Largest sum-free set size"), true);
  mu_cmd->add_flag("--brute", brute, "Also search exhaustively and compare");

  std::vector<std::string> what{"fmax"};
  auto* count_cmd = with_group(app.add_subcommand("count", "Count sum-free sets"), true);
  count_cmd->add_option("--what", what, "f, fmax, fstar, fstar_max, mu, mu_star")->capture_default_str();

  bool distinct = false;
  bool all_sets = false;
  auto* enum_cmd = with_group(app.add_subcommand("enumerate", "List maximal sum-free sets"), true);
  enum_cmd->add_flag("--distinct", distinct, "Distinct-sum-free variant");
  enum_cmd->add_flag("--all", all_sets, "Every sum-free set, not only maximal ones");

  GraphInput graph_in;
  bool dot = false;
  bool adjacency = false;
  auto* link_cmd = with_group(app.add_subcommand("linkgraph", "Build the link graph L_S[B]"), true);
  link_cmd->add_option("--B", graph_in.group_B, "Vertex set, e.g. 4..6")->required();
  link_cmd->add_option("--S", graph_in.group_S, "Connection set, e.g. 1,7")->required();
  link_cmd->add_flag("--distinct", graph_in.distinct, "Distinct-sum-free link graph");
  link_cmd->add_flag("--dot", dot, "Emit Graphviz DOT");
  link_cmd->add_flag("--adjacency", adjacency, "Emit the adjacency-list text format");

  std::string fixture_name;
  std::string graph_file;
  bool list = false;
  auto* mis_cmd = with_group(app.add_subcommand("mis", "Count maximal independent sets"), false);
  mis_cmd->add_option("--fixture", fixture_name, "Catalog graph: " + [] {
    std::string names;
    for (const auto& n : fixture_names()) names += (names.empty() ? "" : ", ") + n;
    return names;
  }());
  mis_cmd->add_option("--graph", graph_file, "Adjacency-list file, '-' for stdin");
  mis_cmd->add_option("--B", graph_in.group_B, "Link graph vertex set (with --group, --S)");
  mis_cmd->add_option("--S", graph_in.group_S, "Link graph connection set");
  mis_cmd->add_flag("--list", list, "Also list every maximal independent set");

  ConstructArgs construct_args;
  auto* construct_cmd = with_group(app.add_subcommand("construct", "Run a lower-bound construction"), false);
  construct_cmd
      ->add_option("--family", construct_args.family,
                   "z2-type3, z3-type3, cyclic-5.1, type3-5.3, distinct-6.3, distinct-6.4")
      ->required();
  construct_cmd->add_option("--k", construct_args.k, "Rank for the elementary abelian families");
  construct_cmd->add_option("--m", construct_args.m, "Cyclic order for cyclic-5.1 and type3-5.3");
  construct_cmd->add_option("--K", construct_args.K, "Complement group K for the lifted bound");

  VerifyArgs verify_args;
  auto* verify_cmd = with_group(app.add_subcommand("verify", "Exhaustive structural checks"), false);
  verify_cmd
      ->add_option("--check", verify_args.checks,
                   "structure-z2, structure-z3, extension-lemma, fmax-decomposition, overcount-z2, "
                   "overcount-z3, prop34")
      ->required();
  verify_cmd->add_option("--k", verify_args.k, "Rank");
  verify_cmd->add_option("--trials", verify_args.trials, "Random trials for extension-lemma")->capture_default_str();
  verify_cmd->add_option("--m", verify_args.m, "prop34: m");
  verify_cmd->add_option("--n", verify_args.n, "prop34: n");
  verify_cmd->add_flag("--witnesses", verify_args.witnesses, "Record coset witnesses");

  unsigned caps_k = 0;
  auto* caps_cmd = app.add_subcommand("caps", "Complete caps in PG(k,2) against f_max(Z2^{k+1})");
  caps_cmd->add_option("--k", caps_k, "Projective dimension")->required()->check(CLI::Range(1u, kCapDimensionLimit - 1));

  std::vector<int> only;
  auto* report_cmd = app.add_subcommand("report", "Run the acceptance criteria");
  report_cmd->add_option("--only", only, "Criterion numbers")->check(CLI::Range(1, 13));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (format == "json") cfg.format = Format::kJson;
  if (format == "csv") cfg.format = Format::kCsv;
  if (format == "text") cfg.format = Format::kText;

  CLI::App* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  Context ctx{cfg, out, err};
  try {
    if (sub == classify_cmd) return cmd_classify(ctx);
    if (sub == mu_cmd) return cmd_mu(ctx, brute);
    if (sub == count_cmd) return cmd_count(ctx, what);
    if (sub == enum_cmd) return cmd_enumerate(ctx, distinct, all_sets);
    if (sub == link_cmd) return cmd_linkgraph(ctx, graph_in, dot, adjacency);
    if (sub == mis_cmd) return cmd_mis(ctx, fixture_name, graph_file, graph_in, list);
    if (sub == construct_cmd) return cmd_construct(ctx, construct_args);
    if (sub == verify_cmd) return cmd_verify(ctx, verify_args);
    if (sub == caps_cmd) return cmd_caps(ctx, caps_k);
    if (sub == report_cmd) return cmd_report(ctx, only);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << " (nodes " << e.nodes() << ", results " << e.items() << ")\n";
    return kExitBudget;
  } catch (const VerificationFailure& e) {
    err << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n" << sub->help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace msf::cli
