// Command line front end: construct the monoid of a mixed graph, enumerate
// it, build representations, classify small graphs, and run the
// verification suite.
//
// Exit codes: 0 success / all checks pass, 1 a check failed, 2 usage or
// parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hk/combinat.hpp"
#include "hk/hecke_a.hpp"
#include "hk/mixed_graph.hpp"
#include "hk/monoid.hpp"
#include "hk/reps.hpp"
#include "hk/rewrite.hpp"
#include "hk/verify.hpp"

namespace {

using namespace hk;

struct Budgets {
  size_t max_rules = 20000;
  size_t max_len = 64;
  size_t max_elements = 200000;
};

double env_budget_scale() {
  const char* s = std::getenv("HK_BUDGET_SCALE");
  if (!s) return 1.0;
  try {
    double v = std::stod(s);
    return v > 0 ? v : 1.0;
  } catch (const std::exception&) {
    return 1.0;
  }
}

MixedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

void emit(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream out(out_file);
    out << text;
  }
}

struct EngineResult {
  bool finite = false;
  bool certified_infinite = false;
  std::string engine;
  std::optional<FiniteMonoid> monoid;
  std::optional<EnumerationResult> er;  // rewrite engine only
  int n = 0;
};

EngineResult run_engine(const MixedGraph& g, std::string engine, const Budgets& b) {
  EngineResult res;
  res.n = g.n;
  if (engine == "auto") engine = (is_natural_path(g) && g.n >= 1 && g.n <= 7) ? "hecke-a" : "rewrite";
  res.engine = engine;
  if (engine == "hecke-a") {
    if (!is_natural_path(g))
      throw std::invalid_argument("engine hecke-a needs the naturally labeled path");
    HeckeMonoid h = enumerate_hecke(g.n);
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    for (const auto& [a, bb] : kiselman_congruence_pairs(g))
      pairs.emplace_back(h.index_of(a), h.index_of(bb));
    res.monoid = quotient(h.m, congruence_closure(h.m, pairs)).m;
    res.finite = true;
    return res;
  }
  if (engine != "rewrite") throw std::invalid_argument("unknown engine '" + engine + "'");
  RewriteSystem rs = kb_complete(presentation_of(g), b.max_rules, b.max_len);
  if (rs.status != RsStatus::Complete) return res;
  EnumerationResult er = enumerate(rs, b.max_elements);
  res.certified_infinite = er.certified_infinite;
  if (er.status == EnumStatus::Finite) {
    res.finite = true;
    res.monoid = monoid_of(rs, er);
  }
  res.er = std::move(er);
  return res;
}

int cmd_info(const std::string& file, const std::string& engine, const Budgets& b,
             const std::string& format, const std::string& out_file) {
  MixedGraph g = load_graph(file);
  EngineResult res = run_engine(g, engine, b);
  GraphShape shape = classify_shape(g);
  nlohmann::json j;
  j["n"] = g.n;
  j["engine"] = res.engine;
  j["shape"] = {{"simply_laced_dynkin_union", shape.is_simply_laced_dynkin_union},
                {"type_a_path", shape.is_type_a_path},
                {"linear_orientation", shape.is_linear_orientation},
                {"triple_point_indegree_ok", shape.triple_point_indegree_ok}};
  if (shape.eq3_witness)
    j["shape"]["obstruction"] = {(*shape.eq3_witness)[0], (*shape.eq3_witness)[1],
                                 (*shape.eq3_witness)[2]};
  if (shape.eq3_witness_opposite)
    j["shape"]["obstruction_opposite"] = {(*shape.eq3_witness_opposite)[0],
                                          (*shape.eq3_witness_opposite)[1],
                                          (*shape.eq3_witness_opposite)[2]};
  if (res.finite) {
    const FiniteMonoid& m = *res.monoid;
    j["status"] = "finite";
    j["size"] = m.size();
    j["num_idempotents"] = idempotents(m).size();
    j["j_trivial"] = is_j_trivial(m);
    auto irr = irreducible_generators(m);
    j["irreducible_generators"] = nlohmann::json::array();
    for (uint32_t x : irr) j["irreducible_generators"].push_back(word_to_string(m.word_of[x], g.n));
  } else {
    j["status"] = res.certified_infinite ? "infinite" : "budget-exceeded";
  }
  if (format == "json") {
    emit(j.dump(2), out_file);
    return 0;
  }
  std::ostringstream t;
  t << "graph: " << g.n << " vertices, " << g.edges.size() << " edges (engine " << res.engine
    << ")\n";
  t << "status: " << j["status"].get<std::string>() << "\n";
  if (res.finite) {
    t << "size: " << j["size"].get<size_t>() << "\n";
    t << "idempotents: " << j["num_idempotents"].get<size_t>() << "\n";
    t << "j-trivial: " << (j["j_trivial"].get<bool>() ? "true" : "false") << "\n";
    t << "irreducible generators:";
    for (const auto& s : j["irreducible_generators"]) t << " " << s.get<std::string>();
    t << "\n";
  }
  t << "shape: dynkin-union=" << shape.is_simply_laced_dynkin_union
    << " path=" << shape.is_type_a_path << " linear=" << shape.is_linear_orientation << "\n";
  emit(t.str(), out_file);
  return 0;
}

int cmd_enumerate(const std::string& file, const std::string& engine, const Budgets& b,
                  const std::string& format, const std::string& out_file) {
  MixedGraph g = load_graph(file);
  EngineResult res = run_engine(g, engine, b);
  EnumerationResult er;
  if (res.er) {
    er = *res.er;
  } else if (res.monoid) {
    // permutation engine: rebuild the same summary from the monoid
    er.status = EnumStatus::Finite;
    er.elements = res.monoid->word_of;
    er.content = res.monoid->content_of;
    er.right_cayley = res.monoid->right_tab;
  } else {
    std::cerr << "enumeration did not complete within budgets\n";
    return 1;
  }
  if (format == "dot")
    emit(cayley_to_dot(er, g.n), out_file);
  else
    emit(enumeration_to_json(er, g.n), out_file);
  return 0;
}

int cmd_rep(const std::string& file, const std::string& kind_name, const Budgets& b,
            const std::string& format, const std::string& out_file) {
  MixedGraph g = load_graph(file);
  RepKind kind = kind_name == "transformation" ? RepKind::Transformation
                 : kind_name == "matrix"       ? RepKind::Matrix
                                               : RepKind::Boolean;
  EngineResult res = run_engine(g, "rewrite", b);
  std::optional<size_t> engine_size;
  if (res.finite) engine_size = res.monoid->size();
  RepReport rep = check_faithful(g, kind, engine_size);
  if (format == "dot" && kind == RepKind::Transformation) {
    emit(action_to_dot(tau_generators(g)), out_file);
    return 0;
  }
  emit(rep_report_json(rep), out_file);
  return 0;
}

int cmd_classify(int n, const Budgets& b, const std::string& format,
                 const std::string& out_file) {
  if (n < 1 || n > 3) throw CLI::ValidationError("--n must be in 1..3");
  std::vector<MixedGraph> classes = enumerate_mixed_graphs(n);
  std::vector<std::optional<FiniteMonoid>> ms;
  std::vector<std::string> status(classes.size());
  for (size_t i = 0; i < classes.size(); ++i) {
    EngineResult res = run_engine(classes[i], "rewrite", b);
    if (res.finite) {
      ms.push_back(std::move(res.monoid));
      status[i] = "finite";
    } else {
      ms.emplace_back(std::nullopt);
      status[i] = res.certified_infinite ? "infinite" : "budget-exceeded";
    }
  }
  // group finite classes by monoid isomorphism
  std::vector<int> group(classes.size(), -1);
  int next = 0;
  bool identity_partition = true;
  for (size_t i = 0; i < classes.size(); ++i) {
    if (!ms[i]) continue;
    if (group[i] < 0) group[i] = next++;
    for (size_t j = i + 1; j < classes.size(); ++j) {
      if (!ms[j] || group[j] >= 0) continue;
      if (are_isomorphic(*ms[i], *ms[j])) {
        group[j] = group[i];
        identity_partition = false;
      }
    }
  }
  nlohmann::json j;
  j["n"] = n;
  j["classes"] = nlohmann::json::array();
  for (size_t i = 0; i < classes.size(); ++i) {
    nlohmann::json e;
    e["graph"] = nlohmann::json::parse(graph_to_json(classes[i]));
    e["status"] = status[i];
    if (ms[i]) {
      e["size"] = ms[i]->size();
      e["group"] = group[i];
    }
    j["classes"].push_back(std::move(e));
  }
  j["identity_partition"] = identity_partition;
  if (format == "json") {
    emit(j.dump(2), out_file);
  } else {
    std::ostringstream t;
    t << classes.size() << " graph classes on " << n << " vertices\n";
    for (size_t i = 0; i < classes.size(); ++i) {
      t << "  class " << i << " [" << classes[i].encoding() << "] " << status[i];
      if (ms[i]) t << " size=" << ms[i]->size() << " group=" << group[i];
      t << "\n";
    }
    t << (identity_partition ? "grouping is the identity partition on finite classes\n"
                             : "DISTINCT CLASSES WITH ISOMORPHIC MONOIDS FOUND\n");
    emit(t.str(), out_file);
  }
  return identity_partition ? 0 : 1;
}

int cmd_verify(const std::string& selector, int n_max, double scale, const std::string& format,
               const std::string& out_file) {
  VerifyOptions opts;
  opts.n_max = n_max;
  opts.budget_scale = scale;
  auto results = run_verification(selector, opts, true);
  bool all = true;
  std::ostringstream t;
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [vc, res] : results) {
    all = all && res.pass;
    char line[256];
    std::snprintf(line, sizeof line, "%-18s %-4s %8.0f ms  %s\n", vc->id.c_str(),
                  res.pass ? "pass" : "FAIL", res.ms, vc->title.c_str());
    t << line;
    if (!res.pass) t << "    " << res.details << "\n";
    j.push_back({{"id", vc->id},
                 {"title", vc->title},
                 {"pass", res.pass},
                 {"ms", res.ms},
                 {"details", res.details}});
  }
  t << (all ? "all cases passed\n" : "SOME CASES FAILED\n");
  emit(format == "json" ? j.dump(2) : t.str(), out_file);
  return all ? 0 : 1;
}

int cmd_catalan(int n, const std::string& format, const std::string& out_file) {
  if (format == "csv") {
    emit(catalan_csv(n), out_file);
    return 0;
  }
  std::ostringstream t;
  for (int k = 0; k <= n; ++k) t << "C_" << k << " = " << catalan(k) << "\n";
  emit(t.str(), out_file);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hecke-Kiselman monoid toolkit"};
  app.require_subcommand(1);

  std::string graph_file, engine = "auto", format = "text", out_file, kind = "transformation";
  std::string selector;
  int n = 3, n_max = -1;
  Budgets budgets;
  double scale = env_budget_scale();
  budgets.max_rules = static_cast<size_t>(budgets.max_rules * scale);
  budgets.max_elements = static_cast<size_t>(budgets.max_elements * scale);

  auto add_common = [&](CLI::App* sub, bool with_engine) {
    sub->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv", "dot"}));
    sub->add_option("--out", out_file, "write output to a file");
    sub->add_option("--max-rules", budgets.max_rules);
    sub->add_option("--max-elements", budgets.max_elements);
    if (with_engine)
      sub->add_option("--engine", engine)->check(CLI::IsMember({"rewrite", "hecke-a", "auto"}));
  };

  CLI::App* info = app.add_subcommand("info", "size, idempotents, J-triviality, shape");
  info->add_option("graph", graph_file)->required();
  add_common(info, true);

  CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "elements and right Cayley graph");
  enumerate_cmd->add_option("graph", graph_file)->required();
  add_common(enumerate_cmd, true);

  CLI::App* rep = app.add_subcommand("rep", "representations and faithfulness");
  rep->add_option("graph", graph_file)->required();
  rep->add_option("--kind", kind)->check(CLI::IsMember({"transformation", "matrix", "boolean"}));
  add_common(rep, false);

  CLI::App* classify = app.add_subcommand("classify", "group small graphs by monoid isomorphism");
  classify->add_option("--n", n);
  add_common(classify, false);

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("selector", selector, "case id prefix (empty = all)");
  verify->add_option("--n", n_max, "cap the per-case parameter range");
  add_common(verify, false);

  CLI::App* catalan_cmd = app.add_subcommand("catalan", "Catalan table");
  catalan_cmd->add_option("--n", n);
  add_common(catalan_cmd, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) return cmd_info(graph_file, engine, budgets, format, out_file);
    if (enumerate_cmd->parsed()) return cmd_enumerate(graph_file, engine, budgets, format, out_file);
    if (rep->parsed()) return cmd_rep(graph_file, kind, budgets, format, out_file);
    if (classify->parsed()) return cmd_classify(n, budgets, format, out_file);
    if (verify->parsed()) return cmd_verify(selector, n_max, scale, format, out_file);
    if (catalan_cmd->parsed()) return cmd_catalan(n, format, out_file);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
