#include "hk/mixed_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hk {

void MixedGraph::check_pair(int i, int j) const {
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::invalid_argument("vertex index out of range");
  if (i == j) throw std::invalid_argument("loop edge");
}

void MixedGraph::add_unoriented(int i, int j) {
  check_pair(i, j);
  auto key = std::minmax(i, j);
  if (edges.count(key)) throw std::invalid_argument("duplicate edge");
  edges.emplace(key, EdgeKind::Unoriented);
}

void MixedGraph::add_arrow(int from, int to) {
  check_pair(from, to);
  auto key = std::minmax(from, to);
  if (edges.count(key)) throw std::invalid_argument("duplicate edge");
  edges.emplace(key, from < to ? EdgeKind::Forward : EdgeKind::Backward);
}

bool MixedGraph::has_edge(int i, int j) const {
  if (i == j) return false;
  return edges.count(std::minmax(i, j)) != 0;
}

int MixedGraph::pair_code(int i, int j) const {
  auto it = edges.find(std::minmax(i, j));
  if (it == edges.end()) return 0;
  switch (it->second) {
    case EdgeKind::Unoriented: return 1;
    case EdgeKind::Forward: return i < j ? 2 : 3;
    case EdgeKind::Backward: return i < j ? 3 : 2;
  }
  return 0;
}

bool MixedGraph::has_arrow(int from, int to) const {
  return from != to && pair_code(from, to) == 2;
}

bool MixedGraph::has_unoriented(int i, int j) const {
  return i != j && pair_code(i, j) == 1;
}

int MixedGraph::degree(int v) const {
  int d = 0;
  for (int u = 1; u <= n; ++u)
    if (u != v && has_edge(v, u)) ++d;
  return d;
}

int MixedGraph::indegree(int v) const {
  int d = 0;
  for (int u = 1; u <= n; ++u)
    if (u != v && has_arrow(u, v)) ++d;
  return d;
}

int MixedGraph::outdegree(int v) const {
  int d = 0;
  for (int u = 1; u <= n; ++u)
    if (u != v && has_arrow(v, u)) ++d;
  return d;
}

std::vector<int> MixedGraph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 1; u <= n; ++u)
    if (u != v && has_edge(v, u)) out.push_back(u);
  return out;
}

std::string MixedGraph::encoding() const {
  std::string s;
  s.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) s.push_back(static_cast<char>('0' + pair_code(i, j)));
  return s;
}

namespace {

std::string strip(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void parse_fail(int lineno, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

MixedGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  MixedGraph g;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty()) continue;
    std::istringstream ls(s);
    if (!have_header) {
      std::string kw;
      long nn = -1;
      if (!(ls >> kw >> nn) || kw != "vertices" || nn < 0)
        parse_fail(lineno, "expected 'vertices <n>'");
      std::string extra;
      if (ls >> extra) parse_fail(lineno, "trailing tokens after vertex count");
      g.n = static_cast<int>(nn);
      have_header = true;
      continue;
    }
    std::string a, op, b, extra;
    if (!(ls >> a >> op >> b) || (ls >> extra))
      parse_fail(lineno, "expected '<i> -- <j>', '<i> -> <j>' or '<i> <- <j>'");
    int i = 0, j = 0;
    try {
      i = std::stoi(a);
      j = std::stoi(b);
    } catch (const std::exception&) {
      parse_fail(lineno, "bad vertex index");
    }
    try {
      if (op == "--")
        g.add_unoriented(i, j);
      else if (op == "->")
        g.add_arrow(i, j);
      else if (op == "<-")
        g.add_arrow(j, i);
      else
        parse_fail(lineno, "unknown edge operator '" + op + "'");
    } catch (const std::invalid_argument& e) {
      parse_fail(lineno, e.what());
    }
  }
  if (!have_header) throw std::runtime_error("line 1: missing 'vertices <n>' header");
  return g;
}

MixedGraph opposite(const MixedGraph& g) {
  MixedGraph h(g.n);
  for (const auto& [key, kind] : g.edges) {
    EdgeKind k = kind;
    if (k == EdgeKind::Forward)
      k = EdgeKind::Backward;
    else if (k == EdgeKind::Backward)
      k = EdgeKind::Forward;
    h.edges.emplace(key, k);
  }
  return h;
}

MixedGraph relabel(const MixedGraph& g, const std::vector<int>& p) {
  MixedGraph h(g.n);
  for (const auto& [key, kind] : g.edges) {
    int a = p[key.first - 1], b = p[key.second - 1];
    int from, to;
    switch (kind) {
      case EdgeKind::Unoriented:
        h.add_unoriented(a, b);
        continue;
      case EdgeKind::Forward:
        from = a, to = b;
        break;
      default:
        from = b, to = a;
        break;
    }
    h.add_arrow(from, to);
  }
  return h;
}

std::optional<std::vector<int>> are_graphs_isomorphic(const MixedGraph& g, const MixedGraph& h) {
  if (g.n != h.n || g.edges.size() != h.edges.size()) return std::nullopt;
  std::vector<int> p(g.n);
  std::iota(p.begin(), p.end(), 1);
  const std::string target = h.encoding();
  do {
    if (relabel(g, p).encoding() == target) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

MixedGraph canonical_form(const MixedGraph& g) {
  std::vector<int> p(g.n);
  std::iota(p.begin(), p.end(), 1);
  MixedGraph best = g;
  std::string best_enc = g.encoding();
  do {
    MixedGraph cand = relabel(g, p);
    std::string enc = cand.encoding();
    if (enc < best_enc) {
      best_enc = std::move(enc);
      best = std::move(cand);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

std::vector<MixedGraph> enumerate_mixed_graphs(int n) {
  if (n < 1 || n > 5)
    throw std::invalid_argument("enumerate_mixed_graphs: n must be in 1..5");
  const int pairs = n * (n - 1) / 2;
  std::vector<std::vector<int>> perms;
  {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }
  std::set<std::string> seen;
  std::vector<MixedGraph> out;
  std::vector<int> code(pairs, 0);
  while (true) {
    MixedGraph g(n);
    int idx = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j, ++idx) {
        switch (code[idx]) {
          case 1: g.add_unoriented(i, j); break;
          case 2: g.add_arrow(i, j); break;
          case 3: g.add_arrow(j, i); break;
          default: break;
        }
      }
    std::string best = g.encoding();
    MixedGraph rep = g;
    for (const auto& p : perms) {
      MixedGraph cand = relabel(g, p);
      std::string enc = cand.encoding();
      if (enc < best) {
        best = std::move(enc);
        rep = std::move(cand);
      }
    }
    if (seen.insert(best).second) out.push_back(std::move(rep));
    int k = pairs - 1;
    for (; k >= 0; --k) {
      if (code[k] < 3) {
        ++code[k];
        break;
      }
      code[k] = 0;
    }
    if (k < 0) break;
  }
  std::sort(out.begin(), out.end(),
            [](const MixedGraph& a, const MixedGraph& b) { return a.encoding() < b.encoding(); });
  return out;
}

namespace {

struct Components {
  std::vector<int> comp_of;              // per vertex, 0-based component id
  std::vector<std::vector<int>> members;
};

Components underlying_components(const MixedGraph& g) {
  Components c;
  c.comp_of.assign(g.n, -1);
  int next = 0;
  for (int v = 1; v <= g.n; ++v) {
    if (c.comp_of[v - 1] >= 0) continue;
    std::vector<int> stack = {v};
    c.comp_of[v - 1] = next;
    c.members.emplace_back();
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      c.members[next].push_back(u);
      for (int w : g.neighbors(u)) {
        if (c.comp_of[w - 1] < 0) {
          c.comp_of[w - 1] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return c;
}

// Arm lengths of a tree from the unique degree-3 vertex.
std::vector<int> arm_lengths(const MixedGraph& g, int triple) {
  std::vector<int> arms;
  for (int start : g.neighbors(triple)) {
    int len = 1, prev = triple, cur = start;
    while (true) {
      std::vector<int> next;
      for (int w : g.neighbors(cur))
        if (w != prev) next.push_back(w);
      if (next.size() != 1) break;
      prev = cur;
      cur = next[0];
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  return arms;
}

bool component_is_simply_laced_dynkin(const MixedGraph& g, const std::vector<int>& members) {
  size_t edge_count = 0;
  int triples = 0, triple = 0;
  for (int v : members) {
    int d = g.degree(v);
    if (d > 3) return false;
    if (d == 3) {
      ++triples;
      triple = v;
    }
    edge_count += static_cast<size_t>(d);
  }
  edge_count /= 2;
  if (edge_count != members.size() - 1) return false;  // not a tree (component is connected)
  if (triples == 0) return true;                       // type A path
  if (triples > 1) return false;
  auto arms = arm_lengths(g, triple);
  if (arms[0] != 1) return false;
  if (arms[1] == 1) return true;                       // type D
  return arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4; // E6, E7, E8
}

}  // namespace

GraphShape classify_shape(const MixedGraph& g) {
  GraphShape s;
  Components comps = underlying_components(g);
  s.is_simply_laced_dynkin_union = true;
  for (const auto& m : comps.members)
    if (!component_is_simply_laced_dynkin(g, m)) s.is_simply_laced_dynkin_union = false;

  bool path = comps.members.size() == 1 && g.edges.size() == static_cast<size_t>(g.n) - 1;
  if (path)
    for (int v = 1; v <= g.n; ++v)
      if (g.degree(v) > 2) path = false;
  s.is_type_a_path = g.n >= 1 && path;

  bool all_oriented = true;
  for (const auto& [key, kind] : g.edges)
    if (kind == EdgeKind::Unoriented) all_oriented = false;
  s.is_linear_orientation = s.is_type_a_path && all_oriented;
  if (s.is_linear_orientation)
    for (int v = 1; v <= g.n; ++v)
      if (g.indegree(v) > 1 || g.outdegree(v) > 1) s.is_linear_orientation = false;

  auto find_witness = [](const MixedGraph& gg) -> std::optional<std::array<int, 3>> {
    for (int i = 1; i <= gg.n; ++i)
      for (int j = 1; j <= gg.n; ++j)
        for (int k = i + 1; k <= gg.n; ++k) {
          if (j == i || j == k) continue;
          if (gg.has_arrow(i, j) && gg.has_arrow(k, j) && !gg.has_edge(i, k))
            return std::array<int, 3>{i, j, k};
        }
    return std::nullopt;
  };
  s.eq3_witness = find_witness(g);
  s.eq3_witness_opposite = find_witness(opposite(g));

  for (int v = 1; v <= g.n; ++v)
    if (g.degree(v) >= 3 && g.indegree(v) > 1) s.triple_point_indegree_ok = false;
  return s;
}

bool is_full_embedding(const std::vector<int>& f, const MixedGraph& g, const MixedGraph& h) {
  if (static_cast<int>(f.size()) != g.n) return false;
  for (int v : f)
    if (v < 1 || v > h.n) return false;
  for (int i = 1; i <= g.n; ++i)
    for (int j = i + 1; j <= g.n; ++j) {
      if (f[i - 1] == f[j - 1]) return false;  // not injective
      if (g.pair_code(i, j) != h.pair_code(f[i - 1], f[j - 1])) return false;
    }
  return true;
}

std::string graph_to_json(const MixedGraph& g) {
  nlohmann::json j;
  j["n"] = g.n;
  j["edges"] = nlohmann::json::array();
  for (const auto& [key, kind] : g.edges) {
    const char* k = kind == EdgeKind::Unoriented ? "un" : kind == EdgeKind::Forward ? "fwd" : "bwd";
    j["edges"].push_back({{"a", key.first}, {"b", key.second}, {"kind", k}});
  }
  return j.dump();
}

MixedGraph path_graph(int n) {
  MixedGraph g(n);
  for (int i = 1; i < n; ++i) g.add_unoriented(i, i + 1);
  return g;
}

MixedGraph linear_path(int n) {
  MixedGraph g(n);
  for (int i = 1; i < n; ++i) g.add_arrow(i + 1, i);
  return g;
}

MixedGraph oriented_path(int n, uint32_t mask) {
  MixedGraph g(n);
  for (int i = 1; i < n; ++i) {
    if (mask & (1u << (i - 1)))
      g.add_arrow(i + 1, i);
    else
      g.add_arrow(i, i + 1);
  }
  return g;
}

MixedGraph mixed_path(int n, const std::vector<int>& kind) {
  if (static_cast<int>(kind.size()) != n - 1)
    throw std::invalid_argument("mixed_path: need one kind per edge");
  MixedGraph g(n);
  for (int i = 1; i < n; ++i) {
    switch (kind[i - 1]) {
      case 0: g.add_unoriented(i, i + 1); break;
      case 1: g.add_arrow(i + 1, i); break;
      case 2: g.add_arrow(i, i + 1); break;
      default: throw std::invalid_argument("mixed_path: kind must be 0, 1 or 2");
    }
  }
  return g;
}

bool is_natural_path(const MixedGraph& g) {
  if (g.edges.size() != static_cast<size_t>(g.n) - 1) return false;
  for (int i = 1; i < g.n; ++i)
    if (!g.has_edge(i, i + 1)) return false;
  return true;
}

}  // namespace hk
