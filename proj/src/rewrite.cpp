#include "hk/rewrite.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace hk {

Presentation presentation_of(const MixedGraph& g) {
  Presentation p;
  p.n = g.n;
  auto w = [](std::initializer_list<int> ls) {
    Word out;
    for (int l : ls) out.push_back(static_cast<char>(l));
    return out;
  };
  for (int i = 1; i <= g.n; ++i) p.relations.emplace_back(w({i, i}), w({i}));
  for (int i = 1; i <= g.n; ++i)
    for (int j = i + 1; j <= g.n; ++j) {
      switch (g.pair_code(i, j)) {
        case 0:
          p.relations.emplace_back(w({i, j}), w({j, i}));
          break;
        case 1:
          p.relations.emplace_back(w({i, j, i}), w({j, i, j}));
          break;
        case 2:  // i -> j
          p.relations.emplace_back(w({i, j, i}), w({i, j}));
          p.relations.emplace_back(w({j, i, j}), w({i, j}));
          break;
        case 3:  // j -> i
          p.relations.emplace_back(w({j, i, j}), w({j, i}));
          p.relations.emplace_back(w({i, j, i}), w({j, i}));
          break;
      }
    }
  return p;
}

namespace detail {

// Trie with hashed child links; `through` lists every rule whose key
// passes through the node, `terminal` the rule ending there.
struct HashTrie {
  std::unordered_map<uint64_t, int32_t> child;
  std::vector<int32_t> terminal{-1};
  std::vector<std::vector<uint32_t>> through{{}};

  int32_t get(int32_t node, uint8_t a) const {
    auto it = child.find((static_cast<uint64_t>(node) << 8) | a);
    return it == child.end() ? -1 : it->second;
  }

  int32_t step_or_create(int32_t node, uint8_t a) {
    uint64_t key = (static_cast<uint64_t>(node) << 8) | a;
    auto it = child.find(key);
    if (it != child.end()) return it->second;
    int32_t id = static_cast<int32_t>(terminal.size());
    terminal.push_back(-1);
    through.emplace_back();
    child.emplace(key, id);
    return id;
  }

  template <typename It>
  void insert(It begin, It end, uint32_t rule) {
    int32_t node = 0;
    for (It it = begin; it != end; ++it) {
      node = step_or_create(node, static_cast<uint8_t>(*it));
      through[node].push_back(rule);
    }
    terminal[node] = static_cast<int32_t>(rule);
  }
};

// Matcher for a frozen rule set: reversed trie answering "shortest rule
// left-hand side that is a suffix of the running prefix".
struct Matcher {
  std::vector<Rule> rules;
  HashTrie rev;

  explicit Matcher(const std::vector<Rule>& rs) : rules(rs) {
    for (uint32_t i = 0; i < rules.size(); ++i)
      rev.insert(rules[i].lhs.rbegin(), rules[i].lhs.rend(), i);
  }

  Word normal_form(const Word& input) const {
    Word out, feed(input.rbegin(), input.rend());
    out.reserve(input.size());
    while (!feed.empty()) {
      out.push_back(feed.back());
      feed.pop_back();
      int32_t node = 0;
      for (size_t d = 1; d <= out.size(); ++d) {
        node = rev.get(node, static_cast<uint8_t>(out[out.size() - d]));
        if (node < 0) break;
        int32_t r = rev.terminal[node];
        if (r >= 0) {
          out.resize(out.size() - rules[r].lhs.size());
          feed.append(rules[r].rhs.rbegin(), rules[r].rhs.rend());
          break;
        }
      }
    }
    return out;
  }
};

}  // namespace detail

Word RewriteSystem::normal_form(const Word& w) const {
  if (status != RsStatus::Complete)
    throw std::logic_error("normal_form: rewrite system is not complete");
  if (!matcher_) matcher_ = std::make_shared<const detail::Matcher>(rules);
  return matcher_->normal_form(w);
}

namespace {

struct LiveRule {
  Word lhs, rhs;
  bool active = true;
};

struct Eq {
  Word key, a, b;
};

struct EqLater {
  bool operator()(const Eq& x, const Eq& y) const {
    if (x.key != y.key) return shortlex_less(y.key, x.key);
    if (x.a != y.a) return shortlex_less(y.a, x.a);
    return shortlex_less(y.b, x.b);
  }
};

constexpr size_t kMaxPending = 4u << 20;

struct Completion {
  int n;
  size_t max_rules, max_len;
  std::vector<LiveRule> rules;
  size_t active_count = 0;
  detail::HashTrie fwd, rev;
  std::priority_queue<Eq, std::vector<Eq>, EqLater> pending;
  RsStatus status = RsStatus::Complete;

  Word nf(const Word& input) const {
    Word out, feed(input.rbegin(), input.rend());
    out.reserve(input.size());
    while (!feed.empty()) {
      out.push_back(feed.back());
      feed.pop_back();
      int32_t node = 0;
      for (size_t d = 1; d <= out.size(); ++d) {
        node = rev.get(node, static_cast<uint8_t>(out[out.size() - d]));
        if (node < 0) break;
        int32_t r = rev.terminal[node];
        if (r >= 0 && rules[r].active) {
          out.resize(out.size() - rules[r].lhs.size());
          feed.append(rules[r].rhs.rbegin(), rules[r].rhs.rend());
          break;
        }
      }
    }
    return out;
  }

  void push_eq(Word key, Word a, Word b) {
    if (a == b) return;
    if (pending.size() >= kMaxPending) {
      status = RsStatus::BudgetExceeded;
      return;
    }
    pending.push(Eq{std::move(key), std::move(a), std::move(b)});
  }

  // Overlaps of the new rule (id) with every active rule, both ways.
  void critical_pairs(uint32_t id) {
    const Word& l = rules[id].lhs;
    const Word& r = rules[id].rhs;
    const size_t len = l.size();
    // suffix of l equals prefix of an existing lhs
    for (size_t q = 1; q < len; ++q) {
      int32_t node = 0;
      bool alive = true;
      for (size_t i = q; i < len && alive; ++i) {
        node = fwd.get(node, static_cast<uint8_t>(l[i]));
        alive = node >= 0;
      }
      if (!alive) continue;
      const size_t t = len - q;
      for (uint32_t j : fwd.through[node]) {
        if (!rules[j].active || rules[j].lhs.size() <= t) continue;
        Word w = l + rules[j].lhs.substr(t);
        Word via_new = r + rules[j].lhs.substr(t);
        Word via_old = l.substr(0, q) + rules[j].rhs;
        push_eq(std::move(w), std::move(via_new), std::move(via_old));
      }
    }
    // suffix of an existing lhs equals a prefix of l
    for (size_t t = 1; t < len; ++t) {
      int32_t node = 0;
      bool alive = true;
      for (size_t i = 0; i < t && alive; ++i) {
        node = rev.get(node, static_cast<uint8_t>(l[t - 1 - i]));
        alive = node >= 0;
      }
      if (!alive) continue;
      for (uint32_t j : rev.through[node]) {
        if (j == id || !rules[j].active || rules[j].lhs.size() <= t) continue;
        const Word& l2 = rules[j].lhs;
        Word w = l2 + l.substr(t);
        Word via_old = rules[j].rhs + l.substr(t);
        Word via_new = l2.substr(0, l2.size() - t) + r;
        push_eq(std::move(w), std::move(via_old), std::move(via_new));
      }
    }
  }

  void add_rule(Word l, Word r) {
    uint32_t id = static_cast<uint32_t>(rules.size());
    rules.push_back({std::move(l), std::move(r), true});
    ++active_count;
    const Word& lhs = rules[id].lhs;
    fwd.insert(lhs.begin(), lhs.end(), id);
    rev.insert(lhs.rbegin(), lhs.rend(), id);
    // retire rules whose lhs became reducible; renormalize touched rhs
    for (uint32_t j = 0; j < id; ++j) {
      if (!rules[j].active) continue;
      if (rules[j].lhs.size() > lhs.size() && rules[j].lhs.find(lhs) != Word::npos) {
        rules[j].active = false;
        --active_count;
        push_eq(rules[j].lhs, rules[j].lhs, rules[j].rhs);
        continue;
      }
      if (rules[j].rhs.size() >= lhs.size() && rules[j].rhs.find(lhs) != Word::npos)
        rules[j].rhs = nf(rules[j].rhs);
    }
    critical_pairs(id);
  }
};

}  // namespace

RewriteSystem kb_complete(const Presentation& p, size_t max_rules, size_t max_len) {
  if (max_rules < p.relations.size())
    throw std::invalid_argument("kb_complete: max_rules below relation count");
  Completion c;
  c.n = p.n;
  c.max_rules = max_rules;
  c.max_len = max_len;
  for (const auto& [u, v] : p.relations) {
    Word key = shortlex_less(u, v) ? v : u;
    c.push_eq(std::move(key), u, v);
  }
  while (!c.pending.empty() && c.status == RsStatus::Complete) {
    Eq eq = c.pending.top();
    c.pending.pop();
    Word u = c.nf(eq.a), v = c.nf(eq.b);
    if (u == v) continue;
    if (shortlex_less(u, v)) std::swap(u, v);
    if (u.size() > c.max_len) {
      c.status = RsStatus::BudgetExceeded;
      break;
    }
    c.add_rule(std::move(u), std::move(v));
    if (c.active_count > c.max_rules) {
      c.status = RsStatus::BudgetExceeded;
      break;
    }
  }
  RewriteSystem rs;
  rs.n = p.n;
  rs.status = c.status;
  for (const auto& r : c.rules)
    if (r.active) rs.rules.push_back({r.lhs, r.rhs});
  std::sort(rs.rules.begin(), rs.rules.end(), [](const Rule& a, const Rule& b) {
    if (a.lhs != b.lhs) return shortlex_less(a.lhs, b.lhs);
    return shortlex_less(a.rhs, b.rhs);
  });
  return rs;
}

bool irreducible_language_is_finite(const RewriteSystem& rs) {
  // Aho-Corasick over the left-hand sides; live states are those whose
  // walk has not absorbed any lhs as a factor.
  struct Node {
    std::unordered_map<uint8_t, int32_t> next;
    int32_t fail = 0;
    bool bad = false;
  };
  std::vector<Node> t(1);
  for (const Rule& r : rs.rules) {
    int32_t cur = 0;
    for (unsigned char a : r.lhs) {
      auto it = t[cur].next.find(a);
      if (it == t[cur].next.end()) {
        t.emplace_back();
        it = t[cur].next.emplace(a, static_cast<int32_t>(t.size() - 1)).first;
      }
      cur = it->second;
    }
    t[cur].bad = true;
  }
  std::vector<int32_t> bfs;
  for (auto& [a, ch] : t[0].next) bfs.push_back(ch);
  for (size_t i = 0; i < bfs.size(); ++i) {
    int32_t u = bfs[i];
    for (auto& [a, ch] : t[u].next) {
      int32_t f = t[u].fail;
      while (f && !t[f].next.count(a)) f = t[f].fail;
      auto it = t[f].next.find(a);
      t[ch].fail = (it != t[f].next.end() && it->second != ch) ? it->second : 0;
      if (t[t[ch].fail].bad) t[ch].bad = true;
      bfs.push_back(ch);
    }
  }
  auto step = [&](int32_t u, uint8_t a) {
    while (true) {
      auto it = t[u].next.find(a);
      if (it != t[u].next.end()) return it->second;
      if (u == 0) return 0;
      u = t[u].fail;
    }
  };
  // cycle detection on live reachable states
  std::vector<int8_t> color(t.size(), 0);
  std::vector<std::pair<int32_t, int>> stack;
  if (t[0].bad) return true;  // empty word already reducible: nothing but it
  stack.emplace_back(0, 1);
  color[0] = 1;
  while (!stack.empty()) {
    auto& [u, a] = stack.back();
    if (a > rs.n) {
      color[u] = 2;
      stack.pop_back();
      continue;
    }
    int32_t v = step(u, static_cast<uint8_t>(a));
    ++a;
    if (t[v].bad) continue;
    if (color[v] == 1) return false;  // cycle
    if (color[v] == 0) {
      color[v] = 1;
      stack.emplace_back(v, 1);
    }
  }
  return true;
}

EnumerationResult enumerate(const RewriteSystem& rs, size_t max_elements) {
  if (rs.status != RsStatus::Complete)
    throw std::logic_error("enumerate: rewrite system is not complete");
  EnumerationResult er;
  er.certified_infinite = !irreducible_language_is_finite(rs);
  // Samples of certified-infinite monoids can have very long normal
  // forms, so cap what gets materialized.
  const size_t cap = er.certified_infinite ? std::min<size_t>(max_elements, 10000) : max_elements;
  std::unordered_map<Word, uint32_t> index;
  er.elements.emplace_back();
  index.emplace(Word(), 0);
  er.content.push_back(0);
  bool stopped = false;
  for (uint32_t x = 0; x < er.elements.size() && !stopped; ++x) {
    for (int g = 1; g <= rs.n; ++g) {
      Word w = er.elements[x] + static_cast<char>(g);
      w = rs.normal_form(w);
      auto [it, inserted] = index.emplace(std::move(w), static_cast<uint32_t>(er.elements.size()));
      if (inserted) {
        if (er.elements.size() >= cap) {
          stopped = true;
          index.erase(it);
          er.right_cayley.resize(x * rs.n);  // drop the partial row
          break;
        }
        er.elements.push_back(it->first);
        er.content.push_back(er.content[x] | (1u << (g - 1)));
      }
      er.right_cayley.push_back(it->second);
    }
  }
  if (!stopped && er.certified_infinite)
    throw std::logic_error("enumerate: closure terminated but automaton certificate disagrees");
  er.status = stopped ? EnumStatus::BudgetExceeded : EnumStatus::Finite;
  return er;
}

bool is_locally_confluent(const RewriteSystem& rs) {
  for (size_t i = 0; i < rs.rules.size(); ++i)
    for (size_t j = 0; j < rs.rules.size(); ++j) {
      const Word& l1 = rs.rules[i].lhs;
      const Word& l2 = rs.rules[j].lhs;
      for (size_t t = 1; t < std::min(l1.size(), l2.size()); ++t) {
        if (l1.compare(l1.size() - t, t, l2, 0, t) != 0) continue;
        Word via1 = rs.rules[i].rhs + l2.substr(t);
        Word via2 = l1.substr(0, l1.size() - t) + rs.rules[j].rhs;
        if (rs.normal_form(via1) != rs.normal_form(via2)) return false;
      }
      if (i != j && l2.size() < l1.size() && l1.find(l2) != Word::npos) return false;  // not reduced
    }
  return true;
}

FiniteMonoid monoid_of(const RewriteSystem& rs, const EnumerationResult& er) {
  if (er.status != EnumStatus::Finite)
    throw std::invalid_argument("monoid_of: enumeration is not finite");
  FiniteMonoid m;
  m.num_gens = rs.n;
  m.identity = 0;
  m.word_of = er.elements;
  m.content_of = er.content;
  m.right_tab = er.right_cayley;
  m.parent.assign(er.elements.size(), UINT32_MAX);
  m.parent_gen.assign(er.elements.size(), 0);
  m.parent[0] = 0;
  for (uint32_t x = 0; x < er.elements.size(); ++x)
    for (int g = 1; g <= rs.n; ++g) {
      uint32_t y = er.right(x, g, rs.n);
      if (m.parent[y] == UINT32_MAX) {
        m.parent[y] = x;
        m.parent_gen[y] = static_cast<uint8_t>(g);
      }
    }
  m.gens.resize(rs.n);
  for (int g = 1; g <= rs.n; ++g) m.gens[g - 1] = er.right(0, g, rs.n);
  m.left_tab.assign(er.elements.size() * rs.n, 0);
  for (int g = 0; g < rs.n; ++g) {
    std::vector<uint32_t> row = m.left_row(m.gens[g]);
    for (uint32_t x = 0; x < er.elements.size(); ++x) m.left_tab[x * rs.n + g] = row[x];
  }
  return m;
}

FiniteMonoid monoid_of_graph(const MixedGraph& g, size_t max_rules, size_t max_len,
                             size_t max_elements) {
  RewriteSystem rs = kb_complete(presentation_of(g), max_rules, max_len);
  if (rs.status != RsStatus::Complete) throw BudgetError("monoid_of_graph: completion stopped early");
  EnumerationResult er = enumerate(rs, max_elements);
  if (er.status != EnumStatus::Finite) throw BudgetError("monoid_of_graph: enumeration stopped early");
  return monoid_of(rs, er);
}

std::string enumeration_to_json(const EnumerationResult& er, int n) {
  nlohmann::json j;
  j["status"] = er.status == EnumStatus::Finite ? "finite" : "budget-exceeded";
  j["size"] = er.elements.size();
  j["elements"] = nlohmann::json::array();
  for (const Word& w : er.elements) j["elements"].push_back(word_to_string(w, n));
  j["cayley"] = nlohmann::json::array();
  const size_t rows = er.right_cayley.size() / std::max(1, n);
  for (size_t x = 0; x < rows; ++x) {
    nlohmann::json row = nlohmann::json::array();
    for (int g = 1; g <= n; ++g) row.push_back(er.right_cayley[x * n + (g - 1)]);
    j["cayley"].push_back(std::move(row));
  }
  return j.dump();
}

std::string cayley_to_dot(const EnumerationResult& er, int n) {
  std::string out = "digraph cayley {\n";
  for (uint32_t x = 0; x < er.elements.size(); ++x) {
    out += "  n" + std::to_string(x) + " [label=\"" +
           (er.elements[x].empty() ? std::string("e") : word_to_string(er.elements[x], n)) +
           "\"];\n";
  }
  const size_t rows = er.right_cayley.size() / std::max(1, n);
  for (size_t x = 0; x < rows; ++x)
    for (int g = 1; g <= n; ++g)
      out += "  n" + std::to_string(x) + " -> n" + std::to_string(er.right_cayley[x * n + (g - 1)]) +
             " [label=\"" + std::to_string(g) + "\"];\n";
  out += "}\n";
  return out;
}

}  // namespace hk
