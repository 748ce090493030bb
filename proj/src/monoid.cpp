#include "hk/monoid.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "json.hpp"

namespace hk {

std::vector<uint32_t> idempotents(const FiniteMonoid& m) {
  std::vector<uint32_t> out;
  for (uint32_t x = 0; x < m.size(); ++x)
    if (m.mult(x, x) == x) out.push_back(x);
  return out;
}

namespace {

// Iterative Tarjan over the graph with edges x -> x*g and x -> g*x.
bool all_sccs_trivial(const FiniteMonoid& m) {
  const uint32_t n = static_cast<uint32_t>(m.size());
  const int k = m.num_gens;
  std::vector<int32_t> idx(n, -1), low(n, 0);
  std::vector<uint8_t> on_stack(n, 0);
  std::vector<uint32_t> stack;
  int32_t counter = 0;

  struct Frame {
    uint32_t v;
    int edge;  // next edge to explore, 0..2k-1
  };
  std::vector<Frame> call;
  auto edge_target = [&](uint32_t v, int e) {
    return e < k ? m.right_tab[v * k + e] : m.left_tab[v * k + (e - k)];
  };

  for (uint32_t root = 0; root < n; ++root) {
    if (idx[root] >= 0) continue;
    call.push_back({root, 0});
    idx[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.edge < 2 * k) {
        uint32_t w = edge_target(f.v, f.edge++);
        if (idx[w] < 0) {
          idx[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], idx[w]);
        }
      } else {
        uint32_t v = f.v;
        call.pop_back();
        if (low[v] == idx[v]) {
          size_t members = 0;
          while (true) {
            uint32_t w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            ++members;
            if (w == v) break;
          }
          if (members > 1) return false;
        }
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      }
    }
  }
  return true;
}

struct UnionFind {
  std::vector<uint32_t> up;
  explicit UnionFind(size_t n) : up(n) { std::iota(up.begin(), up.end(), 0u); }
  uint32_t find(uint32_t x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  bool unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);  // keep the least element as root
    up[a] = b;
    return true;
  }
};

}  // namespace

bool is_j_trivial(const FiniteMonoid& m) { return all_sccs_trivial(m); }

Congruence congruence_closure(const FiniteMonoid& m,
                              const std::vector<std::pair<uint32_t, uint32_t>>& pairs) {
  UnionFind uf(m.size());
  std::vector<std::pair<uint32_t, uint32_t>> work(pairs);
  while (!work.empty()) {
    auto [u, v] = work.back();
    work.pop_back();
    if (!uf.unite(u, v)) continue;
    for (int g = 1; g <= m.num_gens; ++g) {
      work.emplace_back(m.right(u, g), m.right(v, g));
      work.emplace_back(m.left(u, g), m.left(v, g));
    }
  }
  Congruence c;
  c.class_of.resize(m.size());
  std::vector<int32_t> number(m.size(), -1);
  for (uint32_t x = 0; x < m.size(); ++x) {
    uint32_t r = uf.find(x);
    if (number[r] < 0) number[r] = static_cast<int32_t>(c.num_classes++);
    c.class_of[x] = static_cast<uint32_t>(number[r]);
  }
  return c;
}

QuotientResult quotient(const FiniteMonoid& m, const Congruence& c) {
  const uint32_t k = c.num_classes;
  std::vector<uint32_t> rep(k, UINT32_MAX);
  for (uint32_t x = 0; x < m.size(); ++x)
    if (rep[c.class_of[x]] == UINT32_MAX) rep[c.class_of[x]] = x;
  // compatibility with both actions
  for (uint32_t x = 0; x < m.size(); ++x) {
    uint32_t r = rep[c.class_of[x]];
    for (int g = 1; g <= m.num_gens; ++g) {
      if (c.class_of[m.right(x, g)] != c.class_of[m.right(r, g)] ||
          c.class_of[m.left(x, g)] != c.class_of[m.left(r, g)])
        throw std::invalid_argument("quotient: partition is not a congruence");
    }
  }

  FiniteMonoid q;
  q.num_gens = m.num_gens;
  std::vector<uint32_t> new_id(k, UINT32_MAX);
  std::vector<uint32_t> order;
  uint32_t c0 = c.class_of[m.identity];
  new_id[c0] = 0;
  order.push_back(c0);
  q.identity = 0;
  q.parent.push_back(0);
  q.parent_gen.push_back(0);
  q.word_of.emplace_back();
  q.content_of.push_back(0);
  for (uint32_t i = 0; i < order.size(); ++i) {
    for (int g = 1; g <= q.num_gens; ++g) {
      uint32_t cls = c.class_of[m.right(rep[order[i]], g)];
      if (new_id[cls] == UINT32_MAX) {
        new_id[cls] = static_cast<uint32_t>(order.size());
        order.push_back(cls);
        q.parent.push_back(i);
        q.parent_gen.push_back(static_cast<uint8_t>(g));
        q.word_of.push_back(q.word_of[i] + static_cast<char>(g));
        q.content_of.push_back(q.content_of[i] | (1u << (g - 1)));
      }
      q.right_tab.push_back(new_id[cls]);
    }
  }
  q.gens.resize(q.num_gens);
  for (int g = 0; g < q.num_gens; ++g) q.gens[g] = new_id[c.class_of[m.gens[g]]];
  q.left_tab.assign(order.size() * q.num_gens, 0);
  for (int g = 0; g < q.num_gens; ++g) {
    std::vector<uint32_t> row = q.left_row(q.gens[g]);
    for (uint32_t x = 0; x < order.size(); ++x) q.left_tab[x * q.num_gens + g] = row[x];
  }
  QuotientResult out;
  out.m = std::move(q);
  out.image_of.resize(m.size());
  for (uint32_t x = 0; x < m.size(); ++x) out.image_of[x] = new_id[c.class_of[x]];
  return out;
}

std::vector<uint32_t> irreducible_generators(const FiniteMonoid& m) {
  // x is reducible when x = a*b for a, b outside {identity, x}; products
  // absorbed into a factor (a*a = a for idempotents) do not count.
  std::vector<uint8_t> composite(m.size(), 0);
  for (uint32_t a = 0; a < m.size(); ++a) {
    if (a == m.identity) continue;
    std::vector<uint32_t> row = m.left_row(a);
    for (uint32_t b = 0; b < m.size(); ++b) {
      if (b == m.identity) continue;
      uint32_t y = row[b];
      if (y != a && y != b) composite[y] = 1;
    }
  }
  std::vector<uint32_t> irr;
  for (uint32_t x = 0; x < m.size(); ++x)
    if (x != m.identity && !composite[x]) irr.push_back(x);

  std::vector<uint8_t> reached(m.size(), 0);
  std::vector<uint32_t> queue = {m.identity};
  reached[m.identity] = 1;
  size_t count = 1;
  for (size_t i = 0; i < queue.size(); ++i) {
    for (uint32_t e : irr) {
      uint32_t y = m.mult(queue[i], e);
      if (!reached[y]) {
        reached[y] = 1;
        ++count;
        queue.push_back(y);
      }
    }
  }
  if (count != m.size())
    throw std::runtime_error("irreducible_generators: set does not generate the monoid");
  return irr;
}

FiniteMonoid opposite_monoid(const FiniteMonoid& m) {
  std::vector<uint32_t> gen_elems(m.gens.begin(), m.gens.end());
  auto rmult = [&m](uint32_t x, uint32_t gel) { return m.mult(gel, x); };
  auto [op, values] = close_monoid<uint32_t>(m.identity, gen_elems, rmult, m.size() + 1);
  (void)values;
  return std::move(op);
}

namespace {

struct ElementProfile {
  bool idem;
  uint32_t right_ideal, left_ideal, two_sided;
  auto operator<=>(const ElementProfile&) const = default;
};

uint32_t reach_count(const FiniteMonoid& m, uint32_t x, bool use_right, bool use_left) {
  std::vector<uint8_t> seen(m.size(), 0);
  std::vector<uint32_t> q = {x};
  seen[x] = 1;
  uint32_t cnt = 1;
  for (size_t i = 0; i < q.size(); ++i)
    for (int g = 1; g <= m.num_gens; ++g) {
      std::array<uint32_t, 2> nb{use_right ? m.right(q[i], g) : q[i],
                                 use_left ? m.left(q[i], g) : q[i]};
      for (uint32_t w : nb)
        if (!seen[w]) {
          seen[w] = 1;
          ++cnt;
          q.push_back(w);
        }
    }
  return cnt;
}

ElementProfile profile_of(const FiniteMonoid& m, uint32_t x) {
  return {m.mult(x, x) == x, reach_count(m, x, true, false), reach_count(m, x, false, true),
          reach_count(m, x, true, true)};
}

// Words of every element over the irreducible generating set, as indices
// into irr, together with the BFS tree that produced them.
struct IrrWords {
  std::vector<uint32_t> parent;
  std::vector<int> gen;  // index into irr
  std::vector<uint32_t> order;
};

IrrWords words_over(const FiniteMonoid& m, const std::vector<uint32_t>& irr) {
  IrrWords w;
  w.parent.assign(m.size(), UINT32_MAX);
  w.gen.assign(m.size(), -1);
  w.order.push_back(m.identity);
  w.parent[m.identity] = m.identity;
  for (size_t i = 0; i < w.order.size(); ++i) {
    for (size_t g = 0; g < irr.size(); ++g) {
      uint32_t y = m.mult(w.order[i], irr[g]);
      if (w.parent[y] == UINT32_MAX) {
        w.parent[y] = w.order[i];
        w.gen[y] = static_cast<int>(g);
        w.order.push_back(y);
      }
    }
  }
  return w;
}

bool check_iso(const FiniteMonoid& m, const FiniteMonoid& n, const std::vector<uint32_t>& phi) {
  std::vector<uint8_t> hit(n.size(), 0);
  for (uint32_t x = 0; x < m.size(); ++x) {
    if (hit[phi[x]]) return false;
    hit[phi[x]] = 1;
  }
  for (uint32_t a = 0; a < m.size(); ++a) {
    std::vector<uint32_t> row_m = m.left_row(a);
    std::vector<uint32_t> row_n = n.left_row(phi[a]);
    for (uint32_t b = 0; b < m.size(); ++b)
      if (phi[row_m[b]] != row_n[phi[b]]) return false;
  }
  return true;
}

}  // namespace

std::optional<std::vector<uint32_t>> are_isomorphic(const FiniteMonoid& m, const FiniteMonoid& n) {
  if (m.size() > 5000 || n.size() > 5000)
    throw std::invalid_argument("are_isomorphic: size exceeds search budget");
  if (m.size() != n.size()) return std::nullopt;
  std::vector<uint32_t> irr_m = irreducible_generators(m);
  std::vector<uint32_t> irr_n = irreducible_generators(n);
  if (irr_m.size() != irr_n.size()) return std::nullopt;

  std::vector<ElementProfile> prof_m, prof_n;
  for (uint32_t x : irr_m) prof_m.push_back(profile_of(m, x));
  for (uint32_t x : irr_n) prof_n.push_back(profile_of(n, x));
  {
    auto sm = prof_m, sn = prof_n;
    std::sort(sm.begin(), sm.end());
    std::sort(sn.begin(), sn.end());
    if (sm != sn) return std::nullopt;
  }

  IrrWords words = words_over(m, irr_m);
  const size_t k = irr_m.size();
  std::vector<int> assign(k, -1);
  std::vector<uint8_t> used(k, 0);
  std::vector<uint32_t> phi(m.size());

  std::optional<std::vector<uint32_t>> found;
  auto attempt = [&]() {
    for (uint32_t x : words.order) {
      if (x == m.identity) {
        phi[x] = n.identity;
        continue;
      }
      phi[x] = n.mult(phi[words.parent[x]], irr_n[assign[words.gen[x]]]);
    }
    if (check_iso(m, n, phi)) found = phi;
  };
  std::function<void(size_t)> rec = [&](size_t pos) {
    if (found) return;
    if (pos == k) {
      attempt();
      return;
    }
    for (size_t j = 0; j < k; ++j) {
      if (used[j] || prof_m[pos] != prof_n[j]) continue;
      used[j] = 1;
      assign[pos] = static_cast<int>(j);
      rec(pos + 1);
      used[j] = 0;
    }
  };
  rec(0);
  return found;
}

std::optional<std::vector<uint32_t>> are_anti_isomorphic(const FiniteMonoid& m,
                                                         const FiniteMonoid& n) {
  if (m.size() > 5000 || n.size() > 5000)
    throw std::invalid_argument("are_anti_isomorphic: size exceeds search budget");
  std::vector<uint32_t> gen_elems(m.gens.begin(), m.gens.end());
  auto rmult = [&m](uint32_t x, uint32_t gel) { return m.mult(gel, x); };
  auto [op, values] = close_monoid<uint32_t>(m.identity, gen_elems, rmult, m.size() + 1);
  auto iso = are_isomorphic(op, n);
  if (!iso) return std::nullopt;
  // values[i] is the m-element represented by opposite element i
  std::vector<uint32_t> phi(m.size());
  for (uint32_t i = 0; i < values.size(); ++i) phi[values[i]] = (*iso)[i];
  return phi;
}

GeneratorMapReport verify_generator_map(const FiniteMonoid& m, const FiniteMonoid& n,
                                        const std::vector<uint32_t>& gen_images) {
  if (gen_images.size() != static_cast<size_t>(m.num_gens))
    throw std::invalid_argument("verify_generator_map: map must cover all generators");
  std::vector<uint32_t> phi(m.size());
  for (uint32_t x = 0; x < m.size(); ++x) {
    if (x == m.identity) {
      phi[x] = n.identity;
      continue;
    }
    phi[x] = n.mult(phi[m.parent[x]], gen_images[m.parent_gen[x] - 1]);
  }
  GeneratorMapReport rep;
  rep.is_homomorphism = true;
  for (uint32_t a = 0; a < m.size() && rep.is_homomorphism; ++a) {
    std::vector<uint32_t> row_m = m.left_row(a);
    std::vector<uint32_t> row_n = n.left_row(phi[a]);
    for (uint32_t b = 0; b < m.size(); ++b)
      if (phi[row_m[b]] != row_n[phi[b]]) {
        rep.is_homomorphism = false;
        break;
      }
  }
  std::vector<uint8_t> hit(n.size(), 0);
  size_t distinct = 0;
  for (uint32_t x = 0; x < m.size(); ++x)
    if (!hit[phi[x]]) {
      hit[phi[x]] = 1;
      ++distinct;
    }
  rep.is_injective = distinct == m.size();
  rep.is_surjective = distinct == n.size();
  return rep;
}

std::string mult_table_csv(const FiniteMonoid& m) {
  std::string out;
  for (uint32_t a = 0; a < m.size(); ++a) {
    std::vector<uint32_t> row = m.left_row(a);
    for (uint32_t b = 0; b < m.size(); ++b) {
      if (b) out.push_back(',');
      out += std::to_string(row[b]);
    }
    out.push_back('\n');
  }
  return out;
}

std::string greens_report_json(const FiniteMonoid& m) {
  nlohmann::json j;
  j["j_trivial"] = is_j_trivial(m);
  j["num_idempotents"] = idempotents(m).size();
  auto irr = irreducible_generators(m);
  j["irreducible_generators"] = nlohmann::json::array();
  for (uint32_t x : irr) j["irreducible_generators"].push_back(word_to_string(m.word_of[x], m.num_gens));
  return j.dump();
}

}  // namespace hk
