#include "hk/reps.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "json.hpp"

namespace hk {

Transformation Transformation::identity(int m) {
  Transformation t;
  t.img.resize(m);
  for (int k = 1; k <= m; ++k) t.img[k - 1] = static_cast<char>(k);
  return t;
}

Transformation compose(const Transformation& f, const Transformation& g) {
  Transformation out;
  out.img.resize(g.img.size());
  for (size_t k = 0; k < g.img.size(); ++k)
    out.img[k] = f.img[static_cast<unsigned char>(g.img[k]) - 1];
  return out;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m;
  m.n = n;
  m.a.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero_one() const {
  return std::all_of(a.begin(), a.end(), [](long long v) { return v == 0 || v == 1; });
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  IntMatrix out;
  out.n = x.n;
  out.a.assign(static_cast<size_t>(x.n) * x.n, 0);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      long long v = x.at(i, k);
      if (!v) continue;
      for (int j = 0; j < x.n; ++j) out.at(i, j) += v * y.at(k, j);
    }
  return out;
}

size_t IntMatrixHash::operator()(const IntMatrix& m) const {
  size_t h = std::hash<int>{}(m.n);
  for (long long v : m.a) h = h * 1099511628211ULL + std::hash<long long>{}(v);
  return h;
}

BoolMatrix BoolMatrix::identity(int n) {
  BoolMatrix m;
  m.n = n;
  m.rows.assign(n, 0);
  for (int i = 0; i < n; ++i) m.rows[i] = 1ull << i;
  return m;
}

BoolMatrix operator*(const BoolMatrix& x, const BoolMatrix& y) {
  BoolMatrix out;
  out.n = x.n;
  out.rows.assign(x.n, 0);
  for (int i = 0; i < x.n; ++i) {
    uint64_t row = x.rows[i], acc = 0;
    while (row) {
      int k = std::countr_zero(row);
      row &= row - 1;
      acc |= y.rows[k];
    }
    out.rows[i] = acc;
  }
  return out;
}

size_t BoolMatrixHash::operator()(const BoolMatrix& m) const {
  size_t h = std::hash<int>{}(m.n);
  for (uint64_t v : m.rows) h = h * 1099511628211ULL + std::hash<uint64_t>{}(v);
  return h;
}

namespace {

void require_fully_oriented(const MixedGraph& g, const char* who) {
  for (const auto& [key, kind] : g.edges)
    if (kind == EdgeKind::Unoriented)
      throw std::invalid_argument(std::string(who) + ": graph has an unoriented edge");
}

void require_dynkin(const MixedGraph& g, const char* who) {
  if (!classify_shape(g).is_simply_laced_dynkin_union)
    throw std::invalid_argument(std::string(who) +
                                ": underlying graph is not a union of simply laced diagrams");
}

}  // namespace

TauRep tau_generators(const MixedGraph& g, bool alt_choice) {
  require_fully_oriented(g, "tau_generators");
  require_dynkin(g, "tau_generators");
  GraphShape shape = classify_shape(g);
  if (!shape.triple_point_indegree_ok)
    throw std::invalid_argument(
        "tau_generators: a triple point has indegree two or more; use opposite(g) and read the "
        "result as a right action");

  struct Point {
    int kind;  // 0 edge, 1 sink copy 0, 2 sink copy 1, 3 source
    int a = 0, b = 0;
  };
  std::vector<Point> points;
  std::vector<std::pair<int, int>> arrows;  // (from, to)
  for (const auto& [key, kind] : g.edges) {
    if (kind == EdgeKind::Forward)
      arrows.emplace_back(key.first, key.second);
    else
      arrows.emplace_back(key.second, key.first);
  }
  std::sort(arrows.begin(), arrows.end());
  auto edge_point = [&](int from, int to) {
    for (size_t p = 0; p < arrows.size(); ++p)
      if (arrows[p] == std::pair<int, int>{from, to}) return static_cast<int>(p);
    return -1;
  };
  for (auto [from, to] : arrows) points.push_back({0, from, to});
  std::vector<int> sinks, sources;
  for (int v = 1; v <= g.n; ++v) {
    if (g.outdegree(v) == 0) sinks.push_back(v);
    if (g.indegree(v) == 0 && g.degree(v) > 0) sources.push_back(v);
    if (g.degree(v) == 0)
      throw std::invalid_argument("tau_generators: isolated vertex has no in-edge for the choice map");
  }
  for (int v : sinks) points.push_back({1, v, 0});
  for (int v : sinks)
    if (g.indegree(v) == 2) points.push_back({2, v, 0});
  for (int v : sources) points.push_back({3, v, 0});

  // choice map per sink copy: in-edges ordered by source label
  auto chosen_edge = [&](int v, int copy) {
    std::vector<int> in;
    for (auto [from, to] : arrows)
      if (to == v) in.push_back(from);
    std::sort(in.begin(), in.end());
    int pick = copy;
    if (in.size() == 2 && alt_choice) pick = 1 - copy;
    return edge_point(in[pick], v);
  };

  TauRep rep;
  for (const Point& p : points) {
    switch (p.kind) {
      case 0: rep.point_labels.push_back(std::to_string(p.a) + "->" + std::to_string(p.b)); break;
      case 1: rep.point_labels.push_back("sink " + std::to_string(p.a)); break;
      case 2: rep.point_labels.push_back("sink' " + std::to_string(p.a)); break;
      default: rep.point_labels.push_back("source " + std::to_string(p.a)); break;
    }
  }
  const int m = static_cast<int>(points.size());
  for (int i = 1; i <= g.n; ++i) {
    Transformation t = Transformation::identity(m);
    for (int p = 0; p < m; ++p) {
      const Point& pt = points[p];
      if (pt.kind == 0 && pt.a == i) {
        // edge out of i
        if (g.indegree(i) == 0) {
          for (int q = 0; q < m; ++q)
            if (points[q].kind == 3 && points[q].a == i) t.img[p] = static_cast<char>(q + 1);
        } else {
          for (int v = 1; v <= g.n; ++v)
            if (g.has_arrow(v, i)) t.img[p] = static_cast<char>(edge_point(v, i) + 1);
        }
      } else if ((pt.kind == 1 || pt.kind == 2) && pt.a == i) {
        t.img[p] = static_cast<char>(chosen_edge(i, pt.kind - 1) + 1);
      }
    }
    rep.gens.push_back(std::move(t));
  }
  return rep;
}

std::vector<IntMatrix> theta_generators(const MixedGraph& g) {
  require_fully_oriented(g, "theta_generators");
  require_dynkin(g, "theta_generators");
  std::vector<IntMatrix> out;
  for (int i = 1; i <= g.n; ++i) {
    IntMatrix m = IntMatrix::identity(g.n);
    m.at(i - 1, i - 1) = 0;
    for (int k = 1; k <= g.n; ++k)
      if (g.has_arrow(k, i)) m.at(k - 1, i - 1) = 1;
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<BoolMatrix> boolean_generators(const MixedGraph& g) {
  std::vector<BoolMatrix> out;
  for (const IntMatrix& m : theta_generators(g)) {
    BoolMatrix b;
    b.n = m.n;
    b.rows.assign(m.n, 0);
    for (int r = 0; r < m.n; ++r)
      for (int c = 0; c < m.n; ++c)
        if (m.at(r, c)) b.rows[r] |= 1ull << c;
    out.push_back(std::move(b));
  }
  return out;
}

FiniteMonoid image_semigroup(const std::vector<Transformation>& gens, size_t max_elements) {
  if (gens.empty()) throw std::invalid_argument("image_semigroup: no generators");
  auto [m, values] = close_monoid<Transformation, Transformation (*)(const Transformation&, const Transformation&),
                                  TransformationHash>(Transformation::identity(gens[0].degree()),
                                                      gens, &compose, max_elements);
  (void)values;
  return std::move(m);
}

FiniteMonoid image_semigroup(const std::vector<IntMatrix>& gens, size_t max_elements) {
  if (gens.empty()) throw std::invalid_argument("image_semigroup: no generators");
  auto mul = [](const IntMatrix& x, const IntMatrix& y) { return x * y; };
  auto [m, values] =
      close_monoid<IntMatrix, decltype(mul), IntMatrixHash>(IntMatrix::identity(gens[0].n), gens, mul, max_elements);
  (void)values;
  return std::move(m);
}

FiniteMonoid image_semigroup(const std::vector<BoolMatrix>& gens, size_t max_elements) {
  if (gens.empty()) throw std::invalid_argument("image_semigroup: no generators");
  auto mul = [](const BoolMatrix& x, const BoolMatrix& y) { return x * y; };
  auto [m, values] = close_monoid<BoolMatrix, decltype(mul), BoolMatrixHash>(
      BoolMatrix::identity(gens[0].n), gens, mul, max_elements);
  (void)values;
  return std::move(m);
}

namespace {

std::string transformation_string(const Transformation& t) {
  std::string s = "[";
  for (int k = 1; k <= t.degree(); ++k) {
    if (k > 1) s += ",";
    s += std::to_string(t(k));
  }
  return s + "]";
}

std::string matrix_string(const IntMatrix& m) {
  std::string s = "[";
  for (int r = 0; r < m.n; ++r) {
    if (r) s += ";";
    for (int c = 0; c < m.n; ++c) {
      if (c) s += ",";
      s += std::to_string(m.at(r, c));
    }
  }
  return s + "]";
}

std::string bool_matrix_string(const BoolMatrix& m) {
  std::string s = "[";
  for (int r = 0; r < m.n; ++r) {
    if (r) s += ";";
    for (int c = 0; c < m.n; ++c) s += m.at(r, c) ? '1' : '0';
  }
  return s + "]";
}

}  // namespace

RepReport check_faithful(const MixedGraph& g, RepKind kind, std::optional<size_t> engine_size) {
  RepReport rep;
  rep.kind = kind;
  rep.monoid_size = engine_size;
  rep.open_in_general = !classify_shape(g).is_linear_orientation;
  switch (kind) {
    case RepKind::Transformation: {
      TauRep tau = tau_generators(g);
      for (const auto& t : tau.gens) rep.generator_images.push_back(transformation_string(t));
      rep.image_size = image_semigroup(tau.gens).size();
      break;
    }
    case RepKind::Matrix: {
      auto gens = theta_generators(g);
      for (const auto& m : gens) rep.generator_images.push_back(matrix_string(m));
      rep.image_size = image_semigroup(gens).size();
      break;
    }
    case RepKind::Boolean: {
      auto gens = boolean_generators(g);
      for (const auto& m : gens) rep.generator_images.push_back(bool_matrix_string(m));
      rep.image_size = image_semigroup(gens).size();
      break;
    }
  }
  if (engine_size)
    rep.faithful = rep.image_size == *engine_size ? Faithful::Yes : Faithful::No;
  return rep;
}

std::vector<Transformation> c_transformations(int n) {
  if (n < 1) throw std::invalid_argument("c_transformations: n must be positive");
  std::vector<Transformation> out;
  for (int i = 1; i <= n; ++i) {
    Transformation t = Transformation::identity(n + 1);
    t.img[i] = static_cast<char>(i);  // i+1 maps to i
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<std::vector<int>> m1_elements(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> x;
  auto rec = [&](auto&& self, int k) -> void {
    if (k == n + 2) {
      out.push_back(x);
      return;
    }
    int lo = k == 1 ? 1 : x.back();
    for (int v = lo; v <= k; ++v) {
      x.push_back(v);
      self(self, k + 1);
      x.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<int> m1_act(int i, const std::vector<int>& x) {
  if (i < 1 || static_cast<size_t>(i) >= x.size())
    throw std::invalid_argument("m1_act: index out of range");
  for (size_t k = 0; k < x.size(); ++k)
    if (x[k] < 1 || x[k] > static_cast<int>(k) + 1 || (k && x[k] < x[k - 1]))
      throw std::invalid_argument("m1_act: malformed staircase sequence");
  std::vector<int> out = x;
  out[i] = out[i - 1];
  return out;
}

std::vector<std::vector<int>> m2_elements(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> x;
  auto rec = [&](auto&& self, int ones, int sum) -> void {
    if (static_cast<int>(x.size()) == 2 * (n + 1)) {
      out.push_back(x);
      return;
    }
    if (ones < n + 1) {
      x.push_back(1);
      self(self, ones + 1, sum + 1);
      x.pop_back();
    }
    if (sum > 0 && static_cast<int>(x.size()) - ones < n + 1) {
      x.push_back(-1);
      self(self, ones, sum - 1);
      x.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<int> m2_act(int i, const std::vector<int>& x) {
  std::vector<size_t> ones;
  int sum = 0;
  for (size_t p = 0; p < x.size(); ++p) {
    if (x[p] != 1 && x[p] != -1) throw std::invalid_argument("m2_act: entries must be +-1");
    sum += x[p];
    if (sum < 0) throw std::invalid_argument("m2_act: negative prefix sum");
    if (x[p] == 1) ones.push_back(p);
  }
  if (sum != 0) throw std::invalid_argument("m2_act: unbalanced sequence");
  if (i < 1 || static_cast<size_t>(i) >= ones.size())
    throw std::invalid_argument("m2_act: index out of range");
  size_t pi = ones[i - 1], pj = ones[i];
  if (pj == pi + 1) return x;
  std::vector<int> out = x;
  out.erase(out.begin() + static_cast<long>(pj));
  out.insert(out.begin() + static_cast<long>(pi) + 1, 1);
  return out;
}

std::optional<size_t> is_regular_action(const FiniteMonoid& m, size_t num_points,
                                        const std::function<size_t(int, size_t)>& act_gen) {
  // act of element = fold generators over the canonical word, last letter
  // innermost; built along the BFS tree.
  std::vector<size_t> tab(m.size() * num_points);
  for (size_t x = 0; x < num_points; ++x) tab[m.identity * num_points + x] = x;
  for (uint32_t e = 0; e < m.size(); ++e) {
    if (e == m.identity) continue;
    for (size_t x = 0; x < num_points; ++x) {
      size_t y = act_gen(m.parent_gen[e], x);
      tab[e * num_points + x] = tab[m.parent[e] * num_points + y];
    }
  }
  for (uint32_t a = 0; a < m.size(); ++a) {
    std::vector<uint32_t> row = m.left_row(a);
    for (uint32_t b = 0; b < m.size(); ++b)
      for (size_t x = 0; x < num_points; ++x)
        if (tab[row[b] * num_points + x] != tab[a * num_points + tab[b * num_points + x]])
          throw std::runtime_error("is_regular_action: action axioms fail");
  }
  if (m.size() != num_points) return std::nullopt;
  for (size_t x = 0; x < num_points; ++x) {
    std::vector<uint8_t> hit(num_points, 0);
    bool ok = true;
    for (uint32_t e = 0; e < m.size() && ok; ++e) {
      size_t y = tab[e * num_points + x];
      if (hit[y]) ok = false;
      hit[y] = 1;
    }
    if (ok) return x;
  }
  return std::nullopt;
}

int simple_action(uint32_t x_mask, int i) { return (x_mask >> (i - 1)) & 1u; }

ProjectiveModule projective_basis(const FiniteMonoid& m, uint32_t x_mask) {
  if (m.num_gens > 0 && (x_mask >> m.num_gens) != 0)
    throw std::invalid_argument("projective_basis: subset out of range");
  ProjectiveModule mod;
  std::vector<int32_t> pos(m.size(), -1);
  for (uint32_t b = 0; b < m.size(); ++b) {
    bool member = true;
    for (int i = 1; i <= m.num_gens && member; ++i)
      if (m.right(b, i) == b && !((x_mask >> (i - 1)) & 1u)) member = false;
    if (member) {
      pos[b] = static_cast<int32_t>(mod.basis.size());
      mod.basis.push_back(b);
    }
  }
  mod.action.assign(m.size() * mod.basis.size(), -1);
  for (uint32_t alpha = 0; alpha < m.size(); ++alpha) {
    std::vector<uint32_t> row = m.left_row(alpha);
    for (size_t b = 0; b < mod.basis.size(); ++b)
      mod.action[alpha * mod.basis.size() + b] = pos[row[mod.basis[b]]];
  }
  return mod;
}

std::string rep_report_json(const RepReport& r) {
  nlohmann::json j;
  j["kind"] = r.kind == RepKind::Transformation ? "transformation"
              : r.kind == RepKind::Matrix       ? "matrix"
                                                : "boolean";
  j["generator_images"] = r.generator_images;
  j["image_size"] = r.image_size;
  if (r.monoid_size)
    j["monoid_size"] = *r.monoid_size;
  else
    j["monoid_size"] = nullptr;
  j["faithful"] = r.faithful == Faithful::Yes   ? "true"
                  : r.faithful == Faithful::No ? "false"
                                               : "unknown";
  j["open_in_general"] = r.open_in_general;
  return j.dump();
}

std::string action_to_dot(const TauRep& rep) {
  std::string out = "digraph action {\n";
  for (size_t p = 0; p < rep.point_labels.size(); ++p)
    out += "  p" + std::to_string(p) + " [label=\"" + rep.point_labels[p] + "\"];\n";
  for (size_t i = 0; i < rep.gens.size(); ++i)
    for (int k = 1; k <= rep.gens[i].degree(); ++k)
      if (rep.gens[i](k) != k)
        out += "  p" + std::to_string(k - 1) + " -> p" + std::to_string(rep.gens[i](k) - 1) +
               " [label=\"" + std::to_string(i + 1) + "\"];\n";
  out += "}\n";
  return out;
}

}  // namespace hk
