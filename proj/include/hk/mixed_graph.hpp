#ifndef HK_MIXED_GRAPH_HPP
#define HK_MIXED_GRAPH_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hk {

// Edge kind relative to the stored pair (a, b) with a < b:
// Forward means the arrow a -> b, Backward means b -> a.
enum class EdgeKind : uint8_t { Unoriented, Forward, Backward };

// A simple mixed graph on vertices 1..n: at most one edge per unordered
// pair, no loops, each edge either unoriented or oriented.
struct MixedGraph {
  int n = 0;
  std::map<std::pair<int, int>, EdgeKind> edges;  // keys have first < second

  MixedGraph() = default;
  explicit MixedGraph(int n_) : n(n_) {}

  void add_unoriented(int i, int j);
  void add_arrow(int from, int to);

  bool has_edge(int i, int j) const;
  bool has_arrow(int from, int to) const;
  bool has_unoriented(int i, int j) const;

  // 0 = no edge, 1 = unoriented, 2 = arrow i->j, 3 = arrow j->i.
  int pair_code(int i, int j) const;

  int degree(int v) const;
  int indegree(int v) const;
  int outdegree(int v) const;
  std::vector<int> neighbors(int v) const;

  // Pair codes for i<j in lexicographic pair order; equal strings iff
  // equal graphs on the same labeling.
  std::string encoding() const;

  bool operator==(const MixedGraph&) const = default;

 private:
  void check_pair(int i, int j) const;
};

// Text format: first non-comment line "vertices <n>", then one edge per
// line ("i -- j", "i -> j" or "i <- j"); '#' starts a comment.
MixedGraph parse_graph(const std::string& text);

MixedGraph opposite(const MixedGraph& g);

// Relabel through p (old vertex v becomes p[v-1]).
MixedGraph relabel(const MixedGraph& g, const std::vector<int>& p);

// Lexicographically least bijection preserving edge kinds and
// orientations, or nullopt. f[i-1] is the image of vertex i.
std::optional<std::vector<int>> are_graphs_isomorphic(const MixedGraph& g, const MixedGraph& h);

// Representative with the lexicographically least encoding over all relabelings.
MixedGraph canonical_form(const MixedGraph& g);

// One canonical representative per isomorphism class, sorted by encoding.
std::vector<MixedGraph> enumerate_mixed_graphs(int n);

struct GraphShape {
  bool is_simply_laced_dynkin_union = false;
  bool is_type_a_path = false;
  bool is_linear_orientation = false;
  // Full subgraph i -> j <- k with no edge between i and k, in the graph
  // itself and in its opposite.
  std::optional<std::array<int, 3>> eq3_witness;
  std::optional<std::array<int, 3>> eq3_witness_opposite;
  bool triple_point_indegree_ok = true;
};

GraphShape classify_shape(const MixedGraph& g);

// f maps vertices of g into h (f[i-1] = image of i). True iff f is
// injective, preserves edge kinds/orientations, and the image is a full
// subgraph of h.
bool is_full_embedding(const std::vector<int>& f, const MixedGraph& g, const MixedGraph& h);

std::string graph_to_json(const MixedGraph& g);

// Builders used throughout tests and the verification suite.
MixedGraph path_graph(int n);    // unoriented path 1 - 2 - ... - n
MixedGraph linear_path(int n);   // arrows i+1 -> i for i = 1..n-1
// Orientation of the path 1-2-...-n: bit k of mask set means the edge
// {k+1, k+2} points towards the smaller label (k+2 -> k+1); kind[k]
// selects per-edge kinds for mixed paths (0 un, 1 down, 2 up).
MixedGraph oriented_path(int n, uint32_t mask);
MixedGraph mixed_path(int n, const std::vector<int>& kind);

// True iff the underlying undirected graph is exactly the path
// 1 - 2 - ... - n with the natural labeling.
bool is_natural_path(const MixedGraph& g);

}  // namespace hk

#endif
