#ifndef HK_REPS_HPP
#define HK_REPS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hk/mixed_graph.hpp"
#include "hk/monoid.hpp"

namespace hk {

// Total transformation of {1..m}; img holds the images as raw bytes.
// Products follow word order with the left factor outermost, so the word
// e_i e_j acts by applying the transformation of j first.
struct Transformation {
  std::string img;

  static Transformation identity(int m);
  int degree() const { return static_cast<int>(img.size()); }
  int operator()(int k) const { return static_cast<unsigned char>(img[k - 1]); }
  bool operator==(const Transformation&) const = default;
};

Transformation compose(const Transformation& f, const Transformation& g);  // f after g

struct TransformationHash {
  size_t operator()(const Transformation& t) const { return std::hash<std::string>{}(t.img); }
};

struct IntMatrix {
  int n = 0;
  std::vector<long long> a;  // row-major

  static IntMatrix identity(int n);
  long long& at(int r, int c) { return a[r * n + c]; }
  long long at(int r, int c) const { return a[r * n + c]; }
  bool is_zero_one() const;
  bool operator==(const IntMatrix&) const = default;
};

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);

struct IntMatrixHash {
  size_t operator()(const IntMatrix& m) const;
};

// Boolean matrix with bitmask rows; product is the OR/AND matrix product.
struct BoolMatrix {
  int n = 0;
  std::vector<uint64_t> rows;

  static BoolMatrix identity(int n);
  bool at(int r, int c) const { return (rows[r] >> c) & 1u; }
  bool operator==(const BoolMatrix&) const = default;
};

BoolMatrix operator*(const BoolMatrix& x, const BoolMatrix& y);

struct BoolMatrixHash {
  size_t operator()(const BoolMatrix& m) const;
};

// Point set and generator transformations of the sink/source/edge action
// for a fully oriented Dynkin-union graph whose triple points (if any)
// have indegree at most one. Indegree-two sinks contribute two points,
// and the choice map sends the first copy to the in-edge with the
// smallest source label; alt_choice picks the other edge.
struct TauRep {
  std::vector<std::string> point_labels;
  std::vector<Transformation> gens;
};

TauRep tau_generators(const MixedGraph& g, bool alt_choice = false);

// theta_i fixes v_j for j != i and sends v_i to the sum of v_k over
// arrows k -> i.
std::vector<IntMatrix> theta_generators(const MixedGraph& g);

// Entrywise nonzero pattern of the integer matrices.
std::vector<BoolMatrix> boolean_generators(const MixedGraph& g);

FiniteMonoid image_semigroup(const std::vector<Transformation>& gens, size_t max_elements = 200000);
FiniteMonoid image_semigroup(const std::vector<IntMatrix>& gens, size_t max_elements = 200000);
FiniteMonoid image_semigroup(const std::vector<BoolMatrix>& gens, size_t max_elements = 200000);

enum class RepKind { Transformation, Matrix, Boolean };
enum class Faithful { Yes, No, Unknown };

struct RepReport {
  RepKind kind;
  std::vector<std::string> generator_images;
  size_t image_size = 0;
  std::optional<size_t> monoid_size;
  Faithful faithful = Faithful::Unknown;
  // The faithfulness question is only settled in general for the fully
  // collapsed chain orientation; elsewhere the verdict is per-instance.
  bool open_in_general = true;
};

RepReport check_faithful(const MixedGraph& g, RepKind kind, std::optional<size_t> engine_size);

// The idempotent chain collapses T_i: i+1 -> i, everything else fixed.
std::vector<Transformation> c_transformations(int n);

// Weakly increasing sequences x_1 <= ... <= x_{n+1} with x_i <= i.
std::vector<std::vector<int>> m1_elements(int n);
std::vector<int> m1_act(int i, const std::vector<int>& x);

// Sequences of n+1 ones and n+1 minus-ones with nonnegative prefix sums.
std::vector<std::vector<int>> m2_elements(int n);
std::vector<int> m2_act(int i, const std::vector<int>& x);

// Verifies the left-action axioms of m (throws on failure), then returns
// the least point whose evaluation map m -> m.x is a bijection, if any.
// The staircase and ballot actions compose on the right of the chain
// monoid, so callers hand in its opposite.
std::optional<size_t> is_regular_action(const FiniteMonoid& m, size_t num_points,
                                        const std::function<size_t(int, size_t)>& act_gen);

// Scalar action of generator i on the one-dimensional module indexed by X.
int simple_action(uint32_t x_mask, int i);

struct ProjectiveModule {
  std::vector<uint32_t> basis;   // elements beta with: beta*e_i = beta implies i in X
  std::vector<int32_t> action;   // size() x basis.size(); -1 encodes zero
  int32_t act(uint32_t alpha, size_t b, size_t basis_size) const {
    return action[alpha * basis_size + b];
  }
};

ProjectiveModule projective_basis(const FiniteMonoid& m, uint32_t x_mask);

std::string rep_report_json(const RepReport& r);
std::string action_to_dot(const TauRep& rep);

}  // namespace hk

#endif
