#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "turanlab/support.hpp"

namespace turanlab {

// k[x_0..x_{n-1}] modulo all squares and the products x_a x_b over the
// pairs of a "kill graph". Standard monomials of degree d are the d-subsets
// containing no kill pair, so every quantity here is a count.
class SquareZeroQuotient {
 public:
  explicit SquareZeroQuotient(int n);
  SquareZeroQuotient(int n, std::span<const std::pair<int, int>> kill_pairs);

  // Complete balanced q-partite quotient: kill exactly the pairs inside a
  // part of the balanced q-partition.
  static SquareZeroQuotient balanced_partite(int n, int q);
  // Kill graph read from the low C(n,2) bits of a colex-ranked pair mask.
  static SquareZeroQuotient from_pair_mask(int n, std::uint64_t mask);

  int n() const { return n_; }
  bool killed(int a, int b) const { return (adjacency_[a] >> b) & 1U; }
  VertexSet kill_neighbors(int v) const { return adjacency_[v]; }
  const std::vector<VertexSet>& adjacency() const { return adjacency_; }
  std::vector<std::pair<int, int>> kill_pairs() const;

  void kill(int a, int b);
  void revive(int a, int b);

  bool operator==(const SquareZeroQuotient&) const = default;

 private:
  int n_;
  std::vector<VertexSet> adjacency_;
};

// dim A_d: number of standard monomials of degree d.
std::int64_t hilbert(const SquareZeroQuotient& a, int d);

// Whether A_{q+1} = 0.
bool top_vanishing(const SquareZeroQuotient& a, int q);

// Whether the squarefree monomial on `vertices` is nonzero in A.
bool is_standard(const SquareZeroQuotient& a, VertexSet vertices);

// Parallel classes: maximal sets of pairwise killed variables with equal
// kill neighbourhoods outside the pair (true twins). Classes are listed by
// smallest member; singletons allowed.
struct ParallelPartition {
  std::vector<VertexSet> classes;
  // cross_zero[i][j]: all products between classes i and j vanish.
  std::vector<std::vector<bool>> cross_zero;

  int class_of(int v) const;
};

ParallelPartition parallel_classes(const SquareZeroQuotient& a);

// lambda_C(d) = dim x_c A_d for c in C: standard d-sets avoiding c with no
// kill pair to c. Zero for d < 0.
std::int64_t lambda(const SquareZeroQuotient& a, int c, int d);

enum class CloneDirection {
  kVFromU,  // V becomes clones of U
  kUFromV,  // U becomes clones of V
};

// Algebraic cloning of parallel classes. Requires U, V to be distinct
// parallel classes with all cross products zero (PreconditionError).
SquareZeroQuotient clone(const SquareZeroQuotient& a, VertexSet u, VertexSet v, CloneDirection direction);

struct SymmetrizeStep {
  VertexSet u;  // class with the smaller minimum index
  VertexSet v;
  CloneDirection direction;
  std::int64_t lambda_u;  // lambda_U(r-1)
  std::int64_t lambda_v;
  std::int64_t hilbert_before;
  std::int64_t hilbert_after;
};

struct SymmetrizeResult {
  SquareZeroQuotient terminal;
  std::vector<SymmetrizeStep> trace;
  std::vector<VertexSet> classes;  // terminal parallel classes
};

// Repeatedly clones the first (by smallest members) pair of distinct
// parallel classes with zero cross products, cloning the class with the
// smaller lambda(r-1) from the other (V from U on ties). Requires
// top_vanishing(a, q).
SymmetrizeResult symmetrize(const SquareZeroQuotient& a, int q, int r);

struct SmoothingResult {
  std::vector<std::int64_t> values;
  std::int64_t delta = 0;
  bool changed = false;
};

// Moves a maximal entry a and a minimal entry b (first occurrences) to
// a-1, b+1 when a >= b+2. delta = (a-b-1) e_{r-2}(rest).
SmoothingResult smoothing_step(std::span<const std::int64_t> values, int r);

struct HilbertTuranReport {
  int n = 0;
  int q = 0;
  int r = 0;
  std::int64_t bound = 0;       // t_r(n, q)
  std::int64_t max_found = 0;   // max hilbert(A, r) over A with A_{q+1} = 0
  std::int64_t checked = 0;     // kill graphs satisfying top vanishing
  std::int64_t violations = 0;
  bool balanced_attains = false;
  bool ok() const { return violations == 0 && max_found == bound && balanced_attains; }
};

// Exhaustive check over all 2^C(n,2) kill graphs (n <= 7).
HilbertTuranReport brute_force_hilbert_turan(int n, int q, int r);

}  // namespace turanlab
