#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "turanlab/support.hpp"

namespace turanlab {

// All r-subsets of [0, n), ranked colexicographically. Serves as the
// variable universe of the edge-variable ring.
class EdgeUniverse {
 public:
  EdgeUniverse(int n, int r);

  int n() const { return n_; }
  int r() const { return r_; }
  int size() const { return static_cast<int>(sets_.size()); }
  bool fits_support() const { return size() <= kMaxUniverse; }

  VertexSet edge(int rank) const { return sets_[rank]; }
  const std::vector<VertexSet>& edges() const { return sets_; }
  // Colex rank of an r-set; throws ArgumentError if `s` is not an r-subset.
  int rank(VertexSet s) const;

  // Support-valued views; require fits_support().
  Support all() const;
  // Every r-set containing `s` (e.g. a pair: the codegree star).
  Support superset_of(VertexSet s) const;

  bool operator==(const EdgeUniverse& o) const { return n_ == o.n_ && r_ == o.r_; }

 private:
  int n_;
  int r_;
  std::vector<VertexSet> sets_;
};

// An r-uniform hypergraph on [0, n). Edges are kept as a sorted,
// duplicate-free list of vertex bitmasks (colex order).
class RGraph {
 public:
  RGraph(int n, int r);
  RGraph(int n, int r, std::vector<VertexSet> edges);
  // Edges given as vertex lists (0-based).
  static RGraph from_lists(int n, int r, const std::vector<std::vector<int>>& edges);
  static RGraph from_support(const EdgeUniverse& universe, Support edges);
  static RGraph complete(int n, int r);

  int n() const { return n_; }
  int r() const { return r_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<VertexSet>& edges() const { return edges_; }
  bool has_edge(VertexSet e) const;
  VertexSet vertex_support() const;

  Support to_support(const EdgeUniverse& universe) const;
  RGraph complement() const;

  bool operator==(const RGraph&) const = default;

 private:
  int n_;
  int r_;
  std::vector<VertexSet> edges_;
};

// Explicit forbidden (or target) r-graph, given on its own vertex set.
struct Pattern {
  std::string name;
  RGraph graph;
};

// Mubayi's core-pair family K_ell^(r): r-graphs with at most C(ell,2) edges
// containing an ell-set whose pairs are all covered by edges.
struct CoreFamily {
  int ell;
  int r;
};

using FamilySpec = std::variant<Pattern, CoreFamily>;

int family_uniformity(const FamilySpec& spec);
std::string family_name(const FamilySpec& spec);

Pattern complete_graph_pattern(int k);  // K_k, r = 2
Pattern path_pattern(int vertices);     // path on `vertices` vertices, r = 2
Pattern cycle_pattern(int length);      // C_length, r = 2

// All copies, inside the complete r-graph on [n], of a family. Each copy is
// an edge set over EdgeUniverse(n, r), listed in ascending bit order.
struct CopyFamily {
  int n;
  int r;
  std::vector<Support> copies;
};

struct CopyLimits {
  std::int64_t max_embeddings = 20'000'000;  // projected injections for patterns
  std::int64_t max_copies = 200'000;
};

// Balanced complete q-partite r-graph T_r(n, q); vertices assigned to parts
// in index order, larger parts first.
RGraph turan_construct(int n, int q, int r);

// t_r(n, q) = e_r of the balanced part sizes.
std::int64_t turan_count(int n, int q, int r);

int codegree(const RGraph& g, int a, int b);

// Pairs covered by at least one edge, as an adjacency list over [0, n).
std::vector<VertexSet> shadow_graph(const RGraph& g);
std::vector<VertexSet> shadow_graph(const EdgeUniverse& universe, Support edges);

// True iff the graph given by `adjacency` has an ell-clique.
bool has_clique(const std::vector<VertexSet>& adjacency, int ell);

// Whether H itself is a member of K_ell^(r).
bool is_member_core_family(const RGraph& h, int ell);

// For a core family only inclusion-minimal copies are emitted (each a
// minimal edge system covering the pairs of some ell-core); hitting every
// minimal copy is equivalent to hitting every copy.
CopyFamily enumerate_forbidden_copies(const FamilySpec& spec, int n, const CopyLimits& limits = {});

std::int64_t count_copies(const RGraph& g, const CopyFamily& copies);
std::int64_t count_copies(Support g, const CopyFamily& copies);

// Decides whether an r-graph contains a member of `spec`, without going
// through copy enumeration: patterns by backtracking embedding, core
// families by an ell-clique in the shadow.
class ContainmentOracle {
 public:
  ContainmentOracle(const FamilySpec& spec, int n);

  const EdgeUniverse& universe() const { return universe_; }
  // `graph` given as a support over universe(); ignores edge anchoring.
  bool contains(Support graph) const;
  // Same as contains(), assuming `graph - {new_edge}` contains no member.
  bool contains_through(Support graph, int new_edge) const;

 private:
  bool embed_from(Support graph, std::vector<int>& image, VertexSet used, int next_vertex) const;
  bool edges_ok(Support graph, const std::vector<int>& image, int vertex) const;

  FamilySpec spec_;
  EdgeUniverse universe_;
  // pattern data, vertices compacted to [0, k)
  int pattern_vertices_ = 0;
  std::vector<std::vector<int>> pattern_edges_;
  std::vector<std::vector<int>> edges_closed_at_;  // pattern edges whose max vertex is v
};

struct SearchOptions {
  int threads = 1;
  int max_universe = 36;  // potential edges explored by the exhaustive oracles
};

struct ExtremalResult {
  std::int64_t value = 0;
  RGraph witness;
};

// ex(n, spec) by exhaustive branch and bound over subgraphs of the complete
// r-graph. The witness is the canonical_less-first optimal edge set and does
// not depend on the thread count.
ExtremalResult brute_force_ex(int n, const FamilySpec& spec, const SearchOptions& options = {});

// ex(n, T, F): maximum number of T-copies in an F-free r-graph on [n].
ExtremalResult brute_force_gen_ex(int n, const FamilySpec& target, const FamilySpec& forbidden,
                                  const SearchOptions& options = {});

// Text format: first line "n r", then one edge per line as r 1-based vertex
// indices; '#' starts a comment.
RGraph parse_hypergraph(std::istream& in);
RGraph parse_hypergraph_text(const std::string& text);
std::string format_hypergraph(const RGraph& g);

}  // namespace turanlab
