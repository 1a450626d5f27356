#include "turanlab/hypergraph.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "include_first_search.hpp"
#include "turanlab/combinatorics.hpp"
#include "turanlab/errors.hpp"

namespace turanlab {
namespace {

constexpr std::int64_t kMaxEnumeratedEdges = 1 << 20;

// binom[n][k] for n, k <= 32, used by the colex rank.
const auto& binomial_table() {
  static const auto table = [] {
    std::array<std::array<std::int64_t, kMaxVertices + 1>, kMaxVertices + 1> t{};
    for (int n = 0; n <= kMaxVertices; ++n) {
      for (int k = 0; k <= kMaxVertices; ++k) t[n][k] = binomial(n, k);
    }
    return t;
  }();
  return table;
}

void check_vertex_count(int n, const char* where) {
  if (n < 1 || n > kMaxVertices) {
    throw ArgumentError(std::string(where) + ": n must lie in [1, 32]");
  }
}

}  // namespace

EdgeUniverse::EdgeUniverse(int n, int r) : n_(n), r_(r) {
  check_vertex_count(n, "EdgeUniverse");
  if (r < 1) throw ArgumentError("EdgeUniverse: r must be positive");
  if (binomial(n, r) > kMaxEnumeratedEdges) throw ScaleGuardError("EdgeUniverse: too many r-sets");
  sets_.reserve(static_cast<std::size_t>(binomial(n, r)));
  for_each_k_subset(n, r, [this](VertexSet s) {
    sets_.push_back(s);
    return true;
  });
}

int EdgeUniverse::rank(VertexSet s) const {
  if (vertex_count(s) != r_ || (n_ < kMaxVertices && (s >> n_) != 0)) {
    throw ArgumentError("EdgeUniverse::rank: not an r-subset of [n]");
  }
  const auto& binom = binomial_table();
  std::int64_t rank = 0;
  int i = 1;
  for (VertexSet rest = s; rest != 0; rest &= rest - 1, ++i) rank += binom[std::countr_zero(rest)][i];
  return static_cast<int>(rank);
}

Support EdgeUniverse::all() const {
  if (!fits_support()) throw ScaleGuardError("EdgeUniverse: more than 64 r-sets");
  return Support::full(size());
}

Support EdgeUniverse::superset_of(VertexSet s) const {
  if (!fits_support()) throw ScaleGuardError("EdgeUniverse: more than 64 r-sets");
  Support out;
  for (int i = 0; i < size(); ++i) {
    if ((sets_[i] & s) == s) out.insert(i);
  }
  return out;
}

RGraph::RGraph(int n, int r) : n_(n), r_(r) {
  check_vertex_count(n, "RGraph");
  if (r < 1) throw ArgumentError("RGraph: r must be positive");
}

RGraph::RGraph(int n, int r, std::vector<VertexSet> edges) : RGraph(n, r) {
  for (VertexSet e : edges) {
    if (vertex_count(e) != r || (n < kMaxVertices && (e >> n) != 0)) {
      throw ArgumentError("RGraph: every edge needs exactly r distinct vertices in [n]");
    }
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw ArgumentError("RGraph: duplicate edge");
  }
  edges_ = std::move(edges);
}

RGraph RGraph::from_lists(int n, int r, const std::vector<std::vector<int>>& edges) {
  std::vector<VertexSet> sets;
  sets.reserve(edges.size());
  for (const auto& list : edges) {
    VertexSet s = 0;
    for (int v : list) {
      if (v < 0 || v >= n) throw ArgumentError("RGraph: vertex index out of range");
      if (s & (VertexSet{1} << v)) throw ArgumentError("RGraph: repeated vertex in an edge");
      s |= VertexSet{1} << v;
    }
    sets.push_back(s);
  }
  return RGraph(n, r, std::move(sets));
}

RGraph RGraph::from_support(const EdgeUniverse& universe, Support edges) {
  std::vector<VertexSet> sets;
  for (int i : edges.elements()) sets.push_back(universe.edge(i));
  return RGraph(universe.n(), universe.r(), std::move(sets));
}

RGraph RGraph::complete(int n, int r) {
  const EdgeUniverse universe(n, r);
  return RGraph(n, r, universe.edges());
}

bool RGraph::has_edge(VertexSet e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

VertexSet RGraph::vertex_support() const {
  return std::accumulate(edges_.begin(), edges_.end(), VertexSet{0}, std::bit_or<>());
}

Support RGraph::to_support(const EdgeUniverse& universe) const {
  if (universe.n() != n_ || universe.r() != r_) throw ArgumentError("RGraph::to_support: universe mismatch");
  if (!universe.fits_support()) throw ScaleGuardError("RGraph::to_support: more than 64 r-sets");
  Support out;
  for (VertexSet e : edges_) out.insert(universe.rank(e));
  return out;
}

RGraph RGraph::complement() const {
  const EdgeUniverse universe(n_, r_);
  std::vector<VertexSet> missing;
  for (VertexSet e : universe.edges()) {
    if (!has_edge(e)) missing.push_back(e);
  }
  return RGraph(n_, r_, std::move(missing));
}

int family_uniformity(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, Pattern>) {
          return s.graph.r();
        } else {
          return s.r;
        }
      },
      spec);
}

std::string family_name(const FamilySpec& spec) {
  if (const auto* p = std::get_if<Pattern>(&spec)) return p->name;
  const auto& f = std::get<CoreFamily>(spec);
  return "K_ell_r(" + std::to_string(f.ell) + "," + std::to_string(f.r) + ")";
}

Pattern complete_graph_pattern(int k) {
  return {"K" + std::to_string(k), RGraph::complete(k, 2)};
}

Pattern path_pattern(int vertices) {
  std::vector<std::vector<int>> edges;
  for (int v = 0; v + 1 < vertices; ++v) edges.push_back({v, v + 1});
  return {"P" + std::to_string(vertices), RGraph::from_lists(vertices, 2, edges)};
}

Pattern cycle_pattern(int length) {
  if (length < 3) throw ArgumentError("cycle_pattern: length must be at least 3");
  std::vector<std::vector<int>> edges;
  for (int v = 0; v < length; ++v) edges.push_back({v, (v + 1) % length});
  return {"C" + std::to_string(length), RGraph::from_lists(length, 2, edges)};
}

RGraph turan_construct(int n, int q, int r) {
  if (q < 1 || r < 1) throw ArgumentError("turan_construct: need n, q, r >= 1");
  const auto labels = balanced_part_labels(n, q);
  std::vector<VertexSet> edges;
  for_each_k_subset(n, r, [&](VertexSet s) {
    VertexSet parts_seen = 0;
    for (VertexSet rest = s; rest != 0; rest &= rest - 1) {
      const VertexSet bit = VertexSet{1} << labels[std::countr_zero(rest)];
      if (parts_seen & bit) return true;
      parts_seen |= bit;
    }
    edges.push_back(s);
    return true;
  });
  return RGraph(n, r, std::move(edges));
}

std::int64_t turan_count(int n, int q, int r) {
  if (q < 1) throw ArgumentError("turan_count: q must be positive");
  const auto sizes = balanced_part_sizes(n, q);
  const std::vector<std::int64_t> wide(sizes.begin(), sizes.end());
  return elem_sym(wide, r);
}

int codegree(const RGraph& g, int a, int b) {
  if (a == b || a < 0 || b < 0 || a >= g.n() || b >= g.n()) {
    throw ArgumentError("codegree: need two distinct vertices in [n]");
  }
  const VertexSet pair = (VertexSet{1} << a) | (VertexSet{1} << b);
  return static_cast<int>(std::count_if(g.edges().begin(), g.edges().end(),
                                        [pair](VertexSet e) { return (e & pair) == pair; }));
}

namespace {

void add_shadow(std::vector<VertexSet>& adjacency, VertexSet e) {
  for (VertexSet rest = e; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    adjacency[v] |= e & ~(VertexSet{1} << v);
  }
}

bool clique_from(const std::vector<VertexSet>& adjacency, VertexSet candidates, int needed) {
  if (needed == 0) return true;
  if (vertex_count(candidates) < needed) return false;
  for (VertexSet rest = candidates; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const VertexSet later = rest & ~(VertexSet{1} << v);
    if (clique_from(adjacency, later & adjacency[v], needed - 1)) return true;
  }
  return false;
}

}  // namespace

std::vector<VertexSet> shadow_graph(const RGraph& g) {
  std::vector<VertexSet> adjacency(static_cast<std::size_t>(g.n()), 0);
  for (VertexSet e : g.edges()) add_shadow(adjacency, e);
  return adjacency;
}

std::vector<VertexSet> shadow_graph(const EdgeUniverse& universe, Support edges) {
  std::vector<VertexSet> adjacency(static_cast<std::size_t>(universe.n()), 0);
  for (std::uint64_t b = edges.bits(); b != 0; b &= b - 1) add_shadow(adjacency, universe.edge(std::countr_zero(b)));
  return adjacency;
}

bool has_clique(const std::vector<VertexSet>& adjacency, int ell) {
  if (ell <= 0) return true;
  const int n = static_cast<int>(adjacency.size());
  const VertexSet all = n >= kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
  return clique_from(adjacency, all, ell);
}

bool is_member_core_family(const RGraph& h, int ell) {
  if (h.r() < 2 || ell < 2) throw ArgumentError("is_member_core_family: need r >= 2 and ell >= 2");
  if (h.edge_count() > binomial(ell, 2)) return false;
  return has_clique(shadow_graph(h), ell);
}

namespace {

struct CompactPattern {
  int vertices = 0;
  std::vector<std::vector<int>> edges;
};

CompactPattern compact(const RGraph& g) {
  const VertexSet support = g.vertex_support();
  std::vector<int> index(static_cast<std::size_t>(g.n()), -1);
  CompactPattern out;
  for (int v : vertices_of(support)) index[v] = out.vertices++;
  for (VertexSet e : g.edges()) {
    std::vector<int> list;
    for (int v : vertices_of(e)) list.push_back(index[v]);
    out.edges.push_back(std::move(list));
  }
  return out;
}

std::int64_t falling_factorial(int n, int k) {
  std::int64_t value = 1;
  for (int i = 0; i < k; ++i) {
    value *= n - i;
    if (value > (std::int64_t{1} << 50)) return value;
  }
  return value;
}

CopyFamily pattern_copies(const Pattern& pattern, int n, const EdgeUniverse& universe, const CopyLimits& limits) {
  const CompactPattern f = compact(pattern.graph);
  CopyFamily out{n, pattern.graph.r(), {}};
  if (f.edges.empty()) throw ArgumentError("enumerate_forbidden_copies: pattern has no edges");
  if (f.vertices > n) return out;
  if (falling_factorial(n, f.vertices) > limits.max_embeddings) {
    throw ScaleGuardError("enumerate_forbidden_copies: projected embeddings exceed the cap");
  }
  std::unordered_set<Support, SupportHash> seen;
  std::vector<int> image(static_cast<std::size_t>(f.vertices), -1);
  std::function<void(int, VertexSet)> assign = [&](int v, VertexSet used) {
    if (v == f.vertices) {
      Support copy;
      for (const auto& e : f.edges) {
        VertexSet s = 0;
        for (int u : e) s |= VertexSet{1} << image[u];
        copy.insert(universe.rank(s));
      }
      if (seen.insert(copy).second && static_cast<std::int64_t>(seen.size()) > limits.max_copies) {
        throw ScaleGuardError("enumerate_forbidden_copies: copy count exceeds the cap");
      }
      return;
    }
    for (int host = 0; host < n; ++host) {
      if (used & (VertexSet{1} << host)) continue;
      image[v] = host;
      assign(v + 1, used | (VertexSet{1} << host));
    }
  };
  assign(0, 0);
  out.copies.assign(seen.begin(), seen.end());
  std::sort(out.copies.begin(), out.copies.end(), [](Support a, Support b) { return a.bits() < b.bits(); });
  return out;
}

CopyFamily core_copies(const CoreFamily& family, int n, const EdgeUniverse& universe, const CopyLimits& limits) {
  CopyFamily out{n, family.r, {}};
  if (family.ell > n || family.r > n) return out;
  std::unordered_set<Support, SupportHash> seen;

  for_each_k_subset(n, family.ell, [&](VertexSet core) {
    const auto core_vertices = vertices_of(core);
    std::vector<VertexSet> pairs;
    for (std::size_t i = 0; i < core_vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < core_vertices.size(); ++j) {
        pairs.push_back((VertexSet{1} << core_vertices[i]) | (VertexSet{1} << core_vertices[j]));
      }
    }
    const auto pair_count = static_cast<int>(pairs.size());
    // pairs of the core covered by each universe edge
    std::vector<std::uint64_t> covers(static_cast<std::size_t>(universe.size()), 0);
    for (int e = 0; e < universe.size(); ++e) {
      for (int p = 0; p < pair_count; ++p) {
        if ((universe.edge(e) & pairs[p]) == pairs[p]) covers[e] |= std::uint64_t{1} << p;
      }
    }
    const std::uint64_t all_pairs = pair_count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << pair_count) - 1;

    std::function<void(std::uint64_t, Support)> extend = [&](std::uint64_t covered, Support chosen) {
      if (covered == all_pairs) {
        // keep only systems where every edge covers some pair privately
        for (int e : chosen.elements()) {
          std::uint64_t others = 0;
          for (int o : chosen.elements()) {
            if (o != e) others |= covers[o];
          }
          if ((covers[e] & ~others) == 0) return;
        }
        if (seen.insert(chosen).second && static_cast<std::int64_t>(seen.size()) > limits.max_copies) {
          throw ScaleGuardError("enumerate_forbidden_copies: copy count exceeds the cap");
        }
        return;
      }
      const int first_uncovered = std::countr_zero(~covered & all_pairs);
      for (int e = 0; e < universe.size(); ++e) {
        if (chosen.contains(e) || !((covers[e] >> first_uncovered) & 1U)) continue;
        extend(covered | covers[e], chosen | Support::single(e));
      }
    };
    extend(0, Support{});
    return true;
  });

  // A minimal system for one core may strictly contain one for another core.
  std::vector<Support> all(seen.begin(), seen.end());
  std::sort(all.begin(), all.end(), [](Support a, Support b) {
    return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
  });
  for (Support c : all) {
    const bool dominated = std::any_of(out.copies.begin(), out.copies.end(),
                                       [c](Support kept) { return kept.subset_of(c); });
    if (!dominated) out.copies.push_back(c);
  }
  std::sort(out.copies.begin(), out.copies.end(), [](Support a, Support b) { return a.bits() < b.bits(); });
  return out;
}

}  // namespace

CopyFamily enumerate_forbidden_copies(const FamilySpec& spec, int n, const CopyLimits& limits) {
  const int r = family_uniformity(spec);
  const EdgeUniverse universe(n, r);
  if (!universe.fits_support()) throw ScaleGuardError("enumerate_forbidden_copies: more than 64 r-sets");
  if (const auto* pattern = std::get_if<Pattern>(&spec)) return pattern_copies(*pattern, n, universe, limits);
  const auto& family = std::get<CoreFamily>(spec);
  if (family.ell < 2 || family.r < 2) throw ArgumentError("enumerate_forbidden_copies: need ell, r >= 2");
  return core_copies(family, n, universe, limits);
}

std::int64_t count_copies(Support g, const CopyFamily& copies) {
  return std::count_if(copies.copies.begin(), copies.copies.end(), [g](Support c) { return c.subset_of(g); });
}

std::int64_t count_copies(const RGraph& g, const CopyFamily& copies) {
  if (g.n() != copies.n || g.r() != copies.r) throw ArgumentError("count_copies: incompatible n or r");
  return count_copies(g.to_support(EdgeUniverse(g.n(), g.r())), copies);
}

ContainmentOracle::ContainmentOracle(const FamilySpec& spec, int n)
    : spec_(spec), universe_(n, family_uniformity(spec)) {
  if (!universe_.fits_support()) throw ScaleGuardError("ContainmentOracle: more than 64 r-sets");
  if (const auto* pattern = std::get_if<Pattern>(&spec_)) {
    const CompactPattern f = compact(pattern->graph);
    if (f.edges.empty()) throw ArgumentError("ContainmentOracle: pattern has no edges");
    pattern_vertices_ = f.vertices;
    pattern_edges_ = f.edges;
    edges_closed_at_.assign(static_cast<std::size_t>(f.vertices), {});
    for (std::size_t i = 0; i < f.edges.size(); ++i) {
      edges_closed_at_[*std::max_element(f.edges[i].begin(), f.edges[i].end())].push_back(static_cast<int>(i));
    }
  } else {
    const auto& family = std::get<CoreFamily>(spec_);
    if (family.ell < 2 || family.r < 2) throw ArgumentError("ContainmentOracle: need ell, r >= 2");
  }
}

bool ContainmentOracle::edges_ok(Support graph, const std::vector<int>& image, int vertex) const {
  for (int idx : edges_closed_at_[vertex]) {
    VertexSet s = 0;
    for (int u : pattern_edges_[idx]) s |= VertexSet{1} << image[u];
    if (!graph.contains(universe_.rank(s))) return false;
  }
  return true;
}

bool ContainmentOracle::embed_from(Support graph, std::vector<int>& image, VertexSet used, int next_vertex) const {
  if (next_vertex == pattern_vertices_) return true;
  if (image[next_vertex] >= 0) {
    // pre-assigned by the anchor
    return edges_ok(graph, image, next_vertex) && embed_from(graph, image, used, next_vertex + 1);
  }
  for (int host = 0; host < universe_.n(); ++host) {
    if (used & (VertexSet{1} << host)) continue;
    image[next_vertex] = host;
    if (edges_ok(graph, image, next_vertex) && embed_from(graph, image, used | (VertexSet{1} << host), next_vertex + 1)) {
      image[next_vertex] = -1;
      return true;
    }
  }
  image[next_vertex] = -1;
  return false;
}

bool ContainmentOracle::contains(Support graph) const {
  if (const auto* family = std::get_if<CoreFamily>(&spec_)) {
    return has_clique(shadow_graph(universe_, graph), family->ell);
  }
  if (pattern_vertices_ > universe_.n()) return false;
  std::vector<int> image(static_cast<std::size_t>(pattern_vertices_), -1);
  return embed_from(graph, image, 0, 0);
}

bool ContainmentOracle::contains_through(Support graph, int new_edge) const {
  if (std::holds_alternative<CoreFamily>(spec_)) return contains(graph);
  if (pattern_vertices_ > universe_.n()) return false;
  const auto host = vertices_of(universe_.edge(new_edge));
  std::vector<int> image(static_cast<std::size_t>(pattern_vertices_), -1);
  for (const auto& f : pattern_edges_) {
    std::vector<int> order = host;
    do {
      std::fill(image.begin(), image.end(), -1);
      VertexSet used = 0;
      for (std::size_t i = 0; i < f.size(); ++i) {
        image[f[i]] = order[i];
        used |= VertexSet{1} << order[i];
      }
      if (embed_from(graph, image, used, 0)) return true;
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return false;
}

namespace {

void check_search_scale(const EdgeUniverse& universe, const SearchOptions& options, const char* where) {
  if (universe.size() > options.max_universe || !universe.fits_support()) {
    throw ScaleGuardError(std::string(where) + ": " + std::to_string(universe.size()) +
                          " potential edges exceed the exhaustive-search cap of " +
                          std::to_string(options.max_universe));
  }
}

}  // namespace

ExtremalResult brute_force_ex(int n, const FamilySpec& spec, const SearchOptions& options) {
  const ContainmentOracle oracle(spec, n);
  const EdgeUniverse& universe = oracle.universe();
  check_search_scale(universe, options, "brute_force_ex");
  const int size = universe.size();

  detail::SubsetSearchModel model;
  model.universe_size = size;
  model.admissible = [&oracle](Support with, int e) { return !oracle.contains_through(with, e); };
  model.value = [](Support chosen) { return static_cast<std::int64_t>(chosen.size()); };
  model.bound = [size](Support chosen, int next) { return static_cast<std::int64_t>(chosen.size() + size - next); };

  const auto best = detail::run_subset_search(model, options.threads);
  return {best.value, RGraph::from_support(universe, best.witness)};
}

ExtremalResult brute_force_gen_ex(int n, const FamilySpec& target, const FamilySpec& forbidden,
                                  const SearchOptions& options) {
  if (std::holds_alternative<CoreFamily>(target)) {
    throw ArgumentError("brute_force_gen_ex: the target must be an explicit pattern");
  }
  if (family_uniformity(target) != family_uniformity(forbidden)) {
    throw ArgumentError("brute_force_gen_ex: target and forbidden uniformities differ");
  }
  const ContainmentOracle oracle(forbidden, n);
  const EdgeUniverse& universe = oracle.universe();
  check_search_scale(universe, options, "brute_force_gen_ex");
  const CopyFamily targets = enumerate_forbidden_copies(target, n);

  detail::SubsetSearchModel model;
  model.universe_size = universe.size();
  model.admissible = [&oracle](Support with, int e) { return !oracle.contains_through(with, e); };
  model.value = [&targets](Support chosen) { return count_copies(chosen, targets); };
  model.bound = [&targets](Support chosen, int next) {
    const Support excluded = Support::full(next).minus(chosen);
    return static_cast<std::int64_t>(std::count_if(targets.copies.begin(), targets.copies.end(),
                                                   [excluded](Support c) { return !c.intersects(excluded); }));
  };

  const auto best = detail::run_subset_search(model, options.threads);
  return {best.value, RGraph::from_support(universe, best.witness)};
}

RGraph parse_hypergraph(std::istream& in) {
  std::string line;
  int n = -1;
  int r = -1;
  std::vector<std::vector<int>> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<long> values;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) {
        throw ArgumentError("hypergraph line " + std::to_string(line_no) + ": not an integer: " + token);
      }
      values.push_back(v);
    }
    if (values.empty()) continue;
    if (n < 0) {
      if (values.size() != 2) throw ArgumentError("hypergraph header must be 'n r'");
      n = static_cast<int>(values[0]);
      r = static_cast<int>(values[1]);
      if (n < 1 || n > kMaxVertices || r < 1) throw ArgumentError("hypergraph header out of range");
      continue;
    }
    if (static_cast<int>(values.size()) != r) {
      throw ArgumentError("hypergraph line " + std::to_string(line_no) + ": expected " + std::to_string(r) +
                          " vertices");
    }
    std::vector<int> edge;
    for (long v : values) {
      if (v < 1 || v > n) throw ArgumentError("hypergraph line " + std::to_string(line_no) + ": vertex out of range");
      edge.push_back(static_cast<int>(v - 1));
    }
    edges.push_back(std::move(edge));
  }
  if (n < 0) throw ArgumentError("hypergraph: missing 'n r' header");
  return RGraph::from_lists(n, r, edges);
}

RGraph parse_hypergraph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_hypergraph(in);
}

std::string format_hypergraph(const RGraph& g) {
  std::ostringstream os;
  os << g.n() << ' ' << g.r() << '\n';
  for (VertexSet e : g.edges()) {
    bool first = true;
    for (int v : vertices_of(e)) {
      os << (first ? "" : " ") << v + 1;
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace turanlab
