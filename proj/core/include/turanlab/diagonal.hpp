#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "turanlab/hypergraph.hpp"
#include "turanlab/polynomial.hpp"

namespace turanlab {

// Parameters of the diagonal-vanishing ideals I(n, ell) and DI(n, ell) in
// Q[x_1..x_n].
struct DiagonalParams {
  int n;
  int ell;

  // n >= ell; below that both ideals are the whole ring.
  bool non_vacuous() const { return n >= ell; }
};

struct PolyLimits {
  int max_vars = 7;  // cap for full products such as p_G
};

// p_G = product over non-edges ijk of G of (x_i - x_j)(x_i - x_k)(x_j - x_k).
Polynomial build_pG(int n, const RGraph& g, const PolyLimits& limits = {});

// Vanishing under every identification of ell variables. True when n < ell.
bool in_I(const Polynomial& p, const DiagonalParams& params);

// Every derivative d^j p / dx_i^j with 0 <= j <= n - 3 lies in I(n, ell).
bool in_DI(const Polynomial& p, const DiagonalParams& params);

// The witness polynomial: within-part differences over the balanced
// (ell-2)-partition for ell >= 4, the full Vandermonde product for ell = 3
// and n >= 4, and x_1 - x_2 for (ell, n) = (3, 3).
Polynomial build_F(const DiagonalParams& params);

// The balanced (ell-2)-partition labels used by build_F (ell >= 4).
std::vector<int> witness_partition(const DiagonalParams& params);

// D = 3 (C(n,3) - t_3(n, ell-1)): lower bound on the degree of every
// homogeneous generator p_G of the partite ideal.
std::int64_t min_generator_degree(const DiagonalParams& params);

struct CounterexampleReport {
  int n = 0;
  int ell = 0;
  int f_degree = 0;
  bool f_homogeneous = false;
  std::int64_t generator_degree_bound = 0;
  bool in_di = false;
  bool degree_gap_ok = false;
  // ell >= 4: every ell-set has two indices in a common part of the witness
  // partition. Vacuously true for ell = 3.
  bool pigeonhole_ok = false;
  bool confirmed() const { return in_di && degree_gap_ok && f_homogeneous && pigeonhole_ok; }
  std::string verdict() const;
};

// Certifies F in DI(n, ell) and F outside the partite ideal through the
// homogeneous degree obstruction deg F < D.
CounterexampleReport verify_counterexample(const DiagonalParams& params, const PolyLimits& limits = {});

// A random (ell-1)-partite 3-graph on [n]: random part labels, then each
// transversal triple kept with probability 1/2.
RGraph random_partite_3graph(int n, int parts, std::mt19937_64& rng);

struct LemmaTrial {
  RGraph graph;
  bool in_di;
  int degree;
};

struct LemmaReport {
  bool all_in_di = true;
  std::vector<LemmaTrial> trials;
};

// Samples `trials` random (ell-1)-partite 3-graphs and checks p_G in DI.
LemmaReport verify_lemma_partite_generators(int n, int ell, int trials, std::uint64_t seed,
                                            const PolyLimits& limits = {});

}  // namespace turanlab
