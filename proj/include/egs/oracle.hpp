#pragma once

// Brute-force ground truth for integer instances and a seeded instance
// generator.
//
// Generator: std::mt19937_64 seeded with InstanceSpec::seed. Bounded draws take
// rng() modulo the range with rejection of the biased tail; coin flips compare
// the top 53 bits, scaled to [0,1), against the edge density. The graph is a
// random spanning tree (vertex k joins a uniformly drawn earlier vertex) plus
// each remaining pair in lexicographic order with probability edge_density;
// edges are listed in lexicographic pair order. Labels are drawn uniformly from
// 1..label_bound, vertices first, or in pairwise-coprime mode are distinct
// primes shuffled onto vertices then edges.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "egs/execution.hpp"
#include "egs/graph.hpp"
#include "egs/splines.hpp"

namespace egs::oracle {

struct InstanceSpec {
  std::uint64_t seed = 0;
  std::size_t vertices = 3;
  double edge_density = 0.5;
  long label_bound = 10;
  bool pairwise_coprime = false;
};

LabeledGraph random_instance(const InstanceSpec& spec);

/// Uniform draw from [0, range).
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t range);

/// Smallest t in 1..bound such that some spline vanishes on v_1..v_{i-1} and
/// equals t at v_i (i is 0-based), or nullopt when none exists within bound.
/// Exhaustive, prime by prime: the congruence system is solvable over ZZ iff
/// it is solvable modulo p^K for every prime p dividing a label (K the largest
/// exponent of p among the labels), and modulo p^K every residue a free vertex
/// can take is tried. The local solutions of the answer are glued with crt into
/// a witness that must pass is_spline.
std::optional<RingElement> brute_minimal_leading_entry(const LabeledGraph& g, std::size_t i, const mpz_class& bound,
                                                       Execution exec = Execution::parallel);

/// All splines with |f_v| <= bound, in lexicographic order of (f_v1, ..., f_vn).
std::vector<Components> enumerate_small_splines(const LabeledGraph& g, const mpz_class& bound,
                                                Execution exec = Execution::parallel);

}  // namespace egs::oracle
