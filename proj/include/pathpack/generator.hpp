#pragma once

#include <cstdint>

#include "pathpack/io.hpp"

namespace pathpack {

// Deterministic generator state (splitmix64). Identical seeds give identical
// instances on every platform.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
};

struct GenParams {
  int nodes = 6;
  int terminals = 4;
  int max_multiplicity = 3;
  bool eulerian = true;
  size_t max_paths = 3000;  // instances with more T-paths are resampled
};

// Random K-network (or a non-Eulerian network with a valid anticlique
// K-clutter when params.eulerian is false): demand graphs are resampled until
// the anticlique clutter satisfies the triple condition, the multigraph is a
// random spanning tree plus extra edges, and parity of inner nodes is
// repaired with matching edges.
Instance random_k_network(std::uint64_t seed, const GenParams& params);

// Six terminals s1..s3, t1..t3 with the two-triangle demand graph (the
// clutter {{s_i, t_j}}), and a small random Eulerian graph over 1-3 inner
// nodes. Candidate family for the integer-vs-half-integer gap search.
Instance random_two_triangle_instance(std::uint64_t seed);

}  // namespace pathpack
