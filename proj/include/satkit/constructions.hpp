#pragma once

#include "satkit/graph.hpp"

namespace satkit {

// The 3n-9 edge K_{3,3}-saturated family, defined for n >= 12.  Vertices
// 0,1 form the dominating pair over 2..n-4 (a C4, a C_{n-9} and one extra
// vertex); n-2 and n-1 are the two degree-two riders on the C4.
Graph gn(int n);

// Classical K_{k+1}-saturated witness K_{k-1} + empty(n-k+1), k >= 1.
Graph ehm(int n, int k);

// K_2 joined to C_{n-2}, n >= 5; kept for edge-count comparison runs.
Graph edge_join_cycle(int n);

// Cached minimum K_{3,3}-saturated witnesses for 6 <= n <= 11.  Records
// are re-verified on every load (order, edge count, saturation), so a
// tampered cache file fails loudly instead of leaking a bad graph.
// Lookup order: $SATKIT_WITNESS_CACHE, $SATKIT_ROOT/data/small_witnesses.txt,
// ./data/small_witnesses.txt, then the compiled-in copy of the same data.
Graph small_witness(int n);

}  // namespace satkit
