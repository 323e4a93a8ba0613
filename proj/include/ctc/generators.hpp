#pragma once

#include <ctc/hegraph.hpp>

#include <string_view>
#include <utility>

namespace ctc {

/// K_{k,k} minus one vertex, its k edges kept as half-edges. Vertices x1..xk
/// and y2..yk, edges "x<i>y<j>", half-edge "e<i>" at x<i>.
HalfEdgeGraph gen_Hk(int k);

/// gen_Hk(k) keeping only the half-edges e<keep.first> and e<keep.second>.
HalfEdgeGraph gen_Hprime(int k, std::pair<int, int> keep);
inline HalfEdgeGraph gen_Hprime(int k) { return gen_Hprime(k, {1, k}); }

/// n copies B1..Bn of H'_k and a hub vertex u, chained into a ring. In block
/// Bi the half-edge at x1 is f'_i and the one at xk is f_i; f_i and f'_{i+1}
/// become edge "e<i>" (f_0 and f'_{n+1} live at u). Block elements are named
/// "B<i>.<label>".
HalfEdgeGraph gen_Gkn(int k, int n);

HalfEdgeGraph gen_cycle(int m);
/// Moebius ladder V_{2n}: cycle v0..v_{2n-1} plus chords v_i v_{i+n}.
HalfEdgeGraph gen_moebius(int n);
/// K_2 x C_m: cycles a0..a_{m-1}, b0..b_{m-1} and rungs a_i b_i.
HalfEdgeGraph gen_prism(int m);
HalfEdgeGraph gen_complete_bipartite(int a, int b);

/// Label of the half-edge of block i (1-based) in the chain; used before joining.
std::string chain_out_label(int i); // f_i
std::string chain_in_label(int i);  // f'_i

} // namespace ctc
