#pragma once

#include <ctc/colouring.hpp>
#include <ctc/latin.hpp>

#include <span>
#include <string>
#include <vector>

namespace ctc {

/// Colours of two half-edges e, e' of H_k and of their end vertices x, x'.
struct BoundaryProfile {
    int e = 0, e_prime = 0, x = 0, x_prime = 0;
    friend bool operator==(const BoundaryProfile &, const BoundaryProfile &) = default;
};

/// Indices i of the half-edges e_i playing the roles e and e'.
struct BoundaryRoles {
    int e = 1, e_prime = 2;
};

BoundaryProfile boundary_profile(const CircularColouring & c, BoundaryRoles roles);

/// (k+1,1)-total colouring of H_k from a Latin square of order k:
/// x_i y_j -> l_ij, x_i -> l_i1, every y_j and half-edge -> 0.
CircularColouring colour_all0(int k, const LatinSquare & square);

/// (n(k+1)+1, n)-total colouring of H_k with boundary (0, 1, n+1, n*level+1)
/// at (e_1, e_2, x_1, x_2). `level` is l_21 of the underlying Latin square;
/// the default level k gives (0, 1, n+1, nk+1).
CircularColouring colour_tweak(int k, int n, int level);
inline CircularColouring colour_tweak(int k, int n) { return colour_tweak(k, n, k); }

/// (q(k+1)+1, q)-total colouring of H_k with boundary (0, 2, qk+1, q+2) at
/// (e_k, e_1, x_k, x_1).
CircularColouring colour_refine(int k, int q);

/// Applies the automorphism x_i -> x_{perm[i-1]} of H_k (y's fixed) to the
/// labels of a colouring of H_k or one of its half-edge-deleted subgraphs.
CircularColouring permute_x(const CircularColouring & c, int k, std::span<const int> perm);

/// A checker-verified colouring of G_{k,n} plus a record of the choices made.
struct Assembly {
    CircularColouring colouring;
    std::vector<std::string> notes;
};

/// (n(k+1)+1, n)-total colouring of G_{k,n}: shifted copies of colour_tweak
/// blocks chained through e_i, u coloured 2n+1 when that is consistent.
Assembly assemble_thm_lim(int k, int n);

/// (2n(k+1)+1, 2n)-total colouring of G_{k,n}, k >= 4, from shifted copies of
/// colour_refine(k, 2n); u coloured 6n when that is consistent.
Assembly assemble_thm_improve(int k, int n);

/// (8n-3, 2n-1)-total colouring of G_{3,n} combining n-1 colour_refine(3, 2n-1)
/// blocks with one tweak block of boundary (0, 1, 2n, 4n-1). Block position,
/// block orientations and the colour of u are found by exhaustive search;
/// throws ConstructionIncomplete if no combination validates.
Assembly assemble_k3(int n);

} // namespace ctc
