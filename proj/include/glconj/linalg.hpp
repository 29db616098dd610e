#pragma once

#include <cstdint>
#include <vector>

#include "glconj/int_matrix.hpp"

namespace glconj {

struct HermiteForm {
  IntMatrix H;
  IntMatrix U;  // U * A = H, |det U| = 1
  std::size_t rank = 0;
};

/// Row-style Hermite normal form: pivots positive, entries above a pivot in
/// [0, pivot), zero rows last.
HermiteForm hnf(const IntMatrix& a);

struct SnfDecomposition {
  IntMatrix U;  // rows x rows
  IntMatrix D;  // rows x cols, diagonal
  IntMatrix V;  // cols x cols
  std::vector<Integer> invariants;  // d_1 | d_2 | ... | d_r, all positive
};

/// Smith normal form with transforms: U * A * V = D.
SnfDecomposition snf(const IntMatrix& a);

/// Abelian invariants only. Same elimination as snf() without the transforms.
std::vector<Integer> smith_invariants(const IntMatrix& a);

struct SmithGroup {
  std::vector<Integer> invariants;  // includes trivial 1s
  Integer exponent = 1;
};

SmithGroup smith_group(const IntMatrix& a);

/// Z-linearly independent integer vectors spanning a lattice.
struct LatticeBasis {
  std::size_t ambient_dim = 0;
  std::vector<std::vector<Integer>> vectors;

  std::size_t rank() const { return vectors.size(); }
  IntMatrix as_rows() const;
};

/// Saturated basis of {v in Z^cols : A v = 0}.
LatticeBasis kernel_basis(const IntMatrix& a);

/// LLL reduction with delta = 99/100 using exact integral Gram-Schmidt data.
LatticeBasis lll_reduce(const LatticeBasis& basis);

/// Checks the size condition and the Lovasz condition (delta = 99/100).
bool is_lll_reduced(const LatticeBasis& basis);

/// Gram determinant det(B B^T).
Integer gram_determinant(const LatticeBasis& basis);

/// Exact determinant (Bareiss). Throws ShapeError for non-square input.
Integer det(const IntMatrix& a);

/// Rank over Q.
std::size_t rank(const IntMatrix& a);

// Word-size modular helpers. The modulus must be a prime below 2^31.

std::uint64_t det_mod_prime(const IntMatrix& a, std::uint64_t p);
std::size_t rank_mod_prime(const IntMatrix& a, std::uint64_t p);

/// Reduced-echelon basis of {c : c * B == 0 mod p} for the rows of B.
/// Each returned vector has a coefficient 1 at a position where every other
/// returned vector has 0.
std::vector<std::vector<std::uint32_t>> left_nullspace_mod_prime(const IntMatrix& b,
                                                                std::uint64_t p);

/// Replaces a basis of a lattice L in Z^N by a basis of the smallest
/// superlattice of L whose index is a power of ell and which is ell-saturated
/// (Q L cap Z_(ell)^N).
void saturate_at_prime(std::vector<std::vector<Integer>>& basis, std::uint64_t ell);

Integer floor_div(const Integer& a, const Integer& b);

}  // namespace glconj
