#pragma once

#include <vector>

#include "galmod/numeric.hpp"

namespace galmod {

// Dense row-major integer matrix.  All normal-form routines work on rows,
// i.e. they treat the matrix as a generating set of the row lattice.
using IntMat = std::vector<std::vector<Int>>;

struct HnfResult {
    IntMat h;        // row Hermite normal form, zero rows dropped
    IntMat u;        // unimodular transform with u * input = [h; 0]
    int rank = 0;    // number of nonzero rows of h
};

/**
 * Row Hermite normal form.  Pivots are positive, strictly to the right as
 * the row index grows, and entries above each pivot are reduced into
 * [0, pivot).  The transform rows beyond `rank` span the left kernel.
 */
HnfResult hnf(const IntMat& rows, int ncols);

// Basis of {v : v * m = 0} (row vectors acting on the left).
IntMat left_kernel(const IntMat& m, int ncols);

// Diagonal of the Smith normal form, nonnegative, each entry dividing the
// next; trailing zeros included up to min(rows, cols).
std::vector<Int> snf_diagonal(IntMat m);

// Canonical echelon form over Z/modulus of the row span together with
// modulus * Z^n (a Howell form).  Two generating sets yield identical
// output iff their integer lattices plus modulus * Z^n coincide.
// Safe for moduli up to 2^62; plain hnf on such inputs can overflow.
IntMat howell_mod(const IntMat& rows, int ncols, Int modulus);

// |det| of a square matrix via fraction-free elimination; 0 when singular.
Int abs_det(IntMat m);

}  // namespace galmod
