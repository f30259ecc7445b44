#pragma once

#include "galmod/matrix.hpp"

namespace galmod {

/**
 * Sublattice of Z^ambient_rank with a canonical basis: the rows are in
 * Hermite normal form, so two lattices are equal iff their bases are
 * identical.  The basis may have fewer rows than the ambient rank.
 */
struct IntLattice {
    int ambient_rank = 0;
    IntMat basis;  // HNF rows, no zero rows

    static IntLattice from_generators(int ambient_rank, const IntMat& gens);

    int rank() const { return static_cast<int>(basis.size()); }
    bool full_rank() const { return rank() == ambient_rank; }

    // [Z^n : L] for a full-rank lattice (product of HNF pivots).
    Int index() const;

    bool contains(const std::vector<Int>& v) const;

    friend bool operator==(const IntLattice& a, const IntLattice& b) {
        return a.ambient_rank == b.ambient_rank && a.basis == b.basis;
    }
};

IntLattice lattice_sum(const IntLattice& a, const IntLattice& b);

// Solutions of v * m = 0 mod modulus, as a full-rank lattice in Z^rows(m).
// This is the congruence kernel used to cut out integrality conditions.
IntLattice congruence_kernel(const IntMat& m, int ncols, Int modulus);

}  // namespace galmod
