#include "galmod/lattice.hpp"

namespace galmod {

IntLattice IntLattice::from_generators(int ambient_rank, const IntMat& gens) {
    IntLattice l;
    l.ambient_rank = ambient_rank;
    l.basis = hnf(gens, ambient_rank).h;
    return l;
}

Int IntLattice::index() const {
    if (!full_rank())
        throw std::domain_error("IntLattice::index: lattice not full rank");
    Int idx = 1;
    for (int i = 0; i < ambient_rank; ++i) idx *= basis[i][i];
    return idx;
}

bool IntLattice::contains(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != ambient_rank)
        throw std::invalid_argument("IntLattice::contains: wrong dimension");
    std::vector<Int> w = v;
    for (const auto& row : basis) {
        int piv = 0;
        while (piv < ambient_rank && row[piv] == 0) ++piv;
        if (w[piv] % row[piv] != 0) {
            // Later rows cannot touch column piv: pivots move right.
            continue;
        }
        Int q = w[piv] / row[piv];
        for (int j = 0; j < ambient_rank; ++j) w[j] -= q * row[j];
    }
    for (Int x : w)
        if (x != 0) return false;
    return true;
}

IntLattice lattice_sum(const IntLattice& a, const IntLattice& b) {
    if (a.ambient_rank != b.ambient_rank)
        throw std::invalid_argument("lattice_sum: rank mismatch");
    IntMat gens = a.basis;
    gens.insert(gens.end(), b.basis.begin(), b.basis.end());
    return IntLattice::from_generators(a.ambient_rank, gens);
}

IntLattice congruence_kernel(const IntMat& m, int ncols, Int modulus) {
    int n = static_cast<int>(m.size());
    if (modulus <= 0) throw std::invalid_argument("congruence_kernel: modulus <= 0");
    // v * m = 0 mod modulus iff (v, y) * [m; modulus*I] = 0 for some y in Z^ncols;
    // the wanted lattice is the projection of that kernel onto the v block.
    IntMat stacked = m;
    for (int j = 0; j < ncols; ++j) {
        std::vector<Int> row(ncols, 0);
        row[j] = modulus;
        stacked.push_back(row);
    }
    IntMat ker = left_kernel(stacked, ncols);
    IntMat proj;
    for (const auto& row : ker)
        proj.emplace_back(row.begin(), row.begin() + n);
    return IntLattice::from_generators(n, proj);
}

}  // namespace galmod
