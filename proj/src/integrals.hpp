#pragma once

#include <string>
#include <vector>

namespace qre {

// Active-space one-/two-body integrals plus core energy, chemists' (pq|rs)
// convention, all in Hartree.
struct MolecularIntegrals {
    int n_orbitals = 0;
    int n_electrons = 0;
    int spin_2s = 0;
    double core_energy = 0.0;
    std::vector<double> h; // n*n, row-major
    std::vector<double> g; // n^4, index ((p*n+q)*n+r)*n+s

    double one_body(int p, int q) const { return h[p * n_orbitals + q]; }
    double two_body(int p, int q, int r, int s) const {
        return g[((static_cast<size_t>(p) * n_orbitals + q) * n_orbitals + r) * n_orbitals + s];
    }

    // h symmetric, g 8-fold symmetric, electron count in range
    void validate(double tol = 1e-12) const;
};

// Parse FCIDUMP text: namelist header with NORB/NELEC/MS2, then
// `value p q r s` lines (1-based). (0,0,0,0) carries the core energy,
// (p,q,0,0) one-body entries, everything else two-body entries. Each stored
// value populates all eight permutation slots.
MolecularIntegrals parse_fcidump(const std::string& text);
MolecularIntegrals load_fcidump(const std::string& path);

} // namespace qre
