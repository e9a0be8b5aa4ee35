#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pauli.hpp"

namespace qre {

struct MolecularIntegrals;

// One creation/annihilation operator acting on a spin-orbital mode.
struct LadderOp {
    int mode = 0;
    bool create = false;

    bool operator==(const LadderOp&) const = default;
    auto operator<=>(const LadderOp&) const = default;
};

// Sum of products of ladder operators. Canonical form merges terms with
// identical ladder sequences and drops zero coefficients; no normal ordering
// is imposed.
class FermionOperator {
  public:
    using Sequence = std::vector<LadderOp>;

    FermionOperator() = default;

    void add_term(const Sequence& ops, cplx coeff);
    FermionOperator& operator+=(const FermionOperator& o);
    FermionOperator& operator*=(cplx s);

    const std::map<Sequence, cplx>& terms() const { return terms_; }
    size_t n_terms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    int max_mode() const;

    FermionOperator adjoint() const;

    std::string str() const;

  private:
    std::map<Sequence, cplx> terms_;
};

// Second-quantized active-space Hamiltonian in the interleaved spin-orbital
// convention (mode 2p = p-alpha, 2p+1 = p-beta).
FermionOperator hamiltonian_from_integrals(const MolecularIntegrals& ints);

// a+_j -> (X_j - iY_j)/2 * Z_{j-1}..Z_0, a_j -> (X_j + iY_j)/2 * Z_{j-1}..Z_0
QubitOperator jordan_wigner(const FermionOperator& op, int n_modes);

} // namespace qre
