#include "fermion.hpp"

#include <sstream>
#include <stdexcept>

#include "integrals.hpp"

namespace qre {

namespace {
constexpr double kCoeffCutoff = 1e-14;
}

void FermionOperator::add_term(const Sequence& ops, cplx coeff) {
    auto it = terms_.find(ops);
    if (it == terms_.end()) {
        if (std::abs(coeff) >= kCoeffCutoff) terms_.emplace(ops, coeff);
        return;
    }
    it->second += coeff;
    if (std::abs(it->second) < kCoeffCutoff) terms_.erase(it);
}

FermionOperator& FermionOperator::operator+=(const FermionOperator& o) {
    for (const auto& [seq, c] : o.terms_) add_term(seq, c);
    return *this;
}

FermionOperator& FermionOperator::operator*=(cplx s) {
    if (std::abs(s) < kCoeffCutoff) {
        terms_.clear();
        return *this;
    }
    for (auto& [seq, c] : terms_) c *= s;
    return *this;
}

int FermionOperator::max_mode() const {
    int m = -1;
    for (const auto& [seq, c] : terms_)
        for (const auto& op : seq) m = std::max(m, op.mode);
    return m;
}

FermionOperator FermionOperator::adjoint() const {
    FermionOperator out;
    for (const auto& [seq, c] : terms_) {
        Sequence rev(seq.rbegin(), seq.rend());
        for (auto& op : rev) op.create = !op.create;
        out.add_term(rev, std::conj(c));
    }
    return out;
}

std::string FermionOperator::str() const {
    std::ostringstream os;
    os.precision(12);
    for (const auto& [seq, c] : terms_) {
        os << "(" << c.real();
        if (c.imag() != 0.0) os << (c.imag() > 0 ? "+" : "") << c.imag() << "i";
        os << ")";
        for (const auto& op : seq) os << " " << op.mode << (op.create ? "^" : "");
        if (seq.empty()) os << " 1";
        os << "\n";
    }
    return os.str();
}

FermionOperator hamiltonian_from_integrals(const MolecularIntegrals& ints) {
    const int n = ints.n_orbitals;
    FermionOperator h;
    if (ints.core_energy != 0.0) h.add_term({}, ints.core_energy);

    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            const double v = ints.one_body(p, q);
            if (v == 0.0) continue;
            for (int s = 0; s < 2; ++s)
                h.add_term({{2 * p + s, true}, {2 * q + s, false}}, v);
        }
    }

    // chemists' (pq|rs): H2 = 1/2 sum_{pqrs,st} (pq|rs) a+_ps a+_rt a_st a_qs
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            for (int r = 0; r < n; ++r) {
                for (int s = 0; s < n; ++s) {
                    const double v = ints.two_body(p, q, r, s);
                    if (v == 0.0) continue;
                    for (int s1 = 0; s1 < 2; ++s1) {
                        for (int s2 = 0; s2 < 2; ++s2) {
                            h.add_term({{2 * p + s1, true},
                                        {2 * r + s2, true},
                                        {2 * s + s2, false},
                                        {2 * q + s1, false}},
                                       0.5 * v);
                        }
                    }
                }
            }
        }
    }
    return h;
}

QubitOperator jordan_wigner(const FermionOperator& op, int n_modes) {
    if (op.max_mode() >= n_modes)
        throw std::invalid_argument("mode index exceeds n_modes in jordan_wigner");

    QubitOperator out(n_modes);
    for (const auto& [seq, c] : op.terms()) {
        QubitOperator term = QubitOperator::identity(n_modes, c);
        for (const auto& lop : seq) {
            const uint64_t zmask = (1ULL << lop.mode) - 1; // Z on modes below
            QubitOperator factor(n_modes);
            const uint64_t m = 1ULL << lop.mode;
            factor.add_term(PauliString{m, zmask}, 0.5);
            // a+ carries -i/2 Y, a carries +i/2 Y
            factor.add_term(PauliString{m, zmask | m}, cplx(0.0, lop.create ? -0.5 : 0.5));
            term = multiply(term, factor);
        }
        out += term;
    }
    return out;
}

} // namespace qre
