#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qre {

using cplx = std::complex<double>;

// Pauli string in symplectic form: bit q of x/z set means X/Z acts on qubit q,
// both set means Y. The letter convention is P = i^{|x&z|} X^x Z^z, which makes
// every PauliString hermitian on its own.
struct PauliString {
    uint64_t x = 0;
    uint64_t z = 0;

    bool operator==(const PauliString& o) const { return x == o.x && z == o.z; }
    auto operator<=>(const PauliString& o) const {
        if (auto c = x <=> o.x; c != 0) return c;
        return z <=> o.z;
    }

    bool identity() const { return x == 0 && z == 0; }
    uint64_t support() const { return x | z; }
    int weight() const;

    char letter(int qubit) const;
    static PauliString single(int qubit, char letter);
    static PauliString from_letters(const std::string& letters); // letters[q] acts on qubit q

    // product phase: lhs*rhs = i^k * PauliString{x^, z^}; returns k mod 4
    static int product_phase_exp(const PauliString& a, const PauliString& b);

    // true when the strings commute as operators
    bool commutes_with(const PauliString& o) const;
    // qubit-wise commuting: per qubit, letters equal or one is identity
    bool qubitwise_commutes_with(const PauliString& o) const;

    // sign (+1/-1) of the string's eigenvalue on computational basis state
    // |b>, defined for z-only strings (x == 0)
    int parity_sign(uint64_t basis_state) const;

    std::string str(int n_qubits) const;
};

// Weighted sum of Pauli strings. Canonical form: merged duplicates, no terms
// with |coefficient| < coeff_cutoff.
class QubitOperator {
  public:
    static constexpr double coeff_cutoff = 1e-14;

    QubitOperator() = default;
    explicit QubitOperator(int n_qubits) : n_qubits_(n_qubits) {}

    static QubitOperator identity(int n_qubits, cplx coeff = 1.0);

    int n_qubits() const { return n_qubits_; }
    size_t n_terms() const { return terms_.size(); }
    const std::map<PauliString, cplx>& terms() const { return terms_; }

    void add_term(const PauliString& p, cplx coeff);
    cplx coefficient(const PauliString& p) const;
    cplx identity_coefficient() const { return coefficient(PauliString{}); }

    QubitOperator& operator+=(const QubitOperator& o);
    QubitOperator& operator-=(const QubitOperator& o);
    QubitOperator& operator*=(cplx scale);

    bool is_zero() const { return terms_.empty(); }
    bool is_hermitian(double tol = 1e-12) const;
    // largest |Im(coefficient)|
    double max_imag() const;
    // drop imaginary parts (call only after asserting hermiticity)
    void chop_imag();

    std::string str() const;

  private:
    int n_qubits_ = 0;
    std::map<PauliString, cplx> terms_;
};

QubitOperator add(const QubitOperator& a, const QubitOperator& b);
QubitOperator subtract(const QubitOperator& a, const QubitOperator& b);
QubitOperator multiply(const QubitOperator& a, const QubitOperator& b);
QubitOperator commutator(const QubitOperator& a, const QubitOperator& b);
QubitOperator scale(const QubitOperator& a, cplx c);

// sum_m a+_m a_m mapped through Jordan-Wigner: (n - sum Z_m) / 2
QubitOperator number_operator(int n_qubits);
// S_z in the interleaved convention (even qubits alpha, odd beta)
QubitOperator sz_operator(int n_qubits);
// parity string over the qubits selected by mask
QubitOperator z_string(int n_qubits, uint64_t mask);

} // namespace qre
