#include "pauli.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace qre {

int PauliString::weight() const { return std::popcount(support()); }

char PauliString::letter(int qubit) const {
    const uint64_t m = 1ULL << qubit;
    const bool bx = x & m, bz = z & m;
    if (bx && bz) return 'Y';
    if (bx) return 'X';
    if (bz) return 'Z';
    return 'I';
}

PauliString PauliString::single(int qubit, char letter) {
    const uint64_t m = 1ULL << qubit;
    switch (letter) {
        case 'I': return {};
        case 'X': return {m, 0};
        case 'Y': return {m, m};
        case 'Z': return {0, m};
    }
    throw std::invalid_argument("unknown Pauli letter");
}

PauliString PauliString::from_letters(const std::string& letters) {
    PauliString p;
    for (size_t q = 0; q < letters.size(); ++q) {
        const PauliString s = single(static_cast<int>(q), letters[q]);
        p.x |= s.x;
        p.z |= s.z;
    }
    return p;
}

int PauliString::product_phase_exp(const PauliString& a, const PauliString& b) {
    // with P = i^{|x&z|} X^x Z^z:
    //   a*b = i^{ya + yb + 2*|za & xb| - yab} X^(xa^xb) Z^(za^zb)
    const int ya = std::popcount(a.x & a.z);
    const int yb = std::popcount(b.x & b.z);
    const int yab = std::popcount((a.x ^ b.x) & (a.z ^ b.z));
    const int anti = std::popcount(a.z & b.x);
    return ((ya + yb + 2 * anti - yab) % 4 + 4) % 4;
}

bool PauliString::commutes_with(const PauliString& o) const {
    return ((std::popcount(x & o.z) + std::popcount(z & o.x)) & 1) == 0;
}

bool PauliString::qubitwise_commutes_with(const PauliString& o) const {
    const uint64_t shared = support() & o.support();
    // on shared qubits the letters must be equal
    return ((x ^ o.x) & shared) == 0 && ((z ^ o.z) & shared) == 0;
}

int PauliString::parity_sign(uint64_t basis_state) const {
    return (std::popcount(z & basis_state) & 1) ? -1 : 1;
}

std::string PauliString::str(int n_qubits) const {
    std::string s;
    bool any = false;
    for (int q = 0; q < n_qubits; ++q) {
        const char l = letter(q);
        if (l != 'I') {
            s += l;
            s += std::to_string(q);
            s += ' ';
            any = true;
        }
    }
    if (!any) return "I";
    s.pop_back();
    return s;
}

QubitOperator QubitOperator::identity(int n_qubits, cplx coeff) {
    QubitOperator op(n_qubits);
    op.add_term({}, coeff);
    return op;
}

void QubitOperator::add_term(const PauliString& p, cplx coeff) {
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        if (std::abs(coeff) >= coeff_cutoff) terms_.emplace(p, coeff);
        return;
    }
    it->second += coeff;
    if (std::abs(it->second) < coeff_cutoff) terms_.erase(it);
}

cplx QubitOperator::coefficient(const PauliString& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? cplx{0.0} : it->second;
}

QubitOperator& QubitOperator::operator+=(const QubitOperator& o) {
    if (o.n_qubits_ != n_qubits_)
        throw std::invalid_argument("qubit count mismatch in operator sum");
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

QubitOperator& QubitOperator::operator-=(const QubitOperator& o) {
    if (o.n_qubits_ != n_qubits_)
        throw std::invalid_argument("qubit count mismatch in operator sum");
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
}

QubitOperator& QubitOperator::operator*=(cplx s) {
    if (std::abs(s) < coeff_cutoff) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, c] : terms_) c *= s;
    return *this;
}

bool QubitOperator::is_hermitian(double tol) const { return max_imag() < tol; }

double QubitOperator::max_imag() const {
    double m = 0.0;
    for (const auto& [p, c] : terms_) m = std::max(m, std::abs(c.imag()));
    return m;
}

void QubitOperator::chop_imag() {
    for (auto& [p, c] : terms_) c = cplx{c.real(), 0.0};
}

std::string QubitOperator::str() const {
    std::ostringstream os;
    os.precision(12);
    for (const auto& [p, c] : terms_) {
        os << "(" << c.real();
        if (c.imag() != 0.0) os << (c.imag() > 0 ? "+" : "") << c.imag() << "i";
        os << ") " << p.str(n_qubits_) << "\n";
    }
    return os.str();
}

QubitOperator add(const QubitOperator& a, const QubitOperator& b) {
    QubitOperator r = a;
    r += b;
    return r;
}

QubitOperator subtract(const QubitOperator& a, const QubitOperator& b) {
    QubitOperator r = a;
    r -= b;
    return r;
}

QubitOperator multiply(const QubitOperator& a, const QubitOperator& b) {
    if (a.n_qubits() != b.n_qubits())
        throw std::invalid_argument("qubit count mismatch in operator product");
    static const cplx iphase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    QubitOperator r(a.n_qubits());
    for (const auto& [pa, ca] : a.terms()) {
        for (const auto& [pb, cb] : b.terms()) {
            const PauliString p{pa.x ^ pb.x, pa.z ^ pb.z};
            const int k = PauliString::product_phase_exp(pa, pb);
            r.add_term(p, ca * cb * iphase[k]);
        }
    }
    return r;
}

QubitOperator commutator(const QubitOperator& a, const QubitOperator& b) {
    return subtract(multiply(a, b), multiply(b, a));
}

QubitOperator scale(const QubitOperator& a, cplx c) {
    QubitOperator r = a;
    r *= c;
    return r;
}

QubitOperator number_operator(int n_qubits) {
    QubitOperator op(n_qubits);
    op.add_term({}, 0.5 * n_qubits);
    for (int q = 0; q < n_qubits; ++q)
        op.add_term(PauliString::single(q, 'Z'), -0.5);
    return op;
}

QubitOperator sz_operator(int n_qubits) {
    QubitOperator op(n_qubits);
    for (int q = 0; q < n_qubits; ++q)
        op.add_term(PauliString::single(q, 'Z'), (q % 2 == 0) ? -0.25 : 0.25);
    return op;
}

QubitOperator z_string(int n_qubits, uint64_t mask) {
    QubitOperator op(n_qubits);
    op.add_term(PauliString{0, mask}, 1.0);
    return op;
}

} // namespace qre
