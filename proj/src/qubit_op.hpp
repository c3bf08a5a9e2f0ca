#ifndef HYPERSTATE_QUBIT_OP_HPP
#define HYPERSTATE_QUBIT_OP_HPP

#include <array>
#include <complex>

namespace hyperstate {

using cplx = std::complex<double>;

enum class Pauli { X, Y, Z };

// A 2x2 complex matrix acting on a single qubit, row-major: m[row][col].
struct SingleQubitOp {
    std::array<std::array<cplx, 2>, 2> m{};

    cplx operator()(int row, int col) const { return m[row][col]; }

    SingleQubitOp dagger() const;
    SingleQubitOp transpose() const;
    // ||M†M - 1||_max; zero for unitaries.
    double unitarity_defect() const;

    friend SingleQubitOp operator*(const SingleQubitOp& a, const SingleQubitOp& b);
    friend SingleQubitOp operator*(cplx s, const SingleQubitOp& a);
    friend SingleQubitOp operator+(const SingleQubitOp& a, const SingleQubitOp& b);
    friend SingleQubitOp operator-(const SingleQubitOp& a, const SingleQubitOp& b);
};

SingleQubitOp identity_op();
SingleQubitOp pauli_op(Pauli p);
SingleQubitOp hadamard_op();

// The operator squaring to P with eigenvalues {1, +i} (branch = +1) or
// {1, -i} (branch = -1): (1/2)((1 ± i) 1 + (1 ∓ i) P).
SingleQubitOp sqrt_pauli(Pauli p, int branch);

// Real rotation [[cos t, sin t], [-sin t, cos t]].
SingleQubitOp rotation_op(double t);

// P + s*iZ for s = +1/-1; the rank-one factors of the Mermin operators.
SingleQubitOp pauli_plus_iz(Pauli p, int s);

} // namespace hyperstate

#endif
