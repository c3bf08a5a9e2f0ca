#include "qubit_op.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperstate {

SingleQubitOp SingleQubitOp::dagger() const {
    SingleQubitOp r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.m[i][j] = std::conj(m[j][i]);
    return r;
}

SingleQubitOp SingleQubitOp::transpose() const {
    SingleQubitOp r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.m[i][j] = m[j][i];
    return r;
}

double SingleQubitOp::unitarity_defect() const {
    SingleQubitOp p = dagger() * (*this);
    double d = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            d = std::max(d, std::abs(p.m[i][j] - (i == j ? cplx(1.0) : cplx(0.0))));
    return d;
}

SingleQubitOp operator*(const SingleQubitOp& a, const SingleQubitOp& b) {
    SingleQubitOp r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
    return r;
}

SingleQubitOp operator*(cplx s, const SingleQubitOp& a) {
    SingleQubitOp r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.m[i][j] = s * a.m[i][j];
    return r;
}

SingleQubitOp operator+(const SingleQubitOp& a, const SingleQubitOp& b) {
    SingleQubitOp r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.m[i][j] = a.m[i][j] + b.m[i][j];
    return r;
}

SingleQubitOp operator-(const SingleQubitOp& a, const SingleQubitOp& b) {
    SingleQubitOp r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.m[i][j] = a.m[i][j] - b.m[i][j];
    return r;
}

SingleQubitOp identity_op() {
    SingleQubitOp r;
    r.m = {{{cplx(1), cplx(0)}, {cplx(0), cplx(1)}}};
    return r;
}

SingleQubitOp pauli_op(Pauli p) {
    SingleQubitOp r;
    const cplx i(0.0, 1.0);
    switch (p) {
        case Pauli::X: r.m = {{{cplx(0), cplx(1)}, {cplx(1), cplx(0)}}}; break;
        case Pauli::Y: r.m = {{{cplx(0), -i}, {i, cplx(0)}}}; break;
        case Pauli::Z: r.m = {{{cplx(1), cplx(0)}, {cplx(0), cplx(-1)}}}; break;
    }
    return r;
}

SingleQubitOp hadamard_op() {
    const double s = 1.0 / std::sqrt(2.0);
    SingleQubitOp r;
    r.m = {{{cplx(s), cplx(s)}, {cplx(s), cplx(-s)}}};
    return r;
}

SingleQubitOp sqrt_pauli(Pauli p, int branch) {
    if (branch != 1 && branch != -1) throw std::invalid_argument("sqrt_pauli: branch must be +1 or -1");
    const cplx i(0.0, 1.0);
    const cplx a = 0.5 * (1.0 + double(branch) * i);
    const cplx b = 0.5 * (1.0 - double(branch) * i);
    return a * identity_op() + b * pauli_op(p);
}

SingleQubitOp rotation_op(double t) {
    SingleQubitOp r;
    r.m = {{{cplx(std::cos(t)), cplx(std::sin(t))}, {cplx(-std::sin(t)), cplx(std::cos(t))}}};
    return r;
}

SingleQubitOp pauli_plus_iz(Pauli p, int s) {
    if (s != 1 && s != -1) throw std::invalid_argument("pauli_plus_iz: s must be +1 or -1");
    const cplx i(0.0, 1.0);
    return pauli_op(p) + (double(s) * i) * pauli_op(Pauli::Z);
}

} // namespace hyperstate
