#include "chainforge/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "chainforge/errors.hpp"

namespace chainforge::oracle {

namespace {

void check_state_size(std::size_t n) {
    if (n > max_state_qubits) {
        throw SizeLimitError("dense simulation supports at most " + std::to_string(max_state_qubits) + " qubits");
    }
}

Complex cphase_factor(unsigned k) {
    // Exact dyadic angle; k = 1, 2 give the exact values -1 and i.
    if (k == 1) return {-1.0, 0.0};
    if (k == 2) return {0.0, 1.0};
    const double angle = 2.0 * std::numbers::pi / std::ldexp(1.0, static_cast<int>(k));
    return std::polar(1.0, angle);
}

}  // namespace

StateVector::StateVector(std::size_t n) : n_(n) {
    check_state_size(n);
    amps_.assign(std::size_t{1} << n, Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector StateVector::basis(std::size_t n, std::size_t index) {
    StateVector s(n);
    if (index >= s.amps_.size()) throw std::out_of_range("basis index out of range");
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

void StateVector::apply(const Gate& g) {
    if (g.q0() >= n_ || (g.two_qubit() && g.q1() >= n_)) throw std::out_of_range("gate wire outside state");
    const std::size_t dim = amps_.size();
    const std::size_t m0 = std::size_t{1} << g.q0();
    const std::size_t m1 = g.two_qubit() ? std::size_t{1} << g.q1() : 0;
    switch (g.kind()) {
        case GateKind::H: {
            const double r = std::numbers::sqrt2 / 2.0;
            for (std::size_t i = 0; i < dim; ++i) {
                if (i & m0) continue;
                Complex a = amps_[i];
                Complex b = amps_[i | m0];
                amps_[i] = r * (a + b);
                amps_[i | m0] = r * (a - b);
            }
            break;
        }
        case GateKind::P:
            for (std::size_t i = 0; i < dim; ++i) {
                if (i & m0) amps_[i] *= Complex{0.0, 1.0};
            }
            break;
        case GateKind::CNOT:
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & m0) && !(i & m1)) std::swap(amps_[i], amps_[i | m1]);
            }
            break;
        case GateKind::CZ:
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & m0) && (i & m1)) amps_[i] = -amps_[i];
            }
            break;
        case GateKind::CPHASE: {
            const Complex f = cphase_factor(g.k());
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & m0) && (i & m1)) amps_[i] *= f;
            }
            break;
        }
        case GateKind::SWAP:
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & m0) && !(i & m1)) std::swap(amps_[i], amps_[(i & ~m0) | m1]);
            }
            break;
        case GateKind::GENERIC2:
            throw UnsupportedGateError("generic two-qubit gates have no matrix semantics");
    }
}

double StateVector::norm() const {
    double s = 0.0;
    for (const Complex& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

StateVector StateVector::permuted(const std::vector<Wire>& perm) const {
    if (perm.size() != n_ || !is_permutation(perm)) throw std::invalid_argument("relabel is not a wire permutation");
    StateVector out(n_);
    out.amps_[0] = 0.0;
    for (std::size_t x = 0; x < amps_.size(); ++x) {
        std::size_t y = 0;
        for (Wire w = 0; w < n_; ++w) {
            if ((x >> w) & 1U) y |= std::size_t{1} << perm[w];
        }
        out.amps_[y] = amps_[x];
    }
    return out;
}

StateVector simulate(const Circuit& c, StateVector s) {
    if (c.n_wires() != s.n_qubits()) throw std::invalid_argument("circuit and state sizes differ");
    for (const Gate& g : c.gates()) s.apply(g);
    return s;
}

DenseUnitary::DenseUnitary(std::size_t n_qubits) : n_(n_qubits), dim_(std::size_t{1} << n_qubits) {
    if (n_qubits > max_unitary_qubits) {
        throw SizeLimitError("dense unitaries support at most " + std::to_string(max_unitary_qubits) + " qubits");
    }
    data_.assign(dim_ * dim_, Complex{0.0, 0.0});
}

double DenseUnitary::unitarity_error() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < dim_; ++k) s += std::conj(at(k, i)) * at(k, j);
            worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

DenseUnitary dense_unitary(const Circuit& c) {
    return dense_unitary(c, identity_permutation(c.n_wires()));
}

DenseUnitary dense_unitary(const Circuit& c, const std::vector<Wire>& relabel) {
    const std::size_t n = c.n_wires();
    DenseUnitary u(n);
    const bool trivial = relabel == identity_permutation(n);
    for (std::size_t col = 0; col < u.dim(); ++col) {
        StateVector s = simulate(c, StateVector::basis(n, col));
        if (!trivial) s = s.permuted(relabel);
        for (std::size_t row = 0; row < u.dim(); ++row) u.at(row, col) = s[row];
    }
    return u;
}

double max_phase_aligned_error(const DenseUnitary& a, const DenseUnitary& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("unitaries of different size");
    std::size_t best_r = 0;
    std::size_t best_c = 0;
    double best = -1.0;
    for (std::size_t c = 0; c < b.dim(); ++c) {
        for (std::size_t r = 0; r < b.dim(); ++r) {
            double m = std::abs(b.at(r, c));
            if (m > best + 1e-12) {
                best = m;
                best_r = r;
                best_c = c;
            }
        }
    }
    Complex phase{1.0, 0.0};
    if (best > 0.0) {
        Complex ratio = a.at(best_r, best_c) / b.at(best_r, best_c);
        double mag = std::abs(ratio);
        if (mag > 0.0) phase = ratio / mag;
    }
    double worst = 0.0;
    for (std::size_t c = 0; c < a.dim(); ++c) {
        for (std::size_t r = 0; r < a.dim(); ++r) worst = std::max(worst, std::abs(a.at(r, c) - phase * b.at(r, c)));
    }
    return worst;
}

bool unitary_equiv(const Circuit& c1, const Circuit& c2, const std::vector<Wire>& relabel, double tol) {
    if (c1.n_wires() != c2.n_wires()) return false;
    return max_phase_aligned_error(dense_unitary(c1), dense_unitary(c2, relabel)) <= tol;
}

GF2Matrix gf2_action(const Circuit& c) {
    // Row i of M describes output bit i as a parity of input bits; a CNOT adds rows.
    GF2Matrix m = GF2Matrix::identity(c.n_wires());
    for (const Gate& g : c.gates()) {
        switch (g.kind()) {
            case GateKind::CNOT: m.add_row(g.q0(), g.q1()); break;
            case GateKind::SWAP: m.swap_rows(g.q0(), g.q1()); break;
            default:
                throw UnsupportedGateError("gf2 action is defined for cnot/swap circuits only, found '" +
                                           std::string(gate_kind_name(g.kind())) + "'");
        }
    }
    return m;
}

DenseUnitary dft_matrix(std::size_t n_qubits) {
    DenseUnitary f(n_qubits);
    const std::size_t dim = f.dim();
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t l = 0; l < dim; ++l) {
            // Reduce j*l mod dim first so the angle stays exact for large products.
            const std::size_t e = (j * l) % dim;
            f.at(j, l) = std::polar(scale, 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(dim));
        }
    }
    return f;
}

std::vector<Wire> bit_reversal(std::size_t n) {
    std::vector<Wire> p(n);
    for (Wire i = 0; i < n; ++i) p[i] = n - 1 - i;
    return p;
}

double dft_error(const Circuit& c, const std::vector<Wire>& final_map) {
    const std::size_t n = c.n_wires();
    if (final_map.size() != n) throw std::invalid_argument("final map size does not match the circuit");
    Circuit loaded(n);
    for (Wire i = 0; i < n / 2; ++i) loaded.add(Gate::swap(i, n - 1 - i));
    loaded.append(c);
    std::vector<Wire> back(n);
    for (Wire i = 0; i < n; ++i) back[final_map[i]] = i;
    return max_phase_aligned_error(dense_unitary(loaded, back), dft_matrix(n));
}

}  // namespace chainforge::oracle
