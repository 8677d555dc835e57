#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "chainforge/circuit.hpp"
#include "chainforge/gf2.hpp"

namespace chainforge::oracle {

using Complex = std::complex<double>;

inline constexpr std::size_t max_state_qubits = 14;
inline constexpr std::size_t max_unitary_qubits = 10;

/// Dense state over n qubits. Little-endian: wire w is bit w of the basis index.
class StateVector {
public:
    /// |0...0>
    explicit StateVector(std::size_t n);
    static StateVector basis(std::size_t n, std::size_t index);

    std::size_t n_qubits() const noexcept { return n_; }
    const std::vector<Complex>& amplitudes() const noexcept { return amps_; }
    Complex operator[](std::size_t index) const { return amps_[index]; }

    /// Throws UnsupportedGateError for GENERIC2.
    void apply(const Gate& g);
    double norm() const;

    /// Moves the content of wire i to wire perm[i].
    StateVector permuted(const std::vector<Wire>& perm) const;

private:
    std::size_t n_;
    std::vector<Complex> amps_;
};

StateVector simulate(const Circuit& c, StateVector s);

/// Column-major 2^n x 2^n matrix.
class DenseUnitary {
public:
    explicit DenseUnitary(std::size_t n_qubits);

    std::size_t n_qubits() const noexcept { return n_; }
    std::size_t dim() const noexcept { return dim_; }
    Complex& at(std::size_t row, std::size_t col) { return data_[col * dim_ + row]; }
    Complex at(std::size_t row, std::size_t col) const { return data_[col * dim_ + row]; }

    /// max |U^dagger U - I| over all entries.
    double unitarity_error() const;

private:
    std::size_t n_;
    std::size_t dim_;
    std::vector<Complex> data_;
};

/// Built column by column from basis-state simulations. Throws SizeLimitError past max_unitary_qubits.
DenseUnitary dense_unitary(const Circuit& c);
/// Unitary of `c` followed by moving wire i to wire relabel[i].
DenseUnitary dense_unitary(const Circuit& c, const std::vector<Wire>& relabel);

/// max |a - phase * b| after aligning the global phase on b's largest-magnitude entry.
double max_phase_aligned_error(const DenseUnitary& a, const DenseUnitary& b);

/// True when c1 equals c2 followed by the wire move i -> relabel[i], up to global phase.
bool unitary_equiv(const Circuit& c1, const Circuit& c2, const std::vector<Wire>& relabel, double tol = 1e-10);

/// Matrix M with x -> M x for a CNOT/SWAP circuit. Throws UnsupportedGateError otherwise.
GF2Matrix gf2_action(const Circuit& c);

/// F[j][l] = exp(2 pi i j l / 2^n) / sqrt(2^n).
DenseUnitary dft_matrix(std::size_t n_qubits);

/// Wire permutation i -> n-1-i.
std::vector<Wire> bit_reversal(std::size_t n);

/// Distance from the DFT after phase alignment, with input bit i loaded on wire n-1-i and
/// output bit i read from wire final_map[i].
double dft_error(const Circuit& c, const std::vector<Wire>& final_map);

}  // namespace chainforge::oracle
