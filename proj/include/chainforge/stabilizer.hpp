#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "chainforge/circuit.hpp"
#include "chainforge/gf2.hpp"
#include "chainforge/schedule.hpp"

namespace chainforge {

/// Conjugation action of a Clifford circuit on the Pauli generators.
/// Row i < n is the image of X_i, row n + i the image of Z_i. A row with x and z both
/// set on a wire carries Y there; the sign bit is (-1)^sign.
class PauliTableau {
public:
    /// Identity action.
    explicit PauliTableau(std::size_t n);

    std::size_t n_qubits() const noexcept { return n_; }
    bool x(std::size_t row, Wire w) const { return x_[row * n_ + w] != 0; }
    bool z(std::size_t row, Wire w) const { return z_[row * n_ + w] != 0; }
    bool sign(std::size_t row) const { return r_[row] != 0; }

    /// Throws UnsupportedGateError for GENERIC2 and CPHASE with k >= 2 (CPHASE(1) is CZ).
    void apply(const Gate& g);

    /// Moves wire w's content to wire perm[w].
    PauliTableau permuted(const std::vector<Wire>& perm) const;

    /// Rows pairwise commute except X_i with Z_i.
    bool symplectic() const;

    friend bool operator==(const PauliTableau&, const PauliTableau&) = default;

private:
    void h(Wire a);
    void s(Wire a);
    void cx(Wire c, Wire t);

    std::size_t n_;
    std::vector<std::uint8_t> x_;
    std::vector<std::uint8_t> z_;
    std::vector<std::uint8_t> r_;
};

PauliTableau tableau_of(const Circuit& c);

/// Free-function form of PauliTableau::apply.
PauliTableau apply_gate(PauliTableau t, const Gate& g);

/// True when c1 and c2 followed by the wire move i -> relabel[i] conjugate every generator alike.
bool tableau_equiv(const Circuit& c1, const Circuit& c2, const std::vector<Wire>& relabel);

/// H-C-P-C-P-C-H-P-C-P-C: Hadamard masks, Phase masks and nonsingular linear stages.
struct StageDecomposition {
    static constexpr std::string_view order = "HCPCPCHPCPC";

    std::size_t n = 0;
    std::vector<std::vector<bool>> h_masks;  // 2 entries
    std::vector<std::vector<bool>> p_masks;  // 4 entries
    std::vector<GF2Matrix> linear;           // 5 entries

    /// Throws Error on wrong counts or sizes and SingularMatrixError on a singular C stage.
    void validate() const;

    static StageDecomposition trivial(std::size_t n);
    static StageDecomposition random(std::size_t n, std::mt19937_64& rng);
};

/// Stage-by-stage circuit without locality constraints; each C stage is its plain
/// Gauss-Jordan CNOT sequence.
Circuit stabilizer_flat(const StageDecomposition& d);

/// LNN schedule: H and P stages are single-qubit layers placed through the live layout,
/// each C stage is a linear synthesis continuing from the current layout.
ScheduledCircuit schedule_stabilizer(const StageDecomposition& d);

// Decomposition file: `stab N`, then 11 blocks, each introduced by `stage h|p|c`;
// H/P blocks hold one bitmask of N characters, C blocks N matrix rows.
StageDecomposition parse_decomposition(std::string_view text);
std::string emit_decomposition(const StageDecomposition& d);

}  // namespace chainforge
