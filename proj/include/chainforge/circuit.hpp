#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string_view>
#include <vector>

namespace chainforge {

/// Wire (logical qubit) or architecture site index, 0-based.
using Wire = std::size_t;

enum class GateKind : std::uint8_t { H, P, CNOT, CZ, CPHASE, SWAP, GENERIC2 };

std::string_view gate_kind_name(GateKind kind);
bool is_two_qubit(GateKind kind);

/// One or two-qubit gate. For CNOT the first wire is the control.
/// CPHASE(k) is diag(1, 1, 1, exp(2*pi*i / 2^k)) and is symmetric in its wires.
class Gate {
public:
    static Gate h(Wire q);
    static Gate p(Wire q);
    static Gate cnot(Wire control, Wire target);
    static Gate cz(Wire a, Wire b);
    static Gate swap(Wire a, Wire b);
    static Gate cphase(unsigned k, Wire a, Wire b);
    static Gate generic(Wire a, Wire b);

    /// Builds a two-qubit gate of `kind`; `k` is only read for CPHASE.
    static Gate two_qubit(GateKind kind, Wire a, Wire b, unsigned k = 0);

    GateKind kind() const noexcept { return kind_; }
    bool two_qubit() const noexcept { return is_two_qubit(kind_); }
    Wire q0() const noexcept { return q0_; }
    /// Second wire; only meaningful for two-qubit kinds.
    Wire q1() const noexcept { return q1_; }
    /// CPHASE exponent; 0 for every other kind.
    unsigned k() const noexcept { return k_; }

    /// Same gate kind and parameter with wires renamed through `wire_map`.
    Gate remapped(const std::vector<Wire>& wire_map) const;

    bool acts_on(Wire w) const noexcept { return q0_ == w || (two_qubit() && q1_ == w); }
    bool same_pair(Wire a, Wire b) const noexcept {
        return two_qubit() && ((q0_ == a && q1_ == b) || (q0_ == b && q1_ == a));
    }

    friend bool operator==(const Gate&, const Gate&) = default;

private:
    Gate(GateKind kind, Wire q0, Wire q1, unsigned k) : kind_(kind), q0_(q0), q1_(q1), k_(k) {}

    GateKind kind_;
    Wire q0_;
    Wire q1_;
    unsigned k_;
};

/// Ordered gate list over a fixed number of wires.
class Circuit {
public:
    explicit Circuit(std::size_t n_wires);
    Circuit(std::size_t n_wires, std::initializer_list<Gate> gates);
    Circuit(std::size_t n_wires, std::vector<Gate> gates);

    std::size_t n_wires() const noexcept { return n_wires_; }
    const std::vector<Gate>& gates() const noexcept { return gates_; }
    std::size_t size() const noexcept { return gates_.size(); }
    bool empty() const noexcept { return gates_.empty(); }

    /// Throws std::out_of_range when a wire index is >= n_wires.
    void add(const Gate& g);
    void append(const Circuit& other);

    std::size_t count(GateKind kind) const;

    friend bool operator==(const Circuit&, const Circuit&) = default;

private:
    std::size_t n_wires_;
    std::vector<Gate> gates_;
};

/// ASAP layer (1-based) of every gate: one past the latest layer touching any of its wires.
std::vector<std::size_t> asap_layers(const Circuit& c);

/// Gates grouped by ASAP layer, in circuit order inside each layer.
std::vector<std::vector<Gate>> layered(const Circuit& c);

/// Number of logic levels under ASAP layering with the gate order fixed.
std::size_t depth(const Circuit& c);

/// Number of ASAP layers that hold at least one two-qubit gate.
std::size_t two_qubit_layer_count(const Circuit& c);

struct GenericDepthOptions {
    /// When false, single-qubit gates neither occupy a level nor delay anything.
    bool count_single_qubit = true;
};

/// Depth when every two-qubit gate is a generic unitary: a SWAP that directly follows a
/// non-SWAP gate on the same wire pair merges into it and costs nothing extra.
std::size_t generic_depth(const Circuit& c, GenericDepthOptions options = {});

/// Inverse of a permutation given as a vector (p[i] = image of i).
std::vector<Wire> invert_permutation(const std::vector<Wire>& p);
bool is_permutation(const std::vector<Wire>& p);
std::vector<Wire> identity_permutation(std::size_t n);

}  // namespace chainforge
