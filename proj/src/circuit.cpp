#include "chainforge/circuit.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace chainforge {

std::string_view gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "h";
        case GateKind::P: return "p";
        case GateKind::CNOT: return "cnot";
        case GateKind::CZ: return "cz";
        case GateKind::CPHASE: return "cphase";
        case GateKind::SWAP: return "swap";
        case GateKind::GENERIC2: return "g";
    }
    return "?";
}

bool is_two_qubit(GateKind kind) {
    return kind != GateKind::H && kind != GateKind::P;
}

Gate Gate::h(Wire q) { return Gate(GateKind::H, q, q, 0); }
Gate Gate::p(Wire q) { return Gate(GateKind::P, q, q, 0); }
Gate Gate::cnot(Wire control, Wire target) { return two_qubit(GateKind::CNOT, control, target); }
Gate Gate::cz(Wire a, Wire b) { return two_qubit(GateKind::CZ, a, b); }
Gate Gate::swap(Wire a, Wire b) { return two_qubit(GateKind::SWAP, a, b); }
Gate Gate::cphase(unsigned k, Wire a, Wire b) { return two_qubit(GateKind::CPHASE, a, b, k); }
Gate Gate::generic(Wire a, Wire b) { return two_qubit(GateKind::GENERIC2, a, b); }

Gate Gate::two_qubit(GateKind kind, Wire a, Wire b, unsigned k) {
    if (!is_two_qubit(kind)) {
        throw std::invalid_argument("gate kind '" + std::string(gate_kind_name(kind)) + "' is single-qubit");
    }
    if (a == b) {
        throw std::invalid_argument("two-qubit gate on repeated wire " + std::to_string(a));
    }
    if (kind == GateKind::CPHASE) {
        if (k < 1) throw std::invalid_argument("cphase needs k >= 1");
    } else {
        k = 0;
    }
    return Gate(kind, a, b, k);
}

Gate Gate::remapped(const std::vector<Wire>& wire_map) const {
    Gate g = *this;
    g.q0_ = wire_map.at(q0_);
    g.q1_ = two_qubit() ? wire_map.at(q1_) : g.q0_;
    return g;
}

Circuit::Circuit(std::size_t n_wires) : n_wires_(n_wires) {}

Circuit::Circuit(std::size_t n_wires, std::initializer_list<Gate> gates) : n_wires_(n_wires) {
    for (const Gate& g : gates) add(g);
}

Circuit::Circuit(std::size_t n_wires, std::vector<Gate> gates) : n_wires_(n_wires) {
    gates_.reserve(gates.size());
    for (const Gate& g : gates) add(g);
}

void Circuit::add(const Gate& g) {
    if (g.q0() >= n_wires_ || (g.two_qubit() && g.q1() >= n_wires_)) {
        throw std::out_of_range("gate " + std::string(gate_kind_name(g.kind())) + " touches a wire >= " +
                                std::to_string(n_wires_));
    }
    gates_.push_back(g);
}

void Circuit::append(const Circuit& other) {
    if (other.n_wires_ != n_wires_) throw std::invalid_argument("appending circuit with different wire count");
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

std::size_t Circuit::count(GateKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(), [kind](const Gate& g) { return g.kind() == kind; }));
}

std::vector<std::size_t> asap_layers(const Circuit& c) {
    std::vector<std::size_t> last(c.n_wires(), 0);
    std::vector<std::size_t> layer;
    layer.reserve(c.size());
    for (const Gate& g : c.gates()) {
        std::size_t l = last[g.q0()];
        if (g.two_qubit()) l = std::max(l, last[g.q1()]);
        ++l;
        last[g.q0()] = l;
        if (g.two_qubit()) last[g.q1()] = l;
        layer.push_back(l);
    }
    return layer;
}

std::vector<std::vector<Gate>> layered(const Circuit& c) {
    auto layer = asap_layers(c);
    std::size_t d = layer.empty() ? 0 : *std::max_element(layer.begin(), layer.end());
    std::vector<std::vector<Gate>> out(d);
    for (std::size_t i = 0; i < layer.size(); ++i) out[layer[i] - 1].push_back(c.gates()[i]);
    return out;
}

std::size_t depth(const Circuit& c) {
    auto layer = asap_layers(c);
    return layer.empty() ? 0 : *std::max_element(layer.begin(), layer.end());
}

std::size_t two_qubit_layer_count(const Circuit& c) {
    std::size_t count = 0;
    for (const auto& level : layered(c)) {
        if (std::any_of(level.begin(), level.end(), [](const Gate& g) { return g.two_qubit(); })) ++count;
    }
    return count;
}

std::size_t generic_depth(const Circuit& c, GenericDepthOptions options) {
    std::vector<std::size_t> last(c.n_wires(), 0);
    // Index of the last gate on each wire; used to detect a SWAP riding on its payload gate.
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> last_gate(c.n_wires(), none);
    std::vector<bool> absorbed_swap(c.size(), false);
    std::size_t d = 0;
    const auto& gates = c.gates();
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate& g = gates[i];
        if (!g.two_qubit()) {
            if (!options.count_single_qubit) continue;
            last[g.q0()] += 1;
            last_gate[g.q0()] = i;
            d = std::max(d, last[g.q0()]);
            continue;
        }
        const Wire a = g.q0();
        const Wire b = g.q1();
        if (g.kind() == GateKind::SWAP && last_gate[a] != none && last_gate[a] == last_gate[b]) {
            const std::size_t j = last_gate[a];
            const Gate& prev = gates[j];
            if (prev.kind() != GateKind::SWAP && prev.same_pair(a, b) && !absorbed_swap[j]) {
                absorbed_swap[j] = true;
                last_gate[a] = last_gate[b] = i;
                absorbed_swap[i] = true;
                continue;
            }
        }
        std::size_t l = std::max(last[a], last[b]) + 1;
        last[a] = last[b] = l;
        last_gate[a] = last_gate[b] = i;
        d = std::max(d, l);
    }
    return d;
}

std::vector<Wire> invert_permutation(const std::vector<Wire>& p) {
    std::vector<Wire> inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv.at(p[i]) = i;
    return inv;
}

bool is_permutation(const std::vector<Wire>& p) {
    std::vector<bool> seen(p.size(), false);
    for (Wire w : p) {
        if (w >= p.size() || seen[w]) return false;
        seen[w] = true;
    }
    return true;
}

std::vector<Wire> identity_permutation(std::size_t n) {
    std::vector<Wire> p(n);
    std::iota(p.begin(), p.end(), Wire{0});
    return p;
}

}  // namespace chainforge
