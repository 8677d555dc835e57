#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "chainforge/circuit.hpp"
#include "chainforge/gf2.hpp"
#include "chainforge/schedule.hpp"
#include "chainforge/skeleton.hpp"

namespace chainforge {

/// Record of a Gauss-Jordan reduction to the identity using CNOT row operations,
/// where CNOT(c, t) means row t ^= row c.
///
/// The gates in the order they were applied are:
///   for column c = 0 .. n-2:  pivot(c) if pivot_flags[c], then CNOT(c, s) for s = c+1 .. n-1
///                             where lower_flags says so;
///   then for l = n-1 .. 1, k = l-1 .. 0: CNOT(l, k) where upper_flags says so.
struct GaussJordanTrace {
    std::size_t n = 0;
    std::vector<bool> pivot_flags;    // n-1 entries
    std::vector<Wire> pivot_sources;  // row j > c used to fix the diagonal of column c
    /// Indexed like the skeleton slot (c, s), c < s.
    std::vector<bool> lower_flags;
    /// Indexed like the skeleton slot (k, l), k < l.
    std::vector<bool> upper_flags;

    Gate pivot_gate(std::size_t column) const { return Gate::cnot(pivot_sources.at(column), column); }
    /// The gates in trace order.
    Circuit circuit() const;
};

/// Reduces `a` to the identity. Pivot fixes use the smallest row j > c with a[j][c] = 1.
/// Throws SingularMatrixError.
GaussJordanTrace gauss_jordan(const GF2Matrix& a);

/// Trace gates reordered into three skeleton-shaped parts with identical GF(2) action:
/// pivots first, then the lower eliminations, then the upper ones.
struct RearrangedTrace {
    std::size_t n = 0;
    /// At most one CNOT per column, column order.
    std::vector<Gate> pivots;
    /// Slot (c, s) holds CNOT(c, s).
    SkeletonSpec lower;
    /// Slot (k, l) holds CNOT(l, k); it is a skeleton over the reversed wire order.
    SkeletonSpec upper;

    Circuit circuit() const;
};

/// Moves every pivot gate to the front. A lower-block gate CNOT(c', j) that crosses a
/// later pivot CNOT(j, c) leaves the correction CNOT(c', c) behind, which toggles slot (c', c).
RearrangedTrace rearrange(const GaussJordanTrace& trace);

struct LinsynthOptions {
    bool prune_swaps = false;
};

/// LNN circuit of CNOT and SWAP gates with x -> A x on logical wires, as up to three consecutive
/// skeleton staircases (parts without gates are skipped). Generic depth <= 3(2n-3).
/// Throws SingularMatrixError.
ScheduledCircuit synthesize_lnn(const GF2Matrix& a, LinsynthOptions options = {});

/// Appends a circuit for x -> A x on logical wires to `out`, starting from `layout`, which
/// must place logical 0..n-1 along the chain in either direction.
void append_linear(Circuit& out, Layout& layout, const GF2Matrix& a);

/// Replaces CNOT+SWAP on the same pair by two CNOTs and a bare SWAP by three.
/// Throws UnsupportedGateError for any other gate kind.
ScheduledCircuit expand_to_cnot(const ScheduledCircuit& sc);

/// Circuit-level version that leaves single-qubit gates untouched.
Circuit expand_swaps(const Circuit& c);

}  // namespace chainforge
