#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "chainforge/circuit.hpp"
#include "chainforge/schedule.hpp"

namespace chainforge {

struct QftSpec {
    std::size_t n = 1;
    /// Approximation threshold m: controlled rotations with k > m are dropped.
    std::optional<unsigned> approx_threshold;
};

/// Textbook QFT: for each wire a, H(a) then CPHASE(b - a + 1) on (a, b) for b > a.
/// Its unitary followed by the bit-reversal wire permutation is the DFT matrix.
Circuit qft_flat(const QftSpec& spec);

/// LNN schedule of the QFT through the skeleton staircase, H(a) placed right before wire a's
/// first rotation. The final map is the chain reversal: the schedule applies the DFT with
/// site 0 as the most significant bit on both input and output (see output_order).
ScheduledCircuit qft_lnn(const QftSpec& spec);

/// Same schedule with rotations k > m marked absent; their SWAPs stay.
ScheduledCircuit aqft_lnn(const QftSpec& spec);

/// final_map composed with bit reversal: the site holding DFT output bit i when input bit i
/// was loaded on site n-1-i, read in reversed order. Identity for qft_lnn.
std::vector<Wire> output_order(const ScheduledCircuit& sc);

}  // namespace chainforge
