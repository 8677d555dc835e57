#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "chainforge/circuit.hpp"
#include "chainforge/schedule.hpp"

namespace chainforge {

enum class CssMode : std::uint8_t { Encode, Syndrome };
enum class CssGate : std::uint8_t { None, Cnot, Cz };

/// Encoder or syndrome circuit between a control block a_1..a_s (plus b when encoding)
/// and a target block c_1..c_t.
///
/// Wire numbering follows the chain a_1 - ... - a_s - b - c_t - ... - c_1, so a_p is wire
/// p-1, b is wire s, and c_j is wire controls() + (t - j). Syndrome circuits have no b.
class CssSpec {
public:
    /// Every entry starts as None. Throws Error when s or t is zero.
    CssSpec(CssMode mode, std::size_t s, std::size_t t);

    CssMode mode() const noexcept { return mode_; }
    std::size_t s() const noexcept { return s_; }
    std::size_t t() const noexcept { return t_; }
    /// s + 1 when encoding, s otherwise.
    std::size_t controls() const noexcept { return mode_ == CssMode::Encode ? s_ + 1 : s_; }
    std::size_t n_wires() const noexcept { return controls() + t_; }

    /// p in 1..controls() (p = s+1 is b), j in 1..t.
    CssGate gate(std::size_t p, std::size_t j) const;
    void set_gate(std::size_t p, std::size_t j, CssGate g);
    std::size_t present_count() const;

    Wire control_wire(std::size_t p) const { return p - 1; }
    Wire target_wire(std::size_t j) const { return controls() + (t_ - j); }

    /// One flag per wire.
    const std::vector<bool>& hadamard() const noexcept { return hadamard_; }
    void set_hadamard(Wire w, bool value) { hadamard_.at(w) = value; }

    /// Level (1-based) of the pair (p, j): controls() + t + 1 - p - j.
    std::size_t level_of(std::size_t p, std::size_t j) const { return controls() + t_ + 1 - p - j; }
    std::size_t level_count() const { return controls() + t_ - 1; }

    /// Every entry set to `g`.
    static CssSpec full(CssMode mode, std::size_t s, std::size_t t, CssGate g = CssGate::Cnot);

private:
    CssMode mode_;
    std::size_t s_;
    std::size_t t_;
    std::vector<CssGate> gates_;
    std::vector<bool> hadamard_;
};

/// Hadamard layer, then b's gates, then a_s, ..., a_1, each over c_t, ..., c_1; syndrome
/// circuits repeat the Hadamard layer at the end.
Circuit css_flat(const CssSpec& spec);

/// (p, j) pairs of one level, in the order they appear along the chain.
struct CssLevel {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

/// Level contents, level 1 first, listing every pair (present or not).
std::vector<CssLevel> css_levels(const CssSpec& spec);

struct CssScheduleOptions {
    bool prune_swaps = true;
};

/// Levels on the initial chain layout: each level's present gates, then SWAPs on all of its
/// pairs. Generic depth s+t for a full encoder and s+t-1 for a full syndrome circuit.
ScheduledCircuit css_schedule_lnn(const CssSpec& spec, CssScheduleOptions options = {});

struct CssDepthReport {
    /// Two-qubit levels with each gate+SWAP pair merged; Hadamards excluded.
    std::size_t generic_depth = 0;
    /// Plain depth of the schedule, Hadamard and SWAP levels included.
    std::size_t gate_level_depth = 0;
};

CssDepthReport css_depth_report(const CssSpec& spec);

/// Syndrome circuit for the [[7,1,3]] code: 7 data controls, 6 check targets. The three
/// Z-type checks use CNOT, the three X-type checks CZ with Hadamards on their targets.
/// Check rows are ordered so a_1-c_1 and a_7-c_6 are both present.
CssSpec steane_preset();

// Spec file: `css encode|syndrome S T`, one row per control position over {., x, z}
// (x = CNOT, z = CZ), and optionally `hadamard BITMASK` with one character per wire.
CssSpec parse_css_spec(std::string_view text);
std::string emit_css_spec(const CssSpec& spec);

}  // namespace chainforge
