#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chainforge/circuit.hpp"
#include "chainforge/schedule.hpp"

namespace chainforge {

/// Unordered wire pair stored with a < b.
struct Pair {
    Wire a;
    Wire b;
    friend auto operator<=>(const Pair&, const Pair&) = default;
};

/// The all-pairs skeleton circuit over n wires: one two-qubit slot per pair (a, b), a < b,
/// listed (0,1), (0,2), ..., (0,n-1), (1,2), ..., (n-2,n-1). Each slot may be absent.
class SkeletonSpec {
public:
    /// All slots present with GENERIC2 payloads. Throws Error when n < 2.
    explicit SkeletonSpec(std::size_t n);

    std::size_t n() const noexcept { return n_; }
    std::size_t slot_count() const noexcept { return present_.size(); }
    /// Position of (a, b) in the slot list.
    std::size_t slot_index(Wire a, Wire b) const;

    bool present(Wire a, Wire b) const { return present_[slot_index(a, b)]; }
    void set_present(Wire a, Wire b, bool value) { present_[slot_index(a, b)] = value; }
    std::size_t present_count() const;

    /// Gate executed in slot (a, b); GENERIC2 unless overridden. Its wires are {a, b}.
    Gate payload(Wire a, Wire b) const;
    /// Throws std::invalid_argument unless `g` is a two-qubit gate.
    void set_payload(const Gate& g);

private:
    std::size_t n_;
    std::vector<bool> present_;
    std::map<std::pair<Wire, Wire>, Gate> payload_;
};

/// 1-based computational stage of slot (a, b): stage a + b, giving 2n-3 stages.
inline std::size_t stage_of(Wire a, Wire b) { return a < b ? a + b : b + a; }

/// All slots of each stage (present or not), stage 1 first.
std::vector<std::vector<Pair>> stage_slots(std::size_t n);

/// The 2n-3 stages restricted to present slots. Absent slots leave their stage in place.
std::vector<std::vector<Pair>> stage_assignment(const SkeletonSpec& spec);

/// Skeleton in SC order as an unrestricted-architecture circuit (payloads of present slots).
Circuit skeleton_flat(const SkeletonSpec& spec);

/// Single-qubit gates (virtual wires) emitted around stages: entry j-1 before stage j,
/// the final entry after the last stage. Sized 2n-2 when used.
using StageInsertions = std::vector<std::vector<Gate>>;

/// Appends the SWAP-interleaved staircase for `spec` to `out`. Virtual wire v of the spec is
/// logical wire logical_of_virtual[v]; the virtual chain must be laid out contiguously and in
/// order (either direction) on the sites. Every slot gets its SWAP, present or not, which
/// reverses the chain's orientation. Throws std::logic_error if the layout is not a chain.
void append_skeleton(Circuit& out, Layout& layout, const SkeletonSpec& spec,
                     const std::vector<Wire>& logical_of_virtual, const StageInsertions* insertions = nullptr);

struct SkeletonScheduleOptions {
    /// Omit SWAPs that nothing after them depends on.
    bool drop_last_swaps = false;
};

/// LNN schedule: stage L_j then swapping stage S_j on the same pairs. Full depth 4n-6.
ScheduledCircuit schedule_lnn(const SkeletonSpec& spec, SkeletonScheduleOptions options = {});

/// True when final_map is monotone, i.e. the logical chain is still a physical chain.
bool lnn_pattern_preserved(const ScheduledCircuit& sc);

// SkeletonSpec file: `skeleton N`, then `absent a b` and `payload a b <kind> [k]` lines.
SkeletonSpec parse_skeleton_spec(std::string_view text);

}  // namespace chainforge
