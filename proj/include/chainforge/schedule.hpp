#pragma once

#include <cstddef>
#include <vector>

#include "chainforge/architecture.hpp"
#include "chainforge/circuit.hpp"

namespace chainforge {

/// A circuit over architecture sites together with where each logical wire ends up.
/// Logical wire i starts on site i; final_map[i] is its site after the circuit.
struct ScheduledCircuit {
    Circuit circuit;
    Architecture arch;
    std::vector<Wire> final_map;
};

/// True when every two-qubit gate sits on an edge and final_map is a bijection.
bool is_valid(const ScheduledCircuit& sc);

/// Tracks which logical wire occupies which site while SWAPs are emitted.
class Layout {
public:
    explicit Layout(std::size_t n);

    std::size_t size() const noexcept { return site_of_.size(); }
    Wire site_of(Wire logical) const { return site_of_.at(logical); }
    Wire logical_at(Wire site) const { return logical_at_.at(site); }
    void swap_sites(Wire s, Wire t);
    /// logical -> site, i.e. the final_map once scheduling is done.
    const std::vector<Wire>& sites() const noexcept { return site_of_; }

private:
    std::vector<Wire> site_of_;
    std::vector<Wire> logical_at_;
};

/// SWAP network on LNN moving logical wire i to site target[i], built by odd-even
/// transposition sort (depth <= n). Throws Error for non-LNN architectures.
ScheduledCircuit route_permutation(const std::vector<Wire>& target, const Architecture& arch);

/// Drops SWAPs after which neither site is touched again, folding them into final_map.
ScheduledCircuit prune_trailing_swaps(const ScheduledCircuit& sc);

/// Runs `b` after `a` on the same sites. final maps compose.
ScheduledCircuit concat(const ScheduledCircuit& a, const ScheduledCircuit& b);

}  // namespace chainforge
