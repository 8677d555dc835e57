#include "chainforge/schedule.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "chainforge/errors.hpp"

namespace chainforge {

bool is_valid(const ScheduledCircuit& sc) {
    return sc.final_map.size() == sc.arch.n_sites() && is_permutation(sc.final_map) &&
           !validate_on(sc.circuit, sc.arch).has_value();
}

Layout::Layout(std::size_t n) : site_of_(identity_permutation(n)), logical_at_(identity_permutation(n)) {}

void Layout::swap_sites(Wire s, Wire t) {
    Wire ls = logical_at_.at(s);
    Wire lt = logical_at_.at(t);
    std::swap(logical_at_[s], logical_at_[t]);
    site_of_[ls] = t;
    site_of_[lt] = s;
}

ScheduledCircuit route_permutation(const std::vector<Wire>& target, const Architecture& arch) {
    if (arch.kind() != ArchKind::LNN) throw Error("permutation routing is only implemented for lnn");
    const std::size_t n = arch.n_sites();
    if (target.size() != n || !is_permutation(target)) throw Error("routing target is not a permutation of the sites");

    Circuit c(n);
    Layout layout(n);
    auto key = [&](Wire site) { return target[layout.logical_at(site)]; };
    auto sorted = [&] {
        for (Wire s = 0; s + 1 < n; ++s) {
            if (key(s) > key(s + 1)) return false;
        }
        return true;
    };
    for (std::size_t round = 0; !sorted(); ++round) {
        for (Wire s = round % 2; s + 1 < n; s += 2) {
            if (key(s) > key(s + 1)) {
                c.add(Gate::swap(s, s + 1));
                layout.swap_sites(s, s + 1);
            }
        }
    }
    return ScheduledCircuit{std::move(c), arch, layout.sites()};
}

ScheduledCircuit prune_trailing_swaps(const ScheduledCircuit& sc) {
    const auto& gates = sc.circuit.gates();
    const std::size_t n = sc.circuit.n_wires();
    std::vector<bool> touched_later(n, false);
    std::vector<bool> keep(gates.size(), true);
    // undo[s]: the site whose content the dropped SWAPs would have carried to s.
    std::vector<Wire> undo = identity_permutation(n);
    std::vector<Wire> undo_pos = identity_permutation(n);
    for (std::size_t i = gates.size(); i-- > 0;) {
        const Gate& g = gates[i];
        if (g.kind() == GateKind::SWAP && !touched_later[g.q0()] && !touched_later[g.q1()]) {
            keep[i] = false;
            const Wire s0 = undo_pos[g.q0()];
            const Wire s1 = undo_pos[g.q1()];
            undo[s0] = g.q1();
            undo[s1] = g.q0();
            std::swap(undo_pos[g.q0()], undo_pos[g.q1()]);
            continue;
        }
        touched_later[g.q0()] = true;
        if (g.two_qubit()) touched_later[g.q1()] = true;
    }
    Circuit out(n);
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (keep[i]) out.add(gates[i]);
    }
    std::vector<Wire> final_map(n);
    for (Wire l = 0; l < n; ++l) final_map[l] = undo[sc.final_map[l]];
    return ScheduledCircuit{std::move(out), sc.arch, std::move(final_map)};
}

ScheduledCircuit concat(const ScheduledCircuit& a, const ScheduledCircuit& b) {
    if (a.circuit.n_wires() != b.circuit.n_wires()) throw std::invalid_argument("concat of schedules on different sizes");
    Circuit c = a.circuit;
    c.append(b.circuit);
    std::vector<Wire> final_map(a.final_map.size());
    for (Wire l = 0; l < final_map.size(); ++l) final_map[l] = b.final_map[a.final_map[l]];
    return ScheduledCircuit{std::move(c), a.arch, std::move(final_map)};
}

}  // namespace chainforge
