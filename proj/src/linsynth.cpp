#include "chainforge/linsynth.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "chainforge/errors.hpp"

namespace chainforge {

namespace {

std::size_t slot(std::size_t n, Wire a, Wire b) {
    if (a > b) std::swap(a, b);
    return a * (2 * n - a - 1) / 2 + (b - a - 1);
}

std::vector<Wire> reversed_wires(std::size_t n) {
    std::vector<Wire> r(n);
    for (Wire v = 0; v < n; ++v) r[v] = n - 1 - v;
    return r;
}

}  // namespace

Circuit GaussJordanTrace::circuit() const {
    Circuit c(n);
    for (Wire col = 0; col + 1 < n; ++col) {
        if (pivot_flags[col]) c.add(pivot_gate(col));
        for (Wire s = col + 1; s < n; ++s) {
            if (lower_flags[slot(n, col, s)]) c.add(Gate::cnot(col, s));
        }
    }
    for (Wire l = n; l-- > 1;) {
        for (Wire k = l; k-- > 0;) {
            if (upper_flags[slot(n, k, l)]) c.add(Gate::cnot(l, k));
        }
    }
    return c;
}

GaussJordanTrace gauss_jordan(const GF2Matrix& a) {
    const std::size_t n = a.size();
    if (n == 0) throw Error("empty matrix");
    GaussJordanTrace t;
    t.n = n;
    t.pivot_flags.assign(n - 1, false);
    t.pivot_sources.assign(n - 1, 0);
    t.lower_flags.assign(n * (n - 1) / 2, false);
    t.upper_flags.assign(n * (n - 1) / 2, false);

    GF2Matrix m = a;
    for (Wire c = 0; c + 1 < n; ++c) {
        if (!m.get(c, c)) {
            Wire j = c + 1;
            while (j < n && !m.get(j, c)) ++j;
            if (j == n) throw SingularMatrixError("matrix is singular: no pivot in column " + std::to_string(c));
            m.add_row(j, c);
            t.pivot_flags[c] = true;
            t.pivot_sources[c] = j;
        }
        for (Wire s = c + 1; s < n; ++s) {
            if (m.get(s, c)) {
                m.add_row(c, s);
                t.lower_flags[slot(n, c, s)] = true;
            }
        }
    }
    if (!m.get(n - 1, n - 1)) throw SingularMatrixError("matrix is singular: no pivot in the last column");
    for (Wire l = n; l-- > 1;) {
        for (Wire k = l; k-- > 0;) {
            if (m.get(k, l)) {
                m.add_row(l, k);
                t.upper_flags[slot(n, k, l)] = true;
            }
        }
    }
    return t;
}

Circuit RearrangedTrace::circuit() const {
    Circuit c(n);
    for (const Gate& g : pivots) c.add(g);
    if (n < 2) return c;
    c.append(skeleton_flat(lower));
    Circuit up = skeleton_flat(upper);
    const auto rev = reversed_wires(n);
    for (const Gate& g : up.gates()) c.add(g.remapped(rev));
    return c;
}

RearrangedTrace rearrange(const GaussJordanTrace& trace) {
    const std::size_t n = trace.n;
    const std::size_t spec_n = std::max<std::size_t>(n, 2);
    RearrangedTrace r{n, {}, SkeletonSpec(spec_n), SkeletonSpec(spec_n)};
    if (n < 2) return r;

    for (Wire c = 0; c + 1 < n; ++c) {
        if (trace.pivot_flags[c]) r.pivots.push_back(trace.pivot_gate(c));
    }

    for (Wire c = 0; c < n; ++c) {
        // Targets of block c as it is pushed right past pivots c+1, c+2, ... in turn.
        std::vector<bool> targets(n, false);
        for (Wire s = c + 1; s < n; ++s) targets[s] = trace.lower_flags[slot(n, c, s)];
        for (Wire later = c + 1; later + 1 < n; ++later) {
            if (trace.pivot_flags[later] && targets[trace.pivot_sources[later]]) {
                targets[later] = !targets[later];
            }
        }
        for (Wire s = c + 1; s < n; ++s) {
            r.lower.set_present(c, s, targets[s]);
            r.lower.set_payload(Gate::cnot(c, s));
        }
    }

    // Upper slot (k, l) runs CNOT(l, k); with v = n-1-wire it is slot (n-1-l, n-1-k), control first.
    for (Wire k = 0; k < n; ++k) {
        for (Wire l = k + 1; l < n; ++l) {
            const Wire va = n - 1 - l;
            const Wire vb = n - 1 - k;
            r.upper.set_present(va, vb, trace.upper_flags[slot(n, k, l)]);
            r.upper.set_payload(Gate::cnot(va, vb));
        }
    }
    return r;
}

void append_linear(Circuit& out, Layout& layout, const GF2Matrix& a) {
    const std::size_t n = a.size();
    if (out.n_wires() != n || layout.size() != n) throw std::invalid_argument("matrix size does not match the layout");
    // Eliminating A^-1 leaves gates whose product, in application order, is A itself.
    const GaussJordanTrace trace = gauss_jordan(a.inverse());
    if (n < 2) return;
    const RearrangedTrace parts = rearrange(trace);

    SkeletonSpec pivots(n);
    for (Wire s = 0; s < n; ++s) {
        for (Wire t = s + 1; t < n; ++t) pivots.set_present(s, t, false);
    }
    for (const Gate& g : parts.pivots) {
        pivots.set_present(g.q0(), g.q1(), true);
        pivots.set_payload(g);
    }
    const auto ident = identity_permutation(n);
    // A part with no gates would only flip the chain's orientation, which every part accepts.
    auto part = [&](const SkeletonSpec& spec, const std::vector<Wire>& virt) {
        if (spec.present_count() > 0) append_skeleton(out, layout, spec, virt);
    };
    part(pivots, ident);
    part(parts.lower, ident);
    part(parts.upper, reversed_wires(n));
}

ScheduledCircuit synthesize_lnn(const GF2Matrix& a, LinsynthOptions options) {
    const std::size_t n = a.size();
    Circuit c(n);
    Layout layout(n);
    append_linear(c, layout, a);
    ScheduledCircuit sc{std::move(c), Architecture::lnn(n), layout.sites()};
    return options.prune_swaps ? prune_trailing_swaps(sc) : sc;
}

Circuit expand_swaps(const Circuit& c) {
    const auto& gates = c.gates();
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> last(c.n_wires(), none);
    // merged[j]: CNOT j absorbs the SWAP that follows it; dropped[i]: SWAP i was absorbed.
    std::vector<bool> merged(gates.size(), false);
    std::vector<bool> dropped(gates.size(), false);
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate& g = gates[i];
        if (g.kind() == GateKind::SWAP) {
            const std::size_t j = last[g.q0()];
            if (j != none && j == last[g.q1()] && gates[j].kind() == GateKind::CNOT && !merged[j] &&
                gates[j].same_pair(g.q0(), g.q1())) {
                merged[j] = true;
                dropped[i] = true;
            }
        }
        last[g.q0()] = i;
        if (g.two_qubit()) last[g.q1()] = i;
    }
    Circuit out(c.n_wires());
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate& g = gates[i];
        if (dropped[i]) continue;
        if (merged[i]) {
            // CNOT(c,t) followed by SWAP(c,t) equals CNOT(t,c) followed by CNOT(c,t).
            out.add(Gate::cnot(g.q1(), g.q0()));
            out.add(Gate::cnot(g.q0(), g.q1()));
        } else if (g.kind() == GateKind::SWAP) {
            out.add(Gate::cnot(g.q0(), g.q1()));
            out.add(Gate::cnot(g.q1(), g.q0()));
            out.add(Gate::cnot(g.q0(), g.q1()));
        } else {
            out.add(g);
        }
    }
    return out;
}

ScheduledCircuit expand_to_cnot(const ScheduledCircuit& sc) {
    for (const Gate& g : sc.circuit.gates()) {
        if (g.kind() != GateKind::CNOT && g.kind() != GateKind::SWAP) {
            throw UnsupportedGateError("cnot expansion expects cnot/swap circuits, found '" +
                                       std::string(gate_kind_name(g.kind())) + "'");
        }
    }
    return ScheduledCircuit{expand_swaps(sc.circuit), sc.arch, sc.final_map};
}

}  // namespace chainforge
