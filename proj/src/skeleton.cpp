#include "chainforge/skeleton.hpp"

#include <algorithm>
#include <stdexcept>

#include "chainforge/errors.hpp"
#include "chainforge/text_format.hpp"

namespace chainforge {

SkeletonSpec::SkeletonSpec(std::size_t n) : n_(n) {
    if (n < 2) throw Error("skeleton circuits need at least 2 wires");
    present_.assign(n * (n - 1) / 2, true);
}

std::size_t SkeletonSpec::slot_index(Wire a, Wire b) const {
    if (a > b) std::swap(a, b);
    if (a == b || b >= n_) throw std::out_of_range("invalid skeleton slot");
    // Slots before row a: (n-1) + (n-2) + ... + (n-a).
    return a * (2 * n_ - a - 1) / 2 + (b - a - 1);
}

std::size_t SkeletonSpec::present_count() const {
    return static_cast<std::size_t>(std::count(present_.begin(), present_.end(), true));
}

Gate SkeletonSpec::payload(Wire a, Wire b) const {
    if (a > b) std::swap(a, b);
    if (auto it = payload_.find({a, b}); it != payload_.end()) return it->second;
    slot_index(a, b);
    return Gate::generic(a, b);
}

void SkeletonSpec::set_payload(const Gate& g) {
    if (!g.two_qubit()) throw std::invalid_argument("skeleton payloads must be two-qubit gates");
    Wire a = std::min(g.q0(), g.q1());
    Wire b = std::max(g.q0(), g.q1());
    slot_index(a, b);
    payload_.insert_or_assign({a, b}, g);
}

std::vector<std::vector<Pair>> stage_slots(std::size_t n) {
    if (n < 2) throw Error("skeleton circuits need at least 2 wires");
    std::vector<std::vector<Pair>> stages(2 * n - 3);
    for (Wire a = 0; a < n; ++a) {
        for (Wire b = a + 1; b < n; ++b) stages[stage_of(a, b) - 1].push_back({a, b});
    }
    return stages;
}

std::vector<std::vector<Pair>> stage_assignment(const SkeletonSpec& spec) {
    auto stages = stage_slots(spec.n());
    for (auto& stage : stages) {
        std::erase_if(stage, [&](const Pair& p) { return !spec.present(p.a, p.b); });
    }
    return stages;
}

Circuit skeleton_flat(const SkeletonSpec& spec) {
    Circuit c(spec.n());
    for (Wire a = 0; a < spec.n(); ++a) {
        for (Wire b = a + 1; b < spec.n(); ++b) {
            if (spec.present(a, b)) c.add(spec.payload(a, b));
        }
    }
    return c;
}

void append_skeleton(Circuit& out, Layout& layout, const SkeletonSpec& spec,
                     const std::vector<Wire>& logical_of_virtual, const StageInsertions* insertions) {
    const std::size_t n = spec.n();
    if (logical_of_virtual.size() != n || layout.size() != n || out.n_wires() != n) {
        throw std::invalid_argument("skeleton size does not match the layout");
    }
    // virtual wire -> current site
    auto site = [&](Wire v) { return layout.site_of(logical_of_virtual[v]); };
    std::vector<Wire> site_map(n);
    auto emit_insertions = [&](std::size_t idx) {
        if (insertions == nullptr || idx >= insertions->size()) return;
        for (Wire v = 0; v < n; ++v) site_map[v] = site(v);
        for (const Gate& g : (*insertions)[idx]) out.add(g.remapped(site_map));
    };

    const auto stages = stage_slots(n);
    for (std::size_t j = 0; j < stages.size(); ++j) {
        emit_insertions(j);
        for (const Pair& p : stages[j]) {
            const Wire sa = site(p.a);
            const Wire sb = site(p.b);
            if (sa + 1 != sb && sb + 1 != sa) {
                throw std::logic_error("skeleton slot (" + std::to_string(p.a) + ", " + std::to_string(p.b) +
                                       ") is not adjacent; the layout is not a chain");
            }
        }
        for (const Pair& p : stages[j]) {
            if (!spec.present(p.a, p.b)) continue;
            for (Wire v = 0; v < n; ++v) site_map[v] = site(v);
            out.add(spec.payload(p.a, p.b).remapped(site_map));
        }
        for (const Pair& p : stages[j]) {
            const Wire sa = site(p.a);
            const Wire sb = site(p.b);
            out.add(Gate::swap(std::min(sa, sb), std::max(sa, sb)));
            layout.swap_sites(sa, sb);
        }
    }
    emit_insertions(stages.size());
}

ScheduledCircuit schedule_lnn(const SkeletonSpec& spec, SkeletonScheduleOptions options) {
    const std::size_t n = spec.n();
    Circuit c(n);
    Layout layout(n);
    append_skeleton(c, layout, spec, identity_permutation(n));
    ScheduledCircuit sc{std::move(c), Architecture::lnn(n), layout.sites()};
    return options.drop_last_swaps ? prune_trailing_swaps(sc) : sc;
}

bool lnn_pattern_preserved(const ScheduledCircuit& sc) {
    const auto& m = sc.final_map;
    bool up = true;
    bool down = true;
    for (std::size_t i = 0; i + 1 < m.size(); ++i) {
        up = up && m[i + 1] == m[i] + 1;
        down = down && m[i] == m[i + 1] + 1;
    }
    return up || down;
}

SkeletonSpec parse_skeleton_spec(std::string_view text) {
    auto directives = tokenize(text);
    if (directives.empty()) throw ParseError(0, "empty skeleton text: expected 'skeleton N'");
    const Directive& head = directives.front();
    if (head.tokens[0] != "skeleton") throw ParseError(head.line, "expected 'skeleton N'");
    expect_arity(head, 2);
    const std::size_t n = parse_count(head.tokens[1], head.line);
    if (n < 2) throw ParseError(head.line, "skeleton needs at least 2 wires");
    SkeletonSpec spec(n);
    for (std::size_t i = 1; i < directives.size(); ++i) {
        const Directive& d = directives[i];
        const std::string& op = d.tokens[0];
        if (op != "absent" && op != "payload") throw ParseError(d.line, "unknown directive '" + op + "'");
        if (d.tokens.size() < 3) throw ParseError(d.line, "'" + op + "' needs a wire pair");
        Wire a = parse_count(d.tokens[1], d.line);
        Wire b = parse_count(d.tokens[2], d.line);
        if (a >= n || b >= n || a == b) throw ParseError(d.line, "invalid wire pair");
        if (op == "absent") {
            expect_arity(d, 3);
            spec.set_present(a, b, false);
            continue;
        }
        if (d.tokens.size() < 4) throw ParseError(d.line, "payload needs a gate kind");
        const std::string& kind = d.tokens[3];
        if (kind == "cphase") {
            expect_arity(d, 5);
            std::size_t k = parse_count(d.tokens[4], d.line);
            if (k < 1) throw ParseError(d.line, "cphase exponent must be >= 1");
            spec.set_payload(Gate::cphase(static_cast<unsigned>(k), a, b));
            continue;
        }
        expect_arity(d, 4);
        if (kind == "g") {
            spec.set_payload(Gate::generic(a, b));
        } else if (kind == "cnot") {
            spec.set_payload(Gate::cnot(a, b));
        } else if (kind == "cz") {
            spec.set_payload(Gate::cz(a, b));
        } else {
            throw ParseError(d.line, "unsupported payload kind '" + kind + "'");
        }
    }
    return spec;
}

}  // namespace chainforge
