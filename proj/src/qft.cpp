#include "chainforge/qft.hpp"

#include "chainforge/errors.hpp"
#include "chainforge/oracle.hpp"
#include "chainforge/skeleton.hpp"

namespace chainforge {

namespace {

void check(const QftSpec& spec) {
    if (spec.n < 1) throw Error("qft needs at least one qubit");
    if (spec.approx_threshold) {
        if (*spec.approx_threshold < 1 || *spec.approx_threshold > spec.n) {
            throw Error("approximation threshold must lie in [1, n]");
        }
    }
}

bool kept(const QftSpec& spec, unsigned k) {
    return !spec.approx_threshold || k <= *spec.approx_threshold;
}

}  // namespace

Circuit qft_flat(const QftSpec& spec) {
    check(spec);
    Circuit c(spec.n);
    for (Wire a = 0; a < spec.n; ++a) {
        c.add(Gate::h(a));
        for (Wire b = a + 1; b < spec.n; ++b) {
            const auto k = static_cast<unsigned>(b - a + 1);
            if (kept(spec, k)) c.add(Gate::cphase(k, a, b));
        }
    }
    return c;
}

ScheduledCircuit aqft_lnn(const QftSpec& spec) {
    check(spec);
    const std::size_t n = spec.n;
    if (n == 1) return ScheduledCircuit{Circuit(1, {Gate::h(0)}), Architecture::lnn(1), {0}};

    SkeletonSpec skeleton(n);
    for (Wire a = 0; a < n; ++a) {
        for (Wire b = a + 1; b < n; ++b) {
            const auto k = static_cast<unsigned>(b - a + 1);
            skeleton.set_payload(Gate::cphase(k, a, b));
            skeleton.set_present(a, b, kept(spec, k));
        }
    }
    // Wire a is first used by slot (a, a+1) in stage 2a+1; the last wire is only ever a target.
    StageInsertions hadamards(2 * n - 2);
    for (Wire a = 0; a + 1 < n; ++a) hadamards[2 * a].push_back(Gate::h(a));
    hadamards.back().push_back(Gate::h(n - 1));

    Circuit c(n);
    Layout layout(n);
    append_skeleton(c, layout, skeleton, identity_permutation(n), &hadamards);
    return ScheduledCircuit{std::move(c), Architecture::lnn(n), layout.sites()};
}

ScheduledCircuit qft_lnn(const QftSpec& spec) {
    QftSpec exact = spec;
    exact.approx_threshold.reset();
    return aqft_lnn(exact);
}

std::vector<Wire> output_order(const ScheduledCircuit& sc) {
    const auto rev = oracle::bit_reversal(sc.final_map.size());
    std::vector<Wire> out(sc.final_map.size());
    for (Wire i = 0; i < out.size(); ++i) out[i] = sc.final_map[rev[i]];
    return out;
}

}  // namespace chainforge
