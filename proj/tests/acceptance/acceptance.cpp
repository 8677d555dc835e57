// Acceptance run: one PASS/FAIL line per criterion. Pass criterion numbers as arguments to
// run a subset; with no arguments all twelve run. Exit status is 1 if any selected one fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chainforge/bounds.hpp"
#include "chainforge/css.hpp"
#include "chainforge/linsynth.hpp"
#include "chainforge/oracle.hpp"
#include "chainforge/qft.hpp"
#include "chainforge/skeleton.hpp"
#include "chainforge/stabilizer.hpp"
#include "chainforge/text_format.hpp"
#include "../pauli_dense.hpp"
#include "../test_util.hpp"

using namespace chainforge;
using test_support::logical_action;

namespace {

constexpr std::uint64_t seed = 20240601;

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

// Running min/max of an integer quantity such as depth - 4n.
struct Spread {
    long lo = std::numeric_limits<long>::max();
    long hi = std::numeric_limits<long>::min();
    void add(long v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
};

Outcome qft_correctness() {
    const auto start = Clock::now();
    double worst = 0;
    for (std::size_t n = 1; n <= 9; ++n) {
        const ScheduledCircuit sc = qft_lnn({n, {}});
        // Same text the CLI writes.
        const Circuit emitted = parse_circuit(emit_circuit(sc.circuit));
        const double err = oracle::dft_error(emitted, sc.final_map);
        worst = std::max(worst, err);
    }
    const double t = seconds_since(start);
    return {worst <= 1e-10 && t < 30, fmt("n=1..9 max error %.2e vs 1e-10, %.2f s", worst, t)};
}

Outcome qft_depth() {
    const auto start = Clock::now();
    bool layers_ok = true;
    Spread offset;
    for (std::size_t n = 3; n <= 64; ++n) {
        const ScheduledCircuit sc = qft_lnn({n, {}});
        layers_ok = layers_ok && two_qubit_layer_count(sc.circuit) == 4 * n - 6;
        offset.add(static_cast<long>(depth(sc.circuit)) - static_cast<long>(4 * n));
    }
    const double t = seconds_since(start);
    return {layers_ok && offset.lo == offset.hi && t < 5,
            fmt("two-qubit layers %s 4n-6 for n=3..64; depth - 4n in [%ld, %ld]; %.2f s",
                layers_ok ? "==" : "!=", offset.lo, offset.hi, t)};
}

// Criteria 3 and 4 share the instances.
struct LinsynthRun {
    bool exact = true;
    bool valid = true;
    bool generic_ok = true;
    bool expanded_exact = true;
    Spread cnot_excess;  // depth after expansion - 18n
    std::size_t instances = 0;
    double seconds = 0;
};

const LinsynthRun& linsynth_run() {
    static const LinsynthRun run = [] {
        LinsynthRun r;
        const auto start = Clock::now();
        std::mt19937_64 rng(seed);
        for (std::size_t n : {2U, 4U, 8U, 16U, 32U}) {
            for (int i = 0; i < 1000; ++i) {
                const GF2Matrix a = GF2Matrix::random_nonsingular(n, rng);
                const ScheduledCircuit sc = synthesize_lnn(a);
                r.exact = r.exact && logical_action(sc) == a;
                r.valid = r.valid && is_valid(sc);
                r.generic_ok = r.generic_ok && generic_depth(sc.circuit) <= 3 * (2 * n - 3);
                const ScheduledCircuit cx = expand_to_cnot(sc);
                r.expanded_exact = r.expanded_exact && logical_action(cx) == a;
                r.cnot_excess.add(static_cast<long>(depth(cx.circuit)) - static_cast<long>(18 * n));
                ++r.instances;
            }
        }
        r.seconds = seconds_since(start);
        return r;
    }();
    return run;
}

Outcome linsynth_correctness() {
    const auto& r = linsynth_run();
    return {r.exact && r.valid && r.seconds < 60,
            fmt("%zu matrices over n in {2,4,8,16,32}: action %s, adjacency %s, %.2f s", r.instances,
                r.exact ? "exact" : "WRONG", r.valid ? "ok" : "VIOLATED", r.seconds)};
}

Outcome linsynth_depth() {
    const auto& r = linsynth_run();
    // One constant across every instance: c = 0.
    const bool cnot_ok = r.cnot_excess.hi <= 0;
    return {r.generic_ok && cnot_ok && r.expanded_exact,
            fmt("generic depth %s 3(2n-3); cnot depth - 18n in [%ld, %ld] (c = 0); expanded action %s",
                r.generic_ok ? "<=" : "EXCEEDS", r.cnot_excess.lo, r.cnot_excess.hi,
                r.expanded_exact ? "exact" : "WRONG")};
}

Outcome swap_cnot_merge() {
    bool unitary = true;
    bool gf2_relabeled = true;
    bool reversed_order = true;
    for (std::size_t n = 2; n <= 3; ++n) {
        for (Wire a = 0; a < n; ++a) {
            for (Wire b = 0; b < n; ++b) {
                if (a == b) continue;
                const Circuit lhs(n, {Gate::cnot(a, b), Gate::swap(a, b)});
                const Circuit rhs(n, {Gate::cnot(a, b), Gate::cnot(b, a)});
                const auto id = identity_permutation(n);
                unitary = unitary && oracle::unitary_equiv(lhs, rhs, id, 1e-12);
                // GF(2) level with the SWAP's own relabeling: lhs row r[i] against rhs row i.
                auto r = id;
                std::swap(r[a], r[b]);
                const GF2Matrix ml = oracle::gf2_action(lhs);
                const GF2Matrix mr = oracle::gf2_action(rhs);
                for (Wire i = 0; i < n; ++i) {
                    for (Wire j = 0; j < n; ++j) gf2_relabeled = gf2_relabeled && ml.get(r[i], j) == mr.get(i, j);
                }
                const Circuit swap_first(n, {Gate::swap(a, b), Gate::cnot(a, b)});
                reversed_order = reversed_order && oracle::unitary_equiv(swap_first, rhs, id, 1e-12);
            }
        }
    }
    return {unitary && gf2_relabeled,
            fmt("[CNOT(a,b), SWAP(a,b)] vs [CNOT(a,b), CNOT(b,a)] under identity: unitary %s; "
                "GF(2) under the swap relabeling: %s; [SWAP(a,b), CNOT(a,b)] vs the same pair: %s",
                unitary ? "equal" : "differ", gf2_relabeled ? "equal" : "differ",
                reversed_order ? "equal" : "differ")};
}

Outcome stabilizer_staging() {
    const auto start = Clock::now();
    std::mt19937_64 rng(seed + 6);
    bool equivalent = true;
    bool valid = true;
    Spread generic_excess;   // generic depth - 30n
    Spread expanded_excess;  // expanded depth - 90n
    for (std::size_t n = 2; n <= 8; ++n) {
        for (int i = 0; i < 200; ++i) {
            const StageDecomposition d = StageDecomposition::random(n, rng);
            const ScheduledCircuit sc = schedule_stabilizer(d);
            valid = valid && is_valid(sc);
            equivalent = equivalent && tableau_equiv(sc.circuit, stabilizer_flat(d), sc.final_map);
            generic_excess.add(static_cast<long>(generic_depth(sc.circuit)) - static_cast<long>(30 * n));
            expanded_excess.add(static_cast<long>(depth(expand_swaps(sc.circuit))) - static_cast<long>(90 * n));
        }
    }
    const double t = seconds_since(start);
    const bool pass = equivalent && valid && generic_excess.hi <= 0 && expanded_excess.hi <= 0 && t < 120;
    return {pass, fmt("1400 decompositions: tableau %s, adjacency %s; generic - 30n in [%ld, %ld] (c = 0); "
                      "expanded - 90n in [%ld, %ld] (c' = 0); %.2f s",
                      equivalent ? "equal" : "DIFFERENT", valid ? "ok" : "VIOLATED", generic_excess.lo,
                      generic_excess.hi, expanded_excess.lo, expanded_excess.hi, t)};
}

Outcome css_depths() {
    bool encode_ok = true;
    bool syndrome_ok = true;
    for (std::size_t s = 1; s <= 16; ++s) {
        for (std::size_t t = 1; t <= 16; ++t) {
            encode_ok = encode_ok && css_depth_report(CssSpec::full(CssMode::Encode, s, t)).generic_depth <= s + t + 1;
            syndrome_ok =
                syndrome_ok && css_depth_report(CssSpec::full(CssMode::Syndrome, s, t)).generic_depth <= s + t - 1;
        }
    }
    const auto levels = css_levels(CssSpec::full(CssMode::Encode, 3, 4));
    const std::set<std::pair<std::size_t, std::size_t>> level3(levels[2].pairs.begin(), levels[2].pairs.end());
    const bool example_ok = level3 == std::set<std::pair<std::size_t, std::size_t>>{{4, 2}, {3, 3}, {2, 4}};
    const CssDepthReport steane = css_depth_report(steane_preset());
    const bool steane_ok = steane.generic_depth == 12 && steane.gate_level_depth <= 26;
    return {encode_ok && syndrome_ok && example_ok && steane_ok,
            fmt("encode <= s+t+1 %s, syndrome <= s+t-1 %s over s,t in 1..16; level 3 of (3,4) %s; "
                "Steane %zu generic / %zu unmerged",
                encode_ok ? "ok" : "FAIL", syndrome_ok ? "ok" : "FAIL", example_ok ? "matches" : "DIFFERS",
                steane.generic_depth, steane.gate_level_depth)};
}

Outcome css_equivalence() {
    std::mt19937_64 rng(seed + 8);
    std::size_t checked = 0;
    bool all = true;
    for (CssMode mode : {CssMode::Encode, CssMode::Syndrome}) {
        for (std::size_t s = 1; s <= 8; ++s) {
            for (std::size_t t = 1; s + t + 1 <= 10; ++t) {
                for (int i = 0; i < 5; ++i) {
                    CssSpec spec(mode, s, t);
                    for (std::size_t p = 1; p <= spec.controls(); ++p) {
                        for (std::size_t j = 1; j <= t; ++j) spec.set_gate(p, j, static_cast<CssGate>(rng() % 3));
                    }
                    for (Wire w = 0; w < spec.n_wires(); ++w) spec.set_hadamard(w, rng() % 2);
                    const ScheduledCircuit sc = css_schedule_lnn(spec);
                    all = all && oracle::unitary_equiv(sc.circuit, css_flat(spec), sc.final_map, 1e-10);
                    ++checked;
                }
            }
        }
    }
    return {all, fmt("%zu random specs with s+t+1 <= 10: dense equivalence %s", checked, all ? "holds" : "FAILS")};
}

Outcome bounds_table() {
    auto coef = [](Model m, ArchClass a, unsigned k = 2) { return lower_bound({m, a, k, 100}).coefficient; };
    bool table = coef(Model::A, ArchClass::LNN) == Rational(10, 3) && coef(Model::B, ArchClass::LNN) == Rational(3, 2) &&
                 coef(Model::A, ArchClass::GRID) == Rational(3) && coef(Model::B, ArchClass::GRID) == Rational(5, 4);
    for (unsigned k = 2; k <= 16; ++k) {
        table = table && coef(Model::A, ArchClass::BOUNDED_DEGREE, k) == Rational(2) + Rational(2, k) &&
                coef(Model::B, ArchClass::BOUNDED_DEGREE, k) == Rational(1) + Rational(1, k);
    }
    const Rational ratio = ratio_report(60, schedule_lnn(SkeletonSpec(60)), {Model::A, ArchClass::LNN, 2, 60});
    const double rel = std::abs(ratio.to_double() / 1.2 - 1.0);
    return {table && rel <= 0.05, fmt("coefficients %s; n=60 (A, LNN) ratio %s = %.4f, %.1f%% from 6/5",
                                      table ? "exact" : "WRONG", ratio.str().c_str(), ratio.to_double(), 100 * rel)};
}

Outcome stage_audits() {
    std::mt19937_64 rng(seed + 10);
    struct Family {
        std::string name;
        std::size_t schedules = 0;
        std::size_t failing = 0;
    };
    std::vector<Family> families;
    auto audit_family = [&](const std::string& name, const std::function<void(std::vector<ScheduledCircuit>&)>& make) {
        std::vector<ScheduledCircuit> all;
        make(all);
        Family f{name, all.size(), 0};
        for (const auto& sc : all) f.failing += stage_audit(sc).compliant() ? 0 : 1;
        families.push_back(f);
    };

    audit_family("skeleton full", [](auto& out) {
        for (std::size_t n = 2; n <= 24; ++n) out.push_back(schedule_lnn(SkeletonSpec(n)));
    });
    audit_family("skeleton sparse", [&](auto& out) {
        for (std::size_t n = 3; n <= 24; ++n) {
            SkeletonSpec spec(n);
            for (Wire a = 0; a < n; ++a) {
                for (Wire b = a + 1; b < n; ++b) spec.set_present(a, b, rng() % 4 != 0);
            }
            out.push_back(schedule_lnn(spec));
        }
    });
    audit_family("qft", [](auto& out) {
        for (std::size_t n = 1; n <= 32; ++n) out.push_back(qft_lnn({n, {}}));
    });
    audit_family("aqft", [](auto& out) {
        for (std::size_t n = 2; n <= 16; ++n) {
            for (unsigned m = 1; m <= n; ++m) out.push_back(aqft_lnn({n, m}));
        }
    });
    audit_family("linsynth", [&](auto& out) {
        for (std::size_t n = 2; n <= 16; ++n) {
            for (int i = 0; i < 10; ++i) out.push_back(synthesize_lnn(GF2Matrix::random_nonsingular(n, rng)));
        }
    });
    audit_family("stabilizer", [&](auto& out) {
        for (std::size_t n = 2; n <= 8; ++n) {
            for (int i = 0; i < 10; ++i) out.push_back(schedule_stabilizer(StageDecomposition::random(n, rng)));
        }
    });
    audit_family("css full", [](auto& out) {
        for (std::size_t s = 1; s <= 8; ++s) {
            for (std::size_t t = 1; t <= 8; ++t) {
                out.push_back(css_schedule_lnn(CssSpec::full(CssMode::Encode, s, t)));
                out.push_back(css_schedule_lnn(CssSpec::full(CssMode::Syndrome, s, t)));
            }
        }
    });
    audit_family("css sparse", [&](auto& out) {
        out.push_back(css_schedule_lnn(steane_preset()));
        for (int i = 0; i < 40; ++i) {
            CssSpec spec(i % 2 ? CssMode::Encode : CssMode::Syndrome, 1 + rng() % 6, 1 + rng() % 6);
            for (std::size_t p = 1; p <= spec.controls(); ++p) {
                for (std::size_t j = 1; j <= spec.t(); ++j) spec.set_gate(p, j, static_cast<CssGate>(rng() % 3));
            }
            out.push_back(css_schedule_lnn(spec));
        }
    });

    // SWAP stages stripped from a full schedule must be flagged.
    const ScheduledCircuit full = schedule_lnn(SkeletonSpec(8));
    Circuit stripped(8);
    for (const Gate& g : full.circuit.gates()) {
        if (g.kind() != GateKind::SWAP) stripped.add(g);
    }
    const bool corrupted_flagged = !stage_audit(stripped).compliant();

    bool all_clean = true;
    std::ostringstream detail;
    for (const Family& f : families) {
        all_clean = all_clean && f.failing == 0;
        detail << f.name << " " << f.schedules - f.failing << "/" << f.schedules << "; ";
    }
    detail << "corrupted schedule " << (corrupted_flagged ? "flagged" : "NOT flagged");
    return {all_clean && corrupted_flagged, "compliant schedules per family: " + detail.str()};
}

Outcome brute_force() {
    const auto start = Clock::now();
    bool ok = true;
    std::ostringstream detail;
    for (std::size_t n = 3; n <= 5; ++n) {
        const auto arch = Architecture::lnn(n);
        const std::size_t b = brute_force_min_depth(n, Model::B, arch);
        const std::size_t a = brute_force_min_depth(n, Model::A, arch);
        SkeletonSpec spec(n);
        const ScheduledCircuit sc = schedule_lnn(spec);
        const bool explicit_ok = model_a_feasible(sc, spec) && depth(sc.circuit) == 4 * n - 6;
        ok = ok && 2 * n - 3 <= b && b <= a && a <= 4 * n - 6 && explicit_ok;
        detail << "n=" << n << ": " << 2 * n - 3 << " <= B=" << b << " <= A=" << a << " <= " << 4 * n - 6
               << (explicit_ok ? ", explicit schedule feasible; " : ", explicit schedule INFEASIBLE; ");
    }
    const double t = seconds_since(start);
    detail << fmt("%.2f s", t);
    return {ok && t < 60, detail.str()};
}

Outcome cross_oracle() {
    std::mt19937_64 rng(seed + 12);
    bool gf2_dense = true;
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = 2 + rng() % 9;
        Circuit c(n);
        const std::size_t gates = 1 + rng() % 40;
        for (std::size_t g = 0; g < gates; ++g) {
            const Wire a = rng() % n;
            const Wire b = (a + 1 + rng() % (n - 1)) % n;
            c.add(rng() % 3 == 0 ? Gate::swap(a, b) : Gate::cnot(a, b));
        }
        const GF2Matrix m = oracle::gf2_action(c);
        const oracle::DenseUnitary u = oracle::dense_unitary(c);
        for (std::size_t col = 0; col < u.dim() && gf2_dense; ++col) {
            std::vector<std::uint8_t> x(n);
            for (Wire w = 0; w < n; ++w) x[w] = (col >> w) & 1U;
            const auto y = m.apply(x);
            std::size_t row = 0;
            for (Wire w = 0; w < n; ++w) row |= std::size_t{y[w]} << w;
            gf2_dense = std::abs(u.at(row, col) - 1.0) < 1e-12;
        }
    }

    double worst = 0;
    std::size_t single = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
        for (Wire a = 0; a < n; ++a) {
            std::vector<Gate> gates{Gate::h(a), Gate::p(a)};
            for (Wire b = 0; b < n; ++b) {
                if (a == b) continue;
                for (Gate g : {Gate::cnot(a, b), Gate::cz(a, b), Gate::swap(a, b), Gate::cphase(1, a, b)}) {
                    gates.push_back(g);
                }
            }
            for (const Gate& g : gates) {
                worst = std::max(worst, test_support::tableau_dense_error(Circuit(n, {g})));
                ++single;
            }
        }
    }
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 1 + i % 3;
        Circuit c(n);
        for (int g = 0; g < 60; ++g) {
            const Wire a = rng() % n;
            const Wire b = n > 1 ? (a + 1 + rng() % (n - 1)) % n : a;
            switch (n > 1 ? rng() % 5 : rng() % 2) {
                case 0: c.add(Gate::h(a)); break;
                case 1: c.add(Gate::p(a)); break;
                case 2: c.add(Gate::cnot(a, b)); break;
                case 3: c.add(Gate::cz(a, b)); break;
                default: c.add(Gate::swap(a, b)); break;
            }
        }
        worst = std::max(worst, test_support::tableau_dense_error(c));
    }
    const bool tableau_dense = worst < 1e-12;
    return {gf2_dense && tableau_dense,
            fmt("GF(2) vs dense on 500 CNOT/SWAP circuits: %s; tableau vs dense on %zu single gates and "
                "100 random circuits: max error %.1e",
                gf2_dense ? "agree" : "DISAGREE", single, worst)};
}

struct Criterion {
    int id;
    const char* title;
    Outcome (*run)();
};

const Criterion criteria[] = {
    {1, "qft correctness", qft_correctness},
    {2, "qft depth", qft_depth},
    {3, "linear synthesis correctness", linsynth_correctness},
    {4, "linear synthesis depth", linsynth_depth},
    {5, "swap-cnot merge", swap_cnot_merge},
    {6, "stabilizer staging", stabilizer_staging},
    {7, "css depths", css_depths},
    {8, "css equivalence", css_equivalence},
    {9, "lower bounds", bounds_table},
    {10, "stage audits", stage_audits},
    {11, "tiny-n brute force", brute_force},
    {12, "cross-oracle consistency", cross_oracle},
};

}  // namespace

int main(int argc, char** argv) {
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
    bool all_pass = true;
    for (const Criterion& c : criteria) {
        if (!selected.empty() && !selected.count(c.id)) continue;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all_pass = all_pass && o.pass;
        std::printf("criterion %2d %-30s %s  %s\n", c.id, c.title, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
    }
    return all_pass ? 0 : 1;
}
