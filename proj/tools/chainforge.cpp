// chainforge: generate, schedule, verify and audit finite-neighbour circuits.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chainforge/bounds.hpp"
#include "chainforge/css.hpp"
#include "chainforge/errors.hpp"
#include "chainforge/linsynth.hpp"
#include "chainforge/oracle.hpp"
#include "chainforge/qft.hpp"
#include "chainforge/skeleton.hpp"
#include "chainforge/stabilizer.hpp"
#include "chainforge/text_format.hpp"

using namespace chainforge;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_domain = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    std::string out;
    std::string report;
    bool qasm = false;
    bool flat = false;
};

bool color() {
    const char* v = std::getenv("CHAINFORGE_COLOR");
    return v && std::string(v) == "1";
}

std::string verdict(bool ok) {
    if (!color()) return ok ? "ok" : "FAIL";
    return ok ? "\033[32mok\033[0m" : "\033[31mFAIL\033[0m";
}

std::string map_text(const std::vector<Wire>& map) {
    std::string s;
    for (std::size_t i = 0; i < map.size(); ++i) s += (i ? "," : "") + std::to_string(map[i]);
    return s;
}

std::vector<Wire> parse_map(const std::string& text) {
    std::vector<Wire> map;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            map.push_back(std::stoul(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw UsageError("bad wire list '" + text + "'");
        }
    }
    if (!is_permutation(map)) throw UsageError("'" + text + "' is not a permutation");
    return map;
}

// The circuit text carries the final map as a comment so `verify --relabel auto` can read it back.
std::optional<std::vector<Wire>> final_map_comment(const std::string& text) {
    static const std::string tag = "# final_map ";
    const auto pos = text.find(tag);
    if (pos == std::string::npos) return std::nullopt;
    const auto end = text.find('\n', pos);
    return parse_map(text.substr(pos + tag.size(), end - pos - tag.size()));
}

std::vector<Violation> all_violations(const Circuit& c, const Architecture& arch) {
    std::vector<Violation> out;
    const auto& gates = c.gates();
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate& g = gates[i];
        if (g.two_qubit() && !arch.adjacent(g.q0(), g.q1())) out.push_back({i, g.q0(), g.q1()});
    }
    return out;
}

std::optional<std::size_t> cnot_depth(const Circuit& c) {
    for (const Gate& g : c.gates()) {
        if (g.kind() != GateKind::CNOT && g.kind() != GateKind::SWAP) return std::nullopt;
    }
    return depth(expand_swaps(c));
}

json report_of(const Circuit& c, const std::vector<Wire>& final_map, const Architecture& arch) {
    json violations = json::array();
    for (const Violation& v : all_violations(c, arch)) violations.push_back({{"gate", v.gate_index}, {"a", v.a}, {"b", v.b}});
    const auto cx = cnot_depth(c);
    return {{"n", c.n_wires()},
            {"depth", depth(c)},
            {"generic_depth", generic_depth(c)},
            {"cnot_depth", cx ? json(*cx) : json(nullptr)},
            {"final_map", final_map},
            {"violations", violations}};
}

void write(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
    } else {
        write_file(path, text);
    }
}

void emit_schedule(const ScheduledCircuit& sc, const Output& o) {
    if (o.qasm) {
        write(o.out, emit_qasm(sc.circuit));
    } else {
        write(o.out, "# final_map " + map_text(sc.final_map) + "\n" + emit_circuit(sc.circuit));
    }
    if (o.report == "json") {
        // With the circuit on stdout the report goes to stderr so both stay parseable.
        (o.out.empty() ? std::cerr : std::cout) << report_of(sc.circuit, sc.final_map, sc.arch).dump() << '\n';
    }
}

void require_lnn(const std::string& arch) {
    if (arch != "lnn") throw UsageError("generators support --arch lnn only");
}

void add_output_flags(CLI::App* cmd, Output& o) {
    cmd->add_option("--out", o.out, "Write the result to FILE instead of stdout");
    cmd->add_option("--report", o.report, "Emit a machine-readable report")->check(CLI::IsMember({"json"}));
    cmd->add_flag("--qasm", o.qasm, "Write OPENQASM 2.0 instead of the circuit text format");
    cmd->add_flag("--flat", o.flat, "Write the unscheduled reference circuit instead");
}

// Unscheduled reference: same wires, identity final map, no adjacency promise.
ScheduledCircuit as_flat(Circuit c) {
    const std::size_t n = c.n_wires();
    return ScheduledCircuit{std::move(c), Architecture::lnn(n), identity_permutation(n)};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear-depth circuit scheduling on finite-neighbour architectures"};
    app.require_subcommand(1);
    Output out;
    std::string arch = "lnn";
    std::optional<std::uint64_t> seed;
    int status = exit_ok;
    std::function<void()> action;

    auto* qft = app.add_subcommand("qft", "QFT or approximate QFT on LNN");
    std::size_t qft_n = 0;
    std::optional<unsigned> approx;
    qft->add_option("--n", qft_n, "Qubits")->required()->check(CLI::PositiveNumber);
    qft->add_option("--arch", arch, "Architecture (lnn)");
    qft->add_option("--approx", approx, "Drop rotations CPHASE(k) with k > M");
    add_output_flags(qft, out);
    qft->callback([&] {
        action = [&] {
            require_lnn(arch);
            const QftSpec spec{qft_n, approx};
            if (out.flat) return emit_schedule(as_flat(qft_flat(spec)), out);
            emit_schedule(approx ? aqft_lnn(spec) : qft_lnn(spec), out);
        };
    });

    auto* lin = app.add_subcommand("linsynth", "Synthesise a linear reversible circuit");
    std::string matrix_file;
    bool cnot_only = false;
    bool prune = false;
    lin->add_option("--matrix", matrix_file, "GF(2) matrix file")->required();
    lin->add_flag("--cnot-only", cnot_only, "Expand SWAPs into CNOTs");
    lin->add_flag("--prune-swaps", prune, "Drop trailing SWAPs");
    lin->add_option("--arch", arch, "Architecture (lnn)");
    add_output_flags(lin, out);
    lin->callback([&] {
        action = [&] {
            require_lnn(arch);
            const GF2Matrix m = parse_gf2_matrix(read_file(matrix_file));
            if (out.flat) return emit_schedule(as_flat(gauss_jordan(m.inverse()).circuit()), out);
            ScheduledCircuit sc = synthesize_lnn(m, {.prune_swaps = prune});
            emit_schedule(cnot_only ? expand_to_cnot(sc) : sc, out);
        };
    });

    auto* css = app.add_subcommand("css", "CSS encoder or syndrome circuit");
    std::string css_file;
    bool steane = false;
    bool css_keep = false;
    auto* css_spec_opt = css->add_option("--spec", css_file, "CSS spec file");
    css->add_flag("--steane", steane, "Use the built-in Steane syndrome preset")->excludes(css_spec_opt);
    css->add_flag("--keep-swaps", css_keep, "Keep trailing SWAPs");
    css->add_option("--arch", arch, "Architecture (lnn)");
    add_output_flags(css, out);
    css->callback([&] {
        if (!steane && css_file.empty()) throw CLI::ValidationError("css", "one of --spec or --steane is required");
        action = [&] {
            require_lnn(arch);
            const CssSpec spec = steane ? steane_preset() : parse_css_spec(read_file(css_file));
            if (out.flat) return emit_schedule(as_flat(css_flat(spec)), out);
            emit_schedule(css_schedule_lnn(spec, {.prune_swaps = !css_keep}), out);
        };
    });

    auto* stab = app.add_subcommand("stab", "Staged stabilizer circuit");
    std::string decomp_file;
    std::size_t random_n = 0;
    auto* decomp_opt = stab->add_option("--decomp", decomp_file, "Stage decomposition file");
    stab->add_option("--random", random_n, "Random decomposition on N qubits (needs --seed)")->excludes(decomp_opt);
    stab->add_option("--seed", seed, "Random seed");
    stab->add_option("--arch", arch, "Architecture (lnn)");
    add_output_flags(stab, out);
    stab->callback([&] {
        if (decomp_file.empty() && random_n == 0) throw CLI::ValidationError("stab", "one of --decomp or --random is required");
        if (random_n > 0 && !seed) throw CLI::ValidationError("stab", "--random needs --seed");
        action = [&] {
            require_lnn(arch);
            StageDecomposition d = [&] {
                if (!decomp_file.empty()) return parse_decomposition(read_file(decomp_file));
                std::mt19937_64 rng(*seed);
                return StageDecomposition::random(random_n, rng);
            }();
            if (out.flat) return emit_schedule(as_flat(stabilizer_flat(d)), out);
            emit_schedule(schedule_stabilizer(d), out);
        };
    });

    auto* skel = app.add_subcommand("skeleton", "Skeleton circuit staircase");
    std::string skel_file;
    std::size_t skel_n = 0;
    bool drop_last = false;
    auto* skel_spec_opt = skel->add_option("--spec", skel_file, "Skeleton spec file");
    skel->add_option("--n", skel_n, "Full skeleton on N wires")->excludes(skel_spec_opt)->check(CLI::Range(2, 1 << 16));
    skel->add_flag("--drop-last-swaps", drop_last, "Omit SWAPs nothing depends on");
    skel->add_option("--arch", arch, "Architecture (lnn)");
    add_output_flags(skel, out);
    skel->callback([&] {
        if (skel_file.empty() && skel_n == 0) throw CLI::ValidationError("skeleton", "one of --spec or --n is required");
        action = [&] {
            require_lnn(arch);
            const SkeletonSpec spec = skel_file.empty() ? SkeletonSpec(skel_n) : parse_skeleton_spec(read_file(skel_file));
            if (out.flat) return emit_schedule(as_flat(skeleton_flat(spec)), out);
            emit_schedule(schedule_lnn(spec, {.drop_last_swaps = drop_last}), out);
        };
    });

    auto* bounds = app.add_subcommand("bounds", "Skeleton depth lower bounds");
    std::string model = "A";
    std::string arch_class = "lnn";
    std::size_t bounds_n = 0;
    bounds->add_option("--model", model, "A (fixed order) or B (any order)")->check(CLI::IsMember({"A", "B"}));
    bounds->add_option("--arch", arch_class, "lnn | grid | degree:K");
    bounds->add_option("--n", bounds_n, "Qubits")->required();
    bounds->add_option("--report", out.report, "Emit a machine-readable report")->check(CLI::IsMember({"json"}));
    bounds->callback([&] {
        action = [&] {
            BoundQuery q = parse_arch_class(arch_class);
            q.model = model == "A" ? Model::A : Model::B;
            q.n = bounds_n;
            const LowerBound lb = lower_bound(q);
            const Rational value = lb.coefficient * Rational(static_cast<std::int64_t>(bounds_n));
            if (out.report == "json") {
                std::cout << json{{"model", model},
                                  {"arch", arch_class},
                                  {"n", bounds_n},
                                  {"coefficient", lb.coefficient.str()},
                                  {"formula", lb.formula},
                                  {"leading_term", value.str()}}
                                 .dump()
                          << '\n';
            } else {
                std::cout << "model " << model << ", " << arch_class << ": depth >= " << lb.formula << "\n"
                          << "coefficient " << lb.coefficient.str() << "\n"
                          << "leading term at n=" << bounds_n << ": " << value.str() << " (~" << value.to_double()
                          << ", up to O(1))\n";
            }
        };
    });

    auto* audit = app.add_subcommand("audit", "Check adjacency and the swapping-stage patterns");
    std::string circuit_file;
    std::string arch_file;
    bool strict = false;
    audit->add_option("--circuit", circuit_file, "Circuit file")->required();
    audit->add_option("--arch", arch_file, "Architecture file (default: lnn on the circuit's wires)");
    audit->add_flag("--strict", strict, "Also fail on stage-pattern violations");
    audit->add_option("--report", out.report, "Emit a machine-readable report")->check(CLI::IsMember({"json"}));
    audit->callback([&] {
        action = [&] {
            const std::string text = read_file(circuit_file);
            const Circuit c = parse_circuit(text);
            const Architecture a = arch_file.empty() ? Architecture::lnn(c.n_wires()) : parse_architecture(read_file(arch_file));
            if (a.n_sites() != c.n_wires()) throw Error("architecture has " + std::to_string(a.n_sites()) + " sites, circuit has " + std::to_string(c.n_wires()) + " wires");
            const auto violations = all_violations(c, a);
            const StageAudit sa = stage_audit(c);
            if (out.report == "json") {
                json r = report_of(c, final_map_comment(text).value_or(identity_permutation(c.n_wires())), a);
                auto windows = [](const std::vector<AuditWindow>& ws) {
                    json arr = json::array();
                    for (const auto& w : ws) arr.push_back({{"first_layer", w.first_layer}, {"last_layer", w.last_layer}, {"swap_layers", w.swap_layers}});
                    return arr;
                };
                r["stage_audit"] = {{"l_layers", sa.l_count},
                                    {"s_layers", sa.s_count},
                                    {"pattern", sa.pattern},
                                    {"violations_3l1s", windows(sa.violations_3l1s)},
                                    {"violations_4l2s", windows(sa.violations_4l2s)}};
                std::cout << r.dump() << '\n';
            } else {
                std::cout << "adjacency: " << verdict(violations.empty());
                if (!violations.empty()) {
                    const Violation& v = violations.front();
                    std::cout << " (" << violations.size() << " gates off-edge, first #" << v.gate_index << " on " << v.a << "," << v.b << ")";
                }
                std::cout << "\nlayers: " << sa.l_count << " L, " << sa.s_count << " S  " << sa.pattern << "\n"
                          << "3L->1S: " << verdict(sa.violations_3l1s.empty()) << " (" << sa.violations_3l1s.size() << " windows)\n"
                          << "4L->2S: " << verdict(sa.violations_4l2s.empty()) << " (" << sa.violations_4l2s.size() << " windows)\n";
            }
            if (!violations.empty() || (strict && !sa.compliant())) status = exit_domain;
        };
    });

    auto* verify = app.add_subcommand("verify", "Check that A equals B followed by a wire relabeling");
    std::string file_a;
    std::string file_b;
    std::string relabel = "identity";
    std::string oracle_kind = "auto";
    verify->add_option("--a", file_a, "Scheduled circuit")->required();
    verify->add_option("--b", file_b, "Reference circuit")->required();
    verify->add_option("--relabel", relabel, "identity | auto (final map stored in A) | comma-separated wire list");
    verify->add_option("--oracle", oracle_kind, "auto | gf2 | tableau | dense")->check(CLI::IsMember({"auto", "gf2", "tableau", "dense"}));
    verify->callback([&] {
        action = [&] {
            const std::string text_a = read_file(file_a);
            const Circuit a = parse_circuit(text_a);
            const Circuit b = parse_circuit(read_file(file_b));
            if (a.n_wires() != b.n_wires()) throw Error("circuits have different wire counts");
            std::vector<Wire> map;
            if (relabel == "identity") {
                map = identity_permutation(a.n_wires());
            } else if (relabel == "auto") {
                const auto stored = final_map_comment(text_a);
                if (!stored) throw UsageError("--relabel auto needs a '# final_map' line in " + file_a);
                map = *stored;
            } else {
                map = parse_map(relabel);
            }
            if (map.size() != a.n_wires()) throw UsageError("relabeling has the wrong length");

            auto only = [](const Circuit& c, std::initializer_list<GateKind> kinds) {
                for (const Gate& g : c.gates()) {
                    if (std::find(kinds.begin(), kinds.end(), g.kind()) == kinds.end()) return false;
                }
                return true;
            };
            std::string used = oracle_kind;
            if (used == "auto") {
                const auto linear = {GateKind::CNOT, GateKind::SWAP};
                const auto clifford = {GateKind::H, GateKind::P, GateKind::CNOT, GateKind::CZ, GateKind::SWAP};
                used = only(a, linear) && only(b, linear)       ? "gf2"
                       : only(a, clifford) && only(b, clifford) ? "tableau"
                                                                : "dense";
            }
            bool equal = false;
            if (used == "gf2") {
                // A = move . B, so A's row map[i] is B's row i.
                const GF2Matrix ma = oracle::gf2_action(a);
                const GF2Matrix mb = oracle::gf2_action(b);
                equal = true;
                for (Wire i = 0; i < map.size() && equal; ++i) {
                    for (Wire j = 0; j < map.size() && equal; ++j) equal = ma.get(map[i], j) == mb.get(i, j);
                }
            } else if (used == "tableau") {
                equal = tableau_equiv(a, b, map);
            } else {
                equal = oracle::unitary_equiv(a, b, map);
            }
            std::cout << (equal ? "equivalent" : "NOT equivalent") << " (" << used << " oracle)\n";
            if (!equal) status = exit_domain;
        };
    });

    auto* dep = app.add_subcommand("depth", "Depth metrics of a circuit");
    std::string depth_file;
    dep->add_option("--circuit", depth_file, "Circuit file")->required();
    dep->add_option("--report", out.report, "Emit a machine-readable report")->check(CLI::IsMember({"json"}));
    dep->callback([&] {
        action = [&] {
            const std::string text = read_file(depth_file);
            const Circuit c = parse_circuit(text);
            const json r = report_of(c, final_map_comment(text).value_or(identity_permutation(c.n_wires())), Architecture::lnn(c.n_wires()));
            if (out.report == "json") {
                std::cout << r.dump() << '\n';
            } else {
                std::cout << "n " << c.n_wires() << "\ndepth " << r["depth"] << "\ngeneric_depth " << r["generic_depth"]
                          << "\ntwo_qubit_layers " << two_qubit_layer_count(c) << "\ncnot_depth "
                          << (r["cnot_depth"].is_null() ? std::string("n/a") : r["cnot_depth"].dump()) << '\n';
            }
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }
    try {
        action();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_domain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_domain;
    }
    return status;
}
