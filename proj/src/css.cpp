#include "chainforge/css.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "chainforge/errors.hpp"
#include "chainforge/text_format.hpp"

namespace chainforge {

CssSpec::CssSpec(CssMode mode, std::size_t s, std::size_t t) : mode_(mode), s_(s), t_(t) {
    if (s == 0 || t == 0) throw Error("css blocks must be non-empty");
    gates_.assign(controls() * t, CssGate::None);
    hadamard_.assign(n_wires(), false);
}

CssGate CssSpec::gate(std::size_t p, std::size_t j) const {
    if (p < 1 || p > controls() || j < 1 || j > t_) throw std::out_of_range("css entry out of range");
    return gates_[(p - 1) * t_ + (j - 1)];
}

void CssSpec::set_gate(std::size_t p, std::size_t j, CssGate g) {
    if (p < 1 || p > controls() || j < 1 || j > t_) throw std::out_of_range("css entry out of range");
    gates_[(p - 1) * t_ + (j - 1)] = g;
}

std::size_t CssSpec::present_count() const {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(), [](CssGate g) { return g != CssGate::None; }));
}

CssSpec CssSpec::full(CssMode mode, std::size_t s, std::size_t t, CssGate g) {
    CssSpec spec(mode, s, t);
    for (std::size_t p = 1; p <= spec.controls(); ++p) {
        for (std::size_t j = 1; j <= t; ++j) spec.set_gate(p, j, g);
    }
    return spec;
}

namespace {

Gate make_gate(CssGate g, Wire control, Wire target) {
    return g == CssGate::Cnot ? Gate::cnot(control, target) : Gate::cz(control, target);
}

}  // namespace

Circuit css_flat(const CssSpec& spec) {
    Circuit c(spec.n_wires());
    auto hadamards = [&] {
        for (Wire w = 0; w < spec.n_wires(); ++w) {
            if (spec.hadamard()[w]) c.add(Gate::h(w));
        }
    };
    hadamards();
    for (std::size_t p = spec.controls(); p >= 1; --p) {
        for (std::size_t j = spec.t(); j >= 1; --j) {
            const CssGate g = spec.gate(p, j);
            if (g != CssGate::None) c.add(make_gate(g, spec.control_wire(p), spec.target_wire(j)));
        }
    }
    if (spec.mode() == CssMode::Syndrome) hadamards();
    return c;
}

std::vector<CssLevel> css_levels(const CssSpec& spec) {
    std::vector<CssLevel> levels(spec.level_count());
    for (std::size_t p = spec.controls(); p >= 1; --p) {
        for (std::size_t j = spec.t(); j >= 1; --j) levels[spec.level_of(p, j) - 1].pairs.emplace_back(p, j);
    }
    return levels;
}

ScheduledCircuit css_schedule_lnn(const CssSpec& spec, CssScheduleOptions options) {
    const std::size_t n = spec.n_wires();
    Circuit c(n);
    Layout layout(n);
    auto hadamards = [&] {
        for (Wire w = 0; w < n; ++w) {
            if (spec.hadamard()[w]) c.add(Gate::h(layout.site_of(w)));
        }
    };

    hadamards();
    for (const CssLevel& level : css_levels(spec)) {
        for (const auto& [p, j] : level.pairs) {
            const Wire sa = layout.site_of(spec.control_wire(p));
            const Wire sb = layout.site_of(spec.target_wire(j));
            if (sa + 1 != sb) throw std::logic_error("css level pair is not adjacent with the control on the left");
            const CssGate g = spec.gate(p, j);
            if (g != CssGate::None) c.add(make_gate(g, sa, sb));
        }
        for (const auto& [p, j] : level.pairs) {
            const Wire sa = layout.site_of(spec.control_wire(p));
            c.add(Gate::swap(sa, sa + 1));
            layout.swap_sites(sa, sa + 1);
        }
    }
    if (spec.mode() == CssMode::Syndrome) hadamards();

    ScheduledCircuit sc{std::move(c), Architecture::lnn(n), layout.sites()};
    return options.prune_swaps ? prune_trailing_swaps(sc) : sc;
}

CssDepthReport css_depth_report(const CssSpec& spec) {
    const ScheduledCircuit sc = css_schedule_lnn(spec);
    return CssDepthReport{generic_depth(sc.circuit, GenericDepthOptions{.count_single_qubit = false}),
                          depth(sc.circuit)};
}

CssSpec steane_preset() {
    // Parity checks of the [7,4,3] Hamming code over a_1..a_7.
    static constexpr const char* rows[] = {"1010101", "0110011", "0001111"};
    CssSpec spec(CssMode::Syndrome, 7, 6);
    for (std::size_t check = 0; check < 3; ++check) {
        for (std::size_t p = 1; p <= 7; ++p) {
            if (rows[check][p - 1] != '1') continue;
            spec.set_gate(p, check + 1, CssGate::Cnot);
            spec.set_gate(p, check + 4, CssGate::Cz);
        }
    }
    for (std::size_t j = 4; j <= 6; ++j) spec.set_hadamard(spec.target_wire(j), true);
    return spec;
}

CssSpec parse_css_spec(std::string_view text) {
    auto directives = tokenize(text);
    if (directives.empty()) throw ParseError(0, "empty css text: expected 'css encode|syndrome S T'");
    const Directive& head = directives.front();
    if (head.tokens[0] != "css") throw ParseError(head.line, "expected 'css encode|syndrome S T'");
    expect_arity(head, 4);
    CssMode mode;
    if (head.tokens[1] == "encode") {
        mode = CssMode::Encode;
    } else if (head.tokens[1] == "syndrome") {
        mode = CssMode::Syndrome;
    } else {
        throw ParseError(head.line, "mode must be 'encode' or 'syndrome'");
    }
    const std::size_t s = parse_count(head.tokens[2], head.line);
    const std::size_t t = parse_count(head.tokens[3], head.line);
    if (s == 0 || t == 0) throw ParseError(head.line, "block sizes must be positive");
    CssSpec spec(mode, s, t);

    std::size_t row = 0;
    bool seen_hadamard = false;
    for (std::size_t i = 1; i < directives.size(); ++i) {
        const Directive& d = directives[i];
        if (d.tokens[0] == "hadamard") {
            expect_arity(d, 2);
            if (seen_hadamard) throw ParseError(d.line, "duplicate hadamard line");
            seen_hadamard = true;
            const std::string& mask = d.tokens[1];
            if (mask.size() != spec.n_wires()) {
                throw ParseError(d.line, "hadamard mask needs " + std::to_string(spec.n_wires()) + " characters");
            }
            for (Wire w = 0; w < mask.size(); ++w) {
                if (mask[w] != '0' && mask[w] != '1') throw ParseError(d.line, "hadamard mask must use 0 and 1");
                spec.set_hadamard(w, mask[w] == '1');
            }
            continue;
        }
        if (d.tokens.size() != 1) throw ParseError(d.line, "expected a matrix row or 'hadamard BITMASK'");
        if (row == spec.controls()) throw ParseError(d.line, "too many matrix rows");
        const std::string& entries = d.tokens[0];
        if (entries.size() != t) throw ParseError(d.line, "matrix row needs " + std::to_string(t) + " entries");
        ++row;
        for (std::size_t j = 1; j <= t; ++j) {
            switch (entries[j - 1]) {
                case '.': break;
                case 'x': spec.set_gate(row, j, CssGate::Cnot); break;
                case 'z': spec.set_gate(row, j, CssGate::Cz); break;
                default: throw ParseError(d.line, std::string("bad matrix entry '") + entries[j - 1] + "'");
            }
        }
    }
    if (row != spec.controls()) {
        throw ParseError(directives.back().line,
                         "expected " + std::to_string(spec.controls()) + " matrix rows, found " + std::to_string(row));
    }
    return spec;
}

std::string emit_css_spec(const CssSpec& spec) {
    std::ostringstream out;
    out << "css " << (spec.mode() == CssMode::Encode ? "encode" : "syndrome") << ' ' << spec.s() << ' ' << spec.t()
        << '\n';
    for (std::size_t p = 1; p <= spec.controls(); ++p) {
        for (std::size_t j = 1; j <= spec.t(); ++j) {
            const CssGate g = spec.gate(p, j);
            out << (g == CssGate::None ? '.' : g == CssGate::Cnot ? 'x' : 'z');
        }
        out << '\n';
    }
    const auto& h = spec.hadamard();
    if (std::find(h.begin(), h.end(), true) != h.end()) {
        out << "hadamard ";
        for (bool b : h) out << (b ? '1' : '0');
        out << '\n';
    }
    return out.str();
}

}  // namespace chainforge
