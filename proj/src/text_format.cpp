#include "chainforge/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "chainforge/errors.hpp"

namespace chainforge {

std::vector<Directive> tokenize(std::string_view text) {
    std::vector<Directive> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        std::string_view line = text.substr(pos, end - pos);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::istringstream words{std::string(line)};
        Directive d{line_no, {}};
        for (std::string w; words >> w;) d.tokens.push_back(std::move(w));
        if (!d.tokens.empty()) out.push_back(std::move(d));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

std::size_t parse_count(const std::string& token, std::size_t line) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(line, "expected a non-negative integer, got '" + token + "'");
    }
    return value;
}

void expect_arity(const Directive& d, std::size_t n) {
    if (d.tokens.size() != n) {
        throw ParseError(d.line, "'" + d.tokens.front() + "' takes " + std::to_string(n - 1) + " argument(s), got " +
                                     std::to_string(d.tokens.size() - 1));
    }
}

namespace {

Wire parse_wire(const std::string& token, std::size_t line, std::size_t n) {
    std::size_t w = parse_count(token, line);
    if (w >= n) throw ParseError(line, "wire " + token + " out of range for " + std::to_string(n) + " qubits");
    return w;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    auto directives = tokenize(text);
    if (directives.empty()) throw ParseError(0, "empty circuit text: expected 'qubits N'");
    const Directive& header = directives.front();
    if (header.tokens[0] != "qubits") throw ParseError(header.line, "expected 'qubits N' as the first directive");
    expect_arity(header, 2);
    const std::size_t n = parse_count(header.tokens[1], header.line);
    if (n == 0) throw ParseError(header.line, "qubit count must be positive");

    Circuit c(n);
    for (std::size_t i = 1; i < directives.size(); ++i) {
        const Directive& d = directives[i];
        const std::string& op = d.tokens[0];
        auto wire = [&](std::size_t idx) { return parse_wire(d.tokens[idx], d.line, n); };
        auto two = [&](GateKind kind, std::size_t first, unsigned k = 0) {
            Wire a = wire(first);
            Wire b = wire(first + 1);
            if (a == b) throw ParseError(d.line, "two-qubit gate on repeated wire " + d.tokens[first]);
            c.add(Gate::two_qubit(kind, a, b, k));
        };
        if (op == "h" || op == "p") {
            expect_arity(d, 2);
            c.add(op == "h" ? Gate::h(wire(1)) : Gate::p(wire(1)));
        } else if (op == "cnot" || op == "cz" || op == "swap" || op == "g") {
            expect_arity(d, 3);
            GateKind kind = op == "cnot" ? GateKind::CNOT
                            : op == "cz" ? GateKind::CZ
                            : op == "swap" ? GateKind::SWAP
                                           : GateKind::GENERIC2;
            two(kind, 1);
        } else if (op == "cphase") {
            expect_arity(d, 4);
            std::size_t k = parse_count(d.tokens[1], d.line);
            if (k < 1 || k > 1024) throw ParseError(d.line, "cphase exponent must be in [1, 1024]");
            two(GateKind::CPHASE, 2, static_cast<unsigned>(k));
        } else if (op == "qubits") {
            throw ParseError(d.line, "duplicate 'qubits' directive");
        } else {
            throw ParseError(d.line, "unknown gate '" + op + "'");
        }
    }
    return c;
}

std::string emit_circuit(const Circuit& c) {
    std::ostringstream out;
    out << "qubits " << c.n_wires() << '\n';
    for (const Gate& g : c.gates()) {
        out << gate_kind_name(g.kind());
        if (g.kind() == GateKind::CPHASE) out << ' ' << g.k();
        out << ' ' << g.q0();
        if (g.two_qubit()) out << ' ' << g.q1();
        out << '\n';
    }
    return out.str();
}

Architecture parse_architecture(std::string_view text) {
    auto directives = tokenize(text);
    if (directives.empty()) throw ParseError(0, "empty architecture text");
    const Directive& head = directives.front();
    const std::string& kind = head.tokens[0];
    if (kind == "lnn" || kind == "grid") {
        if (directives.size() > 1) throw ParseError(directives[1].line, "unexpected directive after '" + kind + "'");
        if (kind == "lnn") {
            expect_arity(head, 2);
            std::size_t n = parse_count(head.tokens[1], head.line);
            if (n == 0) throw ParseError(head.line, "site count must be positive");
            return Architecture::lnn(n);
        }
        expect_arity(head, 3);
        std::size_t r = parse_count(head.tokens[1], head.line);
        std::size_t cc = parse_count(head.tokens[2], head.line);
        if (r == 0 || cc == 0) throw ParseError(head.line, "grid dimensions must be positive");
        return Architecture::grid(r, cc);
    }
    if (kind != "graph") throw ParseError(head.line, "expected 'lnn', 'grid' or 'graph', got '" + kind + "'");
    expect_arity(head, 2);
    std::size_t n = parse_count(head.tokens[1], head.line);
    if (n == 0) throw ParseError(head.line, "site count must be positive");
    std::vector<std::pair<Wire, Wire>> edges;
    for (std::size_t i = 1; i < directives.size(); ++i) {
        const Directive& d = directives[i];
        if (d.tokens[0] != "edge") throw ParseError(d.line, "expected 'edge a b'");
        expect_arity(d, 3);
        edges.emplace_back(parse_wire(d.tokens[1], d.line, n), parse_wire(d.tokens[2], d.line, n));
        if (edges.back().first == edges.back().second) throw ParseError(d.line, "self-loop edge");
    }
    try {
        return Architecture::graph(n, edges);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(head.line, e.what());
    }
}

std::string emit_architecture(const Architecture& arch) {
    std::ostringstream out;
    switch (arch.kind()) {
        case ArchKind::LNN: out << "lnn " << arch.n_sites() << '\n'; break;
        case ArchKind::GRID: out << "grid " << arch.rows() << ' ' << arch.cols() << '\n'; break;
        case ArchKind::GRAPH:
            out << "graph " << arch.n_sites() << '\n';
            for (auto [a, b] : arch.edges()) out << "edge " << a << ' ' << b << '\n';
            break;
    }
    return out.str();
}

std::string emit_qasm(const Circuit& c) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" << c.n_wires() << "];\n";
    for (const Gate& g : c.gates()) {
        switch (g.kind()) {
            case GateKind::H: out << "h q[" << g.q0() << "];\n"; break;
            case GateKind::P: out << "s q[" << g.q0() << "];\n"; break;
            case GateKind::CNOT: out << "cx q[" << g.q0() << "],q[" << g.q1() << "];\n"; break;
            case GateKind::CZ: out << "cz q[" << g.q0() << "],q[" << g.q1() << "];\n"; break;
            case GateKind::SWAP: out << "swap q[" << g.q0() << "],q[" << g.q1() << "];\n"; break;
            case GateKind::CPHASE:
                out << "cu1(pi";
                if (g.k() > 1) out << "/" << (1ULL << std::min(g.k() - 1, 63U));
                out << ") q[" << g.q0() << "],q[" << g.q1() << "];\n";
                break;
            case GateKind::GENERIC2:
                throw UnsupportedGateError("generic two-qubit gates have no QASM form");
        }
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << contents;
}

}  // namespace chainforge
