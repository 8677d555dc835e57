#include "chainforge/stabilizer.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

#include "chainforge/errors.hpp"
#include "chainforge/linsynth.hpp"
#include "chainforge/text_format.hpp"

namespace chainforge {

PauliTableau::PauliTableau(std::size_t n) : n_(n), x_(2 * n * n, 0), z_(2 * n * n, 0), r_(2 * n, 0) {
    for (std::size_t i = 0; i < n; ++i) {
        x_[i * n + i] = 1;
        z_[(n + i) * n + i] = 1;
    }
}

void PauliTableau::h(Wire a) {
    for (std::size_t row = 0; row < 2 * n_; ++row) {
        auto& xa = x_[row * n_ + a];
        auto& za = z_[row * n_ + a];
        r_[row] ^= xa & za;
        std::swap(xa, za);
    }
}

void PauliTableau::s(Wire a) {
    for (std::size_t row = 0; row < 2 * n_; ++row) {
        const auto xa = x_[row * n_ + a];
        auto& za = z_[row * n_ + a];
        r_[row] ^= xa & za;
        za ^= xa;
    }
}

void PauliTableau::cx(Wire c, Wire t) {
    for (std::size_t row = 0; row < 2 * n_; ++row) {
        const auto xc = x_[row * n_ + c];
        const auto zc = z_[row * n_ + c];
        const auto xt = x_[row * n_ + t];
        const auto zt = z_[row * n_ + t];
        r_[row] ^= xc & zt & (xt ^ zc ^ 1U);
        x_[row * n_ + t] = xt ^ xc;
        z_[row * n_ + c] = zc ^ zt;
    }
}

void PauliTableau::apply(const Gate& g) {
    if (g.q0() >= n_ || (g.two_qubit() && g.q1() >= n_)) throw std::out_of_range("gate wire outside tableau");
    switch (g.kind()) {
        case GateKind::H: h(g.q0()); break;
        case GateKind::P: s(g.q0()); break;
        case GateKind::CNOT: cx(g.q0(), g.q1()); break;
        case GateKind::CPHASE:
            if (g.k() != 1) throw UnsupportedGateError("cphase with k >= 2 is not a Clifford gate");
            [[fallthrough]];
        case GateKind::CZ:
            h(g.q1());
            cx(g.q0(), g.q1());
            h(g.q1());
            break;
        case GateKind::SWAP:
            for (std::size_t row = 0; row < 2 * n_; ++row) {
                std::swap(x_[row * n_ + g.q0()], x_[row * n_ + g.q1()]);
                std::swap(z_[row * n_ + g.q0()], z_[row * n_ + g.q1()]);
            }
            break;
        case GateKind::GENERIC2:
            throw UnsupportedGateError("generic two-qubit gates have no tableau");
    }
    assert(symplectic());
}

PauliTableau PauliTableau::permuted(const std::vector<Wire>& perm) const {
    if (perm.size() != n_ || !is_permutation(perm)) throw std::invalid_argument("relabel is not a wire permutation");
    PauliTableau out(n_);
    out.r_ = r_;
    for (std::size_t row = 0; row < 2 * n_; ++row) {
        for (Wire w = 0; w < n_; ++w) {
            out.x_[row * n_ + perm[w]] = x_[row * n_ + w];
            out.z_[row * n_ + perm[w]] = z_[row * n_ + w];
        }
    }
    return out;
}

bool PauliTableau::symplectic() const {
    for (std::size_t i = 0; i < 2 * n_; ++i) {
        for (std::size_t j = i + 1; j < 2 * n_; ++j) {
            unsigned form = 0;
            for (Wire w = 0; w < n_; ++w) {
                form ^= (x_[i * n_ + w] & z_[j * n_ + w]) ^ (z_[i * n_ + w] & x_[j * n_ + w]);
            }
            const unsigned expected = (j == i + n_) ? 1U : 0U;
            if (form != expected) return false;
        }
    }
    return true;
}

PauliTableau tableau_of(const Circuit& c) {
    PauliTableau t(c.n_wires());
    for (const Gate& g : c.gates()) t.apply(g);
    return t;
}

PauliTableau apply_gate(PauliTableau t, const Gate& g) {
    t.apply(g);
    return t;
}

bool tableau_equiv(const Circuit& c1, const Circuit& c2, const std::vector<Wire>& relabel) {
    if (c1.n_wires() != c2.n_wires()) return false;
    return tableau_of(c1) == tableau_of(c2).permuted(relabel);
}

void StageDecomposition::validate() const {
    if (n == 0) throw Error("decomposition needs at least one qubit");
    if (h_masks.size() != 2 || p_masks.size() != 4 || linear.size() != 5) {
        throw Error("decomposition needs 2 H, 4 P and 5 C stages");
    }
    for (const auto& m : h_masks) {
        if (m.size() != n) throw Error("H mask has the wrong length");
    }
    for (const auto& m : p_masks) {
        if (m.size() != n) throw Error("P mask has the wrong length");
    }
    for (const auto& a : linear) {
        if (a.size() != n) throw Error("C stage has the wrong size");
        if (!a.nonsingular()) throw SingularMatrixError("C stage is singular");
    }
}

StageDecomposition StageDecomposition::trivial(std::size_t n) {
    StageDecomposition d;
    d.n = n;
    d.h_masks.assign(2, std::vector<bool>(n, false));
    d.p_masks.assign(4, std::vector<bool>(n, false));
    d.linear.assign(5, GF2Matrix::identity(n));
    return d;
}

StageDecomposition StageDecomposition::random(std::size_t n, std::mt19937_64& rng) {
    StageDecomposition d = trivial(n);
    std::bernoulli_distribution coin(0.5);
    for (auto& m : d.h_masks) {
        for (std::size_t w = 0; w < n; ++w) m[w] = coin(rng);
    }
    for (auto& m : d.p_masks) {
        for (std::size_t w = 0; w < n; ++w) m[w] = coin(rng);
    }
    for (auto& a : d.linear) a = GF2Matrix::random_nonsingular(n, rng);
    return d;
}

namespace {

// Runs `visit` over the eleven stages with per-kind counters.
template <class OnMask, class OnLinear>
void for_each_stage(const StageDecomposition& d, OnMask on_mask, OnLinear on_linear) {
    std::size_t hi = 0, pi = 0, ci = 0;
    for (char kind : StageDecomposition::order) {
        if (kind == 'H') on_mask(GateKind::H, d.h_masks[hi++]);
        if (kind == 'P') on_mask(GateKind::P, d.p_masks[pi++]);
        if (kind == 'C') on_linear(d.linear[ci++]);
    }
}

Gate single(GateKind kind, Wire w) { return kind == GateKind::H ? Gate::h(w) : Gate::p(w); }

}  // namespace

Circuit stabilizer_flat(const StageDecomposition& d) {
    d.validate();
    Circuit c(d.n);
    for_each_stage(
        d,
        [&](GateKind kind, const std::vector<bool>& mask) {
            for (Wire w = 0; w < d.n; ++w) {
                if (mask[w]) c.add(single(kind, w));
            }
        },
        [&](const GF2Matrix& a) { c.append(gauss_jordan(a.inverse()).circuit()); });
    return c;
}

ScheduledCircuit schedule_stabilizer(const StageDecomposition& d) {
    d.validate();
    Circuit c(d.n);
    Layout layout(d.n);
    for_each_stage(
        d,
        [&](GateKind kind, const std::vector<bool>& mask) {
            for (Wire w = 0; w < d.n; ++w) {
                if (mask[w]) c.add(single(kind, layout.site_of(w)));
            }
        },
        [&](const GF2Matrix& a) { append_linear(c, layout, a); });
    return ScheduledCircuit{std::move(c), Architecture::lnn(d.n), layout.sites()};
}

namespace {

std::vector<bool> parse_mask(const Directive& d, std::size_t n) {
    if (d.tokens.size() != 1 || d.tokens[0].size() != n) {
        throw ParseError(d.line, "expected a bitmask of " + std::to_string(n) + " characters");
    }
    std::vector<bool> mask(n);
    for (std::size_t w = 0; w < n; ++w) {
        char ch = d.tokens[0][w];
        if (ch != '0' && ch != '1') throw ParseError(d.line, std::string("bad bitmask character '") + ch + "'");
        mask[w] = ch == '1';
    }
    return mask;
}

}  // namespace

StageDecomposition parse_decomposition(std::string_view text) {
    auto directives = tokenize(text);
    if (directives.empty()) throw ParseError(0, "empty decomposition text: expected 'stab N'");
    const Directive& head = directives.front();
    if (head.tokens[0] != "stab") throw ParseError(head.line, "expected 'stab N'");
    expect_arity(head, 2);
    const std::size_t n = parse_count(head.tokens[1], head.line);
    if (n == 0) throw ParseError(head.line, "qubit count must be positive");

    StageDecomposition d;
    d.n = n;
    std::size_t pos = 1;
    for (char expected : StageDecomposition::order) {
        const std::size_t line = pos < directives.size() ? directives[pos].line : directives.back().line;
        if (pos >= directives.size()) throw ParseError(line, "missing stage; expected the order H-C-P-C-P-C-H-P-C-P-C");
        const Directive& s = directives[pos++];
        if (s.tokens[0] != "stage" || s.tokens.size() != 2) throw ParseError(s.line, "expected 'stage h|p|c'");
        const char kind = s.tokens[1].size() == 1 ? static_cast<char>(s.tokens[1][0] - 'a' + 'A') : '?';
        if (kind != expected) {
            throw ParseError(s.line, std::string("expected stage '") + static_cast<char>(expected - 'A' + 'a') +
                                         "' (order is H-C-P-C-P-C-H-P-C-P-C)");
        }
        if (kind == 'H' || kind == 'P') {
            if (pos >= directives.size()) throw ParseError(s.line, "missing bitmask");
            auto mask = parse_mask(directives[pos++], n);
            (kind == 'H' ? d.h_masks : d.p_masks).push_back(std::move(mask));
            continue;
        }
        GF2Matrix a(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (pos >= directives.size()) throw ParseError(s.line, "missing matrix rows");
            auto row = parse_mask(directives[pos++], n);
            for (std::size_t j = 0; j < n; ++j) a.set(i, j, row[j]);
        }
        if (!a.nonsingular()) throw SingularMatrixError("line " + std::to_string(s.line) + ": C stage is singular");
        d.linear.push_back(std::move(a));
    }
    if (pos != directives.size()) throw ParseError(directives[pos].line, "unexpected content after the 11th stage");
    return d;
}

std::string emit_decomposition(const StageDecomposition& d) {
    std::ostringstream out;
    out << "stab " << d.n << '\n';
    auto mask_string = [](const std::vector<bool>& m) {
        std::string s;
        for (bool b : m) s += b ? '1' : '0';
        return s;
    };
    for_each_stage(
        d,
        [&](GateKind kind, const std::vector<bool>& mask) {
            out << "stage " << (kind == GateKind::H ? 'h' : 'p') << '\n' << mask_string(mask) << '\n';
        },
        [&](const GF2Matrix& a) {
            out << "stage c\n";
            for (std::size_t i = 0; i < a.size(); ++i) out << a.row_string(i) << '\n';
        });
    return out.str();
}

}  // namespace chainforge
