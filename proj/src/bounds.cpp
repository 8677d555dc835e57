#include "chainforge/bounds.hpp"

#include <numeric>
#include <queue>
#include <stdexcept>

#include "chainforge/errors.hpp"

namespace chainforge {

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = g == 0 ? 0 : num / g;
    den_ = g == 0 ? 1 : den / g;
}

std::string Rational::str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator*(const Rational& a, const Rational& b) { return Rational(a.num_ * b.num_, a.den_ * b.den_); }
Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}
bool operator<(const Rational& a, const Rational& b) { return a.num_ * b.den_ < b.num_ * a.den_; }

namespace {

std::string linear_term(const Rational& c) {
    return c.den() == 1 ? std::to_string(c.num()) + "n" : std::to_string(c.num()) + "n/" + std::to_string(c.den());
}

}  // namespace

LowerBound lower_bound(const BoundQuery& q) {
    Rational c;
    std::string prefix;
    switch (q.arch) {
        case ArchClass::LNN: c = q.model == Model::A ? Rational(10, 3) : Rational(3, 2); break;
        case ArchClass::GRID: c = q.model == Model::A ? Rational(3) : Rational(5, 4); break;
        case ArchClass::BOUNDED_DEGREE: {
            if (q.k < 2) throw Error("bounded-degree architectures need k >= 2");
            const auto k = static_cast<std::int64_t>(q.k);
            const std::string ks = std::to_string(k);
            if (q.model == Model::A) {
                c = Rational(2) + Rational(2, k);
                prefix = "(2+2/" + ks + ")n + O(1) = ";
            } else {
                c = Rational(1) + Rational(1, k);
                prefix = "(1+1/" + ks + ")n + O(1) = ";
            }
            break;
        }
    }
    return LowerBound{c, prefix + linear_term(c) + " + O(1)"};
}

BoundQuery parse_arch_class(const std::string& text, BoundQuery base) {
    if (text == "lnn") {
        base.arch = ArchClass::LNN;
    } else if (text == "grid") {
        base.arch = ArchClass::GRID;
    } else if (text.rfind("degree:", 0) == 0) {
        const std::string k = text.substr(7);
        if (k.empty() || k.find_first_not_of("0123456789") != std::string::npos || k.size() > 9) {
            throw Error("expected degree:K with a positive integer K");
        }
        base.arch = ArchClass::BOUNDED_DEGREE;
        base.k = static_cast<unsigned>(std::stoul(k));
        if (base.k < 2) throw Error("bounded-degree architectures need k >= 2");
    } else {
        throw Error("unknown architecture class '" + text + "' (use lnn, grid or degree:K)");
    }
    return base;
}

StageAudit stage_audit(const Circuit& c) {
    StageAudit audit;
    std::vector<std::size_t> l_layers;
    // s_before[i]: S layers strictly before layer i (0-based).
    std::vector<std::size_t> s_before;
    const auto layers = layered(c);
    for (std::size_t i = 0; i < layers.size(); ++i) {
        s_before.push_back(audit.s_count);
        bool any_two = false;
        bool computational = false;
        for (const Gate& g : layers[i]) {
            if (!g.two_qubit()) continue;
            any_two = true;
            computational = computational || g.kind() != GateKind::SWAP;
        }
        if (computational) {
            ++audit.l_count;
            l_layers.push_back(i);
            audit.pattern += 'L';
        } else if (any_two) {
            ++audit.s_count;
            audit.pattern += 'S';
        } else {
            audit.pattern += '.';
        }
    }
    auto scan = [&](std::size_t span, std::size_t needed, std::vector<AuditWindow>& out) {
        for (std::size_t i = 0; i + span <= l_layers.size(); ++i) {
            const std::size_t first = l_layers[i];
            const std::size_t last = l_layers[i + span - 1];
            const std::size_t swaps = s_before[last] - s_before[first];
            if (swaps < needed) out.push_back({first + 1, last + 1, swaps});
        }
    };
    scan(3, 1, audit.violations_3l1s);
    scan(4, 2, audit.violations_4l2s);
    return audit;
}

Rational ratio_report(std::size_t n, const ScheduledCircuit& sc, const BoundQuery& q) {
    if (n == 0) throw Error("ratio needs n > 0");
    const Rational scale = lower_bound(q).coefficient * Rational(static_cast<std::int64_t>(n));
    return Rational(static_cast<std::int64_t>(depth(sc.circuit))) / scale;
}

namespace {

std::size_t pair_slot(std::size_t n, Wire a, Wire b) {
    if (a > b) std::swap(a, b);
    return a * (2 * n - a - 1) / 2 + (b - a - 1);
}

// Bitmask of the skeleton slots that precede `slot` and share a wire with it.
std::vector<std::uint32_t> predecessor_masks(std::size_t n) {
    std::vector<Pair> slots;
    for (Wire a = 0; a < n; ++a) {
        for (Wire b = a + 1; b < n; ++b) slots.push_back({a, b});
    }
    std::vector<std::uint32_t> pred(slots.size(), 0);
    for (std::size_t i = 0; i < slots.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const bool share = slots[j].a == slots[i].a || slots[j].a == slots[i].b || slots[j].b == slots[i].a ||
                               slots[j].b == slots[i].b;
            if (share) pred[i] |= 1U << j;
        }
    }
    return pred;
}

struct SearchState {
    std::array<std::uint8_t, brute_force_max_n> logical_at{};
    std::uint32_t done = 0;
};

}  // namespace

std::size_t brute_force_min_depth(std::size_t n, Model model, const Architecture& arch) {
    if (n > brute_force_max_n) throw SizeLimitError("brute force is limited to n <= 5");
    if (arch.n_sites() != n) throw Error("architecture size does not match n");
    if (n < 2) return 0;

    const std::size_t slots = n * (n - 1) / 2;
    const std::uint32_t all = (1U << slots) - 1;
    const auto pred = predecessor_masks(n);
    const auto edges = arch.edges();

    // Key: 3 bits per site for the layout, then the done mask.
    auto encode = [&](const SearchState& s) {
        std::uint32_t key = 0;
        for (std::size_t i = 0; i < n; ++i) key = (key << 3) | s.logical_at[i];
        return (key << slots) | s.done;
    };
    std::vector<bool> seen(std::size_t{1} << (3 * n + slots), false);

    SearchState start;
    for (std::size_t i = 0; i < n; ++i) start.logical_at[i] = static_cast<std::uint8_t>(i);
    std::vector<SearchState> frontier{start};
    seen[encode(start)] = true;

    for (std::size_t layer = 1;; ++layer) {
        std::vector<SearchState> next;
        for (const SearchState& s : frontier) {
            SearchState cur = s;
            std::uint32_t used = 0;
            bool acted = false;
            // Depth-first choice per edge: idle, SWAP, or the skeleton gate of its logical pair.
            auto expand = [&](auto&& self, std::size_t e) -> bool {
                if (e == edges.size()) {
                    if (!acted) return false;
                    if (cur.done == all) return true;
                    const auto key = encode(cur);
                    if (!seen[key]) {
                        seen[key] = true;
                        next.push_back(cur);
                    }
                    return false;
                }
                if (self(self, e + 1)) return true;
                const auto [u, v] = edges[e];
                const std::uint32_t sites = (1U << u) | (1U << v);
                if (used & sites) return false;
                used |= sites;
                const bool was_acted = acted;
                acted = true;

                std::swap(cur.logical_at[u], cur.logical_at[v]);
                const bool hit = self(self, e + 1);
                std::swap(cur.logical_at[u], cur.logical_at[v]);
                if (hit) return true;

                const std::size_t slot = pair_slot(n, cur.logical_at[u], cur.logical_at[v]);
                const std::uint32_t bit = 1U << slot;
                const bool ready = model == Model::B || (s.done & pred[slot]) == pred[slot];
                if (!(cur.done & bit) && ready) {
                    cur.done |= bit;
                    const bool found = self(self, e + 1);
                    cur.done &= ~bit;
                    if (found) return true;
                }
                acted = was_acted;
                used &= ~sites;
                return false;
            };
            if (expand(expand, 0)) return layer;
        }
        if (next.empty()) throw std::logic_error("brute force search exhausted without finishing");
        frontier = std::move(next);
    }
}

bool model_a_feasible(const ScheduledCircuit& sc, const SkeletonSpec& spec) {
    const std::size_t n = spec.n();
    if (sc.circuit.n_wires() != n || sc.arch.n_sites() != n) return false;
    std::vector<bool> done(spec.slot_count(), false);
    Layout layout(n);
    for (const auto& layer : layered(sc.circuit)) {
        const std::vector<bool> at_start = done;
        for (const Gate& g : layer) {
            if (!g.two_qubit()) continue;
            if (!sc.arch.adjacent(g.q0(), g.q1())) return false;
            if (g.kind() == GateKind::SWAP) continue;
            const Wire la = layout.logical_at(g.q0());
            const Wire lb = layout.logical_at(g.q1());
            const std::size_t slot = spec.slot_index(la, lb);
            if (!spec.present(la, lb) || done[slot]) return false;
            for (Wire a = 0; a < n; ++a) {
                for (Wire b = a + 1; b < n; ++b) {
                    const std::size_t other = spec.slot_index(a, b);
                    if (other >= slot || !spec.present(a, b)) continue;
                    const bool share = a == la || a == lb || b == la || b == lb;
                    if (share && !at_start[other]) return false;
                }
            }
            done[slot] = true;
        }
        for (const Gate& g : layer) {
            if (g.kind() == GateKind::SWAP) layout.swap_sites(g.q0(), g.q1());
        }
    }
    for (Wire a = 0; a < n; ++a) {
        for (Wire b = a + 1; b < n; ++b) {
            if (spec.present(a, b) && !done[spec.slot_index(a, b)]) return false;
        }
    }
    return layout.sites() == sc.final_map;
}

std::vector<LoopWitness> grid_loop_witnesses(std::size_t n) {
    std::vector<LoopWitness> out;
    for (std::size_t k = 0; k + 2 < n; ++k) {
        LoopWitness w{k, {Pair{k, k + 1}, Pair{k, k + 2}, Pair{k + 1, k + 2}}, {}};
        std::array<std::size_t, 3> degree_of{};  // wires k, k+1, k+2
        for (std::size_t i = 0; i < 3; ++i) {
            w.stages[i] = stage_of(w.pairs[i].a, w.pairs[i].b);
            ++degree_of[w.pairs[i].a - k];
            ++degree_of[w.pairs[i].b - k];
        }
        const bool triangle = degree_of == std::array<std::size_t, 3>{2, 2, 2};
        const bool consecutive = w.stages[1] == w.stages[0] + 1 && w.stages[2] == w.stages[1] + 1;
        if (!triangle || !consecutive) throw std::logic_error("loop witness check failed");
        out.push_back(w);
    }
    return out;
}

bool is_bipartite(const Architecture& arch) {
    const std::size_t n = arch.n_sites();
    std::vector<int> colour(n, -1);
    for (Wire root = 0; root < n; ++root) {
        if (colour[root] != -1) continue;
        colour[root] = 0;
        std::queue<Wire> q;
        q.push(root);
        while (!q.empty()) {
            const Wire u = q.front();
            q.pop();
            for (Wire v : arch.neighbors(u)) {
                if (colour[v] == -1) {
                    colour[v] = 1 - colour[u];
                    q.push(v);
                } else if (colour[v] == colour[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace chainforge
