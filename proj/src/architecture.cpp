#include "chainforge/architecture.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "chainforge/errors.hpp"

namespace chainforge {

Architecture Architecture::lnn(std::size_t n) {
    if (n == 0) throw Error("lnn architecture needs at least one site");
    Architecture a(ArchKind::LNN, n);
    for (Wire i = 0; i + 1 < n; ++i) a.connect(i, i + 1);
    return a;
}

Architecture Architecture::grid(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) throw Error("grid architecture needs positive dimensions");
    Architecture a(ArchKind::GRID, rows * cols);
    a.rows_ = rows;
    a.cols_ = cols;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const Wire s = r * cols + c;
            if (c + 1 < cols) a.connect(s, s + 1);
            if (r + 1 < rows) a.connect(s, s + cols);
        }
    }
    return a;
}

Architecture Architecture::graph(std::size_t n, const std::vector<std::pair<Wire, Wire>>& edges) {
    if (n == 0) throw Error("graph architecture needs at least one site");
    Architecture a(ArchKind::GRAPH, n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw Error("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
        if (u == v) throw Error("self-loop on site " + std::to_string(u));
        if (!a.adjacent(u, v)) a.connect(u, v);
    }
    std::vector<bool> seen(n, false);
    std::vector<Wire> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Wire s = stack.back();
        stack.pop_back();
        for (Wire t : a.adjacency_[s]) {
            if (!seen[t]) {
                seen[t] = true;
                ++reached;
                stack.push_back(t);
            }
        }
    }
    if (reached != n) throw Error("graph architecture is not connected");
    return a;
}

void Architecture::connect(Wire a, Wire b) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
}

bool Architecture::adjacent(Wire a, Wire b) const {
    if (a >= n_sites() || b >= n_sites()) return false;
    const auto& nb = adjacency_[a];
    return std::find(nb.begin(), nb.end(), b) != nb.end();
}

std::vector<std::pair<Wire, Wire>> Architecture::edges() const {
    std::vector<std::pair<Wire, Wire>> out;
    for (Wire s = 0; s < n_sites(); ++s) {
        for (Wire t : adjacency_[s]) {
            if (s < t) out.emplace_back(s, t);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t Architecture::max_degree() const {
    std::size_t k = 0;
    for (const auto& nb : adjacency_) k = std::max(k, nb.size());
    return k;
}

std::string Architecture::describe() const {
    std::ostringstream out;
    switch (kind_) {
        case ArchKind::LNN: out << "lnn(" << n_sites() << ")"; break;
        case ArchKind::GRID: out << "grid(" << rows_ << "x" << cols_ << ")"; break;
        case ArchKind::GRAPH: out << "graph(" << n_sites() << ", degree<=" << max_degree() << ")"; break;
    }
    return out.str();
}

std::optional<Violation> validate_on(const Circuit& c, const Architecture& arch) {
    if (c.n_wires() != arch.n_sites()) {
        throw std::invalid_argument("circuit has " + std::to_string(c.n_wires()) + " wires but architecture has " +
                                    std::to_string(arch.n_sites()) + " sites");
    }
    const auto& gates = c.gates();
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate& g = gates[i];
        if (g.two_qubit() && !arch.adjacent(g.q0(), g.q1())) return Violation{i, g.q0(), g.q1()};
    }
    return std::nullopt;
}

namespace {

class PathSearch {
public:
    PathSearch(const Architecture& arch, std::size_t budget)
        : arch_(arch), budget_(budget), used_(arch.n_sites(), false) {}

    std::optional<std::vector<Wire>> run() {
        const std::size_t n = arch_.n_sites();
        // Degree-1 sites must be endpoints, so starting there prunes most of the tree.
        std::vector<Wire> starts(n);
        for (Wire s = 0; s < n; ++s) starts[s] = s;
        std::stable_sort(starts.begin(), starts.end(),
                         [&](Wire a, Wire b) { return arch_.neighbors(a).size() < arch_.neighbors(b).size(); });
        for (Wire s : starts) {
            path_.assign(1, s);
            used_[s] = true;
            if (extend()) return path_;
            used_[s] = false;
            if (exhausted_) break;
        }
        return std::nullopt;
    }

private:
    bool extend() {
        if (path_.size() == arch_.n_sites()) return true;
        if (++expansions_ > budget_) {
            exhausted_ = true;
            return false;
        }
        for (Wire t : arch_.neighbors(path_.back())) {
            if (used_[t]) continue;
            used_[t] = true;
            path_.push_back(t);
            if (extend()) return true;
            path_.pop_back();
            used_[t] = false;
            if (exhausted_) return false;
        }
        return false;
    }

    const Architecture& arch_;
    std::size_t budget_;
    std::size_t expansions_ = 0;
    bool exhausted_ = false;
    std::vector<bool> used_;
    std::vector<Wire> path_;
};

}  // namespace

std::vector<Wire> embed_chain(const Architecture& arch, std::size_t node_budget) {
    switch (arch.kind()) {
        case ArchKind::LNN:
            return identity_permutation(arch.n_sites());
        case ArchKind::GRID: {
            std::vector<Wire> chain;
            chain.reserve(arch.n_sites());
            for (std::size_t r = 0; r < arch.rows(); ++r) {
                for (std::size_t i = 0; i < arch.cols(); ++i) {
                    const std::size_t c = (r % 2 == 0) ? i : arch.cols() - 1 - i;
                    chain.push_back(r * arch.cols() + c);
                }
            }
            return chain;
        }
        case ArchKind::GRAPH: {
            PathSearch search(arch, node_budget);
            if (auto path = search.run()) return *path;
            throw ChainNotFoundError("no chain through all " + std::to_string(arch.n_sites()) +
                                     " sites found within the search budget");
        }
    }
    throw std::logic_error("unknown architecture kind");
}

}  // namespace chainforge
