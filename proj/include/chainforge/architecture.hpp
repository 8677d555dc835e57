#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chainforge/circuit.hpp"

namespace chainforge {

enum class ArchKind { LNN, GRID, GRAPH };

/// Undirected coupling graph over sites 0..n_sites-1.
class Architecture {
public:
    static Architecture lnn(std::size_t n);
    /// Row-major sites: site (r, c) is r * cols + c.
    static Architecture grid(std::size_t rows, std::size_t cols);
    /// Throws Error when the graph is disconnected or an edge is out of range.
    static Architecture graph(std::size_t n, const std::vector<std::pair<Wire, Wire>>& edges);

    ArchKind kind() const noexcept { return kind_; }
    std::size_t n_sites() const noexcept { return adjacency_.size(); }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    bool adjacent(Wire a, Wire b) const;
    const std::vector<Wire>& neighbors(Wire site) const { return adjacency_.at(site); }
    /// Edges as (low, high) pairs, sorted.
    std::vector<std::pair<Wire, Wire>> edges() const;
    std::size_t max_degree() const;

    std::string describe() const;

private:
    Architecture(ArchKind kind, std::size_t n) : kind_(kind), adjacency_(n) {}
    void connect(Wire a, Wire b);

    ArchKind kind_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::vector<Wire>> adjacency_;
};

struct Violation {
    std::size_t gate_index;
    Wire a;
    Wire b;
};

/// First two-qubit gate that does not sit on an edge, or nullopt when the circuit is valid.
/// Throws std::invalid_argument on a wire-count mismatch.
std::optional<Violation> validate_on(const Circuit& c, const Architecture& arch);

/// Default expansion budget for the Hamiltonian-path search on GRAPH architectures.
inline constexpr std::size_t default_chain_budget = 1'000'000;

/// Ordered sites forming a Hamiltonian path. LNN gives 0..n-1 and GRID the snake order;
/// GRAPH runs a budgeted backtracking search and throws ChainNotFoundError on failure.
std::vector<Wire> embed_chain(const Architecture& arch, std::size_t node_budget = default_chain_budget);

}  // namespace chainforge
