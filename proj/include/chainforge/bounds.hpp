#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "chainforge/architecture.hpp"
#include "chainforge/circuit.hpp"
#include "chainforge/schedule.hpp"
#include "chainforge/skeleton.hpp"

namespace chainforge {

/// Exact fraction in lowest terms with a positive denominator.
class Rational {
public:
    Rational(std::int64_t num = 0, std::int64_t den = 1);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    /// "p/q", or "p" for integers.
    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend bool operator==(const Rational&, const Rational&) = default;
    friend bool operator<(const Rational& a, const Rational& b);

private:
    std::int64_t num_;
    std::int64_t den_;
};

/// A: skeleton gate order is fixed. B: gates may run in any order.
enum class Model : std::uint8_t { A, B };
enum class ArchClass : std::uint8_t { LNN, GRID, BOUNDED_DEGREE };

struct BoundQuery {
    Model model = Model::A;
    ArchClass arch = ArchClass::LNN;
    /// Maximum degree for BOUNDED_DEGREE; at least 2.
    unsigned k = 2;
    std::size_t n = 0;
};

struct LowerBound {
    /// Leading coefficient c in "depth >= c n + O(1)".
    Rational coefficient;
    std::string formula;
};

/// Leading term of the skeleton-circuit depth lower bound. Throws Error when k < 2.
LowerBound lower_bound(const BoundQuery& q);

/// Parses `lnn`, `grid` or `degree:K`.
BoundQuery parse_arch_class(const std::string& text, BoundQuery base = {});

enum class LayerClass : std::uint8_t { L, S, Other };

/// Window of consecutive L layers lacking the required swapping depth between its first and
/// last member. Layer numbers are 1-based ASAP layers.
struct AuditWindow {
    std::size_t first_layer;
    std::size_t last_layer;
    std::size_t swap_layers;
};

struct StageAudit {
    std::size_t l_count = 0;
    std::size_t s_count = 0;
    /// One character per ASAP layer: L, S or '.' for single-qubit-only layers.
    std::string pattern;
    std::vector<AuditWindow> violations_3l1s;
    std::vector<AuditWindow> violations_4l2s;

    bool compliant() const { return violations_3l1s.empty() && violations_4l2s.empty(); }
};

/// A layer is L when it holds any non-SWAP two-qubit gate, S when it holds only SWAPs.
/// 3L->1S: every three consecutive L layers have at least one S between the first and third.
/// 4L->2S: every four consecutive L layers have at least two S between the first and fourth.
StageAudit stage_audit(const Circuit& c);
inline StageAudit stage_audit(const ScheduledCircuit& sc) { return stage_audit(sc.circuit); }

/// depth(sc) / (coefficient * n).
Rational ratio_report(std::size_t n, const ScheduledCircuit& sc, const BoundQuery& q);

inline constexpr std::size_t brute_force_max_n = 5;

/// Exact minimum depth of the full skeleton circuit on `arch` starting from the identity
/// layout. Each layer applies, on a matching of architecture edges, either a SWAP or one
/// pending skeleton gate per edge. Throws SizeLimitError when n > 5.
std::size_t brute_force_min_depth(std::size_t n, Model model, const Architecture& arch);

/// Replays `sc` layer by layer as a model-A execution of the skeleton `spec`: every
/// non-SWAP gate must sit on an edge, act on a pending present pair whose earlier
/// skeleton gates on shared wires are done, and every present pair must run exactly once.
bool model_a_feasible(const ScheduledCircuit& sc, const SkeletonSpec& spec);

/// Three skeleton interactions (k,k+1), (k,k+2), (k+1,k+2) in consecutive stages.
struct LoopWitness {
    std::size_t k;
    std::array<Pair, 3> pairs;
    std::array<std::size_t, 3> stages;
};

/// One witness per k = 0 .. n-3, each checked to close a triangle in consecutive stages.
std::vector<LoopWitness> grid_loop_witnesses(std::size_t n);

/// Two-colourability of the coupling graph; no odd cycle embeds in a bipartite architecture.
bool is_bipartite(const Architecture& arch);

}  // namespace chainforge
