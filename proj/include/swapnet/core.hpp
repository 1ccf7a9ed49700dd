/** \file
 * Core intermediate representation for swap networks on a line of qubits:
 * site layout, logical-to-physical mappings, layered swap/acquaintance ops,
 * gate sets, cost models, and gate scheduling onto acquaintance opportunities.
 *
 * Conventions: sites and logical ids are 0-indexed everywhere. All types are
 * immutable values after construction; every operation is a pure function.
 */
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace swapnet {

struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GateSetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CostModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a hyperedge has no acquaintance opportunity in a network.
struct CoverageError : std::runtime_error {
    std::vector<int> edge;
    CoverageError(std::string msg, std::vector<int> e)
        : std::runtime_error(std::move(msg)), edge(std::move(e)) {}
};

/// Thrown when an input exceeds a documented size cap (dense oracle, exact search).
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A line of n physical sites, indexed 0..n-1; sites i and j are adjacent iff |i-j| == 1.
struct LineLayout {
    int n = 0;
    bool adjacent(int i, int j) const { return i - j == 1 || j - i == 1; }
};

/// Bijection between logical items (qubits or fermionic modes) and physical sites.
/// site_to_logical[s] is the logical id occupying site s.
struct Mapping {
    std::vector<int> site_to_logical;

    Mapping() = default;
    explicit Mapping(std::vector<int> s) : site_to_logical(std::move(s)) {}

    static Mapping identity(int n);
    static Mapping reversal(int n);

    int size() const { return static_cast<int>(site_to_logical.size()); }
    int operator[](int site) const { return site_to_logical[site]; }
    bool is_bijection() const;
    /// logical id -> site it occupies. Requires a bijection.
    std::vector<int> inverse() const;

    bool operator==(const Mapping&) const = default;
};

/// Exchanges two adjacent blocks of k1 and k2 logical items while preserving
/// the order within each block. Acts on the window [position, position+k1+k2).
struct SwapOp {
    int position = 0;
    int left_size = 1;
    int right_size = 1;

    int width() const { return left_size + right_size; }
    /// Inverse rotation: same window, block roles exchanged.
    SwapOp inverse() const { return {position, right_size, left_size}; }
    bool operator==(const SwapOp&) const = default;
};

/// Marks that the `width` logical items on [position, position+width) may be
/// acted on by a gate here. Untagged ops are pure opportunities; scheduling
/// tags exactly one op per hyperedge with the canonical edge label.
struct AcquaintOp {
    int position = 0;
    int width = 2;
    std::optional<std::string> tag;

    bool operator==(const AcquaintOp&) const = default;
};

using LayerOp = std::variant<SwapOp, AcquaintOp>;

int op_position(const LayerOp& op);
int op_width(const LayerOp& op);

/// One parallel layer; the site windows of its ops must be pairwise disjoint.
struct Layer {
    std::vector<LayerOp> ops;
    bool operator==(const Layer&) const = default;
};

enum class SwapKind { logical, fermionic };

/// A circuit of swap layers (with interleaved acquaintance opportunities) on a
/// line. swap_kind changes only the interpretation of swaps (qubit swap vs
/// fermionic swap), never the structure.
struct SwapNetwork {
    LineLayout layout;
    Mapping initial;
    std::vector<Layer> layers;
    SwapKind swap_kind = SwapKind::logical;

    SwapNetwork() = default;
    explicit SwapNetwork(int n) : layout{n}, initial(Mapping::identity(n)) {}

    int n() const { return layout.n; }
    bool operator==(const SwapNetwork&) const = default;
};

/// Hypergraph of logical-qubit subsets to acquaint; one gate per subset.
/// Edges are kept sorted (within each tuple and lexicographically overall).
struct GateSet {
    int n = 0;
    std::vector<std::vector<int>> edges;

    int locality() const;
    bool operator==(const GateSet&) const = default;
};

/// Locality -> duration table. tau[k] is the duration of any k-local gate.
struct CostModel {
    std::map<int, double> tau;

    static CostModel uniform(double value = 1.0, int max_locality = 64);
    double at(int locality) const;
    bool covers(int locality) const { return tau.count(locality) != 0; }
};

struct CostSummary {
    double total_duration = 0.0;
    int swap_depth = 0;
    int layer_count = 0;
    long long swap_count = 0;
    int gate_count = 0;
};

enum class SchedulePolicy { first, random };

/// Canonical tag for a hyperedge: sorted ids joined by commas, e.g. "0,2,5".
std::string edge_tag(const std::vector<int>& edge);
std::vector<int> parse_edge_tag(const std::string& tag);

/// Checks window bounds and pairwise disjointness of one layer's ops.
void validate_layer(const Layer& layer, int n);
/// Checks the initial mapping and every layer of the network.
void validate(const SwapNetwork& net);

/// Applies one layer to a mapping. Swaps rotate their window contents
/// (a1..ak1, b1..bk2) -> (b1..bk2, a1..ak1); acquaintance ops are no-ops.
Mapping apply_layer(const Mapping& m, const Layer& layer);

/// Composition of all layers applied to the initial mapping.
Mapping net_permutation(const SwapNetwork& net);

/// Builds a gate set from explicit edges, enforcing the full invariants:
/// sorted in-range tuples of size >= 2, no duplicates, no tuple a subset of
/// another. Throws GateSetError.
GateSet make_gateset(int n, std::vector<std::vector<int>> edges);

/// All C(n,k) subsets of {0..n-1} as a gate set (QAOA k-CSP phase separator
/// on the complete hypergraph).
GateSet qaoa_gateset(int k, int n);
/// Validates an explicit user list against the gate-set invariants.
GateSet qaoa_gateset(int n, std::vector<std::vector<int>> edges);

/// Picks one acquaintance opportunity per hyperedge and tags it.
/// `first` picks the earliest layer, ties broken by lowest position; `random`
/// picks uniformly over the hyperedge's opportunities, reproducibly for a
/// fixed seed. Throws CoverageError if some hyperedge has no opportunity.
SwapNetwork schedule_gates(const SwapNetwork& net, const GateSet& gates,
                           SchedulePolicy policy, std::uint64_t seed = 0);

/// Cost of a network under a cost model. Layer duration is the maximum over
/// its ops: a (k1,k2)-swap costs (k1+k2-1)*tau2 (its standard-swap
/// decomposition), a tagged width-w acquaintance costs tau_w, untagged ops
/// cost nothing. With `merge_swap_into_gate`, a tagged 2-local acquaintance
/// immediately preceding a swap of the same pair is folded into that swap.
/// swap_depth and swap_count are counted after decomposition to standard
/// swaps. Throws CostModelError if a needed tau_k is missing.
CostSummary cost(const SwapNetwork& net, const CostModel& cm,
                 bool merge_swap_into_gate = false);

/// Removes untagged acquaintance ops (and any layers left empty).
SwapNetwork strip_untagged(const SwapNetwork& net);

}  // namespace swapnet
