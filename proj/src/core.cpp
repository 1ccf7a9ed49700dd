#include "swapnet/core.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace swapnet {

Mapping Mapping::identity(int n) {
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 0);
    return Mapping(std::move(s));
}

Mapping Mapping::reversal(int n) {
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = n - 1 - i;
    return Mapping(std::move(s));
}

bool Mapping::is_bijection() const {
    const int n = size();
    std::vector<bool> seen(n, false);
    for (int id : site_to_logical) {
        if (id < 0 || id >= n || seen[id]) return false;
        seen[id] = true;
    }
    return true;
}

std::vector<int> Mapping::inverse() const {
    std::vector<int> inv(site_to_logical.size(), -1);
    for (int s = 0; s < size(); ++s) inv[site_to_logical[s]] = s;
    return inv;
}

int op_position(const LayerOp& op) {
    return std::visit([](const auto& o) { return o.position; }, op);
}

int op_width(const LayerOp& op) {
    if (const auto* s = std::get_if<SwapOp>(&op)) return s->width();
    return std::get<AcquaintOp>(op).width;
}

int GateSet::locality() const {
    int k = 0;
    for (const auto& e : edges) k = std::max(k, static_cast<int>(e.size()));
    return k;
}

CostModel CostModel::uniform(double value, int max_locality) {
    CostModel cm;
    for (int k = 1; k <= max_locality; ++k) cm.tau[k] = value;
    return cm;
}

double CostModel::at(int locality) const {
    auto it = tau.find(locality);
    if (it == tau.end()) {
        throw CostModelError("cost model does not define tau_" + std::to_string(locality));
    }
    return it->second;
}

std::string edge_tag(const std::vector<int>& edge) {
    std::ostringstream os;
    for (std::size_t i = 0; i < edge.size(); ++i) {
        if (i) os << ',';
        os << edge[i];
    }
    return os.str();
}

std::vector<int> parse_edge_tag(const std::string& tag) {
    std::vector<int> edge;
    std::istringstream is(tag);
    std::string item;
    while (std::getline(is, item, ',')) edge.push_back(std::stoi(item));
    return edge;
}

void validate_layer(const Layer& layer, int n) {
    std::vector<std::pair<int, int>> windows;
    for (const auto& op : layer.ops) {
        const int p = op_position(op);
        const int w = op_width(op);
        if (const auto* s = std::get_if<SwapOp>(&op)) {
            if (s->left_size < 1 || s->right_size < 1) {
                throw StructuralError("swap op with empty block");
            }
        } else if (std::get<AcquaintOp>(op).width < 2) {
            throw StructuralError("acquaintance op narrower than 2 sites");
        }
        if (p < 0 || p + w > n) {
            throw StructuralError("op window [" + std::to_string(p) + "," +
                                  std::to_string(p + w) + ") out of bounds for n=" +
                                  std::to_string(n));
        }
        windows.emplace_back(p, p + w);
    }
    std::sort(windows.begin(), windows.end());
    for (std::size_t i = 1; i < windows.size(); ++i) {
        if (windows[i].first < windows[i - 1].second) {
            throw StructuralError("overlapping op windows in one layer at site " +
                                  std::to_string(windows[i].first));
        }
    }
}

void validate(const SwapNetwork& net) {
    if (net.initial.size() != net.n() || !net.initial.is_bijection()) {
        throw StructuralError("initial mapping is not a bijection on " +
                              std::to_string(net.n()) + " sites");
    }
    for (const auto& layer : net.layers) validate_layer(layer, net.n());
}

Mapping apply_layer(const Mapping& m, const Layer& layer) {
    validate_layer(layer, m.size());
    Mapping out = m;
    for (const auto& op : layer.ops) {
        if (const auto* s = std::get_if<SwapOp>(&op)) {
            auto first = out.site_to_logical.begin() + s->position;
            std::rotate(first, first + s->left_size, first + s->width());
        }
    }
    return out;
}

Mapping net_permutation(const SwapNetwork& net) {
    validate(net);
    Mapping m = net.initial;
    for (const auto& layer : net.layers) m = apply_layer(m, layer);
    return m;
}

namespace {

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
    // both sorted
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Deterministic bounded uniform draw; mt19937_64 output is fully specified,
// so results are identical across platforms.
std::size_t bounded_uniform(std::mt19937_64& rng, std::size_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
}

}  // namespace

GateSet make_gateset(int n, std::vector<std::vector<int>> edges) {
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        if (e.size() < 2) throw GateSetError("gate on fewer than 2 qubits");
        if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
            throw GateSetError("repeated qubit in gate " + edge_tag(e));
        }
        if (e.front() < 0 || e.back() >= n) {
            throw GateSetError("gate " + edge_tag(e) + " out of range for n=" +
                               std::to_string(n));
        }
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i] == edges[i - 1]) {
            throw GateSetError("duplicate gate " + edge_tag(edges[i]));
        }
    }
    for (const auto& a : edges) {
        for (const auto& b : edges) {
            if (a.size() < b.size() && is_subset(a, b)) {
                throw GateSetError("gate " + edge_tag(a) + " acts on a subset of gate " +
                                   edge_tag(b));
            }
        }
    }
    return GateSet{n, std::move(edges)};
}

GateSet qaoa_gateset(int k, int n) {
    if (k < 2 || k > n) {
        throw GateSetError("qaoa gate set requires 2 <= k <= n, got k=" +
                           std::to_string(k) + ", n=" + std::to_string(n));
    }
    std::vector<std::vector<int>> edges;
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        edges.push_back(pick);
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return GateSet{n, std::move(edges)};
}

GateSet qaoa_gateset(int n, std::vector<std::vector<int>> edges) {
    return make_gateset(n, std::move(edges));
}

SwapNetwork schedule_gates(const SwapNetwork& net, const GateSet& gates,
                           SchedulePolicy policy, std::uint64_t seed) {
    if (gates.n != net.n()) {
        throw StructuralError("gate set on " + std::to_string(gates.n) +
                              " qubits vs network on " + std::to_string(net.n()));
    }
    validate(net);

    // Opportunities per hyperedge: (layer, position), discovered by position tracking.
    std::map<std::vector<int>, std::vector<std::pair<int, int>>> chances;
    for (const auto& e : gates.edges) chances[e];

    Mapping m = net.initial;
    for (std::size_t t = 0; t < net.layers.size(); ++t) {
        for (const auto& op : net.layers[t].ops) {
            if (const auto* a = std::get_if<AcquaintOp>(&op)) {
                std::vector<int> content(m.site_to_logical.begin() + a->position,
                                         m.site_to_logical.begin() + a->position + a->width);
                std::sort(content.begin(), content.end());
                auto it = chances.find(content);
                if (it != chances.end()) {
                    it->second.emplace_back(static_cast<int>(t), a->position);
                }
            }
        }
        m = apply_layer(m, net.layers[t]);
    }

    std::mt19937_64 rng(seed);
    std::map<std::pair<int, int>, std::vector<int>> picks;  // (layer,pos) -> edge
    for (const auto& [edge, opps] : chances) {
        if (opps.empty()) {
            throw CoverageError("hyperedge {" + edge_tag(edge) +
                                "} has no acquaintance opportunity", edge);
        }
        const auto& chosen = policy == SchedulePolicy::first
                                 ? opps.front()
                                 : opps[bounded_uniform(rng, opps.size())];
        picks[chosen] = edge;
    }

    SwapNetwork out = net;
    for (const auto& [where, edge] : picks) {
        for (auto& op : out.layers[where.first].ops) {
            if (auto* a = std::get_if<AcquaintOp>(&op)) {
                if (a->position == where.second) a->tag = edge_tag(edge);
            }
        }
    }
    return out;
}

namespace {

struct MergeKey {
    int layer;
    int position;
    bool operator<(const MergeKey& o) const {
        return layer != o.layer ? layer < o.layer : position < o.position;
    }
};

// Tagged 2-local acquaintances directly followed by the swap of the same pair
// in the next layer; those pairs fold into a single 2-qubit gate.
std::set<MergeKey> merged_acqs(const SwapNetwork& net) {
    std::set<MergeKey> merged;
    for (std::size_t t = 0; t + 1 < net.layers.size(); ++t) {
        for (const auto& op : net.layers[t].ops) {
            const auto* a = std::get_if<AcquaintOp>(&op);
            if (!a || !a->tag || a->width != 2) continue;
            for (const auto& next : net.layers[t + 1].ops) {
                const auto* s = std::get_if<SwapOp>(&next);
                if (s && s->position == a->position && s->width() == 2) {
                    merged.insert({static_cast<int>(t), a->position});
                }
            }
        }
    }
    return merged;
}

}  // namespace

CostSummary cost(const SwapNetwork& net, const CostModel& cm, bool merge_swap_into_gate) {
    validate(net);
    // Every locality present must be covered, whether or not it contributes.
    for (const auto& layer : net.layers) {
        for (const auto& op : layer.ops) {
            if (std::holds_alternative<SwapOp>(op)) {
                cm.at(2);
            } else {
                cm.at(op_width(op));
            }
        }
    }

    const auto merged = merge_swap_into_gate ? merged_acqs(net) : std::set<MergeKey>{};

    CostSummary summary;
    summary.layer_count = static_cast<int>(net.layers.size());
    for (std::size_t t = 0; t < net.layers.size(); ++t) {
        double layer_duration = 0.0;
        int layer_swap_depth = 0;
        for (const auto& op : net.layers[t].ops) {
            if (const auto* s = std::get_if<SwapOp>(&op)) {
                const int depth = s->width() - 1;
                layer_duration = std::max(layer_duration, depth * cm.at(2));
                layer_swap_depth = std::max(layer_swap_depth, depth);
                summary.swap_count += static_cast<long long>(s->left_size) * s->right_size;
            } else {
                const auto& a = std::get<AcquaintOp>(op);
                if (!a.tag) continue;
                ++summary.gate_count;
                if (merged.count({static_cast<int>(t), a.position})) continue;
                layer_duration = std::max(layer_duration, cm.at(a.width));
            }
        }
        summary.total_duration += layer_duration;
        summary.swap_depth += layer_swap_depth;
    }
    return summary;
}

SwapNetwork strip_untagged(const SwapNetwork& net) {
    SwapNetwork out = net;
    out.layers.clear();
    for (const auto& layer : net.layers) {
        Layer kept;
        for (const auto& op : layer.ops) {
            const auto* a = std::get_if<AcquaintOp>(&op);
            if (a && !a->tag) continue;
            kept.ops.push_back(op);
        }
        if (!kept.ops.empty()) out.layers.push_back(std::move(kept));
    }
    return out;
}

}  // namespace swapnet
