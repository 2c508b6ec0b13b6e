#include "partsched/comp_dag.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "partsched/errors.hpp"

namespace partsched {

std::size_t CompDag::add_vertex(VertexId id, std::size_t h, ProcessorSet group, std::string name) {
    if (index_.count(id) != 0) {
        throw std::invalid_argument("duplicate vertex id " + std::to_string(id));
    }
    std::size_t index = vertices_.size();
    vertices_.push_back(CompVertex{id, h, std::move(group), std::move(name)});
    in_.emplace_back();
    out_.emplace_back();
    index_.emplace(id, index);
    return index;
}

std::size_t CompDag::add_edge(VertexId from, VertexId to, ProcessorSet phi) {
    std::size_t a = index_of(from);
    std::size_t b = index_of(to);
    std::size_t e = edges_.size();
    edges_.push_back(CompEdge{from, to, std::move(phi)});
    out_[a].push_back(e);
    in_[b].push_back(e);
    return e;
}

std::optional<std::size_t> CompDag::find(VertexId id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t CompDag::index_of(VertexId id) const {
    auto found = find(id);
    if (!found) throw std::invalid_argument("unknown vertex id " + std::to_string(id));
    return *found;
}

std::size_t CompDag::index_of_name(const std::string& name) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i].name == name) return i;
    }
    throw std::invalid_argument("no vertex named " + name);
}

std::vector<std::size_t> CompDag::predecessors(std::size_t index) const {
    std::vector<std::size_t> out;
    for (auto e : in_.at(index)) out.push_back(index_.at(edges_[e].from));
    return out;
}

std::vector<std::size_t> CompDag::successors(std::size_t index) const {
    std::vector<std::size_t> out;
    for (auto e : out_.at(index)) out.push_back(index_.at(edges_[e].to));
    return out;
}

std::size_t CompDag::total_quota() const {
    std::size_t sum = 0;
    for (const auto& v : vertices_) sum += v.h;
    return sum;
}

VertexId CompDag::max_id() const {
    VertexId m = std::numeric_limits<VertexId>::min();
    for (const auto& v : vertices_) m = std::max(m, v.id);
    return m;
}

std::optional<std::vector<std::size_t>> CompDag::topological_order() const {
    const std::size_t n = vertices_.size();
    std::vector<std::size_t> indeg(n);
    for (std::size_t i = 0; i < n; ++i) indeg[i] = in_[i].size();
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t i = 0; i < n; ++i) {
        if (indeg[i] == 0) ready.push(i);
    }
    std::vector<std::size_t> order;
    order.reserve(n);
    while (!ready.empty()) {
        auto u = ready.top();
        ready.pop();
        order.push_back(u);
        for (auto e : out_[u]) {
            auto v = index_.at(edges_[e].to);
            if (--indeg[v] == 0) ready.push(v);
        }
    }
    if (order.size() != n) return std::nullopt;
    return order;
}

std::vector<std::size_t> CompDag::require_topological_order() const {
    auto order = topological_order();
    if (!order) throw CyclicDependencyError("computation pattern contains a cycle");
    return std::move(*order);
}

CompDag CompDag::induced(const std::vector<std::size_t>& indices) const {
    std::vector<std::size_t> keep(indices);
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    CompDag sub(p_, t_);
    std::vector<bool> member(vertices_.size(), false);
    for (auto i : keep) {
        const auto& v = vertices_.at(i);
        sub.add_vertex(v.id, v.h, v.group, v.name);
        member[i] = true;
    }
    for (const auto& e : edges_) {
        if (member[index_.at(e.from)] && member[index_.at(e.to)]) sub.add_edge(e.from, e.to, e.phi);
    }
    return sub;
}

const char* to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::cycle: return "cycle";
    case ViolationKind::empty_group: return "empty-group";
    case ViolationKind::empty_flow: return "empty-flow";
    case ViolationKind::processor_range: return "processor-range";
    case ViolationKind::quota_range: return "quota-range";
    case ViolationKind::initial_condition: return "initial-condition";
    case ViolationKind::inflow_conservation: return "inflow-conservation";
    case ViolationKind::outflow_conservation: return "outflow-conservation";
    case ViolationKind::path_weight: return "path-weight";
    }
    return "unknown";
}

bool ValidationReport::has(ViolationKind kind) const {
    return std::any_of(violations.begin(), violations.end(),
                       [kind](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::summary() const {
    if (ok()) return "ok";
    std::ostringstream os;
    for (const auto& v : violations) {
        os << to_string(v.kind);
        if (v.vertex) os << " at vertex " << *v.vertex;
        if (!v.detail.empty()) os << ": " << v.detail;
        os << '\n';
    }
    return os.str();
}

namespace {

// true if the sets are pairwise disjoint and their union equals target
bool is_disjoint_cover(const std::vector<const ProcessorSet*>& parts, const ProcessorSet& target,
                       std::string& why) {
    ProcessorSet seen(target.processor_count());
    for (const auto* part : parts) {
        if (seen.intersects(*part)) {
            why = "flows overlap on " + (seen & *part).to_string();
            return false;
        }
        seen |= *part;
    }
    if (!(seen == target)) {
        why = "flows cover " + seen.to_string() + " but group is " + target.to_string();
        return false;
    }
    return true;
}

} // namespace

ValidationReport validate(const CompDag& dag) {
    ValidationReport report;
    auto add = [&](ViolationKind kind, std::optional<VertexId> v, std::string detail) {
        report.violations.push_back(Violation{kind, v, std::move(detail)});
    };
    const std::size_t p = dag.processor_count();
    const std::size_t t = dag.task_count();

    bool sets_sized = true;
    for (const auto& v : dag.vertices()) {
        if (v.group.processor_count() != p) {
            add(ViolationKind::processor_range, v.id, "group is not a subset of [1, p]");
            sets_sized = false;
        } else if (v.group.empty()) {
            add(ViolationKind::empty_group, v.id, "");
        }
        if (v.h > t) {
            add(ViolationKind::quota_range, v.id, "h = " + std::to_string(v.h) + " exceeds t = " + std::to_string(t));
        }
    }
    for (const auto& e : dag.edges()) {
        if (e.phi.processor_count() != p) {
            add(ViolationKind::processor_range, e.to,
                "flow on edge " + std::to_string(e.from) + "->" + std::to_string(e.to) + " is not a subset of [1, p]");
            sets_sized = false;
        } else if (e.phi.empty()) {
            add(ViolationKind::empty_flow, e.to,
                "edge " + std::to_string(e.from) + "->" + std::to_string(e.to));
        }
    }

    if (sets_sized) {
        std::vector<const ProcessorSet*> initial;
        for (std::size_t i = 0; i < dag.vertex_count(); ++i) {
            if (dag.in_edges(i).empty()) initial.push_back(&dag.vertex(i).group);
        }
        std::string why;
        if (!is_disjoint_cover(initial, ProcessorSet::all(p), why)) {
            add(ViolationKind::initial_condition, std::nullopt, why);
        }
        for (std::size_t i = 0; i < dag.vertex_count(); ++i) {
            const auto& v = dag.vertex(i);
            if (!dag.in_edges(i).empty()) {
                std::vector<const ProcessorSet*> parts;
                for (auto e : dag.in_edges(i)) parts.push_back(&dag.edges()[e].phi);
                if (!is_disjoint_cover(parts, v.group, why)) add(ViolationKind::inflow_conservation, v.id, why);
            }
            if (!dag.out_edges(i).empty()) {
                std::vector<const ProcessorSet*> parts;
                for (auto e : dag.out_edges(i)) parts.push_back(&dag.edges()[e].phi);
                if (!is_disjoint_cover(parts, v.group, why)) add(ViolationKind::outflow_conservation, v.id, why);
            }
        }
    }

    auto order = dag.topological_order();
    if (!order) {
        add(ViolationKind::cycle, std::nullopt, "the pattern is not acyclic");
        return report;
    }
    // lightest path ending at each vertex
    std::vector<std::size_t> lightest(dag.vertex_count(), 0);
    for (auto i : *order) {
        std::size_t best = 0;
        bool any = false;
        for (auto u : dag.predecessors(i)) {
            best = any ? std::min(best, lightest[u]) : lightest[u];
            any = true;
        }
        lightest[i] = best + dag.vertex(i).h;
        if (dag.out_edges(i).empty() && lightest[i] < t) {
            add(ViolationKind::path_weight, dag.vertex(i).id,
                "a maximal path ending here carries " + std::to_string(lightest[i]) + " < t");
        }
    }
    return report;
}

namespace {

std::vector<std::size_t> reachable(const CompDag& dag, std::size_t start, bool backwards) {
    std::vector<bool> seen(dag.vertex_count(), false);
    std::vector<std::size_t> stack{start};
    std::vector<std::size_t> out;
    seen[start] = true;
    while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        out.push_back(u);
        for (auto w : backwards ? dag.predecessors(u) : dag.successors(u)) {
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return out;
}

} // namespace

CompDag predecessor_graph(const CompDag& dag, VertexId v) {
    return dag.induced(reachable(dag, dag.index_of(v), true));
}

CompDag successor_graph(const CompDag& dag, VertexId v) {
    return dag.induced(reachable(dag, dag.index_of(v), false));
}

} // namespace partsched
