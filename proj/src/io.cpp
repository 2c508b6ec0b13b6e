#include "partsched/io.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace partsched {

using nlohmann::json;

namespace {

std::size_t count_from(const json& value, const char* field) {
    if (!value.is_number_unsigned()) {
        throw std::invalid_argument(std::string("malformed pattern: ") + field + " must be a non-negative integer");
    }
    return value.get<std::size_t>();
}

ProcessorSet processors_from(const json& list, std::size_t p) {
    ProcessorSet s(p);
    for (const auto& id : list) s.insert(id.get<ProcessorId>());
    return s;
}

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

void write_json(const json& doc, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << doc.dump(2) << '\n';
}

} // namespace

json pattern_to_json(const CompDag& dag) {
    json doc;
    doc["p"] = dag.processor_count();
    doc["t"] = dag.task_count();
    doc["vertices"] = json::array();
    for (const auto& v : dag.vertices()) {
        json jv = {{"id", v.id}, {"h", v.h}, {"group", v.group.members()}};
        if (!v.name.empty()) jv["name"] = v.name;
        doc["vertices"].push_back(std::move(jv));
    }
    doc["edges"] = json::array();
    for (const auto& e : dag.edges()) {
        doc["edges"].push_back({{"from", e.from}, {"to", e.to}, {"phi", e.phi.members()}});
    }
    return doc;
}

CompDag pattern_from_json(const json& doc) {
    try {
        const auto p = count_from(doc.at("p"), "p");
        const auto t = count_from(doc.at("t"), "t");
        CompDag dag(p, t);
        for (const auto& jv : doc.at("vertices")) {
            dag.add_vertex(jv.at("id").get<VertexId>(), count_from(jv.at("h"), "h"),
                           processors_from(jv.at("group"), p), jv.value("name", std::string{}));
        }
        if (doc.contains("edges")) {
            for (const auto& je : doc.at("edges")) {
                dag.add_edge(je.at("from").get<VertexId>(), je.at("to").get<VertexId>(),
                             processors_from(je.at("phi"), p));
            }
        }
        return dag;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed pattern: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw std::invalid_argument(std::string("malformed pattern: ") + e.what());
    }
}

json task_graph_to_json(const TaskGraph& graph) {
    const auto& labels = graph.labels();
    if (graph.is_complete_leveled() && std::is_sorted(labels.begin(), labels.end())) {
        return json{{"levels", graph.level_sizes()}};
    }
    json edges = json::array();
    for (auto [u, v] : graph.edges()) edges.push_back({u, v});
    return json{{"t", graph.task_count()}, {"edges", std::move(edges)}};
}

TaskGraph task_graph_from_json(const json& doc) {
    try {
        if (doc.contains("levels")) {
            return TaskGraph::build_leveled(doc.at("levels").get<std::vector<std::size_t>>());
        }
        const auto t = doc.at("t").get<std::size_t>();
        std::vector<TaskEdge> edges;
        if (doc.contains("edges")) {
            for (const auto& e : doc.at("edges")) edges.emplace_back(e.at(0).get<TaskId>(), e.at(1).get<TaskId>());
        }
        return TaskGraph::label_dag(t, edges);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed task graph: ") + e.what());
    }
}

CompDag load_pattern(const std::filesystem::path& path) { return pattern_from_json(read_json(path)); }
void save_pattern(const CompDag& dag, const std::filesystem::path& path) { write_json(pattern_to_json(dag), path); }
TaskGraph load_task_graph(const std::filesystem::path& path) { return task_graph_from_json(read_json(path)); }
void save_task_graph(const TaskGraph& graph, const std::filesystem::path& path) {
    write_json(task_graph_to_json(graph), path);
}

void write_trials_csv(std::ostream& out, const MonteCarloSummary& summary) {
    out << "trial,seed,total_work,terminal_complete\n";
    for (const auto& r : summary.records) {
        out << r.trial << ',' << r.seed << ',' << r.total_work << ',' << (r.terminal_complete ? "true" : "false")
            << '\n';
    }
}

} // namespace partsched
