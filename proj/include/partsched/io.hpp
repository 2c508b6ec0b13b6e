#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "partsched/comp_dag.hpp"
#include "partsched/simulator.hpp"
#include "partsched/task_graph.hpp"

namespace partsched {

/// Pattern file:
///   {"p": int, "t": int,
///    "vertices": [{"id": int, "h": int, "group": [int...], "name"?: str}],
///    "edges": [{"from": int, "to": int, "phi": [int...]}]}
nlohmann::json pattern_to_json(const CompDag& dag);
CompDag pattern_from_json(const nlohmann::json& doc);

/// Task graph file: {"levels": [n1, ..., nk]} or {"t": n, "edges": [[u, v], ...]}.
/// Leveled graphs are written in the compact form.
nlohmann::json task_graph_to_json(const TaskGraph& graph);
TaskGraph task_graph_from_json(const nlohmann::json& doc);

CompDag load_pattern(const std::filesystem::path& path);
void save_pattern(const CompDag& dag, const std::filesystem::path& path);
TaskGraph load_task_graph(const std::filesystem::path& path);
void save_task_graph(const TaskGraph& graph, const std::filesystem::path& path);

/// CSV with header "trial,seed,total_work,terminal_complete".
void write_trials_csv(std::ostream& out, const MonteCarloSummary& summary);

} // namespace partsched
