#include "partsched/patterns.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "partsched/random.hpp"

namespace partsched {

namespace {

std::size_t exact_quota(Fraction share, std::size_t t, std::size_t w, const char* what) {
    if (w == 0) throw std::invalid_argument(std::string(what) + ": w must be at least 1");
    Fraction q = share * static_cast<std::int64_t>(t) / static_cast<std::int64_t>(w);
    if (q.denominator() != 1 || q.numerator() < 0) {
        throw std::invalid_argument(std::string(what) + ": per-processor quota " + std::to_string(q.numerator()) +
                                    "/" + std::to_string(q.denominator()) + " is not a whole number of tasks");
    }
    return static_cast<std::size_t>(q.numerator());
}

// rounds of w singletons each followed by a merge, then a w-way tail with quota t
CompDag lower_bound_rounds(std::size_t w, std::size_t t, const std::vector<std::size_t>& quotas,
                           const std::vector<std::string>& merge_names) {
    if (w == 0) throw std::invalid_argument("lower-bound pattern needs w >= 1");
    if (t == 0) throw std::invalid_argument("lower-bound pattern needs t >= 1");
    CompDag dag(w, t);
    const auto everyone = ProcessorSet::all(w);
    auto single = [w](std::size_t i) { return ProcessorSet::of(w, {static_cast<ProcessorId>(i + 1)}); };

    VertexId next_id = 1;
    std::optional<VertexId> previous_merge;
    for (std::size_t round = 0; round < quotas.size(); ++round) {
        std::vector<VertexId> branch;
        for (std::size_t i = 0; i < w; ++i) {
            VertexId id = next_id++;
            dag.add_vertex(id, quotas[round], single(i),
                           "r" + std::to_string(round + 1) + "." + std::to_string(i + 1));
            if (previous_merge) dag.add_edge(*previous_merge, id, single(i));
            branch.push_back(id);
        }
        VertexId merge = next_id++;
        dag.add_vertex(merge, 0, everyone, merge_names[round]);
        for (std::size_t i = 0; i < w; ++i) dag.add_edge(branch[i], merge, single(i));
        previous_merge = merge;
    }
    for (std::size_t i = 0; i < w; ++i) {
        VertexId id = next_id++;
        dag.add_vertex(id, t, single(i), "tail." + std::to_string(i + 1));
        dag.add_edge(*previous_merge, id, single(i));
    }
    return dag;
}

} // namespace

CompDag gen_single_group(std::size_t p, std::size_t t) {
    if (p == 0 || t == 0) throw std::invalid_argument("gen_single_group: p and t must be positive");
    CompDag dag(p, t);
    dag.add_vertex(1, t, ProcessorSet::all(p), "all");
    return dag;
}

CompDag gen_isolated(std::size_t p, std::size_t t) {
    if (p == 0 || t == 0) throw std::invalid_argument("gen_isolated: p and t must be positive");
    CompDag dag(p, t);
    for (std::size_t i = 1; i <= p; ++i) {
        dag.add_vertex(static_cast<VertexId>(i), t, ProcessorSet::of(p, {static_cast<ProcessorId>(i)}),
                       "p" + std::to_string(i));
    }
    return dag;
}

CompDag gen_two_level_lb(std::size_t w, std::size_t t, Fraction alpha) {
    if (alpha <= 0 || alpha > 1) throw std::invalid_argument("gen_two_level_lb: alpha must lie in (0, 1]");
    const std::size_t first = exact_quota(alpha, t, w, "gen_two_level_lb");
    const std::size_t second = exact_quota(1 - alpha, t, w, "gen_two_level_lb");
    return lower_bound_rounds(w, t, {first, second}, {"S", "U"});
}

CompDag gen_k_level_lb(std::size_t w, std::size_t t, const std::vector<Fraction>& fractions) {
    if (fractions.empty()) throw std::invalid_argument("gen_k_level_lb: at least one level is required");
    Fraction total = std::accumulate(fractions.begin(), fractions.end(), Fraction(0));
    if (total != Fraction(1)) throw std::invalid_argument("gen_k_level_lb: fractions must sum to 1");
    std::vector<std::size_t> quotas;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < fractions.size(); ++i) {
        if (fractions[i] <= 0 || fractions[i] > 1) {
            throw std::invalid_argument("gen_k_level_lb: every fraction must lie in (0, 1]");
        }
        quotas.push_back(exact_quota(fractions[i], t, w, "gen_k_level_lb"));
        names.push_back("S" + std::to_string(i + 1));
    }
    return lower_bound_rounds(w, t, quotas, names);
}

CompDag gen_random(const RandomPatternSpec& spec, std::uint64_t seed) {
    if (spec.p == 0 || spec.t == 0 || spec.depth == 0) {
        throw std::invalid_argument("gen_random: p, t and depth must be positive");
    }
    if (spec.merge_probability < 0 || spec.merge_probability > 1 || spec.split_probability < 0 ||
        spec.split_probability > 1) {
        throw std::invalid_argument("gen_random: probabilities must lie in [0, 1]");
    }
    RandomStream rng(seed);
    const std::size_t p = spec.p;
    const std::size_t quota_cap = std::min(spec.max_quota, spec.t);
    auto draw_quota = [&] { return rng.uniform_index(quota_cap + 1); };

    CompDag dag(p, spec.t);
    VertexId next_id = 1;

    // initial partition: cut a shuffled processor list at random gaps
    std::vector<ProcessorId> procs(p);
    std::iota(procs.begin(), procs.end(), 1);
    for (std::size_t i = p; i > 1; --i) std::swap(procs[i - 1], procs[rng.uniform_index(i)]);
    std::vector<std::size_t> live;
    {
        ProcessorSet group(p);
        for (std::size_t i = 0; i < p; ++i) {
            group.insert(procs[i]);
            if (i + 1 == p || rng.bernoulli(spec.split_probability)) {
                live.push_back(dag.add_vertex(next_id++, draw_quota(), group));
                group = ProcessorSet(p);
            }
        }
    }

    struct Piece {
        std::size_t origin; // vertex index
        ProcessorSet procs;
    };
    for (std::size_t layer = 1; layer < spec.depth; ++layer) {
        std::vector<Piece> pieces;
        for (auto v : live) {
            auto members = dag.vertex(v).group.members();
            if (members.size() > 1 && rng.bernoulli(spec.split_probability)) {
                for (std::size_t i = members.size(); i > 1; --i) {
                    std::swap(members[i - 1], members[rng.uniform_index(i)]);
                }
                // at least one cut
                std::size_t forced = rng.uniform_index(members.size() - 1);
                ProcessorSet piece(p);
                for (std::size_t i = 0; i < members.size(); ++i) {
                    piece.insert(members[i]);
                    if (i + 1 == members.size() || i == forced || rng.bernoulli(0.5)) {
                        pieces.push_back(Piece{v, piece});
                        piece = ProcessorSet(p);
                    }
                }
            } else {
                pieces.push_back(Piece{v, dag.vertex(v).group});
            }
        }
        for (std::size_t i = pieces.size(); i > 1; --i) std::swap(pieces[i - 1], pieces[rng.uniform_index(i)]);

        std::vector<std::vector<Piece>> groups;
        for (auto& piece : pieces) {
            if (groups.empty() || !rng.bernoulli(spec.merge_probability)) groups.emplace_back();
            groups.back().push_back(std::move(piece));
        }

        std::vector<std::size_t> next_live;
        for (const auto& members : groups) {
            if (members.size() == 1 && members[0].procs == dag.vertex(members[0].origin).group) {
                next_live.push_back(members[0].origin); // unchanged group continues
                continue;
            }
            ProcessorSet group(p);
            for (const auto& piece : members) group |= piece.procs;
            const VertexId id = next_id++;
            const std::size_t index = dag.add_vertex(id, draw_quota(), group);
            // one edge per contributing origin, carrying everything that came from it
            std::vector<std::size_t> origins;
            for (const auto& piece : members) origins.push_back(piece.origin);
            std::sort(origins.begin(), origins.end());
            origins.erase(std::unique(origins.begin(), origins.end()), origins.end());
            for (auto origin : origins) {
                dag.add_edge(dag.vertex(origin).id, id, dag.vertex(origin).group & group);
            }
            next_live.push_back(index);
        }
        std::sort(next_live.begin(), next_live.end());
        live = std::move(next_live);
    }

    // pad sinks so the lightest path into each reaches t
    const auto order = dag.require_topological_order();
    std::vector<std::size_t> lightest(dag.vertex_count(), 0);
    for (auto v : order) {
        std::size_t best = 0;
        bool any = false;
        for (auto u : dag.predecessors(v)) {
            best = any ? std::min(best, lightest[u]) : lightest[u];
            any = true;
        }
        lightest[v] = best + dag.vertex(v).h;
        if (dag.out_edges(v).empty() && lightest[v] < spec.t) {
            dag.vertex(v).h += spec.t - lightest[v];
            lightest[v] = spec.t;
        }
    }
    return dag;
}

std::vector<std::size_t> level_sizes_for(std::size_t t, const std::vector<Fraction>& fractions) {
    if (fractions.empty()) throw std::invalid_argument("at least one level fraction is required");
    Fraction total = std::accumulate(fractions.begin(), fractions.end(), Fraction(0));
    if (total != Fraction(1)) throw std::invalid_argument("level fractions must sum to 1");
    std::vector<std::size_t> sizes;
    for (const auto& f : fractions) {
        Fraction n = f * static_cast<std::int64_t>(t);
        if (n.denominator() != 1 || n.numerator() <= 0) {
            throw std::invalid_argument("every level must hold a positive whole number of tasks");
        }
        sizes.push_back(static_cast<std::size_t>(n.numerator()));
    }
    return sizes;
}

Fraction fraction_of_tasks(double alpha, std::size_t t) {
    if (t == 0) throw std::invalid_argument("t must be positive");
    const double scaled = alpha * static_cast<double>(t);
    const double rounded = std::round(scaled);
    if (std::abs(scaled - rounded) > 1e-9 * std::max(1.0, scaled)) {
        throw std::invalid_argument("alpha * t = " + std::to_string(scaled) + " is not a whole number of tasks");
    }
    return Fraction(static_cast<std::int64_t>(rounded), static_cast<std::int64_t>(t));
}

} // namespace partsched
