#include "crp/depgraph.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <set>

namespace crp {

DepGraph::DepGraph(std::vector<Literal> vertices, std::vector<std::pair<Literal, Literal>> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const auto& [to, from] : edges_) succ_[from].push_back(to);
}

bool DepGraph::has_vertex(const Literal& l) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), l);
}

bool DepGraph::reachable(const Literal& to, const Literal& from) const {
    std::set<Literal> seen;
    std::deque<Literal> queue;
    if (auto it = succ_.find(from); it != succ_.end())
        for (const auto& next : it->second) {
            if (next == to) return true;
            if (seen.insert(next).second) queue.push_back(next);
        }
    while (!queue.empty()) {
        Literal cur = queue.front();
        queue.pop_front();
        if (auto it = succ_.find(cur); it != succ_.end())
            for (const auto& next : it->second) {
                if (next == to) return true;
                if (seen.insert(next).second) queue.push_back(next);
            }
    }
    return false;
}

DepGraph build_graph(const Program& p) {
    std::vector<Literal> vertices(literal_universe(p).literals());
    std::vector<std::pair<Literal, Literal>> edges;
    for (const auto& r : p.rules())
        for (const auto& h : r.head())
            for (const auto& b : r.pos_body()) edges.emplace_back(h, b);
    return DepGraph(std::move(vertices), std::move(edges));
}

namespace {

// Index-based view of the graph for the traversal algorithms.
struct IndexedGraph {
    std::vector<Literal> vertices;
    std::vector<std::vector<int>> succ;  // succ[from] = heads one step away

    explicit IndexedGraph(const DepGraph& g) : vertices(g.vertices()), succ(vertices.size()) {
        for (const auto& [to, from] : g.edges()) succ[index_of(from)].push_back(index_of(to));
    }

    int index_of(const Literal& l) const {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), l);
        return static_cast<int>(it - vertices.begin());
    }
};

// Strongly connected components, iterative Tarjan. Returns one
// component id per vertex.
std::vector<int> scc_ids(const IndexedGraph& g) {
    const int n = static_cast<int>(g.vertices.size());
    std::vector<int> index(n, -1), lowlink(n, 0), component(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    int next_index = 0, next_component = 0;

    struct Frame {
        int vertex;
        std::size_t child;
    };
    for (int start = 0; start < n; ++start) {
        if (index[start] != -1) continue;
        std::vector<Frame> frames{{start, 0}};
        index[start] = lowlink[start] = next_index++;
        stack.push_back(start);
        on_stack[start] = true;
        while (!frames.empty()) {
            auto& [v, child] = frames.back();
            if (child < g.succ[v].size()) {
                int w = g.succ[v][child++];
                if (index[w] == -1) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[v] = std::min(lowlink[v], index[w]);
                }
            } else {
                if (lowlink[v] == index[v]) {
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        component[w] = next_component;
                    } while (w != v);
                    ++next_component;
                }
                int finished = v;
                frames.pop_back();
                if (!frames.empty())
                    lowlink[frames.back().vertex] =
                        std::min(lowlink[frames.back().vertex], lowlink[finished]);
            }
        }
    }
    return component;
}

}  // namespace

bool is_acyclic(const DepGraph& g) {
    IndexedGraph ig(g);
    const int n = static_cast<int>(ig.vertices.size());
    std::vector<int> indegree(n, 0);
    for (const auto& row : ig.succ)
        for (int to : row) ++indegree[to];
    std::deque<int> ready;
    for (int v = 0; v < n; ++v)
        if (indegree[v] == 0) ready.push_back(v);
    int removed = 0;
    while (!ready.empty()) {
        int v = ready.front();
        ready.pop_front();
        ++removed;
        for (int to : ig.succ[v])
            if (--indegree[to] == 0) ready.push_back(to);
    }
    return removed == n;
}

bool depends(const DepGraph& g, const Literal& l1, const Literal& l2) {
    if (!g.has_vertex(l1) || !g.has_vertex(l2)) return false;
    return g.reachable(l1, l2);
}

bool has_head_cycle(const Program& p, const DepGraph& g) {
    IndexedGraph ig(g);
    std::vector<int> component = scc_ids(ig);
    for (const auto& r : p.rules()) {
        const auto& head = r.head();
        for (std::size_t i = 0; i < head.size(); ++i)
            for (std::size_t j = i + 1; j < head.size(); ++j)
                if (component[ig.index_of(head[i])] == component[ig.index_of(head[j])])
                    return true;
    }
    return false;
}

bool is_hcf(const Program& p) { return !has_head_cycle(p, build_graph(p)); }

bool is_cr_independent(const Program& p) {
    std::vector<Literal> cr_heads;
    for (const auto& r : p.cr_rules()) cr_heads.push_back(r.head().front());
    DepGraph g = build_graph(p);
    for (const auto& l1 : cr_heads)
        for (const auto& l2 : cr_heads)
            if (depends(g, l1, l2)) return false;
    return true;
}

std::string to_dot(const DepGraph& g) {
    std::string out = "digraph dependencies {\n";
    for (const auto& v : g.vertices()) out += "  \"" + to_string(v) + "\";\n";
    for (const auto& [to, from] : g.edges())
        out += "  \"" + to_string(from) + "\" -> \"" + to_string(to) + "\";\n";
    out += "}\n";
    return out;
}

std::string to_json(const DepGraph& g) {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : g.vertices()) j["vertices"].push_back(to_string(v));
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [to, from] : g.edges())
        j["edges"].push_back({to_string(to), to_string(from)});
    return j.dump(2);
}

}  // namespace crp
