#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "crp/model.hpp"

namespace crp {

// Literal dependency graph of a program. Vertices are all literals
// occurring in the program; there is an edge (to, from) whenever some
// rule has `to` in its head and `from` in its positive body. Naf
// bodies contribute vertices but no edges. Cr-rules contribute like
// regular rules.
class DepGraph {
public:
    DepGraph() = default;
    DepGraph(std::vector<Literal> vertices, std::vector<std::pair<Literal, Literal>> edges);

    const std::vector<Literal>& vertices() const { return vertices_; }
    /// Edges as (to, from) pairs, sorted.
    const std::vector<std::pair<Literal, Literal>>& edges() const { return edges_; }

    bool has_vertex(const Literal& l) const;
    /// True iff a directed path of length >= 1 leads from `from` to `to`.
    bool reachable(const Literal& to, const Literal& from) const;

    friend bool operator==(const DepGraph& a, const DepGraph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    std::vector<Literal> vertices_;
    std::vector<std::pair<Literal, Literal>> edges_;
    // Forward adjacency: succ_[from] = heads reachable in one step.
    std::map<Literal, std::vector<Literal>> succ_;
};

DepGraph build_graph(const Program& p);

bool is_acyclic(const DepGraph& g);

/// True iff l1 depends on l2: some path of length >= 1 from l2 to l1.
/// Literals outside the graph depend on nothing.
bool depends(const DepGraph& g, const Literal& l1, const Literal& l2);

/// True iff some rule of `p` has two distinct head literals lying on a
/// common cycle of `g` (i.e. in the same nontrivial strongly connected
/// component).
bool has_head_cycle(const Program& p, const DepGraph& g);

bool is_hcf(const Program& p);

/// True iff no literal occurring in a cr-rule head depends on any
/// literal occurring in a cr-rule head (self-dependence included).
bool is_cr_independent(const Program& p);

std::string to_dot(const DepGraph& g);
std::string to_json(const DepGraph& g);

}  // namespace crp
