#include "crp/transform.hpp"

#include <stdexcept>

#include "crp/depgraph.hpp"

namespace crp {

Program shift(const Program& p) {
    if (!is_acyclic(build_graph(p)))
        throw std::invalid_argument("shifting requires an acyclic program");
    std::vector<Rule> rules;
    for (const auto& r : p.rules()) {
        if (r.kind() == RuleKind::Cr || r.is_nondisjunctive()) {
            rules.push_back(r);
            continue;
        }
        const auto& head = r.head();
        for (std::size_t i = 0; i < head.size(); ++i) {
            std::vector<Literal> neg = r.neg_body();
            for (std::size_t j = 0; j < head.size(); ++j)
                if (j != i) neg.push_back(head[j]);
            rules.emplace_back(r.id(), RuleKind::Regular, std::vector<Literal>{head[i]},
                               r.pos_body(), std::move(neg));
        }
    }
    return Program(std::move(rules));
}

}  // namespace crp
