#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace crp {

/// True iff `name` matches the atom pattern [a-z][a-zA-Z0-9_]*.
bool is_valid_atom_name(std::string_view name);

// Propositional symbol. Construction validates the name pattern.
class Atom {
public:
    explicit Atom(std::string name);

    const std::string& name() const { return name_; }

    friend bool operator==(const Atom& a, const Atom& b) { return a.name_ == b.name_; }
    friend auto operator<=>(const Atom& a, const Atom& b) { return a.name_ <=> b.name_; }

private:
    std::string name_;
};

// An atom or its strong negation. The canonical order is
// (negated flag, atom name), so positive literals sort first.
class Literal {
public:
    Literal(Atom atom, bool negated = false) : atom_(std::move(atom)), negated_(negated) {}
    explicit Literal(std::string atom_name, bool negated = false)
        : atom_(std::move(atom_name)), negated_(negated) {}

    const Atom& atom() const { return atom_; }
    bool negated() const { return negated_; }

    friend bool operator==(const Literal& a, const Literal& b) {
        return a.negated_ == b.negated_ && a.atom_ == b.atom_;
    }
    friend auto operator<=>(const Literal& a, const Literal& b) {
        if (auto c = a.negated_ <=> b.negated_; c != 0) return c;
        return a.atom_ <=> b.atom_;
    }

private:
    Atom atom_;
    bool negated_;
};

/// Flips the strong-negation flag; involutive.
Literal complement(const Literal& l);

// A literal or its default negation (`not l`).
struct ExtendedLiteral {
    Literal literal;
    bool naf = false;  // true = "not literal"

    friend bool operator==(const ExtendedLiteral&, const ExtendedLiteral&) = default;
};

enum class RuleKind { Regular, Cr };

// One rule: disjunctive head, positive body, default-negated body.
// Cr-rules carry exactly one head literal. Duplicate literals within
// head or either body are dropped at construction (set semantics),
// keeping first occurrence order.
class Rule {
public:
    Rule(int id, RuleKind kind, std::vector<Literal> head, std::vector<Literal> pos_body,
         std::vector<Literal> neg_body);

    int id() const { return id_; }
    RuleKind kind() const { return kind_; }
    const std::vector<Literal>& head() const { return head_; }
    const std::vector<Literal>& pos_body() const { return pos_body_; }
    const std::vector<Literal>& neg_body() const { return neg_body_; }

    bool is_fact() const { return pos_body_.empty() && neg_body_.empty(); }
    bool is_nondisjunctive() const { return head_.size() == 1; }
    bool is_naf_free() const { return neg_body_.empty(); }

    /// Copy with a different id; everything else unchanged.
    Rule with_id(int id) const;

    friend bool operator==(const Rule&, const Rule&) = default;

private:
    int id_;
    RuleKind kind_;
    std::vector<Literal> head_;
    std::vector<Literal> pos_body_;
    std::vector<Literal> neg_body_;
};

// Ordered rule list. Construction renumbers rule ids to 0..n-1 in order,
// so ids always equal positions.
class Program {
public:
    Program() = default;
    explicit Program(std::vector<Rule> rules);

    const std::vector<Rule>& rules() const { return rules_; }
    const Rule& rule(int id) const;
    std::size_t size() const { return rules_.size(); }
    bool empty() const { return rules_.empty(); }

    /// Regular rules, original ids kept.
    std::vector<Rule> regular_rules() const;
    /// Cr-rules, original ids kept.
    std::vector<Rule> cr_rules() const;

    bool is_regular_only() const;
    bool is_nondisjunctive() const;
    bool is_naf_free() const;

    friend bool operator==(const Program&, const Program&) = default;

private:
    std::vector<Rule> rules_;
};

// A set of literals (candidate belief set). Stored sorted in canonical
// literal order without duplicates. Contexts may be inconsistent as
// values; semantic operations reject inconsistent ones.
class Context {
public:
    Context() = default;
    explicit Context(std::vector<Literal> literals);
    Context(std::initializer_list<Literal> literals);

    bool contains(const Literal& l) const;
    bool subset_of(const Context& other) const;
    bool proper_subset_of(const Context& other) const;

    std::size_t size() const { return lits_.size(); }
    bool empty() const { return lits_.empty(); }
    const std::vector<Literal>& literals() const { return lits_; }

    auto begin() const { return lits_.begin(); }
    auto end() const { return lits_.end(); }

    /// Copy with `l` inserted.
    Context plus(const Literal& l) const;

    friend bool operator==(const Context&, const Context&) = default;

private:
    std::vector<Literal> lits_;
};

/// True iff no literal and its complement are both members.
bool is_consistent(const Context& c);

Context intersect(const Context& a, const Context& b);
Context unite(const Context& a, const Context& b);

/// Deterministic context order: cardinality first, then lexicographic
/// over the canonical literal sequence.
bool canonical_less(const Context& a, const Context& b);

/// Every literal occurring in any head, positive body or naf body of `p`.
Context literal_universe(const Program& p);

std::string to_string(const Literal& l);
std::string to_string(const ExtendedLiteral& e);
std::string to_string(const Context& c);
/// Surface syntax of one rule, e.g. "a | b :- c, not d." or "e :+."
std::string to_string(const Rule& r);

std::ostream& operator<<(std::ostream& os, const Literal& l);
std::ostream& operator<<(std::ostream& os, const Context& c);
std::ostream& operator<<(std::ostream& os, const Rule& r);

}  // namespace crp
