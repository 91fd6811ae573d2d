#pragma once

// Deliberately naive re-implementation of every measure, working on plain
// string triples with full scans and no indexes. Used as the independent
// oracle the optimized library is checked against; keep it free of any
// dependency on the library's query path.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "ontomcq/term.hpp"

namespace ontomcq::testsupport {

struct NCondition {
    // kind: "concept" | "out" | "in" | "data"
    std::string kind;
    std::string predicate;
    std::string filler;  // instance IRI or literal repr

    friend auto operator<=>(const NCondition&, const NCondition&) = default;
};

struct NaiveGraph {
    std::set<std::tuple<std::string, std::string, std::string>> objectTriples;  // materialized
    std::set<std::tuple<std::string, std::string, std::string>> dataTriples;    // literal repr
    std::map<std::string, std::set<std::string>> types;  // instance -> concepts, closed
    std::set<std::string> concepts, objectRoles, datatypeRoles, instances;
    std::map<std::string, std::set<std::string>> subclassParents;  // direct
    std::map<std::string, std::set<std::string>> subpropParents;   // direct
    std::map<std::string, std::set<std::string>> domains, ranges;
};

std::string naive_literal_repr(const Term& t);

NaiveGraph naive_build(const std::vector<RawTriple>& triples);

bool naive_leq_concept(const NaiveGraph& g, const std::string& a, const std::string& b);
bool naive_leq_role(const NaiveGraph& g, const std::string& a, const std::string& b);

bool naive_satisfies(const NaiveGraph& g, const std::string& x, const NCondition& c);
std::set<std::string> naive_satisfiers(const NaiveGraph& g, const NCondition& c);
std::set<NCondition> naive_profile(const NaiveGraph& g, const std::string& x);
std::size_t naive_instance_popularity(const NaiveGraph& g, const NCondition& p, const std::string& i);
double naive_predicate_popularity(const NaiveGraph& g, const NCondition& p);
std::size_t naive_connectivity(const NaiveGraph& g, const std::string& x);

struct NStem {
    std::string pivot;
    std::vector<NCondition> conditions;
};

/// Chain-based depth by exhaustive subset enumeration over the pivot's
/// concept set (or incident-role set).
double naive_depth_ratio(const NaiveGraph& g, const NCondition& c, const NStem& s);
double naive_d_expert(const NaiveGraph& g, const NStem& s);
double naive_d_beginner(const NaiveGraph& g, const NStem& s);
double naive_instance_similarity(const NaiveGraph& g, const std::string& k, const std::string& d,
                                 const NStem& s);

/// Nested-loop stem enumeration for one shape given as slot kind names
/// ("type"/"out"/"in"/"data"); returns distinct (pivot, condition set) pairs.
std::set<std::pair<std::string, std::set<NCondition>>> naive_enumerate(
    const NaiveGraph& g, const std::vector<std::string>& slotKinds);

std::set<std::string> naive_potential_set(const NaiveGraph& g, const NStem& s);

}  // namespace ontomcq::testsupport
