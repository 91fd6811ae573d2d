#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontomcq/condition.hpp"
#include "ontomcq/parser.hpp"
#include "ontomcq/term.hpp"

namespace ontomcq {

enum class HierarchyKind { Concept, Role };

/// An object-role edge incident to an instance, as (role, other endpoint).
struct Edge {
    TermId role;
    TermId other;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable, indexed triple store.
///
/// Built once from parsed triples; all queries are const and safe to run
/// concurrently. Entailment is deliberately shallow: subclass/subproperty
/// transitive closure, upward type propagation, and declared owl:inverseOf
/// materialization. Subclass/subproperty cycles collapse into equivalence
/// classes with a warning.
class Ontology {
public:
    static Ontology from_triples(std::vector<RawTriple> triples);
    static Ontology load_file(const std::string& path, RdfFormat format);
    static Ontology load(std::istream& in, RdfFormat format);

    // --- term table ---------------------------------------------------
    const Term& term(TermId id) const { return terms_[id]; }
    std::size_t term_count() const { return terms_.size(); }
    /// Id of an already-interned term; kNoTerm when absent.
    TermId find(const Term& t) const;
    TermId find_iri(std::string_view iri) const;
    /// Resolves a full IRI or, failing that, a unique local name. Throws
    /// UnknownIdentifierError when nothing (or more than one IRI) matches.
    TermId resolve(const std::string& identifier) const;

    std::optional<std::string> label(TermId id) const;
    /// rdfs:label if present, else the humanized local name.
    std::string display(TermId id, bool capitalize = true) const;

    // --- vocabulary ----------------------------------------------------
    const std::set<TermId>& concepts() const { return concepts_; }
    const std::set<TermId>& object_roles() const { return objectRoles_; }
    const std::set<TermId>& datatype_roles() const { return datatypeRoles_; }
    const std::set<TermId>& instances() const { return instances_; }
    bool is_instance(TermId id) const { return instances_.count(id) > 0; }
    bool is_blank(TermId id) const { return terms_[id].is_blank(); }

    // --- hierarchy -----------------------------------------------------
    /// a <= b in the reflexive-transitive closure. Unknown identifiers throw.
    bool hierarchy_leq(HierarchyKind kind, TermId a, TermId b) const;
    /// a < b: leq(a, b) and not leq(b, a). Equivalent (cycle-collapsed)
    /// identifiers are not strictly ordered.
    bool hierarchy_lt(HierarchyKind kind, TermId a, TermId b) const;

    // --- instance-level queries -----------------------------------------
    /// Exact set of instances satisfying a condition. Unknown concepts or
    /// roles yield the empty set.
    std::set<TermId> satisfiers(const Condition& c) const;
    bool satisfies(TermId instance, const Condition& c) const;

    /// All conditions an instance satisfies: inherited concept memberships,
    /// one Outgoing per outgoing object edge, one Incoming per incoming
    /// object edge, one DataEquals per datatype triple.
    std::set<Condition> condition_profile(TermId instance) const;

    /// Count of distinct instances j with some object triple (j, R, i) such
    /// that j does not satisfy p. Requires that i satisfies p.
    std::size_t instance_popularity(const Condition& p, TermId instance) const;

    /// Count of distinct instances y pointing at x via an object role where
    /// some concept pair (C_x of x, C_y of y) has C_y not satisfied by x and
    /// the concepts are hierarchy-unrelated.
    std::size_t connectivity(TermId instance) const;

    // --- adjacency -----------------------------------------------------
    /// Closed upward over the concept hierarchy.
    const std::set<TermId>& types_of(TermId instance) const;
    const std::vector<Edge>& outgoing(TermId instance) const;
    const std::vector<Edge>& incoming(TermId instance) const;
    /// Datatype triples of an instance as (role, literal term).
    const std::vector<Edge>& data_of(TermId instance) const;
    /// Distinct subjects of object triples pointing at `instance`.
    const std::set<TermId>& incoming_subjects(TermId instance) const;

    const std::set<TermId>& declared_domains(TermId role) const;
    const std::set<TermId>& declared_ranges(TermId role) const;

    // --- misc ------------------------------------------------------------
    const std::vector<RawTriple>& raw_triples() const { return rawTriples_; }
    std::string serialize() const { return to_ntriples(rawTriples_); }
    const std::vector<std::string>& load_warnings() const { return warnings_; }

    struct Counts {
        std::size_t concepts = 0, objectRoles = 0, datatypeRoles = 0, instances = 0, triples = 0;
    };
    Counts counts() const;

private:
    Ontology() = default;

    TermId intern(const Term& t);
    void build_vocabulary();
    void build_hierarchies();
    void materialize_assertions();
    void require_known(HierarchyKind kind, TermId id) const;
    const std::set<TermId>& ancestors(HierarchyKind kind, TermId id) const;

    std::vector<Term> terms_;
    std::map<Term, TermId> termIndex_;
    std::vector<RawTriple> rawTriples_;  // deduplicated, sorted

    std::set<TermId> concepts_;
    std::set<TermId> objectRoles_;
    std::set<TermId> datatypeRoles_;
    std::set<TermId> instances_;

    // reflexive-transitive ancestor sets (id included)
    std::map<TermId, std::set<TermId>> conceptAncestors_;
    std::map<TermId, std::set<TermId>> roleAncestors_;
    std::map<TermId, std::set<TermId>> inverseOf_;

    std::map<TermId, std::set<TermId>> typesOf_;       // instance -> concepts, closed
    std::map<TermId, std::set<TermId>> membersOf_;     // concept -> instances
    std::map<TermId, std::vector<Edge>> outgoing_;     // materialized object edges
    std::map<TermId, std::vector<Edge>> incoming_;
    std::map<TermId, std::vector<Edge>> dataOf_;
    std::map<TermId, std::set<TermId>> incomingSubjects_;
    std::map<std::pair<TermId, TermId>, std::set<TermId>> outBySubjectOf_;  // (role, object) -> subjects
    std::map<std::pair<TermId, TermId>, std::set<TermId>> outByObjectOf_;   // (role, subject) -> objects
    std::map<std::pair<TermId, TermId>, std::set<TermId>> dataSubjects_;    // (role, literal) -> subjects

    std::map<TermId, std::set<TermId>> domains_;
    std::map<TermId, std::set<TermId>> ranges_;
    std::map<TermId, std::string> labels_;

    std::vector<std::string> warnings_;
};

}  // namespace ontomcq
