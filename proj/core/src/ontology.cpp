#include "ontomcq/ontology.hpp"

#include <algorithm>
#include <deque>
#include <fstream>

#include "ontomcq/errors.hpp"
#include "ontomcq/log.hpp"
#include "ontomcq/vocab.hpp"

namespace ontomcq {

namespace {

const std::set<TermId> kEmptyIdSet;
const std::vector<Edge> kEmptyEdges;

bool is_vocab_predicate(const std::string& iri) {
    return iri == vocab::kRdfType || iri == vocab::kRdfsSubClassOf ||
           iri == vocab::kRdfsSubPropertyOf || iri == vocab::kRdfsDomain ||
           iri == vocab::kRdfsRange || iri == vocab::kRdfsLabel || iri == vocab::kOwlInverseOf;
}

bool is_class_declaration_object(const std::string& iri) {
    return iri == vocab::kOwlClass || iri == vocab::kRdfsClass;
}

}  // namespace

Ontology Ontology::load_file(const std::string& path, RdfFormat format) {
    return from_triples(parse_rdf_file(path, format));
}

Ontology Ontology::load(std::istream& in, RdfFormat format) {
    return from_triples(parse_rdf(in, format));
}

TermId Ontology::intern(const Term& t) {
    const auto it = termIndex_.find(t);
    if (it != termIndex_.end()) return it->second;
    const TermId id = static_cast<TermId>(terms_.size());
    terms_.push_back(t);
    termIndex_.emplace(t, id);
    return id;
}

TermId Ontology::find(const Term& t) const {
    const auto it = termIndex_.find(t);
    return it == termIndex_.end() ? kNoTerm : it->second;
}

TermId Ontology::find_iri(std::string_view iri) const {
    return find(Term{TermKind::Iri, std::string(iri), "", ""});
}

TermId Ontology::resolve(const std::string& identifier) const {
    const TermId direct = find_iri(identifier);
    if (direct != kNoTerm) return direct;
    TermId match = kNoTerm;
    for (TermId id = 0; id < terms_.size(); ++id) {
        if (terms_[id].kind != TermKind::Iri) continue;
        if (iri_local_name(terms_[id].lexical) == identifier) {
            if (match != kNoTerm)
                throw UnknownIdentifierError(identifier + " (ambiguous local name)");
            match = id;
        }
    }
    if (match == kNoTerm) throw UnknownIdentifierError(identifier);
    return match;
}

std::optional<std::string> Ontology::label(TermId id) const {
    const auto it = labels_.find(id);
    if (it == labels_.end()) return std::nullopt;
    return it->second;
}

std::string Ontology::display(TermId id, bool capitalize) const {
    if (const auto l = label(id)) return *l;
    const Term& t = terms_[id];
    const std::string local = t.is_literal() ? t.lexical : iri_local_name(t.lexical);
    if (t.is_literal()) return local;  // literals render verbatim
    return humanize(local, capitalize);
}

Ontology Ontology::from_triples(std::vector<RawTriple> triples) {
    Ontology o;
    std::sort(triples.begin(), triples.end());
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
    o.rawTriples_ = std::move(triples);
    for (const auto& t : o.rawTriples_) {
        o.intern(t.subject);
        o.intern(t.predicate);
        o.intern(t.object);
    }
    o.build_vocabulary();
    o.build_hierarchies();
    o.materialize_assertions();
    return o;
}

void Ontology::build_vocabulary() {
    std::map<TermId, std::set<TermId>> subClassEdges;   // child -> parents (kept for later)
    std::map<TermId, std::set<TermId>> subPropEdges;

    auto id_of = [&](const Term& t) { return termIndex_.at(t); };

    for (const auto& t : rawTriples_) {
        if (t.predicate.kind != TermKind::Iri) continue;
        const std::string& p = t.predicate.lexical;
        const TermId sid = id_of(t.subject);
        if (p == vocab::kRdfType && t.object.kind == TermKind::Iri) {
            const std::string& obj = t.object.lexical;
            if (is_class_declaration_object(obj)) {
                concepts_.insert(sid);
            } else if (obj == vocab::kOwlObjectProperty) {
                objectRoles_.insert(sid);
            } else if (obj == vocab::kOwlDatatypeProperty) {
                datatypeRoles_.insert(sid);
            } else if (obj != vocab::kOwlThing && obj != vocab::kRdfProperty) {
                concepts_.insert(id_of(t.object));  // concept implied by use
            }
        } else if (p == vocab::kRdfsSubClassOf && t.object.kind == TermKind::Iri) {
            concepts_.insert(sid);
            concepts_.insert(id_of(t.object));
        } else if (p == vocab::kRdfsSubPropertyOf && t.object.kind == TermKind::Iri) {
            // partition resolved after declarations are known
        } else if (p == vocab::kRdfsDomain && t.object.kind == TermKind::Iri) {
            concepts_.insert(id_of(t.object));
            domains_[sid].insert(id_of(t.object));
        } else if (p == vocab::kRdfsRange && t.object.kind == TermKind::Iri) {
            concepts_.insert(id_of(t.object));
            ranges_[sid].insert(id_of(t.object));
        } else if (p == vocab::kRdfsLabel && t.object.kind == TermKind::Literal) {
            labels_.emplace(sid, t.object.lexical);  // first label wins
        }
    }

    // roles implied by use; object vs datatype follows the object term kind
    for (const auto& t : rawTriples_) {
        if (t.predicate.kind != TermKind::Iri || is_vocab_predicate(t.predicate.lexical)) continue;
        const TermId pid = id_of(t.predicate);
        if (objectRoles_.count(pid) || datatypeRoles_.count(pid)) continue;
        if (t.object.kind == TermKind::Literal)
            datatypeRoles_.insert(pid);
        else
            objectRoles_.insert(pid);
    }
    for (const auto& t : rawTriples_) {
        if (t.predicate.kind != TermKind::Iri) continue;
        const std::string& p = t.predicate.lexical;
        if (p == vocab::kRdfsSubPropertyOf && t.object.kind == TermKind::Iri) {
            const TermId a = id_of(t.subject), b = id_of(t.object);
            // endpoints default to object roles when otherwise undeclared
            if (!datatypeRoles_.count(a)) objectRoles_.insert(a);
            if (!datatypeRoles_.count(b)) objectRoles_.insert(b);
        } else if (p == vocab::kOwlInverseOf && t.object.kind == TermKind::Iri) {
            const TermId a = id_of(t.subject), b = id_of(t.object);
            objectRoles_.insert(a);
            objectRoles_.insert(b);
            inverseOf_[a].insert(b);
            inverseOf_[b].insert(a);
        }
    }
    // a role declared both ways counts as an object role
    for (const TermId r : objectRoles_) datatypeRoles_.erase(r);
}

void Ontology::build_hierarchies() {
    auto id_of = [&](const Term& t) { return termIndex_.at(t); };

    std::map<TermId, std::set<TermId>> classParents, propParents;
    for (const auto& t : rawTriples_) {
        if (t.predicate.kind != TermKind::Iri || t.object.kind != TermKind::Iri) continue;
        if (t.predicate.lexical == vocab::kRdfsSubClassOf)
            classParents[id_of(t.subject)].insert(id_of(t.object));
        else if (t.predicate.lexical == vocab::kRdfsSubPropertyOf)
            propParents[id_of(t.subject)].insert(id_of(t.object));
    }

    auto close = [&](const std::set<TermId>& nodes, const std::map<TermId, std::set<TermId>>& parents,
                     std::map<TermId, std::set<TermId>>& out, const char* what) {
        std::set<TermId> cyclic;
        for (const TermId start : nodes) {
            std::set<TermId>& anc = out[start];
            anc.insert(start);
            std::deque<TermId> work{start};
            while (!work.empty()) {
                const TermId cur = work.front();
                work.pop_front();
                const auto it = parents.find(cur);
                if (it == parents.end()) continue;
                for (const TermId p : it->second)
                    if (anc.insert(p).second) work.push_back(p);
            }
        }
        for (const TermId a : nodes) {
            for (const TermId b : out[a]) {
                if (b != a && out.count(b) && out[b].count(a)) {
                    cyclic.insert(a);
                    cyclic.insert(b);
                }
            }
        }
        if (!cyclic.empty()) {
            std::string names;
            for (const TermId id : cyclic) {
                if (!names.empty()) names += ", ";
                names += terms_[id].lexical;
            }
            warnings_.push_back(std::string("cyclic ") + what +
                                " declarations collapsed into an equivalence class: " + names);
        }
    };

    close(concepts_, classParents, conceptAncestors_, "subclass");
    std::set<TermId> allRoles = objectRoles_;
    allRoles.insert(datatypeRoles_.begin(), datatypeRoles_.end());
    close(allRoles, propParents, roleAncestors_, "subproperty");

    for (const auto& w : warnings_) log::warn(w);
}

void Ontology::materialize_assertions() {
    auto id_of = [&](const Term& t) { return termIndex_.at(t); };

    // direct types, then upward closure
    for (const auto& t : rawTriples_) {
        if (t.predicate.kind != TermKind::Iri || t.predicate.lexical != vocab::kRdfType) continue;
        if (t.object.kind != TermKind::Iri) continue;
        const TermId cid = id_of(t.object);
        if (!concepts_.count(cid)) continue;
        const TermId sid = id_of(t.subject);
        for (const TermId super : conceptAncestors_.at(cid)) typesOf_[sid].insert(super);
    }

    // plain assertions
    std::vector<std::array<TermId, 3>> objectAsserted, dataAsserted;
    for (const auto& t : rawTriples_) {
        if (t.predicate.kind != TermKind::Iri || is_vocab_predicate(t.predicate.lexical)) continue;
        const TermId s = id_of(t.subject), p = id_of(t.predicate), ob = id_of(t.object);
        if (t.object.kind == TermKind::Literal)
            dataAsserted.push_back({s, p, ob});
        else
            objectAsserted.push_back({s, p, ob});
    }

    // instance set: endpoints of assertions and typed subjects, minus vocabulary
    for (const auto& [sid, types] : typesOf_) instances_.insert(sid);
    for (const auto& [s, p, ob] : objectAsserted) {
        instances_.insert(s);
        instances_.insert(ob);
    }
    for (const auto& [s, p, ob] : dataAsserted) instances_.insert(s);
    for (const TermId c : concepts_) instances_.erase(c);
    for (const TermId r : objectRoles_) instances_.erase(r);
    for (const TermId r : datatypeRoles_) instances_.erase(r);

    for (const TermId i : instances_)
        if (terms_[i].is_blank())
            log::debug("blank-node instance recorded: _:" + terms_[i].lexical);

    // subproperty + inverse closure over object assertions
    std::set<std::array<TermId, 3>> closed;
    std::deque<std::array<TermId, 3>> work;
    for (const auto& t : objectAsserted)
        if (instances_.count(t[0]) && instances_.count(t[2])) work.push_back(t);
    while (!work.empty()) {
        const auto t = work.front();
        work.pop_front();
        if (!closed.insert(t).second) continue;
        const auto anc = roleAncestors_.find(t[1]);
        if (anc != roleAncestors_.end())
            for (const TermId super : anc->second)
                if (super != t[1]) work.push_back({t[0], super, t[2]});
        const auto inv = inverseOf_.find(t[1]);
        if (inv != inverseOf_.end())
            for (const TermId q : inv->second) work.push_back({t[2], q, t[0]});
    }

    for (const auto& [s, p, ob] : closed) {
        outgoing_[s].push_back({p, ob});
        incoming_[ob].push_back({p, s});
        incomingSubjects_[ob].insert(s);
        outBySubjectOf_[{p, ob}].insert(s);
        outByObjectOf_[{p, s}].insert(ob);
    }

    std::set<std::array<TermId, 3>> dataClosed;
    for (const auto& [s, p, ob] : dataAsserted) {
        if (!instances_.count(s)) continue;
        const auto anc = roleAncestors_.find(p);
        if (anc != roleAncestors_.end())
            for (const TermId super : anc->second) dataClosed.insert({s, super, ob});
        else
            dataClosed.insert({s, p, ob});
    }
    for (const auto& [s, p, ob] : dataClosed) {
        dataOf_[s].push_back({p, ob});
        dataSubjects_[{p, ob}].insert(s);
    }

    for (auto& [k, v] : outgoing_) std::sort(v.begin(), v.end());
    for (auto& [k, v] : incoming_) std::sort(v.begin(), v.end());
    for (auto& [k, v] : dataOf_) std::sort(v.begin(), v.end());

    // membership index over closed types
    for (const auto& [i, types] : typesOf_) {
        if (!instances_.count(i)) continue;
        for (const TermId c : types) membersOf_[c].insert(i);
    }
}

void Ontology::require_known(HierarchyKind kind, TermId id) const {
    const bool known =
        id != kNoTerm && id < terms_.size() &&
        (kind == HierarchyKind::Concept ? concepts_.count(id) > 0
                                        : objectRoles_.count(id) > 0 || datatypeRoles_.count(id) > 0);
    if (!known) {
        throw UnknownIdentifierError(id != kNoTerm && id < terms_.size() ? terms_[id].lexical
                                                                         : "<no such term>");
    }
}

const std::set<TermId>& Ontology::ancestors(HierarchyKind kind, TermId id) const {
    const auto& m = kind == HierarchyKind::Concept ? conceptAncestors_ : roleAncestors_;
    const auto it = m.find(id);
    return it == m.end() ? kEmptyIdSet : it->second;
}

bool Ontology::hierarchy_leq(HierarchyKind kind, TermId a, TermId b) const {
    require_known(kind, a);
    require_known(kind, b);
    return ancestors(kind, a).count(b) > 0;
}

bool Ontology::hierarchy_lt(HierarchyKind kind, TermId a, TermId b) const {
    return hierarchy_leq(kind, a, b) && !hierarchy_leq(kind, b, a);
}

std::set<TermId> Ontology::satisfiers(const Condition& c) const {
    auto from_index = [](const auto& index, std::pair<TermId, TermId> key) -> std::set<TermId> {
        const auto it = index.find(key);
        return it == index.end() ? std::set<TermId>{} : it->second;
    };
    switch (c.kind) {
        case Condition::Kind::Concept: {
            const auto it = membersOf_.find(c.predicate);
            return it == membersOf_.end() ? std::set<TermId>{} : it->second;
        }
        case Condition::Kind::Outgoing:
            return from_index(outBySubjectOf_, {c.predicate, c.filler});
        case Condition::Kind::Incoming:
            return from_index(outByObjectOf_, {c.predicate, c.filler});
        default:
            return from_index(dataSubjects_, {c.predicate, c.filler});
    }
}

bool Ontology::satisfies(TermId instance, const Condition& c) const {
    switch (c.kind) {
        case Condition::Kind::Concept: {
            const auto it = typesOf_.find(instance);
            return it != typesOf_.end() && it->second.count(c.predicate) > 0;
        }
        case Condition::Kind::Outgoing: {
            const auto it = outBySubjectOf_.find({c.predicate, c.filler});
            return it != outBySubjectOf_.end() && it->second.count(instance) > 0;
        }
        case Condition::Kind::Incoming: {
            const auto it = outByObjectOf_.find({c.predicate, c.filler});
            return it != outByObjectOf_.end() && it->second.count(instance) > 0;
        }
        default: {
            const auto it = dataSubjects_.find({c.predicate, c.filler});
            return it != dataSubjects_.end() && it->second.count(instance) > 0;
        }
    }
}

std::set<Condition> Ontology::condition_profile(TermId instance) const {
    if (!is_instance(instance))
        throw UnknownIdentifierError(instance < terms_.size() ? terms_[instance].lexical
                                                              : "<no such term>");
    std::set<Condition> profile;
    for (const TermId c : types_of(instance)) profile.insert(Condition::concept_membership(c));
    for (const Edge& e : outgoing(instance)) profile.insert(Condition::outgoing(e.role, e.other));
    for (const Edge& e : incoming(instance)) profile.insert(Condition::incoming(e.role, e.other));
    for (const Edge& e : data_of(instance)) profile.insert(Condition::data_equals(e.role, e.other));
    return profile;
}

std::size_t Ontology::instance_popularity(const Condition& p, TermId instance) const {
    if (!satisfies(instance, p))
        throw PreconditionError("instance does not satisfy predicate: " +
                                terms_[instance].lexical);
    std::size_t count = 0;
    for (const TermId j : incoming_subjects(instance))
        if (!satisfies(j, p)) ++count;
    return count;
}

std::size_t Ontology::connectivity(TermId instance) const {
    if (!is_instance(instance))
        throw UnknownIdentifierError(instance < terms_.size() ? terms_[instance].lexical
                                                              : "<no such term>");
    const std::set<TermId>& xTypes = types_of(instance);
    std::size_t count = 0;
    for (const TermId y : incoming_subjects(instance)) {
        bool found = false;
        for (const TermId cy : types_of(y)) {
            if (found) break;
            if (xTypes.count(cy)) continue;  // C_y(x) must not hold
            for (const TermId cx : xTypes) {
                if (!hierarchy_leq(HierarchyKind::Concept, cx, cy) &&
                    !hierarchy_lt(HierarchyKind::Concept, cy, cx)) {
                    found = true;
                    break;
                }
            }
        }
        if (found) ++count;
    }
    return count;
}

const std::set<TermId>& Ontology::types_of(TermId instance) const {
    const auto it = typesOf_.find(instance);
    return it == typesOf_.end() ? kEmptyIdSet : it->second;
}

const std::vector<Edge>& Ontology::outgoing(TermId instance) const {
    const auto it = outgoing_.find(instance);
    return it == outgoing_.end() ? kEmptyEdges : it->second;
}

const std::vector<Edge>& Ontology::incoming(TermId instance) const {
    const auto it = incoming_.find(instance);
    return it == incoming_.end() ? kEmptyEdges : it->second;
}

const std::vector<Edge>& Ontology::data_of(TermId instance) const {
    const auto it = dataOf_.find(instance);
    return it == dataOf_.end() ? kEmptyEdges : it->second;
}

const std::set<TermId>& Ontology::incoming_subjects(TermId instance) const {
    const auto it = incomingSubjects_.find(instance);
    return it == incomingSubjects_.end() ? kEmptyIdSet : it->second;
}

const std::set<TermId>& Ontology::declared_domains(TermId role) const {
    const auto it = domains_.find(role);
    return it == domains_.end() ? kEmptyIdSet : it->second;
}

const std::set<TermId>& Ontology::declared_ranges(TermId role) const {
    const auto it = ranges_.find(role);
    return it == ranges_.end() ? kEmptyIdSet : it->second;
}

Ontology::Counts Ontology::counts() const {
    return {concepts_.size(), objectRoles_.size(), datatypeRoles_.size(), instances_.size(),
            rawTriples_.size()};
}

}  // namespace ontomcq
