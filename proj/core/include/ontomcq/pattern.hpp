#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ontomcq/condition.hpp"
#include "ontomcq/ontology.hpp"

namespace ontomcq {

enum class SlotKind { OutgoingRole, IncomingRole, Datatype, Type };

/// One slot of a question pattern. An unconstrained slot matches any role
/// (or concept); a constraint pins it to one identifier.
struct Slot {
    SlotKind kind;
    std::optional<std::string> constraint;  // role/concept IRI or unique local name

    friend bool operator==(const Slot&, const Slot&) = default;
};

struct PatternShape {
    std::string name;
    std::vector<Slot> slots;

    std::size_t size() const { return slots.size(); }

    friend bool operator==(const PatternShape&, const PatternShape&) = default;
};

/// The three stock shapes: p1 = incoming role + datatype value,
/// p2 = two incoming roles, p3 = one outgoing role.
PatternShape pattern_p1();
PatternShape pattern_p2();
PatternShape pattern_p3();

/// Parses a pattern token: "p1"/"p2"/"p3" or a '+'-joined slot list with
/// slot names type/out/in/data, each optionally constrained as
/// "out=isDirectedBy" or "type=http://...#Movie".
PatternShape parse_pattern(const std::string& token);
/// Comma-separated list of pattern tokens.
std::vector<PatternShape> parse_patterns(const std::string& csv);

/// A question statement: pivot instance plus its ordered condition list.
struct Stem {
    TermId pivot = kNoTerm;
    std::vector<Condition> conditions;  // one per slot, slot order
    PatternShape shape;
    std::string text;  // rendered sentence, filled by verbalize

    /// Stable identity string (pivot IRI + conditions), used to derive
    /// per-stem random substreams.
    std::string identity(const Ontology& o) const;
};

/// Enumerates every stem matching the given shapes. Blank pivots are
/// excluded; stems whose condition sets coincide (permuted tuples of
/// same-kind slots) are emitted once. Order is deterministic: pivot IRI,
/// then shape position in `shapes`, then the condition tuple. `limit`
/// truncates the result.
std::vector<Stem> enumerate_stems(const Ontology& o, const std::vector<PatternShape>& shapes,
                                  std::optional<std::size_t> limit = std::nullopt);

/// Distractor candidate pool: for each slot the instances of the declared
/// domain (pivot on the subject side) or range (pivot on the object side),
/// or of the named concept for type slots, intersected across slots. Slots
/// whose role declares no domain/range contribute the full instance set.
std::set<TermId> potential_set(const Ontology& o, const Stem& s);

}  // namespace ontomcq
