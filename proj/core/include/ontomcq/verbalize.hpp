#pragma once

#include <string>
#include <vector>

#include "ontomcq/choice.hpp"
#include "ontomcq/pattern.hpp"

namespace ontomcq {

/// Renders the question sentence: "Choose a/an <Concept>" when the stem has
/// a type slot, otherwise "Choose the one", followed by ", which <role
/// phrase> <filler>" clauses joined with "and", ending in a period.
std::string stem_sentence(const Ontology& o, const Stem& s);

/// "A", "B", ... for option positions.
std::string option_letter(std::size_t index);

struct RenderedOption {
    std::string letter;  // "a", "b", ... then SKIP/INVALID keep their names
    std::string text;
};

/// Options in shuffled order, labeled a., b., ..., plus the fixed trailing
/// SKIP and INVALID options.
std::vector<RenderedOption> render_options(const Ontology& o, const ChoiceSet& c);

/// Full item text: stem sentence plus one line per option.
std::string verbalize(const Ontology& o, const Stem& s, const ChoiceSet& c);

}  // namespace ontomcq
