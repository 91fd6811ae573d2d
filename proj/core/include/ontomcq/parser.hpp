#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ontomcq/term.hpp"

namespace ontomcq {

enum class RdfFormat { Turtle, NTriples };

/// Parses an RDF document into raw triples. Duplicates are kept; the
/// Ontology builder deduplicates. Throws ParseError with line/column on
/// syntax errors; constructs outside the supported subset (collections,
/// anonymous blank nodes) are rejected by name.
std::vector<RawTriple> parse_rdf(std::istream& in, RdfFormat format);
std::vector<RawTriple> parse_rdf(const std::string& text, RdfFormat format);
std::vector<RawTriple> parse_rdf_file(const std::string& path, RdfFormat format);

/// Picks the format from a file extension: .nt -> NTriples, everything
/// else -> Turtle.
RdfFormat format_from_path(const std::string& path);

/// Serializes triples as sorted N-Triples, one per line. Loading the output
/// yields the same graph.
std::string to_ntriples(const std::vector<RawTriple>& triples);

}  // namespace ontomcq
