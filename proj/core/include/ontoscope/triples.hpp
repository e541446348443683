#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ontoscope/graph.hpp"

namespace ontoscope {

/// Merges `"subject" predicate "object"` lines into a copy of the graph,
/// provenance ImportedTriple; the input graph is unchanged. `#` comments and
/// blank lines are skipped. Predicates map defined_through/depends_on/
/// linked_to/metaphor_of; anything else throws Error(UnknownPredicate).
/// Structurally bad lines throw Error(MalformedTriple).
ConceptGraph import_triples(std::string_view triple_text, const ConceptGraph& graph,
                            std::string_view source_name = {});

ConceptGraph import_triples_file(const std::filesystem::path& path,
                                 const ConceptGraph& graph);

}  // namespace ontoscope
