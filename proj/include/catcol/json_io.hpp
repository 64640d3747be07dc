#pragma once

#include <string>

#include "catcol/graph.hpp"

namespace catcol {

// Parses an instance document.  Unknown top-level fields are rejected except
// "meta", which is ignored.  Throws InputError with a field path on any
// malformed or inconsistent content.
Instance parse_instance(const std::string& text);

// Reads and parses a file; "-" means stdin.  Throws InputError.
Instance load_instance(const std::string& path);

// Canonical form: fixed key order, vertex/edge declaration order preserved,
// lists emitted for every vertex (when present), caterpillar leaf entries
// emitted only for backbone vertices that have leaves.  Two-space indent.
std::string serialize_instance(const Instance& inst);

// Candidate documents consumed by `catcol verify`.  Both accept either the
// bare object or the wrapped form produced by the corresponding command.
Caterpillar parse_caterpillar_document(const std::string& text);
Coloring parse_coloring_document(const std::string& text);

// Result documents emitted by the CLI.
std::string coloring_document(const BipartiteGraph& g, const Coloring& c);
std::string infeasible_document();
std::string caterpillar_document(const Caterpillar& t);
// reason is "c1p-failed" or "leaf-unattachable"; empty means omit the field.
std::string not_convex_document(const std::string& reason);
std::string verify_accept_document();
std::string verify_reject_document_y(const std::string& witness_y);
std::string verify_reject_document_vertex(const std::string& vertex);
std::string verify_reject_document_edge(const std::string& x, const std::string& y);

std::string read_file_or_stdin(const std::string& path);  // throws InputError

}  // namespace catcol
