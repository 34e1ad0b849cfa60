#pragma once

#include "annetto/graph.hpp"

#include <string>
#include <string_view>

namespace annetto {

// Parses the supported Turtle subset: @prefix directives, subject groups
// with ";" predicate lists and "," object lists, the "a" keyword, IRIs in
// <> or prefixed form, string/integer/double literals and ^^-typed
// literals, and "#" comments. Blank nodes, collections and multiline
// strings are rejected with an "unsupported" ParseError. Prefixes declared
// in the text override entries of the base map.
Graph parse_turtle(std::string_view text);
Graph parse_turtle(std::string_view text, const PrefixMap& base);

// Deterministic serialization: subjects sorted by expanded IRI, "a" first
// within a subject then predicates sorted, objects sorted within each
// predicate. parse_turtle(serialize_turtle(g)) reproduces g.
std::string serialize_turtle(const Graph& g);
std::string serialize_turtle(const Graph& g, const PrefixMap& prefixes);

}  // namespace annetto
