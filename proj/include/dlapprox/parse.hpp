#ifndef DLAPPROX_PARSE_HPP
#define DLAPPROX_PARSE_HPP

#include <string>

#include "dlapprox/errors.hpp"
#include "dlapprox/ontology.hpp"

namespace dla {

// Grammar (one axiom per line, '#' starts a comment):
//   axiom   := concept "SubClassOf" concept | NAME "EquivalentTo" concept
//   concept := or ; or := and ("or" and)* ; and := unary ("and" unary)*
//   unary   := "not" unary | NAME "some" unary | NAME "only" unary | atom
//   atom    := "Top" | "Bottom" | NAME | "(" concept ")"
//   NAME    := [A-Za-z_][A-Za-z0-9_']*
// Names left of some/only are role names; a name used both as a role and as
// a concept name is a parse-time error.
Ontology parseOntology(const std::string& text);

ConceptPtr parseConcept(const std::string& text);

} // namespace dla

#endif
