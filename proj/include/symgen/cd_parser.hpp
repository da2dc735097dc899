#pragma once

#include <string>
#include <string_view>

#include "symgen/cd_ast.hpp"

namespace symgen {

// Parses the textual class-diagram DSL:
//
//   classdiagram <Id> { <typeDecl>* }
//   typeDecl  := [abstract] class <Id> [extends <Id>] { <member>* }
//              | interface <Id> { <methodDecl>* }
//              | enum <Id> { <Id> (, <Id>)* }
//   member    := <Id> <Id> ;                      field: type then name
//              | <Id> <Id> ( [<Id> <Id> (, <Id> <Id>)*] ) ;
//
// Line comments start with //. Throws ParseError on syntax violations and
// DuplicateNameError on duplicate type, member, constant, or parameter names.
CdAst parseCd(std::string_view text, const std::string& fileName);

// True for `letter (letter | digit | _)*`, the DSL identifier shape.
bool isDslIdentifier(std::string_view s);

} // namespace symgen
