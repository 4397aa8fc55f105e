// Text emission: Isabelle-style constant definitions for diagrams (the
// deep-embedding term of a parsed document) and a line-oriented dump of a
// witness system. Both are deterministic byte-for-byte.

#ifndef CDSEM_EMITTER_HPP
#define CDSEM_EMITTER_HPP

#include <string>

#include "cdsem/ast.hpp"
#include "cdsem/system.hpp"

namespace cdsem {

// One definition of the form
//   constdefs "<const_name> == CDDefinition ''<Name>'' [<invariants>] [<elements>]"
// with classes as  CDElementCDClass (CDClass ''N'' [''S1'', ...] [attrs...]),
// associations as  CDElementCDAssociation (CDAssociation ''L'' ''R''),
// attributes as    CDAttribute <None|Some CModifierPUBLIC|Some CModifierPRIVATE> ''T'' ''N''.
// Elements appear in source order; the output ends with a newline.
std::string emit_term(const Diagram& d, const Ident& const_name);

// emit_term wrapped in theory boilerplate. The import root is a
// placeholder path by default since it is installation specific.
std::string emit_theory(const Diagram& d, const Ident& const_name,
                        const std::string& import_root = "$UMLP/abstractSyntax/gen");

// Sections TYPES, CLASSES, SUB, CAR, ATTRS, ASSOC with entries sorted
// lexicographically. Requires well_formed(sm).
std::string emit_system(const System& sm);

}  // namespace cdsem

#endif
