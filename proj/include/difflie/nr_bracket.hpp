#ifndef DIFFLIE_NR_BRACKET_HPP
#define DIFFLIE_NR_BRACKET_HPP

#include "difflie/altmap.hpp"
#include "difflie/graded.hpp"

namespace difflie {

// Degree of f in Hom(wedge^{n+1} V, V) is n.
inline int nr_degree(const AltMap& f) { return f.arity() - 1; }

AltMap circ_bar(const AltMap& f, const AltMap& g);
AltMap nr_bracket(const AltMap& f, const AltMap& g);

GradedMap graded_circ_bar(const GradedMap& f, const GradedMap& g);
GradedMap graded_nr_bracket(const GradedMap& f, const GradedMap& g);

}  // namespace difflie

#endif
