#ifndef GROUPMIN_EXAMPLES_HPP
#define GROUPMIN_EXAMPLES_HPP

#include <utility>

#include "groupmin/dfa.hpp"

namespace groupmin::examples {

// Four states over {a,b} with a = (2,3,4), b = (1,2)(3,4); the
// transition group is the alternating group A4.
Dfa altdfa();

// Six states over {a} with a = (1,...,6) and finals {1,3,5}.
Dfa cycdfa();

// Two two-state DFAs over {a,b,c} whose symmetric difference product is
// not minimal.
std::pair<Dfa, Dfa> symdiff2_pair();

// A two-state and a three-state DFA over {a,b} whose product is
// uniformly boolean minimal (the right group is S3).
std::pair<Dfa, Dfa> ubm_pair();

// Similar DFAs of degrees 5 and 10 whose product group is intransitive.
std::pair<Dfa, Dfa> similar_intransitive_pair();

// The same pair with the roles of a' and b' swapped; dissimilar, and
// the left group S5 certifies uniform boolean minimality.
std::pair<Dfa, Dfa> dissimilar_swapped_pair();

// Degree-5 and degree-6 similar DFAs with a transitive product group.
// Two variants circulate for the letter b': the DFA definition uses
// (1,2,3,4,5,6) while the group isomorphism output lists (1,2,3,5,4,6).
std::pair<Dfa, Dfa> similar_s5_s6_pair();
std::pair<Dfa, Dfa> similar_s5_s6_pair_gap_variant();

}  // namespace groupmin::examples

#endif
