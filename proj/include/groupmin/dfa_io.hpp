#ifndef GROUPMIN_DFA_IO_HPP
#define GROUPMIN_DFA_IO_HPP

#include <string>

#include "groupmin/dfa.hpp"

namespace groupmin {

// Line-oriented DFA text format. '#' starts a comment; required lines in
// order, all state references 1-based:
//
//   states: <n>
//   alphabet: <letter> ...
//   initial: <state>
//   final: <states, space-separated, possibly empty>
//   trans <letter>: <image of 1> <image of 2> ... <image of n>
//
// with one trans line per declared letter, in declaration order.
Dfa parse_dfa_file(const std::string& text);

// Canonical form: sorted finals, declaration-order alphabet.
// parse(serialize(d)) reproduces d exactly.
std::string serialize_dfa(const Dfa& d);

Dfa load_dfa(const std::string& path);
void save_dfa(const Dfa& d, const std::string& path);

}  // namespace groupmin

#endif
