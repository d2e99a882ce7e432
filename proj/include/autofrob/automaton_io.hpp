#pragma once

#include <string>
#include <string_view>

#include "autofrob/automata.hpp"

namespace autofrob {

// Native text format, one automaton per file, LF line endings:
//
//   system <base2|fib> arity <k>
//   initial <q0>
//   state <id> [accept] [output <sym>]
//   trans <from> <d1,...,dk> <to>
//
// d1 is the digit on track 0. A zero-arity automaton labels its single letter "-".

std::string export_native(const Dfa& a);
std::string export_native(const Dfao& a);
std::string export_dot(const Dfa& a, std::string_view name = "automaton");
std::string export_dot(const Dfao& a, std::string_view name = "automaton");

/// Throws ParseError with the offending line and column.
Dfa import_dfa(std::string_view text);
Dfao import_dfao(std::string_view text);

std::string letter_label(Letter c, unsigned arity);

}  // namespace autofrob
