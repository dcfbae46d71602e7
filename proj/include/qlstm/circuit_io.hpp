#pragma once

#include <string>

#include "qlstm/statevector.hpp"

namespace qlstm {

// Line-oriented circuit text: one layer per line, gates as KIND(targets)
// or KIND(target;angle) tokens separated by spaces, e.g.
//
//   H(0) H(1)
//   RY(0;0.7853981634) RY(1;0.5)
//   CNOT(0,1)
//
// Blank lines and lines starting with '#' are ignored. The qubit count is
// inferred as max target + 1 (at least kMinQubits).

std::string circuit_to_text(const Circuit &circuit);

/// Throws ParseError (1-based line number in the message) on bad input.
Circuit parse_circuit_text(const std::string &text);

Circuit read_circuit_file(const std::string &path);
void write_circuit_file(const Circuit &circuit, const std::string &path);

} // namespace qlstm
