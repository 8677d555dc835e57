#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "chainforge/architecture.hpp"
#include "chainforge/circuit.hpp"

namespace chainforge {

/// A non-blank line with its comment stripped and split on whitespace.
struct Directive {
    std::size_t line;  // 1-based
    std::vector<std::string> tokens;
};

/// Splits text into directives; '#' starts a comment that runs to end of line.
std::vector<Directive> tokenize(std::string_view text);

/// Parses a non-negative decimal integer, throwing ParseError tagged with `line`.
std::size_t parse_count(const std::string& token, std::size_t line);

/// Expects exactly `n` tokens on the directive (including the keyword).
void expect_arity(const Directive& d, std::size_t n);

// Circuit text format:
//   qubits N
//   h q | p q | cnot c t | cz a b | swap a b | cphase k a b | g a b
Circuit parse_circuit(std::string_view text);
std::string emit_circuit(const Circuit& c);

// Architecture text format: `lnn N` | `grid R C` | `graph N` followed by `edge a b` lines.
Architecture parse_architecture(std::string_view text);
std::string emit_architecture(const Architecture& arch);

/// OPENQASM 2.0 export. P becomes `s`, CPHASE(k) becomes `cu1(pi/2^(k-1))`.
/// Throws UnsupportedGateError for GENERIC2.
std::string emit_qasm(const Circuit& c);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace chainforge
