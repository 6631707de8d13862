#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "norm/errors.hpp"
#include "norm/rules.hpp"

namespace norm {

// Parses a .rules stream: declarations (action, cause_pot, incompatible),
// ground facts and rules. Throws ParseError (or a subclass) with a position
// inside the offending token.
Rulebase parse_rules(std::string_view text, const std::string& filename = "<input>");

// Parses a .facts stream: one ground literal per statement, '!' for negative.
std::vector<Literal> parse_facts(std::string_view text, const std::string& filename = "<input>");

// Parses a single literal; convenience for fixtures and tests.
Literal parse_literal(std::string_view text);

// Reads and parses a file, dispatching on nothing but the grammar above.
Rulebase parse_rules_file(const std::string& path);
std::vector<Literal> parse_facts_file(const std::string& path);

// Pretty-prints a rulebase in the concrete syntax; parse_rules(render(rb))
// is structurally equal to rb.
std::string render(const Rulebase& rb);
std::string render(const Rule& r);

}  // namespace norm
