#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "subshift/measure.hpp"
#include "subshift/oracle.hpp"
#include "subshift/sadic.hpp"

namespace subshift {

// Substitution file format:
//   {"alphabet": ["a","b"], "rules": {"a": "ab", "b": "ba"}}
// Symbols are single Unicode scalar values, in which case rules may be plain
// strings; multi-character symbols require array rules:
//   {"alphabet": ["a1","a2"], "rules": {"a1": ["a1","a2"], ...}}
Substitution parse_substitution(const nlohmann::json& j);
Substitution load_substitution(const std::string& path);
nlohmann::json substitution_to_json(const Substitution& s);

// Directive-sequence description:
//   {"kind": "stationary", "substitution": {...}, "horizon": 40}
//   {"kind": "construction_A", "d": 3, "levels": 20}
//   {"kind": "construction_B", "d": 3, "levels": 60}
//   {"kind": "explicit", "levels": [ {...}, {...} ]}
// Explicit level substitutions may carry "domain_alphabet" when the level
// alphabets differ.
DirectiveSequence parse_directive_sequence(const nlohmann::json& j);
DirectiveSequence load_directive_sequence(const std::string& path);

Word parse_word(const std::string& text, const Alphabet& alphabet);

// Split a UTF-8 string into Unicode scalar values.
std::vector<std::string> utf8_scalars(const std::string& s);

// Matrix emitters with canonical index labels ("a", "b", "aa", ...).
// Integer entries that fit in 64 bits are serialized as JSON numbers; larger
// ones as decimal strings.
nlohmann::json matrix_to_json(const IntMatrix& m, const std::vector<std::string>& labels);
std::string matrix_to_table(const IntMatrix& m, const std::vector<std::string>& labels);

std::string format_double(double x, int precision);
std::string format_value(const CylinderValue& v, int precision, bool exact_mode);

nlohmann::json oracle_report_to_json(const OracleReport& r, const Alphabet& alphabet);

}  // namespace subshift
