#pragma once

#include <map>
#include <string>
#include <vector>

namespace dupdetect {

/// Parses a "key = value" document: one pair per line, '#' starts a
/// comment, blank lines are skipped, keys and values are trimmed.
/// Throws std::invalid_argument on malformed lines or duplicate keys.
std::map<std::string, std::string> parse_kv_document(const std::string& text);

/// Returns the value for key or throws std::invalid_argument naming it.
const std::string& kv_require(const std::map<std::string, std::string>& kv,
                              const std::string& key);

/// Whitespace-trimmed copy.
std::string trim(const std::string& s);

/// Splits on runs of whitespace; no empty tokens.
std::vector<std::string> split_ws(const std::string& s);

/// Splits on every occurrence of sep; keeps empty tokens.
std::vector<std::string> split(const std::string& s, char sep);

/// Full-string numeric parses; throw std::invalid_argument on leftovers.
int parse_int(const std::string& s);
double parse_double(const std::string& s);

}  // namespace dupdetect
