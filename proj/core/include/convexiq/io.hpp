#pragma once

#include "convexiq/body.hpp"
#include "convexiq/inequalities.hpp"
#include "convexiq/search.hpp"

#include <string>
#include <utility>
#include <vector>

namespace convexiq {

// All JSON is emitted pretty-printed (2 spaces) with sorted keys, shortest
// round-trip doubles and a trailing newline, so equal values give equal bytes.

/// "body/1" document.
std::string body_to_json(const Body& body);
/// Parses "body/1"; reals may be numbers or decimal strings. Throws ParseError.
Body body_from_json(const std::string& text);

/// 16 hex digits of FNV-1a over the canonical body JSON.
std::string body_fingerprint(const Body& body);
std::string fnv1a_hex(const std::string& bytes);

/// "report/1": {"schema": "report/1", "reports": [...]}.
std::string reports_to_json(const std::vector<IneqReport>& reports);

/// One row per (body label, report).
std::string reports_to_csv(const std::vector<std::pair<std::string, IneqReport>>& rows);

std::string search_config_to_json(const SearchConfig& config);
/// Throws ParseError on malformed JSON or unknown keys.
SearchConfig search_config_from_json(const std::string& text);

/// "search/1": best slack, witness, trajectory and stamp.
std::string search_result_to_json(const SearchConfig& config, const SearchResult& result);
/// block,min,q25,median,q75,max
std::string trajectory_to_csv(const SearchResult& result);

/// "finding/1". `config_json` must be a JSON object and is embedded verbatim
/// (after normalization).
std::string finding_to_json(const std::string& config_json, const Body& witness, const IneqReport& report);

/// Compiler and library versions; no clock or host data.
std::string environment_fingerprint();

/// Whole-file read/write; failures throw IoError naming the path.
/// write_file creates missing parent directories.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace convexiq
