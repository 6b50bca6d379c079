#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "citenorm/model.hpp"

namespace citenorm {

// Column order written by serialize_csv. parse_csv locates columns by name,
// so any order is accepted on input; extra columns are ignored.
inline constexpr std::string_view kCsvHeader =
    "unit_id,pub_id,year,doc_type,citations,self_citations,jcs,fcs";

using Dataset = std::map<std::string, EvaluationSet>;

// Parses a dataset. The whole load fails on the first bad row, with the
// 1-based line number attached to the thrown Error. Unknown doc_type strings
// become DocType::Other and a message is appended to `warnings` if given.
Dataset parse_csv(std::string_view text, std::vector<std::string>* warnings = nullptr);

// Generic RFC 4180 splitter used by the readers above. Blank lines are
// skipped; `line` is the 1-based line where the row starts.
struct CsvRow {
    std::size_t line = 0;
    std::vector<std::string> fields;
};
std::vector<CsvRow> parse_csv_rows(std::string_view text);

// Reads a whole file; Error(Io) names the path when it cannot be read.
std::string read_text_file(const std::string& path);

// Reads and parses a file; Error(Io) names the path when it cannot be read.
Dataset load_csv_file(const std::string& path, std::vector<std::string>* warnings = nullptr);

// Writes every unit in key order with full round-trip precision.
std::string serialize_csv(const Dataset& dataset);
std::string serialize_csv(const EvaluationSet& set);

// Appendix fixture: 65 single-author records (citations, per-paper JCS),
// all of type Article.
inline constexpr std::string_view kAppendixUnitId = "appendix";

EvaluationSet load_appendix_fixture();

// The fixture as CSV text, JCS values with two decimals kept (e.g. "19.10").
std::string_view appendix_fixture_csv();

}  // namespace citenorm
