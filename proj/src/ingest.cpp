#include "citenorm/ingest.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "citenorm/error.hpp"
#include "citenorm/number_format.hpp"

namespace citenorm {

namespace {

constexpr std::array<std::string_view, 8> kColumns = {
    "unit_id", "pub_id", "year", "doc_type", "citations", "self_citations", "jcs", "fcs"};

enum Column : std::size_t { UnitId, PubId, Year, DocTypeCol, Citations, SelfCitations, Jcs, Fcs };

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

std::vector<CsvRow> parse_csv_rows(std::string_view text) {
    std::vector<CsvRow> rows;
    std::size_t line = 1;
    std::size_t i = 0;
    if (text.starts_with("\xEF\xBB\xBF")) i = 3;

    while (i < text.size()) {
        CsvRow row{line, {}};
        std::string field;
        bool in_quotes = false;
        bool row_done = false;
        while (i < text.size() && !row_done) {
            char ch = text[i];
            if (in_quotes) {
                if (ch == '"') {
                    if (i + 1 < text.size() && text[i + 1] == '"') {
                        field.push_back('"');
                        i += 2;
                        continue;
                    }
                    in_quotes = false;
                } else {
                    if (ch == '\n') ++line;
                    field.push_back(ch);
                }
                ++i;
                continue;
            }
            switch (ch) {
                case '"': in_quotes = true; break;
                case ',':
                    row.fields.push_back(std::move(field));
                    field.clear();
                    break;
                case '\r':
                    if (i + 1 < text.size() && text[i + 1] == '\n') break;
                    field.push_back(ch);
                    break;
                case '\n':
                    row_done = true;
                    ++line;
                    break;
                default: field.push_back(ch);
            }
            ++i;
        }
        row.fields.push_back(std::move(field));
        bool blank = row.fields.size() == 1 && trim(row.fields[0]).empty();
        if (!blank) rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

[[noreturn]] void bad_number(std::string_view column, std::string_view text, std::size_t line) {
    throw Error(ErrorCode::BadNumber, "column '" + std::string(column) + "': cannot parse '" + std::string(text) + "'",
                line);
}

template <typename Int>
Int parse_int(std::string_view text, std::string_view column, std::size_t line) {
    Int value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) bad_number(column, text, line);
    return value;
}

double parse_real(std::string_view text, std::string_view column, std::size_t line) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, std::chars_format::fixed);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
        bad_number(column, text, line);
    }
    return value;
}

std::string quote_if_needed(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out.push_back('"');
        out.push_back(ch);
    }
    out.push_back('"');
    return out;
}

void write_set(std::ostringstream& out, const EvaluationSet& set) {
    for (const auto& r : set.records) {
        out << quote_if_needed(set.unit_id) << ',' << quote_if_needed(r.id()) << ',';
        if (r.year()) out << *r.year();
        out << ',' << to_string(r.doc_type()) << ',' << r.citations() << ',';
        if (r.self_citations()) out << *r.self_citations();
        out << ',' << format_roundtrip(r.jcs()) << ',';
        if (r.fcs()) out << format_roundtrip(*r.fcs());
        out << '\n';
    }
}

}  // namespace

Dataset parse_csv(std::string_view text, std::vector<std::string>* warnings) {
    auto rows = parse_csv_rows(text);
    Dataset dataset;
    if (rows.empty()) {
        throw Error(ErrorCode::MissingColumn, "no header row");
    }

    std::array<std::optional<std::size_t>, kColumns.size()> index{};
    const auto& header = rows.front().fields;
    for (std::size_t c = 0; c < header.size(); ++c) {
        auto name = trim(header[c]);
        for (std::size_t k = 0; k < kColumns.size(); ++k) {
            if (name == kColumns[k] && !index[k]) index[k] = c;
        }
    }
    for (std::size_t k = 0; k < kColumns.size(); ++k) {
        if (!index[k]) throw Error(ErrorCode::MissingColumn, "header lacks column '" + std::string(kColumns[k]) + "'");
    }

    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        auto cell = [&](Column col) -> std::string_view {
            std::size_t c = *index[col];
            if (c >= row.fields.size()) return {};
            return trim(row.fields[c]);
        };

        RecordFields f;
        std::string unit(cell(UnitId));
        f.id = std::string(cell(PubId));
        if (auto y = cell(Year); !y.empty()) f.year = parse_int<int>(y, "year", row.line);

        auto dt_text = cell(DocTypeCol);
        if (auto dt = parse_doc_type(dt_text)) {
            f.doc_type = *dt;
        } else {
            f.doc_type = DocType::Other;
            if (warnings) {
                warnings->push_back("row " + std::to_string(row.line) + ": unknown doc_type '" + std::string(dt_text) +
                                    "' treated as Other");
            }
        }

        auto citations = cell(Citations);
        if (citations.empty()) bad_number("citations", citations, row.line);
        f.citations = parse_int<std::uint64_t>(citations, "citations", row.line);
        if (auto sc = cell(SelfCitations); !sc.empty()) {
            f.self_citations = parse_int<std::uint64_t>(sc, "self_citations", row.line);
        }
        auto jcs = cell(Jcs);
        if (jcs.empty()) bad_number("jcs", jcs, row.line);
        f.jcs = parse_real(jcs, "jcs", row.line);
        if (auto fcs = cell(Fcs); !fcs.empty()) f.fcs = parse_real(fcs, "fcs", row.line);

        try {
            auto record = make_record(std::move(f));
            auto& set = dataset[unit];
            set.unit_id = unit;
            set.records.push_back(std::move(record));
        } catch (const Error& e) {
            std::string what = e.what();
            auto colon = what.find(": ");
            throw Error(e.code(), colon == std::string::npos ? what : what.substr(colon + 2), row.line);
        }
    }
    return dataset;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw Error(ErrorCode::Io, "failed reading '" + path + "'");
    return buffer.str();
}

Dataset load_csv_file(const std::string& path, std::vector<std::string>* warnings) {
    return parse_csv(read_text_file(path), warnings);
}

std::string serialize_csv(const Dataset& dataset) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const auto& [unit, set] : dataset) write_set(out, set);
    return out.str();
}

std::string serialize_csv(const EvaluationSet& set) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    write_set(out, set);
    return out.str();
}

}  // namespace citenorm
