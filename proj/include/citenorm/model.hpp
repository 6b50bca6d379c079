#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace citenorm {

enum class DocType { Article, ProceedingsPaper, Review, Letter, Note, Editorial, Other };

std::string_view to_string(DocType type);

// Case-insensitive; accepts the enumerator names plus "proceedings paper".
// Returns nullopt for anything unrecognised.
std::optional<DocType> parse_doc_type(std::string_view text);

enum class SelfCitationMode { Include, Exclude };

std::string_view to_string(SelfCitationMode mode);

struct RecordFields {
    std::string id;
    std::optional<int> year;
    std::optional<std::string> journal_id;
    DocType doc_type = DocType::Article;
    std::uint64_t citations = 0;
    std::optional<std::uint64_t> self_citations;
    double jcs = 0.0;
    std::optional<double> fcs;

    friend bool operator==(const RecordFields&, const RecordFields&) = default;
};

// One publication with its observed citations and its expected citation
// rates. Immutable once built; make_record is the only way in.
class PublicationRecord {
public:
    const std::string& id() const noexcept { return fields_.id; }
    std::optional<int> year() const noexcept { return fields_.year; }
    const std::optional<std::string>& journal_id() const noexcept { return fields_.journal_id; }
    DocType doc_type() const noexcept { return fields_.doc_type; }
    std::uint64_t citations() const noexcept { return fields_.citations; }
    std::optional<std::uint64_t> self_citations() const noexcept { return fields_.self_citations; }
    double jcs() const noexcept { return fields_.jcs; }
    std::optional<double> fcs() const noexcept { return fields_.fcs; }

    const RecordFields& fields() const noexcept { return fields_; }

    friend bool operator==(const PublicationRecord&, const PublicationRecord&) = default;

private:
    explicit PublicationRecord(RecordFields fields) : fields_(std::move(fields)) {}
    friend PublicationRecord make_record(RecordFields fields);

    RecordFields fields_;
};

// Throws Error(NonPositiveExpectedRate) when jcs or fcs is not a positive
// finite number, Error(SelfCitationsExceedCitations) when sc > citations.
PublicationRecord make_record(RecordFields fields);

struct EvaluationSet {
    std::string unit_id;
    std::vector<PublicationRecord> records;

    std::size_t size() const noexcept { return records.size(); }
    bool empty() const noexcept { return records.empty(); }

    friend bool operator==(const EvaluationSet&, const EvaluationSet&) = default;
};

struct CitableFilter {
    std::set<DocType> included_doc_types;

    // Every document type except editorials.
    static CitableFilter citable();
    // Articles and proceedings papers only.
    static CitableFilter articles_and_proceedings();
    static CitableFilter all();

    bool accepts(DocType type) const { return included_doc_types.contains(type); }
};

// Drops records whose type is not included, preserving order.
// Throws Error(EmptyAfterFilter) if nothing is left.
EvaluationSet apply_filter(const EvaluationSet& set, const CitableFilter& filter);

// Throws Error(MissingSelfCitationData) for Exclude without sc data.
std::uint64_t effective_citations(const PublicationRecord& record, SelfCitationMode mode);

}  // namespace citenorm
