#include "citenorm/model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "citenorm/error.hpp"

namespace citenorm {

std::string_view to_string(DocType type) {
    switch (type) {
        case DocType::Article: return "Article";
        case DocType::ProceedingsPaper: return "ProceedingsPaper";
        case DocType::Review: return "Review";
        case DocType::Letter: return "Letter";
        case DocType::Note: return "Note";
        case DocType::Editorial: return "Editorial";
        case DocType::Other: return "Other";
    }
    return "Other";
}

std::optional<DocType> parse_doc_type(std::string_view text) {
    std::string key;
    for (char ch : text) {
        if (ch == ' ' || ch == '_' || ch == '-') continue;
        key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
    if (key == "article") return DocType::Article;
    if (key == "proceedingspaper") return DocType::ProceedingsPaper;
    if (key == "review") return DocType::Review;
    if (key == "letter") return DocType::Letter;
    if (key == "note") return DocType::Note;
    if (key == "editorial") return DocType::Editorial;
    if (key == "other") return DocType::Other;
    return std::nullopt;
}

std::string_view to_string(SelfCitationMode mode) {
    return mode == SelfCitationMode::Include ? "include" : "exclude";
}

namespace {

bool valid_rate(double rate) { return std::isfinite(rate) && rate > 0.0; }

}  // namespace

PublicationRecord make_record(RecordFields fields) {
    if (!valid_rate(fields.jcs)) {
        throw Error(ErrorCode::NonPositiveExpectedRate,
                    "record '" + fields.id + "': jcs must be a positive finite number");
    }
    if (fields.fcs && !valid_rate(*fields.fcs)) {
        throw Error(ErrorCode::NonPositiveExpectedRate,
                    "record '" + fields.id + "': fcs must be a positive finite number");
    }
    if (fields.self_citations && *fields.self_citations > fields.citations) {
        throw Error(ErrorCode::SelfCitationsExceedCitations,
                    "record '" + fields.id + "': self_citations " + std::to_string(*fields.self_citations) +
                        " > citations " + std::to_string(fields.citations));
    }
    return PublicationRecord(std::move(fields));
}

CitableFilter CitableFilter::citable() {
    return {{DocType::Article, DocType::ProceedingsPaper, DocType::Review, DocType::Letter, DocType::Note,
             DocType::Other}};
}

CitableFilter CitableFilter::articles_and_proceedings() {
    return {{DocType::Article, DocType::ProceedingsPaper}};
}

CitableFilter CitableFilter::all() {
    return {{DocType::Article, DocType::ProceedingsPaper, DocType::Review, DocType::Letter, DocType::Note,
             DocType::Editorial, DocType::Other}};
}

EvaluationSet apply_filter(const EvaluationSet& set, const CitableFilter& filter) {
    EvaluationSet out{set.unit_id, {}};
    out.records.reserve(set.records.size());
    std::copy_if(set.records.begin(), set.records.end(), std::back_inserter(out.records),
                 [&](const PublicationRecord& r) { return filter.accepts(r.doc_type()); });
    if (out.records.empty()) {
        throw Error(ErrorCode::EmptyAfterFilter, "unit '" + set.unit_id + "': no records left after filtering");
    }
    return out;
}

std::uint64_t effective_citations(const PublicationRecord& record, SelfCitationMode mode) {
    if (mode == SelfCitationMode::Include) return record.citations();
    if (!record.self_citations()) {
        throw Error(ErrorCode::MissingSelfCitationData,
                    "record '" + record.id() + "': self-citation count required to exclude self-citations");
    }
    return record.citations() - *record.self_citations();
}

}  // namespace citenorm
