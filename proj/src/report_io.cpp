#include "citenorm/report_io.hpp"

#include <optional>

#include "citenorm/number_format.hpp"

namespace citenorm {

namespace {

using nlohmann::json;

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> opt_double(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<double>();
}

PerformanceFlag parse_flag(const std::string& s) {
    if (s == "BelowBorderline") return PerformanceFlag::BelowBorderline;
    if (s == "AboveWorldAverage") return PerformanceFlag::AboveWorldAverage;
    return PerformanceFlag::WithinBand;
}

std::string quote_csv(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out.push_back('"');
        out.push_back(ch);
    }
    return out + "\"";
}

std::string escape_md(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '|') out.push_back('\\');
        out.push_back(ch);
    }
    return out;
}

// Absent values print as an empty cell in CSV and "-" in Markdown.
class Cells {
public:
    Cells(OutputFormat format, int precision) : format_(format), precision_(precision) {}

    std::string num(double v) const { return format_fixed(v, precision_); }
    std::string num(const std::optional<double>& v) const {
        if (v) return num(*v);
        return format_ == OutputFormat::Csv ? "" : "-";
    }
    std::string text(const std::string& s) const {
        return format_ == OutputFormat::Csv ? quote_csv(s) : escape_md(s);
    }

    void row(std::ostream& out, const std::vector<std::string>& cells) const {
        if (format_ == OutputFormat::Csv) {
            for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
        } else {
            out << '|';
            for (const auto& c : cells) out << ' ' << c << " |";
        }
        out << '\n';
    }

    void header(std::ostream& out, const std::vector<std::string>& names) const {
        row(out, names);
        if (format_ == OutputFormat::Markdown) {
            out << '|';
            for (std::size_t i = 0; i < names.size(); ++i) out << " --- |";
            out << '\n';
        }
    }

private:
    OutputFormat format_;
    int precision_;
};

// p-values always print with four decimals, independent of --precision.
std::string p_text(double p) { return format_fixed(p, 4); }

template <typename T>
json to_array(std::span<const T> items) {
    json out = json::array();
    for (const auto& item : items) out.push_back(item);
    return out;
}

std::string correction_text(const stats::Correction& c) {
    return c.kind == stats::Correction::Kind::Bonferroni ? "bonferroni(m=" + std::to_string(c.m) + ")" : "none";
}

}  // namespace

void to_json(json& j, const IndicatorReport& r) {
    json papers = json::array();
    for (const auto& p : r.per_paper_ratios) papers.push_back({{"id", p.id}, {"journal", p.journal}, {"field", opt(p.field)}});
    j = json{{"unit_id", r.unit_id},
             {"self_citation_mode", std::string(to_string(r.self_citation_mode))},
             {"p", r.p},
             {"c", r.c},
             {"cpp", r.cpp},
             {"jcsm", r.jcsm},
             {"fcsm", opt(r.fcsm)},
             {"rom_journal", r.rom_journal},
             {"rom_field", opt(r.rom_field)},
             {"mor_journal", r.mor_journal},
             {"sem_journal", opt(r.sem_journal)},
             {"mor_field", opt(r.mor_field)},
             {"sem_field", opt(r.sem_field)},
             {"rom_flag", std::string(to_string(r.rom_flag))},
             {"mor_flag", std::string(to_string(r.mor_flag))},
             {"per_paper", papers}};
}

void from_json(const json& j, IndicatorReport& r) {
    r.unit_id = j.at("unit_id").get<std::string>();
    r.self_citation_mode =
        j.at("self_citation_mode").get<std::string>() == "exclude" ? SelfCitationMode::Exclude : SelfCitationMode::Include;
    r.p = j.at("p").get<std::int64_t>();
    r.c = j.at("c").get<std::int64_t>();
    r.cpp = j.at("cpp").get<double>();
    r.jcsm = j.at("jcsm").get<double>();
    r.fcsm = opt_double(j, "fcsm");
    r.rom_journal = j.at("rom_journal").get<double>();
    r.rom_field = opt_double(j, "rom_field");
    r.mor_journal = j.at("mor_journal").get<double>();
    r.sem_journal = opt_double(j, "sem_journal");
    r.mor_field = opt_double(j, "mor_field");
    r.sem_field = opt_double(j, "sem_field");
    r.rom_flag = parse_flag(j.at("rom_flag").get<std::string>());
    r.mor_flag = parse_flag(j.at("mor_flag").get<std::string>());
    r.per_paper_ratios.clear();
    if (j.contains("per_paper")) {
        for (const auto& p : j.at("per_paper")) {
            r.per_paper_ratios.push_back({p.at("id").get<std::string>(), p.at("journal").get<double>(), opt_double(p, "field")});
        }
    }
}

void to_json(json& j, const stats::StatTestResult& r) {
    j = json{{"test", std::string(stats::to_string(r.test_name))},
             {"statistic", r.statistic},
             {"df", r.df ? json(*r.df) : json(nullptr)},
             {"p_value", r.p_value},
             {"raw_p_value", r.raw_p_value},
             {"correction", r.correction.kind == stats::Correction::Kind::Bonferroni
                                ? json{{"kind", "bonferroni"}, {"m", r.correction.m}}
                                : json{{"kind", "none"}}},
             {"significant", r.significant},
             {"method", std::string(stats::to_string(r.method))},
             {"n", r.n},
             {"exact_p_value", opt(r.exact_p_value)}};
}

void to_json(json& j, const stats::RegressionFit& fit) {
    j = json{{"slope", fit.slope}, {"intercept", fit.intercept}, {"r", fit.r}, {"n", fit.n}};
}

void to_json(json& j, const RankingEntry& e) {
    j = json{{"unit_id", e.unit_id}, {"value", e.indicator_value}, {"rank", e.rank}, {"p", e.p}};
}

void to_json(json& j, const RankingComparison& c) {
    json entries = json::array();
    for (const auto& e : c.entries) {
        entries.push_back({{"unit_id", e.unit_id},
                           {"value_a", e.value_a},
                           {"value_b", e.value_b},
                           {"rank_a", e.rank_a},
                           {"rank_b", e.rank_b},
                           {"relative_difference", e.relative_difference}});
    }
    json pearson, spearman, regression;
    to_json(pearson, c.pearson);
    to_json(spearman, c.spearman);
    to_json(regression, c.regression);
    j = json{{"indicator_a", std::string(to_string(c.indicator_a))},
             {"indicator_b", std::string(to_string(c.indicator_b))},
             {"entries", entries},
             {"pearson", pearson},
             {"spearman", spearman},
             {"regression", regression}};
}

void to_json(json& j, const LabelledTest& t) {
    to_json(j, t.result);
    j["label"] = t.label;
}

void write_reports(std::ostream& out, std::span<const IndicatorReport> reports, OutputFormat format, int precision,
                   bool per_paper) {
    if (format == OutputFormat::Json) {
        // JSON always carries the per-paper ratios.
        json j{{"reports", to_array(reports)}};
        out << j.dump(2) << '\n';
        return;
    }

    Cells cells(format, precision);
    bool any_field = false;
    for (const auto& r : reports) any_field = any_field || r.rom_field.has_value();

    std::vector<std::string> names = {"unit_id", "sc_mode", "P", "C", "CPP", "JCSm", "CPP/JCSm", "MOR_journal", "SEM_journal"};
    if (any_field) {
        for (const char* n : {"FCSm", "CPP/FCSm", "MOR_field", "SEM_field"}) names.emplace_back(n);
    }
    names.emplace_back("flag_rom");
    names.emplace_back("flag_mor");
    cells.header(out, names);
    for (const auto& r : reports) {
        std::vector<std::string> row = {cells.text(r.unit_id),
                                        std::string(to_string(r.self_citation_mode)),
                                        std::to_string(r.p),
                                        std::to_string(r.c),
                                        cells.num(r.cpp),
                                        cells.num(r.jcsm),
                                        cells.num(r.rom_journal),
                                        cells.num(r.mor_journal),
                                        cells.num(r.sem_journal)};
        if (any_field) {
            row.push_back(cells.num(r.fcsm));
            row.push_back(cells.num(r.rom_field));
            row.push_back(cells.num(r.mor_field));
            row.push_back(cells.num(r.sem_field));
        }
        row.emplace_back(to_string(r.rom_flag));
        row.emplace_back(to_string(r.mor_flag));
        cells.row(out, row);
    }

    if (!per_paper) return;
    bool with_field = false;
    for (const auto& r : reports) {
        for (const auto& p : r.per_paper_ratios) with_field = with_field || p.field.has_value();
    }
    out << '\n';
    std::vector<std::string> paper_names = {"unit_id", "pub_id", "C/JCS"};
    if (with_field) paper_names.emplace_back("C/FCS");
    cells.header(out, paper_names);
    for (const auto& r : reports) {
        for (const auto& p : r.per_paper_ratios) {
            std::vector<std::string> row = {cells.text(r.unit_id), cells.text(p.id), cells.num(p.journal)};
            if (with_field) row.push_back(cells.num(p.field));
            cells.row(out, row);
        }
    }
}

void write_ranking(std::ostream& out, std::span<const RankingEntry> entries, Indicator indicator, OutputFormat format,
                   int precision) {
    if (format == OutputFormat::Json) {
        json j{{"indicator", std::string(to_string(indicator))}, {"ranking", to_array(entries)}};
        out << j.dump(2) << '\n';
        return;
    }
    Cells cells(format, precision);
    cells.header(out, {"rank", "unit_id", std::string(to_string(indicator)), "P"});
    for (const auto& e : entries) {
        cells.row(out, {std::to_string(e.rank), cells.text(e.unit_id), cells.num(e.indicator_value), std::to_string(e.p)});
    }
}

void write_plot_data(std::ostream& out, const RankingComparison& c) {
    out << "unit_id,rom,mor,rel_diff_pct,rank_rom,rank_mor\n";
    for (const auto& e : c.entries) {
        out << quote_csv(e.unit_id) << ',' << format_roundtrip(e.value_a) << ',' << format_roundtrip(e.value_b) << ','
            << format_roundtrip(100.0 * e.relative_difference) << ',' << e.rank_a << ',' << e.rank_b << '\n';
    }
}

void write_comparison(std::ostream& out, const RankingComparison& c, OutputFormat format, int precision) {
    if (format == OutputFormat::Json) {
        out << json(c).dump(2) << '\n';
        return;
    }
    if (format == OutputFormat::Csv) {
        write_plot_data(out, c);
        return;
    }
    Cells cells(format, precision);
    std::string a(to_string(c.indicator_a));
    std::string b(to_string(c.indicator_b));
    cells.header(out, {"unit_id", a, b, "rel_diff_%", "rank_" + a, "rank_" + b});
    for (const auto& e : c.entries) {
        cells.row(out, {cells.text(e.unit_id), cells.num(e.value_a), cells.num(e.value_b),
                        cells.num(100.0 * e.relative_difference), std::to_string(e.rank_a), std::to_string(e.rank_b)});
    }
    out << '\n';
    out << "Pearson r = " << cells.num(c.pearson.statistic) << " (p = " << p_text(c.pearson.p_value) << ")\n";
    out << "Spearman rho = " << cells.num(c.spearman.statistic) << " (p = " << p_text(c.spearman.p_value)
        << ")\n";
    out << "Relative difference vs " << a << ": slope = " << format_fixed(c.regression.slope, precision + 2)
        << ", intercept = " << format_fixed(c.regression.intercept, precision + 2)
        << ", r = " << cells.num(c.regression.r) << ", n = " << c.regression.n << '\n';
}

void write_tests(std::ostream& out, std::span<const LabelledTest> tests, OutputFormat format, int precision) {
    if (format == OutputFormat::Json) {
        json j{{"tests", to_array(tests)}};
        out << j.dump(2) << '\n';
        return;
    }
    Cells cells(format, precision);
    cells.header(out, {"test", "label", "n", "statistic", "df", "p_value", "raw_p_value", "correction", "method",
                       "significant"});
    for (const auto& t : tests) {
        const auto& r = t.result;
        cells.row(out, {std::string(stats::to_string(r.test_name)), cells.text(t.label), std::to_string(r.n),
                        cells.num(r.statistic), r.df ? std::to_string(*r.df) : (format == OutputFormat::Csv ? "" : "-"),
                        p_text(r.p_value), p_text(r.raw_p_value), correction_text(r.correction),
                        std::string(stats::to_string(r.method)), r.significant ? "yes" : "no"});
    }
}

}  // namespace citenorm
