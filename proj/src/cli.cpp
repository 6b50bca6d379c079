#include "citenorm/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "citenorm/batch.hpp"
#include "citenorm/error.hpp"
#include "citenorm/ingest.hpp"
#include "citenorm/indicators.hpp"
#include "citenorm/ranking.hpp"
#include "citenorm/report_io.hpp"
#include "citenorm/stats.hpp"

namespace citenorm::cli {

namespace {

// Raised for argument combinations CLI11 cannot express; exits with 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::map<std::string, OutputFormat> kFormats = {
    {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}, {"md", OutputFormat::Markdown}};
const std::map<std::string, SelfCitationMode> kModes = {{"include", SelfCitationMode::Include},
                                                        {"exclude", SelfCitationMode::Exclude}};
const std::map<std::string, BasisSelection> kBases = {
    {"journal", BasisSelection::Journal}, {"field", BasisSelection::Field}, {"both", BasisSelection::Both}};

struct DataOptions {
    std::string input;
    std::string fixture;
    std::string exclude_doc_types = "editorial";
    std::string self_citations = "include";
};

struct OutputOptions {
    std::string format = "md";
    int precision = 2;
};

void add_data_options(CLI::App& cmd, DataOptions& opts) {
    cmd.add_option("--input", opts.input, "Dataset CSV (unit_id,pub_id,year,doc_type,citations,self_citations,jcs,fcs)");
    cmd.add_option("--fixture", opts.fixture, "Use a bundled dataset instead of --input")
        ->check(CLI::IsMember({"appendix"}));
    cmd.add_option("--exclude-doc-types", opts.exclude_doc_types,
                   "Comma-separated document types to drop (default: editorial; 'none' keeps everything)")
        ->capture_default_str();
    cmd.add_option("--self-citations", opts.self_citations, "include|exclude")
        ->check(CLI::IsMember({"include", "exclude"}))
        ->capture_default_str();
}

void add_output_options(CLI::App& cmd, OutputOptions& opts) {
    cmd.add_option("--format", opts.format, "json|csv|md")->check(CLI::IsMember({"json", "csv", "md"}))->capture_default_str();
    cmd.add_option("--precision", opts.precision, "Decimals in csv/md output")
        ->check(CLI::Range(0, 12))
        ->capture_default_str();
}

CitableFilter parse_exclusions(const std::string& list) {
    auto filter = CitableFilter::all();
    if (list == "none" || list.empty()) return filter;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto type = parse_doc_type(item);
        if (!type) throw UsageError("unknown document type '" + item + "' in --exclude-doc-types");
        filter.included_doc_types.erase(*type);
    }
    return filter;
}

// Loads, filters and returns the units in unit_id order.
std::vector<EvaluationSet> load_units(const DataOptions& opts, std::ostream& err) {
    if (opts.input.empty() == opts.fixture.empty()) throw UsageError("exactly one of --input or --fixture is required");
    auto filter = parse_exclusions(opts.exclude_doc_types);

    Dataset dataset;
    if (!opts.fixture.empty()) {
        auto set = load_appendix_fixture();
        dataset.emplace(set.unit_id, std::move(set));
    } else {
        std::vector<std::string> warnings;
        dataset = load_csv_file(opts.input, &warnings);
        for (const auto& w : warnings) err << "warning: " << w << '\n';
    }

    std::vector<EvaluationSet> units;
    units.reserve(dataset.size());
    for (const auto& [id, set] : dataset) units.push_back(apply_filter(set, filter));
    return units;
}

std::vector<IndicatorReport> evaluate(const std::vector<EvaluationSet>& units, BasisSelection bases,
                                      SelfCitationMode mode) {
    return batch::evaluate_units(units, {bases, mode});
}

std::vector<UnitPair> load_pairs(const std::string& path) {
    auto rows = parse_csv_rows(read_text_file(path));
    if (rows.empty()) throw Error(ErrorCode::MissingColumn, "'" + path + "' has no header row");
    const auto& header = rows.front().fields;
    auto column = [&](std::string_view name) {
        auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) throw Error(ErrorCode::MissingColumn, "pairs file lacks column '" + std::string(name) + "'");
        return static_cast<std::size_t>(it - header.begin());
    };
    const auto unit_col = column("unit_id");
    const auto rom_col = column("rom");
    const auto mor_col = column("mor");

    std::vector<UnitPair> pairs;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        auto number = [&](std::size_t c, std::string_view name) {
            std::string_view text = c < row.fields.size() ? std::string_view(row.fields[c]) : std::string_view();
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v, std::chars_format::fixed);
            if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
                throw Error(ErrorCode::BadNumber, "column '" + std::string(name) + "': cannot parse '" + std::string(text) + "'",
                            row.line);
            }
            return v;
        };
        std::string unit = unit_col < row.fields.size() ? row.fields[unit_col] : std::string();
        pairs.push_back({unit, number(rom_col, "rom"), number(mor_col, "mor")});
    }
    return pairs;
}

int cmd_evaluate(const DataOptions& data, const OutputOptions& output, const std::string& basis, bool per_paper,
                 std::ostream& out, std::ostream& err) {
    auto units = load_units(data, err);
    auto reports = evaluate(units, kBases.at(basis), kModes.at(data.self_citations));
    write_reports(out, reports, kFormats.at(output.format), output.precision, per_paper);
    return kExitOk;
}

int cmd_rank(const DataOptions& data, const OutputOptions& output, const std::string& indicator_name,
             std::ostream& out, std::ostream& err) {
    auto indicator = *parse_indicator(indicator_name);
    bool field = indicator == Indicator::RomField || indicator == Indicator::MorField;
    auto units = load_units(data, err);
    auto reports = evaluate(units, field ? BasisSelection::Field : BasisSelection::Journal, kModes.at(data.self_citations));
    auto ranking = rank_units(reports, indicator);
    write_ranking(out, ranking, indicator, kFormats.at(output.format), output.precision);
    return kExitOk;
}

int cmd_compare(const DataOptions& data, const OutputOptions& output, const std::string& pairs_path,
                const std::string& basis, const std::string& plot_path, double alpha, std::ostream& out,
                std::ostream& err) {
    RankingComparison comparison;
    if (!pairs_path.empty()) {
        if (!data.input.empty() || !data.fixture.empty()) throw UsageError("--pairs cannot be combined with --input/--fixture");
        comparison = compare_pairs(load_pairs(pairs_path), Indicator::RomJournal, Indicator::MorJournal, alpha);
    } else {
        bool field = basis == "field";
        auto units = load_units(data, err);
        auto reports = evaluate(units, field ? BasisSelection::Field : BasisSelection::Journal,
                                kModes.at(data.self_citations));
        comparison = field ? compare_rankings(reports, Indicator::RomField, Indicator::MorField, alpha)
                           : compare_rankings(reports, Indicator::RomJournal, Indicator::MorJournal, alpha);
    }
    write_comparison(out, comparison, kFormats.at(output.format), output.precision);
    if (!plot_path.empty()) {
        std::ofstream plot(plot_path, std::ios::binary);
        if (!plot) throw Error(ErrorCode::Io, "cannot write '" + plot_path + "'");
        write_plot_data(plot, comparison);
        if (!plot) throw Error(ErrorCode::Io, "failed writing '" + plot_path + "'");
    }
    return kExitOk;
}

struct TestFlags {
    bool against_unity = false;
    bool kruskal_wallis = false;
    bool pairwise = false;
    double alpha = stats::kDefaultAlpha;
    std::string basis = "journal";
};

int cmd_test(const DataOptions& data, const OutputOptions& output, const TestFlags& flags, std::ostream& out,
             std::ostream& err) {
    if (!flags.against_unity && !flags.kruskal_wallis && !flags.pairwise) {
        throw UsageError("choose at least one of --against-unity, --kruskal-wallis, --pairwise");
    }
    auto units = load_units(data, err);
    auto basis = flags.basis == "field" ? NormalizationBasis::Field : NormalizationBasis::Journal;
    auto mode = kModes.at(data.self_citations);

    std::vector<LabelledTest> results;
    if (flags.against_unity) {
        auto tests = batch::test_units_against_unity(units, basis, mode, flags.alpha);
        for (std::size_t i = 0; i < units.size(); ++i) results.push_back({units[i].unit_id, tests[i]});
    }
    if (flags.kruskal_wallis || flags.pairwise) {
        std::vector<std::vector<double>> groups;
        for (const auto& u : units) groups.push_back(per_paper_ratios(u, basis, mode));
        if (flags.kruskal_wallis) {
            std::string label;
            for (const auto& u : units) label += (label.empty() ? "" : ";") + u.unit_id;
            results.push_back({label, stats::kruskal_wallis(groups, flags.alpha)});
        }
        if (flags.pairwise) {
            auto matrix = stats::pairwise_posthoc(groups, flags.alpha);
            for (const auto& p : matrix.pairs) {
                results.push_back({units[p.first].unit_id + " vs " + units[p.second].unit_id, p.result});
            }
        }
    }
    write_tests(out, results, kFormats.at(output.format), output.precision);
    return kExitOk;
}

int cmd_export_fixture(const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
    file << appendix_fixture_csv();
    file.flush();
    if (!file) throw Error(ErrorCode::Io, "failed writing '" + path + "'");
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Citation-normalization indicators: ratio of means vs mean of ratios", "citenorm"};
    app.require_subcommand(1);

    DataOptions data;
    OutputOptions output;

    auto* evaluate_cmd = app.add_subcommand("evaluate", "Compute indicator reports per unit");
    add_data_options(*evaluate_cmd, data);
    add_output_options(*evaluate_cmd, output);
    std::string basis = "journal";
    bool per_paper = false;
    evaluate_cmd->add_option("--basis", basis, "journal|field|both")
        ->check(CLI::IsMember({"journal", "field", "both"}))
        ->capture_default_str();
    evaluate_cmd->add_flag("--per-paper", per_paper, "Also emit the per-paper ratio table");

    auto* rank_cmd = app.add_subcommand("rank", "Rank units by one indicator");
    add_data_options(*rank_cmd, data);
    add_output_options(*rank_cmd, output);
    std::string indicator = "rom";
    rank_cmd->add_option("--indicator", indicator, "rom|mor|rom-field|mor-field|cpp")
        ->check(CLI::IsMember({"rom", "mor", "rom-field", "mor-field", "cpp"}))
        ->capture_default_str();

    auto* compare_cmd = app.add_subcommand("compare", "Compare rankings by ratio of means and mean of ratios");
    add_data_options(*compare_cmd, data);
    add_output_options(*compare_cmd, output);
    std::string pairs_path;
    std::string compare_basis = "journal";
    std::string plot_path;
    double compare_alpha = stats::kDefaultAlpha;
    compare_cmd->add_option("--pairs", pairs_path, "CSV of precomputed values: unit_id,rom,mor");
    compare_cmd->add_option("--basis", compare_basis, "journal|field")
        ->check(CLI::IsMember({"journal", "field"}))
        ->capture_default_str();
    compare_cmd->add_option("--plot-data", plot_path, "Also write plot-ready CSV to this path");
    compare_cmd->add_option("--alpha", compare_alpha, "Significance level")->check(CLI::Range(0.0, 1.0));

    auto* test_cmd = app.add_subcommand("test", "Nonparametric significance tests on per-paper ratios");
    add_data_options(*test_cmd, data);
    add_output_options(*test_cmd, output);
    TestFlags flags;
    test_cmd->add_flag("--against-unity", flags.against_unity, "Wilcoxon signed-rank of each unit against 1");
    test_cmd->add_flag("--kruskal-wallis", flags.kruskal_wallis, "Kruskal-Wallis across all units");
    test_cmd->add_flag("--pairwise", flags.pairwise, "Mann-Whitney for every pair, Bonferroni-corrected");
    test_cmd->add_option("--alpha", flags.alpha, "Significance level")->check(CLI::Range(0.0, 1.0))->capture_default_str();
    test_cmd->add_option("--basis", flags.basis, "journal|field")
        ->check(CLI::IsMember({"journal", "field"}))
        ->capture_default_str();

    auto* export_cmd = app.add_subcommand("export-fixture", "Write the bundled appendix dataset as CSV");
    std::string export_path;
    export_cmd->add_option("--out", export_path, "Destination path")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsageError;
    }

    try {
        if (*evaluate_cmd) return cmd_evaluate(data, output, basis, per_paper, out, err);
        if (*rank_cmd) return cmd_rank(data, output, indicator, out, err);
        if (*compare_cmd) {
            return cmd_compare(data, output, pairs_path, compare_basis, plot_path, compare_alpha, out, err);
        }
        if (*test_cmd) return cmd_test(data, output, flags, out, err);
        if (*export_cmd) return cmd_export_fixture(export_path);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDataError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDataError;
    }
    return kExitUsageError;
}

}  // namespace citenorm::cli
