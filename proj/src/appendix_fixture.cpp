#include "citenorm/error.hpp"
#include "citenorm/ingest.hpp"

namespace citenorm {

namespace {

constexpr std::string_view kAppendixCsv =
    R"(unit_id,pub_id,year,doc_type,citations,self_citations,jcs,fcs
appendix,1,,Article,55,,58.31,
appendix,2,,Article,46,,18.46,
appendix,3,,Article,53,,62.73,
appendix,4,,Article,39,,48.99,
appendix,5,,Article,24,,9.98,
appendix,6,,Article,34,,9.12,
appendix,7,,Article,25,,20.91,
appendix,8,,Article,18,,7.52,
appendix,9,,Article,20,,23.73,
appendix,10,,Article,1,,1.51,
appendix,11,,Article,14,,19.74,
appendix,12,,Article,1,,0.93,
appendix,13,,Article,24,,17.34,
appendix,14,,Article,23,,19.10,
appendix,15,,Article,22,,23.20,
appendix,16,,Article,18,,45.61,
appendix,17,,Article,11,,9.98,
appendix,18,,Article,20,,74.50,
appendix,19,,Article,3,,1.53,
appendix,20,,Article,3,,0.61,
appendix,21,,Article,2,,0.61,
appendix,22,,Article,17,,65.48,
appendix,23,,Article,14,,14.32,
appendix,24,,Article,0,,1.25,
appendix,25,,Article,6,,7.69,
appendix,26,,Article,12,,9.98,
appendix,27,,Article,12,,24.79,
appendix,28,,Article,16,,19.10,
appendix,29,,Article,11,,6.41,
appendix,30,,Article,12,,19.10,
appendix,31,,Article,1,,0.50,
appendix,32,,Article,11,,14.32,
appendix,33,,Article,8,,17.34,
appendix,34,,Article,10,,7.66,
appendix,35,,Article,9,,8.01,
appendix,36,,Article,5,,3.34,
appendix,37,,Article,9,,14.32,
appendix,38,,Article,8,,10.16,
appendix,39,,Article,0,,0.39,
appendix,40,,Article,1,,3.34,
appendix,41,,Article,6,,3.34,
appendix,42,,Article,6,,13.27,
appendix,43,,Article,1,,3.77,
appendix,44,,Article,6,,5.61,
appendix,45,,Article,0,,0.61,
appendix,46,,Article,0,,0.13,
appendix,47,,Article,2,,3.34,
appendix,48,,Article,4,,9.98,
appendix,49,,Article,5,,23.20,
appendix,50,,Article,6,,11.54,
appendix,51,,Article,1,,3.34,
appendix,52,,Article,4,,7.19,
appendix,53,,Article,5,,10.30,
appendix,54,,Article,2,,3.34,
appendix,55,,Article,6,,17.08,
appendix,56,,Article,5,,7.06,
appendix,57,,Article,4,,8.61,
appendix,58,,Article,2,,23.20,
appendix,59,,Article,5,,23.67,
appendix,60,,Article,3,,13.95,
appendix,61,,Article,2,,8.01,
appendix,62,,Article,1,,7.06,
appendix,63,,Article,2,,24.07,
appendix,64,,Article,1,,18.72,
appendix,65,,Article,1,,17.34,
)";

}  // namespace

std::string_view appendix_fixture_csv() { return kAppendixCsv; }

EvaluationSet load_appendix_fixture() {
    auto dataset = parse_csv(kAppendixCsv);
    return std::move(dataset.at(std::string(kAppendixUnitId)));
}

}  // namespace citenorm
