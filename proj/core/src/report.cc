/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongdim/report.hh>
#include <strongdim/error.hh>

#include <map>
#include <sstream>

using namespace strongdim;

using nlohmann::json;
using std::string;
using std::uint64_t;
using std::vector;

namespace
{
    auto parse_verdict(const string & text) -> Verdict
    {
        for (auto v : { Verdict::passed, Verdict::failed, Verdict::skipped, Verdict::inconclusive })
            if (verdict_name(v) == text)
                return v;
        throw Error(ErrorKind::parse_error, "unknown verdict '" + text + "'");
    }
}

auto strongdim::to_json(const InstanceRecord & record) -> json
{
    json result{
        { "g6_G", record.g6_g },
        { "g6_H", record.g6_h ? json(*record.g6_h) : json(nullptr) },
        { "params", record.params },
        { "verdict", verdict_name(record.outcome.verdict) },
        { "expected", record.outcome.expected },
        { "actual", record.outcome.actual },
        { "condition_tags", record.outcome.condition_tags }
    };
    if (! record.outcome.note.empty())
        result["note"] = record.outcome.note;
    return result;
}

auto strongdim::instance_record_from_json(const json & j) -> InstanceRecord
{
    try {
        InstanceRecord record;
        record.g6_g = j.at("g6_G").get<string>();
        if (j.contains("g6_H") && ! j.at("g6_H").is_null())
            record.g6_h = j.at("g6_H").get<string>();
        record.params = j.value("params", json::object());
        record.outcome.verdict = parse_verdict(j.value("verdict", "passed"));
        record.outcome.expected = j.value("expected", json());
        record.outcome.actual = j.value("actual", json());
        record.outcome.condition_tags = j.value("condition_tags", json());
        record.outcome.note = j.value("note", "");
        return record;
    }
    catch (const json::exception & e) {
        throw Error(ErrorKind::parse_error, string("malformed instance record: ") + e.what());
    }
}

auto strongdim::to_json(const ClaimReport & report, const ReportOptions & options) -> json
{
    json instances = json::array();
    for (auto & r : report.instances)
        instances.push_back(to_json(r));

    json result{
        { "claim_id", report.claim_id },
        { "statement", find_claim(report.claim_id).statement },
        { "status", claim_status_name(report.status) },
        { "instances_checked", report.instances_checked },
        { "passed", report.passed },
        { "failed", report.failed },
        { "skipped", report.skipped },
        { "inconclusive", report.inconclusive },
        { "notes", report.notes },
        { "seed", report.seed },
        { "claim_seed", claim_seed(report.claim_id, report.seed) },
        { "instances", instances }
    };
    if (options.timing)
        result["elapsed_ms"] = report.elapsed_ms;
    return result;
}

auto strongdim::suite_to_json(const vector<ClaimReport> & reports, const CorpusSpec & corpus, uint64_t seed,
        const ReportOptions & options) -> json
{
    std::map<string, int> totals;
    for (auto s : { ClaimStatus::all_passed, ClaimStatus::counterexample, ClaimStatus::skipped_precondition,
            ClaimStatus::inconclusive })
        totals[string(claim_status_name(s))] = 0;

    json claims = json::array();
    double elapsed = 0.0;
    for (auto & r : reports) {
        ++totals[string(claim_status_name(r.status))];
        claims.push_back(to_json(r, options));
        elapsed += r.elapsed_ms;
    }

    json summary{ { "claims", reports.size() } };
    for (auto & [name, count] : totals)
        summary[name] = count;
    if (options.timing)
        summary["elapsed_ms"] = elapsed;

    return json{ { "seed", seed }, { "corpus", corpus.to_json() }, { "summary", summary }, { "claims", claims } };
}

auto strongdim::suite_to_csv(const vector<ClaimReport> & reports, const ReportOptions & options) -> string
{
    std::ostringstream out;
    out << "claim_id,status,instances_checked,passed,failed,skipped,inconclusive";
    if (options.timing)
        out << ",elapsed_ms";
    out << "\n";
    for (auto & r : reports) {
        out << r.claim_id << ',' << claim_status_name(r.status) << ',' << r.instances_checked << ',' << r.passed
            << ',' << r.failed << ',' << r.skipped << ',' << r.inconclusive;
        if (options.timing)
            out << ',' << r.elapsed_ms;
        out << "\n";
    }
    return out.str();
}
