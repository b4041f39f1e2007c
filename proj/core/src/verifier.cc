/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongdim/verifier.hh>
#include <strongdim/error.hh>
#include <strongdim/graph6.hh>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <string>
#include <thread>

using namespace strongdim;

using std::string;
using std::string_view;
using std::uint64_t;
using std::vector;

namespace
{
    /// Runs one check, mapping solver limits onto verdicts.
    auto guarded_check(const Claim & claim, const Instance & instance) -> Outcome
    {
        try {
            return claim.check(instance);
        }
        catch (const Error & e) {
            switch (e.kind()) {
                case ErrorKind::budget_exhausted:
                    return Outcome{ Verdict::inconclusive, nullptr, nullptr, nullptr, e.what() };
                case ErrorKind::cap_exceeded:
                    return Outcome{ Verdict::skipped, nullptr, nullptr, nullptr, e.what() };
                default:
                    throw;
            }
        }
    }
}

auto strongdim::verdict_name(Verdict v) -> string_view
{
    switch (v) {
        case Verdict::passed:       return "passed";
        case Verdict::failed:       return "failed";
        case Verdict::skipped:      return "skipped";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

auto strongdim::claim_status_name(ClaimStatus s) -> string_view
{
    switch (s) {
        case ClaimStatus::all_passed:           return "all_passed";
        case ClaimStatus::counterexample:       return "counterexample";
        case ClaimStatus::skipped_precondition: return "skipped_precondition";
        case ClaimStatus::inconclusive:         return "inconclusive";
    }
    return "?";
}

auto strongdim::claim_ids() -> vector<string>
{
    vector<string> result;
    for (auto & c : claim_registry())
        result.push_back(c.id);
    return result;
}

auto strongdim::find_claim(string_view id) -> const Claim &
{
    for (auto & c : claim_registry())
        if (c.id == id)
            return c;
    throw Error(ErrorKind::unknown_claim, "no claim named '" + string(id) + "'");
}

auto strongdim::claim_seed(string_view claim_id, uint64_t seed) -> uint64_t
{
    return seed ^ stable_hash(claim_id);
}

auto strongdim::verify_claim(string_view claim_id, const CorpusSpec & corpus, uint64_t seed) -> ClaimReport
{
    auto start = std::chrono::steady_clock::now();
    auto & claim = find_claim(claim_id);

    ClaimReport report;
    report.claim_id = claim.id;
    report.seed = seed;

    Rng rng(claim_seed(claim.id, seed));
    auto instances = claim.instances(corpus, rng);

    vector<Outcome> outcomes;
    for (auto & instance : instances) {
        auto outcome = guarded_check(claim, instance);
        switch (outcome.verdict) {
            case Verdict::passed:       ++report.passed; break;
            case Verdict::failed:       ++report.failed; break;
            case Verdict::skipped:      ++report.skipped; break;
            case Verdict::inconclusive: ++report.inconclusive; break;
        }
        InstanceRecord record;
        record.g6_g = to_graph6(instance.g);
        if (instance.h)
            record.g6_h = to_graph6(*instance.h);
        record.params = instance.params;
        record.outcome = outcome;
        report.instances.push_back(std::move(record));
        outcomes.push_back(std::move(outcome));
    }
    report.instances_checked = report.passed + report.failed;

    bool aggregate_failed = false;
    if (claim.aggregate && report.instances_checked > 0)
        if (auto note = claim.aggregate(outcomes)) {
            aggregate_failed = true;
            report.notes.push_back(*note);
        }

    if (report.failed > 0 || aggregate_failed)
        report.status = ClaimStatus::counterexample;
    else if (report.inconclusive > 0)
        report.status = ClaimStatus::inconclusive;
    else if (report.instances_checked == 0)
        report.status = ClaimStatus::skipped_precondition;
    else
        report.status = ClaimStatus::all_passed;

    if (report.failed > 0)
        for (auto & r : report.instances)
            if (r.outcome.verdict == Verdict::failed) {
                report.notes.push_back("first counterexample: G=" + r.g6_g + (r.g6_h ? " H=" + *r.g6_h : "")
                        + (r.outcome.note.empty() ? "" : ": " + r.outcome.note));
                break;
            }

    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

auto strongdim::run_suite(const CorpusSpec & corpus, uint64_t seed, unsigned jobs, const vector<string> & only)
    -> vector<ClaimReport>
{
    vector<string> ids;
    if (only.empty())
        ids = claim_ids();
    else
        for (auto & id : claim_ids())
            if (std::find(only.begin(), only.end(), id) != only.end())
                ids.push_back(id);
    for (auto & id : only)
        find_claim(id);

    vector<ClaimReport> reports(ids.size());
    std::atomic<std::size_t> next{ 0 };
    std::exception_ptr failure;
    std::atomic<bool> failed{ false };

    auto worker = [&] () {
        while (true) {
            auto i = next++;
            if (i >= ids.size() || failed)
                return;
            try {
                reports[i] = verify_claim(ids[i], corpus, seed);
            }
            catch (...) {
                if (! failed.exchange(true))
                    failure = std::current_exception();
                return;
            }
        }
    };

    jobs = std::clamp<unsigned>(jobs, 1, std::max<std::size_t>(ids.size(), 1));
    if (jobs == 1)
        worker();
    else {
        vector<std::thread> threads;
        for (unsigned t = 0 ; t < jobs ; ++t)
            threads.emplace_back(worker);
        for (auto & t : threads)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);
    return reports;
}

auto strongdim::replay(string_view claim_id, const InstanceRecord & record) -> Outcome
{
    auto & claim = find_claim(claim_id);
    Instance instance{ from_graph6(record.g6_g), std::nullopt, record.params };
    if (record.g6_h)
        instance.h = from_graph6(*record.g6_h);
    return guarded_check(claim, instance);
}
