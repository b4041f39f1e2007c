/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STRONGDIM_GUARD_VERIFIER_HH
#define STRONGDIM_GUARD_VERIFIER_HH 1

#include <strongdim/corpus.hh>
#include <strongdim/graph.hh>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace strongdim
{
    /// One concrete input to a claim: factor G, optional factor H, and any
    /// extra parameters the hypothesis needs (grid dimensions, r and t, ...).
    /// The graphs travel as graph6 in reports, so an instance can always be
    /// rebuilt from its record.
    struct Instance
    {
        Graph g;
        std::optional<Graph> h;
        nlohmann::json params = nlohmann::json::object();
    };

    /// Hypothesis failure is its own outcome, never a pass.
    enum class Verdict { passed, failed, skipped, inconclusive };

    auto verdict_name(Verdict v) -> std::string_view;

    struct Outcome
    {
        Verdict verdict = Verdict::passed;
        nlohmann::json expected;
        nlohmann::json actual;
        nlohmann::json condition_tags;
        std::string note;
    };

    struct Claim
    {
        std::string id;
        std::string statement;
        std::function<std::vector<Instance> (const CorpusSpec &, Rng &)> instances;
        std::function<Outcome (const Instance &)> check;
        /// Claim-wide requirement over all outcomes; returns a failure note.
        std::function<std::optional<std::string> (const std::vector<Outcome> &)> aggregate;
    };

    /// Every registered claim, in report order.
    auto claim_registry() -> const std::vector<Claim> &;

    auto claim_ids() -> std::vector<std::string>;

    /// Throws unknown_claim.
    auto find_claim(std::string_view id) -> const Claim &;

    enum class ClaimStatus { all_passed, counterexample, skipped_precondition, inconclusive };

    auto claim_status_name(ClaimStatus s) -> std::string_view;

    struct InstanceRecord
    {
        std::string g6_g;
        std::optional<std::string> g6_h;
        nlohmann::json params = nlohmann::json::object();
        Outcome outcome;
    };

    struct ClaimReport
    {
        std::string claim_id;
        ClaimStatus status = ClaimStatus::skipped_precondition;
        /// Passed plus failed; skipped and inconclusive instances excluded.
        int instances_checked = 0;
        int passed = 0;
        int failed = 0;
        int skipped = 0;
        int inconclusive = 0;
        std::vector<InstanceRecord> instances;
        std::vector<std::string> notes;
        std::uint64_t seed = 0;
        double elapsed_ms = 0.0;
    };

    /// Seed for one claim's instance stream; independent of which other
    /// claims run or in what order.
    auto claim_seed(std::string_view claim_id, std::uint64_t seed) -> std::uint64_t;

    auto verify_claim(std::string_view claim_id, const CorpusSpec & corpus, std::uint64_t seed) -> ClaimReport;

    /// Runs the given claims (all when empty) on up to jobs worker threads.
    /// Reports come back in registry order whatever the schedule.
    auto run_suite(const CorpusSpec & corpus, std::uint64_t seed, unsigned jobs = 1,
            const std::vector<std::string> & only = {}) -> std::vector<ClaimReport>;

    /// Rebuilds the instance from its record and checks it again.
    auto replay(std::string_view claim_id, const InstanceRecord & record) -> Outcome;
}

#endif
