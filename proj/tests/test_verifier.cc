/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongdim/error.hh>
#include <strongdim/graph6.hh>
#include <strongdim/report.hh>
#include <strongdim/verifier.hh>

#include <gtest/gtest.h>

#include <set>

using namespace strongdim;

namespace
{
    auto small_corpus() -> CorpusSpec
    {
        CorpusSpec c;
        c.exhaustive_n = 4;
        c.samples = 20;
        c.oracle_samples = 20;
        c.t_max = 3;
        c.odd_max = 3;
        return c;
    }

    auto instance_actuals(const ClaimReport & r) -> std::vector<nlohmann::json>
    {
        std::vector<nlohmann::json> result;
        for (auto & i : r.instances)
            result.push_back(i.outcome.actual);
        return result;
    }
}

TEST(Registry, HasEveryClaimOnce)
{
    auto ids = claim_ids();
    EXPECT_GE(ids.size(), 18u);
    EXPECT_EQ(std::set<std::string>(ids.begin(), ids.end()).size(), ids.size());
    for (auto id : { "lemma-mmd", "thm-boundary", "thm-sandwich", "cor-beta-chain", "thm-ind-sandwich", "thm-vizing",
            "thm-lex", "lemma-cartesian-sum", "thm-bounds", "lemma-cgraph", "thm-cgraph-exact", "cor-cgraphs-i",
            "cor-cgraphs-ii", "cor-cgraphs-iii", "cor-cgraphs-iv", "cor-cgraphs-v", "lemma-c1graph", "thm-c1-lower",
            "thm-oddcycle-bounds", "thm-odd-odd-beta", "thm-odd-odd-bounds", "remark-c3" })
        EXPECT_NO_THROW(find_claim(id)) << id;
    try {
        find_claim("nope");
        ADD_FAILURE();
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::unknown_claim);
    }
}

TEST(Verifier, RemarkC3Values)
{
    CorpusSpec c;
    c.t_max = 4;
    auto r = verify_claim("remark-c3", c, 1);
    EXPECT_EQ(r.status, ClaimStatus::all_passed);
    EXPECT_EQ(instance_actuals(r), (std::vector<nlohmann::json>{ 8, 13, 18, 23 }));
}

TEST(Verifier, OddOddIndependence)
{
    CorpusSpec c;
    c.r = 2;
    c.t = 3;
    auto r = verify_claim("thm-odd-odd-beta", c, 1);
    EXPECT_EQ(r.status, ClaimStatus::all_passed);
    ASSERT_EQ(r.instances.size(), 1u);
    EXPECT_EQ(r.instances[0].outcome.actual, 7);
}

TEST(Verifier, SandwichOnSeededPairs)
{
    CorpusSpec c;
    c.samples = 100;
    auto r = verify_claim("thm-sandwich", c, 9);
    EXPECT_EQ(r.status, ClaimStatus::all_passed);
    EXPECT_GE(r.passed, 100);
}

TEST(Verifier, NoClaimPassesOnZeroInstances)
{
    auto c = small_corpus();
    c.filter = FactorFilter::trees;
    auto r = verify_claim("cor-cgraphs-v", c, 1);
    EXPECT_EQ(r.instances_checked, 0);
    EXPECT_EQ(r.status, ClaimStatus::skipped_precondition);
}

TEST(Verifier, HypothesisFailuresAreSkips)
{
    auto r = verify_claim("lemma-c1graph", small_corpus(), 3);
    EXPECT_GT(r.skipped, 0);
    EXPECT_GT(r.passed, 0);
    EXPECT_EQ(r.instances_checked, r.passed + r.failed);
}

TEST(Verifier, TreeCorpusExercisesCGraphClaims)
{
    auto c = small_corpus();
    c.filter = FactorFilter::trees;
    for (auto id : { "thm-cgraph-exact", "cor-cgraphs-iii", "thm-bounds" }) {
        auto r = verify_claim(id, c, 5);
        EXPECT_EQ(r.status, ClaimStatus::all_passed) << id;
        EXPECT_GT(r.passed, 0) << id;
    }
}

TEST(Verifier, GridCounterexampleReplaysFromJson)
{
    auto r = verify_claim("cor-cgraphs-v", small_corpus(), 1);
    ASSERT_EQ(r.status, ClaimStatus::counterexample);
    int replayed = 0;
    for (auto & record : r.instances) {
        if (record.outcome.verdict != Verdict::failed)
            continue;
        auto restored = instance_record_from_json(nlohmann::json::parse(to_json(record).dump()));
        auto again = replay("cor-cgraphs-v", restored);
        EXPECT_EQ(again.verdict, Verdict::failed);
        EXPECT_EQ(again.expected, record.outcome.expected);
        EXPECT_EQ(again.actual, record.outcome.actual);
        EXPECT_EQ(again.note, record.outcome.note);
        ++replayed;
    }
    EXPECT_GT(replayed, 0);
}

TEST(Verifier, DeterministicAcrossRunsAndJobCounts)
{
    auto c = small_corpus();
    auto a = suite_to_json(run_suite(c, 42, 1), c, 42).dump();
    auto b = suite_to_json(run_suite(c, 42, 3), c, 42).dump();
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.find("elapsed_ms"), std::string::npos);
    EXPECT_NE(suite_to_json(run_suite(c, 42, 1, { "remark-c3" }), c, 42, { true }).dump().find("elapsed_ms"),
            std::string::npos);
}

TEST(Verifier, SeedChangeKeepsStatuses)
{
    CorpusSpec c;
    auto a = run_suite(c, 1), b = run_suite(c, 2);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0 ; i < a.size() ; ++i)
        EXPECT_EQ(a[i].status, b[i].status) << a[i].claim_id;
}

TEST(Report, CsvHasOneRowPerClaim)
{
    auto c = small_corpus();
    auto reports = run_suite(c, 3, 1, { "remark-c3", "thm-lex" });
    auto csv = suite_to_csv(reports);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
    EXPECT_EQ(csv.rfind("claim_id,status,", 0), 0u);
    EXPECT_NE(csv.find("remark-c3,all_passed,3,3,0,0,0"), std::string::npos);
}

TEST(Report, InstancesCarryGraph6)
{
    auto c = small_corpus();
    auto j = to_json(verify_claim("thm-odd-odd-bounds", c, 3));
    for (auto & i : j["instances"]) {
        EXPECT_NO_THROW(from_graph6(i["g6_G"].get<std::string>()));
        EXPECT_NO_THROW(from_graph6(i["g6_H"].get<std::string>()));
        EXPECT_TRUE(i.contains("expected"));
        EXPECT_TRUE(i.contains("condition_tags"));
    }
    EXPECT_THROW(instance_record_from_json(nlohmann::json::object()), Error);
}
