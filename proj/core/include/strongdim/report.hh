/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STRONGDIM_GUARD_REPORT_HH
#define STRONGDIM_GUARD_REPORT_HH 1

#include <strongdim/corpus.hh>
#include <strongdim/verifier.hh>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace strongdim
{
    /// Wall-clock fields are left out unless asked for, so that identical
    /// runs serialize identically.
    struct ReportOptions
    {
        bool timing = false;
    };

    auto to_json(const InstanceRecord & record) -> nlohmann::json;

    /// Inverse of to_json for instance records. Throws parse_error.
    auto instance_record_from_json(const nlohmann::json & j) -> InstanceRecord;

    auto to_json(const ClaimReport & report, const ReportOptions & options = {}) -> nlohmann::json;

    auto suite_to_json(const std::vector<ClaimReport> & reports, const CorpusSpec & corpus, std::uint64_t seed,
            const ReportOptions & options = {}) -> nlohmann::json;

    /// One header row, then one row per claim.
    auto suite_to_csv(const std::vector<ClaimReport> & reports, const ReportOptions & options = {}) -> std::string;
}

#endif
