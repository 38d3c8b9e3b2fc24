#pragma once

#include "hesslab/dotchar.hpp"
#include "hesslab/gkm.hpp"
#include "hesslab/springer.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hesslab {

using Json = nlohmann::ordered_json;

/// {"n":3,"h":"2,3,3","l":2,"mult":{"3":[1,2,1],...},"betti":[1,4,1]}
Json multiplicity_json(const HessenbergFunction& h, const GradedMultiplicity& mult);
GradedMultiplicity multiplicity_from_json(const Json& doc);

std::string join(const std::vector<int>& values);
std::string join(const std::vector<long>& values);
std::vector<int> parse_int_list(const std::string& text);
std::vector<long> parse_long_list(const std::string& text);

enum class OutputFormat { json, csv, table };

struct CommonOptions {
    std::uint64_t seed = 20190101;
    unsigned jobs = 1;
    bool force = false;
    /// Empty: fall back to $HESSLAB_CACHE, else no cache.
    std::string cache_dir;
    bool timing = false;
    /// Check support under the direct (wrong) Springer labelling.
    bool convention_control = false;
    /// Confirm the sampled lambda_H against the chain-partition computation.
    bool certify = false;
};

struct AnalyzeOptions {
    CommonOptions common;
    bool gkm = false;
};

struct VerifyOptions {
    CommonOptions common;
    bool indecomposable = false;
    int gkm_max_n = 0;
};

struct KahlerOptions {
    CommonOptions common;
    std::vector<int> J;
    /// Strictly decreasing; default (n-1, ..., 0).
    std::optional<std::vector<long>> lambda;
};

struct CommandResult {
    Json report;
    int exit_code = 0;
};

/// Exit codes: 0 success, 2 usage (thrown as BoundedInputError /
/// invalid_argument, mapped by the caller), 3 theorem violation.
CommandResult cmd_analyze(const HessenbergFunction& h, const AnalyzeOptions& options);
CommandResult cmd_verify(int n, const VerifyOptions& options);
CommandResult cmd_kahler(const HessenbergFunction& h, const KahlerOptions& options);

std::string render(const Json& report, OutputFormat format);

}  // namespace hesslab
