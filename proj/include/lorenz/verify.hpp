#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "lorenz/braid.hpp"
#include "lorenz/invariants.hpp"
#include "lorenz/lorenz_core.hpp"

namespace lorenz {

/// Invariants of one Lorenz link computed from its Lorenz braid, its T-link
/// braid and its diagonal grid diagram, with the outcome of comparing them.
struct InstanceResult {
    LorenzVector vector;
    TLinkParams tlink;
    BraidWord lorenz_braid;
    BraidWord t_braid;
    std::vector<InvariantReport> reports;  // lorenz-braid, t-braid, grid
    bool verified = false;
    std::optional<std::string> mismatch_detail;
    std::vector<std::string> warnings;

    const InvariantReport& report(Source s) const;

    friend bool operator==(const InstanceResult&, const InstanceResult&) = default;
};

/// Builds all three representations and compares components, Euler
/// characteristic, genus, Alexander polynomial (up to units) and the
/// normalized bracket f (exactly). Sources whose bracket was skipped are
/// left out of the f comparison and noted in warnings.
InstanceResult verify_instance(const LorenzVector& v, const ReportOptions& opts = {});

/// All nondecreasing positive sequences with sum <= max_sum, ordered by
/// length and then lexicographically. Throws InvalidInput for max_sum < 1.
std::vector<LorenzVector> enumerate_vectors(int max_sum);

struct BatteryResult {
    std::vector<InstanceResult> instances;
    int verified_count = 0;
    std::optional<std::string> first_mismatch;

    bool all_verified() const noexcept { return verified_count == static_cast<int>(instances.size()); }
};

/// verify_instance over enumerate_vectors(max_sum). Instances run on up to
/// `threads` workers (0 = hardware concurrency); results keep enumeration
/// order.
BatteryResult run_battery(int max_sum, const ReportOptions& opts = {}, unsigned threads = 0);

nlohmann::json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const InvariantReport& r);
InvariantReport report_from_json(const nlohmann::json& j);

nlohmann::json instance_to_json(const InstanceResult& r);
InstanceResult instance_from_json(const nlohmann::json& j);

}  // namespace lorenz
