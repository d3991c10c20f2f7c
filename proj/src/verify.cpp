#include "lorenz/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "lorenz/grid.hpp"

namespace lorenz {

using nlohmann::json;

const InvariantReport& InstanceResult::report(Source s) const {
    for (const auto& r : reports)
        if (r.source == s) return r;
    throw std::out_of_range("no report for source " + source_tag(s));
}

namespace {

std::string opt_text(const std::optional<int>& v) { return v ? std::to_string(*v) : "n/a"; }

}  // namespace

InstanceResult verify_instance(const LorenzVector& v, const ReportOptions& opts) {
    const Shuffle sigma = shuffle_from_vector(v);
    const TLinkParams t = compress(v);
    InstanceResult res{v, t, lorenz_word(sigma), tlink_word(t), {}, false, std::nullopt, {}};

    res.reports.push_back(full_report(res.lorenz_braid, Source::lorenz_braid, opts));
    res.reports.push_back(full_report(res.t_braid, Source::t_braid, opts));
    res.reports.push_back(full_report(build_grid(sigma), opts));
    const auto& lz = res.reports[0];
    const auto& tb = res.reports[1];
    const auto& gr = res.reports[2];

    std::vector<std::string> mismatches;
    if (lz.components != tb.components || lz.components != gr.components) {
        std::ostringstream m;
        m << "components differ: lorenz-braid " << lz.components << ", t-braid " << tb.components << ", grid "
          << gr.components;
        mismatches.push_back(m.str());
    }
    if (lz.euler_characteristic != tb.euler_characteristic)
        mismatches.push_back("euler characteristic differs: lorenz-braid " + opt_text(lz.euler_characteristic) +
                             ", t-braid " + opt_text(tb.euler_characteristic));
    if (lz.genus != tb.genus)
        mismatches.push_back("genus differs: lorenz-braid " + opt_text(lz.genus) + ", t-braid " + opt_text(tb.genus));
    if (lz.alexander && tb.alexander && !equal_up_to_units(*lz.alexander, *tb.alexander))
        mismatches.push_back("Alexander polynomials differ: lorenz-braid " + lz.alexander->to_string() +
                             ", t-braid " + tb.alexander->to_string());

    const InvariantReport* f_ref = nullptr;
    for (const auto& r : res.reports) {
        if (r.kauffman_f.status == KauffmanOutcome::Status::skipped_crossing_limit) {
            res.warnings.push_back("Kauffman bracket skipped for " + source_tag(r.source) + " (" +
                                   std::to_string(r.crossings) + " crossings > limit " +
                                   std::to_string(opts.max_bracket_crossings) + ")");
            continue;
        }
        if (!r.kauffman_f.computed()) continue;
        if (!f_ref) {
            f_ref = &r;
        } else if (r.kauffman_f.value != f_ref->kauffman_f.value) {
            mismatches.push_back("normalized bracket differs: " + source_tag(f_ref->source) + " " +
                                 f_ref->kauffman_f.value.to_string('A') + ", " + source_tag(r.source) + " " +
                                 r.kauffman_f.value.to_string('A'));
        }
    }
    const auto computed_f = std::count_if(res.reports.begin(), res.reports.end(),
                                          [](const InvariantReport& r) { return r.kauffman_f.computed(); });
    if (!opts.skip_jones && computed_f < 2)
        res.warnings.push_back("normalized bracket compared on fewer than two representations");

    res.verified = mismatches.empty();
    if (!mismatches.empty()) {
        std::string detail;
        for (const auto& m : mismatches) detail += (detail.empty() ? "" : "; ") + m;
        res.mismatch_detail = detail;
    }
    return res;
}

std::vector<LorenzVector> enumerate_vectors(int max_sum) {
    if (max_sum < 1) throw InvalidInput("max_sum must be >= 1");
    std::vector<LorenzVector> out;
    std::vector<int> current;
    // all nondecreasing sequences of a fixed length with entries >= lo and sum <= budget
    std::function<void(std::size_t, int, int)> extend = [&](std::size_t length, int lo, int budget) {
        if (current.size() == length) {
            out.emplace_back(current);
            return;
        }
        const auto remaining = static_cast<int>(length - current.size());
        for (int e = lo; e * remaining <= budget; ++e) {
            current.push_back(e);
            extend(length, e, budget - e);
            current.pop_back();
        }
    };
    for (int length = 1; length <= max_sum; ++length) extend(static_cast<std::size_t>(length), 1, max_sum);
    return out;
}

BatteryResult run_battery(int max_sum, const ReportOptions& opts, unsigned threads) {
    const auto vectors = enumerate_vectors(max_sum);
    std::vector<std::optional<InstanceResult>> slots(vectors.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(vectors.size()));

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < vectors.size(); i = next++) slots[i] = verify_instance(vectors[i], opts);
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < threads; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    BatteryResult out;
    out.instances.reserve(slots.size());
    for (auto& s : slots) {
        if (s->verified)
            ++out.verified_count;
        else if (!out.first_mismatch)
            out.first_mismatch = s->vector.to_string() + ": " + s->mismatch_detail.value_or("mismatch");
        out.instances.push_back(std::move(*s));
    }
    return out;
}

json laurent_to_json(const LaurentPoly& p) { return {{"min_deg", p.min_deg()}, {"coeffs", p.coeffs()}}; }

LaurentPoly laurent_from_json(const json& j) {
    return LaurentPoly(j.at("min_deg").get<int>(), j.at("coeffs").get<std::vector<LaurentPoly::Coeff>>());
}

namespace {

json braid_to_json(const BraidWord& w) { return {{"strands", w.strands()}, {"word", w.signed_values()}}; }

BraidWord braid_from_json(const json& j) {
    return BraidWord::from_signed(j.at("strands").get<int>(), j.at("word").get<std::vector<int>>());
}

template <typename T>
json optional_to_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

}  // namespace

json report_to_json(const InvariantReport& r) {
    json j;
    j["source"] = source_tag(r.source);
    j["components"] = r.components;
    j["crossings"] = r.crossings;
    j["writhe"] = r.writhe;
    j["euler_characteristic"] = optional_to_json(r.euler_characteristic);
    j["genus"] = optional_to_json(r.genus);
    j["alexander"] = r.alexander ? laurent_to_json(*r.alexander) : json(nullptr);
    switch (r.kauffman_f.status) {
        case KauffmanOutcome::Status::computed: j["kauffman_f"] = laurent_to_json(r.kauffman_f.value); break;
        case KauffmanOutcome::Status::skipped_crossing_limit: j["kauffman_f"] = {{"skipped", "crossing limit"}}; break;
        case KauffmanOutcome::Status::disabled: j["kauffman_f"] = {{"skipped", "disabled"}}; break;
    }
    return j;
}

InvariantReport report_from_json(const json& j) {
    InvariantReport r;
    r.source = source_from_tag(j.at("source").get<std::string>());
    r.components = j.at("components").get<int>();
    r.crossings = j.at("crossings").get<int>();
    r.writhe = j.at("writhe").get<int>();
    if (!j.at("euler_characteristic").is_null()) r.euler_characteristic = j["euler_characteristic"].get<int>();
    if (!j.at("genus").is_null()) r.genus = j["genus"].get<int>();
    if (!j.at("alexander").is_null()) r.alexander = laurent_from_json(j["alexander"]);
    const json& f = j.at("kauffman_f");
    r.kauffman_f.crossings = r.crossings;
    if (f.contains("skipped")) {
        const auto why = f["skipped"].get<std::string>();
        if (why == "crossing limit")
            r.kauffman_f.status = KauffmanOutcome::Status::skipped_crossing_limit;
        else if (why == "disabled")
            r.kauffman_f.status = KauffmanOutcome::Status::disabled;
        else
            throw InvalidInput("unknown kauffman_f skip reason '" + why + "'");
    } else {
        r.kauffman_f.status = KauffmanOutcome::Status::computed;
        r.kauffman_f.value = laurent_from_json(f);
    }
    return r;
}

json instance_to_json(const InstanceResult& r) {
    json tl = json::array();
    for (const auto& [p, q] : r.tlink.pairs()) tl.push_back({p, q});
    json reports = json::array();
    for (const auto& rep : r.reports) reports.push_back(report_to_json(rep));
    return {
        {"vector", r.vector.entries()},
        {"tlink", tl},
        {"braids", {{"lorenz", braid_to_json(r.lorenz_braid)}, {"t", braid_to_json(r.t_braid)}}},
        {"invariants", reports},
        {"verified", r.verified},
        {"mismatch_detail", optional_to_json(r.mismatch_detail)},
        {"warnings", r.warnings},
    };
}

InstanceResult instance_from_json(const json& j) {
    std::vector<TLinkPair> pairs;
    for (const auto& pq : j.at("tlink")) pairs.push_back({pq.at(0).get<int>(), pq.at(1).get<int>()});
    InstanceResult r{LorenzVector(j.at("vector").get<std::vector<int>>()),
                     TLinkParams(std::move(pairs)),
                     braid_from_json(j.at("braids").at("lorenz")),
                     braid_from_json(j.at("braids").at("t")),
                     {},
                     j.at("verified").get<bool>(),
                     std::nullopt,
                     j.at("warnings").get<std::vector<std::string>>()};
    for (const auto& rep : j.at("invariants")) r.reports.push_back(report_from_json(rep));
    if (!j.at("mismatch_detail").is_null()) r.mismatch_detail = j["mismatch_detail"].get<std::string>();
    return r;
}

}  // namespace lorenz
