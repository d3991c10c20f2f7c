// lorenz-links: build Lorenz links as shuffle braids, T-link braids and
// diagonal grid diagrams, and compare their invariants.
//
// Exit codes: 0 success / verified, 1 verification mismatch, 2 input error.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lorenz/braid.hpp"
#include "lorenz/grid.hpp"
#include "lorenz/invariants.hpp"
#include "lorenz/lorenz_core.hpp"
#include "lorenz/notation.hpp"
#include "lorenz/verify.hpp"

namespace {

using namespace lorenz;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

struct InputOptions {
    std::string vector_spec;
    std::string tlink_spec;
    std::string format = "text";
};

struct InvariantOptions {
    int max_bracket_crossings = kDefaultMaxBracketCrossings;
    std::vector<std::string> skip;

    ReportOptions report() const {
        ReportOptions r;
        r.max_bracket_crossings = max_bracket_crossings;
        for (const auto& s : skip) {
            if (s == "jones") r.skip_jones = true;
            if (s == "alexander") r.skip_alexander = true;
        }
        return r;
    }
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    auto* v = cmd->add_option("--vector", in.vector_spec, "Lorenz vector, e.g. \"3^4,5^3\" or \"2,2,2\"");
    auto* t = cmd->add_option("--tlink", in.tlink_spec, "T-link parameters, e.g. \"(3,4),(5,3)\"");
    v->excludes(t);
    cmd->add_option("--format", in.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void add_invariant_options(CLI::App* cmd, InvariantOptions& inv) {
    cmd->add_option("--max-bracket-crossings", inv.max_bracket_crossings,
                    "Largest diagram for the Kauffman bracket state sum")
        ->check(CLI::Range(0, 62));
    cmd->add_option("--skip", inv.skip, "Skip an invariant (jones, alexander)")
        ->check(CLI::IsMember({"jones", "alexander"}));
}

LorenzVector input_vector(const InputOptions& in) {
    if (!in.vector_spec.empty()) return parse_vector_spec(in.vector_spec);
    if (!in.tlink_spec.empty()) return decompress(parse_tlink_spec(in.tlink_spec));
    throw InvalidInput("one of --vector or --tlink is required");
}

std::string images_text(const std::vector<int>& images) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < images.size(); ++i) out << (i ? "," : "") << images[i];
    out << ')';
    return out.str();
}

std::string word_text(const BraidWord& w) { return w.empty() ? "(empty)" : w.to_text(); }

std::string f_text(const KauffmanOutcome& f) {
    return f.computed() ? f.value.to_string('A') : f.status_text();
}

int cmd_show(const InputOptions& in, const std::string& svg_path) {
    const LorenzVector v = input_vector(in);
    const Shuffle sigma = shuffle_from_vector(v);
    const TLinkParams t = compress(v);
    const BraidWord lw = lorenz_word(sigma);
    const BraidWord tw = tlink_word(t);
    const GridDiagram g = build_grid(sigma);

    if (!svg_path.empty()) {
        std::ofstream out(svg_path);
        if (!out) throw InvalidInput("cannot write SVG to '" + svg_path + "'");
        out << render_svg(g);
    }

    if (in.format == "json") {
        json j = {
            {"vector", v.entries()},
            {"tlink", json::array()},
            {"shuffle", {{"n", sigma.n()}, {"k", sigma.k()}, {"images", sigma.images()}}},
            {"braids",
             {{"lorenz", {{"strands", lw.strands()}, {"word", lw.signed_values()}}},
              {"t", {{"strands", tw.strands()}, {"word", tw.signed_values()}}}}},
            {"components", sigma.cycle_count()},
            {"grid", {{"n", g.n()}, {"x_heights", g.x_heights()}, {"ascii", render_ascii(g)}}},
        };
        for (const auto& [p, q] : t.pairs()) j["tlink"].push_back({p, q});
        std::cout << j.dump(2) << '\n';
        return kExitOk;
    }

    std::cout << "vector: " << v.to_string() << '\n'
              << "T-link: " << t.to_string() << '\n'
              << "shuffle: " << images_text(sigma.images()) << " (k=" << sigma.k() << ")\n"
              << "lorenz strands: " << lw.strands() << '\n'
              << "lorenz word: " << word_text(lw) << '\n'
              << "t strands: " << tw.strands() << '\n'
              << "t word: " << word_text(tw) << '\n'
              << "components: " << sigma.cycle_count() << '\n'
              << "grid:\n"
              << render_ascii(g);
    if (!svg_path.empty()) std::cout << "svg written to " << svg_path << '\n';
    return kExitOk;
}

void print_report(std::ostream& out, const InvariantReport& r) {
    out << "  [" << source_tag(r.source) << "] components " << r.components << ", crossings " << r.crossings
        << ", writhe " << r.writhe;
    if (r.euler_characteristic) out << ", euler " << *r.euler_characteristic;
    if (r.genus) out << ", genus " << *r.genus;
    out << '\n';
    if (r.alexander) out << "    alexander: " << r.alexander->to_string('t') << '\n';
    out << "    f: " << f_text(r.kauffman_f) << '\n';
}

void print_instance(std::ostream& out, const InstanceResult& r) {
    out << "vector: " << r.vector.to_string() << '\n'
        << "T-link: " << r.tlink.to_string() << '\n'
        << "lorenz word (" << r.lorenz_braid.strands() << " strands, length " << r.lorenz_braid.length()
        << "): " << word_text(r.lorenz_braid) << '\n'
        << "t word (" << r.t_braid.strands() << " strands, length " << r.t_braid.length()
        << "): " << word_text(r.t_braid) << '\n';
    for (const auto& rep : r.reports) print_report(out, rep);
    for (const auto& w : r.warnings) out << "warning: " << w << '\n';
    if (r.mismatch_detail) out << "mismatch: " << *r.mismatch_detail << '\n';
    out << "verified: " << (r.verified ? "true" : "false") << '\n';
}

int cmd_verify(const InputOptions& in, const InvariantOptions& inv) {
    const InstanceResult r = verify_instance(input_vector(in), inv.report());
    if (in.format == "json") {
        std::cout << instance_to_json(r).dump(2) << '\n';
    } else {
        print_instance(std::cout, r);
    }
    for (const auto& w : r.warnings)
        if (in.format == "json") std::cerr << "warning: " << w << '\n';
    return r.verified ? kExitOk : kExitMismatch;
}

int cmd_battery(int max_sum, const std::string& format, const InvariantOptions& inv, unsigned threads) {
    const BatteryResult b = run_battery(max_sum, inv.report(), threads);
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : b.instances) arr.push_back(instance_to_json(r));
        std::cout << arr.dump(2) << '\n';
    } else {
        for (const auto& r : b.instances) {
            std::cout << (r.verified ? "PASS  " : "FAIL  ") << r.vector.to_string() << "  T" << '('
                      << r.tlink.to_string() << ")  components " << r.report(Source::lorenz_braid).components;
            if (const auto& a = r.report(Source::lorenz_braid).alexander) std::cout << "  alexander " << a->to_string();
            std::cout << '\n';
        }
        if (b.all_verified())
            std::cout << "all " << b.instances.size() << " instances verified\n";
        else
            std::cout << b.verified_count << " of " << b.instances.size()
                      << " instances verified; first mismatch: " << *b.first_mismatch << '\n';
    }
    return b.all_verified() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lorenz links as shuffle braids, T-link braids and diagonal grid diagrams"};
    app.require_subcommand(1);

    InputOptions show_in;
    std::string svg_path;
    auto* show = app.add_subcommand("show", "Print the representations of one link");
    add_input_options(show, show_in);
    show->add_option("--svg", svg_path, "Write the grid diagram as SVG to this path");

    InputOptions verify_in;
    InvariantOptions verify_inv;
    auto* verify = app.add_subcommand("verify", "Compare invariants across the three representations");
    add_input_options(verify, verify_in);
    add_invariant_options(verify, verify_inv);

    int max_sum = 10;
    std::string battery_format = "text";
    unsigned threads = 0;
    InvariantOptions battery_inv;
    auto* battery = app.add_subcommand("battery", "Verify every Lorenz vector up to a given entry sum");
    battery->add_option("--max-sum", max_sum, "Largest entry sum to enumerate");
    battery->add_option("--format", battery_format, "Output format")->check(CLI::IsMember({"text", "json"}));
    battery->add_option("--threads", threads, "Worker threads (0 = all cores)");
    add_invariant_options(battery, battery_inv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*show) return cmd_show(show_in, svg_path);
        if (*verify) return cmd_verify(verify_in, verify_inv);
        if (*battery) return cmd_battery(max_sum, battery_format, battery_inv, threads);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitMismatch;
    }
    return kExitInput;
}
