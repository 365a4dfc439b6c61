// Command-line front end for the brauerdet shared library. Talks to the
// library exclusively through the C interface in brauerdet.h.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "brauerdet.h"

namespace {

constexpr int kExitVerified = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct StringDeleter {
    void operator()(char* s) const { bd_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct DiagramDeleter {
    void operator()(bd_diagram* d) const { bd_diagram_free(d); }
};
using Diagram = std::unique_ptr<bd_diagram, DiagramDeleter>;

struct ReportDeleter {
    void operator()(bd_report* r) const { bd_report_free(r); }
};
using Report = std::unique_ptr<bd_report, ReportDeleter>;

[[noreturn]] void fail_usage(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(kExitUsage);
}

void check(bd_status status, const std::string& what) {
    if (status != BD_OK) fail_usage(what + ": " + bd_status_message(status));
}

bd_variant parse_variant(const std::string& s) {
    if (s == "F" || s == "f") return BD_VARIANT_F;
    if (s == "B" || s == "b") return BD_VARIANT_B;
    fail_usage("variant must be F or B");
}

// Routes output to stdout or to --output-path.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) fail_usage("cannot open output path " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

int run_enumerate(uint32_t n, const std::string& format, const std::string& path) {
    Output out(path);
    uint64_t total = 0;
    check(bd_diagram_count(n, &total), "enumerate");
    for (uint64_t index = 0; index < total; ++index) {
        bd_diagram* raw = nullptr;
        check(bd_diagram_from_index(n, index, &raw), "enumerate");
        Diagram d(raw);

        char* json_raw = nullptr;
        check(bd_diagram_to_json(d.get(), &json_raw), "enumerate");
        CString dj(json_raw);
        char* wf_raw = nullptr;
        check(bd_diagram_weight(d.get(), BD_VARIANT_F, &wf_raw), "enumerate");
        CString wf(wf_raw);
        char* wb_raw = nullptr;
        check(bd_diagram_weight(d.get(), BD_VARIANT_B, &wb_raw), "enumerate");
        CString wb(wb_raw);
        const uint64_t crossings = bd_diagram_crossing_number(d.get());

        if (format == "text") {
            out.stream() << index << "\tcrossings=" << crossings << "\tweight_F=" << wf.get()
                         << "\tweight_B=" << wb.get() << "\tedges=" << dj.get() << "\n";
        } else {
            nlohmann::json line = nlohmann::json::parse(dj.get());
            line["index"] = index;
            line["crossings"] = crossings;
            line["weight_f"] = wf.get();
            line["weight_b"] = wb.get();
            out.stream() << line.dump() << "\n";
        }
    }
    return kExitVerified;
}

int emit_report(const Report& report, const std::string& format, const std::string& path) {
    Output out(path);
    if (format == "json") {
        char* json_raw = nullptr;
        check(bd_report_to_json(report.get(), &json_raw), "report");
        CString json(json_raw);
        out.stream() << json.get() << "\n";
    } else {
        out.stream() << bd_report_summary(report.get()) << "\n";
        if (!bd_report_ok(report.get())) {
            // Machine-readable failure record alongside the human line.
            char* json_raw = nullptr;
            check(bd_report_to_json(report.get(), &json_raw), "report");
            CString json(json_raw);
            out.stream() << json.get() << "\n";
        }
    }
    return bd_report_ok(report.get()) ? kExitVerified : kExitVerificationFailure;
}

int run_count(uint32_t n, const std::string& format, const std::string& path) {
    Output out(path);
    char* raw = nullptr;
    check(bd_count_table(n, &raw), "count");
    CString json(raw);
    if (format == "text") {
        const nlohmann::json t = nlohmann::json::parse(json.get());
        out.stream() << "n=" << t["n"] << " double_factorial=" << t["double_factorial"]
                     << " weighted_sum=" << t["weighted_sum"]
                     << " sylvester_v=" << t["sylvester_v"]
                     << " stirling_row=" << t["stirling_row"].dump() << "\n";
    } else {
        out.stream() << json.get() << "\n";
    }
    return kExitVerified;
}

int run_render(uint32_t n, std::int64_t index, const std::string& diagram_json,
               bd_variant labeling, const std::string& path) {
    bd_diagram* raw = nullptr;
    if (!diagram_json.empty()) {
        check(bd_diagram_from_json(diagram_json.c_str(), &raw), "render");
    } else if (index >= 0) {
        check(bd_diagram_from_index(n, static_cast<uint64_t>(index), &raw), "render");
    } else {
        fail_usage("render needs --index or --json");
    }
    Diagram d(raw);
    char* svg_raw = nullptr;
    check(bd_diagram_render_svg(d.get(), labeling, &svg_raw), "render");
    CString svg(svg_raw);
    Output out(path);
    out.stream() << svg.get();
    return kExitVerified;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Brauer-diagram expansions of structured symbolic determinants"};
    app.require_subcommand(1);

    uint32_t n = 0;
    std::string variant = "F";
    std::string format;
    std::string output_path;
    uint32_t parallelism = 0;  // 0 = all available cores
    std::int64_t index = -1;
    std::string diagram_json;

    auto add_common = [&](CLI::App* cmd, bool with_variant) {
        cmd->add_option("--n", n, "problem size")->required();
        if (with_variant)
            cmd->add_option("--variant", variant, "matrix/labeling variant, F or B");
        cmd->add_option("--output-format", format, "json or text");
        cmd->add_option("--output-path", output_path, "write output to a file");
        cmd->add_option("--parallelism", parallelism, "worker threads (default: all cores)");
    };

    CLI::App* enumerate = app.add_subcommand("enumerate", "stream all diagrams as JSON lines");
    add_common(enumerate, false);

    CLI::App* theorem = app.add_subcommand(
        "verify-theorem", "compare the diagram-side determinant with the Leibniz expansion");
    add_common(theorem, true);

    CLI::App* bijection = app.add_subcommand(
        "verify-bijection", "round-trip all diagrams and all expansion terms");
    add_common(bijection, false);

    CLI::App* lemmas = app.add_subcommand(
        "verify-lemmas", "inversion/crossing, row-swap and edge-surgery properties");
    add_common(lemmas, false);

    CLI::App* count = app.add_subcommand("count", "counting table for size n");
    add_common(count, false);

    CLI::App* render = app.add_subcommand("render", "render one diagram as SVG");
    add_common(render, true);
    render->add_option("--index", index, "diagram index in enumeration order");
    render->add_option("--json", diagram_json, "diagram as JSON instead of an index");

    CLI::App* cayley = app.add_subcommand(
        "pfaffian-check", "determinant of the antisymmetric specialization vs pfaffian^2");
    add_common(cayley, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    const bd_variant var = parse_variant(variant);

    // Bounds: symbolic expansion subcommands stop at 8, counting at 10 (both
    // enforced by the library); enumerate prints weights so it shares the
    // symbolic bound, render is diagram-only and allows slightly more.
    if (enumerate->parsed() && (n < 1 || n > 8)) fail_usage("enumerate supports 1 <= n <= 8");
    if (render->parsed() && diagram_json.empty() && (n < 1 || n > 10))
        fail_usage("render supports 1 <= n <= 10");

    if (enumerate->parsed()) return run_enumerate(n, format, output_path);
    if (count->parsed()) return run_count(n, format, output_path);
    if (render->parsed()) return run_render(n, index, diagram_json, var, output_path);

    bd_report* raw = nullptr;
    if (theorem->parsed())
        check(bd_verify_theorem(n, var, parallelism, &raw), "verify-theorem");
    else if (bijection->parsed())
        check(bd_verify_bijection(n, &raw), "verify-bijection");
    else if (lemmas->parsed())
        check(bd_verify_lemmas(n, &raw), "verify-lemmas");
    else if (cayley->parsed())
        check(bd_verify_cayley(n, parallelism, &raw), "pfaffian-check");
    Report report(raw);
    return emit_report(report, format, output_path);
}
