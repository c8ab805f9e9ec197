#include "scflip/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>

#include <CLI11.hpp>

#include "scflip/constructions.hpp"
#include "scflip/enumerate.hpp"
#include "scflip/errors.hpp"
#include "scflip/io.hpp"
#include "scflip/metric.hpp"
#include "scflip/verify.hpp"
#include "scflip/version.hpp"

namespace scflip::cli {

using nlohmann::json;

namespace {

struct Config {
    std::vector<int> dims;
    std::string cls = "sc";
    std::string format;
    std::string output;
    unsigned workers = 0;
    std::optional<std::uint64_t> cap;
    bool force = false;
    bool slow = false;
    // extremal
    std::string name;
    int r = 0, k = 0, axis = 0, d = 0;
    // verify
    std::vector<std::string> suites;
    std::string junit, json_path;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string meta_line(const json& m) {
    std::string s = "# meta: tool=" + m["tool"].get<std::string>() + " version=" + m["version"].get<std::string>();
    if (m.contains("dims")) s += " dims=" + join(m["dims"].get<std::vector<int>>());
    s += " class=" + m["class"].get<std::string>() + " method=" + m["method"].get<std::string>();
    return s;
}

void need_dims(const Config& c) {
    if (c.dims.empty()) throw UsageError("--dims is required");
    for (int l : c.dims)
        if (l < 1) throw UsageError("dims must be positive");
}

void need_heights_ok(const Config& c, std::size_t d) {
    if (c.format == "heights" && d != 3)
        throw UsageError("--format heights needs exactly three dims (got " + std::to_string(d) + ")");
}

void check_format(const Config& c, std::initializer_list<const char*> allowed) {
    for (auto a : allowed)
        if (c.format == a) return;
    std::string list;
    for (auto a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
    throw UsageError("--format " + c.format + " is not available here (use " + list + ")");
}

EnumerationResult do_enumerate(const Config& c, Symmetry cls) {
    EnumerateOptions o;
    o.cap = c.cap;
    o.force = c.force;
    return enumerate(c.dims, cls, o);
}

int cmd_count(const Config& c, std::ostream& out) {
    need_dims(c);
    if (c.format.empty()) const_cast<Config&>(c).format = "text";
    check_format(c, {"text", "json"});
    Symmetry cls = symmetry_from_string(c.cls);
    BigInt n;
    std::string method;
    if (has_closed_form(c.dims, cls)) {
        n = count_closed(c.dims, cls);
        method = "closed_form";
    } else {
        n = do_enumerate(c, cls).size();
        method = to_string(Method::bfs_flip);
    }
    json m = io::meta(c.dims, c.cls, method);
    if (c.format == "json") {
        json j = {{"meta", m}};
        if (n <= BigInt(std::numeric_limits<std::uint64_t>::max())) j["count"] = n.convert_to<std::uint64_t>();
        else j["count"] = n.str();
        out << j.dump() << "\n";
    } else {
        out << meta_line(m) << "\n" << n << "\n";
    }
    return kOk;
}

int cmd_enumerate(const Config& c, std::ostream& out) {
    need_dims(c);
    if (c.format.empty()) const_cast<Config&>(c).format = "json";
    check_format(c, {"json", "heights"});
    need_heights_ok(c, c.dims.size());
    Symmetry cls = symmetry_from_string(c.cls);
    auto e = do_enumerate(c, cls);
    out << json{{"meta", io::meta(c.dims, c.cls, to_string(e.method))}, {"count", e.size()}}.dump() << "\n";
    for (std::size_t v = 0; v < e.size(); ++v) out << io::ideal_record(e.vertex(v), c.format == "heights").dump() << "\n";
    return kOk;
}

int cmd_stats(const Config& c, std::ostream& out) {
    need_dims(c);
    if (c.format.empty()) const_cast<Config&>(c).format = "text";
    check_format(c, {"text", "json", "csv"});
    Symmetry cls = symmetry_from_string(c.cls);
    auto e = do_enumerate(c, cls);
    auto r = metric_report(e, c.workers);
    json m = io::meta(c.dims, c.cls, to_string(e.method));
    if (c.format == "json") {
        out << json{{"meta", m},
                    {"vertices", e.size()},
                    {"empty", r.empty},
                    {"diameter", r.diameter},
                    {"radius", r.radius},
                    {"center_size", r.center.size()},
                    {"perimeter_size", r.perimeter.size()},
                    {"center", r.center},
                    {"perimeter", r.perimeter}}
                   .dump()
            << "\n";
    } else if (c.format == "csv") {
        out << meta_line(m) << "\n";
        export_csv(r, out);
    } else {
        out << meta_line(m) << "\n";
        out << "vertices: " << e.size() << "\n";
        if (r.empty) {
            out << "graph is empty\n";
            return kOk;
        }
        out << "diameter: " << r.diameter << "\nradius: " << r.radius << "\ncenter: " << r.center.size()
            << "\nperimeter: " << r.perimeter.size() << "\n";
    }
    return kOk;
}

int cmd_graph(const Config& c, std::ostream& out) {
    need_dims(c);
    if (c.format.empty()) const_cast<Config&>(c).format = "dot";
    check_format(c, {"dot", "json", "csv"});
    Symmetry cls = symmetry_from_string(c.cls);
    auto e = std::make_shared<const EnumerationResult>(do_enumerate(c, cls));
    auto g = build_graph(e);
    auto r = metric_report(*e, c.workers);
    if (c.format == "dot") export_dot(g, r, out);
    else if (c.format == "json") export_json(g, r, out);
    else {
        out << meta_line(io::meta(c.dims, c.cls, to_string(e->method))) << "\n";
        export_csv(r, out);
    }
    return kOk;
}

int cmd_extremal(const Config& c, std::ostream& out) {
    Config& cc = const_cast<Config&>(c);
    if (cc.format.empty()) cc.format = "json";
    check_format(c, {"json", "heights"});
    auto need_r = [&] {
        if (c.r < 1) throw UsageError("--r >= 1 is required for " + c.name);
        cc.dims = {2 * c.r, 2 * c.r, 2 * c.r};
    };
    std::optional<Ideal> ideal;
    std::optional<NamedIdeal> shell;
    std::string cls = "sc";
    json params = json::object();
    const std::string& n = c.name;
    if (n == "c2r" || n == "staircase") {
        need_r(), ideal = staircase_c2r(c.r), cls = "cssc";
    } else if (n == "octant") {
        need_r(), ideal = octant_ideal_cssc(c.r), cls = "cssc";
    } else if (n == "pyramid") {
        need_r(), ideal = pyramid_ideal(c.r), cls = "cssc";
    } else if (n == "shell") {
        need_r();
        if (c.k < 1 || c.k > 2 * c.r - 1) throw UsageError("--k must be in 1..2r-1");
        shell = shell_ideal(c.k, c.r), cls = "cssc";
        params["k"] = c.k;
    } else if (n == "tssc-min" || n == "tssc-max") {
        need_r();
        auto [lo, hi] = tssc_extremes(c.r);
        ideal = n == "tssc-min" ? lo : hi, cls = "tssc";
    } else if (n == "tssc-mandatory") {
        need_r(), ideal = tssc_mandatory(c.r), cls = "none";
    } else if (n == "chvatal-block") {
        if (c.d < 2 || c.d % 2) throw UsageError("--d must be even and >= 2");
        ideal = chvatal_block(c.d), cc.dims = std::vector<int>(c.d, 2);
        params["d"] = c.d;
    } else {
        need_dims(c);
        if (n == "halfspace") {
            int a = c.axis ? c.axis : 1;
            ideal = halfspace(c.dims, a), params["axis"] = a;
        } else if (n == "majority") {
            ideal = majority_ideal(c.dims);
        } else if (n == "mod4") {
            ideal = mod4_center(c.dims, c.axis), params["axis"] = c.axis;
        } else if (n == "partitioned") {
            auto cc2 = partitioned_center(c.dims);
            ideal = cc2.ideal;
            params["conjecture_conditional"] = cc2.conjecture_conditional;
            params["recipe"] = cc2.recipe;
        } else if (n == "sc-diameter-left" || n == "sc-diameter-right") {
            auto [i, j] = sc_diameter_pair(c.dims);
            ideal = n == "sc-diameter-left" ? i : j;
        } else {
            throw UsageError("unknown construction '" + n + "'");
        }
    }
    if (c.r) params["r"] = c.r;
    need_heights_ok(c, c.dims.size());
    json j = {{"meta", io::meta(c.dims, cls, "construction")}, {"name", n}, {"params", params}};
    if (shell) {
        if (c.format == "heights") throw UsageError("shells are member sets; use --format json");
        j["ideal"] = {{"dims", c.dims}, {"members", shell->members}};
        j["shell"] = true;
    } else {
        j["ideal"] = io::ideal_record(*ideal, c.format == "heights");
        j["size"] = ideal->size();
    }
    out << j.dump() << "\n";
    return kOk;
}

int cmd_verify(const Config& c, std::ostream& out, std::ostream& err) {
    if (c.format.empty()) const_cast<Config&>(c).format = "text";
    check_format(c, {"text", "json"});
    std::vector<std::string> names;
    for (const auto& s : c.suites) {
        if (s == "all") {
            names = verify::suite_names();
            break;
        }
        if (std::find(verify::suite_names().begin(), verify::suite_names().end(), s) == verify::suite_names().end())
            throw UsageError("unknown suite '" + s + "'");
        names.push_back(s);
    }
    verify::SuiteParams p{c.slow, c.workers};
    std::vector<verify::SuiteReport> reports;
    bool any_fail = false, any_skip = false, any_pass = false;
    json all = json::array();
    for (const auto& n : names) {
        reports.push_back(verify::run_suite(n, p));
        const auto& r = reports.back();
        for (const auto& i : r.instances) {
            any_fail = any_fail || i.status == verify::Status::fail;
            any_skip = any_skip || i.status == verify::Status::skipped;
            any_pass = any_pass || i.status == verify::Status::pass;
        }
        if (c.format == "json") {
            all.push_back(verify::to_json(r));
            continue;
        }
        std::size_t np = 0, nf = 0, ns = 0, nc = 0;
        for (const auto& i : r.instances) {
            switch (i.status) {
                case verify::Status::pass: ++np; break;
                case verify::Status::fail: ++nf; break;
                case verify::Status::skipped: ++ns; break;
                case verify::Status::conjecture_violated: ++nc; break;
            }
            if (i.status == verify::Status::pass) continue;
            out << "  " << verify::to_string(i.status) << ": " << n << " " << i.instance << " [" << i.check
                << "] expected " << i.expected << ", observed " << i.observed;
            if (!i.note.empty()) out << " (" << i.note << ")";
            out << "\n";
        }
        out << (nf ? "FAIL " : "PASS ") << n << (r.conjecture ? " (conjecture)" : "") << ": " << np << " passed, " << nf
            << " failed, " << ns << " skipped, " << nc << " conjecture violations\n";
    }
    if (c.format == "json") out << json{{"meta", io::meta({}, "all", "verify")}, {"suites", all}}.dump(2) << "\n";
    if (!c.json_path.empty()) {
        std::ofstream f(c.json_path);
        if (!f) throw UsageError("cannot write " + c.json_path);
        json a = json::array();
        for (const auto& r : reports) a.push_back(verify::to_json(r));
        f << json{{"meta", io::meta({}, "all", "verify")}, {"suites", a}}.dump(2) << "\n";
    }
    if (!c.junit.empty()) {
        std::ofstream f(c.junit);
        if (!f) throw UsageError("cannot write " + c.junit);
        verify::write_junit(reports, f);
    }
    (void)err;
    if (any_fail) return kFailure;
    if (any_skip && !any_pass) return kSkippedOnly;
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Flip graphs of self-complementary ideals in chain products", kToolName};
    app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);
    app.require_subcommand(1);
    Config c;

    auto common = [&](CLI::App* s, bool with_dims) {
        if (with_dims) s->add_option("--dims", c.dims, "chain lengths, e.g. 2,3,4")->delimiter(',');
        s->add_option("--class", c.cls, "symmetry class")->check(CLI::IsMember({"sc", "cssc", "tssc"}));
        s->add_option("--format", c.format, "json, heights, dot, csv or text");
        s->add_option("-o,--output", c.output, "write to a file instead of stdout");
        s->add_option("--workers", c.workers, "worker threads (default SCFLIP_WORKERS or all cores)")
            ->check(CLI::PositiveNumber);
        s->add_option("--cap", c.cap, "stop after this many vertices");
        s->add_flag("--force", c.force, "lift the default enumeration size guard");
    };
    auto* count = app.add_subcommand("count", "number of ideals of a class");
    common(count, true);
    auto* en = app.add_subcommand("enumerate", "stream every ideal of a class");
    common(en, true);
    auto* stats = app.add_subcommand("stats", "diameter, radius, center and perimeter");
    common(stats, true);
    auto* graph = app.add_subcommand("graph", "export the flip graph");
    common(graph, true);
    auto* ex = app.add_subcommand("extremal", "emit a named construction");
    common(ex, true);
    ex->add_option("--name", c.name, "c2r, octant, pyramid, shell, tssc-min, tssc-max, tssc-mandatory, halfspace, "
                                     "majority, mod4, partitioned, sc-diameter-left, sc-diameter-right, chvatal-block")
        ->required();
    ex->add_option("--r", c.r, "cube half-side for cssc/tssc constructions");
    ex->add_option("--k", c.k, "shell index");
    ex->add_option("--axis", c.axis, "1-based axis");
    ex->add_option("--d", c.d, "dimension of [2]^d");
    auto* ver = app.add_subcommand("verify", "run the verification suites");
    common(ver, false);
    ver->add_option("--suite", c.suites, "suite name or all")->default_val("all");
    ver->add_flag("--slow", c.slow, "include the slow instances");
    ver->add_option("--junit", c.junit, "write a JUnit XML report");
    ver->add_option("--json", c.json_path, "write a JSON report");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kToolName << " " << kVersion << "\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
        return kUsage;
    }
    if (c.suites.empty()) c.suites = {"all"};

    std::ofstream file;
    if (!c.output.empty()) {
        file.open(c.output);
        if (!file) {
            err << "error: cannot write " << c.output << "\n";
            return kFailure;
        }
    }
    std::ostream& o = c.output.empty() ? out : file;
    try {
        if (*count) return cmd_count(c, o);
        if (*en) return cmd_enumerate(c, o);
        if (*stats) return cmd_stats(c, o);
        if (*graph) return cmd_graph(c, o);
        if (*ex) return cmd_extremal(c, o);
        if (*ver) return cmd_verify(c, o, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.code()) {
            case ErrorCode::InvalidElement:
            case ErrorCode::Range:
            case ErrorCode::UnsupportedShape:
            case ErrorCode::Unsupported:
            case ErrorCode::PosetMismatch: return kUsage;
            default: return kFailure;
        }
    }
    return kUsage;
}

}  // namespace scflip::cli
