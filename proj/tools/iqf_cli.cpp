#include "CLI11.hpp"
#include "iqf/api.hpp"
#include "iqf/errors.hpp"
#include "verify.hpp"

#include <iostream>

using iqf::Json;

namespace {

bool is_matrix(const Json& j) {
    if (!j.is_array() || j.empty()) return false;
    for (const Json& r : j)
        if (!r.is_array()) return false;
    return true;
}

void render_text(const Json& j, std::ostream& out) {
    for (const auto& [key, v] : j.items()) {
        if ((key == "graph") && v.is_object()) {
            out << iqf::graph_from_json(v).to_text();
        } else if (key == "bigraph" && v.is_object()) {
            iqf::Bigraph b;
            b.vertices = v.at("vertices");
            for (const Json& e : v.at("edges"))
                b.edges.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>(), iqf::int_from_json(e[2]), e[3].get<int>()});
            out << "bigraph:\n" << b.to_text();
        } else if ((key == "form" || key == "target") && v.is_object()) {
            out << key << ": " << iqf::form_from_json(v).to_string() << "\n";
        } else if (key == "transform" && v.is_object()) {
            out << "matrix:\n";
            for (const Json& r : v.at("matrix")) out << "  " << r.dump() << "\n";
        } else if (is_matrix(v)) {
            out << key << ":\n";
            for (const Json& r : v) out << "  " << r.dump() << "\n";
        } else {
            out << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Integral quadratic forms, bidirected graphs and gentle algebras"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

    std::string input, other, dir = IQF_FIXTURE_DIR, only, target = "0";
    int set = 1;
    std::size_t max_len = 0;
    long long bound = 0;
    unsigned jobs = 1;
    bool walk_sum = false;

    auto file_cmd = [&](const char* name, const char* help) {
        CLI::App* c = app.add_subcommand(name, help);
        c->add_option("file", input, "Input JSON file")->required()->check(CLI::ExistingFile);
        c->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
        c->fallthrough();
        return c;
    };
    CLI::App* qf_info = file_cmd("qf-info", "Invariants and Dynkin type of a form");
    CLI::App* qf_realize = file_cmd("qf-realize", "Bidirected graph with the given incidence form");
    CLI::App* qf_canon = file_cmd("qf-canonical-c", "G-transformation to the canonical type C form");
    CLI::App* qf_solve = file_cmd("qf-solve", "Find x with q(x) = d");
    qf_solve->add_option("-d", target, "Target value")->required();
    qf_solve->add_option("--bound", bound, "Box for the brute-force fallback");
    qf_solve->add_flag("--walk-sum", walk_sum, "Try sums of walk roots before brute force");
    CLI::App* bg_form = file_cmd("bg-form", "Incidence form of a bidirected graph");
    CLI::App* bg_balance = file_cmd("bg-balance", "Balance test with witness");
    CLI::App* bg_roots = file_cmd("bg-roots", "Incidence roots produced by walks");
    bg_roots->add_option("--set", set, "Value d of the roots")->check(CLI::Range(0, 2));
    bg_roots->add_option("--max-len", max_len, "Walk length cap");
    bg_roots->add_option("--bound", bound, "Coordinate box");
    CLI::App* bg_line = file_cmd("bg-line", "Line bigraph of a bidirected graph");
    CLI::App* bg_switch = file_cmd("bg-switch-equiv", "Switching equivalence of two graphs");
    bg_switch->add_option("other", other, "Second graph")->required()->check(CLI::ExistingFile);
    CLI::App* gentle = file_cmd("gentle-euler", "Euler form and graph of a gentle algebra");
    CLI::App* verify = app.add_subcommand("verify", "Run the bundled golden cases");
    verify->add_option("dir", dir, "Fixture directory");
    verify->add_option("--only", only, "Restrict to one suite or case");
    verify->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (verify->parsed()) return run_verify(dir, only, std::cout, std::cerr);

    try {
        const Json doc = iqf::load_json(input);
        Json result;
        if (qf_info->parsed()) result = iqf::api::qf_info(doc);
        if (qf_realize->parsed()) result = iqf::api::qf_realize(doc);
        if (qf_canon->parsed()) result = iqf::api::qf_canonical_c(doc);
        if (qf_solve->parsed()) result = iqf::api::qf_solve(doc, target, bound > 0 ? bound : 8, walk_sum);
        if (bg_form->parsed()) result = iqf::api::bg_form(doc);
        if (bg_balance->parsed()) result = iqf::api::bg_balance(doc);
        if (bg_roots->parsed()) result = iqf::api::bg_roots(doc, set, max_len, bound);
        if (bg_line->parsed()) result = iqf::api::bg_line(doc);
        if (bg_switch->parsed()) result = iqf::api::bg_switch_equiv(doc, iqf::load_json(other));
        if (gentle->parsed()) result = iqf::api::gentle_euler(doc);
        if (format == "text")
            render_text(result, std::cout);
        else
            std::cout << result.dump() << "\n";
        return 0;
    } catch (const iqf::FormatError& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return 2;
    } catch (const iqf::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
