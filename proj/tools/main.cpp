#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gridfloer/corpus.hpp"
#include "gridfloer/detect.hpp"
#include "gridfloer/json_io.hpp"
#include "gridfloer/polytope.hpp"

namespace {

using namespace gridfloer;

GridDiagram load_grid(const std::string& path, int max_size) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open grid file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    GridDiagram g = parse_grid(buf.str());
    if (max_size > 0 && g.n > max_size)
        throw GridTooLarge("grid size " + std::to_string(g.n) + " exceeds --max-size " +
                           std::to_string(max_size));
    return g;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

const char* kLegend = "# alex2 = 2A: Alexander gradings are doubled to stay integral\n";

void print_ranks(const char* title, const MultigradedRanks& r) {
    std::cout << title << " (total " << r.total() << ")\n";
    for (const auto& [h, rank] : r.entries) {
        std::cout << "  maslov " << h.maslov << "  alex2 (";
        for (std::size_t k = 0; k < h.alex2.size(); ++k)
            std::cout << (k ? " " : "") << h.alex2[k];
        std::cout << ")  rank " << rank << "\n";
    }
}

std::string poly_to_string(const LaurentPoly& p, int vars) {
    if (p.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        const long long c = it->second;
        out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        const long long ac = c < 0 ? -c : c;
        bool all_zero = true;
        for (int e : it->first) all_zero &= (e == 0);
        if (ac != 1 || all_zero) out << ac;
        for (int k = 0; k < vars; ++k) {
            if (it->first[k] == 0) continue;
            out << " tau" << (vars > 1 ? std::to_string(k + 1) : "");
            if (it->first[k] != 1) out << "^" << it->first[k];
        }
    }
    return out.str();
}

int cmd_validate(const std::string& path, int max_size, bool json) {
    GridDiagram g = load_grid(path, max_size);
    g.validate();
    ComponentPartition parts = trace_components(g);
    LinkingMatrix lk = linking_matrix(g, parts);
    if (json) {
        Json j;
        j["diagram"] = to_json(g);
        j["components"] = to_json(parts);
        j["linking"] = to_json(lk);
        print_json(j);
    } else {
        std::cout << "valid grid of size " << g.n << " with " << parts.count
                  << " component(s)\n";
        for (int i = 0; i < parts.count; ++i)
            for (int j = i + 1; j < parts.count; ++j)
                std::cout << "  lk(" << i << "," << j << ") = " << lk.lk[i][j] << "\n";
    }
    return 0;
}

int cmd_homology(const std::string& path, int max_size, bool json) {
    GridDiagram g = load_grid(path, max_size);
    MultigradedRanks tilde = tilde_homology(g);
    MultigradedRanks hat = hat_ranks(tilde);
    if (json) {
        Json j;
        j["diagram"] = to_json(g);
        j["tilde"] = to_json(tilde);
        j["hat"] = to_json(hat);
        print_json(j);
    } else {
        std::cout << kLegend;
        print_ranks("blocked (tilde) homology", tilde);
        print_ranks("hat link Floer homology", hat);
    }
    return 0;
}

int cmd_polytope(const std::string& path, int max_size, bool json) {
    GridDiagram g = load_grid(path, max_size);
    ComponentPartition parts = trace_components(g);
    MultigradedRanks hat = hat_ranks(tilde_homology(g));
    LinkPolytopeReport rep = link_floer_polytope(hat, linking_matrix(g, parts));
    if (affine_rank(rep.polytope.vertices) == rep.polytope.dim) ensure_facets(rep.polytope);
    if (json) {
        print_json(to_json(rep));
    } else {
        std::cout << kLegend << "link Floer polytope: " << rep.polytope.vertices.size()
                  << " vertices\n";
        for (const auto& v : rep.polytope.vertices) {
            std::cout << "  (";
            for (std::size_t k = 0; k < v.size(); ++k) std::cout << (k ? " " : "") << v[k];
            std::cout << ")\n";
        }
        if (rep.dual_thurston_valid) {
            std::cout << "dual Thurston polytope: " << rep.dual_thurston.vertices.size()
                      << " vertices\n";
            for (const auto& v : rep.dual_thurston.vertices) {
                std::cout << "  (";
                for (std::size_t k = 0; k < v.size(); ++k) std::cout << (k ? " " : "") << v[k];
                std::cout << ")\n";
            }
        } else {
            std::cout << "dual Thurston polytope: absent (" << rep.dual_thurston_reason << ")\n";
        }
    }
    return 0;
}

int cmd_alexander(const std::string& path, int max_size, bool json) {
    GridDiagram g = load_grid(path, max_size);
    MultigradedRanks hat = hat_ranks(tilde_homology(g));
    EulerAlexander ea = euler_and_alexander(hat);
    if (json) {
        Json j;
        j["chi"] = to_json(ea.chi);
        j["alexander"] = to_json(ea.alexander);
        print_json(j);
    } else {
        std::cout << "# tau_i^2 = t_i\n";
        std::cout << "chi       = " << poly_to_string(ea.chi, hat.components) << "\n";
        std::cout << "alexander = " << poly_to_string(ea.alexander, hat.components) << "\n";
    }
    return 0;
}

int cmd_detect(const std::string& path, int max_size, bool json, const std::string& pair) {
    GridDiagram g = load_grid(path, max_size);
    DetectionReport rep = detect_all(g);
    Json extra;
    if (!pair.empty()) {
        int a = -1, b = -1;
        char comma = 0;
        std::istringstream in(pair);
        if (!(in >> a >> comma >> b) || comma != ',')
            throw ParseError("--pair expects two comma-separated component indices, got '" +
                             pair + "'");
        ActionOperator op = homology_action(g, a, b);
        extra = action_verdict_json(op);
    }
    if (json) {
        Json j = to_json(rep);
        if (!extra.is_null()) j["action"] = extra;
        print_json(j);
    } else {
        auto line = [](const char* label, const Verdict& v) {
            std::cout << label << ": " << (v.value ? "yes" : "no") << "  (" << v.why << ")\n";
        };
        std::cout << "components: " << rep.components << "\nlink Floer rank: " << rep.lfr << "\n";
        line("unknot", rep.is_unknot);
        line("unlink", rep.is_unlink);
        line("hopf link", rep.is_hopf_link);
        line("second smallest rank class", rep.is_second_smallest_class);
        line("split", rep.is_split);
        line("fibered top certificate", rep.fibered_top_certificate);
        std::cout << "alexander = " << poly_to_string(rep.alexander, rep.components) << "\n";
        if (!extra.is_null()) std::cout << "action: " << extra.dump() << "\n";
    }
    return 0;
}

int cmd_audit(const std::string& path, int max_size, bool json, int component) {
    GridDiagram g = load_grid(path, max_size);
    AuditReport rep = removal_audit(g, component);
    if (json) {
        print_json(to_json(rep));
    } else {
        std::cout << kLegend << "removing component " << rep.component << ": lfr " << rep.lfr_link
                  << " vs 2 * " << rep.lfr_sublink << " -> equality "
                  << (rep.equality ? "holds" : "fails") << "\n";
        std::cout << "shift vector (doubled):";
        for (int s : rep.shift_vector) std::cout << " " << s;
        std::cout << "\nobserved: linking_zero=" << (rep.observed.linking_zero ? "yes" : "no")
                  << " sublink_nonsplit=" << (rep.observed.sublink_nonsplit ? "yes" : "no")
                  << "\nunlinked-component prediction "
                  << (rep.prop_applicable ? (rep.consistent ? "holds" : "VIOLATED")
                                          : "not applicable")
                  << "\n";
        std::cout << "figure accounting (collapsed doubled grading: dots / surviving)\n";
        for (const FigureRow& row : rep.figure_accounting)
            std::cout << "  " << row.grading2 << ": " << row.dots << " / " << row.surviving
                      << "\n";
    }
    return 0;
}

int cmd_corpus(bool json) {
    std::vector<CheckResult> results = run_corpus_suite();
    std::size_t failed = 0;
    if (json) {
        Json j = Json::array();
        for (const CheckResult& r : results) {
            Json e;
            e["name"] = r.name;
            e["pass"] = r.pass;
            if (!r.pass) e["detail"] = r.detail;
            j.push_back(std::move(e));
            if (!r.pass) ++failed;
        }
        print_json(j);
    } else {
        for (const CheckResult& r : results) {
            std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
            if (!r.pass) std::cout << "  [" << r.detail << "]";
            std::cout << "\n";
            if (!r.pass) ++failed;
        }
        std::cout << results.size() - failed << "/" << results.size() << " checks passed\n";
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gridfloer: link Floer homology ranks and detection from grid diagrams"};
    app.require_subcommand(1);

    std::string path, pair;
    bool json = false;
    int max_size = 0;
    int component = 0;

    auto add_common = [&](CLI::App* sub, bool needs_path) {
        if (needs_path) sub->add_option("grid", path, "grid diagram file")->required();
        sub->add_flag("--json", json, "machine-readable output");
        sub->add_option("--max-size", max_size, "reject grids larger than this size");
        return sub;
    };

    add_common(app.add_subcommand("validate", "parse and validate a grid diagram"), true);
    add_common(app.add_subcommand("homology", "blocked and hat multigraded ranks"), true);
    add_common(app.add_subcommand("polytope", "link Floer polytope and dual Thurston polytope"),
               true);
    add_common(app.add_subcommand("alexander", "Euler characteristic and Alexander polynomial"),
               true);
    CLI::App* detect = add_common(app.add_subcommand("detect", "run all detection verdicts"), true);
    detect->add_option("--pair", pair, "also report the action verdict for components i,j");
    CLI::App* audit =
        add_common(app.add_subcommand("audit", "component-removal rank audit"), true);
    audit->add_option("--component", component, "component to remove")->required();
    add_common(app.add_subcommand("corpus", "run the bundled invariant suite"), false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand("validate")) return cmd_validate(path, max_size, json);
        if (app.got_subcommand("homology")) return cmd_homology(path, max_size, json);
        if (app.got_subcommand("polytope")) return cmd_polytope(path, max_size, json);
        if (app.got_subcommand("alexander")) return cmd_alexander(path, max_size, json);
        if (app.got_subcommand("detect")) return cmd_detect(path, max_size, json, pair);
        if (app.got_subcommand("audit")) return cmd_audit(path, max_size, json, component);
        if (app.got_subcommand("corpus")) return cmd_corpus(json);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
