#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "crossfam/colorings.hpp"
#include "crossfam/errors.hpp"
#include "crossfam/flowers.hpp"
#include "crossfam/generators.hpp"
#include "crossfam/io.hpp"
#include "crossfam/predicates.hpp"
#include "crossfam/sampling.hpp"
#include "crossfam/solvers.hpp"
#include "crossfam/verify.hpp"

namespace {

using crossfam::Edge;
using crossfam::Family;
using json = nlohmann::ordered_json;

struct GlobalOpts {
    std::string format = "text";
    std::uint64_t node_budget = 50'000'000;

    bool json_out() const { return format == "json"; }
    crossfam::SolveOptions solve() const { return {node_budget}; }
};

Family load_family(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::vector<std::string> warnings;
    Family f = crossfam::parse_family(buf.str(), &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << path << ": " << w << "\n";
    return f;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + out_path);
    out << text;
}

std::string ints(const std::vector<int>& vs) {
    std::ostringstream s;
    s << "[";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s << ", ";
        s << vs[i];
    }
    s << "]";
    return s.str();
}

std::string set_to_string(const std::set<int>& q) {
    std::ostringstream s;
    s << "{";
    bool first = true;
    for (int v : q) {
        if (!first) s << ", ";
        s << v;
        first = false;
    }
    s << "}";
    return s.str();
}

std::vector<Edge> edges_of_side(const Family& f, const std::string& side) {
    if (side == "a") return f.side_a;
    if (side == "b") return f.side_b;
    return crossfam::union_edges(f);
}

json coloring_json(const crossfam::Coloring& c) {
    return json{{"colors", c.colors},
                {"color_count", c.color_count},
                {"method", crossfam::to_string(c.method)}};
}

void print_coloring_text(const crossfam::Coloring& c) {
    std::cout << "colors: " << ints(c.colors) << "\n";
    std::cout << "color_count: " << c.color_count << "\n";
    std::cout << "method: " << crossfam::to_string(c.method) << "\n";
}

json tau_json(const crossfam::TauCertificate& t) {
    json j;
    if (t.infinite()) {
        j["tau"] = "infinite";
        j["infeasible_edge"] = *t.infeasible_edge;
    } else {
        j["tau"] = *t.value;
        j["transversal"] = t.transversal.members();
    }
    return j;
}

void print_tau_text(const crossfam::TauCertificate& t) {
    if (t.infinite()) {
        std::cout << "tau = infinite\n";
        std::cout << "infeasible_edge: " << *t.infeasible_edge << "\n";
    } else {
        std::cout << "tau = " << *t.value << "\n";
        std::cout << "transversal: " << ints(t.transversal.members()) << "\n";
    }
}

int run_check(const GlobalOpts& g, const std::string& file) {
    Family f = load_family(file);
    crossfam::AnalysisReport r = crossfam::analyze(f);
    if (g.json_out()) {
        json j{{"vertices", f.vertex_count},
               {"a_count", r.a_count},
               {"b_count", r.b_count},
               {"max_edge_size", r.max_edge_size},
               {"intersecting", r.is_intersecting},
               {"cross_intersecting", r.is_cross_intersecting},
               {"sperner", r.is_sperner},
               {"uniform", r.uniform ? json(*r.uniform) : json(nullptr)},
               {"critical", r.is_critical},
               {"exceptional", r.exceptional},
               {"q_set", r.q_set}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "vertices: " << f.vertex_count << "\n";
        std::cout << "edges: a=" << r.a_count << " b=" << r.b_count << "\n";
        std::cout << "max_edge_size: " << r.max_edge_size << "\n";
        std::cout << "intersecting: " << (r.is_intersecting ? "true" : "false") << "\n";
        std::cout << "cross_intersecting: " << (r.is_cross_intersecting ? "true" : "false")
                  << "\n";
        std::cout << "sperner: " << (r.is_sperner ? "true" : "false") << "\n";
        std::cout << "uniform: " << (r.uniform ? std::to_string(*r.uniform) : std::string("no"))
                  << "\n";
        std::cout << "critical: " << (r.is_critical ? "true" : "false") << "\n";
        std::cout << "exceptional: " << (r.exceptional ? "true" : "false") << "\n";
        std::cout << "q_set: " << set_to_string(r.q_set) << "\n";
    }
    return 0;
}

int run_verify(const GlobalOpts& g, const std::string& suite,
               const crossfam::VerifyOptions& opts) {
    crossfam::VerifyResult r;
    if (suite == "prop1")
        r = crossfam::verify_prop1(opts);
    else if (suite == "thm1")
        r = crossfam::verify_thm1(opts);
    else if (suite == "thm2")
        r = crossfam::verify_thm2(opts);
    else if (suite == "thm3")
        r = crossfam::verify_thm3(opts);
    else
        r = crossfam::verify_lemma_flower(opts);

    if (g.json_out()) {
        json j{{"suite", r.suite},
               {"trials", r.trials},
               {"failures", r.failures},
               {"messages", r.messages}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "suite " << r.suite << ": trials=" << r.trials
                  << " failures=" << r.failures << "\n";
        for (const auto& m : r.messages) std::cout << "  " << m << "\n";
    }
    return r.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cross-intersecting set families: generators, predicates, exact solvers"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--node-budget", g.node_budget, "search node cap for the exact solvers")
        ->capture_default_str();

    // gen
    auto* gen = app.add_subcommand("gen", "generate a family");
    std::string gen_example;
    gen->add_option("example", gen_example, "construction name")
        ->required()
        ->check(CLI::IsMember({"wrap", "grid-transversal", "padded", "simple-based", "fano",
                               "iterated-fano", "triangulation"}));
    int gen_n = 0, gen_m = 0, gen_k = 1, gen_grid = 3, gen_copies = 1;
    std::string gen_base, gen_out;
    std::uint64_t gen_path_cap = 1'000'000;
    gen->add_option("--n", gen_n, "size parameter (uniformity / grid order)");
    gen->add_option("--m", gen_m, "padding parameter");
    gen->add_option("--k", gen_k, "iteration depth");
    gen->add_option("--grid", gen_grid, "triangulated grid order");
    gen->add_option("--copies", gen_copies, "disjoint base copies for simple-based");
    gen->add_option("--base", gen_base, "family file with the base hypergraph");
    gen->add_option("--path-cap", gen_path_cap, "path enumeration cap for triangulation");
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    // check / chi / qset
    std::string check_file, chi_file, qset_file;
    auto* check = app.add_subcommand("check", "print the analysis report of a family");
    check->add_option("file", check_file)->required();
    auto* chi_cmd = app.add_subcommand("chi", "exact chromatic number with certificate");
    chi_cmd->add_option("file", chi_file)->required();
    auto* qset_cmd = app.add_subcommand("qset", "pairwise edge intersection sizes");
    qset_cmd->add_option("file", qset_file)->required();

    // tau
    auto* tau_cmd = app.add_subcommand("tau", "exact covering number with certificate");
    std::string tau_file, tau_side = "union";
    tau_cmd->add_option("file", tau_file)->required();
    tau_cmd->add_option("--side", tau_side)->check(CLI::IsMember({"a", "b", "union"}));

    // color
    auto* color = app.add_subcommand("color", "construct a proper coloring");
    std::string color_file, color_strategy = "auto";
    color->add_option("file", color_file)->required();
    color->add_option("--strategy", color_strategy)
        ->check(CLI::IsMember({"exact", "prop4", "thm3", "auto"}));

    // flower
    auto* flower = app.add_subcommand("flower", "find a flower with the given petal count");
    std::string flower_file, flower_side = "union";
    int flower_petals = 0;
    flower->add_option("file", flower_file)->required();
    flower->add_option("--petals", flower_petals)->required();
    flower->add_option("--side", flower_side)->check(CLI::IsMember({"a", "b", "union"}));

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string verify_suite;
    crossfam::VerifyOptions vopts;
    verify->add_option("suite", verify_suite)
        ->required()
        ->check(CLI::IsMember({"thm1", "thm2", "thm3", "prop1", "lemma-flower"}));
    verify->add_option("--seed", vopts.seed)->capture_default_str();
    verify->add_option("--trials", vopts.trials)->capture_default_str();
    verify->add_option("--n", vopts.n)->capture_default_str();
    verify->add_option("--k", vopts.k)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            Family f;
            if (gen_example == "fano") {
                f = crossfam::gen_fano();
            } else if (gen_example == "grid-transversal") {
                if (gen_n == 0) throw std::invalid_argument("grid-transversal needs --n");
                f = crossfam::gen_grid_transversal(gen_n);
            } else if (gen_example == "padded") {
                if (gen_n == 0) throw std::invalid_argument("padded needs --n");
                f = crossfam::gen_padded(gen_n, gen_m);
            } else if (gen_example == "iterated-fano") {
                f = crossfam::gen_iterated_fano(gen_k);
            } else if (gen_example == "triangulation") {
                f = crossfam::gen_triangulation_percolation(gen_grid, gen_path_cap);
            } else if (gen_example == "wrap") {
                if (gen_base.empty()) throw std::invalid_argument("wrap needs --base FILE");
                f = crossfam::gen_wrap(load_family(gen_base));
            } else { // simple-based
                Family base = gen_base.empty()
                                  ? crossfam::gen_disjoint_copies(crossfam::gen_fano(),
                                                                  gen_copies)
                                  : load_family(gen_base);
                int n = gen_n != 0 ? gen_n : crossfam::max_edge_size(base) + 1;
                f = crossfam::gen_simple_based(base, n, g.solve());
            }
            emit(crossfam::serialize_family(f), gen_out);
            return 0;
        }

        if (check->parsed()) return run_check(g, check_file);

        if (chi_cmd->parsed()) {
            crossfam::ChiCertificate cert = crossfam::chi(load_family(chi_file), g.solve());
            if (g.json_out()) {
                json j{{"chi", cert.value},
                       {"lower_bound_certified", cert.lower_bound_certified},
                       {"coloring", coloring_json(cert.coloring)}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "chi = " << cert.value << "\n";
                std::cout << "lower_bound_certified: "
                          << (cert.lower_bound_certified ? "true" : "false") << "\n";
                print_coloring_text(cert.coloring);
            }
            return 0;
        }

        if (qset_cmd->parsed()) {
            std::set<int> q = crossfam::q_set(load_family(qset_file));
            if (g.json_out())
                std::cout << json(q).dump() << "\n";
            else
                std::cout << set_to_string(q) << "\n";
            return 0;
        }

        if (tau_cmd->parsed()) {
            Family f = load_family(tau_file);
            crossfam::TauCertificate t = crossfam::tau(edges_of_side(f, tau_side), g.solve());
            if (g.json_out())
                std::cout << tau_json(t).dump(2) << "\n";
            else
                print_tau_text(t);
            return 0;
        }

        if (color->parsed()) {
            Family f = load_family(color_file);
            crossfam::Coloring c;
            std::string verdict;
            if (color_strategy == "exact") {
                c = crossfam::chi(f, g.solve()).coloring;
            } else if (color_strategy == "prop4") {
                c = crossfam::proposition_four_coloring(f);
            } else if (color_strategy == "thm3") {
                c = crossfam::theorem_three_coloring(f);
            } else {
                crossfam::CrossColoringResult r = crossfam::color_cross_family(f, g.solve());
                c = r.coloring;
                verdict = crossfam::to_string(r.verdict);
            }
            if (g.json_out()) {
                json j = coloring_json(c);
                if (!verdict.empty()) j["verdict"] = verdict;
                std::cout << j.dump(2) << "\n";
            } else {
                if (!verdict.empty()) std::cout << "verdict: " << verdict << "\n";
                print_coloring_text(c);
            }
            return 0;
        }

        if (flower->parsed()) {
            Family f = load_family(flower_file);
            auto cert =
                crossfam::find_flower(edges_of_side(f, flower_side), flower_petals, g.solve());
            if (g.json_out()) {
                if (!cert) {
                    std::cout << json(nullptr).dump() << "\n";
                } else {
                    json j{{"core", cert->core.members()},
                           {"petals", cert->petals},
                           {"tau_witness", tau_json(cert->tau_witness)}};
                    std::cout << j.dump(2) << "\n";
                }
            } else {
                if (!cert) {
                    std::cout << "none\n";
                } else {
                    std::cout << "core: " << ints(cert->core.members()) << "\n";
                    std::cout << "petals: " << cert->petals << "\n";
                    if (cert->tau_witness.infinite())
                        std::cout << "tau(restriction) = infinite\n";
                    else
                        std::cout << "tau(restriction) = " << *cert->tau_witness.value << "\n";
                }
            }
            return 0;
        }

        if (verify->parsed()) {
            vopts.solve = g.solve();
            return run_verify(g, verify_suite, vopts);
        }
    } catch (const crossfam::VerificationFailedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const crossfam::InternalContradictionError& e) {
        std::cerr << "internal contradiction: " << e.what() << "\n";
        return 1;
    } catch (const crossfam::BudgetExhaustedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
