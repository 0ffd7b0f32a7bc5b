#include "torsion/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "torsion/checks.hpp"
#include "torsion/json_io.hpp"

namespace torsion::cli {

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

void print_checks(const CheckList& list, std::ostream& out) {
    for (const auto& r : list)
        out << (r.passed ? "PASS" : "FAIL") << "  " << r.name
            << (r.detail.empty() ? "" : "  [" + r.detail + "]") << "\n";
}

int run_inner(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"chains of torsion classes, weak stability conditions and slicings over type-A interval modules"};
    app.require_subcommand(1);

    int n = 2;
    int dim_bound = 8;        // single queries
    int suite_dim_bound = 6;  // exhaustive suites
    std::string chain_file, chain2_file, wsc_file, module_str_arg, suite = "all";
    bool as_json = false, as_dot = false, filt_check = false, show_family = false;
    bool do_etapm = false, do_seesaw = false;
    std::string semistable_arg;

    auto* tors = app.add_subcommand("tors", "enumerate the torsion-class lattice");
    tors->add_option("--n", n, "quiver vertices")->required()->check(CLI::Range(1, 5));
    tors->add_flag("--json", as_json, "emit lattice JSON");
    tors->add_flag("--dot", as_dot, "emit the Hasse diagram as DOT");

    auto* hasse = app.add_subcommand("hasse", "Hasse diagram with brick labels (DOT)");
    hasse->add_option("--n", n, "quiver vertices")->required()->check(CLI::Range(1, 5));
    hasse->add_flag("--dot", as_dot, "emit DOT (default)");

    auto* mgs = app.add_subcommand("mgs", "maximal green sequences");
    mgs->add_option("--n", n, "quiver vertices")->required()->check(CLI::Range(1, 5));

    auto* hn = app.add_subcommand("hn", "Harder-Narasimhan filtration of a module");
    hn->add_option("--n", n, "quiver vertices")->required()->check(CLI::Range(1, 5));
    hn->add_option("--chain", chain_file, "chain JSON file")->required();
    hn->add_option("--module", module_str_arg, "module, e.g. \"[1,2]+[2,2]*2\"")->required();

    auto* dist = app.add_subcommand("dist", "distance between two chains");
    dist->add_option("--n", n, "quiver vertices (only needed with --separated)")->check(CLI::Range(1, 5));
    dist->add_option("--chain1", chain_file, "first chain JSON file");
    dist->add_option("--chain2", chain2_file, "second chain JSON file");
    dist->add_flag("--filt-check", filt_check, "also verify the Filt reformulation");
    dist->add_flag("--separated", show_family, "print the separated family distance matrix (CSV)");

    auto* nerve_cmd = app.add_subcommand("nerve", "nerve of the lattice and compactness report");
    nerve_cmd->add_option("--n", n, "quiver vertices")->required()->check(CLI::Range(1, 4));
    nerve_cmd->add_flag("--json", as_json, "emit nerve JSON");

    auto* wsc = app.add_subcommand("wsc", "weak stability condition queries");
    wsc->add_option("--n", n, "quiver vertices (inferred from --spec when omitted)")
        ->check(CLI::Range(1, 5));
    wsc->add_option("--spec", wsc_file, "weak stability JSON file")->required();
    wsc->add_flag("--etapm", do_etapm, "print the induced chains eta+ and eta-");
    wsc->add_flag("--seesaw", do_seesaw, "check the see-saw conditions");
    wsc->add_option("--semistable", semistable_arg, "test semistability of a module");
    wsc->add_option("--dim-bound", dim_bound, "oracle dimension bound");

    auto* check = app.add_subcommand("check", "run invariant suites");
    check->add_option("--suite", suite, "core|stability|metric|chambers|all")
        ->check(CLI::IsMember({"core", "stability", "metric", "chambers", "all"}));
    check->add_option("--n", n, "largest quiver exercised")->check(CLI::Range(1, 5));
    check->add_option("--dim-bound", suite_dim_bound, "oracle dimension bound")
        ->check(CLI::Range(1, 8));

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (tors->parsed()) {
        TorsLattice l = enumerate_torsion_classes(make_context(n));
        if (as_json) {
            out << lattice_json(l).dump(2) << "\n";
        } else if (as_dot) {
            out << lattice_dot(l, false);
        } else {
            out << l.count() << " torsion classes for n=" << n << "\n";
            for (const auto& c : l.classes) out << "  " << c.id << ": " << class_str(l, c.id) << "\n";
        }
        return 0;
    }
    if (hasse->parsed()) {
        TorsLattice l = enumerate_torsion_classes(make_context(n));
        out << lattice_dot(l, true);
        return 0;
    }
    if (mgs->parsed()) {
        TorsLattice l = enumerate_torsion_classes(make_context(n));
        auto seqs = maximal_green_sequences(l);
        for (const auto& s : seqs) {
            for (size_t i = 0; i < s.size(); ++i) out << (i ? " > " : "") << class_str(l, s[i]);
            out << "\n";
        }
        out << seqs.size() << " maximal green sequences\n";
        return 0;
    }
    if (hn->parsed()) {
        TorsLattice l = enumerate_torsion_classes(make_context(n));
        Chain c = chain_from_json(l, load_json(chain_file));
        Module m = parse_module(l.ctx, module_str_arg);
        HNFiltration f = hn_filtration(l, c, m);
        for (const auto& layer : f.layers)
            out << module_str(layer.subobject) << "  " << rat_str(layer.phase) << "  "
                << module_str(layer.factor) << "\n";
        return 0;
    }
    if (dist->parsed()) {
        if (show_family) {
            TorsLattice l = enumerate_torsion_classes(make_context(n));
            out << distance_matrix_csv(l, separated_family(l));
            return 0;
        }
        if (chain_file.empty() || chain2_file.empty())
            throw std::invalid_argument("dist: --chain1 and --chain2 are required");
        json j1 = load_json(chain_file);
        if (!j1.is_object() || !j1.contains("n") || !j1["n"].is_number_integer())
            throw std::invalid_argument("chain JSON error at n: expected an integer");
        TorsLattice l = enumerate_torsion_classes(make_context(j1["n"].get<int>()));
        Chain c1 = chain_from_json(l, j1);
        Chain c2 = chain_from_json(l, load_json(chain2_file));
        Rat d = distance(l, c1, c2);
        out << rat_str(d) << "\n";
        if (filt_check) {
            Rat d2 = distance_filt_formula(l, c1, c2);
            out << "filt formula: " << rat_str(d2) << "\n";
            if (d != d2) return 1;
        }
        return 0;
    }
    if (nerve_cmd->parsed()) {
        TorsLattice l = enumerate_torsion_classes(make_context(n));
        NerveComplex nc = nerve(l);
        if (as_json) {
            out << nerve_json(nc).dump(2) << "\n";
            return 0;
        }
        CompactnessReport rep = compactness_report(l);
        out << "f-vector:";
        for (long long v : rep.f_vector) out << " " << v;
        out << "\nfacets: " << rep.facet_count << "\n" << rep.verdict << "\n";
        return 0;
    }
    if (wsc->parsed()) {
        json jw = load_json(wsc_file);
        if (wsc->count("--n") == 0) {
            if (jw.contains("theta") && jw["theta"].is_array())
                n = static_cast<int>(jw["theta"].size());
            else if (jw.contains("chain") && jw["chain"].contains("n") &&
                     jw["chain"]["n"].is_number_integer())
                n = jw["chain"]["n"].get<int>();
            else
                throw std::invalid_argument("wsc: cannot infer n from " + wsc_file +
                                            ", pass --n");
            if (n < 1 || n > 5) throw std::invalid_argument("wsc: inferred n out of range 1..5");
        }
        TorsLattice l = enumerate_torsion_classes(make_context(n));
        WeakStability w = wsc_from_json(l, jw);
        if (do_etapm) {
            auto [plus, minus] = eta_pm(l, w);
            out << "eta+: " << chain_json(l, plus).dump() << "\n";
            out << "eta-: " << chain_json(l, minus).dump() << "\n";
        }
        if (do_seesaw) {
            SeesawVerdict v = check_weak_seesaw(l, w, dim_bound);
            out << "weak: " << (v.weak_passed ? "pass" : "fail");
            if (v.weak_witness)
                out << "  witness 0 -> " << module_str(v.weak_witness->sub) << " -> "
                    << module_str(v.weak_witness->whole) << " -> " << module_str(v.weak_witness->quot)
                    << " -> 0";
            out << "\nstrict see-saw: " << (v.seesaw_passed ? "pass" : "fail");
            if (v.seesaw_witness)
                out << "  witness 0 -> " << module_str(v.seesaw_witness->sub) << " -> "
                    << module_str(v.seesaw_witness->whole) << " -> "
                    << module_str(v.seesaw_witness->quot) << " -> 0";
            out << "\n";
            if (!v.weak_passed) return 1;
        }
        if (!semistable_arg.empty()) {
            Module m = parse_module(l.ctx, semistable_arg);
            bool ss = is_semistable(l, w, m, dim_bound);
            out << module_str(m) << ": " << (ss ? "semistable" : "not semistable") << ", phase "
                << rat_str(phase(l, w, m)) << "\n";
        }
        return 0;
    }
    if (check->parsed()) {
        CheckList list;
        if (suite == "core") list = suite_core(n, suite_dim_bound);
        else if (suite == "stability") list = suite_stability(n, suite_dim_bound);
        else if (suite == "metric") list = suite_metric(n, suite_dim_bound);
        else if (suite == "chambers") list = suite_chambers(n, suite_dim_bound);
        else list = suite_all(n, suite_dim_bound);
        print_checks(list, out);
        return all_passed(list) ? 0 : 1;
    }
    return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_inner(args, out, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace torsion::cli
