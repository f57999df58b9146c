// Command-line front end: generate state sets, verify them, manage weighing
// matrices, and print order diagrams.
//
// Exit codes: 0 ok / certified unextendible; 1 a check failed, a set is
// extendible, or a searched matrix does not exist; 2 invalid input or
// parameters; 3 undecided verdict, exhausted budget, or missing ingredient.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "suebk/construct.hpp"
#include "suebk/errors.hpp"
#include "suebk/io.hpp"
#include "suebk/verify.hpp"

namespace fs = std::filesystem;
using namespace suebk;

namespace {

struct NRange {
    long long lo = 0;
    long long hi = 0;
};

NRange parse_n_spec(const std::string& spec) {
    const auto dots = spec.find("..");
    try {
        if (dots == std::string::npos) {
            const long long v = std::stoll(spec);
            return {v, v};
        }
        const long long lo = std::stoll(spec.substr(0, dots));
        const long long hi = std::stoll(spec.substr(dots + 2));
        if (lo > hi) throw std::domain_error("empty range");
        return {lo, hi};
    } catch (const std::exception&) {
        throw std::domain_error("bad N spec '" + spec + "', expected an integer or lo..hi");
    }
}

Coord parse_coord(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        throw std::domain_error("bad coordinate '" + s + "', expected row,col");
    try {
        return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw std::domain_error("bad coordinate '" + s + "', expected row,col");
    }
}

Catalog load_catalog(const std::string& path) {
    Catalog cat;
    if (!path.empty()) cat.load_file(path);
    return cat;
}

int verdict_exit_code(const VerificationReport& rep) {
    if (!rep.ortho_pass || !rep.sesk_failures.empty()) return 1;
    switch (rep.verdict) {
        case Verdict::Unextendible: return 0;
        case Verdict::Extendible: return 1;
        case Verdict::Undecided: return 3;
    }
    return 3;
}

int run_generate(int d, int dprime, int k, const std::string& n_spec, int type,
                 int m1, int m2, const std::string& split, const std::string& plan_path,
                 std::string out_path, const std::string& catalog_path, double eps) {
    const Catalog catalog = load_catalog(catalog_path);
    const Tolerance tol{eps};

    DecomposePolicy policy;
    if (!split.empty()) {
        const Coord st = parse_coord(split);  // reuse the "a,b" parser
        policy = DecomposePolicy::exact(st.row, st.col);
    }

    std::vector<SuebkSet> sets;
    if (!plan_path.empty()) {
        const PlanFile pf = read_plan_file(plan_path);
        WeighingRegistry registry;
        for (const auto& spec : pf.blocks)
            if (!registry.count(spec.weighing_id))
                registry.emplace(spec.weighing_id, resolve_weighing(spec.weighing_id, catalog));
        const PlacementPlan plan = manual_plan(pf.d, pf.dprime, pf.k, pf.active_rows,
                                               pf.active_cols, pf.deleted, pf.blocks, registry);
        sets.push_back(build(plan, registry));
    } else {
        if (d <= 0 || dprime <= 0 || k <= 0)
            throw std::domain_error("generate needs -d, -p and -k (or --plan)");
        const NRange range = parse_n_spec(n_spec);
        for (long long n = range.lo; n <= range.hi; ++n) {
            if (type == 1) {
                const WeighingMatrix a = fourier_matrix(k);
                const auto b = catalog.lookup(k, k + 1);
                if (!b) throw IngredientMissing("no W(n,k,k+1) for k=" + std::to_string(k));
                sets.push_back(build(plan_type1(d, dprime, k, a, *b, n, policy),
                                     registry_for({a, *b})));
            } else if (type == 2) {
                if (m1 <= 0 || m2 <= 0)
                    throw std::domain_error("--type 2 needs --m1 and --m2");
                const WeighingMatrix a = fourier_matrix(k);
                const auto b = catalog.lookup(k, k + 1);
                if (!b) throw IngredientMissing("no W(n,k,k+1) for k=" + std::to_string(k));
                sets.push_back(build(plan_type2(d, dprime, k, a, *b, m1, m2, n, policy),
                                     registry_for({a, *b})));
            } else {
                sets.push_back(auto_generate(d, dprime, k, n, catalog, policy));
            }
        }
    }

    const bool single = sets.size() == 1;
    const bool out_is_file = single && !out_path.empty() && out_path.size() > 5 &&
                             out_path.substr(out_path.size() - 5) == ".json";
    if (out_path.empty()) out_path = ".";

    for (const SuebkSet& set : sets) {
        const VerificationReport rep = check_unextendible(set.d, set.dprime, set.matrices,
                                                          set.k, tol);
        if (rep.verdict != Verdict::Unextendible) {
            std::cerr << "self-verification failed for N=" << set.n() << " (verdict "
                      << to_string(rep.verdict) << ")\n";
            return 1;
        }
        std::string path = out_path;
        if (!out_is_file) {
            fs::create_directories(out_path);
            std::ostringstream name;
            name << "suebk_d" << set.d << "x" << set.dprime << "_k" << set.k << "_N"
                 << set.n() << ".json";
            path = (fs::path(out_path) / name.str()).string();
        }
        write_state_set(path, set);
        std::cout << "wrote " << set.n() << " states to " << path
                  << " (verdict Unextendible, ortho dev " << rep.ortho_max_dev << ")\n";
    }
    return 0;
}

int run_verify(const std::string& path, int k_override, double eps, bool as_json) {
    SuebkSet set;
    try {
        set = read_state_set(path);
    } catch (const FileFormatError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    const int k = k_override > 0 ? k_override : set.k;
    const VerificationReport rep =
        check_unextendible(set.d, set.dprime, set.matrices, k, Tolerance{eps});
    if (as_json)
        std::cout << report_to_json(rep);
    else
        print_report(std::cout, rep);
    return verdict_exit_code(rep);
}

int run_weighing_validate(const std::string& path, double eps) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return 2;
    }
    std::vector<WeighingMatrix> records;
    try {
        records = read_catalog(in);
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    if (records.empty()) {
        std::cerr << "no records in " << path << "\n";
        return 2;
    }
    bool all_valid = true;
    for (const auto& w : records) {
        const ValidationReport rep = validate(w, Tolerance{eps});
        std::cout << w.name() << ": "
                  << (rep.valid ? "valid, weight " + std::to_string(rep.weight)
                                : "INVALID (" + rep.reason + ")")
                  << ", max deviation " << rep.max_deviation << "\n";
        all_valid = all_valid && rep.valid && rep.weight == w.weight();
    }
    return all_valid ? 0 : 1;
}

int run_weighing_search(int n, int k, int a, std::uint64_t budget, bool exhaustive,
                        const std::string& catalog_path, bool save) {
    const SearchResult res = search(n, k, a, SearchBudget{budget, exhaustive});
    std::cout << "explored " << res.nodes << " nodes\n";
    switch (res.outcome) {
        case SearchOutcome::Found: {
            std::ostringstream buf;
            write_catalog(buf, {*res.matrix});
            std::cout << buf.str();
            if (save && !catalog_path.empty()) {
                Catalog cat;
                if (fs::exists(catalog_path)) cat.load_file(catalog_path);
                cat.add(*res.matrix);
                cat.save_file(catalog_path);
                std::cout << "saved to " << catalog_path << "\n";
            }
            return 0;
        }
        case SearchOutcome::Nonexistent:
            std::cout << "nonexistent: W(" << n << "," << k << "," << a << ") is empty\n";
            return 1;
        case SearchOutcome::BudgetExceeded:
            std::cout << "unknown: budget exhausted\n";
            return 3;
    }
    return 3;
}

int run_weighing_catalog_list(const std::string& catalog_path) {
    const Catalog cat = load_catalog(catalog_path);
    std::cout << "CH<d>: Fourier matrices, synthesized for any d >= 2\n";
    for (const auto& w : cat.list())
        std::cout << w.name() << ": order " << w.order() << ", weight " << w.weight()
                  << ", root order " << w.root_order() << "\n";
    return 0;
}

int run_order(int d, int dprime, const std::vector<std::string>& deletions,
              const std::string& format, const std::string& out_path) {
    std::vector<Coord> deleted;
    for (const auto& s : deletions) deleted.push_back(parse_coord(s));
    const OrderedGrid grid(d, dprime);
    const std::string text =
        format == "csv" ? render_order_csv(grid, deleted) : render_order_ascii(grid, deleted);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SUEBk toolkit: block constructions of special unextendible entangled "
                 "bases and their certification"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "construct state sets and write them as JSON");
    int g_d = 0, g_dp = 0, g_k = 0, g_type = 0, g_m1 = 0, g_m2 = 0;
    std::string g_n, g_split, g_plan, g_out, g_catalog, g_type_str = "auto";
    double g_eps = 1e-9;
    gen->add_option("-d", g_d, "rows of the ambient space");
    gen->add_option("-p,--dprime", g_dp, "columns of the ambient space");
    gen->add_option("-k", g_k, "type parameter");
    gen->add_option("-N", g_n, "target cardinality, an integer or a range lo..hi");
    gen->add_option("--type", g_type_str, "construction: auto, 1 or 2")
        ->check(CLI::IsMember({"auto", "1", "2"}));
    gen->add_option("--m1", g_m1, "row base for --type 2");
    gen->add_option("--m2", g_m2, "column base for --type 2");
    gen->add_option("--split", g_split, "explicit coin decomposition s,t");
    gen->add_option("--plan", g_plan, "build from a plan file instead");
    gen->add_option("-o,--out", g_out, "output file (single N) or directory");
    gen->add_option("--catalog", g_catalog, "weighing-matrix catalog file");
    gen->add_option("--eps", g_eps, "verification tolerance")->envname("SUEBK_EPS");

    // verify
    auto* ver = app.add_subcommand("verify", "certify a state-set file");
    std::string v_file;
    int v_k = 0;
    double v_eps = 1e-9;
    bool v_json = false;
    ver->add_option("file", v_file, "state-set JSON file")->required();
    ver->add_option("-k", v_k, "override the file's type parameter");
    ver->add_option("--eps", v_eps, "tolerance")->envname("SUEBK_EPS");
    ver->add_flag("--json", v_json, "emit the report as JSON");

    // weighing
    auto* wei = app.add_subcommand("weighing", "weighing-matrix utilities");
    wei->require_subcommand(1);
    auto* wv = wei->add_subcommand("validate", "validate a catalog-format file");
    std::string wv_file;
    double wv_eps = 1e-9;
    wv->add_option("file", wv_file, "catalog-format file")->required();
    wv->add_option("--eps", wv_eps, "tolerance")->envname("SUEBK_EPS");
    auto* ws = wei->add_subcommand("search", "backtracking search for a W(n,k,a)");
    int ws_n = 0, ws_k = 0, ws_a = 0;
    std::uint64_t ws_budget = 5'000'000;
    bool ws_exhaustive = false, ws_save = false;
    std::string ws_catalog;
    ws->add_option("n", ws_n, "root order")->required();
    ws->add_option("k", ws_k, "weight")->required();
    ws->add_option("a", ws_a, "matrix order")->required();
    ws->add_option("--budget", ws_budget, "node limit");
    ws->add_flag("--exhaustive", ws_exhaustive, "run the full tree (definitive answer)");
    ws->add_flag("--save", ws_save, "persist a hit into the catalog file");
    ws->add_option("--catalog", ws_catalog, "catalog file for --save");
    auto* wc = wei->add_subcommand("catalog", "catalog inspection");
    auto* wcl = wc->add_subcommand("list", "list available matrices");
    std::string wc_catalog;
    wcl->add_option("--catalog", wc_catalog, "catalog file to merge in");

    // order
    auto* ord = app.add_subcommand("order", "print the coordinate order as a diagram");
    int o_d = 0, o_dp = 0;
    std::vector<std::string> o_del;
    std::string o_format = "ascii", o_out;
    ord->add_option("d", o_d, "rows")->required();
    ord->add_option("dprime", o_dp, "columns")->required();
    ord->add_option("--delete", o_del, "cells to mark deleted, as row,col");
    ord->add_option("--format", o_format, "csv or ascii")
        ->check(CLI::IsMember({"csv", "ascii"}));
    ord->add_option("-o,--out", o_out, "write to a file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            g_type = (g_type_str == "auto") ? 0 : std::stoi(g_type_str);
            return run_generate(g_d, g_dp, g_k, g_n, g_type, g_m1, g_m2, g_split, g_plan,
                                g_out, g_catalog, g_eps);
        }
        if (ver->parsed()) return run_verify(v_file, v_k, v_eps, v_json);
        if (wei->parsed()) {
            if (wv->parsed()) return run_weighing_validate(wv_file, wv_eps);
            if (ws->parsed())
                return run_weighing_search(ws_n, ws_k, ws_a, ws_budget, ws_exhaustive,
                                           ws_catalog, ws_save);
            if (wc->parsed() && wcl->parsed()) return run_weighing_catalog_list(wc_catalog);
        }
        if (ord->parsed()) return run_order(o_d, o_dp, o_del, o_format, o_out);
    } catch (const UnsupportedParameters& e) {
        std::cerr << "unsupported parameters: " << e.what() << "\n";
        return 2;
    } catch (const PlanInvalid& e) {
        std::cerr << "invalid plan: " << e.what() << "\n";
        return 2;
    } catch (const IngredientMissing& e) {
        std::cerr << "missing ingredient: " << e.what() << "\n";
        return 3;
    } catch (const NotRepresentable& e) {
        std::cerr << "not representable: " << e.what() << "\n";
        return 2;
    } catch (const FileFormatError& e) {
        std::cerr << "file error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
