// slocc2mn — exact SLOCC classification of pure 2 x M x N states.
//
// Subcommands: count, table, classify, canonical-params, orbit, equiv,
// catalog, selftest. Exit codes: 0 ok, 1 property failure / inequivalent,
// 2 usage or malformed input, 3 not true-tripartite, 4 outside exact scope
// (an eigenvalue is not Gaussian-rational).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "slocc2mn/catalog.hpp"
#include "slocc2mn/counting.hpp"
#include "slocc2mn/nonlocal.hpp"
#include "slocc2mn/selftest.hpp"
#include "slocc2mn/state_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotTripartite = 3;
constexpr int kExitInexact = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw slocc::ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

slocc::pencil::PencilState load_state(const std::string& path) {
    return slocc::io::to_state(slocc::io::parse_state_document(read_file(path)));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact SLOCC classifier and class counter for pure 2 x M x N states"};
    app.require_subcommand(1);

    int count_m = 0, count_n = 0;
    auto* cmd_count = app.add_subcommand("count", "Print the number of true-tripartite classes");
    cmd_count->add_option("M", count_m, "second-party dimension")->required();
    cmd_count->add_option("N", count_n, "third-party dimension")->required();

    int table_max = 10;
    std::string table_format = "text";
    auto* cmd_table = app.add_subcommand("table", "Print the class-count table for 2..max");
    cmd_table->add_option("--max", table_max, "largest dimension")->check(CLI::Range(2, 64));
    cmd_table->add_option("--format", table_format, "text|tsv")
        ->check(CLI::IsMember({"text", "tsv"}));

    std::string classify_path;
    auto* cmd_classify = app.add_subcommand("classify", "Classify a state document (JSON)");
    cmd_classify->add_option("file", classify_path, "state document")->required();

    std::string params_text;
    bool params_extra_h = false;
    auto* cmd_params = app.add_subcommand("canonical-params", "Canonicalize a parameter vector");
    cmd_params->add_option("params", params_text, "e.g. \"[4/3, 3/2]\"")->required();
    cmd_params->add_flag("--extra-h", params_extra_h, "the N = m+1 family (H generator active)");

    std::string orbit_text;
    bool orbit_extra_h = false;
    auto* cmd_orbit = app.add_subcommand("orbit", "Print the symmetry orbit of a parameter vector");
    cmd_orbit->add_option("params", orbit_text, "e.g. \"[2]\"")->required();
    cmd_orbit->add_flag("--extra-h", orbit_extra_h, "the N = m+1 family (H generator active)");

    std::string equiv_a, equiv_b;
    auto* cmd_equiv = app.add_subcommand("equiv", "Decide SLOCC equivalence of two states");
    cmd_equiv->add_option("fileA", equiv_a, "first state document")->required();
    cmd_equiv->add_option("fileB", equiv_b, "second state document")->required();

    int catalog_m = 0, catalog_n = 0;
    auto* cmd_catalog = app.add_subcommand("catalog", "Emit all labels of (M, N) as JSON");
    cmd_catalog->add_option("M", catalog_m, "second-party dimension")->required();
    cmd_catalog->add_option("N", catalog_n, "third-party dimension")->required();

    unsigned long selftest_seed = 20130531;
    int selftest_trials = 20;
    int selftest_maxdim = 5;
    auto* cmd_selftest = app.add_subcommand("selftest", "Run the property suite");
    cmd_selftest->add_option("--seed", selftest_seed, "RNG seed");
    cmd_selftest->add_option("--trials", selftest_trials, "random trials per property");
    cmd_selftest->add_option("--max-dim", selftest_maxdim, "largest (M, N) in the invariance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*cmd_count) {
            std::cout << slocc::counting::omega_total(count_m, count_n).get_str() << "\n";
            return kExitOk;
        }
        if (*cmd_table) {
            auto table = slocc::counting::build_table(table_max, table_max);
            std::cout << slocc::counting::format_table(table, table_format == "tsv");
            return kExitOk;
        }
        if (*cmd_classify) {
            auto state = load_state(classify_path);
            if (!slocc::pencil::is_true_tripartite(state)) {
                std::cout << "{\n  \"label\": \"not-true-tripartite\"\n}\n";
                return kExitNotTripartite;
            }
            std::cout << slocc::io::label_to_json(slocc::pencil::class_label(state)) << "\n";
            return kExitOk;
        }
        if (*cmd_params) {
            auto v = slocc::nonlocal::parse_param_vector(params_text, params_extra_h);
            std::cout << slocc::nonlocal::canonical_params(v).str() << "\n";
            return kExitOk;
        }
        if (*cmd_orbit) {
            auto v = slocc::nonlocal::parse_param_vector(orbit_text, orbit_extra_h);
            auto orb = slocc::nonlocal::orbit(v);
            for (const auto& member : orb) std::cout << member.str() << "\n";
            std::cout << "size " << orb.size() << "\n";
            return kExitOk;
        }
        if (*cmd_equiv) {
            auto a = load_state(equiv_a);
            auto b = load_state(equiv_b);
            if (!slocc::pencil::is_true_tripartite(a) || !slocc::pencil::is_true_tripartite(b)) {
                std::cerr << "error: both states must be true-tripartite\n";
                return kExitNotTripartite;
            }
            bool same = slocc::pencil::class_label(a) == slocc::pencil::class_label(b);
            std::cout << (same ? "equivalent" : "inequivalent") << "\n";
            return same ? kExitOk : kExitFail;
        }
        if (*cmd_catalog) {
            std::cout << slocc::io::catalog_to_json(catalog_m, catalog_n) << "\n";
            return kExitOk;
        }
        if (*cmd_selftest) {
            slocc::selftest::Options opt;
            opt.seed = selftest_seed;
            opt.trials = selftest_trials;
            opt.max_dim = selftest_maxdim;
            auto results = slocc::selftest::run_all(opt);
            for (const auto& r : results) {
                std::cout << (r.passed ? "ok   " : "FAIL ") << r.name;
                if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
                std::cout << "\n";
                if (!r.passed) {
                    std::cout << "selftest failed: " << r.name << "\n";
                    return kExitFail;
                }
            }
            std::cout << "all " << results.size() << " properties passed\n";
            return kExitOk;
        }
    } catch (const slocc::IrreducibleRemainder& e) {
        std::cerr << "error: out of exact scope: " << e.what() << "\n";
        return kExitInexact;
    } catch (const slocc::NotTrueTripartite&) {
        std::cout << "{\n  \"label\": \"not-true-tripartite\"\n}\n";
        return kExitNotTripartite;
    } catch (const slocc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const slocc::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
