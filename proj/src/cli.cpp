#include "kron/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "kron/bounds.hpp"
#include "kron/characters.hpp"
#include "kron/engine.hpp"
#include "kron/errors.hpp"
#include "kron/stability.hpp"
#include "kron/vanishing.hpp"

namespace kron {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct CliCommon {
    int m = 0, n = 0;
    std::string lambda_text, mu_text, nu_text;
    int threads = 0;
    bool verbose = false;
    std::string cache_dir;
    std::string output = "json";
    int k_max = 6;
    bool size_equality = true;
};

long long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

PartitionTriple make_triple(const CliCommon& c) {
    if (c.m < 1 || c.n < 1) throw ParseError("--m and --n must be positive");
    return PartitionTriple(
        Partition::parse(c.lambda_text, static_cast<std::size_t>(c.m) * static_cast<std::size_t>(c.n)),
        Partition::parse(c.mu_text, static_cast<std::size_t>(c.m)),
        Partition::parse(c.nu_text, static_cast<std::size_t>(c.n)), c.m, c.n);
}

Json triple_json(const PartitionTriple& t) {
    Json j;
    j["m"] = t.m;
    j["n"] = t.n;
    j["lambda"] = t.lambda.to_string();
    j["mu"] = t.mu.to_string();
    j["nu"] = t.nu.to_string();
    return j;
}

std::string cache_path(const std::string& dir, const VpfMatrix& A) {
    return dir + "/vpf-memo-" + std::to_string(A.m) + "x" + std::to_string(A.n) + "-" +
           matrix_hash(A) + ".txt";
}

void load_cache(KronEngine& eng, const CliCommon& c) {
    if (c.cache_dir.empty() || c.m < 2 || c.n < 2) return;
    std::ifstream in(cache_path(c.cache_dir, eng.matrix(c.m, c.n)));
    if (in) eng.memo(c.m, c.n).load(in);
}

void save_cache(KronEngine& eng, const CliCommon& c) {
    if (c.cache_dir.empty() || c.m < 2 || c.n < 2) return;
    const std::string path = cache_path(c.cache_dir, eng.matrix(c.m, c.n));
    std::ofstream out(path);
    if (!out) throw MatrixIoError("cannot write memo cache " + path);
    eng.memo(c.m, c.n).save(out);
}

EngineOptions engine_options(const CliCommon& c) {
    EngineOptions o;
    o.threads = c.threads;
    if (const char* budget = std::getenv("KRON_BOX_CELLS")) o.box_cell_budget = std::strtoull(budget, nullptr, 10);
    return o;
}

void add_common(CLI::App* cmd, CliCommon& c, bool partitions, bool needs_mn = true) {
    if (needs_mn) {
        cmd->add_option("--m", c.m, "length bound for mu")->required();
        cmd->add_option("--n", c.n, "length bound for nu")->required();
    }
    if (partitions) {
        cmd->add_option("--lambda", c.lambda_text, "lambda, comma separated")->required();
        cmd->add_option("--mu", c.mu_text, "mu, comma separated")->required();
        cmd->add_option("--nu", c.nu_text, "nu, comma separated")->required();
    }
    cmd->add_option("--threads", c.threads, "worker threads (0 = auto)");
    cmd->add_flag("--verbose", c.verbose, "emit per-sigma term reports");
    cmd->add_option("--cache-dir", c.cache_dir, "persistent memo cache directory");
    cmd->add_option("--output", c.output, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
}

// ------------------------------------------------------------ reproduce-paper

struct PaperCheck {
    std::string name;
    std::string expected, actual;
    bool pass = false;
};

void run_reproduce(std::vector<PaperCheck>& checks, bool skip_slow, int threads) {
    EngineOptions opts;
    opts.threads = threads;
    KronEngine eng(opts);
    auto add = [&](const std::string& name, const std::string& expected,
                   const std::string& actual) {
        checks.push_back({name, expected, actual, expected == actual});
    };
    auto triple = [](const char* l, const char* mu, const char* nu, int m, int n) {
        return PartitionTriple(Partition::parse(l, static_cast<std::size_t>(m * n)),
                               Partition::parse(mu, static_cast<std::size_t>(m)),
                               Partition::parse(nu, static_cast<std::size_t>(n)), m, n);
    };

    add("parse pads (12,7,4,1) to length 6", "12,7,4,1,0,0",
        Partition::parse("12,7,4,1", 6).to_string());
    add("staircase delta^(4)", "3,2,1,0", Partition::staircase(4).to_string());

    {
        std::multiset<std::vector<int>> printed;
        const std::vector<std::vector<int>> rows = {{1, 0, 0, 1, 0, 0, 0, 1, 1, 1, 1},
                                                    {0, 1, 0, 0, 1, 1, 1, 1, 1, 2, 2},
                                                    {0, 0, 1, 1, 1, 1, 2, 1, 2, 2, 3}};
        for (std::size_t c = 0; c < rows[0].size(); ++c)
            printed.insert({rows[0][c], rows[1][c], rows[2][c]});
        const VpfMatrix A = eng.matrix(2, 3);
        std::multiset<std::vector<int>> ours(A.columns.begin(), A.columns.end());
        add("A^{2,3} column multiset matches the printed matrix", "match",
            ours == printed ? "match" : "mismatch");
    }
    add("A^{3,3} shape", "4x30",
        std::to_string(eng.matrix(3, 3).rows()) + "x" + std::to_string(eng.matrix(3, 3).cols()));
    {
        bool all_ok = true;
        for (int m = 2; m <= 4; ++m)
            for (int n = 2; n <= 4; ++n)
                if (!check_matrix_properties(build_matrix(m, n)).all()) all_ok = false;
        add("matrix properties (i)-(v), 2 <= m,n <= 4", "hold", all_ok ? "hold" : "fail");
    }
    add("p_{A^{2,3}} degree", "8", std::to_string(vpf_polynomial_degree(eng.matrix(2, 3))));
    add("p_{A^{2,4}} degree", "17", std::to_string(vpf_polynomial_degree(eng.matrix(2, 4))));

    add("atomic (2,2) of (12,7,4,1),(12,12),(12,12)", "32",
        eng.atomic(triple("12,7,4,1", "12,12", "12,12", 2, 2)).get_str());
    add("atomic (2,3) of the same padded input", "8793",
        eng.atomic(triple("12,7,4,1", "12,12", "12,12,0", 2, 3)).get_str());

    add("g_{(1,1),(1,1),(1,1)}", "0", eng.kronecker(triple("1,1", "1,1", "1,1", 2, 2)).g.get_str());
    add("g_{(2,2),(2,2),(2,2)}", "1", eng.kronecker(triple("2,2", "2,2", "2,2", 2, 2)).g.get_str());
    add("g = 4 example at (2,4)", "4",
        eng.kronecker(triple("6,4,4,1", "12,3", "5,4,3,3", 2, 4)).g.get_str());
    add("Ressayre counterexample has g = 1", "1",
        eng.kronecker(triple("1,1,1,1,0", "2,2", "2,2,0,0", 2, 4)).g.get_str());

    add("contributing terms for the (2,3) record triple", "288",
        std::to_string(eng.count_contributing_terms(triple("87,87,24", "99,99", "66,66,66", 2, 3))));

    {
        auto [mu, nu] = stable_mu_nu(Partition::parse("10,8,5,3,2,2", 6), 2, 3);
        add("stable mu,nu from the worked stable-face lambda (printed mu has a typo: 17 vs 18)",
            "18,12|18,7,5", mu.to_string() + "|" + nu.to_string());
        PartitionTriple t(Partition::parse("10,8,5,3,2,2", 6), mu, nu, 2, 3);
        add("stable triple has g = atomic = 1", "1|1",
            eng.kronecker(t).g.get_str() + "|" + eng.atomic(t).get_str());
    }
    {
        PartitionTriple base = triple("34,27,20,12,4,3", "70,30", "43,39,18", 2, 3);
        PartitionTriple dir = triple("10,8,5,3,2,2", "18,12", "18,7,5", 2, 3);
        auto seq = eng.stability_sequence(base, dir, 6);
        std::string got;
        for (const auto& v : seq) {
            if (!got.empty()) got += ",";
            got += v.get_str();
        }
        add("stability sequence k = 0..6", "2566,18028,36174,43896,44638,44713,44729", got);
    }
    {
        PartitionTriple t(Partition::parse("15,15,15,10,10,10,10,10,5", 9),
                          Partition::parse("35,35,30", 3), Partition::parse("40,30,30", 3), 3, 3);
        add("published bound table: factorial x binomial (printed value 1.42e16 is not\n"
            "    obtainable from the stated formulas; ours is tighter)",
            "1.42e16", sci_string_ceil(kron_factorial_bound(t)));
        add("published bound table: size-only bound", "5.38e45", sci_string_ceil(n_only_bound(t)));
        const PakPanovaBounds pp = pak_panova_bounds(t, 9, 3, 3);
        add("published bound table: Pak-Panova bound 1", "2.84e27", sci_string_ceil(pp.bound1));
        add("published bound table: Pak-Panova bound 2", "1.13e54", sci_string_ceil(pp.bound2));
    }
    {
        SigmaPoset poset = build_sigma_poset(
            2, 2,
            std::vector<Permutation>{Permutation({1, 2, 3, 4}), Permutation({1, 3, 2, 4}),
                                     Permutation({2, 1, 3, 4}), Permutation({1, 2, 4, 3}),
                                     Permutation({3, 1, 2, 4}), Permutation({2, 1, 4, 3}),
                                     Permutation({1, 3, 4, 2})});
        add("poset of the seven (2,2) contributing terms: 9 covers, Id on top", "9",
            std::to_string(poset.covers.size()));
    }

    if (!skip_slow) {
        add("g = 391 example at (2,4)", "391",
            eng.kronecker(triple("57,57,57,33,33,33,10,0", "140,140", "70,70,70,70", 2, 4))
                .g.get_str());
        add("feasible sigma count at (2,3), size equality imposed", "482",
            std::to_string(feasible_sigma_set(2, 3, true).size()));
        add("feasible sigma count at (2,4), size equality imposed", "28322",
            std::to_string(feasible_sigma_set(2, 4, true).size()));
    }
}

int exit_code_for_exception(const std::exception& e, std::ostream& err) {
    err << "error: " << e.what() << "\n";
    if (dynamic_cast<const ResourceGuardError*>(&e)) return 2;
    if (dynamic_cast<const TooLargeError*>(&e)) return 2;
    return 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kronecker coefficients from vector partition functions"};
    app.require_subcommand(1);

    CliCommon c;
    if (const char* env = std::getenv("KRON_CACHE_DIR")) c.cache_dir = env;

    auto* compute = app.add_subcommand("compute", "g_{lambda,mu,nu} by the signed sigma sum");
    add_common(compute, c, true);
    auto* atomic = app.add_subcommand("atomic", "the single-identity-term coefficient");
    add_common(atomic, c, true);
    auto* bounds = app.add_subcommand("bounds", "all upper bound families");
    add_common(bounds, c, true);
    auto* vanish = app.add_subcommand("vanish", "generalized Bravyi vanishing report");
    add_common(vanish, c, true);
    auto* stable = app.add_subcommand("stable-triple", "mu, nu from lambda by the rewrite equations");
    stable->add_option("--m", c.m)->required();
    stable->add_option("--n", c.n)->required();
    stable->add_option("--lambda", c.lambda_text)->required();
    stable->add_option("--threads", c.threads);
    auto* feasible = app.add_subcommand("feasible-set", "sigma with a feasible b >= 0 polyhedron");
    feasible->add_option("--m", c.m)->required();
    feasible->add_option("--n", c.n)->required();
    feasible->add_flag("--size-equality,!--no-size-equality", c.size_equality,
                       "require |lambda| = |mu| = |nu| in the feasibility system");
    auto* poset = app.add_subcommand("poset", "dominance poset of alternant terms");
    poset->add_option("--m", c.m)->required();
    poset->add_option("--n", c.n)->required();
    std::string elements_text;
    poset->add_option("--elements", elements_text,
                      "restrict to these permutations (one-line, comma separated)");
    auto* seq = app.add_subcommand("stability-seq", "g(base + k*direction) for k = 0..k-max");
    add_common(seq, c, true);
    std::string base_lambda, base_mu, base_nu;
    seq->add_option("--base-lambda", base_lambda)->required();
    seq->add_option("--base-mu", base_mu)->required();
    seq->add_option("--base-nu", base_nu)->required();
    seq->add_option("--k-max", c.k_max);
    auto* matrix = app.add_subcommand("matrix", "emit the A^{m,n} cache file");
    matrix->add_option("--m", c.m)->required();
    matrix->add_option("--n", c.n)->required();
    std::string matrix_path;
    matrix->add_option("--path", matrix_path, "output file")->required();
    auto* reproduce = app.add_subcommand("reproduce-paper", "re-run the published worked examples");
    bool skip_slow = false;
    reproduce->add_flag("--skip-slow", skip_slow, "skip the multi-minute examples");
    reproduce->add_option("--threads", c.threads);

    std::vector<const char*> argv;
    argv.push_back("kron");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    const auto start = Clock::now();
    try {
        if (compute->parsed() || atomic->parsed() || bounds->parsed() || vanish->parsed()) {
            PartitionTriple t = make_triple(c);
            KronEngine eng(engine_options(c));
            Json j = triple_json(t);
            if (compute->parsed()) {
                load_cache(eng, c);
                KroneckerResult res = eng.kronecker(t, c.verbose);
                save_cache(eng, c);
                if (c.output == "table") {
                    out << "g = " << res.g.get_str() << "  (terms evaluated "
                        << res.terms_evaluated << ", skipped " << res.terms_skipped << ", "
                        << ms_since(start) << " ms)\n";
                    return 0;
                }
                j["g"] = res.g.get_str();
                j["terms_evaluated"] = res.terms_evaluated;
                j["terms_skipped"] = res.terms_skipped;
                if (c.verbose) {
                    // term reports as JSON lines on stderr; stdout stays a
                    // single schema-stable object
                    for (const auto& term : res.terms) {
                        if (term.skipped) continue;
                        Json tj;
                        tj["sigma"] = term.sigma.to_string();
                        tj["sign"] = term.sign;
                        tj["b"] = term.b;
                        tj["count"] = term.count.get_str();
                        err << tj.dump() << "\n";
                    }
                }
            } else if (atomic->parsed()) {
                load_cache(eng, c);
                const BigInt a = eng.atomic(t);
                save_cache(eng, c);
                if (c.output == "table") {
                    out << "atomic = " << a.get_str() << "\n";
                    return 0;
                }
                j["atomic"] = a.get_str();
                j["terms_evaluated"] = 1;
                j["terms_skipped"] = 0;
            } else if (bounds->parsed()) {
                BoundReport rep = compare_bounds(t, &eng);
                if (c.output == "table") {
                    j["wall_ms"] = ms_since(start);
                    out << "source                 bound\n";
                    for (const auto& e : rep.entries)
                        out << e.source << std::string(e.source.size() < 22 ? 22 - e.source.size() : 1, ' ')
                            << sci_string_ceil(e.value) << (e.source == rep.best ? "  <- min" : "")
                            << "\n";
                    return 0;
                }
                Json b;
                for (const auto& e : rep.entries) {
                    Json entry;
                    entry["exact"] = e.value.get_str();
                    entry["sci"] = sci_string_ceil(e.value);
                    b[e.source] = std::move(entry);
                }
                b["best"] = rep.best;
                j["bounds"] = std::move(b);
                j["terms_evaluated"] = 0;
                j["terms_skipped"] = 0;
            } else {
                VanishingReport rep = check_vanishing(t);
                if (c.output == "table") {
                    for (const auto& iq : rep.inequalities)
                        out << iq.label << ": " << iq.lhs << (iq.holds() ? " >= " : " <  ")
                            << iq.rhs << (iq.holds() ? "" : "   VIOLATED") << "\n";
                    out << (rep.forced_zero() ? "ForcedZero" : "MayBeNonzero") << "\n";
                    return 0;
                }
                Json r;
                r["conclusion"] = rep.forced_zero() ? "ForcedZero" : "MayBeNonzero";
                Json ineqs = Json::array();
                for (const auto& iq : rep.inequalities) {
                    Json e;
                    e["label"] = iq.label;
                    e["lhs"] = iq.lhs;
                    e["rhs"] = iq.rhs;
                    e["holds"] = iq.holds();
                    ineqs.push_back(std::move(e));
                }
                r["inequalities"] = std::move(ineqs);
                j["report"] = std::move(r);
                j["terms_evaluated"] = 0;
                j["terms_skipped"] = 0;
            }
            j["wall_ms"] = ms_since(start);
            out << j.dump(2) << "\n";
            return 0;
        }
        if (stable->parsed()) {
            Partition lam = Partition::parse(c.lambda_text,
                                             static_cast<std::size_t>(c.m) * static_cast<std::size_t>(c.n));
            auto [mu, nu] = stable_mu_nu(lam, c.m, c.n);
            PartitionTriple t(lam, mu, nu, c.m, c.n);
            KronEngine eng(engine_options(c));
            Json j = triple_json(t);
            Json r;
            r["is_stable_face_member"] = is_stable_face_member(t);
            r["atomic"] = eng.atomic(t).get_str();
            r["g"] = eng.kronecker(t).g.get_str();
            r["rank_condition"] = verify_rank_condition(c.m, c.n);
            j["report"] = std::move(r);
            j["wall_ms"] = ms_since(start);
            out << j.dump(2) << "\n";
            return 0;
        }
        if (feasible->parsed()) {
            const auto set = feasible_sigma_set(c.m, c.n, c.size_equality);
            Json j;
            j["m"] = c.m;
            j["n"] = c.n;
            j["size_equality"] = c.size_equality;
            j["count"] = set.size();
            Json sigmas = Json::array();
            for (const auto& s : set) sigmas.push_back(s.to_string());
            j["sigmas"] = std::move(sigmas);
            j["wall_ms"] = ms_since(start);
            out << j.dump(2) << "\n";
            return 0;
        }
        if (poset->parsed()) {
            std::optional<std::vector<Permutation>> restrict;
            if (!elements_text.empty()) {
                std::vector<Permutation> elems;
                std::istringstream ss(elements_text);
                std::string tok;
                while (std::getline(ss, tok, ',')) {
                    std::vector<int> ol;
                    for (char ch : tok) ol.push_back(ch - '0');
                    elems.emplace_back(std::move(ol));
                }
                restrict = std::move(elems);
            }
            SigmaPoset p = build_sigma_poset(c.m, c.n, restrict);
            Json j;
            j["m"] = c.m;
            j["n"] = c.n;
            j["elements"] = Json::array();
            for (const auto& s : p.elements) j["elements"].push_back(s.to_string());
            Json covers = Json::array();
            for (auto [lo, hi] : p.covers)
                covers.push_back(Json::array({p.elements[static_cast<std::size_t>(lo)].to_string(),
                                              p.elements[static_cast<std::size_t>(hi)].to_string()}));
            j["covers"] = std::move(covers);
            j["wall_ms"] = ms_since(start);
            out << j.dump(2) << "\n";
            return 0;
        }
        if (seq->parsed()) {
            PartitionTriple dir = make_triple(c);
            PartitionTriple base(
                Partition::parse(base_lambda, static_cast<std::size_t>(c.m) * static_cast<std::size_t>(c.n)),
                Partition::parse(base_mu, static_cast<std::size_t>(c.m)),
                Partition::parse(base_nu, static_cast<std::size_t>(c.n)), c.m, c.n);
            KronEngine eng(engine_options(c));
            auto values = eng.stability_sequence(base, dir, c.k_max);
            Json j = triple_json(dir);
            Json r;
            r["base_lambda"] = base.lambda.to_string();
            r["base_mu"] = base.mu.to_string();
            r["base_nu"] = base.nu.to_string();
            Json vals = Json::array();
            for (const auto& v : values) vals.push_back(v.get_str());
            r["g_sequence"] = std::move(vals);
            j["report"] = std::move(r);
            j["wall_ms"] = ms_since(start);
            out << j.dump(2) << "\n";
            return 0;
        }
        if (matrix->parsed()) {
            const VpfMatrix A = build_matrix(c.m, c.n);
            std::ofstream file(matrix_path);
            if (!file) throw MatrixIoError("cannot open " + matrix_path + " for writing");
            write_matrix(A, file);
            file.close();
            Json j;
            j["m"] = c.m;
            j["n"] = c.n;
            j["rows"] = A.rows();
            j["cols"] = A.cols();
            j["path"] = matrix_path;
            j["hash"] = matrix_hash(A);
            j["wall_ms"] = ms_since(start);
            out << j.dump(2) << "\n";
            return 0;
        }
        if (reproduce->parsed()) {
            std::vector<PaperCheck> checks;
            run_reproduce(checks, skip_slow, c.threads);
            std::size_t passed = 0;
            for (const auto& ch : checks) {
                out << (ch.pass ? "PASS  " : "FAIL  ") << ch.name;
                if (!ch.pass) out << "  [expected " << ch.expected << ", got " << ch.actual << "]";
                out << "\n";
                if (ch.pass) ++passed;
            }
            out << passed << "/" << checks.size() << " checks passed, " << ms_since(start)
                << " ms\n";
            return passed == checks.size() ? 0 : 1;
        }
    } catch (const Error& e) {
        return exit_code_for_exception(e, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand\n";
    return 1;
}

}  // namespace kron
