// hodge: command-line front end for the Hodge-integral library.
//
// Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage or configuration error.

#include "hodge/suites.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace hodge;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<int> parse_int_list(const std::string& text, const char* what)
{
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw ArgumentError(std::string("malformed ") + what + ": '" + text + "'");
        }
        if (used != item.size()) throw ArgumentError(std::string("malformed ") + what + ": '" + text + "'");
        out.push_back(v);
    }
    return out;
}

/// Parts may come in any order; a non-canonical order is accepted with a warning.
Partition parse_partition(const std::string& text, const char* what)
{
    const std::vector<int> parts = parse_int_list(text, what);
    for (int p : parts)
        if (p <= 0) throw ArgumentError(std::string(what) + " parts must be positive: '" + text + "'");
    Partition p(parts);
    if (p.parts() != parts) std::cerr << "warning: " << what << " '" << text << "' read as " << p.str() << '\n';
    return p;
}

std::vector<Rational> parse_rational_list(const std::string& text)
{
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        Rational a;
        try {
            a = parse_rational(item);
        } catch (const std::exception&) {
            throw ArgumentError("malformed rational '" + item + "'");
        }
        if (a == 0 || a == -1) throw ArgumentError("a-values must avoid 0 and -1");
        out.push_back(a);
    }
    if (out.empty()) throw ArgumentError("empty a-value list");
    return out;
}

void emit(const std::string& text, const std::string& path)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ArgumentError("cannot write " + path);
    out << text;
}

std::string cache_dir()
{
    const char* env = std::getenv("HODGE_CACHE_DIR");
    return env ? std::string(env) : std::string();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Hodge integrals, ELSV/GMV series and their verification"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string output;

    auto* c_char = app.add_subcommand("char", "symmetric-group character chi^lambda(mu)");
    std::string lambda_text, mu_text;
    c_char->add_option("--lambda", lambda_text, "partition, comma separated")->required();
    c_char->add_option("--mu", mu_text, "cycle type, comma separated")->required();
    c_char->add_option("--format", format)->check(CLI::IsMember({"json", "pretty"}));

    auto* c_qdim = app.add_subcommand("qdim", "q-dimension series 1/prod(e^{hu/2} - e^{-hu/2})");
    int order = 6;
    c_qdim->add_option("--lambda", lambda_text, "partition, comma separated")->required();
    c_qdim->add_option("--order", order, "series known through u^{order-1}");
    c_qdim->add_option("--format", format)->check(CLI::IsMember({"json", "pretty"}));

    auto* c_tables = app.add_subcommand("tables", "extract linear and/or special cubic Hodge tables");
    int g_max = 2, n_max = 3;
    std::string kind = "both", out_dir = ".", a_nodes_text = "1,2,3,4,5,6,7,8,9";
    c_tables->add_option("--g-max", g_max);
    c_tables->add_option("--n-max", n_max);
    c_tables->add_option("--kind", kind)->check(CLI::IsMember({"linear", "cubic", "both"}));
    c_tables->add_option("--a-nodes", a_nodes_text, "interpolation nodes for the cubic table");
    c_tables->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    c_tables->add_option("--out-dir", out_dir, "directory receiving linear.<fmt> and cubic.<fmt>");

    auto* c_verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    SuiteConfig cfg;
    std::string a_text;
    bool summary = false;
    c_verify->add_option("suite", suite, "elsv|gmv|bilinear|fock|identities|tables|all")
        ->required()
        ->check(CLI::IsMember({"elsv", "gmv", "bilinear", "fock", "identities", "tables", "all"}));
    c_verify->add_option("--d", cfg.max_degree, "largest degree for the bilinear relations")->check(CLI::Range(1, 4));
    c_verify->add_option("--a", a_text, "comma-separated a-values (default 1,2,3)");
    c_verify->add_option("--extra-order", cfg.extra_order, "compare through valuation + this")->check(CLI::Range(1, 12));
    c_verify->add_option("--bilinear-order", cfg.bilinear_order)->check(CLI::Range(1, 8));
    c_verify->add_option("--energy", cfg.energy, "Fock-space energy cutoff")->check(CLI::Range(1, 8));
    c_verify->add_option("--seed", cfg.seed, "seed for randomized checks");
    c_verify->add_option("--threads", cfg.threads, "worker threads (0: all cores)");
    c_verify->add_flag("--summary", summary, "omit per-coefficient details");
    c_verify->add_option("--output", output, "report file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*c_char) {
            const Partition lambda = parse_partition(lambda_text, "lambda");
            const Partition mu = parse_partition(mu_text, "mu");
            if (lambda.size() != mu.size()) throw ArgumentError("lambda and mu must have the same size");
            const Integer chi = character(lambda, mu);
            if (format == "pretty") std::cout << chi.get_str() << '\n';
            else std::cout << nlohmann::json{{"lambda", lambda.parts()}, {"mu", mu.parts()}, {"character", chi.get_str()}}.dump() << '\n';
            return 0;
        }
        if (*c_qdim) {
            const Partition lambda = parse_partition(lambda_text, "lambda");
            if (order < -64 || order > 64) throw ArgumentError("order out of range");
            const QDim q = qdim_series(lambda, order);
            if (format == "pretty") std::cout << q.series.str() << '\n';
            else std::cout << nlohmann::json{{"lambda", lambda.parts()}, {"series", to_json(q.series)}}.dump() << '\n';
            return 0;
        }
        if (*c_tables) {
            namespace fs = std::filesystem;
            fs::create_directories(out_dir);
            const std::string cache = cache_dir();
            auto write = [&](const std::string& name, const auto& table) {
                const fs::path path = fs::path(out_dir) / (name + "." + format);
                emit(format == "csv" ? to_csv(table) : to_json(table).dump(1) + "\n", path.string());
                std::cerr << "wrote " << path.string() << " (" << table.size() << " entries)\n";
            };
            if (kind != "cubic") write("linear", linear_table(g_max, n_max, cache));
            if (kind != "linear") {
                const std::vector<Rational> nodes = parse_rational_list(a_nodes_text);
                const bool standard = nodes == default_cubic_nodes();
                write("cubic", standard ? cubic_table(g_max, n_max, cache) : extract_cubic_table(g_max, n_max, nodes));
            }
            return 0;
        }
        if (*c_verify) {
            if (!a_text.empty()) cfg.a_values = parse_rational_list(a_text);
            cfg.cache_dir = cache_dir();
            const std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
            nlohmann::json suites = nlohmann::json::array();
            bool passed = true;
            nlohmann::json first_failure;
            for (const auto& name : names) {
                const SuiteResult r = run_suite(name, cfg);
                nlohmann::json j = r.json(!summary);
                if (!r.passed()) {
                    if (passed) first_failure = j.at("first_failure");
                    passed = false;
                }
                suites.push_back(std::move(j));
            }
            nlohmann::json report{{"command", "verify"}, {"suite", suite}, {"config", cfg.json()},
                                  {"status", passed ? "pass" : "fail"}, {"suites", suites}};
            if (!passed) report["first_failure"] = first_failure;
            emit(report.dump(1) + "\n", output);
            if (!passed) std::cerr << "verification failed: " << first_failure.dump() << '\n';
            return passed ? 0 : kExitFail;
        }
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const VerificationError& e) {
        std::cerr << "verification error: " << e.what() << '\n';
        return kExitFail;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
