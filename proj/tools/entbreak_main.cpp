// entbreak command-line front end. Talks to the core exclusively through
// the C API in entbreak/entbreak.h.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "entbreak/entbreak.h"

namespace {

// Process exit codes: 0 success, 1 certificate failure / counterexample,
// 2 usage or parse error, 3 numerical failure.
int exit_code_for(eb_status s) {
    switch (s) {
        case EB_OK: return 0;
        case EB_ERR_CERTIFICATE_FAILURE: return 1;
        case EB_ERR_NO_SIGN_CHANGE:
        case EB_ERR_NOT_CONVERGED:
        case EB_ERR_INTERNAL: return 3;
        default: return 2;
    }
}

int fail(eb_status s) {
    std::cerr << "error: " << eb_status_name(s) << ": " << eb_last_error_message() << "\n";
    return exit_code_for(s);
}

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { eb_string_free(ptr); }
    std::string str() const { return ptr ? ptr : ""; }
};

struct OwnedState {
    eb_state* ptr = nullptr;
    ~OwnedState() { eb_state_free(ptr); }
};

bool write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return false;
    }
    return true;
}

// A state reference is a builtin name unless it names an existing file,
// in which case the file is parsed as state JSON.
eb_status resolve_state(const std::string& ref, eb_state** out) {
    std::ifstream in(ref, std::ios::binary);
    if (in) {
        std::ostringstream buf;
        buf << in.rdbuf();
        return eb_state_from_json(buf.str().c_str(), out);
    }
    return eb_state_builtin(ref.c_str(), out);
}

std::string companion_path(const std::string& csv_path) {
    const auto dot = csv_path.rfind('.');
    if (dot != std::string::npos && csv_path.find('/', dot) == std::string::npos)
        return csv_path.substr(0, dot) + ".json";
    return csv_path + ".json";
}

// Flag > config file > env (seed only) > built-in default.
struct Config {
    nlohmann::json values = nlohmann::json::object();

    bool load(const std::string& path, std::string* err) {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            *err = "cannot read config file " + path;
            return false;
        }
        try {
            in >> values;
        } catch (const std::exception& e) {
            *err = std::string("config parse error: ") + e.what();
            return false;
        }
        return true;
    }

    template <typename T>
    T pick(const CLI::Option* opt, const T& flag_value, const char* key, T fallback) const {
        if (opt && opt->count() > 0) return flag_value;
        if (values.contains(key)) return values[key].get<T>();
        return fallback;
    }
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("ENTBREAK_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 42;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entanglement measures under local noisy channels"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "optional JSON config file");

    // reproduce fig2
    auto* reproduce = app.add_subcommand("reproduce", "reproduce paper figures");
    auto* fig2 = reproduce->add_subcommand("fig2", "negativity curves of the three outputs");
    double fig2_t = 1.0 / 3.0;
    int fig2_grid = 101;
    std::string fig2_out;
    auto* fig2_t_opt = fig2->add_option("--t", fig2_t, "mixing parameter of rho3_in (0 < t < 2/3)");
    auto* fig2_grid_opt = fig2->add_option("--grid", fig2_grid, "lambda grid points");
    fig2->add_option("-o,--output", fig2_out, "CSV output path (companion JSON beside it)");

    // solve
    auto* solve = app.add_subcommand("solve", "run a solver");
    std::string solve_target, solve_state = "rho2_in", solve_out;
    solve->add_option("target", solve_target, "lambda-sep | t-threshold")->required();
    solve->add_option("--state", solve_state, "builtin name or state JSON file");
    solve->add_option("-o,--output", solve_out, "JSON output path");

    // certify
    auto* certify = app.add_subcommand("certify", "certify an ordering-change instance");
    std::string certify_kind, certify_instance, certify_out;
    double certify_t = 1.0 / 3.0, certify_lambda = -1.0;
    int certify_len = 20;
    certify->add_option("kind", certify_kind, "seb | strong-seb")->required();
    certify->add_option("--instance", certify_instance, "instance JSON file");
    auto* certify_t_opt = certify->add_option("--t", certify_t, "mixing parameter of omega2");
    auto* certify_lambda_opt =
        certify->add_option("--lambda", certify_lambda, "channel noise (default: lambda1)");
    auto* certify_len_opt =
        certify->add_option("--J", certify_len, "sequence length for strong-seb");
    certify->add_option("-o,--output", certify_out, "JSON output path");

    // scan-nogo
    auto* scan = app.add_subcommand("scan-nogo", "randomized pure-state no-go scan");
    int scan_trials = 1000;
    std::uint64_t scan_seed = 0;
    std::string scan_out;
    auto* scan_trials_opt = scan->add_option("--trials", scan_trials, "number of random trials");
    auto* scan_seed_opt = scan->add_option("--seed", scan_seed, "RNG seed");
    scan->add_option("-o,--output", scan_out, "JSON output path");

    // search
    auto* search = app.add_subcommand("search", "unitary-orbit lambda_sep search");
    std::string search_state, search_family = "phase-damping", search_out;
    int search_grid = 16;
    search->add_option("--state", search_state, "builtin name or state JSON file")->required();
    search->add_option("--family", search_family, "channel family (phase-damping)");
    auto* search_grid_opt = search->add_option("--grid", search_grid, "points per Euler angle");
    search->add_option("-o,--output", search_out, "CSV output path");

    CLI11_PARSE(app, argc, argv);

    Config cfg;
    if (!config_path.empty()) {
        std::string err;
        if (!cfg.load(config_path, &err)) {
            std::cerr << "error: " << err << "\n";
            return 2;
        }
    }

    if (fig2->parsed()) {
        const double t = cfg.pick(fig2_t_opt, fig2_t, "t", 1.0 / 3.0);
        const int grid = cfg.pick(fig2_grid_opt, fig2_grid, "grid", 101);
        OwnedString csv, companion;
        const eb_status s = eb_reproduce_fig2(t, grid, &csv.ptr, &companion.ptr);
        if (s != EB_OK) return fail(s);
        if (!write_output(fig2_out, csv.str())) return 2;
        if (!fig2_out.empty()) {
            if (!write_output(companion_path(fig2_out), companion.str() + "\n")) return 2;
        }
        return 0;
    }

    if (solve->parsed()) {
        OwnedString report;
        eb_status s;
        if (solve_target == "lambda-sep") {
            OwnedState state;
            s = resolve_state(solve_state, &state.ptr);
            if (s != EB_OK) return fail(s);
            double value = 0.0;
            s = eb_solve_lambda_sep(state.ptr, &value, &report.ptr);
        } else if (solve_target == "t-threshold") {
            double value = 0.0;
            s = eb_solve_t_threshold(&value, &report.ptr);
        } else {
            std::cerr << "error: unknown solve target '" << solve_target << "'\n";
            return 2;
        }
        if (s != EB_OK) return fail(s);
        return write_output(solve_out, report.str() + "\n") ? 0 : 2;
    }

    if (certify->parsed()) {
        nlohmann::json instance = nlohmann::json::object();
        if (!certify_instance.empty()) {
            std::ifstream in(certify_instance, std::ios::binary);
            if (!in) {
                std::cerr << "error: cannot read instance file " << certify_instance << "\n";
                return 2;
            }
            try {
                in >> instance;
            } catch (const std::exception& e) {
                std::cerr << "error: instance parse error: " << e.what() << "\n";
                return 2;
            }
        }
        auto pick_num = [&](const CLI::Option* opt, double flag_value, const char* key,
                            double fallback) {
            if (opt->count() > 0) return flag_value;
            if (instance.contains(key)) return instance[key].get<double>();
            return cfg.pick(opt, flag_value, key, fallback);
        };
        const double t = pick_num(certify_t_opt, certify_t, "t", 1.0 / 3.0);
        const double lambda = pick_num(certify_lambda_opt, certify_lambda, "lambda", -1.0);
        const int len =
            static_cast<int>(pick_num(certify_len_opt, certify_len, "sequenceLength", 20));

        OwnedString cert;
        eb_status s;
        if (certify_kind == "seb") {
            s = eb_certify_seb(t, lambda, &cert.ptr);
        } else if (certify_kind == "strong-seb") {
            s = eb_certify_strong_seb(len, lambda, &cert.ptr);
        } else {
            std::cerr << "error: unknown certify kind '" << certify_kind << "'\n";
            return 2;
        }
        if (cert.ptr && !write_output(certify_out, cert.str() + "\n")) return 2;
        if (s != EB_OK && s != EB_ERR_CERTIFICATE_FAILURE) return fail(s);
        return exit_code_for(s);
    }

    if (scan->parsed()) {
        const int trials = cfg.pick(scan_trials_opt, scan_trials, "trials", 1000);
        const std::uint64_t seed = cfg.pick(scan_seed_opt, scan_seed, "seed", default_seed());
        OwnedString report;
        const eb_status s = eb_scan_nogo(trials, seed, &report.ptr);
        if (report.ptr && !write_output(scan_out, report.str() + "\n")) return 2;
        if (s != EB_OK && s != EB_ERR_CERTIFICATE_FAILURE) return fail(s);
        return exit_code_for(s);
    }

    if (search->parsed()) {
        if (search_family != "phase-damping") {
            std::cerr << "error: unknown channel family '" << search_family << "'\n";
            return 2;
        }
        const int grid = cfg.pick(search_grid_opt, search_grid, "grid", 16);
        OwnedState state;
        eb_status s = resolve_state(search_state, &state.ptr);
        if (s != EB_OK) return fail(s);
        OwnedString csv;
        s = eb_search(state.ptr, grid, &csv.ptr);
        if (s != EB_OK) return fail(s);
        return write_output(search_out, csv.str()) ? 0 : 2;
    }

    std::cerr << "error: no subcommand given\n";
    return 2;
}
