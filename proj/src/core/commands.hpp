#ifndef ENTBREAK_CORE_COMMANDS_HPP
#define ENTBREAK_CORE_COMMANDS_HPP

#include <cstdint>
#include <string>

#include "scenarios.hpp"

namespace entbreak {

/// 15 significant digits, locale-independent.
std::string fmt15(double v);

/// State (de)serialization: {"dimA": int, "dimB": int,
/// "matrix": [[re, im], ...]} row-major. Loading revalidates every
/// DensityMatrix invariant and names the violated one on failure.
DensityMatrix state_from_json_text(const std::string& text);
std::string state_to_json_text(const DensityMatrix& rho);

/// Channel: {"dimIn": int, "dimOut": int, "kraus": [[[re, im], ...], ...]}.
KrausChannel channel_from_json_text(const std::string& text);

struct Fig2Output {
    std::string csv;
    std::string companion_json;  // lambda1 and closed-form residuals
};

/// Negativity of the three phase-damped outputs on a lambda grid,
/// computed through the generic partial-transpose pipeline.
Fig2Output cmd_reproduce_fig2(double t, int grid_points);

std::string cmd_solve_lambda_sep(const std::string& state_ref);
std::string cmd_solve_t_threshold();

/// Builtin paper instance: channel = phase_damping(lambda1), omega1 =
/// rho2_in, omega2 = rho3_in(t), chain = {U_A^-1, replace_with_00}.
/// Returns the serialized certificate; *valid reports the outcome.
std::string cmd_certify_seb(double t, double lambda, bool* valid);
std::string cmd_certify_strong_seb(int sequence_length, double lambda, bool* valid);

std::string cmd_scan_nogo(int trials, std::uint64_t seed, bool* clean);

/// CSV of search records (phase-damping family); empty set with a
/// "# NoSignChange" note when the input is never entangled.
std::string cmd_search(const DensityMatrix& rho, int grid_n);

std::string qutrit_report_json(double q);
std::string measure_report_json(const DensityMatrix& rho);

}  // namespace entbreak

#endif
