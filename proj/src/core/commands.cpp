#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "error.hpp"

namespace entbreak {

using nlohmann::json;
using nlohmann::ordered_json;

std::string fmt15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

namespace {

ComplexMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols,
                               const char* what) {
    if (!j.is_array() || j.size() != rows * cols)
        throw Error(ErrorCode::ParseError,
                    std::string(what) + ": expected " + std::to_string(rows * cols) +
                        " [re, im] entries (row-major)");
    std::vector<Complex> entries;
    entries.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw Error(ErrorCode::ParseError, std::string(what) + ": entry is not [re, im]");
        entries.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return ComplexMatrix(rows, cols, std::move(entries));
}

json matrix_to_json(const ComplexMatrix& m) {
    json out = json::array();
    for (const auto& z : m.data()) out.push_back({z.real(), z.imag()});
    return out;
}

json pieces_to_json(const std::vector<CertificatePiece>& pieces) {
    json out = json::array();
    for (const auto& p : pieces)
        out.push_back({{"name", p.name}, {"passed", p.passed}, {"value", p.value},
                       {"detail", p.detail}});
    return out;
}

}  // namespace

DensityMatrix state_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("state JSON: ") + e.what());
    }
    if (!j.contains("dimA") || !j.contains("dimB") || !j.contains("matrix"))
        throw Error(ErrorCode::ParseError, "state JSON: requires dimA, dimB, matrix");
    const auto da = j["dimA"].get<std::size_t>();
    const auto db = j["dimB"].get<std::size_t>();
    if (da == 0 || db == 0 || da * db > 16)
        throw Error(ErrorCode::UnsupportedDimension, "state JSON: dimA*dimB must be in [1,16]");
    return DensityMatrix(da, db, matrix_from_json(j["matrix"], da * db, da * db, "state matrix"));
}

std::string state_to_json_text(const DensityMatrix& rho) {
    ordered_json j;
    j["dimA"] = rho.dim_a();
    j["dimB"] = rho.dim_b();
    j["matrix"] = matrix_to_json(rho.mat());
    return j.dump();
}

KrausChannel channel_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("channel JSON: ") + e.what());
    }
    if (!j.contains("dimIn") || !j.contains("dimOut") || !j.contains("kraus"))
        throw Error(ErrorCode::ParseError, "channel JSON: requires dimIn, dimOut, kraus");
    const auto din = j["dimIn"].get<std::size_t>();
    const auto dout = j["dimOut"].get<std::size_t>();
    std::vector<ComplexMatrix> ops;
    for (const auto& k : j["kraus"]) ops.push_back(matrix_from_json(k, dout, din, "kraus operator"));
    return KrausChannel(din, dout, std::move(ops));
}

Fig2Output cmd_reproduce_fig2(double t, int grid_points) {
    if (t <= 0.0 || t >= 2.0 / 3.0)
        throw Error(ErrorCode::ParameterOutOfRange, "reproduce fig2: t must lie in (0, 2/3)");
    if (grid_points < 2)
        throw Error(ErrorCode::ParameterOutOfRange, "reproduce fig2: grid must have >= 2 points");

    const DensityMatrix rho1 = paper::rho1_in();
    const DensityMatrix rho2 = paper::rho2_in();
    const DensityMatrix rho3 = paper::rho3_in(t);

    std::string csv = "lambda,N_rho1_out,N_rho2_out,N_rho3_out\n";
    double res11 = 0.0, res12 = 0.0, res14 = 0.0;
    for (int i = 0; i < grid_points; ++i) {
        const double lambda = static_cast<double>(i) / (grid_points - 1);
        const KrausChannel ch = phase_damping(lambda);
        const double n1 = negativity(apply_local(ch, rho1, Side::A)).first;
        const double n2 = negativity(apply_local(ch, rho2, Side::A)).first;
        const double n3 = negativity(apply_local(ch, rho3, Side::A)).first;
        res11 = std::max(res11, std::abs(n1 - paper::n1_closed(lambda)));
        res12 = std::max(res12, std::abs(n2 - paper::n2_closed(lambda)));
        res14 = std::max(res14, std::abs(n3 - paper::n3_closed(lambda, t)));
        csv += fmt15(lambda) + "," + fmt15(n1) + "," + fmt15(n2) + "," + fmt15(n3) + "\n";
    }

    ordered_json companion;
    companion["t"] = t;
    companion["gridPoints"] = grid_points;
    companion["lambda1"] = paper::lambda1();
    companion["closedFormResiduals"] = {{"N_rho1_out", res11}, {"N_rho2_out", res12},
                                        {"N_rho3_out", res14}};
    return {std::move(csv), companion.dump()};
}

std::string cmd_solve_lambda_sep(const std::string& state_ref) {
    const DensityMatrix rho = paper::builtin_state(state_ref);
    const RootResult r = solve_lambda_sep(phase_damping_family(), rho);
    ordered_json j;
    j["target"] = "lambda-sep";
    j["state"] = state_ref;
    j["value"] = r.value;
    j["residual"] = r.residual;
    j["iterations"] = r.iterations;
    j["bracket"] = {r.bracket_lo, r.bracket_hi};
    return j.dump();
}

std::string cmd_solve_t_threshold() {
    const RootResult r = solve_t_threshold();
    ordered_json j;
    j["target"] = "t-threshold";
    j["value"] = r.value;
    j["residual"] = r.residual;
    j["iterations"] = r.iterations;
    j["bracket"] = {r.bracket_lo, r.bracket_hi};
    return j.dump();
}

std::string cmd_certify_seb(double t, double lambda, bool* valid) {
    // The chain reaches rho3_in(t) for t in [0, 2/3] via eps = 1 - 1.5 t.
    // Inputs like 0.6667 are rounded spellings of the 2/3 endpoint, so a
    // small overshoot snaps to the endpoint instead of erroring out.
    if (t < 0.0 || t > 2.0 / 3.0 + 1e-3)
        throw Error(ErrorCode::ParameterOutOfRange, "certify seb: t outside [0, 2/3]");
    t = std::min(t, 2.0 / 3.0);
    const double epsilon = 1.0 - 1.5 * t;
    std::vector<LoccStep> chain;
    chain.push_back(LoccStepUnitaryInverse{paper::unitary_ua(), Side::A});
    chain.push_back(LoccStepReplaceWith00{epsilon});
    const OrderingCertificate cert = certify_selective_breaking(
        phase_damping(lambda), paper::rho2_in(), paper::rho3_in(t), chain, true);

    ordered_json j;
    j["kind"] = "seb";
    j["params"] = {{"t", t}, {"lambda", lambda}};
    j["valid"] = cert.valid;
    j["firstFailure"] = cert.first_failure;
    j["pieces"] = pieces_to_json(cert.pieces);
    if (cert.strict_window)
        j["strictWindow"] = {{"lo", cert.strict_window->first},
                             {"hi", cert.strict_window->second},
                             {"loOpen", true}};
    if (valid) *valid = cert.valid;
    return j.dump();
}

std::string cmd_certify_strong_seb(int sequence_length, double lambda, bool* valid) {
    if (sequence_length < 1)
        throw Error(ErrorCode::ParameterOutOfRange, "certify strong-seb: sequence length >= 1");
    std::vector<double> ts;
    double t = 1.0 / 3.0;
    for (int jx = 0; jx < sequence_length; ++jx, t *= 0.5) ts.push_back(t);
    const StrongCertificate cert =
        certify_strong_selective_breaking(phase_damping(lambda), paper::rho2_in(), ts);

    ordered_json j;
    j["kind"] = "strong-seb";
    j["params"] = {{"lambda", lambda}, {"sequenceLength", sequence_length}};
    j["valid"] = cert.valid;
    j["firstFailure"] = cert.first_failure;
    j["pieces"] = pieces_to_json(cert.pieces);
    json seq = json::array();
    for (const auto& s : cert.sequence)
        seq.push_back({{"t", s.t}, {"N_in", s.n_in}, {"N_out", s.n_out}, {"Ef_in", s.ef_in}});
    j["sequence"] = seq;
    if (valid) *valid = cert.valid;
    return j.dump();
}

std::string cmd_scan_nogo(int trials, std::uint64_t seed, bool* clean) {
    const NogoReport rep = pure_state_nogo_scan(trials, seed);
    ordered_json j;
    j["trials"] = rep.trials;
    j["seed"] = rep.seed;
    j["separableOutputs"] = rep.separable_outputs;
    j["ebConfirmed"] = rep.eb_confirmed;
    json cx = json::array();
    for (const auto& c : rep.counterexamples)
        cx.push_back({{"trial", c.trial}, {"alpha", c.alpha}, {"outputMuMin", c.output_mu_min},
                      {"choiMuMin", c.choi_mu_min}});
    j["counterexamples"] = cx;
    if (clean) *clean = rep.counterexamples.empty();
    return j.dump();
}

std::string cmd_search(const DensityMatrix& rho, int grid_n) {
    const SearchResult res = orbit_search(rho, phase_damping_family(), grid_n);
    std::string csv = "theta,phi,psi,lambda_sep,gap\n";
    if (res.no_sign_change) {
        csv += "# NoSignChange: input is never entangled under the phase-damping family\n";
        return csv;
    }
    for (const auto& r : res.records)
        csv += fmt15(r.theta) + "," + fmt15(r.phi) + "," + fmt15(r.psi) + "," +
               fmt15(r.lambda_sep) + "," + fmt15(r.gap) + "\n";
    return csv;
}

std::string qutrit_report_json(double q) {
    const QutritReport rep = qutrit_example(q);
    ordered_json j;
    j["q"] = rep.q;
    j["valid"] = rep.valid;
    j["N_out1"] = rep.n_out1;
    j["N_out2"] = rep.n_out2;
    j["out1Separable"] = rep.out1_separable;
    j["out2Defect"] = rep.out2_defect;
    j["filterCompletenessDefect"] = rep.filter_completeness_defect;
    json branches = json::array();
    for (const auto& b : rep.branches)
        branches.push_back({{"probability", b.probability}, {"schmidt", b.schmidt},
                            {"schmidtError", b.schmidt_error},
                            {"overlapWithPsi2", b.overlap_with_psi2}});
    j["branches"] = branches;
    return j.dump();
}

std::string measure_report_json(const DensityMatrix& rho) {
    const MeasureReport r = measure_report(rho);
    ordered_json j;
    j["negativity"] = r.negativity;
    j["minPtEigenvalue"] = r.min_pt_eigenvalue;
    if (r.concurrence) j["concurrence"] = *r.concurrence;
    if (r.entanglement_of_formation) j["entanglementOfFormation"] = *r.entanglement_of_formation;
    if (r.g_bound) j["gBound"] = *r.g_bound;
    j["pptVerdict"] = r.ppt_verdict == PptVerdict::PPT ? "PPT" : "NPT";
    switch (r.separability) {
        case SeparabilityVerdict::Separable: j["separabilityVerdict"] = "Separable"; break;
        case SeparabilityVerdict::Entangled: j["separabilityVerdict"] = "Entangled"; break;
        case SeparabilityVerdict::Undecided: j["separabilityVerdict"] = "Undecided"; break;
    }
    return j.dump();
}

}  // namespace entbreak
