#include "entbreak/entbreak.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "core/commands.hpp"
#include "core/error.hpp"

using namespace entbreak;

struct eb_state {
    DensityMatrix rho;
};

namespace {

thread_local std::string g_last_error;

eb_status map_code(ErrorCode c) {
    switch (c) {
        case ErrorCode::InvalidArgument: return EB_ERR_INVALID_ARGUMENT;
        case ErrorCode::DimensionMismatch: return EB_ERR_DIMENSION_MISMATCH;
        case ErrorCode::NotHermitian: return EB_ERR_NOT_HERMITIAN;
        case ErrorCode::NotUnitary:
        case ErrorCode::NotUnitaryBasis: return EB_ERR_NOT_UNITARY;
        case ErrorCode::ParameterOutOfRange: return EB_ERR_PARAMETER_OUT_OF_RANGE;
        case ErrorCode::NotConverged: return EB_ERR_NOT_CONVERGED;
        case ErrorCode::NoSignChange: return EB_ERR_NO_SIGN_CHANGE;
        case ErrorCode::CertificateFailure: return EB_ERR_CERTIFICATE_FAILURE;
        case ErrorCode::UnknownStateRef: return EB_ERR_UNKNOWN_STATE_REF;
        case ErrorCode::UnsupportedDimension: return EB_ERR_UNSUPPORTED_DIMENSION;
        case ErrorCode::ParseError: return EB_ERR_PARSE;
    }
    return EB_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
eb_status guarded(F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return EB_ERR_INTERNAL;
    }
}

}  // namespace

extern "C" {

const char* eb_status_name(eb_status status) {
    switch (status) {
        case EB_OK: return "OK";
        case EB_ERR_INVALID_ARGUMENT: return "InvalidArgument";
        case EB_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
        case EB_ERR_NOT_HERMITIAN: return "NotHermitian";
        case EB_ERR_NOT_UNITARY: return "NotUnitary";
        case EB_ERR_PARAMETER_OUT_OF_RANGE: return "ParameterOutOfRange";
        case EB_ERR_NOT_CONVERGED: return "NotConverged";
        case EB_ERR_NO_SIGN_CHANGE: return "NoSignChange";
        case EB_ERR_CERTIFICATE_FAILURE: return "CertificateFailure";
        case EB_ERR_UNKNOWN_STATE_REF: return "UnknownStateRef";
        case EB_ERR_UNSUPPORTED_DIMENSION: return "UnsupportedDimension";
        case EB_ERR_PARSE: return "ParseError";
        case EB_ERR_INTERNAL: return "Internal";
    }
    return "Unknown";
}

const char* eb_last_error_message(void) { return g_last_error.c_str(); }

void eb_string_free(char* s) { delete[] s; }

eb_status eb_state_builtin(const char* ref, eb_state** out) {
    if (!ref || !out) return EB_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = new eb_state{paper::builtin_state(ref)};
        return EB_OK;
    });
}

eb_status eb_state_from_json(const char* json_text, eb_state** out) {
    if (!json_text || !out) return EB_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *out = new eb_state{state_from_json_text(json_text)};
        return EB_OK;
    });
}

eb_status eb_state_to_json(const eb_state* state, char** json_out) {
    if (!state || !json_out) return EB_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *json_out = dup_string(state_to_json_text(state->rho));
        return EB_OK;
    });
}

void eb_state_free(eb_state* state) { delete state; }

eb_status eb_state_measures(const eb_state* state, char** json_out) {
    if (!state || !json_out) return EB_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *json_out = dup_string(measure_report_json(state->rho));
        return EB_OK;
    });
}

eb_status eb_solve_lambda_sep(const eb_state* state, double* value, char** report_json) {
    if (!state || !value) return EB_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const RootResult r = solve_lambda_sep(phase_damping_family(), state->rho);
        *value = r.value;
        if (report_json) {
            nlohmann::ordered_json j;
            j["target"] = "lambda-sep";
            j["value"] = r.value;
            j["residual"] = r.residual;
            j["iterations"] = r.iterations;
            j["bracket"] = {r.bracket_lo, r.bracket_hi};
            *report_json = dup_string(j.dump());
        }
        return EB_OK;
    });
}

eb_status eb_solve_t_threshold(double* value, char** report_json) {
    if (!value) return EB_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        const RootResult r = solve_t_threshold();
        *value = r.value;
        if (report_json) *report_json = dup_string(cmd_solve_t_threshold());
        return EB_OK;
    });
}

eb_status eb_reproduce_fig2(double t, int grid_points, char** csv_out,
                            char** companion_json_out) {
    if (!csv_out) return EB_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        Fig2Output out = cmd_reproduce_fig2(t, grid_points);
        *csv_out = dup_string(out.csv);
        if (companion_json_out) *companion_json_out = dup_string(out.companion_json);
        return EB_OK;
    });
}

eb_status eb_certify_seb(double t, double lambda, char** cert_json) {
    if (!cert_json) return EB_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        bool valid = false;
        const double l = lambda < 0.0 ? paper::lambda1() : lambda;
        *cert_json = dup_string(cmd_certify_seb(t, l, &valid));
        if (!valid) {
            g_last_error = "certificate invalid; see the firstFailure field";
            return EB_ERR_CERTIFICATE_FAILURE;
        }
        return EB_OK;
    });
}

eb_status eb_certify_strong_seb(int sequence_length, double lambda, char** cert_json) {
    if (!cert_json) return EB_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        bool valid = false;
        const double l = lambda < 0.0 ? paper::lambda1() : lambda;
        *cert_json = dup_string(cmd_certify_strong_seb(sequence_length, l, &valid));
        if (!valid) {
            g_last_error = "certificate invalid; see the firstFailure field";
            return EB_ERR_CERTIFICATE_FAILURE;
        }
        return EB_OK;
    });
}

eb_status eb_qutrit_example(double q, char** report_json) {
    if (!report_json) return EB_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *report_json = dup_string(qutrit_report_json(q));
        return EB_OK;
    });
}

eb_status eb_scan_nogo(int trials, uint64_t seed, char** report_json) {
    if (!report_json) return EB_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        bool clean = false;
        *report_json = dup_string(cmd_scan_nogo(trials, seed, &clean));
        if (!clean) {
            g_last_error = "no-go scan recorded counterexamples";
            return EB_ERR_CERTIFICATE_FAILURE;
        }
        return EB_OK;
    });
}

eb_status eb_search(const eb_state* state, int grid_n, char** csv_out) {
    if (!state || !csv_out) return EB_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        *csv_out = dup_string(cmd_search(state->rho, grid_n));
        return EB_OK;
    });
}

}  // extern "C"
