#include "scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "error.hpp"

namespace entbreak {
namespace paper {

double lambda1() { return -16.0 + 12.0 * std::sqrt(2.0); }

DensityMatrix rho1_in() { return rho3_in(2.0 / 3.0); }

ComplexMatrix unitary_ua() {
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix u(2, 2);
    u(0, 0) = s; u(0, 1) = -s;
    u(1, 0) = s; u(1, 1) = s;
    return u;
}

DensityMatrix rho2_in() { return local_unitary(rho1_in(), unitary_ua(), Side::A); }

DensityMatrix rho3_in(double t) {
    if (t < 0.0 || t > 1.0)
        throw Error(ErrorCode::ParameterOutOfRange, "rho3_in: t outside [0,1]");
    ComplexMatrix m(4, 4);
    m(0, 0) = 1.0 - 0.5 * t;
    m(0, 3) = 0.5 * t;
    m(3, 0) = 0.5 * t;
    m(3, 3) = 0.5 * t;
    return DensityMatrix(2, 2, std::move(m));
}

DensityMatrix phi_plus() { return max_entangled(2).to_density(); }

PureState qutrit_psi1() {
    std::vector<Complex> a(9, Complex{0.0, 0.0});
    const double s = 1.0 / std::sqrt(2.0);
    a[1 * 3 + 1] = s;
    a[2 * 3 + 2] = s;
    return PureState(3, 3, std::move(a));
}

PureState qutrit_psi2(double q) {
    if (q <= 0.0 || q >= 1.0)
        throw Error(ErrorCode::ParameterOutOfRange, "qutrit_psi2: q outside (0,1)");
    std::vector<Complex> a(9, Complex{0.0, 0.0});
    a[0] = std::sqrt(q);
    a[1 * 3 + 1] = std::sqrt(1.0 - q);
    return PureState(3, 3, std::move(a));
}

double n1_closed(double lambda) { return (2.0 / 3.0) * std::sqrt(1.0 - lambda); }

double n2_closed(double lambda) {
    const double s = std::sqrt(1.0 - lambda);
    return std::max(0.0, (-3.0 + 3.0 * s + std::sqrt(10.0 + 6.0 * s - 5.0 * lambda)) / 6.0);
}

double n3_closed(double lambda, double t) { return t * std::sqrt(1.0 - lambda); }

DensityMatrix builtin_state(const std::string& ref) {
    auto param_of = [&](const std::string& prefix, const char* pname) {
        const std::string key = prefix + ":" + pname + "=";
        if (ref.rfind(key, 0) != 0)
            throw Error(ErrorCode::UnknownStateRef, "unknown builtin state: " + ref);
        try {
            return std::stod(ref.substr(key.size()));
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad parameter in state ref: " + ref);
        }
    };
    if (ref == "rho1_in") return rho1_in();
    if (ref == "rho2_in") return rho2_in();
    if (ref == "phi_plus") return phi_plus();
    if (ref == "qutrit_psi1") return qutrit_psi1().to_density();
    if (ref.rfind("rho3_in:", 0) == 0) return rho3_in(param_of("rho3_in", "t"));
    if (ref.rfind("qutrit_psi2:", 0) == 0)
        return qutrit_psi2(param_of("qutrit_psi2", "q")).to_density();
    throw Error(ErrorCode::UnknownStateRef, "unknown builtin state: " + ref);
}

}  // namespace paper

namespace {

constexpr int kBracketGrid = 101;
constexpr int kBisectCap = 200;

double output_mu_min(const ChannelFamily& family, const DensityMatrix& rho, double lambda) {
    return negativity(apply_local(family.generator(lambda), rho, Side::A)).second;
}

}  // namespace

RootResult solve_lambda_sep(const ChannelFamily& family, const DensityMatrix& rho) {
    const double mu_lo = output_mu_min(family, rho, family.lo);
    if (mu_lo >= -tol::psd) {
        const double mu_hi = output_mu_min(family, rho, family.hi);
        throw Error(ErrorCode::NoSignChange,
                    "solve_lambda_sep: state separable over the whole domain (mu_min at endpoints: " +
                        std::to_string(mu_lo) + ", " + std::to_string(mu_hi) + ")");
    }
    // Locate the first PPT grid point, then bisect in the bracket before it.
    double lo = family.lo, hi = family.hi;
    bool bracketed = false;
    for (int i = 1; i < kBracketGrid; ++i) {
        const double p = family.lo + (family.hi - family.lo) * i / (kBracketGrid - 1);
        if (output_mu_min(family, rho, p) >= -tol::psd) {
            hi = p;
            lo = family.lo + (family.hi - family.lo) * (i - 1) / (kBracketGrid - 1);
            bracketed = true;
            break;
        }
    }
    if (!bracketed) {
        const double mu_hi = output_mu_min(family, rho, family.hi);
        throw Error(ErrorCode::NoSignChange,
                    "solve_lambda_sep: output never becomes separable (mu_min at endpoints: " +
                        std::to_string(mu_lo) + ", " + std::to_string(mu_hi) + ")");
    }
    const double bracket_lo = lo, bracket_hi = hi;
    int iters = 0;
    while (hi - lo > 1e-12 && iters < kBisectCap) {
        const double mid = 0.5 * (lo + hi);
        if (output_mu_min(family, rho, mid) >= -tol::psd)
            hi = mid;
        else
            lo = mid;
        ++iters;
    }
    const double root = 0.5 * (lo + hi);
    return {root, std::abs(output_mu_min(family, rho, root)), iters, bracket_lo, bracket_hi};
}

RootResult solve_t_threshold() {
    const double target = 1.0 - binary_entropy(1.0 / 6.0);
    auto f = [&](double t) { return entanglement_of_formation(paper::rho3_in(t)) - target; };
    double lo = 1e-9, hi = 1.0 - 1e-9;
    const double bracket_lo = lo, bracket_hi = hi;
    int iters = 0;
    while (hi - lo > 1e-12 && iters < kBisectCap) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) >= 0.0)
            hi = mid;
        else
            lo = mid;
        ++iters;
    }
    const double root = 0.5 * (lo + hi);
    return {root, std::abs(f(root)), iters, bracket_lo, bracket_hi};
}

namespace {

DensityMatrix apply_locc_chain(const DensityMatrix& state, const std::vector<LoccStep>& chain) {
    DensityMatrix cur = state;
    for (const auto& step : chain) {
        if (const auto* inv = std::get_if<LoccStepUnitaryInverse>(&step)) {
            cur = local_unitary(cur, inv->u.dagger(), inv->side);
        } else {
            cur = replace_with_00(cur, std::get<LoccStepReplaceWith00>(step).epsilon);
        }
    }
    return cur;
}

}  // namespace

OrderingCertificate certify_selective_breaking(const KrausChannel& channel,
                                               const DensityMatrix& omega1,
                                               const DensityMatrix& omega2,
                                               const std::vector<LoccStep>& locc_chain,
                                               bool with_strict_window) {
    OrderingCertificate cert;
    auto add = [&](const std::string& name, bool passed, double value, std::string detail) {
        cert.pieces.push_back({name, passed, value, std::move(detail)});
        if (!passed && cert.first_failure.empty()) cert.first_failure = name;
        return passed;
    };

    // 1. omega2 must be reachable from omega1 through the whitelisted chain.
    const DensityMatrix reached = apply_locc_chain(omega1, locc_chain);
    const double chain_defect = max_abs_diff(reached.mat(), omega2.mat());
    add("input_order_chain", chain_defect <= 1e-12, chain_defect,
        "max-norm defect of LOCC chain output vs omega2");

    // 2. strict input inequality in negativity.
    const double n1_in = negativity(omega1).first;
    const double n2_in = negativity(omega2).first;
    add("strict_input_inequality", n1_in - n2_in > 1e-12, n1_in - n2_in,
        "N(omega1) - N(omega2)");

    // 3. channel output of omega1 separable.
    const DensityMatrix out1 = apply_local(channel, omega1, Side::A);
    const double mu1 = negativity(out1).second;
    add("output_separable", ppt_separability(out1) == SeparabilityVerdict::Separable, mu1,
        "min PT eigenvalue of channel[omega1]");

    // 4. channel output of omega2 entangled.
    const DensityMatrix out2 = apply_local(channel, omega2, Side::A);
    const double mu2 = negativity(out2).second;
    add("output_entangled", mu2 < -tol::psd, mu2, "min PT eigenvalue of channel[omega2]");

    cert.valid = cert.first_failure.empty();
    if (with_strict_window && cert.valid)
        cert.strict_window = std::make_pair(0.0, solve_t_threshold().value);
    return cert;
}

StrongCertificate certify_strong_selective_breaking(const KrausChannel& channel,
                                                    const DensityMatrix& omega1,
                                                    const std::vector<double>& t_sequence) {
    if (t_sequence.empty())
        throw Error(ErrorCode::InvalidArgument, "strong certificate: empty t sequence");
    for (std::size_t j = 0; j < t_sequence.size(); ++j) {
        if (t_sequence[j] <= 0.0 || t_sequence[j] >= 2.0 / 3.0)
            throw Error(ErrorCode::ParameterOutOfRange, "strong certificate: t_j outside (0, 2/3)");
        if (j > 0 && t_sequence[j] > t_sequence[j - 1])
            throw Error(ErrorCode::InvalidArgument, "strong certificate: t sequence must decrease");
    }

    StrongCertificate cert;
    auto add = [&](const std::string& name, bool passed, double value, std::string detail) {
        cert.pieces.push_back({name, passed, value, std::move(detail)});
        if (!passed && cert.first_failure.empty()) cert.first_failure = name;
    };

    bool monotone = true;
    bool all_outputs_entangled = true;
    double worst_out_mu = -std::numeric_limits<double>::infinity();
    double prev_n = negativity(omega1).first;
    for (double t : t_sequence) {
        const DensityMatrix in = paper::rho3_in(t);
        const double n_in = negativity(in).first;
        const DensityMatrix out = apply_local(channel, in, Side::A);
        const auto [n_out, mu_out] = negativity(out);
        cert.sequence.push_back({t, n_in, n_out, entanglement_of_formation(in)});
        if (n_in > prev_n + 1e-12) monotone = false;
        prev_n = n_in;
        if (mu_out >= -tol::psd) all_outputs_entangled = false;
        worst_out_mu = std::max(worst_out_mu, mu_out);
    }

    add("monotone_negativity", monotone, prev_n, "negativity along the sequence is nonincreasing");
    add("outputs_entangled", all_outputs_entangled, worst_out_mu,
        "largest min-PT eigenvalue among sequence outputs");
    const double ef_tail = cert.sequence.back().ef_in;
    add("ef_tail_vanishes", ef_tail < 1e-6, ef_tail, "E_f of the last sequence element");
    const DensityMatrix out1 = apply_local(channel, omega1, Side::A);
    const double mu1 = negativity(out1).second;
    add("omega1_output_separable", ppt_separability(out1) == SeparabilityVerdict::Separable, mu1,
        "min PT eigenvalue of channel[omega1]");

    cert.valid = cert.first_failure.empty();
    return cert;
}

namespace {

// Level permutation on a qutrit: |i> -> |perm[i]>.
ComplexMatrix qutrit_permutation(const int perm[3]) {
    ComplexMatrix p(3, 3);
    for (int i = 0; i < 3; ++i) p(perm[i], i) = 1.0;
    return p;
}

PureState filter_branch(const KrausChannel& filter, const PureState& psi, std::size_t branch,
                        double* probability) {
    const ComplexMatrix op = kron(filter.ops()[branch], ComplexMatrix::identity(psi.dim_b()));
    std::vector<Complex> amps(psi.amplitudes().size(), Complex{0.0, 0.0});
    for (std::size_t r = 0; r < op.rows(); ++r)
        for (std::size_t c = 0; c < op.cols(); ++c)
            amps[r] += op(r, c) * psi.amplitudes()[c];
    double n2 = 0.0;
    for (const auto& z : amps) n2 += std::norm(z);
    *probability = n2;
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& z : amps) z *= inv;
    return PureState(psi.dim_a(), psi.dim_b(), std::move(amps));
}

double overlap(const PureState& a, const PureState& b) {
    Complex dot{0.0, 0.0};
    for (std::size_t i = 0; i < a.amplitudes().size(); ++i)
        dot += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
    return std::abs(dot);
}

PureState apply_local_permutations(const PureState& psi, const ComplexMatrix& pa,
                                   const ComplexMatrix& pb) {
    const ComplexMatrix op = kron(pa, pb);
    std::vector<Complex> amps(psi.amplitudes().size(), Complex{0.0, 0.0});
    for (std::size_t r = 0; r < op.rows(); ++r)
        for (std::size_t c = 0; c < op.cols(); ++c)
            amps[r] += op(r, c) * psi.amplitudes()[c];
    return PureState(psi.dim_a(), psi.dim_b(), std::move(amps));
}

}  // namespace

QutritReport qutrit_example(double q) {
    if (q <= 0.0 || q >= 1.0)
        throw Error(ErrorCode::ParameterOutOfRange, "qutrit_example: q outside (0,1)");

    QutritReport rep{};
    rep.q = q;

    const PureState psi1 = paper::qutrit_psi1();
    const PureState psi2 = paper::qutrit_psi2(q);
    const KrausChannel dephase = qutrit_dephase();

    const DensityMatrix out1 = apply_local(dephase, psi1.to_density(), Side::A);
    const DensityMatrix out2 = apply_local(dephase, psi2.to_density(), Side::A);

    rep.n_out1 = negativity(out1).first;
    rep.n_out2 = negativity(out2).first;
    rep.out2_defect = max_abs_diff(out2.mat(), psi2.to_density().mat());

    // out1 = (|11><11| + |22><22|)/2: explicit product decomposition.
    std::vector<ProductTerm> decomposition;
    for (int level : {1, 2}) {
        std::vector<Complex> ket(3, Complex{0.0, 0.0});
        ket[level] = 1.0;
        decomposition.push_back({0.5, ket, ket});
    }
    rep.out1_separable = ppt_separability(out1, &decomposition) == SeparabilityVerdict::Separable;

    // LOCC chain psi1 -> psi2 via the local filter, branch by branch.
    const KrausChannel filter = qutrit_filter(q);
    rep.filter_completeness_defect = filter.completeness_defect();

    const double target[2] = {std::sqrt(std::max(q, 1.0 - q)), std::sqrt(std::min(q, 1.0 - q))};
    const int perm_branch0[3] = {2, 1, 0};  // swap levels 0 and 2
    const int perm_branch1[3] = {2, 0, 1};  // 1 -> 0, 2 -> 1
    const int* perms[2] = {perm_branch0, perm_branch1};

    bool ok = true;
    for (std::size_t b = 0; b < 2; ++b) {
        QutritBranch& br = rep.branches[b];
        PureState branch = filter_branch(filter, psi1, b, &br.probability);
        br.schmidt = branch.schmidt_coefficients();
        br.schmidt_error = 0.0;
        for (int k = 0; k < 2; ++k)
            br.schmidt_error = std::max(br.schmidt_error, std::abs(br.schmidt[k] - target[k]));
        const ComplexMatrix p = qutrit_permutation(perms[b]);
        br.overlap_with_psi2 = overlap(psi2, apply_local_permutations(branch, p, p));
        if (br.schmidt_error > 1e-12 || std::abs(br.overlap_with_psi2 - 1.0) > 1e-12) ok = false;
    }

    rep.valid = ok && rep.out1_separable && rep.out2_defect <= 1e-14 &&
                rep.n_out1 <= tol::psd && rep.filter_completeness_defect <= 1e-15;
    return rep;
}

NogoReport pure_state_nogo_scan(int trials, std::uint64_t seed) {
    if (trials < 1)
        throw Error(ErrorCode::ParameterOutOfRange, "pure_state_nogo_scan: trials must be >= 1");
    NogoReport rep{};
    rep.trials = trials;
    rep.seed = seed;
    Rng rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        const KrausChannel channel = random_qubit_channel(rng);
        double alpha = rng.uniform();
        while (alpha <= 0.0 || alpha >= 1.0) alpha = rng.uniform();
        const double beta = std::sqrt(1.0 - alpha * alpha);
        PureState psi(2, 2, {Complex{alpha, 0.0}, {}, {}, Complex{beta, 0.0}});
        const DensityMatrix out = apply_local(channel, psi.to_density(), Side::A);
        const double mu = negativity(out).second;
        // Stricter than tol::psd on purpose: the implication "separable
        // output => breaking channel" is only testable when the output is
        // PPT beyond eigensolver accuracy (~1e-13). A min PT eigenvalue in
        // (-1e-10, -1e-12) is a reliably entangled output that the coarse
        // PPT band would misclassify, manufacturing a false counterexample.
        if (mu >= -tol::herm) {
            ++rep.separable_outputs;
            const EntanglementBreakingResult eb = is_entanglement_breaking(channel);
            if (eb.breaking)
                ++rep.eb_confirmed;
            else
                rep.counterexamples.push_back({trial, alpha, mu, eb.choi_min_pt_eigenvalue});
        }
    }
    return rep;
}

ComplexMatrix euler_unitary(double theta, double phi, double psi) {
    auto rz = [](double a) {
        ComplexMatrix m(2, 2);
        m(0, 0) = std::polar(1.0, -0.5 * a);
        m(1, 1) = std::polar(1.0, 0.5 * a);
        return m;
    };
    ComplexMatrix ry(2, 2);
    ry(0, 0) = std::cos(0.5 * theta);
    ry(0, 1) = -std::sin(0.5 * theta);
    ry(1, 0) = std::sin(0.5 * theta);
    ry(1, 1) = std::cos(0.5 * theta);
    return rz(phi) * ry * rz(psi);
}

namespace {

double lambda_sep_of_rotated(const DensityMatrix& rho, const ChannelFamily& family, double theta,
                             double phi, double psi) {
    const DensityMatrix rotated = local_unitary(rho, euler_unitary(theta, phi, psi), Side::A);
    return solve_lambda_sep(family, rotated).value;
}

}  // namespace

SearchResult orbit_search(const DensityMatrix& rho, const ChannelFamily& family, int grid_n) {
    if (grid_n < 2)
        throw Error(ErrorCode::InvalidArgument, "orbit_search: grid must have >= 2 points per angle");

    SearchResult result;
    try {
        result.lambda_sep_base = solve_lambda_sep(family, rho).value;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NoSignChange) {
            result.no_sign_change = true;
            return result;
        }
        throw;
    }

    const double dtheta = M_PI / (grid_n - 1);
    const double dangle = 2.0 * M_PI / grid_n;
    for (int i = 0; i < grid_n; ++i)
        for (int j = 0; j < grid_n; ++j)
            for (int k = 0; k < grid_n; ++k) {
                const double theta = i * dtheta;
                const double phi = j * dangle;
                const double psi = k * dangle;
                const double ls = lambda_sep_of_rotated(rho, family, theta, phi, psi);
                result.records.push_back(
                    {theta, phi, psi, ls, std::abs(ls - result.lambda_sep_base)});
            }

    // Sort by gap descending; quantize so symmetric near-ties order by angles.
    std::sort(result.records.begin(), result.records.end(),
              [](const SearchRecord& a, const SearchRecord& b) {
                  const double ga = std::round(a.gap * 1e10), gb = std::round(b.gap * 1e10);
                  if (ga != gb) return ga > gb;
                  if (a.theta != b.theta) return a.theta < b.theta;
                  if (a.phi != b.phi) return a.phi < b.phi;
                  return a.psi < b.psi;
              });

    // Refine the top record within one grid cell, one angle at a time.
    if (!result.records.empty() && result.records.front().gap > 1e-9) {
        SearchRecord& top = result.records.front();
        double x[3] = {top.theta, top.phi, top.psi};
        const double half[3] = {dtheta, dangle, dangle};
        for (int pass = 0; pass < 3; ++pass) {
            for (int c = 0; c < 3; ++c) {
                double lo = x[c] - half[c], hi = x[c] + half[c];
                if (c == 0) {
                    lo = std::max(0.0, lo);
                    hi = std::min(M_PI, hi);
                }
                auto gap_at = [&](double v) {
                    double y[3] = {x[0], x[1], x[2]};
                    y[c] = v;
                    return std::abs(lambda_sep_of_rotated(rho, family, y[0], y[1], y[2]) -
                                    result.lambda_sep_base);
                };
                for (int it = 0; it < 60 && hi - lo > 1e-10; ++it) {
                    const double m1 = lo + (hi - lo) / 3.0;
                    const double m2 = hi - (hi - lo) / 3.0;
                    if (gap_at(m1) < gap_at(m2))
                        lo = m1;
                    else
                        hi = m2;
                }
                // On a flat direction ternary search parks anywhere in the
                // cell; keep the grid angle unless the move actually helps.
                const double candidate = 0.5 * (lo + hi);
                if (gap_at(candidate) > gap_at(x[c]) + 1e-12) x[c] = candidate;
            }
        }
        top.theta = x[0];
        top.phi = x[1];
        top.psi = x[2];
        top.lambda_sep = lambda_sep_of_rotated(rho, family, x[0], x[1], x[2]);
        top.gap = std::abs(top.lambda_sep - result.lambda_sep_base);
    }
    return result;
}

}  // namespace entbreak
