#include "coinqubit/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "coinqubit/error.hpp"
#include "coinqubit/json_io.hpp"
#include "coinqubit/malevich.hpp"
#include "coinqubit/observables.hpp"
#include "coinqubit/superposition.hpp"
#include "coinqubit/tomography.hpp"

namespace coinqubit::cli {
namespace {

constexpr double kPathAgreement = 1e-9;
constexpr const char* kSeedVariable = "COIN_QUBIT_SEED";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Either inline JSON (starting with '{') or a path to a JSON file.
Json load_json(const std::string& source) {
    std::string text = source;
    const auto first = source.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || source[first] != '{') {
        std::ifstream in(source);
        if (!in) {
            throw UsageError("cannot open " + source);
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw UsageError("invalid JSON in " + source + ": " + e.what());
    }
}

struct StateArgs {
    std::optional<double> p1, p2, p3;
    std::string state;

    void attach(CLI::App* cmd) {
        cmd->add_option("--p1", p1, "probability of x-coin up");
        cmd->add_option("--p2", p2, "probability of y-coin up");
        cmd->add_option("--p3", p3, "probability of z-coin up");
        cmd->add_option("--state", state, "coin-state JSON (file path or inline object)");
    }

    ProbabilityTriple resolve() const {
        const bool any_flag = p1 || p2 || p3;
        if (!state.empty()) {
            if (any_flag) {
                throw UsageError("give either --state or --p1/--p2/--p3, not both");
            }
            return coin_state_from_json(load_json(state));
        }
        if (!(p1 && p2 && p3)) {
            throw UsageError("a state needs --p1, --p2 and --p3 (or --state)");
        }
        return {*p1, *p2, *p3};
    }
};

ProbabilityTriple state_from(const std::string& source) {
    return coin_state_from_json(load_json(source));
}

Json classification_json(const Classification& c) {
    Json j;
    j["class"] = to_string(c.state_class);
    j["radius2"] = c.radius2;
    return j;
}

double max_difference(const ProbabilityTriple& a, const ProbabilityTriple& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

bool paths_agree(const ProbabilityTriple& p, const ProbabilityTriple& q,
                 const SuperpositionWeights& w, const SuperpositionResult& reported) {
    bool agree = max_difference(reported.state, superpose_oracle(p, q, w).state) <= kPathAgreement;
    if (fidelity(p, q) < kClassificationTolerance) {
        agree = agree && max_difference(reported.state, superpose_spinor(p, q, w).state) <=
                             kPathAgreement;
        try {
            agree = agree && max_difference(reported.state, superpose_orthogonal(p, q, w).state) <=
                                 kPathAgreement;
        } catch (const Error& e) {
            // pure weights leave the projector rule undefined; other paths still apply
            if (e.code() != ErrorCode::degenerate_phase_state) throw;
        }
    }
    return agree;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv(kSeedVariable); env != nullptr && *env != '\0') {
        std::uint64_t value = 0;
        const std::string_view text(env);
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr != text.data() + text.size()) {
            throw UsageError(std::string(kSeedVariable) + " must be an unsigned 64-bit integer");
        }
        return value;
    }
    return 0;
}

void emit_error(std::ostream& err, std::string_view code, const std::string& message) {
    Json j;
    j["error"]["code"] = code;
    j["error"]["message"] = message;
    err << dump(j) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Qubit states as three classical coin probabilities", "coinqubit"};
    app.require_subcommand(1);

    // Each subcommand sets `action`; it runs after parsing so that library
    // errors are reported with the domain exit code.
    std::function<void()> action;

    StateArgs check_state;
    auto* check = app.add_subcommand("check", "classify a triple against the Bloch ball");
    check_state.attach(check);
    check->callback([&] {
        action = [&] { out << dump(classification_json(classify(check_state.resolve()))) << '\n'; };
    });

    StateArgs purity_state;
    auto* purity_cmd = app.add_subcommand("purity", "purity Tr rho^2 of a quantum state");
    purity_state.attach(purity_cmd);
    purity_cmd->callback([&] {
        action = [&] {
            Json j;
            j["purity"] = purity(purity_state.resolve());
            out << dump(j) << '\n';
        };
    });

    std::string fid_first, fid_second;
    auto* fid = app.add_subcommand("fidelity", "overlap Tr(rho1 rho2) of two states");
    fid->add_option("--state1", fid_first, "first coin state (path or inline JSON)")->required();
    fid->add_option("--state2", fid_second, "second coin state (path or inline JSON)")->required();
    fid->callback([&] {
        action = [&] {
            Json j;
            j["fidelity"] = fidelity(state_from(fid_first), state_from(fid_second));
            out << dump(j) << '\n';
        };
    });

    StateArgs convert_state;
    std::string convert_density;
    std::optional<double> convert_re, convert_im;
    auto* convert = app.add_subcommand(
        "convert", "coin state -> density matrix/spinor/complex, or back with --density/--re/--im");
    convert_state.attach(convert);
    convert->add_option("--density", convert_density,
                        "density matrix JSON {\"re\":[[..]],\"im\":[[..]]} to convert to coins");
    convert->add_option("--re", convert_re, "real part of a complex number with |z| <= 1");
    convert->add_option("--im", convert_im, "imaginary part of a complex number with |z| <= 1");
    convert->callback([&] {
        action = [&] {
            const bool from_complex = convert_re || convert_im;
            if (!convert_density.empty() && from_complex) {
                throw UsageError("--density and --re/--im are exclusive");
            }
            if (!convert_density.empty()) {
                out << dump(coin_state_json(density_to_prob(density_from_json(load_json(convert_density)))))
                    << '\n';
                return;
            }
            if (from_complex) {
                const Complex z(convert_re.value_or(0.0), convert_im.value_or(0.0));
                out << dump(coin_state_json(complex_to_coins(z))) << '\n';
                return;
            }
            const ProbabilityTriple p = convert_state.resolve();
            const DensityMatrix2 rho = prob_to_density(p);
            const Classification c = classify(p);
            Json j;
            j["state"] = coin_state_json(p);
            j["class"] = to_string(c.state_class);
            j["density"] = density_json(rho);
            j["positive"] = rho.is_nonnegative();
            if (c.state_class == StateClass::pure) {
                const Spinor2 s = prob_to_spinor(p);
                j["spinor"] = {{"amplitude0", s.amplitude0()},
                               {"amplitude1", s.amplitude1()},
                               {"phase", s.phase()}};
                const Complex z = coins_to_complex(p);
                j["complex"] = {{"re", z.real()}, {"im", z.imag()}};
            }
            out << dump(j) << '\n';
        };
    });

    std::string sup_first, sup_second, sup_weights;
    auto* sup = app.add_subcommand("superpose", "coin triple of c1|psi1> + c2|psi2>");
    sup->add_option("--state1", sup_first, "first pure coin state")->required();
    sup->add_option("--state2", sup_second, "second pure coin state")->required();
    sup->add_option("--weights", sup_weights, "pure coin state encoding (c1, c2)")->required();
    sup->callback([&] {
        action = [&] {
            const ProbabilityTriple p = state_from(sup_first);
            const ProbabilityTriple q = state_from(sup_second);
            const SuperpositionWeights w(state_from(sup_weights));
            const SuperpositionResult r = superpose_general(p, q, w);
            Json j;
            j["result"] = coin_state_json(r.state);
            j["normalization"] = r.normalization;
            j["paths_agree"] = paths_agree(p, q, w, r);
            j["fallback_used"] = r.fallback_used;
            out << dump(j) << '\n';
        };
    });

    StateArgs partner_state;
    std::string partner_sign = "+";
    auto* partner = app.add_subcommand("partner", "pure state orthogonal to the given one");
    partner_state.attach(partner);
    partner->add_option("--sign", partner_sign, "phase rotation direction")
        ->check(CLI::IsMember({"+", "-"}));
    partner->callback([&] {
        action = [&] {
            const PhaseSign sign = partner_sign == "-" ? PhaseSign::minus : PhaseSign::plus;
            out << dump(coin_state_json(orthogonal_partner(partner_state.resolve(), sign))) << '\n';
        };
    });

    StateArgs triada_state;
    auto* triada = app.add_subcommand("triada", "Malevich square sides L1, L2, L3");
    triada_state.attach(triada);
    triada->callback([&] {
        action = [&] {
            const MalevichTriada t = triada_sides(triada_state.resolve());
            Json j;
            j["L1"] = t.l1();
            j["L2"] = t.l2();
            j["L3"] = t.l3();
            out << dump(j) << '\n';
        };
    });

    StateArgs render_state;
    SvgOptions render_options;
    std::string render_out;
    auto* render = app.add_subcommand("render", "draw the Malevich triada as SVG");
    render_state.attach(render);
    render->add_option("--scale", render_options.scale, "pixels per unit side (default 100)");
    render->add_flag("--labels", render_options.labels, "print side lengths under the squares");
    render->add_option("--out", render_out, "write the SVG here instead of standard output");
    render->callback([&] {
        action = [&] {
            if (!(render_options.scale > 0.0)) {
                throw UsageError("--scale must be positive");
            }
            const std::string svg = render_svg(triada_sides(render_state.resolve()), render_options);
            if (render_out.empty()) {
                out << svg;
                return;
            }
            std::ofstream file(render_out, std::ios::binary);
            if (!file || !(file << svg)) {
                throw UsageError("cannot write " + render_out);
            }
        };
    });

    StateArgs sample_state;
    std::uint64_t sample_n = 0;
    std::optional<std::uint64_t> sample_seed;
    std::string sample_flips_path;
    auto* sample = app.add_subcommand("sample", "simulate coin flips and estimate the state");
    sample_state.attach(sample);
    sample->add_option("--n", sample_n, "flips per axis")->required();
    sample->add_option("--seed", sample_seed, "RNG seed (default: $COIN_QUBIT_SEED, else 0)");
    sample->add_option("--flips", sample_flips_path, "write every flip as CSV trial,axis,outcome");
    sample->callback([&] {
        action = [&] {
            const ProbabilityTriple p = sample_state.resolve();
            const std::uint64_t seed = sample_seed ? *sample_seed : default_seed();
            const std::vector<FlipRecord> flips = sample_flips(p, sample_n, seed);
            if (!sample_flips_path.empty()) {
                std::ofstream file(sample_flips_path, std::ios::binary);
                if (!file) {
                    throw UsageError("cannot write " + sample_flips_path);
                }
                write_flips_csv(file, flips);
            }
            const EstimateReport report = estimate(flips, seed);
            const Reconstruction rec = reconstruct(report);
            Json j;
            j["estimate"] = coin_state_json(report.estimate);
            j["counts"] = report.counts;
            j["standard_errors"] = report.standard_errors;
            j["seed"] = report.seed;
            j["reconstruction"] = {{"class", to_string(rec.classification.state_class)},
                                   {"radius2", rec.classification.radius2},
                                   {"inside_ball", rec.inside_ball()},
                                   {"purity", rec.purity},
                                   {"density", density_json(rec.density)}};
            out << dump(j) << '\n';
        };
    });

    StateArgs mean_state;
    std::string mean_obs;
    CoinObservable mean_flags;
    auto* mean = app.add_subcommand("mean", "classical moments and quantum mean of an observable");
    mean_state.attach(mean);
    mean->add_option("--obs", mean_obs, "observable JSON {\"x\":..,\"y\":..,\"z1\":..,\"z2\":..}");
    auto* fx = mean->add_option("--x", mean_flags.x, "value of X on up");
    auto* fy = mean->add_option("--y", mean_flags.y, "value of Y on up");
    auto* fz1 = mean->add_option("--z1", mean_flags.z1, "value of Z on up");
    auto* fz2 = mean->add_option("--z2", mean_flags.z2, "value of Z on down");
    mean->callback([&] {
        action = [&] {
            if (!mean_obs.empty() && (fx->count() + fy->count() + fz1->count() + fz2->count()) > 0) {
                throw UsageError("give either --obs or --x/--y/--z1/--z2, not both");
            }
            const CoinObservable obs =
                mean_obs.empty() ? mean_flags : observable_from_json(load_json(mean_obs));
            const ProbabilityTriple p = mean_state.resolve();
            const CoinMoments first = classical_means(obs, p);
            const CoinMoments second = second_moments(obs, p);
            Json j;
            j["classical"] = {{"X", first.x}, {"Y", first.y}, {"Z", first.z}, {"sum", first.sum()}};
            j["second_moments"] = {{"X2", second.x}, {"Y2", second.y}, {"Z2", second.z}};
            j["quantum"] = quantum_mean(obs, p);
            out << dump(j) << '\n';
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (action) {
            action();
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::invalid_argument) {
            err << "error: " << e.what() << '\n';
            return kExitUsage;
        }
        emit_error(err, to_string(e.code()), e.what());
        return kExitDomain;
    }
    return kExitOk;
}

}  // namespace coinqubit::cli
