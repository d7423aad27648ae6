#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cauchy/cauchy_builders.hpp"
#include "cauchy/definiteness.hpp"
#include "cauchy/hadamard.hpp"
#include "cauchy/json_io.hpp"
#include "cauchy/oracle.hpp"
#include "cauchy/spectral.hpp"
#include "cauchy/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;

struct GlobalFlags {
    std::uint64_t seed = 42;
    int threads = 1;
    double tol = 1e-8;
    int restarts = 32;
    int max_iter = 5000;
    double budget = 1e8;
    std::string output;
};

// JSON goes to --output (summary to stdout) when a path was given, else JSON
// to stdout and the human summary to stderr so pipelines stay parseable.
void emit(const GlobalFlags& flags, const std::string& payload,
          const std::string& summary) {
    if (!flags.output.empty()) {
        std::ofstream out(flags.output);
        if (!out) {
            throw cauchy::Error("cannot open output file: " + flags.output);
        }
        out << payload << "\n";
        std::cout << summary;
    } else {
        std::cout << payload << "\n";
        std::cerr << summary;
    }
}

int run_build(const GlobalFlags& flags, const std::string& input) {
    const cauchy::GeneratingVector c = cauchy::io::load_generating_vector(input);
    cauchy::BuildDiagnostics diagnostics;
    const cauchy::SymmetricTensor t =
        cauchy::build_cauchy(c, cauchy::BuildOptions{}, &diagnostics);
    const bool hankel = cauchy::is_hankel_compatible(c);

    std::ostringstream summary;
    summary << "order " << t.order() << ", dimension " << t.dimension() << ", "
            << t.canonical_size() << " canonical entries, Hankel-compatible: "
            << (hankel ? "yes" : "no") << "\n";
    for (const auto& w : diagnostics.near_singular) {
        summary << "warning: near-singular multiset sum " << w.sum
                << " at indices " << cauchy::format_indices_one_based(w.indices)
                << "\n";
    }
    emit(flags, cauchy::io::dump_tensor_json(t), summary.str());
    return kExitOk;
}

int run_classify(const GlobalFlags& flags, const std::string& input) {
    const cauchy::GeneratingVector c = cauchy::io::load_generating_vector(input);
    const cauchy::DefinitenessReport report = cauchy::classify(c);
    std::optional<cauchy::RowSumProfile> profile;
    try {
        profile = cauchy::row_sum_profile(c, flags.budget);
    } catch (const cauchy::BudgetExceeded&) {
        // Classification never needs row sums; report them only when cheap.
    }
    std::ostringstream summary;
    summary << to_string(report.classification) << ": " << report.witness
            << "\n";
    emit(flags,
         cauchy::io::definiteness_report_json(report,
                                              profile ? &*profile : nullptr),
         summary.str());
    return kExitOk;
}

int run_rowsums(const GlobalFlags& flags, const std::string& input) {
    const cauchy::GeneratingVector c = cauchy::io::load_generating_vector(input);
    const cauchy::RowSumProfile profile =
        cauchy::row_sum_profile(c, flags.budget);
    json out;
    out["row_sums"] = profile.row_sums;
    out["R"] = profile.max_row_sum;
    out["r"] = profile.min_row_sum;
    out["argmax_row"] = profile.argmax_row + 1;
    out["argmin_row"] = profile.argmin_row + 1;
    std::ostringstream summary;
    summary << "R = " << profile.max_row_sum << " at row "
            << profile.argmax_row + 1 << ", r = " << profile.min_row_sum
            << " at row " << profile.argmin_row + 1 << "\n";
    emit(flags, out.dump(2), summary.str());
    return kExitOk;
}

int run_eig_h(const GlobalFlags& flags, const cauchy::GeneratingVector& c) {
    cauchy::PowerOptions popt;
    popt.tol = flags.tol;
    popt.max_iter = flags.max_iter;
    cauchy::VariationalOptions vopt;
    vopt.restarts = flags.restarts;
    vopt.seed = flags.seed;
    vopt.max_iter = flags.max_iter;
    vopt.threads = flags.threads;

    std::vector<cauchy::SpectralPair> pairs;
    json out;
    std::ostringstream summary;
    int exit_code = kExitOk;

    const auto run_power = [&](const cauchy::GeneratingVector& pos,
                               double sign) {
        try {
            cauchy::SpectralPair pair = cauchy::h_eigen_max(pos, popt);
            pair.lambda *= sign;
            pairs.push_back(std::move(pair));
        } catch (const cauchy::NoConvergence& e) {
            cauchy::SpectralPair pair = e.best();
            pair.lambda *= sign;
            pairs.push_back(std::move(pair));
            summary << "warning: " << e.what() << "\n";
            exit_code = kExitVerification;
        }
    };

    if (c.all_positive()) {
        run_power(c, 1.0);
        summary << "largest H-eigenvalue " << pairs.front().lambda << "\n";
        if (c.order() % 2 == 0) {
            pairs.push_back(cauchy::h_lambda_min_variational(c, vopt));
            summary << "smallest H-eigenvalue candidate "
                    << pairs.back().lambda << " (variational, heuristic)\n";
        }
    } else if (c.all_negative()) {
        // The tensor is the negative of the one generated by -c, so its
        // extreme eigenvalue is the negated dominant pair of the mirror.
        std::vector<double> mirrored = c.entries();
        for (double& v : mirrored) v = -v;
        const cauchy::GeneratingVector mc(std::move(mirrored), c.order());
        run_power(mc, -1.0);
        summary << "smallest H-eigenvalue " << pairs.front().lambda
                << " (mirror of the positive case)\n";
        if (c.order() % 2 == 0) {
            cauchy::SpectralPair hi = cauchy::h_lambda_min_variational(mc, vopt);
            hi.lambda = -hi.lambda;
            pairs.push_back(std::move(hi));
            summary << "largest H-eigenvalue candidate " << pairs.back().lambda
                    << " (variational, heuristic)\n";
        }
    } else {
        if (c.order() % 2 != 0) {
            throw cauchy::PreconditionViolated(
                "H-eigen computation for mixed-sign c needs even order"
                " (variational level set)");
        }
        out["bounds"] = json::parse(
            cauchy::io::bounds_report_json(cauchy::bounds(c, flags.budget)));
        pairs.push_back(cauchy::h_lambda_min_variational(c, vopt));
        pairs.push_back(cauchy::h_lambda_max_variational(c, vopt));
        out["note"] = "mixed-sign generating vector: variational candidates"
                      " only, power iteration needs c > 0";
        summary << "H-eigenvalue candidates [" << pairs[0].lambda << ", "
                << pairs[1].lambda << "] (variational, heuristic)\n";
    }

    out["pairs"] = json::parse(cauchy::io::spectral_pairs_json(pairs));
    out["seed"] = flags.seed;
    emit(flags, out.dump(2), summary.str());
    return exit_code;
}

int run_eig_z(const GlobalFlags& flags, const cauchy::GeneratingVector& c) {
    cauchy::ZSearchOptions zopt;
    zopt.restarts = flags.restarts;
    zopt.seed = flags.seed;
    zopt.tol = flags.tol;
    zopt.max_iter = flags.max_iter;
    zopt.threads = flags.threads;
    const cauchy::ZSearchResult result = cauchy::z_eigen_search(c, zopt);

    json out;
    out["pairs"] = json::parse(cauchy::io::spectral_pairs_json(result.pairs));
    out["attempts"] = result.attempts;
    out["dropped"] = result.dropped;
    out["shift"] = result.shift_used;
    out["seed"] = flags.seed;

    std::ostringstream summary;
    summary << result.pairs.size() << " distinct Z-pairs from "
            << result.attempts << " attempts (" << result.dropped
            << " non-converged dropped)\n";
    if (c.order() % 2 != 0 && c.all_positive() && !result.pairs.empty()) {
        const cauchy::SignAuditReport audit =
            cauchy::odd_sign_audit(result.pairs, c);
        out["sign_audit"] = {{"audited", audit.audited},
                             {"violations", audit.violations},
                             {"indeterminate", audit.indeterminate}};
        summary << "sign audit: " << audit.violations << " violations over "
                << audit.audited << " pairs\n";
    }
    emit(flags, out.dump(2), summary.str());
    return result.pairs.empty() ? kExitVerification : kExitOk;
}

int run_bounds(const GlobalFlags& flags, const std::string& input) {
    const cauchy::GeneratingVector c = cauchy::io::load_generating_vector(input);
    const cauchy::BoundsReport report = cauchy::bounds(c, flags.budget);
    std::ostringstream summary;
    if (report.thm31.applicable) {
        summary << "largest H-eigenvalue inside (" << *report.thm31_lower
                << ", " << *report.thm31_upper << ")\n";
    } else {
        summary << "row-sum bracket not applicable: " << report.thm31.reason
                << "\n";
    }
    if (report.lemma31.applicable) {
        summary << "lambda_min <= " << *report.lemma31_lower_cap
                << ", lambda_max >= " << *report.lemma31_upper_floor << "\n";
    } else {
        summary << "mixed-sign caps not applicable: " << report.lemma31.reason
                << "\n";
    }
    emit(flags, cauchy::io::bounds_report_json(report), summary.str());
    return kExitOk;
}

int run_hadamard(const GlobalFlags& flags,
                 const std::vector<std::string>& inputs) {
    std::vector<cauchy::SymmetricTensor> factors;
    factors.reserve(inputs.size());
    for (const std::string& path : inputs) {
        factors.push_back(
            cauchy::build_cauchy(cauchy::io::load_generating_vector(path)));
    }
    const cauchy::SymmetricTensor product = cauchy::hadamard_chain(factors);
    const cauchy::oracle::SphereMinResult smin = cauchy::oracle::sphere_min(
        product, flags.restarts, flags.seed, flags.threads);

    json out = json::parse(cauchy::io::dump_tensor_json(product));
    out["oracle"] = {{"sphere_min", smin.value},
                     {"argmin", smin.argmin},
                     {"restarts", smin.restarts},
                     {"seed", smin.seed}};
    std::ostringstream summary;
    summary << inputs.size() << "-factor product, sphere minimum "
            << smin.value << "\n";
    emit(flags, out.dump(2), summary.str());
    return kExitOk;
}

int run_verify(const GlobalFlags& flags, const std::string& input,
               const std::string& suite) {
    const cauchy::GeneratingVector c = cauchy::io::load_generating_vector(input);
    cauchy::verify::Options options;
    options.seed = flags.seed;
    options.restarts = flags.restarts;
    options.threads = flags.threads;
    options.term_budget = flags.budget;
    options.tol = flags.tol;
    const cauchy::verify::Report report =
        cauchy::verify::run_suite(c, suite, options);

    std::ostringstream summary;
    for (const auto& check : report.checks) {
        summary << check.tag << " " << to_string(check.status) << ": "
                << check.detail << "\n";
    }
    summary << report.passes << " passed, " << report.failures << " failed, "
            << report.skipped << " skipped\n";
    emit(flags, cauchy::io::verify_report_json(report, flags.seed),
         summary.str());
    return report.failures > 0 ? kExitVerification : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetric Cauchy tensor toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags flags;
    app.add_option("--seed", flags.seed, "RNG seed recorded in reports");
    app.add_option("--threads", flags.threads, "worker threads for restarts");
    app.add_option("--tol", flags.tol, "convergence / verification tolerance");
    app.add_option("--restarts", flags.restarts, "multi-start restart count");
    app.add_option("--max-iter", flags.max_iter, "iteration cap per solve");
    app.add_option("--budget", flags.budget,
                   "weighted-term budget for row sums and bounds");
    app.add_option("--output", flags.output, "write JSON report to this file");

    std::string input;
    std::vector<std::string> hadamard_inputs;
    std::string kind = "h";
    std::string suite = "all";

    CLI::App* cmd_build = app.add_subcommand(
        "build", "build a tensor from a generating-vector file");
    cmd_build->add_option("input", input, "JSON input file")->required();

    CLI::App* cmd_classify =
        app.add_subcommand("classify", "definiteness classification");
    cmd_classify->add_option("input", input, "JSON input file")->required();

    CLI::App* cmd_rowsums =
        app.add_subcommand("rowsums", "weighted row sums and extremes");
    cmd_rowsums->add_option("input", input, "JSON input file")->required();

    CLI::App* cmd_eig =
        app.add_subcommand("eig", "extreme eigenpairs (H or Z kind)");
    cmd_eig->add_option("input", input, "JSON input file")->required();
    cmd_eig->add_option("--kind", kind, "eigenpair kind: h or z")
        ->check(CLI::IsMember({"h", "z"}));

    CLI::App* cmd_bounds =
        app.add_subcommand("bounds", "eigenvalue bounds from row sums");
    cmd_bounds->add_option("input", input, "JSON input file")->required();

    CLI::App* cmd_hadamard = app.add_subcommand(
        "hadamard", "entrywise product of the given tensors plus an oracle"
                    " sphere-minimum verdict");
    cmd_hadamard->add_option("inputs", hadamard_inputs, "JSON input files")
        ->required()
        ->expected(-1);

    CLI::App* cmd_verify =
        app.add_subcommand("verify", "run property suites on the input");
    cmd_verify->add_option("input", input, "JSON input file")->required();
    cmd_verify
        ->add_option("--suite", suite,
                     "all, psd, spectral, hadamard, or integral")
        ->check(CLI::IsMember({"all", "psd", "spectral", "hadamard",
                               "integral"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (cmd_build->parsed()) return run_build(flags, input);
        if (cmd_classify->parsed()) return run_classify(flags, input);
        if (cmd_rowsums->parsed()) return run_rowsums(flags, input);
        if (cmd_eig->parsed()) {
            const cauchy::GeneratingVector c =
                cauchy::io::load_generating_vector(input);
            return kind == "h" ? run_eig_h(flags, c) : run_eig_z(flags, c);
        }
        if (cmd_bounds->parsed()) return run_bounds(flags, input);
        if (cmd_hadamard->parsed()) return run_hadamard(flags, hadamard_inputs);
        if (cmd_verify->parsed()) return run_verify(flags, input, suite);
    } catch (const cauchy::NoConvergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    } catch (const cauchy::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
