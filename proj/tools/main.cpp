#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "vilenkin/constructions.hpp"
#include "vilenkin/experiments.hpp"
#include "vilenkin/hardy.hpp"
#include "vilenkin/io.hpp"
#include "vilenkin/kernels.hpp"

namespace {

using namespace vilenkin;

constexpr int kExitConfigError = 2;
constexpr int kExitNumericViolation = 3;

struct GlobalFlags {
    std::string radix = "2";
    std::size_t resolution = 0; // 0: length of the radix list
    std::string p_csv;
    std::uint64_t seed = 1;
    std::string out = "-";
    std::string format = "csv";
};

void add_global_flags(CLI::App* cmd, GlobalFlags& flags) {
    cmd->add_option("--radix", flags.radix, "comma-separated radix list, e.g. 2,3,2");
    cmd->add_option("--resolution", flags.resolution,
                    "number of digit levels R (radix list repeats cyclically)");
    cmd->add_option("--p", flags.p_csv, "comma-separated exponent list, e.g. 0.25,0.5,1");
    cmd->add_option("--seed", flags.seed, "random seed");
    cmd->add_option("--out", flags.out, "output path ('-' for stdout)");
    cmd->add_option("--format", flags.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

RadixProfile profile_of(const GlobalFlags& flags) {
    const std::vector<int> radices = parse_radices(flags.radix);
    return RadixProfile(radices, flags.resolution == 0 ? radices.size() : flags.resolution);
}

std::vector<double> parse_exponents(const std::string& csv) {
    std::vector<double> out;
    std::string entry;
    std::istringstream in(csv);
    while (std::getline(in, entry, ',')) {
        std::size_t pos = 0;
        const double value = std::stod(entry, &pos);
        if (pos != entry.size())
            throw std::invalid_argument("exponent '" + entry + "' is not a number");
        out.push_back(value);
    }
    if (out.empty())
        throw std::invalid_argument("exponent list is empty");
    return out;
}

// "3..10" or a single integer.
std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
    const std::size_t dots = text.find("..");
    if (dots == std::string::npos) {
        const std::size_t v = static_cast<std::size_t>(std::stoull(text));
        return {v, v};
    }
    const std::size_t lo = static_cast<std::size_t>(std::stoull(text.substr(0, dots)));
    const std::size_t hi = static_cast<std::size_t>(std::stoull(text.substr(dots + 2)));
    if (hi < lo)
        throw std::invalid_argument("empty range: " + text);
    return {lo, hi};
}

ExperimentConfig base_config(const GlobalFlags& flags, const std::string& experiment) {
    ExperimentConfig config;
    config.experiment = experiment;
    config.radices = parse_radices(flags.radix);
    config.resolution = flags.resolution == 0 ? config.radices.size() : flags.resolution;
    if (!flags.p_csv.empty())
        config.p_list = parse_exponents(flags.p_csv);
    config.seed = flags.seed;
    config.out = flags.out;
    config.format = flags.format;
    return config;
}

void dump_grid(const GridFunction& f, const GlobalFlags& flags, const std::string& csv_header) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (flags.out != "-" && !flags.out.empty()) {
        file.open(flags.out);
        if (!file)
            throw std::invalid_argument("cannot open output file: " + flags.out);
        out = &file;
    }
    if (flags.format == "json")
        write_grid_json(*out, f);
    else
        write_grid_csv(*out, f, csv_header);
}

GridFunction load_input(const std::string& path, const GlobalFlags& flags) {
    if (path.empty())
        throw std::invalid_argument("--input is required");
    std::optional<RadixProfile> profile;
    if (path.size() < 5 || path.compare(path.size() - 5, 5, ".json") != 0)
        profile = profile_of(flags);
    return load_grid(path, profile ? &*profile : nullptr);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fourier analysis on bounded Vilenkin groups: transforms, kernels, "
                 "Fejer means, martingale Hardy quasi-norms, and experiment sweeps"};
    app.require_subcommand(1);

    GlobalFlags transform_flags, kernel_flags, fejer_flags, hardy_flags;
    GlobalFlags t1_flags, t2_flags, cor_flags, conv_flags, bench_flags;

    // transform
    auto* transform_cmd = app.add_subcommand("transform", "forward or inverse transform of a grid file");
    add_global_flags(transform_cmd, transform_flags);
    std::string transform_input;
    std::string transform_direction = "forward";
    transform_cmd->add_option("--input", transform_input, "grid file (.json or .csv)");
    transform_cmd->add_option("--direction", transform_direction, "forward or inverse")
        ->check(CLI::IsMember({"forward", "inverse"}));

    // kernel
    auto* kernel_cmd = app.add_subcommand("kernel", "dump a Dirichlet or Fejer kernel");
    add_global_flags(kernel_cmd, kernel_flags);
    std::string kernel_kind = "dirichlet";
    std::int64_t kernel_n = 1;
    kernel_cmd->add_option("--kind", kernel_kind, "dirichlet or fejer")
        ->check(CLI::IsMember({"dirichlet", "fejer"}));
    kernel_cmd->add_option("--n", kernel_n, "kernel degree");

    // fejer
    auto* fejer_cmd = app.add_subcommand("fejer", "Fejer mean of a grid file");
    add_global_flags(fejer_cmd, fejer_flags);
    std::string fejer_input;
    std::int64_t fejer_n = 1;
    fejer_cmd->add_option("--input", fejer_input, "grid file (.json or .csv)");
    fejer_cmd->add_option("--n", fejer_n, "mean degree");

    // hardy-norm
    auto* hardy_cmd = app.add_subcommand("hardy-norm", "quasi-norm of a grid file");
    add_global_flags(hardy_cmd, hardy_flags);
    std::string hardy_input;
    std::string hardy_flavor = "hp";
    hardy_cmd->add_option("--input", hardy_input, "grid file (.json or .csv)");
    hardy_cmd->add_option("--flavor", hardy_flavor, "lp, weaklp, hp, or all")
        ->check(CLI::IsMember({"lp", "weaklp", "hp", "all"}));

    // theorem1
    auto* t1_cmd = app.add_subcommand("theorem1", "boundedness / growth sweeps for Fejer means");
    add_global_flags(t1_cmd, t1_flags);
    std::string t1_mode = "bounded";
    std::string t1_indices = "Mk";
    std::string t1_range = "1..8";
    std::size_t t1_count = 20;
    double t1_alpha = 2.0;
    t1_cmd->add_option("--mode", t1_mode, "bounded or growth")
        ->check(CLI::IsMember({"bounded", "growth"}));
    t1_cmd->add_option("--indices", t1_indices, "Mk (block indices) or all")
        ->check(CLI::IsMember({"Mk", "all"}));
    t1_cmd->add_option("--A", t1_range, "witness level range for growth mode, e.g. 1..8");
    t1_cmd->add_option("--count", t1_count, "number of random test functions");
    t1_cmd->add_option("--alpha", t1_alpha, "spectral decay of test functions");

    // theorem2
    auto* t2_cmd = app.add_subcommand("theorem2", "Hardy-ratio sweep of the witness family");
    add_global_flags(t2_cmd, t2_flags);
    std::string t2_range = "1..10";
    t2_cmd->add_option("--A", t2_range, "witness level range, e.g. 1..10");

    // corollary
    auto* cor_cmd = app.add_subcommand("corollary", "same sweep against the block maximal operator");
    add_global_flags(cor_cmd, cor_flags);
    std::string cor_range = "1..10";
    cor_cmd->add_option("--A", cor_range, "witness level range, e.g. 1..10");

    // convergence
    auto* conv_cmd = app.add_subcommand("convergence", "Fejer-mean convergence against the modulus of continuity");
    add_global_flags(conv_cmd, conv_flags);
    std::size_t conv_count = 5;
    double conv_alpha = 2.0;
    conv_cmd->add_option("--count", conv_count, "number of random test functions");
    conv_cmd->add_option("--alpha", conv_alpha, "spectral decay of test functions");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "transform timing sweep");
    add_global_flags(bench_cmd, bench_flags);
    std::size_t bench_min = 12;
    bench_cmd->add_option("--min-log2", bench_min, "smallest dyadic size, as log2");

    CLI11_PARSE(app, argc, argv);

    try {
        if (transform_cmd->parsed()) {
            const GridFunction f = load_input(transform_input, transform_flags);
            if (transform_direction == "forward") {
                const Spectrum s = forward(f);
                std::ostream* out = &std::cout;
                std::ofstream file;
                if (transform_flags.out != "-" && !transform_flags.out.empty()) {
                    file.open(transform_flags.out);
                    out = &file;
                }
                transform_flags.format == "json" ? write_spectrum_json(*out, s)
                                                 : write_spectrum_csv(*out, s);
            } else {
                const Spectrum s{f.profile, f.samples};
                dump_grid(inverse(s), transform_flags, "index,re,im");
            }
        } else if (kernel_cmd->parsed()) {
            ExperimentConfig config = base_config(kernel_flags, "kernel-dump");
            config.kernel_kind = kernel_kind;
            config.kernel_n = kernel_n;
            run_experiment(config).write(config.out, config.format);
        } else if (fejer_cmd->parsed()) {
            const GridFunction f = load_input(fejer_input, fejer_flags);
            dump_grid(fejer_mean(f, fejer_n), fejer_flags, "index,value_re,value_im");
        } else if (hardy_cmd->parsed()) {
            const GridFunction f = load_input(hardy_input, hardy_flags);
            const std::vector<double> ps =
                hardy_flags.p_csv.empty() ? std::vector<double>{1.0}
                                          : parse_exponents(hardy_flags.p_csv);
            for (double p : ps) {
                if (hardy_flavor == "all") {
                    std::cout << format_double(p) << ','
                              << format_double(quasi_norm(f, {p, NormFlavor::Lp})) << ','
                              << format_double(quasi_norm(f, {p, NormFlavor::weakLp})) << ','
                              << format_double(quasi_norm(f, {p, NormFlavor::Hp})) << "\n";
                } else {
                    const NormFlavor flavor = hardy_flavor == "lp"
                                                  ? NormFlavor::Lp
                                                  : hardy_flavor == "weaklp" ? NormFlavor::weakLp
                                                                             : NormFlavor::Hp;
                    std::cout << format_double(quasi_norm(f, {p, flavor})) << "\n";
                }
            }
        } else if (t1_cmd->parsed()) {
            ExperimentConfig config = base_config(
                t1_flags, t1_mode == "growth" ? "theorem1-growth" : "theorem1-bounded");
            config.index_set = t1_indices;
            config.random_count = t1_count;
            config.alpha = t1_alpha;
            std::tie(config.a_min, config.a_max) = parse_range(t1_range);
            if (config.p_list.empty())
                config.p_list = t1_mode == "growth" ? std::vector<double>{0.25, 0.5}
                                                    : std::vector<double>{0.75, 1.0};
            run_experiment(config).write(config.out, config.format);
        } else if (t2_cmd->parsed()) {
            ExperimentConfig config = base_config(t2_flags, "theorem2");
            std::tie(config.a_min, config.a_max) = parse_range(t2_range);
            if (config.p_list.empty())
                config.p_list = {0.25, 0.5, 1.0};
            run_experiment(config).write(config.out, config.format);
        } else if (cor_cmd->parsed()) {
            ExperimentConfig config = base_config(cor_flags, "corollary");
            std::tie(config.a_min, config.a_max) = parse_range(cor_range);
            if (config.p_list.empty())
                config.p_list = {0.25, 0.5, 1.0};
            run_experiment(config).write(config.out, config.format);
        } else if (conv_cmd->parsed()) {
            ExperimentConfig config = base_config(conv_flags, "theorem1-convergence");
            config.random_count = conv_count;
            config.alpha = conv_alpha;
            if (config.p_list.empty())
                config.p_list = {0.5, 0.6, 1.0};
            if (conv_flags.resolution == 0)
                config.resolution = 10;
            run_experiment(config).write(config.out, config.format);
        } else if (bench_cmd->parsed()) {
            ExperimentConfig config = base_config(bench_flags, "transform-bench");
            config.bench_min_log2 = bench_min;
            if (bench_flags.resolution == 0)
                config.resolution = 18;
            run_experiment(config).write(config.out, config.format);
        }
    } catch (const NumericViolation& e) {
        std::cerr << "numerical invariant violated: " << e.what() << "\n";
        return kExitNumericViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
    return 0;
}
