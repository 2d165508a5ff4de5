// Command-line front end. Links only the C API of libsurfdyn; everything it
// prints on stdout is machine-readable (JSON), diagnostics go to stderr.
//
// Exit codes: 0 ok, 1 invalid spec, 2 parse/IO error, 3 argument error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "surfdyn.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidSpec = 1;
constexpr int kExitParseIo = 2;
constexpr int kExitArgument = 3;

int exit_code_for(sd_status status) {
    switch (status) {
        case SD_OK: return kExitOk;
        case SD_ERR_INVALID_SPEC: return kExitInvalidSpec;
        case SD_ERR_PARSE: return kExitParseIo;
        case SD_ERR_IO: return kExitParseIo;
        case SD_ERR_ARGUMENT: return kExitArgument;
        default: return kExitParseIo;
    }
}

int report_failure(sd_status status) {
    std::cerr << "error: " << sd_last_error() << "\n";
    return exit_code_for(status);
}

class SpecHandle {
public:
    ~SpecHandle() { sd_spec_free(spec_); }
    sd_spec** out() { return &spec_; }
    sd_spec* get() const { return spec_; }

private:
    sd_spec* spec_ = nullptr;
};

class StringHandle {
public:
    ~StringHandle() { sd_string_free(str_); }
    char** out() { return &str_; }
    const char* get() const { return str_; }

private:
    char* str_ = nullptr;
};

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    out = buffer.str();
    return in.good() || in.eof();
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << content;
    out.flush();
    return static_cast<bool>(out);
}

int load_spec(const std::string& path, SpecHandle& spec) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "error: cannot read \"" << path << "\"\n";
        return kExitParseIo;
    }
    const sd_status status = sd_spec_parse(text.c_str(), text.size(), spec.out());
    if (status != SD_OK) return report_failure(status);
    return kExitOk;
}

int cmd_validate(const std::string& path) {
    SpecHandle spec;
    if (int rc = load_spec(path, spec); rc != kExitOk) return rc;
    int valid = 0;
    StringHandle report;
    const sd_status status = sd_spec_validate(spec.get(), &valid, report.out());
    if (status != SD_OK) return report_failure(status);
    std::cout << report.get();
    return valid != 0 ? kExitOk : kExitInvalidSpec;
}

int cmd_decompose(const std::string& path, bool with_trace,
                  const std::optional<std::string>& dot_path) {
    SpecHandle spec;
    if (int rc = load_spec(path, spec); rc != kExitOk) return rc;
    StringHandle json;
    const sd_status status = sd_spec_decompose(spec.get(), with_trace ? 1 : 0, json.out());
    if (status != SD_OK) return report_failure(status);
    if (dot_path) {
        StringHandle dot;
        const sd_status dot_status = sd_spec_pairing_dot(spec.get(), dot.out());
        if (dot_status != SD_OK) return report_failure(dot_status);
        if (!write_file(*dot_path, dot.get())) {
            std::cerr << "error: cannot write \"" << *dot_path << "\"\n";
            return kExitParseIo;
        }
    }
    std::cout << json.get();
    return kExitOk;
}

int cmd_stability(const std::string& path, const std::optional<std::string>& dot_path) {
    SpecHandle spec;
    if (int rc = load_spec(path, spec); rc != kExitOk) return rc;
    StringHandle json;
    const sd_status status = sd_spec_stability(spec.get(), json.out());
    if (status != SD_OK) return report_failure(status);
    if (dot_path) {
        StringHandle dot;
        const sd_status dot_status = sd_spec_prec_dot(spec.get(), dot.out());
        if (dot_status != SD_OK) return report_failure(dot_status);
        if (!write_file(*dot_path, dot.get())) {
            std::cerr << "error: cannot write \"" << *dot_path << "\"\n";
            return kExitParseIo;
        }
    }
    std::cout << json.get();
    return kExitOk;
}

struct GenerateOptions {
    std::optional<std::int64_t> genus;
    std::optional<std::string> example;
    bool random = false;
    std::uint64_t seed = 0;
    int max_sets = 6;
    int max_bunches = 4;
    int max_degree = 6;
};

int cmd_generate(const GenerateOptions& opt) {
    const int modes = (opt.genus ? 1 : 0) + (opt.example ? 1 : 0) + (opt.random ? 1 : 0);
    if (modes != 1) {
        std::cerr << "error: pass exactly one of --genus, --example, --random\n";
        return kExitArgument;
    }
    SpecHandle spec;
    sd_status status = SD_OK;
    if (opt.genus)
        status = sd_generate_for_genus(*opt.genus, spec.out());
    else if (opt.example)
        status = sd_example_spec(opt.example->c_str(), spec.out());
    else
        status = sd_generate_random(opt.seed, opt.max_sets, opt.max_bunches, opt.max_degree,
                                    spec.out());
    if (status != SD_OK) return report_failure(status);
    StringHandle json;
    status = sd_spec_serialize(spec.get(), json.out());
    if (status != SD_OK) return report_failure(status);
    std::cout << json.get();
    return kExitOk;
}

struct SimulateOptions {
    sd_da_params params{};
    int grid = 64;
    int samples = 10000;
    int transient = 500;
    std::uint64_t seed = 0;
    std::optional<std::string> out_census;
    std::optional<std::string> out_svg;
};

int cmd_simulate(const SimulateOptions& opt) {
    constexpr double kNewtonTol = 1e-12;
    StringHandle census;
    sd_status status = sd_da_census(&opt.params, opt.grid, kNewtonTol, census.out());
    if (status != SD_OK) return report_failure(status);
    if (opt.out_census) {
        if (!write_file(*opt.out_census, census.get())) {
            std::cerr << "error: cannot write \"" << *opt.out_census << "\"\n";
            return kExitParseIo;
        }
    } else {
        std::cout << census.get();
    }
    if (opt.out_svg) {
        constexpr int kArcSteps = 256;
        constexpr int kIterates = 14;
        StringHandle svg;
        status = sd_da_phase_portrait(&opt.params, opt.samples, opt.transient, opt.seed,
                                      opt.grid, kNewtonTol, kArcSteps, kIterates, svg.out());
        if (status != SD_OK) return report_failure(status);
        if (!write_file(*opt.out_svg, svg.get())) {
            std::cerr << "error: cannot write \"" << *opt.out_svg << "\"\n";
            return kExitParseIo;
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"surface diffeomorphism decomposition and stability toolkit"};
    app.require_subcommand(1);

    std::string spec_path;
    bool with_trace = false;
    std::string dot_path;

    auto* validate = app.add_subcommand("validate", "check a spec file against all rules");
    validate->add_option("path", spec_path, "spec JSON file")->required();

    auto* decompose =
        app.add_subcommand("decompose", "connected-sum decomposition of the ambient surface");
    decompose->add_option("path", spec_path, "spec JSON file")->required();
    decompose->add_flag("--trace", with_trace, "include the surgery trace");
    decompose->add_option("--dot", dot_path, "write the pairing graph as DOT to this file");

    auto* stability = app.add_subcommand("stability", "Omega-/structural-stability verdict");
    stability->add_option("path", spec_path, "spec JSON file")->required();
    stability->add_option("--dot", dot_path, "write the prec graph as DOT to this file");

    GenerateOptions gen;
    std::int64_t genus_value = 0;
    std::string example_name;
    auto* generate = app.add_subcommand("generate", "emit a spec in canonical JSON form");
    auto* genus_opt = generate->add_option("--genus", genus_value, "target total genus (>= 2)");
    auto* example_opt =
        generate->add_option("--example", example_name, "named example: f1, f2 or pretzel");
    generate->add_flag("--random", gen.random, "random valid spec");
    generate->add_option("--seed", gen.seed, "seed for --random");
    generate->add_option("--max-sets", gen.max_sets, "bound on basic sets for --random");
    generate->add_option("--max-bunches", gen.max_bunches,
                         "bound on bunches per basic set for --random");
    generate->add_option("--max-degree", gen.max_degree,
                         "sampling bound on bunch degrees for --random");

    SimulateOptions sim;
    sd_da_params_default(&sim.params);
    auto* simulate =
        app.add_subcommand("simulate", "perturbed toral automorphism: census and portrait");
    simulate->add_option("--k", sim.params.push_strength, "push strength (>= 0)");
    simulate->add_option("--r0", sim.params.bump_radius, "bump radius in (0, 0.5)");
    simulate->add_option("--grid", sim.grid, "Newton seed grid size (>= 64)");
    simulate->add_option("--samples", sim.samples, "attractor cloud size");
    simulate->add_option("--transient", sim.transient, "transient iterations (>= 100)");
    simulate->add_option("--seed", sim.seed, "cloud sampling seed");
    std::string census_path, svg_path;
    auto* census_opt =
        simulate->add_option("--out-census", census_path, "write census JSON here");
    auto* svg_opt = simulate->add_option("--out-svg", svg_path, "write phase portrait here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitArgument;
    }

    if (validate->parsed()) return cmd_validate(spec_path);
    if (decompose->parsed())
        return cmd_decompose(spec_path, with_trace,
                             dot_path.empty() ? std::nullopt
                                              : std::optional<std::string>(dot_path));
    if (stability->parsed())
        return cmd_stability(spec_path, dot_path.empty()
                                            ? std::nullopt
                                            : std::optional<std::string>(dot_path));
    if (generate->parsed()) {
        if (genus_opt->count() > 0) gen.genus = genus_value;
        if (example_opt->count() > 0) gen.example = example_name;
        return cmd_generate(gen);
    }
    if (simulate->parsed()) {
        if (census_opt->count() > 0) sim.out_census = census_path;
        if (svg_opt->count() > 0) sim.out_svg = svg_path;
        return cmd_simulate(sim);
    }
    return kExitArgument;
}
