#include "surfdyn.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "surfdyn/da_sim.hpp"
#include "surfdyn/errors.hpp"
#include "surfdyn/examples_gen.hpp"
#include "surfdyn/phase_portrait.hpp"
#include "surfdyn/spec_model.hpp"
#include "surfdyn/stability.hpp"
#include "surfdyn/topology.hpp"

struct sd_spec {
    surfdyn::DiffeoSpec value;
};

namespace {

thread_local std::string t_last_error;

sd_status fail(sd_status code, const std::string& msg) {
    t_last_error = msg;
    return code;
}

template <typename Fn>
sd_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const surfdyn::ParseError& e) {
        return fail(SD_ERR_PARSE, e.what());
    } catch (const surfdyn::InvalidSpecError& e) {
        return fail(SD_ERR_INVALID_SPEC, e.what());
    } catch (const surfdyn::IoError& e) {
        return fail(SD_ERR_IO, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(SD_ERR_ARGUMENT, e.what());
    } catch (const std::domain_error& e) {
        return fail(SD_ERR_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(SD_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(SD_ERR_INTERNAL, "unknown error");
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

sd_status emit_string(const std::string& s, char** out) {
    *out = dup_string(s);
    if (*out == nullptr) return fail(SD_ERR_INTERNAL, "out of memory");
    return SD_OK;
}

surfdyn::DAParams convert(const sd_da_params& p) {
    surfdyn::DAParams params;
    params.linear_part = {p.linear_part[0], p.linear_part[1], p.linear_part[2],
                          p.linear_part[3]};
    params.bump_radius = p.bump_radius;
    params.push_strength = p.push_strength;
    return params;
}

} // namespace

extern "C" {

const char* sd_version(void) { return "0.1.0"; }

const char* sd_last_error(void) { return t_last_error.c_str(); }

sd_status sd_spec_parse(const char* text, size_t len, sd_spec** out_spec) {
    if (text == nullptr || out_spec == nullptr)
        return fail(SD_ERR_ARGUMENT, "text and out_spec must not be NULL");
    *out_spec = nullptr;
    return guarded([&] {
        auto spec = surfdyn::parse_spec(std::string_view(text, len));
        *out_spec = new sd_spec{std::move(spec)};
        return SD_OK;
    });
}

void sd_spec_free(sd_spec* spec) { delete spec; }

sd_status sd_spec_serialize(const sd_spec* spec, char** out_json) {
    if (spec == nullptr || out_json == nullptr)
        return fail(SD_ERR_ARGUMENT, "spec and out_json must not be NULL");
    return guarded([&] { return emit_string(surfdyn::serialize_spec(spec->value), out_json); });
}

void sd_string_free(char* s) { std::free(s); }

sd_status sd_spec_validate(const sd_spec* spec, int* out_valid, char** out_report_json) {
    if (spec == nullptr || out_valid == nullptr || out_report_json == nullptr)
        return fail(SD_ERR_ARGUMENT, "spec, out_valid and out_report_json must not be NULL");
    return guarded([&] {
        const auto report = surfdyn::validate_spec(spec->value);
        *out_valid = report.valid ? 1 : 0;
        return emit_string(report.to_json(), out_report_json);
    });
}

sd_status sd_spec_decompose(const sd_spec* spec, int with_trace, char** out_json) {
    if (spec == nullptr || out_json == nullptr)
        return fail(SD_ERR_ARGUMENT, "spec and out_json must not be NULL");
    return guarded([&] {
        const auto decomposition = surfdyn::decompose(spec->value);
        return emit_string(decomposition.to_json(with_trace != 0), out_json);
    });
}

sd_status sd_spec_total_genus(const sd_spec* spec, int64_t* out_genus) {
    if (spec == nullptr || out_genus == nullptr)
        return fail(SD_ERR_ARGUMENT, "spec and out_genus must not be NULL");
    return guarded([&] {
        *out_genus = surfdyn::total_genus(spec->value);
        return SD_OK;
    });
}

sd_status sd_spec_pairing_dot(const sd_spec* spec, char** out_dot) {
    if (spec == nullptr || out_dot == nullptr)
        return fail(SD_ERR_ARGUMENT, "spec and out_dot must not be NULL");
    return guarded([&] {
        return emit_string(surfdyn::to_dot(surfdyn::build_pairing_graph(spec->value)),
                           out_dot);
    });
}

sd_status sd_spec_stability(const sd_spec* spec, char** out_json) {
    if (spec == nullptr || out_json == nullptr)
        return fail(SD_ERR_ARGUMENT, "spec and out_json must not be NULL");
    return guarded([&] {
        return emit_string(surfdyn::stability_verdict(spec->value).to_json(), out_json);
    });
}

sd_status sd_spec_prec_dot(const sd_spec* spec, char** out_dot) {
    if (spec == nullptr || out_dot == nullptr)
        return fail(SD_ERR_ARGUMENT, "spec and out_dot must not be NULL");
    return guarded([&] {
        return emit_string(surfdyn::to_dot(surfdyn::build_prec_graph(spec->value)), out_dot);
    });
}

sd_status sd_example_spec(const char* name, sd_spec** out_spec) {
    if (name == nullptr || out_spec == nullptr)
        return fail(SD_ERR_ARGUMENT, "name and out_spec must not be NULL");
    *out_spec = nullptr;
    return guarded([&]() -> sd_status {
        const std::string which = name;
        surfdyn::DiffeoSpec spec;
        if (which == "f1")
            spec = surfdyn::example_f1();
        else if (which == "f2")
            spec = surfdyn::example_f2();
        else if (which == "pretzel")
            spec = surfdyn::example_pretzel();
        else
            return fail(SD_ERR_ARGUMENT,
                        "unknown example \"" + which + "\" (expected f1, f2 or pretzel)");
        *out_spec = new sd_spec{std::move(spec)};
        return SD_OK;
    });
}

sd_status sd_generate_for_genus(int64_t genus, sd_spec** out_spec) {
    if (out_spec == nullptr) return fail(SD_ERR_ARGUMENT, "out_spec must not be NULL");
    *out_spec = nullptr;
    return guarded([&] {
        *out_spec = new sd_spec{surfdyn::generate_for_genus(genus)};
        return SD_OK;
    });
}

sd_status sd_generate_random(uint64_t seed, int32_t max_basic_sets,
                             int32_t max_bunches_per_set, int32_t max_degree,
                             sd_spec** out_spec) {
    if (out_spec == nullptr) return fail(SD_ERR_ARGUMENT, "out_spec must not be NULL");
    *out_spec = nullptr;
    return guarded([&] {
        surfdyn::GeneratorConfig cfg;
        cfg.seed = seed;
        cfg.max_basic_sets = max_basic_sets;
        cfg.max_bunches_per_set = max_bunches_per_set;
        cfg.max_degree = max_degree;
        *out_spec = new sd_spec{surfdyn::random_valid_spec(cfg)};
        return SD_OK;
    });
}

void sd_da_params_default(sd_da_params* params) {
    if (params == nullptr) return;
    const surfdyn::DAParams defaults;
    params->linear_part[0] = defaults.linear_part[0];
    params->linear_part[1] = defaults.linear_part[1];
    params->linear_part[2] = defaults.linear_part[2];
    params->linear_part[3] = defaults.linear_part[3];
    params->bump_radius = defaults.bump_radius;
    params->push_strength = defaults.push_strength;
}

sd_status sd_da_census(const sd_da_params* params, int32_t grid_n, double newton_tol,
                       char** out_json) {
    if (params == nullptr || out_json == nullptr)
        return fail(SD_ERR_ARGUMENT, "params and out_json must not be NULL");
    return guarded([&] {
        const auto census = surfdyn::find_fixed_points(convert(*params), grid_n, newton_tol);
        return emit_string(surfdyn::census_to_json(census), out_json);
    });
}

sd_status sd_da_phase_portrait(const sd_da_params* params, int32_t n_samples,
                               int32_t n_transient, uint64_t seed, int32_t grid_n,
                               double newton_tol, int32_t arc_steps, int32_t n_iterates,
                               char** out_svg) {
    if (params == nullptr || out_svg == nullptr)
        return fail(SD_ERR_ARGUMENT, "params and out_svg must not be NULL");
    return guarded([&] {
        const surfdyn::DAParams da = convert(*params);
        surfdyn::PhasePortrait portrait;
        portrait.fixed_points = surfdyn::find_fixed_points(da, grid_n, newton_tol);
        portrait.cloud = surfdyn::approximate_attractor(da, n_samples, n_transient, seed);
        for (const auto& record : portrait.fixed_points)
            if (record.kind == surfdyn::FixedPointKind::Saddle)
                portrait.segments.push_back(
                    surfdyn::unstable_segment(record, da, arc_steps, n_iterates));
        return emit_string(surfdyn::render_phase_portrait(portrait), out_svg);
    });
}

} // extern "C"
