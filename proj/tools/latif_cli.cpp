// latif command-line front end. Talks to the core exclusively through the
// C API in latif/latif.h.
#include <latif/latif.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using nlohmann::json;

// Owning wrapper so error paths cannot leak handles.
class ImageHandle {
public:
    ImageHandle() = default;
    ~ImageHandle() { latif_image_destroy(ptr_); }
    ImageHandle(const ImageHandle&) = delete;
    ImageHandle& operator=(const ImageHandle&) = delete;

    latif_image** slot() { return &ptr_; }
    latif_image* get() const { return ptr_; }

private:
    latif_image* ptr_ = nullptr;
};

int report_failure(latif_status st) {
    std::cerr << "error: " << latif_last_error() << "\n";
    return static_cast<int>(st);
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

void emit_json(const std::string& command, const json& params, const json& metrics,
               double wall_time_ms) {
    json record;
    record["command"] = command;
    record["params"] = params;
    record["metrics"] = metrics;
    record["wall_time_ms"] = wall_time_ms;
    std::cout << record.dump() << "\n";
}

json psnr_to_json(double db) {
    if (std::isinf(db)) return json("inf");
    return json(db);
}

const std::map<std::string, latif_ad_variant> kVariantNames = {
    {"pm_exp", LATIF_AD_PM_EXP},   {"pm_frac", LATIF_AD_PM_FRAC}, {"flat", LATIF_AD_FLAT},
    {"tlat", LATIF_AD_TLAT},       {"plat", LATIF_AD_PLAT},       {"flat_i", LATIF_AD_FLAT_I},
    {"tlat_i", LATIF_AD_TLAT_I},   {"plat_i", LATIF_AD_PLAT_I},
};

const std::map<std::string, latif_rtv_mode> kRtvModeNames = {
    {"rtv", LATIF_RTV_PLAIN}, {"lat_rtv", LATIF_RTV_LAT}, {"lat_rtvd", LATIF_RTV_LAT_D}};

const std::map<std::string, latif_rtv_fidelity> kFidelityNames = {
    {"previous_iterate", LATIF_RTV_FIDELITY_PREVIOUS_ITERATE},
    {"original_image", LATIF_RTV_FIDELITY_ORIGINAL_IMAGE}};

const std::map<std::string, latif_rtv_solver> kSolverNames = {{"pcg", LATIF_RTV_SOLVER_PCG},
                                                              {"dense", LATIF_RTV_SOLVER_DENSE}};

const std::map<std::string, latif_synth_kind> kSynthNames = {{"step", LATIF_SYNTH_STEP},
                                                             {"blocks", LATIF_SYNTH_BLOCKS},
                                                             {"clipart", LATIF_SYNTH_CLIPART},
                                                             {"ramp", LATIF_SYNTH_RAMP}};

template <typename T>
std::string name_of(const std::map<std::string, T>& names, T value) {
    for (const auto& [k, v] : names)
        if (v == value) return k;
    return "?";
}

struct AdOptions {
    std::string variant = "plat";
    double lambda;
    double rho_pm = 10.0;  // pm_* fallback; the paper-style regimes use rho1/rho2-sq
    double rho1;
    double rho2_sq = 300.0;
    int iterations;
    double clip_high;
    int interval;
    int neighbors;
    std::string input, output;
    bool rho_pm_set = false, rho1_set = false, rho2_set = false;
};

int run_filter_ad(const AdOptions& opt, bool as_json) {
    latif_ad_config cfg;
    latif_ad_config_defaults(&cfg);
    cfg.variant = kVariantNames.at(opt.variant);
    cfg.lambda = opt.lambda;
    cfg.iterations = opt.iterations;
    cfg.clip_high = opt.clip_high;
    cfg.interval = opt.interval;
    cfg.neighbors = opt.neighbors;

    const bool pm = cfg.variant == LATIF_AD_PM_EXP || cfg.variant == LATIF_AD_PM_FRAC;
    const bool squared = cfg.variant == LATIF_AD_FLAT_I || cfg.variant == LATIF_AD_TLAT_I ||
                         cfg.variant == LATIF_AD_PLAT_I;
    if (pm) {
        if (opt.rho1_set || opt.rho2_set) {
            std::cerr << "error: pm variants take --rho, not --rho1/--rho2-sq\n";
            return 1;
        }
        cfg.rho = opt.rho_pm;
    } else if (squared) {
        if (opt.rho_pm_set || opt.rho1_set) {
            std::cerr << "error: " << opt.variant << " takes --rho2-sq, not --rho/--rho1\n";
            return 1;
        }
        cfg.rho = opt.rho2_sq;
    } else {
        if (opt.rho_pm_set || opt.rho2_set) {
            std::cerr << "error: " << opt.variant << " takes --rho1, not --rho/--rho2-sq\n";
            return 1;
        }
        cfg.rho = opt.rho1;
    }

    ImageHandle in, out;
    latif_status st = latif_image_read_pgm(opt.input.c_str(), in.slot());
    if (st != LATIF_OK) return report_failure(st);
    const auto start = std::chrono::steady_clock::now();
    st = latif_filter_ad(in.get(), &cfg, out.slot());
    if (st != LATIF_OK) return report_failure(st);
    const double ms = elapsed_ms(start);
    st = latif_image_write_pgm(out.get(), opt.output.c_str());
    if (st != LATIF_OK) return report_failure(st);

    if (as_json) {
        json params = {{"variant", opt.variant},   {"lambda", cfg.lambda},
                       {"rho", cfg.rho},           {"iters", cfg.iterations},
                       {"h", cfg.clip_high},       {"interval", cfg.interval},
                       {"neighbors", cfg.neighbors}};
        emit_json("filter-ad", params, json::object(), ms);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"latif: local activity-tuned image filtering"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit a machine-readable record to stdout");

    latif_ad_config ad_defaults;
    latif_ad_config_defaults(&ad_defaults);
    latif_tv_config tv_defaults;
    latif_tv_config_defaults(&tv_defaults);
    latif_rtv_config rtv_defaults;
    latif_rtv_config_defaults(&rtv_defaults);
    latif_noise_spec noise_defaults;
    latif_noise_spec_defaults(&noise_defaults);

    // filter-ad
    AdOptions ad;
    ad.lambda = ad_defaults.lambda;
    ad.rho1 = ad_defaults.rho;
    ad.iterations = ad_defaults.iterations;
    ad.clip_high = ad_defaults.clip_high;
    ad.interval = ad_defaults.interval;
    ad.neighbors = ad_defaults.neighbors;
    CLI::App* cmd_ad = app.add_subcommand("filter-ad", "anisotropic diffusion filters");
    cmd_ad->add_option("--variant", ad.variant, "pm_exp|pm_frac|flat|tlat|plat|flat_i|tlat_i|plat_i")
        ->check(CLI::IsMember({"pm_exp", "pm_frac", "flat", "tlat", "plat", "flat_i", "tlat_i",
                               "plat_i"}))
        ->capture_default_str();
    cmd_ad->add_option("--lambda", ad.lambda, "step weight")->capture_default_str();
    auto* o_rho = cmd_ad->add_option("--rho", ad.rho_pm, "edge-stop scale for pm variants")
                      ->capture_default_str();
    auto* o_rho1 = cmd_ad->add_option("--rho1", ad.rho1, "edge-stop scale for flat/tlat/plat")
                       ->capture_default_str();
    auto* o_rho2 = cmd_ad->add_option("--rho2-sq", ad.rho2_sq, "squared scale for the _i variants")
                       ->capture_default_str();
    cmd_ad->add_option("--iters", ad.iterations, "diffusion iterations")->capture_default_str();
    cmd_ad->add_option("--h", ad.clip_high, "activity clip bound")->capture_default_str();
    cmd_ad->add_option("--interval", ad.interval, "activity update interval (plat family)")
        ->capture_default_str();
    cmd_ad->add_option("--neighbors", ad.neighbors, "4 or 8")
        ->check(CLI::IsMember({4, 8}))
        ->capture_default_str();
    cmd_ad->add_option("input", ad.input, "input PGM")->required();
    cmd_ad->add_option("output", ad.output, "output PGM")->required();

    // filter-tv
    latif_tv_config tv = tv_defaults;
    std::string tv_input, tv_output;
    CLI::App* cmd_tv = app.add_subcommand("filter-tv", "total-variation baseline");
    cmd_tv->add_option("--lambda", tv.lambda, "fidelity weight")->capture_default_str();
    cmd_tv->add_option("--dt", tv.dt, "descent step")->capture_default_str();
    cmd_tv->add_option("--eps", tv.eps, "gradient regularizer")->capture_default_str();
    cmd_tv->add_option("--iters", tv.iterations, "descent iterations")->capture_default_str();
    cmd_tv->add_option("input", tv_input, "input PGM")->required();
    cmd_tv->add_option("output", tv_output, "output PGM")->required();

    // filter-rtv
    latif_rtv_config rtv = rtv_defaults;
    std::string rtv_mode = "lat_rtv", rtv_fidelity = "previous_iterate", rtv_solver = "pcg";
    std::string rtv_input, rtv_output;
    CLI::App* cmd_rtv = app.add_subcommand("filter-rtv", "relative-total-variation filters");
    cmd_rtv->add_option("--mode", rtv_mode, "rtv|lat_rtv|lat_rtvd")
        ->check(CLI::IsMember({"rtv", "lat_rtv", "lat_rtvd"}))
        ->capture_default_str();
    cmd_rtv->add_option("--lambda", rtv.lambda, "smoothing weight")->capture_default_str();
    cmd_rtv->add_option("--sigma", rtv.sigma, "Gaussian window scale")->capture_default_str();
    cmd_rtv->add_option("--eps", rtv.eps, "stabilizer")->capture_default_str();
    cmd_rtv->add_option("--iters", rtv.iterations, "outer iterations")->capture_default_str();
    cmd_rtv->add_option("--fidelity", rtv_fidelity, "previous_iterate|original_image")
        ->check(CLI::IsMember({"previous_iterate", "original_image"}))
        ->capture_default_str();
    cmd_rtv->add_option("--h", rtv.clip_high, "activity clip bound")->capture_default_str();
    cmd_rtv->add_option("--solver", rtv_solver, "pcg|dense")
        ->check(CLI::IsMember({"pcg", "dense"}))
        ->capture_default_str();
    cmd_rtv->add_option("input", rtv_input, "input PGM")->required();
    cmd_rtv->add_option("output", rtv_output, "output PGM")->required();

    // noise
    latif_noise_spec noise = noise_defaults;
    bool no_clip = false;
    std::string noise_input, noise_output;
    CLI::App* cmd_noise = app.add_subcommand("noise", "add seeded Gaussian noise");
    cmd_noise->add_option("--sigma", noise.sigma, "noise standard deviation")
        ->capture_default_str();
    cmd_noise->add_option("--seed", noise.seed, "generator seed")->capture_default_str();
    cmd_noise->add_flag("--no-clip", no_clip, "keep values outside [0,255]");
    cmd_noise->add_option("input", noise_input, "input PGM")->required();
    cmd_noise->add_option("output", noise_output, "output PGM")->required();

    // psnr
    std::string psnr_a, psnr_b;
    CLI::App* cmd_psnr = app.add_subcommand("psnr", "peak signal-to-noise ratio in dB");
    cmd_psnr->add_option("a", psnr_a, "first PGM")->required();
    cmd_psnr->add_option("b", psnr_b, "second PGM")->required();

    // synth
    std::string synth_kind = "step";
    int synth_h = 128, synth_w = 128;
    uint64_t synth_seed = 0;
    std::string synth_output;
    CLI::App* cmd_synth = app.add_subcommand("synth", "generate a test image");
    cmd_synth->add_option("--kind", synth_kind, "step|blocks|clipart|ramp")
        ->check(CLI::IsMember({"step", "blocks", "clipart", "ramp"}))
        ->capture_default_str();
    cmd_synth->add_option("--height", synth_h, "rows")->capture_default_str();
    cmd_synth->add_option("--width", synth_w, "columns")->capture_default_str();
    cmd_synth->add_option("--seed", synth_seed, "layout seed")->capture_default_str();
    cmd_synth->add_option("output", synth_output, "output PGM")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (cmd_ad->parsed()) {
        ad.rho_pm_set = o_rho->count() > 0;
        ad.rho1_set = o_rho1->count() > 0;
        ad.rho2_set = o_rho2->count() > 0;
        return run_filter_ad(ad, as_json);
    }

    if (cmd_tv->parsed()) {
        ImageHandle in, out;
        latif_status st = latif_image_read_pgm(tv_input.c_str(), in.slot());
        if (st != LATIF_OK) return report_failure(st);
        const auto start = std::chrono::steady_clock::now();
        st = latif_filter_tv(in.get(), &tv, out.slot());
        if (st != LATIF_OK) return report_failure(st);
        const double ms = elapsed_ms(start);
        st = latif_image_write_pgm(out.get(), tv_output.c_str());
        if (st != LATIF_OK) return report_failure(st);
        if (as_json) {
            json params = {{"lambda", tv.lambda},
                           {"dt", tv.dt},
                           {"eps", tv.eps},
                           {"iters", tv.iterations}};
            emit_json("filter-tv", params, json::object(), ms);
        }
        return 0;
    }

    if (cmd_rtv->parsed()) {
        rtv.mode = kRtvModeNames.at(rtv_mode);
        rtv.fidelity = kFidelityNames.at(rtv_fidelity);
        rtv.solver = kSolverNames.at(rtv_solver);
        ImageHandle in, out;
        latif_status st = latif_image_read_pgm(rtv_input.c_str(), in.slot());
        if (st != LATIF_OK) return report_failure(st);
        const auto start = std::chrono::steady_clock::now();
        st = latif_filter_rtv(in.get(), &rtv, out.slot());
        if (st != LATIF_OK) return report_failure(st);
        const double ms = elapsed_ms(start);
        st = latif_image_write_pgm(out.get(), rtv_output.c_str());
        if (st != LATIF_OK) return report_failure(st);
        if (as_json) {
            json params = {{"mode", rtv_mode},       {"lambda", rtv.lambda},
                           {"sigma", rtv.sigma},     {"eps", rtv.eps},
                           {"iters", rtv.iterations}, {"fidelity", rtv_fidelity},
                           {"h", rtv.clip_high},     {"solver", rtv_solver}};
            emit_json("filter-rtv", params, json::object(), ms);
        }
        return 0;
    }

    if (cmd_noise->parsed()) {
        noise.clip = no_clip ? 0 : 1;
        ImageHandle in, out;
        latif_status st = latif_image_read_pgm(noise_input.c_str(), in.slot());
        if (st != LATIF_OK) return report_failure(st);
        const auto start = std::chrono::steady_clock::now();
        st = latif_add_gaussian_noise(in.get(), &noise, out.slot());
        if (st != LATIF_OK) return report_failure(st);
        const double ms = elapsed_ms(start);
        st = latif_image_write_pgm(out.get(), noise_output.c_str());
        if (st != LATIF_OK) return report_failure(st);
        if (as_json) {
            json params = {{"sigma", noise.sigma},
                           {"seed", noise.seed},
                           {"clip", noise.clip != 0}};
            emit_json("noise", params, json::object(), ms);
        }
        return 0;
    }

    if (cmd_psnr->parsed()) {
        ImageHandle a, b;
        latif_status st = latif_image_read_pgm(psnr_a.c_str(), a.slot());
        if (st != LATIF_OK) return report_failure(st);
        st = latif_image_read_pgm(psnr_b.c_str(), b.slot());
        if (st != LATIF_OK) return report_failure(st);
        const auto start = std::chrono::steady_clock::now();
        double db = 0.0;
        st = latif_psnr(a.get(), b.get(), &db);
        if (st != LATIF_OK) return report_failure(st);
        const double ms = elapsed_ms(start);
        if (as_json) {
            emit_json("psnr", json::object(), json{{"psnr_db", psnr_to_json(db)}}, ms);
        } else if (std::isinf(db)) {
            std::printf("inf\n");
        } else {
            std::printf("%.4f\n", db);
        }
        return 0;
    }

    if (cmd_synth->parsed()) {
        ImageHandle out;
        const auto start = std::chrono::steady_clock::now();
        latif_status st =
            latif_synth(kSynthNames.at(synth_kind), synth_h, synth_w, synth_seed, out.slot());
        if (st != LATIF_OK) return report_failure(st);
        const double ms = elapsed_ms(start);
        st = latif_image_write_pgm(out.get(), synth_output.c_str());
        if (st != LATIF_OK) return report_failure(st);
        if (as_json) {
            json params = {{"kind", synth_kind},
                           {"height", synth_h},
                           {"width", synth_w},
                           {"seed", synth_seed}};
            emit_json("synth", params, json::object(), ms);
        }
        return 0;
    }

    return 1;
}
