// seqcorr: compute and verify cross-correlation spectra of period-different
// m-sequences over F_{2^m}, m = 2n, together with the supporting quadratic
// form ranks and root censuses.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "seqcorr/analysis.hpp"
#include "seqcorr/io.hpp"

namespace {

struct RunConfig {
    int m = 0;
    int n = 0;
    int l = 0;
    uint64_t d = 0;
    std::string poly_hex;
    int max_values = 4;
    std::string format; // json, csv, table; per-command default when empty
    int threads = 0;
    std::string output;
};

uint32_t parse_poly(const std::string& hex) {
    size_t pos = 0;
    unsigned long v = std::stoul(hex, &pos, 16);
    if (pos != hex.size() || v > 0xFFFFFFFFul)
        throw CLI::ValidationError("--poly", "expected a hexadecimal polynomial mask");
    return static_cast<uint32_t>(v);
}

seqcorr::Field make_field(const RunConfig& cfg) {
    if (!cfg.poly_hex.empty()) return seqcorr::build_field(cfg.m, parse_poly(cfg.poly_hex));
    return seqcorr::build_field(cfg.m);
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::filesystem::path path(cfg.output);
    if (path.is_relative())
        if (const char* dir = std::getenv("SEQCORR_OUTPUT_DIR")) path = std::filesystem::path(dir) / path;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw seqcorr::Error(seqcorr::Errc::unsupported, "cannot open output file " + path.string());
    out << text;
}

void check_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
    if (cfg.format.empty()) return;
    for (const char* f : allowed)
        if (cfg.format == f) return;
    throw CLI::ValidationError("--format", "unsupported format for this command: " + cfg.format);
}

seqcorr::DecimationParams params_for(const seqcorr::Field& field, uint64_t d) {
    auto li = seqcorr::find_l_i(d, field.n());
    if (!li)
        seqcorr::raise(seqcorr::Errc::bad_parameters,
                       "d=" + std::to_string(d) + " does not satisfy d(2^l+1) = 2^i (mod 2^n-1)");
    return seqcorr::derive_params(d, li->first, li->second, field.n());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cross-correlation spectra of period-different m-sequences"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    RunConfig cfg;
    app.add_option("--format", cfg.format, "output format: json, csv or table");
    app.add_option("--threads", cfg.threads, "worker threads (default: all cores)");
    app.add_option("-o,--output", cfg.output,
                   "output file (default stdout; relative paths resolve under $SEQCORR_OUTPUT_DIR)");

    CLI::App* c_info = app.add_subcommand("field-info", "print the field tower parameters");
    c_info->add_option("--m", cfg.m, "extension degree (even, 4..26)")->required();
    c_info->add_option("--poly", cfg.poly_hex, "primitive polynomial override, hex mask");

    CLI::App* c_enum = app.add_subcommand("enumerate", "list decimations satisfying the congruence");
    c_enum->add_option("--n", cfg.n, "half-degree (2..13)")->required();

    CLI::App* c_spec = app.add_subcommand("spectrum", "cross-correlation spectrum of one decimation");
    c_spec->add_option("--m", cfg.m, "extension degree (even, 4..26)")->required();
    c_spec->add_option("--d", cfg.d, "decimation, coprime to 2^n-1")->required();
    c_spec->add_option("--poly", cfg.poly_hex, "primitive polynomial override, hex mask");

    CLI::App* c_rank = app.add_subcommand("rank-census", "rank census of the quadratic forms rho_a");
    c_rank->add_option("--m", cfg.m, "extension degree (even, 4..26)")->required();
    c_rank->add_option("--l", cfg.l, "normalized exponent l in (0, n)")->required();
    c_rank->add_option("--poly", cfg.poly_hex, "primitive polynomial override, hex mask");

    CLI::App* c_verify = app.add_subcommand("verify", "check the spectrum against the closed form");
    c_verify->add_option("--m", cfg.m, "extension degree (even, 4..26)")->required();
    c_verify->add_option("--d", cfg.d, "decimation satisfying the congruence")->required();
    c_verify->add_option("--poly", cfg.poly_hex, "primitive polynomial override, hex mask");

    CLI::App* c_search = app.add_subcommand("search",
                                            "full decimation search: coset leaders with few-valued spectra");
    c_search->add_option("--m", cfg.m, "extension degree (even, 4..20)")->required();
    c_search->add_option("--max-values", cfg.max_values, "report spectra with at most this many values");
    c_search->add_option("--poly", cfg.poly_hex, "primitive polynomial override, hex mask");

    try {
        app.parse(argc, argv);

        if (c_info->parsed()) {
            check_format(cfg, {"table", "json"});
            seqcorr::Field field = make_field(cfg);
            emit(cfg, cfg.format == "json" ? seqcorr::field_info_json(field)
                                           : seqcorr::field_info_table(field));
            return 0;
        }
        if (c_enum->parsed()) {
            check_format(cfg, {"csv"});
            emit(cfg, seqcorr::enumerate_csv(seqcorr::enumerate_decimations(cfg.n)));
            return 0;
        }
        if (c_spec->parsed()) {
            check_format(cfg, {"json"});
            seqcorr::Field field = make_field(cfg);
            emit(cfg, seqcorr::spectrum_json(seqcorr::spectrum(field, cfg.d, cfg.threads), field.m()));
            return 0;
        }
        if (c_rank->parsed()) {
            check_format(cfg, {"json"});
            seqcorr::Field field = make_field(cfg);
            uint64_t d = seqcorr::d_for_l(field.n(), cfg.l);
            seqcorr::DecimationParams params = seqcorr::derive_params(d, cfg.l, 0, field.n());
            emit(cfg, seqcorr::rank_census_json(seqcorr::rank_census(field, params, cfg.threads)));
            return 0;
        }
        if (c_verify->parsed()) {
            check_format(cfg, {"json"});
            seqcorr::Field field = make_field(cfg);
            seqcorr::VerifyReport rep =
                seqcorr::verify_theorem1(field, params_for(field, cfg.d), cfg.threads);
            emit(cfg, seqcorr::verify_report_json(rep));
            return rep.pass ? 0 : 1;
        }
        if (c_search->parsed()) {
            check_format(cfg, {"csv"});
            seqcorr::Field field = make_field(cfg);
            emit(cfg, seqcorr::search_csv(seqcorr::search_decimations(field, cfg.max_values, cfg.threads)));
            return 0;
        }
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const seqcorr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
