#include "CLI11.hpp"

#include "wreathfock/cache.hpp"
#include "wreathfock/characters.hpp"
#include "wreathfock/chern.hpp"
#include "wreathfock/correlators.hpp"
#include "wreathfock/fock.hpp"
#include "wreathfock/json_io.hpp"
#include "wreathfock/verify.hpp"
#include "wreathfock/wreath.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace wfk = wreathfock;
using wfk::Json;

namespace {

// Inline JSON, or @path to read it from a file.
Json parse_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw std::invalid_argument("cannot open " + arg.substr(1));
        return Json::parse(in);
    }
    return Json::parse(arg);
}

wfk::Charge parse_charge(unsigned r, const std::string& arg) {
    if (arg.empty()) return wfk::Charge(r);
    std::vector<int> coords = parse_arg(arg).get<std::vector<int>>();
    return wfk::Charge(r, std::move(coords));
}

wfk::H1Vector parse_alpha(unsigned r, const std::string& arg) {
    if (arg == "rt") return wfk::H1Vector::rt(r);
    if (arg == "t") return wfk::H1Vector::t(r);
    if (arg.rfind("diamond", 0) == 0)
        return wfk::H1Vector::diamond(r, static_cast<unsigned>(std::stoul(arg.substr(7))));
    if (arg.rfind("sigma", 0) == 0)
        return wfk::H1Vector::sigma_class(r, static_cast<unsigned>(std::stoul(arg.substr(5))));
    std::vector<wfk::Rational> coords;
    for (const auto& c : parse_arg(arg)) coords.push_back(wfk::rational_from_json(c));
    return wfk::H1Vector(r, std::move(coords));
}

int run_chartable(unsigned r, int n, const std::string& format, const std::string& cache_dir) {
    const wfk::CharacterTable& table =
        wfk::wreath_char_table_cached(r, n, wfk::resolve_cache_dir(cache_dir));
    if (format == "csv") {
        std::cout << "lambda";
        for (const auto& mp : table.classes()) std::cout << "," << mp.to_string();
        std::cout << "\n";
        for (std::size_t row = 0; row < table.classes().size(); ++row) {
            std::cout << table.classes()[row].to_string();
            for (std::size_t col = 0; col < table.classes().size(); ++col)
                std::cout << "," << table.value(row, col).to_string();
            std::cout << "\n";
        }
    } else {
        Json meta{{"r", r}, {"n", n}, {"classes", Json::array()}};
        for (const auto& mp : table.classes()) meta["classes"].push_back(wfk::to_json(mp));
        std::cout << meta.dump() << "\n";
        for (std::size_t row = 0; row < table.classes().size(); ++row) {
            Json line{{"lambda", wfk::to_json(table.classes()[row])}, {"values", Json::array()}};
            for (std::size_t col = 0; col < table.classes().size(); ++col)
                line["values"].push_back(wfk::to_json(table.value(row, col)));
            std::cout << line.dump() << "\n";
        }
    }
    return 0;
}

int run_verify(const std::string& suite, const wfk::VerifyOptions& opts) {
    bool all_pass = true;
    for (const auto& result : wfk::run_verify_suite(suite, opts)) {
        std::cout << (result.pass ? "[PASS] " : "[FAIL] ") << result.name << ": " << result.detail
                  << "\n";
        all_pass = all_pass && result.pass;
    }
    return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Fock-space and wreath-product class-algebra computations"};
    app.require_subcommand(1);

    unsigned r = 1;
    int n = 0;
    int eigen_order = 10;   // univariate default
    int npoint_order = 6;   // multivariate default
    int degree = 6;
    int toda_degree = 4;
    std::string format = "json";
    std::string cache_dir;
    std::string charge_arg;
    unsigned seed = 1;

    auto add_common = [&](CLI::App* cmd, bool with_n) {
        cmd->add_option("--r", r, "cyclic group order")->required();
        if (with_n) cmd->add_option("--n", n, "number of points / group rank");
        cmd->add_option("--format", format, "output format (json|csv)")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--cache-dir", cache_dir, "cache directory (WREATHFOCK_CACHE overrides)");
        cmd->add_option("--seed", seed, "seed for sampled property suites");
        return cmd;
    };

    auto* chartable = add_common(app.add_subcommand("chartable", "character table of Gamma_n"), true);

    auto* convolve = add_common(app.add_subcommand("convolve", "convolution in the class algebra"), true);
    std::string f_arg, g_arg, method = "fast";
    convolve->add_option("--f", f_arg, "first class function (JSON or @file)")->required();
    convolve->add_option("--g", g_arg, "second class function (JSON or @file)")->required();
    convolve->add_option("--method", method, "fast|bruteforce")
        ->check(CLI::IsMember({"fast", "bruteforce"}));

    auto* structure =
        add_common(app.add_subcommand("structure-constants", "top-degree graded structure constants"), true);

    auto* heisenberg = add_common(app.add_subcommand("heisenberg", "apply a Heisenberg operator"), false);
    int heis_m = -1;
    std::string alpha_arg = "diamond0", vec_arg;
    heisenberg->add_option("--m", heis_m, "mode index (negative creates, 0 pairs the charge)")
        ->required();
    heisenberg->add_option("--alpha", alpha_arg, "direction: diamond<i>, sigma<i>, rt, t, or coords");
    heisenberg->add_option("--v", vec_arg, "Fock vector (JSON or @file)")->required();

    auto* eigen = add_common(app.add_subcommand("eigen", "diagonal operator eigenvalue series"), false);
    std::string op_name = "eps", lambda_arg, mu_arg, ks_arg;
    unsigned color_k = 0;
    eigen->add_option("--operator", op_name, "eps|hk|gk|gk-tilde|jm")
        ->check(CLI::IsMember({"eps", "hk", "gk", "gk-tilde", "jm"}));
    eigen->add_option("--k", color_k, "color / operator index");
    eigen->add_option("--charge", charge_arg, "sector charge as a JSON array");
    eigen->add_option("--lambda", lambda_arg, "multipartition (JSON)")->required();
    eigen->add_option("--order", eigen_order, "series truncation order")->capture_default_str();

    auto* npoint = add_common(app.add_subcommand("npoint", "N-point function"), false);
    npoint->add_option("--lambda", lambda_arg, "multipartition (JSON)")->required();
    npoint->add_option("--mu", mu_arg, "multipartition (JSON)")->required();
    npoint->add_option("--ks", ks_arg, "insertion colors (JSON array)")->required();
    npoint->add_option("--order", npoint_order, "series truncation order")->capture_default_str();
    std::string npoint_method = "direct";
    npoint->add_option("--method", npoint_method, "direct|reduced")
        ->check(CLI::IsMember({"direct", "reduced"}));

    auto* tau = add_common(app.add_subcommand("tau", "truncated tau function"), false);
    int t_max = 4;
    std::string xmodes_arg = "[]";
    tau->add_option("--charge", charge_arg, "sector charge as a JSON array");
    tau->add_option("--degree", degree, "total-degree truncation")->capture_default_str();
    tau->add_option("--tmax", t_max, "largest t/s mode kept")->capture_default_str();
    tau->add_option("--xmodes", xmodes_arg, "x modes kept as variables (JSON array)");

    auto* toda = add_common(app.add_subcommand("toda", "lowest Toda bilinear residual"), false);
    int charge_lo = -2, charge_hi = 2;
    toda->add_option("--color", color_k, "color of the single-color family");
    toda->add_option("--charge-lo", charge_lo, "lowest charge")->capture_default_str();
    toda->add_option("--charge-hi", charge_hi, "highest charge")->capture_default_str();
    toda->add_option("--degree", toda_degree, "residual truncation degree")->capture_default_str();
    toda->add_option("--tmax", t_max, "largest t/s mode kept")->capture_default_str();
    toda->add_option("--xmodes", xmodes_arg, "x modes kept as variables (JSON array)");

    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::string suite = "all";
    std::optional<unsigned> verify_r;
    std::optional<int> verify_n;
    verify->add_option("--suite", suite, "suite name or 'all'")->capture_default_str();
    verify->add_option("--r", verify_r, "restrict to one r (with --n)");
    verify->add_option("--n", verify_n, "restrict to one n (with --r)");
    verify->add_option("--seed", seed, "seed for sampled property suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (chartable->parsed()) return run_chartable(r, n, format, cache_dir);

        if (convolve->parsed()) {
            wfk::ClassFunction f = wfk::class_function_from_json(parse_arg(f_arg));
            wfk::ClassFunction g = wfk::class_function_from_json(parse_arg(g_arg));
            wfk::ClassFunction result;
            if (method == "bruteforce") {
                wfk::WreathGroup G(f.r, f.n);
                result = wfk::convolve_bruteforce(G, f, g);
            } else {
                result = wfk::convolve_fast(f, g);
            }
            std::cout << wfk::to_json(result).dump() << "\n";
            return 0;
        }

        if (structure->parsed()) {
            auto gc = wfk::graded_constants(r, n);
            for (const auto& row : wfk::to_json(gc).at("top")) std::cout << row.dump() << "\n";
            return 0;
        }

        if (heisenberg->parsed()) {
            wfk::FockVector<wfk::Rational> v = wfk::fock_vector_from_json(parse_arg(vec_arg));
            if (v.r() != r) throw std::invalid_argument("--v rank does not match --r");
            wfk::H1Vector alpha = parse_alpha(r, alpha_arg);
            auto out = (heis_m == 0) ? wfk::heis_zero(alpha, v) : wfk::heis_apply(heis_m, alpha, v);
            std::cout << wfk::to_json(out).dump() << "\n";
            return 0;
        }

        if (eigen->parsed()) {
            wfk::MultiPartition lambda = wfk::multipartition_from_json(parse_arg(lambda_arg));
            if (lambda.r() != r) throw std::invalid_argument("--lambda rank does not match --r");
            wfk::Charge p = parse_charge(r, charge_arg);
            wfk::RatSeries series = [&] {
                if (op_name == "eps") return wfk::eps_eigen(color_k, p, lambda, eigen_order);
                if (op_name == "hk") return wfk::hk_eigen(color_k, p, lambda, eigen_order);
                if (op_name == "gk") return wfk::gk_eigen(color_k, p, lambda, eigen_order);
                if (op_name == "gk-tilde") return wfk::gk_tilde_eigen(color_k, p, lambda, eigen_order);
                return wfk::jm_spectrum(r, lambda.norm(), color_k, eigen_order).at(lambda);
            }();
            Json out{{"operator", op_name},
                     {"k", color_k},
                     {"p", Json(p.coords)},
                     {"lambda", wfk::to_json(lambda)},
                     {"series", wfk::to_json(series)}};
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (npoint->parsed()) {
            wfk::MultiPartition lambda = wfk::multipartition_from_json(parse_arg(lambda_arg));
            wfk::MultiPartition mu = wfk::multipartition_from_json(parse_arg(mu_arg));
            std::vector<unsigned> ks = parse_arg(ks_arg).get<std::vector<unsigned>>();
            auto result = (npoint_method == "reduced")
                              ? wfk::npoint_reduced(lambda, mu, ks, npoint_order)
                              : wfk::npoint_direct(lambda, mu, ks, npoint_order);
            Json out{{"lambda", wfk::to_json(lambda)},
                     {"mu", wfk::to_json(mu)},
                     {"ks", Json(ks)},
                     {"order", npoint_order},
                     {"series", wfk::to_json(result.series)}};
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (tau->parsed()) {
            wfk::Charge p = parse_charge(r, charge_arg);
            wfk::TauParams params;
            params.degree = degree;
            params.t_max = t_max;
            params.x_modes = parse_arg(xmodes_arg).get<std::vector<int>>();
            auto result = wfk::tau_truncated(p, params);
            Json out{{"p", Json(p.coords)},
                     {"degree", params.degree},
                     {"tmax", params.t_max},
                     {"xmodes", Json(params.x_modes)},
                     {"series", wfk::to_json(result.series)}};
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (toda->parsed()) {
            wfk::TauParams params;
            params.degree = toda_degree;
            params.t_max = t_max;
            params.x_modes = parse_arg(xmodes_arg).get<std::vector<int>>();
            auto conv = wfk::calibrate_toda_convention(r, color_k, params.degree, params.t_max);
            auto residuals = wfk::toda_residual(r, color_k, charge_lo, charge_hi, params, conv);
            for (const auto& [charge, series] : residuals) {
                Json out{{"charge", charge},
                         {"epsilon", conv.epsilon},
                         {"reflect_s", conv.reflect_s},
                         {"residual", wfk::to_json(series)}};
                std::cout << out.dump() << "\n";
            }
            return 0;
        }

        if (verify->parsed()) {
            wfk::VerifyOptions opts;
            opts.r = verify_r;
            opts.n = verify_n;
            opts.seed = seed;
            return run_verify(suite, opts);
        }
    } catch (const wfk::guard_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "error: malformed JSON input: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
