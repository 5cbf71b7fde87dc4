// qtorus -- evaluations and verification suites for symplectic theta
// structures on classical and quantum tori.
//
// Exit codes: 0 success, 1 check failure, 2 input validation,
//             3 numeric/truncation failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "qtorus/algebra.hpp"
#include "qtorus/fock.hpp"
#include "qtorus/random.hpp"
#include "qtorus/serialize.hpp"
#include "qtorus/symplectic.hpp"
#include "qtorus/theta.hpp"
#include "qtorus/verify.hpp"

using namespace qtorus;
using nlohmann::json;

namespace {

struct JobConfig {
    int n = 1;
    std::string t_json;
    std::string z_spec;
    std::string x1_spec, x2_spec;
    std::string g_json;
    std::string suite = "all";
    double radius = 8.0;
    double tail_tol = 1e-12;
    int quad_order = 0;
    double residual_tol = 0.0; // 0 = per-check defaults
    std::uint64_t seed = 1;
    std::string format = "json";
    int max_word_len = 4;
    double fix_tol = 1e-10;
    int z_samples = 5;
};

double env_or(const char* name, double fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    try {
        return std::stod(v);
    } catch (...) {
        throw validation_error(std::string(name) + ": cannot parse '" + v + "' as a number");
    }
}

RVec parse_rvec(const std::string& spec, int n, const char* what) {
    std::vector<double> vals;
    std::string cur;
    for (char c : spec + ",") {
        if (c == ',') {
            if (!cur.empty()) {
                try {
                    vals.push_back(std::stod(cur));
                } catch (...) {
                    throw validation_error(std::string(what) + ": cannot parse '" + cur + "'");
                }
                cur.clear();
            }
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (static_cast<int>(vals.size()) != n)
        throw validation_error(std::string(what) + ": expected " + std::to_string(n) + " components");
    RVec r(n);
    for (int i = 0; i < n; ++i) r[i] = vals[i];
    return r;
}

CVec parse_cvec(const std::string& spec, int n, const char* what) {
    if (!spec.empty() && spec.front() == '[') return cvec_from_json(json::parse(spec));
    // comma list of entries, each "re" or "re:im"
    std::vector<cplx> vals;
    std::string cur;
    for (char c : spec + ",") {
        if (c == ',') {
            if (!cur.empty()) {
                const auto colon = cur.find(':');
                try {
                    if (colon == std::string::npos)
                        vals.emplace_back(std::stod(cur), 0.0);
                    else
                        vals.emplace_back(std::stod(cur.substr(0, colon)), std::stod(cur.substr(colon + 1)));
                } catch (...) {
                    throw validation_error(std::string(what) + ": cannot parse '" + cur + "'");
                }
                cur.clear();
            }
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (static_cast<int>(vals.size()) != n)
        throw validation_error(std::string(what) + ": expected " + std::to_string(n) + " components");
    CVec z(n);
    for (int i = 0; i < n; ++i) z[i] = vals[i];
    return z;
}

SiegelPoint parse_fiber(const JobConfig& cfg) {
    if (cfg.t_json.empty()) throw validation_error("--T is required for this command");
    json j;
    try {
        j = json::parse(cfg.t_json);
    } catch (const json::exception& e) {
        throw validation_error(std::string("--T: ") + e.what());
    }
    return siegel_from_json(j);
}

void emit(const JobConfig& cfg, const json& out, double seconds) {
    if (cfg.format == "json") {
        std::cout << out.dump() << "\n";
    } else if (cfg.format == "csv") {
        // one row of the flattened scalar fields
        std::string header, row;
        for (const auto& [k, v] : out.items()) {
            if (v.is_structured()) continue;
            header += (header.empty() ? "" : ",") + k;
            row += std::string(row.empty() ? "" : ",") + (v.is_string() ? v.get<std::string>() : v.dump());
        }
        std::cout << header << "\n" << row << "\n";
    } else {
        for (const auto& [k, v] : out.items()) std::cout << "  " << k << ": " << v.dump() << "\n";
        std::cout << "  elapsed: " << seconds << " s\n";
    }
}

int cmd_theta(const JobConfig& cfg, bool invariant) {
    const auto t0 = std::chrono::steady_clock::now();
    const SiegelPoint T = parse_fiber(cfg);
    const TruncationParams trunc{cfg.radius, cfg.tail_tol};

    json out;
    if (invariant) {
        const RealCoordinate x(cfg.x1_spec.empty() ? RVec::Zero(T.n()).eval() : parse_rvec(cfg.x1_spec, T.n(), "--x1"),
                               cfg.x2_spec.empty() ? RVec::Zero(T.n()).eval() : parse_rvec(cfg.x2_spec, T.n(), "--x2"));
        const cplx v = invariant_theta(x, T, trunc);
        out["command"] = "invariant-theta";
        out["value_re"] = v.real();
        out["value_im"] = v.imag();
        out["tail_bound"] = gaussian_tail_bound(T.real_gram(), cfg.radius);
    } else {
        const CVec z = cfg.z_spec.empty() ? CVec::Zero(T.n()).eval() : parse_cvec(cfg.z_spec, T.n(), "--z");
        const cplx v = theta(z, T, trunc);
        out["command"] = "theta";
        out["value_re"] = v.real();
        out["value_im"] = v.imag();
        out["tail_bound"] = theta_tail_bound(z, T, trunc);
    }
    out["n"] = T.n();
    out["radius"] = cfg.radius;
    out["tail_tolerance"] = cfg.tail_tol;
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(cfg, out, dt);
    return 0;
}

int cmd_modular_ratio(const JobConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    const SiegelPoint T = parse_fiber(cfg);
    if (cfg.g_json.empty()) throw validation_error("--g is required (JSON integer matrix)");
    const SymplecticMatrix g = symplectic_from_json(json::parse(cfg.g_json));
    if (g.n() != T.n()) throw validation_error("--g and --T disagree on n");
    const TruncationParams trunc{cfg.radius, cfg.tail_tol};

    std::vector<CVec> zs;
    if (!cfg.z_spec.empty()) {
        zs.push_back(parse_cvec(cfg.z_spec, T.n(), "--z"));
    } else {
        Rng rng(cfg.seed);
        std::uniform_real_distribution<double> u(0.05, 0.45);
        while (static_cast<int>(zs.size()) < cfg.z_samples) {
            CVec z(T.n());
            for (int i = 0; i < T.n(); ++i) z[i] = cplx(u(rng), 0.01);
            zs.push_back(z);
        }
    }

    cplx first{};
    double spread = 0, unit_err = 0, eighth_err = 0;
    std::size_t used = 0;
    for (const auto& z : zs) {
        try {
            const cplx xi = modular_ratio(g, z, T, trunc);
            if (used == 0) first = xi;
            spread = std::max(spread, std::abs(xi - first));
            unit_err = std::max(unit_err, std::abs(std::abs(xi) - 1.0));
            eighth_err = std::max(eighth_err, std::abs(std::pow(xi, 8) - 1.0));
            ++used;
        } catch (const numeric_error&) {
            // z landed on a theta zero; skip the sample
        }
    }
    if (used == 0) throw numeric_error("modular-ratio: every z sample hit a theta zero");

    json out{{"command", "modular-ratio"},         {"n", T.n()},
             {"xi_re", first.real()},              {"xi_im", first.imag()},
             {"unit_modulus_error", unit_err},     {"eighth_root_error", eighth_err},
             {"z_samples_used", used},             {"z_spread", spread}};
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(cfg, out, dt);
    return 0;
}

int cmd_qtheta(const JobConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    const SiegelPoint T = parse_fiber(cfg);
    const auto qt = quantum_theta(T, TruncationParams{cfg.radius, cfg.tail_tol});
    if (cfg.format == "csv") {
        std::cout << "w1,w2,re,im\n";
        for (const auto& [w, c] : qt.support()) {
            std::string w1, w2;
            for (int i = 0; i < w.dim(); ++i) {
                w1 += (i ? " " : "") + std::to_string(w.w1[i]);
                w2 += (i ? " " : "") + std::to_string(w.w2[i]);
            }
            std::cout << w1 << "," << w2 << "," << c.real() << "," << c.imag() << "\n";
        }
        return 0;
    }
    json out{{"command", "qtheta"},
             {"n", T.n()},
             {"radius", cfg.radius},
             {"support_size", qt.support().size()},
             {"terms", to_json(qt, 1e-12)}};
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(cfg, out, dt);
    return 0;
}

int cmd_stabilizer(const JobConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    const SiegelPoint T = parse_fiber(cfg);
    const auto stab = stabilizer_search(T, cfg.max_word_len, cfg.fix_tol);
    const auto qt = quantum_theta(T, TruncationParams{std::min(cfg.radius, 6.0), 1.0});

    bool closed = true;
    for (const auto& a : stab)
        for (const auto& b : stab) {
            const auto ab = a * b;
            bool found = false;
            for (const auto& c : stab) found |= c == ab;
            closed &= found;
        }
    auto order_of = [&](const SymplecticMatrix& g) {
        auto p = g;
        const auto id = SymplecticMatrix::identity(T.n());
        for (int k = 1; k <= 64; ++k) {
            if (p == id) return k;
            p = p * g;
        }
        return 0; // order above the cap
    };
    bool cyclic = false;
    for (const auto& g : stab) cyclic |= order_of(g) == static_cast<int>(stab.size());

    json elements = json::array();
    for (const auto& g : stab) {
        const double fix = (act_siegel(g, T).mat() - T.mat()).cwiseAbs().maxCoeff();
        const double inv = eps_action(g, qt, cfg.fix_tol).distance(qt);
        elements.push_back(json{{"g", to_json(g)},
                                {"order", order_of(g)},
                                {"fix_residual", fix},
                                {"qtheta_invariance", inv}});
    }
    if (cfg.format == "csv") {
        std::cout << "order,fix_residual,qtheta_invariance,g\n";
        for (const auto& e : elements)
            std::cout << e["order"] << "," << e["fix_residual"] << "," << e["qtheta_invariance"] << ",\""
                      << e["g"].dump() << "\"\n";
        return 0;
    }
    json out{{"command", "stabilizer"},
             {"n", T.n()},
             {"max_word_length", cfg.max_word_len},
             {"group_order", stab.size()},
             {"closed", closed},
             {"cyclic", cyclic},
             {"elements", elements}};
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(cfg, out, dt);
    return 0;
}

int cmd_verify(const JobConfig& cfg) {
    VerifyConfig vc;
    vc.n = cfg.n;
    vc.trunc = TruncationParams{cfg.radius, cfg.tail_tol};
    vc.quad_order = cfg.quad_order;
    vc.seed = cfg.seed;
    if (cfg.residual_tol > 0) vc.tol_override = cfg.residual_tol;
    if (!cfg.t_json.empty()) {
        vc.T = siegel_from_json(json::parse(cfg.t_json));
        vc.n = vc.T->n();
    }

    if (cfg.format == "csv") std::cout << "check,residual,tolerance,pass\n";

    const auto emit_line = [&](const CheckResult& r) {
        if (cfg.format == "json") {
            json line{{"check", r.name},
                      {"parameters", r.parameters},
                      {"residual", r.residual},
                      {"tolerance", r.tolerance},
                      {"pass", r.pass}};
            if (r.exceeds) line["mode"] = "must_exceed";
            std::cout << line.dump() << "\n";
        } else if (cfg.format == "csv") {
            std::cout << r.name << "," << r.residual << "," << r.tolerance << ","
                      << (r.pass ? "true" : "false") << "\n";
        } else {
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << "  residual " << r.residual
                      << (r.exceeds ? " > " : " < ") << r.tolerance << "\n";
        }
    };

    const auto results = verify_suite(cfg.suite, vc, emit_line);
    int failures = 0;
    json failed = json::array();
    for (const auto& r : results)
        if (!r.pass) {
            ++failures;
            failed.push_back(r.name);
        }
    if (cfg.format == "json") {
        std::cout << json{{"suite", cfg.suite},
                          {"checks", results.size()},
                          {"failures", failures},
                          {"failed", failed}}
                         .dump()
                  << "\n";
    } else if (cfg.format == "human") {
        std::cout << results.size() << " checks, " << failures << " failures\n";
    }
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symplectic theta structures on classical and quantum tori"};
    app.require_subcommand(1);

    JobConfig cfg;
    cfg.tail_tol = 1e-12;
    cfg.residual_tol = 0.0;

    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "block size n");
        sub->add_option("--T", cfg.t_json, "Siegel point as nested [re, im] JSON");
        sub->add_option("--radius", cfg.radius, "lattice-ball radius in the Im T metric");
        sub->add_option("--tail-tol", cfg.tail_tol, "tail bound the truncation must certify");
        sub->add_option("--seed", cfg.seed, "seed for every random draw");
        sub->add_option("--format", cfg.format, "json, csv or human")
            ->check(CLI::IsMember({"json", "csv", "human"}));
    };

    auto* theta_cmd = app.add_subcommand("theta", "evaluate the classical theta function");
    add_common(theta_cmd);
    theta_cmd->add_option("--z", cfg.z_spec, "complex argument, e.g. \"0.3\" or \"0.3:0.1\"");

    auto* inv_cmd = app.add_subcommand("invariant-theta", "evaluate the invariant theta variant");
    add_common(inv_cmd);
    inv_cmd->add_option("--x1", cfg.x1_spec, "first real coordinate block, comma separated");
    inv_cmd->add_option("--x2", cfg.x2_spec, "second real coordinate block, comma separated");

    auto* mod_cmd = app.add_subcommand("modular-ratio", "extract the modular multiplier");
    add_common(mod_cmd);
    mod_cmd->add_option("--g", cfg.g_json, "group element as a JSON integer matrix");
    mod_cmd->add_option("--z", cfg.z_spec, "fixed sample point (otherwise seeded samples)");
    mod_cmd->add_option("--z-samples", cfg.z_samples, "number of seeded z samples");

    auto* qt_cmd = app.add_subcommand("qtheta", "quantum theta coefficients");
    add_common(qt_cmd);

    auto* stab_cmd = app.add_subcommand("stabilizer", "enumerate the stabilizer of T");
    add_common(stab_cmd);
    stab_cmd->add_option("--max-word-len", cfg.max_word_len, "generator-word length bound");
    stab_cmd->add_option("--tol", cfg.fix_tol, "fixed-point tolerance");

    auto* ver_cmd = app.add_subcommand("verify", "run a verification suite");
    add_common(ver_cmd);
    ver_cmd->add_option("--suite", cfg.suite, "classical, quantum, crossed or all")
        ->check(CLI::IsMember({"classical", "quantum", "crossed", "all"}));
    ver_cmd->add_option("--quad-order", cfg.quad_order, "quadrature points per axis");
    ver_cmd->add_option("--tol", cfg.residual_tol, "override every per-check tolerance");

    try {
        app.parse(argc, argv);
        // environment defaults apply when the flag was not given
        if (cfg.tail_tol == 1e-12) cfg.tail_tol = env_or("QTORUS_TAIL_TOL", 1e-12);
        if (cfg.residual_tol == 0.0) cfg.residual_tol = env_or("QTORUS_RESIDUAL_TOL", 0.0);
        if (cfg.radius <= 0 || cfg.tail_tol <= 0 || cfg.residual_tol < 0)
            throw validation_error("tolerances and radius must be positive");
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (theta_cmd->parsed()) return cmd_theta(cfg, false);
        if (inv_cmd->parsed()) return cmd_theta(cfg, true);
        if (mod_cmd->parsed()) return cmd_modular_ratio(cfg);
        if (qt_cmd->parsed()) return cmd_qtheta(cfg);
        if (stab_cmd->parsed()) return cmd_stabilizer(cfg);
        if (ver_cmd->parsed()) return cmd_verify(cfg);
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const truncation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const numeric_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
