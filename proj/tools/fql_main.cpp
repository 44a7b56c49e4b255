#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fql/carlitz.hpp"
#include "fql/json_io.hpp"
#include "fql/lambda.hpp"
#include "fql/lseries.hpp"
#include "fql/uexp.hpp"
#include "fql/verify.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using fql::Field;
using fql::FqElem;
using fql::RatFunc;
using fql::TruncLaurent;
using fql::TSeries;
using fql::TTPoly;
using fql::USeries;

struct RunConfig {
    int p = 2, e = 1;
    long long prec = 24;
    int Nt = 6;
    int Nu = 16;
    bool nu_given = false;
    int alpha = 1;
    int k = 1;
    int ext_r = 1;
    std::string xi = "all";
    int deg_cutoff = -1;
    std::string format = "json";
    std::string cache_dir;
    int jobs = 1;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_common(CLI::App* s, RunConfig& rc, int& qflag) {
    s->add_option("--q", qflag, "field size q = p^e (prime power, at most 16)");
    s->add_option("--p", rc.p, "field characteristic");
    s->add_option("--e", rc.e, "extension degree over the prime field");
    s->add_option("--prec-theta", rc.prec, "theta-window: values certified below theta^-prec");
    s->add_option("--Nt", rc.Nt, "t-window: series stored through t^Nt");
    s->add_option("--Nu", rc.Nu, "u-window: expansions stored through u^Nu");
    s->add_option("--alpha", rc.alpha, "twist exponent of the character sum");
    s->add_option("--k", rc.k, "index of the zeta special value q^k - 1");
    s->add_option("--ext-r", rc.ext_r, "extension degree of the evaluation field");
    s->add_option("--xi", rc.xi, "evaluation point (packed value) or 'all'");
    s->add_option("--deg-cutoff", rc.deg_cutoff, "direct-sum degree cutoff override");
    s->add_option("--format", rc.format, "output form: json | compact");
    s->add_option("--cache-dir", rc.cache_dir, "directory for content-addressed result reuse");
    s->add_option("--jobs", rc.jobs, "worker threads for independent evaluation sweeps");
}

const Field* field_of(const RunConfig& rc, int qflag) {
    int p = rc.p, e = rc.e;
    if (qflag > 0) {
        if (qflag < 2) throw UsageError("--q must be at least 2");
        int f = 2;
        while (f * f <= qflag && qflag % f != 0) ++f;
        if (f * f > qflag) f = qflag;  // prime
        p = f;
        e = 0;
        int n = qflag;
        while (n % p == 0) { n /= p; ++e; }
        if (n != 1) throw UsageError("--q must be a prime power");
    }
    if (p < 2) throw UsageError("characteristic must be at least 2");
    for (int f = 2; f * f <= p; ++f)
        if (p % f == 0) throw UsageError("characteristic must be prime");
    if (e < 1) throw UsageError("extension degree must be positive");
    long long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > 16) throw UsageError("q = p^e must be at most 16");
    }
    return Field::get(p, e);
}

nlohmann::json config_json(const std::string& cmd, const RunConfig& rc, const Field* F) {
    nlohmann::json j;
    j["cmd"] = cmd;
    j["p"] = F->p();
    j["e"] = F->deg();
    j["prec_theta"] = rc.prec;
    j["Nt"] = rc.Nt;
    j["Nu"] = rc.Nu;
    j["alpha"] = rc.alpha;
    j["k"] = rc.k;
    j["ext_r"] = rc.ext_r;
    j["xi"] = rc.xi;
    j["deg_cutoff"] = rc.deg_cutoff;
    j["version"] = kVersion;
    return j;
}

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string cache_path(const RunConfig& rc, const nlohmann::json& cfg) {
    if (rc.cache_dir.empty()) return {};
    uint64_t h = fnv1a(cfg.dump());
    std::ostringstream name;
    name << std::hex << h;
    return (std::filesystem::path(rc.cache_dir) / ("fql-" + name.str() + ".json")).string();
}

std::string render(const nlohmann::json& doc, const RunConfig& rc) {
    if (rc.format == "compact") return doc.dump() + "\n";
    return fql::json_dump(doc);
}

// balanced constant rendering over a prime field, packed value elsewhere
std::string fq_text(const Field* F, unsigned v) {
    if (F->deg() == 1 && F->p() > 2 && v > static_cast<unsigned>(F->p()) / 2)
        return std::to_string(static_cast<long long>(v) - F->p());
    return std::to_string(v);
}

std::string tt_text(const TTPoly& x) {
    if (x.is_zero()) return "0";
    const Field* F = x.field();
    std::string out;
    for (int j = x.theta_degree(); j >= 0; --j) {
        fql::FqPoly ct = x.coeff(j);
        for (int i = ct.degree(); i >= 0; --i) {
            FqElem c = ct.coeff(i);
            if (c.is_zero()) continue;
            std::string mono;
            if (i > 0) mono += i == 1 ? "t" : "t^" + std::to_string(i);
            if (j > 0) {
                if (!mono.empty()) mono += " ";
                mono += j == 1 ? "theta" : "theta^" + std::to_string(j);
            }
            std::string coef = fq_text(F, c.val());
            std::string term;
            if (mono.empty())
                term = coef;
            else if (coef == "1")
                term = mono;
            else if (coef == "-1")
                term = "-" + mono;
            else
                term = coef + " " + mono;
            if (out.empty()) {
                out = term;
            } else if (!term.empty() && term[0] == '-') {
                out += " - " + term.substr(1);
            } else {
                out += " + " + term;
            }
        }
    }
    return out;
}

std::string rat_text(const RatFunc& x) {
    std::string n = tt_text(x.num());
    if (x.is_polynomial()) return n;
    if (n.find(' ') != std::string::npos) n = "(" + n + ")";
    return n + "/(" + tt_text(x.den()) + ")";
}

nlohmann::json residual_json(const TruncLaurent& r) {
    nlohmann::json j;
    j["max_nonzero_exponent"] =
        r.is_zero_to_prec() ? nlohmann::json() : nlohmann::json(-r.first_nonzero());
    return j;
}

struct Failure {
    std::string identity;
    std::string first_bad;
};

void note_laurent(std::vector<Failure>& f, const std::string& identity, const TruncLaurent& r) {
    if (!r.is_zero_to_prec())
        f.push_back({identity, "theta^-" + std::to_string(r.first_nonzero())});
}

int finish(const nlohmann::json& doc, const RunConfig& rc, const std::string& cache,
           const std::vector<Failure>& failures) {
    std::cout << render(doc, rc);
    if (!failures.empty()) {
        nlohmann::json rep;
        rep["schema"] = 1;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& f : failures)
            arr.push_back({{"identity", f.identity}, {"first_bad", f.first_bad}});
        rep["failures"] = arr;
        std::cerr << fql::json_dump(rep);
        return 1;
    }
    if (!cache.empty()) {
        std::filesystem::create_directories(std::filesystem::path(cache).parent_path());
        std::ofstream out(cache, std::ios::binary);
        out << render(doc, rc);
    }
    return 0;
}

int run_pi(const RunConfig& rc, const Field* F, nlohmann::json doc, const std::string& cache) {
    doc["pi_qm1"] = json_series(fql::pi_qm1(F, rc.prec));
    return finish(doc, rc, cache, {});
}

int run_zeta(const RunConfig& rc, const Field* F, nlohmann::json doc, const std::string& cache) {
    if (rc.alpha < 1) throw UsageError("--alpha must be positive");
    doc["zeta"] = json_series(fql::zeta(F, rc.alpha, rc.prec));
    std::vector<Failure> failures;
    if (rc.k >= 1) {
        TruncLaurent resid = fql::zeta_special_check(F, rc.k, rc.prec);
        doc["special_check"] = residual_json(resid);
        doc["special_check"]["k"] = rc.k;
        note_laurent(failures, "zeta_special_" + std::to_string(rc.k), resid);
    }
    return finish(doc, rc, cache, failures);
}

int run_lseries(const RunConfig& rc, const Field* F, nlohmann::json doc,
                const std::string& cache) {
    fql::LParams P;
    P.alpha = rc.alpha;
    P.Nt = rc.Nt;
    P.prec = rc.prec;
    P.D = rc.deg_cutoff;
    int D = P.degree_cutoff(F->q());
    long long window = std::min<long long>(rc.prec, static_cast<long long>(rc.alpha) * (D + 1));
    doc["window"] = {{"Nt", rc.Nt}, {"theta_prec", window}};
    doc["L"] = json_tseries(fql::Lchit(F, P));
    return finish(doc, rc, cache, {});
}

int run_lambda(const RunConfig& rc, const Field* F, nlohmann::json doc,
               const std::string& cache) {
    int q = F->q();
    int margin = q * (rc.alpha + q) + q * q;
    int nu = rc.nu_given ? rc.Nu : std::max(rc.Nu, margin);
    fql::LambdaResult R = fql::lambda_solve(F, rc.alpha, nu);
    doc["result"] = json_lambda(R);
    doc["lambda_text"] = rat_text(R.lambda);
    return finish(doc, rc, cache, {});
}

int run_uexp(const RunConfig& rc, const Field* F, nlohmann::json doc, const std::string& cache) {
    doc["g"] = json_useries(fql::modular_g(F, rc.Nu));
    doc["delta"] = json_useries(fql::modular_delta(F, rc.Nu));
    doc["h"] = json_useries(fql::modular_h(F, rc.Nu));
    doc["d2"] = json_useries(fql::d2_solve(F, rc.Nu));
    doc["f_alpha"] = json_useries(fql::chi_u_sum(F, rc.alpha, rc.Nu));
    return finish(doc, rc, cache, {});
}

int run_dirichlet(const RunConfig& rc, const Field* F, nlohmann::json doc,
                  const std::string& cache) {
    if (rc.ext_r < 1 || rc.ext_r > 4) throw UsageError("--ext-r must be between 1 and 4");
    fql::FieldExt E = fql::fq_ext_build(F, rc.ext_r);
    long long qr = 1;
    for (int i = 0; i < rc.ext_r; ++i) qr *= F->q();
    std::vector<unsigned> points;
    if (rc.xi == "all") {
        for (long long v = 0; v < qr; ++v) points.push_back(static_cast<unsigned>(v));
    } else {
        long long v = -1;
        try {
            v = std::stoll(rc.xi);
        } catch (const std::exception&) {
            throw UsageError("--xi must be a packed value or 'all'");
        }
        if (v < 0 || v >= qr) throw UsageError("--xi out of range for the extension");
        points.push_back(static_cast<unsigned>(v));
    }

    std::vector<fql::DirichletResult> results(points.size());
    int workers = std::max(1, std::min<int>(rc.jobs, static_cast<int>(points.size())));
    if (workers <= 1) {
        for (size_t i = 0; i < points.size(); ++i)
            results[i] = fql::dirichlet_value(E, FqElem(E.ext, points[i]), rc.prec);
    } else {
        // deterministic ordered reduction: results land by index, threads only
        // race for the next unclaimed point
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&]() {
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= points.size()) return;
                    results[i] = fql::dirichlet_value(E, FqElem(E.ext, points[i]), rc.prec);
                }
            });
        for (auto& t : pool) t.join();
    }

    std::vector<Failure> failures;
    nlohmann::json legs = nlohmann::json::array();
    for (size_t i = 0; i < points.size(); ++i) {
        const auto& dr = results[i];
        nlohmann::json leg;
        leg["xi"] = points[i];
        leg["L1"] = json_series(dr.L1);
        leg["rho_residual"] = residual_json(dr.rho_check);
        leg["period_residual"] =
            dr.has_period_check ? residual_json(dr.period_check) : nlohmann::json();
        legs.push_back(leg);
        std::string tag = "_xi" + std::to_string(points[i]);
        note_laurent(failures, "dirichlet_rho" + tag, dr.rho_check);
        if (dr.has_period_check)
            note_laurent(failures, "dirichlet_period" + tag, dr.period_check);
    }
    doc["ext_r"] = rc.ext_r;
    doc["legs"] = legs;
    return finish(doc, rc, cache, failures);
}

int run_verify_cmd(const RunConfig& rc, const Field* F, nlohmann::json doc,
                   const std::string& cache) {
    fql::VerifyConfig vc;
    vc.p = F->p();
    vc.e = F->deg();
    vc.prec = rc.prec;
    vc.Nt = rc.Nt;
    vc.Nu = rc.Nu;
    vc.deg_cutoff = rc.deg_cutoff;
    vc.ext_r = rc.ext_r > 0 ? rc.ext_r : 2;
    auto checks = fql::run_verify(vc);
    nlohmann::json arr = nlohmann::json::array();
    std::vector<Failure> failures;
    for (const auto& c : checks) {
        arr.push_back({{"name", c.name},
                       {"pass", c.pass},
                       {"skipped", c.skipped},
                       {"detail", c.detail}});
        if (!c.pass && !c.skipped) failures.push_back({c.name, c.detail});
    }
    doc["checks"] = arr;
    doc["all_passed"] = failures.empty();
    return finish(doc, rc, cache, failures);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"special values of twisted Carlitz L-series over F_q[theta]"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    RunConfig rc;
    int qflag = 0;
    std::vector<std::pair<std::string, CLI::App*>> subs;
    for (const char* name : {"pi", "zeta", "lseries", "lambda", "uexp", "dirichlet", "verify"}) {
        CLI::App* s = app.add_subcommand(name);
        add_common(s, rc, qflag);
        subs.emplace_back(name, s);
    }
    subs[0].second->description("Carlitz period power pi^(q-1) as a theta-window");
    subs[1].second->description("zeta values over the monics and the bracket special values");
    subs[2].second->description("L(chi_t, alpha) as a certified t-series");
    subs[3].second->description("exact special-value ratio lambda_alpha via the cusp-form solve");
    subs[4].second->description("u-expansion engine: g, delta, h, d2 and the weighted sum");
    subs[5].second->description("Dirichlet legs at xi in an extension field");
    subs[6].second->description("replay the identity battery at the requested windows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::string cmd;
    for (auto& [name, s] : subs)
        if (s->parsed()) cmd = name;
    for (auto& [name, s] : subs)
        if (s->parsed() && s->count("--Nu") > 0) rc.nu_given = true;

    try {
        const Field* F = field_of(rc, qflag);
        if (rc.prec < 1 || rc.prec > 4096) throw UsageError("--prec-theta out of range");
        if (rc.Nt < 0 || rc.Nt > 4096) throw UsageError("--Nt out of range");
        if (rc.Nu < 0 || rc.Nu > 4096) throw UsageError("--Nu out of range");
        if (rc.jobs < 1 || rc.jobs > 64) throw UsageError("--jobs must be between 1 and 64");
        if (rc.format != "json" && rc.format != "compact")
            throw UsageError("--format must be json or compact");

        nlohmann::json doc;
        doc["schema"] = 1;
        nlohmann::json cfg = config_json(cmd, rc, F);
        doc["config"] = cfg;
        std::string cache = cache_path(rc, cfg);
        if (!cache.empty() && std::filesystem::exists(cache)) {
            std::ifstream in(cache, std::ios::binary);
            std::cout << in.rdbuf();
            return 0;
        }

        if (cmd == "pi") return run_pi(rc, F, std::move(doc), cache);
        if (cmd == "zeta") return run_zeta(rc, F, std::move(doc), cache);
        if (cmd == "lseries") return run_lseries(rc, F, std::move(doc), cache);
        if (cmd == "lambda") return run_lambda(rc, F, std::move(doc), cache);
        if (cmd == "uexp") return run_uexp(rc, F, std::move(doc), cache);
        if (cmd == "dirichlet") return run_dirichlet(rc, F, std::move(doc), cache);
        if (cmd == "verify") return run_verify_cmd(rc, F, std::move(doc), cache);
        throw UsageError("unknown subcommand");
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
