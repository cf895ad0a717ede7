// qwalk: command-line front end for the coined quantum walk library.
//
// Exit codes: 0 success, 1 I/O failure, 2 parse error, 3 domain error,
// 4 verification failure. Failures print a one-line JSON record on stderr.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <future>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qwalk/asymptotics.hpp"
#include "qwalk/io.hpp"
#include "qwalk/moments.hpp"
#include "qwalk/pathsum.hpp"
#include "qwalk/symmetry.hpp"
#include "qwalk/verify.hpp"

namespace {

using json = nlohmann::json;
using namespace qwalk;

constexpr int kExitIo = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerification = 4;

struct Options {
    std::string coin = "hadamard";
    std::string sym;
    std::string phi = "left";
    std::optional<int> n;
    std::string n_list;
    std::string orders = "1,2,3,4";
    std::string xi_list = "0.5,1,2";
    std::string format = "csv";
    std::string out;
    std::string method = "evolve";
    double tol = kDistributionTol;
    std::uint64_t seed = 2002;
    int grid = 201;
    int max_n = 0;
};

Coin job_coin(const Options& opt) {
    return opt.sym.empty() ? io::parse_coin(opt.coin) : io::parse_symmetric_coin(opt.sym);
}

std::vector<int> job_n_list(const Options& opt) {
    std::vector<int> ns;
    if (opt.n) ns.push_back(*opt.n);
    if (!opt.n_list.empty()) {
        const auto more = io::parse_int_list(opt.n_list);
        ns.insert(ns.end(), more.begin(), more.end());
    }
    if (ns.empty()) throw ParseError("--n or --n-list is required");
    for (int n : ns) {
        if (n < 0) throw ParseError("time steps must be non-negative");
    }
    return ns;
}

std::uint64_t enumeration_cap() {
    const char* env = std::getenv("QWALK_MAX_ENUM");
    if (env == nullptr || *env == '\0') return kDefaultEnumerationCap;
    try {
        std::size_t used = 0;
        const auto cap = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument(env);
        return cap;
    } catch (const std::exception&) {
        throw ParseError(std::string("QWALK_MAX_ENUM must be a non-negative integer, got '") + env + "'");
    }
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json job_header(const Coin& coin, const Qubit& phi) {
    return {
        {"coin", json::array({complex_json(coin.a()), complex_json(coin.b()), complex_json(coin.c()),
                              complex_json(coin.d())})},
        {"phi", json::array({complex_json(phi.alpha()), complex_json(phi.beta())})},
    };
}

/// Plot-ready table written as CSV (header + rows) or JSON ({header fields, "rows": [...]}).
struct Table {
    explicit Table(std::vector<std::string> cols) : columns(std::move(cols)) {}

    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
    json header = json::object();

    void add(std::vector<json> row) { rows.push_back(std::move(row)); }

    [[nodiscard]] std::string render(const std::string& format) const {
        if (format == "json") {
            json doc = header;
            json items = json::array();
            for (const auto& row : rows) {
                json item = json::object();
                for (std::size_t i = 0; i < columns.size(); ++i) item[columns[i]] = row[i];
                items.push_back(std::move(item));
            }
            doc["rows"] = std::move(items);
            return doc.dump(2) + "\n";
        }
        std::string out;
        for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + columns[i];
        out += '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out += ',';
                const json& v = row[i];
                if (v.is_number_float()) {
                    out += io::format_double(v.get<double>());
                } else if (v.is_string()) {
                    out += v.get<std::string>();
                } else if (!v.is_null()) {
                    out += v.dump();
                }
            }
            out += '\n';
        }
        return out;
    }
};

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
    } else {
        io::write_file_atomic(opt.out, text);
    }
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

int run_dist(const Options& opt) {
    const Coin coin = job_coin(opt);
    const Qubit phi = io::parse_qubit(opt.phi);
    if (!opt.n) throw ParseError("dist requires --n");
    const int n = *opt.n;
    if (n < 0) throw ParseError("--n must be non-negative");

    std::optional<Distribution> dist;
    if (opt.method == "evolve") {
        dist = distribution(evolve(phi, coin, n));
    } else if (opt.method == "path") {
        dist = path_distribution(phi, coin, n);
    } else {
        throw ParseError("--method must be evolve or path");
    }
    emit(opt, opt.format == "json" ? io::distribution_json(*dist, coin, phi) : io::distribution_csv(*dist));
    return 0;
}

// Distributions at each requested time from a single incremental evolution.
std::vector<Distribution> distributions_at(const Coin& coin, const Qubit& phi, std::vector<int> ns) {
    std::vector<Distribution> out;
    AmplitudeField field(phi);
    for (int n : ns) {
        if (n < field.n()) field = evolve(phi, coin, 0);
        while (field.n() < n) field.step(coin);
        out.push_back(distribution(field));
    }
    return out;
}

int run_moments(const Options& opt) {
    const Coin coin = job_coin(opt);
    const Qubit phi = io::parse_qubit(opt.phi);
    const auto ns = job_n_list(opt);
    const auto orders = io::parse_int_list(opt.orders);
    for (int m : orders) {
        if (m < 0) throw ParseError("--m orders must be non-negative");
    }
    std::optional<LimitLaw> law;
    if (!coin.degenerate()) law.emplace(coin, phi);

    Table table({"n", "m", "empirical", "closed_form", "scaled_empirical", "limit"});
    table.header = job_header(coin, phi);
    const auto dists = distributions_at(coin, phi, ns);
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const int n = ns[i];
        for (int m : orders) {
            const double empirical = empirical_moment(dists[i], m);
            std::optional<double> closed;
            if (!coin.degenerate() && n >= 1 && m >= 1) closed = moment_closed_form({n, m, coin, phi});
            if (m == 0) closed = 1.0;
            std::optional<double> scaled;
            if (n >= 1) scaled = empirical / std::pow(n, m);
            std::optional<double> limit;
            if (law) limit = law->moment(m);
            table.add({n, m, empirical, optional_number(closed), optional_number(scaled), optional_number(limit)});
        }
    }
    emit(opt, table.render(opt.format));
    return 0;
}

int run_charfn(const Options& opt) {
    const Coin coin = job_coin(opt);
    const Qubit phi = io::parse_qubit(opt.phi);
    const auto ns = job_n_list(opt);
    const auto xis = io::parse_double_list(opt.xi_list);

    Table table({"n", "xi", "exact_re", "exact_im", "asymptotic_re", "asymptotic_im", "abs_error"});
    table.header = job_header(coin, phi);
    const auto dists = distributions_at(coin, phi, ns);
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const int n = ns[i];
        if (n < 1) throw ParseError("charfn requires n >= 1");
        for (double xi : xis) {
            const cplx exact = exact_char_function(dists[i], xi);
            if (coin.degenerate() || n < 3) {
                table.add({n, xi, exact.real(), exact.imag(), nullptr, nullptr, nullptr});
                continue;
            }
            const cplx approx = asymptotic_char_function(coin, phi, n, xi);
            table.add({n, xi, exact.real(), exact.imag(), approx.real(), approx.imag(), std::abs(exact - approx)});
        }
    }
    emit(opt, table.render(opt.format));
    return 0;
}

int run_limit(const Options& opt) {
    const Coin coin = job_coin(opt);
    const Qubit phi = io::parse_qubit(opt.phi);
    if (opt.grid < 3) throw ParseError("--grid must be at least 3");
    const LimitLaw law(coin, phi);
    const double w = law.half_width();

    // Uniform grid in t with x = |a| sin t; `angular_density` = f(x) dx/dt is
    // smooth on [-pi/2, pi/2], so the trapezoid rule over t is accurate.
    Table table({"t", "x", "density", "angular_density"});
    const double h = std::numbers::pi / (opt.grid - 1);
    double trapezoid = 0.0;
    for (int j = 0; j < opt.grid; ++j) {
        const double t = -std::numbers::pi / 2 + j * h;
        const bool endpoint = (j == 0 || j == opt.grid - 1);
        const double x = endpoint ? (j == 0 ? -w : w) : w * std::sin(t);
        const double angular = endpoint ? std::sqrt(1.0 - w * w) * (1.0 - law.skew() * x) / (std::numbers::pi * (1.0 - x * x))
                                        : law.density(x) * w * std::cos(t);
        trapezoid += (endpoint ? 0.5 : 1.0) * h * angular;
        table.add({t, x, endpoint ? json(nullptr) : json(law.density(x)), angular});
    }
    const double mean = law.moment(1);
    const double second = law.moment(2);
    table.header = job_header(coin, phi);
    table.header["half_width"] = w;
    table.header["skew"] = law.skew();
    table.header["mean"] = mean;
    table.header["second_moment"] = second;
    table.header["sd"] = std::sqrt(second - mean * mean);
    table.header["trapezoid_integral"] = trapezoid;
    emit(opt, table.render(opt.format));
    return 0;
}

int run_symmetry(const Options& opt) {
    const Coin coin = job_coin(opt);
    const Qubit phi = io::parse_qubit(opt.phi);
    const int max_n = opt.max_n > 0 ? opt.max_n : 50;
    const auto report = verify_symmetry_criterion(coin, phi, max_n, opt.tol);

    Table table({"n", "mean", "asymmetry"});
    AmplitudeField field(phi);
    for (int n = 1; n <= max_n; ++n) {
        field.step(coin);
        const auto dist = distribution(field);
        table.add({n, empirical_moment(dist, 1), asymmetry(dist)});
    }
    table.header = job_header(coin, phi);
    table.header["max_n"] = max_n;
    table.header["in_phi_perp"] = report.in_phi_perp;
    table.header["symmetric_up_to"] = report.symmetric_up_to;
    table.header["mean_zero_up_to"] = report.mean_zero_up_to;
    table.header["consistent"] = report.consistent();
    if (report.first_violation) {
        const auto& v = *report.first_violation;
        table.header["first_violation"] = {{"n", v.n}, {"mean", v.mean}, {"asymmetry", v.asymmetry}};
    } else {
        table.header["first_violation"] = nullptr;
    }
    emit(opt, table.render(opt.format));
    if (opt.format != "json") {
        std::cerr << "in_phi_perp=" << report.in_phi_perp << " symmetric_up_to=" << report.symmetric_up_to
                  << " mean_zero_up_to=" << report.mean_zero_up_to << " consistent=" << report.consistent() << "\n";
    }
    return report.consistent() ? 0 : kExitVerification;
}

int run_verify(const Options& opt) {
    VerifyOptions vopt;
    vopt.max_n = opt.max_n > 0 ? opt.max_n : 12;
    vopt.seed = opt.seed;
    vopt.enumeration_cap = enumeration_cap();
    const auto results = run_verification(vopt);

    Table table({"check", "passed", "worst", "tolerance", "detail"});
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed;
        table.add({r.name, r.passed, r.worst, r.tolerance, r.detail});
        std::cerr << (r.passed ? "PASS " : "FAIL ") << r.name << " worst=" << r.worst << " tol=" << r.tolerance
                  << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
    }
    table.header["max_n"] = vopt.max_n;
    table.header["seed"] = vopt.seed;
    table.header["passed"] = all;
    emit(opt, table.render(opt.format));
    return all ? 0 : kExitVerification;
}

int run_sweep(const Options& opt) {
    const Coin coin = job_coin(opt);
    const Qubit phi = io::parse_qubit(opt.phi);
    const auto ns = job_n_list(opt);
    if (opt.out.empty()) throw ParseError("sweep requires --out DIR");
    const std::filesystem::path dir(opt.out);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

    struct JobResult {
        int n;
        std::string file;
        double mean;
        double sd;
        std::optional<double> ks;
    };
    const std::string ext = opt.format == "json" ? "json" : "csv";
    std::vector<std::future<JobResult>> jobs;
    for (int n : ns) {
        jobs.push_back(std::async(std::launch::async, [&, n] {
            const auto dist = distribution(evolve(phi, coin, n));
            const std::string name = "dist_n" + std::to_string(n) + "." + ext;
            io::write_file_atomic(dir / name, ext == "json" ? io::distribution_json(dist, coin, phi)
                                                            : io::distribution_csv(dist));
            const double mean = empirical_moment(dist, 1);
            const double var = empirical_moment(dist, 2) - mean * mean;
            std::optional<double> ks;
            if (!coin.degenerate() && n >= 1) ks = ks_distance(dist, coin, phi);
            return JobResult{n, name, mean, std::sqrt(std::max(var, 0.0)), ks};
        }));
    }

    Table table({"n", "file", "mean", "sd", "ks_distance"});
    table.header = job_header(coin, phi);
    for (auto& job : jobs) {
        const auto r = job.get();
        table.add({r.n, r.file, r.mean, r.sd, optional_number(r.ks)});
    }
    io::write_file_atomic(dir / ("summary." + ext), table.render(opt.format));
    std::cout << table.render(opt.format);
    return 0;
}

void error_record(const std::string& kind, const std::string& message) {
    std::cerr << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact distributions, closed-form moments and limit laws of the coined quantum walk on Z"};
    app.require_subcommand(1);
    Options opt;

    const auto add_walk = [&](CLI::App* cmd) {
        auto* coin = cmd->add_option("--coin", opt.coin, "hadamard, or entries a,b,c,d")->capture_default_str();
        auto* sym = cmd->add_option("--sym", opt.sym, "symmetric-family coin eta,phi,psi (radians)");
        coin->excludes(sym);
        cmd->add_option("--phi", opt.phi, "symmetric | left | right | alpha,beta")->capture_default_str();
    };
    const auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        cmd->add_option("--out", opt.out, "Output path (default: stdout)");
    };

    auto* dist = app.add_subcommand("dist", "Exact distribution of X_n");
    add_walk(dist);
    dist->add_option("--n", opt.n, "Time steps")->required();
    dist->add_option("--method", opt.method, "evolve | path")->capture_default_str();
    add_output(dist);

    auto* moments = app.add_subcommand("moments", "Empirical vs closed-form moments");
    add_walk(moments);
    moments->add_option("--n", opt.n, "Time steps");
    moments->add_option("--n-list", opt.n_list, "Comma-separated time steps");
    moments->add_option("--m", opt.orders, "Comma-separated moment orders")->capture_default_str();
    add_output(moments);

    auto* charfn = app.add_subcommand("charfn", "Exact vs asymptotic characteristic function of X_n / n");
    add_walk(charfn);
    charfn->add_option("--n", opt.n, "Time steps");
    charfn->add_option("--n-list", opt.n_list, "Comma-separated time steps");
    charfn->add_option("--xi-list", opt.xi_list, "Comma-separated xi values")->capture_default_str();
    add_output(charfn);

    auto* limit = app.add_subcommand("limit", "Limit density table of X_n / n");
    add_walk(limit);
    limit->add_option("--grid", opt.grid, "Grid points")->capture_default_str();
    add_output(limit);

    auto* symmetry = app.add_subcommand("symmetry", "Symmetry / zero-mean / membership agreement");
    add_walk(symmetry);
    symmetry->add_option("--max-n", opt.max_n, "Largest time checked (default 50)");
    symmetry->add_option("--tol", opt.tol, "Distribution tolerance")->capture_default_str();
    add_output(symmetry);

    auto* verify = app.add_subcommand("verify", "Cross-check closed forms against independent oracles");
    verify->add_option("--max-n", opt.max_n, "Largest n / word length checked (default 12)");
    verify->add_option("--seed", opt.seed, "Seed for random coins and qubits")->capture_default_str();
    add_output(verify);

    auto* sweep = app.add_subcommand("sweep", "Distributions for many n, written concurrently");
    add_walk(sweep);
    sweep->add_option("--n", opt.n, "Time steps");
    sweep->add_option("--n-list", opt.n_list, "Comma-separated time steps");
    add_output(sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        error_record("ParseError", e.what());
        return kExitParse;
    }

    try {
        if (dist->parsed()) return run_dist(opt);
        if (moments->parsed()) return run_moments(opt);
        if (charfn->parsed()) return run_charfn(opt);
        if (limit->parsed()) return run_limit(opt);
        if (symmetry->parsed()) return run_symmetry(opt);
        if (verify->parsed()) return run_verify(opt);
        if (sweep->parsed()) return run_sweep(opt);
    } catch (const qwalk::Error& e) {
        error_record(error_kind_name(e.kind()), e.what());
        switch (e.kind()) {
            case ErrorKind::parse_error: return kExitParse;
            case ErrorKind::io_error: return kExitIo;
            default: return kExitDomain;
        }
    }
    return kExitParse;
}
