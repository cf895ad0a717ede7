#include "qwalk/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qwalk/moments.hpp"
#include "qwalk/sampling.hpp"
#include "qwalk/symmetry.hpp"

namespace qwalk {

namespace {

double max_entry_error(const Mat2& lhs, const Mat2& rhs) { return (lhs - rhs).cwiseAbs().maxCoeff(); }

CheckResult finish(std::string name, double worst, double tolerance, std::string detail = {}) {
    return {std::move(name), worst <= tolerance, worst, tolerance, std::move(detail)};
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    if (options.max_n < 3) throw BadParams("verify needs max_n >= 3");
    Rng rng(options.seed);
    std::vector<Coin> coins{hadamard()};
    for (int i = 0; i < options.random_coins; ++i) coins.push_back(random_coin(rng));
    std::vector<Qubit> qubits{Qubit(1.0, 0.0), Qubit(0.0, 1.0)};
    for (int i = 0; i < 3; ++i) qubits.push_back(random_qubit(rng));

    std::vector<CheckResult> results;

    {
        double worst = 0.0;
        for (const auto& coin : coins) {
            for (Basis x : kAllBases) {
                for (Basis y : kAllBases) {
                    const auto [scalar, label] = pqrs_product(x, y, coin);
                    const Mat2 raw = chirality_matrix(coin, x) * chirality_matrix(coin, y);
                    worst = std::max(worst, max_entry_error(raw, scalar * chirality_matrix(coin, label)));
                }
            }
        }
        results.push_back(finish("pqrs_table", worst, 1e-12));
    }

    {
        double worst = 0.0;
        for (const auto& coin : coins) {
            for (Basis x : kAllBases) {
                for (Basis y : kAllBases) {
                    const cplx g = trace_inner(chirality_matrix(coin, x), chirality_matrix(coin, y));
                    worst = std::max(worst, std::abs(g - (x == y ? 1.0 : 0.0)));
                }
            }
        }
        results.push_back(finish("basis_gram", worst, 1e-12));
    }

    {
        double worst = 0.0;
        int pairs = 0;
        for (const auto& coin : coins) {
            for (int n = 1; n <= options.max_n; ++n) {
                for (int l = 0; l <= n; ++l) {
                    const auto brute = xi_bruteforce(l, n - l, coin, options.enumeration_cap);
                    const auto closed = xi_closed_form(l, n - l, coin);
                    worst = std::max(worst, max_entry_error(brute.matrix, closed.matrix));
                    ++pairs;
                }
            }
        }
        results.push_back(finish("xi_closed_vs_bruteforce", worst, 1e-10, std::to_string(pairs) + " (coin, l, m)"));
    }

    {
        double worst = 0.0;
        for (const auto& coin : coins) {
            for (const auto& phi : qubits) {
                AmplitudeField field(phi);
                for (int n = 1; n <= options.max_n; ++n) {
                    field.step(coin);
                    const auto direct = distribution(field);
                    const auto paths = path_distribution(phi, coin, n);
                    for (int k = -n; k <= n; ++k) worst = std::max(worst, std::abs(direct.at(k) - paths.at(k)));
                }
            }
        }
        results.push_back(finish("path_vs_evolve", worst, 1e-10));
    }

    {
        // Relative to max(1, n^m).
        double worst = 0.0;
        const int orders[] = {1, 2, 3, 4};
        for (const auto& coin : coins) {
            for (const auto& phi : qubits) {
                AmplitudeField field(phi);
                for (int n = 1; n <= options.max_n; ++n) {
                    field.step(coin);
                    const auto dist = distribution(field);
                    const auto closed = moment_closed_form_orders(coin, phi, n, orders);
                    for (std::size_t i = 0; i < std::size(orders); ++i) {
                        const double scale = std::max(1.0, std::pow(n, orders[i]));
                        worst = std::max(worst, std::abs(closed[i].real() - empirical_moment(dist, orders[i])) / scale);
                    }
                }
            }
        }
        results.push_back(finish("moments_closed_vs_empirical", worst, 1e-8, "error / max(1, n^m)"));
    }

    {
        double worst = 0.0;
        const int orders[] = {2, 4};
        for (const auto& coin : coins) {
            for (int n = 1; n <= options.max_n; ++n) {
                const auto ref = moment_closed_form_orders(coin, qubits.front(), n, orders);
                for (const auto& phi : qubits) {
                    const auto other = moment_closed_form_orders(coin, phi, n, orders);
                    for (std::size_t i = 0; i < std::size(orders); ++i) {
                        worst = std::max(worst, std::abs(other[i].real() - ref[i].real()) / std::pow(n, orders[i]));
                    }
                }
            }
        }
        results.push_back(finish("even_moments_phi_independent", worst, 1e-10, "spread / n^m"));
    }

    {
        int disagreements = 0;
        int reports = 0;
        for (const auto& coin : coins) {
            std::vector<Qubit> probes{random_phi_perp(coin, rng), random_phi_perp(coin, rng)};
            probes.insert(probes.end(), qubits.begin(), qubits.end());
            for (const auto& phi : probes) {
                const auto report = verify_symmetry_criterion(coin, phi, options.max_n);
                ++reports;
                if (!report.consistent()) ++disagreements;
            }
        }
        std::ostringstream detail;
        detail << disagreements << " of " << reports << " reports disagree";
        results.push_back(finish("symmetry_predicates_agree", disagreements, 0.0, detail.str()));
    }

    return results;
}

}  // namespace qwalk
