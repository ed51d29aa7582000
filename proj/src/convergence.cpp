#include "descm/convergence.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "descm/rng.hpp"

namespace descm {

std::vector<double> error_estimate(const Spectrum& prev, const Spectrum& curr,
                                   int levels) {
    if (static_cast<int>(prev.eigenvalues.size()) < levels
        || static_cast<int>(curr.eigenvalues.size()) < levels) {
        throw std::invalid_argument("error_estimate: not enough eigenvalues for requested levels");
    }
    std::vector<double> eps(levels);
    for (int n = 0; n < levels; ++n) {
        eps[n] = std::abs(curr.eigenvalues[n] - prev.eigenvalues[n]);
    }
    return eps;
}

ConformalMap select_map(const RationalPotential& potential, MapStrategy strategy) {
    switch (strategy) {
        case MapStrategy::plain:
            return map_plain_sinh(potential);
        case MapStrategy::single:
            return map_single_singularity(potential);
        case MapStrategy::multi:
            return map_multi_singularity(potential);
        case MapStrategy::automatic: {
            const auto sing = potential.singularities();
            if (sing.empty()) {
                return map_plain_sinh(potential);
            }
            if (sing.size() == 1) {
                return map_single_singularity(potential);
            }
            return map_multi_singularity(potential);
        }
    }
    throw std::logic_error("select_map: unknown strategy");
}

ConvergeResult converge(const RationalPotential& potential,
                        MapStrategy strategy, double tol, int n_max,
                        int levels) {
    if (levels < 1 || !(tol > 0.0)) {
        throw std::invalid_argument("converge: levels >= 1 and tol > 0 required");
    }
    ConvergeResult result;
    result.map = select_map(potential, strategy);

    // smallest N with 2N+1 >= levels
    const int n_start = std::max(1, (levels + 1) / 2);
    Spectrum prev;
    for (int N = n_start; N <= n_max; ++N) {
        const GeneralizedEigenSystem sys = build_system(potential, result.map, N);
        Spectrum curr = generalized_eigs(sys, levels);
        ConvergenceRecord rec;
        rec.N = N;
        rec.h = sys.h;
        rec.map_kind = result.map.kind;
        rec.eigenvalues = curr.eigenvalues;
        bool all_ok = false;
        if (N > n_start) {
            rec.eps = error_estimate(prev, curr, levels);
            all_ok = true;
            for (int n = 0; n < levels; ++n) {
                const double floor = 1e-14 * std::max(1.0, std::abs(curr.eigenvalues[n]));
                if (rec.eps[n] > std::max(tol, floor)) {
                    all_ok = false;
                }
            }
        }
        result.records.push_back(std::move(rec));
        prev = std::move(curr);
        if (all_ok) {
            result.converged = true;
            break;
        }
    }
    result.spectrum = prev;
    return result;
}

ExactCase exact_reference(int case_id, double g) {
    if (!(g > 0.0)) {
        throw std::invalid_argument("exact_reference: g must be positive");
    }
    double lambda = 0.0;
    int level = 0;
    double base = 0.0;
    switch (case_id) {
        case 1:
            lambda = -2.0 * g * (2.0 + g);
            level = 0;
            base = 5.0;
            break;
        case 2:
            lambda = -2.0 * g * (2.0 + 3.0 * g);
            level = 1;
            base = 7.0;
            break;
        case 3:
            lambda = -g * (7.0 * g + 6.0 - std::sqrt(25.0 * g * g - 12.0 * g + 4.0));
            level = 2;
            base = 9.0;
            break;
        case 4:
            lambda = -g * (13.0 * g + 6.0 - std::sqrt(49.0 * g * g - 4.0 * g + 4.0));
            level = 3;
            base = 11.0;
            break;
        default:
            throw std::invalid_argument("exact_reference: case_id must be 1..4");
    }
    ExactCase c{
        RationalPotential::from_coeffs(1.0, 1, {0.0, 0.0, lambda}, {1.0, 0.0, g}),
        level, lambda, base + lambda / g};
    return c;
}

StudyReport random_study(int m, int l, int count, std::uint64_t seed,
                         double tol, int n_max, int levels, int jobs) {
    if (count < 1) {
        throw std::invalid_argument("random_study: count must be >= 1");
    }
    StudyReport report;
    report.seed = seed;
    report.m = m;
    report.l = l;
    report.count = count;
    report.tol = tol;
    report.n_max = n_max;
    report.levels = levels;
    report.entries.resize(count);

    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= count) {
                return;
            }
            StudyEntry entry;
            entry.potential_id = i;
            entry.seed = split_seed(seed, static_cast<std::uint64_t>(i));
            entry.potential = random_potential(m, l, entry.seed);
            ConvergeResult res = converge(entry.potential, MapStrategy::automatic,
                                          tol, n_max, levels);
            entry.map = res.map;
            entry.converged = res.converged;
            entry.final_eigenvalues = res.spectrum.eigenvalues;
            entry.n_to_tol.assign(levels, -1);
            for (const ConvergenceRecord& rec : res.records) {
                for (int n = 0; n < levels; ++n) {
                    if (entry.n_to_tol[n] < 0 && !rec.eps.empty() && rec.eps[n] <= tol) {
                        entry.n_to_tol[n] = rec.N;
                    }
                }
            }
            entry.records = std::move(res.records);
            report.entries[i] = std::move(entry);
        }
    };

    jobs = std::max(1, jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int t = 0; t < jobs; ++t) {
            pool.emplace_back(worker);
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }
    return report;
}

} // namespace descm
