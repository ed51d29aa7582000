#pragma once

#include <cstdint>
#include <vector>

#include "descm/confmap.hpp"
#include "descm/eigensolve.hpp"

namespace descm {

enum class MapStrategy { automatic, plain, single, multi };

struct ConvergenceRecord {
    int N = 0;
    double h = 1.0;
    MapKind map_kind = MapKind::plain;
    std::vector<double> eigenvalues;
    std::vector<double> eps;  // empty at the first N
};

struct ConvergeResult {
    Spectrum spectrum;
    std::vector<ConvergenceRecord> records;
    ConformalMap map;
    bool converged = false;
};

// eps_n = |E_n(curr) - E_n(prev)| for n = 0..levels-1
std::vector<double> error_estimate(const Spectrum& prev, const Spectrum& curr,
                                   int levels);

// N-refinement loop: N advances by 1 until every requested level has
// eps_n(N) <= tol (or the machine-precision floor 1e-14 max(1,|E_n|)),
// or N_max is reached.
ConvergeResult converge(const RationalPotential& potential,
                        MapStrategy strategy, double tol, int n_max,
                        int levels);

// Picks the map per the strategy; `automatic` selects single for one
// distinct singularity, multi (with fallback) for several, plain when the
// potential is analytic.
ConformalMap select_map(const RationalPotential& potential, MapStrategy strategy);

struct ExactCase {
    RationalPotential potential;
    int level;       // index n of the exact eigenvalue
    double lambda;   // coupling lambda_i(g)
    double energy;   // exact E_n
};

// The four closed-form spectra of V(x) = x^2 + lambda_i(g) x^2/(1+g x^2).
ExactCase exact_reference(int case_id, double g);

struct StudyEntry {
    int potential_id = 0;
    std::uint64_t seed = 0;
    RationalPotential potential;
    ConformalMap map;
    std::vector<int> n_to_tol;  // per level; -1 when tol was not reached
    std::vector<double> final_eigenvalues;
    bool converged = false;
    std::vector<ConvergenceRecord> records;
};

struct StudyReport {
    std::uint64_t seed = 0;
    int m = 1;
    int l = 1;
    int count = 0;
    double tol = 1e-10;
    int n_max = 200;
    int levels = 1;
    std::vector<StudyEntry> entries;
};

// Randomized-potential study: `count` potentials from random_potential
// with split_seed-derived per-potential seeds, each run through converge
// with the automatic map strategy. Entries are ordered by potential index
// and the report is identical for identical inputs, regardless of `jobs`.
StudyReport random_study(int m, int l, int count, std::uint64_t seed,
                         double tol, int n_max, int levels = 1, int jobs = 1);

} // namespace descm
