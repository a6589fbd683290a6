#pragma once

#include "rescalc/walk.hpp"

namespace rescalc {

/// Classification record for one arrangement coset.
struct ResidualReport {
    Coset coset;
    long codim = 0;
    long pole_order = 0;   // of the Levi mu factor on the regular part
    bool residual = false; // pole order == codim
    int orbit_id = -1;     // index of the Weyl orbit, orbit representative first
    bool orbit_representative = false;
    Field opdam; // nonvanishing sum, filled for full-rank residual cosets when
                 // residue data are supplied
};

/// All connected components of intersections of arrangement components,
/// deduplicated; throws when the count exceeds the cap.
std::vector<Coset> enumerate_cosets(const Arrangement& arr, long rank, long cap = 20000);

/// Prop 8.1 classification: a coset is residual iff the pole order of the
/// sub-Levi factor of mu along it equals its codimension.
std::vector<ResidualReport> classify_residual(const Factored& mu, const Arrangement& arr,
                                              const RootSystem& rs);

/// Opdam sum over the Weyl group of the transported data applied to mu at the
/// translated base points: sum_w (Res_{wA} mu)(w sigma).
Field opdam_sum(const Coset& a, const Factored& mu, const Decomposition& data,
                const RootSystem& rs);

/// Independent oracle for the residual criterion: enumerate all maximal
/// flags of arrangement components; a point is residual iff some flag gives
/// a nonzero iterated residue of x^m mu for some monomial m in a small box.
std::vector<Coset> brute_force_residual_search(const Factored& mu, const Arrangement& arr,
                                               const RootSystem& rs);

} // namespace rescalc
