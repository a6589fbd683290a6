#pragma once

#include "rescalc/mu.hpp"
#include "rescalc/residue.hpp"

#include <map>
#include <stdexcept>

namespace rescalc {

class walk_error : public std::runtime_error {
public:
    explicit walk_error(const std::string& w) : std::runtime_error(w) {}
};

/// One residue operator collected by the walk, with its accumulated weight.
struct ChainTerm {
    ResidueChain chain;
    Rational total;                     // summed over all branches
    std::vector<Rational> per_chamber;  // split by evaluation chamber of the target
};

/// All terms ending on one coset, with the evaluation data of Thm-style
/// contours: the origin r(L) and one witness per chamber of the direction
/// space.
struct CosetGroup {
    Coset coset;
    QVec origin;                 // r(L), ambient exponents
    ChamberSet chamber_set;      // central chambers of the direction space
    Rational eps_scale;          // epsilon applied to the chamber witnesses
    std::vector<ChainTerm> chains;

    /// Ambient exponent vector of the evaluation point r(L) + eps_Q.
    QVec eval_point(size_t chamber_index) const;
    /// The datum with all chains summed (the whole-walk residue datum).
    ResidueDatum datum() const;
};

struct CrossingRecord {
    int component;    // arrangement index of a component over the crossed wall
    QVec at;          // ambient real crossing point
    size_t chamber;   // top-level branch (chamber index of the full torus group)
};

struct Decomposition {
    long rank = 0;
    QVec start;                        // walk start (ambient exponents)
    std::vector<CosetGroup> groups;    // deterministic order
    std::vector<CrossingRecord> top_crossings; // level-0 crossing log (all branches)

    const CosetGroup* find(const Coset& c) const;
    ResidueDatum datum_at(const Coset& c) const;
};

struct WalkOptions {
    unsigned long seed = 0;
    /// start chamber sign vector on the positive coroots; empty = dominant
    std::vector<int> start_signs;
    int max_rank = 3;
};

/// The recursive contour walk of the residue theorem: shifts the start
/// contour to the chamber points r(L) + eps_Q, collecting one oriented
/// residue operator per crossing, recursively on every coset. Crossing a
/// component from its positive side to its negative side contributes +Res.
Decomposition compute_residue_data(const Factored& f, const Arrangement& arr,
                                   const RootSystem& rs, const WalkOptions& opts = {});

/// Lemma 4.8 transport: a datum at w A, relative to the rotated chamber,
/// with (transported datum)(psi)(w sigma) = datum(psi o w)(sigma).
ResidueDatum equivariance_transport(const ResidueDatum& datum, const WeylElement& w,
                                    const RootSystem& rs);

/// One row of the grouped decomposition: a Weyl-orbit representative with
/// the combinatorial weights of the grouped residue theorem.
struct GroupedRow {
    std::vector<int> omega;     // simple roots spanning the (P,S)-standard Levi class
    Coset representative;       // lex-minimal coset in the orbit
    std::vector<size_t> wplus;  // minimal coset representatives used in the psi o w sum
    long stab_order = 1;        // |Stab(A)| inside W^{M_A}(M,O)
    Rational weight;            // |P_S(M_A)|^{-1} |Stab|^{-1}
    std::vector<size_t> orbit_elements; // indices of W^{M_A}-orbit data used
};

struct GroupedDecomposition {
    std::vector<GroupedRow> rows;
};

GroupedDecomposition group_decomposition(const Decomposition& dec, const RootSystem& rs);

/// Deterministic witness of the P-dominant start point, beyond every wall
/// level of the arrangement, with coordinates increasing so the beta-family
/// crossing happens inside its expected window.
QVec dominant_start(const Arrangement& arr, const RootSystem& rs, unsigned long seed);

} // namespace rescalc
