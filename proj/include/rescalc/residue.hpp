#pragma once

#include "rescalc/factored.hpp"
#include "rescalc/series.hpp"

#include <string>
#include <vector>

namespace rescalc {

/// One step of an iterated residue: the coset crossed at this level. Each
/// step drops the dimension by one. The orientation and the transversal
/// direction are derived canonically from the sub-coset's defining data, so
/// a chain is fully determined by its list of cosets.
struct ChainStep {
    Coset sub;
};

struct ResidueChain {
    std::vector<ChainStep> steps;
    std::string key() const;
    const Coset& target(const Coset& ambient_full) const;
};

/// Rational-coefficient combination of residue chains ending at one coset.
struct ResidueDatum {
    Coset target;
    std::vector<std::pair<Rational, ResidueChain>> chains;
    bool empty() const { return chains.empty(); }
};

/// A factored function together with the coordinate frame it lives in.
struct FramedFunction {
    Factored fn;    // in the frame's local coordinates
    Coset frame;    // parametrization of the supporting coset
};

/// The canonical orientation functional of a sub-coset inside a parent: a
/// defining row of the sub that is transversal to the parent direction. On a
/// one-dimensional parent the sign is pinned so that the residue runs along
/// the root-positive direction of the line (the paper's |omega_delta| rule);
/// the first Hermite row orients everything else.
IVec orientation_functional(const Coset& parent, const Coset& sub, const RootSystem& rs);

/// The canonical local data of a sub-coset inside a parametrized parent:
/// primitive local form, its value on the sub-coset, and the coordinate
/// change V with m V = e_1.
struct StepFrame {
    IVec local_form;                   // primitive, canonical orientation
    std::pair<Rational, Rational> value; // (phase, exponent) of y^form on sub
    IMat v;                            // unimodular; new coords w with y = w^V
    Coset sub_frame;                   // parametrization used for the recursion
};
StepFrame step_frame(const Coset& parent_frame, const Coset& sub, const RootSystem& rs);

/// Residue of g (in the parent frame's coordinates) along the sub-coset,
/// taken in the canonical transversal direction; the z-normalization carries
/// one inverse power of log q. Returns the result in sub coordinates.
Factored residue_step(const Factored& g, const StepFrame& sf);

/// Res_{S_h}( ... Res_{S_1} f ), f given on the full torus.
FramedFunction iterated_residue(const Factored& f, const ResidueChain& chain,
                                const RootSystem& rs);

/// Apply a residue datum to f at a point of the target coset, including the
/// mass-one measure normalization (log q)^{chain length}, so values of full
/// chains carry no residual log q power.
Field apply_datum(const ResidueDatum& datum, const Factored& f, const TorusPoint& p,
                  const RootSystem& rs);

} // namespace rescalc
