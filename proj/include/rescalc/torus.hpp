#pragma once

#include "rescalc/field.hpp"
#include "rescalc/intmat.hpp"
#include "rescalc/root_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rescalc {

/// Point of the character torus: coordinate j is zeta(phase_j) * q^{expo_j}.
struct TorusPoint {
    QVec phase; // rational mod 1, kept in [0,1)
    QVec expo;

    TorusPoint() = default;
    TorusPoint(QVec ph, QVec ex);
    long rank() const { return static_cast<long>(expo.size()); }

    /// Value of the monomial x^m at this point, as (phase, exponent).
    std::pair<Rational, Rational> monomial(const IVec& m) const;
    Field monomial_value(const IVec& m) const;
    TorusPoint apply(const IMat& weyl_mat) const;

    friend bool operator==(const TorusPoint& a, const TorusPoint& b) {
        return a.phase == b.phase && a.expo == b.expo;
    }
};

/// One singular hypersurface component { x : x^form = zeta(cphase) q^cexpo }.
/// The form is the coroot of orient_root when the component comes from a
/// mu-function factor; the orientation of the component is the one induced
/// by that (positive) root.
struct Hypersurface {
    IVec form;       // primitive integer vector, first nonzero entry > 0
    Rational cphase; // in [0,1)
    Rational cexpo;
    int orient_root = -1; // index into RootSystem::positive_roots(), -1 if none

    bool contains(const TorusPoint& p) const;
    friend bool operator==(const Hypersurface& a, const Hypersurface& b) {
        return a.form == b.form && a.cphase == b.cphase && a.cexpo == b.cexpo;
    }
};

/// Affine subtorus: base point plus a saturated integer direction lattice.
/// Identity is carried by the canonical defining data (the Hermite basis of
/// the forms vanishing on the direction, with their values at the base).
struct Coset {
    TorusPoint base;
    IMat dir;  // n x d, saturated column basis of the direction lattice
    IMat defining; // (n-d) x n canonical rows k with <k, dir> = 0
    std::vector<std::pair<Rational, Rational>> defvals; // (phase, expo) of x^k at base

    long ambient_rank() const { return base.rank(); }
    long dim() const { return dir.cols; }
    long codim() const { return defining.rows; }
    bool contains(const TorusPoint& p) const;
    bool same_coset(const Coset& other) const;
    /// Canonical string key for dedup and lookups.
    std::string key() const;
    Coset apply(const IMat& weyl_mat) const;
    /// Coordinates y of a point p = base * y^dir on this coset.
    TorusPoint local_coords(const TorusPoint& p) const;
    /// The ambient point base * y^dir for local coordinates y.
    TorusPoint global_point(const TorusPoint& y) const;

    static Coset full_torus(long rank);
    static Coset make(TorusPoint base, IMat dir);
};

/// Solve { x^{m_i} = c_i } exactly; one Coset per connected component.
/// Inconsistent systems give an empty list.
std::vector<Coset> component_split(long rank,
                                   const std::vector<std::pair<IVec, std::pair<Rational, Rational>>>& equations);

/// Finite collection of hypersurface components, closed under taking
/// imaginary parts when built from a mu function.
struct Arrangement {
    std::vector<Hypersurface> components;
    bool im_closed = false;

    /// Indices of components containing the point.
    std::vector<int> through(const TorusPoint& p) const;
    std::vector<int> through_coset(const Coset& a) const;
    int find(const Hypersurface& h) const;
};

/// True iff p lies on no arrangement component that does not contain all of a.
bool regular_test(const TorusPoint& p, const Coset& a, const Arrangement& arr);

/// Nearest point of the real part of the coset to the origin in the Gram
/// metric; exact rational least squares.
QVec origin_real_part(const Coset& a, const QMat& gram);

/// One chamber of the central arrangement in the coset's direction space.
struct Chamber {
    std::vector<int> signs;   // sign per central form, in form order
    QVec witness;             // interior rational point, in direction coordinates
};

/// Central forms (restricted to the coset direction, primitive, deduplicated
/// up to sign) followed by the chambers they cut. Supports direction
/// dimension <= 2 exactly, plus the full-torus Coxeter case of a root
/// system at any supported rank.
struct ChamberSet {
    std::vector<IVec> forms;  // in direction coordinates (dim d)
    std::vector<Chamber> chambers;
};
ChamberSet chambers(const Coset& a, const Arrangement& arr, const RootSystem* rs = nullptr);

std::string torus_point_str(const TorusPoint& p);

} // namespace rescalc
