#pragma once

#include "rescalc/intmat.hpp"

#include <string>
#include <vector>

namespace rescalc {

/// One root, carried in two coordinate systems: coefficients over the simple
/// roots, and coordinates on the character-torus parameter space (the
/// fundamental-weight basis, where pairing with a coroot is an integer form).
struct Root {
    IVec simple_coords;   // over the simple roots
    IVec weight_coords;   // z-coordinates
    IVec coroot;          // over the simple coroots; the linear form <.,gamma^vee>
    Rational norm2;       // (gamma, gamma)
    bool is_long = false;
    bool positive = true;
};

struct WeylElement {
    IMat mat;               // action on z-coordinates (left multiplication)
    std::vector<int> word;  // reduced word in simple reflections
    long length = 0;
};

class RootSystem;

/// Subset of the simple roots and the data attached to the Levi it generates.
struct LeviSubset {
    std::vector<int> omega;      // indices of simple roots
    std::vector<int> subsystem;  // indices into positive_roots() lying in span(omega)
    IMat direction;              // saturated basis of the joint kernel of the omega coroots
};

class RootSystem {
public:
    static RootSystem build(const std::string& type, int rank);

    const std::string& type() const { return type_; }
    int rank() const { return rank_; }
    const IMat& cartan() const { return cartan_; } // cartan_(i,j) = <alpha_j, alpha_i^vee>
    const std::vector<Root>& positive_roots() const { return positive_; }
    const Root& positive_root(int i) const { return positive_[i]; }
    const QMat& gram() const { return gram_; }
    /// Number of distinct root lengths (1 or 2).
    int length_classes() const { return two_lengths_ ? 2 : 1; }

    /// Index of the positive root with these weight coordinates (or its
    /// negative); returns {index, sign} with sign 0 when absent.
    std::pair<int, int> find_root(const IVec& weight_coords) const;

    const std::vector<WeylElement>& weyl_group() const;
    const WeylElement& weyl_element(size_t i) const { return weyl_group()[i]; }
    /// Index of w1 * w2 in the group table.
    size_t weyl_index(const IMat& m) const;

    LeviSubset levi(const std::vector<int>& omega) const;
    std::vector<size_t> minimal_coset_reps(const LeviSubset& levi) const;
    /// Lemma 4.7 counting check: the predicted number of standard Levis
    /// conjugate to the one generated by omega; throws on non-divisibility.
    long orbit_count_check(const LeviSubset& levi, long chambers) const;
    /// Direct enumeration of subsets of the base whose subsystem is
    /// W-conjugate to the given one.
    long count_conjugate_standard_levis(const LeviSubset& levi) const;

    long weyl_order() const { return static_cast<long>(weyl_group().size()); }

private:
    void generate_roots();
    void compute_gram();

    std::string type_;
    int rank_ = 0;
    IMat cartan_;
    std::vector<Rational> half_norms_; // d_i = (alpha_i, alpha_i)/2
    std::vector<Root> positive_;
    QMat gram_;
    bool two_lengths_ = false;
    mutable std::vector<WeylElement> weyl_;
};

} // namespace rescalc
