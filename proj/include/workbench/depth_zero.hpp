#ifndef WORKBENCH_DEPTH_ZERO_HPP_
#define WORKBENCH_DEPTH_ZERO_HPP_

#include "workbench/rootdata.hpp"

namespace workbench {

/// Depth-zero character of the compact torus, encoded mod m = q - 1 in the
/// coordinates of X. Evaluation at a residue point u is zeta_m^<c, u>.
struct DepthZeroCharacter {
    long m = 1;
    IntVec c;

    bool operator==(const DepthZeroCharacter& o) const {
        return m == o.m && c == o.c;
    }
    bool operator!=(const DepthZeroCharacter& o) const {
        return !(*this == o);
    }
    bool operator<(const DepthZeroCharacter& o) const;
};

/// Entries reduced to [0, m).
DepthZeroCharacter make_character(long m, const IntVec& c);

DepthZeroCharacter char_act(const WeylElement& w,
                            const DepthZeroCharacter& chi);
DepthZeroCharacter char_add(const DepthZeroCharacter& a,
                            const DepthZeroCharacter& b);
DepthZeroCharacter char_neg(const DepthZeroCharacter& a);

/// Character value at a residue-torus point u, as an element of Q(zeta_m).
Cyclotomic char_value(const DepthZeroCharacter& chi, const IntVec& u);

///// Phi' = {alpha : <c, alpha-check> = 0 mod m}; closure under reflections
/// is asserted.
std::vector<int> endoscopic_subsystem(const RootDatum& rd,
                                      const DepthZeroCharacter& chi0);

struct StabilizerGroups {
    std::vector<WeylElement> w_prime;  // Weyl group of Phi'
    std::vector<WeylElement> w_chi0;   // stabilizer of chi0 in W
    std::vector<WeylElement> c_chi0;   // {w in W_chi0 : w(Phi'+) = Phi'+}
};

/// Computes the three groups and verifies W_chi0 = W' x| C_chi0 (unique
/// factorization); failure raises "semidirect decomposition violated".
StabilizerGroups stabilizer_groups(const RootDatum& rd,
                                   const DepthZeroCharacter& chi0);

struct EndoscopicDatum {
    RootDatum ambient;
    DepthZeroCharacter chi0;
    std::vector<int> phi_prime;          // indices into ambient.roots
    std::vector<int> phi_prime_positive; // subset of phi_prime
    RootDatum gprime;                    // (X, Phi', X-check, Phi'-check)
    StabilizerGroups groups;
    IntVec s_element;  // = chi0.c as a dual-torus point
    long s_order = 1;
};

EndoscopicDatum endoscopic_datum(const RootDatum& rd,
                                 const DepthZeroCharacter& chi0);

/// xi_{w,0} = w(c_psi + c_chi) - c_chi mod m; for trivial psi0 this is
/// chi_{w,0} = w(c_chi) - c_chi.
DepthZeroCharacter character_translate(const RootDatum& rd,
                                       const WeylElement& w,
                                       const DepthZeroCharacter& psi0,
                                       const DepthZeroCharacter& chi0);

enum class Side { G, Gprime };

struct BlockLabel {
    Side side = Side::G;
    long m = 1;
    IntVec base;  // lexicographically minimal orbit representative
    std::vector<WeylElement> stabilizer;

    bool operator==(const BlockLabel& o) const;
    bool operator!=(const BlockLabel& o) const { return !(*this == o); }
    bool operator<(const BlockLabel& o) const;  // on (side, base)
};

/// Canonical orbit representative under the group, with the minimal
/// canonicalizing element u (u . chi = base).
std::pair<DepthZeroCharacter, WeylElement> orbit_canonicalize(
    const std::vector<WeylElement>& group, const DepthZeroCharacter& chi);

/// Side G uses the full Weyl orbit; side G' uses the W'-orbit from endo.
BlockLabel block_label(const RootDatum& rd, Side side,
                       const DepthZeroCharacter& chi,
                       const EndoscopicDatum& endo);

/// Label equality of xi_{w1,0} and xi_{w2,0} cross-checked against the
/// existence of w' in W' with w2^{-1} w' w1 in W_{chi0}.
bool same_block_crosscheck(const EndoscopicDatum& endo, const WeylElement& w1,
                           const WeylElement& w2,
                           const DepthZeroCharacter& psi0);

}  // namespace workbench

#endif  // WORKBENCH_DEPTH_ZERO_HPP_
