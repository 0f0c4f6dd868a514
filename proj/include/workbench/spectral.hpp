#ifndef WORKBENCH_SPECTRAL_HPP_
#define WORKBENCH_SPECTRAL_HPP_

#include <map>

#include "workbench/depth_zero.hpp"
#include "workbench/scalars.hpp"

namespace workbench {

struct IntVecLess {
    bool operator()(const IntVec& a, const IntVec& b) const;
};

/// Group algebra of X-check: finite sums of monomials e^nu with
/// CycloLaurent coefficients, the coordinate ring of the dual torus.
struct DualTorusPoly {
    long m = 1;
    std::map<IntVec, CycloLaurent, IntVecLess> terms;

    static DualTorusPoly monomial(long m, const IntVec& nu);

    void add(const IntVec& nu, const CycloLaurent& c);
    bool is_zero() const { return terms.empty(); }

    DualTorusPoly operator+(const DualTorusPoly& o) const;
    DualTorusPoly scale(const CycloLaurent& c) const;
    /// Multiplication by e^x0 (lattice translation twist).
    DualTorusPoly translate(const IntVec& x0) const;
    bool operator==(const DualTorusPoly& o) const;
    bool operator!=(const DualTorusPoly& o) const { return !(*this == o); }
};

/// Monomial relabeling e^nu -> e^{w(nu)}; a ring automorphism.
DualTorusPoly weyl_act(const WeylElement& w, const DualTorusPoly& p);

DualTorusPoly orbit_sum(long m, const IntVec& nu,
                        const std::vector<WeylElement>& group);

/// Group average; projects onto the invariants.
DualTorusPoly reynolds(const DualTorusPoly& p,
                       const std::vector<WeylElement>& group);

bool is_invariant(const DualTorusPoly& p,
                  const std::vector<WeylElement>& group);

/// Center element: an invariant polynomial tagged with its block.
struct CenterElement {
    BlockLabel block;
    DualTorusPoly poly;

    bool operator==(const CenterElement& o) const {
        return block == o.block && poly == o.poly;
    }
    bool operator!=(const CenterElement& o) const { return !(*this == o); }
};

/// G-side center element in the block of psi0 * chi0; the polynomial is
/// kept in the chart of psi0 * chi0 itself. Throws "not a center element"
/// when poly is not invariant under the stabilizer of psi0 * chi0 in W.
CenterElement make_center_element(const EndoscopicDatum& endo,
                                  const DepthZeroCharacter& psi0,
                                  const DualTorusPoly& poly);

/// zeta_{w,chi}: transports f by w, re-charts to the canonical W'-orbit
/// representative of xi_{w,0}, and tags with the G'-block.
CenterElement zeta_w(const EndoscopicDatum& endo,
                     const DepthZeroCharacter& psi0, const CenterElement& f,
                     const WeylElement& w);

struct TransferPackage {
    std::map<BlockLabel, DualTorusPoly> entries;

    void add(const BlockLabel& b, const DualTorusPoly& p);
    bool operator==(const TransferPackage& o) const {
        return entries == o.entries;
    }
    bool operator!=(const TransferPackage& o) const { return !(*this == o); }
};

/// |W'|^{-1} sum over w in W of zeta_w(f, w), aggregated by block; the
/// block support is verified to be indexed by the double cosets
/// W' \ W / Stab_W(psi0 chi0).
TransferPackage bold_zeta(const EndoscopicDatum& endo,
                          const DepthZeroCharacter& psi0,
                          const CenterElement& f);

/// Shifts every block base by c_chi (the omega' twist); polynomials are
/// transported to the chart of the re-canonicalized base.
TransferPackage omega_twist(const EndoscopicDatum& endo,
                            const TransferPackage& pkg);

/// omega_twist of bold_zeta: the transfer of f.
TransferPackage xi_transfer(const EndoscopicDatum& endo,
                            const DepthZeroCharacter& psi0,
                            const CenterElement& f);

enum class DiagramRelation {
    conj_left_w_prime,
    conj_right_w_chi0,
    brace_composition
};

/// Exact equality of both compositions for the named relation.
bool diagram_check(const EndoscopicDatum& endo,
                   const DepthZeroCharacter& psi0, DiagramRelation relation,
                   const CenterElement& f, const WeylElement& w,
                   const WeylElement& w_aux);

/// Inclusion of W_{chi0}-invariants into (W_M)_{chi0}-invariants: same
/// polynomial, block stabilizer re-tagged at the Levi level.
CenterElement descent_inclusion(const EndoscopicDatum& endo,
                                const CenterElement& f,
                                const LeviSubsystem& M);

}  // namespace workbench

#endif  // WORKBENCH_SPECTRAL_HPP_
