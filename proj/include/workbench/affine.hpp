#ifndef WORKBENCH_AFFINE_HPP_
#define WORKBENCH_AFFINE_HPP_

#include "workbench/rootdata.hpp"

namespace workbench {

/// Element t_nu * w of X-check x| W, acting on V = X-check tensor R by
/// v -> w(v) + nu.
struct ExtAffineElement {
    IntVec translation;
    WeylElement finite;

    static ExtAffineElement identity(int n);
    static ExtAffineElement translation_of(const IntVec& nu);

    ExtAffineElement operator*(const ExtAffineElement& o) const;
    ExtAffineElement inverse() const;
    bool is_identity() const;
    bool operator==(const ExtAffineElement& o) const;
    bool operator!=(const ExtAffineElement& o) const { return !(*this == o); }
    bool operator<(const ExtAffineElement& o) const;
};

/// Affine root a = alpha + n (alpha indexed into the ambient root list).
struct AffineRoot {
    int root_index = 0;
    long offset = 0;
    bool operator==(const AffineRoot& o) const {
        return root_index == o.root_index && offset == o.offset;
    }
};

/// True iff a > 0 on the fundamental alcove of the subsystem:
/// (alpha positive and n >= 0) or (alpha negative and n >= 1).
bool positive_on_alcove(const RootDatum& rd, const std::vector<int>& phi_sub,
                        const AffineRoot& a);

/// Simple system of the positive roots of the subsystem (those not a sum
/// of two subsystem positives).
std::vector<int> subsystem_simples(const RootDatum& rd,
                                   const std::vector<int>& phi_sub);

/// Partition of the subsystem simples into irreducible components
/// (connectivity through nonzero pairings).
std::vector<std::vector<int>> subsystem_components(
    const RootDatum& rd, const std::vector<int>& phi_sub);

/// Minimal positive affine roots: the simple roots at offset 0 plus
/// (-highest root + 1) per irreducible component. Canonical order.
std::vector<AffineRoot> min_positive_affine_roots(
    const RootDatum& rd, const std::vector<int>& phi_sub);

/// Reflection in the wall a = 0: t_{-n alpha-check} s_alpha.
ExtAffineElement affine_reflection(const RootDatum& rd, const AffineRoot& a);

enum class LengthSystem { full, prime };

/// Alcove inversion count of sigma against the full system (all roots of
/// rd) or the subsystem phi_sub. For system=prime the finite part must
/// preserve the subsystem; otherwise "length l' undefined".
long affine_length(const RootDatum& rd, const std::vector<int>& phi_sub,
                   const ExtAffineElement& sigma, LengthSystem system);

/// Closed translation formula for l'(t_nu w): sum over subsystem
/// positives alpha of |<alpha,nu>| when w^{-1}(alpha) stays positive and
/// |<alpha,nu> - 1| when it turns negative. Independent of the inversion
/// count; used as an audit oracle.
long translation_length_closed_form(const RootDatum& rd,
                                    const std::vector<int>& phi_sub,
                                    const IntVec& nu, const WeylElement& w);

struct CoxeterDecomposition {
    std::vector<int> word;  // indices into min_positive_affine_roots
    std::vector<AffineRoot> generators;
    ExtAffineElement eta;  // length-zero part
};

/// Greedy wall-crossing: sigma = s_{word[0]} ... s_{word[k-1]} * eta with
/// k = l'(sigma) and l'(eta) = 0.
CoxeterDecomposition coxeter_decompose(const RootDatum& rd,
                                       const std::vector<int>& phi_sub,
                                       const ExtAffineElement& sigma);

struct LengthInvarianceReport {
    bool equal = false;
    long l_nu = 0;
    long l_w_nu = 0;
};

/// Compares l'(t_nu) with l'(t_{w(nu)}); reports, never asserts.
LengthInvarianceReport check_translation_length_w_invariance(
    const RootDatum& rd, const std::vector<int>& phi_sub, const IntVec& nu,
    const WeylElement& w);

}  // namespace workbench

#endif  // WORKBENCH_AFFINE_HPP_
