#ifndef WORKBENCH_HECKE_HPP_
#define WORKBENCH_HECKE_HPP_

#include <map>
#include <memory>

#include "workbench/affine.hpp"
#include "workbench/scalars.hpp"

namespace workbench {

/// Shared context of a Hecke algebra: the ambient datum, the subsystem
/// whose walls generate the Coxeter part, and the cyclotomic order of the
/// coefficient ring Q(zeta_m)[v, v^-1] (q = v^2).
struct HeckeAmbient {
    RootDatum rd;
    std::vector<int> phi_prime;
    long m = 1;
};

using HeckeAmbientPtr = std::shared_ptr<const HeckeAmbient>;

HeckeAmbientPtr make_hecke_ambient(const RootDatum& rd,
                                   const std::vector<int>& phi_prime, long m);

/// Which labeling of the standard basis the element carries; the
/// relabeling isomorphism is support- and coefficient-preserving.
enum class BasisTag { g_side, gprime_side };

struct HeckeElement {
    HeckeAmbientPtr ambient;
    BasisTag tag = BasisTag::gprime_side;
    std::map<ExtAffineElement, CycloLaurent> terms;

    /// Accumulate a term, pruning zero coefficients.
    void add(const ExtAffineElement& w, const CycloLaurent& c);
    bool is_zero() const { return terms.empty(); }

    HeckeElement operator+(const HeckeElement& o) const;
    HeckeElement scale(const CycloLaurent& c) const;
    bool operator==(const HeckeElement& o) const;
    bool operator!=(const HeckeElement& o) const { return !(*this == o); }
};

/// T_w; the finite part of w must preserve the subsystem.
HeckeElement basis_T(const HeckeAmbientPtr& ambient,
                     const ExtAffineElement& w);

/// phi'_w = v^{-l'(w)} T_w.
HeckeElement basis_phi(const HeckeAmbientPtr& ambient,
                       const ExtAffineElement& w);

HeckeElement unit_element(const HeckeAmbientPtr& ambient);

/// Product in the extended Hecke algebra: the left factor is reduced to
/// wall generators times a length-zero part, then applied by the
/// quadratic rule T_s T_tau = T_{s tau} or (q-1)T_tau + q T_{s tau}.
HeckeElement hecke_multiply(const HeckeElement& a, const HeckeElement& b);

/// Toggle the basis tag; involutive, identity on support and coefficients.
HeckeElement relabel_psi(const HeckeElement& x);

/// Image of x in the group algebra of the extended group at v -> 1.
struct GroupAlgebraElement {
    long m = 1;
    std::map<ExtAffineElement, Cyclotomic> terms;

    void add(const ExtAffineElement& w, const Cyclotomic& c);
    bool operator==(const GroupAlgebraElement& o) const {
        return m == o.m && terms == o.terms;
    }
};

GroupAlgebraElement specialize_q_one(const HeckeElement& x);

/// Convolution product; oracle for the q -> 1 specialization.
GroupAlgebraElement group_multiply(const GroupAlgebraElement& a,
                                   const GroupAlgebraElement& b);

}  // namespace workbench

#endif  // WORKBENCH_HECKE_HPP_
