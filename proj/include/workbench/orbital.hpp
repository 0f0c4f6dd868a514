#ifndef WORKBENCH_ORBITAL_HPP_
#define WORKBENCH_ORBITAL_HPP_

#include "workbench/affine.hpp"
#include "workbench/spectral.hpp"

namespace workbench {

/// Point t_mu t_0 of the maximal torus modulo the pro-unipotent part:
/// a cocharacter translation plus a residue-torus point u.
struct TorusPoint {
    IntVec mu;
    IntVec u;  // entries mod m
};

/// One support component of an orbital profile: the value at t_mu t_0 is
/// coeff * zeta_m^<character, u>.
struct ProfileEntry {
    CycloLaurent coeff;
    IntVec character;  // entries mod m

    bool operator==(const ProfileEntry& o) const {
        return coeff == o.coeff && character == o.character;
    }
};

struct TorusOrbitalProfile {
    long m = 1;
    std::map<IntVec, ProfileEntry, IntVecLess> entries;

    /// Exact value at the point (coeff times the character value at u).
    CycloLaurent value_at(const TorusPoint& t) const;

    bool operator==(const TorusOrbitalProfile& o) const {
        return m == o.m && entries == o.entries;
    }
    bool operator!=(const TorusOrbitalProfile& o) const {
        return !(*this == o);
    }
};

/// The unique w' in W' with w'(Phi' ∩ w(Phi+)) = Phi'+; returns
/// (w', w-tilde = w'w). Uniqueness is verified by exhaustion.
std::pair<WeylElement, WeylElement> dominantize_in_Gprime(
    const EndoscopicDatum& endo, const WeylElement& w);

/// Profile of the elementary function f_nu on G: component w(nu) carries
/// coefficient v^{-l(t_nu)} and character -w(c_psi + c_chi). Requires nu
/// dominant regular; support disjointness is verified.
TorusOrbitalProfile elementary_profile_G(const EndoscopicDatum& endo,
                                         const DepthZeroCharacter& psi0,
                                         const IntVec& nu);

/// Profile of f'_{w,nu} on G': components w''(w-tilde(nu)) for w'' in W',
/// coefficient v^{-l'(t_{w-tilde(nu)})} (exact per-w length), character
/// -w''(xi_{w-tilde,0}).
TorusOrbitalProfile elementary_profile_Gprime(const EndoscopicDatum& endo,
                                              const DepthZeroCharacter& psi0,
                                              const IntVec& nu,
                                              const WeylElement& w);

/// Transfer-factor diagonal v^{l(t_mu) - l'(t_mu)}.
CycloLaurent delta_diagonal(const EndoscopicDatum& endo, const IntVec& mu);

struct MatchingReport {
    bool pass = false;
    bool disjoint = false;
    std::string first_failure;  // empty when pass
};

/// Exact componentwise comparison of (chi-twist) * Delta * G-profile with
/// the sum over W' \ W of the G'-profiles.
MatchingReport matching_check(const EndoscopicDatum& endo,
                              const DepthZeroCharacter& psi0,
                              const IntVec& nu);

enum class Normalization { verbatim, per_w };

/// trace(pi(f_nu)) = v^{+-l(t_nu)} sum mult * e^{w^{-1}(nu)}; verbatim
/// keeps the +l/2 prefactor of the source formula, per_w uses -l/2.
DualTorusPoly trace_G(const RootDatum& rd, long m, const IntVec& nu,
                      const std::vector<std::pair<WeylElement, long>>&
                          exponents,
                      Normalization norm);

struct GprimeTraceTerm {
    WeylElement w;  // coset direction; replaced by its w-tilde
    WeylElement u;  // inner exponent
    long mult = 1;
};

/// Sum over terms of prefactor * mult * e^{u^{-1} w-tilde(nu)}; verbatim
/// uses the uniform prefactor v^{-l'(t_nu)}, per_w the exact
/// v^{-l'(t_{w-tilde(nu)})}.
DualTorusPoly trace_Gprime(const EndoscopicDatum& endo, const IntVec& nu,
                           const std::vector<GprimeTraceTerm>& terms,
                           Normalization norm);

struct RegularReport {
    bool pass = false;
    long blocks = 0;
};

/// For regular chi0 (Phi' empty): the spectral transfer of e^nu, read as
/// an orbital profile, equals the twisted sum of G'-profiles. Throws
/// "regular case only" otherwise.
RegularReport regular_case_crosscheck(const EndoscopicDatum& endo,
                                      const DepthZeroCharacter& psi0,
                                      const IntVec& nu);

}  // namespace workbench

#endif  // WORKBENCH_ORBITAL_HPP_
