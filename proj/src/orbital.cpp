#include "workbench/orbital.hpp"

#include <set>

namespace workbench {
namespace {

void require_dominant_regular(const RootDatum& rd, const IntVec& nu) {
    for (int s : rd.simple)
        if (pairing(rd.roots[s], nu) <= 0)
            throw Error("nu not dominant regular");
}

long trans_length(const RootDatum& rd, const std::vector<int>& phi,
                  const IntVec& nu, LengthSystem system) {
    return affine_length(rd, phi, ExtAffineElement::translation_of(nu),
                         system);
}

IntVec mod_vec(long m, const IntVec& c) {
    return make_character(m, c).c;
}

// Minimal representatives of the distinct w-tilde values over W.
std::vector<WeylElement> tilde_representatives(const EndoscopicDatum& endo) {
    std::set<WeylElement> seen;
    std::vector<WeylElement> reps;
    for (const WeylElement& w : weyl_group(endo.ambient)) {
        WeylElement wt = dominantize_in_Gprime(endo, w).second;
        if (seen.insert(wt).second) reps.push_back(wt);
    }
    return reps;
}

}  // namespace

CycloLaurent TorusOrbitalProfile::value_at(const TorusPoint& t) const {
    auto it = entries.find(t.mu);
    if (it == entries.end()) return CycloLaurent(m);
    BigInt e = pairing(it->second.character, t.u);
    long k = static_cast<long>(e % m);
    return it->second.coeff * CycloLaurent(Cyclotomic::zeta_pow(m, k));
}

std::pair<WeylElement, WeylElement> dominantize_in_Gprime(
    const EndoscopicDatum& endo, const WeylElement& w) {
    const RootDatum& rd = endo.ambient;
    // Phi' ∩ w(Phi+)
    std::set<int> target(endo.phi_prime_positive.begin(),
                         endo.phi_prime_positive.end());
    std::set<int> cur;
    for (int i : endo.phi_prime) {
        int pre = rd.root_index(w.inverse().act_x(rd.roots[i]));
        if (rd.is_positive(pre)) cur.insert(i);
    }
    const WeylElement* found = nullptr;
    for (const WeylElement& wp : endo.groups.w_prime) {
        std::set<int> image;
        for (int i : cur) image.insert(rd.root_index(wp.act_x(rd.roots[i])));
        if (image == target) {
            if (found) throw Error("dominantizing element not unique");
            found = &wp;
        }
    }
    if (!found) throw Error("no dominantizing element");
    return {*found, *found * w};
}

TorusOrbitalProfile elementary_profile_G(const EndoscopicDatum& endo,
                                         const DepthZeroCharacter& psi0,
                                         const IntVec& nu) {
    const RootDatum& rd = endo.ambient;
    require_dominant_regular(rd, nu);
    DepthZeroCharacter base = char_add(psi0, endo.chi0);
    CycloLaurent coeff = CycloLaurent::half_power(
        endo.chi0.m,
        -trans_length(rd, rd.all_root_indices(), nu, LengthSystem::full));
    TorusOrbitalProfile prof;
    prof.m = endo.chi0.m;
    std::vector<WeylElement> W = weyl_group(rd);
    for (const WeylElement& w : W) {
        ProfileEntry e;
        e.coeff = coeff;
        e.character = char_neg(char_act(w, base)).c;
        prof.entries.emplace(w.act_xcheck(nu), e);
    }
    if (prof.entries.size() != W.size())
        throw Error("support components not disjoint");
    return prof;
}

TorusOrbitalProfile elementary_profile_Gprime(const EndoscopicDatum& endo,
                                              const DepthZeroCharacter& psi0,
                                              const IntVec& nu,
                                              const WeylElement& w) {
    const RootDatum& rd = endo.ambient;
    require_dominant_regular(rd, nu);
    WeylElement wt = dominantize_in_Gprime(endo, w).second;
    IntVec wtnu = wt.act_xcheck(nu);
    CycloLaurent coeff = CycloLaurent::half_power(
        endo.chi0.m,
        -trans_length(rd, endo.phi_prime, wtnu, LengthSystem::prime));
    DepthZeroCharacter xi = character_translate(rd, wt, psi0, endo.chi0);
    TorusOrbitalProfile prof;
    prof.m = endo.chi0.m;
    for (const WeylElement& wpp : endo.groups.w_prime) {
        ProfileEntry e;
        e.coeff = coeff;
        e.character = char_neg(char_act(wpp, xi)).c;
        prof.entries.emplace(wpp.act_xcheck(wtnu), e);
    }
    if (prof.entries.size() != endo.groups.w_prime.size())
        throw Error("support components not disjoint");
    return prof;
}

CycloLaurent delta_diagonal(const EndoscopicDatum& endo, const IntVec& mu) {
    const RootDatum& rd = endo.ambient;
    long l = trans_length(rd, rd.all_root_indices(), mu, LengthSystem::full);
    long lp = trans_length(rd, endo.phi_prime, mu, LengthSystem::prime);
    return CycloLaurent::half_power(endo.chi0.m, l - lp);
}

MatchingReport matching_check(const EndoscopicDatum& endo,
                              const DepthZeroCharacter& psi0,
                              const IntVec& nu) {
    const RootDatum& rd = endo.ambient;
    long m = endo.chi0.m;
    MatchingReport rep;

    // LHS: chi-twist, then the transfer-factor diagonal per component.
    TorusOrbitalProfile lhs = elementary_profile_G(endo, psi0, nu);
    for (auto& [mu, e] : lhs.entries) {
        IntVec tw = e.character;
        for (int i = 0; i < tw.size(); ++i) tw(i) += endo.chi0.c(i);
        e.character = mod_vec(m, tw);
        e.coeff = e.coeff * delta_diagonal(endo, mu);
    }

    // RHS: union of G'-profiles over the distinct w-tilde.
    TorusOrbitalProfile rhs;
    rhs.m = m;
    rep.disjoint = true;
    for (const WeylElement& wt : tilde_representatives(endo)) {
        TorusOrbitalProfile part =
            elementary_profile_Gprime(endo, psi0, nu, wt);
        for (const auto& [mu, e] : part.entries)
            if (!rhs.entries.emplace(mu, e).second) rep.disjoint = false;
    }

    rep.pass = rep.disjoint && lhs == rhs;
    if (!rep.pass) {
        for (const auto& [mu, e] : lhs.entries) {
            auto it = rhs.entries.find(mu);
            if (it == rhs.entries.end() || !(it->second == e)) {
                std::string s = "component (";
                for (int i = 0; i < mu.size(); ++i) {
                    if (i) s += ",";
                    s += mu(i).str();
                }
                rep.first_failure = s + ")";
                break;
            }
        }
        if (rep.first_failure.empty())
            rep.first_failure = "support mismatch";
    }
    return rep;
}

DualTorusPoly trace_G(const RootDatum& rd, long m, const IntVec& nu,
                      const std::vector<std::pair<WeylElement, long>>&
                          exponents,
                      Normalization norm) {
    long l = trans_length(rd, rd.all_root_indices(), nu, LengthSystem::full);
    CycloLaurent pre = CycloLaurent::half_power(
        m, norm == Normalization::verbatim ? l : -l);
    DualTorusPoly out;
    out.m = m;
    for (const auto& [w, mult] : exponents)
        out.add(w.inverse().act_xcheck(nu),
                pre * CycloLaurent(m, Rational(mult)));
    return out;
}

DualTorusPoly trace_Gprime(const EndoscopicDatum& endo, const IntVec& nu,
                           const std::vector<GprimeTraceTerm>& terms,
                           Normalization norm) {
    const RootDatum& rd = endo.ambient;
    long m = endo.chi0.m;
    CycloLaurent uniform = CycloLaurent::half_power(
        m, -trans_length(rd, endo.phi_prime, nu, LengthSystem::prime));
    DualTorusPoly out;
    out.m = m;
    for (const GprimeTraceTerm& t : terms) {
        WeylElement wt = dominantize_in_Gprime(endo, t.w).second;
        IntVec wtnu = wt.act_xcheck(nu);
        CycloLaurent pre =
            norm == Normalization::verbatim
                ? uniform
                : CycloLaurent::half_power(
                      m, -trans_length(rd, endo.phi_prime, wtnu,
                                       LengthSystem::prime));
        out.add(t.u.inverse().act_xcheck(wtnu),
                pre * CycloLaurent(m, Rational(t.mult)));
    }
    return out;
}

RegularReport regular_case_crosscheck(const EndoscopicDatum& endo,
                                      const DepthZeroCharacter& psi0,
                                      const IntVec& nu) {
    if (!endo.phi_prime.empty()) throw Error("regular case only");
    const RootDatum& rd = endo.ambient;
    require_dominant_regular(rd, nu);
    long m = endo.chi0.m;

    CenterElement f = make_center_element(
        endo, psi0, DualTorusPoly::monomial(m, nu));
    TransferPackage pkg = xi_transfer(endo, psi0, f);
    TorusOrbitalProfile lhs;
    lhs.m = m;
    for (const auto& [label, poly] : pkg.entries)
        for (const auto& [mu, a] : poly.terms) {
            ProfileEntry e;
            e.coeff = a;
            e.character = char_neg(make_character(m, label.base)).c;
            lhs.entries.emplace(mu, e);
        }

    TorusOrbitalProfile rhs;
    rhs.m = m;
    for (const WeylElement& w : weyl_group(rd)) {
        TorusOrbitalProfile part =
            elementary_profile_Gprime(endo, psi0, nu, w);
        for (auto [mu, e] : part.entries) {
            // omega twist on the function side: character shifts by -c_chi.
            IntVec tw = e.character;
            for (int i = 0; i < tw.size(); ++i) tw(i) -= endo.chi0.c(i);
            e.character = mod_vec(m, tw);
            rhs.entries.emplace(mu, e);
        }
    }

    RegularReport rep;
    rep.blocks = static_cast<long>(pkg.entries.size());
    rep.pass = lhs == rhs;
    return rep;
}

}  // namespace workbench
