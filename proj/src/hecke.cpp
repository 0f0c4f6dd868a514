#include "workbench/hecke.hpp"

namespace workbench {
namespace {

bool compatible(const HeckeAmbientPtr& a, const HeckeAmbientPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->m == b->m && a->phi_prime == b->phi_prime &&
           a->rd.name == b->rd.name && a->rd.rank == b->rd.rank &&
           a->rd.roots == b->rd.roots;
}

void require_compatible(const HeckeElement& a, const HeckeElement& b) {
    if (!compatible(a.ambient, b.ambient) || a.tag != b.tag)
        throw Error("incompatible ambients");
}

long prime_length(const HeckeAmbient& amb, const ExtAffineElement& w) {
    return affine_length(amb.rd, amb.phi_prime, w, LengthSystem::prime);
}

// T_s x for a wall generator s; quadratic rule term by term.
HeckeElement left_mult_gen(const HeckeAmbient& amb,
                           const ExtAffineElement& s, const HeckeElement& x) {
    CycloLaurent q = CycloLaurent::half_power(amb.m, 2);
    CycloLaurent qm1 = q - CycloLaurent::one(amb.m);
    HeckeElement out;
    out.ambient = x.ambient;
    out.tag = x.tag;
    for (const auto& [tau, c] : x.terms) {
        ExtAffineElement st = s * tau;
        if (prime_length(amb, st) > prime_length(amb, tau)) {
            out.add(st, c);
        } else {
            out.add(tau, qm1 * c);
            out.add(st, q * c);
        }
    }
    return out;
}

// T_sigma x via a reduced word for sigma times its length-zero part.
HeckeElement left_mult_basis(const HeckeAmbient& amb,
                             const ExtAffineElement& sigma,
                             const HeckeElement& x) {
    CoxeterDecomposition dec =
        coxeter_decompose(amb.rd, amb.phi_prime, sigma);
    HeckeElement cur;
    cur.ambient = x.ambient;
    cur.tag = x.tag;
    for (const auto& [tau, c] : x.terms) cur.add(dec.eta * tau, c);
    for (int j = static_cast<int>(dec.word.size()) - 1; j >= 0; --j) {
        ExtAffineElement s =
            affine_reflection(amb.rd, dec.generators[dec.word[j]]);
        cur = left_mult_gen(amb, s, cur);
    }
    return cur;
}

}  // namespace

HeckeAmbientPtr make_hecke_ambient(const RootDatum& rd,
                                   const std::vector<int>& phi_prime,
                                   long m) {
    auto amb = std::make_shared<HeckeAmbient>();
    amb->rd = rd;
    amb->phi_prime = phi_prime;
    amb->m = m;
    return amb;
}

void HeckeElement::add(const ExtAffineElement& w, const CycloLaurent& c) {
    if (c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
    require_compatible(*this, o);
    HeckeElement out = *this;
    for (const auto& [w, c] : o.terms) out.add(w, c);
    return out;
}

HeckeElement HeckeElement::scale(const CycloLaurent& c) const {
    HeckeElement out;
    out.ambient = ambient;
    out.tag = tag;
    for (const auto& [w, x] : terms) out.add(w, c * x);
    return out;
}

bool HeckeElement::operator==(const HeckeElement& o) const {
    return compatible(ambient, o.ambient) && tag == o.tag &&
           terms == o.terms;
}

HeckeElement basis_T(const HeckeAmbientPtr& ambient,
                     const ExtAffineElement& w) {
    prime_length(*ambient, w);  // validates the finite part
    HeckeElement x;
    x.ambient = ambient;
    x.add(w, CycloLaurent::one(ambient->m));
    return x;
}

HeckeElement basis_phi(const HeckeAmbientPtr& ambient,
                       const ExtAffineElement& w) {
    HeckeElement x;
    x.ambient = ambient;
    x.add(w, CycloLaurent::half_power(ambient->m,
                                      -prime_length(*ambient, w)));
    return x;
}

HeckeElement unit_element(const HeckeAmbientPtr& ambient) {
    return basis_T(ambient, ExtAffineElement::identity(ambient->rd.rank));
}

HeckeElement hecke_multiply(const HeckeElement& a, const HeckeElement& b) {
    require_compatible(a, b);
    HeckeElement out;
    out.ambient = a.ambient;
    out.tag = a.tag;
    for (const auto& [sigma, c] : a.terms) {
        HeckeElement part = left_mult_basis(*a.ambient, sigma, b);
        for (const auto& [w, x] : part.terms) out.add(w, c * x);
    }
    return out;
}

HeckeElement relabel_psi(const HeckeElement& x) {
    HeckeElement out = x;
    out.tag = x.tag == BasisTag::g_side ? BasisTag::gprime_side
                                        : BasisTag::g_side;
    return out;
}

void GroupAlgebraElement::add(const ExtAffineElement& w,
                              const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms.erase(it);
}

GroupAlgebraElement specialize_q_one(const HeckeElement& x) {
    GroupAlgebraElement out;
    out.m = x.ambient ? x.ambient->m : 1;
    for (const auto& [w, c] : x.terms) out.add(w, c.specialize_v_one());
    return out;
}

GroupAlgebraElement group_multiply(const GroupAlgebraElement& a,
                                   const GroupAlgebraElement& b) {
    if (a.m != b.m) throw Error("incompatible ambients");
    GroupAlgebraElement out;
    out.m = a.m;
    for (const auto& [u, cu] : a.terms)
        for (const auto& [w, cw] : b.terms) out.add(u * w, cu * cw);
    return out;
}

}  // namespace workbench
