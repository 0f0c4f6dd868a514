#include "workbench/depth_zero.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace workbench {

namespace {

BigInt mod_reduce(const BigInt& x, long m) {
    BigInt r = x % m;
    if (r < 0) r += m;
    return r;
}

bool lex_less(const IntVec& a, const IntVec& b) {
    for (int i = 0; i < a.size(); ++i)
        if (a(i) != b(i)) return a(i) < b(i);
    return false;
}

}  // namespace

bool DepthZeroCharacter::operator<(const DepthZeroCharacter& o) const {
    if (m != o.m) return m < o.m;
    return lex_less(c, o.c);
}

DepthZeroCharacter make_character(long m, const IntVec& c) {
    if (m < 1) throw Error("character modulus must be positive");
    DepthZeroCharacter chi;
    chi.m = m;
    chi.c = c;
    for (int i = 0; i < chi.c.size(); ++i) chi.c(i) = mod_reduce(chi.c(i), m);
    return chi;
}

DepthZeroCharacter char_act(const WeylElement& w,
                            const DepthZeroCharacter& chi) {
    return make_character(chi.m, w.act_x(chi.c));
}

DepthZeroCharacter char_add(const DepthZeroCharacter& a,
                            const DepthZeroCharacter& b) {
    if (a.m != b.m) throw Error("character moduli differ");
    return make_character(a.m, IntVec(a.c + b.c));
}

DepthZeroCharacter char_neg(const DepthZeroCharacter& a) {
    return make_character(a.m, IntVec(-a.c));
}

Cyclotomic char_value(const DepthZeroCharacter& chi, const IntVec& u) {
    BigInt e = mod_reduce(pairing(chi.c, u), chi.m);
    return Cyclotomic::zeta_pow(chi.m, static_cast<long>(e));
}

std::vector<int> endoscopic_subsystem(const RootDatum& rd,
                                      const DepthZeroCharacter& chi0) {
    std::vector<int> phi_prime;
    for (size_t k = 0; k < rd.coroots.size(); ++k)
        if (mod_reduce(pairing(chi0.c, rd.coroots[k]), chi0.m) == 0)
            phi_prime.push_back(static_cast<int>(k));
    // Closure under the reflections of the subsystem.
    for (int i : phi_prime) {
        WeylElement s = reflection(rd, i);
        for (int j : phi_prime) {
            int img = rd.root_index(s.act_x(rd.roots[j]));
            if (std::find(phi_prime.begin(), phi_prime.end(), img) ==
                phi_prime.end())
                throw Error("endoscopic subsystem not reflection-closed");
        }
    }
    return phi_prime;
}

StabilizerGroups stabilizer_groups(const RootDatum& rd,
                                   const DepthZeroCharacter& chi0) {
    StabilizerGroups g;
    std::vector<int> phi_prime = endoscopic_subsystem(rd, chi0);
    g.w_prime = weyl_subgroup(rd, phi_prime);
    std::vector<int> phi_prime_pos;
    for (int i : phi_prime)
        if (rd.is_positive(i)) phi_prime_pos.push_back(i);
    for (const WeylElement& w : weyl_group(rd)) {
        if (char_act(w, chi0) != chi0) continue;
        g.w_chi0.push_back(w);
        bool preserves = true;
        for (int i : phi_prime_pos) {
            int img = rd.root_index(w.act_x(rd.roots[i]));
            if (std::find(phi_prime_pos.begin(), phi_prime_pos.end(), img) ==
                phi_prime_pos.end())
                preserves = false;
        }
        if (preserves) g.c_chi0.push_back(w);
    }
    // Unique factorization W_chi0 = W' x| C_chi0.
    if (g.w_prime.size() * g.c_chi0.size() != g.w_chi0.size())
        throw Error("semidirect decomposition violated");
    std::map<WeylElement, long> hits;
    for (const WeylElement& wp : g.w_prime)
        for (const WeylElement& cc : g.c_chi0) hits[wp * cc] += 1;
    if (hits.size() != g.w_chi0.size())
        throw Error("semidirect decomposition violated");
    for (const WeylElement& w : g.w_chi0)
        if (hits.count(w) == 0 || hits.at(w) != 1)
            throw Error("semidirect decomposition violated");
    return g;
}

EndoscopicDatum endoscopic_datum(const RootDatum& rd,
                                 const DepthZeroCharacter& chi0) {
    EndoscopicDatum e;
    e.ambient = rd;
    e.chi0 = chi0;
    e.phi_prime = endoscopic_subsystem(rd, chi0);
    for (int i : e.phi_prime)
        if (rd.is_positive(i)) e.phi_prime_positive.push_back(i);
    e.groups = stabilizer_groups(rd, chi0);

    // G' root datum on the same lattices.
    RootDatum gp;
    gp.name = rd.name + "_endo";
    gp.rank = rd.rank;
    for (size_t n = 0; n < e.phi_prime.size(); ++n) {
        int i = e.phi_prime[n];
        gp.roots.push_back(rd.roots[i]);
        gp.coroots.push_back(rd.coroots[i]);
        if (rd.is_positive(i)) gp.positive.push_back(static_cast<int>(n));
    }
    // Simple system of Phi'+: positives that are not sums of two positives.
    for (int p : gp.positive) {
        bool decomposable = false;
        for (int a : gp.positive)
            for (int b : gp.positive)
                if (gp.roots[a] + gp.roots[b] == gp.roots[p])
                    decomposable = true;
        if (!decomposable) gp.simple.push_back(p);
    }
    ValidationReport rep = validate(gp);
    if (!rep.valid) throw Error("endoscopic datum failed validation");
    e.gprime = gp;

    // Dual-torus point s: alpha-check -> zeta_m^<c, alpha-check>. Its
    // vanishing set must recover Phi'-check, and its order divides m.
    e.s_element = chi0.c;
    std::vector<int> from_s;
    for (size_t k = 0; k < rd.coroots.size(); ++k)
        if (mod_reduce(pairing(e.s_element, rd.coroots[k]), chi0.m) == 0)
            from_s.push_back(static_cast<int>(k));
    if (from_s != e.phi_prime)
        throw Error("s-element does not cut out the endoscopic subsystem");
    BigInt g(chi0.m);
    for (int i = 0; i < chi0.c.size(); ++i)
        g = boost::multiprecision::gcd(g, chi0.c(i));
    e.s_order = static_cast<long>(BigInt(chi0.m / g));
    if (chi0.m % e.s_order != 0) throw Error("s-element order does not divide m");
    return e;
}

DepthZeroCharacter character_translate(const RootDatum& rd,
                                       const WeylElement& w,
                                       const DepthZeroCharacter& psi0,
                                       const DepthZeroCharacter& chi0) {
    DepthZeroCharacter p = char_add(psi0, chi0);
    return char_add(char_act(w, p), char_neg(chi0));
}

bool BlockLabel::operator==(const BlockLabel& o) const {
    return side == o.side && m == o.m && base == o.base;
}

bool BlockLabel::operator<(const BlockLabel& o) const {
    if (side != o.side) return side < o.side;
    if (m != o.m) return m < o.m;
    return lex_less(base, o.base);
}

std::pair<DepthZeroCharacter, WeylElement> orbit_canonicalize(
    const std::vector<WeylElement>& group, const DepthZeroCharacter& chi) {
    if (group.empty()) throw Error("empty group");
    DepthZeroCharacter best = char_act(group[0], chi);
    WeylElement u = group[0];
    for (const WeylElement& w : group) {
        DepthZeroCharacter x = char_act(w, chi);
        if (x < best || (x == best && w < u)) {
            best = x;
            u = w;
        }
    }
    return {best, u};
}

BlockLabel block_label(const RootDatum& rd, Side side,
                       const DepthZeroCharacter& chi,
                       const EndoscopicDatum& endo) {
    const std::vector<WeylElement> group =
        side == Side::G ? weyl_group(rd) : endo.groups.w_prime;
    auto [base, u] = orbit_canonicalize(group, chi);
    BlockLabel label;
    label.side = side;
    label.m = chi.m;
    label.base = base.c;
    for (const WeylElement& w : group)
        if (char_act(w, base) == base) label.stabilizer.push_back(w);
    return label;
}

bool same_block_crosscheck(const EndoscopicDatum& endo, const WeylElement& w1,
                           const WeylElement& w2,
                           const DepthZeroCharacter& psi0) {
    const RootDatum& rd = endo.ambient;
    DepthZeroCharacter xi1 = character_translate(rd, w1, psi0, endo.chi0);
    DepthZeroCharacter xi2 = character_translate(rd, w2, psi0, endo.chi0);
    BlockLabel l1 = block_label(rd, Side::Gprime, xi1, endo);
    BlockLabel l2 = block_label(rd, Side::Gprime, xi2, endo);
    bool by_label = (l1 == l2);

    // Group-theoretic route: w' in W' with w2^{-1} w' w1 stabilizing
    // psi0 chi0 (this is W_{chi0} when psi0 is trivial).
    DepthZeroCharacter p = char_add(psi0, endo.chi0);
    bool by_cosets = false;
    for (const WeylElement& wp : endo.groups.w_prime) {
        WeylElement x = w2.inverse() * wp * w1;
        if (char_act(x, p) == p) by_cosets = true;
    }
    if (by_label != by_cosets)
        throw Error("block label criterion cross-check failed");
    return by_label;
}

}  // namespace workbench
