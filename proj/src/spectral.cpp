#include "workbench/spectral.hpp"

#include <algorithm>
#include <set>

namespace workbench {
namespace {

std::vector<WeylElement> char_stabilizer(const RootDatum& rd,
                                         const DepthZeroCharacter& chi) {
    std::vector<WeylElement> out;
    for (const WeylElement& w : weyl_group(rd))
        if (char_act(w, chi) == chi) out.push_back(w);
    return out;
}

long count_double_cosets(const std::vector<WeylElement>& all,
                         const std::vector<WeylElement>& left,
                         const std::vector<WeylElement>& right) {
    std::set<WeylElement> seen;
    long count = 0;
    for (const WeylElement& w : all) {
        if (seen.count(w)) continue;
        ++count;
        for (const WeylElement& l : left)
            for (const WeylElement& r : right) seen.insert(l * w * r);
    }
    return count;
}

}  // namespace

bool IntVecLess::operator()(const IntVec& a, const IntVec& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (int i = 0; i < a.size(); ++i)
        if (a(i) != b(i)) return a(i) < b(i);
    return false;
}

DualTorusPoly DualTorusPoly::monomial(long m, const IntVec& nu) {
    DualTorusPoly p;
    p.m = m;
    p.add(nu, CycloLaurent::one(m));
    return p;
}

void DualTorusPoly::add(const IntVec& nu, const CycloLaurent& c) {
    if (c.is_zero()) return;
    auto it = terms.find(nu);
    if (it == terms.end()) {
        terms.emplace(nu, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

DualTorusPoly DualTorusPoly::operator+(const DualTorusPoly& o) const {
    if (m != o.m) throw Error("incompatible cyclotomic orders");
    DualTorusPoly out = *this;
    for (const auto& [nu, c] : o.terms) out.add(nu, c);
    return out;
}

DualTorusPoly DualTorusPoly::scale(const CycloLaurent& c) const {
    DualTorusPoly out;
    out.m = m;
    for (const auto& [nu, x] : terms) out.add(nu, c * x);
    return out;
}

DualTorusPoly DualTorusPoly::translate(const IntVec& x0) const {
    DualTorusPoly out;
    out.m = m;
    for (const auto& [nu, c] : terms) {
        IntVec shifted = nu;
        for (int i = 0; i < nu.size(); ++i) shifted(i) = nu(i) + x0(i);
        out.add(shifted, c);
    }
    return out;
}

bool DualTorusPoly::operator==(const DualTorusPoly& o) const {
    return m == o.m && terms == o.terms;
}

DualTorusPoly weyl_act(const WeylElement& w, const DualTorusPoly& p) {
    DualTorusPoly out;
    out.m = p.m;
    for (const auto& [nu, c] : p.terms) out.add(w.act_xcheck(nu), c);
    return out;
}

DualTorusPoly orbit_sum(long m, const IntVec& nu,
                        const std::vector<WeylElement>& group) {
    std::set<IntVec, IntVecLess> orbit;
    for (const WeylElement& w : group) orbit.insert(w.act_xcheck(nu));
    DualTorusPoly out;
    out.m = m;
    for (const IntVec& x : orbit) out.add(x, CycloLaurent::one(m));
    return out;
}

DualTorusPoly reynolds(const DualTorusPoly& p,
                       const std::vector<WeylElement>& group) {
    DualTorusPoly out;
    out.m = p.m;
    for (const WeylElement& w : group) out = out + weyl_act(w, p);
    return out.scale(
        CycloLaurent(p.m, Rational(1, static_cast<long>(group.size()))));
}

bool is_invariant(const DualTorusPoly& p,
                  const std::vector<WeylElement>& group) {
    for (const WeylElement& w : group)
        if (weyl_act(w, p) != p) return false;
    return true;
}

CenterElement make_center_element(const EndoscopicDatum& endo,
                                  const DepthZeroCharacter& psi0,
                                  const DualTorusPoly& poly) {
    DepthZeroCharacter base = char_add(psi0, endo.chi0);
    if (!is_invariant(poly, char_stabilizer(endo.ambient, base)))
        throw Error("not a center element");
    CenterElement f;
    f.block = block_label(endo.ambient, Side::G, base, endo);
    f.poly = poly;
    return f;
}

CenterElement zeta_w(const EndoscopicDatum& endo,
                     const DepthZeroCharacter& psi0, const CenterElement& f,
                     const WeylElement& w) {
    DepthZeroCharacter base = char_add(psi0, endo.chi0);
    if (!is_invariant(f.poly, char_stabilizer(endo.ambient, base)))
        throw Error("not a center element");
    DepthZeroCharacter xi = character_translate(endo.ambient, w, psi0,
                                                endo.chi0);
    auto [rep, u] = orbit_canonicalize(endo.groups.w_prime, xi);
    CenterElement out;
    out.block = block_label(endo.ambient, Side::Gprime, xi, endo);
    out.poly = weyl_act(u * w, f.poly);
    if (!is_invariant(out.poly, out.block.stabilizer))
        throw Error("not a center element");
    return out;
}

void TransferPackage::add(const BlockLabel& b, const DualTorusPoly& p) {
    auto it = entries.find(b);
    if (it == entries.end()) {
        if (!p.is_zero()) entries.emplace(b, p);
        return;
    }
    it->second = it->second + p;
    if (it->second.is_zero()) entries.erase(it);
}

TransferPackage bold_zeta(const EndoscopicDatum& endo,
                          const DepthZeroCharacter& psi0,
                          const CenterElement& f) {
    CycloLaurent inv(f.poly.m,
                     Rational(1, static_cast<long>(
                                     endo.groups.w_prime.size())));
    TransferPackage pkg;
    std::set<BlockLabel> labels;
    for (const WeylElement& w : weyl_group(endo.ambient)) {
        CenterElement z = zeta_w(endo, psi0, f, w);
        labels.insert(z.block);
        pkg.add(z.block, z.poly.scale(inv));
    }
    DepthZeroCharacter base = char_add(psi0, endo.chi0);
    long cosets = count_double_cosets(
        weyl_group(endo.ambient), endo.groups.w_prime,
        char_stabilizer(endo.ambient, base));
    if (static_cast<long>(labels.size()) != cosets)
        throw Error("block support mismatch");
    return pkg;
}

TransferPackage omega_twist(const EndoscopicDatum& endo,
                            const TransferPackage& pkg) {
    TransferPackage out;
    for (const auto& [label, poly] : pkg.entries) {
        IntVec shifted = label.base;
        for (int i = 0; i < shifted.size(); ++i)
            shifted(i) = shifted(i) + endo.chi0.c(i);
        DepthZeroCharacter twisted = make_character(label.m, shifted);
        auto [rep, u] = orbit_canonicalize(endo.groups.w_prime, twisted);
        out.add(block_label(endo.ambient, Side::Gprime, twisted, endo),
                weyl_act(u, poly));
    }
    return out;
}

TransferPackage xi_transfer(const EndoscopicDatum& endo,
                            const DepthZeroCharacter& psi0,
                            const CenterElement& f) {
    return omega_twist(endo, bold_zeta(endo, psi0, f));
}

bool diagram_check(const EndoscopicDatum& endo,
                   const DepthZeroCharacter& psi0, DiagramRelation relation,
                   const CenterElement& f, const WeylElement& w,
                   const WeylElement& w_aux) {
    switch (relation) {
        case DiagramRelation::conj_left_w_prime:
            return zeta_w(endo, psi0, f, w_aux * w) ==
                   zeta_w(endo, psi0, f, w);
        case DiagramRelation::conj_right_w_chi0:
            return zeta_w(endo, psi0, f, w * w_aux) ==
                   zeta_w(endo, psi0, f, w);
        case DiagramRelation::brace_composition:
            return weyl_act(w * w_aux, f.poly) ==
                   weyl_act(w, weyl_act(w_aux, f.poly));
    }
    return false;
}

CenterElement descent_inclusion(const EndoscopicDatum& endo,
                                const CenterElement& f,
                                const LeviSubsystem& M) {
    if (!is_invariant(f.poly, endo.groups.w_chi0))
        throw Error("stabilizer containment violated");
    std::vector<WeylElement> wm = weyl_subgroup(endo.ambient,
                                                M.root_indices);
    CenterElement out;
    out.poly = f.poly;
    out.block = f.block;
    out.block.stabilizer.clear();
    DepthZeroCharacter base = make_character(f.block.m, f.block.base);
    for (const WeylElement& w : wm)
        if (char_act(w, base) == base) out.block.stabilizer.push_back(w);
    return out;
}

}  // namespace workbench
