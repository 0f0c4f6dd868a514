#include "workbench/affine.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace workbench {
namespace {

bool contains(const std::vector<int>& v, int x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

std::vector<int> sub_positive(const RootDatum& rd,
                              const std::vector<int>& phi_sub) {
    std::vector<int> pos;
    for (int i : phi_sub)
        if (rd.is_positive(i)) pos.push_back(i);
    std::sort(pos.begin(), pos.end());
    return pos;
}

// Rational coordinates of rd.roots[idx] in the given simple roots, or
// false when it lies outside their span.
bool simple_coords(const RootDatum& rd, const std::vector<int>& simples,
                   int idx, RatVec& coords) {
    RatMat A(rd.rank, static_cast<int>(simples.size()));
    for (int j = 0; j < static_cast<int>(simples.size()); ++j)
        for (int i = 0; i < rd.rank; ++i)
            A(i, j) = Rational(rd.roots[simples[j]](i));
    RatVec b(rd.rank);
    for (int i = 0; i < rd.rank; ++i) b(i) = Rational(rd.roots[idx](i));
    return solve_linear(A, b, coords);
}

}  // namespace

ExtAffineElement ExtAffineElement::identity(int n) {
    ExtAffineElement e;
    e.translation = IntVec::Zero(n);
    e.finite = WeylElement::identity(n);
    return e;
}

ExtAffineElement ExtAffineElement::translation_of(const IntVec& nu) {
    ExtAffineElement e;
    e.translation = nu;
    e.finite = WeylElement::identity(static_cast<int>(nu.size()));
    return e;
}

ExtAffineElement ExtAffineElement::operator*(const ExtAffineElement& o) const {
    // (t_nu w)(t_mu u) = t_{nu + w(mu)} (w u)
    ExtAffineElement r;
    IntVec wmu = finite.act_xcheck(o.translation);
    r.translation = translation;
    for (int i = 0; i < translation.size(); ++i)
        r.translation(i) = translation(i) + wmu(i);
    r.finite = finite * o.finite;
    return r;
}

ExtAffineElement ExtAffineElement::inverse() const {
    ExtAffineElement r;
    r.finite = finite.inverse();
    IntVec wi = r.finite.act_xcheck(translation);
    r.translation = wi;
    for (int i = 0; i < wi.size(); ++i) r.translation(i) = -wi(i);
    return r;
}

bool ExtAffineElement::is_identity() const {
    if (!finite.is_identity()) return false;
    for (int i = 0; i < translation.size(); ++i)
        if (translation(i) != 0) return false;
    return true;
}

bool ExtAffineElement::operator==(const ExtAffineElement& o) const {
    if (translation.size() != o.translation.size()) return false;
    for (int i = 0; i < translation.size(); ++i)
        if (translation(i) != o.translation(i)) return false;
    return finite == o.finite;
}

bool ExtAffineElement::operator<(const ExtAffineElement& o) const {
    for (int i = 0; i < translation.size(); ++i) {
        if (translation(i) != o.translation(i))
            return translation(i) < o.translation(i);
    }
    return finite < o.finite;
}

bool positive_on_alcove(const RootDatum& rd, const std::vector<int>& phi_sub,
                        const AffineRoot& a) {
    if (!contains(phi_sub, a.root_index))
        throw Error("affine root not in subsystem");
    return rd.is_positive(a.root_index) ? a.offset >= 0 : a.offset >= 1;
}

std::vector<int> subsystem_simples(const RootDatum& rd,
                                   const std::vector<int>& phi_sub) {
    std::vector<int> pos = sub_positive(rd, phi_sub);
    std::vector<int> simples;
    for (int i : pos) {
        bool decomposable = false;
        for (int j : pos) {
            IntVec diff = rd.roots[i];
            for (int k = 0; k < rd.rank; ++k) diff(k) -= rd.roots[j](k);
            int d = rd.root_index(diff);
            if (d >= 0 && contains(phi_sub, d) && rd.is_positive(d)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simples.push_back(i);
    }
    return simples;
}

std::vector<std::vector<int>> subsystem_components(
    const RootDatum& rd, const std::vector<int>& phi_sub) {
    std::vector<int> simples = subsystem_simples(rd, phi_sub);
    int n = static_cast<int>(simples.size());
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j) {
                if (comp[j] >= 0) continue;
                if (pairing(rd.roots[simples[i]], rd.coroots[simples[j]]) !=
                    0) {
                    comp[j] = ncomp;
                    stack.push_back(j);
                }
            }
        }
        ++ncomp;
    }
    std::vector<std::vector<int>> out(ncomp);
    for (int s = 0; s < n; ++s) out[comp[s]].push_back(simples[s]);
    return out;
}

std::vector<AffineRoot> min_positive_affine_roots(
    const RootDatum& rd, const std::vector<int>& phi_sub) {
    std::vector<AffineRoot> gens;
    std::vector<int> simples = subsystem_simples(rd, phi_sub);
    for (int i : simples) gens.push_back({i, 0});
    std::vector<int> pos = sub_positive(rd, phi_sub);
    for (const std::vector<int>& comp : subsystem_components(rd, phi_sub)) {
        // Highest root of the component: maximal coefficient sum over the
        // component's simples among the positives lying in their span.
        int best = -1;
        Rational best_height(-1);
        for (int i : pos) {
            RatVec coords;
            if (!simple_coords(rd, comp, i, coords)) continue;
            Rational h(0);
            for (int k = 0; k < coords.size(); ++k) h += coords(k);
            if (h > best_height) {
                best_height = h;
                best = i;
            }
        }
        IntVec neg = rd.roots[best];
        for (int k = 0; k < rd.rank; ++k) neg(k) = -neg(k);
        gens.push_back({rd.root_index(neg), 1});
    }
    std::sort(gens.begin(), gens.end(), [](const AffineRoot& a,
                                           const AffineRoot& b) {
        return a.offset != b.offset ? a.offset < b.offset
                                    : a.root_index < b.root_index;
    });
    return gens;
}

ExtAffineElement affine_reflection(const RootDatum& rd, const AffineRoot& a) {
    // s_{alpha + n}(v) = s_alpha(v) - n alpha-check
    ExtAffineElement r;
    r.finite = reflection(rd, a.root_index);
    r.translation = rd.coroots[a.root_index];
    for (int i = 0; i < rd.rank; ++i)
        r.translation(i) = BigInt(-a.offset) * rd.coroots[a.root_index](i);
    return r;
}

long affine_length(const RootDatum& rd, const std::vector<int>& phi_sub,
                   const ExtAffineElement& sigma, LengthSystem system) {
    std::vector<int> idxs =
        system == LengthSystem::full ? rd.all_root_indices() : phi_sub;
    // An affine root alpha + n composed with sigma^{-1} is
    // w(alpha) + (n - <w(alpha), nu>); count the alcove inversions.
    long count = 0;
    for (int i : idxs) {
        IntVec beta = sigma.finite.act_x(rd.roots[i]);
        int bidx = rd.root_index(beta);
        if (bidx < 0 ||
            (system == LengthSystem::prime && !contains(phi_sub, bidx)))
            throw Error("length l' undefined");
        BigInt p = pairing(beta, sigma.translation);
        // apos: valid offsets n >= 0, else n >= 1.
        // target negative: n - p <= -1 when beta positive, n - p <= 0 else.
        BigInt hi = rd.is_positive(bidx) ? p - 1 : p;
        BigInt lo = rd.is_positive(i) ? 0 : 1;
        if (hi >= lo) count += static_cast<long>(hi - lo + 1);
    }
    return count;
}

long translation_length_closed_form(const RootDatum& rd,
                                    const std::vector<int>& phi_sub,
                                    const IntVec& nu, const WeylElement& w) {
    long total = 0;
    WeylElement wi = w.inverse();
    for (int i : phi_sub) {
        if (!rd.is_positive(i)) continue;
        int pre = rd.root_index(wi.act_x(rd.roots[i]));
        if (pre < 0 || !contains(phi_sub, pre))
            throw Error("length l' undefined");
        BigInt term = pairing(rd.roots[i], nu);
        if (!rd.is_positive(pre)) term -= 1;
        if (term < 0) term = -term;
        total += static_cast<long>(term);
    }
    return total;
}

CoxeterDecomposition coxeter_decompose(const RootDatum& rd,
                                       const std::vector<int>& phi_sub,
                                       const ExtAffineElement& sigma) {
    CoxeterDecomposition dec;
    dec.generators = min_positive_affine_roots(rd, phi_sub);
    std::vector<ExtAffineElement> refl;
    for (const AffineRoot& a : dec.generators)
        refl.push_back(affine_reflection(rd, a));
    ExtAffineElement cur = sigma;
    long len = affine_length(rd, phi_sub, cur, LengthSystem::prime);
    while (len > 0) {
        bool moved = false;
        for (int g = 0; g < static_cast<int>(refl.size()); ++g) {
            ExtAffineElement next = refl[g] * cur;
            long nl = affine_length(rd, phi_sub, next, LengthSystem::prime);
            if (nl < len) {
                dec.word.push_back(g);
                cur = next;
                len = nl;
                moved = true;
                break;
            }
        }
        if (!moved) throw Error("no descent at positive length");
    }
    dec.eta = cur;
    return dec;
}

LengthInvarianceReport check_translation_length_w_invariance(
    const RootDatum& rd, const std::vector<int>& phi_sub, const IntVec& nu,
    const WeylElement& w) {
    LengthInvarianceReport rep;
    rep.l_nu = affine_length(rd, phi_sub, ExtAffineElement::translation_of(nu),
                             LengthSystem::prime);
    rep.l_w_nu = affine_length(
        rd, phi_sub, ExtAffineElement::translation_of(w.act_xcheck(nu)),
        LengthSystem::prime);
    rep.equal = rep.l_nu == rep.l_w_nu;
    return rep;
}

}  // namespace workbench
