#include "workbench/rootdata.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace workbench {

BigInt pairing(const IntVec& x, const IntVec& y) {
    if (x.size() != y.size()) throw Error("pairing: dimension mismatch");
    BigInt s(0);
    for (int i = 0; i < x.size(); ++i) s += x(i) * y(i);
    return s;
}

WeylElement WeylElement::identity(int n) {
    return {IntMat::Identity(n, n), IntMat::Identity(n, n)};
}

IntVec WeylElement::act_x(const IntVec& x) const {
    IntVec r = IntVec::Zero(on_x.rows());
    for (int i = 0; i < on_x.rows(); ++i)
        for (int j = 0; j < on_x.cols(); ++j) r(i) += on_x(i, j) * x(j);
    return r;
}

IntVec WeylElement::act_xcheck(const IntVec& y) const {
    // Contragredient: (on_x_inv)^T.
    IntVec r = IntVec::Zero(on_x_inv.cols());
    for (int i = 0; i < on_x_inv.cols(); ++i)
        for (int j = 0; j < on_x_inv.rows(); ++j)
            r(i) += on_x_inv(j, i) * y(j);
    return r;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
    return {on_x * o.on_x, o.on_x_inv * on_x_inv};
}

WeylElement WeylElement::inverse() const { return {on_x_inv, on_x}; }

bool WeylElement::is_identity() const {
    return on_x == IntMat::Identity(on_x.rows(), on_x.cols());
}

bool WeylElement::operator==(const WeylElement& o) const {
    return on_x == o.on_x;
}

bool WeylElement::operator<(const WeylElement& o) const {
    for (int i = 0; i < on_x.rows(); ++i)
        for (int j = 0; j < on_x.cols(); ++j) {
            if (on_x(i, j) != o.on_x(i, j)) return on_x(i, j) < o.on_x(i, j);
        }
    return false;
}

int RootDatum::root_index(const IntVec& alpha) const {
    for (size_t i = 0; i < roots.size(); ++i)
        if (roots[i] == alpha) return static_cast<int>(i);
    return -1;
}

bool RootDatum::is_positive(int idx) const {
    return std::find(positive.begin(), positive.end(), idx) != positive.end();
}

std::vector<int> RootDatum::all_root_indices() const {
    std::vector<int> v(roots.size());
    for (size_t i = 0; i < roots.size(); ++i) v[i] = static_cast<int>(i);
    return v;
}

WeylElement reflection(const RootDatum& rd, int root_idx) {
    const IntVec& a = rd.roots[root_idx];
    const IntVec& ac = rd.coroots[root_idx];
    const int n = rd.rank;
    IntMat M = IntMat::Identity(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M(i, j) -= a(i) * ac(j);
    return {M, M};  // reflections are involutions
}

namespace {

bool lex_less(const IntVec& a, const IntVec& b) {
    for (int i = 0; i < a.size(); ++i)
        if (a(i) != b(i)) return a(i) < b(i);
    return false;
}

struct RootPair {
    IntVec root, coroot;
};

// Sort pairs canonically by root and fill index sets.
RootDatum assemble(const std::string& name, int rank,
                   std::vector<RootPair> pairs,
                   const std::vector<bool>& positive_flag,
                   const std::vector<bool>& simple_flag) {
    std::vector<size_t> order(pairs.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return lex_less(pairs[a].root, pairs[b].root);
    });
    RootDatum rd;
    rd.name = name;
    rd.rank = rank;
    for (size_t k = 0; k < order.size(); ++k) {
        rd.roots.push_back(pairs[order[k]].root);
        rd.coroots.push_back(pairs[order[k]].coroot);
        if (positive_flag[order[k]]) rd.positive.push_back(static_cast<int>(k));
        if (simple_flag[order[k]]) rd.simple.push_back(static_cast<int>(k));
    }
    return rd;
}

}  // namespace

RootDatum datum_from_simple_pairs(const std::string& name, int rank,
                                  const std::vector<IntVec>& simple_roots,
                                  const std::vector<IntVec>& simple_coroots) {
    if (simple_roots.size() != simple_coroots.size())
        throw Error("simple roots/coroots must be aligned");
    // Reflection closure on (root, coroot) pairs.
    std::vector<RootPair> pairs;
    auto find = [&](const IntVec& r) {
        for (size_t i = 0; i < pairs.size(); ++i)
            if (pairs[i].root == r) return static_cast<int>(i);
        return -1;
    };
    for (size_t i = 0; i < simple_roots.size(); ++i) {
        pairs.push_back({simple_roots[i], simple_coroots[i]});
        pairs.push_back({IntVec(-simple_roots[i]), IntVec(-simple_coroots[i])});
    }
    for (size_t head = 0; head < pairs.size(); ++head) {
        for (size_t i = 0; i < simple_roots.size(); ++i) {
            const IntVec& si = simple_roots[i];
            const IntVec& sic = simple_coroots[i];
            RootPair p = pairs[head];
            IntVec nr = p.root - IntVec(si * pairing(p.root, sic));
            IntVec nc = p.coroot - IntVec(sic * pairing(si, p.coroot));
            if (find(nr) < 0) pairs.push_back({nr, nc});
            if (pairs.size() > 10000) throw Error("root closure diverged");
        }
    }
    // Positivity: nonnegative rational coordinates in the simple basis.
    RatMat S(rank, static_cast<int>(simple_roots.size()));
    for (size_t j = 0; j < simple_roots.size(); ++j)
        for (int i = 0; i < rank; ++i) S(i, j) = Rational(simple_roots[j](i));
    std::vector<bool> pos(pairs.size()), simp(pairs.size());
    for (size_t k = 0; k < pairs.size(); ++k) {
        RatVec b(rank), x;
        for (int i = 0; i < rank; ++i) b(i) = Rational(pairs[k].root(i));
        if (!solve_linear(S, b, x))
            throw Error("root outside the span of the simple roots");
        bool nonneg = true;
        for (int i = 0; i < x.size(); ++i)
            if (x(i) < 0) nonneg = false;
        pos[k] = nonneg;
        simp[k] = false;
        for (const IntVec& s : simple_roots)
            if (pairs[k].root == s) simp[k] = true;
    }
    return assemble(name, rank, pairs, pos, simp);
}

std::vector<std::string> preset_names() {
    return {"SL2", "PGL2", "GL2", "SL3", "GL3", "C2", "G2"};
}

namespace {
IntVec iv(std::initializer_list<long> vals) {
    IntVec v(static_cast<int>(vals.size()));
    int i = 0;
    for (long x : vals) v(i++) = x;
    return v;
}
}  // namespace

RootDatum preset(const std::string& name) {
    if (name == "SL2")
        return datum_from_simple_pairs("SL2", 1, {iv({2})}, {iv({1})});
    if (name == "PGL2")
        return datum_from_simple_pairs("PGL2", 1, {iv({1})}, {iv({2})});
    if (name == "GL2")
        return datum_from_simple_pairs("GL2", 2, {iv({1, -1})}, {iv({1, -1})});
    if (name == "SL3")
        return datum_from_simple_pairs("SL3", 2, {iv({2, -1}), iv({-1, 2})},
                                       {iv({1, 0}), iv({0, 1})});
    if (name == "GL3")
        return datum_from_simple_pairs("GL3", 3,
                                       {iv({1, -1, 0}), iv({0, 1, -1})},
                                       {iv({1, -1, 0}), iv({0, 1, -1})});
    if (name == "C2")
        return datum_from_simple_pairs("C2", 2, {iv({1, -1}), iv({0, 2})},
                                       {iv({1, -1}), iv({0, 1})});
    if (name == "G2")
        return datum_from_simple_pairs("G2", 2, {iv({2, -1}), iv({-3, 2})},
                                       {iv({1, 0}), iv({0, 1})});
    throw Error("unknown preset: " + name);
}

ValidationReport validate(const RootDatum& rd) {
    ValidationReport rep;
    auto fail = [&](const std::string& msg) {
        rep.valid = false;
        rep.violations.push_back(msg);
    };
    if (rd.roots.size() != rd.coroots.size()) {
        fail("roots and coroots not aligned");
        return rep;
    }
    for (size_t i = 0; i < rd.roots.size(); ++i) {
        if (pairing(rd.roots[i], rd.coroots[i]) != 2)
            fail("pairing != 2 at root index " + std::to_string(i));
        // Reduced: the only proportional roots are +-alpha.
        for (size_t j = 0; j < rd.roots.size(); ++j) {
            if (i == j) continue;
            if (rd.roots[j] == rd.roots[i]) fail("duplicate root");
            if (rd.roots[j] == IntVec(2 * rd.roots[i]))
                fail("non-reduced root system");
        }
    }
    // Reflections permute the root set.
    for (size_t i = 0; i < rd.roots.size() && rep.valid; ++i) {
        WeylElement s = reflection(rd, static_cast<int>(i));
        for (size_t j = 0; j < rd.roots.size(); ++j)
            if (rd.root_index(s.act_x(rd.roots[j])) < 0)
                fail("reflection does not permute the roots");
    }
    // Phi = Phi+ disjoint-union -Phi+.
    if (2 * rd.positive.size() != rd.roots.size())
        fail("positive system has wrong size");
    for (int p : rd.positive)
        if (rd.root_index(IntVec(-rd.roots[p])) < 0 ||
            rd.is_positive(rd.root_index(IntVec(-rd.roots[p]))))
            fail("positive system not complementary to its negative");
    // Simple roots are positive; every positive root is a nonnegative
    // rational combination of them.
    RatMat S(rd.rank, static_cast<int>(rd.simple.size()));
    for (size_t j = 0; j < rd.simple.size(); ++j) {
        if (!rd.is_positive(rd.simple[j])) fail("simple root not positive");
        for (int i = 0; i < rd.rank; ++i)
            S(i, j) = Rational(rd.roots[rd.simple[j]](i));
    }
    for (int p : rd.positive) {
        RatVec b(rd.rank), x;
        for (int i = 0; i < rd.rank; ++i) b(i) = Rational(rd.roots[p](i));
        if (!solve_linear(S, b, x)) {
            fail("positive root outside the simple span");
            continue;
        }
        for (int i = 0; i < x.size(); ++i)
            if (x(i) < 0) fail("positive root with negative simple coordinate");
    }
    return rep;
}

namespace {

std::vector<WeylElement> close_group(const std::vector<WeylElement>& gens,
                                     int n, long bound) {
    std::set<WeylElement> seen;
    seen.insert(WeylElement::identity(n));
    std::vector<WeylElement> queue(seen.begin(), seen.end());
    for (size_t head = 0; head < queue.size(); ++head) {
        for (const WeylElement& g : gens) {
            WeylElement x = g * queue[head];
            if (seen.insert(x).second) {
                queue.push_back(x);
                if (static_cast<long>(seen.size()) > bound)
                    throw Error("Weyl group too large");
            }
        }
    }
    return {seen.begin(), seen.end()};  // canonical (lexicographic) order
}

}  // namespace

std::vector<WeylElement> weyl_group(const RootDatum& rd, long bound) {
    std::vector<WeylElement> gens;
    for (int s : rd.simple) gens.push_back(reflection(rd, s));
    return close_group(gens, rd.rank, bound);
}

std::vector<WeylElement> weyl_subgroup(const RootDatum& rd,
                                       const std::vector<int>& root_indices,
                                       long bound) {
    std::vector<WeylElement> gens;
    for (int i : root_indices) gens.push_back(reflection(rd, i));
    return close_group(gens, rd.rank, bound);
}

int finite_length(const RootDatum& rd, const WeylElement& w) {
    int count = 0;
    for (int p : rd.positive) {
        int img = rd.root_index(w.act_x(rd.roots[p]));
        if (img < 0) throw Error("element does not permute the roots");
        if (!rd.is_positive(img)) ++count;
    }
    return count;
}

LeviSubsystem levi_from_span(const RootDatum& rd,
                             const std::vector<int>& seed) {
    RatMat S(rd.rank, static_cast<int>(seed.size()));
    for (size_t j = 0; j < seed.size(); ++j)
        for (int i = 0; i < rd.rank; ++i)
            S(i, j) = Rational(rd.roots[seed[j]](i));
    LeviSubsystem M;
    for (size_t k = 0; k < rd.roots.size(); ++k) {
        RatVec b(rd.rank), x;
        for (int i = 0; i < rd.rank; ++i) b(i) = Rational(rd.roots[k](i));
        if (seed.empty() ? false : solve_linear(S, b, x))
            M.root_indices.push_back(static_cast<int>(k));
    }
    return M;
}

std::vector<LeviSubsystem> all_levis(const RootDatum& rd) {
    const size_t np = rd.positive.size();
    if (np > 20) throw Error("too many positive roots for Levi enumeration");
    std::set<std::vector<int>> seen;
    std::vector<LeviSubsystem> out;
    for (size_t mask = 0; mask < (size_t(1) << np); ++mask) {
        std::vector<int> seed;
        for (size_t b = 0; b < np; ++b)
            if (mask & (size_t(1) << b)) seed.push_back(rd.positive[b]);
        LeviSubsystem M = levi_from_span(rd, seed);
        if (seen.insert(M.root_indices).second) out.push_back(M);
    }
    return out;
}

bool is_standard_levi(const RootDatum& rd, const LeviSubsystem& M) {
    std::vector<int> contained_simples;
    for (int s : rd.simple)
        if (std::find(M.root_indices.begin(), M.root_indices.end(), s) !=
            M.root_indices.end())
            contained_simples.push_back(s);
    return levi_from_span(rd, contained_simples).root_indices ==
           M.root_indices;
}

RootDatum levi_datum(const RootDatum& rd, const LeviSubsystem& M) {
    RootDatum out;
    out.name = rd.name + "_levi";
    out.rank = rd.rank;
    std::vector<int> pos;
    for (int i : M.root_indices) {
        if (rd.is_positive(i)) pos.push_back(i);
    }
    std::sort(pos.begin(), pos.end());
    for (int i : pos) {
        IntVec neg = rd.roots[i];
        for (int k = 0; k < rd.rank; ++k) neg(k) = -neg(k);
        int ni = rd.root_index(neg);
        out.positive.push_back(static_cast<int>(out.roots.size()));
        out.roots.push_back(rd.roots[i]);
        out.coroots.push_back(rd.coroots[i]);
        out.roots.push_back(rd.roots[ni]);
        out.coroots.push_back(rd.coroots[ni]);
        // Simple in M: not a sum of two M-positives.
        bool decomposable = false;
        for (int j : pos) {
            IntVec diff = rd.roots[i];
            for (int k = 0; k < rd.rank; ++k) diff(k) -= rd.roots[j](k);
            int d = rd.root_index(diff);
            if (d >= 0 && rd.is_positive(d) &&
                std::find(pos.begin(), pos.end(), d) != pos.end()) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable)
            out.simple.push_back(static_cast<int>(out.roots.size()) - 2);
    }
    return out;
}

namespace {

//// Canonical id of the coset (subgroup * w): the minimal element.
WeylElement coset_id(const std::vector<WeylElement>& subgroup,
                     const WeylElement& w) {
    WeylElement best = subgroup[0] * w;
    for (const WeylElement& m : subgroup) {
        WeylElement x = m * w;
        if (x < best) best = x;
    }
    return best;
}

}  // namespace

std::vector<WeylElement> kostant_representatives(const RootDatum& rd,
                                                 const LeviSubsystem& M) {
    std::vector<WeylElement> W = weyl_group(rd);
    std::vector<WeylElement> WM = weyl_subgroup(rd, M.root_indices);
    std::map<WeylElement, std::vector<WeylElement>> cosets;
    for (const WeylElement& w : W) cosets[coset_id(WM, w)].push_back(w);
    std::vector<WeylElement> reps;
    for (auto& [id, members] : cosets) {
        int best = -1, best_len = -1, min_count = 0;
        for (size_t i = 0; i < members.size(); ++i) {
            int l = finite_length(rd, members[i]);
            if (best < 0 || l < best_len) {
                best = static_cast<int>(i);
                best_len = l;
                min_count = 1;
            } else if (l == best_len) {
                ++min_count;
            }
        }
        if (min_count != 1)
            throw Error("minimal coset representative not unique");
        reps.push_back(members[best]);
    }
    return reps;  // map order = canonical order of coset ids
}

IwasawaFiberReport iwasawa_fiber_check(const RootDatum& rd,
                                       const LeviSubsystem& M,
                                       const std::vector<int>& phi_prime) {
    std::vector<WeylElement> W = weyl_group(rd);
    std::vector<WeylElement> WM = weyl_subgroup(rd, M.root_indices);
    std::vector<WeylElement> Wp = weyl_subgroup(rd, phi_prime);
    // W_{M'} = W' intersect W_M.
    std::set<WeylElement> WMset(WM.begin(), WM.end());
    std::vector<WeylElement> WMp;
    for (const WeylElement& w : Wp)
        if (WMset.count(w)) WMp.push_back(w);
    // Coset representatives of W_{M'} \ W'.
    std::set<WeylElement> seen;
    std::vector<WeylElement> prime_reps;
    for (const WeylElement& w : Wp)
        if (seen.insert(coset_id(WMp, w)).second) {
            // Minimal-length representative of this coset.
            WeylElement best = w;
            int bl = finite_length(rd, w);
            for (const WeylElement& m : WMp) {
                WeylElement x = m * w;
                int l = finite_length(rd, x);
                if (l < bl || (l == bl && x < best)) { best = x; bl = l; }
            }
            prime_reps.push_back(best);
        }
    // Kostant representatives of W_M \ W, addressable by coset id.
    std::vector<WeylElement> kost = kostant_representatives(rd, M);
    std::map<WeylElement, WeylElement> rep_of;  // coset id -> Kostant rep
    for (const WeylElement& k : kost) rep_of.emplace(coset_id(WM, k), k);

    std::map<std::pair<WeylElement, WeylElement>, long> hits;
    for (const WeylElement& w1 : W)
        for (const WeylElement& wp : prime_reps) {
            WeylElement x = wp * w1;
            WeylElement id = coset_id(WM, x);
            WeylElement wdot = rep_of.at(id);
            WeylElement wm = x * wdot.inverse();
            hits[{id, wm}] += 1;
        }
    IwasawaFiberReport rep;
    rep.expected_fiber = static_cast<long>(prime_reps.size());
    rep.domain_size = static_cast<long>(W.size() * prime_reps.size());
    rep.image_size = static_cast<long>(hits.size());
    long target = static_cast<long>(kost.size() * WM.size());
    rep.surjective = rep.image_size == target;
    rep.fibers_uniform = true;
    for (const auto& [key, count] : hits)
        if (count != rep.expected_fiber) rep.fibers_uniform = false;
    return rep;
}

namespace {

// Basis (columns) of {v in X-check tensor Q : <alpha, v> = 0 for the
// given roots}, as a saturated sublattice of X-check.
IntMat perp_space(const RootDatum& rd, const std::vector<int>& root_set) {
    IntMat A(static_cast<int>(root_set.size()), rd.rank);
    for (size_t i = 0; i < root_set.size(); ++i)
        for (int j = 0; j < rd.rank; ++j) A(static_cast<int>(i), j) =
            rd.roots[root_set[i]](j);
    if (root_set.empty()) return IntMat::Identity(rd.rank, rd.rank);
    return integer_kernel(A);
}

}  // namespace

LeviSubsystem minimal_levi_containing(const RootDatum& rd,
                                      const std::vector<int>& phi_prime) {
    IntMat V = perp_space(rd, phi_prime);
    LeviSubsystem M;
    for (size_t k = 0; k < rd.roots.size(); ++k) {
        bool vanishes = true;
        for (int c = 0; c < V.cols(); ++c)
            if (pairing(rd.roots[k], IntVec(V.col(c))) != 0) vanishes = false;
        if (vanishes) M.root_indices.push_back(static_cast<int>(k));
    }
    return M;
}

bool is_elliptic_subsystem(const RootDatum& rd,
                           const std::vector<int>& phi_prime) {
    return perp_space(rd, phi_prime).cols() ==
           perp_space(rd, rd.all_root_indices()).cols();
}

std::vector<BigInt> lambda_group(const RootDatum& rd) {
    IntMat K = perp_space(rd, rd.all_root_indices());  // X-check(A_G)
    IntMat B(rd.rank, static_cast<int>(rd.coroots.size()) +
                          static_cast<int>(K.cols()));
    for (size_t j = 0; j < rd.coroots.size(); ++j)
        B.col(static_cast<int>(j)) = rd.coroots[j];
    B.rightCols(K.cols()) = K;
    return quotient_structure(B).torsion;
}

namespace {

IntMat span_matrix(const std::vector<IntVec>& vecs, int rank) {
    IntMat A(rank, static_cast<int>(vecs.size()));
    for (size_t j = 0; j < vecs.size(); ++j)
        A.col(static_cast<int>(j)) = vecs[j];
    return A;
}

}  // namespace

CenterInfo center_scheme_info(const RootDatum& rd) {
    CenterInfo info;
    info.z_is_torus = quotient_is_free(span_matrix(rd.roots, rd.rank));
    info.derived_sc = quotient_is_free(span_matrix(rd.coroots, rd.rank));
    return info;
}

namespace {

// Integer coordinates of v in the basis given by the columns of B.
IntVec integer_coords(const std::vector<IntVec>& basis, const IntVec& v) {
    const int n = static_cast<int>(v.size());
    RatMat A(n, static_cast<int>(basis.size()));
    for (size_t j = 0; j < basis.size(); ++j)
        for (int i = 0; i < n; ++i) A(i, j) = Rational(basis[j](i));
    RatVec b(n), x;
    for (int i = 0; i < n; ++i) b(i) = Rational(v(i));
    if (!solve_linear(A, b, x)) throw Error("vector outside lattice span");
    IntVec r(x.size());
    for (int i = 0; i < x.size(); ++i) {
        if (boost::multiprecision::denominator(x(i)) != 1)
            throw Error("vector has non-integer lattice coordinates");
        r(i) = boost::multiprecision::numerator(x(i));
    }
    return r;
}

IntMat unimodular_inverse(const IntMat& U) {
    const int n = static_cast<int>(U.rows());
    RatMat A(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = Rational(U(i, j));
    IntMat inv(n, n);
    for (int c = 0; c < n; ++c) {
        RatVec b = RatVec::Zero(n), x;
        b(c) = 1;
        if (!solve_linear(A, b, x)) throw Error("matrix not invertible");
        for (int i = 0; i < n; ++i) {
            if (boost::multiprecision::denominator(x(i)) != 1)
                throw Error("matrix not unimodular");
            inv(i, c) = boost::multiprecision::numerator(x(i));
        }
    }
    return inv;
}

}  // namespace

SurgeryResult datum_surgery(const RootDatum& rd, SurgeryMode mode) {
    SurgeryResult res;
    CenterInfo info = center_scheme_info(rd);
    const bool satisfied = (mode == SurgeryMode::z_extension)
                               ? info.derived_sc
                               : info.z_is_torus;
    const int n = rd.rank;
    if (satisfied) {
        res.datum = rd;
        res.already_satisfied = true;
        res.map = IntMat::Identity(n, n);
        res.kernel_basis = IntMat(n, 0);
        res.sequences_exact = true;
        return res;
    }
    const int r = static_cast<int>(rd.simple.size());
    const int n1 = n + r;
    std::vector<IntVec> simple_basis;
    for (int s : rd.simple)
        simple_basis.push_back(mode == SurgeryMode::z_extension
                                   ? rd.coroots[s]
                                   : rd.roots[s]);
    std::vector<RootPair> pairs;
    std::vector<bool> pos, simp;
    for (size_t k = 0; k < rd.roots.size(); ++k) {
        IntVec root1 = IntVec::Zero(n1), coroot1 = IntVec::Zero(n1);
        root1.head(n) = rd.roots[k];
        coroot1.head(n) = rd.coroots[k];
        if (mode == SurgeryMode::z_extension) {
            // Coroots pick up the coordinates in the simple-coroot basis;
            // Z Phi1-check then visibly extends to a basis of X1-check.
            coroot1.tail(r) = integer_coords(simple_basis, rd.coroots[k]);
        } else {
            root1.tail(r) = integer_coords(simple_basis, rd.roots[k]);
        }
        pairs.push_back({root1, coroot1});
        pos.push_back(rd.is_positive(static_cast<int>(k)));
        bool is_simple = std::find(rd.simple.begin(), rd.simple.end(),
                                   static_cast<int>(k)) != rd.simple.end();
        simp.push_back(is_simple);
    }
    res.datum = assemble(rd.name + (mode == SurgeryMode::z_extension
                                        ? "_zext"
                                        : "_ctor"),
                         n1, pairs, pos, simp);
    ValidationReport v = validate(res.datum);
    if (!v.valid) throw Error("surgery produced an invalid datum");

    res.sequences_exact = true;
    if (mode == SurgeryMode::z_extension) {
        // 0 -> Z^r -> X1 -> X -> 0 with the projection onto the X block.
        res.map = IntMat::Zero(n, n1);
        res.map.leftCols(n) = IntMat::Identity(n, n);
        res.kernel_basis = IntMat::Zero(n1, r);
        res.kernel_basis.bottomRows(r) = IntMat::Identity(r, r);
        // Exactness: the map is surjective, the kernel basis is saturated
        // and spans exactly ker(map).
        if (!quotient_is_free(res.kernel_basis)) res.sequences_exact = false;
        IntMat comp = res.map * res.kernel_basis;
        if (!comp.isZero()) res.sequences_exact = false;
        if (lattice_rank(res.kernel_basis) != n1 - n)
            res.sequences_exact = false;
        SmithResult snf = smith_normal_form(res.map);
        for (int i = 0; i < n; ++i)
            if (snf.S(i, i) != 1) res.sequences_exact = false;
        // Goal of the surgery: derived group simply connected.
        if (!center_scheme_info(res.datum).derived_sc)
            res.sequences_exact = false;
        // Roots transported: map sends each new root to an old root.
        for (const IntVec& root1 : res.datum.roots) {
            IntVec img = IntVec::Zero(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n1; ++j) img(i) += res.map(i, j) * root1(j);
            if (rd.root_index(img) < 0) res.sequences_exact = false;
        }
    } else {
        // X1 = Z Phi1 (+) complement; the complement is the character
        // lattice of the central torus. Read the complement off the SNF
        // of the root matrix: X1 / Z Phi1 is free, so the non-pivot
        // columns of U^{-1} give a complement.
        IntMat A = span_matrix(res.datum.roots, n1);
        SmithResult snf = smith_normal_form(A);
        int rank = 0;
        for (int i = 0; i < std::min(snf.S.rows(), snf.S.cols()); ++i)
            if (snf.S(i, i) != 0) ++rank;
        if (!quotient_is_free(A)) throw Error("surgery failed to free X/ZPhi");
        IntMat Uinv = unimodular_inverse(snf.U);
        res.map = Uinv.rightCols(n1 - rank);
        res.kernel_basis = IntMat(n1, 0);
        // Exactness: complement + root lattice fill X1 with no torsion.
        IntMat both(n1, static_cast<int>(A.cols()) + res.map.cols());
        both.leftCols(A.cols()) = A;
        both.rightCols(res.map.cols()) = res.map;
        QuotientInfo q = quotient_structure(both);
        if (!q.torsion.empty() || q.free_rank != 0)
            res.sequences_exact = false;
        if (!center_scheme_info(res.datum).z_is_torus)
            res.sequences_exact = false;
    }
    return res;
}

}  // namespace workbench
