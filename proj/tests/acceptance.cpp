// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <iostream>
#include <random>
#include <set>

#include "workbench/cli.hpp"
#include "workbench/hecke.hpp"

using namespace workbench;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok) {
    std::cout << "criterion " << number << " (" << name << "): "
              << (ok ? "pass" : "FAIL") << "\n";
    if (!ok) ++failures;
}

IntVec vec(std::initializer_list<long> xs) {
    IntVec v(static_cast<int>(xs.size()));
    int i = 0;
    for (long x : xs) v(i++) = x;
    return v;
}

struct Config {
    EndoscopicDatum endo;
    DepthZeroCharacter psi_nontrivial;
};

// The three reference configurations.
std::vector<Config> configs() {
    std::vector<Config> out;
    out.push_back({endoscopic_datum(preset("SL2"), make_character(4, vec({2}))),
                   make_character(4, vec({1}))});
    out.push_back(
        {endoscopic_datum(preset("C2"), make_character(4, vec({2, 2}))),
         make_character(4, vec({1, 0}))});
    out.push_back(
        {endoscopic_datum(preset("GL3"), make_character(6, vec({0, 0, 2}))),
         make_character(6, vec({1, 0, 0}))});
    return out;
}

std::vector<IntVec> dominant_box(const RootDatum& rd, long bound) {
    std::vector<IntVec> frontier{IntVec(0)};
    for (int i = 0; i < rd.rank; ++i) {
        std::vector<IntVec> next;
        for (const IntVec& p : frontier)
            for (long x = -bound; x <= bound; ++x) {
                IntVec q(i + 1);
                q.head(i) = p;
                q(i) = x;
                next.push_back(q);
            }
        frontier = next;
    }
    std::vector<IntVec> out;
    for (const IntVec& nu : frontier) {
        bool ok = true;
        for (int s : rd.simple) {
            BigInt p = pairing(rd.roots[s], nu);
            if (p <= 0 || p > bound) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(nu);
    }
    return out;
}

std::vector<WeylElement> preserving(const RootDatum& rd,
                                    const std::vector<int>& phi) {
    std::set<int> sub(phi.begin(), phi.end());
    std::vector<WeylElement> out;
    for (const WeylElement& w : weyl_group(rd)) {
        bool ok = true;
        for (int i : phi)
            if (!sub.count(rd.root_index(w.act_x(rd.roots[i])))) {
                ok = false;
                break;
            }
        if (ok) out.push_back(w);
    }
    return out;
}

std::vector<WeylElement> char_stab(const RootDatum& rd,
                                   const DepthZeroCharacter& chi) {
    std::vector<WeylElement> out;
    for (const WeylElement& w : weyl_group(rd))
        if (char_act(w, chi) == chi) out.push_back(w);
    return out;
}

// 1. Quadratic relation, associativity on 200 random triples, q -> 1
// specialization against the group-algebra oracle, per configuration.
bool hecke_correctness() {
    std::mt19937 rng(101);
    for (const Config& cfg : configs()) {
        const RootDatum& rd = cfg.endo.ambient;
        long m = cfg.endo.chi0.m;
        HeckeAmbientPtr amb = make_hecke_ambient(rd, cfg.endo.phi_prime, m);
        CycloLaurent q = CycloLaurent::half_power(m, 2);
        CycloLaurent qm1 = q - CycloLaurent::one(m);
        for (const AffineRoot& a :
             min_positive_affine_roots(rd, cfg.endo.phi_prime)) {
            HeckeElement ts = basis_T(amb, affine_reflection(rd, a));
            if (hecke_multiply(ts, ts) !=
                ts.scale(qm1) + unit_element(amb).scale(q))
                return false;
        }
        std::vector<WeylElement> ws = preserving(rd, cfg.endo.phi_prime);
        std::uniform_int_distribution<size_t> widx(0, ws.size() - 1);
        std::uniform_int_distribution<long> coord(-2, 2);
        auto rand_basis = [&]() {
            ExtAffineElement e;
            e.translation = IntVec(rd.rank);
            for (int i = 0; i < rd.rank; ++i) e.translation(i) = coord(rng);
            e.finite = ws[widx(rng)];
            return basis_T(amb, e);
        };
        for (int t = 0; t < 200; ++t) {
            HeckeElement a = rand_basis(), b = rand_basis(),
                         c = rand_basis();
            HeckeElement ab = hecke_multiply(a, b);
            if (hecke_multiply(ab, c) != hecke_multiply(a, hecke_multiply(b, c)))
                return false;
            if (specialize_q_one(ab) !=
                group_multiply(specialize_q_one(a), specialize_q_one(b)))
                return false;
        }
    }
    return true;
}

// 2. W_chi0 = W' x| C_chi0 on 500 random characters per preset, and the
// wall count of each irreducible component is its rank + 1.
bool structure_decompositions() {
    std::mt19937 rng(202);
    for (const std::string& name : preset_names()) {
        RootDatum rd = preset(name);
        if (rd.rank > 3) continue;
        for (int t = 0; t < 500; ++t) {
            long m = 2 + (t % 5);
            IntVec c(rd.rank);
            for (int i = 0; i < rd.rank; ++i)
                c(i) = std::uniform_int_distribution<long>(0, m - 1)(rng);
            DepthZeroCharacter chi0 = make_character(m, c);
            stabilizer_groups(rd, chi0);  // throws on violation
            std::vector<int> phi = endoscopic_subsystem(rd, chi0);
            std::vector<std::vector<int>> comps =
                subsystem_components(rd, phi);
            std::vector<AffineRoot> gens =
                min_positive_affine_roots(rd, phi);
            size_t expect = 0;
            for (const std::vector<int>& comp : comps)
                expect += comp.size() + 1;
            if (gens.size() != expect) return false;
        }
    }
    return true;
}

// 3. Exact matching identity over the dominant box, trivial and
// nontrivial psi0.
bool matching_theorem() {
    for (const Config& cfg : configs()) {
        const RootDatum& rd = cfg.endo.ambient;
        DepthZeroCharacter triv =
            make_character(cfg.endo.chi0.m, IntVec::Zero(rd.rank));
        std::vector<IntVec> box = dominant_box(rd, 3);
        if (box.empty()) return false;
        for (const IntVec& nu : box) {
            if (!matching_check(cfg.endo, triv, nu).pass) return false;
            if (!matching_check(cfg.endo, cfg.psi_nontrivial, nu).pass)
                return false;
        }
    }
    return true;
}

// 4. Regular case: the spectral transfer read as profiles equals the
// orbital side.
bool regular_case() {
    std::vector<EndoscopicDatum> endos{
        endoscopic_datum(preset("SL2"), make_character(4, vec({1}))),
        endoscopic_datum(preset("GL2"), make_character(4, vec({1, 0})))};
    for (const EndoscopicDatum& endo : endos) {
        const RootDatum& rd = endo.ambient;
        DepthZeroCharacter triv = make_character(4, IntVec::Zero(rd.rank));
        for (const IntVec& nu : dominant_box(rd, 3))
            if (!regular_case_crosscheck(endo, triv, nu).pass) return false;
    }
    return true;
}

// 5. bold_zeta block count against brute-forced double cosets.
bool block_decomposition() {
    std::mt19937 rng(505);
    for (const std::string& name : preset_names()) {
        RootDatum rd = preset(name);
        if (rd.rank > 3) continue;
        for (long m : {2L, 4L}) {
            IntVec c(rd.rank);
            for (int i = 0; i < rd.rank; ++i)
                c(i) = std::uniform_int_distribution<long>(0, m - 1)(rng);
            DepthZeroCharacter chi0 = make_character(m, c);
            EndoscopicDatum endo = endoscopic_datum(rd, chi0);
            DepthZeroCharacter triv = make_character(m, IntVec::Zero(rd.rank));
            std::vector<WeylElement> stab = char_stab(rd, chi0);
            CenterElement f = make_center_element(
                endo, triv, orbit_sum(m, IntVec::Zero(rd.rank), stab));
            TransferPackage pkg = bold_zeta(endo, triv, f);
            std::set<WeylElement> seen;
            long cosets = 0;
            for (const WeylElement& w : weyl_group(rd)) {
                if (seen.count(w)) continue;
                ++cosets;
                for (const WeylElement& l : endo.groups.w_prime)
                    for (const WeylElement& r : stab) seen.insert(l * w * r);
            }
            if (static_cast<long>(pkg.entries.size()) != cosets)
                return false;
        }
    }
    return true;
}

// 6. Diagram identities on 100 random orbit-sum polynomials per preset.
bool diagram_identities() {
    std::mt19937 rng(606);
    for (const Config& cfg : configs()) {
        const RootDatum& rd = cfg.endo.ambient;
        long m = cfg.endo.chi0.m;
        DepthZeroCharacter triv = make_character(m, IntVec::Zero(rd.rank));
        std::vector<WeylElement> W = weyl_group(rd);
        std::vector<WeylElement> stab = char_stab(rd, cfg.endo.chi0);
        std::uniform_int_distribution<size_t> widx(0, W.size() - 1);
        std::uniform_int_distribution<long> coord(-2, 2);
        for (int t = 0; t < 100; ++t) {
            IntVec nu(rd.rank);
            for (int i = 0; i < rd.rank; ++i) nu(i) = coord(rng);
            CenterElement f = make_center_element(
                cfg.endo, triv, orbit_sum(m, nu, stab));
            const WeylElement& w = W[widx(rng)];
            const WeylElement& wp =
                cfg.endo.groups.w_prime[t % cfg.endo.groups.w_prime.size()];
            const WeylElement& w0 = stab[t % stab.size()];
            if (!diagram_check(cfg.endo, triv,
                               DiagramRelation::conj_left_w_prime, f, w, wp))
                return false;
            if (!diagram_check(cfg.endo, triv,
                               DiagramRelation::conj_right_w_chi0, f, w, w0))
                return false;
            if (!diagram_check(cfg.endo, triv,
                               DiagramRelation::brace_composition, f, w, w0))
                return false;
        }
    }
    return true;
}

// 7. Kostant length-additivity (standard Levis) and fiber uniformity for
// every Levi of GL3 and C2.
bool descent_combinatorics() {
    for (const Config& cfg : configs()) {
        const RootDatum& rd = cfg.endo.ambient;
        if (rd.name == "SL2") continue;
        for (const LeviSubsystem& M : all_levis(rd)) {
            std::vector<WeylElement> reps = kostant_representatives(rd, M);
            std::vector<WeylElement> wm = weyl_subgroup(rd, M.root_indices);
            if (reps.size() * wm.size() != weyl_group(rd).size())
                return false;
            if (is_standard_levi(rd, M))
                for (const WeylElement& a : wm)
                    for (const WeylElement& r : reps)
                        if (finite_length(rd, a * r) !=
                            finite_length(rd, a) + finite_length(rd, r))
                            return false;
            IwasawaFiberReport ir =
                iwasawa_fiber_check(rd, M, cfg.endo.phi_prime);
            if (!ir.surjective || !ir.fibers_uniform) return false;
        }
    }
    return true;
}

// 8. Lambda groups and datum surgery.
bool surgery_and_lambda() {
    auto lambda_is = [](const std::string& name,
                        const std::vector<long>& expect) {
        std::vector<BigInt> got = lambda_group(preset(name));
        if (got.size() != expect.size()) return false;
        for (size_t i = 0; i < got.size(); ++i)
            if (got[i] != expect[i]) return false;
        return true;
    };
    if (!lambda_is("GL2", {2})) return false;
    if (!lambda_is("PGL2", {2})) return false;
    if (!lambda_is("SL2", {})) return false;

    SurgeryResult z = datum_surgery(preset("PGL2"), SurgeryMode::z_extension);
    if (!z.sequences_exact) return false;
    IntMat coroots(z.datum.rank, static_cast<int>(z.datum.coroots.size()));
    for (size_t j = 0; j < z.datum.coroots.size(); ++j)
        coroots.col(static_cast<int>(j)) = z.datum.coroots[j];
    if (!quotient_is_free(coroots)) return false;

    SurgeryResult c = datum_surgery(preset("SL2"), SurgeryMode::center_torus);
    if (!c.sequences_exact) return false;
    IntMat roots(c.datum.rank, static_cast<int>(c.datum.roots.size()));
    for (size_t j = 0; j < c.datum.roots.size(); ++j)
        roots.col(static_cast<int>(j)) = c.datum.roots[j];
    return quotient_is_free(roots);
}

// 9. Inversion count vs closed formula on 1000 random pairs, plus the
// frozen GL3 uniformity counterexample.
bool length_audit() {
    std::mt19937 rng(909);
    for (const Config& cfg : configs()) {
        const RootDatum& rd = cfg.endo.ambient;
        std::vector<WeylElement> ws = preserving(rd, cfg.endo.phi_prime);
        std::uniform_int_distribution<size_t> widx(0, ws.size() - 1);
        std::uniform_int_distribution<long> coord(-3, 3);
        for (int t = 0; t < 1000; ++t) {
            IntVec nu(rd.rank);
            for (int i = 0; i < rd.rank; ++i) nu(i) = coord(rng);
            const WeylElement& w = ws[widx(rng)];
            ExtAffineElement sigma = ExtAffineElement::translation_of(nu);
            sigma.finite = w;
            if (affine_length(rd, cfg.endo.phi_prime, sigma,
                              LengthSystem::prime) !=
                translation_length_closed_form(rd, cfg.endo.phi_prime, nu,
                                               w))
                return false;
        }
    }
    EndoscopicDatum gl3 = configs()[2].endo;
    WeylElement s23 = reflection(
        gl3.ambient, gl3.ambient.root_index(vec({0, 1, -1})));
    LengthInvarianceReport r = check_translation_length_w_invariance(
        gl3.ambient, gl3.phi_prime, vec({2, 1, 0}), s23);
    return !r.equal && r.l_nu == 1 && r.l_w_nu == 2;
}

// 10. Byte-identical reports across repeated runs and thread counts.
bool determinism() {
    std::string prob = R"({
        "root_datum": "C2", "q": 5,
        "characters": {"chi0": [2, 2], "psi0": [1, 0]},
        "tasks": [
            {"type": "inspect"},
            {"type": "endoscopy", "chi0": "chi0"},
            {"type": "hecke-mul", "chi0": "chi0",
             "factors": [{"alcove_word": [0, 1]}, {"translation": [1, 0]}]},
            {"type": "center-transfer", "chi0": "chi0", "nu": [2, 1]},
            {"type": "elementary-match", "chi0": "chi0", "psi0": "psi0"},
            {"type": "descent-check", "chi0": "chi0"},
            {"type": "length-audit", "chi0": "chi0", "trials": 300},
            {"type": "surgery", "mode": "z_extension"},
            {"type": "surgery", "mode": "center_torus"}
        ]
    })";
    RunOptions a;
    a.no_timestamp = true;
    RunOptions b = a;
    b.threads = 4;
    RunResult ra = run_problem(prob, a);
    RunResult rb = run_problem(prob, b);
    RunResult rc = run_problem(prob, a);
    return ra.exit_code == 0 && ra.report == rb.report &&
           ra.report == rc.report;
}

}  // namespace

int main() {
    report(1, "hecke correctness", hecke_correctness());
    report(2, "structure decompositions", structure_decompositions());
    report(3, "matching at torus points", matching_theorem());
    report(4, "regular case end-to-end", regular_case());
    report(5, "block decomposition", block_decomposition());
    report(6, "diagram identities", diagram_identities());
    report(7, "descent combinatorics", descent_combinatorics());
    report(8, "surgery and lambda", surgery_and_lambda());
    report(9, "length audit", length_audit());
    report(10, "determinism", determinism());
    return failures == 0 ? 0 : 1;
}
