#include "workbench/rootdata.hpp"

#include <doctest.h>
#include <algorithm>
#include <map>
#include <set>

using namespace workbench;

namespace {
IntVec iv(std::initializer_list<long> vals) {
    IntVec v(static_cast<int>(vals.size()));
    int i = 0;
    for (long x : vals) v(i++) = x;
    return v;
}
}  // namespace

TEST_CASE("presets validate with expected sizes") {
    const std::map<std::string, std::pair<size_t, size_t>> expect = {
        // name -> (number of roots, Weyl group order)
        {"SL2", {2, 2}},  {"PGL2", {2, 2}}, {"GL2", {2, 2}},
        {"SL3", {6, 6}},  {"GL3", {6, 6}},  {"C2", {8, 8}},
        {"G2", {12, 12}},
    };
    for (const std::string& name : preset_names()) {
        RootDatum rd = preset(name);
        CAPTURE(name);
        ValidationReport rep = validate(rd);
        CHECK(rep.valid);
        CHECK(rd.roots.size() == expect.at(name).first);
        CHECK(weyl_group(rd).size() == expect.at(name).second);
        CHECK(rd.positive.size() * 2 == rd.roots.size());
    }
}

TEST_CASE("validate rejects a broken datum") {
    RootDatum rd = preset("SL2");
    rd.coroots[0] = iv({3});  // pairing becomes 6 or -2
    ValidationReport rep = validate(rd);
    CHECK(!rep.valid);
    bool pairing_flagged = false;
    for (const std::string& v : rep.violations)
        if (v.find("pairing != 2") != std::string::npos) pairing_flagged = true;
    CHECK(pairing_flagged);
}

TEST_CASE("finite length") {
    for (const std::string& name : preset_names()) {
        RootDatum rd = preset(name);
        std::vector<WeylElement> W = weyl_group(rd);
        int longest = 0;
        for (const WeylElement& w : W) {
            int l = finite_length(rd, w);
            CHECK(l == finite_length(rd, w.inverse()));
            longest = std::max(longest, l);
        }
        CHECK(longest == static_cast<int>(rd.positive.size()));
        CHECK(finite_length(rd, WeylElement::identity(rd.rank)) == 0);
    }
    // s1 s2 in A2 has length 2.
    RootDatum gl3 = preset("GL3");
    WeylElement s1 = reflection(gl3, gl3.root_index(iv({1, -1, 0})));
    WeylElement s2 = reflection(gl3, gl3.root_index(iv({0, 1, -1})));
    CHECK(finite_length(gl3, s1 * s2) == 2);
}

TEST_CASE("kostant representatives") {
    RootDatum gl3 = preset("GL3");
    LeviSubsystem full = levi_from_span(gl3, gl3.positive);
    CHECK(kostant_representatives(gl3, full).size() == 1);
    CHECK(kostant_representatives(gl3, full)[0].is_identity());

    LeviSubsystem torus;  // empty
    std::vector<WeylElement> all = kostant_representatives(gl3, torus);
    CHECK(all.size() == 6);

    LeviSubsystem A1;
    A1.root_indices = {gl3.root_index(iv({1, -1, 0})),
                       gl3.root_index(iv({-1, 1, 0}))};
    std::vector<WeylElement> reps = kostant_representatives(gl3, A1);
    std::multiset<int> lengths;
    for (const WeylElement& w : reps) lengths.insert(finite_length(gl3, w));
    CHECK(lengths == std::multiset<int>{0, 1, 2});
}

TEST_CASE("kostant factorization is unique; additivity on standard levis") {
    for (const std::string& name : {"GL3", "C2"}) {
        RootDatum rd = preset(name);
        std::vector<WeylElement> W = weyl_group(rd);
        for (const LeviSubsystem& M : all_levis(rd)) {
            std::vector<WeylElement> WM = weyl_subgroup(rd, M.root_indices);
            std::vector<WeylElement> reps = kostant_representatives(rd, M);
            bool standard = is_standard_levi(rd, M);
            std::set<WeylElement> seen;
            for (const WeylElement& wm : WM)
                for (const WeylElement& rep : reps) {
                    WeylElement w = wm * rep;
                    CHECK(seen.insert(w).second);  // unique factorization
                    if (standard)
                        CHECK(finite_length(rd, w) ==
                              finite_length(rd, wm) + finite_length(rd, rep));
                }
            CHECK(seen.size() == W.size());
        }
    }
    // Ambient-length additivity genuinely fails for a non-standard Levi:
    // GL3, M = {+-(e1-e3)}, w = s13 * s12 has length 2, not 3 + 1.
    RootDatum gl3 = preset("GL3");
    LeviSubsystem M = levi_from_span(gl3, {gl3.root_index(iv({1, 0, -1}))});
    CHECK(!is_standard_levi(gl3, M));
    WeylElement s13 = reflection(gl3, gl3.root_index(iv({1, 0, -1})));
    WeylElement s12 = reflection(gl3, gl3.root_index(iv({1, -1, 0})));
    std::vector<WeylElement> reps = kostant_representatives(gl3, M);
    CHECK(std::find(reps.begin(), reps.end(), s12) != reps.end());
    CHECK(finite_length(gl3, s13 * s12) == 2);
    CHECK(finite_length(gl3, s13) + finite_length(gl3, s12) == 4);
}

TEST_CASE("iwasawa fiber check") {
    RootDatum gl3 = preset("GL3");
    LeviSubsystem torus;
    IwasawaFiberReport r = iwasawa_fiber_check(gl3, torus, {});
    CHECK(r.surjective);
    CHECK(r.fibers_uniform);
    CHECK(r.expected_fiber == 1);

    std::vector<int> a1 = {gl3.root_index(iv({1, -1, 0})),
                           gl3.root_index(iv({-1, 1, 0}))};
    LeviSubsystem M;
    M.root_indices = a1;
    r = iwasawa_fiber_check(gl3, M, a1);
    CHECK(r.surjective);
    CHECK(r.fibers_uniform);
    CHECK(r.expected_fiber == 1);

    RootDatum c2 = preset("C2");
    std::vector<int> short_a1a1 = {
        c2.root_index(iv({1, -1})), c2.root_index(iv({-1, 1})),
        c2.root_index(iv({1, 1})), c2.root_index(iv({-1, -1}))};
    for (int i : short_a1a1) CHECK(i >= 0);
    // M the standard A1 Levi of e1-e2: W_{M'} = W' ∩ W_M has index 2 in W',
    // so every fiber has two elements (brute force over 8 x 2 pairs).
    LeviSubsystem Ma1 = levi_from_span(c2, {c2.root_index(iv({1, -1}))});
    r = iwasawa_fiber_check(c2, Ma1, short_a1a1);
    CHECK(r.surjective);
    CHECK(r.fibers_uniform);
    CHECK(r.expected_fiber == 2);
    CHECK(r.domain_size == 16);
    // M = G: W_{M'} = W', a bijection.
    LeviSubsystem Mfull = levi_from_span(c2, c2.positive);
    r = iwasawa_fiber_check(c2, Mfull, short_a1a1);
    CHECK(r.surjective);
    CHECK(r.fibers_uniform);
    CHECK(r.expected_fiber == 1);
}

TEST_CASE("minimal levi and ellipticity") {
    RootDatum gl3 = preset("GL3");
    std::vector<int> a1 = {gl3.root_index(iv({1, -1, 0})),
                           gl3.root_index(iv({-1, 1, 0}))};
    LeviSubsystem M = minimal_levi_containing(gl3, a1);
    std::vector<int> sorted_a1 = a1;
    std::sort(sorted_a1.begin(), sorted_a1.end());
    CHECK(M.root_indices == sorted_a1);
    CHECK(!is_elliptic_subsystem(gl3, a1));

    RootDatum c2 = preset("C2");
    std::vector<int> short_a1a1 = {
        c2.root_index(iv({1, -1})), c2.root_index(iv({-1, 1})),
        c2.root_index(iv({1, 1})), c2.root_index(iv({-1, -1}))};
    LeviSubsystem Mc = minimal_levi_containing(c2, short_a1a1);
    CHECK(Mc.root_indices.size() == c2.roots.size());
    CHECK(is_elliptic_subsystem(c2, short_a1a1));

    for (const std::string& name : preset_names()) {
        RootDatum rd = preset(name);
        CHECK(is_elliptic_subsystem(rd, rd.all_root_indices()));
        LeviSubsystem torus = minimal_levi_containing(rd, {});
        CHECK(torus.root_indices.empty());
    }
}

TEST_CASE("lambda group") {
    CHECK(lambda_group(preset("SL2")).empty());
    CHECK(lambda_group(preset("GL2")) == std::vector<BigInt>{2});
    CHECK(lambda_group(preset("PGL2")) == std::vector<BigInt>{2});
}

TEST_CASE("center scheme info") {
    CenterInfo gl2 = center_scheme_info(preset("GL2"));
    CHECK(gl2.z_is_torus);
    CHECK(gl2.derived_sc);
    CenterInfo sl2 = center_scheme_info(preset("SL2"));
    CHECK(!sl2.z_is_torus);
    CHECK(sl2.derived_sc);
    CenterInfo pgl2 = center_scheme_info(preset("PGL2"));
    CHECK(pgl2.z_is_torus);
    CHECK(!pgl2.derived_sc);
    CenterInfo g2 = center_scheme_info(preset("G2"));
    CHECK(g2.z_is_torus);
    CHECK(g2.derived_sc);
}

TEST_CASE("datum surgery") {
    // PGL2 z-extension: derived group becomes simply connected.
    SurgeryResult z = datum_surgery(preset("PGL2"), SurgeryMode::z_extension);
    CHECK(!z.already_satisfied);
    CHECK(z.sequences_exact);
    CHECK(z.datum.rank == 2);
    CHECK(validate(z.datum).valid);
    CHECK(center_scheme_info(z.datum).derived_sc);

    // SL2 center-torus extension: X1 / Z Phi1 becomes free.
    SurgeryResult c = datum_surgery(preset("SL2"), SurgeryMode::center_torus);
    CHECK(!c.already_satisfied);
    CHECK(c.sequences_exact);
    CHECK(validate(c.datum).valid);
    CHECK(center_scheme_info(c.datum).z_is_torus);
    // The central-torus character lattice has rank 1 here (GL2 shape).
    CHECK(c.map.cols() == 1);

    // GL2: both modes are no-ops.
    for (SurgeryMode m : {SurgeryMode::z_extension, SurgeryMode::center_torus}) {
        SurgeryResult s = datum_surgery(preset("GL2"), m);
        CHECK(s.already_satisfied);
        CHECK(s.sequences_exact);
        CHECK(s.datum.roots == preset("GL2").roots);
    }

    // Pairing pattern preserved by surgery: pairing of the transported
    // pairs equals the pairing of their images in the original lattices.
    for (const std::string& name : {"PGL2", "SL2", "SL3"}) {
        RootDatum rd = preset(name);
        for (SurgeryMode m :
             {SurgeryMode::z_extension, SurgeryMode::center_torus}) {
            SurgeryResult s = datum_surgery(rd, m);
            REQUIRE(s.datum.roots.size() == rd.roots.size());
            for (size_t i = 0; i < s.datum.roots.size(); ++i)
                for (size_t j = 0; j < s.datum.coroots.size(); ++j) {
                    IntVec a = s.datum.roots[i].head(rd.rank);
                    IntVec b = s.datum.coroots[j].head(rd.rank);
                    CHECK(pairing(s.datum.roots[i], s.datum.coroots[j]) ==
                          pairing(a, b));
                }
        }
    }
}

TEST_CASE("weyl elements act consistently on both lattices") {
    for (const std::string& name : preset_names()) {
        RootDatum rd = preset(name);
        for (const WeylElement& w : weyl_group(rd)) {
            // <w x, w y> = <x, y> on all root/coroot pairs.
            for (size_t i = 0; i < rd.roots.size(); ++i)
                for (size_t j = 0; j < rd.coroots.size(); ++j)
                    CHECK(pairing(w.act_x(rd.roots[i]),
                                  w.act_xcheck(rd.coroots[j])) ==
                          pairing(rd.roots[i], rd.coroots[j]));
            // w permutes roots and coroots compatibly.
            for (size_t i = 0; i < rd.roots.size(); ++i) {
                int img = rd.root_index(w.act_x(rd.roots[i]));
                REQUIRE(img >= 0);
                CHECK(rd.coroots[img] == w.act_xcheck(rd.coroots[i]));
            }
        }
    }
}
