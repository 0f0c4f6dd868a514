#include "workbench/cli.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <random>
#include <set>
#include <thread>

#include "json.hpp"
#include "workbench/hecke.hpp"

namespace workbench {
namespace {

using nlohmann::json;

json vec_to_json(const IntVec& v) {
    json a = json::array();
    for (int i = 0; i < v.size(); ++i)
        a.push_back(static_cast<long>(v(i)));
    return a;
}

IntVec vec_from_json(const json& a, int expect) {
    if (!a.is_array() || (expect >= 0 && static_cast<int>(a.size()) != expect))
        throw Error("expected a lattice vector of length " +
                    std::to_string(expect));
    IntVec v(static_cast<int>(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        v(static_cast<int>(i)) = a[i].get<long>();
    return v;
}

json rational_to_json(const Rational& r) { return r.str(); }

json cyclo_to_json(const Cyclotomic& c) {
    json a = json::array();
    for (const Rational& r : c.coeffs()) a.push_back(rational_to_json(r));
    return a;
}

json laurent_to_json(const CycloLaurent& c) {
    json a = json::array();
    for (const auto& [k, x] : c.terms())
        a.push_back(json{{"v_exp", k}, {"coeff", cyclo_to_json(x)}});
    return a;
}

json poly_to_json(const DualTorusPoly& p) {
    json a = json::array();
    for (const auto& [nu, c] : p.terms)
        a.push_back(json{{"monomial", vec_to_json(nu)},
                         {"coeff", laurent_to_json(c)}});
    return a;
}

json matrix_to_json(const IntMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(static_cast<long>(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

struct ProblemContext {
    RootDatum rd;
    long q = 0;
    long m = 0;
    std::map<std::string, IntVec> characters;
    RunOptions opts;
};

DepthZeroCharacter task_character(const ProblemContext& ctx, const json& task,
                                  const std::string& key,
                                  bool default_zero) {
    if (!task.contains(key)) {
        if (default_zero)
            return make_character(ctx.m, IntVec::Zero(ctx.rd.rank));
        throw Error("task is missing character '" + key + "'");
    }
    const json& ref = task.at(key);
    if (ref.is_string()) {
        auto it = ctx.characters.find(ref.get<std::string>());
        if (it == ctx.characters.end())
            throw Error("unknown character '" + ref.get<std::string>() +
                        "'");
        return make_character(ctx.m, it->second);
    }
    return make_character(ctx.m, vec_from_json(ref, ctx.rd.rank));
}

std::vector<WeylElement> char_stabilizer(const RootDatum& rd,
                                         const DepthZeroCharacter& chi) {
    std::vector<WeylElement> out;
    for (const WeylElement& w : weyl_group(rd))
        if (char_act(w, chi) == chi) out.push_back(w);
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

// ---- task handlers; each returns {"status": ..., "payload": ...} ----

json task_inspect(const ProblemContext& ctx, const json&) {
    ValidationReport vr = validate(ctx.rd);
    CenterInfo ci = center_scheme_info(ctx.rd);
    json lambda = json::array();
    for (const BigInt& d : lambda_group(ctx.rd))
        lambda.push_back(d.str());
    json payload{{"valid", vr.valid},
                 {"violations", vr.violations},
                 {"z_is_torus", ci.z_is_torus},
                 {"derived_simply_connected", ci.derived_sc},
                 {"lambda_invariant_factors", lambda},
                 {"rank", ctx.rd.rank},
                 {"roots", static_cast<long>(ctx.rd.roots.size())},
                 {"weyl_order", static_cast<long>(weyl_group(ctx.rd).size())}};
    return json{{"status", vr.valid ? "pass" : "fail"},
                {"payload", payload}};
}

json task_endoscopy(const ProblemContext& ctx, const json& task) {
    DepthZeroCharacter chi0 = task_character(ctx, task, "chi0", false);
    EndoscopicDatum endo = endoscopic_datum(ctx.rd, chi0);
    json roots = json::array();
    for (int i : endo.phi_prime_positive)
        roots.push_back(vec_to_json(ctx.rd.roots[i]));
    json payload{
        {"phi_prime_positive", roots},
        {"w_prime_order", static_cast<long>(endo.groups.w_prime.size())},
        {"w_chi0_order", static_cast<long>(endo.groups.w_chi0.size())},
        {"c_chi0_order", static_cast<long>(endo.groups.c_chi0.size())},
        {"s_element", vec_to_json(endo.s_element)},
        {"s_order", endo.s_order}};
    return json{{"status", "pass"}, {"payload", payload}};
}

ExtAffineElement factor_from_json(const ProblemContext& ctx,
                                  const std::vector<AffineRoot>& gens,
                                  const json& f) {
    ExtAffineElement e = ExtAffineElement::identity(ctx.rd.rank);
    if (f.contains("translation"))
        e = ExtAffineElement::translation_of(
            vec_from_json(f.at("translation"), ctx.rd.rank));
    if (f.contains("alcove_word"))
        for (long g : f.at("alcove_word").get<std::vector<long>>()) {
            if (g < 0 || g >= static_cast<long>(gens.size()))
                throw Error("alcove_word index out of range");
            e = e * affine_reflection(ctx.rd, gens[g]);
        }
    return e;
}

json task_hecke_mul(const ProblemContext& ctx, const json& task) {
    DepthZeroCharacter chi0 = task_character(ctx, task, "chi0", true);
    std::vector<int> phi = endoscopic_subsystem(ctx.rd, chi0);
    HeckeAmbientPtr amb = make_hecke_ambient(ctx.rd, phi, ctx.m);
    std::vector<AffineRoot> gens = min_positive_affine_roots(ctx.rd, phi);
    if (!task.contains("factors")) throw Error("hecke-mul needs factors");
    HeckeElement prod = unit_element(amb);
    for (const json& f : task.at("factors"))
        prod = hecke_multiply(prod,
                              basis_T(amb, factor_from_json(ctx, gens, f)));
    bool oracle = true;
    {
        GroupAlgebraElement g = specialize_q_one(unit_element(amb));
        for (const json& f : task.at("factors"))
            g = group_multiply(
                g, specialize_q_one(
                       basis_T(amb, factor_from_json(ctx, gens, f))));
        oracle = specialize_q_one(prod) == g;
    }
    json terms = json::array();
    for (const auto& [w, c] : prod.terms)
        terms.push_back(json{{"translation", vec_to_json(w.translation)},
                             {"finite", matrix_to_json(w.finite.on_x)},
                             {"coeff", laurent_to_json(c)}});
    json payload{{"terms", terms},
                 {"support", static_cast<long>(prod.terms.size())},
                 {"q1_oracle", oracle}};
    return json{{"status", oracle ? "pass" : "fail"}, {"payload", payload}};
}

json task_center_transfer(const ProblemContext& ctx, const json& task) {
    DepthZeroCharacter chi0 = task_character(ctx, task, "chi0", false);
    DepthZeroCharacter psi0 = task_character(ctx, task, "psi0", true);
    EndoscopicDatum endo = endoscopic_datum(ctx.rd, chi0);
    IntVec nu = task.contains("nu")
                    ? vec_from_json(task.at("nu"), ctx.rd.rank)
                    : IntVec::Zero(ctx.rd.rank);
    DepthZeroCharacter base = char_add(psi0, chi0);
    CenterElement f = make_center_element(
        endo, psi0, orbit_sum(ctx.m, nu, char_stabilizer(ctx.rd, base)));
    TransferPackage pkg = xi_transfer(endo, psi0, f);
    json blocks = json::array();
    for (const auto& [label, poly] : pkg.entries)
        blocks.push_back(
            json{{"base", vec_to_json(label.base)},
                 {"stabilizer_order",
                  static_cast<long>(label.stabilizer.size())},
                 {"poly", poly_to_json(poly)}});
    json payload{{"blocks", blocks},
                 {"block_count", static_cast<long>(pkg.entries.size())}};
    return json{{"status", "pass"}, {"payload", payload}};
}

json task_elementary_match(const ProblemContext& ctx, const json& task) {
    DepthZeroCharacter chi0 = task_character(ctx, task, "chi0", false);
    DepthZeroCharacter psi0 = task_character(ctx, task, "psi0", true);
    EndoscopicDatum endo = endoscopic_datum(ctx.rd, chi0);
    long bound = task.value("nu_box", ctx.opts.nu_box);
    std::vector<IntVec> box = dominant_box(ctx.rd, bound);
    long passed = 0;
    json first_failure;
    for (const IntVec& nu : box) {
        MatchingReport r = matching_check(endo, psi0, nu);
        if (r.pass) {
            ++passed;
        } else if (first_failure.is_null()) {
            first_failure = json{{"nu", vec_to_json(nu)},
                                 {"witness", r.first_failure},
                                 {"disjoint", r.disjoint}};
        }
    }
    bool all = passed == static_cast<long>(box.size());
    json payload{{"checked", static_cast<long>(box.size())},
                 {"passed", passed}};
    if (!first_failure.is_null()) payload["first_failure"] = first_failure;
    if (box.empty())
        return json{{"status", "info"}, {"payload", payload}};
    return json{{"status", all ? "pass" : "fail"}, {"payload", payload}};
}

json task_descent_check(const ProblemContext& ctx, const json& task) {
    DepthZeroCharacter chi0 = task_character(ctx, task, "chi0", true);
    std::vector<int> phi = endoscopic_subsystem(ctx.rd, chi0);
    bool all_ok = true;
    json levis = json::array();
    for (const LeviSubsystem& M : all_levis(ctx.rd)) {
        bool standard = is_standard_levi(ctx.rd, M);
        std::vector<WeylElement> reps = kostant_representatives(ctx.rd, M);
        std::vector<WeylElement> wm = weyl_subgroup(ctx.rd, M.root_indices);
        bool additive = true;
        for (const WeylElement& a : wm)
            for (const WeylElement& r : reps)
                if (finite_length(ctx.rd, a * r) !=
                    finite_length(ctx.rd, a) + finite_length(ctx.rd, r))
                    additive = false;
        IwasawaFiberReport ir = iwasawa_fiber_check(ctx.rd, M, phi);
        bool ok = ir.surjective && ir.fibers_uniform &&
                  (!standard || additive);
        all_ok = all_ok && ok;
        levis.push_back(json{
            {"roots", static_cast<long>(M.root_indices.size())},
            {"standard", standard},
            {"length_additive", additive},
            {"cosets", static_cast<long>(reps.size())},
            {"fibers_uniform", ir.fibers_uniform},
            {"surjective", ir.surjective},
            {"expected_fiber", ir.expected_fiber}});
    }
    return json{{"status", all_ok ? "pass" : "fail"},
                {"payload", json{{"levis", levis}}}};
}

json task_length_audit(const ProblemContext& ctx, const json& task) {
    DepthZeroCharacter chi0 = task_character(ctx, task, "chi0", true);
    std::vector<int> phi = endoscopic_subsystem(ctx.rd, chi0);
    long trials = task.value("trials", 1000L);
    std::set<int> sub(phi.begin(), phi.end());
    std::vector<WeylElement> preserving;
    for (const WeylElement& w : weyl_group(ctx.rd)) {
        bool ok = true;
        for (int i : phi)
            if (!sub.count(ctx.rd.root_index(w.act_x(ctx.rd.roots[i])))) {
                ok = false;
                break;
            }
        if (ok) preserving.push_back(w);
    }
    std::mt19937 rng(12345);  // fixed seed: reports must be reproducible
    std::uniform_int_distribution<long> coord(-3, 3);
    std::uniform_int_distribution<size_t> widx(0, preserving.size() - 1);
    long mismatches = 0;
    for (long t = 0; t < trials; ++t) {
        IntVec nu(ctx.rd.rank);
        for (int i = 0; i < ctx.rd.rank; ++i) nu(i) = coord(rng);
        const WeylElement& w = preserving[widx(rng)];
        ExtAffineElement sigma = ExtAffineElement::translation_of(nu);
        sigma.finite = w;
        if (affine_length(ctx.rd, phi, sigma, LengthSystem::prime) !=
            translation_length_closed_form(ctx.rd, phi, nu, w))
            ++mismatches;
    }
    // Lemma sweep: l'(t_nu) vs l'(t_{w(nu)}) over all w in W.
    long lemma_failures = 0;
    json first_counterexample;
    for (long t = 0; t < std::min(trials, 50L); ++t) {
        IntVec nu(ctx.rd.rank);
        for (int i = 0; i < ctx.rd.rank; ++i) nu(i) = coord(rng);
        for (const WeylElement& w : weyl_group(ctx.rd)) {
            LengthInvarianceReport r =
                check_translation_length_w_invariance(ctx.rd, phi, nu, w);
            if (!r.equal) {
                ++lemma_failures;
                if (first_counterexample.is_null())
                    first_counterexample =
                        json{{"nu", vec_to_json(nu)},
                             {"w", matrix_to_json(w.on_x)},
                             {"l_nu", r.l_nu},
                             {"l_w_nu", r.l_w_nu}};
            }
        }
    }
    json payload{{"trials", trials},
                 {"closed_form_mismatches", mismatches},
                 {"uniformity_failures", lemma_failures}};
    if (!first_counterexample.is_null())
        payload["first_counterexample"] = first_counterexample;
    return json{{"status", mismatches == 0 ? "pass" : "fail"},
                {"payload", payload}};
}

json task_surgery(const ProblemContext& ctx, const json& task) {
    std::string mode = task.value("mode", std::string("z_extension"));
    SurgeryMode sm;
    if (mode == "z_extension") {
        sm = SurgeryMode::z_extension;
    } else if (mode == "center_torus") {
        sm = SurgeryMode::center_torus;
    } else {
        throw Error("unknown surgery mode '" + mode + "'");
    }
    SurgeryResult res = datum_surgery(ctx.rd, sm);
    bool ok = res.already_satisfied || res.sequences_exact;
    json payload{{"already_satisfied", res.already_satisfied},
                 {"sequences_exact", res.sequences_exact},
                 {"result_rank", res.datum.rank},
                 {"map", matrix_to_json(res.map)}};
    return json{{"status", ok ? "pass" : "fail"}, {"payload", payload}};
}

json dispatch(const ProblemContext& ctx, const json& task) {
    std::string type = task.at("type").get<std::string>();
    json out;
    try {
        if (type == "inspect") out = task_inspect(ctx, task);
        else if (type == "endoscopy") out = task_endoscopy(ctx, task);
        else if (type == "hecke-mul") out = task_hecke_mul(ctx, task);
        else if (type == "center-transfer")
            out = task_center_transfer(ctx, task);
        else if (type == "elementary-match")
            out = task_elementary_match(ctx, task);
        else if (type == "descent-check")
            out = task_descent_check(ctx, task);
        else if (type == "length-audit")
            out = task_length_audit(ctx, task);
        else if (type == "surgery") out = task_surgery(ctx, task);
        else throw Error("unknown task type '" + type + "'");
    } catch (const std::exception& e) {
        out = json{{"status", "fail"}, {"error", e.what()}};
    }
    out["type"] = type;
    return out;
}

RootDatum parse_datum(const json& spec) {
    if (spec.is_string()) return preset(spec.get<std::string>());
    int rank = spec.at("rank").get<int>();
    std::vector<IntVec> sr, sc;
    for (const json& r : spec.at("simple_roots"))
        sr.push_back(vec_from_json(r, rank));
    for (const json& r : spec.at("simple_coroots"))
        sc.push_back(vec_from_json(r, rank));
    return datum_from_simple_pairs(
        spec.value("name", std::string("custom")), rank, sr, sc);
}

std::string timestamp_utc() {
    std::time_t now = std::chrono::system_clock::to_time_t(
        std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ",
                  std::gmtime(&now));
    return buf;
}

}  // namespace

std::string fnv1a_digest(const std::string& data) {
    unsigned long long h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", h);
    return buf;
}

RunResult run_problem(const std::string& json_text, const RunOptions& opts) {
    RunResult result;
    json report;
    report["tool"] = "workbench 1.0.0";
    report["input_digest"] = fnv1a_digest(json_text);
    if (!opts.no_timestamp) report["timestamp"] = timestamp_utc();

    ProblemContext ctx;
    ctx.opts = opts;
    json tasks;
    try {
        json problem = json::parse(json_text);
        ctx.rd = parse_datum(problem.at("root_datum"));
        ValidationReport vr = validate(ctx.rd);
        if (!vr.valid)
            throw Error("root datum invalid: " + vr.violations.front());
        ctx.q = problem.at("q").get<long>();
        if (ctx.q < 2) throw Error("q must be at least 2");
        ctx.m = ctx.q - 1;
        if (problem.contains("characters"))
            for (const auto& [name, val] :
                 problem.at("characters").items())
                ctx.characters.emplace(name,
                                       vec_from_json(val, ctx.rd.rank));
        tasks = problem.value("tasks", json::array());
        if (!tasks.is_array()) throw Error("tasks must be an array");
    } catch (const std::exception& e) {
        report["error"] = e.what();
        result.exit_code = 2;
        result.report = report.dump(2) + "\n";
        return result;
    }

    std::vector<json> results(tasks.size());
    int nthreads = std::max(1, opts.threads);
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            auto start = std::chrono::steady_clock::now();
            results[i] = dispatch(ctx, tasks[i]);
            if (!opts.no_timestamp)
                results[i]["ms"] =
                    std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    bool failed = false;
    json out_tasks = json::array();
    for (json& r : results) {
        failed = failed || r.value("status", "fail") == "fail";
        out_tasks.push_back(std::move(r));
    }
    report["tasks"] = out_tasks;
    result.exit_code = failed ? 1 : 0;
    result.report = report.dump(2) + "\n";
    return result;
}

std::string schema_text() {
    return R"(problem file (JSON):
{
  "root_datum": "<preset>" | {"name": str, "rank": int,
                              "simple_roots": [[int..]..],
                              "simple_coroots": [[int..]..]},
  "q": int >= 2            // prime power; characters live mod m = q - 1
  "characters": {"<name>": [int..rank]},   // optional
  "tasks": [{"type": <task>, ...params}]
}
tasks and parameters (characters accept a name or an inline vector):
  inspect            {}                      datum validation, center, Lambda
  endoscopy          {chi0}                  Phi', W', C_chi0, s-element
  hecke-mul          {chi0?, factors: [{translation?, alcove_word?}]}
  center-transfer    {chi0, psi0?, nu?}      xi-transfer package of orbit sum
  elementary-match   {chi0, psi0?, nu_box?}  matching identity over a nu-box
  descent-check      {chi0?}                 Kostant/fiber audit per Levi
  length-audit       {chi0?, trials?}        closed form vs inversion count
  surgery            {mode: z_extension | center_torus}
report (JSON): tool, input_digest (FNV-1a of input bytes), timestamp
(suppressed by --no-timestamp, which also suppresses per-task "ms"),
tasks: [{type, status: pass|fail|info, payload | error, ms?}].
All scalars are exact strings: rationals "p/q", cyclotomics as coefficient
arrays, Laurent terms as {v_exp, coeff} pairs. Exit codes: 0 all tasks
pass, 1 any task failed, 2 input error.
presets: )" +
           [] {
               std::string s;
               for (const std::string& n : preset_names()) {
                   if (!s.empty()) s += ", ";
                   s += n;
               }
               return s;
           }() +
           "\n";
}

}  // namespace workbench
