#include "qracah/driver.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

namespace qracah {

const std::vector<Suite>& all_suites() {
    static const std::vector<Suite> order = {Suite::Relations, Suite::Equitable,
                                             Suite::Loperator, Suite::Tdpair,
                                             Suite::Psi, Suite::Proof};
    return order;
}

const char* to_string(Suite s) {
    switch (s) {
        case Suite::Relations: return "relations";
        case Suite::Equitable: return "equitable";
        case Suite::Loperator: return "loperator";
        case Suite::Tdpair: return "tdpair";
        case Suite::Psi: return "psi";
        case Suite::Proof: return "proof";
    }
    return "?";
}

std::optional<Suite> suite_from_string(const std::string& s) {
    for (Suite x : all_suites())
        if (s == to_string(x)) return x;
    return std::nullopt;
}

namespace {

Rational rational_from_json(const Json& v, const std::string& where,
                            std::vector<std::string>& errors) {
    if (v.is_string()) {
        try {
            return Rational::parse(v.get<std::string>());
        } catch (const ParameterError& e) {
            errors.push_back(where + ": " + e.what());
            return Rational(1);
        }
    }
    if (v.is_number_integer() && !v.is_number_float())
        return Rational(static_cast<long>(v.get<std::int64_t>()));
    errors.push_back(where + ": expected a rational as a string \"p/q\" or an "
                             "integer, got " + std::string(v.type_name()));
    return Rational(1);
}

void check_keys(const Json& obj, const std::vector<std::string>& allowed,
                const std::string& where, std::vector<std::string>& errors) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (std::find(allowed.begin(), allowed.end(), it.key()) ==
            allowed.end())
            errors.push_back(where + ": unknown key \"" + it.key() + "\"");
    }
}

std::string rational_str(const Rational& r) { return r.str(); }

Json params_to_json(const ParamSet& p) {
    Json j;
    j["q"] = rational_str(p.q);
    j["a"] = rational_str(p.a);
    j["b"] = rational_str(p.b);
    j["factors"] = Json::array();
    for (const auto& f : p.factors) {
        Json jf;
        jf["d"] = f.d;
        jf["mu"] = rational_str(f.mu);
        jf["xi"] = rational_str(f.xi);
        j["factors"].push_back(jf);
    }
    return j;
}

Json witness_to_json(const Matrix& m) {
    if (m.rows() <= 12 && m.cols() <= 12) {
        Json rows = Json::array();
        for (int i = 0; i < m.rows(); ++i) {
            Json row = Json::array();
            for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
            rows.push_back(row);
        }
        return rows;
    }
    std::ostringstream hash;
    hash << "0x" << std::hex << fnv1a64(m.entry_dump());
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["fnv1a64"] = hash.str();
    return j;
}

Json record_to_json(Suite suite, const CheckRecord& c, bool with_timing) {
    Json j;
    j["suite"] = to_string(suite);
    j["name"] = c.name;
    j["identity"] = c.identity;
    j["status"] = to_string(c.status);
    if (!c.note.empty()) j["note"] = c.note;
    if (c.witness) j["witness"] = witness_to_json(*c.witness);
    if (with_timing) j["elapsed_ms"] = c.elapsed_ms;
    return j;
}

// Fixed gauge rescalings for the psi suite: gauge k multiplies factor j's
// normalization by base_k^(j+1). Deterministic, nonzero, factor-distinct.
const std::vector<Rational>& gauge_bases() {
    static const std::vector<Rational> bases = {Rational(2), Rational(1, 3),
                                                Rational(5, 7)};
    return bases;
}

// All artifacts a pipeline run may need, built lazily in dependency order.
struct Pipeline {
    ParamSet params;
    Rational t;  // spectral parameter used throughout: t = a^2
    std::optional<Representation> rep;
    std::optional<EquitableGenerators> x;
    std::optional<LOperator> lop;
    std::optional<TDPairData> td;
    std::optional<SplitDecomposition> sd;

    explicit Pipeline(const ParamSet& p) : params(p), t(p.a * p.a) {}

    const Representation& get_rep() {
        if (!rep) rep = rep_from_params(params);
        return *rep;
    }
    const EquitableGenerators& get_x() {
        if (!x) x = equitable_generators(get_rep());
        return *x;
    }
    const LOperator& get_lop() {
        if (!lop) lop = loperator_from_params(params, t);
        return *lop;
    }
    const TDPairData& get_td() {
        if (!td) td = build_td_pair(get_rep(), params.a, params.b);
        return *td;
    }
    const SplitDecomposition& get_sd() {
        if (!sd) sd = split_decomposition(get_td());
        return *sd;
    }
};

std::string profile_note(const PsiOperator& psi) {
    std::string note = "block profile (i, dim U_i, block rank):";
    for (const auto& [i, dim, rk] : psi.block_profile)
        note += " (" + std::to_string(i) + "," + std::to_string(dim) + "," +
                std::to_string(rk) + ")";
    return note;
}

Report run_psi_suite(Pipeline& pl) {
    Report out;
    const SplitDecomposition& sd = pl.get_sd();
    const Rational& q = pl.params.q;
    const Rational& a = pl.params.a;

    PsiOperator solved = solve_psi(sd, q);
    {
        CheckRecord r;
        r.name = "psi.solved_unique";
        r.identity = "the lowering-shape solution of psi R - R psi == "
                     "(q - q^-1)(K - K^-1) exists and is unique";
        r.status = CheckStatus::Pass;
        r.note = profile_note(solved);
        out.add(std::move(r));
    }
    out.add(check_zero("psi.solved_commutator",
                       "psi R - R psi == (q - q^-1)(K - K^-1)", [&] {
                           return solved.psi * sd.r - sd.r * solved.psi -
                                  (q - q.inverse()) * (sd.k - sd.kinv);
                       }));

    PsiOperator closed = psi_from_loperator(pl.get_lop(), a, sd);
    {
        CheckRecord r;
        r.name = "psi.closed_form_shape";
        r.identity = "-a L00^-1 L01 maps U_i into U_(i-1)";
        r.status = CheckStatus::Pass;
        r.note = profile_note(closed);
        out.add(std::move(r));
    }
    out.append(verify_psi_agreement(solved, closed));

    out.add(check_true(
        "psi.gauge_invariance",
        "-a L00^-1 L01 is unchanged under rescaling each factor's xi",
        [&] {
            for (const auto& base : gauge_bases()) {
                ParamSet gauged = pl.params;
                for (std::size_t j = 0; j < gauged.factors.size(); ++j)
                    gauged.factors[j].xi =
                        gauged.factors[j].xi *
                        base.pow(static_cast<long>(j) + 1);
                LOperator lg = loperator_from_params(gauged, pl.t);
                PsiOperator pg = psi_from_loperator(lg, a, sd);
                if (pg.psi != closed.psi) return false;
            }
            return true;
        },
        "a gauge rescaling changed the closed-form psi"));

    const long dpow = pl.get_rep().total_diameter() + 1;
    out.add(check_zero("psi.nilpotent", "psi^(d+1) == 0",
                       [&] { return solved.psi.pow(dpow); }));
    return out;
}

struct PipelineOutcome {
    // Records grouped per suite, in execution order.
    std::vector<std::pair<Suite, Report>> suites;
    bool degenerate = false;
    std::string diagnosis;
};

PipelineOutcome run_pipeline(const ParamSet& params,
                             const std::vector<Suite>& suites) {
    PipelineOutcome out;
    Pipeline pl(params);

    for (Suite s : suites) {
        if (out.degenerate) {
            Report skipped;
            skipped.add(skip_record(std::string(to_string(s)) + ".suite",
                                    "suite skipped", out.diagnosis));
            out.suites.emplace_back(s, std::move(skipped));
            continue;
        }
        try {
            Report rep;
            switch (s) {
                case Suite::Relations:
                    rep = verify_defining_relations(pl.get_rep());
                    break;
                case Suite::Equitable:
                    rep = verify_equitable_relations(pl.get_x(), params.q);
                    break;
                case Suite::Loperator:
                    rep = verify_loperator_equations(pl.get_lop(), pl.get_rep());
                    rep.append(verify_intertwiner(pl.get_lop(), pl.get_rep()));
                    break;
                case Suite::Tdpair: {
                    rep = verify_tridiagonal_axioms(pl.get_td());
                    IrreducibilityCertificate cert =
                        verify_irreducible(pl.get_td());
                    CheckRecord r;
                    r.name = "tdpair.irreducible";
                    r.identity = "words in {A, A*} span the full operator "
                                 "algebra (dimension dim^2)";
                    r.status = cert.irreducible
                                   ? CheckStatus::Pass
                                   : (cert.inconclusive
                                          ? CheckStatus::Inconclusive
                                          : CheckStatus::Fail);
                    r.note = "span profile by word length:";
                    for (int dsp : cert.span_profile)
                        r.note += " " + std::to_string(dsp);
                    rep.add(std::move(r));
                    rep.append(verify_split_identities(pl.get_td(), pl.get_sd()));
                    rep.append(verify_k_is_x31(pl.get_sd(), pl.get_x()));
                    rep.append(verify_r_forms(pl.get_sd(), pl.get_rep(),
                                              pl.get_x(), params.a));
                    break;
                }
                case Suite::Psi:
                    rep = run_psi_suite(pl);
                    break;
                case Suite::Proof:
                    rep = verify_psi_identities(pl.get_lop(), pl.get_rep(),
                                                pl.get_sd(), params.a);
                    break;
            }
            out.suites.emplace_back(s, std::move(rep));
        } catch (const DegenerateParameters& e) {
            out.degenerate = true;
            out.diagnosis = e.what();
            Report skipped;
            skipped.add(skip_record(std::string(to_string(s)) + ".suite",
                                    "suite skipped", out.diagnosis));
            out.suites.emplace_back(s, std::move(skipped));
        } catch (const SingularL00& e) {
            out.degenerate = true;
            out.diagnosis = e.what();
            Report skipped;
            skipped.add(skip_record(std::string(to_string(s)) + ".suite",
                                    "suite skipped", out.diagnosis));
            out.suites.emplace_back(s, std::move(skipped));
        }
    }
    return out;
}

} // namespace

RunConfig parse_config(const Json& doc) {
    std::vector<std::string> errors;
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");

    check_keys(doc, {"q", "a", "b", "factors", "suites", "sweep", "max_dim"},
               "config", errors);

    RunConfig cfg;
    for (const char* key : {"q", "a", "b"}) {
        if (!doc.contains(key)) {
            errors.push_back(std::string("config: missing key \"") + key + "\"");
            continue;
        }
        Rational v = rational_from_json(doc[key], std::string("config.") + key,
                                        errors);
        if (std::string(key) == "q") cfg.params.q = v;
        if (std::string(key) == "a") cfg.params.a = v;
        if (std::string(key) == "b") cfg.params.b = v;
    }

    if (!doc.contains("factors") || !doc["factors"].is_array() ||
        doc["factors"].empty()) {
        errors.push_back("config: \"factors\" must be a non-empty array");
    } else {
        int idx = 0;
        for (const auto& jf : doc["factors"]) {
            const std::string where = "config.factors[" + std::to_string(idx) + "]";
            if (!jf.is_object()) {
                errors.push_back(where + ": must be an object");
                ++idx;
                continue;
            }
            check_keys(jf, {"d", "mu", "xi"}, where, errors);
            Factor f;
            if (!jf.contains("d") || !jf["d"].is_number_integer())
                errors.push_back(where + ".d: must be an integer");
            else
                f.d = jf["d"].get<int>();
            if (!jf.contains("mu"))
                errors.push_back(where + ": missing key \"mu\"");
            else
                f.mu = rational_from_json(jf["mu"], where + ".mu", errors);
            if (jf.contains("xi"))
                f.xi = rational_from_json(jf["xi"], where + ".xi", errors);
            cfg.params.factors.push_back(std::move(f));
            ++idx;
        }
    }

    if (doc.contains("suites")) {
        if (!doc["suites"].is_array()) {
            errors.push_back("config: \"suites\" must be an array of names");
        } else {
            std::vector<bool> wanted(all_suites().size(), false);
            for (const auto& js : doc["suites"]) {
                if (!js.is_string()) {
                    errors.push_back("config.suites: entries must be strings");
                    continue;
                }
                const std::string name = js.get<std::string>();
                if (name == "all") {
                    wanted.assign(wanted.size(), true);
                    continue;
                }
                auto s = suite_from_string(name);
                if (!s) {
                    errors.push_back("config.suites: unknown suite \"" + name +
                                     "\"");
                    continue;
                }
                wanted[static_cast<std::size_t>(*s)] = true;
            }
            for (std::size_t i = 0; i < wanted.size(); ++i)
                if (wanted[i]) cfg.suites.push_back(all_suites()[i]);
        }
    }
    if (cfg.suites.empty()) cfg.suites = all_suites();

    if (doc.contains("max_dim")) {
        if (!doc["max_dim"].is_number_integer())
            errors.push_back("config.max_dim: must be an integer");
        else
            cfg.max_dim = doc["max_dim"].get<int>();
        if (cfg.max_dim < 1) errors.push_back("config.max_dim: must be >= 1");
    }

    if (doc.contains("sweep")) {
        if (!doc["sweep"].is_object()) {
            errors.push_back("config.sweep: must be an object");
        } else {
            check_keys(doc["sweep"], {"count", "seed"}, "config.sweep", errors);
            SweepSpec sw;
            if (!doc["sweep"].contains("count") ||
                !doc["sweep"]["count"].is_number_integer())
                errors.push_back("config.sweep.count: must be an integer");
            else
                sw.count = doc["sweep"]["count"].get<long>();
            if (sw.count < 1)
                errors.push_back("config.sweep.count: must be >= 1");
            if (doc["sweep"].contains("seed")) {
                if (!doc["sweep"]["seed"].is_number_unsigned() &&
                    !doc["sweep"]["seed"].is_number_integer())
                    errors.push_back("config.sweep.seed: must be an integer");
                else
                    sw.seed = doc["sweep"]["seed"].get<std::uint64_t>();
            }
            cfg.sweep = sw;
        }
    }

    if (!errors.empty()) {
        std::string msg = "invalid config:";
        for (const auto& e : errors) msg += "\n  " + e;
        throw ConfigError(msg);
    }
    return cfg;
}

Json config_schema() {
    Json s;
    s["type"] = "object";
    s["description"] =
        "Parameter set and suite selection for the exact verification runs. "
        "All rationals are strings \"p\" or \"p/q\" (exact integers also "
        "accepted); floats are rejected.";
    s["properties"] = Json::object();
    s["properties"]["q"] = {{"type", "rational string"},
                            {"description",
                             "deformation parameter; nonzero, not 1 or -1"}};
    s["properties"]["a"] = {{"type", "rational string"},
                            {"description",
                             "eigenvalue base parameter of the first operator; "
                             "nonzero. The spectral parameter of the L-operator "
                             "suites is tied to it: t = a^2"}};
    s["properties"]["b"] = {{"type", "rational string"},
                            {"description",
                             "eigenvalue base parameter of the second operator; "
                             "nonzero"}};
    s["properties"]["factors"] = {
        {"type", "array of {d, mu, xi}"},
        {"description",
         "tensor factors, first factor slowest; d >= 1 integer diameter, mu "
         "nonzero rational evaluation parameter, xi nonzero rational "
         "L-operator normalization (default \"1\")"}};
    s["properties"]["suites"] = {
        {"type", "array of strings"},
        {"description",
         "any of: relations, equitable, loperator, tdpair, psi, proof, all "
         "(default all); executed in dependency order"}};
    s["properties"]["max_dim"] = {
        {"type", "integer"},
        {"description", "refuse modules larger than this dimension "
                        "(default 18)"}};
    s["properties"]["sweep"] = {
        {"type", "object {count, seed}"},
        {"description",
         "sweep mode: count >= 1 pseudo-random parameter points from the "
         "64-bit seed (default 0). Sampled values are num/den with num in "
         "[-17,17] nonzero and den in [1,17]; q additionally avoids 1 and "
         "-1. Degenerate points are skipped and counted."}};
    s["required"] = Json::array({"q", "a", "b", "factors"});
    s["exit_codes"] = {{"0", "all checks passed"},
                       {"1", "at least one check failed"},
                       {"2", "configuration error or degenerate parameters"}};
    return s;
}

namespace {

Json base_report(const char* mode, const RunConfig& cfg) {
    Json report;
    report["tool"] = "qracah";
    report["mode"] = mode;
    report["config"] = params_to_json(cfg.params);
    report["config"]["suites"] = Json::array();
    for (Suite s : cfg.suites) report["config"]["suites"].push_back(to_string(s));
    report["config"]["max_dim"] = cfg.max_dim;
    return report;
}

std::vector<std::string> config_level_problems(const RunConfig& cfg) {
    std::vector<std::string> problems = param_violations(cfg.params);
    if (problems.empty() && cfg.params.dimension() > cfg.max_dim)
        problems.push_back("module dimension " +
                           std::to_string(cfg.params.dimension()) +
                           " exceeds max_dim " + std::to_string(cfg.max_dim));
    return problems;
}

} // namespace

RunResult run(const RunConfig& config) {
    Json report = base_report("verify", config);

    const auto problems = config_level_problems(config);
    if (!problems.empty()) {
        report["config_errors"] = problems;
        report["summary"] = {{"status", "config_error"}};
        return {report, kExitConfigError};
    }

    report["derived"] = {
        {"dimension", config.params.dimension()},
        {"total_diameter", config.params.total_diameter()},
        {"t", (config.params.a * config.params.a).str()}};

    PipelineOutcome outcome = run_pipeline(config.params, config.suites);

    report["checks"] = Json::array();
    std::size_t pass = 0, fail = 0, skip = 0, inconclusive = 0;
    for (const auto& [suite, rep] : outcome.suites)
        for (const auto& c : rep.checks) {
            report["checks"].push_back(record_to_json(suite, c, true));
            switch (c.status) {
                case CheckStatus::Pass: ++pass; break;
                case CheckStatus::Fail: ++fail; break;
                case CheckStatus::Skip: ++skip; break;
                case CheckStatus::Inconclusive: ++inconclusive; break;
            }
        }

    Json summary;
    summary["total"] = pass + fail + skip + inconclusive;
    summary["pass"] = pass;
    summary["fail"] = fail;
    summary["skip"] = skip;
    summary["inconclusive"] = inconclusive;
    int exit_code = kExitPass;
    if (fail > 0 || inconclusive > 0) {
        summary["status"] = "fail";
        exit_code = kExitCheckFailed;
    } else if (outcome.degenerate) {
        summary["status"] = "degenerate";
        summary["diagnosis"] = outcome.diagnosis;
        exit_code = kExitConfigError;
    } else {
        summary["status"] = "pass";
    }
    report["summary"] = summary;
    return {report, exit_code};
}

RunResult run_sweep(const RunConfig& config) {
    if (!config.sweep)
        throw ConfigError("sweep mode requires a \"sweep\" config section "
                          "or --count");

    Json report = base_report("sweep", config);
    report["config"]["sweep"] = {{"count", config.sweep->count},
                                 {"seed", config.sweep->seed}};

    // Structural validation only; numeric parameters are resampled per
    // point. Factor diameters and max_dim still apply.
    RunConfig probe = config;
    probe.params.q = Rational(2);
    probe.params.a = Rational(3);
    probe.params.b = Rational(7);
    for (auto& f : probe.params.factors) {
        f.mu = Rational(5);
        f.xi = Rational(1);
    }
    const auto problems = config_level_problems(probe);
    if (!problems.empty()) {
        report["config_errors"] = problems;
        report["summary"] = {{"status", "config_error"}};
        return {report, kExitConfigError};
    }

    std::mt19937_64 gen(config.sweep->seed);
    // num in [-17, 17] \ {0}, den in [1, 17]. Plain modular reduction keeps
    // the stream identical across platforms (uniform_int_distribution is
    // implementation-defined).
    auto sample_nonzero = [&]() -> Rational {
        for (;;) {
            const long num = static_cast<long>(gen() % 35) - 17;
            const long den = static_cast<long>(gen() % 17) + 1;
            if (num == 0) continue;
            return Rational(num, den);
        }
    };
    auto sample_q = [&]() -> Rational {
        for (;;) {
            Rational q = sample_nonzero();
            if (q != Rational(1) && q != Rational(-1)) return q;
        }
    };

    report["samples"] = Json::array();
    long passed = 0, failed = 0, degenerate = 0;
    for (long k = 0; k < config.sweep->count; ++k) {
        ParamSet p = config.params;
        p.q = sample_q();
        p.a = sample_nonzero();
        p.b = sample_nonzero();
        for (auto& f : p.factors) {
            f.mu = sample_nonzero();
            f.xi = sample_nonzero();
        }

        Json sample;
        sample["index"] = k;
        sample["params"] = params_to_json(p);

        PipelineOutcome outcome = run_pipeline(p, config.suites);
        std::vector<std::string> failed_checks;
        for (const auto& [suite, rep] : outcome.suites)
            for (const auto& c : rep.checks)
                if (c.status == CheckStatus::Fail ||
                    c.status == CheckStatus::Inconclusive)
                    failed_checks.push_back(c.name);

        if (!failed_checks.empty()) {
            sample["status"] = "fail";
            sample["failed_checks"] = failed_checks;
            ++failed;
        } else if (outcome.degenerate) {
            sample["status"] = "degenerate";
            sample["diagnosis"] = outcome.diagnosis;
            ++degenerate;
        } else {
            sample["status"] = "pass";
            ++passed;
        }
        report["samples"].push_back(sample);
    }

    Json summary;
    summary["count"] = config.sweep->count;
    summary["pass"] = passed;
    summary["fail"] = failed;
    summary["degenerate"] = degenerate;
    summary["status"] = failed == 0 ? "pass" : "fail";
    report["summary"] = summary;
    return {report, failed == 0 ? kExitPass : kExitCheckFailed};
}

void write_report(const Json& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open output file: " + path);
    out << report.dump(2) << "\n";
    if (!out) throw ConfigError("failed writing output file: " + path);
}

} // namespace qracah
