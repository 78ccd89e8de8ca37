#include "onebridge/error.hpp"
#include "onebridge/json_io.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

using namespace onebridge;

namespace {

enum Exit { kPass = 0, kFinding = 1, kUsage = 2 };

struct ParamOptions {
    int family = 0;
    int w = 0, n = 0, k = 0, m = 0, t = 0, b = 0;
    CLI::Option* family_opt = nullptr;
    CLI::Option* w_opt = nullptr;
    CLI::Option* n_opt = nullptr;
    CLI::Option* k_opt = nullptr;
    CLI::Option* t_opt = nullptr;
    CLI::Option* b_opt = nullptr;

    void attach(CLI::App* cmd)
    {
        family_opt = cmd->add_option("--family", family, "Knot family (1, 2 or 3)")->check(CLI::Range(1, 3));
        w_opt = cmd->add_option("--w", w, "Number of strands (family 1 or generic)");
        n_opt = cmd->add_option("--n", n, "Family 2/3 parameter n");
        k_opt = cmd->add_option("--k", k, "Family parameter k");
        cmd->add_option("--m", m, "Number of extra full twists")->capture_default_str();
        t_opt = cmd->add_option("--t", t, "Generic parameter t");
        b_opt = cmd->add_option("--b", b, "Generic parameter b");
    }

    std::optional<FamilyParams> family_params() const
    {
        if (!*family_opt)
            return std::nullopt;
        auto need = [](CLI::Option* o, const char* name) {
            if (!*o)
                throw InvalidParameters(std::string("--") + name + " is required for this family");
        };
        FamilyParams f;
        need(k_opt, "k");
        if (family == 1) {
            need(w_opt, "w");
            f = Family1{w, k, m};
        } else {
            need(n_opt, "n");
            f = family == 2 ? FamilyParams{Family2{n, k, m}} : FamilyParams{Family3{n, k, m}};
        }
        validate(f);
        return f;
    }

    OneBridgeParams generic_params() const
    {
        if (!*w_opt || !*t_opt || !*b_opt)
            throw InvalidParameters("give --family with its parameters, or --w, --t and --b");
        OneBridgeParams p{w, t, b, m};
        p.validate();
        return p;
    }

    /// Family parameters, given directly or recognized from --w --t --b.
    FamilyParams require_family() const
    {
        if (auto f = family_params())
            return *f;
        if (auto f = family_of(generic_params()))
            return *f;
        throw InvalidParameters("parameters do not belong to a known family; no presentation available");
    }
};

std::filesystem::path output_path(const std::string& p)
{
    std::filesystem::path path(p);
    if (path.is_relative())
        if (const char* dir = std::getenv("ONEBRIDGE_OUTPUT_DIR"); dir && *dir)
            return std::filesystem::path(dir) / path;
    return path;
}

std::ofstream open_output(const std::string& p)
{
    std::ofstream out(output_path(p));
    if (!out)
        throw InvalidParameters("cannot open output file " + p);
    return out;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_classify(const ParamOptions& po, const std::string& format)
{
    const auto fam = po.family_params();
    const OneBridgeParams p = fam ? to_one_bridge(*fam) : po.generic_params();
    const auto recognized = fam ? fam : family_of(p);
    const BraidWord word = one_bridge_word(p);
    const Permutation perm = induced_permutation(word);
    const bool knot = perm.is_single_cycle();
    std::optional<bool> closed;
    if (recognized)
        closed = perm == closed_form_permutation(*recognized);

    if (format == "json") {
        emit(Json{{"params", to_json(p)},
                  {"family", recognized ? to_json(*recognized) : Json(nullptr)},
                  {"braid", to_string(word)},
                  {"permutation", perm.cycle_string()},
                  {"is_knot", knot},
                  {"exponent_sum", exponent_sum(word)},
                  {"claimed_framing", claimed_surface_framing(p)},
                  {"closed_form_match", closed ? Json(*closed) : Json(nullptr)}});
    } else {
        std::cout << "braid: " << to_string(word) << '\n'
                  << "strands: " << p.w << '\n'
                  << "permutation: " << perm.cycle_string() << '\n'
                  << "knot: " << (knot ? "true" : "false") << '\n'
                  << "exponent sum: " << exponent_sum(word) << '\n'
                  << "claimed framing: " << claimed_surface_framing(p) << '\n';
        if (recognized)
            std::cout << "family: " << describe(*recognized) << '\n'
                      << "closed form matches: " << (*closed ? "true" : "false") << '\n';
    }
    return knot && closed.value_or(true) ? kPass : kFinding;
}

int cmd_present(const ParamOptions& po)
{
    const FamilyParams f = po.require_family();
    const KnotGroupPresentation pres = presentation_for(f);
    const GroupWord derived = derive_relator(svk_relations(f));
    const bool same = same_relator(derived, pres.relator);
    const FramingSimplification fs = framing_simplification(f);
    const bool simplified = fs.result == reduce(pres.surface_framing);
    emit(Json{{"family", to_json(f)},
              {"presentation", to_json(pres)},
              {"derived_relator", to_json(derived)},
              {"relator_rederived", same},
              {"framing_simplified", simplified}});
    return same && simplified ? kPass : kFinding;
}

int cmd_audit(const ParamOptions& po)
{
    const FamilyParams f = po.require_family();
    const KnotGroupPresentation pres = presentation_for(f);
    const AbelianizationReport r = abelianize(pres);
    Json j{{"family", to_json(f)}, {"report", to_json(r)}};
    bool longitude_ok = false;
    if (r.v_star) {
        longitude_ok = abelian_image(longitude(pres, *r.v_star), *r.beta_power) == 0;
        j["longitude_null_homologous"] = longitude_ok;
    }
    const bool finding = !r.h1_is_Z || !r.beta_power || !longitude_ok || r.discrepancy.value_or(0) != 0;
    j["finding"] = finding;
    emit(j);
    return finding ? kFinding : kPass;
}

int cmd_alexander(const ParamOptions& po)
{
    const auto fam = po.family_params();
    const OneBridgeParams p = fam ? to_one_bridge(*fam) : po.generic_params();
    const auto recognized = fam ? fam : family_of(p);
    const LaurentPoly burau = burau_alexander(one_bridge_word(p));
    Json j{{"params", to_json(p)}, {"burau", to_json(burau)}, {"fox", nullptr}, {"match", nullptr}};
    int code = kPass;
    if (recognized) {
        const KnotGroupPresentation pres = presentation_for(*recognized);
        const LaurentPoly fox = fox_alexander(pres, abelianize(pres));
        const bool match = equal_up_to_units(fox, burau);
        j["family"] = to_json(*recognized);
        j["fox"] = to_json(fox);
        j["match"] = match;
        code = match ? kPass : kFinding;
    }
    emit(j);
    return code;
}

int cmd_nlo(const ParamOptions& po, const std::string& policy_name, const std::string& cert_out, const std::string& cert_in)
{
    const auto policy = parse_policy(policy_name);
    if (!policy)
        throw InvalidParameters("policy must be claimed or audited");
    const FamilyParams f = po.require_family();
    const KnotGroupPresentation pres = presentation_for(f);
    const CriterionReport crit = criterion_check(pres);

    Certificate cert;
    if (!cert_in.empty()) {
        std::ifstream in(output_path(cert_in));
        if (!in)
            throw InvalidParameters("cannot read certificate " + cert_in);
        Json cj;
        try {
            in >> cj;
        } catch (const Json::exception& e) {
            throw InvalidParameters(std::string("certificate is not JSON: ") + e.what());
        }
        cert = certificate_from_json(cj);
    } else {
        cert = derive_beta_monotone(pres);
    }
    const VerificationResult v = verify_certificate(cert, pres);
    if (!cert_out.empty())
        open_output(cert_out) << to_json(cert).dump(2) << '\n';

    Json j{{"family", to_json(f)},
           {"criterion", to_json(crit)},
           {"certificate_steps", cert.steps.size()},
           {"verification", to_json(v)},
           {"bound", nullptr},
           {"theorem_bound", theorem_slope_bound(f)}};
    bool bound_ok = true;
    try {
        j["bound"] = to_json(surgery_threshold(pres, to_one_bridge(f), *policy));
    } catch (const DerivationError& e) {
        bound_ok = false;
        j["bound_error"] = e.what();
    }
    emit(j);
    return crit.pass() && v.ok && bound_ok ? kPass : kFinding;
}

int cmd_script(const ParamOptions& po)
{
    const FamilyParams f = po.require_family();
    emit(Json{{"family", to_json(f)}, {"framing_simplification", to_json(framing_simplification(f))}});
    return kPass;
}

struct SweepArgs {
    std::string family = "all";
    int max_w = 11;
    int max_n = 5;
    int max_m = 2;
    std::string policy = "claimed";
    std::string format = "text";
    std::string output;
    int alexander_max_w = 0;
    unsigned jobs = 1;
};

int cmd_sweep(const SweepArgs& a)
{
    const auto policy = parse_policy(a.policy);
    if (!policy)
        throw InvalidParameters("policy must be claimed or audited");
    if (a.max_m < 0)
        throw InvalidParameters("--max-m must be non-negative");
    std::vector<FamilyParams> params;
    auto add = [&](std::vector<FamilyParams> v) { params.insert(params.end(), v.begin(), v.end()); };
    const bool all = a.family == "all";
    if (all || a.family == "1")
        add(family1_sweep(a.max_w, a.max_m));
    if (all || a.family == "2")
        add(family2_sweep(a.max_n, a.max_m));
    if (all || a.family == "3")
        add(family3_sweep(a.max_n, a.max_m));
    if (!all && a.family != "1" && a.family != "2" && a.family != "3")
        throw InvalidParameters("--family must be all, 1, 2 or 3");
    if (params.empty())
        throw InvalidParameters("the sweep ranges contain no valid parameter set");

    const SweepOptions options{*policy, a.alexander_max_w};
    std::vector<std::optional<SweepRecord>> records(params.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < params.size(); i = next++)
            records[i] = evaluate(params[i], options);
    };
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < std::max(1u, a.jobs); ++j)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();

    std::ofstream file;
    if (!a.output.empty())
        file = open_output(a.output);
    std::ostream& out = a.output.empty() ? std::cout : file;
    std::size_t findings = 0, failures = 0;
    for (const auto& r : records) {
        findings += r->findings.empty() ? 0 : 1;
        failures += r->failures.empty() ? 0 : 1;
        if (a.format == "jsonl") {
            out << to_json(*r).dump() << '\n';
            continue;
        }
        out << describe(r->family) << ": " << (r->failures.empty() ? (r->findings.empty() ? "pass" : "finding") : "FAILURE");
        out << "  v=" << r->audit.v;
        if (r->audit.v_star)
            out << " v*=" << *r->audit.v_star;
        if (r->fox)
            out << "  delta=" << to_string(*r->fox);
        for (const auto& s : r->failures)
            out << "\n    failure: " << s;
        for (const auto& s : r->findings)
            out << "\n    finding: " << s;
        out << '\n';
    }
    std::cerr << records.size() << " parameter sets, " << findings << " with findings, " << failures << " with failures\n";
    return findings + failures == 0 ? kPass : kFinding;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Checks for 1-bridge braid knot groups: presentations, framing audit, Alexander polynomials and "
                 "non-left-orderability certificates."};
    app.require_subcommand(1);

    ParamOptions classify_p, present_p, audit_p, alexander_p, nlo_p, script_p;
    std::string classify_format = "text";
    auto* classify = app.add_subcommand("classify", "Braid word, permutation and knot-ness");
    classify_p.attach(classify);
    classify->add_option("--format", classify_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* present = app.add_subcommand("present", "Knot group presentation and its re-derivation");
    present_p.attach(present);
    auto* audit = app.add_subcommand("audit", "Abelianization and framing audit");
    audit_p.attach(audit);
    auto* alexander = app.add_subcommand("alexander", "Alexander polynomial by Fox calculus and by Burau");
    alexander_p.attach(alexander);

    std::string policy = "claimed", cert_out, cert_in;
    auto* nlo = app.add_subcommand("nlo", "Criterion check, certificate and surgery slope bounds");
    nlo_p.attach(nlo);
    nlo->add_option("--policy", policy, "Framing policy: claimed or audited")->check(CLI::IsMember({"claimed", "audited"}));
    nlo->add_option("--cert-out", cert_out, "Write the certificate to this file");
    nlo->add_option("--cert-in", cert_in, "Verify this certificate instead of deriving one");

    auto* script = app.add_subcommand("script", "Rewrite script simplifying the push-off word");
    script_p.attach(script);

    SweepArgs sa;
    auto* sweep = app.add_subcommand("sweep", "Run every check over a parameter range");
    sweep->add_option("--family", sa.family, "all, 1, 2 or 3")->capture_default_str();
    sweep->add_option("--max-w", sa.max_w, "Largest w for family 1")->capture_default_str();
    sweep->add_option("--max-n", sa.max_n, "Largest n for families 2 and 3")->capture_default_str();
    sweep->add_option("--max-m", sa.max_m, "Largest m")->capture_default_str();
    sweep->add_option("--policy", sa.policy, "Framing policy: claimed or audited")
        ->check(CLI::IsMember({"claimed", "audited"}))
        ->capture_default_str();
    sweep->add_option("--format", sa.format, "text or jsonl")->check(CLI::IsMember({"text", "jsonl"}))->capture_default_str();
    sweep->add_option("--output", sa.output, "Output file (default: stdout)");
    sweep->add_option("--alexander-max-w", sa.alexander_max_w, "Skip Alexander checks above this many strands (0: never)")
        ->capture_default_str();
    sweep->add_option("--jobs", sa.jobs, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*classify)
            return cmd_classify(classify_p, classify_format);
        if (*present)
            return cmd_present(present_p);
        if (*audit)
            return cmd_audit(audit_p);
        if (*alexander)
            return cmd_alexander(alexander_p);
        if (*nlo)
            return cmd_nlo(nlo_p, policy, cert_out, cert_in);
        if (*script)
            return cmd_script(script_p);
        if (*sweep)
            return cmd_sweep(sa);
    } catch (const InvalidParameters& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "check failed: " << e.what() << '\n';
        return kFinding;
    }
    return kUsage;
}
