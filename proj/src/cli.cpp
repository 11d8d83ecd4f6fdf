#include "chensieve/cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <sstream>

#include "chensieve/chen.hpp"
#include "chensieve/errors.hpp"
#include "chensieve/serialize.hpp"
#include "chensieve/util.hpp"
#include "chensieve/version.hpp"

namespace chensieve::cli {

namespace {

using nlohmann::json;

std::string iso_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
    return buf;
}

json config_echo(const RunConfig& c) {
    json j{{"command", c.command},
           {"output_format", c.output_format},
           {"tolerance", c.tolerance},
           {"shards", c.shards},
           {"max_n", c.max_n}};
    if (c.x != 0) j["x"] = c.x;
    if (c.command == "count" || c.command == "decompose") {
        j["a"] = c.a;
        j["q"] = c.q;
    }
    if (c.command == "count") {
        j["chen_exponent"] = c.chen_exponent;
        j["exclude_small_primes"] = c.exclude_small_primes;
    }
    if (c.command == "discrepancy") {
        j["D"] = c.D;
        j["weight"] = c.weight;
    }
    if (c.command == "condition31") {
        j["u"] = c.u;
        j["z"] = c.z;
        j["epsilon"] = c.epsilon;
        j["prime_count"] = c.prime_count;
        j["q"] = c.q;
    }
    return j;
}

struct CommandOutput {
    json report;                      // json body
    std::vector<std::string> csv;     // csv rows (header first), empty -> derive from report
    std::vector<std::string> text;    // text lines, empty -> derive from report
};

void flatten_for_csv(const json& j, const std::string& prefix, std::vector<std::string>& out) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_object()) {
            flatten_for_csv(*it, key, out);
        } else {
            out.push_back(key + "," + it->dump());
        }
    }
}

CommandOutput cmd_constants(const RunConfig& c) {
    auto bundle = sieve_theory::headline_constants(c.tolerance);
    CommandOutput out;
    out.report = to_json(bundle);
    std::ostringstream line;
    line.precision(12);
    line << "c_A1=" << bundle.c_A1 << " c_A2=" << bundle.c_A2 << " c_A3=" << bundle.c_A3
         << " net=" << bundle.net << " pi2=" << bundle.pi2;
    out.text = {line.str()};
    return out;
}

CommandOutput cmd_count(const RunConfig& c) {
    arith::APClass ap(c.a, c.q);
    uint64_t count = chensieve::decomp::chen_count_ap(c.x, ap, c.chen_exponent,
                                                      c.exclude_small_primes, c.shards);
    double logx = std::log(c.x);
    double normalized = (double)count * (double)arith::phi2(c.q) * logx * logx / c.x;
    double pi2 = arith::pi2_constant(1e-6);
    CommandOutput out;
    out.report = {{"x", c.x},
                  {"ap", to_json(ap)},
                  {"count", count},
                  {"normalized_density", normalized},
                  {"conjecture_density_ratio", normalized / (2.0 * pi2)}};
    std::ostringstream line;
    line << "count=" << count << " normalized_density=" << normalized;
    out.text = {line.str()};
    return out;
}

CommandOutput cmd_decompose(const RunConfig& c) {
    arith::APClass ap(c.a, c.q);
    auto params = decomp::SieveParams::from_x(c.x);
    auto report = decomp::decompose(params, ap, c.shards);
    CommandOutput out;
    out.report = to_json(report);
    std::ostringstream line;
    line.precision(12);
    line << "A1=" << report.A1 << " A2_sum=" << report.A2_sum << " A3=" << report.A3
         << " A4_sum=" << report.A4_sum << " combination=" << report.combination
         << " lhs=" << report.lhs_theorem;
    out.text = {line.str()};
    return out;
}

CommandOutput cmd_verify_lemma(const RunConfig& c) {
    auto violations = chen::verify_p2_minorant(c.x, c.shards);
    CommandOutput out;
    out.report = {{"x", c.x},
                  {"violations", violations},
                  {"violation_count", violations.size()}};
    out.text = {std::to_string(violations.size()) + " violations"};
    return out;
}

CommandOutput cmd_discrepancy(const RunConfig& c) {
    double D = c.D > 0 ? c.D : std::pow(c.x, 0.4);
    auto weight = discrepancy::weight_from_name(c.weight);
    CommandOutput out;
    if (c.output_format == "csv") {
        auto rows = discrepancy::bv_rows(c.x, D, weight);
        out.csv.push_back("d,worst_a,delta_abs");
        for (const auto& r : rows) {
            std::ostringstream line;
            line.precision(12);
            line << r.d << "," << r.worst_a << "," << r.delta_abs;
            out.csv.push_back(line.str());
        }
    }
    auto summary = discrepancy::bv_sum(c.x, D, weight);
    out.report = to_json(summary);
    std::ostringstream line;
    line.precision(12);
    line << "total=" << summary.total << " D=" << summary.D
         << " noncoprime_mass=" << summary.noncoprime_mass;
    out.text = {line.str()};
    return out;
}

CommandOutput cmd_classify(const RunConfig& c) {
    auto n = (uint64_t)c.x;
    auto cls = chen::classify(n);
    const char* kind = nullptr;
    switch (cls.kind) {
        case chen::FactorKind::Prime: kind = "prime"; break;
        case chen::FactorKind::Semiprime: kind = "semiprime"; break;
        case chen::FactorKind::TripleProduct: kind = "triple-product"; break;
        case chen::FactorKind::PrimePower: kind = "prime-power"; break;
        default: kind = "other"; break;
    }
    CommandOutput out;
    out.report = {{"n", n},
                  {"kind", kind},
                  {"min_factor", cls.min_factor},
                  {"parts", cls.parts}};
    if (cls.kind == chen::FactorKind::Prime) {
        auto verdict = chen::is_chen_prime(n, c.chen_exponent);
        const char* branch = verdict.branch == chen::ChenBranch::Twin ? "twin"
                             : verdict.branch == chen::ChenBranch::QualifiedSemiprime
                                 ? "qualified-semiprime"
                                 : "not-chen";
        out.report["chen"] = {{"is_chen", verdict.is_chen}, {"branch", branch}};
        if (verdict.witness)
            out.report["chen"]["witness"] = {verdict.witness->first, verdict.witness->second};
    }
    out.text = {std::string(kind)};
    return out;
}

CommandOutput cmd_condition31(const RunConfig& c) {
    arith::SieveDensity density{c.q};
    std::vector<uint64_t> excluded;
    if (c.prime_count > 0) {
        auto table = primes::sieve_primes(1u << 20);
        if (table.primes.size() < c.prime_count)
            throw ResourceError("condition31: excluded prime set too large");
        excluded.assign(table.primes.begin(), table.primes.begin() + c.prime_count);
    }
    bool holds = sieve_theory::check_density_condition(density, c.u, c.z, excluded, c.epsilon);
    CommandOutput out;
    out.report = {{"u", c.u},
                  {"z", c.z},
                  {"epsilon", c.epsilon},
                  {"q", c.q},
                  {"prime_count", c.prime_count},
                  {"holds", holds}};
    out.text = {holds ? "condition holds" : "condition fails"};
    return out;
}

} // namespace

int run(const RunConfig& config, std::ostream& out_stream, std::ostream& err) {
    auto start = std::chrono::steady_clock::now();
    try {
        set_configured_max(config.max_n);
        if (config.output_format != "json" && config.output_format != "csv" &&
            config.output_format != "text")
            throw ValidationError("output format must be json, csv or text");

        CommandOutput result;
        if (config.command == "constants") result = cmd_constants(config);
        else if (config.command == "count") result = cmd_count(config);
        else if (config.command == "decompose") result = cmd_decompose(config);
        else if (config.command == "verify-lemma") result = cmd_verify_lemma(config);
        else if (config.command == "discrepancy") result = cmd_discrepancy(config);
        else if (config.command == "classify") result = cmd_classify(config);
        else if (config.command == "condition31") result = cmd_condition31(config);
        else throw ValidationError("unknown command: " + config.command);

        double wall_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();

        std::ofstream file;
        std::ostream* sink = &out_stream;
        if (config.output_path) {
            file.open(*config.output_path);
            if (!file) throw ResourceError("cannot open output path " + *config.output_path);
            sink = &file;
        }

        if (config.output_format == "json") {
            json envelope{{"provenance",
                           {{"version", kVersion},
                            {"schema_version", kSchemaVersion},
                            {"command", config.command},
                            {"config", config_echo(config)},
                            {"timestamp", iso_timestamp()},
                            {"wall_time_ms", wall_ms}}},
                          {"report", result.report}};
            *sink << envelope.dump(2) << "\n";
        } else {
            *sink << "# " << config.command << " version=" << kVersion
                  << " timestamp=" << iso_timestamp() << " wall_time_ms=" << wall_ms << "\n"
                  << "# config " << config_echo(config).dump() << "\n";
            if (config.output_format == "csv") {
                if (!result.csv.empty()) {
                    for (const auto& line : result.csv) *sink << line << "\n";
                } else {
                    std::vector<std::string> rows;
                    flatten_for_csv(result.report, "", rows);
                    *sink << "key,value\n";
                    for (const auto& r : rows) *sink << r << "\n";
                }
            } else {
                for (const auto& line : result.text) *sink << line << "\n";
            }
        }
        return kExitOk;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const DependencyError& e) {
        err << "dependency error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace chensieve::cli
