#include "ghn/report.hpp"

#include <json.hpp>

#include <sstream>

namespace ghn {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json params_json(const Params& params) {
    ordered_json j = ordered_json::object();
    for (const auto& [k, v] : params) j[k] = std::to_string(v);
    return j;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (const auto& s : parts) {
        if (!out.empty()) out += sep;
        out += s;
    }
    return out;
}

}  // namespace

std::string report_json(const SweepResult& result) {
    ordered_json j;
    ordered_json cfg = ordered_json::object();
    cfg["pmin"] = std::to_string(result.config.bounds.pmin);
    cfg["pmax"] = std::to_string(result.config.bounds.pmax);
    cfg["amax"] = std::to_string(result.config.bounds.amax);
    cfg["bmax"] = std::to_string(result.config.bounds.bmax);
    cfg["kmax"] = std::to_string(result.config.bounds.kmax);
    cfg["checks"] = result.config.check_ids;
    cfg["seed"] = std::to_string(result.config.seed);
    j["config"] = cfg;
    j["summary"] = {{"pass", std::to_string(result.summary.pass)},
                    {"fail", std::to_string(result.summary.fail)},
                    {"skip", std::to_string(result.summary.skip)}};
    ordered_json rows = ordered_json::array();
    for (const auto& rep : result.results) {
        ordered_json row = ordered_json::object();
        row["id"] = rep.id;
        row["params"] = params_json(rep.params);
        row["p"] = std::to_string(rep.p);
        row["modulus"] = rep.modulus;
        row["lhs"] = rep.lhs.size() == 1 ? ordered_json(rep.lhs[0]) : ordered_json(rep.lhs);
        row["rhs"] = ordered_json(rep.rhs);
        row["pass"] = rep.pass;
        row["flags"] = rep.flags;
        if (result.config.timing) row["micros"] = std::to_string(rep.micros);
        rows.push_back(std::move(row));
    }
    j["results"] = std::move(rows);
    return j.dump(2) + "\n";
}

std::string report_csv(const SweepResult& result) {
    std::ostringstream out;
    out << "id,params,p,modulus,lhs,rhs,pass,flags,micros\n";
    for (const auto& rep : result.results) {
        std::string params;
        for (const auto& [k, v] : rep.params) {
            if (!params.empty()) params += ";";
            params += k + "=" + std::to_string(v);
        }
        out << rep.id << "," << params << "," << rep.p << "," << rep.modulus
            << "," << join(rep.lhs, ";") << "," << join(rep.rhs, ";") << ","
            << (rep.pass ? "true" : "false") << "," << join(rep.flags, ";") << ",";
        if (result.config.timing) out << rep.micros;
        out << "\n";
    }
    return out.str();
}

std::string report_line(const CheckReport& rep) {
    std::ostringstream out;
    out << rep.id;
    if (!rep.params.empty()) out << " " << params_str(rep.params);
    if (rep.p != 0) out << " p=" << rep.p;
    out << ": ";
    if (rep.skipped) {
        out << "SKIP (hypothesis not met)";
        return out.str();
    }
    out << (rep.pass ? "PASS" : "FAIL");
    out << " lhs=" << join(rep.lhs, "|") << " rhs=" << join(rep.rhs, "|");
    if (rep.modulus == "exact")
        out << " (exact)";
    else if (!rep.modulus.empty())
        out << " (mod " << rep.modulus << ")";
    if (!rep.flags.empty()) out << " [" << join(rep.flags, ",") << "]";
    return out.str();
}

std::string report_text(const SweepResult& result) {
    std::ostringstream out;
    out << "sweep p in [" << result.config.bounds.pmin << ", " << result.config.bounds.pmax
        << "], amax=" << result.config.bounds.amax << ", bmax=" << result.config.bounds.bmax
        << ", kmax=" << result.config.bounds.kmax << "\n";
    out << "pass " << result.summary.pass << ", fail " << result.summary.fail << ", skip "
        << result.summary.skip << "\n";
    if (result.summary.fail > 0) {
        out << "failures:\n";
        for (const auto& rep : result.results)
            if (!rep.pass) out << "  " << report_line(rep) << "\n";
    }
    return out.str();
}

}  // namespace ghn
