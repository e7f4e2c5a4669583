#ifndef QLC_REPORT_HPP
#define QLC_REPORT_HPP

#include <chrono>
#include <ctime>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qlc/verifier.hpp"

namespace qlc {

inline constexpr int kReportSchema = 1;

inline std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline nlohmann::ordered_json to_json(const PointResult& p) {
    nlohmann::ordered_json j;
    j["mu"] = p.mu.str();
    j["nu"] = p.nu.str();
    j["verdict"] = std::string(to_string(p.verdict));
    j["exact"] = p.exact;
    if (p.index) j["index"] = *p.index;
    if (!p.coefficient.empty()) j["coefficient"] = p.coefficient;
    if (!p.reason.empty()) j["reason"] = p.reason;
    if (!p.indeterminate_indices.empty()) j["indeterminate_indices"] = p.indeterminate_indices;
    if (!p.prefactor.empty()) j["prefactor"] = p.prefactor;
    if (!p.kappa.empty()) j["kappa"] = p.kappa;
    return j;
}

/// JSON report; the timestamp is the only field that varies between runs.
inline nlohmann::ordered_json to_json(const CertificationReport& r, bool with_timestamp) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    if (with_timestamp) j["timestamp"] = utc_timestamp();
    j["theorem"] = std::string(to_string(r.theorem));
    j["family"] = std::string(to_string(r.family));
    j["params"] = {{"a", r.a.str()}, {"c", r.c.str()}, {"sequence", r.sequence}};
    j["order"] = r.order;
    j["precision_bits"] = r.precision;
    nlohmann::ordered_json summary;
    for (const Verdict v : {Verdict::Certified, Verdict::Violation, Verdict::HypothesisUnmet, Verdict::Indeterminate}) {
        std::size_t n = 0;
        for (const auto& p : r.points) n += p.verdict == v ? 1 : 0;
        summary[std::string(to_string(v))] = n;
    }
    j["summary"] = summary;
    j["points"] = nlohmann::ordered_json::array();
    for (const auto& p : r.points) j["points"].push_back(to_json(p));
    return j;
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}

/// One row per grid point.
inline std::string to_csv(const CertificationReport& r) {
    std::ostringstream os;
    os << "theorem,family,a,c,mu,nu,order,verdict,exact,index,coefficient,reason\n";
    for (const auto& p : r.points) {
        os << to_string(r.theorem) << ',' << to_string(r.family) << ',' << r.a << ',' << r.c << ',' << p.mu << ','
           << p.nu << ',' << r.order << ',' << to_string(p.verdict) << ',' << (p.exact ? "true" : "false") << ','
           << (p.index ? std::to_string(*p.index) : "") << ',' << csv_escape(p.coefficient) << ','
           << csv_escape(p.reason) << '\n';
    }
    return os.str();
}

} // namespace qlc

#endif // QLC_REPORT_HPP
