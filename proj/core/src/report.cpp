#include "mlqm/report.hpp"

#include <sstream>

namespace mlqm {

bool VerificationReport::all_ok() const {
    for (const auto& r : relations)
        if (!r.ok) return false;
    return true;
}

void VerificationReport::add(std::string relation, bool ok, std::size_t residualTerms,
                             std::string residual) {
    relations.push_back({std::move(relation), ok, residualTerms, std::move(residual)});
}

void VerificationReport::merge(const VerificationReport& other) {
    relations.insert(relations.end(), other.relations.begin(), other.relations.end());
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string VerificationReport::to_json() const {
    std::ostringstream os;
    os << "{\"subject\":\"" << json_escape(subject) << "\",\"all_ok\":"
       << (all_ok() ? "true" : "false") << ",\"relations\":[";
    for (std::size_t i = 0; i < relations.size(); ++i) {
        const auto& r = relations[i];
        if (i) os << ",";
        os << "{\"relation\":\"" << json_escape(r.relation) << "\",\"status\":\""
           << (r.ok ? "ok" : "fail") << "\",\"residual_terms\":" << r.residualTerms;
        if (!r.ok && !r.residual.empty())
            os << ",\"residual\":\"" << json_escape(r.residual) << "\"";
        os << "}";
    }
    os << "]}";
    return os.str();
}

} // namespace mlqm
