#include "qq/report.hpp"

#include <sstream>

namespace qq {

std::string to_text(const Report& r) {
    std::ostringstream os;
    os << (r.pass() ? "[ok]  " : "[FAIL] ") << r.name << ": " << r.checked << " checked";
    if (r.failed > 0) {
        os << ", " << r.failed << " failed";
        if (!r.examples.empty()) os << " (first: " << r.examples.front() << ")";
    }
    os << " [seed " << r.seed << "]\n";
    return os.str();
}

std::string to_text(const std::vector<Report>& rs) {
    std::string out;
    for (const Report& r : rs) out += to_text(r);
    return out;
}

} // namespace qq
