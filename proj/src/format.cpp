#include "difftab/format.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace difftab {

std::string plainDecimal(double v, int significant) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    if (v == 0.0) {
        return "0";
    }
    if (significant < 1) {
        significant = 1;
    }
    int magnitude = static_cast<int>(std::floor(std::log10(std::fabs(v))));
    int decimals = significant - 1 - magnitude;
    if (decimals < 0) {
        decimals = 0;
    }
    std::ostringstream os;
    os << std::fixed << std::setprecision(decimals) << v;
    std::string s = os.str();
    if (s.find('.') != std::string::npos) {
        std::size_t last = s.find_last_not_of('0');
        if (s[last] == '.') {
            --last;
        }
        s.erase(last + 1);
    }
    if (s == "-0") {
        s = "0";
    }
    return s;
}

}  // namespace difftab
