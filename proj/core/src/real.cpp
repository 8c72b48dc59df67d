#include "mordell/real.hpp"

#include <cstdio>
#include <vector>

namespace mordell {

std::string Real::str(int significant_digits) const {
    char fmt[32];
    std::snprintf(fmt, sizeof fmt, "%%.%dRg", significant_digits);
    int len = mpfr_snprintf(nullptr, 0, fmt, v_);
    std::vector<char> buf(static_cast<size_t>(len) + 1);
    mpfr_snprintf(buf.data(), buf.size(), fmt, v_);
    return std::string(buf.data());
}

}  // namespace mordell
