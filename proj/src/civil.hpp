#pragma once

#include <cstdint>

namespace storyfear {

struct CivilTime {
    int year;
    unsigned month;  // 1..12
    unsigned day;    // 1..31
    unsigned hour;   // 0..23
};

// Proleptic Gregorian date from days since 1970-01-01 (Howard Hinnant's
// civil_from_days). No timezone or libc dependence, so results are identical
// everywhere.
inline CivilTime civil_from_utc(std::int64_t secs) {
    std::int64_t days = secs / 86400;
    std::int64_t rem = secs % 86400;
    if (rem < 0) {
        rem += 86400;
        days -= 1;
    }
    const std::int64_t z = days + 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp < 10 ? mp + 3 : mp - 9;
    return CivilTime{static_cast<int>(y + (m <= 2)), m, d,
                     static_cast<unsigned>(rem / 3600)};
}

}  // namespace storyfear
