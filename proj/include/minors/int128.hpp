#pragma once

#include <cstdint>
#include <string>

namespace minors {

using u128 = unsigned __int128;
using i128 = __int128;

inline std::string to_string_u128(u128 v) {
    if (v == 0) return "0";
    char buf[40];
    int pos = 40;
    while (v != 0) {
        buf[--pos] = static_cast<char>('0' + static_cast<unsigned>(v % 10));
        v /= 10;
    }
    return std::string(buf + pos, buf + 40);
}

inline std::string to_string_i128(i128 v) {
    if (v < 0) return "-" + to_string_u128(static_cast<u128>(-v));
    return to_string_u128(static_cast<u128>(v));
}

inline u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace minors
