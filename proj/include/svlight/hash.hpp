#ifndef SVLIGHT_HASH_HPP
#define SVLIGHT_HASH_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace svlight {

// FNV-1a 64, used to fingerprint extraction configs in counts headers.
inline std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char byte : data) {
        hash ^= byte;
        hash *= 1099511628211ULL;
    }
    return hash;
}

inline std::string to_hex16(std::uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[value & 0xf];
        value >>= 4;
    }
    return out;
}

}  // namespace svlight

#endif
