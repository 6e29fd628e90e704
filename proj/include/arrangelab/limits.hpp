#ifndef ARRANGELAB_LIMITS_HPP
#define ARRANGELAB_LIMITS_HPP

#include <cstddef>
#include <cstdlib>
#include <string>

namespace arrangelab {

// Enumeration guards.  Circuit/flat/monomial enumeration is exponential by
// design; the cap bounds the number of intermediate sets before giving up.
struct Limits {
    std::size_t max_intermediate = 1'000'000;
    std::size_t max_pairs = 1'000'000; // Buchberger S-pair budget

    static Limits from_env() {
        Limits l;
        if (const char* s = std::getenv("ARRANGELAB_CAP")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(s, &end, 10);
            if (end && *end == '\0' && v > 0) {
                l.max_intermediate = static_cast<std::size_t>(v);
                l.max_pairs = static_cast<std::size_t>(v);
            }
        }
        return l;
    }
};

} // namespace arrangelab

#endif
