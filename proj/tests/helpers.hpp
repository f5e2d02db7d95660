#pragma once

#include <random>
#include <string>
#include <vector>

#include "vcx/set_system.hpp"

namespace vcx::test {

inline SetSystem sys(const std::vector<std::string>& rows) { return SetSystem::from_strings(rows); }

inline Labeling lab(const std::string& s) { return Labeling::from_string(s); }

inline PartialLabeling plab(const std::string& s) { return PartialLabeling::from_string(s); }

/// Seeded random class, built directly so property tests do not depend on
/// the generator module they may be checking.
inline SetSystem random_system(std::mt19937_64& rng, std::uint32_t m, std::uint32_t want) {
    std::vector<Bits> cs;
    while (cs.size() < want) {
        const std::uint64_t raw = rng();
        Bits w(m);
        for (std::uint32_t j = 0; j < m; ++j)
            if ((raw >> j) & 1) w.set(j);
        cs.push_back(std::move(w));
    }
    return SetSystem(m, std::move(cs));
}

inline std::vector<Point> random_subset(std::mt19937_64& rng, std::uint32_t m, std::uint32_t max_size) {
    std::vector<Point> pts;
    const std::uint32_t want = static_cast<std::uint32_t>(rng() % (max_size + 1));
    while (pts.size() < want) {
        const Point p = static_cast<Point>(rng() % m);
        bool dup = false;
        for (Point q : pts) dup = dup || q == p;
        if (!dup) pts.push_back(p);
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

} // namespace vcx::test
