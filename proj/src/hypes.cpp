#include "vcx/hypes.hpp"

#include <algorithm>
#include <stdexcept>

namespace vcx {

bool is_k_hype(const SetSystem& c, const Labeling& gamma, std::uint32_t k) {
    if (gamma.ground_size() != c.ground_size()) throw input_error("hype width does not match ground size");
    if (c.empty()) throw empty_class_error("hype check against an empty class");
    const std::uint32_t m = c.ground_size();
    const std::uint32_t r = std::min(k, m);
    if (r == 0) return true; // vacuous consistency
    // disagreement masks against gamma; a restriction S extends iff some
    // concept's mask misses S entirely
    std::vector<Bits> diffs;
    diffs.reserve(c.size());
    bool member = false;
    for (const Bits& w : c.concepts()) {
        Bits d = w ^ gamma.bits();
        if (d.none()) member = true;
        diffs.push_back(std::move(d));
    }
    if (member) return true; // a concept extends every restriction of itself
    std::vector<Point> all(m);
    for (std::uint32_t i = 0; i < m; ++i) all[i] = i;
    const bool bad = for_each_combination(all, m, r, [&](const std::vector<Point>&, const Bits& mask) {
        for (const Bits& d : diffs)
            if (!d.intersects(mask)) return false; // extended by that concept
        return true; // no concept extends this restriction
    });
    return !bad;
}

Hype make_hype(const SetSystem& c, const Labeling& gamma, std::uint32_t k) {
    if (!is_k_hype(c, gamma, k)) throw input_error("labeling is not a k-hype for this class");
    return Hype{gamma, k, c.digest()};
}

SetSystem hype_family(const SetSystem& c, std::uint32_t k) {
    if (c.empty()) throw empty_class_error("hype family of an empty class");
    const std::uint32_t m = c.ground_size();
    if (m > 16) throw cap_exceeded("hype family enumeration limited to 16 points");
    std::vector<Bits> hypes;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << m); ++v) {
        Bits w(m);
        for (std::uint32_t j = 0; j < m; ++j)
            if ((v >> (m - 1 - j)) & 1) w.set(j);
        if (is_k_hype(c, Labeling(w), k)) hypes.push_back(std::move(w));
    }
    return SetSystem(m, std::move(hypes));
}

std::optional<Decomposition> hype_decompose(const SetSystem& c, const Hype& gamma, Rational alpha,
                                            std::uint32_t n_max, std::uint32_t k) {
    if (gamma.class_digest != c.digest()) throw input_error("hype was validated against a different class");
    if (!is_k_hype(c, gamma.signs, k)) throw input_error("labeling is not a k-hype for this class");
    return detail::decompose_into_pool(c, gamma.signs, alpha, n_max, k);
}

std::vector<Labeling> hype_cover(const SetSystem& c, const Hype& gamma, std::uint32_t k) {
    if (gamma.class_digest != c.digest()) throw input_error("hype was validated against a different class");
    if (!is_k_hype(c, gamma.signs, k)) throw input_error("labeling is not a k-hype for this class");
    if (k <= vc_dimension(c)) throw input_error("hype cover requires k > vc(C)");
    const std::uint32_t m = c.ground_size();
    const std::uint32_t n = static_cast<std::uint32_t>(c.size());
    // agreement masks; 1-consistency guarantees their union is the full ground set
    std::vector<Bits> agree;
    agree.reserve(n);
    for (const Bits& w : c.concepts()) agree.push_back(~(w ^ gamma.signs.bits()));
    const Bits full = ~Bits(m);
    std::vector<Point> all(n);
    for (std::uint32_t i = 0; i < n; ++i) all[i] = i;
    for (std::uint32_t t = 1; t <= n; ++t) {
        std::vector<Labeling> cover;
        const bool found = for_each_combination(all, n, t, [&](const std::vector<Point>& idxs, const Bits&) {
            Bits covered(m);
            for (Point i : idxs) covered |= agree[i];
            if (!(covered == full)) return false;
            for (Point i : idxs) cover.push_back(c.concept_at(i));
            return true;
        });
        if (found) return cover;
    }
    throw std::logic_error("no cover found for a 1-consistent hype");
}

} // namespace vcx
