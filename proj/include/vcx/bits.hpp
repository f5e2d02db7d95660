#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vcx/errors.hpp"

namespace vcx {

using Point = std::uint32_t;

/// Fixed-width bit vector indexed by points 0..size-1.
///
/// Point 0 is stored at the most significant position, so comparing two
/// vectors word by word is exactly lexicographic comparison of their bit
/// strings with point 0 most significant.  That order is the canonical
/// order used everywhere below.
class Bits {
public:
    Bits() = default;

    explicit Bits(std::uint32_t size) : size_(size), words_((size + 63) / 64, 0) {}

    /// Parses a string of '0'/'1' characters, index 0 first.
    static Bits from_string(std::string_view s) {
        Bits b(static_cast<std::uint32_t>(s.size()));
        for (std::uint32_t i = 0; i < b.size_; ++i) {
            const char c = s[i];
            if (c == '1') {
                b.set(i);
            } else if (c != '0') {
                throw input_error("bit string may contain only '0' and '1'");
            }
        }
        return b;
    }

    std::uint32_t size() const { return size_; }

    bool test(Point p) const { return (words_[p >> 6] >> shift(p)) & 1ULL; }

    void set(Point p, bool v = true) {
        const std::uint64_t mask = 1ULL << shift(p);
        if (v) {
            words_[p >> 6] |= mask;
        } else {
            words_[p >> 6] &= ~mask;
        }
    }

    std::uint32_t count() const {
        std::uint32_t n = 0;
        for (std::uint64_t w : words_) n += static_cast<std::uint32_t>(std::popcount(w));
        return n;
    }

    bool none() const {
        for (std::uint64_t w : words_)
            if (w != 0) return false;
        return true;
    }

    bool any() const { return !none(); }

    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    Bits operator&(const Bits& o) const { return zipped(o, [](std::uint64_t a, std::uint64_t b) { return a & b; }); }
    Bits operator|(const Bits& o) const { return zipped(o, [](std::uint64_t a, std::uint64_t b) { return a | b; }); }
    Bits operator^(const Bits& o) const { return zipped(o, [](std::uint64_t a, std::uint64_t b) { return a ^ b; }); }

    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    /// Complement within the declared width; padding bits stay zero.
    Bits operator~() const {
        Bits r(size_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.mask_tail();
        return r;
    }

    bool operator==(const Bits& o) const { return size_ == o.size_ && words_ == o.words_; }

    /// Canonical order: lexicographic on bits, point 0 most significant.
    std::strong_ordering operator<=>(const Bits& o) const {
        if (auto c = size_ <=> o.size_; c != 0) return c;
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (auto c = words_[i] <=> o.words_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

    std::string to_string() const {
        std::string s(size_, '0');
        for (std::uint32_t i = 0; i < size_; ++i)
            if (test(i)) s[i] = '1';
        return s;
    }

    std::vector<Point> points() const {
        std::vector<Point> out;
        out.reserve(count());
        for (std::uint32_t i = 0; i < size_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    std::uint64_t fnv_hash() const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        auto mix = [&h](std::uint64_t v) {
            for (int i = 0; i < 8; ++i) {
                h ^= (v >> (8 * i)) & 0xff;
                h *= 0x100000001b3ULL;
            }
        };
        mix(size_);
        for (std::uint64_t w : words_) mix(w);
        return h;
    }

private:
    static std::uint32_t shift(Point p) { return 63 - (p & 63); }

    template <class F>
    Bits zipped(const Bits& o, F f) const {
        Bits r(size_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = f(words_[i], o.words_[i]);
        return r;
    }

    void mask_tail() {
        const std::uint32_t r = size_ & 63;
        if (r != 0 && !words_.empty()) words_.back() &= ~0ULL << (64 - r);
    }

    std::uint32_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsHash {
    std::size_t operator()(const Bits& b) const { return static_cast<std::size_t>(b.fnv_hash()); }
};

/// Calls fn(points, mask) for every r-subset of `universe` (a strictly
/// ascending point list) in lexicographic order of the index sequence.
/// Stops and returns true as soon as fn returns true.
template <class F>
bool for_each_combination(const std::vector<Point>& universe, std::uint32_t width, std::uint32_t r, F&& fn) {
    const std::uint32_t n = static_cast<std::uint32_t>(universe.size());
    if (r > n) return false;
    std::vector<std::uint32_t> idx(r);
    for (std::uint32_t i = 0; i < r; ++i) idx[i] = i;
    std::vector<Point> pts(r);
    for (;;) {
        Bits mask(width);
        for (std::uint32_t i = 0; i < r; ++i) {
            pts[i] = universe[idx[i]];
            mask.set(pts[i]);
        }
        if (fn(pts, mask)) return true;
        bool advanced = false;
        for (std::uint32_t i = r; i-- > 0;) {
            if (idx[i] < i + n - r) {
                ++idx[i];
                for (std::uint32_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return false;
    }
}

} // namespace vcx
