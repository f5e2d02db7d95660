#include "vcx/set_system.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

namespace vcx {

using boost::multiprecision::cpp_int;

PartialLabeling PartialLabeling::from_string(std::string_view s) {
    PartialLabeling pl(static_cast<std::uint32_t>(s.size()));
    for (std::uint32_t i = 0; i < pl.ground_size(); ++i) {
        switch (s[i]) {
            case '0': pl.assign(i, false); break;
            case '1': pl.assign(i, true); break;
            case '*': case '-': break;
            default: throw input_error("partial labeling may contain only '0', '1' and '*'");
        }
    }
    return pl;
}

std::string PartialLabeling::to_string() const {
    std::string s(ground_size(), '*');
    for (std::uint32_t i = 0; i < ground_size(); ++i)
        if (defined(i)) s[i] = sign(i) ? '1' : '0';
    return s;
}

SetSystem::SetSystem(std::uint32_t ground_size, std::vector<Bits> concepts)
    : ground_size_(ground_size), concepts_(std::move(concepts)) {
    for (const Bits& c : concepts_)
        if (c.size() != ground_size_) throw input_error("concept width does not match ground size");
    std::sort(concepts_.begin(), concepts_.end());
    concepts_.erase(std::unique(concepts_.begin(), concepts_.end()), concepts_.end());
}

SetSystem SetSystem::from_strings(const std::vector<std::string>& rows) {
    if (rows.empty()) throw input_error("no concepts given");
    std::vector<Bits> cs;
    cs.reserve(rows.size());
    for (const std::string& r : rows) cs.push_back(Bits::from_string(r));
    return SetSystem(static_cast<std::uint32_t>(rows.front().size()), std::move(cs));
}

std::optional<std::size_t> SetSystem::index_of(const Labeling& c) const {
    if (c.ground_size() != ground_size_) return std::nullopt;
    auto it = std::lower_bound(concepts_.begin(), concepts_.end(), c.bits());
    if (it != concepts_.end() && *it == c.bits()) return static_cast<std::size_t>(it - concepts_.begin());
    return std::nullopt;
}

std::uint64_t SetSystem::digest() const {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ (0x9e3779b97f4a7c15ULL + ground_size_);
    for (const Bits& c : concepts_) {
        h ^= c.fnv_hash();
        h *= 0x100000001b3ULL;
    }
    return h;
}

static void check_points(const SetSystem& c, const std::vector<Point>& b) {
    for (Point p : b)
        if (p >= c.ground_size()) throw input_error("point index out of range");
}

bool shatters(const SetSystem& c, const std::vector<Point>& b) {
    check_points(c, b);
    std::vector<Point> pts = b;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::uint32_t r = static_cast<std::uint32_t>(pts.size());
    if (r >= 26) throw cap_exceeded("shattering check limited to 25 points");
    const std::size_t want = std::size_t{1} << r;
    if (c.size() < want) return false;
    std::vector<bool> seen(want, false);
    std::size_t found = 0;
    for (const Bits& w : c.concepts()) {
        std::size_t tr = 0;
        for (Point p : pts) tr = (tr << 1) | (w.test(p) ? 1u : 0u);
        if (!seen[tr]) {
            seen[tr] = true;
            if (++found == want) return true;
        }
    }
    return false;
}

std::uint32_t vc_dimension(const SetSystem& c) {
    if (c.empty()) throw empty_class_error("vc dimension of an empty class");
    const std::uint32_t m = c.ground_size();
    // Sauer-Shelah: a shattered set of size d forces at least 2^d concepts.
    std::uint32_t upper = 0;
    while (upper < m && (std::size_t{1} << (upper + 1)) <= c.size()) ++upper;
    std::vector<Point> all(m);
    for (std::uint32_t i = 0; i < m; ++i) all[i] = i;
    std::uint32_t best = 0;
    for (std::uint32_t d = 1; d <= upper; ++d) {
        const bool any = for_each_combination(all, m, d, [&](const std::vector<Point>& pts, const Bits&) {
            return shatters(c, pts);
        });
        if (!any) break; // shattering is monotone downward
        best = d;
    }
    return best;
}

SetSystem dual_system(const SetSystem& c) {
    if (c.empty()) throw empty_class_error("dual of an empty class");
    const std::uint32_t n = static_cast<std::uint32_t>(c.size());
    std::vector<Bits> duals;
    duals.reserve(c.ground_size());
    for (std::uint32_t x = 0; x < c.ground_size(); ++x) {
        Bits d(n);
        for (std::uint32_t i = 0; i < n; ++i)
            if (c.concept_bits(i).test(x)) d.set(i);
        duals.push_back(std::move(d));
    }
    return SetSystem(n, std::move(duals));
}

static cpp_int binom_sum(std::uint32_t s, std::uint32_t k) {
    cpp_int total = 0;
    cpp_int term = 1; // C(s, 0)
    for (std::uint32_t i = 0; i <= std::min(s, k); ++i) {
        total += term;
        term = term * (s - i) / (i + 1);
    }
    return total;
}

std::uint64_t sauer_bound(std::uint32_t s, std::uint32_t k) {
    const cpp_int v = binom_sum(s, k);
    if (v > cpp_int(UINT64_MAX)) throw cap_exceeded("sauer_bound exceeds 64 bits");
    return static_cast<std::uint64_t>(v);
}

std::uint64_t conjunction_vc_bound(std::uint32_t n, std::uint32_t k) {
    std::uint64_t best = 0;
    for (std::uint64_t s = 0;; ++s) {
        const cpp_int lhs = boost::multiprecision::pow(binom_sum(static_cast<std::uint32_t>(s), k),
                                                       static_cast<unsigned>(n));
        const cpp_int rhs = cpp_int(1) << s;
        if (lhs >= rhs) {
            best = s;
            continue;
        }
        // 2^s/(s+1)^(kn) is increasing once s+1 >= kn/ln2, so past 2kn a
        // failure is final: binom_sum(s,k)^n <= (s+1)^(kn) < 2^s forever.
        if (s >= 2ULL * n * k + 2 &&
            boost::multiprecision::pow(cpp_int(s + 1), static_cast<unsigned>(n) * k) < rhs) {
            break;
        }
    }
    return best;
}

SetSystem intersection_system(const std::vector<SetSystem>& systems) {
    if (systems.empty()) throw input_error("intersection of zero systems");
    const std::uint32_t m = systems.front().ground_size();
    for (const SetSystem& s : systems) {
        if (s.ground_size() != m) throw input_error("intersection over mismatched ground sizes");
        if (s.empty()) throw empty_class_error("intersection with an empty class");
    }
    // Level-wise: the running intersections after i systems, deduplicated.
    std::unordered_set<Bits, BitsHash> cur(systems.front().concepts().begin(), systems.front().concepts().end());
    for (std::size_t i = 1; i < systems.size(); ++i) {
        std::unordered_set<Bits, BitsHash> next;
        for (const Bits& a : cur)
            for (const Bits& b : systems[i].concepts()) next.insert(a & b);
        cur = std::move(next);
    }
    return SetSystem(m, std::vector<Bits>(cur.begin(), cur.end()));
}

SetSystem restrict_to(const SetSystem& c, const std::vector<Point>& b) {
    check_points(c, b);
    std::vector<Point> pts = b;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<Bits> traces;
    traces.reserve(c.size());
    for (const Bits& w : c.concepts()) {
        Bits t(static_cast<std::uint32_t>(pts.size()));
        for (std::uint32_t i = 0; i < pts.size(); ++i)
            if (w.test(pts[i])) t.set(i);
        traces.push_back(std::move(t));
    }
    return SetSystem(static_cast<std::uint32_t>(pts.size()), std::move(traces));
}

SetSystem relativize(const SetSystem& c, const PartialLabeling& cond) {
    if (cond.ground_size() != c.ground_size()) throw input_error("condition width does not match ground size");
    std::vector<Bits> kept;
    for (const Bits& w : c.concepts())
        if (((w ^ cond.values()) & cond.domain()).none()) kept.push_back(w);
    return SetSystem(c.ground_size(), std::move(kept));
}

// --- .ssys ------------------------------------------------------------------

SetSystem read_ssys(std::istream& in) {
    std::string line;
    auto next_data_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            std::size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos || line[i] == '#') continue;
            std::size_t j = line.find_last_not_of(" \t\r");
            out = line.substr(i, j - i + 1);
            return true;
        }
        return false;
    };
    std::string header;
    if (!next_data_line(header)) throw input_error(".ssys: missing header line");
    std::istringstream hs(header);
    std::uint32_t m = 0, n = 0;
    if (!(hs >> m >> n)) throw input_error(".ssys: header must be 'm n'");
    std::vector<Bits> cs;
    cs.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        std::string row;
        if (!next_data_line(row)) throw input_error(".ssys: fewer concept lines than declared");
        if (row.size() != m) throw input_error(".ssys: concept line has wrong length");
        cs.push_back(Bits::from_string(row));
    }
    return SetSystem(m, std::move(cs));
}

SetSystem read_ssys_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    return read_ssys(in);
}

void write_ssys(std::ostream& out, const SetSystem& c, const std::vector<std::string>& comments) {
    for (const std::string& cm : comments) out << "# " << cm << '\n';
    out << c.ground_size() << ' ' << c.size() << '\n';
    for (const Bits& w : c.concepts()) out << w.to_string() << '\n';
}

std::string to_ssys(const SetSystem& c, const std::vector<std::string>& comments) {
    std::ostringstream os;
    write_ssys(os, c, comments);
    return os.str();
}

} // namespace vcx
