#include "vcx/compression.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace vcx {

namespace detail {

std::optional<std::vector<Point>> min_hitting_set(const std::vector<Bits>& sets,
                                                  const std::vector<Point>& allowed, std::uint32_t width,
                                                  std::uint32_t max_size) {
    if (sets.empty()) return std::vector<Point>{};
    const std::uint32_t cap = std::min<std::uint32_t>(max_size, static_cast<std::uint32_t>(allowed.size()));
    for (std::uint32_t r = 1; r <= cap; ++r) {
        std::optional<std::vector<Point>> hit;
        for_each_combination(allowed, width, r, [&](const std::vector<Point>& pts, const Bits& mask) {
            for (const Bits& s : sets)
                if (!s.intersects(mask)) return false;
            hit = pts;
            return true;
        });
        if (hit) return hit;
    }
    return std::nullopt;
}

std::optional<std::vector<Point>> teaching_set_in_restriction(const SetSystem& c, const PartialLabeling& cond,
                                                              std::uint32_t max_size) {
    bool realized = false;
    std::vector<Bits> diffs;
    diffs.reserve(c.size());
    for (const Bits& w : c.concepts()) {
        Bits d = (w ^ cond.values()) & cond.domain();
        if (d.none()) {
            realized = true;
        } else {
            diffs.push_back(std::move(d));
        }
    }
    if (!realized) throw input_error("labeling is not a trace of the class");
    std::sort(diffs.begin(), diffs.end());
    diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
    return min_hitting_set(diffs, cond.domain_points(), c.ground_size(), max_size);
}

} // namespace detail

bool certificate_valid(const SetSystem& c, const TeachingCertificate& cert) {
    if (cert.class_digest != c.digest()) return false;
    if (cert.concept_labeling.ground_size() != c.ground_size()) return false;
    if (!c.contains(cert.concept_labeling)) return false;
    Bits mask(c.ground_size());
    for (Point p : cert.witness) {
        if (p >= c.ground_size()) return false;
        mask.set(p);
    }
    for (const Bits& w : c.concepts()) {
        if (((w ^ cert.concept_labeling.bits()) & mask).none() && !(w == cert.concept_labeling.bits()))
            return false;
    }
    return true;
}

KcParameters KcParameters::at(std::uint32_t d) {
    if (d > 55) throw cap_exceeded("kc bound overflows past d = 55");
    KcParameters p;
    p.d = d;
    const std::int64_t pw = std::int64_t{1} << (d + 1);
    p.kc_value = static_cast<std::uint64_t>(pw * (std::int64_t{d} - 2) + d + 4);
    p.k0_value = d == 0 ? 0 : static_cast<std::uint64_t>((std::int64_t{1} << d) * (std::int64_t{d} - 1) + 1);
    return p;
}

std::uint64_t kc_bound(std::uint32_t d) { return KcParameters::at(d).kc_value; }

static PartialLabeling as_partial(const Labeling& c) {
    PartialLabeling pl(c.ground_size());
    for (Point p = 0; p < c.ground_size(); ++p) pl.assign(p, c.sign(p));
    return pl;
}

bool implies_within(const SetSystem& c, const Labeling& concept_labeling, const std::vector<Point>& b,
                    const std::vector<Point>& a0) {
    if (!c.contains(concept_labeling)) throw input_error("concept is not in the class");
    Bits bm(c.ground_size()), am(c.ground_size());
    for (Point p : b) {
        if (p >= c.ground_size()) throw input_error("point index out of range");
        bm.set(p);
    }
    for (Point p : a0) {
        if (p >= c.ground_size()) throw input_error("point index out of range");
        am.set(p);
    }
    for (const Bits& w : c.concepts()) {
        const Bits d = w ^ concept_labeling.bits();
        if ((d & bm).none() && (d & am).any()) return false;
    }
    return true;
}

std::pair<std::uint32_t, TeachingCertificate> teaching_dimension(const SetSystem& c,
                                                                 const Labeling& concept_labeling) {
    if (!c.contains(concept_labeling)) throw input_error("concept is not in the class");
    auto w = detail::teaching_set_in_restriction(c, as_partial(concept_labeling), c.ground_size());
    // the full ground set always teaches, so the search cannot fail
    TeachingCertificate cert{concept_labeling, *w, c.digest()};
    return {cert.size(), std::move(cert)};
}

std::optional<TeachingCertificate> is_k_compressible(const SetSystem& c, const Labeling& concept_labeling,
                                                     std::uint32_t k) {
    if (!c.contains(concept_labeling)) throw input_error("concept is not in the class");
    auto w = detail::teaching_set_in_restriction(c, as_partial(concept_labeling),
                                                 std::min(k, c.ground_size()));
    if (!w) return std::nullopt;
    return TeachingCertificate{concept_labeling, *w, c.digest()};
}

namespace {

bool realized_in(const SetSystem& c, const PartialLabeling& cond) {
    for (const Bits& w : c.concepts())
        if (((w ^ cond.values()) & cond.domain()).none()) return true;
    return false;
}

/// Adjoins a shattered e-set B to the partial labeling, choosing by
/// pigeonhole the pattern on B that lets B replace the absorbed part of the
/// current teaching set: the new labeling keeps a teaching set of size
/// <= k0 inside the restriction to its grown domain.
void pigeonhole_extend(const SetSystem& cur, const SetSystem& rel, PartialLabeling& cp, std::uint32_t e,
                       std::uint32_t k0) {
    const std::uint32_t m = cur.ground_size();
    std::vector<Point> all;
    for (Point p = 0; p < m; ++p)
        if (!cp.defined(p)) all.push_back(p);

    std::vector<Point> b;
    for_each_combination(all, m, e, [&](const std::vector<Point>& pts, const Bits&) {
        if (!shatters(rel, pts)) return false;
        b = pts;
        return true;
    });
    if (b.empty()) throw std::logic_error("relativized class lost its shattered set");

    auto d1opt = detail::teaching_set_in_restriction(cur, cp, k0);
    if (!d1opt) throw std::logic_error("level invariant broken: no k0 teaching set");
    const std::vector<Point>& d1 = *d1opt;

    // group the class by trace pattern on B
    std::map<std::uint32_t, std::vector<const Bits*>> by_trace;
    for (const Bits& w : cur.concepts()) {
        std::uint32_t tr = 0;
        for (Point p : b) tr = (tr << 1) | (w.test(p) ? 1u : 0u);
        by_trace[tr].push_back(&w);
    }

    const std::uint32_t npat = 1u << e;
    std::uint32_t best_pat = 0;
    std::size_t best_absorbed = 0;
    bool found = false;
    for (std::uint32_t pat = 0; pat < npat; ++pat) {
        auto it = by_trace.find(pat);
        if (it == by_trace.end()) continue; // unrealized pattern teaches nothing
        std::size_t absorbed = 0;
        for (Point a : d1) {
            bool forced = true;
            for (const Bits* w : it->second)
                if (w->test(a) != cp.sign(a)) {
                    forced = false;
                    break;
                }
            if (forced) ++absorbed;
        }
        if (!found || absorbed > best_absorbed) {
            found = true;
            best_pat = pat;
            best_absorbed = absorbed;
        }
    }
    if (!found) throw std::logic_error("no realized pattern on the shattered set");

    for (std::uint32_t i = 0; i < e; ++i) cp.assign(b[i], (best_pat >> (e - 1 - i)) & 1u);

    if (!detail::teaching_set_in_restriction(cur, cp, k0))
        throw std::logic_error("pigeonhole extension exceeded the k0 teaching bound");
}

struct LevelResult {
    Bits concept_bits;
    Bits witness;
};

LevelResult find_level(const SetSystem& cur) {
    const std::uint32_t m = cur.ground_size();
    const std::uint32_t e = vc_dimension(cur);
    if (e == 0) return {cur.concept_bits(0), Bits(m)}; // singleton class
    const std::uint64_t k0 = KcParameters::at(e).k0_value;

    if (m <= k0) {
        Bits full = ~Bits(m);
        return {cur.concept_bits(0), full};
    }

    PartialLabeling cp(m);
    for (;;) {
        bool extended = false;
        for (Point p = 0; p < m && !extended; ++p) {
            if (cp.defined(p)) continue;
            for (int eps = 0; eps < 2 && !extended; ++eps) {
                PartialLabeling cand = cp;
                cand.assign(p, eps != 0);
                if (!realized_in(cur, cand)) continue;
                if (cand.domain_size() <= k0 ||
                    detail::teaching_set_in_restriction(cur, cand, static_cast<std::uint32_t>(k0))) {
                    cp = cand;
                    extended = true;
                }
            }
        }
        if (extended) continue;
        SetSystem rel = relativize(cur, cp);
        if (vc_dimension(rel) < e) break;
        pigeonhole_extend(cur, rel, cp, e, static_cast<std::uint32_t>(k0));
    }

    SetSystem rel = relativize(cur, cp);
    LevelResult sub = find_level(rel);
    auto d1 = detail::teaching_set_in_restriction(cur, cp, static_cast<std::uint32_t>(k0));
    if (!d1) throw std::logic_error("level invariant broken at descent");
    Bits witness = sub.witness;
    for (Point p : *d1) witness.set(p);
    return {sub.concept_bits, witness};
}

} // namespace

TeachingCertificate find_kc_compressible(const SetSystem& c) {
    if (c.empty()) throw empty_class_error("compression over an empty class");
    LevelResult r = find_level(c);
    TeachingCertificate cert{Labeling(r.concept_bits), r.witness.points(), c.digest()};
    if (!certificate_valid(c, cert)) throw std::logic_error("constructed certificate failed validation");
    return cert;
}

TeachingCertificate extend_compressible(const SetSystem& c, const PartialLabeling& cond, std::uint32_t l) {
    if (c.empty()) throw empty_class_error("extension over an empty class");
    if (cond.ground_size() != c.ground_size()) throw input_error("condition width does not match ground size");
    SetSystem rel = relativize(c, cond);
    if (rel.empty()) throw input_error("inconsistent condition");
    auto tset = detail::teaching_set_in_restriction(c, cond, std::min(l, cond.domain_size()));
    if (!tset) throw input_error("condition has no teaching set of size <= l in its restriction");
    LevelResult sub = find_level(rel);
    Bits witness = sub.witness;
    for (Point p : *tset) witness.set(p);
    TeachingCertificate cert{Labeling(sub.concept_bits), witness.points(), c.digest()};
    if (!certificate_valid(c, cert)) throw std::logic_error("extension certificate failed validation");
    return cert;
}

std::vector<std::pair<Labeling, std::uint32_t>> rtd_sequence(const SetSystem& c) {
    if (c.empty()) throw empty_class_error("recursive teaching over an empty class");
    SetSystem cur = c;
    std::vector<std::pair<Labeling, std::uint32_t>> out;
    while (!cur.empty()) {
        // the full ground set always teaches, so the first scan succeeds
        std::uint32_t best_td = cur.ground_size() + 1;
        std::size_t best_idx = 0;
        for (std::size_t i = 0; i < cur.size() && best_td > 0; ++i) {
            auto t = detail::teaching_set_in_restriction(cur, as_partial(cur.concept_at(i)), best_td - 1);
            if (t) {
                best_td = static_cast<std::uint32_t>(t->size());
                best_idx = i;
            }
        }
        out.emplace_back(cur.concept_at(best_idx), best_td);
        std::vector<Bits> rest;
        rest.reserve(cur.size() - 1);
        for (std::size_t i = 0; i < cur.size(); ++i)
            if (i != best_idx) rest.push_back(cur.concept_bits(i));
        cur = SetSystem(cur.ground_size(), std::move(rest));
    }
    return out;
}

SetSystem shattering_hard_instance(std::uint32_t n) {
    if (n > 20) throw cap_exceeded("full cube limited to 20 points");
    if (n == 0) throw input_error("cube needs at least one point");
    std::vector<Bits> cs;
    cs.reserve(std::size_t{1} << n);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        Bits w(n);
        for (std::uint32_t j = 0; j < n; ++j)
            if ((v >> (n - 1 - j)) & 1) w.set(j);
        cs.push_back(std::move(w));
    }
    return SetSystem(n, std::move(cs));
}

} // namespace vcx
