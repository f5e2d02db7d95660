#include "vcx/rounded_average.hpp"

#include <algorithm>
#include <numeric>

namespace vcx {

Rational Rational::parse(const std::string& s) {
    const std::size_t slash = s.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 >= s.size())
        throw input_error("rational must look like p/q");
    std::int64_t p = 0, q = 0;
    try {
        p = std::stoll(s.substr(0, slash));
        q = std::stoll(s.substr(slash + 1));
    } catch (const std::exception&) {
        throw input_error("rational must look like p/q");
    }
    if (q <= 0 || p < 0) throw input_error("rational must have positive denominator");
    const std::int64_t g = std::gcd(p, q);
    return {p / g, q / g};
}

static void check_alpha(Rational alpha) {
    if (!alpha.in_majority_range()) throw input_error("alpha must lie in [1/2, 1)");
}

std::optional<bool> maj_alpha(const std::vector<bool>& votes, Rational alpha) {
    if (votes.empty()) throw input_error("majority of zero votes");
    check_alpha(alpha);
    const std::uint64_t n = votes.size();
    std::uint64_t ones = 0;
    for (bool v : votes)
        if (v) ++ones;
    if (alpha.exceeded_by(ones, n)) return true;
    if (alpha.exceeded_by(n - ones, n)) return false;
    return std::nullopt;
}

PartialLabeling rounded_average(const std::vector<Labeling>& concepts, Rational alpha) {
    if (concepts.empty()) throw input_error("rounded average of zero labelings");
    check_alpha(alpha);
    const std::uint32_t m = concepts.front().ground_size();
    for (const Labeling& c : concepts)
        if (c.ground_size() != m) throw input_error("rounded average over mixed ground sizes");
    const std::uint64_t n = concepts.size();
    PartialLabeling avg(m);
    for (Point p = 0; p < m; ++p) {
        std::uint64_t ones = 0;
        for (const Labeling& c : concepts)
            if (c.sign(p)) ++ones;
        if (alpha.exceeded_by(ones, n)) {
            avg.assign(p, true);
        } else if (alpha.exceeded_by(n - ones, n)) {
            avg.assign(p, false);
        }
    }
    return avg;
}

const char* to_string(VerifyFailure f) {
    switch (f) {
        case VerifyFailure::none: return "ok";
        case VerifyFailure::component_not_in_class: return "component not in class";
        case VerifyFailure::certificate_mismatch: return "certificate bound to a different class";
        case VerifyFailure::certificate_invalid: return "certificate invalid";
        case VerifyFailure::certificate_too_large: return "certificate larger than k bound";
        case VerifyFailure::average_mismatch: return "average mismatch";
    }
    return "unknown";
}

VerifyResult verify_decomposition(const SetSystem& c, const Decomposition& d) {
    if (d.components.empty() || !d.alpha.in_majority_range())
        return {false, VerifyFailure::average_mismatch};
    std::vector<Labeling> parts;
    parts.reserve(d.components.size());
    for (const TeachingCertificate& cert : d.components) {
        if (!c.contains(cert.concept_labeling)) return {false, VerifyFailure::component_not_in_class};
        if (cert.class_digest != c.digest()) return {false, VerifyFailure::certificate_mismatch};
        if (!certificate_valid(c, cert)) return {false, VerifyFailure::certificate_invalid};
        if (cert.size() > d.k_bound) return {false, VerifyFailure::certificate_too_large};
        parts.push_back(cert.concept_labeling);
    }
    if (d.target.ground_size() != c.ground_size()) return {false, VerifyFailure::average_mismatch};
    const PartialLabeling avg = rounded_average(parts, d.alpha);
    if (!avg.total() || !(avg.values() == d.target.bits())) return {false, VerifyFailure::average_mismatch};
    return {true, VerifyFailure::none};
}

namespace detail {

std::vector<TeachingCertificate> compressible_pool(const SetSystem& c, std::uint32_t k) {
    std::vector<TeachingCertificate> pool;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (auto cert = is_k_compressible(c, c.concept_at(i), k)) pool.push_back(std::move(*cert));
    }
    return pool;
}

std::optional<Decomposition> decompose_into_pool(const SetSystem& c, const Labeling& target, Rational alpha,
                                                 std::uint32_t n_max, std::uint32_t k) {
    check_alpha(alpha);
    if (n_max == 0) throw input_error("n_max must be at least 1");
    if (target.ground_size() != c.ground_size()) throw input_error("target width does not match ground size");
    const std::vector<TeachingCertificate> pool = compressible_pool(c, k);
    if (pool.empty()) return std::nullopt;
    const std::uint32_t m = c.ground_size();
    const std::size_t psz = pool.size();

    for (std::uint32_t n = 1; n <= n_max; ++n) {
        // nondecreasing index tuples in lexicographic order
        std::vector<std::size_t> idx(n, 0);
        std::vector<std::uint32_t> ones(m, 0);
        auto recount = [&]() {
            std::fill(ones.begin(), ones.end(), 0);
            for (std::size_t i : idx)
                for (Point p = 0; p < m; ++p)
                    if (pool[i].concept_labeling.sign(p)) ++ones[p];
        };
        recount();
        for (;;) {
            bool match = true;
            for (Point p = 0; p < m && match; ++p) {
                const bool want = target.sign(p);
                const std::uint64_t agree = want ? ones[p] : n - ones[p];
                if (!alpha.exceeded_by(agree, n)) match = false;
            }
            if (match) {
                Decomposition d;
                d.alpha = alpha;
                d.target = target;
                d.k_bound = k;
                for (std::size_t i : idx) d.components.push_back(pool[i]);
                return d;
            }
            // advance the multiset odometer
            std::size_t j = n;
            while (j > 0 && idx[j - 1] == psz - 1) --j;
            if (j == 0) break;
            const std::size_t v = idx[j - 1] + 1;
            for (std::size_t t = j - 1; t < n; ++t) idx[t] = v;
            recount();
        }
    }
    return std::nullopt;
}

} // namespace detail

std::optional<Decomposition> decompose(const SetSystem& c, const Labeling& target, Rational alpha,
                                       std::uint32_t n_max, std::uint32_t k) {
    if (!c.contains(target)) throw input_error("target is not in the class");
    return detail::decompose_into_pool(c, target, alpha, n_max, k);
}

bool pq_property(const SetSystem& family, std::uint32_t p, std::uint32_t q) {
    if (q > p || q == 0) throw input_error("pq property needs 1 <= q <= p");
    for (const Bits& s : family.concepts())
        if (s.none()) throw input_error("pq property requires nonempty members");
    const std::uint32_t n = static_cast<std::uint32_t>(family.size());
    if (n < p) return true; // no p-subset to witness a failure
    std::vector<Point> all(n);
    for (std::uint32_t i = 0; i < n; ++i) all[i] = i;
    const bool bad = for_each_combination(all, n, p, [&](const std::vector<Point>& subset, const Bits&) {
        // look for q of them with a common point
        const bool good = for_each_combination(subset, n, q, [&](const std::vector<Point>& qs, const Bits&) {
            Bits common = ~Bits(family.ground_size());
            for (Point i : qs) common = common & family.concept_bits(i);
            return common.any();
        });
        return !good; // a p-subset with no intersecting q-subset refutes the property
    });
    return !bad;
}

std::vector<Point> min_transversal(const SetSystem& family) {
    if (family.ground_size() > 24) throw cap_exceeded("transversal search limited to 24 points");
    if (family.empty()) return {};
    for (const Bits& s : family.concepts())
        if (s.none()) throw input_error("transversal requires nonempty members");
    std::vector<Point> all(family.ground_size());
    for (std::uint32_t i = 0; i < family.ground_size(); ++i) all[i] = i;
    auto hit = detail::min_hitting_set(family.concepts(), all, family.ground_size(), family.ground_size());
    // nonempty members guarantee the full ground set hits everything
    return *hit;
}

TransversalReport transversal_report(const SetSystem& family, std::uint32_t p, std::uint32_t q) {
    TransversalReport r;
    r.family = family;
    r.p = p;
    r.q = q;
    r.has_pq = pq_property(family, p, q);
    r.min_transversal = min_transversal(family);
    return r;
}

} // namespace vcx
