#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vcx/compression.hpp"
#include "vcx/set_system.hpp"

namespace vcx {

/// Exact rational threshold; comparisons cross-multiply, never touch
/// floating point (the strict "> alpha*n" cutoff must be bit-exact).
struct Rational {
    std::int64_t num = 1;
    std::int64_t den = 2;

    static Rational parse(const std::string& s); // "p/q"
    static Rational half() { return {1, 2}; }

    /// count > (*this) * total
    bool exceeded_by(std::uint64_t count, std::uint64_t total) const {
        return static_cast<std::int64_t>(count) * den > num * static_cast<std::int64_t>(total);
    }

    bool in_majority_range() const { return 2 * num >= den && num < den; } // [1/2, 1)
    std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }
    bool operator==(const Rational&) const = default;
};

/// The sign held by strictly more than an alpha fraction of the votes;
/// nullopt when neither sign clears the threshold.
std::optional<bool> maj_alpha(const std::vector<bool>& votes, Rational alpha);

/// Pointwise maj_alpha over labelings of a common ground size; points where
/// no sign wins are left undefined.
PartialLabeling rounded_average(const std::vector<Labeling>& concepts, Rational alpha);

/// An ordered multiset of concepts with teaching certificates whose
/// alpha-rounded average reconstructs the target labeling totally.
struct Decomposition {
    Rational alpha;
    std::vector<TeachingCertificate> components;
    Labeling target;
    std::uint32_t k_bound = 0;
};

enum class VerifyFailure {
    none,
    component_not_in_class,
    certificate_mismatch, // digest does not match this class
    certificate_invalid,
    certificate_too_large,
    average_mismatch,
};

struct VerifyResult {
    bool ok = false;
    VerifyFailure reason = VerifyFailure::none;
    explicit operator bool() const { return ok; }
};

const char* to_string(VerifyFailure f);

/// Re-evaluates every invariant from scratch: component membership,
/// certificate validity against the class, size against k_bound, and exact
/// equality of the rounded average with the target (no undefined points).
VerifyResult verify_decomposition(const SetSystem& c, const Decomposition& d);

/// Iterative deepening over multisets (n = 1..n_max) of concepts whose
/// teaching dimension is <= k; returns the first verified decomposition in
/// lexicographic order of component index tuples, or nullopt when the
/// bounded search is exhausted (never a nonexistence claim).
std::optional<Decomposition> decompose(const SetSystem& c, const Labeling& target, Rational alpha,
                                       std::uint32_t n_max, std::uint32_t k);

/// True iff among any p sets of the family some q have a common point
/// (exhaustive over p-subsets).  Every member must be nonempty.
bool pq_property(const SetSystem& family, std::uint32_t p, std::uint32_t q);

/// Minimum-cardinality hitting set of the family, exhaustive by increasing
/// size with lexicographic tie-break; ground size capped at 24.
std::vector<Point> min_transversal(const SetSystem& family);

struct TransversalReport {
    SetSystem family;
    std::uint32_t p = 0;
    std::uint32_t q = 0;
    bool has_pq = false;
    std::vector<Point> min_transversal;
};

TransversalReport transversal_report(const SetSystem& family, std::uint32_t p, std::uint32_t q);

namespace detail {

/// Concepts of c with teaching dimension <= k, in canonical order, each
/// with its minimal certificate.
std::vector<TeachingCertificate> compressible_pool(const SetSystem& c, std::uint32_t k);

/// Multiset search shared by decompose and the hype decomposition: the
/// target need not belong to the class.
std::optional<Decomposition> decompose_into_pool(const SetSystem& c, const Labeling& target, Rational alpha,
                                                 std::uint32_t n_max, std::uint32_t k);

} // namespace detail

} // namespace vcx
