#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "vcx/set_system.hpp"

namespace vcx {

/// A subset of the ground set on which a concept's labels determine it
/// uniquely within its class, together with that concept and a digest of
/// the class the uniqueness was established against.
struct TeachingCertificate {
    Labeling concept_labeling;
    std::vector<Point> witness; // ascending
    std::uint64_t class_digest = 0;

    std::uint32_t size() const { return static_cast<std::uint32_t>(witness.size()); }
};

/// Full-scan check of the certificate invariant: the concept belongs to the
/// class and is its unique member agreeing with it on the witness set.
bool certificate_valid(const SetSystem& c, const TeachingCertificate& cert);

/// The compression-size bound kc(d) = 2^(d+1)(d-2) + d + 4 and the
/// per-level constant k0(d) = 2^d(d-1) + 1 used by the recursion
/// (kc(d) = kc(d-1) + k0(d) for d >= 1).
struct KcParameters {
    std::uint32_t d = 0;
    std::uint64_t kc_value = 0;
    std::uint64_t k0_value = 0; // meaningful for d >= 1

    static KcParameters at(std::uint32_t d);
};

std::uint64_t kc_bound(std::uint32_t d);

/// True iff every concept agreeing with c on B also agrees with c on A0.
/// Throws input_error if c is not in the class.
bool implies_within(const SetSystem& c, const Labeling& concept_labeling,
                    const std::vector<Point>& b, const std::vector<Point>& a0);

/// Minimal teaching-set size of a concept, plus the lexicographically least
/// witness of that size.  On a finite ground set a teaching set determines
/// the whole concept, so the minimal witness against A0 = ground set is the
/// teaching dimension.
std::pair<std::uint32_t, TeachingCertificate> teaching_dimension(const SetSystem& c,
                                                                 const Labeling& concept_labeling);

/// Teaching dimension <= k; the certificate is returned exactly when true.
std::optional<TeachingCertificate> is_k_compressible(const SetSystem& c, const Labeling& concept_labeling,
                                                     std::uint32_t k);

/// Produces a concept whose certificate has size <= kc(vc(C)).
///
/// This is the constructive recursion behind the kc bound: level by level a
/// partial labeling is grown point by point while it keeps a teaching set
/// of size <= k0 inside the restriction to its domain; when no single-point
/// extension survives and the relativized class still has full VC
/// dimension, a shattered set B is adjoined at once, labelled with the
/// pattern that (by pigeonhole over the patterns on B) absorbs enough of
/// the current teaching set to stay within k0.  Once the relativized class
/// has smaller VC dimension the recursion descends into it, and the final
/// witness is the union of the per-level teaching sets.
TeachingCertificate find_kc_compressible(const SetSystem& c);

/// Extends a consistent partial labeling with an l-sized teaching set in
/// the restriction to its domain to a total concept whose certificate has
/// size <= l + kc(vc(C)).
TeachingCertificate extend_compressible(const SetSystem& c, const PartialLabeling& cond, std::uint32_t l);

/// Repeatedly removes a concept of minimal teaching dimension (canonical
/// order breaks ties) and records its dimension against the class it was
/// removed from.
std::vector<std::pair<Labeling, std::uint32_t>> rtd_sequence(const SetSystem& c);

/// The full cube on n points: every concept needs its whole ground set as
/// a teaching set, so nothing is (n-1)-compressible.
SetSystem shattering_hard_instance(std::uint32_t n);

namespace detail {

/// Lexicographically least minimum hitting set for `sets` (all nonzero)
/// among subsets of `allowed` of size <= max_size; nullopt if none fits.
std::optional<std::vector<Point>> min_hitting_set(const std::vector<Bits>& sets,
                                                  const std::vector<Point>& allowed, std::uint32_t width,
                                                  std::uint32_t max_size);

/// Minimal teaching set of the partial labeling cond (which must be a
/// restriction of some concept) within the restriction of the class to
/// cond's domain; witness points are original indices inside the domain.
std::optional<std::vector<Point>> teaching_set_in_restriction(const SetSystem& c, const PartialLabeling& cond,
                                                              std::uint32_t max_size);

} // namespace detail

} // namespace vcx
