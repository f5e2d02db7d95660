#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vcx/rounded_average.hpp"
#include "vcx/set_system.hpp"

namespace vcx {

/// A total sign assignment every sub-assignment of size <= k of which is
/// extended by some member of the class; a hypothetical type.
struct Hype {
    Labeling signs;
    std::uint32_t k = 0;
    std::uint64_t class_digest = 0;
};

/// Exhaustive k-consistency check: every restriction of gamma to
/// min(k, ground_size) points must be the trace of some concept.
bool is_k_hype(const SetSystem& c, const Labeling& gamma, std::uint32_t k);

/// Validated constructor; throws input_error when gamma is not k-consistent.
Hype make_hype(const SetSystem& c, const Labeling& gamma, std::uint32_t k);

/// The system of all k-hypes over the same ground set, by enumeration of
/// all 2^m labelings; ground size capped at 16.
SetSystem hype_family(const SetSystem& c, std::uint32_t k);

/// Same bounded multiset search as decompose, except the target is a
/// k-hype that need not belong to the class.
std::optional<Decomposition> hype_decompose(const SetSystem& c, const Hype& gamma, Rational alpha,
                                            std::uint32_t n_max, std::uint32_t k);

/// Minimum-size list of concepts such that every point has some listed
/// concept agreeing with the hype there (exhaustive set cover, lexicographic
/// tie-break).  Requires k > vc(C).
std::vector<Labeling> hype_cover(const SetSystem& c, const Hype& gamma, std::uint32_t k);

} // namespace vcx
