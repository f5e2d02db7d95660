#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vcx/bits.hpp"
#include "vcx/errors.hpp"

namespace vcx {

/// A total sign assignment on points 0..ground_size-1.
class Labeling {
public:
    Labeling() = default;
    explicit Labeling(std::uint32_t ground_size) : bits_(ground_size) {}
    explicit Labeling(Bits bits) : bits_(std::move(bits)) {}
    static Labeling from_string(std::string_view s) { return Labeling(Bits::from_string(s)); }

    std::uint32_t ground_size() const { return bits_.size(); }
    bool sign(Point p) const { return bits_.test(p); }
    void set(Point p, bool v) { bits_.set(p, v); }
    const Bits& bits() const { return bits_; }
    std::string to_string() const { return bits_.to_string(); }

    bool operator==(const Labeling& o) const { return bits_ == o.bits_; }
    std::strong_ordering operator<=>(const Labeling& o) const { return bits_ <=> o.bits_; }

private:
    Bits bits_;
};

/// A sign assignment on a subset D of the points; each point is mapped at
/// most once and undefined points carry no value.
class PartialLabeling {
public:
    PartialLabeling() = default;
    explicit PartialLabeling(std::uint32_t ground_size) : domain_(ground_size), values_(ground_size) {}

    /// Parses a string over {0,1,*}; '*' marks an undefined point.
    static PartialLabeling from_string(std::string_view s);

    std::uint32_t ground_size() const { return domain_.size(); }
    bool defined(Point p) const { return domain_.test(p); }
    bool sign(Point p) const { return values_.test(p); }
    std::uint32_t domain_size() const { return domain_.count(); }
    bool total() const { return domain_size() == ground_size(); }
    std::vector<Point> domain_points() const { return domain_.points(); }
    const Bits& domain() const { return domain_; }
    const Bits& values() const { return values_; }

    void assign(Point p, bool v) {
        if (p >= ground_size()) throw input_error("point out of range");
        domain_.set(p);
        values_.set(p, v);
    }

    /// True iff the labeling agrees with this assignment on its whole domain.
    bool consistent_with(const Labeling& c) const { return ((c.bits() ^ values_) & domain_).none(); }

    Labeling as_total() const {
        if (!total()) throw input_error("partial labeling is not total");
        return Labeling(values_);
    }

    std::string to_string() const;

private:
    Bits domain_;
    Bits values_; // zero outside the domain
};

/// A finite ground set together with a deduplicated family of concepts
/// (binary labelings), kept in canonical order: lexicographic on bits with
/// point 0 most significant.
class SetSystem {
public:
    SetSystem() = default;
    SetSystem(std::uint32_t ground_size, std::vector<Bits> concepts);
    static SetSystem from_strings(const std::vector<std::string>& rows);

    std::uint32_t ground_size() const { return ground_size_; }
    std::size_t size() const { return concepts_.size(); }
    bool empty() const { return concepts_.empty(); }
    const std::vector<Bits>& concepts() const { return concepts_; }
    const Bits& concept_bits(std::size_t i) const { return concepts_[i]; }
    Labeling concept_at(std::size_t i) const { return Labeling(concepts_[i]); }

    bool contains(const Labeling& c) const { return index_of(c).has_value(); }
    std::optional<std::size_t> index_of(const Labeling& c) const;

    /// Content hash used to tie certificates and hypes to the class they
    /// were computed against.
    std::uint64_t digest() const;

    bool operator==(const SetSystem& o) const = default;

private:
    std::uint32_t ground_size_ = 0;
    std::vector<Bits> concepts_;
};

// --- VC toolkit -----------------------------------------------------------

/// True iff every sign pattern on B is the trace of some concept.
bool shatters(const SetSystem& c, const std::vector<Point>& b);

/// Largest cardinality of a shattered point set; 0 for a singleton class.
/// Throws empty_class_error on an empty class.
std::uint32_t vc_dimension(const SetSystem& c);

/// The dual system: ground set indexes the concepts of `c` in canonical
/// order, and each original point x contributes the concept
/// { i : x belongs to concept i }.
SetSystem dual_system(const SetSystem& c);

/// Sum of binomial coefficients C(s,0) + ... + C(s,k), exact.
/// Throws cap_exceeded if the value does not fit in 64 bits.
std::uint64_t sauer_bound(std::uint32_t s, std::uint32_t k);

/// max { s : sauer_bound(s,k)^n >= 2^s }.  The scan stops once the
/// polynomial (s+1)^(kn) has fallen below 2^s on the monotone tail, which
/// bounds every later term.
std::uint64_t conjunction_vc_bound(std::uint32_t n, std::uint32_t k);

/// All n-fold intersections s_1 & ... & s_n with s_i drawn from the i-th
/// system; systems must share a ground set.
SetSystem intersection_system(const std::vector<SetSystem>& systems);

/// Restriction to B: ground set reindexed to B in ascending order (point i
/// of the result is the i-th smallest element of B), concepts deduplicated.
SetSystem restrict_to(const SetSystem& c, const std::vector<Point>& b);

/// The subclass of concepts extending the partial labeling; same ground
/// set.  May be empty; analyses reject empty classes themselves.
SetSystem relativize(const SetSystem& c, const PartialLabeling& cond);

// --- .ssys text format ------------------------------------------------------
//
// Line 1: "m n" (ground size, concept count), then n lines of m characters
// from {0,1}.  '#' starts a comment line.  Emission is canonical, so
// parse(emit(S)) == S exactly.

SetSystem read_ssys(std::istream& in);
SetSystem read_ssys_file(const std::string& path);
void write_ssys(std::ostream& out, const SetSystem& c, const std::vector<std::string>& comments = {});
std::string to_ssys(const SetSystem& c, const std::vector<std::string>& comments = {});

} // namespace vcx
