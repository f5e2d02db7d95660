#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vcx/hypes.hpp"
#include "vcx/rounded_average.hpp"
#include "vcx/set_system.hpp"

namespace vcx {

/// A finite 0/1 relation R on X x Y; entry (a,y) plays the role of the
/// truth value of a formula at (a,y).  Columns restricted to a parameter
/// set A are the types over A.
class BipartiteRelation {
public:
    BipartiteRelation() = default;
    BipartiteRelation(std::uint32_t x_size, std::uint32_t y_size);
    static BipartiteRelation from_strings(const std::vector<std::string>& rows);

    std::uint32_t x_size() const { return x_size_; }
    std::uint32_t y_size() const { return y_size_; }
    bool at(Point a, Point y) const;
    void set(Point a, Point y, bool v);

    bool operator==(const BipartiteRelation&) const = default;

private:
    std::uint32_t x_size_ = 0;
    std::uint32_t y_size_ = 0;
    std::vector<Bits> rows_; // one width-y_size row per element of X
};

/// Deduplicated column restrictions { y |-> (R(a,y))_{a in A} } as a system
/// over ground A (point i of the result is the i-th smallest element of A).
SetSystem phi_types(const BipartiteRelation& r, const std::vector<Point>& a_set);

/// Parameters of the definition schema
///   Maj_{i<n} forall y ( AND_{j<k} (R(d[i][j],y) <-> (d'[i][j] == d''[i][j])) -> R(x,y) ).
/// Each guard row encodes one component's teaching set as signed literals:
/// the sign of literal j is carried by whether d'[i][j] equals d''[i][j],
/// using two fixed distinct anchor points of A.
struct HonestParams {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::vector<std::vector<Point>> d;        // n x k, points of A
    std::vector<std::vector<Point>> d_prime;  // n x k, points of A
    std::vector<std::vector<Point>> d_dblprime;

    Point anchor_equal = 0;   // c0
    Point anchor_unequal = 0; // c1
};

/// Exact evaluation of the schema at point a; the universal quantifier
/// ranges over all of Y and the outer majority is strict (> n/2).
bool eval_psi(const BipartiteRelation& r, const std::vector<Point>& a_set, const HonestParams& params,
              Point a);

/// Synthesizes parameters whose schema carves out column b on A exactly:
/// the type of column b over A is decomposed into concepts with teaching
/// certificates of size <= k, each certificate becomes one guard row
/// (padded by repetition to exactly k literals), and the two
/// lexicographically least points of A serve as equality anchors.
/// Returns nullopt when the bounded decomposition search is exhausted.
std::optional<HonestParams> honest_define(const BipartiteRelation& r, const std::vector<Point>& a_set,
                                          Point b, Rational alpha, std::uint32_t n_max, std::uint32_t k);

struct UdtfsEntry {
    Point b = 0;
    std::optional<HonestParams> params;
    std::uint32_t n_used = 0;
    std::uint32_t k_used = 0; // largest unpadded witness
    bool exact = false;       // eval_psi set equals the column on A
};

struct UdtfsReport {
    std::size_t successes = 0;
    std::size_t failures = 0;
    std::vector<UdtfsEntry> entries;
};

/// Runs honest_define for every column of Y and re-evaluates each success.
UdtfsReport udtfs_report(const BipartiteRelation& r, const std::vector<Point>& a_set, Rational alpha,
                         std::uint32_t n_max, std::uint32_t k);

/// Same synthesis for a k-hype target over phi_types(r, A): gamma need not
/// be a realized column, but every <= k of its literals must be.
std::optional<HonestParams> hype_honest_define(const BipartiteRelation& r, const std::vector<Point>& a_set,
                                               const Labeling& gamma, Rational alpha, std::uint32_t n_max,
                                               std::uint32_t k);

// --- .brel text format ----------------------------------------------------
//
// Line 1: "|X| |Y|", then |X| lines of |Y| characters from {0,1}.
// '#' starts a comment line.

BipartiteRelation read_brel(std::istream& in);
BipartiteRelation read_brel_file(const std::string& path);
void write_brel(std::ostream& out, const BipartiteRelation& r, const std::vector<std::string>& comments = {});
std::string to_brel(const BipartiteRelation& r, const std::vector<std::string>& comments = {});

} // namespace vcx
