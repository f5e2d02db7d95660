#include "vcx/formula.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace vcx {

BipartiteRelation::BipartiteRelation(std::uint32_t x_size, std::uint32_t y_size)
    : x_size_(x_size), y_size_(y_size), rows_(x_size, Bits(y_size)) {}

BipartiteRelation BipartiteRelation::from_strings(const std::vector<std::string>& rows) {
    if (rows.empty()) throw input_error("relation needs at least one row");
    BipartiteRelation r(static_cast<std::uint32_t>(rows.size()),
                        static_cast<std::uint32_t>(rows.front().size()));
    for (std::uint32_t a = 0; a < r.x_size_; ++a) {
        if (rows[a].size() != r.y_size_) throw input_error("relation rows must have equal length");
        r.rows_[a] = Bits::from_string(rows[a]);
    }
    return r;
}

bool BipartiteRelation::at(Point a, Point y) const {
    if (a >= x_size_ || y >= y_size_) throw input_error("relation index out of range");
    return rows_[a].test(y);
}

void BipartiteRelation::set(Point a, Point y, bool v) {
    if (a >= x_size_ || y >= y_size_) throw input_error("relation index out of range");
    rows_[a].set(y, v);
}

static std::vector<Point> normalized_a(const BipartiteRelation& r, const std::vector<Point>& a_set) {
    if (a_set.empty()) throw input_error("parameter set A must be nonempty");
    std::vector<Point> a = a_set;
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    if (a.back() >= r.x_size()) throw input_error("parameter set A exceeds |X|");
    return a;
}

SetSystem phi_types(const BipartiteRelation& r, const std::vector<Point>& a_set) {
    const std::vector<Point> a = normalized_a(r, a_set);
    std::vector<Bits> cols;
    cols.reserve(r.y_size());
    for (Point y = 0; y < r.y_size(); ++y) {
        Bits t(static_cast<std::uint32_t>(a.size()));
        for (std::uint32_t i = 0; i < a.size(); ++i)
            if (r.at(a[i], y)) t.set(i);
        cols.push_back(std::move(t));
    }
    return SetSystem(static_cast<std::uint32_t>(a.size()), std::move(cols));
}

static void check_params(const BipartiteRelation& r, const std::vector<Point>& a, const HonestParams& p) {
    auto in_a = [&a](Point x) { return std::binary_search(a.begin(), a.end(), x); };
    if (p.d.size() != p.n || p.d_prime.size() != p.n || p.d_dblprime.size() != p.n)
        throw input_error("parameter matrices must have n rows");
    for (std::uint32_t i = 0; i < p.n; ++i) {
        if (p.d[i].size() != p.k || p.d_prime[i].size() != p.k || p.d_dblprime[i].size() != p.k)
            throw input_error("parameter matrices must have k columns");
        for (std::uint32_t j = 0; j < p.k; ++j) {
            if (!in_a(p.d[i][j]) || !in_a(p.d_prime[i][j]) || !in_a(p.d_dblprime[i][j]))
                throw input_error("parameter entries must be points of A");
        }
    }
    (void)r;
}

bool eval_psi(const BipartiteRelation& r, const std::vector<Point>& a_set, const HonestParams& params,
              Point a) {
    const std::vector<Point> as = normalized_a(r, a_set);
    check_params(r, as, params);
    if (!std::binary_search(as.begin(), as.end(), a)) throw input_error("evaluation point must lie in A");
    std::uint32_t accepted = 0;
    for (std::uint32_t i = 0; i < params.n; ++i) {
        bool block = true;
        for (Point y = 0; y < r.y_size() && block; ++y) {
            bool guard = true;
            for (std::uint32_t j = 0; j < params.k && guard; ++j) {
                const bool want = params.d_prime[i][j] == params.d_dblprime[i][j];
                if (r.at(params.d[i][j], y) != want) guard = false;
            }
            if (guard && !r.at(a, y)) block = false;
        }
        if (block) ++accepted;
    }
    return 2 * accepted > params.n;
}

namespace {

/// Builds the parameter matrices from a verified decomposition: one guard
/// row per component, literals taken from its witness, padded by repetition
/// to a rectangular n x k shape.
HonestParams params_from_decomposition(const std::vector<Point>& a, const Decomposition& dec,
                                       std::uint32_t k) {
    HonestParams p;
    p.n = static_cast<std::uint32_t>(dec.components.size());
    p.k = k;
    p.anchor_equal = a[0];
    p.anchor_unequal = a[1];
    for (const TeachingCertificate& cert : dec.components) {
        std::vector<Point> row_d, row_dp, row_dpp;
        std::vector<std::pair<Point, bool>> literals;
        for (Point w : cert.witness) literals.emplace_back(a[w], cert.concept_labeling.sign(w));
        if (literals.empty()) {
            // empty witness: the class is a singleton, so any literal the
            // component itself satisfies is satisfied by every column
            literals.emplace_back(a[0], cert.concept_labeling.sign(0));
        }
        for (std::uint32_t j = 0; j < k; ++j) {
            const auto& [pt, sign] = j < literals.size() ? literals[j] : literals.front();
            row_d.push_back(pt);
            row_dp.push_back(p.anchor_equal);
            row_dpp.push_back(sign ? p.anchor_equal : p.anchor_unequal);
        }
        p.d.push_back(std::move(row_d));
        p.d_prime.push_back(std::move(row_dp));
        p.d_dblprime.push_back(std::move(row_dpp));
    }
    return p;
}

std::uint32_t max_witness(const Decomposition& dec) {
    std::uint32_t k = 0;
    for (const TeachingCertificate& c : dec.components) k = std::max(k, c.size());
    return k;
}

void check_exactness(const BipartiteRelation& r, const std::vector<Point>& a, const HonestParams& p,
                     const Labeling& target) {
    for (std::uint32_t i = 0; i < a.size(); ++i) {
        if (eval_psi(r, a, p, a[i]) != target.sign(i))
            throw std::logic_error("definition schema failed to reproduce the target exactly");
    }
}

} // namespace

std::optional<HonestParams> honest_define(const BipartiteRelation& r, const std::vector<Point>& a_set,
                                          Point b, Rational alpha, std::uint32_t n_max, std::uint32_t k) {
    const std::vector<Point> a = normalized_a(r, a_set);
    if (a.size() < 2) throw input_error("needs two anchors: |A| must exceed 1");
    if (b >= r.y_size()) throw input_error("column index out of range");
    const SetSystem types = phi_types(r, a);
    Labeling target(static_cast<std::uint32_t>(a.size()));
    for (std::uint32_t i = 0; i < a.size(); ++i) target.set(i, r.at(a[i], b));
    auto dec = decompose(types, target, alpha, n_max, k);
    if (!dec) return std::nullopt;
    HonestParams p = params_from_decomposition(a, *dec, k);
    check_exactness(r, a, p, target);
    return p;
}

UdtfsReport udtfs_report(const BipartiteRelation& r, const std::vector<Point>& a_set, Rational alpha,
                         std::uint32_t n_max, std::uint32_t k) {
    const std::vector<Point> a = normalized_a(r, a_set);
    if (a.size() < 2) throw input_error("needs two anchors: |A| must exceed 1");
    const SetSystem types = phi_types(r, a);
    UdtfsReport report;
    for (Point b = 0; b < r.y_size(); ++b) {
        UdtfsEntry e;
        e.b = b;
        Labeling target(static_cast<std::uint32_t>(a.size()));
        for (std::uint32_t i = 0; i < a.size(); ++i) target.set(i, r.at(a[i], b));
        auto dec = decompose(types, target, alpha, n_max, k);
        if (dec) {
            e.n_used = static_cast<std::uint32_t>(dec->components.size());
            e.k_used = max_witness(*dec);
            e.params = params_from_decomposition(a, *dec, k);
            e.exact = true;
            for (std::uint32_t i = 0; i < a.size(); ++i)
                if (eval_psi(r, a, *e.params, a[i]) != target.sign(i)) e.exact = false;
            ++report.successes;
        } else {
            ++report.failures;
        }
        report.entries.push_back(std::move(e));
    }
    return report;
}

std::optional<HonestParams> hype_honest_define(const BipartiteRelation& r, const std::vector<Point>& a_set,
                                               const Labeling& gamma, Rational alpha, std::uint32_t n_max,
                                               std::uint32_t k) {
    const std::vector<Point> a = normalized_a(r, a_set);
    if (a.size() < 2) throw input_error("needs two anchors: |A| must exceed 1");
    const SetSystem types = phi_types(r, a);
    const Hype hype = make_hype(types, gamma, k); // throws if not k-consistent
    auto dec = hype_decompose(types, hype, alpha, n_max, k);
    if (!dec) return std::nullopt;
    HonestParams p = params_from_decomposition(a, *dec, k);
    check_exactness(r, a, p, gamma);
    return p;
}

// --- .brel ------------------------------------------------------------------

BipartiteRelation read_brel(std::istream& in) {
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
    if (!next_data_line(header)) throw input_error(".brel: missing header line");
    std::istringstream hs(header);
    std::uint32_t nx = 0, ny = 0;
    if (!(hs >> nx >> ny)) throw input_error(".brel: header must be '|X| |Y|'");
    std::vector<std::string> rows;
    rows.reserve(nx);
    for (std::uint32_t i = 0; i < nx; ++i) {
        std::string row;
        if (!next_data_line(row)) throw input_error(".brel: fewer rows than declared");
        if (row.size() != ny) throw input_error(".brel: row has wrong length");
        rows.push_back(std::move(row));
    }
    return BipartiteRelation::from_strings(rows);
}

BipartiteRelation read_brel_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    return read_brel(in);
}

void write_brel(std::ostream& out, const BipartiteRelation& r, const std::vector<std::string>& comments) {
    for (const std::string& cm : comments) out << "# " << cm << '\n';
    out << r.x_size() << ' ' << r.y_size() << '\n';
    for (Point a = 0; a < r.x_size(); ++a) {
        for (Point y = 0; y < r.y_size(); ++y) out << (r.at(a, y) ? '1' : '0');
        out << '\n';
    }
}

std::string to_brel(const BipartiteRelation& r, const std::vector<std::string>& comments) {
    std::ostringstream os;
    write_brel(os, r, comments);
    return os.str();
}

} // namespace vcx
