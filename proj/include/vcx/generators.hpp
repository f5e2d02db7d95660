#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "vcx/formula.hpp"
#include "vcx/set_system.hpp"

namespace vcx {

namespace caps {
inline constexpr std::uint32_t ground = 24;
inline constexpr std::uint32_t concepts = 4096;
inline constexpr std::uint32_t hype_ground = 16;
inline constexpr std::uint32_t oracle_ground = 16;
inline constexpr std::uint32_t transversal_ground = 24;
} // namespace caps

enum class Family {
    full_cube,
    singletons,
    thresholds,
    intervals,
    unions_of_t_intervals,
    halfplanes_on_grid,
    order_relation,
    random_filtered,
};

Family family_from_string(const std::string& name);
const char* to_string(Family f);

/// Deterministic: the same spec always produces bit-identical output, and
/// random families record their seed in the emitted file's metadata.
struct GeneratorSpec {
    Family family = Family::thresholds;
    std::uint32_t m = 4;               // points (grid side for halfplanes_on_grid)
    std::uint32_t t = 1;               // interval count for unions_of_t_intervals
    std::uint32_t count = 8;           // concepts for random_filtered
    std::uint32_t vc_cap = UINT32_MAX; // filter for random_filtered
    std::uint64_t seed = 0;

    std::string describe() const;
};

using Generated = std::variant<SetSystem, BipartiteRelation>;

Generated generate(const GeneratorSpec& spec);
SetSystem generate_system(const GeneratorSpec& spec); // throws if the family yields a relation

/// The documented VC dimension of a family, when one is documented.
std::optional<std::uint32_t> documented_vc(const GeneratorSpec& spec);

/// Exact minimum teaching-set size by exhaustive subset enumeration,
/// testing the defining property point by point.  This is an independent
/// code path from the compression module and is used to cross-check it.
std::uint32_t oracle_min_td(const SetSystem& c, const Labeling& concept_labeling);

/// Executes a named suite ("bounds", "decomposition", "udtfs" or "hype")
/// and returns a machine-readable document with run metadata.
nlohmann::json run_report(const std::string& suite, std::uint64_t seed);

nlohmann::json kc_table(std::uint32_t up_to = 7);

} // namespace vcx
