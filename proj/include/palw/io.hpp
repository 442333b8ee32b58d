#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "palw/decompose.hpp"
#include "palw/finite_groups.hpp"
#include "palw/nilprod.hpp"
#include "palw/pal_width.hpp"
#include "palw/wreath.hpp"

namespace palw {

using json = nlohmann::json;

/// Group ingestion format:
///   {"kind": "cyclic", "n": 4}
///   {"kind": "dihedral", "n": 5}
///   {"kind": "sym3_fink"}
///   {"kind": "abelian", "moduli": [2, 2]}
///   {"kind": "direct_product", "factors": [<spec>, ...]}
///   {"kind": "nilprod", "factors": [{"moduli": [2]}, {"moduli": [3]}]}
///   {"kind": "table", "table": [[...], ...],
///    "generators": [{"label": "a", "element": 1}, ...], "names": [...]}
struct GroupSpec {
  enum class Kind { cyclic, dihedral, sym3_fink, abelian, direct_product, nilprod, table };

  Kind kind = Kind::cyclic;
  std::size_t n = 0;
  std::vector<std::uint64_t> moduli;
  std::vector<GroupSpec> factors;
  std::vector<AbelianSpec> nil_factors;
  std::vector<std::vector<ElementId>> table;
  std::vector<Generator> generators;
  std::vector<std::string> names;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

GroupSpec parse_group_spec(const json& j);
json to_json(const GroupSpec& spec);
FiniteGroup build_group(const GroupSpec& spec, GroupLimits limits = {});

AbelianSpec parse_abelian_spec(const json& j);
json to_json(const AbelianSpec& spec);
/// Either a bare list of abelian specs or {"factors": [...]}.
std::vector<AbelianSpec> parse_abelian_list(const json& j);

json to_json(const WidthReport& report, const FiniteGroup& group, bool with_lengths);
json to_json(const WreathGroup& group, const std::optional<CommutatorCertificate>& cert,
             std::int64_t delta_value);
json to_json(const WreathGroup& group, const DecompositionCertificate& cert);
json to_json(const BoundReport& report);

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string digest(std::string_view data);

}  // namespace palw
