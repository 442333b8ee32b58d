#include "palw/io.hpp"

#include <cstdio>

#include "palw/errors.hpp"

namespace palw {

namespace {

constexpr std::pair<GroupSpec::Kind, const char*> kKindNames[] = {
    {GroupSpec::Kind::cyclic, "cyclic"},
    {GroupSpec::Kind::dihedral, "dihedral"},
    {GroupSpec::Kind::sym3_fink, "sym3_fink"},
    {GroupSpec::Kind::abelian, "abelian"},
    {GroupSpec::Kind::direct_product, "direct_product"},
    {GroupSpec::Kind::nilprod, "nilprod"},
    {GroupSpec::Kind::table, "table"},
};

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("group spec: missing field '") + key + "'");
  return j.at(key);
}

template <typename T>
T get_as(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("group spec: bad ") + what + ": " + e.what());
  }
}

}  // namespace

GroupSpec parse_group_spec(const json& j) {
  if (!j.is_object()) throw InputError("group spec must be a JSON object");
  const std::string kind = get_as<std::string>(field(j, "kind"), "kind");
  GroupSpec spec;
  bool known = false;
  for (auto [k, name] : kKindNames)
    if (kind == name) {
      spec.kind = k;
      known = true;
    }
  if (!known) throw InputError("group spec: unknown kind '" + kind + "'");

  switch (spec.kind) {
    case GroupSpec::Kind::cyclic:
    case GroupSpec::Kind::dihedral:
      spec.n = get_as<std::size_t>(field(j, "n"), "n");
      if (spec.n == 0) throw InputError("group spec: n must be positive");
      break;
    case GroupSpec::Kind::sym3_fink:
      break;
    case GroupSpec::Kind::abelian:
      spec.moduli = get_as<std::vector<std::uint64_t>>(field(j, "moduli"), "moduli");
      break;
    case GroupSpec::Kind::direct_product:
      for (const auto& f : field(j, "factors")) spec.factors.push_back(parse_group_spec(f));
      if (spec.factors.empty()) throw InputError("group spec: direct_product needs factors");
      break;
    case GroupSpec::Kind::nilprod:
      spec.nil_factors = parse_abelian_list(field(j, "factors"));
      break;
    case GroupSpec::Kind::table:
      spec.table = get_as<std::vector<std::vector<ElementId>>>(field(j, "table"), "table");
      for (const auto& g : field(j, "generators"))
        spec.generators.push_back({get_as<std::string>(field(g, "label"), "label"),
                                   get_as<ElementId>(field(g, "element"), "element")});
      if (j.contains("names")) spec.names = get_as<std::vector<std::string>>(j["names"], "names");
      break;
  }
  return spec;
}

json to_json(const GroupSpec& spec) {
  json j;
  for (auto [k, name] : kKindNames)
    if (spec.kind == k) j["kind"] = name;
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic:
    case GroupSpec::Kind::dihedral:
      j["n"] = spec.n;
      break;
    case GroupSpec::Kind::sym3_fink:
      break;
    case GroupSpec::Kind::abelian:
      j["moduli"] = spec.moduli;
      break;
    case GroupSpec::Kind::direct_product:
      j["factors"] = json::array();
      for (const auto& f : spec.factors) j["factors"].push_back(to_json(f));
      break;
    case GroupSpec::Kind::nilprod:
      j["factors"] = json::array();
      for (const auto& f : spec.nil_factors) j["factors"].push_back(to_json(f));
      break;
    case GroupSpec::Kind::table:
      j["table"] = spec.table;
      j["generators"] = json::array();
      for (const auto& g : spec.generators)
        j["generators"].push_back({{"label", g.label}, {"element", g.element}});
      if (!spec.names.empty()) j["names"] = spec.names;
      break;
  }
  return j;
}

FiniteGroup build_group(const GroupSpec& spec, GroupLimits limits) {
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic:
      return cyclic(spec.n, "a", limits);
    case GroupSpec::Kind::dihedral:
      return dihedral(spec.n, limits);
    case GroupSpec::Kind::sym3_fink:
      return sym3_fink();
    case GroupSpec::Kind::abelian:
      return abelian(spec.moduli, {}, limits);
    case GroupSpec::Kind::direct_product: {
      FiniteGroup g = build_group(spec.factors.front(), limits);
      for (std::size_t i = 1; i < spec.factors.size(); ++i)
        g = direct_product(g, build_group(spec.factors[i], limits), limits);
      return g;
    }
    case GroupSpec::Kind::nilprod:
      return nilprod2_multi(spec.nil_factors, limits);
    case GroupSpec::Kind::table: {
      const std::size_t n = spec.table.size();
      std::vector<ElementId> flat;
      flat.reserve(n * n);
      for (const auto& row : spec.table) {
        if (row.size() != n) throw InputError("group spec: table must be square");
        flat.insert(flat.end(), row.begin(), row.end());
      }
      return FiniteGroup(n, std::move(flat), spec.generators, spec.names, limits);
    }
  }
  throw InputError("group spec: unhandled kind");
}

AbelianSpec parse_abelian_spec(const json& j) {
  AbelianSpec spec;
  spec.moduli = get_as<std::vector<std::uint64_t>>(field(j, "moduli"), "moduli");
  if (spec.moduli.empty()) throw InputError("abelian spec: moduli must be non-empty");
  for (auto m : spec.moduli)
    if (m == 0) throw InputError("abelian spec: moduli must be positive");
  return spec;
}

json to_json(const AbelianSpec& spec) { return json{{"moduli", spec.moduli}}; }

std::vector<AbelianSpec> parse_abelian_list(const json& j) {
  const json& list = j.is_object() ? field(j, "factors") : j;
  if (!list.is_array() || list.empty())
    throw InputError("expected a non-empty list of abelian specs");
  std::vector<AbelianSpec> out;
  for (const auto& item : list) out.push_back(parse_abelian_spec(item));
  return out;
}

json to_json(const WidthReport& report, const FiniteGroup& group, bool with_lengths) {
  json j{{"notion", to_string(report.notion)},
         {"width", report.width},
         {"order", group.order()},
         {"palindrome_count", report.palindromes.size()},
         {"layers", report.layers}};
  if (with_lengths) {
    json lengths = json::array();
    for (ElementId g = 0; g < group.order(); ++g)
      lengths.push_back({{"element", group.name(g)}, {"length", report.length[g]}});
    j["lengths"] = std::move(lengths);
  }
  return j;
}

json to_json(const WreathGroup& group, const std::optional<CommutatorCertificate>& cert,
             std::int64_t delta_value) {
  json j{{"delta", delta_value}, {"degree", group.degree()}};
  if (cert) {
    j["certificate"] = {{"element", group.to_text(cert->element)},
                        {"delta", cert->delta},
                        {"commutator_length_at_least", cert->lower_bound},
                        {"threshold", commutator_delta_bound(group.degree(), cert->lower_bound - 1)}};
  } else {
    j["certificate"] = nullptr;
  }
  return j;
}

json to_json(const WreathGroup& group, const DecompositionCertificate& cert) {
  json factors = json::array();
  for (const auto& f : cert.factors)
    factors.push_back({{"word", to_string(f)}, {"palindrome", is_word_palindrome(f)}});
  return json{{"target", group.to_text(cert.target)},
              {"factors", std::move(factors)},
              {"factor_count", cert.factor_count},
              {"bound", kPalindromeBound},
              {"verified",
               {{"all_palindromic", cert.all_palindromic},
                {"product_matches", cert.product_matches},
                {"within_bound", cert.within_bound}}}};
}

json to_json(const BoundReport& r) {
  json j{{"lower", r.lower}, {"upper", r.upper}, {"branch", r.branch},
         {"widths", r.widths}, {"m", r.m}};
  j["exact"] = r.exact ? json(*r.exact) : json(nullptr);
  return j;
}

std::string digest(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace palw
