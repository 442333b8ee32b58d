#include "palw/finite_groups.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <random>
#include <set>
#include <unordered_set>

#include "palw/errors.hpp"

namespace palw {

namespace {

void check_order_cap(std::size_t order, const GroupLimits& limits) {
  if (order == 0) throw InputError("group order must be positive");
  if (order > limits.max_order)
    throw CapExceeded("group order exceeds construction cap", order, limits.max_order);
}

std::string label_base(const std::string& label) {
  return label.ends_with("^-1") ? label.substr(0, label.size() - 3) : label;
}

std::string default_letter(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "g" + std::to_string(i);
}

}  // namespace

FiniteGroup::FiniteGroup(std::size_t order, std::vector<ElementId> table,
                         std::vector<Generator> generators, std::vector<std::string> names,
                         GroupLimits limits)
    : order_(order), table_(std::move(table)), generators_(std::move(generators)) {
  check_order_cap(order_, limits);
  validate(limits);
  assign_default_names(std::move(names));
}

void FiniteGroup::validate(const GroupLimits& limits) {
  const std::size_t n = order_;
  if (table_.size() != n * n)
    throw InputError("multiplication table must have order^2 entries");
  for (ElementId v : table_)
    if (v >= n) throw InputError("multiplication table entry out of range");

  std::optional<ElementId> e;
  for (ElementId c = 0; c < n && !e; ++c) {
    bool ok = true;
    for (ElementId x = 0; x < n && ok; ++x)
      ok = multiply(c, x) == x && multiply(x, c) == x;
    if (ok) e = c;
  }
  if (!e) throw InputError("multiplication table has no two-sided identity");
  identity_ = *e;

  inverse_.assign(n, 0);
  for (ElementId a = 0; a < n; ++a) {
    bool found = false;
    for (ElementId b = 0; b < n; ++b) {
      if (multiply(a, b) == identity_) {
        if (multiply(b, a) != identity_)
          throw InputError("element " + std::to_string(a) + " has no two-sided inverse");
        inverse_[a] = b;
        found = true;
        break;
      }
    }
    if (!found) throw InputError("element " + std::to_string(a) + " has no inverse");
  }

  auto assoc = [this](ElementId a, ElementId b, ElementId c) {
    if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
      throw InputError("multiplication table is not associative at (" + std::to_string(a) +
                       ", " + std::to_string(b) + ", " + std::to_string(c) + ")");
  };
  if (n <= limits.verify_cap) {
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b)
        for (ElementId c = 0; c < n; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(n - 1));
    for (int i = 0; i < 200000; ++i) assoc(pick(rng), pick(rng), pick(rng));
  }

  std::set<std::string> labels;
  std::unordered_set<ElementId> gen_elements;
  for (const auto& g : generators_) {
    if (g.label.empty() || g.label == "1")
      throw InputError("invalid generator label '" + g.label + "'");
    if (g.label.find_first_of(" \t\n;[]") != std::string::npos)
      throw InputError("generator label contains a reserved character: '" + g.label + "'");
    if (g.element >= n) throw InputError("generator '" + g.label + "' out of range");
    if (!labels.insert(g.label).second)
      throw InputError("duplicate generator label '" + g.label + "'");
    gen_elements.insert(g.element);
  }
  for (const auto& g : generators_)
    if (!gen_elements.contains(inverse_[g.element]))
      throw InputError("generating set is not symmetric: inverse of '" + g.label +
                       "' missing");

  std::vector<ElementId> seeds;
  for (const auto& g : generators_) seeds.push_back(g.element);
  if (generated_subgroup(*this, seeds).size() != n)
    throw InputError("generators do not generate the whole group");
}

void FiniteGroup::assign_default_names(std::vector<std::string> given) {
  if (!given.empty()) {
    if (given.size() != order_) throw InputError("element names must cover every element");
    names_ = std::move(given);
    return;
  }
  names_.assign(order_, std::string());
  std::vector<bool> seen(order_, false);
  std::deque<ElementId> queue{identity_};
  seen[identity_] = true;
  names_[identity_] = "1";
  while (!queue.empty()) {
    ElementId g = queue.front();
    queue.pop_front();
    for (const auto& gen : generators_) {
      ElementId h = multiply(g, gen.element);
      if (seen[h]) continue;
      seen[h] = true;
      names_[h] = g == identity_ ? gen.label : names_[g] + " " + gen.label;
      queue.push_back(h);
    }
  }
}

ElementId FiniteGroup::commutator(ElementId a, ElementId b) const {
  return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

ElementId FiniteGroup::power(ElementId a, std::int64_t n) const {
  ElementId base = n < 0 ? inverse(a) : a;
  std::uint64_t k = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  k %= element_order(a);
  ElementId out = identity_;
  for (std::uint64_t i = 0; i < k; ++i) out = multiply(out, base);
  return out;
}

std::size_t FiniteGroup::element_order(ElementId a) const {
  std::size_t k = 1;
  for (ElementId x = a; x != identity_; x = multiply(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (const auto& g : generators_)
    for (const auto& h : generators_)
      if (multiply(g.element, h.element) != multiply(h.element, g.element)) return false;
  return true;
}

std::optional<ElementId> FiniteGroup::generator(std::string_view label) const {
  for (const auto& g : generators_)
    if (g.label == label) return g.element;
  return std::nullopt;
}

// ------------------------------------------------------------ constructors

FiniteGroup cyclic(std::size_t m, const std::string& letter, GroupLimits limits) {
  check_order_cap(m, limits);
  std::vector<ElementId> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = static_cast<ElementId>((a + b) % m);
  std::vector<Generator> gens;
  if (m >= 2) gens.push_back({letter, 1});
  if (m >= 3) gens.push_back({letter + "^-1", static_cast<ElementId>(m - 1)});
  return FiniteGroup(m, std::move(table), std::move(gens), {}, limits);
}

FiniteGroup dihedral(std::size_t m, GroupLimits limits) {
  if (m == 0) throw InputError("dihedral group needs m >= 1");
  const std::size_t n = 2 * m;
  check_order_cap(n, limits);
  std::vector<ElementId> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t i = x % m, a = x / m;
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t k = y % m, b = y / m;
      std::size_t rot = a ? (i + m - k) % m : (i + k) % m;
      table[x * n + y] = static_cast<ElementId>(rot + m * (a ^ b));
    }
  }
  std::vector<Generator> gens;
  if (m >= 2) gens.push_back({"r", 1});
  if (m >= 3) gens.push_back({"r^-1", static_cast<ElementId>(m - 1)});
  gens.push_back({"s", static_cast<ElementId>(m)});
  return FiniteGroup(n, std::move(table), std::move(gens), {}, limits);
}

FiniteGroup sym3_fink() {
  using Perm = std::array<int, 3>;
  // Product p*q applies p first, then q.
  auto compose = [](const Perm& p, const Perm& q) {
    return Perm{q[p[0]], q[p[1]], q[p[2]]};
  };
  const Perm id{0, 1, 2}, s1{1, 0, 2}, s2{0, 2, 1};
  const Perm c = compose(s1, s2);
  const Perm c_inv = compose(s2, s1);
  const Perm s121 = compose(compose(s1, s2), s1);
  const std::array<Perm, 6> elems{id, s1, s2, c, c_inv, s121};
  auto index_of = [&](const Perm& p) {
    return static_cast<ElementId>(std::find(elems.begin(), elems.end(), p) - elems.begin());
  };
  std::vector<ElementId> table(36);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) table[a * 6 + b] = index_of(compose(elems[a], elems[b]));
  std::vector<Generator> gens{{"s1", 1}, {"s2", 2}, {"c", 3}, {"c^-1", 4}};
  std::vector<std::string> names{"1", "s1", "s2", "c", "c^-1", "s1 s2 s1"};
  return FiniteGroup(6, std::move(table), std::move(gens), std::move(names));
}

FiniteGroup abelian(std::span<const std::uint64_t> moduli, std::span<const std::string> letters,
                    GroupLimits limits) {
  if (!letters.empty() && letters.size() != moduli.size())
    throw InputError("abelian: one letter per cyclic factor required");
  std::size_t n = 1;
  for (std::uint64_t m : moduli) {
    if (m == 0) throw InputError("abelian: moduli must be positive");
    if (n > limits.max_order / m) throw CapExceeded("group order exceeds construction cap",
                                                    limits.max_order + 1, limits.max_order);
    n *= m;
  }
  check_order_cap(n, limits);
  const std::size_t k = moduli.size();
  std::vector<std::size_t> stride(k, 1);
  for (std::size_t i = 1; i < k; ++i) stride[i] = stride[i - 1] * moduli[i - 1];
  std::vector<ElementId> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t z = 0;
      for (std::size_t i = 0; i < k; ++i) {
        std::size_t xi = (x / stride[i]) % moduli[i];
        std::size_t yi = (y / stride[i]) % moduli[i];
        z += ((xi + yi) % moduli[i]) * stride[i];
      }
      table[x * n + y] = static_cast<ElementId>(z);
    }
  }
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < k; ++i) {
    std::string letter = letters.empty() ? default_letter(i) : letters[i];
    if (moduli[i] >= 2) gens.push_back({letter, static_cast<ElementId>(stride[i])});
    if (moduli[i] >= 3)
      gens.push_back({letter + "^-1", static_cast<ElementId>((moduli[i] - 1) * stride[i])});
  }
  return FiniteGroup(n, std::move(table), std::move(gens), {}, limits);
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, GroupLimits limits) {
  const std::size_t ng = g.order(), nh = h.order();
  if (ng > limits.max_order / nh)
    throw CapExceeded("direct product order exceeds construction cap", limits.max_order + 1,
                      limits.max_order);
  const std::size_t n = ng * nh;
  check_order_cap(n, limits);
  std::vector<ElementId> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      ElementId a = g.multiply(static_cast<ElementId>(x % ng), static_cast<ElementId>(y % ng));
      ElementId b = h.multiply(static_cast<ElementId>(x / ng), static_cast<ElementId>(y / ng));
      table[x * n + y] = static_cast<ElementId>(a + ng * b);
    }

  std::set<std::string> used;
  std::vector<Generator> gens;
  for (const auto& gen : g.generators()) {
    used.insert(label_base(gen.label));
    gens.push_back({gen.label, static_cast<ElementId>(gen.element + ng * h.identity())});
  }
  std::vector<std::pair<std::string, std::string>> renames;
  auto rename = [&](const std::string& base) {
    for (const auto& [from, to] : renames)
      if (from == base) return to;
    std::string fresh = base;
    for (std::size_t i = 0; used.contains(fresh); ++i) fresh = default_letter(i);
    used.insert(fresh);
    renames.emplace_back(base, fresh);
    return fresh;
  };
  for (const auto& gen : h.generators()) {
    std::string base = label_base(gen.label);
    std::string suffix = gen.label.substr(base.size());
    gens.push_back({rename(base) + suffix, static_cast<ElementId>(g.identity() + ng * gen.element)});
  }
  return FiniteGroup(n, std::move(table), std::move(gens), {}, limits);
}

ElementId evaluate(const FiniteGroup& g, const MonoidWord& w) {
  ElementId x = g.identity();
  for (const auto& letter : w.letters) {
    auto a = g.generator(letter);
    if (!a) throw InputError("unknown generator label '" + letter + "'");
    x = g.multiply(x, *a);
  }
  return x;
}

// ------------------------------------------------------------- subgroups

std::vector<ElementId> generated_subgroup(const FiniteGroup& g, std::span<const ElementId> seeds) {
  std::vector<bool> seen(g.order(), false);
  std::vector<ElementId> members{g.identity()};
  seen[g.identity()] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (ElementId s : seeds) {
      ElementId x = g.multiply(members[i], s);
      if (!seen[x]) {
        seen[x] = true;
        members.push_back(x);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<ElementId> normal_closure(const FiniteGroup& g, std::span<const ElementId> seeds) {
  std::vector<ElementId> conj;
  std::vector<bool> seen(g.order(), false);
  for (ElementId s : seeds)
    for (ElementId x = 0; x < g.order(); ++x) {
      ElementId c = g.multiply(g.multiply(g.inverse(x), s), x);
      if (!seen[c]) {
        seen[c] = true;
        conj.push_back(c);
      }
    }
  return generated_subgroup(g, conj);
}

std::vector<ElementId> commutator_subgroup(const FiniteGroup& g) {
  std::vector<ElementId> comms;
  std::vector<bool> seen(g.order(), false);
  for (ElementId a = 0; a < g.order(); ++a)
    for (ElementId b = 0; b < g.order(); ++b) {
      ElementId c = g.commutator(a, b);
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  return generated_subgroup(g, comms);
}

int commutator_width(const FiniteGroup& g) {
  std::vector<ElementId> comms;
  std::vector<bool> is_comm(g.order(), false);
  for (ElementId a = 0; a < g.order(); ++a)
    for (ElementId b = 0; b < g.order(); ++b) {
      ElementId c = g.commutator(a, b);
      if (!is_comm[c]) {
        is_comm[c] = true;
        comms.push_back(c);
      }
    }
  std::vector<bool> reached(g.order(), false);
  reached[g.identity()] = true;
  std::vector<ElementId> frontier{g.identity()};
  int width = 0;
  for (int layer = 1; !frontier.empty(); ++layer) {
    std::vector<ElementId> next;
    for (ElementId x : frontier)
      for (ElementId c : comms) {
        ElementId y = g.multiply(x, c);
        if (!reached[y]) {
          reached[y] = true;
          next.push_back(y);
        }
      }
    if (!next.empty()) width = layer;
    frontier = std::move(next);
  }
  return width;
}

// ----------------------------------------------------------- isomorphisms

std::optional<std::vector<ElementId>> extend_to_isomorphism(const FiniteGroup& from,
                                                            const FiniteGroup& to,
                                                            std::span<const ElementId> images) {
  const auto& gens = from.generators();
  if (from.order() != to.order() || images.size() != gens.size()) return std::nullopt;
  constexpr ElementId unset = static_cast<ElementId>(-1);
  std::vector<ElementId> phi(from.order(), unset);
  phi[from.identity()] = to.identity();
  std::deque<ElementId> queue{from.identity()};
  while (!queue.empty()) {
    ElementId x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      ElementId y = from.multiply(x, gens[i].element);
      ElementId image = to.multiply(phi[x], images[i]);
      if (phi[y] == unset) {
        phi[y] = image;
        queue.push_back(y);
      } else if (phi[y] != image) {
        return std::nullopt;
      }
    }
  }
  std::vector<bool> hit(to.order(), false);
  for (ElementId v : phi) {
    if (v == unset || hit[v]) return std::nullopt;
    hit[v] = true;
  }
  for (ElementId a = 0; a < from.order(); ++a)
    for (ElementId b = 0; b < from.order(); ++b)
      if (phi[from.multiply(a, b)] != to.multiply(phi[a], phi[b])) return std::nullopt;
  return phi;
}

std::optional<std::vector<ElementId>> find_isomorphism(const FiniteGroup& from,
                                                       const FiniteGroup& to) {
  if (from.order() != to.order()) return std::nullopt;
  const auto& gens = from.generators();
  // Free choices: one representative per {g, g^-1} class of generator elements.
  std::vector<std::size_t> free_idx;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool derived = false;
    for (std::size_t j : free_idx)
      if (gens[j].element == gens[i].element ||
          gens[j].element == from.inverse(gens[i].element))
        derived = true;
    if (!derived) free_idx.push_back(i);
  }
  std::vector<ElementId> chosen(free_idx.size());
  std::function<std::optional<std::vector<ElementId>>(std::size_t)> search =
      [&](std::size_t depth) -> std::optional<std::vector<ElementId>> {
    if (depth == free_idx.size()) {
      std::vector<ElementId> images(gens.size());
      for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t k = 0; k < free_idx.size(); ++k) {
          const auto& rep = gens[free_idx[k]];
          if (gens[i].element == rep.element) images[i] = chosen[k];
          else if (gens[i].element == from.inverse(rep.element)) images[i] = to.inverse(chosen[k]);
        }
      return extend_to_isomorphism(from, to, images);
    }
    std::size_t want = from.element_order(gens[free_idx[depth]].element);
    for (ElementId cand = 0; cand < to.order(); ++cand) {
      if (to.element_order(cand) != want) continue;
      chosen[depth] = cand;
      if (auto found = search(depth + 1)) return found;
    }
    return std::nullopt;
  };
  return search(0);
}

}  // namespace palw
