#include "palw/nilprod.hpp"

#include <algorithm>
#include <numeric>

#include "palw/errors.hpp"

namespace palw {

std::uint64_t AbelianSpec::order() const {
  std::uint64_t n = 1;
  for (auto m : moduli) n *= m;
  return n;
}

NilpotentProduct::NilpotentProduct(std::vector<AbelianSpec> factors, GroupLimits limits)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw InputError("nilpotent product needs at least one factor");
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    factor_offset_.push_back(moduli_.size());
    std::vector<std::string> letters;
    std::string base = k < 26 ? std::string(1, static_cast<char>('a' + k)) : "g" + std::to_string(k);
    const auto& mods = factors_[k].moduli;
    if (mods.empty()) throw InputError("abelian factor needs at least one cyclic component");
    for (std::size_t p = 0; p < mods.size(); ++p) {
      if (mods[p] == 0) throw InputError("abelian moduli must be positive");
      moduli_.push_back(mods[p]);
      factor_of_coord_.push_back(k);
      letters.push_back(mods.size() == 1 ? base : base + std::to_string(p + 1));
    }
    letters_.push_back(std::move(letters));
  }
  const std::size_t base_dims = moduli_.size();
  for (std::size_t l = 0; l < base_dims; ++l)
    for (std::size_t r = l + 1; r < base_dims; ++r) {
      if (factor_of_coord_[l] == factor_of_coord_[r]) continue;
      std::uint64_t g = std::gcd(moduli_[l], moduli_[r]);
      if (g == 1) continue;
      tensor_.push_back({l, r});
      moduli_.push_back(g);
    }

  std::size_t order = 1;
  for (auto m : moduli_) {
    if (order > limits.max_order / m)
      throw CapExceeded("nilpotent product order exceeds construction cap", limits.max_order + 1,
                        limits.max_order);
    order *= m;
  }
  if (order > limits.max_order)
    throw CapExceeded("nilpotent product order exceeds construction cap", order,
                      limits.max_order);
  stride_.assign(moduli_.size(), 1);
  for (std::size_t i = 1; i < moduli_.size(); ++i) stride_[i] = stride_[i - 1] * moduli_[i - 1];

  std::vector<Coords> coords(order);
  for (std::size_t id = 0; id < order; ++id) coords[id] = decode(static_cast<ElementId>(id));
  std::vector<ElementId> table(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y)
      table[x * order + y] = encode(multiply_coords(coords[x], coords[y]));

  std::vector<Generator> gens;
  for (std::size_t k = 0; k < factors_.size(); ++k)
    for (std::size_t p = 0; p < factors_[k].moduli.size(); ++p) {
      const std::uint64_t m = factors_[k].moduli[p];
      const std::size_t c = factor_offset_[k] + p;
      if (m >= 2) gens.push_back({letters_[k][p], static_cast<ElementId>(stride_[c])});
      if (m >= 3)
        gens.push_back({letters_[k][p] + "^-1", static_cast<ElementId>((m - 1) * stride_[c])});
    }
  group_.emplace(order, std::move(table), std::move(gens), std::vector<std::string>{}, limits);
}

NilpotentProduct::Coords NilpotentProduct::decode(ElementId id) const {
  Coords c(moduli_.size());
  std::uint64_t rest = id;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    c[i] = rest % moduli_[i];
    rest /= moduli_[i];
  }
  return c;
}

ElementId NilpotentProduct::encode(const Coords& c) const {
  std::uint64_t id = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) id += (c[i] % moduli_[i]) * stride_[i];
  return static_cast<ElementId>(id);
}

NilpotentProduct::Coords NilpotentProduct::multiply_coords(const Coords& x, const Coords& y) const {
  Coords z(moduli_.size());
  const std::size_t base_dims = moduli_.size() - tensor_.size();
  for (std::size_t i = 0; i < base_dims; ++i) z[i] = (x[i] + y[i]) % moduli_[i];
  for (std::size_t t = 0; t < tensor_.size(); ++t) {
    const std::size_t i = base_dims + t;
    const std::uint64_t g = moduli_[i];
    // t + t' - a'_left * a_right
    const std::uint64_t cross = (y[tensor_[t].left] % g) * (x[tensor_[t].right] % g) % g;
    z[i] = (x[i] + y[i] + g - cross) % g;
  }
  return z;
}

ElementId NilpotentProduct::embed(std::size_t k, const std::vector<std::uint64_t>& a) const {
  if (k >= factors_.size() || a.size() != factors_[k].moduli.size())
    throw InputError("embed: factor element has the wrong shape");
  Coords c(moduli_.size(), 0);
  for (std::size_t p = 0; p < a.size(); ++p) c[factor_offset_[k] + p] = a[p];
  return encode(c);
}

std::vector<ElementId> NilpotentProduct::factor_elements(std::size_t k) const {
  const auto& mods = factors_[k].moduli;
  std::vector<ElementId> out;
  std::vector<std::uint64_t> a(mods.size(), 0);
  for (std::uint64_t n = 0; n < factors_[k].order(); ++n) {
    std::uint64_t rest = n;
    for (std::size_t p = 0; p < mods.size(); ++p) {
      a[p] = rest % mods[p];
      rest /= mods[p];
    }
    out.push_back(embed(k, a));
  }
  return out;
}

std::vector<ElementId> NilpotentProduct::tensor_elements() const {
  const std::size_t base_dims = moduli_.size() - tensor_.size();
  std::vector<ElementId> out;
  for (ElementId id = 0; id < order(); ++id) {
    Coords c = decode(id);
    if (std::all_of(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(base_dims),
                    [](std::uint64_t v) { return v == 0; }))
      out.push_back(id);
  }
  return out;
}

std::vector<ElementId> NilpotentProduct::centralizer(std::size_t k) const {
  std::vector<ElementId> out;
  for (ElementId id : factor_elements(k)) {
    Coords c = decode(id);
    bool central = true;
    for (std::size_t t = 0; t < tensor_.size() && central; ++t) {
      const std::uint64_t g = moduli_[moduli_.size() - tensor_.size() + t];
      // a (x) e_q has component a_p mod gcd on the pair (p, q).
      if (factor_of_coord_[tensor_[t].left] == k) central = c[tensor_[t].left] % g == 0;
      if (central && factor_of_coord_[tensor_[t].right] == k) central = c[tensor_[t].right] % g == 0;
    }
    if (central) out.push_back(id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int NilpotentProduct::quotient_generator_count(std::size_t k) const {
  const std::vector<ElementId> c = centralizer(k);
  auto in_c = [&](ElementId id) { return std::binary_search(c.begin(), c.end(), id); };
  const auto& mods = factors_[k].moduli;
  const FiniteGroup& g = group();
  std::vector<ElementId> reps;
  for (std::size_t p = 0; p < mods.size(); ++p) {
    if (mods[p] < 2) continue;
    std::vector<std::uint64_t> unit(mods.size(), 0);
    unit[p] = 1;
    ElementId e = embed(k, unit);
    if (in_c(e)) continue;
    bool seen = false;
    for (ElementId r : reps) seen = seen || in_c(g.multiply(e, g.inverse(r)));
    if (!seen) reps.push_back(e);
  }
  return static_cast<int>(reps.size());
}

NilpotentProduct nilprod2(const AbelianSpec& a, const AbelianSpec& b, GroupLimits limits) {
  return NilpotentProduct({a, b}, limits);
}

FiniteGroup nilprod2_multi(const std::vector<AbelianSpec>& specs, GroupLimits limits) {
  return NilpotentProduct(specs, limits).group();
}

FiniteGroup factor_group(const NilpotentProduct& product, std::size_t k) {
  return abelian(product.factor(k).moduli, product.factor_letters(k));
}

BoundReport width_bounds(const std::vector<int>& widths, const std::vector<int>& m) {
  if (widths.empty() || widths.size() != m.size())
    throw InputError("width_bounds: need one width and one m per factor");
  BoundReport r;
  r.widths = widths;
  r.m = m;
  r.lower = *std::max_element(widths.begin(), widths.end());

  // A factor with m_k = 0 is central and splits off as a direct factor.
  std::vector<int> w = widths, mm = m;
  int split_off = 0;
  bool direct = false;
  for (std::size_t k = 0; k < mm.size() && w.size() > 1;) {
    if (mm[k] == 0) {
      split_off += w[k];
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(k));
      mm.erase(mm.begin() + static_cast<std::ptrdiff_t>(k));
      direct = true;
    } else {
      ++k;
    }
  }
  int rest = std::accumulate(w.begin(), w.end(), 0);
  if (w.size() > 1) rest += 3 * std::accumulate(mm.begin(), mm.end(), 0);
  r.upper = split_off + rest;
  r.branch = widths.size() == 1 ? "single" : (direct ? "ii" : "i");
  return r;
}

namespace {

BoundReport factor_bounds(const NilpotentProduct& product, Notion notion, std::size_t state_cap) {
  std::vector<int> widths, m;
  for (std::size_t k = 0; k < product.factor_count(); ++k) {
    widths.push_back(palindromic_width(factor_group(product, k), notion, state_cap).width);
    m.push_back(product.quotient_generator_count(k));
  }
  return width_bounds(widths, m);
}

}  // namespace

BoundReport sandwich_report(const NilpotentProduct& product, Notion notion,
                            std::size_t state_cap) {
  BoundReport r = factor_bounds(product, notion, state_cap);
  r.exact = palindromic_width(product.group(), notion, state_cap).width;
  return r;
}

bool check_sandwich(const BoundReport& r) {
  if (r.lower > r.upper) return false;
  return !r.exact || (r.lower <= *r.exact && *r.exact <= r.upper);
}

bool check_sandwich(const NilpotentProduct& product, int oracle_width) {
  BoundReport r = factor_bounds(product, Notion::word, kDefaultStateCap);
  r.exact = oracle_width;
  return check_sandwich(r);
}

}  // namespace palw
