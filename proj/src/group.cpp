// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "hyperforge/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hyperforge/errors.hpp"

namespace hyperforge {

std::size_t AbelianGroupSpec::order() const {
  std::size_t n = 1;
  for (auto d : factors) n *= d;
  return n;
}

void AbelianGroupSpec::check() const {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2) throw PreconditionError("cyclic factor orders must be at least 2");
    if (i + 1 < factors.size() && factors[i + 1] % factors[i] != 0)
      throw PreconditionError("factor orders must each divide the next: " + to_string());
  }
}

std::string AbelianGroupSpec::to_string() const {
  if (factors.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += 'x';
    out += "Z/" + std::to_string(factors[i]);
  }
  return out;
}

AbelianGroupSpec AbelianGroupSpec::parse(const std::string& text) {
  std::vector<std::size_t> orders;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('x', pos);
    if (end == std::string::npos) end = text.size();
    std::string part = text.substr(pos, end - pos);
    if (part.rfind("Z/", 0) == 0) part = part.substr(2);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw PreconditionError("cannot read group '" + text + "'");
    orders.push_back(std::stoul(part));
    pos = end + 1;
  }
  return invariant_factors(orders);
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> factorize(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      std::size_t e = 0;
      while (n % p == 0) n /= p, ++e;
      out.emplace_back(p, e);
    }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

void partitions(std::size_t n, std::size_t max_part, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

AbelianGroupSpec invariant_factors(const std::vector<std::size_t>& cyclic_orders) {
  // Collect prime-power parts, then stack the largest of each prime.
  std::map<std::size_t, std::vector<std::size_t>> parts;
  for (auto c : cyclic_orders) {
    if (c == 0) throw PreconditionError("cyclic order 0");
    for (auto [p, e] : factorize(c)) parts[p].push_back(ipow(p, e));
  }
  std::size_t depth = 0;
  for (auto& [p, v] : parts) {
    std::sort(v.rbegin(), v.rend());
    depth = std::max(depth, v.size());
  }
  std::vector<std::size_t> factors(depth, 1);
  for (auto& [p, v] : parts)
    for (std::size_t i = 0; i < v.size(); ++i) factors[depth - 1 - i] *= v[i];
  return AbelianGroupSpec{factors};
}

std::vector<AbelianGroupSpec> abelian_groups_of_order(std::size_t order) {
  if (order == 0) throw PreconditionError("group order must be positive");
  std::vector<std::vector<std::vector<std::size_t>>> choices;
  const auto primes = factorize(order);
  for (auto [p, e] : primes) {
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> cur;
    partitions(e, e, cur, parts);
    std::vector<std::vector<std::size_t>> as_orders;
    for (auto& part : parts) {
      std::vector<std::size_t> o;
      for (auto k : part) o.push_back(ipow(p, k));
      as_orders.push_back(o);
    }
    choices.push_back(as_orders);
  }
  std::vector<AbelianGroupSpec> out;
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < choices.size(); ++i)
      all.insert(all.end(), choices[i][pick[i]].begin(), choices[i][pick[i]].end());
    out.push_back(invariant_factors(all));
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.factors.size() != b.factors.size()) return a.factors.size() < b.factors.size();
    return a.factors < b.factors;
  });
  return out;
}

AbelianGroup::AbelianGroup(AbelianGroupSpec spec) : spec_(std::move(spec)) {
  spec_.check();
  order_ = spec_.order();
  table_.resize(order_ * order_);
  inverse_.resize(order_);
  for (Element a = 0; a < order_; ++a) {
    const auto ca = components(a);
    for (Element b = 0; b < order_; ++b) {
      const auto cb = components(b);
      std::size_t code = 0;
      for (std::size_t i = 0; i < spec_.factors.size(); ++i)
        code = code * spec_.factors[i] + (ca[i] + cb[i]) % spec_.factors[i];
      table_[a * order_ + b] = static_cast<Element>(code);
      if (code == 0) inverse_[a] = b;
    }
  }
}

std::vector<std::size_t> AbelianGroup::components(Element a) const {
  std::vector<std::size_t> c(spec_.factors.size());
  for (std::size_t i = spec_.factors.size(); i-- > 0;) {
    c[i] = a % spec_.factors[i];
    a /= static_cast<Element>(spec_.factors[i]);
  }
  return c;
}

Element AbelianGroup::power(Element a, std::size_t k) const {
  Element r = identity();
  for (std::size_t i = 0; i < k; ++i) r = op(r, a);
  return r;
}

std::size_t AbelianGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element p = a; p != identity(); p = op(p, a)) ++k;
  return k;
}

AbelianGroupSpec identify_abelian_group(const std::vector<std::vector<Element>>& table, Element e) {
  const std::size_t n = table.size();
  // Number of elements of order dividing p^k determines the p-part.
  auto order_of = [&](Element a) {
    std::size_t k = 1;
    for (Element p = a; p != e; p = table[p][a]) ++k;
    return k;
  };
  std::vector<std::size_t> orders(n);
  for (Element a = 0; a < n; ++a) orders[a] = order_of(a);
  std::vector<std::size_t> cyclic;
  for (auto [p, exp] : factorize(n)) {
    // count(p^k) = #{a : a^(p^k) = e} = prod p^{min(k, ei)}
    std::vector<std::size_t> exps;  // multiplicity of each ei
    std::vector<std::size_t> counts(exp + 1, 0);
    for (std::size_t k = 0; k <= exp; ++k) {
      const std::size_t pk = ipow(p, k);
      for (auto o : orders)
        if (pk % o == 0) ++counts[k];
    }
    // log_p(count(k)) - log_p(count(k-1)) = #{i : ei >= k}
    std::vector<std::size_t> at_least(exp + 2, 0);
    for (std::size_t k = 1; k <= exp; ++k) {
      std::size_t ratio = counts[k] / counts[k - 1], l = 0;
      while (ratio > 1) ratio /= p, ++l;
      at_least[k] = l;
    }
    for (std::size_t k = 1; k <= exp; ++k)
      for (std::size_t c = at_least[k + 1]; c < at_least[k]; ++c) cyclic.push_back(ipow(p, k));
  }
  return invariant_factors(cyclic);
}

}  // namespace hyperforge
