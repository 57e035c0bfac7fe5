#pragma once

// Breadth-first closure of a generating set under a multiplication on some
// element representation, producing the canonical FiniteGroup numbering.

#include <string>
#include <unordered_map>
#include <vector>

#include "complementa/group.hpp"

namespace complementa::detail {

/// Renames repeated generator names by appending their occurrence number.
std::vector<std::string> disambiguate_names(std::vector<std::string> names);

template <class Key, class Hash, class Mul>
FiniteGroup close_group(const Key& identity, const std::vector<Key>& gens, Mul mul,
                        std::vector<std::string> names, std::size_t cap) {
  const std::size_t ngens = gens.size();
  std::vector<Key> elems{identity};
  std::unordered_map<Key, Element, Hash> index;
  index.emplace(identity, 0);
  std::vector<Element> right;  // right[i * ngens + s] = elems[i] * gens[s]

  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t s = 0; s < ngens; ++s) {
      Key product = mul(elems[i], gens[s]);
      auto [it, inserted] = index.try_emplace(std::move(product), static_cast<Element>(elems.size()));
      if (inserted) {
        if (elems.size() >= cap) throw CapExceeded("construction", cap);
        elems.push_back(it->first);
      }
      right.push_back(it->second);
    }
  }

  const std::size_t n = elems.size();
  std::vector<Element> parent(n, 0);
  std::vector<std::size_t> parent_gen(n, 0);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t s = 0; s < ngens; ++s) {
      const Element j = right[i * ngens + s];
      if (!seen[j]) {
        seen[j] = true;
        parent[j] = static_cast<Element>(i);
        parent_gen[j] = s;
      }
    }
  }

  // Discovery order makes parent[h] < h, so each row fills left to right.
  std::vector<Element> mult(n * n);
  for (std::size_t g = 0; g < n; ++g) {
    Element* row = mult.data() + g * n;
    row[0] = static_cast<Element>(g);
    for (std::size_t h = 1; h < n; ++h) row[h] = right[row[parent[h]] * ngens + parent_gen[h]];
  }

  std::vector<Element> generator_indices;
  generator_indices.reserve(ngens);
  for (std::size_t s = 0; s < ngens; ++s) generator_indices.push_back(right[s]);

  return FiniteGroup::from_table(n, std::move(mult), std::move(generator_indices),
                                 disambiguate_names(std::move(names)));
}

}  // namespace complementa::detail
