#include "complementa/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "closure.hpp"
#include "complementa/lattice.hpp"

namespace complementa {

namespace detail {

std::vector<std::string> disambiguate_names(std::vector<std::string> names) {
  std::map<std::string, int> total;
  for (const auto& n : names) ++total[n];
  std::map<std::string, int> seen;
  for (auto& n : names) {
    if (n.empty() || total[n] > 1) n += std::to_string(++seen[n]);
  }
  return names;
}

}  // namespace detail

namespace {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t seed = p.size();
    for (auto v : p) seed ^= v + 0x9e3779b9 + (seed << 6) + (seed >> 2);
    return seed;
  }
};

struct PairHash {
  std::size_t operator()(std::uint64_t k) const { return std::hash<std::uint64_t>{}(k); }
};

bool is_permutation_of_range(const Permutation& p) {
  std::vector<bool> hit(p.size(), false);
  for (auto v : p) {
    if (v >= p.size() || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0U);
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw PreconditionError("cycle notation: expected '(' in \"" + std::string(text) + "\"");
    const auto close = text.find(')', i);
    if (close == std::string_view::npos) throw PreconditionError("cycle notation: unbalanced parenthesis");
    std::istringstream in{std::string(text.substr(i + 1, close - i - 1))};
    std::vector<std::uint32_t> cycle;
    long long point = 0;
    while (in >> point) {
      if (point < 1 || static_cast<std::size_t>(point) > degree)
        throw PreconditionError("cycle notation: point out of range");
      cycle.push_back(static_cast<std::uint32_t>(point - 1));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) p[cycle[k]] = cycle[(k + 1) % cycle.size()];
    i = close + 1;
  }
  if (!is_permutation_of_range(p)) throw PreconditionError("cycle notation: repeated point");
  return p;
}

std::string format_word(std::span<const std::size_t> word, std::span<const std::string> names) {
  if (word.empty()) return "e";
  std::string out;
  std::size_t i = 0;
  while (i < word.size()) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    if (!out.empty()) out += '*';
    out += names[word[i]];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<Element> mult,
                                    std::vector<Element> generators,
                                    std::vector<std::string> generator_names,
                                    std::vector<std::string> labels) {
  FiniteGroup g;
  g.order_ = order;
  g.mult_ = std::move(mult);
  g.generators_ = std::move(generators);
  g.generator_names_ = std::move(generator_names);
  g.labels_ = std::move(labels);
  g.audit_and_index();
  return g;
}

void FiniteGroup::audit_and_index() {
  const std::size_t n = order_;
  if (n == 0) throw InvalidStructure("group order must be positive");
  if (mult_.size() != n * n) throw InvalidStructure("multiplication table has wrong size");
  for (Element v : mult_)
    if (v >= n) throw InvalidStructure("multiplication table entry out of range");

  for (std::size_t g = 0; g < n; ++g)
    if (mul(0, static_cast<Element>(g)) != g || mul(static_cast<Element>(g), 0) != g)
      throw InvalidStructure("element 0 is not the identity");

  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t round = 0;
  for (std::size_t r = 0; r < n; ++r) {
    ++round;
    for (std::size_t c = 0; c < n; ++c) {
      auto& s = stamp[mult_[r * n + c]];
      if (s == round) throw InvalidStructure("multiplication table row is not a permutation");
      s = round;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    ++round;
    for (std::size_t r = 0; r < n; ++r) {
      auto& s = stamp[mult_[r * n + c]];
      if (s == round) throw InvalidStructure("multiplication table column is not a permutation");
      s = round;
    }
  }

  inv_.assign(n, 0);
  for (std::size_t g = 0; g < n; ++g) {
    const Element* row = mult_.data() + g * n;
    const auto h = static_cast<Element>(std::find(row, row + n, Element{0}) - row);
    if (mul(h, static_cast<Element>(g)) != 0) throw InvalidStructure("left and right inverses differ");
    inv_[g] = h;
  }

  if (n <= Limits::associativity_audit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Element ab = mult_[a * n + b];
        const Element* row_ab = mult_.data() + static_cast<std::size_t>(ab) * n;
        const Element* row_b = mult_.data() + b * n;
        const Element* row_a = mult_.data() + a * n;
        for (std::size_t c = 0; c < n; ++c)
          if (row_ab[c] != row_a[row_b[c]]) throw InvalidStructure("multiplication is not associative");
      }
  }

  for (Element s : generators_)
    if (s >= n) throw InvalidStructure("generator index out of range");
  if (generator_names_.empty()) {
    for (std::size_t i = 0; i < generators_.size(); ++i) generator_names_.push_back("g" + std::to_string(i + 1));
  }
  if (generator_names_.size() != generators_.size())
    throw InvalidStructure("generator names do not match generators");

  parent_.assign(n, 0);
  parent_gen_.assign(n, 0);
  bfs_order_.clear();
  bfs_order_.reserve(n);
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> words(n);
  seen[0] = true;
  bfs_order_.push_back(0);
  for (std::size_t i = 0; i < bfs_order_.size(); ++i) {
    const Element e = bfs_order_[i];
    for (std::size_t s = 0; s < generators_.size(); ++s) {
      const Element f = mul(e, generators_[s]);
      if (seen[f]) continue;
      seen[f] = true;
      parent_[f] = e;
      parent_gen_[f] = s;
      words[f] = words[e];
      words[f].push_back(s);
      bfs_order_.push_back(f);
    }
  }
  if (bfs_order_.size() != n) throw InvalidStructure("generators do not generate the group");

  if (labels_.empty()) {
    labels_.reserve(n);
    for (std::size_t e = 0; e < n; ++e) labels_.push_back(format_word(words[e], generator_names_));
  } else if (labels_.size() != n) {
    throw InvalidStructure("label count does not match order");
  }
}

Element FiniteGroup::pow(Element a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Element result = 0;
  Element base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Element FiniteGroup::evaluate(std::string_view word) const {
  Element result = 0;
  std::size_t i = 0;
  while (i < word.size()) {
    const char c = word[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
      ++i;
      continue;
    }
    std::size_t best = 0;
    std::size_t best_gen = 0;
    for (std::size_t s = 0; s < generator_names_.size(); ++s) {
      const auto& name = generator_names_[s];
      if (name.size() > best && word.substr(i, name.size()) == name) {
        best = name.size();
        best_gen = s;
      }
    }
    Element factor = 0;
    if (best > 0) {
      factor = generators_[best_gen];
      i += best;
    } else if (c == 'e' || c == '1') {
      ++i;
    } else {
      throw PreconditionError("unknown generator in word \"" + std::string(word) + "\"");
    }
    if (i < word.size() && word[i] == '^') {
      ++i;
      std::size_t j = i;
      if (j < word.size() && (word[j] == '-' || word[j] == '+')) ++j;
      while (j < word.size() && std::isdigit(static_cast<unsigned char>(word[j]))) ++j;
      const std::string digits(word.substr(i, j - i));
      if (digits.empty() || digits == "-" || digits == "+")
        throw PreconditionError("malformed exponent in word \"" + std::string(word) + "\"");
      factor = pow(factor, std::stoll(digits));
      i = j;
    }
    result = mul(result, factor);
  }
  return result;
}

FiniteGroup from_generators(const std::vector<Permutation>& perms, std::vector<std::string> names,
                            std::size_t cap) {
  const std::size_t degree = perms.empty() ? 0 : perms.front().size();
  for (const auto& p : perms) {
    if (p.size() != degree) throw PreconditionError("permutations act on sets of different sizes");
    if (!is_permutation_of_range(p)) throw PreconditionError("not a permutation");
  }
  if (names.empty())
    for (std::size_t i = 0; i < perms.size(); ++i) names.push_back("g" + std::to_string(i + 1));
  if (names.size() != perms.size()) throw PreconditionError("generator names do not match generators");

  Permutation identity(degree);
  std::iota(identity.begin(), identity.end(), 0U);
  auto compose = [](const Permutation& p, const Permutation& q) {
    // Left to right: apply p, then q.
    Permutation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
    return r;
  };
  return detail::close_group<Permutation, PermutationHash>(identity, perms, compose, std::move(names), cap);
}

FiniteGroup cyclic(std::size_t n, std::string name) {
  if (n == 0) throw PreconditionError("cyclic group order must be positive");
  if (n > Limits::construction) throw CapExceeded("construction", Limits::construction);
  std::vector<Element> mult(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mult[i * n + j] = static_cast<Element>((i + j) % n);
  if (n == 1) return FiniteGroup::from_table(1, std::move(mult), {}, {});
  return FiniteGroup::from_table(n, std::move(mult), {1}, {std::move(name)});
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::size_t cap) {
  if (g.order() * h.order() > cap) throw CapExceeded("construction", cap);
  const std::uint64_t hn = h.order();
  std::vector<std::uint64_t> gens;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    gens.push_back(std::uint64_t{g.generators()[i]} * hn);
    names.push_back(g.generator_names()[i]);
  }
  for (std::size_t i = 0; i < h.generators().size(); ++i) {
    gens.push_back(h.generators()[i]);
    names.push_back(h.generator_names()[i]);
  }
  auto mul = [&](std::uint64_t a, std::uint64_t b) {
    const auto ga = static_cast<Element>(a / hn), ha = static_cast<Element>(a % hn);
    const auto gb = static_cast<Element>(b / hn), hb = static_cast<Element>(b % hn);
    return std::uint64_t{g.mul(ga, gb)} * hn + h.mul(ha, hb);
  };
  return detail::close_group<std::uint64_t, PairHash>(0, gens, mul, std::move(names), cap);
}

std::vector<Element> homomorphism_from_images(const FiniteGroup& g, const FiniteGroup& h,
                                              std::span<const Element> generator_images) {
  if (generator_images.size() != g.generators().size())
    throw InvalidStructure("one image per generator is required");
  for (Element e : generator_images)
    if (e >= h.order()) throw InvalidStructure("generator image out of range");
  std::vector<Element> map(g.order(), 0);
  for (Element e : g.bfs_order()) {
    if (e == 0) continue;
    map[e] = h.mul(map[g.tree_parent(e)], generator_images[g.tree_generator(e)]);
  }
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (map[g.mul(static_cast<Element>(a), static_cast<Element>(b))] != h.mul(map[a], map[b]))
        throw InvalidStructure("generator images do not define a homomorphism");
  return map;
}

Permutation automorphism_from_images(const FiniteGroup& group, std::span<const Element> generator_images) {
  auto map = homomorphism_from_images(group, group, generator_images);
  Permutation p(map.begin(), map.end());
  if (!is_permutation_of_range(p)) throw InvalidStructure("generator images do not define an automorphism");
  return p;
}

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h, const ActionSpec& action,
                               std::size_t cap) {
  if (action.acting != nullptr && !(*action.acting == h))
    throw PreconditionError("action's acting group differs from the complement factor");
  if (action.acted != nullptr && !(*action.acted == n))
    throw PreconditionError("action's acted group differs from the normal factor");
  if (action.images.size() != h.generators().size())
    throw InvalidStructure("action needs one image per generator of the acting group");
  if (n.order() * h.order() > cap) throw CapExceeded("construction", cap);

  const std::size_t nn = n.order();
  for (const auto& img : action.images) {
    if (img.size() != nn || !is_permutation_of_range(img))
      throw InvalidStructure("action image is not a permutation of the acted group");
    for (std::size_t a = 0; a < nn; ++a)
      for (std::size_t b = 0; b < nn; ++b)
        if (img[n.mul(static_cast<Element>(a), static_cast<Element>(b))] != n.mul(img[a], img[b]))
          throw InvalidStructure("action image is not an automorphism");
  }

  // act[x][k] = k^x, extended along the spanning tree of the acting group.
  std::vector<Permutation> act(h.order());
  act[0].resize(nn);
  std::iota(act[0].begin(), act[0].end(), 0U);
  for (Element x : h.bfs_order()) {
    if (x == 0) continue;
    const auto& prev = act[h.tree_parent(x)];
    const auto& step = action.images[h.tree_generator(x)];
    act[x].resize(nn);
    for (std::size_t k = 0; k < nn; ++k) act[x][k] = step[prev[k]];
  }
  for (std::size_t x = 0; x < h.order(); ++x)
    for (std::size_t y = 0; y < h.order(); ++y) {
      const auto& xy = act[h.mul(static_cast<Element>(x), static_cast<Element>(y))];
      for (std::size_t k = 0; k < nn; ++k)
        if (xy[k] != act[y][act[x][k]])
          throw InvalidStructure("action is inconsistent with the relations of the acting group");
    }

  std::vector<std::uint64_t> gens;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n.generators().size(); ++i) {
    gens.push_back(n.generators()[i]);
    names.push_back(n.generator_names()[i]);
  }
  for (std::size_t i = 0; i < h.generators().size(); ++i) {
    gens.push_back(std::uint64_t{h.generators()[i]} * nn);
    names.push_back(h.generator_names()[i]);
  }
  // Key = h * |N| + n.
  auto mul = [&](std::uint64_t a, std::uint64_t b) {
    const auto ha = static_cast<Element>(a / nn), na = static_cast<Element>(a % nn);
    const auto hb = static_cast<Element>(b / nn), nb = static_cast<Element>(b % nn);
    return std::uint64_t{h.mul(ha, hb)} * nn + n.mul(act[hb][na], nb);
  };
  return detail::close_group<std::uint64_t, PairHash>(0, gens, mul, std::move(names), cap);
}

Quotient quotient(const FiniteGroup& g, const Subgroup& normal) {
  if (normal.members().universe() != g.order()) throw PreconditionError("subgroup belongs to another group");
  if (!is_normal(g, normal)) throw PreconditionError("quotient by a subgroup that is not normal");

  const std::size_t n = g.order();
  const auto members = normal.elements();
  constexpr Element unassigned = ~Element{0};
  std::vector<Element> coset(n, unassigned);
  std::vector<Element> reps;
  for (std::size_t e = 0; e < n; ++e) {
    if (coset[e] != unassigned) continue;
    const auto id = static_cast<Element>(reps.size());
    reps.push_back(static_cast<Element>(e));
    for (Element m : members) coset[g.mul(static_cast<Element>(e), m)] = id;
  }

  const std::size_t q = reps.size();
  std::vector<Element> mult(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) mult[i * q + j] = coset[g.mul(reps[i], reps[j])];

  std::vector<Element> gens;
  std::vector<std::string> names;
  for (std::size_t s = 0; s < g.generators().size(); ++s) {
    const Element image = coset[g.generators()[s]];
    if (image == 0 || std::find(gens.begin(), gens.end(), image) != gens.end()) continue;
    gens.push_back(image);
    names.push_back(g.generator_names()[s]);
  }

  Quotient result{FiniteGroup::from_table(q, std::move(mult), std::move(gens), std::move(names)), std::move(coset)};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (result.projection[g.mul(static_cast<Element>(a), static_cast<Element>(b))] !=
          result.group.mul(result.projection[a], result.projection[b]))
        throw InvalidStructure("coset projection is not a homomorphism");
  return result;
}

EmbeddedGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
  const auto gens = generating_set(g, h);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& label = g.label(gens[i]);
    const bool plain = std::all_of(label.begin(), label.end(), is_name_char);
    names.push_back(plain ? label : "s" + std::to_string(i + 1));
  }
  auto mul = [&](Element a, Element b) { return g.mul(a, b); };
  struct ElementHash {
    std::size_t operator()(Element e) const { return e; }
  };
  auto group = detail::close_group<Element, ElementHash>(0, gens, mul, std::move(names), g.order());

  // Recover the embedding by replaying the spanning tree in the parent.
  std::vector<Element> embedding(group.order(), 0);
  for (Element e : group.bfs_order()) {
    if (e == 0) continue;
    embedding[e] = g.mul(embedding[group.tree_parent(e)], gens[group.tree_generator(e)]);
  }
  return {std::move(group), std::move(embedding)};
}

std::size_t element_order(const FiniteGroup& g, Element e) {
  std::size_t k = 1;
  Element x = e;
  while (x != 0) {
    x = g.mul(x, e);
    ++k;
  }
  return k;
}

std::size_t exponent(const FiniteGroup& g) {
  std::size_t result = 1;
  for (std::size_t e = 0; e < g.order(); ++e) result = std::lcm(result, element_order(g, static_cast<Element>(e)));
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::uint64_t> prime_power_base(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  if (n != 1) return std::nullopt;
  return p;
}

std::set<std::uint64_t> primes_of(const FiniteGroup& g) {
  std::set<std::uint64_t> primes;
  for (std::size_t e = 0; e < g.order(); ++e) {
    std::uint64_t k = element_order(g, static_cast<Element>(e));
    for (std::uint64_t p = 2; p * p <= k; ++p) {
      if (k % p) continue;
      primes.insert(p);
      while (k % p == 0) k /= p;
    }
    if (k > 1) primes.insert(k);
  }
  return primes;
}

}  // namespace complementa
