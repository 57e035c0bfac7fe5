#include "complementa/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "complementa/bounds.hpp"
#include "complementa/complementation.hpp"
#include "complementa/series.hpp"

namespace complementa {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

bool any_failed(const std::vector<VerificationReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.status == Status::fail; });
}

std::string describe(const FiniteGroup& g, const Subgroup& h) {
  std::ostringstream out;
  out << '<';
  const auto gens = generating_set(g, h);
  if (gens.empty()) out << 'e';
  for (std::size_t i = 0; i < gens.size(); ++i) out << (i ? ", " : "") << g.label(gens[i]);
  out << "> order " << h.order() << " [";
  bool first = true;
  h.members().for_each([&](Element e) {
    out << (first ? "" : " ") << e;
    first = false;
  });
  out << ']';
  return out.str();
}

namespace {

using Clock = std::chrono::steady_clock;

class Recorder {
 public:
  explicit Recorder(std::vector<VerificationReport>& out) : out_(out) {}

  void start() { t0_ = Clock::now(); }

  void add(std::string claim, Status status, std::vector<std::string> witnesses) {
    if (status == Status::fail && witnesses.empty()) witnesses.push_back("no witness recorded");
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0_).count();
    out_.push_back({std::move(claim), status, std::move(witnesses), ms});
    t0_ = Clock::now();
  }

  void check(std::string claim, bool ok, std::vector<std::string> witnesses) {
    add(std::move(claim), ok ? Status::pass : Status::fail, std::move(witnesses));
  }

 private:
  std::vector<VerificationReport>& out_;
  Clock::time_point t0_ = Clock::now();
};

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0 && n > 1) n /= p;
  return n == 1;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool normal_in(const FiniteGroup& g, const Subgroup& s, std::span<const Element> by) {
  for (Element x : by) {
    bool ok = true;
    s.members().for_each([&](Element e) { ok = ok && s.contains(g.conj(e, x)); });
    if (!ok) return false;
  }
  return true;
}

Subgroup span_of_words(const FiniteGroup& g, std::initializer_list<std::string_view> words) {
  std::vector<Element> elems;
  for (auto w : words) elems.push_back(g.evaluate(w));
  return generated_subgroup(g, elems);
}

std::string num(const std::string& name, const auto& value) {
  std::ostringstream out;
  out << name << " = " << value;
  return out.str();
}

}  // namespace

VerificationContext::VerificationContext(FiniteGroup g, std::size_t lattice_cap)
    : group_(std::move(g)),
      lattice_(all_subgroups(group_, lattice_cap)),
      complemented_(complemented_flags(group_, lattice_)),
      derived_length_(complementa::derived_length(group_)),
      elementary_abelian_(lattice_.size(), -1) {}

bool VerificationContext::is_supercomplemented(const Subgroup& h) const {
  for (std::size_t i = 0; i < lattice_.size(); ++i)
    if (!complemented_[i] && h.is_subgroup_of(lattice_.subgroups[i])) return false;
  return true;
}

bool VerificationContext::is_elementary_abelian(std::size_t i) {
  if (elementary_abelian_[i] < 0)
    elementary_abelian_[i] = complementa::is_elementary_abelian(group_, lattice_.subgroups[i]) ? 1 : 0;
  return elementary_abelian_[i] == 1;
}

const std::vector<std::size_t>& VerificationContext::p_subgroups(std::uint64_t p) {
  auto it = p_subgroups_.find(p);
  if (it != p_subgroups_.end()) return it->second;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lattice_.size(); ++i)
    if (is_power_of(lattice_.subgroups[i].order(), p)) out.push_back(i);
  return p_subgroups_.emplace(p, std::move(out)).first->second;
}

const PSubgroupFacts& VerificationContext::facts(std::size_t i, std::uint64_t p) {
  auto it = facts_.find(i);
  if (it != facts_.end()) return it->second;
  const auto& pg = lattice_.subgroups[i];
  PSubgroupFacts f;
  f.prime = p;
  f.nilpotent = is_nilpotent(group_, pg);
  f.derived_length = complementa::derived_length(group_, pg);
  const auto gens = generating_set(group_, pg);
  std::size_t best = 1;
  for (std::size_t j : p_subgroups(p)) {
    const auto& s = lattice_.subgroups[j];
    if (s.order() <= best || !s.is_subgroup_of(pg) || !is_elementary_abelian(j)) continue;
    if (normal_in(group_, s, gens)) best = s.order();
  }
  f.elementary_abelian_index = pg.order() / best;
  return facts_.emplace(i, f).first->second;
}

const std::vector<Subgroup>& VerificationContext::minimal_normal() {
  if (!minimal_normal_) minimal_normal_ = minimal_normal_subgroups(group_);
  return *minimal_normal_;
}

const std::vector<std::pair<Element, Subgroup>>& VerificationContext::cyclic() {
  if (!cyclic_) {
    cyclic_ = cyclic_subgroups(group_);
    std::stable_sort(cyclic_->begin(), cyclic_->end(),
                     [](const auto& a, const auto& b) { return canonical_less(a.second, b.second); });
  }
  return *cyclic_;
}

// ---------------------------------------------------------------------------

std::vector<VerificationReport> verify_holomorph8() {
  std::vector<VerificationReport> out;
  Recorder rec(out);
  const auto ng = holomorph8_group();
  const auto& g = ng.group;
  const auto lattice = all_subgroups(g);
  const auto whole = whole_group(g);

  rec.check("holomorph8.order", g.order() == 32, {num("order", g.order())});

  const auto index2 = lattice.of_order(g.order() / 2);
  {
    std::vector<std::string> w{num("count", index2.size())};
    for (std::size_t i : index2) w.push_back(describe(g, lattice.subgroups[i]));
    rec.check("holomorph8.index-2-count", index2.size() == 7, std::move(w));
  }

  const auto derived = commutator_subgroup(g, whole, whole);
  const auto& x2 = ng.subgroup("x2");
  {
    bool ok = derived == x2 && derived.order() == 4;
    std::vector<std::string> w{"G' = " + describe(g, derived)};
    for (std::size_t i : index2)
      if (!derived.is_subgroup_of(lattice.subgroups[i])) {
        ok = false;
        w.push_back("misses G': " + describe(g, lattice.subgroups[i]));
      }
    rec.check("holomorph8.derived-subgroup", ok, std::move(w));
  }

  {
    const auto q = quotient(g, derived);
    rec.check("holomorph8.quotient-elementary-abelian", q.group.order() == 8 && is_elementary_abelian(q.group),
              {num("order", q.group.order()), num("exponent", exponent(q.group))});
  }

  {
    const std::vector<std::pair<Subgroup, Subgroup>> listed{
        {span_of_words(g, {"x", "a"}), span_of_words(g, {"b"})},
        {span_of_words(g, {"x", "b"}), span_of_words(g, {"a"})},
        {span_of_words(g, {"x^2", "a", "b"}), span_of_words(g, {"x*a"})},
        {span_of_words(g, {"x^2", "b", "x*a"}), span_of_words(g, {"x^2*a"})},
        {span_of_words(g, {"x", "a*b"}), span_of_words(g, {"a"})},
        {span_of_words(g, {"x*b", "a"}), span_of_words(g, {"b"})},
        {span_of_words(g, {"x^2", "a*b", "x*a"}), span_of_words(g, {"b"})},
    };
    bool ok = true;
    std::vector<std::string> w;
    for (std::size_t i = 0; i < listed.size(); ++i) {
      const auto& [h, t] = listed[i];
      for (std::size_t j = 0; j < i; ++j)
        if (listed[j].first == h) {
          ok = false;
          w.push_back("repeated: " + describe(g, h));
        }
      const bool index_two = h.order() * 2 == g.order();
      const bool complemented = h.members().intersection_count(t.members()) == 1 &&
                                product_set(g, h, t).elements.count() == g.order();
      ok = ok && index_two && complemented;
      w.push_back(describe(g, h) + " complemented by " + describe(g, t) +
                  (index_two && complemented ? "" : " [fails]"));
    }
    rec.check("holomorph8.listed-complements", ok, std::move(w));
  }

  const auto& x = ng.subgroup("x");
  {
    const auto r = is_supercomplemented(g, lattice, x);
    std::vector<std::string> w;
    if (r.witness) w.push_back("uncomplemented overgroup " + describe(g, *r.witness));
    rec.check("holomorph8.x-supercomplemented", r.holds, std::move(w));
  }

  {
    const auto over = overgroups(g, x);
    const auto& d = ng.subgroup("D");
    bool ok = over.size() == 5;
    std::vector<std::string> w{num("count", over.size())};
    for (const auto& k : over) {
      // A complement of K∩D inside D should complement K in G.
      const auto meet = intersection(k, d);
      std::optional<Subgroup> found;
      for (std::size_t i : lattice.of_order(d.order() / meet.order())) {
        const auto& t = lattice.subgroups[i];
        if (t.is_subgroup_of(d) && t.members().intersection_count(meet.members()) == 1 &&
            k.members().intersection_count(t.members()) == 1 &&
            product_set(g, k, t).elements.count() == g.order()) {
          found = t;
          break;
        }
      }
      ok = ok && found.has_value();
      w.push_back(describe(g, k) + (found ? " complemented by " + describe(g, *found) : " has no complement in D"));
    }
    rec.check("holomorph8.overgroups-of-x", ok, std::move(w));
  }

  {
    const auto all = c_separating_subgroups(g, lattice);
    std::vector<std::string> w{num("count", all.size())};
    for (const auto& h : all) w.push_back(describe(g, h));
    rec.check("holomorph8.no-c-separating", all.empty(), std::move(w));
  }
  {
    const auto idx2 = c_separating_index2(g, lattice);
    std::vector<std::string> w{num("count", idx2.size())};
    for (const auto& h : idx2) w.push_back(describe(g, h));
    rec.check("holomorph8.no-c-separating-index-2", idx2.empty(), std::move(w));
  }

  rec.check("holomorph8.exponent", exponent(g) == 8, {num("exponent", exponent(g))});
  return out;
}

std::vector<VerificationReport> verify_example(std::uint64_t p) {
  if (p != 2 && p != 3) throw PreconditionError("example verification covers p = 2 and p = 3");
  std::vector<VerificationReport> out;
  Recorder rec(out);
  const auto ng = example_group(p);
  const auto& g = ng.group;
  const std::string prefix = "example" + std::to_string(p) + ".";
  const auto& x = ng.subgroup("x");
  const auto& b = ng.subgroup("B");

  rec.check(prefix + "order", g.order() == p * p * p * p * p, {num("order", g.order())});
  {
    const auto ps = product_set(g, x, b);
    rec.check(prefix + "factorization", ps.elements.count() == g.order(), {num("|<x>B|", ps.elements.count())});
  }
  {
    const auto meet = intersection(x, b);
    rec.check(prefix + "trivial-intersection", meet.is_trivial(), {describe(g, meet)});
  }
  rec.check(prefix + "B-elementary-abelian", b.order() == p * p * p && is_elementary_abelian(g, b), {describe(g, b)});
  rec.check(prefix + "x-not-normal", !is_normal(g, x), {describe(g, normal_closure(g, x))});
  rec.check(prefix + "B-not-normal", !is_normal(g, b), {describe(g, normal_closure(g, b))});
  {
    const auto lattice = all_subgroups(g);
    const auto over = overgroups(g, x);
    std::vector<std::string> w{num("overgroups", over.size())};
    bool ok = true;
    for (const auto& k : over)
      if (!is_complemented(g, lattice, k)) {
        ok = false;
        w.push_back("uncomplemented " + describe(g, k));
      }
    rec.check(prefix + "x-supercomplemented", ok, std::move(w));
  }
  if (p == 3) {
    const auto d = derived_length(g);
    rec.check(prefix + "metabelian", d && *d <= 2,
              {d ? num("derived length", *d) : std::string("derived length: not solvable")});
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Hypothesis {
  Subgroup x;
  std::size_t m = 1;
  std::optional<std::uint64_t> prime;
  std::string label;
  std::optional<std::string> failure;
};

Hypothesis check_hypothesis(VerificationContext& ctx, Element x) {
  const auto& g = ctx.group();
  const std::vector<Element> one{x};
  Hypothesis h{generated_subgroup(g, one), 0, std::nullopt, {}, std::nullopt};
  h.m = h.x.order();
  h.prime = prime_power_base(h.m);
  h.label = "x = " + g.label(x) + ", m = " + std::to_string(h.m);
  if (h.m > 1 && !h.prime)
    h.failure = "hypothesis fails: <x> is not a p-subgroup";
  else if (!ctx.is_supercomplemented(h.x))
    h.failure = "hypothesis fails: <x> is not supercomplemented";
  return h;
}

struct BatteryResult {
  bool ok = true;
  std::size_t checked = 0;
  std::vector<std::string> failures;
};

// Nilpotent, derived length ≤ 3 (≤ 2 for odd p), a normal elementary abelian subgroup of index ≤ m!.
BatteryResult p_subgroup_battery(VerificationContext& ctx, std::uint64_t p, std::size_t m) {
  BatteryResult r;
  const BigInt limit = factorial_index_bound(m);
  const std::size_t max_d = p == 2 ? 3 : 2;
  for (std::size_t i : ctx.p_subgroups(p)) {
    const auto& f = ctx.facts(i, p);
    ++r.checked;
    std::string why;
    if (!f.nilpotent) why += " not nilpotent;";
    if (!f.derived_length || *f.derived_length > max_d)
      why += " derived length " + (f.derived_length ? std::to_string(*f.derived_length) : "inf") + " > " +
             std::to_string(max_d) + ";";
    if (BigInt(f.elementary_abelian_index) > limit)
      why += " elementary abelian index " + std::to_string(f.elementary_abelian_index) + " > " +
             limit.str() + ";";
    if (!why.empty()) {
      r.ok = false;
      r.failures.push_back(describe(ctx.group(), ctx.lattice().subgroups[i]) + ":" + why);
    }
  }
  return r;
}

std::vector<std::uint64_t> battery_primes(const FiniteGroup& g, const Hypothesis& h) {
  if (h.prime) return {*h.prime};
  return prime_divisors(g.order());
}

}  // namespace

std::vector<VerificationReport> verify_supercomplemented_instance(VerificationContext& ctx, Element x) {
  std::vector<VerificationReport> out;
  Recorder rec(out);
  const auto& g = ctx.group();
  const auto h = check_hypothesis(ctx, x);
  const std::vector<std::string> claims{"supercomplemented.solvable", "supercomplemented.derived-length-bound",
                                        "supercomplemented.p-subgroups", "supercomplemented.residually-finite"};
  if (h.failure) {
    for (const auto& c : claims) rec.add(c, Status::skipped, {h.label, *h.failure});
    return out;
  }

  const auto d = ctx.derived_length();
  rec.check(claims[0], d.has_value(), {h.label, d ? num("derived length", *d) : "not solvable"});

  const auto bound = derived_length_bound(h.m);
  {
    std::ostringstream w;
    w << "derived length " << (d ? std::to_string(*d) : std::string("inf")) << " <= bound " << bound.floor
      << " (real " << static_cast<double>(bound.value) << ")";
    rec.check(claims[1], d && static_cast<long double>(*d) <= bound.value, {h.label, w.str()});
  }

  {
    std::vector<std::string> w{h.label};
    bool ok = true;
    for (std::uint64_t p : battery_primes(g, h)) {
      auto r = p_subgroup_battery(ctx, p, h.m);
      ok = ok && r.ok;
      w.push_back("p = " + std::to_string(p) + ": " + std::to_string(r.checked) + " p-subgroups");
      w.insert(w.end(), r.failures.begin(), r.failures.end());
    }
    rec.check(claims[2], ok, std::move(w));
  }

  rec.add(claims[3], Status::skipped, {h.label, "finite group: residual finiteness holds trivially"});
  return out;
}

std::vector<VerificationReport> verify_minimal_normal_instance(VerificationContext& ctx, Element x) {
  std::vector<VerificationReport> out;
  Recorder rec(out);
  const auto& g = ctx.group();
  const auto h = check_hypothesis(ctx, x);
  const std::string claim = "minimal-normal.order-bound";
  if (h.failure) {
    rec.add(claim, Status::skipped, {h.label, *h.failure});
    return out;
  }

  bool ok = true;
  std::vector<std::string> w{h.label};
  std::size_t checked = 0;
  for (const auto& q : ctx.minimal_normal()) {
    const auto prime = prime_power_base(q.order());
    if (!prime || !is_elementary_abelian(g, q)) continue;
    ++checked;
    const BigInt bound = minimal_normal_order_bound(*prime, h.m);
    const bool fine = h.m == 1 ? q.order() == *prime : BigInt(q.order()) <= bound;
    if (!fine) {
      ok = false;
      w.push_back(describe(g, q) + " exceeds bound " + bound.str());
    }
  }
  w.push_back(num("elementary abelian minimal normal subgroups", checked));
  rec.check(claim, ok, std::move(w));
  return out;
}

std::vector<VerificationReport> verify_c_separating_instance(VerificationContext& ctx, const Subgroup& hsub) {
  std::vector<VerificationReport> out;
  Recorder rec(out);
  const auto& g = ctx.group();
  const std::vector<std::string> claims{"c-separating.solvable", "c-separating.cyclic-witness",
                                        "c-separating.q-subgroups-elementary", "c-separating.p-subgroups"};
  const std::string label = "H = " + describe(g, hsub);
  if (!is_c_separating(g, ctx.lattice(), hsub)) {
    for (const auto& c : claims) rec.add(c, Status::skipped, {label, "hypothesis fails: H is not C-separating"});
    return out;
  }

  const auto d = ctx.derived_length();
  rec.check(claims[0], d.has_value(), {label, d ? num("derived length", *d) : "not solvable"});

  struct Choice {
    std::uint64_t p;
    std::pair<Element, Subgroup> witness;
    std::vector<std::string> non_elementary;
  };
  std::optional<Choice> chosen;
  for (std::uint64_t p : prime_divisors(g.order())) {
    const std::pair<Element, Subgroup>* found = nullptr;
    for (const auto& c : ctx.cyclic()) {
      if (c.second.order() > 1 && is_power_of(c.second.order(), p) && !c.second.is_subgroup_of(hsub) &&
          ctx.is_supercomplemented(c.second)) {
        found = &c;
        break;
      }
    }
    if (!found) continue;
    Choice choice{p, *found, {}};
    for (std::uint64_t q : prime_divisors(g.order())) {
      if (q == p) continue;
      for (std::size_t i : ctx.p_subgroups(q))
        if (!ctx.is_elementary_abelian(i)) choice.non_elementary.push_back(describe(g, ctx.lattice().subgroups[i]));
    }
    const bool clean = choice.non_elementary.empty();
    if (!chosen || (clean && !chosen->non_elementary.empty())) chosen = std::move(choice);
    if (clean) break;
  }

  if (!chosen) {
    for (std::size_t i = 1; i < claims.size(); ++i)
      rec.check(claims[i], false, {label, "no supercomplemented cyclic p-subgroup outside H"});
    return out;
  }
  const std::string wlabel = "p = " + std::to_string(chosen->p) + ", x = " + g.label(chosen->witness.first) +
                             ", m = " + std::to_string(chosen->witness.second.order());
  rec.check(claims[1], true, {label, wlabel});
  {
    std::vector<std::string> w{label, wlabel};
    w.insert(w.end(), chosen->non_elementary.begin(), chosen->non_elementary.end());
    rec.check(claims[2], chosen->non_elementary.empty(), std::move(w));
  }
  {
    auto r = p_subgroup_battery(ctx, chosen->p, chosen->witness.second.order());
    std::vector<std::string> w{label, wlabel, num("p-subgroups", r.checked)};
    w.insert(w.end(), r.failures.begin(), r.failures.end());
    rec.check(claims[3], r.ok, std::move(w));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t pair_scan_limit = 64;
constexpr std::size_t overgroup_check_limit = 128;

// Folds per-instance reports into one per claim: fail if any failed, skipped if none ran.
void fold(Recorder& rec, const std::string& claim, const std::vector<VerificationReport>& parts,
          const std::string& none_reason) {
  std::size_t passed = 0;
  std::size_t skipped = 0;
  std::vector<std::string> failures;
  for (const auto& r : parts) {
    if (r.status == Status::pass) ++passed;
    if (r.status == Status::skipped) ++skipped;
    if (r.status != Status::fail) continue;
    std::string w = r.claim + ":";
    for (const auto& s : r.witnesses) w += " " + s + ";";
    failures.push_back(std::move(w));
  }
  if (!failures.empty()) {
    rec.add(claim, Status::fail, std::move(failures));
  } else if (passed == 0) {
    rec.add(claim, Status::skipped, {none_reason});
  } else {
    rec.add(claim, Status::pass, {num("passed", passed), num("skipped", skipped)});
  }
}

void lattice_claims(Recorder& rec, const std::string& name, VerificationContext& ctx) {
  const auto& g = ctx.group();
  const auto& lattice = ctx.lattice();
  std::vector<std::string> bad;
  if (lattice.subgroups.front().order() != 1 || lattice.subgroups.back().order() != g.order())
    bad.push_back("lattice does not run from the trivial subgroup to G");
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto& h = lattice.subgroups[i];
    if (g.order() % h.order() != 0) bad.push_back("Lagrange fails for " + describe(g, h));
    if (lattice.normal[i] != is_normal(g, h)) bad.push_back("normal flag wrong for " + describe(g, h));
    for (Element by : g.generators())
      if (!lattice.index_of(conjugate(g, h, by))) bad.push_back("conjugate missing for " + describe(g, h));
    if (g.order() <= overgroup_check_limit) {
      std::vector<Subgroup> filtered;
      for (const auto& k : lattice.subgroups)
        if (h.is_subgroup_of(k)) filtered.push_back(k);
      if (overgroups(g, h) != filtered) bad.push_back("overgroups disagree with the lattice for " + describe(g, h));
    }
  }
  std::vector<std::string> w{num("subgroups", lattice.size())};
  const bool ok = bad.empty();
  w.insert(w.end(), bad.begin(), bad.end());
  rec.check(name + ".lattice", ok, std::move(w));
}

void pair_claims(Recorder& rec, const std::string& name, VerificationContext& ctx) {
  const auto& g = ctx.group();
  const auto& lattice = ctx.lattice();
  if (g.order() > pair_scan_limit) {
    rec.add(name + ".complement-criterion", Status::skipped, {"order above the pair-scan limit"});
    return;
  }
  std::vector<std::string> bad;
  std::size_t pairs = 0;
  for (const auto& h : lattice.subgroups)
    for (const auto& t : lattice.subgroups) {
      ++pairs;
      const std::size_t meet = h.members().intersection_count(t.members());
      ProductSet ps;
      try {
        ps = product_set(g, h, t);
      } catch (const std::logic_error& e) {
        bad.push_back(std::string(e.what()) + ": " + describe(g, h) + " / " + describe(g, t));
        continue;
      }
      const bool by_product = ps.elements.count() == g.order() && meet == 1;
      const bool by_order = h.order() * t.order() == g.order() && meet == 1;
      if (by_product != by_order)
        bad.push_back("criterion disagrees for " + describe(g, h) + " / " + describe(g, t));
      const bool reverse = product_set(g, t, h).elements.count() == g.order() && meet == 1;
      if (by_product != reverse) bad.push_back("asymmetric for " + describe(g, h) + " / " + describe(g, t));
    }
  std::vector<std::string> w{num("pairs", pairs)};
  const bool ok = bad.empty();
  w.insert(w.end(), bad.begin(), bad.end());
  rec.check(name + ".complement-criterion", ok, std::move(w));
}

void dedekind_claims(Recorder& rec, const std::string& name, VerificationContext& ctx) {
  const auto& g = ctx.group();
  const auto& lattice = ctx.lattice();
  if (g.order() > pair_scan_limit) {
    rec.add(name + ".dedekind", Status::skipped, {"order above the pair-scan limit"});
    return;
  }
  std::size_t triples = 0;
  std::vector<std::string> bad;
  for (const auto& a : lattice.subgroups)
    for (const auto& t : lattice.subgroups) {
      if (a.order() * t.order() != g.order() * a.members().intersection_count(t.members())) continue;
      for (const auto& b : lattice.subgroups) {
        if (!a.is_subgroup_of(b)) continue;
        ++triples;
        if (!dedekind_identity_check(g, a, b, t))
          bad.push_back(describe(g, a) + " / " + describe(g, b) + " / " + describe(g, t));
      }
    }
  std::vector<std::string> w{num("triples", triples)};
  const bool ok = bad.empty();
  w.insert(w.end(), bad.begin(), bad.end());
  rec.check(name + ".dedekind", ok, std::move(w));
}

void transport_claims(Recorder& rec, const std::string& name, VerificationContext& ctx) {
  const auto& g = ctx.group();
  if (g.order() > pair_scan_limit) {
    rec.add(name + ".quotient-transport", Status::skipped, {"order above the pair-scan limit"});
    return;
  }
  const auto scan = scan_quotient_transport(g, ctx.lattice());
  std::vector<std::string> w{num("tuples", scan.tuples)};
  for (const auto& f : scan.failures)
    w.push_back("H " + describe(g, f.h) + ", K " + describe(g, f.k) + ", N " + describe(g, f.n));
  rec.check(name + ".quotient-transport", scan.failures.empty(), std::move(w));
}

void series_claims(Recorder& rec, const std::string& name, VerificationContext& ctx) {
  const auto& g = ctx.group();
  const auto& lattice = ctx.lattice();
  std::vector<std::string> bad;
  const auto d = ctx.derived_length();

  if (d) {
    const auto chief = chief_series(g);
    for (const auto& f : chief.factors)
      if (!f.elementary_abelian) bad.push_back(num("chief factor not elementary abelian, order", f.order));
  }

  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (!lattice.normal[i]) continue;
    const auto q = quotient(g, lattice.subgroups[i]);
    const auto dq = derived_length(q.group);
    if (d && (!dq || *dq > *d)) bad.push_back("derived length grows in G/" + describe(g, lattice.subgroups[i]));
  }

  const auto phi = frattini(g, lattice);
  if (!is_normal(g, phi)) bad.push_back("Frattini subgroup not normal: " + describe(g, phi));
  if (g.order() <= pair_scan_limit) {
    const auto whole = whole_group(g);
    phi.members().for_each([&](Element f) {
      const std::vector<Element> one{f};
      const auto cf = generated_subgroup(g, one);
      for (const auto& k : lattice.subgroups)
        if (k.order() < g.order() && join(g, k, cf) == whole)
          bad.push_back("Frattini element " + g.label(f) + " generates with " + describe(g, k));
    });
  }

  for (std::uint64_t p : prime_divisors(g.order())) {
    const auto syl = sylow_subgroups(g, lattice, p);
    std::uint64_t part = 1;
    for (std::uint64_t n = g.order(); n % p == 0; n /= p) part *= p;
    if (syl.empty() || syl.front().order() != part) bad.push_back(num("Sylow order wrong for p", p));
    if (syl.size() % p != 1 % p) bad.push_back(num("Sylow count not 1 mod p for p", p));
  }

  const bool prime_power = g.order() == 1 || prime_power_base(g.order()).has_value();
  if (prime_power && !is_nilpotent(g)) bad.push_back("p-group reported not nilpotent");

  std::vector<std::string> w{d ? num("derived length", *d) : std::string("not solvable")};
  const bool ok = bad.empty();
  w.insert(w.end(), bad.begin(), bad.end());
  rec.check(name + ".series", ok, std::move(w));
}

void complementation_claims(Recorder& rec, const std::string& name, VerificationContext& ctx) {
  const auto& g = ctx.group();
  const auto& lattice = ctx.lattice();
  std::vector<std::string> bad;
  PredicateResult cf;
  try {
    cf = is_completely_factorizable(g, lattice);
  } catch (const std::logic_error& e) {
    bad.push_back(e.what());
  }
  std::vector<Subgroup> seps;
  try {
    seps = c_separating_subgroups(g, lattice);
  } catch (const std::logic_error& e) {
    bad.push_back(e.what());
  }
  for (const auto& h : seps)
    for (const auto& k : lattice.subgroups)
      if (k.order() < g.order() && h.is_subgroup_of(k) && !is_c_separating(g, lattice, k))
        bad.push_back("C-separation not inherited: " + describe(g, h) + " within " + describe(g, k));

  std::vector<std::string> w{std::string("completely factorizable: ") + (cf.holds ? "yes" : "no"),
                             num("C-separating subgroups", seps.size())};
  const bool ok = bad.empty();
  w.insert(w.end(), bad.begin(), bad.end());
  rec.check(name + ".complementation", ok, std::move(w));

  if (cf.holds) {
    const auto d = ctx.derived_length();
    rec.check(name + ".completely-factorizable-metabelian", d && *d <= 2,
              {d ? num("derived length", *d) : std::string("not solvable")});
  } else {
    rec.add(name + ".completely-factorizable-metabelian", Status::skipped,
            {"not completely factorizable: " + (cf.witness ? describe(g, *cf.witness) : std::string("?"))});
  }
}

void instance_claims(Recorder& rec, const std::string& name, VerificationContext& ctx) {
  std::vector<VerificationReport> super;
  std::vector<VerificationReport> minimal;
  for (const auto& [x, c] : ctx.cyclic()) {
    if (c.order() > 1 && !prime_power_base(c.order())) continue;
    if (!ctx.is_supercomplemented(c)) continue;
    auto a = verify_supercomplemented_instance(ctx, x);
    super.insert(super.end(), a.begin(), a.end());
    auto b = verify_minimal_normal_instance(ctx, x);
    minimal.insert(minimal.end(), b.begin(), b.end());
  }
  fold(rec, name + ".supercomplemented-instances", super, "no supercomplemented cyclic p-subgroup");
  fold(rec, name + ".minimal-normal-instances", minimal, "no supercomplemented cyclic p-subgroup");

  std::vector<VerificationReport> sep;
  if (ctx.group().order() > 1) {
    for (const auto& h : c_separating_subgroups(ctx.group(), ctx.lattice())) {
      auto r = verify_c_separating_instance(ctx, h);
      sep.insert(sep.end(), r.begin(), r.end());
    }
  }
  fold(rec, name + ".c-separating-instances", sep, "no C-separating subgroup");
}

}  // namespace

std::vector<VerificationReport> run_catalog_suite(const std::vector<CatalogEntry>& entries) {
  std::vector<VerificationReport> out;
  Recorder rec(out);
  for (const auto& entry : entries) {
    rec.start();
    auto ng = entry.build();
    const auto fp = fingerprint(ng.group);
    rec.check(entry.name + ".fingerprint", fp == entry.expected,
              {num("order", fp.order), std::string("abelian = ") + (fp.abelian ? "true" : "false"),
               num("exponent", fp.exponent)});
    if (ng.group.order() > Limits::lattice) {
      rec.add(entry.name + ".lattice", Status::skipped,
              {num("order", ng.group.order()) + " exceeds lattice cap " + std::to_string(Limits::lattice)});
      continue;
    }
    VerificationContext ctx(std::move(ng.group));
    lattice_claims(rec, entry.name, ctx);
    pair_claims(rec, entry.name, ctx);
    dedekind_claims(rec, entry.name, ctx);
    transport_claims(rec, entry.name, ctx);
    series_claims(rec, entry.name, ctx);
    complementation_claims(rec, entry.name, ctx);
    instance_claims(rec, entry.name, ctx);

    std::vector<VerificationReport> extra;
    if (entry.name == "holomorph8") extra = verify_holomorph8();
    if (entry.name == "example2") extra = verify_example(2);
    if (entry.name == "example3") extra = verify_example(3);
    out.insert(out.end(), extra.begin(), extra.end());
  }
  return out;
}

std::vector<VerificationReport> run_catalog_suite() { return run_catalog_suite(catalog()); }

}  // namespace complementa
