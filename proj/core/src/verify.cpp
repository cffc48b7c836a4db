// Copyright 2026 The critset Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "critset/verify.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <variant>

namespace critset {

const char* check_scope_name(CheckScope scope) {
  switch (scope) {
    case CheckScope::kBipartite: return "bipartite";
    case CheckScope::kKonigEgervary: return "konig-egervary";
    case CheckScope::kAnyGraph: return "any";
  }
  return "?";
}

const char* check_status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkipped: return "skipped";
  }
  return "?";
}

std::size_t TheoremReport::count(CheckStatus status) const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [&](const CheckResult& r) { return r.status == status; }));
}

std::size_t TheoremReport::violations() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& r) { return r.is_violation(); }));
}

const CheckResult* TheoremReport::find(std::string_view id) const {
  for (const auto& r : checks) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

std::string format_set(const VertexSet& s, std::span<const std::string> names) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](VertexId v) {
    if (!first) out += ',';
    first = false;
    if (v < names.size()) {
      out += names[v];
    } else {
      out += std::to_string(v);
    }
  });
  out += '}';
  return out;
}

namespace {

template <class... Args>
std::string str(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

struct Outcome {
  CheckStatus status;
  std::string detail;
};

Outcome pass(std::string d) { return {CheckStatus::kPass, std::move(d)}; }
Outcome fail(std::string d) { return {CheckStatus::kFail, std::move(d)}; }
Outcome skip(std::string d) { return {CheckStatus::kSkipped, std::move(d)}; }

/// Computes once; an OracleBoundError becomes a remembered skip reason.
template <class T>
class Memo {
 public:
  template <class F>
  const T* get(F&& compute, std::string& why) {
    if (!done_) {
      done_ = true;
      try {
        value_.emplace(compute());
      } catch (const OracleBoundError& e) {
        reason_ = e.what();
      }
    }
    if (!value_) why = reason_;
    return value_ ? &*value_ : nullptr;
  }

 private:
  bool done_ = false;
  std::optional<T> value_;
  std::string reason_;
};

/// Ground values for the identities, from the most independent source that
/// fits the bounds.
struct Reference {
  std::size_t alpha = 0;
  VertexSet ker;
  VertexSet diadem;
  VertexSet core;
  VertexSet corona;
  std::string ker_source;
  std::string core_source;
};

/// Evenly spaced indices into [0, total), at most cap of them.
std::vector<std::size_t> pick(std::size_t total, std::size_t cap) {
  std::vector<std::size_t> out;
  if (total == 0 || cap == 0) return out;
  const std::size_t k = std::min(total, cap);
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back(i * (total / k) + (i * (total % k)) / k);
  }
  return out;
}

std::string coverage(std::size_t examined, std::size_t total, const char* what) {
  if (examined == total) return str("all ", total, ' ', what);
  return str(examined, " of ", total, ' ', what, " (evenly spaced)");
}

class Context {
 public:
  Context(const Graph& graph, const std::optional<Bipartition>& declared,
          const BatteryOptions& options)
      : g(graph), opt(options) {
    if (declared) {
      bp_ = *declared;
    } else {
      auto found = find_bipartition(g);
      if (auto* b = std::get_if<Bipartition>(&found)) bp_ = std::move(*b);
    }
  }

  const Graph& g;
  const BatteryOptions& opt;

  bool bipartite() const { return bp_.has_value(); }
  const Bipartition& bp() const { return *bp_; }
  std::size_t n() const { return g.order(); }
  std::string fmt(const VertexSet& s) const { return format_set(s, opt.names); }

  const CriticalSummary& sum() {
    if (!sum_) sum_ = summarize(g, *bp_);
    return *sum_;
  }
  const Matching& matching() {
    if (!m_) m_ = max_matching(g, *bp_);
    return *m_;
  }

  const std::size_t* alpha_o(std::string& why) {
    return alpha_.get([&] { return oracle_alpha(g, opt.limits); }, why);
  }
  const std::size_t* mu_o(std::string& why) {
    return mu_.get([&] { return oracle_mu(g, opt.limits); }, why);
  }
  const SetFamily* omega_o(std::string& why) {
    return omega_.get([&] { return oracle_omega(g, opt.limits); }, why);
  }
  const CriticalIndependentFamily* cif_o(std::string& why) {
    return cif_.get([&] { return oracle_critical_independent_family(g, opt.limits); }, why);
  }
  const CriticalFamily* cf_o(std::string& why) {
    return cf_.get([&] { return oracle_critical_sets(g, opt.limits); }, why);
  }
  const SideCriticalFamily* side_o(Side side, std::string& why) {
    auto& memo = side == Side::A ? side_a_ : side_b_;
    return memo.get([&] { return oracle_side_critical_family(g, *bp_, side, opt.limits); }, why);
  }

  /// Core and corona of a bipartite graph by deleting each vertex in turn.
  const std::pair<VertexSet, VertexSet>* by_deletion(std::string& why) {
    if (n() > opt.deletion_bound) {
      why = str("order ", n(), " exceeds the deletion bound ", opt.deletion_bound);
      return nullptr;
    }
    if (!deletion_) {
      deletion_.emplace(core_by_deletion(g, konig_alpha), corona(g, AlphaFn(konig_alpha)));
    }
    return &*deletion_;
  }

  /// Matching number: Hopcroft-Karp when bipartite, the oracle otherwise.
  std::optional<std::size_t> mu(std::string& why) {
    if (bipartite()) return matching().size();
    if (const auto* v = mu_o(why)) return *v;
    return std::nullopt;
  }

  /// d_c from the oracle when possible; the deficiency formula otherwise.
  std::optional<std::size_t> dc(std::string& why) {
    if (const auto* f = cf_o(why)) return f->dc;
    if (const auto* f = cif_o(why)) return f->idc;
    if (bipartite()) return sum().bundle.dc;
    return std::nullopt;
  }

  std::optional<bool> konig_egervary(std::string& why) {
    if (bipartite()) return true;
    const auto* a = alpha_o(why);
    const auto* m = a ? mu_o(why) : nullptr;
    if (!a || !m) return std::nullopt;
    ke_detail_ = str("alpha + mu = ", *a + *m, (*a + *m == n() ? " = " : " != "), n(), " = |V|");
    return *a + *m == n();
  }
  const std::string& ke_detail() const { return ke_detail_; }

  const Reference* reference(std::string& why) {
    if (ref_done_) {
      if (!ref_) why = ref_reason_;
      return ref_ ? &*ref_ : nullptr;
    }
    ref_done_ = true;
    std::string reason;
    const auto* a = alpha_o(reason);
    const auto* om = a ? omega_o(reason) : nullptr;
    const auto* ci = om ? cif_o(reason) : nullptr;
    if (ci) {
      Reference r;
      r.alpha = *a;
      r.ker = ci->family.intersection();
      r.diadem = ci->family.union_all();
      r.core = om->intersection();
      r.corona = om->union_all();
      r.ker_source = "oracle";
      r.core_source = "oracle";
      ref_ = std::move(r);
    } else if (bipartite()) {
      const auto& s = sum();
      Reference r;
      r.alpha = s.bundle.alpha;
      r.ker = s.ker;
      r.diadem = s.diadem;
      r.ker_source = "alternating paths";
      std::string ignored;
      if (const auto* d = by_deletion(ignored)) {
        r.core = d->first;
        r.corona = d->second;
        r.core_source = "vertex deletion";
      } else {
        r.core = s.core;
        r.corona = s.corona;
        r.core_source = "alternating paths";
      }
      ref_ = std::move(r);
    } else {
      ref_reason_ = reason;
      why = reason;
      return nullptr;
    }
    return &*ref_;
  }

 private:
  std::optional<Bipartition> bp_;
  std::optional<CriticalSummary> sum_;
  std::optional<Matching> m_;
  Memo<std::size_t> alpha_;
  Memo<std::size_t> mu_;
  Memo<SetFamily> omega_;
  Memo<CriticalIndependentFamily> cif_;
  Memo<CriticalFamily> cf_;
  Memo<SideCriticalFamily> side_a_;
  Memo<SideCriticalFamily> side_b_;
  std::optional<std::pair<VertexSet, VertexSet>> deletion_;
  bool ref_done_ = false;
  std::optional<Reference> ref_;
  std::string ref_reason_;
  std::string ke_detail_;
};

/// Side-critical sets to test: the whole oracle family when it fits, else
/// the two extremes from the matching.
struct SideSets {
  std::vector<VertexSet> sets;
  std::string source;
};

SideSets side_sets(Context& c, Side side) {
  std::string why;
  SideSets out;
  if (const auto* f = c.side_o(side, why)) {
    const auto idx = pick(f->family.size(), c.opt.max_pairs);
    for (auto i : idx) out.sets.push_back(f->family.member(i));
    out.source = coverage(idx.size(), f->family.size(), side == Side::A ? "A-critical sets" : "B-critical sets");
  } else {
    const auto& s = c.sum();
    out.sets = side == Side::A ? std::vector<VertexSet>{s.ker_a, s.diadem_a}
                               : std::vector<VertexSet>{s.ker_b, s.diadem_b};
    out.source = str("minimal and maximal ", side_name(side), "-critical sets only (", why, ")");
  }
  return out;
}

/// Critical independent sets to test, with the same fallback.
SideSets critical_independent_sets(Context& c, std::string& why) {
  SideSets out;
  if (const auto* f = c.cif_o(why)) {
    const auto idx = pick(f->family.size(), c.opt.max_pairs);
    for (auto i : idx) out.sets.push_back(f->family.member(i));
    out.source = coverage(idx.size(), f->family.size(), "critical independent sets");
  } else if (c.bipartite()) {
    // ker, and the two maximal ones built from the sides
    const auto& s = c.sum();
    out.sets = {s.ker, s.ker_a | s.diadem_b, s.diadem_a | s.ker_b};
    out.source = str("ker, ker_A | diadem_B and diadem_A | ker_B only (", why, ")");
  }
  return out;
}

/// Maximum independent sets to test: oracle family, else the Koenig set.
SideSets maximum_independent_sets(Context& c, std::string& why) {
  SideSets out;
  if (const auto* f = c.omega_o(why)) {
    const auto idx = pick(f->size(), c.opt.max_pairs);
    for (auto i : idx) out.sets.push_back(f->member(i));
    out.source = coverage(idx.size(), f->size(), "maximum independent sets");
  } else if (c.bipartite()) {
    out.sets = {max_independent_set(c.g, c.bp())};
    out.source = str("the Koenig independent set only (", why, ")");
  }
  return out;
}

std::string eq_or_ne(bool eq) { return eq ? " = " : " != "; }

// ---- bipartite ------------------------------------------------------------

Outcome side_deficiency(Context& c) {
  std::string why;
  const auto* fa = c.side_o(Side::A, why);
  const auto* fb = fa ? c.side_o(Side::B, why) : nullptr;
  if (!fb) return skip(why);
  const auto& b = c.sum().bundle;
  const std::size_t mu = c.matching().size();
  if (fa->delta0 != *b.delta0_a || fb->delta0 != *b.delta0_b) {
    return fail(str("subset maximum gives delta0(A)=", fa->delta0, ", delta0(B)=", fb->delta0,
                    "; |S| - mu gives ", *b.delta0_a, ", ", *b.delta0_b, " with mu=", mu));
  }
  return pass(str("mu=", mu, " = |A| - ", fa->delta0, " = |B| - ", fb->delta0));
}

Outcome side_extremes(Context& c) {
  std::string why;
  std::string detail;
  for (Side side : {Side::A, Side::B}) {
    const auto* f = c.side_o(side, why);
    if (!f) return skip(why);
    const auto& s = c.sum();
    const VertexSet& k = side == Side::A ? s.ker_a : s.ker_b;
    const VertexSet& d = side == Side::A ? s.diadem_a : s.diadem_b;
    const auto mins = f->family.minimal_members();
    const auto maxs = f->family.maximal_members();
    const char* nm = side_name(side);
    if (mins.empty()) return fail("no minimal critical set");
  if (mins.size() != 1) return fail(str(mins.size(), " minimal ", nm, "-critical sets"));
    if (maxs.size() != 1) return fail(str(maxs.size(), " maximal ", nm, "-critical sets"));
    if (mins[0] != k) return fail(str("ker_", nm, " ", c.fmt(k), " but minimal ", nm, "-critical set ", c.fmt(mins[0])));
    if (maxs[0] != d) return fail(str("diadem_", nm, " ", c.fmt(d), " but maximal ", nm, "-critical set ", c.fmt(maxs[0])));
    if (!detail.empty()) detail += "; ";
    detail += str("ker_", nm, "=", c.fmt(k), " diadem_", nm, "=", c.fmt(d), " over ", f->family.size(), " sets");
  }
  return pass(detail);
}

Outcome dc_deficiency_sum(Context& c) {
  const auto& b = c.sum().bundle;
  const std::size_t formula = *b.delta0_a + *b.delta0_b;
  std::string why;
  if (const auto* f = c.cf_o(why)) {
    if (f->dc != formula) return fail(str("d_c=", f->dc, " over all subsets != ", formula, " = delta0(A) + delta0(B)"));
    return pass(str("d_c=", f->dc, " over all subsets = ", *b.delta0_a, " + ", *b.delta0_b));
  }
  if (const auto* f = c.cif_o(why)) {
    if (f->idc != formula) return fail(str("id_c=", f->idc, " != ", formula, " = delta0(A) + delta0(B)"));
    return pass(str("d_c=", f->idc, " over independent sets = ", *b.delta0_a, " + ", *b.delta0_b));
  }
  const auto dk = difference(c.g, c.sum().ker);
  const auto dd = difference(c.g, c.sum().diadem);
  if (dk != static_cast<std::int64_t>(formula) || dd != static_cast<std::int64_t>(formula)) {
    return fail(str("d(ker)=", dk, ", d(diadem)=", dd, ", delta0(A) + delta0(B)=", formula));
  }
  return pass(str("d(ker) = d(diadem) = ", formula, " = delta0(A) + delta0(B) (", why, ")"));
}

Outcome alpha_deficiency(Context& c) {
  const auto& b = c.sum().bundle;
  const std::size_t na = c.bp().side(Side::A).size();
  const std::size_t nb = c.bp().side(Side::B).size();
  std::string why;
  std::size_t alpha = 0;
  std::string source;
  if (const auto* a = c.alpha_o(why)) {
    alpha = *a;
    source = "oracle";
  } else {
    const VertexSet s = max_independent_set(c.g, c.bp());
    if (!is_independent(c.g, s)) return fail(str("Koenig set ", c.fmt(s), " is not independent"));
    alpha = s.size();
    source = "Koenig set";
  }
  const std::size_t v1 = na + *b.delta0_b;
  const std::size_t v2 = nb + *b.delta0_a;
  const std::size_t v3 = b.mu + b.dc;
  if (alpha != v1 || alpha != v2 || alpha != v3) {
    return fail(str("alpha=", alpha, " (", source, "), |A|+delta0(B)=", v1, ", |B|+delta0(A)=", v2,
                    ", mu+d_c=", v3));
  }
  return pass(str("alpha=", alpha, " (", source, ") = ", na, "+", *b.delta0_b, " = ", nb, "+",
                  *b.delta0_a, " = ", b.mu, "+", b.dc));
}

Outcome side_critical_union(Context& c) {
  const auto xs = side_sets(c, Side::A);
  const auto ys = side_sets(c, Side::B);
  const auto dc = static_cast<std::int64_t>(c.sum().bundle.dc);
  const auto idx = pick(xs.sets.size() * ys.sets.size(), c.opt.max_pairs);
  for (auto k : idx) {
    const auto& x = xs.sets[k / ys.sets.size()];
    const auto& y = ys.sets[k % ys.sets.size()];
    const auto d = difference(c.g, x | y);
    if (d != dc) return fail(str("X=", c.fmt(x), " Y=", c.fmt(y), ": d(X|Y)=", d, " != d_c=", dc));
  }
  return pass(str(coverage(idx.size(), xs.sets.size() * ys.sets.size(), "pairs"), "; ", xs.source, "; ", ys.source));
}

Outcome critical_independent_split(Context& c) {
  std::string why;
  const auto zs = critical_independent_sets(c, why);
  const auto& b = c.sum().bundle;
  for (const auto& z : zs.sets) {
    const auto za = z & c.bp().side(Side::A);
    const auto zb = z & c.bp().side(Side::B);
    const auto da = difference(c.g, za);
    const auto db = difference(c.g, zb);
    if (da != static_cast<std::int64_t>(*b.delta0_a)) {
      return fail(str("Z=", c.fmt(z), ": d(Z&A)=", da, " != delta0(A)=", *b.delta0_a));
    }
    if (db != static_cast<std::int64_t>(*b.delta0_b)) {
      return fail(str("Z=", c.fmt(z), ": d(Z&B)=", db, " != delta0(B)=", *b.delta0_b));
    }
  }
  return pass(zs.source);
}

Outcome side_critical_matching(Context& c) {
  std::string detail;
  for (Side side : {Side::A, Side::B}) {
    const auto xs = side_sets(c, side);
    for (const auto& x : xs.sets) {
      const auto r = saturating_matching(c.g, neighborhood(c.g, x), x);
      if (const auto* h = std::get_if<HallViolator>(&r)) {
        return fail(str("X=", c.fmt(x), ": no matching from N(X) into X, violator ", c.fmt(h->violator)));
      }
    }
    if (!detail.empty()) detail += "; ";
    detail += xs.source;
  }
  return pass(detail);
}

Outcome perfect_matching_criterion(Context& c) {
  const bool perfect = 2 * c.matching().size() == c.n();
  std::string why;
  std::size_t da = *c.sum().bundle.delta0_a;
  std::size_t db = *c.sum().bundle.delta0_b;
  std::string source = "from the matching";
  const auto* fa = c.side_o(Side::A, why);
  const auto* fb = fa ? c.side_o(Side::B, why) : nullptr;
  if (fb) {
    da = fa->delta0;
    db = fb->delta0;
    source = "over all side subsets";
  }
  const bool zero = da == 0 && db == 0;
  const std::string d = str(perfect ? "perfect matching" : "no perfect matching", ", delta0(A)=", da,
                            ", delta0(B)=", db, " (", source, ")");
  return perfect == zero ? pass(d) : fail(d);
}

Outcome cross_side_equality(Context& c) {
  const auto xs = side_sets(c, Side::A);
  const auto ys = side_sets(c, Side::B);
  const auto idx = pick(xs.sets.size() * ys.sets.size(), c.opt.max_pairs);
  for (auto k : idx) {
    const auto& x = xs.sets[k / ys.sets.size()];
    const auto& y = ys.sets[k % ys.sets.size()];
    const VertexSet lhs = x & neighborhood(c.g, y);
    const VertexSet rhs = neighborhood(c.g, x) & y;
    if (lhs.size() != rhs.size()) {
      return fail(str("X=", c.fmt(x), " Y=", c.fmt(y), ": |X&N(Y)|=", lhs.size(), " != |N(X)&Y|=", rhs.size()));
    }
    const auto r = saturating_matching(c.g, rhs, lhs);
    if (const auto* h = std::get_if<HallViolator>(&r)) {
      return fail(str("X=", c.fmt(x), " Y=", c.fmt(y), ": no perfect matching between ", c.fmt(lhs), " and ",
                      c.fmt(rhs), ", violator ", c.fmt(h->violator)));
    }
  }
  return pass(str(coverage(idx.size(), xs.sets.size() * ys.sets.size(), "pairs"), "; ", xs.source, "; ", ys.source));
}

Outcome cross_side_disjoint(Context& c) {
  const auto& s = c.sum();
  auto clash = [&](const VertexSet& x, const VertexSet& y) -> std::optional<std::string> {
    const VertexSet p = x & neighborhood(c.g, y);
    const VertexSet q = neighborhood(c.g, x) & y;
    if (p.empty() && q.empty()) return std::nullopt;
    return str("X=", c.fmt(x), " Y=", c.fmt(y), ": X&N(Y)=", c.fmt(p), ", N(X)&Y=", c.fmt(q));
  };
  if (auto e = clash(s.ker_a, s.ker_b)) return fail(*e);
  const auto xs = side_sets(c, Side::A);
  const auto ys = side_sets(c, Side::B);
  for (const auto& y : ys.sets) {
    if (auto e = clash(s.ker_a, y)) return fail(*e);
  }
  for (const auto& x : xs.sets) {
    if (auto e = clash(x, s.ker_b)) return fail(*e);
  }
  return pass(str("ker_A=", c.fmt(s.ker_a), " ker_B=", c.fmt(s.ker_b), "; ", xs.source, "; ", ys.source));
}

Outcome ker_certificate_check(Context& c) {
  const auto& s = c.sum();
  KerCertificate cert;
  try {
    cert = ker_certificate(c.g, s.ker, c.opt.limits);
  } catch (const NotCriticalIndependentError& e) {
    return fail(str("ker ", c.fmt(s.ker), ": ", e.what()));
  }
  if (!cert.is_ker) {
    return fail(str("ker ", c.fmt(s.ker), " rejected at ", c.fmt(VertexSet::from_ids(c.n(), {*cert.removable})),
                    ", witness ", c.fmt(*cert.witness)));
  }
  // The certificate must also reject every other critical independent set.
  std::string why;
  const auto zs = critical_independent_sets(c, why);
  std::size_t rejected = 0;
  for (const auto& z : zs.sets) {
    if (z == s.ker) continue;
    KerCertificate other;
    try {
      other = ker_certificate(c.g, z, c.opt.limits);
    } catch (const NotCriticalIndependentError& e) {
      return fail(str(c.fmt(z), ": ", e.what()));
    }
    if (other.is_ker) return fail(str("certificate accepts ", c.fmt(z), " which is not ker"));
    const VertexSet& y = *other.witness;
    VertexSet rest = z;
    rest.erase(*other.removable);
    const VertexSet nz = neighborhood(c.g, z);
    if (y.empty() || !y.is_subset_of(nz) || (neighborhood(c.g, y) & rest).size() >= y.size()) {
      return fail(str("bad witness ", c.fmt(y), " for ", c.fmt(z)));
    }
    ++rejected;
  }
  return pass(str("accepts ker ", c.fmt(s.ker), ", rejects ", rejected, " other sets; ", zs.source));
}

Outcome ker_equals_core(Context& c) {
  const VertexSet& k = c.sum().ker;
  std::string why_del;
  std::string why_or;
  const auto* del = c.by_deletion(why_del);
  const auto* om = c.omega_o(why_or);
  if (!del && !om) return skip(str(why_del, "; ", why_or));
  std::string detail = str("ker=", c.fmt(k));
  if (del) {
    if (del->first != k) return fail(str("ker ", c.fmt(k), " != core ", c.fmt(del->first), " by vertex deletion"));
    detail += " = core by vertex deletion";
  }
  if (om) {
    const VertexSet core = om->intersection();
    if (core != k) return fail(str("ker ", c.fmt(k), " != core ", c.fmt(core), " by the oracle"));
    detail += " = core by the oracle";
  }
  return pass(detail);
}

Outcome ker_side_union(Context& c) {
  const auto& s = c.sum();
  const VertexSet u = s.ker_a | s.ker_b;
  std::string why;
  if (const auto* f = c.cif_o(why)) {
    const VertexSet k = f->family.intersection();
    if (k != u) return fail(str("ker_A | ker_B = ", c.fmt(u), " != ker ", c.fmt(k), " by the oracle"));
    return pass(str(c.fmt(u), " = ker by the oracle"));
  }
  const auto cert = ker_certificate(c.g, u, c.opt.limits);
  if (!cert.is_ker) return fail(str("ker_A | ker_B = ", c.fmt(u), " fails the ker certificate"));
  return pass(str(c.fmt(u), " passes the ker certificate (", why, ")"));
}

Outcome ker_diadem_sum(Context& c) {
  std::string why;
  const auto* r = c.reference(why);
  if (!r) return skip(why);
  const std::size_t lhs = r->ker.size() + r->diadem.size();
  const std::string d = str("|ker|+|diadem| = ", r->ker.size(), "+", r->diadem.size(), eq_or_ne(lhs == 2 * r->alpha),
                            2 * r->alpha, " = 2 alpha (", r->ker_source, ")");
  return lhs == 2 * r->alpha ? pass(d) : fail(d);
}

Outcome ker_diadem_cross_sum(Context& c) {
  std::string why;
  const auto* r = c.reference(why);
  if (!r) return skip(why);
  const auto& s = c.sum();
  const std::size_t x = s.ker_a.size() + s.diadem_b.size();
  const std::size_t y = s.ker_b.size() + s.diadem_a.size();
  const std::string d = str("|ker_A|+|diadem_B| = ", x, ", |ker_B|+|diadem_A| = ", y, ", alpha = ", r->alpha);
  return x == r->alpha && y == r->alpha ? pass(d) : fail(d);
}

Outcome diadem_side_union(Context& c) {
  const auto& s = c.sum();
  const VertexSet u = s.diadem_a | s.diadem_b;
  std::string why;
  if (const auto* f = c.cif_o(why)) {
    const VertexSet d = f->family.union_all();
    if (d != u) return fail(str("diadem_A | diadem_B = ", c.fmt(u), " != diadem ", c.fmt(d), " by the oracle"));
    return pass(str(c.fmt(u), " = diadem by the oracle"));
  }
  // Without the oracle: u is the union of two critical independent sets.
  for (const VertexSet& part : {s.ker_a | s.diadem_b, s.diadem_a | s.ker_b}) {
    if (!is_independent(c.g, part)) return fail(str(c.fmt(part), " is not independent"));
    const auto d = difference(c.g, part);
    if (d != static_cast<std::int64_t>(s.bundle.dc)) {
      return fail(str("d(", c.fmt(part), ") = ", d, " != d_c = ", s.bundle.dc));
    }
  }
  std::string why_del;
  if (const auto* del = c.by_deletion(why_del)) {
    if (del->second != u) return fail(str("diadem_A | diadem_B = ", c.fmt(u), " != corona ", c.fmt(del->second)));
    return pass(str("union of two critical independent sets, equal to the corona by vertex deletion (", why, ")"));
  }
  return pass(str("union of two critical independent sets (", why, "; ", why_del, ")"));
}

Outcome mis_matching(Context& c) {
  std::string why;
  const auto ss = maximum_independent_sets(c, why);
  const Matching& m = c.matching();
  for (const auto& s : ss.sets) {
    for (VertexId v = 0; v < c.n(); ++v) {
      if (s.contains(v)) continue;
      const auto mate = m.mate(v);
      if (!mate || !s.contains(*mate)) {
        return fail(str("S=", c.fmt(s), ": vertex ", c.fmt(VertexSet::from_ids(c.n(), {v})),
                        " outside S is not matched into S"));
      }
    }
  }
  const auto* r = c.reference(why);
  if (!r) return skip(why);
  const VertexSet nc = neighborhood(c.g, r->core);
  bool ok = true;
  nc.for_each([&](VertexId v) {
    const auto mate = m.mate(v);
    if (!mate || !r->core.contains(*mate)) ok = false;
  });
  if (!ok) return fail(str("N(core)=", c.fmt(nc), " is not matched into core ", c.fmt(r->core)));
  return pass(str(ss.source, "; N(core) matched into core ", c.fmt(r->core)));
}

// ---- Koenig-Egervary ------------------------------------------------------

Outcome mis_critical(Context& c) {
  std::string why;
  const auto* r = c.reference(why);
  if (!r) return skip(why);
  const auto dc = c.dc(why);
  const auto mu = c.mu(why);
  if (!dc || !mu) return skip(why);
  const auto ss = maximum_independent_sets(c, why);
  if (ss.sets.empty()) return skip(why);
  for (const auto& s : ss.sets) {
    const auto d = difference(c.g, s);
    if (d != static_cast<std::int64_t>(*dc)) return fail(str("S=", c.fmt(s), ": d(S)=", d, " != d_c=", *dc));
  }
  const auto am = static_cast<std::int64_t>(r->alpha) - static_cast<std::int64_t>(*mu);
  const auto cn = difference(c.g, r->core);
  const std::string d = str("d_c=", *dc, ", alpha-mu=", am, ", |core|-|N(core)|=", cn, "; ", ss.source);
  if (am != static_cast<std::int64_t>(*dc) || cn != static_cast<std::int64_t>(*dc)) return fail(d);
  return pass(d);
}

Outcome core_corona_sum(Context& c) {
  std::string why;
  const auto* r = c.reference(why);
  if (!r) return skip(why);
  const std::size_t lhs = r->corona.size() + r->core.size();
  const std::string d = str("|corona|+|core| = ", r->corona.size(), "+", r->core.size(), " = ", lhs,
                            eq_or_ne(lhs == 2 * r->alpha), "2 alpha = ", 2 * r->alpha, " (", r->core_source, ")");
  return lhs == 2 * r->alpha ? pass(d) : fail(d);
}

Outcome diadem_equals_corona(Context& c) {
  std::string why;
  const auto* r = c.reference(why);
  if (!r) return skip(why);
  if (r->diadem != r->corona) {
    return fail(str("diadem ", c.fmt(r->diadem), " != corona ", c.fmt(r->corona), " (", r->core_source, ")"));
  }
  return pass(str("diadem = corona = ", c.fmt(r->corona), " (", r->ker_source, " vs ", r->core_source, ")"));
}

Outcome ker_diadem_bound_ke(Context& c) {
  std::string why;
  const auto* r = c.reference(why);
  if (!r) return skip(why);
  const std::size_t lhs = r->ker.size() + r->diadem.size();
  const std::string d = str("|ker|+|diadem| = ", lhs, (lhs <= 2 * r->alpha ? " <= " : " > "), 2 * r->alpha, " = 2 alpha");
  return lhs <= 2 * r->alpha ? pass(d) : fail(d);
}

Outcome core_neighborhood(Context& c) {
  std::string why;
  const auto* r = c.reference(why);
  if (!r) return skip(why);
  const VertexSet nc = neighborhood(c.g, r->core);
  const VertexSet rest = r->corona.complement();
  if (nc != rest) return fail(str("N(core) = ", c.fmt(nc), " != V - corona = ", c.fmt(rest), " (", r->core_source, ")"));
  return pass(str("N(core) = V - corona = ", c.fmt(nc), " (", r->core_source, ")"));
}

// ---- any graph ------------------------------------------------------------

Outcome dc_equals_idc(Context& c) {
  std::string why;
  const auto* cf = c.cf_o(why);
  const auto* ci = cf ? c.cif_o(why) : nullptr;
  if (ci) {
    const std::string d = str("d_c=", cf->dc, eq_or_ne(cf->dc == ci->idc), "id_c=", ci->idc);
    return cf->dc == ci->idc ? pass(d) : fail(d);
  }
  if (c.bipartite()) {
    const auto& s = c.sum();
    const auto dk = difference(c.g, s.ker);
    const std::string d = str("d(ker)=", dk, " for independent ker, d_c=", s.bundle.dc, " (", why, ")");
    return is_independent(c.g, s.ker) && dk == static_cast<std::int64_t>(s.bundle.dc) ? pass(d) : fail(d);
  }
  return skip(why);
}

Outcome critical_independent_matching(Context& c) {
  std::string why;
  const auto zs = critical_independent_sets(c, why);
  if (zs.sets.empty()) return skip(why);
  for (const auto& z : zs.sets) {
    const auto r = saturating_matching(c.g, neighborhood(c.g, z), z);
    if (const auto* h = std::get_if<HallViolator>(&r)) {
      return fail(str("S=", c.fmt(z), ": no matching from N(S) into S, violator ", c.fmt(h->violator)));
    }
  }
  return pass(zs.source);
}

Outcome critical_independent_in_mis(Context& c) {
  std::string why;
  const auto* ci = c.cif_o(why);
  const auto* om = ci ? c.omega_o(why) : nullptr;
  if (!om) return skip(why);
  const auto idx = pick(ci->family.size(), c.opt.max_pairs);
  for (auto i : idx) {
    const std::uint64_t z = ci->family.masks()[i];
    const bool inside = std::any_of(om->masks().begin(), om->masks().end(),
                                    [&](std::uint64_t s) { return (z & ~s) == 0; });
    if (!inside) return fail(str(c.fmt(ci->family.member(i)), " lies in no maximum independent set"));
  }
  return pass(str(coverage(idx.size(), ci->family.size(), "critical independent sets"), " against ",
                  om->size(), " maximum independent sets"));
}

Outcome supermodularity(Context& c) {
  const std::size_t n = c.n();
  auto witness = [&](const VertexSet& x, const VertexSet& y) {
    return str("X=", c.fmt(x), " Y=", c.fmt(y), ": d(X|Y)+d(X&Y)=",
               difference(c.g, x | y) + difference(c.g, x & y), " < ", difference(c.g, x) + difference(c.g, y),
               " = d(X)+d(Y)");
  };
  if (n <= 64) {
    std::vector<std::uint64_t> nb(n, 0);
    for (VertexId v = 0; v < n; ++v) {
      for (VertexId u : c.g.neighbors(v)) nb[v] |= std::uint64_t{1} << u;
    }
    auto d_of = [&](std::uint64_t x) {
      std::uint64_t nx = 0;
      for (std::uint64_t r = x; r; r &= r - 1) nx |= nb[static_cast<std::size_t>(std::countr_zero(r))];
      return static_cast<int>(std::popcount(x)) - static_cast<int>(std::popcount(nx));
    };
    if (n <= c.opt.exhaustive_supermodular_order) {
      const std::size_t total = std::size_t{1} << n;
      std::vector<int> d(total);
      for (std::size_t x = 0; x < total; ++x) d[x] = d_of(x);
      for (std::size_t x = 0; x < total; ++x) {
        for (std::size_t y = x + 1; y < total; ++y) {
          if (d[x | y] + d[x & y] < d[x] + d[y]) {
            return fail(witness(from_mask(n, x), from_mask(n, y)));
          }
        }
      }
      return pass(str("all ", total * (total - 1) / 2, " subset pairs"));
    }
    auto engine = instance_engine(c.opt.sample_seed, 0);
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    for (std::size_t i = 0; i < c.opt.max_pairs; ++i) {
      const std::uint64_t x = engine() & full;
      const std::uint64_t y = engine() & full;
      if (d_of(x | y) + d_of(x & y) < d_of(x) + d_of(y)) return fail(witness(from_mask(n, x), from_mask(n, y)));
    }
    return pass(str(c.opt.max_pairs, " sampled subset pairs (seed ", c.opt.sample_seed, ")"));
  }
  auto engine = instance_engine(c.opt.sample_seed, 0);
  const std::size_t pairs = std::min<std::size_t>(c.opt.max_pairs, 32);
  for (std::size_t i = 0; i < pairs; ++i) {
    VertexSet x(n);
    VertexSet y(n);
    for (VertexId v = 0; v < n; ++v) {
      const auto bits = engine();
      if (bits & 1) x.insert(v);
      if (bits & 2) y.insert(v);
    }
    const auto lhs = difference(c.g, x | y) + difference(c.g, x & y);
    const auto rhs = difference(c.g, x) + difference(c.g, y);
    if (lhs < rhs) return fail(witness(x, y));
  }
  return pass(str(pairs, " sampled subset pairs (seed ", c.opt.sample_seed, ")"));
}

Outcome critical_family_closure(Context& c) {
  std::string why;
  const auto* f = c.cf_o(why);
  if (!f) return skip(why);
  const auto& masks = f->family.masks();
  const std::size_t k = masks.size();
  const auto idx = pick(k * k, c.opt.max_pairs);
  auto in = [&](std::uint64_t m) { return std::binary_search(masks.begin(), masks.end(), m); };
  for (auto p : idx) {
    const std::uint64_t x = masks[p / k];
    const std::uint64_t y = masks[p % k];
    if (!in(x | y) || !in(x & y)) {
      return fail(str("X=", c.fmt(from_mask(c.n(), x)), " Y=", c.fmt(from_mask(c.n(), y)),
                      ": ", in(x | y) ? "X&Y" : "X|Y", " is not critical"));
    }
  }
  return pass(str(coverage(idx.size(), k * k, "ordered pairs of critical sets")));
}

Outcome ker_unique_minimal(Context& c) {
  std::string why;
  const auto* f = c.cf_o(why);
  const auto* r = f ? c.reference(why) : nullptr;
  if (!r) return skip(why);
  const auto mins = f->family.minimal_members();
  if (mins.empty()) return fail("no minimal critical set");
  if (mins.size() != 1) return fail(str(mins.size(), " minimal critical sets, e.g. ", c.fmt(mins[0]), " and ", c.fmt(mins[1])));
  if (mins[0] != r->ker) return fail(str("minimal critical set ", c.fmt(mins[0]), " != ker ", c.fmt(r->ker)));
  return pass(str("unique minimal critical set ", c.fmt(mins[0]), " = ker among ", f->family.size(), " critical sets"));
}

Outcome ker_within_core(Context& c) {
  std::string why;
  const auto* r = c.reference(why);
  if (!r) return skip(why);
  if (!r->ker.is_subset_of(r->core)) {
    return fail(str("ker - core = ", c.fmt(r->ker - r->core), " (ker ", c.fmt(r->ker), ", core ", c.fmt(r->core), ")"));
  }
  return pass(str("ker ", c.fmt(r->ker), (r->ker == r->core ? " = " : " strictly inside "), "core ", c.fmt(r->core)));
}

Outcome diadem_within_corona(Context& c) {
  std::string why;
  const auto* r = c.reference(why);
  if (!r) return skip(why);
  if (!r->diadem.is_subset_of(r->corona)) {
    return fail(str("diadem - corona = ", c.fmt(r->diadem - r->corona)));
  }
  return pass(str("diadem ", c.fmt(r->diadem), (r->diadem == r->corona ? " = " : " strictly inside "), "corona ",
                  c.fmt(r->corona)));
}

Outcome ker_diadem_slack(Context& c) {
  std::string why;
  const auto* r = c.reference(why);
  if (!r) return skip(why);
  const auto slack = 2 * static_cast<std::int64_t>(r->alpha) - static_cast<std::int64_t>(r->ker.size() + r->diadem.size());
  const std::string d = str("slack 2 alpha - |ker| - |diadem| = ", slack);
  return slack >= 0 ? pass(d) : fail(d);
}

Outcome core_corona_lower(Context& c) {
  std::string why;
  const auto* r = c.reference(why);
  if (!r) return skip(why);
  const std::size_t rhs = r->core.size() + r->corona.size();
  const std::string d = str("2 alpha = ", 2 * r->alpha, (2 * r->alpha <= rhs ? " <= " : " > "), rhs, " = |core|+|corona|");
  return 2 * r->alpha <= rhs ? pass(d) : fail(d);
}

struct CheckRow {
  CheckInfo info;
  Outcome (*run)(Context&);
};

constexpr CheckRow kRows[] = {
    {{"side-deficiency", "mu = |A| - delta0(A) = |B| - delta0(B)", CheckScope::kBipartite}, side_deficiency},
    {{"side-critical-extremes", "ker_S and diadem_S are the unique minimal and maximal S-critical sets",
      CheckScope::kBipartite}, side_extremes},
    {{"dc-deficiency-sum", "d_c = delta0(A) + delta0(B)", CheckScope::kBipartite}, dc_deficiency_sum},
    {{"alpha-deficiency", "alpha = |A| + delta0(B) = |B| + delta0(A) = mu + d_c", CheckScope::kBipartite},
     alpha_deficiency},
    {{"side-critical-union", "X A-critical, Y B-critical => X | Y is critical", CheckScope::kBipartite},
     side_critical_union},
    {{"critical-independent-split", "Z critical independent => Z & A is A-critical, Z & B is B-critical",
      CheckScope::kBipartite}, critical_independent_split},
    {{"side-critical-matching", "X side-critical => a matching from N(X) into X", CheckScope::kBipartite},
     side_critical_matching},
    {{"perfect-matching-criterion", "perfect matching <=> delta0(A) = delta0(B) = 0", CheckScope::kBipartite},
     perfect_matching_criterion},
    {{"cross-side-equality", "|X & N(Y)| = |N(X) & Y| with a perfect matching between them",
      CheckScope::kBipartite}, cross_side_equality},
    {{"cross-side-disjoint", "ker_A & N(Y) = N(ker_A) & Y = {} for Y B-critical (and symmetric)",
      CheckScope::kBipartite}, cross_side_disjoint},
    {{"ker-certificate", "X = ker <=> for each v in X a matching from N(X) into X - v", CheckScope::kBipartite},
     ker_certificate_check},
    {{"ker-equals-core", "ker = core", CheckScope::kBipartite}, ker_equals_core},
    {{"ker-side-union", "ker_A | ker_B = ker", CheckScope::kBipartite}, ker_side_union},
    {{"ker-diadem-sum", "|ker| + |diadem| = 2 alpha", CheckScope::kBipartite}, ker_diadem_sum},
    {{"ker-diadem-cross-sum", "|ker_A| + |diadem_B| = |ker_B| + |diadem_A| = alpha", CheckScope::kBipartite},
     ker_diadem_cross_sum},
    {{"diadem-side-union", "diadem_A | diadem_B = diadem", CheckScope::kBipartite}, diadem_side_union},
    {{"mis-matching", "a maximum matching matches V - S into S and N(core) into core", CheckScope::kBipartite},
     mis_matching},
    {{"mis-critical", "S maximum independent => S critical; d_c = alpha - mu = |core| - |N(core)|",
      CheckScope::kKonigEgervary}, mis_critical},
    {{"core-corona-sum", "|corona| + |core| = 2 alpha", CheckScope::kKonigEgervary}, core_corona_sum},
    {{"diadem-equals-corona", "diadem = corona", CheckScope::kKonigEgervary}, diadem_equals_corona},
    {{"ker-diadem-bound", "|ker| + |diadem| <= 2 alpha", CheckScope::kKonigEgervary}, ker_diadem_bound_ke},
    {{"core-neighborhood", "N(core) = V - corona", CheckScope::kKonigEgervary}, core_neighborhood},
    {{"dc-equals-idc", "d_c = id_c", CheckScope::kAnyGraph}, dc_equals_idc},
    {{"critical-independent-matching", "S critical independent => a matching from N(S) into S",
      CheckScope::kAnyGraph}, critical_independent_matching},
    {{"critical-independent-in-mis", "every critical independent set lies in a maximum independent set",
      CheckScope::kAnyGraph}, critical_independent_in_mis},
    {{"supermodularity", "d(X | Y) + d(X & Y) >= d(X) + d(Y)", CheckScope::kAnyGraph}, supermodularity},
    {{"critical-family-closure", "X, Y critical => X | Y and X & Y critical", CheckScope::kAnyGraph},
     critical_family_closure},
    {{"ker-unique-minimal", "ker is the unique minimal critical set", CheckScope::kAnyGraph}, ker_unique_minimal},
    {{"ker-within-core", "ker is contained in core", CheckScope::kAnyGraph}, ker_within_core},
    {{"diadem-within-corona", "diadem is contained in corona", CheckScope::kAnyGraph}, diadem_within_corona},
    {{"ker-diadem-slack", "|ker| + |diadem| <= 2 alpha", CheckScope::kAnyGraph}, ker_diadem_slack},
    {{"core-corona-lower", "2 alpha <= |core| + |corona|", CheckScope::kAnyGraph}, core_corona_lower},
};

const std::vector<CheckInfo>& catalog_storage() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> v;
    for (const auto& row : kRows) v.push_back(row.info);
    return v;
  }();
  return infos;
}

}  // namespace

std::span<const CheckInfo> check_catalog() { return catalog_storage(); }

TheoremReport theorem_battery(const Graph& g, std::string graph_id, const BatteryOptions& options,
                              const std::optional<Bipartition>& declared) {
  for (const auto& id : options.only) {
    const bool known = std::any_of(std::begin(kRows), std::end(kRows),
                                   [&](const CheckRow& r) { return r.info.id == id; });
    if (!known) throw std::invalid_argument("unknown check id: " + id);
  }
  Context c(g, declared, options);
  TheoremReport report;
  report.graph_id = std::move(graph_id);
  for (const auto& row : kRows) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), row.info.id) == options.only.end()) {
      continue;
    }
    CheckResult r;
    r.id = row.info.id;
    r.statement = row.info.statement;
    r.scope = row.info.scope;
    std::string why;
    if (row.info.scope == CheckScope::kBipartite && !c.bipartite()) {
      r.status = CheckStatus::kSkipped;
      r.hypothesis_met = false;
      r.detail = "graph is not bipartite";
    } else {
      std::optional<bool> ke = true;
      if (row.info.scope == CheckScope::kKonigEgervary) ke = c.konig_egervary(why);
      if (!ke) {
        r.status = CheckStatus::kSkipped;
        r.detail = "Koenig-Egervary status unknown: " + why;
      } else {
        r.hypothesis_met = *ke;
        Outcome o;
        try {
          o = row.run(c);
        } catch (const OracleBoundError& e) {
          o = skip(e.what());
        } catch (const GraphError& e) {
          // a set handed to a library routine lacked a property the identity promises
          o = fail(str("raised: ", e.what()));
        }
        r.status = o.status;
        r.detail = std::move(o.detail);
        if (!*ke) r.detail += "; not Koenig-Egervary: " + c.ke_detail();
      }
    }
    if (r.detail.empty()) r.detail = r.status == CheckStatus::kPass ? "holds" : "no detail";
    report.checks.push_back(std::move(r));
  }
  return report;
}

// ---- alternating closure --------------------------------------------------

bool induces_connected(const Graph& g, const VertexSet& s) {
  if (s.empty()) return true;
  const auto ids = s.ids();
  VertexSet seen(g.order());
  std::vector<VertexId> stack{ids.front()};
  seen.insert(ids.front());
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId u : g.neighbors(v)) {
      if (s.contains(u) && !seen.contains(u)) {
        seen.insert(u);
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == s.size();
}

namespace {

void require(bool ok, const char* clause) {
  if (!ok) throw PreconditionError(clause);
}

void require_common(const Graph& g, const Bipartition& bp, const Matching& m, const VertexSet& s,
                    const VertexSet& x) {
  require(bp.side(Side::A).universe() == g.order(), "bipartition does not belong to the graph");
  require(m.order() == g.order() && m.is_valid_for(g), "m is not a matching of the graph");
  require(s.universe() == g.order() && x.universe() == g.order(), "vertex sets do not belong to the graph");
  require(is_independent(g, s), "s is not independent");
  require(s.size() == g.order() - max_matching(g, bp).size(), "s is not a maximum independent set");
  require(is_independent(g, x), "the start set is not independent");
  require(!x.intersects(s), "the start set meets s");
}

}  // namespace

VertexSet lemma_expand(const Graph& g, const Bipartition& bp, const Matching& m, const VertexSet& s,
                       const VertexSet& x) {
  require_common(g, bp, m, s, x);
  require(2 * m.size() == g.order(), "m is not a perfect matching");
  require(induces_connected(g, x | m.mates_of(x)), "G[x | M(x)] is not connected");

  const VertexSet mx = m.mates_of(x);
  const VertexSet x1 = x | m.mates_of((neighborhood(g, x) & s) - mx);
  if (!is_independent(g, x1) || !induces_connected(g, x1 | m.mates_of(x1))) {
    throw std::logic_error("expansion broke independence or connectivity");
  }
  return x1;
}

ClosureResult alternating_closure(const Graph& g, const Bipartition& bp, const Matching& m,
                                  const VertexSet& s, const VertexSet& z0) {
  require_common(g, bp, m, s, z0);
  require(m.size() == max_matching(g, bp).size(), "m is not a maximum matching");
  for (VertexId v = 0; v < g.order(); ++v) {
    if (s.contains(v)) continue;
    const auto mate = m.mate(v);
    require(mate && s.contains(*mate), "m does not match V - s into s");
  }

  VertexSet z = z0;
  for (;;) {
    const VertexSet frontier = (neighborhood(g, z) & s) - m.mates_of(z);
    if (frontier.empty()) break;
    // A free s-vertex next to z: no maximum independent set extends z0 here.
    frontier.for_each([&](VertexId y) {
      if (!m.is_matched(y)) {
        throw PreconditionError("closure reaches a vertex of s left unmatched by m");
      }
    });
    z |= m.mates_of(frontier);
  }
  ClosureResult out;
  out.new_mis = (s - m.mates_of(z)) | z;
  out.closure = std::move(z);
  if (!is_independent(g, out.new_mis)) {
    throw PreconditionError("closure of the start set is not independent of s - M(Z)");
  }
  return out;
}

// ---- slack search ---------------------------------------------------------

void SearchParams::validate() const {
  generator.validate();
  if (workers == 0) throw std::invalid_argument("workers must be at least 1");
  if (generator.kind == GraphKind::kGeneral && generator.n > limits.max_order) {
    throw std::invalid_argument("general graphs of order " + std::to_string(generator.n) +
                                " exceed the oracle bound " + std::to_string(limits.max_order));
  }
}

namespace {

struct Partial {
  std::uint64_t tested = 0;
  std::uint64_t bipartite = 0;
  std::uint64_t zero = 0;
  std::optional<std::int64_t> min_slack;
  std::optional<std::int64_t> max_slack;
  std::vector<Counterexample> counterexamples;
  std::vector<std::uint64_t> sandwich;
  std::uint64_t cross_checked = 0;
  std::vector<std::uint64_t> cross_failures;

  void note_slack(std::int64_t s) {
    min_slack = min_slack ? std::min(*min_slack, s) : s;
    max_slack = max_slack ? std::max(*max_slack, s) : s;
    if (s == 0) ++zero;
  }

  void merge(Partial&& o) {
    tested += o.tested;
    bipartite += o.bipartite;
    zero += o.zero;
    if (o.min_slack) min_slack = min_slack ? std::min(*min_slack, *o.min_slack) : *o.min_slack;
    if (o.max_slack) max_slack = max_slack ? std::max(*max_slack, *o.max_slack) : *o.max_slack;
    for (auto& ce : o.counterexamples) counterexamples.push_back(std::move(ce));
    sandwich.insert(sandwich.end(), o.sandwich.begin(), o.sandwich.end());
    cross_checked += o.cross_checked;
    cross_failures.insert(cross_failures.end(), o.cross_failures.begin(), o.cross_failures.end());
  }
};

void run_instance(std::uint64_t index, const SearchParams& p, Partial& acc) {
  RandomGraph rg = random_graph(p.generator, p.seed, index);
  const Graph& g = rg.graph;
  std::optional<Bipartition> bp;
  if (rg.side_a) {
    bp = Bipartition::from_side_a(g, *rg.side_a);
  } else {
    auto found = find_bipartition(g);
    if (auto* b = std::get_if<Bipartition>(&found)) bp = std::move(*b);
  }

  std::size_t alpha = 0;
  std::size_t ker_size = 0;
  std::size_t diadem_size = 0;
  std::size_t core_size = 0;
  std::size_t corona_size = 0;
  if (bp) {
    ++acc.bipartite;
    const CriticalSummary s = summarize(g, *bp);
    alpha = s.bundle.alpha;
    ker_size = s.ker.size();
    diadem_size = s.diadem.size();
    core_size = s.core.size();
    corona_size = s.corona.size();
    if (g.order() <= p.limits.max_order) {
      ++acc.cross_checked;
      const auto omega = oracle_omega(g, p.limits);
      const auto cif = oracle_critical_independent_family(g, p.limits);
      const bool agree = oracle_alpha(g, p.limits) == alpha && cif.family.intersection() == s.ker &&
                         cif.family.union_all() == s.diadem && omega.intersection() == s.core &&
                         omega.union_all() == s.corona;
      if (!agree) acc.cross_failures.push_back(index);
    }
  } else {
    alpha = oracle_alpha(g, p.limits);
    const auto cif = oracle_critical_independent_family(g, p.limits);
    const auto omega = oracle_omega(g, p.limits);
    ker_size = cif.family.intersection().size();
    diadem_size = cif.family.union_all().size();
    core_size = omega.intersection().size();
    corona_size = omega.union_all().size();
  }
  ++acc.tested;
  const auto slack = 2 * static_cast<std::int64_t>(alpha) - static_cast<std::int64_t>(ker_size + diadem_size);
  acc.note_slack(slack);
  if (slack < 0) acc.counterexamples.push_back({index, slack, std::move(rg)});
  if (core_size + corona_size < 2 * alpha) acc.sandwich.push_back(index);
}

}  // namespace

SearchReport conjecture_search(const SearchParams& params) {
  params.validate();
  const std::size_t workers =
      static_cast<std::size_t>(std::min<std::uint64_t>(params.workers, std::max<std::uint64_t>(params.count, 1)));
  std::vector<Partial> partials(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](std::size_t w) {
    try {
      for (std::uint64_t i = w; i < params.count; i += workers) run_instance(i, params, partials[w]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Partial total;
  for (auto& p : partials) total.merge(std::move(p));
  std::sort(total.counterexamples.begin(), total.counterexamples.end(),
            [](const Counterexample& a, const Counterexample& b) { return a.index < b.index; });
  std::sort(total.sandwich.begin(), total.sandwich.end());
  std::sort(total.cross_failures.begin(), total.cross_failures.end());

  SearchReport r;
  r.params = params;
  r.graphs_tested = total.tested;
  r.bipartite_instances = total.bipartite;
  r.zero_slack_instances = total.zero;
  r.min_slack = total.min_slack;
  r.max_slack = total.max_slack;
  r.counterexamples = std::move(total.counterexamples);
  r.sandwich_violations = std::move(total.sandwich);
  r.cross_checked = total.cross_checked;
  r.cross_check_failures = std::move(total.cross_failures);
  return r;
}

}  // namespace critset
