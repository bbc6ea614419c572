#include "syz/slope.hpp"

#include "syz/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace syz {

namespace {

// Lexicographic compare on raw exponent vectors (equal lengths).
bool lex_less(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Shared final assembly: pick mu_max (smallest size on ties) and the proper
// maximum from a fully populated per_size map.
void finalize(SlopeProfile& p) {
  bool have = false;
  for (const auto& [r, entry] : p.per_size) {
    if (!have || entry.value > p.mu_max) {
      p.mu_max = entry.value;
      p.mu_max_r = r;
      have = true;
    }
  }
  const std::size_t full = p.per_size.rbegin()->first;
  bool have_proper = false;
  Rational best;
  for (const auto& [r, entry] : p.per_size) {
    if (r == full) continue;
    if (!have_proper || entry.value > best) {
      best = entry.value;
      p.mu_max_proper_r = r;
      have_proper = true;
    }
  }
  if (!have_proper) p.mu_max_proper_r.reset();
}

struct BruteBest {
  bool set = false;
  std::int64_t num = 0; // deg gcd(J) - sum of degrees over J
  std::vector<std::int64_t> gcd;
};

struct BruteState {
  const std::vector<Monomial>* elems;
  std::size_t nvars;
  std::vector<std::vector<std::int64_t>> gstack; // gstack[c-1] = gcd of the c chosen
  std::vector<BruteBest> best;                   // indexed by subset size
  std::int64_t degsum = 0;
  std::size_t count = 0;

  void dfs(std::size_t idx) {
    if (idx == elems->size()) return;
    dfs(idx + 1); // exclude

    const auto& m = (*elems)[idx];
    auto& g = gstack[count];
    if (count == 0) {
      g = m.exponents();
    } else {
      const auto& prev = gstack[count - 1];
      for (std::size_t i = 0; i < nvars; ++i) g[i] = std::min(prev[i], m.exponents()[i]);
    }
    ++count;
    degsum += m.degree();
    if (count >= 2) {
      std::int64_t gdeg = std::accumulate(g.begin(), g.end(), std::int64_t{0});
      std::int64_t num = gdeg - degsum;
      auto& b = best[count];
      if (!b.set || num > b.num || (num == b.num && lex_less(b.gcd, g))) {
        b.set = true;
        b.num = num;
        b.gcd = g;
      }
    }
    dfs(idx + 1); // include
    --count;
    degsum -= m.degree();
  }
};

struct ClosureCandidate {
  Monomial refined;
  std::size_t multiplicity;
  std::vector<std::int64_t> mult_degrees; // ascending; only filled when non-uniform
};

std::vector<ClosureCandidate> closure_candidates(const MonomialSet& s, std::size_t cap,
                                                 bool uniform) {
  std::vector<Monomial> elems = s.monomials();
  std::unordered_set<Monomial, MonomialHash> seen(elems.begin(), elems.end());
  for (std::size_t i = 1; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Monomial g = gcd(elems[i], elems[j]);
      if (seen.insert(g).second) {
        if (seen.size() > cap)
          throw ResourceLimitError("divisor closure exceeds cap of " + std::to_string(cap) +
                                   " elements (raise --closure-cap to override)");
        elems.push_back(std::move(g));
      }
    }
  }

  std::vector<ClosureCandidate> out;
  out.reserve(elems.size());
  for (const auto& g : elems) {
    std::vector<std::int64_t> refined;
    std::size_t mult = 0;
    std::vector<std::int64_t> degs;
    for (const auto& m : s.monomials()) {
      if (!divides(g, m)) continue;
      if (mult == 0) {
        refined = m.exponents();
      } else {
        for (std::size_t i = 0; i < refined.size(); ++i)
          refined[i] = std::min(refined[i], m.exponents()[i]);
      }
      ++mult;
      if (!uniform) degs.push_back(m.degree());
    }
    if (mult < 2) continue;
    if (!uniform) std::sort(degs.begin(), degs.end());
    out.push_back({Monomial(std::move(refined)), mult, std::move(degs)});
  }
  return out;
}

SlopeProfile profile_shell(const MonomialSet& s) {
  SlopeProfile p;
  p.n = s.n();
  p.d = s.uniform_degree();
  return p;
}

void require_size(const MonomialSet& s) {
  if (s.size() < 2) throw std::invalid_argument("slope profile needs at least 2 monomials");
}

} // namespace

SlopeProfile mu_max_bruteforce(const MonomialSet& s) {
  require_size(s);
  if (s.size() > kBruteForceCap)
    throw std::invalid_argument("brute force capped at " + std::to_string(kBruteForceCap) +
                                " monomials, got " + std::to_string(s.size()));

  BruteState st;
  st.elems = &s.monomials();
  st.nvars = s.num_vars();
  st.gstack.assign(s.size(), std::vector<std::int64_t>(st.nvars));
  st.best.assign(s.size() + 1, {});
  st.dfs(0);

  SlopeProfile p = profile_shell(s);
  for (std::size_t r = 2; r <= s.size(); ++r) {
    const auto& b = st.best[r];
    Monomial g(b.gcd);
    p.per_size.emplace(r, RankEntry{g.degree(),
                                    make_rational(Integer(b.num), Integer(r - 1)),
                                    std::move(g)});
  }
  finalize(p);
  return p;
}

SlopeProfile mu_max_closure(const MonomialSet& s, std::size_t closure_cap) {
  require_size(s);
  const auto d = s.uniform_degree();
  auto cands = closure_candidates(s, closure_cap, d.has_value());

  SlopeProfile p = profile_shell(s);
  const std::size_t nsize = s.size();

  if (d) {
    // Bucket candidates by multiplicity, then sweep r downward keeping the
    // best (degree, lex-largest) candidate with multiplicity >= r.
    std::vector<const ClosureCandidate*> bucket_best(nsize + 1, nullptr);
    for (const auto& c : cands) {
      auto& slot = bucket_best[c.multiplicity];
      if (!slot || c.refined.degree() > slot->refined.degree() ||
          (c.refined.degree() == slot->refined.degree() && slot->refined < c.refined))
        slot = &c;
    }
    const ClosureCandidate* best = nullptr;
    std::vector<const ClosureCandidate*> best_at(nsize + 1, nullptr);
    for (std::size_t r = nsize; r >= 2; --r) {
      const auto* b = bucket_best[r];
      if (b && (!best || b->refined.degree() > best->refined.degree() ||
                (b->refined.degree() == best->refined.degree() && best->refined < b->refined)))
        best = b;
      best_at[r] = best;
    }
    for (std::size_t r = 2; r <= nsize; ++r) {
      const auto* b = best_at[r];
      std::int64_t dJ = b->refined.degree();
      p.per_size.emplace(
          r, RankEntry{dJ,
                       make_rational(Integer(dJ - static_cast<std::int64_t>(r) * *d),
                                     Integer(r - 1)),
                       b->refined});
    }
  } else {
    for (std::size_t r = 2; r <= nsize; ++r) {
      const ClosureCandidate* best = nullptr;
      std::int64_t best_num = 0;
      for (const auto& c : cands) {
        if (c.multiplicity < r) continue;
        std::int64_t degsum =
            std::accumulate(c.mult_degrees.begin(), c.mult_degrees.begin() + r, std::int64_t{0});
        std::int64_t num = c.refined.degree() - degsum;
        if (!best || num > best_num || (num == best_num && best->refined < c.refined)) {
          best = &c;
          best_num = num;
        }
      }
      p.per_size.emplace(r, RankEntry{best->refined.degree(),
                                      make_rational(Integer(best_num), Integer(r - 1)),
                                      best->refined});
    }
  }
  finalize(p);
  return p;
}

std::vector<std::pair<std::size_t, Rational>> per_rank_table(const MonomialSet& s,
                                                             std::size_t closure_cap) {
  auto p = mu_max_closure(s, closure_cap);
  std::vector<std::pair<std::size_t, Rational>> rows;
  rows.reserve(p.per_size.size());
  for (const auto& [r, entry] : p.per_size) rows.emplace_back(r - 1, entry.value);
  return rows;
}

SemistableVerdict semistable_verdict(const MonomialSet& s, std::size_t closure_cap) {
  require_size(s);
  const auto d = s.uniform_degree();
  if (!d) throw HypothesisError("semistability verdict requires a uniform-degree set");
  if (!is_basepoint_free(s))
    throw HypothesisError("semistability verdict requires a basepoint-free set");

  auto p = mu_max_closure(s, closure_cap);
  const std::int64_t a = static_cast<std::int64_t>(s.size());
  SemistableVerdict v{make_rational(Integer(-a * *d), Integer(a - 1)), p.mu_max, false, false};
  v.semistable = (v.mu_max == v.mu);
  v.stable_strictly = true;
  for (const auto& [r, entry] : p.per_size) {
    if (r == s.size()) continue;
    if (entry.value >= v.mu) {
      v.stable_strictly = false;
      break;
    }
  }
  return v;
}

std::vector<Monomial> witness_subset(const SlopeProfile& profile, const MonomialSet& s,
                                     std::size_t r) {
  auto it = profile.per_size.find(r);
  if (it == profile.per_size.end())
    throw std::invalid_argument("witness_subset: size " + std::to_string(r) +
                                " not in the profile");
  std::vector<Monomial> multiples;
  for (const auto& m : s.monomials())
    if (divides(it->second.witness_gcd, m)) multiples.push_back(m);
  std::stable_sort(multiples.begin(), multiples.end(),
                   [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  multiples.erase(multiples.begin() + static_cast<std::ptrdiff_t>(r), multiples.end());
  return multiples;
}

} // namespace syz
