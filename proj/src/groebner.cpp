#include "lqnash/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace lqnash {

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_polynomial of the zero polynomial");
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  MultiPoly out;
  out.add_scaled(f, 1 / f.leading_coefficient(), l / f.leading_monomial());
  out.add_scaled(g, -1 / g.leading_coefficient(), l / g.leading_monomial());
  return out;
}

MultiPoly reduce(const MultiPoly& f, const std::vector<MultiPoly>& basis) {
  MultiPoly p = f;
  MultiPoly remainder;
  while (!p.is_zero()) {
    const Monomial lm = p.leading_monomial();
    const BigRational lc = p.leading_coefficient();
    bool divided = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      if (g.leading_monomial().divides(lm)) {
        p.add_scaled(g, -lc / g.leading_coefficient(), lm / g.leading_monomial());
        divided = true;
        break;
      }
    }
    if (!divided) {
      remainder.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return remainder;
}

namespace {

struct Pair {
  std::size_t i, j;  // i < j
  Monomial lcm;
};

bool pair_before(const Pair& a, const Pair& b) {
  if (a.lcm.total_degree() != b.lcm.total_degree()) return a.lcm.total_degree() < b.lcm.total_degree();
  if (auto c = lex_compare(a.lcm, b.lcm); c != 0) return c < 0;
  return std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j);
}

std::vector<MultiPoly> minimize_and_reduce(std::vector<MultiPoly> g) {
  // Drop members whose leading monomial is a multiple of another's.
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& mi = g[i].leading_monomial();
      const auto& mj = g[j].leading_monomial();
      if (mj.divides(mi) && (mi != mj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i].monic());
  }
  // Interreduce: tails of each member reduced against the others.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = reduce(minimal[i], others).monic();
  }
  std::sort(minimal.begin(), minimal.end(), [](const MultiPoly& a, const MultiPoly& b) {
    return lex_compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return minimal;
}

}  // namespace

std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& system, BuchbergerStats* stats) {
  std::vector<MultiPoly> basis;
  for (const auto& p : system)
    if (!p.is_zero()) basis.push_back(p.monic());
  if (basis.empty()) throw std::invalid_argument("buchberger needs a nonzero polynomial");

  BuchbergerStats local;
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> open;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      pending.push_back({i, j, lcm(basis[i].leading_monomial(), basis[j].leading_monomial())});
      open.insert({i, j});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

  while (!pending.empty()) {
    auto best = std::min_element(pending.begin(), pending.end(), pair_before);
    Pair pr = *best;
    pending.erase(best);
    open.erase({pr.i, pr.j});
    ++local.pairs_considered;

    const Monomial& mi = basis[pr.i].leading_monomial();
    const Monomial& mj = basis[pr.j].leading_monomial();
    if (pr.lcm == mi * mj) {
      ++local.skipped_product;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis[k].leading_monomial().divides(pr.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!open.count(key(pr.i, k)) && !open.count(key(pr.j, k))) chain = true;
    }
    if (chain) {
      ++local.skipped_chain;
      continue;
    }

    MultiPoly h = reduce(s_polynomial(basis[pr.i], basis[pr.j]), basis);
    if (h.is_zero()) {
      ++local.reductions_to_zero;
      continue;
    }
    basis.push_back(h.monic());
    add_pairs_for(basis.size() - 1);
  }

  if (stats) *stats = local;
  return minimize_and_reduce(std::move(basis));
}

bool is_groebner_basis(const std::vector<MultiPoly>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!reduce(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

std::optional<UniPoly> elimination_polynomial(const std::vector<MultiPoly>& basis) {
  for (const auto& p : basis) {
    if (p.is_zero() || !p.is_univariate_in_k2()) continue;
    UniPoly u = to_unipoly_k2(p);
    if (u.degree() < 1) continue;
    return u.monic();
  }
  return std::nullopt;
}

}  // namespace lqnash
