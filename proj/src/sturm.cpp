#include "lqnash/sturm.hpp"

#include <stdexcept>

namespace lqnash {
namespace {

int sign_at(const UniPoly& p, const Bound& at) {
  if (p.is_zero()) return 0;
  switch (at.kind) {
    case Bound::Kind::kPosInf:
      return sign(p.leading());
    case Bound::Kind::kNegInf:
      return (p.degree() % 2 == 0) ? sign(p.leading()) : -sign(p.leading());
    case Bound::Kind::kFinite:
      break;
  }
  return sign(p(at.value));
}

bool less(const Bound& a, const Bound& b) {
  if (a.kind == b.kind) return a.kind == Bound::Kind::kFinite && a.value < b.value;
  return static_cast<int>(a.kind) < static_cast<int>(b.kind);
}

// Successive gcds p, gcd(p, p'), ... ; a root of p has multiplicity m
// exactly when it is a root of the first m entries.
std::vector<UniPoly> multiplicity_tower(const UniPoly& p) {
  std::vector<UniPoly> tower{p};
  while (tower.back().degree() >= 1) {
    UniPoly next = gcd(tower.back(), tower.back().derivative());
    if (next.degree() < 1) break;
    tower.push_back(std::move(next));
  }
  return tower;
}

}  // namespace

SturmChain sturm_chain(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("sturm chain of the zero polynomial");
  SturmChain chain;
  UniPoly p0 = square_free_part(p);
  chain.sequence.push_back(p0);
  if (p0.degree() < 1) return chain;
  chain.sequence.push_back(p0.derivative());
  while (true) {
    const auto& prev = chain.sequence[chain.sequence.size() - 2];
    const auto& cur = chain.sequence.back();
    UniPoly rem = divmod(prev, cur).second;
    if (rem.is_zero()) break;
    chain.sequence.push_back(-rem);
  }
  return chain;
}

int sign_variations(const SturmChain& chain, const Bound& at) {
  int variations = 0;
  int last = 0;
  for (const auto& p : chain.sequence) {
    int s = sign_at(p, at);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int sturm_count(const SturmChain& chain, const Bound& lo, const Bound& hi) {
  if (!less(lo, hi)) throw std::invalid_argument("sturm_count needs lo < hi");
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

int sturm_count(const UniPoly& p, const Bound& lo, const Bound& hi) { return sturm_count(sturm_chain(p), lo, hi); }

BigRational root_bound(const UniPoly& p) {
  if (p.degree() < 1) return BigRational(1);
  BigRational max_ratio(0);
  const BigRational& lead = p.leading();
  for (int i = 0; i < p.degree(); ++i) {
    BigRational r = abs(p.coeff(static_cast<std::size_t>(i)) / lead);
    if (r > max_ratio) max_ratio = r;
  }
  BigRational cauchy = max_ratio + 1;
  BigRational bound(1);
  while (bound <= cauchy) bound *= 2;
  return bound;
}

std::vector<RootInterval> isolate_real_roots(const UniPoly& p, const BigRational& lo, const BigRational& hi) {
  if (p.is_zero() || p.degree() < 1) return {};
  if (!(lo < hi)) throw std::invalid_argument("isolate_real_roots needs lo < hi");
  const SturmChain chain = sturm_chain(p);

  struct Pending {
    BigRational lo, hi;
    int count;
  };
  std::vector<RootInterval> found;
  std::vector<Pending> stack;
  int total = sturm_count(chain, Bound::at(lo), Bound::at(hi));
  if (total > 0) stack.push_back({lo, hi, total});
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    if (cur.count == 1) {
      found.push_back({cur.lo, cur.hi, 1});
      continue;
    }
    BigRational mid = (cur.lo + cur.hi) / 2;
    int left = sturm_count(chain, Bound::at(cur.lo), Bound::at(mid));
    int right = cur.count - left;
    // Push right first so the left half is processed first.
    if (right > 0) stack.push_back({mid, cur.hi, right});
    if (left > 0) stack.push_back({cur.lo, mid, left});
  }

  const auto tower = multiplicity_tower(p);
  for (auto& iv : found) {
    int mult = 1;
    for (std::size_t k = 1; k < tower.size(); ++k) {
      if (sturm_count(tower[k], Bound::at(iv.lo), Bound::at(iv.hi)) == 0) break;
      ++mult;
    }
    iv.multiplicity = mult;
  }
  return found;
}

std::vector<RootInterval> isolate_real_roots(const UniPoly& p) {
  if (p.is_zero() || p.degree() < 1) return {};
  BigRational bound = root_bound(p);
  return isolate_real_roots(p, -bound, bound);
}

BigRational default_refine_width() { return pow2(-60); }

BigRational refine_root(const UniPoly& p, const RootInterval& iv, const BigRational& width) {
  if (width <= 0) throw std::invalid_argument("refine width must be positive");
  const UniPoly s = square_free_part(p);
  BigRational lo = iv.lo;
  BigRational hi = iv.hi;
  const int s_hi = sign(s(hi));
  if (s_hi == 0) return hi;
  // One simple root in (lo, hi): the sign equals s_hi on (root, hi] and is
  // opposite on (lo, root).
  while (hi - lo > width) {
    BigRational mid = (lo + hi) / 2;
    const int s_mid = sign(s(mid));
    if (s_mid == 0) return mid;
    if (s_mid == s_hi)
      hi = mid;
    else
      lo = mid;
  }
  return (lo + hi) / 2;
}

}  // namespace lqnash
