#include "lqnash/delta_locus.hpp"

#include <cmath>
#include <stdexcept>

#include "lqnash/resultant.hpp"
#include "lqnash/solver.hpp"

namespace lqnash {

namespace {

// 2g and its derivative with coefficients in Q[a].
std::pair<std::vector<UniPoly>, std::vector<UniPoly>> g_in_a(const BigRational& q1, const BigRational& q2,
                                                             const BigRational& r1, const BigRational& r2) {
  const UniPoly a = UniPoly::identity();
  auto lift = [](const BigRational& v) { return UniPoly::constant(v); };
  auto c = elimination_coefficients<UniPoly>(a, lift(q1), lift(q2), lift(r1), lift(r2));
  std::vector<UniPoly> g(c.begin(), c.end());
  std::vector<UniPoly> dg;
  for (std::size_t i = 1; i < g.size(); ++i) dg.push_back(g[i] * BigRational(static_cast<long>(i)));
  return {g, dg};
}

}  // namespace

UniPoly discriminant_in_a(const BigRational& q1, const BigRational& q2, const BigRational& r1,
                          const BigRational& r2) {
  const auto [g, dg] = g_in_a(q1, q2, r1, r2);
  // Degree 5: (-1)^(5*4/2) = +1. Dividing by 2^8 undoes the scaling of g.
  UniPoly res = resultant_over_polynomials(g, dg);
  UniPoly disc = exact_quotient(res, g.back());
  return disc * BigRational(1, 256);
}

std::vector<RootInterval> discriminant_roots_in_a(const BigRational& q1, const BigRational& q2,
                                                  const BigRational& r1, const BigRational& r2,
                                                  const BigRational& lo, const BigRational& hi) {
  return isolate_real_roots(discriminant_in_a(q1, q2, r1, r2), lo, hi);
}

std::optional<TangentGame> tangent_game(const BigRational& c, const BigRational& k1) {
  if (!(c > 0 && c < 1) || !(k1 > 0)) return std::nullopt;
  const BigRational w = 1 - c * c;
  const BigRational w2 = w * w;
  const BigRational den = 4 * c * k1 - w2;
  if (den == 0) return std::nullopt;
  const BigRational k2 = (c + k1) * w2 / den;
  if (!(k2 > 0)) return std::nullopt;
  const BigRational theta1 = k1 * (w - c * k1) / c;
  const BigRational theta2 = k2 * (w - c * k2) / c;
  if (!(theta1 > 0) || !(theta2 > 0)) return std::nullopt;
  TangentGame out{canonical_game(c + k1 + k2, theta1, theta2, BigRational(1), BigRational(1)), k1, k2, c};
  return out;
}

namespace {

std::optional<BigRational> rational_sqrt(const BigRational& v) {
  if (v < 0) return std::nullopt;
  if (!mpz_perfect_square_p(v.get_num().get_mpz_t()) || !mpz_perfect_square_p(v.get_den().get_mpz_t()))
    return std::nullopt;
  BigInteger n, d;
  mpz_sqrt(n.get_mpz_t(), v.get_num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), v.get_den().get_mpz_t());
  BigRational out(n, d);
  out.canonicalize();
  return out;
}

}  // namespace

std::vector<TangentGame> tangent_games_in_family(const BigRational& q1, const BigRational& r1,
                                                 const BigRational& q2, const BigRational& c) {
  std::vector<TangentGame> out;
  if (!(c > 0 && c < 1)) return out;
  const BigRational theta1 = q1 / r1;
  const BigRational w = 1 - c * c;
  auto root = rational_sqrt(w * w - 4 * c * c * theta1);
  if (!root) return out;
  for (int s : {1, -1}) {
    const BigRational k1 = (w + s * *root) / (2 * c);
    auto tg = tangent_game(c, k1);
    if (!tg) continue;
    // Rescale player two so that q2 keeps its family value: only q2 / r2
    // matters to the equilibria, so r2 = q2 / theta2.
    const BigRational theta2 = tg->game.q2 / tg->game.r2;
    tg->game = canonical_game(tg->game.a, q1, q2, r1, q2 / theta2);
    out.push_back(std::move(*tg));
    if (*root == 0) break;
  }
  return out;
}

DiscriminantRootWitness witness_at_discriminant_root(const BigRational& q1, const BigRational& q2,
                                                     const BigRational& r1, const BigRational& r2,
                                                     const RootInterval& root_in_a, const BigRational& width) {
  const UniPoly delta = discriminant_in_a(q1, q2, r1, r2);
  DiscriminantRootWitness w;
  w.root_multiplicity = root_in_a.multiplicity;

  BigRational lo = root_in_a.lo;
  BigRational hi = root_in_a.hi;
  const UniPoly s = square_free_part(delta);
  if (s(hi) == 0) throw std::invalid_argument("discriminant root sits on a rational endpoint");
  const int s_hi = sign(s(hi));
  while (hi - lo > width) {
    BigRational mid = (lo + hi) / 2;
    const int s_mid = sign(s(mid));
    if (s_mid == 0) throw std::invalid_argument("discriminant root is rational; evaluate it directly");
    if (s_mid == s_hi)
      hi = mid;
    else
      lo = mid;
  }
  if (lo <= 0) throw std::invalid_argument("bracket must stay in a > 0");
  w.lo = lo;
  w.hi = hi;
  w.delta_sign_lo = sign(delta(lo));
  w.delta_sign_hi = sign(delta(hi));

  const NormalizedGame at_lo = canonical_game(lo, q1, q2, r1, r2);
  const NormalizedGame at_hi = canonical_game(hi, q1, q2, r1, r2);
  w.n_lo = count_equilibria(at_lo);
  w.n_hi = count_equilibria(at_hi);

  // deg gcd(g, g') at a* is the first j whose principal subresultant
  // coefficient does not vanish there. psc_j(a*) = 0 exactly when
  // gcd(psc_j, s) has a root in (lo, hi], the only root of s there being a*.
  const auto [g, dg] = g_in_a(q1, q2, r1, r2);
  const auto psc = principal_subresultants(g, dg);
  w.gcd_degree = static_cast<int>(psc.size());
  for (std::size_t j = 0; j < psc.size(); ++j) {
    bool vanishes = psc[j].is_zero();
    if (!vanishes) {
      const UniPoly h = gcd(psc[j], s);
      vanishes = h.degree() > 0 && sturm_count(h, Bound::at(lo), Bound::at(hi)) > 0;
    }
    if (!vanishes) {
      w.gcd_degree = static_cast<int>(j);
      break;
    }
  }

  // On a side with delta > 0 all five roots of g are real, with an odd
  // number below 0 and above a, so 1 or 3 of them lie in (0, a). Roots move
  // continuously on (a*, hi] and can only merge with neighbours, never across
  // 0 or a since g(0) > 0 > g(a). One root in range stays one root. Three in
  // range leave exactly one root on each side, and the 5 - gcd_degree
  // distinct roots at a* minus those two are the equilibria.
  if (w.delta_sign_lo > 0 || w.delta_sign_hi > 0) {
    const int n_pos = w.delta_sign_hi > 0 ? w.n_hi : w.n_lo;
    w.n_at_root = n_pos == 1 ? 1 : 5 - w.gcd_degree - 2;
  } else {
    w.n_at_root = -1;
  }

  if (w.n_hi != w.n_lo) {
    const SolveReport more = solve_normalized(w.n_hi > w.n_lo ? at_hi : at_lo);
    double best_gap = INFINITY;
    for (std::size_t i = 1; i < more.equilibria.size(); ++i) {
      const double gap = more.equilibria[i].k2_normalized - more.equilibria[i - 1].k2_normalized;
      if (gap < best_gap) {
        best_gap = gap;
        w.k2_double_root = 0.5 * (more.equilibria[i].k2_normalized + more.equilibria[i - 1].k2_normalized);
      }
    }
  }
  return w;
}

}  // namespace lqnash
