#pragma once

#include <optional>
#include <vector>

#include "lqnash/multipoly.hpp"
#include "lqnash/unipoly.hpp"

namespace lqnash {

// (L / lt(f)) f - (L / lt(g)) g with L = lcm(lm(f), lm(g)). Throws
// std::invalid_argument on a zero input.
MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g);

// Remainder of multivariate division: no term of the result is divisible by
// a leading monomial of `basis`.
MultiPoly reduce(const MultiPoly& f, const std::vector<MultiPoly>& basis);

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t skipped_product = 0;
  std::size_t skipped_chain = 0;
  std::size_t reductions_to_zero = 0;
};

// Reduced lex Groebner basis (monic, pairwise reduced, sorted by decreasing
// leading monomial). Pairs are taken by lowest lcm degree and pruned with
// Buchberger's product and chain criteria.
std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& system, BuchbergerStats* stats = nullptr);

// True if every S-polynomial of the set reduces to zero against it.
bool is_groebner_basis(const std::vector<MultiPoly>& basis);

// The basis member free of k1, as a monic polynomial in k2. Empty if the
// basis has none (ideal not zero-dimensional or wrong ordering).
std::optional<UniPoly> elimination_polynomial(const std::vector<MultiPoly>& basis);

}  // namespace lqnash
