#pragma once

#include "dbx/vfield.hpp"

#include <optional>
#include <vector>

namespace dbx {

/// All monomials of total degree <= n, graded-lex descending.
/// Size is (n+1)(n+2)/2.
std::vector<Monomial> extactic_basis(unsigned n);

/// Strictly increasing row-selection indices (k_1 < ... < k_l) for an
/// extactic ideal generator sigma.
struct GeneratorIndex {
    std::vector<unsigned> ks;

    bool operator==(const GeneratorIndex&) const = default;
};

/// Validates length l and strict monotonicity against basis size for degree n.
void validate_generator_index(const GeneratorIndex& idx, unsigned n);

/// n-th extactic curve: determinant of the matrix with rows X^j(v_i),
/// j = 0..l-1, over the degree-n basis. May be the zero polynomial.
Poly extactic_curve(const VectorField& X, unsigned n);

/// sigma_(k_1..k_l): determinant with row j equal to X^{k_j} of the basis.
/// sigma_(0,1,...,l-1) equals extactic_curve(X, n).
Poly extactic_ideal_generator(const VectorField& X, unsigned n,
                              const GeneratorIndex& idx);

/// Smallest n <= n_max with E_n(X) = 0 and E_{n-1}(X) != 0 (E_0 = 1), i.e.
/// the exact degree of a rational first integral when one exists in range.
std::optional<unsigned> rational_first_integral_degree(const VectorField& X,
                                                       unsigned n_max);

/// The curve-count budget n_l(X); nonpositive values clamp to 0.
unsigned budget(const VectorField& X, unsigned l);

/// weighted_sum >= budget(X, l); true certifies a rational first integral.
bool budget_check(const VectorField& X, unsigned l, unsigned weighted_sum);

/// Exact determinant of a matrix of polynomials. Fraction-free Bareiss with
/// per-row content clearing; Laplace expansion below 4x4.
Poly poly_determinant(std::vector<std::vector<Poly>> m);

/// Rows 0..k_max of iterated derivations applied to the degree-n basis;
/// row j+1 is X applied entrywise to row j.
std::vector<std::vector<Poly>> derivation_rows(const VectorField& X, unsigned n,
                                               unsigned k_max);

} // namespace dbx
