#pragma once
/* Vector fields on projective space presented by a square matrix, their
 * standard-chart derivations, and the exact search for closed-point leaves.
 *
 * A matrix A acts as the linear field x' = A x on affine (n+1)-space; on the
 * chart X_i != 0 with coordinates u_k = X_k/X_i this induces
 *     d(u_k) = L_k(u) - L_i(u) u_k,   L_m(u) = sum_j A[m][j] u_j,  u_i = 1,
 * the quotient-rule image of (L_k X_i - L_i X_k)/X_i^2.  Chart pairs are
 * checked for compatibility on overlaps at construction for dim <= 3.
 *
 * Closed-point leaves correspond to eigendirections of A over the base
 * field: the chart field vanishes exactly where all u_k' do, i.e. where u is
 * a fixed direction of A.  Eigenvalues are found as roots of the
 * characteristic polynomial by exact rational root search (char 0) or
 * exhaustion (char p); factors with no root in the field are reported by
 * degree instead of constructing the extension.
 */

#include "foliate/linalg.hpp"
#include "foliate/scheme.hpp"

namespace foliate {

struct ProjectiveVectorField {
    unsigned char_p = 0;                      // base field: 0 = rationals
    unsigned dim = 0;                         // the space is P^dim
    std::vector<std::vector<mpq_class>> mat;  // (dim+1) x (dim+1), d(X) = mat X
    std::vector<AffineDiffScheme> charts;     // chart i: vars u_k (k != i)
};

/* Chart i uses variables named u0..u<dim> with u<i> omitted.  Throws on a
   non-square matrix or (dim <= 3) on a chart-overlap mismatch. */
ProjectiveVectorField projective_field_from_matrix(unsigned char_p, unsigned dim,
                                                   std::vector<std::vector<mpq_class>> mat,
                                                   bool parallel = true);

/* det(t I - A) over k[t] ("t" the only variable of the returned ring). */
Poly characteristic_polynomial(const ProjectiveVectorField& V);

/* Distinct roots of a univariate polynomial in its coefficient field, with
   multiplicities, sorted.  Rationals: rational-root candidates of the
   primitive integer form.  Char p: all field elements are tried. */
std::vector<std::pair<mpq_class, unsigned>> field_roots(const Poly& f);

/* f with (t - r)^mult divided out for every listed root; division is exact
   or this throws. */
Poly deflate_roots(const Poly& f, const std::vector<std::pair<mpq_class, unsigned>>& roots);

struct ProjectiveLeaf {
    std::vector<mpq_class> point;  // homogeneous coordinates, = 1 at `chart`
    mpq_class eigenvalue;
    unsigned chart = 0;            // index whose affine chart hosts the check
    bool verified = false;         // maximal ideal of the point is differential
};

struct ExtensionReport {
    Poly rootless;             // char-poly factor with no root in the field
    unsigned degree = 0;       // a leaf exists over an extension of degree <= this
    bool irreducible = false;  // degree 2 or 3 with no roots: degree is exact
};

struct LeafSearchReport {
    Poly char_poly;
    std::vector<std::pair<mpq_class, unsigned>> eigenvalues;  // roots in k
    std::vector<ProjectiveLeaf> leaves;  // one per eigenspace basis vector
    std::optional<ExtensionReport> extension;
};

LeafSearchReport projective_rational_leaves(const ProjectiveVectorField& V,
                                            bool parallel = true);

}  // namespace foliate
