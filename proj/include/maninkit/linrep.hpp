#pragma once

#include <string>
#include <vector>

#include "maninkit/graded.hpp"
#include "maninkit/matrix.hpp"

namespace maninkit {

/// A finite-dimensional vector space: a field tag and a dimension.
struct FinVec {
    Field field;
    int dim;
};

// ---------------------------------------------------------------------------
// Operator coordinates.  hom(V, W) is the dim(W)*dim(V)-dimensional space of
// matrices; its basis is the matrix units E_{st} ordered row-major, so the
// coordinate of E_{st} is s*dim(V) + t.  All maps below are plain matrices
// in these coordinates.
// ---------------------------------------------------------------------------

/// ev: hom(V,W) (x) V -> W with ev(E_{st} (x) e_a) = delta_{ta} e_s.
Matrix ev_matrix(const FinVec& v, const FinVec& w);

/// The evaluation transposition: f: K^n -> hom(V,W) becomes the map
/// K^n (x) V -> W with entry [s, a*dim(V)+t] = f[s*dim(V)+t, a].
Matrix theta_matrix(const Matrix& f, const FinVec& v, const FinVec& w);

/// Its inverse reindexing.
Matrix theta_inverse_matrix(const Matrix& g, const FinVec& v, const FinVec& w);

/// Internal composition c: hom(V,W) (x) hom(U,V) -> hom(U,W); on basis
/// elements it is the product of operators.
Matrix c_matrix(const FinVec& u, const FinVec& v, const FinVec& w);

/// u_V: K -> end(V), the flattened identity operator as a column.
Matrix u_matrix(const FinVec& v);

/// The functorial map hom(f, g): hom(V,W) -> hom(U,Z) for f: U -> V and
/// g: W -> Z, sending h to g h f; equals kron(g, f^T).
Matrix hom_map_matrix(const Matrix& f, const Matrix& g);

/// pi: hom(V,W) (x) hom(V',W') -> hom(V (x) V', W (x) W'), the Kronecker
/// product of operators written as a fixed shuffle of coordinates.
Matrix pi_matrix(const FinVec& v, const FinVec& w, const FinVec& vp,
                 const FinVec& wp);

/// The flip A (x) B -> B (x) A on dimensions (na, nb).
Matrix flip_matrix(const Field& f, int na, int nb);

/// The seven pi-law suites over all spaces of dimension 1..max_dim: the
/// defining evaluation square, naturality over every tuple of matrix
/// units, compatibility with internal composition, associativity, unit
/// degeneration, the monoid-morphism property of pi on ends, and
/// compatibility with the symmetry flip.  Returns one witness line per
/// violated identity.
std::vector<std::string> pi_law_suite(const Field& f, int max_dim);

/// Laws of the internal composition on its own: associativity, the
/// defining evaluation square, the unit triangles for u_V against c, and
/// the evaluation triangle of u_V.
std::vector<std::string> composition_law_suite(const Field& f, int max_dim);

// ---------------------------------------------------------------------------
// Semi-linear sets: a finite set of labelled points with a vector space
// attached.  A map is a point function together with one matrix per source
// point.
// ---------------------------------------------------------------------------

struct SemiLinearSet {
    std::vector<std::string> labels;
    FinVec v;
    int points() const { return static_cast<int>(labels.size()); }
};

/// The monoidal unit {0} x K.
SemiLinearSet unit_slset(const Field& f);

/// A vector space as the one-point semi-linear set {0} x V.
SemiLinearSet vect_slset(const FinVec& v);

struct SemiLinearMap {
    std::vector<int> phi;    // target point per source point
    std::vector<Matrix> fx;  // linear part per source point
    int target_points = 0;   // point count of the codomain
};

SemiLinearMap identity_slmap(const SemiLinearSet& a);
/// g after f; point tables compose and the matrices follow the points.
SemiLinearMap compose_sl(const SemiLinearMap& g, const SemiLinearMap& f);
SemiLinearSet tensor_slset(const SemiLinearSet& a, const SemiLinearSet& b);
SemiLinearMap tensor_sl(const SemiLinearMap& f, const SemiLinearMap& g);
bool equal_sl(const SemiLinearMap& f, const SemiLinearMap& g);

/// hom(X x V, Y x W): points are the functions X -> Y listed in base-|Y|
/// counting order; the linear part is Hom(X, hom(V,W)) flattened blockwise
/// by source point.  `ev` evaluates a pair (function, point) on (matrix
/// family, vector).
struct SLHomObject {
    SemiLinearSet a, b, hom;
    SemiLinearMap ev;  // hom (x) a -> b
};
SLHomObject sl_hom_object(const SemiLinearSet& a, const SemiLinearSet& b);

/// theta(h) = ev . (h (x) id_a): z (x) a -> b for h: z -> hom.
SemiLinearMap sl_theta(const SLHomObject& ho, const SemiLinearSet& z,
                       const SemiLinearMap& h);
/// The inverse transposition on g: z (x) a -> b.
SemiLinearMap sl_theta_inverse(const SLHomObject& ho, const SemiLinearSet& z,
                               const SemiLinearMap& g);

/// All semi-linear maps src -> dst over a prime field, in deterministic
/// counting order.  The full count is charged to the budget first.
std::vector<SemiLinearMap> enumerate_slmaps(const SemiLinearSet& src,
                                            const SemiLinearSet& dst,
                                            Budget& budget);

/// Exhaustive factorization check over a prime field: every semi-linear
/// map z (x) a -> b equals ev . (h (x) id) for exactly one h: z -> hom.
/// Verified by enumerating both sides and checking that the transposition
/// round-trips are identities and the counts agree.
std::vector<std::string> sl_universal_property(const SemiLinearSet& a,
                                               const SemiLinearSet& b,
                                               const SemiLinearSet& z,
                                               Budget& budget);

/// Internal composition hom(b,c) (x) hom(a,b) -> hom(a,c) in semi-linear
/// sets: compose the point functions and multiply the matrices along them.
SemiLinearMap sl_composition(const SemiLinearSet& a, const SemiLinearSet& b,
                             const SemiLinearSet& c);
/// u: I -> hom(a,a), the identity function with identity matrices.
SemiLinearMap sl_unit(const SemiLinearSet& a);

/// A monoid on a semi-linear set.
struct VecMonoid {
    SemiLinearSet x;
    SemiLinearMap mu;   // x (x) x -> x
    SemiLinearMap eta;  // I -> x
};

/// A bimonoid on a semi-linear set.
struct VecBimonoid {
    SemiLinearSet x;
    SemiLinearMap mu, eta, delta, eps;
    VecMonoid monoid() const { return {x, mu, eta}; }
};

std::vector<std::string> check_vec_monoid(const VecMonoid& m);
std::vector<std::string> check_vec_bimonoid(const VecBimonoid& b);

/// end(a) = (hom(a,a), c, u) as a semi-linear monoid.
struct EndMonoid {
    SLHomObject ho;
    VecMonoid monoid;
};
EndMonoid end_monoid(const SemiLinearSet& a);

// ---------------------------------------------------------------------------
// Representations.  A representation of a semi-linear monoid m on V is a
// semi-linear map rho: m.x -> end({0} x V) turning multiplication into
// operator composition and the unit into the identity operator.
// ---------------------------------------------------------------------------

std::vector<std::string> rep_check(const SemiLinearMap& rho,
                                   const VecMonoid& m, const FinVec& v);

/// The action theta(rho): m.x (x) V -> V.
SemiLinearMap action_from_rep(const SemiLinearMap& rho, const VecMonoid& m,
                              const FinVec& v);
SemiLinearMap rep_from_action(const SemiLinearMap& a, const VecMonoid& m,
                              const FinVec& v);
std::vector<std::string> action_check(const SemiLinearMap& a,
                                      const VecMonoid& m, const FinVec& v);

/// Morphism of representations f: V -> W between rho and tau:
/// hom(id, f) . rho == hom(f, id) . tau pointwise.
std::vector<std::string> rep_morphism_check(const Matrix& f,
                                            const SemiLinearMap& rho,
                                            const SemiLinearMap& tau,
                                            const VecMonoid& m,
                                            const FinVec& v, const FinVec& w);

/// rho'' = pi . (rho (x) rho') . Delta, a representation on V (x) V'.
SemiLinearMap tensor_rep(const SemiLinearMap& rho, const SemiLinearMap& rhop,
                         const VecBimonoid& b, const FinVec& v,
                         const FinVec& vp);

// ---------------------------------------------------------------------------
// Usual finite monoids and their linear representations.
// ---------------------------------------------------------------------------

/// A finite monoid given by its multiplication table
/// (table[i][j] = index of x_i x_j); the two-sided unit is located during
/// validation.
struct FiniteMonoid {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table;
    int unit;
};

/// Validates shape, associativity and the existence of a two-sided unit;
/// throws InputError otherwise.
FiniteMonoid make_finite_monoid(std::vector<std::string> labels,
                                std::vector<std::vector<int>> table);

/// M x K as a semi-linear monoid: the point part multiplies by the table,
/// all linear parts are the identity of K.
VecMonoid semilinear_of_monoid(const FiniteMonoid& m, const Field& f);

/// The group-algebra-like bimonoid of a finite monoid on {0} x K^|M|:
/// multiplication by the table, group-like comultiplication, counit one on
/// every basis element.
VecBimonoid monoid_bimonoid(const FiniteMonoid& m, const Field& f);

/// Direct check that rho(unit) = id and rho(x) rho(y) = rho(x y).
std::vector<std::string> monoid_rep_check(const FiniteMonoid& m,
                                          const std::vector<Matrix>& rho);

/// The induced semi-linear representation of M x K on V: every point goes
/// to the single point of end(V) and carries the flattened rho(x).
SemiLinearMap monoid_rep_to_semilinear(const FiniteMonoid& m,
                                       const std::vector<Matrix>& rho);
std::vector<Matrix> semilinear_to_monoid_rep(const SemiLinearMap& rho,
                                             const FinVec& v);

}  // namespace maninkit
