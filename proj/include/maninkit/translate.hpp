#pragma once

#include "maninkit/cohomcoend.hpp"
#include "maninkit/coreps.hpp"
#include "maninkit/linrep.hpp"

namespace maninkit {

// ---------------------------------------------------------------------------
// Two contravariant embeddings of finite-dimensional spaces into quadratic
// algebras, together with the comparison maps that relate the image of a
// tensor product to the white product of the images.  The free-dual
// embedding sends a space to the free algebra on its dual basis and its
// comparisons are invertible; the symmetric-dual embedding sends it to the
// symmetric-algebra presentation (relations the antisymmetric tensors) and
// its comparisons collapse dimensions from degree 2 on.
// ---------------------------------------------------------------------------

enum class SpaceFunctor { FreeDual, SymmetricDual };

struct MonoidalFunctorData {
    SpaceFunctor kind;
    Field field;
    bool strong;               // comparisons are degreewise bijections
    bool contravariant = true; // both built-ins reverse arrows
    bool symmetric = true;     // compatible with factor swaps
};

/// The free-dual embedding (strong).
MonoidalFunctorData tstar(const Field& f);

/// The symmetric-dual embedding (colax only).  InputError in characteristic
/// 2, where the antisymmetric tensors do not complement the symmetric ones.
MonoidalFunctorData sstar(const Field& f);

/// Object part on a space of dimension `dim` (>= 1).
QuadraticAlgebra functor_object(const MonoidalFunctorData& fd, int dim);

/// Arrow part.  `m` is the (target_dim x source_dim) matrix of a linear
/// map; the image reverses it, running
/// functor_object(rows(m)) -> functor_object(cols(m)) with degree-1 block
/// the transpose of m.
GradedMorphism functor_arrow(const MonoidalFunctorData& fd, const Matrix& m,
                             int top_degree, Budget& budget);

/// Same, extending over caller-supplied truncations of the two objects
/// (source for the image of the row space, target for the column space).
GradedMorphism functor_arrow_on(const MonoidalFunctorData& fd, const Matrix& m,
                                const GradedAlgebraPtr& source_t,
                                const GradedAlgebraPtr& target_t);

/// The product comparison  F(V (x) W) -> F(V) * F(W)  into the
/// matched-degree product of the factor images, identity on generator
/// pairs (index (i, j) -> i * dim_w + j on both sides).  For the strong
/// instance `phi_inverse` holds the inverse (every degree of `phi` is a
/// basis bijection there); otherwise it is empty.
struct ProductComparison {
    GradedAlgebraPtr source;  // truncation of functor_object(dim_v * dim_w)
    GradedAlgebraPtr left;    // truncation of functor_object(dim_v)
    GradedAlgebraPtr right;   // truncation of functor_object(dim_w)
    GradedAlgebraPtr pair;    // matched-degree product left * right
    GradedMorphism phi;       // source -> pair
    std::optional<GradedMorphism> phi_inverse;  // pair -> source when strong
};
ProductComparison product_comparison(const MonoidalFunctorData& fd, int dim_v,
                                     int dim_w, int top_degree,
                                     Budget& budget);

/// Coherence of the comparisons on one triple of dimensions: the two
/// bracketings of F(V (x) W (x) U) -> F(V) * F(W) * F(U) agree, the unit
/// comparisons against the one-generator line are identities, and the
/// comparison commutes with the factor swap.  Returns witness lines.
std::vector<std::string> check_comparison_coherence(
    const MonoidalFunctorData& fd, int dim_v, int dim_w, int dim_u,
    int top_degree, Budget& budget);

/// The four-factor interchange: starting from F(X (x) Y (x) Z (x) W), the
/// route through the pairwise comparisons followed by the swap of the two
/// middle matched factors agrees with the route through the image of the
/// middle swap followed by the regrouped comparisons.
std::vector<std::string> check_comparison_interchange(
    const MonoidalFunctorData& fd, int dim_x, int dim_y, int dim_z, int dim_w,
    int top_degree, Budget& budget);

/// The comonoid carried by the image of a one-point linear monoid:
/// comultiplication  phi . F(mu), counit  F(eta)  (the unit comparison is
/// the identity on the one-generator line).  The comonoid laws are
/// re-checked degreewise; a violation raises InternalError.  Monoids with
/// more than one carrier point are rejected with InputError (the
/// function-algebra extension is out of scope).
GradedComonoid translated_comonoid(const MonoidalFunctorData& fd,
                                   const VecMonoid& m, int top_degree,
                                   Budget& budget);

/// The bimonoid carried by the image of a one-point linear bimonoid under
/// the strong instance: multiplication  F(delta) . phi_inverse, unit
/// F(eps), comultiplication  phi . F(mu), counit  F(eta).  InputError for
/// non-strong instances or multi-point carriers.
GradedBimonoid translated_bimonoid(const MonoidalFunctorData& fd,
                                   const VecBimonoid& b, int top_degree,
                                   Budget& budget);

/// The induced comparison on operator spaces,
///   phi: cohom(F V, F W) -> F(hom(V, W)),
/// the transposition of  (product comparison) . F(ev).  Invertibility is
/// reported per degree (dimension match plus full rank), never assumed.
struct PhiTransform {
    CohomObject ch;          // cohom(F V, F W)
    GradedAlgebraPtr image;  // truncation of F(hom(V, W))
    GradedMorphism phi;      // ch.hom_t -> image
    std::vector<char> iso_by_degree;  // 1 iff bijective in that degree
};
PhiTransform phi_transform(const MonoidalFunctorData& fd, int dim_v,
                           int dim_w, int top_degree, Budget& budget);

/// The naturality square of the operator comparison for f: V' -> V
/// (dim_v x dim_vp) and g: W -> W' (dim_wp x dim_w): the route through
/// F(hom(f, g)) agrees with the route through the induced cohom maps.
/// Returns witness lines.
std::vector<std::string> check_phi_naturality(const MonoidalFunctorData& fd,
                                              const Matrix& f, const Matrix& g,
                                              int top_degree, Budget& budget);

/// The operator comparison at W = V together with the coend comonoid on
/// its source and the translated comonoid of the operator monoid on its
/// target.
struct EndComparison {
    CoendComonoid source;   // coend(F V)
    GradedComonoid target;  // translation of the operator monoid on V
    GradedMorphism phi;     // source -> target carrier
    std::vector<char> iso_by_degree;
};
EndComparison end_comparison(const MonoidalFunctorData& fd, int dim_v,
                             int top_degree, Budget& budget);

/// The comonoid-morphism squares of the comparison at W = V.
std::vector<std::string> check_end_comparison(const EndComparison& ec,
                                              int degree);

/// Translate a representation of a one-point linear monoid into a
/// corepresentation of the translated comonoid: the structure map is
/// F(rho) after the operator comparison at W = V.  The input must pass
/// rep_check (ValidationError otherwise).  The second overload acts
/// through a caller-supplied comonoid, which must match the translation of
/// `m` degreewise (this is how several lifts share one comonoid instance).
Corepresentation lift_rep(const MonoidalFunctorData& fd,
                          const SemiLinearMap& rho, const VecMonoid& m,
                          const FinVec& v, int top_degree, Budget& budget);
Corepresentation lift_rep(const MonoidalFunctorData& fd,
                          const SemiLinearMap& rho, const VecMonoid& m,
                          const FinVec& v, const GradedComonoid& co,
                          int top_degree, Budget& budget);

/// The coaction of the lifted corepresentation, built directly on the
/// image carrier (degree-1 block read off rho, then the unique algebra
/// extension).  Agrees with transposing lift_rep(...).omega and avoids
/// building any cohom object, so it is the cheap route for large carriers.
GradedMorphism lift_coaction(const MonoidalFunctorData& fd,
                             const SemiLinearMap& rho, const VecMonoid& m,
                             const FinVec& v, const GradedComonoid& co,
                             int top_degree, Budget& budget);

struct LiftMonoidalityReport {
    bool pass = true;
    int degree = -1;      // first failing degree, -1 when passing
    std::string witness;  // empty when passing
};

/// The unit half of the comparison for a strong instance: the lift of the
/// counit representation on the one-dimensional space is isomorphic (via
/// the identity carrier map, both ways) to the unit corepresentation of
/// the translated bimonoid.
LiftMonoidalityReport verify_lift_unit(const MonoidalFunctorData& fd,
                                       const VecBimonoid& b, int top_degree,
                                       Budget& budget);

/// For the strong instance and a one-point linear bimonoid: the product
/// comparison on carriers is an isomorphism of corepresentations between
/// the lift of the tensor product of rho and rhop and the tensor product
/// of their lifts.  Verified through the transposed coaction squares in
/// both directions, after confirming both sides satisfy the coaction laws;
/// this stays on the small carriers and never tabulates the tensor coend.
LiftMonoidalityReport verify_lift_monoidality(
    const MonoidalFunctorData& fd, const VecBimonoid& b,
    const SemiLinearMap& rho, const FinVec& v, const SemiLinearMap& rhop,
    const FinVec& vp, int top_degree, Budget& budget);

}  // namespace maninkit
