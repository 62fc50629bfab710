#pragma once

#include "maninkit/cohomcoend.hpp"

namespace maninkit {

/// A degreewise counital comonoid on a graded algebra: Δ: X -> X ∘ X into
/// the matched-degree square and ε: X -> I into an all-dims-one line, both
/// algebra morphisms, coassociative and counital degree by degree.
struct GradedComonoid {
    GradedAlgebraPtr x;
    GradedMorphism delta;  // X -> X ∘ X
    GradedMorphism eps;    // X -> I
};

/// The comonoid carried by coend(B).
GradedComonoid comonoid_of_coend(const CoendComonoid& e);

/// A comonoid whose object also carries a degreewise monoid structure, with
/// the four compatibility squares making Δ and ε monoid maps.
struct GradedBimonoid {
    GradedAlgebraPtr x;
    GradedMorphism mu;     // X ∘ X -> X
    GradedMorphism eta;    // I -> X
    GradedMorphism delta;  // X -> X ∘ X
    GradedMorphism eps;    // X -> I

    GradedComonoid comonoid() const { return {x, delta, eps}; }
};

/// Comonoid, monoid, compatibility, and algebra-morphism laws through
/// `degree`; one witness line per violation.
std::vector<std::string> check_bimonoid(const GradedBimonoid& bi, int degree);

/// Whether mu is unchanged by the factor swap on X ∘ X, degree by degree.
bool bimonoid_is_commutative(const GradedBimonoid& bi, int degree);

/// The one-dimensional bimonoid: every structure map is the 1x1 identity.
GradedBimonoid trivial_bimonoid(const Field& f, int top_degree,
                                Budget& budget);

/// The sign-group algebra spread over all degrees: generators e (even) and
/// s (odd) with relations ee = ss and es = se, so each positive degree has
/// exactly one even and one odd basis class.  Multiplication adds parities,
/// the comultiplication is diagonal on basis classes, the counit sums
/// coordinates, and the unit picks the even class.
GradedBimonoid parity_bimonoid(const Field& f, int top_degree, Budget& budget);

/// Parity of a basis class of the parity bimonoid: the number of odd
/// letters in its coset monomial, mod 2.
int parity_of_class(const GradedAlgebra& x, int k, int index);

/// A corepresentation: a graded algebra morphism omega: coend(B) -> X that
/// intertwines the coend comonoid with `co`.
struct Corepresentation {
    QuadraticAlgebra b;    // the carrier algebra
    CoendComonoid e;       // coend(b)
    GradedComonoid co;     // the comonoid acted through
    GradedMorphism omega;  // coend(b) -> co.x
};

/// Verdict of a law check.  On failure `degree` is the first violating
/// degree and `witness` names the square, the basis column, and the
/// discrepancy vector; checks never throw on a mere law failure.
struct CorepReport {
    bool pass = true;
    int degree = -1;
    std::string witness;
};

/// omega = id on coend(B), over the coend's own comonoid.
Corepresentation identity_corep(const QuadraticAlgebra& b, int top_degree,
                                Budget& budget);

/// omega = the coend counit, landing in an all-dims-one comonoid.
Corepresentation trivial_corep(const QuadraticAlgebra& b,
                               const GradedComonoid& co, int top_degree,
                               Budget& budget);

/// The bimonoid's corepresentation on the polynomial line:
/// omega = eta after the coend counit.
Corepresentation unit_corep(const GradedBimonoid& bi, int top_degree,
                            Budget& budget);

/// Counit square, comultiplication square, and multiplicativity of omega,
/// degree by degree (splits in ascending left degree), reporting the first
/// violation.
CorepReport corep_check(const Corepresentation& c, int degree);

/// delta = theta(omega): B -> X ∘ B.
GradedMorphism coaction_from_corep(const Corepresentation& c);

/// The corepresentation with omega = theta^{-1}(delta), from the degree-1
/// matrix of a coaction delta: B -> X ∘ B, rows indexed (x, generator).
/// ValidationError if the transposed data does not preserve relations.
Corepresentation corep_from_coaction(const CoendComonoid& e,
                                     const GradedComonoid& co,
                                     const Matrix& delta1);

/// The two comodule squares for a coaction delta: B -> X ∘ B.  delta is
/// expected to be an algebra morphism by construction; only the squares are
/// evaluated here.
CorepReport check_coaction(const GradedMorphism& delta,
                           const GradedComonoid& co, int degree);

/// Whether the degree-1 matrix f1 of a carrier map B -> B' is a morphism of
/// corepresentations: the carrier map must preserve relations (validated
/// first, and reported before any square is evaluated), and the two induced
/// maps out of cohom(B', B) composed with the omegas must agree.
CorepReport corep_morphism_check(const Matrix& f1, const Corepresentation& src,
                                 const Corepresentation& dst, int degree,
                                 Budget& budget);

/// The tensor corepresentation on white(B, B'):
/// omega'' = mu . (omega ∘ omega') . kappa.  Both inputs must act through
/// the bimonoid's own comonoid (InputError otherwise).
Corepresentation tensor_corep(const Corepresentation& a,
                              const Corepresentation& ap,
                              const GradedBimonoid& bi, Budget& budget);

/// The coaction of a tensor pair in pair coordinates:
/// (mu ∘ id) . swap of the middle factors . (delta (x) delta').
GradedMorphism coaction_tensor(const GradedMorphism& d,
                               const GradedMorphism& dp,
                               const GradedBimonoid& bi);

}  // namespace maninkit
