#pragma once

#include "maninkit/corpus.hpp"
#include "maninkit/quadalg.hpp"
#include "maninkit/sparse.hpp"

namespace maninkit {

/// The universal object for maps out of B that land in "something ∘ A": the
/// algebra dual(A) • B together with its coevaluation.  All graded data is
/// tabulated through the requested top degree.
struct CohomObject {
    QuadraticAlgebra parameter;  // A
    QuadraticAlgebra target;     // B
    QuadraticAlgebra algebra;    // dual(A) • B; generators (i, j) -> i*nB + j
    GradedAlgebraPtr hom_t;      // truncation of `algebra`
    GradedAlgebraPtr parameter_t;
    GradedAlgebraPtr target_t;
    GradedAlgebraPtr product;    // hom_t ∘ parameter_t
    GradedMorphism coev;         // target_t -> product
};

CohomObject cohom(const QuadraticAlgebra& a, const QuadraticAlgebra& b,
                  int top_degree, Budget& budget);

/// The transposition Hom(cohom(A,B), Z) -> Hom(B, Z∘A):
/// f |-> (f ∘ id_A) · coev.
GradedMorphism vartheta(const CohomObject& ch, const GradedMorphism& f);

/// Its inverse, from the degree-1 matrix of g: B -> Z∘A (indices
/// (s, i) -> s*nA + i on rows): f1[s, i*nB + j] = g1[s*nA + i, j], then the
/// unique extension.  ValidationError if the transposed matrix does not
/// preserve relations (cannot happen for a well-formed g).
GradedMorphism vartheta_inverse(const CohomObject& ch,
                                const GradedAlgebraPtr& z, const Matrix& g1);

/// The functorial image cohom(A, g) for g a degree-1 morphism matrix
/// `to.target <- from.target`; both objects must share the parameter A.
GradedMorphism cohom_map_target(const CohomObject& from, const CohomObject& to,
                                const Matrix& g1);

/// The contravariant image cohom(f, B): from = cohom(W,B) -> to = cohom(V,B)
/// for f: V -> W given by its degree-1 matrix (rows W, cols V); both objects
/// must share the target B.
GradedMorphism cohom_map_parameter(const CohomObject& from,
                                   const CohomObject& to, const Matrix& f1);

/// All algebra morphisms source -> target over a prime field, listed by
/// their degree-1 matrices in row-major base-p counting order.  The source
/// must carry a presentation.  Spaces above the budget's remaining work are
/// rejected with BudgetError.
std::vector<Matrix> enumerate_morphisms(const GradedAlgebraPtr& source,
                                        const GradedAlgebraPtr& target,
                                        Budget& budget);

/// Exhaustive two-sided count of the transposition bijection.
struct AdjunctionCount {
    long long hom_side;     // |Hom(cohom(A,B), Z)|
    long long tensor_side;  // |Hom(B, Z∘A)|
    bool bijective;         // round-trips land in the opposite set and agree
};
AdjunctionCount adjunction_oracle(const QuadraticAlgebra& a,
                                  const QuadraticAlgebra& b,
                                  const QuadraticAlgebra& z, int top_degree,
                                  Budget& budget);

/// d: cohom(U,W) -> cohom(V,W) ∘ cohom(U,V), the transposition of
/// (id ∘ coev_{U,V}) · coev_{V,W}.
GradedMorphism cocomposition(const QuadraticAlgebra& u,
                             const QuadraticAlgebra& v,
                             const QuadraticAlgebra& w, int top_degree,
                             Budget& budget);

/// Same, reusing already-built pieces: uw = cohom(U,W), vw = cohom(V,W),
/// uv = cohom(U,V).
GradedMorphism cocomposition_from_parts(const CohomObject& uw,
                                        const CohomObject& vw,
                                        const CohomObject& uv);

/// v: coend(B) -> K[u], the transposition of the canonical B -> K[u]∘B.
/// `ch` must have equal parameter and target.
GradedMorphism counit_v(const CohomObject& ch, Budget& budget);

/// coend(B) = cohom(B,B) with cocomposition and counit.
struct CoendComonoid {
    CohomObject ch;
    GradedMorphism d;  // coend(B) -> coend(B) ∘ coend(B)
    GradedMorphism v;  // coend(B) -> K[u]
};
CoendComonoid coend_comonoid(const QuadraticAlgebra& b, int top_degree,
                             Budget& budget);

/// Coassociativity and counit laws for (delta, eps) through `degree`,
/// checked columnwise.  Returns one witness line per violation.
std::vector<std::string> check_comonoid(const GradedMorphism& delta,
                                        const GradedMorphism& eps, int degree);

/// (f∘f)·Δ_src = Δ_tgt·f and ε_tgt·f = ε_src through `degree`.
std::vector<std::string> check_comonoid_morphism(const GradedMorphism& f,
                                                 const GradedMorphism& d_src,
                                                 const GradedMorphism& e_src,
                                                 const GradedMorphism& d_tgt,
                                                 const GradedMorphism& e_tgt,
                                                 int degree);

/// κ: cohom(V∘V′, W∘W′) -> cohom(V,W) ∘ cohom(V′,W′), the transposition of
/// the middle-swapped pair of coevaluations.
struct KappaData {
    CohomObject big;    // cohom(V∘V′, W∘W′)
    CohomObject left;   // cohom(V, W)
    CohomObject right;  // cohom(V′, W′)
    GradedAlgebraPtr z;  // cohom(V,W)_t ∘ cohom(V′,W′)_t
    GradedMorphism kappa;
};
KappaData kappa(const QuadraticAlgebra& v, const QuadraticAlgebra& vp,
                const QuadraticAlgebra& w, const QuadraticAlgebra& wp,
                int top_degree, Budget& budget);

/// The comonoid-morphism squares for κ at W=V, W′=V′:
/// coend(V∘V′) -> coend(V) ∘ coend(V′), checked columnwise through
/// `top_degree` (the tensor-product comonoid structure on the target is
/// applied factorwise, never materialized).
std::vector<std::string> check_kappa_comonoid_morphism(
    const QuadraticAlgebra& v, const QuadraticAlgebra& vp, int top_degree,
    Budget& budget);

}  // namespace maninkit
