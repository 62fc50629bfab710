#pragma once

#include "maninkit/graded.hpp"

namespace maninkit {

/// The permutation matrix on the four-fold generator tensor space that swaps
/// the middle factors: (a1, a2, b1, b2) -> (a1, b1, a2, b2), where the a's
/// run over na letters and the b's over nb.  Source indices follow
/// a1 a2 b1 b2 lexicographically; targets (a1 b1)(a2 b2).
Matrix middle_swap(const Field& f, int na, int nb);

/// The same middle swap with four independent factor sizes:
/// (x1, x2, x3, x4) -> (x1, x3, x2, x4).
Matrix middle_swap4(const Field& f, int d1, int d2, int d3, int d4);

/// Generators V_A (x) V_B; relations: the middle-swap image of
/// R_A (x) (V_B tensor V_B)  +  (V_A tensor V_A) (x) R_B.
QuadraticAlgebra white_product(const QuadraticAlgebra& a,
                               const QuadraticAlgebra& b);

/// Generators V_A (x) V_B; relations: the middle-swap image of R_A (x) R_B.
QuadraticAlgebra black_product(const QuadraticAlgebra& a,
                               const QuadraticAlgebra& b);

/// Generators the dual basis; relations the annihilator of R_A under the
/// coordinatewise pairing of tensor squares.
QuadraticAlgebra quadratic_dual(const QuadraticAlgebra& a);

/// Presentation of the tensor-product algebra: generators of both factors,
/// their relations, plus commutators between generators of different
/// factors.
QuadraticAlgebra tensor_presentation(const QuadraticAlgebra& a,
                                     const QuadraticAlgebra& b);

/// The quadratic part of a graded algebra: generators C_1, relations the
/// kernel of  m_{1,1}: C_1 (x) C_1 -> C_2.  Needs at least two tabulated
/// degrees.
QuadraticAlgebra coreflection_G(const GradedAlgebra& t);

/// The counit of the coreflection at t: the extension of the degree-1
/// identity over the truncation of coreflection_G(t).  Its source is that
/// truncation.
GradedMorphism coreflection_counit(const GradedAlgebraPtr& t, Budget& budget);

}  // namespace maninkit
