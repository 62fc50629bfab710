#pragma once

#include "maninkit/quadalg.hpp"

namespace maninkit {

/// n generators, no relations.
QuadraticAlgebra free_algebra(const Field& f, int n);

/// Generators x, y; relation  x(x)y - q * y(x)x.  q must be nonzero.
QuadraticAlgebra quantum_plane(const Field& f, const Scalar& q);

/// One generator t; relation t(x)t.
QuadraticAlgebra dual_numbers(const Field& f);

/// One generator u, no relations: the polynomial ring in one variable.  This
/// is the unit for the degreewise product.
QuadraticAlgebra polynomial_line(const Field& f);

struct NamedAlgebra {
    std::string name;
    QuadraticAlgebra algebra;
};

/// The stock examples the regression suites cycle through.  Quantum planes
/// whose parameter collapses to zero or to an earlier parameter in f are
/// dropped, so the list is field-dependent.
std::vector<NamedAlgebra> standard_corpus(const Field& f);

}  // namespace maninkit
