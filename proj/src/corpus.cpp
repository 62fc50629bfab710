#include "maninkit/corpus.hpp"

namespace maninkit {

QuadraticAlgebra free_algebra(const Field& f, int n) {
    if (n < 0) throw InputError("generator count must be nonnegative");
    std::vector<std::string> labels;
    static const char* kShort[] = {"x", "y", "z"};
    for (int i = 0; i < n; ++i)
        labels.push_back(n <= 3 ? kShort[i] : "x" + std::to_string(i + 1));
    return QuadraticAlgebra::make(f, std::move(labels),
                                  Subspace::zero(f, n * n));
}

QuadraticAlgebra quantum_plane(const Field& f, const Scalar& q) {
    if (!(q.field() == f))
        throw FieldMismatchError("quantum parameter from the wrong field");
    if (q.is_zero()) throw InputError("quantum parameter must be nonzero");
    // x(x)y - q y(x)x in coordinates (x,x),(x,y),(y,x),(y,y).
    Vec rel{Scalar::zero(f), Scalar::one(f), Scalar::zero(f) - q,
            Scalar::zero(f)};
    return QuadraticAlgebra::make(f, {"x", "y"},
                                  Subspace::span(f, {rel}, 4));
}

QuadraticAlgebra dual_numbers(const Field& f) {
    return QuadraticAlgebra::make(
        f, {"t"}, Subspace::span(f, {Vec{Scalar::one(f)}}, 1));
}

QuadraticAlgebra polynomial_line(const Field& f) {
    return QuadraticAlgebra::make(f, {"u"}, Subspace::zero(f, 1));
}

std::vector<NamedAlgebra> standard_corpus(const Field& f) {
    std::vector<NamedAlgebra> out;
    out.push_back({"free_2", free_algebra(f, 2)});
    std::vector<Scalar> seen;
    for (long long qi : {1, 2, 3}) {
        Scalar q = Scalar::of_int(f, qi);
        if (q.is_zero()) continue;
        bool dup = false;
        for (const auto& s : seen) dup = dup || s == q;
        if (dup) continue;
        seen.push_back(q);
        out.push_back({"qplane_q" + std::to_string(qi), quantum_plane(f, q)});
    }
    out.push_back({"dual_numbers", dual_numbers(f)});
    out.push_back({"poly_line", polynomial_line(f)});
    return out;
}

}  // namespace maninkit
