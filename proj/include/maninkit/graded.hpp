#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "maninkit/subspace.hpp"

namespace maninkit {

inline constexpr long long kDefaultBudget = 10'000'000;

/// A work-amount guard for truncation and enumeration: charges accumulate in
/// rough scalar-cell units and overruns raise BudgetError.
class Budget {
  public:
    explicit Budget(long long limit = kDefaultBudget) : limit_(limit) {}
    void charge(long long amount) {
        used_ += amount;
        if (used_ > limit_)
            throw BudgetError("work estimate " + std::to_string(used_) +
                              " exceeds the budget of " +
                              std::to_string(limit_));
    }
    long long used() const { return used_; }
    long long limit() const { return limit_; }

  private:
    long long limit_;
    long long used_ = 0;
};

/// A quadratic presentation: generators (the degree-1 space, one basis
/// vector per label) and a relation subspace inside the two-fold tensor
/// square, index convention (i, j) -> i * n + j.
struct QuadraticAlgebra {
    Field field;
    std::vector<std::string> labels;
    Subspace relations;

    int num_generators() const { return static_cast<int>(labels.size()); }
    static QuadraticAlgebra make(const Field& f,
                                 std::vector<std::string> labels,
                                 Subspace relations);
};

class GradedAlgebra;
using GradedAlgebraPtr = std::shared_ptr<const GradedAlgebra>;

/// Per-degree data of a truncated quadratic algebra: the degree-k component
/// of the two-sided ideal, and the monomials whose cosets form the canonical
/// basis of the quotient (the non-pivot columns, in lexicographic order).
struct TruncationLevels {
    std::vector<Subspace> ideal;                    // per degree 0..N
    std::vector<std::vector<long long>> monomials;  // coset monomial columns
    std::vector<std::vector<int>> coset_pos;        // column -> coset index
                                                    // or -1 for pivots
};

/// Dense multiplication blocks of a matched-degree product larger than this
/// are never materialized; multiply() routes through the factors instead.
inline constexpr long long kDenseBlockLimit = 1'000'000;

/// A finite-dimensional graded algebra tabulated in degrees 0..top_degree
/// with a one-dimensional degree 0 spanned by the unit.  Multiplication is
/// given degreewise by matrices  mult(i,j): C_i (x) C_j -> C_{i+j}  in the
/// (a, b) -> a * dim(j) + b tensor index convention.
///
/// Matched-degree products keep pointers to their factors and fill
/// multiplication blocks lazily; blocks beyond kDenseBlockLimit are only
/// reachable through multiply().
class GradedAlgebra {
  public:
    GradedAlgebra(Field field, std::vector<int> dims,
                  std::vector<std::vector<Matrix>> mult,
                  std::vector<std::string> degree1_labels);

    const Field& field() const { return field_; }
    int top_degree() const { return static_cast<int>(dims_.size()) - 1; }
    int dim(int k) const { return dims_[k]; }
    const std::vector<int>& dims() const { return dims_; }
    const Matrix& mult(int i, int j) const;
    const std::vector<std::string>& degree1_labels() const { return labels_; }

    /// x in degree i times y in degree j.
    Vec multiply(int i, const Vec& x, int j, const Vec& y) const;

    /// mult(i,j) applied to a flattened tensor w in C_i (x) C_j, routed
    /// through the factors of a matched-degree product so the dense block
    /// is never materialized.
    Vec apply_mult(int i, int j, const Vec& w) const;

    /// A printable name for basis vector `index` of degree k (monomial
    /// names on truncations, positional names otherwise).
    std::string basis_label(int k, int index) const;

    bool has_presentation() const { return presentation_.has_value(); }
    const QuadraticAlgebra& presentation() const;
    const TruncationLevels& levels() const;

  private:
    friend GradedAlgebraPtr truncate(const QuadraticAlgebra& a, int top_degree,
                                     Budget& budget);
    friend GradedAlgebraPtr degreewise_product(const GradedAlgebraPtr& a,
                                               const GradedAlgebraPtr& b);
    // Product view: blocks start empty and are filled on demand.
    GradedAlgebra(Field field, std::vector<int> dims,
                  std::vector<std::string> degree1_labels,
                  GradedAlgebraPtr factor_a, GradedAlgebraPtr factor_b);

    Field field_;
    std::vector<int> dims_;
    mutable std::vector<std::vector<Matrix>> mult_;
    mutable std::vector<std::vector<char>> block_ready_;
    std::vector<std::string> labels_;
    std::optional<QuadraticAlgebra> presentation_;
    std::shared_ptr<const TruncationLevels> levels_;
    GradedAlgebraPtr factor_a_;
    GradedAlgebraPtr factor_b_;
};

/// The graded quotient of the tensor algebra on the presentation's
/// generators by its relation ideal, tabulated through `top_degree`.
/// Degree-k cosets are represented on the non-pivot monomials of the
/// reduced echelon basis of the ideal component.
GradedAlgebraPtr truncate(const QuadraticAlgebra& a, int top_degree,
                          Budget& budget);

/// The matched-degree product: (A * B)_k = A_k (x) B_k with componentwise
/// multiplication.  Degree-k basis index (a, b) -> a * dim B_k + b.
GradedAlgebraPtr degreewise_product(const GradedAlgebraPtr& a,
                                    const GradedAlgebraPtr& b);

/// The total-degree product: (A (x) B)_k = sum over i of A_i (x) B_{k-i},
/// blocks in descending first-factor degree i (so degree 1 lists the A
/// generators before the B generators), componentwise multiplication with
/// no signs.
GradedAlgebraPtr tensor_product(const GradedAlgebraPtr& a,
                                const GradedAlgebraPtr& b);

/// Offset of the A_i (x) B_{k-i} block inside (A (x) B)_k.
int tensor_offset(const GradedAlgebra& a, const GradedAlgebra& b, int k,
                  int i);

/// A degreewise linear map between graded algebras (not necessarily an
/// algebra morphism; see check_algebra_morphism).
class GradedMorphism {
  public:
    GradedMorphism(GradedAlgebraPtr source, GradedAlgebraPtr target,
                   std::vector<Matrix> mats);
    static GradedMorphism identity(const GradedAlgebraPtr& a);

    const GradedAlgebraPtr& source() const { return source_; }
    const GradedAlgebraPtr& target() const { return target_; }
    int top_degree() const { return static_cast<int>(mats_.size()) - 1; }
    const Matrix& at(int k) const { return mats_[k]; }
    const Matrix& degree1() const { return mats_[1]; }

    /// this after inner.
    GradedMorphism compose(const GradedMorphism& inner) const;
    bool equal_upto(const GradedMorphism& o, int degree) const;

  private:
    GradedAlgebraPtr source_;
    GradedAlgebraPtr target_;
    std::vector<Matrix> mats_;
};

/// (f * g)_k = f_k (x) g_k between matched-degree products.
GradedMorphism degreewise_tensor(const GradedMorphism& f,
                                 const GradedMorphism& g,
                                 GradedAlgebraPtr source,
                                 GradedAlgebraPtr target);

/// Extends a degree-1 map to a full graded morphism by multiplying out
/// source coset monomials in the target.  The source must carry a quadratic
/// presentation.  Valid iff the target multiplication kills the image of
/// every relation; on failure `morphism` is empty and `witness` names a
/// violating relation.
struct MorphismFromDegree1 {
    std::optional<GradedMorphism> morphism;
    std::string witness;
};
MorphismFromDegree1 morphism_from_degree1(const GradedAlgebraPtr& source,
                                          const GradedAlgebraPtr& target,
                                          const Matrix& f1);

/// Degreewise commutation with multiplication and unit preservation.
/// Returns violation witnesses; empty means f is an algebra morphism.
std::vector<std::string> check_algebra_morphism(const GradedMorphism& f);

/// Unit laws and associativity of the tabulated multiplication.
std::vector<std::string> check_graded_algebra(const GradedAlgebra& a);

/// Certifies that every degree is spanned by products of degree-1 elements
/// (so algebra morphisms out of `a` are determined by their degree-1 part).
std::vector<std::string> check_generated_in_degree_one(const GradedAlgebra& a);

}  // namespace maninkit
