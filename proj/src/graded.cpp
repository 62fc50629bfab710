#include "maninkit/graded.hpp"

#include <algorithm>
#include <sstream>

namespace maninkit {

namespace {

long long ipow_checked(int base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > (1LL << 50) / std::max(base, 1))
            throw BudgetError("tensor power dimension overflows any budget");
        r *= base;
    }
    return r;
}

std::string term_string(const Scalar& c, const std::string& monomial) {
    if (c.is_one()) return monomial;
    return c.to_string() + "*" + monomial;
}

}  // namespace

QuadraticAlgebra QuadraticAlgebra::make(const Field& f,
                                        std::vector<std::string> labels,
                                        Subspace relations) {
    int n = static_cast<int>(labels.size());
    if (!(relations.field() == f))
        throw FieldMismatchError("relation subspace over the wrong field");
    if (relations.ambient_dim() != n * n)
        throw DimensionError(
            "relations must live in the tensor square of the generators (" +
            std::to_string(n * n) + " coordinates, got " +
            std::to_string(relations.ambient_dim()) + ")");
    return QuadraticAlgebra{f, std::move(labels), std::move(relations)};
}

GradedAlgebra::GradedAlgebra(Field field, std::vector<int> dims,
                             std::vector<std::vector<Matrix>> mult,
                             std::vector<std::string> degree1_labels)
    : field_(field),
      dims_(std::move(dims)),
      mult_(std::move(mult)),
      labels_(std::move(degree1_labels)) {
    if (dims_.empty() || dims_[0] != 1)
        throw ValidationError("degree 0 must be one-dimensional");
    int n = top_degree();
    if (static_cast<int>(mult_.size()) != n + 1)
        throw ValidationError("multiplication table has wrong outer size");
    for (int i = 0; i <= n; ++i) {
        if (static_cast<int>(mult_[i].size()) != n - i + 1)
            throw ValidationError("multiplication table has wrong row size");
        for (int j = 0; i + j <= n; ++j) {
            const Matrix& m = mult_[i][j];
            if (m.rows() != dims_[i + j] || m.cols() != dims_[i] * dims_[j])
                throw ValidationError("multiplication block (" +
                                      std::to_string(i) + ", " +
                                      std::to_string(j) + ") has wrong shape");
        }
    }
}

GradedAlgebra::GradedAlgebra(Field field, std::vector<int> dims,
                             std::vector<std::string> degree1_labels,
                             GradedAlgebraPtr factor_a,
                             GradedAlgebraPtr factor_b)
    : field_(field),
      dims_(std::move(dims)),
      labels_(std::move(degree1_labels)),
      factor_a_(std::move(factor_a)),
      factor_b_(std::move(factor_b)) {
    int n = top_degree();
    mult_.resize(n + 1);
    block_ready_.resize(n + 1);
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; i + j <= n; ++j)
            mult_[i].push_back(Matrix(field_, 0, 0));
        block_ready_[i].assign(n - i + 1, 0);
    }
}

const Matrix& GradedAlgebra::mult(int i, int j) const {
    if (i < 0 || j < 0 || i + j > top_degree())
        throw InternalError("multiplication degree out of range");
    if (factor_a_ && !block_ready_[i][j]) {
        long long rows = dims_[i + j];
        long long cols = static_cast<long long>(dims_[i]) * dims_[j];
        if (rows * cols > kDenseBlockLimit)
            throw InternalError(
                "dense multiplication block (" + std::to_string(i) + ", " +
                std::to_string(j) + ") of a matched-degree product would hold " +
                std::to_string(rows * cols) +
                " entries; use multiply() instead");
        const GradedAlgebra& fa = *factor_a_;
        const GradedAlgebra& fb = *factor_b_;
        Matrix m(field_, static_cast<int>(rows), static_cast<int>(cols));
        const Matrix& ma = fa.mult(i, j);
        const Matrix& mb = fb.mult(i, j);
        for (int c = 0; c < ma.rows(); ++c)
            for (int ca = 0; ca < ma.cols(); ++ca) {
                const Scalar& va = ma.at(c, ca);
                if (va.is_zero()) continue;
                int a1 = ca / fa.dim(j), a2 = ca % fa.dim(j);
                for (int d = 0; d < mb.rows(); ++d)
                    for (int cb = 0; cb < mb.cols(); ++cb) {
                        const Scalar& vb = mb.at(d, cb);
                        if (vb.is_zero()) continue;
                        int b1 = cb / fb.dim(j), b2 = cb % fb.dim(j);
                        int row = c * fb.dim(i + j) + d;
                        int col = (a1 * fb.dim(i) + b1) *
                                      (fa.dim(j) * fb.dim(j)) +
                                  (a2 * fb.dim(j) + b2);
                        m.at(row, col) = va * vb;
                    }
            }
        mult_[i][j] = std::move(m);
        block_ready_[i][j] = 1;
    }
    return mult_[i][j];
}

Vec GradedAlgebra::multiply(int i, const Vec& x, int j, const Vec& y) const {
    if (static_cast<int>(x.size()) != dims_[i] ||
        static_cast<int>(y.size()) != dims_[j])
        throw DimensionError("multiply: component size mismatch");
    int k = i + j;
    if (factor_a_) {
        const GradedAlgebra& fa = *factor_a_;
        const GradedAlgebra& fb = *factor_b_;
        Vec out(static_cast<std::size_t>(dims_[k]), Scalar::zero(field_));
        for (int b1 = 0; b1 < fb.dim(i); ++b1)
            for (int b2 = 0; b2 < fb.dim(j); ++b2) {
                Vec xa(static_cast<std::size_t>(fa.dim(i)),
                       Scalar::zero(field_));
                Vec ya(static_cast<std::size_t>(fa.dim(j)),
                       Scalar::zero(field_));
                bool nzx = false, nzy = false;
                for (int a = 0; a < fa.dim(i); ++a) {
                    xa[a] = x[static_cast<std::size_t>(a) * fb.dim(i) + b1];
                    nzx = nzx || !xa[a].is_zero();
                }
                for (int a = 0; a < fa.dim(j); ++a) {
                    ya[a] = y[static_cast<std::size_t>(a) * fb.dim(j) + b2];
                    nzy = nzy || !ya[a].is_zero();
                }
                if (!nzx || !nzy) continue;
                Vec u = fa.multiply(i, xa, j, ya);
                Vec eb1(static_cast<std::size_t>(fb.dim(i)),
                        Scalar::zero(field_));
                Vec eb2(static_cast<std::size_t>(fb.dim(j)),
                        Scalar::zero(field_));
                eb1[b1] = Scalar::one(field_);
                eb2[b2] = Scalar::one(field_);
                Vec w = fb.multiply(i, eb1, j, eb2);
                for (int c = 0; c < fa.dim(k); ++c) {
                    if (u[c].is_zero()) continue;
                    for (int d = 0; d < fb.dim(k); ++d) {
                        if (w[d].is_zero()) continue;
                        std::size_t pos =
                            static_cast<std::size_t>(c) * fb.dim(k) + d;
                        out[pos] = out[pos] + u[c] * w[d];
                    }
                }
            }
        return out;
    }
    Vec t(static_cast<std::size_t>(dims_[i]) * dims_[j], Scalar::zero(field_));
    for (int a = 0; a < dims_[i]; ++a) {
        if (x[a].is_zero()) continue;
        for (int b = 0; b < dims_[j]; ++b) {
            if (y[b].is_zero()) continue;
            t[static_cast<std::size_t>(a) * dims_[j] + b] = x[a] * y[b];
        }
    }
    return mult(i, j).apply(t);
}

Vec GradedAlgebra::apply_mult(int i, int j, const Vec& w) const {
    if (i < 0 || j < 0 || i + j > top_degree())
        throw InternalError("multiplication degree out of range");
    if (static_cast<long long>(w.size()) !=
        static_cast<long long>(dims_[i]) * dims_[j])
        throw DimensionError("apply_mult: tensor component size mismatch");
    if (!factor_a_) return mult(i, j).apply(w);
    const GradedAlgebra& fa = *factor_a_;
    const GradedAlgebra& fb = *factor_b_;
    int k = i + j;
    Vec out(static_cast<std::size_t>(dims_[k]), Scalar::zero(field_));
    for (int b1 = 0; b1 < fb.dim(i); ++b1)
        for (int b2 = 0; b2 < fb.dim(j); ++b2) {
            Vec ws(static_cast<std::size_t>(fa.dim(i)) * fa.dim(j),
                   Scalar::zero(field_));
            bool nz = false;
            for (int a1 = 0; a1 < fa.dim(i); ++a1)
                for (int a2 = 0; a2 < fa.dim(j); ++a2) {
                    std::size_t src =
                        (static_cast<std::size_t>(a1) * fb.dim(i) + b1) *
                            dims_[j] +
                        static_cast<std::size_t>(a2) * fb.dim(j) + b2;
                    ws[static_cast<std::size_t>(a1) * fa.dim(j) + a2] = w[src];
                    nz = nz || !w[src].is_zero();
                }
            if (!nz) continue;
            Vec u = fa.apply_mult(i, j, ws);
            Vec eb1(static_cast<std::size_t>(fb.dim(i)), Scalar::zero(field_));
            Vec eb2(static_cast<std::size_t>(fb.dim(j)), Scalar::zero(field_));
            eb1[b1] = Scalar::one(field_);
            eb2[b2] = Scalar::one(field_);
            Vec wb = fb.multiply(i, eb1, j, eb2);
            for (int c = 0; c < fa.dim(k); ++c) {
                if (u[c].is_zero()) continue;
                for (int d = 0; d < fb.dim(k); ++d) {
                    if (wb[d].is_zero()) continue;
                    std::size_t pos =
                        static_cast<std::size_t>(c) * fb.dim(k) + d;
                    out[pos] = out[pos] + u[c] * wb[d];
                }
            }
        }
    return out;
}

std::string GradedAlgebra::basis_label(int k, int index) const {
    if (k == 0) return "1";
    if (levels_ && presentation_) {
        long long col = levels_->monomials[k][index];
        int n = presentation_->num_generators();
        std::vector<int> letters(k);
        for (int pos = k - 1; pos >= 0; --pos) {
            letters[pos] = static_cast<int>(col % n);
            col /= n;
        }
        bool ascii_short = true;
        for (const auto& l : presentation_->labels)
            if (l.size() != 1) ascii_short = false;
        std::string s;
        for (int pos = 0; pos < k; ++pos) {
            if (pos && !ascii_short) s += ".";
            s += presentation_->labels[letters[pos]];
        }
        return s;
    }
    if (k == 1 && index < static_cast<int>(labels_.size()))
        return labels_[index];
    return "[" + std::to_string(k) + ":" + std::to_string(index) + "]";
}

const QuadraticAlgebra& GradedAlgebra::presentation() const {
    if (!presentation_)
        throw InternalError("graded algebra carries no quadratic presentation");
    return *presentation_;
}

const TruncationLevels& GradedAlgebra::levels() const {
    if (!levels_)
        throw InternalError("graded algebra carries no truncation data");
    return *levels_;
}

GradedAlgebraPtr truncate(const QuadraticAlgebra& a, int top_degree,
                          Budget& budget) {
    if (top_degree < 1)
        throw InputError("truncation needs at least degree 1");
    const Field& f = a.field;
    int n = a.num_generators();

    auto levels = std::make_shared<TruncationLevels>();
    levels->ideal.push_back(Subspace::zero(f, 1));
    levels->ideal.push_back(Subspace::zero(f, n));
    for (int k = 2; k <= top_degree; ++k) {
        long long ambient = ipow_checked(n, k);
        long long rows = static_cast<long long>(n) *
                             levels->ideal.back().dim() +
                         static_cast<long long>(a.relations.dim()) *
                             ipow_checked(n, k - 2);
        budget.charge(rows * ambient);
        Subspace left = Subspace::kron(
            Subspace::full(f, n), levels->ideal.back());
        Subspace right = Subspace::kron(
            a.relations, Subspace::full(f, static_cast<int>(ipow_checked(n, k - 2))));
        levels->ideal.push_back(left.sum(right));
    }

    std::vector<int> dims(top_degree + 1);
    levels->monomials.resize(top_degree + 1);
    levels->coset_pos.resize(top_degree + 1);
    for (int k = 0; k <= top_degree; ++k) {
        long long ambient = k == 0 ? 1 : ipow_checked(n, k);
        const Subspace& u = levels->ideal[k];
        std::vector<bool> is_pivot(ambient, false);
        for (int p : u.pivots()) is_pivot[p] = true;
        levels->coset_pos[k].assign(ambient, -1);
        for (long long c = 0; c < ambient; ++c)
            if (!is_pivot[c]) {
                levels->coset_pos[k][c] =
                    static_cast<int>(levels->monomials[k].size());
                levels->monomials[k].push_back(c);
            }
        dims[k] = static_cast<int>(levels->monomials[k].size());
    }

    // coords of the coset of basis column t of the k-fold tensor power.
    auto coset_coords = [&](int k, long long t) {
        const Subspace& u = levels->ideal[k];
        Vec out(dims[k], Scalar::zero(f));
        int pos = levels->coset_pos[k][t];
        if (pos >= 0) {
            out[pos] = Scalar::one(f);
            return out;
        }
        // t is a pivot column; in reduced echelon form the row with pivot t
        // has support only on t and non-pivot columns.
        int row = static_cast<int>(
            std::lower_bound(u.pivots().begin(), u.pivots().end(),
                             static_cast<int>(t)) -
            u.pivots().begin());
        for (std::size_t m = 0; m < levels->monomials[k].size(); ++m) {
            long long c = levels->monomials[k][m];
            out[m] = -u.basis().at(row, static_cast<int>(c));
        }
        return out;
    };

    std::vector<std::vector<Matrix>> mult(top_degree + 1);
    for (int i = 0; i <= top_degree; ++i)
        for (int j = 0; i + j <= top_degree; ++j) {
            long long pj = ipow_checked(n, j);
            budget.charge(static_cast<long long>(dims[i]) * dims[j] *
                          dims[i + j]);
            Matrix m(f, dims[i + j], dims[i] * dims[j]);
            for (int ai = 0; ai < dims[i]; ++ai)
                for (int bj = 0; bj < dims[j]; ++bj) {
                    long long t =
                        levels->monomials[i][ai] * pj + levels->monomials[j][bj];
                    Vec coords = coset_coords(i + j, t);
                    for (int r = 0; r < dims[i + j]; ++r)
                        m.at(r, ai * dims[j] + bj) = coords[r];
                }
            mult[i].push_back(std::move(m));
        }

    auto out = std::make_shared<GradedAlgebra>(
        f, dims, std::move(mult), a.labels);
    out->presentation_ = a;
    out->levels_ = levels;
    return out;
}

GradedAlgebraPtr degreewise_product(const GradedAlgebraPtr& a,
                                    const GradedAlgebraPtr& b) {
    if (!(a->field() == b->field()))
        throw FieldMismatchError("product of algebras over different fields");
    const Field& f = a->field();
    int top = std::min(a->top_degree(), b->top_degree());
    std::vector<int> dims(top + 1);
    for (int k = 0; k <= top; ++k) dims[k] = a->dim(k) * b->dim(k);

    std::vector<std::string> labels;
    for (int x = 0; x < a->dim(1); ++x)
        for (int y = 0; y < b->dim(1); ++y)
            labels.push_back("(" + a->basis_label(1, x) + "|" +
                             b->basis_label(1, y) + ")");
    return std::shared_ptr<const GradedAlgebra>(new GradedAlgebra(
        f, std::move(dims), std::move(labels), a, b));
}

int tensor_offset(const GradedAlgebra& a, const GradedAlgebra& b, int k,
                  int i) {
    int off = 0;
    for (int t = k; t > i; --t) off += a.dim(t) * b.dim(k - t);
    return off;
}

GradedAlgebraPtr tensor_product(const GradedAlgebraPtr& a,
                                const GradedAlgebraPtr& b) {
    if (!(a->field() == b->field()))
        throw FieldMismatchError("product of algebras over different fields");
    const Field& f = a->field();
    int top = std::min(a->top_degree(), b->top_degree());
    std::vector<int> dims(top + 1, 0);
    for (int k = 0; k <= top; ++k)
        for (int i = k; i >= 0; --i) dims[k] += a->dim(i) * b->dim(k - i);

    std::vector<std::vector<Matrix>> mult(top + 1);
    for (int k = 0; k <= top; ++k)
        for (int l = 0; k + l <= top; ++l) {
            Matrix m(f, dims[k + l], dims[k] * dims[l]);
            for (int i = k; i >= 0; --i)
                for (int j = l; j >= 0; --j) {
                    const Matrix& ma = a->mult(i, j);
                    const Matrix& mb = b->mult(k - i, l - j);
                    int col_off_k = tensor_offset(*a, *b, k, i);
                    int col_off_l = tensor_offset(*a, *b, l, j);
                    int row_off = tensor_offset(*a, *b, k + l, i + j);
                    for (int ra = 0; ra < ma.rows(); ++ra)
                        for (int ca = 0; ca < ma.cols(); ++ca) {
                            const Scalar& va = ma.at(ra, ca);
                            if (va.is_zero()) continue;
                            int a1 = ca / a->dim(j), a2 = ca % a->dim(j);
                            for (int rb = 0; rb < mb.rows(); ++rb)
                                for (int cb = 0; cb < mb.cols(); ++cb) {
                                    const Scalar& vb = mb.at(rb, cb);
                                    if (vb.is_zero()) continue;
                                    int b1 = cb / b->dim(l - j);
                                    int b2 = cb % b->dim(l - j);
                                    int row = row_off +
                                              ra * b->dim(k + l - i - j) + rb;
                                    int colk = col_off_k +
                                               a1 * b->dim(k - i) + b1;
                                    int coll = col_off_l +
                                               a2 * b->dim(l - j) + b2;
                                    m.at(row, colk * dims[l] + coll) = va * vb;
                                }
                        }
                }
            mult[k].push_back(std::move(m));
        }

    std::vector<std::string> labels;
    for (int x = 0; x < a->dim(1); ++x) labels.push_back(a->basis_label(1, x));
    for (int y = 0; y < b->dim(1); ++y) labels.push_back(b->basis_label(1, y));
    return std::make_shared<GradedAlgebra>(f, std::move(dims), std::move(mult),
                                           std::move(labels));
}

GradedMorphism::GradedMorphism(GradedAlgebraPtr source, GradedAlgebraPtr target,
                               std::vector<Matrix> mats)
    : source_(std::move(source)), target_(std::move(target)),
      mats_(std::move(mats)) {
    int top = std::min(source_->top_degree(), target_->top_degree());
    if (static_cast<int>(mats_.size()) != top + 1)
        throw ValidationError("graded morphism needs one matrix per degree");
    for (int k = 0; k <= top; ++k)
        if (mats_[k].rows() != target_->dim(k) ||
            mats_[k].cols() != source_->dim(k))
            throw ValidationError("graded morphism degree " +
                                  std::to_string(k) + " has wrong shape");
}

GradedMorphism GradedMorphism::identity(const GradedAlgebraPtr& a) {
    std::vector<Matrix> mats;
    for (int k = 0; k <= a->top_degree(); ++k)
        mats.push_back(Matrix::identity(a->field(), a->dim(k)));
    return GradedMorphism(a, a, std::move(mats));
}

GradedMorphism GradedMorphism::compose(const GradedMorphism& inner) const {
    if (inner.target_->dims() != source_->dims())
        throw DimensionError("graded morphism composition shape mismatch");
    int top = std::min(top_degree(), inner.top_degree());
    std::vector<Matrix> mats;
    for (int k = 0; k <= top; ++k) mats.push_back(mats_[k] * inner.mats_[k]);
    return GradedMorphism(inner.source_, target_, std::move(mats));
}

bool GradedMorphism::equal_upto(const GradedMorphism& o, int degree) const {
    int top = std::min({degree, top_degree(), o.top_degree()});
    for (int k = 0; k <= top; ++k)
        if (!(mats_[k] == o.mats_[k])) return false;
    return true;
}

GradedMorphism degreewise_tensor(const GradedMorphism& f,
                                 const GradedMorphism& g,
                                 GradedAlgebraPtr source,
                                 GradedAlgebraPtr target) {
    int top = std::min(source->top_degree(), target->top_degree());
    std::vector<Matrix> mats;
    for (int k = 0; k <= top; ++k)
        mats.push_back(Matrix::kron(f.at(k), g.at(k)));
    return GradedMorphism(std::move(source), std::move(target),
                          std::move(mats));
}

MorphismFromDegree1 morphism_from_degree1(const GradedAlgebraPtr& source,
                                          const GradedAlgebraPtr& target,
                                          const Matrix& f1) {
    MorphismFromDegree1 result;
    if (!source->has_presentation())
        throw InputError(
            "degree-1 extension needs a source with a quadratic presentation");
    const QuadraticAlgebra& pres = source->presentation();
    int n = pres.num_generators();
    if (f1.rows() != target->dim(1) || f1.cols() != n)
        throw DimensionError("degree-1 map has wrong shape");
    const Field& f = source->field();

    // Well-definedness: the target multiplication must kill the image of
    // every relation.  By associativity this settles all higher degrees.
    // The two-fold image is accumulated term by term; kron(f1, f1) itself
    // can be enormous for many-generator sources.
    int t1 = target->dim(1);
    for (int r = 0; r < pres.relations.dim(); ++r) {
        Vec rel = pres.relations.basis().row(r);
        Vec pair(static_cast<std::size_t>(t1) * t1, Scalar::zero(f));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Scalar& cv = rel[static_cast<std::size_t>(i) * n + j];
                if (cv.is_zero()) continue;
                for (int s = 0; s < t1; ++s) {
                    if (f1.at(s, i).is_zero()) continue;
                    for (int t = 0; t < t1; ++t) {
                        if (f1.at(t, j).is_zero()) continue;
                        std::size_t pos = static_cast<std::size_t>(s) * t1 + t;
                        pair[pos] = pair[pos] + cv * f1.at(s, i) * f1.at(t, j);
                    }
                }
            }
        Vec img = target->apply_mult(1, 1, pair);
        bool zero = true;
        for (const Scalar& s : img)
            if (!s.is_zero()) zero = false;
        if (zero) continue;
        std::ostringstream w;
        w << "relation ";
        bool first = true;
        for (int c = 0; c < n * n; ++c) {
            if (rel[c].is_zero()) continue;
            std::string mono = pres.labels[c / n] + "." + pres.labels[c % n];
            w << (first ? "" : " + ") << term_string(rel[c], mono);
            first = false;
        }
        w << " maps to a nonzero product in degree 2";
        result.witness = w.str();
        return result;
    }

    int top = std::min(source->top_degree(), target->top_degree());
    std::vector<Matrix> mats;
    mats.push_back(Matrix::identity(f, 1));
    if (top >= 1) mats.push_back(f1);
    const TruncationLevels& lv = source->levels();
    for (int k = 2; k <= top; ++k) {
        Matrix m(f, target->dim(k), source->dim(k));
        for (int idx = 0; idx < source->dim(k); ++idx) {
            long long col = lv.monomials[k][idx];
            std::vector<int> letters(k);
            for (int pos = k - 1; pos >= 0; --pos) {
                letters[pos] = static_cast<int>(col % n);
                col /= n;
            }
            Vec t = f1.col(letters[0]);
            for (int pos = 1; pos < k; ++pos)
                t = target->multiply(pos, t, 1, f1.col(letters[pos]));
            for (int r = 0; r < target->dim(k); ++r) m.at(r, idx) = t[r];
        }
        mats.push_back(std::move(m));
    }
    result.morphism = GradedMorphism(source, target, std::move(mats));
    return result;
}

std::vector<std::string> check_algebra_morphism(const GradedMorphism& f) {
    std::vector<std::string> bad;
    const GradedAlgebra& a = *f.source();
    const GradedAlgebra& b = *f.target();
    if (!(f.at(0) == Matrix::identity(a.field(), 1)))
        bad.push_back("degree 0 does not send the unit to the unit");
    for (int i = 0; i <= f.top_degree(); ++i)
        for (int j = 0; i + j <= f.top_degree(); ++j) {
            Matrix lhs = f.at(i + j) * a.mult(i, j);
            Matrix rhs = b.mult(i, j) * Matrix::kron(f.at(i), f.at(j));
            if (!(lhs == rhs))
                bad.push_back("multiplication is not preserved in degrees (" +
                              std::to_string(i) + ", " + std::to_string(j) +
                              ")");
        }
    return bad;
}

std::vector<std::string> check_graded_algebra(const GradedAlgebra& a) {
    std::vector<std::string> bad;
    int top = a.top_degree();
    for (int k = 0; k <= top; ++k) {
        if (!(a.mult(0, k) == Matrix::identity(a.field(), a.dim(k))))
            bad.push_back("left unit law fails in degree " +
                          std::to_string(k));
        if (!(a.mult(k, 0) == Matrix::identity(a.field(), a.dim(k))))
            bad.push_back("right unit law fails in degree " +
                          std::to_string(k));
    }
    for (int i = 0; i <= top; ++i)
        for (int j = 0; i + j <= top; ++j)
            for (int k = 0; i + j + k <= top; ++k) {
                Matrix lhs =
                    a.mult(i + j, k) *
                    Matrix::kron(a.mult(i, j),
                                 Matrix::identity(a.field(), a.dim(k)));
                Matrix rhs =
                    a.mult(i, j + k) *
                    Matrix::kron(Matrix::identity(a.field(), a.dim(i)),
                                 a.mult(j, k));
                if (!(lhs == rhs))
                    bad.push_back("associativity fails in degrees (" +
                                  std::to_string(i) + ", " +
                                  std::to_string(j) + ", " +
                                  std::to_string(k) + ")");
            }
    return bad;
}

std::vector<std::string> check_generated_in_degree_one(
    const GradedAlgebra& a) {
    std::vector<std::string> bad;
    for (int k = 1; k <= a.top_degree(); ++k)
        if (a.mult(1, k - 1).rank() != a.dim(k))
            bad.push_back("degree " + std::to_string(k) +
                          " is not spanned by products of degree-1 elements");
    return bad;
}

}  // namespace maninkit
