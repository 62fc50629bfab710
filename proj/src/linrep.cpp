#include "maninkit/linrep.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "maninkit/errors.hpp"
#include "maninkit/quadalg.hpp"

namespace maninkit {

namespace {

void require_same_field(const Field& a, const Field& b, const char* where) {
    if (!(a == b))
        throw FieldMismatchError(std::string(where) +
                                 ": operands over different fields");
}

std::string dims_tag(std::initializer_list<int> dims) {
    std::string out = "(";
    bool first = true;
    for (int d : dims) {
        if (!first) out += ",";
        out += std::to_string(d);
        first = false;
    }
    return out + ")";
}

/// A deterministic dense matrix with small varied entries, used as the
/// fixed companion in sampled naturality squares and as the dense member
/// of generating families over the rationals.
Matrix dense_sample(const Field& f, int rows, int cols, int seed) {
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.at(i, j) = Scalar::of_int(f, 1 + (i * 7 + j * 3 + seed) % 5);
    return m;
}

Matrix unit_matrix(const Field& f, int rows, int cols, int r, int c) {
    Matrix m(f, rows, cols);
    m.at(r, c) = Scalar::one(f);
    return m;
}

}  // namespace

Matrix ev_matrix(const FinVec& v, const FinVec& w) {
    require_same_field(v.field, w.field, "ev_matrix");
    Matrix m(v.field, w.dim, w.dim * v.dim * v.dim);
    for (int s = 0; s < w.dim; ++s)
        for (int t = 0; t < v.dim; ++t)
            m.at(s, (s * v.dim + t) * v.dim + t) = Scalar::one(v.field);
    return m;
}

Matrix theta_matrix(const Matrix& f, const FinVec& v, const FinVec& w) {
    if (f.rows() != w.dim * v.dim)
        throw DimensionError("theta_matrix: row count is not dim(W)*dim(V)");
    Matrix g(f.field(), w.dim, f.cols() * v.dim);
    for (int s = 0; s < w.dim; ++s)
        for (int t = 0; t < v.dim; ++t)
            for (int a = 0; a < f.cols(); ++a)
                g.at(s, a * v.dim + t) = f.at(s * v.dim + t, a);
    return g;
}

Matrix theta_inverse_matrix(const Matrix& g, const FinVec& v,
                            const FinVec& w) {
    if (g.rows() != w.dim || g.cols() % v.dim != 0)
        throw DimensionError("theta_inverse_matrix: shape mismatch");
    int n = g.cols() / v.dim;
    Matrix f(g.field(), w.dim * v.dim, n);
    for (int s = 0; s < w.dim; ++s)
        for (int t = 0; t < v.dim; ++t)
            for (int a = 0; a < n; ++a)
                f.at(s * v.dim + t, a) = g.at(s, a * v.dim + t);
    return f;
}

Matrix c_matrix(const FinVec& u, const FinVec& v, const FinVec& w) {
    require_same_field(u.field, v.field, "c_matrix");
    require_same_field(v.field, w.field, "c_matrix");
    int right = v.dim * u.dim;
    Matrix m(u.field, w.dim * u.dim, (w.dim * v.dim) * right);
    for (int s = 0; s < w.dim; ++s)
        for (int t = 0; t < v.dim; ++t)
            for (int a = 0; a < u.dim; ++a)
                m.at(s * u.dim + a,
                     (s * v.dim + t) * right + (t * u.dim + a)) =
                    Scalar::one(u.field);
    return m;
}

Matrix u_matrix(const FinVec& v) {
    Matrix m(v.field, v.dim * v.dim, 1);
    for (int s = 0; s < v.dim; ++s)
        m.at(s * v.dim + s, 0) = Scalar::one(v.field);
    return m;
}

Matrix hom_map_matrix(const Matrix& f, const Matrix& g) {
    return Matrix::kron(g, f.transpose());
}

Matrix pi_matrix(const FinVec& v, const FinVec& w, const FinVec& vp,
                 const FinVec& wp) {
    require_same_field(v.field, w.field, "pi_matrix");
    require_same_field(v.field, vp.field, "pi_matrix");
    require_same_field(v.field, wp.field, "pi_matrix");
    int rows = (w.dim * wp.dim) * (v.dim * vp.dim);
    int cols = (w.dim * v.dim) * (wp.dim * vp.dim);
    Matrix m(v.field, rows, cols);
    for (int s = 0; s < w.dim; ++s)
        for (int t = 0; t < v.dim; ++t)
            for (int sp = 0; sp < wp.dim; ++sp)
                for (int tp = 0; tp < vp.dim; ++tp)
                    m.at((s * wp.dim + sp) * (v.dim * vp.dim) +
                             (t * vp.dim + tp),
                         (s * v.dim + t) * (wp.dim * vp.dim) +
                             (sp * vp.dim + tp)) = Scalar::one(v.field);
    return m;
}

Matrix flip_matrix(const Field& f, int na, int nb) {
    return middle_swap4(f, 1, na, nb, 1);
}

std::vector<std::string> pi_law_suite(const Field& f, int max_dim) {
    std::vector<std::string> out;
    auto V = [&](int d) { return FinVec{f, d}; };

    for (int dv = 1; dv <= max_dim; ++dv)
        for (int dw = 1; dw <= max_dim; ++dw)
            for (int dvp = 1; dvp <= max_dim; ++dvp)
                for (int dwp = 1; dwp <= max_dim; ++dwp) {
                    Matrix pi = pi_matrix(V(dv), V(dw), V(dvp), V(dwp));
                    int hvw = dw * dv, hvpwp = dwp * dvp;

                    // defining square: evaluating pi agrees with the
                    // factorwise evaluation after the middle swap
                    Matrix lhs =
                        ev_matrix(V(dv * dvp), V(dw * dwp)) *
                        Matrix::kron(pi, Matrix::identity(f, dv * dvp));
                    Matrix rhs =
                        Matrix::kron(ev_matrix(V(dv), V(dw)),
                                     ev_matrix(V(dvp), V(dwp))) *
                        middle_swap4(f, hvw, hvpwp, dv, dvp);
                    if (lhs != rhs)
                        out.push_back("pi defining square fails at dims " +
                                      dims_tag({dv, dw, dvp, dwp}));

                    // symmetry: conjugating by the flips of the operator
                    // slots matches the flip of sources and targets
                    Matrix lhs_s = hom_map_matrix(flip_matrix(f, dvp, dv),
                                                  flip_matrix(f, dw, dwp)) *
                                   pi;
                    Matrix rhs_s = pi_matrix(V(dvp), V(dwp), V(dv), V(dw)) *
                                   flip_matrix(f, hvw, hvpwp);
                    if (lhs_s != rhs_s)
                        out.push_back("pi symmetry square fails at dims " +
                                      dims_tag({dv, dw, dvp, dwp}));

                    if (dvp == 1 && dwp == 1 &&
                        pi != Matrix::identity(f, hvw))
                        out.push_back(
                            "pi right unit degeneration fails at dims " +
                            dims_tag({dv, dw}));
                    if (dv == 1 && dw == 1 &&
                        pi != Matrix::identity(f, hvpwp))
                        out.push_back(
                            "pi left unit degeneration fails at dims " +
                            dims_tag({dvp, dwp}));
                }

    // naturality, sampled over the matrix units slot by slot with fixed
    // dense companions in the other three slots
    for (int du = 1; du <= max_dim; ++du)
        for (int dv = 1; dv <= max_dim; ++dv)
            for (int dw = 1; dw <= max_dim; ++dw)
                for (int dz = 1; dz <= max_dim; ++dz) {
                    int dup = dz, dvp = dw, dwp = dv, dzp = du;
                    Matrix pi_vw = pi_matrix(V(dv), V(dw), V(dvp), V(dwp));
                    Matrix pi_uz = pi_matrix(V(du), V(dz), V(dup), V(dzp));
                    auto natural = [&](const Matrix& fm, const Matrix& fpm,
                                       const Matrix& gm, const Matrix& gpm) {
                        Matrix l = hom_map_matrix(Matrix::kron(fm, fpm),
                                                  Matrix::kron(gm, gpm)) *
                                   pi_vw;
                        Matrix r =
                            pi_uz * Matrix::kron(hom_map_matrix(fm, gm),
                                                 hom_map_matrix(fpm, gpm));
                        return l == r;
                    };
                    Matrix f0 = dense_sample(f, dv, du, 1);
                    Matrix fp0 = dense_sample(f, dvp, dup, 2);
                    Matrix g0 = dense_sample(f, dz, dw, 3);
                    Matrix gp0 = dense_sample(f, dzp, dwp, 4);
                    bool ok = natural(f0, fp0, g0, gp0);
                    for (int r = 0; ok && r < dv; ++r)
                        for (int c = 0; ok && c < du; ++c)
                            ok = natural(unit_matrix(f, dv, du, r, c), fp0,
                                         g0, gp0);
                    for (int r = 0; ok && r < dvp; ++r)
                        for (int c = 0; ok && c < dup; ++c)
                            ok = natural(f0, unit_matrix(f, dvp, dup, r, c),
                                         g0, gp0);
                    for (int r = 0; ok && r < dz; ++r)
                        for (int c = 0; ok && c < dw; ++c)
                            ok = natural(f0, fp0,
                                         unit_matrix(f, dz, dw, r, c), gp0);
                    for (int r = 0; ok && r < dzp; ++r)
                        for (int c = 0; ok && c < dwp; ++c)
                            ok = natural(f0, fp0, g0,
                                         unit_matrix(f, dzp, dwp, r, c));
                    if (!ok)
                        out.push_back("pi naturality fails at dims " +
                                      dims_tag({du, dv, dw, dz}));
                }

    // compatibility with the internal composition
    for (int du = 1; du <= max_dim; ++du)
        for (int dv = 1; dv <= max_dim; ++dv)
            for (int dw = 1; dw <= max_dim; ++dw)
                for (int dup = 1; dup <= max_dim; ++dup)
                    for (int dvp = 1; dvp <= max_dim; ++dvp)
                        for (int dwp = 1; dwp <= max_dim; ++dwp) {
                            Matrix lhs =
                                c_matrix(V(du * dup), V(dv * dvp),
                                         V(dw * dwp)) *
                                Matrix::kron(
                                    pi_matrix(V(dv), V(dw), V(dvp), V(dwp)),
                                    pi_matrix(V(du), V(dv), V(dup),
                                              V(dvp)));
                            Matrix rhs =
                                pi_matrix(V(du), V(dw), V(dup), V(dwp)) *
                                Matrix::kron(c_matrix(V(du), V(dv), V(dw)),
                                             c_matrix(V(dup), V(dvp),
                                                      V(dwp))) *
                                middle_swap4(f, dw * dv, dwp * dvp, dv * du,
                                             dvp * dup);
                            if (lhs != rhs)
                                out.push_back(
                                    "pi composition square fails at dims " +
                                    dims_tag({du, dv, dw, dup, dvp, dwp}));
                        }

    // associativity
    for (int dv = 1; dv <= max_dim; ++dv)
        for (int dw = 1; dw <= max_dim; ++dw)
            for (int dvp = 1; dvp <= max_dim; ++dvp)
                for (int dwp = 1; dwp <= max_dim; ++dwp)
                    for (int dvq = 1; dvq <= max_dim; ++dvq)
                        for (int dwq = 1; dwq <= max_dim; ++dwq) {
                            Matrix lhs =
                                pi_matrix(V(dv * dvp), V(dw * dwp), V(dvq),
                                          V(dwq)) *
                                Matrix::kron(
                                    pi_matrix(V(dv), V(dw), V(dvp), V(dwp)),
                                    Matrix::identity(f, dwq * dvq));
                            Matrix rhs =
                                pi_matrix(V(dv), V(dw), V(dvp * dvq),
                                          V(dwp * dwq)) *
                                Matrix::kron(
                                    Matrix::identity(f, dw * dv),
                                    pi_matrix(V(dvp), V(dwp), V(dvq),
                                              V(dwq)));
                            if (lhs != rhs)
                                out.push_back(
                                    "pi associativity fails at dims " +
                                    dims_tag({dv, dw, dvp, dwp, dvq, dwq}));
                        }

    // monoid-morphism property on ends: multiplication and unit
    for (int dv = 1; dv <= max_dim; ++dv)
        for (int dvp = 1; dvp <= max_dim; ++dvp) {
            Matrix pi = pi_matrix(V(dv), V(dv), V(dvp), V(dvp));
            int e = dv * dv, ep = dvp * dvp;
            Matrix lhs = c_matrix(V(dv * dvp), V(dv * dvp), V(dv * dvp)) *
                         Matrix::kron(pi, pi);
            Matrix rhs = pi *
                         Matrix::kron(c_matrix(V(dv), V(dv), V(dv)),
                                      c_matrix(V(dvp), V(dvp), V(dvp))) *
                         middle_swap4(f, e, ep, e, ep);
            if (lhs != rhs)
                out.push_back("pi end multiplication square fails at dims " +
                              dims_tag({dv, dvp}));
            if (pi * Matrix::kron(u_matrix(V(dv)), u_matrix(V(dvp))) !=
                u_matrix(V(dv * dvp)))
                out.push_back("pi end unit square fails at dims " +
                              dims_tag({dv, dvp}));
        }

    return out;
}

std::vector<std::string> composition_law_suite(const Field& f, int max_dim) {
    std::vector<std::string> out;
    auto V = [&](int d) { return FinVec{f, d}; };
    for (int dt = 1; dt <= max_dim; ++dt)
        for (int du = 1; du <= max_dim; ++du)
            for (int dv = 1; dv <= max_dim; ++dv)
                for (int dw = 1; dw <= max_dim; ++dw) {
                    Matrix lhs =
                        c_matrix(V(dt), V(du), V(dw)) *
                        Matrix::kron(c_matrix(V(du), V(dv), V(dw)),
                                     Matrix::identity(f, du * dt));
                    Matrix rhs =
                        c_matrix(V(dt), V(dv), V(dw)) *
                        Matrix::kron(Matrix::identity(f, dw * dv),
                                     c_matrix(V(dt), V(du), V(dv)));
                    if (lhs != rhs)
                        out.push_back("composition associativity fails at " +
                                      dims_tag({dt, du, dv, dw}));
                }
    for (int du = 1; du <= max_dim; ++du)
        for (int dv = 1; dv <= max_dim; ++dv)
            for (int dw = 1; dw <= max_dim; ++dw) {
                Matrix dl = ev_matrix(V(du), V(dw)) *
                            Matrix::kron(c_matrix(V(du), V(dv), V(dw)),
                                         Matrix::identity(f, du));
                Matrix dr = ev_matrix(V(dv), V(dw)) *
                            Matrix::kron(Matrix::identity(f, dw * dv),
                                         ev_matrix(V(du), V(dv)));
                if (dl != dr)
                    out.push_back("composition defining square fails at " +
                                  dims_tag({du, dv, dw}));
            }
    for (int dv = 1; dv <= max_dim; ++dv)
        for (int dw = 1; dw <= max_dim; ++dw) {
            int h = dw * dv;
            Matrix left = c_matrix(V(dv), V(dw), V(dw)) *
                          Matrix::kron(u_matrix(V(dw)),
                                       Matrix::identity(f, h));
            Matrix right = c_matrix(V(dv), V(dv), V(dw)) *
                           Matrix::kron(Matrix::identity(f, h),
                                        u_matrix(V(dv)));
            if (left != Matrix::identity(f, h))
                out.push_back("left unit triangle fails at " +
                              dims_tag({dv, dw}));
            if (right != Matrix::identity(f, h))
                out.push_back("right unit triangle fails at " +
                              dims_tag({dv, dw}));
        }
    for (int dv = 1; dv <= max_dim; ++dv) {
        Matrix tri = ev_matrix(V(dv), V(dv)) *
                     Matrix::kron(u_matrix(V(dv)), Matrix::identity(f, dv));
        if (tri != Matrix::identity(f, dv))
            out.push_back("unit evaluation triangle fails at dim " +
                          std::to_string(dv));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Semi-linear sets.
// ---------------------------------------------------------------------------

SemiLinearSet unit_slset(const Field& f) { return {{"0"}, {f, 1}}; }

SemiLinearSet vect_slset(const FinVec& v) { return {{"0"}, v}; }

SemiLinearMap identity_slmap(const SemiLinearSet& a) {
    SemiLinearMap m;
    m.target_points = a.points();
    for (int i = 0; i < a.points(); ++i) {
        m.phi.push_back(i);
        m.fx.push_back(Matrix::identity(a.v.field, a.v.dim));
    }
    return m;
}

SemiLinearMap compose_sl(const SemiLinearMap& g, const SemiLinearMap& f) {
    SemiLinearMap m;
    m.target_points = g.target_points;
    for (std::size_t i = 0; i < f.phi.size(); ++i) {
        int mid = f.phi[i];
        if (mid < 0 || mid >= static_cast<int>(g.phi.size()))
            throw InputError("compose_sl: point image out of range");
        m.phi.push_back(g.phi[static_cast<std::size_t>(mid)]);
        m.fx.push_back(g.fx[static_cast<std::size_t>(mid)] * f.fx[i]);
    }
    return m;
}

SemiLinearSet tensor_slset(const SemiLinearSet& a, const SemiLinearSet& b) {
    require_same_field(a.v.field, b.v.field, "tensor_slset");
    SemiLinearSet t{{}, {a.v.field, a.v.dim * b.v.dim}};
    for (const std::string& x : a.labels)
        for (const std::string& y : b.labels) t.labels.push_back(x + "." + y);
    return t;
}

SemiLinearMap tensor_sl(const SemiLinearMap& f, const SemiLinearMap& g) {
    SemiLinearMap m;
    m.target_points = f.target_points * g.target_points;
    int nb = static_cast<int>(g.phi.size());
    for (std::size_t i = 0; i < f.phi.size(); ++i)
        for (int j = 0; j < nb; ++j) {
            m.phi.push_back(f.phi[i] * g.target_points +
                            g.phi[static_cast<std::size_t>(j)]);
            m.fx.push_back(
                Matrix::kron(f.fx[i], g.fx[static_cast<std::size_t>(j)]));
        }
    return m;
}

bool equal_sl(const SemiLinearMap& f, const SemiLinearMap& g) {
    if (f.phi != g.phi || f.fx.size() != g.fx.size() ||
        f.target_points != g.target_points)
        return false;
    for (std::size_t i = 0; i < f.fx.size(); ++i)
        if (f.fx[i] != g.fx[i]) return false;
    return true;
}

namespace {

/// x1 (x) x2 (x) x3 (x) x4 -> x1 (x) x3 (x) x2 (x) x4 on semi-linear sets:
/// the point permutation carrying the constant middle-swap matrix.
SemiLinearMap sl_middle_swap(const SemiLinearSet& a, const SemiLinearSet& b,
                             const SemiLinearSet& c, const SemiLinearSet& d) {
    int na = a.points(), nb = b.points(), nc = c.points(), nd = d.points();
    Matrix swap =
        middle_swap4(a.v.field, a.v.dim, b.v.dim, c.v.dim, d.v.dim);
    SemiLinearMap m;
    m.target_points = na * nb * nc * nd;
    m.phi.assign(static_cast<std::size_t>(m.target_points), 0);
    m.fx.assign(static_cast<std::size_t>(m.target_points), swap);
    for (int ia = 0; ia < na; ++ia)
        for (int ib = 0; ib < nb; ++ib)
            for (int ic = 0; ic < nc; ++ic)
                for (int id_ = 0; id_ < nd; ++id_)
                    m.phi[static_cast<std::size_t>(
                        ((ia * nb + ib) * nc + ic) * nd + id_)] =
                        ((ia * nc + ic) * nb + ib) * nd + id_;
    return m;
}

long long ipow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

/// Guards that counting exp digits in the given base stays well inside the
/// 64-bit range before any power is computed.
void require_enumerable(long long base, int exp, const char* where) {
    if (base <= 0 || exp < 0)
        throw InternalError("require_enumerable: bad arguments");
    double bits = (base == 1)
                      ? 0.0
                      : exp * std::log2(static_cast<double>(base));
    if (bits > 56.0)
        throw BudgetError(std::string(where) +
                          ": enumeration count does not fit the budget");
}

std::string sl_key(const SemiLinearMap& m) {
    std::string k;
    for (int p : m.phi) k += std::to_string(p) + ";";
    k += "|";
    for (const Matrix& f : m.fx) k += f.to_string() + "|";
    return k;
}

/// Compares two maps with the same source and appends one witness line per
/// differing point, using the supplied source labels.
void diff_sl(const SemiLinearMap& got, const SemiLinearMap& want,
             const std::vector<std::string>& labels, const std::string& what,
             std::vector<std::string>& out) {
    if (got.phi.size() != want.phi.size() ||
        got.phi.size() != labels.size()) {
        out.push_back(what + ": source point counts differ");
        return;
    }
    for (std::size_t i = 0; i < got.phi.size(); ++i) {
        if (got.phi[i] != want.phi[i])
            out.push_back(what + " fails at point " + labels[i] +
                          ": point images differ");
        else if (got.fx[i] != want.fx[i])
            out.push_back(what + " fails at point " + labels[i] +
                          ": linear parts differ");
    }
}

SemiLinearMap one_point_map(const Matrix& m) {
    SemiLinearMap s;
    s.phi = {0};
    s.fx = {m};
    s.target_points = 1;
    return s;
}

}  // namespace

SLHomObject sl_hom_object(const SemiLinearSet& a, const SemiLinearSet& b) {
    require_same_field(a.v.field, b.v.field, "sl_hom_object");
    const Field& f = a.v.field;
    int nx = a.points(), ny = b.points();
    int dv = a.v.dim, dw = b.v.dim;
    if (nx <= 0 || ny <= 0)
        throw InputError("sl_hom_object: semi-linear sets need points");
    require_enumerable(ny, nx, "sl_hom_object");
    long long nfun = ipow(ny, nx);

    SemiLinearSet hom{{}, {f, nx * dw * dv}};
    SLHomObject ho{a, b, std::move(hom), SemiLinearMap{}};
    for (long long fi = 0; fi < nfun; ++fi) {
        std::string label = "[";
        for (int x = 0; x < nx; ++x) {
            long long digit = (fi / ipow(ny, nx - 1 - x)) % ny;
            if (x) label += " ";
            label += b.labels[static_cast<std::size_t>(digit)];
        }
        ho.hom.labels.push_back(label + "]");
    }

    ho.ev.target_points = ny;
    int homdim = ho.hom.v.dim;
    for (long long fi = 0; fi < nfun; ++fi)
        for (int x = 0; x < nx; ++x) {
            int digit = static_cast<int>((fi / ipow(ny, nx - 1 - x)) % ny);
            ho.ev.phi.push_back(digit);
            Matrix m(f, dw, homdim * dv);
            for (int s = 0; s < dw; ++s)
                for (int t = 0; t < dv; ++t)
                    m.at(s, (x * (dw * dv) + s * dv + t) * dv + t) =
                        Scalar::one(f);
            ho.ev.fx.push_back(std::move(m));
        }
    return ho;
}

SemiLinearMap sl_theta(const SLHomObject& ho, const SemiLinearSet& z,
                       const SemiLinearMap& h) {
    if (static_cast<int>(h.phi.size()) != z.points() ||
        h.target_points != ho.hom.points())
        throw DimensionError("sl_theta: h is not a map z -> hom");
    return compose_sl(ho.ev, tensor_sl(h, identity_slmap(ho.a)));
}

SemiLinearMap sl_theta_inverse(const SLHomObject& ho, const SemiLinearSet& z,
                               const SemiLinearMap& g) {
    int nx = ho.a.points(), ny = ho.b.points(), nz = z.points();
    int dv = ho.a.v.dim, dw = ho.b.v.dim, dz = z.v.dim;
    if (static_cast<int>(g.phi.size()) != nz * nx || g.target_points != ny)
        throw DimensionError("sl_theta_inverse: g is not a map z (x) a -> b");
    SemiLinearMap h;
    h.target_points = ho.hom.points();
    for (int zi = 0; zi < nz; ++zi) {
        long long fi = 0;
        for (int x = 0; x < nx; ++x)
            fi = fi * ny + g.phi[static_cast<std::size_t>(zi * nx + x)];
        h.phi.push_back(static_cast<int>(fi));
        Matrix m(ho.a.v.field, ho.hom.v.dim, dz);
        for (int x = 0; x < nx; ++x) {
            const Matrix& gm = g.fx[static_cast<std::size_t>(zi * nx + x)];
            for (int s = 0; s < dw; ++s)
                for (int t = 0; t < dv; ++t)
                    for (int q = 0; q < dz; ++q)
                        m.at(x * (dw * dv) + s * dv + t, q) =
                            gm.at(s, q * dv + t);
        }
        h.fx.push_back(std::move(m));
    }
    return h;
}

std::vector<SemiLinearMap> enumerate_slmaps(const SemiLinearSet& src,
                                            const SemiLinearSet& dst,
                                            Budget& budget) {
    const Field& f = src.v.field;
    require_same_field(f, dst.v.field, "enumerate_slmaps");
    if (!f.is_prime_field())
        throw InputError(
            "enumerate_slmaps: only prime fields are enumerable");
    long long p = static_cast<long long>(f.p());
    int ns = src.points(), nt = dst.points();
    int entries = ns * dst.v.dim * src.v.dim;
    require_enumerable(nt, ns, "enumerate_slmaps");
    require_enumerable(p, entries, "enumerate_slmaps");
    long long nphi = ipow(nt, ns), nlin = ipow(p, entries);
    double bits = ns * std::log2(static_cast<double>(nt)) +
                  entries * std::log2(static_cast<double>(p));
    if (bits > 56.0)
        throw BudgetError(
            "enumerate_slmaps: enumeration count does not fit the budget");
    budget.charge(nphi * nlin);

    std::vector<SemiLinearMap> out;
    out.reserve(static_cast<std::size_t>(nphi * nlin));
    std::vector<int> digits(static_cast<std::size_t>(entries), 0);
    for (long long pidx = 0; pidx < nphi; ++pidx)
        for (long long li = 0; li < nlin; ++li) {
            SemiLinearMap m;
            m.target_points = nt;
            for (int x = 0; x < ns; ++x)
                m.phi.push_back(
                    static_cast<int>((pidx / ipow(nt, ns - 1 - x)) % nt));
            long long rest = li;
            for (int k = entries - 1; k >= 0; --k) {
                digits[static_cast<std::size_t>(k)] =
                    static_cast<int>(rest % p);
                rest /= p;
            }
            int k = 0;
            for (int x = 0; x < ns; ++x) {
                Matrix mat(f, dst.v.dim, src.v.dim);
                for (int r = 0; r < dst.v.dim; ++r)
                    for (int c = 0; c < src.v.dim; ++c)
                        mat.at(r, c) = Scalar::of_int(
                            f, digits[static_cast<std::size_t>(k++)]);
                m.fx.push_back(std::move(mat));
            }
            out.push_back(std::move(m));
        }
    return out;
}

std::vector<std::string> sl_universal_property(const SemiLinearSet& a,
                                               const SemiLinearSet& b,
                                               const SemiLinearSet& z,
                                               Budget& budget) {
    std::vector<std::string> out;
    SLHomObject ho = sl_hom_object(a, b);
    SemiLinearSet za = tensor_slset(z, a);
    const Field& f = a.v.field;

    if (f.is_prime_field()) {
        std::vector<SemiLinearMap> gs = enumerate_slmaps(za, b, budget);
        std::vector<SemiLinearMap> hs = enumerate_slmaps(z, ho.hom, budget);
        if (gs.size() != hs.size())
            out.push_back("map counts differ: " + std::to_string(gs.size()) +
                          " uncurried vs " + std::to_string(hs.size()) +
                          " curried");
        std::set<std::string> curried;
        for (std::size_t i = 0; i < gs.size(); ++i) {
            SemiLinearMap h = sl_theta_inverse(ho, z, gs[i]);
            if (!equal_sl(sl_theta(ho, z, h), gs[i]))
                out.push_back("transposition round trip fails for map #" +
                              std::to_string(i));
            curried.insert(sl_key(h));
        }
        if (curried.size() != gs.size())
            out.push_back("curried images collide");
        for (std::size_t i = 0; i < hs.size(); ++i)
            if (!equal_sl(sl_theta_inverse(ho, z, sl_theta(ho, z, hs[i])),
                          hs[i]))
                out.push_back("inverse round trip fails for map #" +
                              std::to_string(i));
        return out;
    }

    // over the rationals: a generating family — every point part, carrying
    // a deterministic dense linear part and every single-entry linear part
    int ng = za.points(), ny = b.points();
    require_enumerable(ny, ng, "sl_universal_property");
    long long nphi = ipow(ny, ng);
    budget.charge(nphi);
    std::set<std::string> curried;
    long long checked = 0;
    for (long long pidx = 0; pidx < nphi; ++pidx) {
        std::vector<SemiLinearMap> family;
        SemiLinearMap base;
        base.target_points = ny;
        for (int x = 0; x < ng; ++x) {
            base.phi.push_back(
                static_cast<int>((pidx / ipow(ny, ng - 1 - x)) % ny));
            base.fx.push_back(dense_sample(f, b.v.dim, za.v.dim,
                                           static_cast<int>(pidx) + x));
        }
        family.push_back(base);
        for (int x = 0; x < ng; ++x)
            for (int r = 0; r < b.v.dim; ++r)
                for (int c = 0; c < za.v.dim; ++c) {
                    SemiLinearMap m = base;
                    for (int y = 0; y < ng; ++y)
                        m.fx[static_cast<std::size_t>(y)] =
                            Matrix(f, b.v.dim, za.v.dim);
                    m.fx[static_cast<std::size_t>(x)] =
                        unit_matrix(f, b.v.dim, za.v.dim, r, c);
                    family.push_back(std::move(m));
                }
        for (std::size_t i = 0; i < family.size(); ++i) {
            SemiLinearMap h = sl_theta_inverse(ho, z, family[i]);
            if (!equal_sl(sl_theta(ho, z, h), family[i]))
                out.push_back(
                    "transposition round trip fails for sampled map #" +
                    std::to_string(checked + static_cast<long long>(i)));
            curried.insert(sl_key(h));
        }
        checked += static_cast<long long>(family.size());
    }
    if (static_cast<long long>(curried.size()) != checked)
        out.push_back("curried images collide");
    return out;
}

SemiLinearMap sl_composition(const SemiLinearSet& a, const SemiLinearSet& b,
                             const SemiLinearSet& c) {
    require_same_field(a.v.field, b.v.field, "sl_composition");
    require_same_field(b.v.field, c.v.field, "sl_composition");
    const Field& f = a.v.field;
    int nx = a.points(), ny = b.points(), nz = c.points();
    int dv = a.v.dim, dw = b.v.dim, dp = c.v.dim;
    require_enumerable(nz, nx, "sl_composition");
    require_enumerable(ny, nx, "sl_composition");
    require_enumerable(nz, ny, "sl_composition");
    long long nbc = ipow(nz, ny), nab = ipow(ny, nx);
    int dimab = nx * dw * dv;

    SemiLinearMap m;
    m.target_points = static_cast<int>(ipow(nz, nx));
    for (long long psi = 0; psi < nbc; ++psi)
        for (long long phi = 0; phi < nab; ++phi) {
            long long comp = 0;
            for (int x = 0; x < nx; ++x) {
                int y = static_cast<int>((phi / ipow(ny, nx - 1 - x)) % ny);
                long long zidx = (psi / ipow(nz, ny - 1 - y)) % nz;
                comp = comp * nz + zidx;
            }
            m.phi.push_back(static_cast<int>(comp));
            Matrix mat(f, nx * dp * dv, (ny * dp * dw) * dimab);
            for (int x = 0; x < nx; ++x) {
                int y = static_cast<int>((phi / ipow(ny, nx - 1 - x)) % ny);
                for (int s = 0; s < dp; ++s)
                    for (int r = 0; r < dw; ++r)
                        for (int t = 0; t < dv; ++t)
                            mat.at(x * (dp * dv) + s * dv + t,
                                   (y * (dp * dw) + s * dw + r) * dimab +
                                       (x * (dw * dv) + r * dv + t)) =
                                Scalar::one(f);
            }
            m.fx.push_back(std::move(mat));
        }
    return m;
}

SemiLinearMap sl_unit(const SemiLinearSet& a) {
    const Field& f = a.v.field;
    int nx = a.points(), dv = a.v.dim;
    require_enumerable(nx, nx, "sl_unit");
    long long idfun = 0;
    for (int x = 0; x < nx; ++x) idfun = idfun * nx + x;
    SemiLinearMap m;
    m.target_points = static_cast<int>(ipow(nx, nx));
    m.phi.push_back(static_cast<int>(idfun));
    Matrix col(f, nx * dv * dv, 1);
    for (int x = 0; x < nx; ++x)
        for (int s = 0; s < dv; ++s)
            col.at(x * (dv * dv) + s * dv + s, 0) = Scalar::one(f);
    m.fx.push_back(std::move(col));
    return m;
}

// ---------------------------------------------------------------------------
// Monoids, bimonoids and representations.
// ---------------------------------------------------------------------------

std::vector<std::string> check_vec_monoid(const VecMonoid& m) {
    std::vector<std::string> out;
    int n = m.x.points();
    if (static_cast<int>(m.mu.phi.size()) != n * n ||
        m.mu.target_points != n) {
        out.push_back("multiplication is not a map x (x) x -> x");
        return out;
    }
    if (static_cast<int>(m.eta.phi.size()) != 1 ||
        m.eta.target_points != n) {
        out.push_back("unit is not a map I -> x");
        return out;
    }
    SemiLinearMap idx = identity_slmap(m.x);
    SemiLinearSet xx = tensor_slset(m.x, m.x);
    SemiLinearSet xxx = tensor_slset(xx, m.x);
    diff_sl(compose_sl(m.mu, tensor_sl(m.mu, idx)),
            compose_sl(m.mu, tensor_sl(idx, m.mu)), xxx.labels,
            "monoid associativity", out);
    diff_sl(compose_sl(m.mu, tensor_sl(m.eta, idx)), idx, m.x.labels,
            "monoid left unit", out);
    diff_sl(compose_sl(m.mu, tensor_sl(idx, m.eta)), idx, m.x.labels,
            "monoid right unit", out);
    return out;
}

std::vector<std::string> check_vec_bimonoid(const VecBimonoid& b) {
    std::vector<std::string> out = check_vec_monoid(b.monoid());
    int n = b.x.points();
    if (static_cast<int>(b.delta.phi.size()) != n ||
        b.delta.target_points != n * n) {
        out.push_back("comultiplication is not a map x -> x (x) x");
        return out;
    }
    if (static_cast<int>(b.eps.phi.size()) != n ||
        b.eps.target_points != 1) {
        out.push_back("counit is not a map x -> I");
        return out;
    }
    SemiLinearMap idx = identity_slmap(b.x);
    SemiLinearSet xx = tensor_slset(b.x, b.x);
    diff_sl(compose_sl(tensor_sl(b.delta, idx), b.delta),
            compose_sl(tensor_sl(idx, b.delta), b.delta), b.x.labels,
            "comonoid coassociativity", out);
    diff_sl(compose_sl(tensor_sl(b.eps, idx), b.delta), idx, b.x.labels,
            "comonoid left counit", out);
    diff_sl(compose_sl(tensor_sl(idx, b.eps), b.delta), idx, b.x.labels,
            "comonoid right counit", out);
    diff_sl(compose_sl(b.delta, b.mu),
            compose_sl(tensor_sl(b.mu, b.mu),
                       compose_sl(sl_middle_swap(b.x, b.x, b.x, b.x),
                                  tensor_sl(b.delta, b.delta))),
            xx.labels, "bimonoid compatibility", out);
    SemiLinearMap unit_id = one_point_map(Matrix::identity(b.x.v.field, 1));
    diff_sl(compose_sl(b.eps, b.eta), unit_id, {"0"},
            "bimonoid counit of unit", out);
    diff_sl(compose_sl(b.delta, b.eta), tensor_sl(b.eta, b.eta), {"0"},
            "bimonoid comultiplication of unit", out);
    diff_sl(compose_sl(b.eps, b.mu), tensor_sl(b.eps, b.eps), xx.labels,
            "bimonoid counit of multiplication", out);
    return out;
}

EndMonoid end_monoid(const SemiLinearSet& a) {
    SLHomObject ho = sl_hom_object(a, a);
    VecMonoid monoid{ho.hom, sl_composition(a, a, a), sl_unit(a)};
    return {std::move(ho), std::move(monoid)};
}

std::vector<std::string> rep_check(const SemiLinearMap& rho,
                                   const VecMonoid& m, const FinVec& v) {
    std::vector<std::string> out;
    int n = m.x.points();
    if (static_cast<int>(rho.phi.size()) != n || rho.target_points != 1) {
        out.push_back("not a map from the monoid carrier to the operators");
        return out;
    }
    for (int i = 0; i < n; ++i)
        if (rho.phi[static_cast<std::size_t>(i)] != 0) {
            out.push_back("point image must be the single operator point");
            return out;
        }
    SemiLinearMap c_sl = one_point_map(c_matrix(v, v, v));
    SemiLinearMap u_sl = one_point_map(u_matrix(v));
    SemiLinearSet xx = tensor_slset(m.x, m.x);
    diff_sl(compose_sl(rho, m.mu), compose_sl(c_sl, tensor_sl(rho, rho)),
            xx.labels, "multiplication square", out);
    diff_sl(compose_sl(rho, m.eta), u_sl, {"0"}, "unit square", out);
    return out;
}

SemiLinearMap action_from_rep(const SemiLinearMap& rho, const VecMonoid& m,
                              const FinVec& v) {
    SemiLinearMap a;
    a.target_points = 1;
    for (int i = 0; i < m.x.points(); ++i) {
        a.phi.push_back(0);
        a.fx.push_back(
            theta_matrix(rho.fx[static_cast<std::size_t>(i)], v, v));
    }
    return a;
}

SemiLinearMap rep_from_action(const SemiLinearMap& a, const VecMonoid& m,
                              const FinVec& v) {
    SemiLinearMap rho;
    rho.target_points = 1;
    for (int i = 0; i < m.x.points(); ++i) {
        rho.phi.push_back(0);
        rho.fx.push_back(
            theta_inverse_matrix(a.fx[static_cast<std::size_t>(i)], v, v));
    }
    return rho;
}

std::vector<std::string> action_check(const SemiLinearMap& a,
                                      const VecMonoid& m, const FinVec& v) {
    std::vector<std::string> out;
    int n = m.x.points();
    if (static_cast<int>(a.phi.size()) != n || a.target_points != 1) {
        out.push_back("not a map from carrier (x) space to the space");
        return out;
    }
    SemiLinearSet vs = vect_slset(v);
    SemiLinearMap idv = identity_slmap(vs);
    SemiLinearMap idx = identity_slmap(m.x);
    SemiLinearSet xxv = tensor_slset(tensor_slset(m.x, m.x), vs);
    diff_sl(compose_sl(a, tensor_sl(m.mu, idv)),
            compose_sl(a, tensor_sl(idx, a)), xxv.labels,
            "action associativity", out);
    diff_sl(compose_sl(a, tensor_sl(m.eta, idv)), idv, {"0"},
            "action unit law", out);
    return out;
}

std::vector<std::string> rep_morphism_check(const Matrix& f,
                                            const SemiLinearMap& rho,
                                            const SemiLinearMap& tau,
                                            const VecMonoid& m,
                                            const FinVec& v,
                                            const FinVec& w) {
    std::vector<std::string> out;
    if (f.rows() != w.dim || f.cols() != v.dim) {
        out.push_back("morphism matrix has the wrong shape");
        return out;
    }
    for (int i = 0; i < m.x.points(); ++i) {
        Matrix lhs = hom_map_matrix(Matrix::identity(f.field(), v.dim), f) *
                     rho.fx[static_cast<std::size_t>(i)];
        Matrix rhs = hom_map_matrix(f, Matrix::identity(f.field(), w.dim)) *
                     tau.fx[static_cast<std::size_t>(i)];
        if (lhs != rhs)
            out.push_back("morphism square fails at point " +
                          m.x.labels[static_cast<std::size_t>(i)]);
    }
    return out;
}

SemiLinearMap tensor_rep(const SemiLinearMap& rho, const SemiLinearMap& rhop,
                         const VecBimonoid& b, const FinVec& v,
                         const FinVec& vp) {
    SemiLinearMap pi_sl = one_point_map(pi_matrix(v, v, vp, vp));
    return compose_sl(pi_sl, compose_sl(tensor_sl(rho, rhop), b.delta));
}

// ---------------------------------------------------------------------------
// Usual finite monoids.
// ---------------------------------------------------------------------------

FiniteMonoid make_finite_monoid(std::vector<std::string> labels,
                                std::vector<std::vector<int>> table) {
    int n = static_cast<int>(labels.size());
    if (n == 0) throw InputError("finite monoid needs at least one element");
    if (std::set<std::string>(labels.begin(), labels.end()).size() !=
        labels.size())
        throw InputError("finite monoid labels must be distinct");
    if (static_cast<int>(table.size()) != n)
        throw InputError("multiplication table must be square");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw InputError("multiplication table must be square");
        for (int v : row)
            if (v < 0 || v >= n)
                throw InputError("multiplication table entry out of range");
    }
    auto prod = [&](int i, int j) {
        return table[static_cast<std::size_t>(i)]
                    [static_cast<std::size_t>(j)];
    };
    int unit = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            ok = prod(e, i) == i && prod(i, e) == i;
        if (ok) {
            unit = e;
            break;
        }
    }
    if (unit < 0)
        throw InputError("multiplication table has no two-sided unit");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (prod(prod(i, j), k) != prod(i, prod(j, k)))
                    throw InputError(
                        "multiplication table is not associative at (" +
                        labels[static_cast<std::size_t>(i)] + "," +
                        labels[static_cast<std::size_t>(j)] + "," +
                        labels[static_cast<std::size_t>(k)] + ")");
    FiniteMonoid m;
    m.labels = std::move(labels);
    m.table = std::move(table);
    m.unit = unit;
    return m;
}

VecMonoid semilinear_of_monoid(const FiniteMonoid& m, const Field& f) {
    int n = static_cast<int>(m.labels.size());
    SemiLinearMap mu, eta;
    mu.target_points = n;
    Matrix one = Matrix::identity(f, 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            mu.phi.push_back(m.table[static_cast<std::size_t>(i)]
                                    [static_cast<std::size_t>(j)]);
            mu.fx.push_back(one);
        }
    eta.target_points = n;
    eta.phi = {m.unit};
    eta.fx = {one};
    return {{m.labels, {f, 1}}, std::move(mu), std::move(eta)};
}

VecBimonoid monoid_bimonoid(const FiniteMonoid& m, const Field& f) {
    int n = static_cast<int>(m.labels.size());
    Matrix mu(f, n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            mu.at(m.table[static_cast<std::size_t>(i)]
                         [static_cast<std::size_t>(j)],
                  i * n + j) = Scalar::one(f);
    Matrix eta(f, n, 1);
    eta.at(m.unit, 0) = Scalar::one(f);
    Matrix delta(f, n * n, n);
    for (int i = 0; i < n; ++i) delta.at(i * n + i, i) = Scalar::one(f);
    Matrix eps(f, 1, n);
    for (int i = 0; i < n; ++i) eps.at(0, i) = Scalar::one(f);
    return {{{"0"}, {f, n}},
            one_point_map(mu),
            one_point_map(eta),
            one_point_map(delta),
            one_point_map(eps)};
}

std::vector<std::string> monoid_rep_check(const FiniteMonoid& m,
                                          const std::vector<Matrix>& rho) {
    std::vector<std::string> out;
    int n = static_cast<int>(m.labels.size());
    if (static_cast<int>(rho.size()) != n) {
        out.push_back("one matrix per monoid element is required");
        return out;
    }
    int d = rho[0].rows();
    for (const Matrix& r : rho)
        if (r.rows() != d || r.cols() != d) {
            out.push_back("matrices must be square of one size");
            return out;
        }
    if (rho[static_cast<std::size_t>(m.unit)] !=
        Matrix::identity(rho[0].field(), d))
        out.push_back("unit square fails: the unit is not the identity");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rho[static_cast<std::size_t>(i)] *
                    rho[static_cast<std::size_t>(j)] !=
                rho[static_cast<std::size_t>(
                    m.table[static_cast<std::size_t>(i)]
                           [static_cast<std::size_t>(j)])])
                out.push_back("multiplication fails at point " +
                              m.labels[static_cast<std::size_t>(i)] + "." +
                              m.labels[static_cast<std::size_t>(j)]);
    return out;
}

SemiLinearMap monoid_rep_to_semilinear(const FiniteMonoid& m,
                                       const std::vector<Matrix>& rho) {
    if (rho.size() != m.labels.size())
        throw InputError("one matrix per monoid element is required");
    int d = rho[0].rows();
    SemiLinearMap s;
    s.target_points = 1;
    for (std::size_t i = 0; i < rho.size(); ++i) {
        if (rho[i].rows() != d || rho[i].cols() != d)
            throw DimensionError("matrices must be square of one size");
        s.phi.push_back(0);
        Matrix col(rho[i].field(), d * d, 1);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                col.at(r * d + c, 0) = rho[i].at(r, c);
        s.fx.push_back(std::move(col));
    }
    return s;
}

std::vector<Matrix> semilinear_to_monoid_rep(const SemiLinearMap& rho,
                                             const FinVec& v) {
    std::vector<Matrix> out;
    for (const Matrix& col : rho.fx) {
        if (col.rows() != v.dim * v.dim || col.cols() != 1)
            throw DimensionError(
                "operator columns must flatten a square matrix");
        Matrix m(v.field, v.dim, v.dim);
        for (int r = 0; r < v.dim; ++r)
            for (int c = 0; c < v.dim; ++c)
                m.at(r, c) = col.at(r * v.dim + c, 0);
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace maninkit
