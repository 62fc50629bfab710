#include "maninkit/fincat.hpp"

#include <algorithm>
#include <sstream>

namespace maninkit {

namespace {

std::uint64_t pair_key(int g, int f) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(g)) << 32) |
           static_cast<std::uint32_t>(f);
}

}  // namespace

FinCategory::Builder::Builder(int n_objects,
                              std::vector<std::string> object_names)
    : n_objects_(n_objects), object_names_(std::move(object_names)) {
    if (n_objects <= 0)
        throw ValidationError("category needs at least one object");
    if (object_names_.empty()) {
        for (int i = 0; i < n_objects; ++i)
            object_names_.push_back(std::to_string(i));
    }
    if (static_cast<int>(object_names_.size()) != n_objects)
        throw ValidationError("object name count mismatch");
    identity_.assign(n_objects, -1);
}

int FinCategory::Builder::add_arrow(int src, int dst, std::string name) {
    if (src < 0 || src >= n_objects_ || dst < 0 || dst >= n_objects_)
        throw ValidationError("arrow endpoint out of range");
    arrows_.emplace_back(src, dst);
    arrow_names_.push_back(std::move(name));
    return static_cast<int>(arrows_.size()) - 1;
}

void FinCategory::Builder::set_identity(int obj, int arrow) {
    if (obj < 0 || obj >= n_objects_)
        throw ValidationError("identity object out of range");
    if (arrow < 0 || arrow >= static_cast<int>(arrows_.size()))
        throw ValidationError("identity arrow out of range");
    if (arrows_[arrow].first != obj || arrows_[arrow].second != obj)
        throw ValidationError("identity arrow must be an endomorphism of its object");
    identity_[obj] = arrow;
}

void FinCategory::Builder::set_compose(int g, int f, int gf) {
    int n = static_cast<int>(arrows_.size());
    if (g < 0 || g >= n || f < 0 || f >= n || gf < 0 || gf >= n)
        throw ValidationError("composition entry arrow out of range");
    if (arrows_[f].second != arrows_[g].first)
        throw ValidationError("composition entry for non-composable pair");
    if (arrows_[gf].first != arrows_[f].first ||
        arrows_[gf].second != arrows_[g].second)
        throw ValidationError("composite arrow has wrong endpoints");
    comp_[pair_key(g, f)] = gf;
}

FinCategory FinCategory::Builder::build() && {
    FinCategory c;
    c.n_objects_ = n_objects_;
    c.object_names_ = std::move(object_names_);
    c.arrow_src_.reserve(arrows_.size());
    c.arrow_dst_.reserve(arrows_.size());
    for (auto [s, d] : arrows_) {
        c.arrow_src_.push_back(s);
        c.arrow_dst_.push_back(d);
    }
    c.arrow_names_ = std::move(arrow_names_);
    c.identity_ = std::move(identity_);
    c.comp_ = std::move(comp_);
    c.index_and_validate();
    return c;
}

FinCategory FinCategory::thin(int n_objects,
                              const std::function<bool(int, int)>& leq,
                              std::vector<std::string> object_names,
                              std::vector<std::pair<int, int>> order) {
    FinCategory c;
    c.n_objects_ = n_objects;
    if (n_objects <= 0)
        throw ValidationError("category needs at least one object");
    if (object_names.empty()) {
        for (int i = 0; i < n_objects; ++i)
            object_names.push_back(std::to_string(i));
    }
    if (static_cast<int>(object_names.size()) != n_objects)
        throw ValidationError("object name count mismatch");
    c.object_names_ = std::move(object_names);

    std::vector<bool> rel(static_cast<std::size_t>(n_objects) * n_objects);
    for (int x = 0; x < n_objects; ++x)
        for (int y = 0; y < n_objects; ++y)
            rel[static_cast<std::size_t>(x) * n_objects + y] = leq(x, y);
    for (int x = 0; x < n_objects; ++x)
        if (!rel[static_cast<std::size_t>(x) * n_objects + x])
            throw ValidationError("thin relation is not reflexive at " +
                                  c.object_names_[x]);
    for (int x = 0; x < n_objects; ++x)
        for (int y = 0; y < n_objects; ++y) {
            if (!rel[static_cast<std::size_t>(x) * n_objects + y]) continue;
            for (int z = 0; z < n_objects; ++z)
                if (rel[static_cast<std::size_t>(y) * n_objects + z] &&
                    !rel[static_cast<std::size_t>(x) * n_objects + z])
                    throw ValidationError(
                        "thin relation is not transitive at (" +
                        c.object_names_[x] + ", " + c.object_names_[y] + ", " +
                        c.object_names_[z] + ")");
        }

    if (order.empty()) {
        for (int x = 0; x < n_objects; ++x)
            for (int y = 0; y < n_objects; ++y)
                if (rel[static_cast<std::size_t>(x) * n_objects + y])
                    order.emplace_back(x, y);
    } else {
        std::size_t expected = 0;
        for (bool b : rel) expected += b;
        if (order.size() != expected)
            throw ValidationError("custom arrow order has wrong size");
        std::vector<bool> seen(rel.size(), false);
        for (auto [x, y] : order) {
            if (x < 0 || x >= n_objects || y < 0 || y >= n_objects ||
                !rel[static_cast<std::size_t>(x) * n_objects + y])
                throw ValidationError("custom arrow order lists unrelated pair");
            std::size_t k = static_cast<std::size_t>(x) * n_objects + y;
            if (seen[k])
                throw ValidationError("custom arrow order repeats a pair");
            seen[k] = true;
        }
    }

    c.identity_.assign(n_objects, -1);
    for (auto [x, y] : order) {
        int id = static_cast<int>(c.arrow_src_.size());
        c.arrow_src_.push_back(x);
        c.arrow_dst_.push_back(y);
        if (x == y) {
            c.identity_[x] = id;
            c.arrow_names_.push_back("id(" + c.object_names_[x] + ")");
        } else {
            c.arrow_names_.push_back(c.object_names_[x] + "<=" +
                                     c.object_names_[y]);
        }
    }
    c.index_and_validate();
    return c;
}

void FinCategory::index_and_validate() {
    hom_.assign(static_cast<std::size_t>(n_objects_) * n_objects_, {});
    for (int a = 0; a < num_arrows(); ++a)
        hom_[static_cast<std::size_t>(arrow_src_[a]) * n_objects_ +
             arrow_dst_[a]]
            .push_back(a);

    thin_ = true;
    for (const auto& h : hom_) {
        if (static_cast<int>(h.size()) > kMaxArrowsPerHom)
            throw ValidationError("hom-set exceeds the arrow cap of " +
                                  std::to_string(kMaxArrowsPerHom));
        if (h.size() > 1) thin_ = false;
    }
    if (n_objects_ > (thin_ ? kMaxThinObjects : kMaxObjects))
        throw ValidationError("object count exceeds the cap (" +
                              std::to_string(kMaxObjects) + " general, " +
                              std::to_string(kMaxThinObjects) + " thin)");

    for (int x = 0; x < n_objects_; ++x) {
        if (identity_[x] < 0)
            throw ValidationError("object " + object_names_[x] +
                                  " has no identity arrow");
        if (arrow_src_[identity_[x]] != x || arrow_dst_[identity_[x]] != x)
            throw ValidationError("identity of " + object_names_[x] +
                                  " has wrong endpoints");
    }
    for (int a = 0; a < num_arrows(); ++a)
        if (arrow_names_[a].empty()) arrow_names_[a] = "f" + std::to_string(a);

    if (thin_) {
        // Composition is forced; it is total because the relation was (or is
        // now) checked to be transitive.
        for (int x = 0; x < n_objects_; ++x)
            for (int y = 0; y < n_objects_; ++y) {
                if (hom(x, y).empty()) continue;
                for (int z = 0; z < n_objects_; ++z)
                    if (!hom(y, z).empty() && hom(x, z).empty())
                        throw ValidationError(
                            "thin category is not closed under composition");
            }
        return;
    }

    // General case: the composition table must be total on composable pairs,
    // satisfy the identity laws, and be associative.
    std::vector<std::vector<int>> by_src(n_objects_);
    for (int a = 0; a < num_arrows(); ++a) by_src[arrow_src_[a]].push_back(a);

    for (int f = 0; f < num_arrows(); ++f)
        for (int g : by_src[arrow_dst_[f]]) {
            auto it = comp_.find(pair_key(g, f));
            if (it == comp_.end())
                throw ValidationError("missing composition entry for " +
                                      arrow_names_[g] + " after " +
                                      arrow_names_[f]);
            int gf = it->second;
            if (arrow_src_[gf] != arrow_src_[f] ||
                arrow_dst_[gf] != arrow_dst_[g])
                throw ValidationError("composite has wrong endpoints for " +
                                      arrow_names_[g] + " after " +
                                      arrow_names_[f]);
        }
    for (int f = 0; f < num_arrows(); ++f) {
        if (compose(identity_[arrow_dst_[f]], f) != f)
            throw ValidationError("left identity law fails at " +
                                  arrow_names_[f]);
        if (compose(f, identity_[arrow_src_[f]]) != f)
            throw ValidationError("right identity law fails at " +
                                  arrow_names_[f]);
    }
    for (int f = 0; f < num_arrows(); ++f)
        for (int g : by_src[arrow_dst_[f]])
            for (int h : by_src[arrow_dst_[g]])
                if (compose(h, compose(g, f)) != compose(compose(h, g), f))
                    throw ValidationError(
                        "associativity fails on (" + arrow_names_[h] + ", " +
                        arrow_names_[g] + ", " + arrow_names_[f] + ")");
}

int FinCategory::compose(int g, int f) const {
    if (arrow_dst_[f] != arrow_src_[g])
        throw InternalError("compose called on non-composable arrows");
    if (thin_) return hom(arrow_src_[f], arrow_dst_[g]).front();
    return comp_.at(pair_key(g, f));
}

Subcategory FinCategory::full_subcategory(
    const std::vector<int>& objects) const {
    Subcategory sub;
    sub.object_to_parent = objects;
    for (std::size_t i = 0; i < objects.size(); ++i) {
        if (objects[i] < 0 || objects[i] >= n_objects_)
            throw ValidationError("subcategory object out of range");
        if (!sub.parent_object_to_sub.emplace(objects[i], (int)i).second)
            throw ValidationError("subcategory object listed twice");
    }

    FinCategory c;
    c.n_objects_ = static_cast<int>(objects.size());
    for (int p : objects) c.object_names_.push_back(object_names_[p]);
    c.identity_.assign(c.n_objects_, -1);
    for (int a = 0; a < num_arrows(); ++a) {
        auto s = sub.parent_object_to_sub.find(arrow_src_[a]);
        auto d = sub.parent_object_to_sub.find(arrow_dst_[a]);
        if (s == sub.parent_object_to_sub.end() ||
            d == sub.parent_object_to_sub.end())
            continue;
        int id = static_cast<int>(c.arrow_src_.size());
        c.arrow_src_.push_back(s->second);
        c.arrow_dst_.push_back(d->second);
        c.arrow_names_.push_back(arrow_names_[a]);
        sub.arrow_to_parent.push_back(a);
        sub.parent_arrow_to_sub.emplace(a, id);
        if (identity_[arrow_src_[a]] == a) c.identity_[s->second] = id;
    }
    if (!thin_) {
        for (int f = 0; f < static_cast<int>(sub.arrow_to_parent.size()); ++f)
            for (int g = 0; g < static_cast<int>(sub.arrow_to_parent.size());
                 ++g) {
                int pf = sub.arrow_to_parent[f], pg = sub.arrow_to_parent[g];
                if (arrow_dst_[pf] != arrow_src_[pg]) continue;
                c.comp_[pair_key(g, f)] =
                    sub.parent_arrow_to_sub.at(compose(pg, pf));
            }
    }
    c.index_and_validate();
    sub.cat = std::move(c);
    return sub;
}

FinFunctor::FinFunctor(const FinCategory& source, const FinCategory& target,
                       std::vector<int> object_map, std::vector<int> arrow_map)
    : source_(&source),
      target_(&target),
      object_map_(std::move(object_map)),
      arrow_map_(std::move(arrow_map)) {
    if (static_cast<int>(object_map_.size()) != source.num_objects())
        throw ValidationError("functor object map has wrong size");
    if (static_cast<int>(arrow_map_.size()) != source.num_arrows())
        throw ValidationError("functor arrow map has wrong size");
    for (int x : object_map_)
        if (x < 0 || x >= target.num_objects())
            throw ValidationError("functor object image out of range");
    for (int a = 0; a < source.num_arrows(); ++a) {
        int fa = arrow_map_[a];
        if (fa < 0 || fa >= target.num_arrows())
            throw ValidationError("functor arrow image out of range");
        if (target.src(fa) != object_map_[source.src(a)] ||
            target.dst(fa) != object_map_[source.dst(a)])
            throw ValidationError("functor breaks source/target on arrow " +
                                  source.arrow_name(a));
    }
    for (int x = 0; x < source.num_objects(); ++x)
        if (arrow_map_[source.identity(x)] != target.identity(object_map_[x]))
            throw ValidationError("functor does not preserve the identity of " +
                                  source.object_name(x));
    if (!target.is_thin()) {
        // In a thin target parallel arrows coincide, so composition is
        // automatically preserved once endpoints check out.
        for (int f = 0; f < source.num_arrows(); ++f)
            for (int y = 0; y < source.num_objects(); ++y)
                for (int g : source.hom(source.dst(f), y))
                    if (arrow_map_[source.compose(g, f)] !=
                        target.compose(arrow_map_[g], arrow_map_[f]))
                        throw ValidationError(
                            "functor does not preserve composition on (" +
                            source.arrow_name(g) + ", " +
                            source.arrow_name(f) + ")");
    }
}

FinFunctor FinFunctor::identity(const FinCategory& c) {
    std::vector<int> objs(c.num_objects());
    std::vector<int> arrs(c.num_arrows());
    for (int i = 0; i < c.num_objects(); ++i) objs[i] = i;
    for (int a = 0; a < c.num_arrows(); ++a) arrs[a] = a;
    return FinFunctor(c, c, std::move(objs), std::move(arrs));
}

MonoidalTable::MonoidalTable(const FinCategory& c, int unit,
                             std::vector<int> tensor_obj,
                             std::unordered_map<std::uint64_t, int> tensor_arrow,
                             std::vector<int> symmetry)
    : cat_(&c),
      unit_(unit),
      tensor_obj_(std::move(tensor_obj)),
      tensor_arrow_(std::move(tensor_arrow)),
      symmetry_(std::move(symmetry)) {
    validate();
}

MonoidalTable MonoidalTable::thin(const FinCategory& c, int unit,
                                  const std::function<int(int, int)>& tensor) {
    if (!c.is_thin())
        throw ValidationError(
            "thin monoidal construction requires a thin category");
    int n = c.num_objects();
    std::vector<int> tobj(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int t = tensor(x, y);
            if (t < 0 || t >= n)
                throw ValidationError("tensor value out of range");
            tobj[static_cast<std::size_t>(x) * n + y] = t;
        }
    std::vector<int> sym(static_cast<std::size_t>(n) * n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int xy = tobj[static_cast<std::size_t>(x) * n + y];
            int yx = tobj[static_cast<std::size_t>(y) * n + x];
            const auto& h = c.hom(xy, yx);
            if (h.empty())
                throw ValidationError("no symmetry arrow " +
                                      c.object_name(xy) + " -> " +
                                      c.object_name(yx));
            sym[static_cast<std::size_t>(x) * n + y] = h.front();
        }
    MonoidalTable m(c, unit, std::move(tobj), {}, std::move(sym));
    return m;
}

int MonoidalTable::tensor_arrow(int f, int g) const {
    if (cat_->is_thin()) {
        int s = tensor(cat_->src(f), cat_->src(g));
        int d = tensor(cat_->dst(f), cat_->dst(g));
        const auto& h = cat_->hom(s, d);
        if (h.empty())
            throw InternalError("thin tensor arrow does not exist");
        return h.front();
    }
    auto it = tensor_arrow_.find(pair_key(f, g));
    if (it == tensor_arrow_.end())
        throw ValidationError("tensor arrow table is missing (" +
                              cat_->arrow_name(f) + ", " +
                              cat_->arrow_name(g) + ")");
    return it->second;
}

void MonoidalTable::validate() {
    int n = cat_->num_objects();
    if (unit_ < 0 || unit_ >= n)
        throw ValidationError("monoidal unit out of range");
    if (static_cast<int>(tensor_obj_.size()) !=
        static_cast<int>(static_cast<std::size_t>(n) * n))
        throw ValidationError("object tensor table has wrong size");
    if (static_cast<int>(symmetry_.size()) !=
        static_cast<int>(static_cast<std::size_t>(n) * n))
        throw ValidationError("symmetry table has wrong size");
    for (int t : tensor_obj_)
        if (t < 0 || t >= n)
            throw ValidationError("object tensor value out of range");

    for (int x = 0; x < n; ++x) {
        if (tensor(unit_, x) != x || tensor(x, unit_) != x)
            throw ValidationError("strict unit law fails at " +
                                  cat_->object_name(x));
        for (int y = 0; y < n; ++y) {
            int xy = tensor(x, y);
            for (int z = 0; z < n; ++z)
                if (tensor(xy, z) != tensor(x, tensor(y, z)))
                    throw ValidationError(
                        "strict associativity fails on (" +
                        cat_->object_name(x) + ", " + cat_->object_name(y) +
                        ", " + cat_->object_name(z) + ")");
        }
    }

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int s = symmetry(x, y);
            if (s < 0 || s >= cat_->num_arrows())
                throw ValidationError("symmetry arrow out of range");
            if (cat_->src(s) != tensor(x, y) || cat_->dst(s) != tensor(y, x))
                throw ValidationError("symmetry arrow for (" +
                                      cat_->object_name(x) + ", " +
                                      cat_->object_name(y) +
                                      ") has wrong endpoints");
            if (cat_->compose(symmetry(y, x), s) !=
                cat_->identity(tensor(x, y)))
                throw ValidationError("symmetry is not an involution at (" +
                                      cat_->object_name(x) + ", " +
                                      cat_->object_name(y) + ")");
        }

    if (cat_->is_thin()) {
        // Arrow-level laws are automatic in a thin category; what remains is
        // that the arrow tensor exists, i.e. the tensor is monotone.
        for (int a = 0; a < cat_->num_arrows(); ++a) {
            int x = cat_->src(a), y = cat_->dst(a);
            for (int z = 0; z < n; ++z) {
                if (cat_->hom(tensor(x, z), tensor(y, z)).empty() ||
                    cat_->hom(tensor(z, x), tensor(z, y)).empty())
                    throw ValidationError(
                        "tensor is not monotone on arrow " +
                        cat_->arrow_name(a) + " with " + cat_->object_name(z));
            }
        }
        return;
    }

    // General case: identity tensors, bifunctoriality, naturality of the
    // symmetry, all exhaustively.
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (tensor_arrow(cat_->identity(x), cat_->identity(y)) !=
                cat_->identity(tensor(x, y)))
                throw ValidationError("identity (x) identity differs from "
                                      "identity at (" +
                                      cat_->object_name(x) + ", " +
                                      cat_->object_name(y) + ")");
    int m = cat_->num_arrows();
    for (int f = 0; f < m; ++f)
        for (int g = 0; g < m; ++g) {
            int fg = tensor_arrow(f, g);
            if (cat_->src(fg) != tensor(cat_->src(f), cat_->src(g)) ||
                cat_->dst(fg) != tensor(cat_->dst(f), cat_->dst(g)))
                throw ValidationError("arrow tensor has wrong endpoints on (" +
                                      cat_->arrow_name(f) + ", " +
                                      cat_->arrow_name(g) + ")");
            // Naturality of the symmetry on (f, g).
            int top = cat_->compose(symmetry(cat_->dst(f), cat_->dst(g)), fg);
            int bot = cat_->compose(tensor_arrow(g, f),
                                    symmetry(cat_->src(f), cat_->src(g)));
            if (top != bot)
                throw ValidationError("symmetry is not natural on (" +
                                      cat_->arrow_name(f) + ", " +
                                      cat_->arrow_name(g) + ")");
        }
    for (int f = 0; f < m; ++f)
        for (int f2 = 0; f2 < m; ++f2) {
            if (cat_->dst(f) != cat_->src(f2)) continue;
            for (int g = 0; g < m; ++g)
                for (int g2 = 0; g2 < m; ++g2) {
                    if (cat_->dst(g) != cat_->src(g2)) continue;
                    int lhs = tensor_arrow(cat_->compose(f2, f),
                                           cat_->compose(g2, g));
                    int rhs = cat_->compose(tensor_arrow(f2, g2),
                                            tensor_arrow(f, g));
                    if (lhs != rhs)
                        throw ValidationError(
                            "tensor is not bifunctorial on ((" +
                            cat_->arrow_name(f2) + " . " +
                            cat_->arrow_name(f) + "), (" +
                            cat_->arrow_name(g2) + " . " +
                            cat_->arrow_name(g) + "))");
                }
        }
}

FinFunctor MonoidalTable::tensor_right(int v) const {
    int n = cat_->num_objects();
    std::vector<int> objs(n);
    for (int x = 0; x < n; ++x) objs[x] = tensor(x, v);
    std::vector<int> arrs(cat_->num_arrows());
    int idv = cat_->identity(v);
    for (int a = 0; a < cat_->num_arrows(); ++a)
        arrs[a] = tensor_arrow(a, idv);
    return FinFunctor(*cat_, *cat_, std::move(objs), std::move(arrs));
}

MonoidalTable MonoidalTable::restrict(
    const Subcategory& sub) const {
    int n = sub.cat.num_objects();
    auto sub_obj = [&](int parent) {
        auto it = sub.parent_object_to_sub.find(parent);
        if (it == sub.parent_object_to_sub.end())
            throw ValidationError(
                "subcategory is not closed under the tensor (misses " +
                cat_->object_name(parent) + ")");
        return it->second;
    };
    std::vector<int> tobj(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            tobj[static_cast<std::size_t>(x) * n + y] = sub_obj(
                tensor(sub.object_to_parent[x], sub.object_to_parent[y]));
    int unit = sub_obj(unit_);
    auto sub_arrow = [&](int parent) {
        auto it = sub.parent_arrow_to_sub.find(parent);
        if (it == sub.parent_arrow_to_sub.end())
            throw ValidationError("subcategory misses a structure arrow");
        return it->second;
    };
    std::vector<int> sym(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            sym[static_cast<std::size_t>(x) * n + y] = sub_arrow(
                symmetry(sub.object_to_parent[x], sub.object_to_parent[y]));
    std::unordered_map<std::uint64_t, int> tarr;
    if (!sub.cat.is_thin()) {
        int m = static_cast<int>(sub.arrow_to_parent.size());
        for (int f = 0; f < m; ++f)
            for (int g = 0; g < m; ++g)
                tarr[pair_key(f, g)] = sub_arrow(tensor_arrow(
                    sub.arrow_to_parent[f], sub.arrow_to_parent[g]));
    }
    return MonoidalTable(sub.cat, unit, std::move(tobj), std::move(tarr),
                         std::move(sym));
}

std::optional<UniversalPair> universal_from_functor_to_object(
    const FinFunctor& F, int Z, TieBreak tb) {
    const FinCategory& c = F.source();
    const FinCategory& d = F.target();
    std::vector<int> order(c.num_objects());
    for (int i = 0; i < c.num_objects(); ++i)
        order[i] = tb == TieBreak::SmallestId ? i : c.num_objects() - 1 - i;

    for (int p : order) {
        for (int eps : d.hom(F.on_object(p), Z)) {
            bool ok = true;
            for (int x = 0; x < c.num_objects() && ok; ++x) {
                for (int h : d.hom(F.on_object(x), Z)) {
                    int count = 0;
                    for (int f : c.hom(x, p))
                        if (d.compose(eps, F.on_arrow(f)) == h) ++count;
                    if (count != 1) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) return UniversalPair{p, eps};
        }
    }
    return std::nullopt;
}

int uniqueness_iso(const FinFunctor& F, int /*Z*/, const UniversalPair& a,
                   const UniversalPair& b) {
    const FinCategory& c = F.source();
    const FinCategory& d = F.target();
    auto comparison = [&](const UniversalPair& from,
                          const UniversalPair& to) {
        std::vector<int> hits;
        for (int g : c.hom(from.object, to.object))
            if (d.compose(to.counit, F.on_arrow(g)) == from.counit)
                hits.push_back(g);
        if (hits.size() != 1)
            throw ValidationError(
                "comparison arrow between universal pairs is not unique (" +
                std::to_string(hits.size()) + " candidates from " +
                c.object_name(from.object) + " to " +
                c.object_name(to.object) + ")");
        return hits.front();
    };
    int fwd = comparison(a, b);
    int bwd = comparison(b, a);
    if (c.compose(bwd, fwd) != c.identity(a.object) ||
        c.compose(fwd, bwd) != c.identity(b.object))
        throw ValidationError("comparison arrows are not mutually inverse");
    return fwd;
}

std::optional<RelativeLeftAdjoint> relative_left_adjoint(
    const FinFunctor& G, const std::vector<int>& domain_objects, TieBreak tb) {
    const FinCategory& d = G.source();
    const FinCategory& c = G.target();
    RelativeLeftAdjoint adj;
    adj.domain_objects = domain_objects;

    std::vector<int> order(d.num_objects());
    for (int i = 0; i < d.num_objects(); ++i)
        order[i] = tb == TieBreak::SmallestId ? i : d.num_objects() - 1 - i;

    for (int x : domain_objects) {
        bool found = false;
        for (int fx : order) {
            for (int eta : c.hom(x, G.on_object(fx))) {
                bool ok = true;
                for (int z = 0; z < d.num_objects() && ok; ++z) {
                    for (int g : c.hom(x, G.on_object(z))) {
                        int count = 0;
                        for (int f : d.hom(fx, z))
                            if (c.compose(G.on_arrow(f), eta) == g) ++count;
                        if (count != 1) {
                            ok = false;
                            break;
                        }
                    }
                }
                if (ok) {
                    adj.object_map[x] = fx;
                    adj.unit[x] = eta;
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) return std::nullopt;
    }

    // Extend to arrows between domain objects: F u is the unique solution of
    // G(F u) . unit_X = unit_Y . u.
    std::unordered_map<int, bool> in_domain;
    for (int x : domain_objects) in_domain[x] = true;
    for (int u = 0; u < c.num_arrows(); ++u) {
        int x = c.src(u), y = c.dst(u);
        if (!in_domain.count(x) || !in_domain.count(y)) continue;
        int want = c.compose(adj.unit[y], u);
        int hits = 0, arrow = -1;
        for (int f : d.hom(adj.object_map[x], adj.object_map[y]))
            if (c.compose(G.on_arrow(f), adj.unit[x]) == want) {
                ++hits;
                arrow = f;
            }
        if (hits != 1)
            throw InternalError("adjoint arrow extension is not unique");
        adj.arrow_map[u] = arrow;
    }
    return adj;
}

std::vector<std::string> check_adjunction_bijection(
    const FinFunctor& G, const RelativeLeftAdjoint& adj) {
    const FinCategory& d = G.source();
    const FinCategory& c = G.target();
    std::vector<std::string> bad;
    for (int x : adj.domain_objects) {
        int fx = adj.object_map.at(x);
        int eta = adj.unit.at(x);
        for (int z = 0; z < d.num_objects(); ++z) {
            // h |-> G h . eta  must hit each arrow x -> G z exactly once.
            std::map<int, int> hit;
            for (int g : c.hom(x, G.on_object(z))) hit[g] = 0;
            for (int h : d.hom(fx, z)) ++hit[c.compose(G.on_arrow(h), eta)];
            for (auto [g, k] : hit)
                if (k != 1)
                    bad.push_back("transpose map is not a bijection at (" +
                                  c.object_name(x) + ", " + d.object_name(z) +
                                  "): arrow " + c.arrow_name(g) + " hit " +
                                  std::to_string(k) + " times");
        }
    }
    for (auto [u, fu] : adj.arrow_map) {
        int x = c.src(u), y = c.dst(u);
        if (c.compose(G.on_arrow(fu), adj.unit.at(x)) !=
            c.compose(adj.unit.at(y), u))
            bad.push_back("unit is not natural at " + c.arrow_name(u));
    }
    return bad;
}

CohomTable relative_adjunction_with_parameter(const MonoidalTable& M,
                                              const std::vector<int>& params,
                                              const std::vector<int>& args,
                                              TieBreak tb) {
    const FinCategory& c = M.category();
    CohomTable table;
    table.params = params;
    table.args = args;
    if (table.args.empty()) {
        table.args.resize(c.num_objects());
        for (int i = 0; i < c.num_objects(); ++i) table.args[i] = i;
    }
    for (int v : params) {
        FinFunctor gv = M.tensor_right(v);
        for (int w : table.args) {
            auto adj = relative_left_adjoint(gv, {w}, tb);
            if (adj)
                table.entry[{v, w}] =
                    CohomEntry{adj->object_map.at(w), adj->unit.at(w)};
            else
                table.entry[{v, w}] = std::nullopt;
        }
    }
    return table;
}

std::vector<std::string> check_cohom_functoriality(const MonoidalTable& M,
                                                   const CohomTable& table) {
    const FinCategory& c = M.category();
    std::vector<std::string> bad;

    auto entry = [&](int v, int w) -> const std::optional<CohomEntry>& {
        static const std::optional<CohomEntry> none;
        auto it = table.entry.find({v, w});
        return it == table.entry.end() ? none : it->second;
    };

    // The induced map for a: V' -> V (contravariant) and b: W -> W' is the
    // unique u with (u (x) id_V) . coev_{V,W} = (id (x) a) . coev_{V',W'} . b.
    auto induced = [&](int vp, int v, int a, int w, int wp,
                       int b) -> std::optional<int> {
        const auto& e = entry(v, w);
        const auto& ep = entry(vp, wp);
        if (!e || !ep) return std::nullopt;
        int goal = c.compose(
            M.tensor_arrow(c.identity(ep->object), a),
            c.compose(ep->coev, b));
        int hits = 0, got = -1;
        for (int u : c.hom(e->object, ep->object))
            if (c.compose(M.tensor_arrow(u, c.identity(v)), e->coev) == goal) {
                ++hits;
                got = u;
            }
        if (hits != 1) {
            bad.push_back("induced cohom arrow is not unique for (" +
                          c.arrow_name(a) + ", " + c.arrow_name(b) + "): " +
                          std::to_string(hits) + " candidates");
            return std::nullopt;
        }
        return got;
    };

    auto arrows_between = [&](const std::vector<int>& objs) {
        std::vector<int> out;
        for (int x : objs)
            for (int y : objs)
                for (int a : c.hom(x, y)) out.push_back(a);
        return out;
    };
    std::vector<int> pa = arrows_between(table.params);
    std::vector<int> aa = arrows_between(table.args);

    // Identity law.
    for (int v : table.params)
        for (int w : table.args) {
            const auto& e = entry(v, w);
            if (!e) continue;
            auto u = induced(v, v, c.identity(v), w, w, c.identity(w));
            if (u && *u != c.identity(e->object))
                bad.push_back("cohom(id, id) is not the identity at (" +
                              c.object_name(v) + ", " + c.object_name(w) +
                              ")");
        }

    // Composition law, contravariant in the parameter.
    for (int a : pa)
        for (int a2 : pa) {
            if (c.dst(a2) != c.src(a)) continue;  // a2: V'' -> V', a: V' -> V
            for (int b : aa)
                for (int b2 : aa) {
                    if (c.dst(b) != c.src(b2)) continue;  // b then b2
                    auto u1 = induced(c.src(a), c.dst(a), a, c.src(b),
                                      c.dst(b), b);
                    auto u2 = induced(c.src(a2), c.dst(a2), a2, c.src(b2),
                                      c.dst(b2), b2);
                    auto u12 = induced(c.src(a2), c.dst(a), c.compose(a, a2),
                                       c.src(b), c.dst(b2), c.compose(b2, b));
                    if (u1 && u2 && u12 && c.compose(*u2, *u1) != *u12)
                        bad.push_back("cohom functoriality fails on (" +
                                      c.arrow_name(a) + "." +
                                      c.arrow_name(a2) + ", " +
                                      c.arrow_name(b2) + "." +
                                      c.arrow_name(b) + ")");
                }
        }

    // Dinaturality of coev in the parameter.
    for (int a : pa) {
        int vp = c.src(a), v = c.dst(a);
        for (int w : table.args) {
            const auto& e = entry(v, w);
            const auto& ep = entry(vp, w);
            if (!e || !ep) continue;
            auto u = induced(vp, v, a, w, w, c.identity(w));
            if (!u) continue;
            int lhs = c.compose(M.tensor_arrow(c.identity(ep->object), a),
                                ep->coev);
            int rhs = c.compose(M.tensor_arrow(*u, c.identity(v)), e->coev);
            if (lhs != rhs)
                bad.push_back("coev is not dinatural on " + c.arrow_name(a) +
                              " at argument " + c.object_name(w));
        }
    }
    return bad;
}

}  // namespace maninkit
