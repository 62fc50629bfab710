#include "maninkit/posetcat.hpp"

#include <algorithm>

namespace maninkit {

MaxPoset MaxPoset::make(int n) {
    if (n < 0) throw InputError("chain length must be nonnegative");
    MaxPoset p;
    p.n = n;
    p.cat = std::make_shared<FinCategory>(
        FinCategory::thin(n + 1, [](int x, int y) { return x <= y; }));
    p.monoidal = std::make_shared<MonoidalTable>(MonoidalTable::thin(
        *p.cat, 0, [](int x, int y) { return std::max(x, y); }));
    return p;
}

std::string SubsetCategory::set_name(int mask, int n) {
    std::string s = "{";
    bool first = true;
    for (int k = 1; k <= n; ++k)
        if (mask & (1 << (k - 1))) {
            if (!first) s += ",";
            s += std::to_string(k);
            first = false;
        }
    return s + "}";
}

SubsetCategory SubsetCategory::make(int n, bool reversed_arrow_order) {
    if (n < 0 || n > 8)
        throw InputError("subset category supports ground sets of size 0..8");
    SubsetCategory s;
    s.n = n;
    int count = 1 << n;
    std::vector<std::string> names;
    names.reserve(count);
    for (int m = 0; m < count; ++m) names.push_back(set_name(m, n));

    auto leq = [](int x, int y) { return (x | y) == y; };
    std::vector<std::pair<int, int>> order;
    if (reversed_arrow_order) {
        for (int x = count - 1; x >= 0; --x)
            for (int y = count - 1; y >= 0; --y)
                if (leq(x, y)) order.emplace_back(x, y);
    }
    s.cat = std::make_shared<FinCategory>(
        FinCategory::thin(count, leq, std::move(names), std::move(order)));
    s.monoidal = std::make_shared<MonoidalTable>(MonoidalTable::thin(
        *s.cat, 0, [](int x, int y) { return x | y; }));
    return s;
}

std::vector<CohomMismatch> verify_subcategory_cohom_differs(int n) {
    SubsetCategory s = SubsetCategory::make(n);
    std::vector<int> downsets;
    for (int x = 0; x <= n; ++x) downsets.push_back(SubsetCategory::downset(x));

    Subcategory sub = s.cat->full_subcategory(downsets);
    MonoidalTable sub_monoidal = s.monoidal->restrict(sub);
    std::vector<int> sub_objects(sub.cat.num_objects());
    for (int i = 0; i < sub.cat.num_objects(); ++i) sub_objects[i] = i;
    CohomTable within = relative_adjunction_with_parameter(
        sub_monoidal, sub_objects, sub_objects);
    CohomTable ambient =
        relative_adjunction_with_parameter(*s.monoidal, downsets, downsets);

    std::vector<CohomMismatch> out;
    for (int x = 0; x <= n; ++x)
        for (int y = 0; y <= n; ++y) {
            const auto& w = within.entry.at({x, y});  // sub object ids = x, y
            const auto& a = ambient.entry.at(
                {SubsetCategory::downset(x), SubsetCategory::downset(y)});
            int w_mask = w ? sub.object_to_parent[w->object] : -1;
            int a_mask = a ? a->object : -1;
            if (w_mask != a_mask)
                out.push_back(CohomMismatch{x, y, w_mask, a_mask});
        }
    return out;
}

}  // namespace maninkit
