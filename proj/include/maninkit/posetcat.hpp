#pragma once

#include <memory>
#include <string>
#include <vector>

#include "maninkit/fincat.hpp"

namespace maninkit {

/// The totally ordered set {0, 1, ..., n} as a thin monoidal category with
/// tensor max and unit 0.  Internal cohom has the closed form
///   cohom(x, y) = 0 if x >= y, else y.
struct MaxPoset {
    int n;
    std::shared_ptr<FinCategory> cat;
    std::shared_ptr<MonoidalTable> monoidal;

    static MaxPoset make(int n);
    int cohom_closed_form(int x, int y) const { return x >= y ? 0 : y; }
};

/// All subsets of {1, ..., n} ordered by inclusion, as a thin monoidal
/// category with tensor union and unit the empty set.  Objects are bitmasks
/// (bit k-1 encodes membership of k).  Internal cohom has the closed form
///   cohom(X, Y) = Y \ X.
struct SubsetCategory {
    int n;
    std::shared_ptr<FinCategory> cat;
    std::shared_ptr<MonoidalTable> monoidal;

    /// `reversed_arrow_order` enumerates the inclusion arrows backwards; the
    /// category is the same, which lets callers check that search results do
    /// not depend on enumeration order.
    static SubsetCategory make(int n, bool reversed_arrow_order = false);
    /// The downset {1, ..., x} as a bitmask (x = 0 gives the empty set).
    static int downset(int x) { return (1 << x) - 1; }
    int cohom_closed_form(int X, int Y) const { return Y & ~X; }
    static std::string set_name(int mask, int n);
};

/// A pair (x, y) where the internal cohom of the downset chain, computed
/// inside the full subcategory on the downsets, differs from the internal
/// cohom of the ambient subset category at the same pair of downsets.
struct CohomMismatch {
    int x, y;                // chain positions, downsets D_x and D_y
    int within_downsets;     // cohom in the downset subcategory (a bitmask)
    int in_full_category;    // cohom in the ambient category (a bitmask)
};

/// Computes both cohom tables by brute-force universal-arrow search over all
/// pairs (D_x, D_y), 0 <= x, y <= n, and returns the pairs where they
/// disagree, in lexicographic (x, y) order.
std::vector<CohomMismatch> verify_subcategory_cohom_differs(int n);

}  // namespace maninkit
