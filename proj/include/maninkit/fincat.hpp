#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "maninkit/errors.hpp"

namespace maninkit {

/// Caps on category sizes.  General categories stay small because their
/// composition tables are validated exhaustively; thin categories (at most
/// one arrow per hom-set) have nothing to validate per hom, so they may be
/// larger.
inline constexpr int kMaxObjects = 64;
inline constexpr int kMaxThinObjects = 256;
inline constexpr int kMaxArrowsPerHom = 64;

class FinCategory;

/// The full subcategory on a chosen object set, with id maps back to the
/// parent category in both directions.
struct Subcategory;

/// A finite category with explicitly tabulated composition.  Construction
/// validates the category axioms (identity laws, associativity) and the size
/// caps, and throws ValidationError on any violation.
class FinCategory {
  public:
    class Builder {
      public:
        explicit Builder(int n_objects,
                         std::vector<std::string> object_names = {});
        /// Returns the new arrow's id.  Ids are assigned in call order.
        int add_arrow(int src, int dst, std::string name = "");
        /// Declare an already-added arrow as the identity of its object.
        void set_identity(int obj, int arrow);
        /// Record g after f: set_compose(g, f, gf) for f: x->y, g: y->z.
        void set_compose(int g, int f, int gf);
        FinCategory build() &&;

      private:
        friend class FinCategory;
        int n_objects_;
        std::vector<std::string> object_names_;
        std::vector<std::pair<int, int>> arrows_;  // (src, dst)
        std::vector<std::string> arrow_names_;
        std::vector<int> identity_;
        std::unordered_map<std::uint64_t, int> comp_;
    };

    /// Thin category on objects 0..n-1 with an arrow x -> y iff leq(x, y).
    /// The relation must be reflexive and transitive.  Arrows are enumerated
    /// in `order` if given (pairs (src, dst), one per related pair), else by
    /// ascending (src, dst).
    static FinCategory thin(int n_objects,
                            const std::function<bool(int, int)>& leq,
                            std::vector<std::string> object_names = {},
                            std::vector<std::pair<int, int>> order = {});

    int num_objects() const { return n_objects_; }
    int num_arrows() const { return static_cast<int>(arrow_src_.size()); }
    int src(int arrow) const { return arrow_src_[arrow]; }
    int dst(int arrow) const { return arrow_dst_[arrow]; }
    int identity(int obj) const { return identity_[obj]; }
    bool is_identity(int arrow) const {
        return identity_[arrow_src_[arrow]] == arrow;
    }
    /// Arrow ids from x to y, in enumeration order.
    const std::vector<int>& hom(int x, int y) const {
        return hom_[static_cast<std::size_t>(x) * n_objects_ + y];
    }
    /// g after f; throws InternalError if dst(f) != src(g).
    int compose(int g, int f) const;
    bool is_thin() const { return thin_; }

    const std::string& object_name(int obj) const { return object_names_[obj]; }
    const std::string& arrow_name(int arrow) const {
        return arrow_names_[arrow];
    }

    /// The full subcategory on the given parent objects.
    Subcategory full_subcategory(const std::vector<int>& objects) const;

    /// An empty placeholder; meaningful values come from Builder::build,
    /// thin, or full_subcategory.
    FinCategory() = default;

  private:
    void index_and_validate();

    int n_objects_ = 0;
    std::vector<std::string> object_names_;
    std::vector<int> arrow_src_;
    std::vector<int> arrow_dst_;
    std::vector<std::string> arrow_names_;
    std::vector<int> identity_;
    std::vector<std::vector<int>> hom_;
    std::unordered_map<std::uint64_t, int> comp_;
    bool thin_ = false;
};

struct Subcategory {
    FinCategory cat;
    std::vector<int> object_to_parent;
    std::vector<int> arrow_to_parent;
    std::unordered_map<int, int> parent_object_to_sub;
    std::unordered_map<int, int> parent_arrow_to_sub;
};

/// A functor between tabulated categories; construction validates that it
/// preserves sources, targets, identities, and composition.
class FinFunctor {
  public:
    FinFunctor(const FinCategory& source, const FinCategory& target,
               std::vector<int> object_map, std::vector<int> arrow_map);
    static FinFunctor identity(const FinCategory& c);

    const FinCategory& source() const { return *source_; }
    const FinCategory& target() const { return *target_; }
    int on_object(int obj) const { return object_map_[obj]; }
    int on_arrow(int arrow) const { return arrow_map_[arrow]; }

  private:
    const FinCategory* source_;
    const FinCategory* target_;
    std::vector<int> object_map_;
    std::vector<int> arrow_map_;
};

/// A strict symmetric monoidal structure on a FinCategory, given by tables:
/// tensor on objects, unit object, tensor on arrows, and the symmetry
/// arrows s_{x,y}: x(x)y -> y(x)x.  Construction validates strict
/// associativity and unit laws, bifunctoriality, s<->s inverse pairs, and
/// naturality of s.  For thin categories the arrow-level laws hold
/// automatically and only the object-level tables are checked.
class MonoidalTable {
  public:
    MonoidalTable(const FinCategory& c, int unit, std::vector<int> tensor_obj,
                  std::unordered_map<std::uint64_t, int> tensor_arrow,
                  std::vector<int> symmetry);
    /// Derive the arrow tensor and symmetry tables of a thin category from
    /// the object-level tensor.
    static MonoidalTable thin(const FinCategory& c, int unit,
                              const std::function<int(int, int)>& tensor);

    const FinCategory& category() const { return *cat_; }
    int unit() const { return unit_; }
    int tensor(int x, int y) const {
        return tensor_obj_[static_cast<std::size_t>(x) * cat_->num_objects() +
                           y];
    }
    int tensor_arrow(int f, int g) const;
    int symmetry(int x, int y) const {
        return symmetry_[static_cast<std::size_t>(x) * cat_->num_objects() + y];
    }
    /// The endofunctor  - (x) v.
    FinFunctor tensor_right(int v) const;
    /// Restriction to a full subcategory whose objects are closed under the
    /// tensor and contain the unit.
    MonoidalTable restrict(const Subcategory& sub) const;

  private:
    void validate();
    const FinCategory* cat_;
    int unit_;
    std::vector<int> tensor_obj_;
    std::unordered_map<std::uint64_t, int> tensor_arrow_;
    std::vector<int> symmetry_;
};

enum class TieBreak { SmallestId, LargestId };

/// A universal arrow from a functor F to an object Z: a pair (P, e) with
/// e: F P -> Z such that every h: F X -> Z factors as h = e . F f for a
/// unique f: X -> P.
struct UniversalPair {
    int object;
    int counit;
};

/// Exhaustive search for a universal arrow from F to Z.  Candidates are
/// scanned by object id (ascending for SmallestId, descending for LargestId)
/// and then by hom enumeration order; the first hit wins.
std::optional<UniversalPair> universal_from_functor_to_object(
    const FinFunctor& F, int Z, TieBreak tb = TieBreak::SmallestId);

/// The unique comparison arrow between two universal arrows from F to Z:
/// g: a.object -> b.object with a.counit = b.counit . F g.  Verifies that g
/// and its counterpart in the other direction are mutually inverse; throws
/// ValidationError if existence or uniqueness fails.
int uniqueness_iso(const FinFunctor& F, int Z, const UniversalPair& a,
                   const UniversalPair& b);

/// A left adjoint of G: D -> C defined on the listed objects of C.  For each
/// such X it holds (FX, unit_X: X -> G FX) with: every g: X -> G Z factors
/// as g = G f . unit_X for a unique f: FX -> Z.
struct RelativeLeftAdjoint {
    std::vector<int> domain_objects;
    std::unordered_map<int, int> object_map;  // X -> FX
    std::unordered_map<int, int> unit;        // X -> unit arrow id in C
    std::unordered_map<int, int> arrow_map;   // C-arrows between domain
                                              // objects -> D-arrows
};

std::optional<RelativeLeftAdjoint> relative_left_adjoint(
    const FinFunctor& G, const std::vector<int>& domain_objects,
    TieBreak tb = TieBreak::SmallestId);

/// Law check for a computed adjoint: h |-> G h . unit_X must be a bijection
/// Hom(FX, Z) -> Hom(X, G Z) for every domain object X and every Z, and the
/// unit must be natural.  Returns human-readable violation witnesses
/// (empty means all laws hold).
std::vector<std::string> check_adjunction_bijection(
    const FinFunctor& G, const RelativeLeftAdjoint& adj);

/// One entry of an internal-cohom table: H = cohom(V, W) with coevaluation
/// coev: W -> H (x) V.
struct CohomEntry {
    int object;
    int coev;
};

struct CohomTable {
    std::vector<int> params;  // the V values
    std::vector<int> args;    // the W values
    std::map<std::pair<int, int>, std::optional<CohomEntry>> entry;
};

/// For each parameter V and argument W, searches the whole category for an
/// object H and coev: W -> H (x) V such that every g: W -> Z (x) V factors
/// as g = (f (x) id_V) . coev for a unique f: H -> Z.  Empty `args` means
/// all objects.
CohomTable relative_adjunction_with_parameter(
    const MonoidalTable& M, const std::vector<int>& params,
    const std::vector<int>& args = {}, TieBreak tb = TieBreak::SmallestId);

/// Law checks for a computed cohom table restricted to its own parameter and
/// argument sets: functoriality of the induced maps cohom(f, g)
/// (contravariant in the parameter, covariant in the argument) and
/// dinaturality of coev in the parameter.  Returns violation witnesses.
std::vector<std::string> check_cohom_functoriality(const MonoidalTable& M,
                                                   const CohomTable& table);

}  // namespace maninkit
