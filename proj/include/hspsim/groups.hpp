// Finite group machinery. Two representations:
//   - AbelianGroup: a product of cyclic factors; elements are flat indices in
//     mixed radix (first factor most significant). Characters are evaluated
//     both numerically and by an exact integer congruence.
//   - FiniteGroup: an explicit multiplication table for the built-in families
//     (cyclic / products of cyclic, dihedral D_n for 3 <= n <= 6, symmetric
//     S_3 and S_4), with hand-entered character tables validated on
//     construction.
// Everything here is desk scale: operations are brute force over all
// elements and serve as ground truth for the samplers.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hspsim/errors.hpp"
#include "hspsim/linalg.hpp"

namespace hspsim {

struct AbelianGroup {
    std::vector<std::int64_t> orders;  // cyclic factor orders, each >= 1

    explicit AbelianGroup(std::vector<std::int64_t> factor_orders);

    std::int64_t size() const { return size_; }
    std::vector<std::int64_t> decode(std::int64_t index) const;
    std::int64_t encode(std::span<const std::int64_t> digits) const;
    std::int64_t add(std::int64_t a, std::int64_t b) const;
    std::int64_t negate(std::int64_t a) const;

    // chi_l(g) = exp(2*pi*i * sum_j l_j g_j / n_j). Labels share the element
    // encoding, so the dual group is identified with the group itself.
    cplx character(std::int64_t label, std::int64_t g) const;
    // Exact test for chi_l(g) == 1, done in integers: sum_j l_j g_j (L/n_j)
    // must vanish mod L = lcm(n_j).
    bool character_is_one(std::int64_t label, std::int64_t g) const;

  private:
    std::int64_t size_ = 1;
    std::int64_t lcm_ = 1;
};

// A subgroup is stored by its sorted element list; `parent_size` ties it to
// the group it lives in. Element 0 is always the identity.
struct Subgroup {
    std::int64_t parent_size = 0;
    std::vector<std::int64_t> generators;
    std::vector<std::int64_t> elements;  // sorted, unique, contains 0

    std::int64_t size() const { return std::int64_t(elements.size()); }
    bool contains(std::int64_t g) const;

    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.parent_size == b.parent_size && a.elements == b.elements;
    }
};

struct Coset {
    std::int64_t representative = 0;
    std::vector<std::int64_t> elements;  // sorted
};

Subgroup subgroup_closure(const AbelianGroup& g, std::span<const std::int64_t> gens);

// Annihilator of K: all labels l with chi_l(k) == 1 for every k in K
// (exact integer test). Brute force over all |G| labels.
Subgroup annihilator(const AbelianGroup& g, const Subgroup& k);

// Intersection of the kernels of the sampled characters:
// {g : chi_l(g) == 1 for every sampled l}. With enough samples this is the
// annihilator of the annihilator, i.e. K itself.
Subgroup reconstruct_from_dual_samples(const AbelianGroup& g,
                                       std::span<const std::int64_t> labels);

Coset coset_of(const AbelianGroup& g, const Subgroup& k, std::int64_t rep);
std::vector<Coset> coset_partition(const AbelianGroup& g, const Subgroup& k);

// ---------------------------------------------------------------------------

struct FiniteGroup {
    enum class Family { AbelianProduct, Dihedral, Symmetric };

    Family family = Family::AbelianProduct;
    std::vector<std::int64_t> abelian_orders;     // AbelianProduct
    int dihedral_n = 0;                           // Dihedral: |G| = 2n
    int symmetric_n = 0;                          // Symmetric: |G| = n!
    std::vector<std::vector<int>> perms;          // Symmetric: one-line notation
    std::vector<std::string> names;

    int size() const { return size_; }
    int identity() const { return 0; }
    int multiply(int a, int b) const { return mul_[std::size_t(a) * size_ + b]; }
    int inverse(int a) const { return inv_[a]; }

    static FiniteGroup cyclic(std::int64_t n);
    static FiniteGroup abelian_product(std::vector<std::int64_t> orders);
    static FiniteGroup dihedral(int n);   // 3 <= n <= 6
    static FiniteGroup symmetric(int n);  // n in {3, 4}

  private:
    int size_ = 0;
    std::vector<int> mul_;
    std::vector<int> inv_;
    void finish_table();  // inverses + associativity/identity validation
};

struct CharacterTable {
    std::vector<std::vector<int>> classes;  // conjugacy classes, each sorted
    std::vector<int> class_of;              // element -> class index
    std::vector<int> dims;                  // irrep dimensions, trivial first
    std::vector<std::vector<cplx>> values;  // values[irrep][class]

    int irrep_count() const { return int(dims.size()); }
    cplx value(int irrep, int element) const { return values[irrep][class_of[element]]; }
};

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);

// Character table for the built-in families. Validated on construction:
// sum of squared dimensions equals |G|, rows are orthogonal under the group
// inner product, values are constant on conjugacy classes, and the value at
// the identity equals the dimension. Throws UnsupportedGroup otherwise.
CharacterTable character_table(const FiniteGroup& g);

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const std::int64_t> gens);
Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& k, std::int64_t by);
bool is_normal(const FiniteGroup& g, const Subgroup& k);

// {g : chi_irrep(g) == dims[irrep]} -- the kernel of the representation.
Subgroup kernel_of_character(const FiniteGroup& g, const CharacterTable& table, int irrep);

Coset left_coset(const FiniteGroup& g, const Subgroup& k, std::int64_t rep);
std::vector<Coset> left_coset_partition(const FiniteGroup& g, const Subgroup& k);

// All subgroups, found by closing every extension of already-found subgroups.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

Subgroup intersect(const Subgroup& a, const Subgroup& b);

}  // namespace hspsim
