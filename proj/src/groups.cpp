#include "hspsim/groups.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <string>

namespace hspsim {

namespace {

constexpr std::int64_t kMaxAbelianSize = std::int64_t(1) << 22;
constexpr int kMaxTableSize = 1024;      // explicit multiplication tables
constexpr int kFullCheckSize = 200;      // exhaustive associativity check
constexpr double kTableTol = 1e-12;

// Small generating set for a subgroup given its full element list: scan the
// elements and keep those not already generated.
template <typename OpFn>
std::vector<std::int64_t> greedy_generators(std::int64_t parent_size,
                                            const std::vector<std::int64_t>& elements,
                                            OpFn op) {
    std::vector<char> in_closure(std::size_t(parent_size), 0);
    in_closure[0] = 1;
    std::vector<std::int64_t> closure = {0};
    std::vector<std::int64_t> gens;
    auto close_with = [&](std::int64_t g) {
        std::vector<std::int64_t> work = {g};
        if (!in_closure[g]) {
            in_closure[g] = 1;
            closure.push_back(g);
        }
        while (!work.empty()) {
            std::int64_t x = work.back();
            work.pop_back();
            for (std::size_t i = 0; i < closure.size(); ++i) {
                for (std::int64_t y : {op(x, closure[i]), op(closure[i], x)}) {
                    if (!in_closure[y]) {
                        in_closure[y] = 1;
                        closure.push_back(y);
                        work.push_back(y);
                    }
                }
            }
        }
    };
    for (std::int64_t e : elements) {
        if (!in_closure[e]) {
            gens.push_back(e);
            close_with(e);
        }
    }
    return gens;
}

template <typename OpFn>
std::vector<std::int64_t> close_elements(std::int64_t parent_size,
                                         std::span<const std::int64_t> gens, OpFn op) {
    std::vector<char> seen(std::size_t(parent_size), 0);
    std::vector<std::int64_t> elems = {0};
    seen[0] = 1;
    std::vector<std::int64_t> work;
    for (std::int64_t g : gens) {
        if (g < 0 || g >= parent_size) throw RangeError("subgroup_closure: generator out of range");
        if (!seen[g]) {
            seen[g] = 1;
            elems.push_back(g);
            work.push_back(g);
        }
    }
    // Product-closure BFS: whenever a new element appears, pair it with
    // everything already present.
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = 0; j < elems.size(); ++j) {
            std::int64_t p = op(elems[i], elems[j]);
            if (!seen[p]) {
                seen[p] = 1;
                elems.push_back(p);
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

std::string permutation_cycle_name(const std::vector<int>& p) {
    const int n = int(p.size());
    std::vector<char> used(n, 0);
    std::string out;
    for (int i = 0; i < n; ++i) {
        if (used[i] || p[i] == i) continue;
        std::string cyc = "(" + std::to_string(i + 1);
        used[i] = 1;
        for (int j = p[i]; j != i; j = p[j]) {
            used[j] = 1;
            cyc += " " + std::to_string(j + 1);
        }
        out += cyc + ")";
    }
    return out.empty() ? "e" : out;
}

std::vector<int> cycle_type(const std::vector<int>& p) {
    const int n = int(p.size());
    std::vector<char> used(n, 0);
    std::vector<int> lengths;
    for (int i = 0; i < n; ++i) {
        if (used[i]) continue;
        int len = 0;
        for (int j = i; !used[j]; j = p[j]) {
            used[j] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

}  // namespace

// --------------------------------------------------------------------------
// AbelianGroup

AbelianGroup::AbelianGroup(std::vector<std::int64_t> factor_orders)
    : orders(std::move(factor_orders)) {
    if (orders.empty()) throw RangeError("AbelianGroup: need at least one cyclic factor");
    for (std::int64_t n : orders) {
        if (n < 1) throw RangeError("AbelianGroup: factor orders must be >= 1");
        if (size_ > kMaxAbelianSize / n) throw ScaleExceeded("AbelianGroup: order too large");
        size_ *= n;
        lcm_ = std::lcm(lcm_, n);
    }
}

std::vector<std::int64_t> AbelianGroup::decode(std::int64_t index) const {
    if (index < 0 || index >= size_) throw RangeError("AbelianGroup::decode: index out of range");
    std::vector<std::int64_t> digits(orders.size());
    for (std::size_t j = orders.size(); j-- > 0;) {
        digits[j] = index % orders[j];
        index /= orders[j];
    }
    return digits;
}

std::int64_t AbelianGroup::encode(std::span<const std::int64_t> digits) const {
    if (digits.size() != orders.size())
        throw DimensionMismatch("AbelianGroup::encode: wrong digit count");
    std::int64_t index = 0;
    for (std::size_t j = 0; j < orders.size(); ++j) {
        std::int64_t d = ((digits[j] % orders[j]) + orders[j]) % orders[j];
        index = index * orders[j] + d;
    }
    return index;
}

std::int64_t AbelianGroup::add(std::int64_t a, std::int64_t b) const {
    std::int64_t out = 0;
    for (std::size_t j = orders.size(); j-- > 0;) {
        std::int64_t da = a % orders[j], db = b % orders[j];
        a /= orders[j];
        b /= orders[j];
        std::int64_t place = 1;
        for (std::size_t k = orders.size(); k-- > j + 1;) place *= orders[k];
        out += ((da + db) % orders[j]) * place;
    }
    return out;
}

std::int64_t AbelianGroup::negate(std::int64_t a) const {
    std::int64_t out = 0;
    std::int64_t place = 1;
    for (std::size_t j = orders.size(); j-- > 0;) {
        std::int64_t d = a % orders[j];
        a /= orders[j];
        out += ((orders[j] - d) % orders[j]) * place;
        place *= orders[j];
    }
    return out;
}

cplx AbelianGroup::character(std::int64_t label, std::int64_t g) const {
    if (label < 0 || label >= size_ || g < 0 || g >= size_)
        throw RangeError("AbelianGroup::character: index out of range");
    double turns = 0.0;
    for (std::size_t j = orders.size(); j-- > 0;) {
        std::int64_t l = label % orders[j], d = g % orders[j];
        label /= orders[j];
        g /= orders[j];
        turns += double((l * d) % orders[j]) / double(orders[j]);
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * turns);
}

bool AbelianGroup::character_is_one(std::int64_t label, std::int64_t g) const {
    if (label < 0 || label >= size_ || g < 0 || g >= size_)
        throw RangeError("AbelianGroup::character_is_one: index out of range");
    std::int64_t acc = 0;
    for (std::size_t j = orders.size(); j-- > 0;) {
        std::int64_t l = label % orders[j], d = g % orders[j];
        label /= orders[j];
        g /= orders[j];
        acc = (acc + ((l * d) % orders[j]) * (lcm_ / orders[j])) % lcm_;
    }
    return acc == 0;
}

// --------------------------------------------------------------------------
// Subgroup / cosets (abelian)

bool Subgroup::contains(std::int64_t g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
}

Subgroup subgroup_closure(const AbelianGroup& g, std::span<const std::int64_t> gens) {
    Subgroup out;
    out.parent_size = g.size();
    out.generators.assign(gens.begin(), gens.end());
    out.elements = close_elements(g.size(), gens,
                                  [&](std::int64_t a, std::int64_t b) { return g.add(a, b); });
    return out;
}

Subgroup annihilator(const AbelianGroup& g, const Subgroup& k) {
    if (k.parent_size != g.size()) throw DimensionMismatch("annihilator: subgroup/group mismatch");
    Subgroup out;
    out.parent_size = g.size();
    for (std::int64_t l = 0; l < g.size(); ++l) {
        bool ok = true;
        for (std::int64_t e : k.elements) {
            if (!g.character_is_one(l, e)) {
                ok = false;
                break;
            }
        }
        if (ok) out.elements.push_back(l);
    }
    out.generators = greedy_generators(g.size(), out.elements,
                                       [&](std::int64_t a, std::int64_t b) { return g.add(a, b); });
    return out;
}

Subgroup reconstruct_from_dual_samples(const AbelianGroup& g,
                                       std::span<const std::int64_t> labels) {
    Subgroup out;
    out.parent_size = g.size();
    for (std::int64_t e = 0; e < g.size(); ++e) {
        bool ok = true;
        for (std::int64_t l : labels) {
            if (!g.character_is_one(l, e)) {
                ok = false;
                break;
            }
        }
        if (ok) out.elements.push_back(e);
    }
    out.generators = greedy_generators(g.size(), out.elements,
                                       [&](std::int64_t a, std::int64_t b) { return g.add(a, b); });
    return out;
}

Coset coset_of(const AbelianGroup& g, const Subgroup& k, std::int64_t rep) {
    Coset c;
    c.representative = rep;
    c.elements.reserve(k.elements.size());
    for (std::int64_t e : k.elements) c.elements.push_back(g.add(rep, e));
    std::sort(c.elements.begin(), c.elements.end());
    return c;
}

std::vector<Coset> coset_partition(const AbelianGroup& g, const Subgroup& k) {
    std::vector<char> seen(std::size_t(g.size()), 0);
    std::vector<Coset> out;
    for (std::int64_t rep = 0; rep < g.size(); ++rep) {
        if (seen[rep]) continue;
        Coset c = coset_of(g, k, rep);
        for (std::int64_t e : c.elements) seen[e] = 1;
        out.push_back(std::move(c));
    }
    return out;
}

// --------------------------------------------------------------------------
// FiniteGroup construction

void FiniteGroup::finish_table() {
    const int n = size_;
    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        if (multiply(0, a) != a || multiply(a, 0) != a)
            throw Error("FiniteGroup: element 0 is not an identity");
        for (int b = 0; b < n; ++b) {
            if (multiply(a, b) < 0 || multiply(a, b) >= n)
                throw Error("FiniteGroup: product out of range");
            if (multiply(a, b) == 0) inv_[a] = b;
        }
        if (inv_[a] < 0) throw Error("FiniteGroup: element without inverse");
    }
    if (n <= kFullCheckSize) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
                        throw Error("FiniteGroup: multiplication is not associative");
    }
}

FiniteGroup FiniteGroup::cyclic(std::int64_t n) { return abelian_product({n}); }

FiniteGroup FiniteGroup::abelian_product(std::vector<std::int64_t> orders) {
    AbelianGroup g(orders);
    if (g.size() > kMaxTableSize)
        throw ScaleExceeded("FiniteGroup::abelian_product: too large for an explicit table");
    FiniteGroup out;
    out.family = Family::AbelianProduct;
    out.abelian_orders = std::move(orders);
    out.size_ = int(g.size());
    out.mul_.resize(std::size_t(out.size_) * out.size_);
    for (int a = 0; a < out.size_; ++a)
        for (int b = 0; b < out.size_; ++b)
            out.mul_[std::size_t(a) * out.size_ + b] = int(g.add(a, b));
    for (int e = 0; e < out.size_; ++e) {
        auto digits = g.decode(e);
        if (digits.size() == 1) {
            out.names.push_back(std::to_string(digits[0]));
        } else {
            std::string s = "(";
            for (std::size_t j = 0; j < digits.size(); ++j)
                s += (j ? "," : "") + std::to_string(digits[j]);
            out.names.push_back(s + ")");
        }
    }
    out.finish_table();
    return out;
}

FiniteGroup FiniteGroup::dihedral(int n) {
    if (n < 3 || n > 6)
        throw UnsupportedGroup("dihedral: supported for 3 <= n <= 6");
    FiniteGroup out;
    out.family = Family::Dihedral;
    out.dihedral_n = n;
    out.size_ = 2 * n;
    out.mul_.resize(std::size_t(out.size_) * out.size_);
    // Element k + f*n is r^k s^f with r^n = s^2 = e and s r = r^{-1} s:
    // (k1,f1)(k2,f2) = (k1 + (-1)^{f1} k2 mod n, f1 xor f2).
    for (int a = 0; a < out.size_; ++a) {
        int k1 = a % n, f1 = a / n;
        for (int b = 0; b < out.size_; ++b) {
            int k2 = b % n, f2 = b / n;
            int k = ((f1 ? k1 - k2 : k1 + k2) % n + n) % n;
            out.mul_[std::size_t(a) * out.size_ + b] = k + (f1 ^ f2) * n;
        }
    }
    for (int f = 0; f < 2; ++f)
        for (int k = 0; k < n; ++k) {
            std::string s;
            if (k == 0)
                s = f ? "s" : "e";
            else if (k == 1)
                s = f ? "rs" : "r";
            else
                s = "r" + std::to_string(k) + (f ? "s" : "");
            out.names.push_back(s);
        }
    out.finish_table();
    return out;
}

FiniteGroup FiniteGroup::symmetric(int n) {
    if (n != 3 && n != 4)
        throw UnsupportedGroup("symmetric: supported for n in {3, 4}");
    FiniteGroup out;
    out.family = Family::Symmetric;
    out.symmetric_n = n;
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::map<std::vector<int>, int> index_of;
    do {
        index_of[p] = int(out.perms.size());
        out.perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    out.size_ = int(out.perms.size());
    out.mul_.resize(std::size_t(out.size_) * out.size_);
    for (int a = 0; a < out.size_; ++a)
        for (int b = 0; b < out.size_; ++b) {
            std::vector<int> prod(n);  // (a*b)(i) = a(b(i)), b acts first
            for (int i = 0; i < n; ++i) prod[i] = out.perms[a][out.perms[b][i]];
            out.mul_[std::size_t(a) * out.size_ + b] = index_of.at(prod);
        }
    for (const auto& q : out.perms) out.names.push_back(permutation_cycle_name(q));
    out.finish_table();
    return out;
}

// --------------------------------------------------------------------------
// Conjugacy classes and character tables

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) {
    const int n = g.size();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> classes;
    for (int a = 0; a < n; ++a) {
        if (seen[a]) continue;
        std::vector<int> cls;
        for (int x = 0; x < n; ++x) {
            int c = g.multiply(g.multiply(x, a), g.inverse(x));
            if (!seen[c]) {
                seen[c] = 1;
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

namespace {

// Assemble and validate a table from per-element character values.
CharacterTable build_table(const FiniteGroup& g, const std::vector<int>& dims,
                           const std::vector<std::vector<cplx>>& per_element) {
    CharacterTable t;
    t.classes = conjugacy_classes(g);
    t.class_of.assign(g.size(), -1);
    for (int c = 0; c < int(t.classes.size()); ++c)
        for (int e : t.classes[c]) t.class_of[e] = c;
    t.dims = dims;

    std::int64_t dim_sq = 0;
    for (int d : dims) dim_sq += std::int64_t(d) * d;
    if (dim_sq != g.size())
        throw Error("character_table: squared dimensions do not sum to |G|");
    if (per_element.size() != dims.size())
        throw Error("character_table: irrep count mismatch");

    for (std::size_t i = 0; i < per_element.size(); ++i) {
        if (std::abs(per_element[i][0] - cplx(double(dims[i]), 0.0)) > kTableTol)
            throw Error("character_table: value at identity must equal the dimension");
        std::vector<cplx> row(t.classes.size());
        for (int c = 0; c < int(t.classes.size()); ++c) {
            cplx v = per_element[i][t.classes[c][0]];
            for (int e : t.classes[c])
                if (std::abs(per_element[i][e] - v) > kTableTol)
                    throw Error("character_table: value not constant on a conjugacy class");
            row[c] = v;
        }
        t.values.push_back(std::move(row));
    }

    // Row orthogonality under the group inner product.
    for (std::size_t i = 0; i < per_element.size(); ++i)
        for (std::size_t j = i; j < per_element.size(); ++j) {
            cplx acc(0.0, 0.0);
            for (int e = 0; e < g.size(); ++e)
                acc += per_element[i][e] * std::conj(per_element[j][e]);
            cplx want = (i == j) ? cplx(double(g.size()), 0.0) : cplx(0.0, 0.0);
            if (std::abs(acc - want) > 1e-12 * g.size())
                throw Error("character_table: rows are not orthogonal");
        }
    return t;
}

CharacterTable abelian_character_table(const FiniteGroup& g) {
    AbelianGroup a(g.abelian_orders);
    std::vector<int> dims(g.size(), 1);
    std::vector<std::vector<cplx>> vals(g.size(), std::vector<cplx>(g.size()));
    for (int l = 0; l < g.size(); ++l)
        for (int e = 0; e < g.size(); ++e) vals[l][e] = a.character(l, e);
    return build_table(g, dims, vals);
}

CharacterTable dihedral_character_table(const FiniteGroup& g) {
    const int n = g.dihedral_n;
    const int sz = g.size();
    auto rot = [&](int e) { return e % n; };
    auto ref = [&](int e) { return e / n; };
    std::vector<int> dims;
    std::vector<std::vector<cplx>> vals;

    auto add_linear = [&](int rot_sign, int ref_sign) {
        std::vector<cplx> row(sz);
        for (int e = 0; e < sz; ++e) {
            double v = 1.0;
            if (rot_sign < 0 && rot(e) % 2 == 1) v = -v;
            if (ref_sign < 0 && ref(e) == 1) v = -v;
            row[e] = v;
        }
        dims.push_back(1);
        vals.push_back(std::move(row));
    };

    add_linear(+1, +1);  // trivial
    add_linear(+1, -1);  // sign on reflections; kernel is the rotation subgroup
    if (n % 2 == 0) {
        add_linear(-1, +1);
        add_linear(-1, -1);
    }
    const int two_dim_count = (n % 2 == 0) ? n / 2 - 1 : (n - 1) / 2;
    for (int j = 1; j <= two_dim_count; ++j) {
        std::vector<cplx> row(sz);
        for (int e = 0; e < sz; ++e)
            row[e] = ref(e) ? cplx(0.0, 0.0)
                            : cplx(2.0 * std::cos(2.0 * std::numbers::pi * j * rot(e) / n), 0.0);
        dims.push_back(2);
        vals.push_back(std::move(row));
    }
    return build_table(g, dims, vals);
}

CharacterTable symmetric_character_table(const FiniteGroup& g) {
    const int n = g.symmetric_n;
    std::vector<int> dims;
    std::vector<std::vector<cplx>> vals;
    // Values by cycle type, read off the standard tables.
    auto value_rows = [&](const std::vector<int>& type) -> std::vector<double> {
        if (n == 3) {
            if (type == std::vector<int>{1, 1, 1}) return {1, 1, 2};       // identity
            if (type == std::vector<int>{2, 1}) return {1, -1, 0};         // transposition
            return {1, 1, -1};                                             // 3-cycle
        }
        if (type == std::vector<int>{1, 1, 1, 1}) return {1, 1, 2, 3, 3};  // identity
        if (type == std::vector<int>{2, 1, 1}) return {1, -1, 0, 1, -1};   // transposition
        if (type == std::vector<int>{2, 2}) return {1, 1, 2, -1, -1};      // double transposition
        if (type == std::vector<int>{3, 1}) return {1, 1, -1, 0, 0};       // 3-cycle
        return {1, -1, 0, -1, 1};                                          // 4-cycle
    };
    dims = (n == 3) ? std::vector<int>{1, 1, 2} : std::vector<int>{1, 1, 2, 3, 3};
    vals.assign(dims.size(), std::vector<cplx>(g.size()));
    for (int e = 0; e < g.size(); ++e) {
        auto row = value_rows(cycle_type(g.perms[e]));
        for (std::size_t i = 0; i < dims.size(); ++i) vals[i][e] = row[i];
    }
    return build_table(g, dims, vals);
}

}  // namespace

CharacterTable character_table(const FiniteGroup& g) {
    switch (g.family) {
        case FiniteGroup::Family::AbelianProduct:
            return abelian_character_table(g);
        case FiniteGroup::Family::Dihedral:
            return dihedral_character_table(g);
        case FiniteGroup::Family::Symmetric:
            return symmetric_character_table(g);
    }
    throw UnsupportedGroup("character_table: unknown family");
}

// --------------------------------------------------------------------------
// FiniteGroup subgroup operations

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const std::int64_t> gens) {
    Subgroup out;
    out.parent_size = g.size();
    out.generators.assign(gens.begin(), gens.end());
    out.elements = close_elements(g.size(), gens, [&](std::int64_t a, std::int64_t b) {
        return std::int64_t(g.multiply(int(a), int(b)));
    });
    return out;
}

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& k, std::int64_t by) {
    if (k.parent_size != g.size())
        throw DimensionMismatch("conjugate_subgroup: subgroup/group mismatch");
    int x = int(by);
    Subgroup out;
    out.parent_size = g.size();
    out.elements.reserve(k.elements.size());
    for (std::int64_t e : k.elements)
        out.elements.push_back(g.multiply(g.multiply(x, int(e)), g.inverse(x)));
    std::sort(out.elements.begin(), out.elements.end());
    for (std::int64_t e : k.generators)
        out.generators.push_back(g.multiply(g.multiply(x, int(e)), g.inverse(x)));
    return out;
}

bool is_normal(const FiniteGroup& g, const Subgroup& k) {
    for (int x = 0; x < g.size(); ++x)
        for (std::int64_t e : k.elements)
            if (!k.contains(g.multiply(g.multiply(x, int(e)), g.inverse(x)))) return false;
    return true;
}

Subgroup kernel_of_character(const FiniteGroup& g, const CharacterTable& table, int irrep) {
    if (irrep < 0 || irrep >= table.irrep_count())
        throw RangeError("kernel_of_character: irrep index out of range");
    Subgroup out;
    out.parent_size = g.size();
    const cplx want(double(table.dims[irrep]), 0.0);
    for (int e = 0; e < g.size(); ++e)
        if (std::abs(table.value(irrep, e) - want) < 1e-9) out.elements.push_back(e);
    out.generators = greedy_generators(g.size(), out.elements,
                                       [&](std::int64_t a, std::int64_t b) {
                                           return std::int64_t(g.multiply(int(a), int(b)));
                                       });
    return out;
}

Coset left_coset(const FiniteGroup& g, const Subgroup& k, std::int64_t rep) {
    Coset c;
    c.representative = rep;
    c.elements.reserve(k.elements.size());
    for (std::int64_t e : k.elements) c.elements.push_back(g.multiply(int(rep), int(e)));
    std::sort(c.elements.begin(), c.elements.end());
    return c;
}

std::vector<Coset> left_coset_partition(const FiniteGroup& g, const Subgroup& k) {
    std::vector<char> seen(g.size(), 0);
    std::vector<Coset> out;
    for (int rep = 0; rep < g.size(); ++rep) {
        if (seen[rep]) continue;
        Coset c = left_coset(g, k, rep);
        for (std::int64_t e : c.elements) seen[e] = 1;
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
    auto op = [&](std::int64_t a, std::int64_t b) {
        return std::int64_t(g.multiply(int(a), int(b)));
    };
    std::set<std::vector<std::int64_t>> seen;
    std::vector<std::vector<std::int64_t>> work;
    std::vector<std::int64_t> trivial = {0};
    seen.insert(trivial);
    work.push_back(trivial);
    while (!work.empty()) {
        std::vector<std::int64_t> h = std::move(work.back());
        work.pop_back();
        for (std::int64_t x = 1; x < g.size(); ++x) {
            if (std::binary_search(h.begin(), h.end(), x)) continue;
            std::vector<std::int64_t> gens = h;
            gens.push_back(x);
            auto bigger = close_elements(g.size(), gens, op);
            if (seen.insert(bigger).second) work.push_back(std::move(bigger));
        }
    }
    std::vector<Subgroup> out;
    for (const auto& elems : seen) {
        Subgroup s;
        s.parent_size = g.size();
        s.elements = elems;
        s.generators = greedy_generators(g.size(), s.elements, op);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.elements < b.elements;
    });
    return out;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    if (a.parent_size != b.parent_size) throw DimensionMismatch("intersect: different parents");
    Subgroup out;
    out.parent_size = a.parent_size;
    std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(),
                          b.elements.end(), std::back_inserter(out.elements));
    return out;
}

}  // namespace hspsim
