#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "eqrr/numeric.hpp"

namespace eqrr {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Finite group as a multiplication table. Desk scale: order <= 512, axioms are
// verified exhaustively at construction.
class FiniteGroup {
public:
    static GroupPtr from_table(std::vector<std::vector<uint16_t>> table,
                               std::vector<size_t> generators = {},
                               std::vector<std::string> labels = {});
    static GroupPtr cyclic(size_t n);
    static GroupPtr elementary_abelian(uint32_t p, uint32_t k);
    // (F_p)^k  semidirect  C_c, the generator of C acting by `action` (k x k over F_p,
    // with action^c = 1)
    static GroupPtr semidirect(uint32_t p, uint32_t k, size_t c,
                               const std::vector<std::vector<uint32_t>>& action);

    size_t size() const { return n_; }
    size_t id() const { return id_; }
    size_t identity() const { return e_; }
    size_t op(size_t a, size_t b) const { return mul_[a * n_ + b]; }
    size_t inverse(size_t a) const { return inv_[a]; }
    size_t power(size_t a, int64_t k) const;
    uint32_t element_order(size_t a) const { return order_[a]; }
    const std::vector<size_t>& generators() const { return gens_; }
    const std::string& label(size_t a) const { return labels_[a]; }
    const std::vector<std::vector<uint16_t>>& table_rows() const { return table_rows_; }

    size_t class_count() const { return class_reps_.size(); }
    uint32_t class_of(size_t a) const { return class_of_[a]; }
    size_t class_rep(size_t c) const { return class_reps_[c]; }
    size_t class_size(size_t c) const { return class_sizes_[c]; }

    uint64_t exponent() const;
    // lcm of orders of elements of prime-to-p order
    uint64_t p_regular_exponent(uint32_t p) const;
    bool is_p_group(uint32_t p) const;

    std::vector<size_t> closure(const std::vector<size_t>& gens) const;

private:
    size_t n_ = 0;
    size_t id_ = 0;
    size_t e_ = 0;
    std::vector<uint16_t> mul_;
    std::vector<uint16_t> inv_;
    std::vector<uint32_t> order_;
    std::vector<size_t> gens_;
    std::vector<std::string> labels_;
    std::vector<uint32_t> class_of_;
    std::vector<size_t> class_reps_;
    std::vector<size_t> class_sizes_;
    std::vector<std::vector<uint16_t>> table_rows_;

    void finish(std::vector<size_t> generators, std::vector<std::string> labels);
    friend GroupPtr make_group_from_op(size_t, const std::function<size_t(size_t, size_t)>&,
                                       std::vector<size_t>, std::vector<std::string>);
};

GroupPtr make_group_from_op(size_t n, const std::function<size_t(size_t, size_t)>& op,
                            std::vector<size_t> generators, std::vector<std::string> labels);

// Subgroup of a parent group, with its own group structure attached.
struct Subgroup {
    GroupPtr parent;
    std::vector<uint16_t> elems;       // sorted parent indices
    GroupPtr group;                    // subgroup as an abstract group
    std::vector<int32_t> from_parent;  // parent index -> subgroup index, -1 outside

    size_t size() const { return elems.size(); }
    bool contains(size_t parent_elem) const { return from_parent[parent_elem] >= 0; }
    size_t to_parent(size_t sub_elem) const { return elems[sub_elem]; }
    size_t to_sub(size_t parent_elem) const;
};

Subgroup make_subgroup(GroupPtr parent, std::vector<size_t> elements);
Subgroup subgroup_generated(GroupPtr parent, const std::vector<size_t>& gens);
Subgroup trivial_subgroup(GroupPtr parent);
Subgroup full_subgroup(GroupPtr parent);

bool is_normal(const Subgroup& h);
Subgroup conjugate_subgroup(const Subgroup& h, size_t g);

// a Sylow p-subgroup (normaliser-growth construction, deterministic)
Subgroup sylow_subgroup(GroupPtr g, uint32_t p);

// cyclic complement of a normal subgroup p of i (first found, deterministic)
Subgroup cyclic_complement(const Subgroup& i, const Subgroup& p_normal);
// all cyclic complements, for exhaustive invariance checks
std::vector<Subgroup> all_cyclic_complements(const Subgroup& i, const Subgroup& p_normal);

// representatives of conjugacy classes of prime-to-p order elements, sorted by
// (element order, minimal element index)
std::vector<size_t> p_regular_classes(const FiniteGroup& g, uint32_t p);

// one representative generator per cyclic subgroup generated by a p-regular element
std::vector<Subgroup> p_regular_cyclic_subgroups(GroupPtr g, uint32_t p);

}  // namespace eqrr
