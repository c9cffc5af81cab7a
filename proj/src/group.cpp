#include "eqrr/group.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>

namespace eqrr {

namespace {
std::atomic<size_t> next_group_id{1};
}

void FiniteGroup::finish(std::vector<size_t> generators, std::vector<std::string> labels) {
    id_ = next_group_id.fetch_add(1);
    if (n_ == 0 || n_ > 512) throw ValidationError("group order must be in [1, 512]");

    // identity
    size_t e = n_;
    for (size_t c = 0; c < n_; ++c) {
        bool ok = true;
        for (size_t a = 0; a < n_ && ok; ++a) ok = op(c, a) == a && op(a, c) == a;
        if (ok) {
            e = c;
            break;
        }
    }
    if (e == n_) throw ValidationError("no identity element");
    e_ = e;

    // associativity (exhaustive at this scale)
    for (size_t a = 0; a < n_; ++a)
        for (size_t b = 0; b < n_; ++b)
            for (size_t c = 0; c < n_; ++c)
                if (op(op(a, b), c) != op(a, op(b, c)))
                    throw ValidationError("multiplication table is not associative");

    inv_.assign(n_, 0);
    for (size_t a = 0; a < n_; ++a) {
        size_t found = n_;
        for (size_t b = 0; b < n_; ++b)
            if (op(a, b) == e_ && op(b, a) == e_) {
                found = b;
                break;
            }
        if (found == n_) throw ValidationError("element without inverse");
        inv_[a] = static_cast<uint16_t>(found);
    }

    order_.assign(n_, 0);
    for (size_t a = 0; a < n_; ++a) {
        size_t x = a;
        uint32_t k = 1;
        while (x != e_) {
            x = op(x, a);
            ++k;
        }
        order_[a] = k;
    }

    if (generators.empty()) {
        for (size_t a = 0; a < n_; ++a) generators.push_back(a);
    }
    gens_ = std::move(generators);
    if (closure(gens_).size() != n_) throw ValidationError("generators do not generate the group");

    if (labels.empty()) {
        for (size_t a = 0; a < n_; ++a) labels.push_back("g" + std::to_string(a));
    }
    if (labels.size() != n_) throw ValidationError("label count mismatch");
    labels_ = std::move(labels);

    // conjugacy classes; representative = minimal index, classes sorted by (order, rep)
    class_of_.assign(n_, UINT32_MAX);
    std::vector<std::pair<std::pair<uint32_t, size_t>, std::vector<size_t>>> classes;
    for (size_t a = 0; a < n_; ++a) {
        if (class_of_[a] != UINT32_MAX) continue;
        std::vector<size_t> cls;
        std::set<size_t> seen;
        for (size_t g = 0; g < n_; ++g) {
            size_t c = op(op(g, a), inv_[g]);
            if (seen.insert(c).second) cls.push_back(c);
        }
        std::sort(cls.begin(), cls.end());
        for (size_t x : cls) class_of_[x] = 1;  // mark provisionally
        classes.push_back({{order_[a], cls[0]}, cls});
    }
    std::sort(classes.begin(), classes.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    class_reps_.clear();
    class_sizes_.clear();
    for (size_t ci = 0; ci < classes.size(); ++ci) {
        class_reps_.push_back(classes[ci].first.second);
        class_sizes_.push_back(classes[ci].second.size());
        for (size_t x : classes[ci].second) class_of_[x] = static_cast<uint32_t>(ci);
    }

    table_rows_.assign(n_, std::vector<uint16_t>(n_));
    for (size_t a = 0; a < n_; ++a)
        for (size_t b = 0; b < n_; ++b) table_rows_[a][b] = mul_[a * n_ + b];
}

GroupPtr FiniteGroup::from_table(std::vector<std::vector<uint16_t>> table,
                                 std::vector<size_t> generators,
                                 std::vector<std::string> labels) {
    auto g = std::make_shared<FiniteGroup>();
    g->n_ = table.size();
    g->mul_.assign(g->n_ * g->n_, 0);
    for (size_t i = 0; i < g->n_; ++i) {
        if (table[i].size() != g->n_) throw ValidationError("multiplication table is not square");
        for (size_t j = 0; j < g->n_; ++j) {
            if (table[i][j] >= g->n_) throw ValidationError("table entry out of range");
            g->mul_[i * g->n_ + j] = table[i][j];
        }
    }
    g->finish(std::move(generators), std::move(labels));
    return g;
}

GroupPtr make_group_from_op(size_t n, const std::function<size_t(size_t, size_t)>& op,
                            std::vector<size_t> generators, std::vector<std::string> labels) {
    auto g = std::make_shared<FiniteGroup>();
    g->n_ = n;
    g->mul_.assign(n * n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            size_t v = op(i, j);
            if (v >= n) throw ValidationError("operation out of range");
            g->mul_[i * n + j] = static_cast<uint16_t>(v);
        }
    g->finish(std::move(generators), std::move(labels));
    return g;
}

GroupPtr FiniteGroup::cyclic(size_t n) {
    std::vector<std::string> labels;
    for (size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : "g^" + std::to_string(i));
    return make_group_from_op(
        n, [n](size_t a, size_t b) { return (a + b) % n; }, {n > 1 ? size_t(1) : size_t(0)},
        std::move(labels));
}

GroupPtr FiniteGroup::elementary_abelian(uint32_t p, uint32_t k) {
    if (!is_prime_u64(p)) throw ValidationError("p must be prime");
    size_t n = pow_u64(p, k);
    auto add = [p, k](size_t a, size_t b) {
        size_t r = 0, mult = 1;
        for (uint32_t i = 0; i < k; ++i) {
            r += mult * ((a % p + b % p) % p);
            a /= p;
            b /= p;
            mult *= p;
        }
        return r;
    };
    std::vector<size_t> gens;
    size_t mult = 1;
    for (uint32_t i = 0; i < k; ++i) {
        gens.push_back(mult);
        mult *= p;
    }
    return make_group_from_op(n, add, gens, {});
}

GroupPtr FiniteGroup::semidirect(uint32_t p, uint32_t k, size_t c,
                                 const std::vector<std::vector<uint32_t>>& action) {
    size_t pk = pow_u64(p, k);
    size_t n = pk * c;
    if (action.size() != k) throw ValidationError("action matrix must be k x k");
    // powers of the action matrix
    std::vector<std::vector<std::vector<uint32_t>>> pw(c);
    std::vector<std::vector<uint32_t>> idm(k, std::vector<uint32_t>(k, 0));
    for (uint32_t i = 0; i < k; ++i) idm[i][i] = 1;
    pw[0] = idm;
    auto matmul = [p, k](const auto& x, const auto& y) {
        std::vector<std::vector<uint32_t>> r(k, std::vector<uint32_t>(k, 0));
        for (uint32_t i = 0; i < k; ++i)
            for (uint32_t l = 0; l < k; ++l)
                for (uint32_t j = 0; j < k; ++j)
                    r[i][j] = static_cast<uint32_t>((r[i][j] + static_cast<uint64_t>(x[i][l]) * y[l][j]) % p);
        return r;
    };
    for (size_t i = 1; i < c; ++i) pw[i] = matmul(pw[i - 1], action);
    if (c > 1 && matmul(pw[c - 1], action) != idm)
        throw ValidationError("action order does not divide c");
    auto vec_of = [p, k](size_t v) {
        std::vector<uint32_t> x(k);
        for (uint32_t i = 0; i < k; ++i) {
            x[i] = static_cast<uint32_t>(v % p);
            v /= p;
        }
        return x;
    };
    auto of_vec = [p, k](const std::vector<uint32_t>& x) {
        size_t v = 0;
        for (uint32_t i = k; i-- > 0;) v = v * p + x[i];
        return v;
    };
    auto op = [&, p, k, c, pk](size_t a, size_t b) {
        size_t va = a % pk, ia = a / pk, vb = b % pk, ib = b / pk;
        auto xa = vec_of(va), xb = vec_of(vb);
        std::vector<uint32_t> moved(k, 0);
        for (uint32_t i = 0; i < k; ++i) {
            uint64_t s = 0;
            for (uint32_t j = 0; j < k; ++j) s += static_cast<uint64_t>(pw[ia][i][j]) * xb[j];
            moved[i] = static_cast<uint32_t>((s + xa[i]) % p);
        }
        return of_vec(moved) + (((ia + ib) % c)) * pk;
    };
    std::vector<size_t> gens;
    size_t mult = 1;
    for (uint32_t i = 0; i < k; ++i) {
        gens.push_back(mult);
        mult *= p;
    }
    if (c > 1) gens.push_back(pk);
    return make_group_from_op(n, op, gens, {});
}

size_t FiniteGroup::power(size_t a, int64_t k) const {
    uint32_t d = order_[a];
    int64_t kk = mod_i64(k, d);
    size_t r = e_;
    for (int64_t i = 0; i < kk; ++i) r = op(r, a);
    return r;
}

uint64_t FiniteGroup::exponent() const {
    uint64_t e = 1;
    for (size_t a = 0; a < n_; ++a) e = std::lcm<uint64_t>(e, order_[a]);
    return e;
}

uint64_t FiniteGroup::p_regular_exponent(uint32_t p) const {
    uint64_t e = 1;
    for (size_t a = 0; a < n_; ++a)
        if (order_[a] % p != 0) e = std::lcm<uint64_t>(e, order_[a]);
    return e;
}

bool FiniteGroup::is_p_group(uint32_t p) const {
    size_t m = n_;
    while (m % p == 0) m /= p;
    return m == 1;
}

std::vector<size_t> FiniteGroup::closure(const std::vector<size_t>& gens) const {
    std::vector<bool> in(n_, false);
    std::vector<size_t> queue{e_};
    in[e_] = true;
    for (size_t g : gens) {
        if (g >= n_) throw ValidationError("generator index out of range");
        if (!in[g]) {
            in[g] = true;
            queue.push_back(g);
        }
    }
    for (size_t head = 0; head < queue.size(); ++head) {
        for (size_t g : gens) {
            size_t x = op(queue[head], g);
            if (!in[x]) {
                in[x] = true;
                queue.push_back(x);
            }
            x = op(g, queue[head]);
            if (!in[x]) {
                in[x] = true;
                queue.push_back(x);
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

size_t Subgroup::to_sub(size_t parent_elem) const {
    int32_t s = from_parent[parent_elem];
    if (s < 0) throw ValidationError("element not in subgroup");
    return static_cast<size_t>(s);
}

Subgroup make_subgroup(GroupPtr parent, std::vector<size_t> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    Subgroup h;
    h.parent = parent;
    h.from_parent.assign(parent->size(), -1);
    h.elems.reserve(elements.size());
    for (size_t i = 0; i < elements.size(); ++i) {
        if (elements[i] >= parent->size()) throw ValidationError("subgroup element out of range");
        h.elems.push_back(static_cast<uint16_t>(elements[i]));
        h.from_parent[elements[i]] = static_cast<int32_t>(i);
    }
    // closure + identity checks come free from building the subgroup table
    std::vector<std::string> labels;
    for (size_t e : elements) labels.push_back(parent->label(e));
    auto op = [&](size_t a, size_t b) {
        size_t prod = parent->op(h.elems[a], h.elems[b]);
        int32_t s = h.from_parent[prod];
        if (s < 0) throw ValidationError("subset not closed under multiplication");
        return static_cast<size_t>(s);
    };
    h.group = make_group_from_op(elements.size(), op, {}, std::move(labels));
    return h;
}

Subgroup subgroup_generated(GroupPtr parent, const std::vector<size_t>& gens) {
    return make_subgroup(parent, parent->closure(gens));
}

Subgroup trivial_subgroup(GroupPtr parent) {
    return make_subgroup(parent, {parent->identity()});
}

Subgroup full_subgroup(GroupPtr parent) {
    std::vector<size_t> all(parent->size());
    std::iota(all.begin(), all.end(), 0);
    return make_subgroup(parent, all);
}

bool is_normal(const Subgroup& h) {
    const auto& g = *h.parent;
    for (size_t x = 0; x < g.size(); ++x)
        for (size_t a : h.elems)
            if (!h.contains(g.op(g.op(x, a), g.inverse(x)))) return false;
    return true;
}

Subgroup conjugate_subgroup(const Subgroup& h, size_t g) {
    const auto& G = *h.parent;
    std::vector<size_t> elems;
    for (size_t a : h.elems) elems.push_back(G.op(G.op(g, a), G.inverse(g)));
    return make_subgroup(h.parent, std::move(elems));
}

Subgroup sylow_subgroup(GroupPtr gp, uint32_t p) {
    const auto& g = *gp;
    size_t target = 1;
    {
        size_t m = g.size();
        while (m % p == 0) {
            m /= p;
            target *= p;
        }
    }
    std::vector<size_t> current{g.identity()};
    while (current.size() < target) {
        // normaliser of <current> contains a p-element outside; take the first
        std::vector<bool> in(g.size(), false);
        for (size_t x : current) in[x] = true;
        bool grown = false;
        for (size_t idx = 0; idx < g.size() && !grown; ++idx) {
            if (g.element_order(idx) % p != 0) continue;
            // pass to the p-part, an element of p-power order
            uint32_t m = g.element_order(idx);
            while (m % p == 0) m /= p;
            size_t cand = g.power(idx, m);
            if (in[cand]) continue;
            // must normalise the current subgroup
            bool normalises = true;
            for (size_t a : current) {
                if (!in[g.op(g.op(cand, a), g.inverse(cand))]) {
                    normalises = false;
                    break;
                }
            }
            if (!normalises) continue;
            std::vector<size_t> v = current;
            v.push_back(cand);
            auto bigger = g.closure(v);
            size_t sz = bigger.size();
            bool p_power_size = true;
            while (sz % p == 0) sz /= p;
            p_power_size = (sz == 1);
            if (p_power_size && bigger.size() <= target && bigger.size() > current.size()) {
                current = std::move(bigger);
                grown = true;
            }
        }
        if (!grown) throw ValidationError("sylow construction failed (unexpected)");
    }
    return make_subgroup(gp, std::move(current));
}

Subgroup cyclic_complement(const Subgroup& i, const Subgroup& p_normal) {
    auto all = all_cyclic_complements(i, p_normal);
    if (all.empty()) throw ValidationError("no cyclic complement found");
    return all.front();
}

std::vector<Subgroup> all_cyclic_complements(const Subgroup& i, const Subgroup& p_normal) {
    const auto& G = *i.parent;
    size_t c = i.size() / p_normal.size();
    std::vector<Subgroup> out;
    std::set<std::vector<uint16_t>> seen;
    for (size_t a : i.elems) {
        if (G.element_order(a) != c) continue;
        auto elems = G.closure({a});
        // trivial intersection with p_normal
        size_t common = 0;
        for (size_t x : elems)
            if (p_normal.contains(x)) ++common;
        if (common != 1) continue;
        std::vector<uint16_t> key(elems.begin(), elems.end());
        if (seen.insert(key).second) out.push_back(make_subgroup(i.parent, elems));
    }
    return out;
}

std::vector<size_t> p_regular_classes(const FiniteGroup& g, uint32_t p) {
    std::vector<size_t> reps;
    for (size_t c = 0; c < g.class_count(); ++c) {
        size_t r = g.class_rep(c);
        if (g.element_order(r) % p != 0) reps.push_back(r);
    }
    // classes are already sorted by (order, min index)
    return reps;
}

std::vector<Subgroup> p_regular_cyclic_subgroups(GroupPtr gp, uint32_t p) {
    const auto& g = *gp;
    std::vector<Subgroup> out;
    std::set<std::vector<uint16_t>> seen;
    for (size_t a = 0; a < g.size(); ++a) {
        if (g.element_order(a) % p == 0) continue;
        auto elems = g.closure({a});
        std::vector<uint16_t> key(elems.begin(), elems.end());
        if (seen.insert(key).second) out.push_back(make_subgroup(gp, elems));
    }
    return out;
}

}  // namespace eqrr
