#include "eqrr/classfn.hpp"

#include <algorithm>

namespace eqrr {

namespace {

ClassFunction shaped(GroupPtr g, uint32_t p) {
    ClassFunction f;
    f.group = g;
    f.p = p;
    f.reps = p_regular_classes(*g, p);
    uint64_t m = g->p_regular_exponent(p);
    f.values.assign(f.reps.size(), Cyc::zero(m));
    f.pos_of_class.assign(g->class_count(), -1);
    for (size_t i = 0; i < f.reps.size(); ++i)
        f.pos_of_class[g->class_of(f.reps[i])] = static_cast<int32_t>(i);
    return f;
}

}  // namespace

Cyc ClassFunction::eval(size_t elem) const {
    int32_t pos = pos_of_class[group->class_of(elem)];
    if (pos < 0) throw ValidationError("class function evaluated at a p-singular element");
    return values[static_cast<size_t>(pos)];
}

bool ClassFunction::same_shape(const ClassFunction& o) const {
    return group.get() == o.group.get() && p == o.p;
}

bool ClassFunction::operator==(const ClassFunction& o) const {
    if (!same_shape(o)) return false;
    for (size_t i = 0; i < values.size(); ++i)
        if (values[i] != o.values[i]) return false;
    return true;
}

ClassFunction cf_zero(GroupPtr g, uint32_t p) { return shaped(g, p); }

ClassFunction cf_trivial(GroupPtr g, uint32_t p) {
    ClassFunction f = shaped(g, p);
    for (auto& v : f.values) v = Cyc::one(v.conductor());
    return f;
}

ClassFunction cf_regular(GroupPtr g, uint32_t p) {
    ClassFunction f = shaped(g, p);
    f.values[0] = Cyc::from_rat(Rat(static_cast<unsigned long>(g->size())), f.values[0].conductor());
    return f;
}

ClassFunction cf_add(const ClassFunction& a, const ClassFunction& b) {
    if (!a.same_shape(b)) throw ValidationError("class function shape mismatch");
    ClassFunction r = a;
    for (size_t i = 0; i < r.values.size(); ++i) r.values[i] = r.values[i] + b.values[i];
    return r;
}

ClassFunction cf_sub(const ClassFunction& a, const ClassFunction& b) {
    if (!a.same_shape(b)) throw ValidationError("class function shape mismatch");
    ClassFunction r = a;
    for (size_t i = 0; i < r.values.size(); ++i) r.values[i] = r.values[i] - b.values[i];
    return r;
}

ClassFunction cf_scale(const Rat& r, const ClassFunction& a) {
    ClassFunction out = a;
    for (auto& v : out.values) v = r * v;
    return out;
}

ClassFunction induce_class_function(const Subgroup& h, const ClassFunction& phi) {
    if (phi.group.get() != h.group.get())
        throw ValidationError("induced class function: subgroup does not carry the function");
    const auto& G = *h.parent;
    ClassFunction out = shaped(h.parent, phi.p);
    Rat scale(1, static_cast<unsigned long>(h.size()));
    scale.canonicalize();
    for (size_t i = 0; i < out.reps.size(); ++i) {
        size_t g = out.reps[i];
        Cyc sum = Cyc::zero(out.values[i].conductor());
        for (size_t x = 0; x < G.size(); ++x) {
            size_t conj = G.op(G.op(G.inverse(x), g), x);
            if (!h.contains(conj)) continue;
            sum = sum + phi.eval(h.to_sub(conj));
        }
        out.values[i] = scale * sum;
    }
    return out;
}

ClassFunction restrict_class_function(const ClassFunction& phi, const Subgroup& h) {
    if (phi.group.get() != h.parent.get())
        throw ValidationError("restriction: subgroup of a different group");
    ClassFunction out = shaped(h.group, phi.p);
    for (size_t i = 0; i < out.reps.size(); ++i)
        out.values[i] = phi.eval(h.to_parent(out.reps[i]));
    return out;
}

ClassFunction dual_class_function(const ClassFunction& phi) {
    ClassFunction out = phi;
    for (size_t i = 0; i < out.reps.size(); ++i)
        out.values[i] = phi.eval(phi.group->inverse(phi.reps[i]));
    return out;
}

Cyc cf_inner_product(const ClassFunction& phi, const ClassFunction& chi) {
    if (!phi.same_shape(chi)) throw ValidationError("inner product shape mismatch");
    const auto& G = *phi.group;
    Cyc sum = Cyc::zero(1);
    for (size_t i = 0; i < phi.reps.size(); ++i) {
        size_t g = phi.reps[i];
        size_t cls = G.class_of(g);
        Rat w(static_cast<unsigned long>(G.class_size(cls)), static_cast<unsigned long>(G.size()));
        w.canonicalize();  // 1/|centraliser|
        sum = sum + w * (phi.values[i] * chi.eval(G.inverse(g)));
    }
    return sum;
}

Rat K0Class::dimension() const {
    return cf.values.empty() ? Rat(0) : cf.values[0].rational_value();
}

void K0Class::validate() const {
    if (cf.reps.empty() || cf.group->element_order(cf.reps[0]) != 1)
        throw ValidationError("K0 class must include the identity class");
    Rat d = dimension();
    Int den = d.get_den();
    if (Int(static_cast<unsigned long>(cf.group->size())) % den != 0)
        throw ValidationError("K0 class dimension denominator does not divide |G|");
}

K0Class k0_from_cf(ClassFunction cf, K0Class::Provenance prov) {
    K0Class k{std::move(cf), prov};
    k.validate();
    return k;
}

K0Class k0_add(const K0Class& a, const K0Class& b) {
    return {cf_add(a.cf, b.cf), K0Class::Provenance::FormalCombination};
}

K0Class k0_sub(const K0Class& a, const K0Class& b) {
    return {cf_sub(a.cf, b.cf), K0Class::Provenance::FormalCombination};
}

K0Class k0_scale(const Rat& r, const K0Class& a) {
    return {cf_scale(r, a.cf), K0Class::Provenance::FormalCombination};
}

std::pair<bool, Int> stable_equal(const K0Class& a, const K0Class& b) {
    if (!a.cf.same_shape(b.cf)) throw ValidationError("stable_equal: group or characteristic mismatch");
    for (size_t i = 1; i < a.cf.values.size(); ++i)
        if (a.cf.values[i] != b.cf.values[i]) return {false, Int(0)};
    Rat diff = a.dimension() - b.dimension();
    diff.canonicalize();
    if (diff.get_den() != 1) return {false, Int(0)};
    Int num = diff.get_num();
    Int n(static_cast<unsigned long>(a.cf.group->size()));
    if (num % n != 0) return {false, Int(0)};
    return {true, num / n};
}

K0Class restrict_class(const K0Class& a, const Subgroup& h) {
    return {restrict_class_function(a.cf, h), a.provenance};
}

K0Class dual_class(const K0Class& a) { return {dual_class_function(a.cf), a.provenance}; }

}  // namespace eqrr
