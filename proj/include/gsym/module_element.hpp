#pragma once
#include <map>

#include "partition.hpp"
#include "polynomial.hpp"

namespace gsym {

// Element of the free module over the truncated ring, with partitions as basis.
class ModuleElement {
    const TruncationContext *ctx_ = nullptr;
    std::map<Partition, Poly> terms_;

public:
    ModuleElement() = default;
    explicit ModuleElement(const TruncationContext &ctx) : ctx_(&ctx) {}

    static ModuleElement basis(const TruncationContext &ctx, const Partition &p) {
        ModuleElement v(ctx);
        v.terms_.emplace(p, Poly::constant(ctx, 1));
        return v;
    }

    const TruncationContext &context() const { return *ctx_; }
    const std::map<Partition, Poly> &terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    // <v, p>: coefficient polynomial of the basis partition p.
    Poly coefficient(const Partition &p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? Poly(*ctx_) : it->second;
    }

    void add(const Partition &p, const Poly &c) {
        if (c.isZero()) return;
        auto it = terms_.find(p);
        if (it == terms_.end())
            terms_.emplace(p, c);
        else {
            it->second += c;
            if (it->second.isZero()) terms_.erase(it);
        }
    }

    ModuleElement &operator+=(const ModuleElement &o) {
        for (auto &[p, c] : o.terms_) add(p, c);
        return *this;
    }
    ModuleElement operator+(const ModuleElement &o) const {
        ModuleElement r = *this;
        r += o;
        return r;
    }
    ModuleElement &operator-=(const ModuleElement &o) {
        for (auto &[p, c] : o.terms_) add(p, -c);
        return *this;
    }
    ModuleElement operator-(const ModuleElement &o) const {
        ModuleElement r = *this;
        r -= o;
        return r;
    }
    ModuleElement scaled(const Poly &f) const {
        ModuleElement r(*ctx_);
        for (auto &[p, c] : terms_) r.add(p, c * f);
        return r;
    }

    bool operator==(const ModuleElement &o) const { return terms_ == o.terms_; }
    bool operator!=(const ModuleElement &o) const { return terms_ != o.terms_; }

    int maxColumn() const {
        int m = 0;
        for (auto &[p, c] : terms_) m = std::max(m, p.maxColumn());
        return m;
    }
};

} // namespace gsym
