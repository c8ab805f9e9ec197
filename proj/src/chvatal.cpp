#include "scflip/chvatal.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "scflip/errors.hpp"

namespace scflip::chvatal {

namespace {

std::size_t binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return r;
}

std::size_t ceil_quarter(std::size_t x) { return (x + 3) / 4; }

void check_even_small(int d) {
    if (d < 2 || d % 2 || d > 30) fail(ErrorCode::Unsupported, "ground size must be even and in [2, 30]");
}

std::vector<Mask> all_of_size(int d, int k) {
    std::vector<Mask> out;
    for (Mask m = 0; m < (Mask{1} << d); ++m)
        if (std::popcount(m) == k) out.push_back(m);
    return out;
}

}  // namespace

SetFamily SetFamily::of(int d, std::vector<Mask> sets) {
    for (Mask m : sets)
        if (d < 32 && m >= (Mask{1} << d)) fail(ErrorCode::Range, "set uses an element outside the ground set");
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    return {d, std::move(sets)};
}

SetFamily SetFamily::parse(int d, const std::vector<std::vector<int>>& sets) {
    std::vector<Mask> ms;
    for (const auto& s : sets) {
        Mask m = 0;
        for (int e : s) {
            if (e < 1 || e > d) fail(ErrorCode::Range, "element outside the ground set");
            m |= Mask{1} << (e - 1);
        }
        ms.push_back(m);
    }
    return of(d, std::move(ms));
}

std::string show(Mask m, int d) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < d; ++i)
        if ((m >> i) & 1u) {
            s += (first ? "" : ",") + std::to_string(i + 1);
            first = false;
        }
    return s + "}";
}

SetFamily uniform_H(int d) {
    switch (d) {
        case 2: return SetFamily::parse(2, {{1}});
        case 4: return SetFamily::parse(4, {{1, 2}, {1, 3}, {2, 3}});
        case 6:
            return SetFamily::parse(6, {{1, 2, 3}, {1, 2, 4}, {1, 3, 6}, {1, 4, 5}, {1, 5, 6},
                                        {2, 3, 5}, {2, 4, 6}, {2, 5, 6}, {3, 4, 6}, {3, 4, 5}});
        default: fail(ErrorCode::Unsupported, "no uniform family recorded for d = " + std::to_string(d));
    }
}

bool is_uniform(const SetFamily& h) {
    const int d = h.d;
    if (d < 2 || d % 2 || d > 30) return false;
    const Mask all = (Mask{1} << d) - 1;
    for (Mask m : h.sets)
        if (std::popcount(m) != d / 2) return false;
    for (Mask a : all_of_size(d, d / 2)) {
        bool in_a = std::binary_search(h.sets.begin(), h.sets.end(), a);
        bool in_c = std::binary_search(h.sets.begin(), h.sets.end(), all & ~a);
        if (in_a == in_c) return false;
    }
    const std::size_t limit = ceil_quarter(binom(d, d / 2));
    for (int i = 0; i < d; ++i) {
        std::size_t c = 0;
        for (Mask m : h.sets) c += (m >> i) & 1u;
        if (c > limit) return false;
    }
    return true;
}

Intersecting max_intersecting(const SetFamily& f) {
    if (f.sets.size() > kMaxFamily)
        fail(ErrorCode::GuardExceeded, "family of " + std::to_string(f.sets.size()) + " sets exceeds the search guard");
    // Maximum clique in the "shares an element" graph; the empty set shares nothing, not even with itself.
    std::vector<Mask> v;
    for (Mask m : f.sets)
        if (m) v.push_back(m);
    const std::size_t n = v.size();
    std::vector<std::uint64_t> nb(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && (v[i] & v[j])) nb[i] |= std::uint64_t{1} << j;
    // Branch on high-degree sets first.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return std::popcount(nb[a]) > std::popcount(nb[b]); });

    std::uint64_t best = 0;
    std::size_t best_n = 0;
    auto rec = [&](auto&& self, std::uint64_t chosen, std::size_t k, std::uint64_t cand) -> void {
        if (k > best_n) {
            best_n = k;
            best = chosen;
        }
        if (k + static_cast<std::size_t>(std::popcount(cand)) <= best_n) return;
        for (std::size_t t = 0; t < n; ++t) {
            std::size_t i = order[t];
            std::uint64_t bit = std::uint64_t{1} << i;
            if (!(cand & bit)) continue;
            if (k + static_cast<std::size_t>(std::popcount(cand)) <= best_n) return;
            self(self, chosen | bit, k + 1, cand & nb[i]);
            cand &= ~bit;  // exclude branch
        }
    };
    rec(rec, 0, 0, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);

    std::vector<Mask> w;
    for (std::size_t i = 0; i < n; ++i)
        if ((best >> i) & 1u) w.push_back(v[i]);
    return {best_n, SetFamily::of(f.d, std::move(w))};
}

const char* to_string(Which w) { return w == Which::chvatal2 ? "chvatal2" : "chvatal3"; }

SetFamily conjecture_family(Which w, int d) {
    check_even_small(d);
    std::vector<Mask> sets = uniform_H(d).sets;
    if (w == Which::chvatal2) {
        for (Mask m : all_of_size(d, d / 2 - 1)) sets.push_back(m);
    } else {
        for (int k = 0; k <= d / 2 - 1; ++k)
            for (Mask m : all_of_size(d, k)) sets.push_back(m);
    }
    return SetFamily::of(d, std::move(sets));
}

std::size_t conjecture_bound(Which w, int d) {
    check_even_small(d);
    std::size_t b = ceil_quarter(binom(d, d / 2));
    if (w == Which::chvatal2) return b + binom(d - 1, d / 2 - 2);
    for (int i = 1; i <= d / 2 - 1; ++i) b += binom(d - 1, i - 1);
    return b;
}

std::vector<SetFamily> proof_blocks() {
    return {
        SetFamily::parse(6, {{4, 5}, {1, 2, 3}, {5, 6}, {1, 2, 4}, {3, 6}}),
        SetFamily::parse(6, {{2, 3}, {1, 4, 5}, {2, 6}, {3, 4, 5}, {1, 6}}),
        SetFamily::parse(6, {{4, 6}, {2, 3, 5}, {1, 4}, {2, 5, 6}, {1, 3}}),
        SetFamily::parse(6, {{2, 5}, {1, 3, 6}, {2, 4}, {1, 5, 6}, {3, 4}}),
        SetFamily::parse(6, {{3, 5}, {2, 4, 6}, {1, 5}, {3, 4, 6}, {1, 2}}),
    };
}

BlockAudit audit_blocks(const SetFamily& dfam) {
    BlockAudit a;
    a.ran = true;
    auto blocks = proof_blocks();
    std::vector<Mask> uni;
    std::size_t total = 0;
    for (const auto& b : blocks) {
        total += b.sets.size();
        uni.insert(uni.end(), b.sets.begin(), b.sets.end());
        a.block_max.push_back(max_intersecting(b).size);
    }
    auto u = SetFamily::of(6, uni);
    a.disjoint = u.sets.size() == total;
    a.covers = u.sets == dfam.sets;
    a.pass = a.disjoint && a.covers &&
             std::all_of(a.block_max.begin(), a.block_max.end(), [](std::size_t m) { return m == 2; });
    return a;
}

ConjectureReport verify_conjecture(Which w, int d) {
    ConjectureReport r;
    r.which = w;
    r.d = d;
    auto fam = conjecture_family(w, d);
    r.family_size = fam.sets.size();
    r.bound = conjecture_bound(w, d);
    auto best = max_intersecting(fam);
    r.max = best.size;
    r.witness = best.witness;
    if (w == Which::chvatal2 && d == 6) r.blocks = audit_blocks(fam);
    r.pass = is_uniform(uniform_H(d)) && r.max <= r.bound && (!r.blocks.ran || r.blocks.pass);
    return r;
}

}  // namespace scflip::chvatal
