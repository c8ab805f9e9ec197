#include "scflip/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "scflip/chvatal.hpp"
#include "scflip/errors.hpp"

namespace scflip {

namespace {

std::size_t volume_of(const std::vector<int>& dims) {
    std::size_t v = 1;
    for (int l : dims) v *= static_cast<std::size_t>(l);
    return v;
}

void require_all_even(const std::vector<int>& dims, const char* who) {
    for (int l : dims)
        if (l % 2) fail(ErrorCode::UnsupportedShape, std::string(who) + " needs all dimensions even");
}

int low_count(const std::vector<int>& dims, const Element& a, int skip = -1) {
    int c = 0;
    for (std::size_t k = 0; k < dims.size(); ++k)
        if (static_cast<int>(k) != skip && 2 * a[k] <= dims[k]) ++c;
    return c;
}

// A sub-product of the poset: axis k ranges over vals[k] (sorted). Axes with a
// single value are dropped from the block's own coordinates.
struct SubProduct {
    std::vector<std::vector<int>> vals;

    std::vector<int> block_dims() const {
        std::vector<int> d;
        for (const auto& v : vals)
            if (v.size() != 1) d.push_back(static_cast<int>(v.size()));
        return d;
    }
    bool empty() const {
        return std::any_of(vals.begin(), vals.end(), [](const auto& v) { return v.empty(); });
    }
    std::size_t size() const {
        std::size_t s = 1;
        for (const auto& v : vals) s *= v.size();
        return s;
    }
    Element lift(const Element& b) const {
        Element a(vals.size());
        std::size_t j = 0;
        for (std::size_t k = 0; k < vals.size(); ++k)
            a[k] = vals[k].size() == 1 ? vals[k][0] : vals[k][b[j++] - 1];
        return a;
    }
    std::vector<std::size_t> all_ranks(const ChainProduct& p) const {
        std::vector<std::size_t> out;
        if (empty()) return out;
        auto bp = ChainProduct::make(block_dims().empty() ? std::vector<int>{1} : block_dims());
        for (std::size_t i = 0; i < bp->volume(); ++i) {
            Element b = block_dims().empty() ? Element{} : bp->unrank(i);
            out.push_back(p.rank(lift(b)));
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

std::vector<int> range(int lo, int hi) {
    std::vector<int> v;
    for (int x = lo; x <= hi; ++x) v.push_back(x);
    return v;
}

std::vector<int> minus(std::vector<int> v, const std::vector<int>& drop) {
    v.erase(std::remove_if(v.begin(), v.end(),
                           [&](int x) { return std::find(drop.begin(), drop.end(), x) != drop.end(); }),
            v.end());
    return v;
}

// c_i = {l/4 + 1/2, 3l/4 + 1/2} for l = 2 mod 4.
std::vector<int> quarter_pair(int l) { return {(l + 2) / 4, (3 * l + 2) / 4}; }

struct BlockCenter {
    Ideal ideal;
    bool conditional;
    std::string recipe;
};

BlockCenter even_center(const std::vector<int>& dims);

void paint(bits::Words& w, const ChainProduct& p, const SubProduct& sp, const Ideal& block) {
    const auto& bp = *block.poset();
    for (auto r : block.members()) bits::set(w, p.rank(sp.lift(bp.unrank(r))));
}

BlockCenter block_center(const std::vector<int>& dims) {
    const int d = static_cast<int>(dims.size());
    auto p = ChainProduct::make(dims);
    bits::Words w(p->words(), 0);
    std::vector<std::vector<int>> c(d);
    for (int k = 0; k < d; ++k) c[k] = quarter_pair(dims[k]);

    SubProduct p0{c};
    paint(w, *p, p0, chvatal_block(d));
    for (int i = 0; i < d; ++i) {
        SubProduct pi;
        for (int k = 0; k < d; ++k)
            pi.vals.push_back(k < i ? range(1, dims[k]) : k == i ? minus(range(1, dims[k]), c[k]) : c[k]);
        if (pi.empty()) continue;
        paint(w, *p, pi, mod4_center(pi.block_dims(), i + 1));
    }
    return {Ideal::unchecked(p, std::move(w)), true, "chvatal+mod4 partition"};
}

BlockCenter even_center(const std::vector<int>& dims) {
    const int d = static_cast<int>(dims.size());
    if (d % 2) return {majority_ideal(dims), false, "majority"};
    if (std::any_of(dims.begin(), dims.end(), [](int l) { return l % 4 == 0; }))
        return {mod4_center(dims), false, "mod4"};
    return block_center(dims);
}

}  // namespace

Ideal halfspace(const std::vector<int>& dims, int axis) {
    auto p = ChainProduct::make(dims);
    if (axis < 1 || axis > p->d()) fail(ErrorCode::Range, "axis out of range");
    const int l = dims[axis - 1];
    if (l % 2) fail(ErrorCode::UnsupportedShape, "halfspace needs an even dimension on its axis");
    return Ideal::from_predicate(p, [&](const Element& a) { return 2 * a[axis - 1] <= l; });
}

std::pair<Ideal, Ideal> sc_diameter_pair(const std::vector<int>& dims) {
    std::vector<int> even;
    for (int k = 0; k < static_cast<int>(dims.size()); ++k)
        if (dims[k] % 2 == 0) even.push_back(k + 1);
    if (even.empty()) fail(ErrorCode::NoSeed, "all dimensions odd: the flip graph is empty");
    if (even.size() >= 2) return {halfspace(dims, even[0]), halfspace(dims, even[1])};
    const int ax = even[0] - 1;
    auto p = ChainProduct::make(dims);
    // I' on the punctured odd product: first coordinate off the middle lies below it.
    auto in_prime = [&](const Element& a) {
        for (int k = 0; k < p->d(); ++k) {
            if (k == ax) continue;
            int m = (dims[k] + 1) / 2;
            if (a[k] != m) return a[k] < m;
        }
        return false;  // the middle column
    };
    Ideal I = Ideal::from_predicate(p, [&](const Element& a) {
        bool middle = true;
        for (int k = 0; k < p->d(); ++k)
            if (k != ax && a[k] != (dims[k] + 1) / 2) middle = false;
        return middle ? 2 * a[ax] <= dims[ax] : in_prime(a);
    });
    return {I, halfspace(dims, ax + 1)};
}

Ideal majority_ideal(const std::vector<int>& dims) {
    require_all_even(dims, "majority_ideal");
    const int d = static_cast<int>(dims.size());
    if (d % 2 == 0) fail(ErrorCode::UnsupportedShape, "majority_ideal needs an odd number of dimensions");
    return Ideal::from_predicate(ChainProduct::make(dims),
                                 [&](const Element& a) { return 2 * low_count(dims, a) > d; });
}

Ideal mod4_center(const std::vector<int>& dims, int axis) {
    require_all_even(dims, "mod4_center");
    const int d = static_cast<int>(dims.size());
    if (d % 2) return majority_ideal(dims);
    if (axis == 0) {
        for (int k = 0; k < d; ++k)
            if (dims[k] % 4 == 0) axis = k + 1;
        if (axis == 0) fail(ErrorCode::UnsupportedShape, "mod4_center needs a dimension divisible by 4");
    }
    if (axis < 1 || axis > d) fail(ErrorCode::Range, "axis out of range");
    const int ax = axis - 1, l = dims[ax];
    if (l % 4) fail(ErrorCode::UnsupportedShape, "mod4_center axis must be divisible by 4");
    // Quarter q of a along the axis contributes (3 - q)/2; compare doubled sums.
    return Ideal::from_predicate(ChainProduct::make(dims), [&](const Element& a) {
        int q = (a[ax] - 1) / (l / 4);
        return 2 * low_count(dims, a, ax) + (3 - q) > d;
    });
}

Ideal chvatal_block(int d) {
    auto h = chvatal::uniform_H(d);
    return Ideal::from_predicate(ChainProduct::make(std::vector<int>(d, 2)), [&](const Element& a) {
        chvatal::Mask ones = 0;
        for (int k = 0; k < d; ++k)
            if (a[k] == 1) ones |= chvatal::Mask{1} << k;
        int n = std::popcount(ones);
        if (2 * n != d) return 2 * n > d;
        return !std::binary_search(h.sets.begin(), h.sets.end(), ones);
    });
}

std::vector<Block> partition_blocks(const std::vector<int>& dims) {
    auto p = ChainProduct::make(dims);
    const int d = p->d();
    std::vector<int> odd;
    for (int k = 0; k < d; ++k)
        if (dims[k] % 2) odd.push_back(k);
    std::vector<Block> out;
    if (!odd.empty()) {
        for (unsigned s = 0; s < (1u << odd.size()); ++s) {
            SubProduct sp;
            std::string label = "S={";
            for (int k = 0; k < d; ++k) sp.vals.push_back(range(1, dims[k]));
            bool first = true;
            for (std::size_t t = 0; t < odd.size(); ++t) {
                int k = odd[t], m = (dims[k] + 1) / 2;
                if ((s >> t) & 1u) {
                    sp.vals[k] = {m};
                    label += (first ? "" : ",") + std::to_string(k + 1);
                    first = false;
                } else {
                    sp.vals[k] = minus(sp.vals[k], {m});
                }
            }
            out.push_back({label + "}", sp.all_ranks(*p)});
        }
        return out;
    }
    std::vector<std::vector<int>> c(d);
    for (int k = 0; k < d; ++k) c[k] = quarter_pair(dims[k]);
    out.push_back({"P0", SubProduct{c}.all_ranks(*p)});
    for (int i = 0; i < d; ++i) {
        SubProduct pi;
        for (int k = 0; k < d; ++k)
            pi.vals.push_back(k < i ? range(1, dims[k]) : k == i ? minus(range(1, dims[k]), c[k]) : c[k]);
        out.push_back({"P" + std::to_string(i + 1), pi.all_ranks(*p)});
    }
    return out;
}

CenterCandidate partitioned_center(const std::vector<int>& dims) {
    auto p = ChainProduct::make(dims);
    const int d = p->d();
    std::vector<int> odd;
    for (int k = 0; k < d; ++k)
        if (dims[k] % 2) odd.push_back(k);
    if (static_cast<int>(odd.size()) == d) fail(ErrorCode::NoSeed, "all dimensions odd: the flip graph is empty");

    CenterCandidate out{Ideal::empty(p), false, ""};
    if (odd.empty()) {
        auto c = even_center(dims);
        out = {c.ideal, c.conditional, c.recipe};
    } else {
        bits::Words w(p->words(), 0);
        bool cond = false;
        for (unsigned s = 0; s < (1u << odd.size()); ++s) {
            SubProduct sp;
            for (int k = 0; k < d; ++k) sp.vals.push_back(range(1, dims[k]));
            for (std::size_t t = 0; t < odd.size(); ++t) {
                int k = odd[t], m = (dims[k] + 1) / 2;
                sp.vals[k] = ((s >> t) & 1u) ? std::vector<int>{m} : minus(sp.vals[k], {m});
            }
            if (sp.empty()) continue;
            auto c = even_center(sp.block_dims());
            cond = cond || c.conditional;
            paint(w, *p, sp, c.ideal);
        }
        out = {Ideal::unchecked(p, std::move(w)), cond, "odd-coordinate partition"};
    }
    invariant(is_down_closed(*p, out.ideal.words().data()) && is_self_complementary(*p, out.ideal.words().data()),
              "assembled center candidate is not a self-complementary ideal");
    return out;
}

Ideal staircase_c2r(int r) {
    if (r < 1) fail(ErrorCode::Range, "r must be >= 1");
    return Ideal::from_predicate(ChainProduct::make({2 * r, 2 * r, 2 * r}),
                                 [&](const Element& a) { return a[0] + a[1] + a[2] <= 3 * r + 1; });
}

namespace {
int highs(const Element& a, int r) { return (a[0] > r) + (a[1] > r) + (a[2] > r); }
}  // namespace

Ideal octant_ideal_cssc(int r) {
    if (r < 1) fail(ErrorCode::Range, "r must be >= 1");
    return Ideal::from_predicate(ChainProduct::make({2 * r, 2 * r, 2 * r}),
                                 [&](const Element& a) { return highs(a, r) <= 1; });
}

Ideal pyramid_ideal(int r) {
    if (r < 1) fail(ErrorCode::Range, "r must be >= 1");
    // A sits in the octant high on axes 2 and 3; its rotations and their duals are swapped.
    auto in_a = [&](int x, int y, int z) {
        int v = y - r, w = z - r;
        return x >= 1 && v >= 1 && w >= 1 && x + v <= r && x + w <= r + 1;
    };
    auto in_rot_a = [&](const Element& a) {
        return in_a(a[0], a[1], a[2]) || in_a(a[1], a[2], a[0]) || in_a(a[2], a[0], a[1]);
    };
    const int n = 2 * r + 1;
    return Ideal::from_predicate(ChainProduct::make({2 * r, 2 * r, 2 * r}), [&](const Element& a) {
        int h = highs(a, r);
        if (h == 0) return true;
        if (h == 2) return in_rot_a(a);
        if (h == 1) return !in_rot_a({n - a[0], n - a[1], n - a[2]});
        return false;
    });
}

NamedIdeal shell_ideal(int k, int r) {
    if (r < 1) fail(ErrorCode::Range, "r must be >= 1");
    if (k < 1 || k > 2 * r - 1) fail(ErrorCode::Range, "shell index k must lie in [1, 2r-1]");
    const int n = 2 * r;
    auto p = ChainProduct::make({n, n, n});
    bits::Words w(p->words(), 0);
    auto put = [&](int x, int y, int z) { bits::set(w, p->rank({x, y, z})); };
    for (int i = 1; i <= n; ++i) {
        put(i, 1, 1);
        put(1, i, 1);
        put(1, 1, i);
    }
    for (int a = 2; a <= n; ++a)
        for (int b = 2; b <= n; ++b) {
            if (a >= n - k + 1 && b >= k + 1) continue;
            put(a, b, 1);
            put(b, 1, a);
            put(1, a, b);
        }
    for (int a = 2; a <= k; ++a)
        for (int b = 2; b <= n - k; ++b) {
            put(a, b, n);
            put(b, n, a);
            put(n, a, b);
        }
    return {"shell", {k, r}, p, Ideal::unchecked(p, std::move(w)).members()};
}

Ideal compose(const Ideal& core, const NamedIdeal& shell) {
    const auto& cp = *core.poset();
    const int n = shell.poset->dims()[0];
    if (!cp.cube3() || cp.dims()[0] != n - 2) fail(ErrorCode::PosetMismatch, "core must live on [2r-2]^3");
    bits::Words w(shell.poset->words(), 0);
    for (auto r : shell.members) bits::set(w, r);
    for (auto r : core.members()) {
        Element a = cp.unrank(r);
        bits::set(w, shell.poset->rank({a[0] + 1, a[1] + 1, a[2] + 1}));
    }
    Ideal out = Ideal::unchecked(shell.poset, std::move(w));
    if (!validate(out, Symmetry::cssc)) fail(ErrorCode::Validation, "core and shell do not compose to a CSSC ideal");
    return out;
}

Ideal compose(const NamedIdeal& shell) {
    if (shell.poset->dims()[0] != 2) fail(ErrorCode::PosetMismatch, "a shell alone is an ideal only when r = 1");
    bits::Words w(shell.poset->words(), 0);
    for (auto r : shell.members) bits::set(w, r);
    Ideal out = Ideal::unchecked(shell.poset, std::move(w));
    if (!validate(out, Symmetry::cssc)) fail(ErrorCode::Validation, "shell is not a CSSC ideal");
    return out;
}

Ideal tssc_mandatory(int r) {
    if (r < 1) fail(ErrorCode::Range, "r must be >= 1");
    const int m = 2 * r + 1;
    return Ideal::from_predicate(ChainProduct::make({2 * r, 2 * r, 2 * r}), [&](const Element& a) {
        return (2 * a[0] <= m && a[1] + a[2] <= m) || (2 * a[1] <= m && a[2] + a[0] <= m) ||
               (2 * a[2] <= m && a[0] + a[1] <= m);
    });
}

std::pair<Ideal, Ideal> tssc_extremes(int r) {
    Ideal m = tssc_mandatory(r);
    const auto& p = *m.poset();
    const std::size_t V = p.volume();
    bits::Words w = m.words();
    for (std::size_t i = 0; i < V; ++i) {
        if (m.contains(i) || m.contains(V - 1 - i)) continue;
        if (highs(p.unrank(i), r) == 2) bits::set(w, i);
    }
    Ideal lo = Ideal::unchecked(m.poset(), std::move(w));
    Ideal hi = octant_ideal_cssc(r);
    invariant(validate(lo, Symmetry::tssc) && validate(hi, Symmetry::tssc), "TSSC extremes failed validation");
    return {lo, hi};
}

std::size_t sc_diameter_formula(const std::vector<int>& dims) {
    const std::size_t V = volume_of(dims);
    std::vector<int> even;
    for (int l : dims)
        if (l % 2 == 0) even.push_back(l);
    if (even.empty()) return 0;
    if (even.size() >= 2) return V / 4;
    return (V - static_cast<std::size_t>(even[0])) / 4;
}

std::size_t sc_radius_bound_scaled(const std::vector<int>& dims) {
    require_all_even(dims, "radius bound");
    const int d = static_cast<int>(dims.size());
    std::size_t c = 1;  // C(d-1, floor((d-1)/2))
    const int n = d - 1, k = (d - 1) / 2;
    for (int i = 1; i <= k; ++i) c = c * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return ((std::size_t{1} << (d - 1)) - c) * volume_of(dims);
}

std::size_t sc_radius_formula(const std::vector<int>& dims) {
    const std::size_t den = std::size_t{1} << (dims.size() + 1);
    return (sc_radius_bound_scaled(dims) + den - 1) / den;
}

bool sc_radius_exact_hypotheses(const std::vector<int>& dims) {
    for (int l : dims)
        if (l % 2) return false;
    return dims.size() % 2 == 1 || std::any_of(dims.begin(), dims.end(), [](int l) { return l % 4 == 0; });
}

}  // namespace scflip
