#include "scflip/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "scflip/constructions.hpp"
#include "scflip/errors.hpp"
#include "scflip/metric.hpp"

namespace scflip {

using BigRational = boost::multiprecision::cpp_rational;

const char* to_string(Method m) { return m == Method::bfs_flip ? "bfs_flip" : "oracle_dfs"; }

Ideal EnumerationResult::vertex(std::size_t i) const {
    return Ideal::unchecked(poset, bits::Words(row(i), row(i) + stride));
}

std::optional<std::size_t> EnumerationResult::find(const bits::Word* w) const {
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        int c = bits::compare(row(mid), w, stride);
        if (c == 0) return mid;
        if (c < 0) lo = mid + 1;
        else hi = mid;
    }
    return std::nullopt;
}

namespace {

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

// Boxed plane partitions in an a x b x c box, as the raw product of fractions.
BigRational box_product(int a, int b, int c) {
    BigRational r = 1;
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j)
            for (int k = 1; k <= c; ++k) r *= BigRational(i + j + k - 1, i + j + k - 2);
    return r;
}

BigRational macmahon_ratio(int r) {
    BigRational p = 1;
    for (int j = 0; j < r; ++j) p *= BigRational(factorial(3 * j + 1), factorial(r + j));
    return p;
}

BigInt integral(const BigRational& q) {
    invariant(boost::multiprecision::denominator(q) == 1, "counting product is not an integer");
    return boost::multiprecision::numerator(q);
}

int cube_half_side(const std::vector<int>& dims, Symmetry cls) {
    if (dims.size() != 3 || dims[0] != dims[1] || dims[1] != dims[2] || dims[0] % 2 || dims[0] < 2)
        fail(ErrorCode::UnsupportedShape, std::string(to_string(cls)) + " needs dims 2r,2r,2r");
    return dims[0] / 2;
}

}  // namespace

bool has_closed_form(const std::vector<int>& dims, Symmetry cls) {
    return cls != Symmetry::sc || dims.size() <= 3;
}

CountDetail count_closed_detail(const std::vector<int>& dims, Symmetry cls) {
    for (int l : dims)
        if (l < 1) fail(ErrorCode::UnsupportedShape, "every dimension must be >= 1");
    if (dims.empty()) fail(ErrorCode::UnsupportedShape, "need at least one dimension");
    if (cls != Symmetry::sc) {
        int r = cube_half_side(dims, cls);
        BigRational p = macmahon_ratio(r);
        if (cls == Symmetry::cssc) p *= p;
        return {integral(p), dims};
    }
    if (dims.size() > 3) fail(ErrorCode::Unsupported, "no closed-form SC count for d > 3");
    int last_even = -1;
    for (int k = 0; k < static_cast<int>(dims.size()); ++k)
        if (dims[k] % 2 == 0) last_even = k;
    if (last_even < 0) return {0, dims};
    if (dims.size() == 1) return {1, dims};
    if (dims.size() == 2) return {binomial(dims[0] / 2 + dims[1] / 2, dims[0] / 2), dims};

    std::vector<int> o;
    for (int k = 0; k < 3; ++k)
        if (k != last_even) o.push_back(dims[k]);
    o.push_back(dims[last_even]);
    const int l1 = o[0], l2 = o[1], h = o[2] / 2;
    BigRational p = box_product(l1 / 2, (l2 + 1) / 2, h) * box_product((l1 + 1) / 2, l2 / 2, h);
    return {integral(p), o};
}

BigInt count_closed(const std::vector<int>& dims, Symmetry cls) { return count_closed_detail(dims, cls).value; }

Ideal seed(const std::vector<int>& dims, Symmetry cls) {
    if (cls != Symmetry::sc) return staircase_c2r(cube_half_side(dims, cls));
    for (int k = 0; k < static_cast<int>(dims.size()); ++k)
        if (dims[k] % 2 == 0) return halfspace(dims, k + 1);
    fail(ErrorCode::NoSeed, "all dimensions odd: no self-complementary ideals");
}

namespace {

struct ArenaHash {
    const bits::Words* arena;
    std::size_t stride;
    std::size_t operator()(std::uint32_t i) const { return bits::hash(arena->data() + i * stride, stride); }
};
struct ArenaEq {
    const bits::Words* arena;
    std::size_t stride;
    bool operator()(std::uint32_t a, std::uint32_t b) const {
        return std::equal(arena->data() + a * stride, arena->data() + (a + 1) * stride, arena->data() + b * stride);
    }
};

void sort_arena(EnumerationResult& r) {
    const std::size_t n = r.size(), s = r.stride;
    std::vector<std::uint32_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0u);
    std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
        return bits::compare(r.arena.data() + a * s, r.arena.data() + b * s, s) < 0;
    });
    bits::Words out(r.arena.size());
    for (std::size_t i = 0; i < n; ++i)
        std::copy_n(r.arena.data() + idx[i] * s, s, out.data() + i * s);
    r.arena = std::move(out);
}

}  // namespace

EnumerationResult enumerate(const std::vector<int>& dims, Symmetry cls, const EnumerateOptions& opt) {
    auto p = ChainProduct::make(dims);
    check_compatible(*p, cls);
    EnumerationResult r;
    r.poset = p;
    r.cls = cls;
    r.method = Method::bfs_flip;
    r.stride = p->words();

    if (!opt.force) {
        if (has_closed_form(dims, cls)) {
            if (count_closed(dims, cls) > kDefaultCountLimit)
                fail(ErrorCode::GuardExceeded, "closed-form count exceeds the default enumeration limit (" +
                                                   count_closed(dims, cls).str() + " vertices); pass force to override");
        } else if (p->volume() > kDefaultVolumeLimit) {
            fail(ErrorCode::GuardExceeded, "no closed-form count and volume " + std::to_string(p->volume()) +
                                               " exceeds the default enumeration limit; pass force to override");
        }
    }

    bool any_even = std::any_of(dims.begin(), dims.end(), [](int l) { return l % 2 == 0; });
    if (!any_even) return r;

    const std::size_t s = r.stride;
    Ideal root = seed(dims, cls);
    r.arena = root.words();

    std::unordered_set<std::uint32_t, ArenaHash, ArenaEq> seen(1024, ArenaHash{&r.arena, s}, ArenaEq{&r.arena, s});
    seen.insert(0);
    Flipper flip(p, cls);
    bits::Words cur(s);
    for (std::size_t head = 0; head < r.size(); ++head) {
        std::copy_n(r.row(head), s, cur.begin());
        flip.each(cur.data(), [&](const bits::Word* J, int) {
            std::size_t id = r.size();
            r.arena.insert(r.arena.end(), J, J + s);
            if (!seen.insert(static_cast<std::uint32_t>(id)).second) {
                r.arena.resize(id * s);
                return;
            }
            if (opt.cap && r.size() > *opt.cap)
                throw PartialResult("enumeration cap of " + std::to_string(*opt.cap) + " vertices exceeded", r.size());
        });
    }
    sort_arena(r);
    return r;
}

namespace {

// Include/exclude search with unit propagation over covers, duals and orbits.
class Oracle {
public:
    Oracle(PosetPtr p, std::optional<Symmetry> f, std::uint64_t budget)
        : p_(std::move(p)), f_(f), V_(p_->volume()), val_(V_, 0), budget_(budget) {
        if (f_ && *f_ != Symmetry::sc) {
            Group g = *f_ == Symmetry::cssc ? Group::cyclic : Group::full;
            orbit_.resize(V_);
            for (std::size_t i = 0; i < V_; ++i) orbit_[i] = p_->orbit_ranks(i, g);
        }
        for (std::size_t i = 0; i < V_; ++i)
            for (int k = 0; k < p_->d(); ++k) {
                int c = p_->coord(i, k);
                if (c > 1) lower_.push_back({i, i - p_->stride(k)});
            }
        lo_.assign(V_, {});
        up_.assign(V_, {});
        for (auto [a, b] : lower_) {
            lo_[a].push_back(b);
            up_[b].push_back(a);
        }
    }

    void run(EnumerationResult& out) {
        out_ = &out;
        dfs(0);
    }

private:
    // val: 0 unknown, 1 in, 2 out
    bool assign(std::size_t i, std::uint8_t v) {
        std::vector<std::pair<std::size_t, std::uint8_t>> stack{{i, v}};
        while (!stack.empty()) {
            auto [x, w] = stack.back();
            stack.pop_back();
            if (val_[x] == w) continue;
            if (val_[x] != 0) return false;
            val_[x] = w;
            trail_.push_back(x);
            const std::uint8_t other = w == 1 ? 2 : 1;
            for (auto y : (w == 1 ? lo_[x] : up_[x])) stack.push_back({y, w});
            if (f_) stack.push_back({V_ - 1 - x, other});
            if (!orbit_.empty())
                for (auto y : orbit_[x]) stack.push_back({y, w});
        }
        return true;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            val_[trail_.back()] = 0;
            trail_.pop_back();
        }
    }

    void dfs(std::size_t from) {
        if (++nodes_ > budget_)
            fail(ErrorCode::GuardExceeded, "oracle search exceeded its node budget of " + std::to_string(budget_));
        std::size_t i = from;
        while (i < V_ && val_[i] != 0) ++i;
        if (i == V_) {
            bits::Words w(p_->words(), 0);
            for (std::size_t j = 0; j < V_; ++j)
                if (val_[j] == 1) bits::set(w, j);
            out_->arena.insert(out_->arena.end(), w.begin(), w.end());
            return;
        }
        for (std::uint8_t v : {std::uint8_t{2}, std::uint8_t{1}}) {
            std::size_t mark = trail_.size();
            if (assign(i, v)) dfs(i + 1);
            undo(mark);
        }
    }

    PosetPtr p_;
    std::optional<Symmetry> f_;
    std::size_t V_;
    std::vector<std::uint8_t> val_;
    std::vector<std::size_t> trail_;
    std::vector<std::pair<std::size_t, std::size_t>> lower_;
    std::vector<std::vector<std::size_t>> lo_, up_, orbit_;
    std::uint64_t budget_, nodes_ = 0;
    EnumerationResult* out_ = nullptr;
};

}  // namespace

EnumerationResult oracle_enumerate(const std::vector<int>& dims, std::optional<Symmetry> filter,
                                   const OracleOptions& opt) {
    auto p = ChainProduct::make(dims);
    if (filter) check_compatible(*p, *filter);
    if (!filter && p->volume() > opt.max_volume) {
        fail(ErrorCode::GuardExceeded, "unfiltered oracle refused: volume " + std::to_string(p->volume()) +
                                           " > guard " + std::to_string(opt.max_volume) +
                                           " (ideal count can reach 2^" + std::to_string(p->volume()) + ")");
    }
    EnumerationResult r;
    r.poset = p;
    r.cls = filter;
    r.method = Method::oracle_dfs;
    r.stride = p->words();
    if (filter && p->volume() % 2) return r;
    Oracle(p, filter, opt.node_budget).run(r);
    sort_arena(r);
    return r;
}

}  // namespace scflip
