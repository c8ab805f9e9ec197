#include "scflip/ideal.hpp"

#include <numeric>

#include "scflip/errors.hpp"

namespace scflip {

const char* to_string(Symmetry s) {
    switch (s) {
        case Symmetry::sc: return "sc";
        case Symmetry::cssc: return "cssc";
        case Symmetry::tssc: return "tssc";
    }
    return "?";
}

Symmetry symmetry_from_string(const std::string& s) {
    if (s == "sc") return Symmetry::sc;
    if (s == "cssc") return Symmetry::cssc;
    if (s == "tssc") return Symmetry::tssc;
    fail(ErrorCode::Unsupported, "unknown symmetry class '" + s + "'");
}

Ideal::Ideal(PosetPtr p, bits::Words w, bool) : p_(std::move(p)), w_(std::move(w)) {}

Ideal::Ideal(PosetPtr p, bits::Words w) : p_(std::move(p)), w_(std::move(w)) {
    if (w_.size() != p_->words()) fail(ErrorCode::NotAnIdeal, "membership vector has the wrong length");
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k] & ~p_->all_mask()[k]) fail(ErrorCode::NotAnIdeal, "membership bits beyond the volume");
    if (!is_down_closed(*p_, w_.data())) fail(ErrorCode::NotAnIdeal, "member set is not downward closed");
}

Ideal Ideal::unchecked(PosetPtr p, bits::Words w) { return Ideal(std::move(p), std::move(w), true); }

Ideal Ideal::empty(PosetPtr p) {
    auto n = p->words();
    return Ideal(std::move(p), bits::Words(n, 0), true);
}

Ideal Ideal::full(PosetPtr p) {
    auto w = p->all_mask();
    return Ideal(std::move(p), std::move(w), true);
}

Ideal Ideal::from_ranks(PosetPtr p, const std::vector<std::size_t>& ranks) {
    bits::Words w(p->words(), 0);
    for (auto r : ranks) {
        if (r >= p->volume()) fail(ErrorCode::Range, "member rank out of range");
        bits::set(w, r);
    }
    return Ideal(std::move(p), std::move(w));
}

Ideal Ideal::from_predicate(PosetPtr p, const std::function<bool(const Element&)>& in) {
    bits::Words w(p->words(), 0);
    for (std::size_t i = 0; i < p->volume(); ++i)
        if (in(p->unrank(i))) bits::set(w, i);
    return Ideal(std::move(p), std::move(w));
}

bool Ideal::contains(const Element& a) const { return contains(p_->rank(a)); }

std::vector<std::size_t> Ideal::members() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < w_.size(); ++k)
        for (bits::Word x = w_[k]; x; x &= x - 1) out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(x)));
    return out;
}

bool is_down_closed(const ChainProduct& p, const bits::Word* w) {
    const std::size_t n = p.words();
    bits::Words sh(n);
    for (int k = 0; k < p.d(); ++k) {
        bits::shl(w, sh.data(), n, p.stride(k));
        const auto& lo = p.has_lower(k);
        for (std::size_t j = 0; j < n; ++j)
            if (w[j] & lo[j] & ~sh[j]) return false;
    }
    return true;
}

bool is_self_complementary(const ChainProduct& p, const bits::Word* w) {
    const std::size_t V = p.volume();
    if (V % 2) return false;
    for (std::size_t i = 0; i < V / 2; ++i)
        if (((w[i >> 6] >> (i & 63)) & 1u) == ((w[(V - 1 - i) >> 6] >> ((V - 1 - i) & 63)) & 1u)) return false;
    return true;
}

bool is_orbit_closed(const ChainProduct& p, const bits::Word* w, Group g) {
    std::span<const bits::Word> s(w, p.words());
    for (std::size_t i = 0; i < p.volume(); ++i) {
        if (!bits::test(s, i)) continue;
        for (auto r : p.orbit_ranks(i, g))
            if (!bits::test(s, r)) return false;
    }
    return true;
}

void maximal_mask(const ChainProduct& p, const bits::Word* w, bits::Word* out, bits::Word* tmp) {
    const std::size_t n = p.words();
    for (std::size_t j = 0; j < n; ++j) out[j] = 0;
    for (int k = 0; k < p.d(); ++k) {
        bits::shr(w, tmp, n, p.stride(k));
        const auto& up = p.has_upper(k);
        for (std::size_t j = 0; j < n; ++j) out[j] |= tmp[j] & up[j];
    }
    for (std::size_t j = 0; j < n; ++j) out[j] = w[j] & ~out[j];
}

void check_compatible(const ChainProduct& p, Symmetry s) {
    if (s == Symmetry::sc) return;
    if (!p.cube3() || p.dims()[0] % 2)
        fail(ErrorCode::UnsupportedShape, std::string(to_string(s)) + " needs a cube [2r]^3");
}

bool validate(const Ideal& i, Symmetry s) {
    const auto& p = *i.poset();
    check_compatible(p, s);
    const auto* w = i.words().data();
    if (!is_down_closed(p, w) || !is_self_complementary(p, w)) return false;
    if (s == Symmetry::cssc) return is_orbit_closed(p, w, Group::cyclic);
    if (s == Symmetry::tssc) return is_orbit_closed(p, w, Group::full);
    return true;
}

std::vector<Element> maximal_elements(const Ideal& i) {
    const auto& p = *i.poset();
    bits::Words m(p.words()), tmp(p.words());
    maximal_mask(p, i.words().data(), m.data(), tmp.data());
    std::vector<Element> out;
    for (auto r : Ideal::unchecked(i.poset(), m).members()) out.push_back(p.unrank(r));
    return out;
}

HeightsMatrix to_heights(const Ideal& i) {
    const auto& p = *i.poset();
    if (p.d() != 3) fail(ErrorCode::UnsupportedShape, "heights need d = 3");
    HeightsMatrix h;
    h.dims = {p.dims()[0], p.dims()[1], p.dims()[2]};
    h.h.assign(h.dims[0], std::vector<int>(h.dims[1], 0));
    for (auto r : i.members()) ++h.h[p.coord(r, 0) - 1][p.coord(r, 1) - 1];
    return h;
}

Ideal from_heights(std::array<int, 3> dims, const std::vector<std::vector<int>>& h) {
    auto p = ChainProduct::make({dims[0], dims[1], dims[2]});
    if (static_cast<int>(h.size()) != dims[0]) fail(ErrorCode::NotAnIdeal, "heights: wrong row count");
    bits::Words w(p->words(), 0);
    for (int x = 0; x < dims[0]; ++x) {
        if (static_cast<int>(h[x].size()) != dims[1]) fail(ErrorCode::NotAnIdeal, "heights: wrong column count");
        for (int y = 0; y < dims[1]; ++y) {
            int v = h[x][y];
            if (v < 0 || v > dims[2]) fail(ErrorCode::NotAnIdeal, "heights: entry out of range");
            if ((x > 0 && v > h[x - 1][y]) || (y > 0 && v > h[x][y - 1]))
                fail(ErrorCode::NotAnIdeal, "heights: matrix is not monotone");
            for (int z = 1; z <= v; ++z) bits::set(w, p->rank({x + 1, y + 1, z}));
        }
    }
    return Ideal::unchecked(std::move(p), std::move(w));
}

Ideal from_heights(const HeightsMatrix& h) { return from_heights(h.dims, h.h); }

Rational density(const Ideal& i) {
    std::size_t n = i.size(), v = i.poset()->volume();
    std::size_t g = std::gcd(n, v);
    if (n == 0) return {0, 1};
    return {n / g, v / g};
}

std::map<unsigned, std::size_t> octant_counts(const Ideal& i) {
    const auto& p = *i.poset();
    if (!p.all_even()) fail(ErrorCode::UnsupportedShape, "octants need all dimensions even");
    std::map<unsigned, std::size_t> c;
    for (unsigned t = 0; t < (1u << p.d()); ++t) c[t] = 0;
    for (auto r : i.members()) ++c[p.octant_mask(r)];
    return c;
}

std::string octant_label(unsigned mask, int d) {
    std::string s(d, '0');
    for (int k = 0; k < d; ++k)
        if ((mask >> (d - 1 - k)) & 1u) s[k] = '1';
    return s;
}

CoreShell core_shell(const Ideal& i) {
    const auto& p = *i.poset();
    if (!p.cube3() || p.dims()[0] < 3) fail(ErrorCode::UnsupportedShape, "core/shell needs a cube with side >= 3");
    const int l = p.dims()[0];
    auto cp = ChainProduct::make({l - 2, l - 2, l - 2});
    bits::Words w(cp->words(), 0);
    std::vector<std::size_t> shell;
    for (auto r : i.members()) {
        Element a = p.unrank(r);
        bool inner = true;
        for (int c : a) inner = inner && c >= 2 && c <= l - 1;
        if (inner) bits::set(w, cp->rank({a[0] - 1, a[1] - 1, a[2] - 1}));
        else shell.push_back(r);
    }
    return {Ideal(std::move(cp), std::move(w)), std::move(shell)};
}

namespace {
void same_poset(const Ideal& i, const Ideal& j) {
    if (!(*i.poset() == *j.poset())) fail(ErrorCode::PosetMismatch, "ideals live on different posets");
}
bits::Word combine(bits::Word a, bits::Word b, SetOp op) {
    switch (op) {
        case SetOp::intersection: return a & b;
        case SetOp::difference: return a & ~b;
        case SetOp::symmetric_difference: return a ^ b;
    }
    return 0;
}
}  // namespace

std::vector<std::size_t> set_algebra(const Ideal& i, const Ideal& j, SetOp op) {
    same_poset(i, j);
    bits::Words w(i.words().size());
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = combine(i.words()[k], j.words()[k], op);
    return Ideal::unchecked(i.poset(), std::move(w)).members();
}

std::size_t set_algebra_size(const Ideal& i, const Ideal& j, SetOp op) {
    same_poset(i, j);
    std::size_t n = 0;
    for (std::size_t k = 0; k < i.words().size(); ++k)
        n += static_cast<std::size_t>(std::popcount(combine(i.words()[k], j.words()[k], op)));
    return n;
}

}  // namespace scflip
