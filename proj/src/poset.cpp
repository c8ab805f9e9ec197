#include "scflip/poset.hpp"

#include <algorithm>
#include <string>

#include "scflip/errors.hpp"

namespace scflip {

namespace {
std::string show(const Element& a) {
    std::string s = "(";
    for (std::size_t k = 0; k < a.size(); ++k) s += (k ? "," : "") + std::to_string(a[k]);
    return s + ")";
}
}  // namespace

PosetPtr ChainProduct::make(std::vector<int> dims) {
    return PosetPtr(new ChainProduct(std::move(dims)));
}

ChainProduct::ChainProduct(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) fail(ErrorCode::UnsupportedShape, "chain product needs d >= 1");
    for (int l : dims_) {
        if (l < 1) fail(ErrorCode::UnsupportedShape, "every dimension must be >= 1");
        if (volume_ > (std::size_t{1} << 40) / static_cast<std::size_t>(l))
            fail(ErrorCode::UnsupportedShape, "volume too large");
        volume_ *= static_cast<std::size_t>(l);
    }
    const int d = this->d();
    strides_.assign(d, 1);
    for (int k = d - 2; k >= 0; --k) strides_[k] = strides_[k + 1] * static_cast<std::size_t>(dims_[k + 1]);
    words_ = bits::words_for(volume_);

    all_.assign(words_, 0);
    has_upper_.assign(d, bits::Words(words_, 0));
    has_lower_.assign(d, bits::Words(words_, 0));
    for (std::size_t i = 0; i < volume_; ++i) {
        bits::set(all_, i);
        for (int k = 0; k < d; ++k) {
            int c = coord(i, k);
            if (c < dims_[k]) bits::set(has_upper_[k], i);
            if (c > 1) bits::set(has_lower_[k], i);
        }
    }
}

bool ChainProduct::all_even() const {
    return std::all_of(dims_.begin(), dims_.end(), [](int l) { return l % 2 == 0; });
}

bool ChainProduct::cube3() const {
    return d() == 3 && dims_[0] == dims_[1] && dims_[1] == dims_[2];
}

bool ChainProduct::valid(const Element& a) const {
    if (a.size() != dims_.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] < 1 || a[k] > dims_[k]) return false;
    return true;
}

void ChainProduct::check(const Element& a) const {
    if (!valid(a)) fail(ErrorCode::InvalidElement, show(a) + " is not an element");
}

std::size_t ChainProduct::rank(const Element& a) const {
    check(a);
    std::size_t r = 0;
    for (int k = 0; k < d(); ++k) r += static_cast<std::size_t>(a[k] - 1) * strides_[k];
    return r;
}

Element ChainProduct::unrank(std::size_t i) const {
    if (i >= volume_) fail(ErrorCode::Range, "rank " + std::to_string(i) + " >= volume");
    Element a(d());
    for (int k = 0; k < d(); ++k) a[k] = coord(i, k);
    return a;
}

Element ChainProduct::dual(const Element& a) const {
    check(a);
    Element b(a.size());
    for (int k = 0; k < d(); ++k) b[k] = dims_[k] + 1 - a[k];
    return b;
}

std::pair<std::vector<Element>, std::vector<Element>> ChainProduct::covers(const Element& a) const {
    check(a);
    std::vector<Element> lo, up;
    for (int k = 0; k < d(); ++k) {
        if (a[k] > 1) { lo.push_back(a); --lo.back()[k]; }
        if (a[k] < dims_[k]) { up.push_back(a); ++up.back()[k]; }
    }
    return {lo, up};
}

std::vector<Element> ChainProduct::orbit(const Element& a, Group g) const {
    if (!cube3()) fail(ErrorCode::UnsupportedShape, "orbits need a cube [l]^3");
    check(a);
    std::vector<Element> out;
    if (g == Group::cyclic) {
        out = {a, {a[2], a[0], a[1]}, {a[1], a[2], a[0]}};
    } else {
        Element b = a;
        std::sort(b.begin(), b.end());
        do out.push_back(b);
        while (std::next_permutation(b.begin(), b.end()));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::size_t> ChainProduct::orbit_ranks(std::size_t i, Group g) const {
    std::vector<std::size_t> r;
    for (const auto& e : orbit(unrank(i), g)) r.push_back(rank(e));
    std::sort(r.begin(), r.end());
    return r;
}

std::vector<int> ChainProduct::octant(const Element& a) const {
    if (!all_even()) fail(ErrorCode::UnsupportedShape, "octants need all dimensions even");
    check(a);
    std::vector<int> t(d());
    for (int k = 0; k < d(); ++k) t[k] = 2 * a[k] > dims_[k] ? 1 : 0;
    return t;
}

unsigned ChainProduct::octant_mask(std::size_t i) const {
    unsigned m = 0;
    for (int k = 0; k < d(); ++k) m = (m << 1) | (2 * coord(i, k) > dims_[k] ? 1u : 0u);
    return m;
}

}  // namespace scflip
