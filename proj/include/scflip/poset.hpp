#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "scflip/bits.hpp"

namespace scflip {

using Element = std::vector<int>;  // 1-based coordinates

enum class Group { cyclic, full };

class ChainProduct;
using PosetPtr = std::shared_ptr<const ChainProduct>;

// [l1] x ... x [ld]. Immutable; build through make().
class ChainProduct {
public:
    static PosetPtr make(std::vector<int> dims);

    const std::vector<int>& dims() const { return dims_; }
    int d() const { return static_cast<int>(dims_.size()); }
    std::size_t volume() const { return volume_; }
    std::size_t words() const { return words_; }
    std::size_t stride(int k) const { return strides_[k]; }

    bool all_even() const;
    bool cube3() const;  // d = 3, equal dims
    bool operator==(const ChainProduct& o) const { return dims_ == o.dims_; }

    bool valid(const Element& a) const;
    void check(const Element& a) const;  // throws InvalidElement

    std::size_t rank(const Element& a) const;
    Element unrank(std::size_t i) const;
    int coord(std::size_t i, int k) const {  // 1-based value of coordinate k of rank i
        return static_cast<int>((i / strides_[k]) % static_cast<std::size_t>(dims_[k])) + 1;
    }

    Element dual(const Element& a) const;
    // Mixed-radix rank reverses under the dual.
    std::size_t dual_rank(std::size_t i) const { return volume_ - 1 - i; }

    std::pair<std::vector<Element>, std::vector<Element>> covers(const Element& a) const;
    std::vector<Element> orbit(const Element& a, Group g) const;
    std::vector<std::size_t> orbit_ranks(std::size_t i, Group g) const;  // sorted, deduplicated

    std::vector<int> octant(const Element& a) const;
    unsigned octant_mask(std::size_t i) const;  // t1 is the most significant bit

    // Bit i set iff rank i has a cover along axis k.
    const bits::Words& has_upper(int k) const { return has_upper_[k]; }
    const bits::Words& has_lower(int k) const { return has_lower_[k]; }
    const bits::Words& all_mask() const { return all_; }

private:
    explicit ChainProduct(std::vector<int> dims);

    std::vector<int> dims_;
    std::vector<std::size_t> strides_;
    std::size_t volume_ = 1;
    std::size_t words_ = 0;
    std::vector<bits::Words> has_upper_, has_lower_;
    bits::Words all_;
};

}  // namespace scflip
