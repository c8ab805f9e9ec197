#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "scflip/bits.hpp"
#include "scflip/poset.hpp"

namespace scflip {

enum class Symmetry { sc, cssc, tssc };

const char* to_string(Symmetry s);
Symmetry symmetry_from_string(const std::string& s);

class Ideal {
public:
    Ideal(PosetPtr p, bits::Words w);  // throws NotAnIdeal
    static Ideal unchecked(PosetPtr p, bits::Words w);
    static Ideal empty(PosetPtr p);
    static Ideal full(PosetPtr p);
    static Ideal from_ranks(PosetPtr p, const std::vector<std::size_t>& ranks);
    static Ideal from_predicate(PosetPtr p, const std::function<bool(const Element&)>& in);

    const PosetPtr& poset() const { return p_; }
    const bits::Words& words() const { return w_; }
    bool contains(std::size_t rank) const { return bits::test(w_, rank); }
    bool contains(const Element& a) const;
    std::size_t size() const { return bits::popcount(w_); }
    std::vector<std::size_t> members() const;

    bool operator==(const Ideal& o) const { return *p_ == *o.p_ && w_ == o.w_; }
    bool operator<(const Ideal& o) const {
        return bits::compare(w_.data(), o.w_.data(), w_.size()) < 0;
    }

private:
    Ideal(PosetPtr p, bits::Words w, bool);
    PosetPtr p_;
    bits::Words w_;
};

// Raw-word predicates shared with the enumeration kernels.
bool is_down_closed(const ChainProduct& p, const bits::Word* w);
bool is_self_complementary(const ChainProduct& p, const bits::Word* w);
bool is_orbit_closed(const ChainProduct& p, const bits::Word* w, Group g);
void maximal_mask(const ChainProduct& p, const bits::Word* w, bits::Word* out, bits::Word* tmp);

void check_compatible(const ChainProduct& p, Symmetry s);  // throws UnsupportedShape
bool validate(const Ideal& i, Symmetry s);
std::vector<Element> maximal_elements(const Ideal& i);

struct HeightsMatrix {
    std::array<int, 3> dims{};
    std::vector<std::vector<int>> h;
    bool operator==(const HeightsMatrix&) const = default;
};
HeightsMatrix to_heights(const Ideal& i);
Ideal from_heights(const HeightsMatrix& h);
Ideal from_heights(std::array<int, 3> dims, const std::vector<std::vector<int>>& h);

struct Rational {
    std::size_t num = 0, den = 1;
    bool operator==(const Rational&) const = default;
};
Rational density(const Ideal& i);

// Key: octant bit tuple packed with t1 as the most significant bit.
std::map<unsigned, std::size_t> octant_counts(const Ideal& i);
std::string octant_label(unsigned mask, int d);

struct CoreShell {
    Ideal core;
    std::vector<std::size_t> shell;  // ranks in the original poset
};
CoreShell core_shell(const Ideal& i);

enum class SetOp { intersection, difference, symmetric_difference };
std::vector<std::size_t> set_algebra(const Ideal& i, const Ideal& j, SetOp op);
std::size_t set_algebra_size(const Ideal& i, const Ideal& j, SetOp op);

}  // namespace scflip
