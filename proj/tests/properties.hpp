#pragma once

// Exhaustive property checks shared by the property binary and the acceptance
// suite. Each returns a list of violations; empty means the property holds.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "scflip/constructions.hpp"
#include "scflip/enumerate.hpp"
#include "scflip/metric.hpp"

namespace props {

using namespace scflip;

struct Instance {
    std::vector<int> dims;
    Symmetry cls;
};

inline std::string name(const Instance& i) {
    std::string s = to_string(i.cls);
    s += " ";
    for (std::size_t k = 0; k < i.dims.size(); ++k) s += (k ? "," : "") + std::to_string(i.dims[k]);
    return s;
}

inline const std::vector<Instance>& instances() {
    static const std::vector<Instance> v = {
        {{2, 3, 4}, Symmetry::sc}, {{4, 4}, Symmetry::sc},       {{3, 3, 2}, Symmetry::sc},
        {{2, 2, 2, 2}, Symmetry::sc}, {{4, 5, 2}, Symmetry::sc}, {{2, 2, 2, 3}, Symmetry::sc},
        {{6}, Symmetry::sc},          {{4, 4, 4}, Symmetry::sc}, {{4, 4, 4}, Symmetry::cssc},
        {{6, 6, 6}, Symmetry::cssc},  {{6, 6, 6}, Symmetry::tssc}, {{8, 8, 8}, Symmetry::tssc},
    };
    return v;
}

// J is a neighbor of I exactly when I is a neighbor of J, with the same weight.
inline std::vector<std::string> flip_symmetry() {
    std::vector<std::string> bad;
    for (const auto& in : instances()) {
        auto e = enumerate(in.dims, in.cls);
        for (std::size_t u = 0; u < e.size(); ++u) {
            for (const auto& [j, w] : flip_neighbors(e.vertex(u), in.cls)) {
                int back = 0;
                for (const auto& [k, w2] : flip_neighbors(j, in.cls))
                    if (k == e.vertex(u)) back = w2;
                if (back != w) bad.push_back(name(in) + ": asymmetric flip at vertex " + std::to_string(u));
            }
        }
    }
    return bad;
}

// Identity, symmetry and the triangle inequality over all triples.
inline std::vector<std::string> metric_axioms() {
    std::vector<std::string> bad;
    for (const auto& in : instances()) {
        auto e = enumerate(in.dims, in.cls);
        const std::size_t n = e.size();
        if (n > 500) continue;
        std::vector<std::size_t> d(n * n);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) d[u * n + v] = distance_raw(e.row(u), e.row(v), e.stride, in.cls);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) {
                if ((d[u * n + v] == 0) != (u == v)) bad.push_back(name(in) + ": identity");
                if (d[u * n + v] != d[v * n + u]) bad.push_back(name(in) + ": symmetry");
                for (std::size_t w = 0; w < n; ++w)
                    if (d[u * n + w] > d[u * n + v] + d[v * n + w]) {
                        bad.push_back(name(in) + ": triangle");
                        break;
                    }
            }
    }
    return bad;
}

// Enumeration, brute force and the validator agree; every construction validates.
inline std::vector<std::string> validator_agreement() {
    std::vector<std::string> bad;
    for (const std::vector<int>& dims : std::vector<std::vector<int>>{
             {2, 2, 2}, {2, 3}, {4, 4}, {2, 2, 3}, {3, 4}, {2, 2, 2, 2}, {1, 4, 3}}) {
        oracle::Box b(dims);
        auto p = ChainProduct::make(dims);
        for (auto s : oracle::ideals(b, "")) {
            Ideal i(p, {s});
            for (const char* c : {"sc", "cssc", "tssc"}) {
                auto cls = symmetry_from_string(c);
                bool want = oracle::self_comp(b, s);
                if (cls != Symmetry::sc) {
                    if (dims.size() != 3 || dims[0] != dims[1] || dims[1] != dims[2] || dims[0] % 2) continue;
                    want = want && oracle::sym_closed(b, s, cls == Symmetry::tssc);
                }
                if (validate(i, cls) != want) bad.push_back("validator disagrees on an ideal of a " + std::to_string(dims.size()) + "-d box");
            }
        }
    }
    {
        // 64 points is beyond subset brute force: compare symmetry checks over the SC ideals instead
        oracle::Box b({4, 4, 4});
        auto e = oracle_enumerate({4, 4, 4}, Symmetry::sc);
        for (std::size_t v = 0; v < e.size(); ++v) {
            auto i = e.vertex(v);
            auto s = e.row(v)[0];
            if (!oracle::closed(b, s) || !oracle::self_comp(b, s)) bad.push_back("oracle emitted a non-SC set");
            if (validate(i, Symmetry::cssc) != oracle::sym_closed(b, s, false)) bad.push_back("cssc validator disagrees");
            if (validate(i, Symmetry::tssc) != oracle::sym_closed(b, s, true)) bad.push_back("tssc validator disagrees");
        }
    }
    auto check = [&](const Ideal& i, Symmetry s, const std::string& what) {
        if (!validate(i, s)) bad.push_back(what + " does not validate");
    };
    for (int r = 1; r <= 6; ++r) {
        check(staircase_c2r(r), Symmetry::cssc, "staircase r=" + std::to_string(r));
        check(octant_ideal_cssc(r), Symmetry::cssc, "octant r=" + std::to_string(r));
        check(pyramid_ideal(r), Symmetry::cssc, "pyramid r=" + std::to_string(r));
        auto [lo, hi] = tssc_extremes(r);
        check(lo, Symmetry::tssc, "tssc min r=" + std::to_string(r));
        check(hi, Symmetry::tssc, "tssc max r=" + std::to_string(r));
        if (!is_down_closed(*tssc_mandatory(r).poset(), tssc_mandatory(r).words().data()))
            bad.push_back("mandatory region not an ideal");
    }
    for (const std::vector<int>& dims : std::vector<std::vector<int>>{
             {2, 3, 4}, {2, 6, 10}, {6, 8, 4}, {3, 3, 2}, {4, 4}, {2, 2, 2, 2}, {2, 2, 2, 2, 2, 2}, {3, 6}, {5, 7, 4}}) {
        check(partitioned_center(dims).ideal, Symmetry::sc, "partitioned center");
        auto [i, j] = sc_diameter_pair(dims);
        check(i, Symmetry::sc, "diameter pair");
        check(j, Symmetry::sc, "diameter pair");
    }
    for (int d : {2, 4, 6}) check(chvatal_block(d), Symmetry::sc, "chvatal block");
    return bad;
}

// heights -> ideal -> heights over every ideal of small three-dimensional boxes.
inline std::vector<std::string> heights_round_trip() {
    std::vector<std::string> bad;
    for (const std::vector<int>& dims : std::vector<std::vector<int>>{{2, 2, 2}, {2, 3, 4}, {3, 3, 3}, {2, 3, 5}}) {
        auto e = oracle_enumerate(dims, std::nullopt);
        for (std::size_t v = 0; v < e.size(); ++v) {
            auto i = e.vertex(v);
            auto h = to_heights(i);
            if (!(from_heights(h) == i)) bad.push_back("round trip failed");
            for (std::size_t a = 0; a < h.h.size(); ++a)
                for (std::size_t b = 0; b < h.h[a].size(); ++b) {
                    if (a + 1 < h.h.size() && h.h[a + 1][b] > h.h[a][b]) bad.push_back("heights not monotone");
                    if (b + 1 < h.h[a].size() && h.h[a][b + 1] > h.h[a][b]) bad.push_back("heights not monotone");
                }
        }
    }
    return bad;
}

// Ideal totals never exceed 4^(n^(d-1)) on [n]^d, every case the oracle guard allows.
inline std::vector<std::string> ideal_count_bound() {
    std::vector<std::string> bad;
    for (int n = 1; n <= 30; ++n)
        for (int d = 2; d <= 5; ++d) {
            double V = 1;
            for (int k = 0; k < d; ++k) V *= n;
            if (V > 30) break;
            std::vector<int> dims(d, n);
            auto total = oracle_enumerate(dims, std::nullopt).size();
            std::size_t e = 1;
            for (int k = 0; k < d - 1; ++k) e *= static_cast<std::size_t>(n);
            if (BigInt(total) > (BigInt(1) << (2 * e)))
                bad.push_back("bound fails at n=" + std::to_string(n) + " d=" + std::to_string(d));
        }
    return bad;
}

struct Property {
    const char* name;
    std::function<std::vector<std::string>()> run;
};

inline const std::vector<Property>& all() {
    static const std::vector<Property> v = {{"flip symmetry", flip_symmetry},
                                            {"metric axioms", metric_axioms},
                                            {"validator/construction agreement", validator_agreement},
                                            {"heights round trip", heights_round_trip},
                                            {"ideal count upper bound", ideal_count_bound}};
    return v;
}

}  // namespace props
