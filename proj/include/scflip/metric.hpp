#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "scflip/bits.hpp"
#include "scflip/enumerate.hpp"
#include "scflip/ideal.hpp"

namespace scflip {

// Flip kernel over raw membership vectors. One instance per worker.
class Flipper {
public:
    Flipper(PosetPtr p, Symmetry s);

    // f(const bits::Word* J, int weight) for every flip neighbor of I.
    template <class F>
    void each(const bits::Word* I, F&& f);

private:
    bool lower_ok(const bits::Word* I, std::size_t b, const std::size_t* skip, int nskip) const;

    PosetPtr p_;
    Symmetry s_;
    std::size_t n_, V_;
    std::vector<std::uint32_t> orbit_;  // 6 slots per rank
    std::vector<std::uint8_t> orbit_size_;
    bits::Words max_, tmp_, J_;
};

std::vector<std::pair<Ideal, int>> flip_neighbors(const Ideal& i, Symmetry cls);

std::size_t distance(const Ideal& i, const Ideal& j, Symmetry cls);
std::size_t distance_raw(const bits::Word* i, const bits::Word* j, std::size_t nwords, Symmetry cls);

struct Edge {
    std::size_t u, v;
    int w;
    bool operator==(const Edge&) const = default;
};

struct FlipGraph {
    std::shared_ptr<const EnumerationResult> vertices;
    std::vector<Edge> edges;  // u < v, sorted
    std::vector<std::vector<std::pair<std::size_t, int>>> adj;
};

FlipGraph build_graph(std::shared_ptr<const EnumerationResult> e);

struct MetricReport {
    std::vector<std::size_t> ecc;
    std::size_t diameter = 0, radius = 0;
    std::vector<std::size_t> center, perimeter;
    bool empty = false;
};

// workers = 0 picks SCFLIP_WORKERS or the hardware count.
MetricReport metric_report(const EnumerationResult& e, unsigned workers = 0);
unsigned default_workers();

// Eccentricity of an arbitrary ideal against every vertex.
std::size_t eccentricity_of(const Ideal& i, const EnumerationResult& e);

std::size_t shortest_path_oracle(const FlipGraph& g, std::size_t u, std::size_t v);
std::vector<std::size_t> shortest_paths_from(const FlipGraph& g, std::size_t u);

void export_dot(const FlipGraph& g, const MetricReport& r, std::ostream& os);
void export_json(const FlipGraph& g, const MetricReport& r, std::ostream& os);
void export_csv(const MetricReport& r, std::ostream& os);

// ---- implementation of the template kernel ----

inline bool Flipper::lower_ok(const bits::Word* I, std::size_t b, const std::size_t* skip, int nskip) const {
    const auto& p = *p_;
    for (int k = 0; k < p.d(); ++k) {
        if (!bits::test(std::span<const bits::Word>(p.has_lower(k)), b)) continue;
        std::size_t c = b - p.stride(k);
        if (!((I[c >> 6] >> (c & 63)) & 1u)) return false;
        for (int t = 0; t < nskip; ++t)
            if (skip[t] == c) return false;
    }
    return true;
}

template <class F>
void Flipper::each(const bits::Word* I, F&& f) {
    maximal_mask(*p_, I, max_.data(), tmp_.data());
    for (std::size_t wi = 0; wi < n_; ++wi) {
        for (bits::Word x = max_[wi]; x; x &= x - 1) {
            const std::size_t a = wi * 64 + static_cast<std::size_t>(std::countr_zero(x));
            if (s_ == Symmetry::sc) {
                const std::size_t b = V_ - 1 - a;
                if (!lower_ok(I, b, &a, 1)) continue;
                std::copy(I, I + n_, J_.begin());
                bits::reset(J_, a);
                bits::set(J_, b);
                f(static_cast<const bits::Word*>(J_.data()), 1);
                continue;
            }
            const int m = orbit_size_[a];
            const std::uint32_t* o = &orbit_[a * 6];
            if (m == 1 || o[0] != a) continue;  // diagonal, or not the orbit's representative
            std::size_t orb[6];
            bool ok = true;
            for (int t = 0; t < m; ++t) {
                orb[t] = o[t];
                ok = ok && bits::test(std::span<const bits::Word>(max_), orb[t]);
            }
            for (int t = 0; ok && t < m; ++t) ok = lower_ok(I, V_ - 1 - orb[t], orb, m);
            if (!ok) continue;
            std::copy(I, I + n_, J_.begin());
            for (int t = 0; t < m; ++t) bits::reset(J_, orb[t]);
            for (int t = 0; t < m; ++t) bits::set(J_, V_ - 1 - orb[t]);
            f(static_cast<const bits::Word*>(J_.data()), s_ == Symmetry::tssc ? m / 3 : 1);
        }
    }
}

}  // namespace scflip
