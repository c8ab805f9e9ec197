#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "scflip/bits.hpp"
#include "scflip/ideal.hpp"
#include "scflip/poset.hpp"

namespace scflip {

using BigInt = boost::multiprecision::cpp_int;

enum class Method { bfs_flip, oracle_dfs };
const char* to_string(Method m);

// Flat arena of canonically sorted membership vectors.
struct EnumerationResult {
    PosetPtr poset;
    std::optional<Symmetry> cls;  // empty for the unfiltered oracle
    Method method = Method::bfs_flip;
    std::size_t stride = 0;  // words per vertex
    bits::Words arena;

    std::size_t size() const { return stride ? arena.size() / stride : 0; }
    const bits::Word* row(std::size_t i) const { return arena.data() + i * stride; }
    Ideal vertex(std::size_t i) const;
    std::optional<std::size_t> find(const bits::Word* w) const;
    std::optional<std::size_t> find(const Ideal& i) const { return find(i.words().data()); }
};

struct CountDetail {
    BigInt value;
    std::vector<int> order;  // dims as fed to the formula (d = 3 puts an even dim last)
};

CountDetail count_closed_detail(const std::vector<int>& dims, Symmetry cls);
BigInt count_closed(const std::vector<int>& dims, Symmetry cls);
bool has_closed_form(const std::vector<int>& dims, Symmetry cls);

Ideal seed(const std::vector<int>& dims, Symmetry cls);

struct EnumerateOptions {
    std::optional<std::uint64_t> cap;  // hard limit on vertices found
    bool force = false;                // skip the default size refusal
};

inline constexpr std::uint64_t kDefaultCountLimit = 2'000'000;
inline constexpr std::size_t kDefaultVolumeLimit = 36;

EnumerationResult enumerate(const std::vector<int>& dims, Symmetry cls, const EnumerateOptions& opt = {});

struct OracleOptions {
    std::size_t max_volume = 30;          // unfiltered guard
    std::uint64_t node_budget = 50'000'000;  // search nodes, filtered runs
};

EnumerationResult oracle_enumerate(const std::vector<int>& dims, std::optional<Symmetry> filter,
                                   const OracleOptions& opt = {});

}  // namespace scflip
