#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace scflip::chvatal {

using Mask = std::uint32_t;  // bit i-1 set <=> element i is in the set

struct SetFamily {
    int d = 0;
    std::vector<Mask> sets;  // deduplicated, sorted
    static SetFamily of(int d, std::vector<Mask> sets);
    static SetFamily parse(int d, const std::vector<std::vector<int>>& sets);  // 1-based elements
};

std::string show(Mask m, int d);

SetFamily uniform_H(int d);
bool is_uniform(const SetFamily& h);

struct Intersecting {
    std::size_t size = 0;
    SetFamily witness;
};

inline constexpr std::size_t kMaxFamily = 40;
Intersecting max_intersecting(const SetFamily& f);

enum class Which { chvatal2, chvatal3 };
const char* to_string(Which w);

SetFamily conjecture_family(Which w, int d);
std::size_t conjecture_bound(Which w, int d);

struct BlockAudit {
    bool ran = false;
    bool disjoint = false, covers = false;
    std::vector<std::size_t> block_max;
    bool pass = false;
};

// Five-block partition audit for chvatal2 at d = 6.
BlockAudit audit_blocks(const SetFamily& dfam);
std::vector<SetFamily> proof_blocks();

struct ConjectureReport {
    Which which{};
    int d = 0;
    std::size_t family_size = 0, bound = 0, max = 0;
    SetFamily witness;
    BlockAudit blocks;
    bool pass = false;
};

ConjectureReport verify_conjecture(Which w, int d);

}  // namespace scflip::chvatal
