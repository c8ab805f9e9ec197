#pragma once

#include <vector>

namespace scflip::reference {

// Known TSSC center ideals as heights arrays; empty when none recorded.
std::vector<std::vector<std::vector<int>>> tssc_center(int r);

}  // namespace scflip::reference
