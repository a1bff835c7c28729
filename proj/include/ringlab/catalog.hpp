#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// F2[x,y]/(x,y)^2 on the basis 1, x, y. Element index c0 + 2 c1 + 4 c2 for
/// c0 + c1 x + c2 y.
RingPtr mk_f2xy_square(const Limits& limits = {});

/// Built-in table rings addressable by name from the DSL.
std::vector<std::string> catalog_names();
/// Throws RingError(Parse) for an unknown name.
RingPtr catalog_ring(std::string_view name, const Limits& limits = {});

}  // namespace ringlab
