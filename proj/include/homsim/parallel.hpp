#pragma once

#include <cstddef>
#include <functional>

namespace homsim {

// Runs fn(i) for i in [0, n) on up to `threads` workers. Work items must
// write only to their own output slots; with that discipline results are
// identical for any thread count.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace homsim
