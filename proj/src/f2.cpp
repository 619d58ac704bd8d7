#include "tc3/f2.hpp"

#include <utility>

namespace tc3 {

std::size_t f2_rank(std::vector<BitVec> rows) {
    std::size_t rank = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::size_t pivot = rows[r].lowest();
        if (pivot == rows[r].size()) continue;
        ++rank;
        for (std::size_t s = r + 1; s < rows.size(); ++s)
            if (rows[s].get(pivot)) rows[s] ^= rows[r];
    }
    return rank;
}

}  // namespace tc3
