#include "ufx/ultrafilter.hpp"

#include <string>

#include "ufx/error.hpp"

namespace ufx {

Subset subset_from_mask(std::size_t n, std::uint64_t mask) {
    Subset s(n, false);
    for (std::size_t i = 0; i < n && i < 64; ++i)
        s[i] = (mask >> i) & 1u;
    return s;
}

Subset singleton(std::size_t n, Element a) {
    Subset s(n, false);
    s.at(a) = true;
    return s;
}

FiniteUltrafilter::FiniteUltrafilter(std::size_t universe, Element point) : universe_(universe), point_(point) {
    if (point >= universe)
        throw PreconditionError("ultrafilter point " + std::to_string(point) + " outside universe of size " +
                                std::to_string(universe));
}

bool FiniteUltrafilter::contains(const Subset& s) const {
    if (s.size() != universe_)
        throw PreconditionError("subset of a universe of size " + std::to_string(s.size()) +
                                " tested against an ultrafilter on size " + std::to_string(universe_));
    return s[point_];
}

} // namespace ufx
