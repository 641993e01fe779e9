#pragma once

#include <cstdint>
#include <vector>

#include "ufx/model.hpp"

namespace ufx {

/// Characteristic vector of a subset of {0..n-1}.
using Subset = std::vector<bool>;

Subset subset_from_mask(std::size_t n, std::uint64_t mask);
Subset singleton(std::size_t n, Element a);

/// An ultrafilter on a finite universe. Every such ultrafilter is principal,
/// so it is determined by one point; callers that want the extensional view
/// use contains() only.
class FiniteUltrafilter {
public:
    /// Throws PreconditionError unless point < universe.
    FiniteUltrafilter(std::size_t universe, Element point);

    static FiniteUltrafilter principal(std::size_t universe, Element point) { return {universe, point}; }

    std::size_t universe() const { return universe_; }
    Element point() const { return point_; }

    /// Membership of a subset. Throws PreconditionError if the subset lives
    /// on a universe of a different size.
    bool contains(const Subset& s) const;

    friend bool operator==(const FiniteUltrafilter&, const FiniteUltrafilter&) = default;

private:
    std::size_t universe_;
    Element point_;
};

} // namespace ufx
