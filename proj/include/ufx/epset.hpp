#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ufx {

/// An eventually periodic subset of N: below `threshold` membership is read
/// from `prefix`; from `threshold` on, x is a member iff residues[x mod period].
///
/// Values are always canonical (minimal period, then minimal threshold), so
/// structural equality is set equality.
class EPSet {
public:
    /// The empty set.
    EPSet();

    /// prefix.size() must equal threshold and residues.size() period >= 1;
    /// throws PreconditionError otherwise. The result is normalized.
    EPSet(std::uint64_t threshold, std::vector<bool> prefix, std::uint64_t period, std::vector<bool> residues);

    static EPSet empty() { return {}; }
    static EPSet all();
    static EPSet finite(const std::vector<std::uint64_t>& members);
    /// {x : x mod modulus == residue}
    static EPSet residue_class(std::uint64_t modulus, std::uint64_t residue);
    /// {x : x > n}
    static EPSet greater_than(std::uint64_t n);
    /// {x : x < n}
    static EPSet less_than(std::uint64_t n);

    bool contains(std::uint64_t x) const;
    bool is_empty() const;
    bool is_infinite() const;
    bool is_finite() const { return !is_infinite(); }

    std::uint64_t threshold() const { return threshold_; }
    std::uint64_t period() const { return period_; }
    const std::vector<bool>& prefix() const { return prefix_; }
    const std::vector<bool>& residues() const { return residues_; }

    /// Members below `limit`, ascending.
    std::vector<std::uint64_t> members_below(std::uint64_t limit) const;

    /// Literal syntax: ep(N; prefix members; p; residues), e.g. ep(0; ; 2; 0).
    std::string to_string() const;

    friend bool operator==(const EPSet&, const EPSet&) = default;

private:
    void normalize();

    std::uint64_t threshold_ = 0;
    std::vector<bool> prefix_;
    std::uint64_t period_ = 1;
    std::vector<bool> residues_;
};

/// Throws ParseError (line 1, 1-based column) on malformed literals and
/// PreconditionError on out-of-range members.
EPSet parse_epset(std::string_view text);

enum class SetOp { Union, Intersect, Complement, Minus };

EPSet set_union(const EPSet& a, const EPSet& b);
EPSet set_intersect(const EPSet& a, const EPSet& b);
EPSet set_complement(const EPSet& a);
EPSet set_minus(const EPSet& a, const EPSet& b);

/// Complement takes one argument, the others two; throws PreconditionError
/// on the wrong count.
EPSet epset_algebra(SetOp op, const std::vector<EPSet>& args);

enum class CutBound { Greater, Less };

/// A ∩ {x > n} or A ∩ {x < n}.
EPSet epset_cut(const EPSet& a, CutBound bound, std::uint64_t n);

bool is_subset(const EPSet& a, const EPSet& b);

} // namespace ufx
