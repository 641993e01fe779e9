#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "ufx/epset.hpp"

namespace ufx {

enum class Kleene { False, Unknown, True };

Kleene kleene_not(Kleene a);
Kleene kleene_and(Kleene a, Kleene b);
Kleene kleene_or(Kleene a, Kleene b);
std::string_view to_string(Kleene k);

/// A finitely presented class of ultrafilters on N: either the principal
/// ultrafilter at a point, or every non-principal ultrafilter containing an
/// infinite eventually periodic set A (such an ultrafilter contains every
/// set that includes A up to finitely many exceptions).
class SymbolicUF {
public:
    static SymbolicUF principal(std::uint64_t point);
    /// Throws PreconditionError if a is finite.
    static SymbolicUF frechet_on(EPSet a);

    bool is_principal() const { return principal_; }
    std::uint64_t point() const { return point_; }
    const EPSet& concentration() const { return set_; }

    /// "principal:<n>" or "frechet:<ep literal>"
    std::string to_string() const;

    friend bool operator==(const SymbolicUF&, const SymbolicUF&) = default;

private:
    SymbolicUF(bool principal, std::uint64_t point, EPSet set)
        : principal_(principal), point_(point), set_(std::move(set)) {}

    bool principal_;
    std::uint64_t point_;
    EPSet set_;
};

/// Inverse of SymbolicUF::to_string.
SymbolicUF parse_symbolic_uf(std::string_view text);

/// Whether S belongs to every / no / only some ultrafilter of the class.
/// Principal(n): n in S. FrechetOn(A): True iff A \ S is finite, False iff
/// A ∩ S is finite, Unknown otherwise.
Kleene measure(const SymbolicUF& d, const EPSet& s);

/// The family t -> base, base ∩ {x > t} or base ∩ {x < t}.
struct ParamFamily {
    enum class Constraint { None, Greater, Less };

    EPSet base;
    Constraint constraint = Constraint::None;

    EPSet at(std::uint64_t t) const;
};

/// Inner verdict measure(d, fam(t)) as a function of t, as regions of N.
/// The three regions partition N.
struct InnerDecision {
    EPSet true_region;
    EPSet unknown_region;
    EPSet false_region;
};

/// Closed-form regions; never samples t.
InnerDecision inner_decision(const SymbolicUF& d, const ParamFamily& fam);

/// Decides (U-forall D1 t in outer)(U-forall D2 x) [x in fam(t)], i.e.
/// whether {t in outer : fam(t) in D2} is a member of D1, for every choice
/// of ultrafilters in the two classes.
Kleene eval_two_level(const SymbolicUF& d1, const SymbolicUF& d2, const ParamFamily& fam, const EPSet& outer);

/// A total map N x N -> N; `code` must be symmetric and injective on
/// unordered pairs.
struct PairingCode {
    std::string name;
    std::function<std::uint64_t(std::uint64_t, std::uint64_t)> code;

    /// max*(max+1)/2 + min + offset.
    static PairingCode cantor_unordered(std::uint64_t offset = 0);
};

enum class PairOrder {
    FirstLess,   // pairs (a1, a2) with a1 < a2
    SecondLess,  // pairs (a1, a2) with a2 < a1
};

/// One case of the injectivity analysis: for t in `outer`, the set of x
/// with code(t, x) in B is exactly `inner.at(t)`.
struct PairCase {
    EPSet outer;
    ParamFamily inner;
};

/// The two non-trivial cases (t in A1, t in A2); for t outside A1 ∪ A2 the
/// inner set is empty.
std::vector<PairCase> pair_image_cases(const EPSet& a1, const EPSet& a2, PairOrder order);

/// Decides whether B = {code(a1, a2) : a1 in A1, a2 in A2, ordered per
/// `order`} is a member of F^beta(D1, D2) where F is the pairing function.
/// Throws PreconditionError if A1 and A2 intersect or the code is not an
/// unordered injection on a sample window.
Kleene pair_image_membership(const EPSet& a1, const EPSet& a2, PairOrder order, const SymbolicUF& d1,
                             const SymbolicUF& d2, const PairingCode& pairing = PairingCode::cantor_unordered());

} // namespace ufx
