#pragma once

#include <string>
#include <vector>

#include "ufx/formula.hpp"
#include "ufx/model.hpp"
#include "ufx/ultrafilter.hpp"

namespace ufx {

/// All ultrafilters on {0..n-1}, principal at 0, 1, ..., n-1 in that order.
/// Throws PreconditionError for n = 0.
std::vector<FiniteUltrafilter> enumerate_ultrafilters(std::size_t n);

/// The ultrafilter extension of a finite model. `model` is an ordinary
/// Model whose element i is the ultrafilter points[i].
struct BetaModel {
    Model base;
    std::vector<FiniteUltrafilter> points;
    Model model;

    friend bool operator==(const BetaModel&, const BetaModel&) = default;
};

enum class BetaMode {
    /// Predicates by evaluating (U-forall D1 x1)...(U-forall Dk xk) P(x1..xk)
    /// through the formula evaluator; functions by searching for the unique
    /// D with A in D <=> (U-forall D1 x1)...F(x1..xk) in A for all A.
    Literal,
    /// Principal shortcut: P^beta(j(a)..) iff P(a..), F^beta(j(a)..) = j(F(a..)).
    Fast,
};

inline constexpr std::size_t kLiteralMaxSize = 12;

/// Counts of candidate ultrafilters satisfying the function-value
/// biconditional, over every function symbol and argument tuple. Literal
/// mode throws before returning if any count differs from one.
struct BetaStats {
    std::size_t tuples_checked = 0;
    std::size_t min_candidates = 0;
    std::size_t max_candidates = 0;
};

/// Throws PreconditionError if m is invalid or, in literal mode, larger
/// than kLiteralMaxSize; throws Error if uniqueness of a function value
/// fails in literal mode.
BetaModel beta_extend(const Model& m, BetaMode mode = BetaMode::Fast, BetaStats* stats = nullptr);

/// Index of u in points, compared extensionally on singletons.
std::size_t locate(const std::vector<FiniteUltrafilter>& points, const FiniteUltrafilter& u);

/// j_M as a map from m into beta_extend(m).model.
MapWitness natural_embedding(const Model& m);

/// Image of D under the continuous extension of h: A is a member of the
/// result iff h^{-1}(A) is a member of D.
FiniteUltrafilter pushforward(const MapWitness& h, const FiniteUltrafilter& d);

struct LiftReport {
    MapClass source = MapClass::NotHomomorphism;
    MapClass lifted = MapClass::NotHomomorphism;
    bool pass = false;
    std::string note;
    std::vector<Element> lifted_map;  // h~ on the indices of the beta universes
};

/// Classifies h and its continuous extension between the ultrafilter
/// extensions. pass holds when the lifted map keeps every property the
/// source map has; it is vacuously true for a non-homomorphism.
LiftReport lift_check(const MapWitness& w, BetaMode mode = BetaMode::Fast);

/// Core model text preceded by "# u<i> = principal(<p>)" comment lines.
std::string serialize_beta(const BetaModel& b);

} // namespace ufx
