#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ufx/beta.hpp"
#include "ufx/epset.hpp"
#include "ufx/formula.hpp"
#include "ufx/model.hpp"
#include "ufx/random.hpp"
#include "ufx/symbolic.hpp"

namespace ufx {

/// Vocabulary with unary P1, P2, binary R1, R2 and binary function F.
Vocabulary tau();

/// Finite truncation of the disjoint sum of N and P(N).
///
/// Layout: the N-sort is {0 .. K-1} with K = k + C(k,2); numBase = {0..k-1}
/// and the remaining points are the pairing codes of distinct numBase pairs.
/// The set sort is {K .. K + 2^k - 1}; element K + m stands for the subset
/// of [0,k) with bitmask m, so its colex order is the order of m.
struct TruncatedM1 {
    std::size_t k = 0;
    Model model;
    std::vector<Element> num_sort;
    std::vector<Element> set_sort;
    std::vector<Element> num_base;
    std::vector<Element> set_base;
    std::vector<std::string> deviations;

    Element set_element(std::uint64_t mask) const { return static_cast<Element>(num_sort.size() + mask); }
};

inline constexpr std::size_t kMaxTruncation = 6;

/// Throws PreconditionError unless 1 <= k <= kMaxTruncation.
TruncatedM1 build_m1(std::size_t k);

/// Replaces F on the N-sort by the first projection. Test and mutation
/// runs only: breaks both symmetry and injectivity.
TruncatedM1 with_asymmetric_pairing(TruncatedM1 m1);

/// P_i(x) & forall y (P_i(y) -> F(x,y) = F(y,x)), free in `free_var`.
Formula formula_phi(int i, const std::string& free_var = "x", const std::string& bound_var = "y");

/// forall x1 forall x2 ((P1(x1) & P1(x2) & x1 != x2) ->
///     exists y (phi_2(y) & R1(x1,y) & ~R1(x2,y)))
Formula formula_psi();

/// {b in P2 : {a in P1 : R1(a,b)} is a member of d}, ascending. Throws
/// PreconditionError unless d contains the P1 part. m must interpret tau.
std::vector<Element> compute_G(const Model& m, const FiniteUltrafilter& d);

struct Lemma3FiniteReport {
    std::vector<Element> a1, a2, b1, b2;
    bool disjoint = false;
};

/// B1 = {F(n1,n2) : n1 in A1, n2 in A2, R2(n1,n2)} and B2 likewise with
/// R2(n2,n1), where A2 = numBase \ A1. Throws PreconditionError unless A1 is
/// a nonempty proper subset of numBase.
Lemma3FiniteReport lemma3_finite(const TruncatedM1& m1, const std::vector<Element>& a1);
Lemma3FiniteReport lemma3_finite(std::size_t k, const std::vector<Element>& a1);

struct Lemma3SymbolicReport {
    EPSet a1, a2;
    SymbolicUF d1, d2;
    Kleene b1_in_f12 = Kleene::Unknown;  // B1 in F(D1,D2), expected True
    Kleene b2_in_f12 = Kleene::Unknown;  // B2 in F(D1,D2), expected False
    Kleene b2_in_f21 = Kleene::Unknown;  // B2 in F(D2,D1), expected True
    Kleene b1_in_f21 = Kleene::Unknown;  // B1 in F(D2,D1), expected False
    /// All four verdicts as expected, so F(D1,D2) != F(D2,D1) for every pair
    /// of ultrafilters from the two classes.
    bool extensions_differ = false;
};

/// D1 = FrechetOn(A1), D2 = FrechetOn(N \ A1). Throws PreconditionError if
/// A1 or its complement is finite.
Lemma3SymbolicReport lemma3_symbolic(const EPSet& a1);

struct TruncationCheck {
    std::uint64_t range = 0;
    std::uint64_t rows_checked = 0;
    std::uint64_t mismatches = 0;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> first_mismatch;  // (t, x)
    bool agree() const { return mismatches == 0; }
};

/// Finite-truncation oracle for pair_image_membership: materializes
/// B ∩ code([0,range)^2) by enumerating the pairs of its definition, then
/// checks for every t < range that {x < range : code(t,x) in B} equals the
/// inner set pair_image_cases predicts (empty outside A1 ∪ A2). The code
/// must be cantor_unordered (checked); rows are compared a word at a time.
TruncationCheck truncation_oracle(const EPSet& a1, const EPSet& a2, PairOrder order, std::uint64_t range,
                                  const PairingCode& pairing = PairingCode::cantor_unordered());

/// Strict order on {0..size-1} as a row-major "less" matrix.
struct StrictOrder {
    std::size_t size = 0;
    std::vector<bool> less;

    bool operator()(Element a, Element b) const { return less[a * size + b]; }
    /// 0 < 1 < ... < size-1 relabelled through perm: perm[i] is the i-th smallest.
    static StrictOrder from_ranking(const std::vector<Element>& perm);
};

struct CutPair {
    Subset initial;
    Subset final;
};

/// I_D and J_D: the intersections of all initial (resp. final) segments
/// that are members of d. Enumerates every subset, so size <= 20. Throws
/// PreconditionError unless the order is a strict linear order on d's
/// universe.
CutPair cut_segments(const StrictOrder& order, const FiniteUltrafilter& d);

struct SuiteOptions {
    std::size_t k = 4;
    std::uint64_t seed = 0;
    /// Build every truncated model through with_asymmetric_pairing.
    bool asymmetric_mutant = false;
    std::size_t random_models = 60;
    std::size_t literal_models = 30;
    std::size_t lift_witnesses = 60;
    std::size_t formula_cases = 150;
    std::size_t symbolic_partitions = 8;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    SuiteOptions options;
    std::vector<CheckResult> checks;
    std::vector<std::string> deviations;
    std::vector<std::string> observations;

    bool all_pass() const;
    const CheckResult* find(const std::string& name) const;
};

/// Runs every named check in a fixed order; the report is a function of
/// the options alone.
SuiteReport run_suite(const SuiteOptions& options = {});

std::string format_text(const SuiteReport& r);
/// Schema "ufx.suite", schema_version 1.
std::string format_json(const SuiteReport& r);

/// A random EPSet A with A and N \ A both infinite.
EPSet random_partition(Rng& rng);

} // namespace ufx
