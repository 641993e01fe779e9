#include "ufx/epset.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "ufx/error.hpp"

namespace ufx {

EPSet::EPSet() : residues_(1, false) {}

EPSet::EPSet(std::uint64_t threshold, std::vector<bool> prefix, std::uint64_t period, std::vector<bool> residues)
    : threshold_(threshold), prefix_(std::move(prefix)), period_(period), residues_(std::move(residues)) {
    if (period_ == 0)
        throw PreconditionError("EPSet: period must be at least 1");
    if (prefix_.size() != threshold_)
        throw PreconditionError("EPSet: prefix length differs from threshold");
    if (residues_.size() != period_)
        throw PreconditionError("EPSet: residue table length differs from period");
    normalize();
}

void EPSet::normalize() {
    // The least period of the tail divides every period of it.
    for (std::uint64_t d = 1; d < period_; ++d) {
        if (period_ % d != 0)
            continue;
        bool periodic = true;
        for (std::uint64_t r = d; r < period_ && periodic; ++r)
            periodic = residues_[r] == residues_[r % d];
        if (periodic) {
            residues_.resize(d);
            period_ = d;
            break;
        }
    }
    while (threshold_ > 0 && prefix_[threshold_ - 1] == residues_[(threshold_ - 1) % period_]) {
        prefix_.pop_back();
        --threshold_;
    }
}

EPSet EPSet::all() { return EPSet(0, {}, 1, {true}); }

EPSet EPSet::finite(const std::vector<std::uint64_t>& members) {
    std::uint64_t n = members.empty() ? 0 : *std::max_element(members.begin(), members.end()) + 1;
    std::vector<bool> prefix(n, false);
    for (auto x : members)
        prefix[x] = true;
    return EPSet(n, std::move(prefix), 1, {false});
}

EPSet EPSet::residue_class(std::uint64_t modulus, std::uint64_t residue) {
    if (modulus == 0 || residue >= modulus)
        throw PreconditionError("residue_class: need 0 <= residue < modulus");
    std::vector<bool> res(modulus, false);
    res[residue] = true;
    return EPSet(0, {}, modulus, std::move(res));
}

EPSet EPSet::greater_than(std::uint64_t n) { return EPSet(n + 1, std::vector<bool>(n + 1, false), 1, {true}); }

EPSet EPSet::less_than(std::uint64_t n) { return EPSet(n, std::vector<bool>(n, true), 1, {false}); }

bool EPSet::contains(std::uint64_t x) const {
    return x < threshold_ ? static_cast<bool>(prefix_[x]) : static_cast<bool>(residues_[x % period_]);
}

bool EPSet::is_infinite() const { return std::find(residues_.begin(), residues_.end(), true) != residues_.end(); }

bool EPSet::is_empty() const {
    return !is_infinite() && std::find(prefix_.begin(), prefix_.end(), true) == prefix_.end();
}

std::vector<std::uint64_t> EPSet::members_below(std::uint64_t limit) const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x < limit; ++x)
        if (contains(x))
            out.push_back(x);
    return out;
}

std::string EPSet::to_string() const {
    std::ostringstream os;
    os << "ep(" << threshold_ << "; ";
    bool first = true;
    for (std::uint64_t x = 0; x < threshold_; ++x)
        if (prefix_[x]) {
            os << (first ? "" : ",") << x;
            first = false;
        }
    os << "; " << period_ << "; ";
    first = true;
    for (std::uint64_t r = 0; r < period_; ++r)
        if (residues_[r]) {
            os << (first ? "" : ",") << r;
            first = false;
        }
    os << ')';
    return os.str();
}

namespace {

class LiteralCursor {
public:
    explicit LiteralCursor(std::string_view s) : s_(s) {}

    void ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }
    bool accept(char c) {
        ws();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }
    void expect_word(std::string_view w) {
        ws();
        if (s_.substr(i_, w.size()) != w)
            fail("expected '" + std::string(w) + "'");
        i_ += w.size();
    }
    bool at_digit() {
        ws();
        return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]));
    }
    std::uint64_t number() {
        if (!at_digit())
            fail("expected number");
        std::uint64_t v = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            v = v * 10 + static_cast<std::uint64_t>(s_[i_++] - '0');
            if (v > (std::uint64_t{1} << 32))
                fail("number too large");
        }
        return v;
    }
    // Members separated by commas and/or blanks, up to the next ';' or ')'.
    std::vector<std::uint64_t> list() {
        std::vector<std::uint64_t> out;
        while (at_digit()) {
            out.push_back(number());
            accept(',');
        }
        return out;
    }
    bool done() {
        ws();
        return i_ == s_.size();
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError("EPSet literal: " + what, 1, i_ + 1); }

private:
    std::string_view s_;
    std::size_t i_ = 0;
};

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
    std::uint64_t l = std::lcm(a, b);
    if (l > (std::uint64_t{1} << 24))
        throw PreconditionError("EPSet: combined period " + std::to_string(l) + " is too large");
    return l;
}

template <typename Pred>
EPSet combine(const EPSet& a, const EPSet& b, Pred pred) {
    const std::uint64_t n = std::max(a.threshold(), b.threshold());
    const std::uint64_t p = lcm(a.period(), b.period());
    std::vector<bool> prefix(n), residues(p);
    for (std::uint64_t x = 0; x < n; ++x)
        prefix[x] = pred(a.contains(x), b.contains(x));
    for (std::uint64_t r = 0; r < p; ++r) {
        // smallest x >= n with x mod p == r
        std::uint64_t x = n + (r + p - n % p) % p;
        residues[r] = pred(a.contains(x), b.contains(x));
    }
    return EPSet(n, std::move(prefix), p, std::move(residues));
}

} // namespace

EPSet parse_epset(std::string_view text) {
    LiteralCursor c(text);
    c.expect_word("ep");
    c.expect('(');
    std::uint64_t n = c.number();
    c.expect(';');
    auto members = c.list();
    c.expect(';');
    std::uint64_t p = c.number();
    c.expect(';');
    auto res = c.list();
    c.expect(')');
    if (!c.done())
        c.fail("trailing input");
    if (p == 0)
        throw PreconditionError("EPSet literal: period must be at least 1");
    std::vector<bool> prefix(n, false), residues(p, false);
    for (auto x : members) {
        if (x >= n)
            throw PreconditionError("EPSet literal: prefix member " + std::to_string(x) + " is not below threshold " +
                                    std::to_string(n));
        prefix[x] = true;
    }
    for (auto r : res) {
        if (r >= p)
            throw PreconditionError("EPSet literal: residue " + std::to_string(r) + " is not below period " +
                                    std::to_string(p));
        residues[r] = true;
    }
    return EPSet(n, std::move(prefix), p, std::move(residues));
}

EPSet set_union(const EPSet& a, const EPSet& b) {
    return combine(a, b, [](bool x, bool y) { return x || y; });
}

EPSet set_intersect(const EPSet& a, const EPSet& b) {
    return combine(a, b, [](bool x, bool y) { return x && y; });
}

EPSet set_minus(const EPSet& a, const EPSet& b) {
    return combine(a, b, [](bool x, bool y) { return x && !y; });
}

EPSet set_complement(const EPSet& a) {
    std::vector<bool> prefix = a.prefix();
    std::vector<bool> residues = a.residues();
    prefix.flip();
    residues.flip();
    return EPSet(a.threshold(), std::move(prefix), a.period(), std::move(residues));
}

EPSet epset_algebra(SetOp op, const std::vector<EPSet>& args) {
    const std::size_t want = op == SetOp::Complement ? 1 : 2;
    if (args.size() != want)
        throw PreconditionError("epset_algebra: expected " + std::to_string(want) + " arguments, got " +
                                std::to_string(args.size()));
    switch (op) {
    case SetOp::Union: return set_union(args[0], args[1]);
    case SetOp::Intersect: return set_intersect(args[0], args[1]);
    case SetOp::Complement: return set_complement(args[0]);
    case SetOp::Minus: return set_minus(args[0], args[1]);
    }
    return {};
}

EPSet epset_cut(const EPSet& a, CutBound bound, std::uint64_t n) {
    return set_intersect(a, bound == CutBound::Greater ? EPSet::greater_than(n) : EPSet::less_than(n));
}

bool is_subset(const EPSet& a, const EPSet& b) { return set_minus(a, b).is_empty(); }

} // namespace ufx
