#ifndef ARRANGELAB_EXTERIOR_HPP
#define ARRANGELAB_EXTERIOR_HPP

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "arrangelab/errors.hpp"
#include "arrangelab/numeric.hpp"

namespace arrangelab {

// ---------------------------------------------------------------------------
// Monomials: square-free variable subsets stored as fixed-width bitsets over
// variable ranks.  The canonical form (variables ascending by rank) carries
// sign +1; products pick up the transposition parity of the merge.
// ---------------------------------------------------------------------------

struct Monomial {
    static constexpr int max_vars = 128;
    std::uint64_t w[2] = {0, 0};

    static Monomial var(int rank) {
        Monomial m;
        m.w[rank >> 6] = std::uint64_t{1} << (rank & 63);
        return m;
    }
    bool test(int rank) const { return w[rank >> 6] >> (rank & 63) & 1; }
    int degree() const { return std::popcount(w[0]) + std::popcount(w[1]); }
    bool empty() const { return !(w[0] | w[1]); }
    bool intersects(const Monomial& o) const { return (w[0] & o.w[0]) | (w[1] & o.w[1]); }
    bool contains(const Monomial& o) const { return (o.w[0] & ~w[0]) == 0 && (o.w[1] & ~w[1]) == 0; }
    Monomial unite(const Monomial& o) const { return {{w[0] | o.w[0], w[1] | o.w[1]}}; }
    Monomial minus(const Monomial& o) const { return {{w[0] & ~o.w[0], w[1] & ~o.w[1]}}; }

    // Number of variables strictly above `rank`.
    int count_above(int rank) const {
        int word = rank >> 6, bit = rank & 63;
        int c = 0;
        for (int k = word + 1; k < 2; ++k)
            c += std::popcount(w[k]);
        std::uint64_t hi = bit == 63 ? 0 : (w[word] & (~std::uint64_t{0} << (bit + 1)));
        return c + std::popcount(hi);
    }

    template <typename F> void for_each_var(F&& f) const {
        for (int word = 0; word < 2; ++word) {
            std::uint64_t x = w[word];
            while (x) {
                int b = std::countr_zero(x);
                f(word * 64 + b);
                x &= x - 1;
            }
        }
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.w[0] == b.w[0] && a.w[1] == b.w[1]; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

// Degree-lexicographic order.  For equal degrees the bitmask comparison picks
// the monomial whose highest differing variable is present, which is the lex
// order with larger ranks dominating.
inline int compare_deglex(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db)
        return da < db ? -1 : 1;
    if (a.w[1] != b.w[1])
        return a.w[1] < b.w[1] ? -1 : 1;
    if (a.w[0] != b.w[0])
        return a.w[0] < b.w[0] ? -1 : 1;
    return 0;
}

inline bool deglex_less(const Monomial& a, const Monomial& b) { return compare_deglex(a, b) < 0; }

// Sign of concatenating canonical a and b into canonical a|b: parity of the
// number of pairs (x in a, y in b) with x > y.  Zero when they share a
// variable.
inline int merge_sign(const Monomial& a, const Monomial& b) {
    if (a.intersects(b))
        return 0;
    int inv = 0;
    b.for_each_var([&](int rank) { inv += a.count_above(rank); });
    return inv & 1 ? -1 : 1;
}

// ---------------------------------------------------------------------------
// Variable tables
// ---------------------------------------------------------------------------

/// Ordered variable names with per-variable weights (used by the model
/// gradings; weight defaults to 1).  Every variable is odd: it squares to
/// zero and anticommutes.
class VarTable {
  public:
    VarTable() = default;
    explicit VarTable(std::vector<std::string> names, std::vector<int> weights = {})
        : names_(std::move(names)), weights_(std::move(weights)) {
        if (static_cast<int>(names_.size()) > Monomial::max_vars)
            throw SizeLimitExceeded("too many variables");
        if (weights_.empty())
            weights_.assign(names_.size(), 1);
        if (weights_.size() != names_.size())
            throw Error("weights/names size mismatch");
        for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
            if (!index_.emplace(names_[i], i).second)
                throw Error("duplicate variable name " + names_[i]);
        }
    }

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[i]; }
    int weight(int i) const { return weights_[i]; }
    int find(const std::string& n) const {
        auto it = index_.find(n);
        return it == index_.end() ? -1 : it->second;
    }
    int monomial_weight(const Monomial& m) const {
        int w = 0;
        m.for_each_var([&](int v) { w += weights_[v]; });
        return w;
    }
    std::string monomial_name(const Monomial& m) const {
        if (m.empty())
            return "1";
        std::string s;
        m.for_each_var([&](int v) {
            if (!s.empty())
                s += '^';
            s += names_[v];
        });
        return s;
    }

  private:
    std::vector<std::string> names_;
    std::vector<int> weights_;
    std::map<std::string, int> index_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

inline VarTablePtr make_vars(std::vector<std::string> names, std::vector<int> weights = {}) {
    return std::make_shared<const VarTable>(std::move(names), std::move(weights));
}

// ---------------------------------------------------------------------------
// Sparse exterior polynomials over the rationals
// ---------------------------------------------------------------------------

struct Term {
    Monomial mono;
    Rational coeff;
};

/// Element of the exterior algebra on a VarTable.  Terms are kept strictly
/// descending in the deglex order with nonzero coefficients, so the first
/// term is the leading term.
class ExtPoly {
  public:
    ExtPoly() = default;
    explicit ExtPoly(VarTablePtr vars) : vars_(std::move(vars)) {}

    static ExtPoly zero(VarTablePtr vars) { return ExtPoly(std::move(vars)); }
    static ExtPoly constant(VarTablePtr vars, const Rational& c) {
        ExtPoly p(std::move(vars));
        if (c != 0)
            p.terms_.push_back({Monomial{}, c});
        return p;
    }
    static ExtPoly one(VarTablePtr vars) { return constant(std::move(vars), 1); }
    static ExtPoly variable(VarTablePtr vars, int rank) {
        ExtPoly p(std::move(vars));
        p.terms_.push_back({Monomial::var(rank), 1});
        return p;
    }
    static ExtPoly monomial(VarTablePtr vars, const Monomial& m, const Rational& c = 1) {
        ExtPoly p(std::move(vars));
        if (c != 0)
            p.terms_.push_back({m, c});
        return p;
    }

    const VarTablePtr& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    const Term& leading() const { return terms_.front(); }
    int degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }

    bool homogeneous() const {
        for (const Term& t : terms_)
            if (t.mono.degree() != terms_.front().mono.degree())
                return false;
        return true;
    }

    Rational coeff(const Monomial& m) const {
        for (const Term& t : terms_)
            if (t.mono == m)
                return t.coeff;
        return 0;
    }

    ExtPoly homogeneous_part(int deg) const {
        ExtPoly out(vars_);
        for (const Term& t : terms_)
            if (t.mono.degree() == deg)
                out.terms_.push_back(t);
        return out;
    }

    friend ExtPoly operator-(const ExtPoly& a) {
        ExtPoly out(a.vars_);
        out.terms_ = a.terms_;
        for (Term& t : out.terms_)
            t.coeff = -t.coeff;
        return out;
    }

    friend ExtPoly operator+(const ExtPoly& a, const ExtPoly& b) {
        a.check_same(b);
        ExtPoly out(a.vars_ ? a.vars_ : b.vars_);
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size()) {
                out.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size()) {
                out.terms_.push_back(b.terms_[j++]);
            } else {
                int c = compare_deglex(a.terms_[i].mono, b.terms_[j].mono);
                if (c > 0)
                    out.terms_.push_back(a.terms_[i++]);
                else if (c < 0)
                    out.terms_.push_back(b.terms_[j++]);
                else {
                    Rational s = a.terms_[i].coeff + b.terms_[j].coeff;
                    if (s != 0)
                        out.terms_.push_back({a.terms_[i].mono, std::move(s)});
                    ++i;
                    ++j;
                }
            }
        }
        return out;
    }

    friend ExtPoly operator-(const ExtPoly& a, const ExtPoly& b) { return a + (-b); }

    ExtPoly& operator+=(const ExtPoly& b) { return *this = *this + b; }
    ExtPoly& operator-=(const ExtPoly& b) { return *this = *this - b; }

    friend ExtPoly operator*(const Rational& c, const ExtPoly& a) {
        ExtPoly out(a.vars_);
        if (c == 0)
            return out;
        out.terms_ = a.terms_;
        for (Term& t : out.terms_)
            t.coeff *= c;
        return out;
    }

    // Left wedge by a monomial with an explicit coefficient.
    friend ExtPoly mono_times(const Monomial& m, const Rational& c, const ExtPoly& a) {
        ExtPoly out(a.vars_);
        if (c == 0)
            return out;
        for (const Term& t : a.terms_) {
            int s = merge_sign(m, t.mono);
            if (s == 0)
                continue;
            Rational v = c * t.coeff;
            if (s < 0)
                v = -v;
            out.terms_.push_back({m.unite(t.mono), std::move(v)});
        }
        // Wedging by a fixed monomial preserves the relative deglex order of
        // the surviving terms, so the result is already sorted.
        return out;
    }

    friend ExtPoly operator*(const ExtPoly& a, const ExtPoly& b) {
        a.check_same(b);
        ExtPoly out(a.vars_ ? a.vars_ : b.vars_);
        std::map<Monomial, Rational, decltype(&deglex_less)> acc(&deglex_less);
        for (const Term& ta : a.terms_)
            for (const Term& tb : b.terms_) {
                int s = merge_sign(ta.mono, tb.mono);
                if (s == 0)
                    continue;
                Rational v = ta.coeff * tb.coeff;
                if (s < 0)
                    v = -v;
                auto [it, fresh] = acc.emplace(ta.mono.unite(tb.mono), v);
                if (!fresh)
                    it->second += v;
            }
        for (auto it = acc.rbegin(); it != acc.rend(); ++it)
            if (it->second != 0)
                out.terms_.push_back({it->first, it->second});
        return out;
    }

    friend bool operator==(const ExtPoly& a, const ExtPoly& b) {
        if (a.terms_.size() != b.terms_.size())
            return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
                return false;
        return true;
    }

    // Internal hook for algorithms that build term lists already in order.
    static ExtPoly from_sorted_terms(VarTablePtr vars, std::vector<Term> terms) {
        ExtPoly p(std::move(vars));
        p.terms_ = std::move(terms);
        return p;
    }

  private:
    void check_same(const ExtPoly& b) const {
        if (vars_ && b.vars_ && vars_ != b.vars_)
            throw VarTableMismatch();
    }

    VarTablePtr vars_;
    std::vector<Term> terms_;
};

// ---------------------------------------------------------------------------
// Text form:  `3/2*x_1^y_2 - g_1_2^g_1_3 + 2`  with `^` as the wedge.
// Variables are identifiers; the canonical printed order is ascending rank
// within a monomial and descending deglex across terms.
// ---------------------------------------------------------------------------

inline std::string to_string(const ExtPoly& p) {
    if (p.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const Term& t : p.terms()) {
        Rational c = t.coeff;
        bool neg = c < 0;
        if (neg)
            c = -c;
        if (first) {
            if (neg)
                out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (t.mono.empty()) {
            out << c;
        } else {
            if (c != 1)
                out << c << "*";
            out << p.vars()->monomial_name(t.mono);
        }
    }
    return out.str();
}

namespace detail {

inline bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

} // namespace detail

inline ExtPoly parse_ext_poly(const VarTablePtr& vars, const std::string& text) {
    ExtPoly result = ExtPoly::zero(vars);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip_ws();
    if (i == text.size())
        throw ParseError("empty polynomial");
    bool expect_term = true;
    int sign = 1;
    while (i < text.size()) {
        skip_ws();
        if (i == text.size())
            break;
        char c = text[i];
        if (c == '+' || c == '-') {
            if (expect_term && c == '-') {
                sign = -sign;
                ++i;
                continue;
            }
            if (expect_term)
                throw ParseError("unexpected sign");
            sign = c == '-' ? -1 : 1;
            expect_term = true;
            ++i;
            continue;
        }
        if (!expect_term)
            throw ParseError("expected + or - between terms");
        // term := [rational] ['*'] factor ('^' factor)*
        Rational coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/'))
                ++j;
            try {
                coeff = Rational(text.substr(i, j - i));
            } catch (...) {
                throw ParseError("bad coefficient '" + text.substr(i, j - i) + "'");
            }
            i = j;
            have_coeff = true;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        ExtPoly term = ExtPoly::constant(vars, sign > 0 ? coeff : -coeff);
        bool have_var = false;
        while (i < text.size()) {
            skip_ws();
            if (i < text.size() && text[i] == '1' && !detail::ident_char(i + 1 < text.size() ? text[i + 1] : ' ')) {
                ++i; // explicit unit monomial
                have_var = true;
            } else if (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) {
                std::size_t j = i;
                while (j < text.size() && detail::ident_char(text[j]))
                    ++j;
                std::string name = text.substr(i, j - i);
                int rank = vars->find(name);
                if (rank < 0)
                    throw ParseError("unknown variable '" + name + "'");
                term = term * ExtPoly::variable(vars, rank);
                i = j;
                have_var = true;
            } else {
                break;
            }
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                continue;
            }
            break;
        }
        if (!have_coeff && !have_var)
            throw ParseError("expected term at '" + text.substr(i) + "'");
        result += term;
        sign = 1;
        expect_term = false;
    }
    if (expect_term)
        throw ParseError("dangling sign");
    return result;
}

} // namespace arrangelab

#endif
