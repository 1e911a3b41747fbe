#pragma once

// Exact linear combinations of fundamental quasisymmetric functions F_alpha
// and peak functions K_alpha, the K -> F expansion, the theta projection
// F_alpha -> K_{Peak(alpha)}, and evaluation in finitely many variables.

#include <boost/rational.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "dmod/composition.hpp"

namespace dmod {

using Rational = boost::rational<std::int64_t>;

enum class Basis { Fundamental, Peak };

inline char basis_letter(Basis b) { return b == Basis::Fundamental ? 'F' : 'K'; }

class FormalSum {
public:
    using TermMap = std::map<Composition, Rational, succ_first>;

    FormalSum(Basis basis, int degree) : basis_(basis), degree_(degree) {
        if (degree < 0) throw domain_error("degree must be nonnegative");
    }

    static FormalSum single(Basis basis, const Composition& index, Rational coeff = 1) {
        FormalSum s(basis, index.size());
        s.add_term(index, coeff);
        return s;
    }

    Basis basis() const noexcept { return basis_; }
    int degree() const noexcept { return degree_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const Composition& index) const {
        auto it = terms_.find(index);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Composition& index, Rational coeff) {
        if (index.size() != degree_)
            throw domain_error("term " + to_string(index) + " does not have degree " + std::to_string(degree_));
        if (basis_ == Basis::Peak && !is_peak_composition(index))
            throw domain_error("peak basis index " + to_string(index) + " is not a peak composition");
        if (coeff.numerator() == 0) return;
        auto [it, inserted] = terms_.try_emplace(index, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.numerator() == 0) terms_.erase(it);
        }
    }

    FormalSum& operator+=(const FormalSum& other) {
        require_compatible(other);
        for (const auto& [idx, c] : other.terms_) add_term(idx, c);
        return *this;
    }

    FormalSum& operator-=(const FormalSum& other) {
        require_compatible(other);
        for (const auto& [idx, c] : other.terms_) add_term(idx, -c);
        return *this;
    }

    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }

    friend bool operator==(const FormalSum& a, const FormalSum& b) {
        return a.basis_ == b.basis_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    /// True when every coefficient is >= 0.
    bool is_nonnegative() const {
        for (const auto& [idx, c] : terms_)
            if (c.numerator() < 0) return false;
        return true;
    }

private:
    void require_compatible(const FormalSum& other) const {
        if (other.basis_ != basis_) throw domain_error("cannot combine sums in different bases");
        if (other.degree_ != degree_) throw domain_error("cannot combine sums of different degree");
    }

    Basis basis_;
    int degree_;
    TermMap terms_;
};

inline FormalSum add(const FormalSum& a, const FormalSum& b) { return a + b; }

inline FormalSum scale(Rational c, const FormalSum& a) {
    FormalSum out(a.basis(), a.degree());
    for (const auto& [idx, coeff] : a.terms()) out.add_term(idx, c * coeff);
    return out;
}

/// K_alpha = 2^{|Peak(alpha)|+1} * sum of F_beta over beta with
/// Peak(alpha) contained in Des(beta) symmetric-difference (Des(beta)+1).
inline FormalSum peak_to_fundamental(const FormalSum& k) {
    if (k.basis() != Basis::Peak) throw domain_error("peak_to_fundamental expects a K-basis sum");
    const int n = k.degree();
    FormalSum out(Basis::Fundamental, n);
    if (k.is_zero()) return out;
    if (n < 1) throw domain_error("peak_to_fundamental requires degree >= 1");
    const auto betas = enumerate_compositions(n);
    std::vector<IntSet> cover;
    cover.reserve(betas.size());
    for (const auto& beta : betas) {
        const IntSet d = descent_set(beta);
        cover.push_back(symmetric_difference(d, shifted(d, 1)));
    }
    for (const auto& [alpha, coeff] : k.terms()) {
        const IntSet peaks = peak_set(alpha);
        const Rational weight = coeff * Rational(std::int64_t{1} << (peaks.size() + 1));
        for (std::size_t b = 0; b < betas.size(); ++b)
            if (is_subset(peaks, cover[b])) out.add_term(betas[b], weight);
    }
    return out;
}

/// theta(F_alpha) = K_{comp_n(Peak(Des(alpha)))}, extended linearly.
inline FormalSum theta(const FormalSum& f) {
    if (f.basis() != Basis::Fundamental) throw domain_error("theta expects an F-basis sum");
    FormalSum out(Basis::Peak, f.degree());
    for (const auto& [alpha, coeff] : f.terms()) out.add_term(peak_composition_of(alpha), coeff);
    return out;
}

/// Polynomial in x_1..x_k; monomials keyed by exponent vectors of length k.
struct TruncatedPolynomial {
    int variables = 0;
    std::map<std::vector<int>, Rational> terms;

    void add(const std::vector<int>& exponents, Rational c) {
        if (c.numerator() == 0) return;
        auto [it, inserted] = terms.try_emplace(exponents, c);
        if (!inserted) {
            it->second += c;
            if (it->second.numerator() == 0) terms.erase(it);
        }
    }

    Rational coefficient(const std::vector<int>& exponents) const {
        auto it = terms.find(exponents);
        return it == terms.end() ? Rational(0) : it->second;
    }

    friend bool operator==(const TruncatedPolynomial&, const TruncatedPolynomial&) = default;
};

namespace detail {
inline void f_monomials(const IntSet& des, int n, int k, int pos, int prev, std::vector<int>& exps,
                        Rational coeff, TruncatedPolynomial& out) {
    if (pos == n) {
        out.add(exps, coeff);
        return;
    }
    // position pos+1 (1-based) must strictly exceed position pos when pos is a descent
    const int lo = (pos > 0 && des.contains(pos)) ? prev + 1 : std::max(prev, 1);
    for (int v = lo; v <= k; ++v) {
        ++exps[v - 1];
        f_monomials(des, n, k, pos + 1, v, exps, coeff, out);
        --exps[v - 1];
    }
}
}  // namespace detail

/// Restriction to x_1..x_k (all other variables set to zero).
inline TruncatedPolynomial evaluate_truncated(const FormalSum& f, int k) {
    if (k <= 0) throw domain_error("variable count must be positive");
    if (f.basis() == Basis::Peak) return evaluate_truncated(peak_to_fundamental(f), k);
    TruncatedPolynomial out;
    out.variables = k;
    const int n = f.degree();
    for (const auto& [alpha, coeff] : f.terms()) {
        std::vector<int> exps(static_cast<std::size_t>(k), 0);
        if (n == 0) {
            out.add(exps, coeff);
            continue;
        }
        detail::f_monomials(descent_set(alpha), n, k, 0, 1, exps, coeff, out);
    }
    return out;
}

/// Relabels x_i -> x_{perm[i]} (perm is 0-based, a permutation of 0..k-1).
inline TruncatedPolynomial permute_variables(const TruncatedPolynomial& p, const std::vector<int>& perm) {
    TruncatedPolynomial out;
    out.variables = p.variables;
    for (const auto& [exps, c] : p.terms) {
        std::vector<int> moved(exps.size(), 0);
        for (std::size_t i = 0; i < exps.size(); ++i) moved[static_cast<std::size_t>(perm[i])] = exps[i];
        out.add(moved, c);
    }
    return out;
}

inline bool is_symmetric(const TruncatedPolynomial& p) {
    std::vector<int> perm(static_cast<std::size_t>(p.variables));
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end()))
        if (!(permute_variables(p, perm) == p)) return false;
    return true;
}

// ---- text rendering -------------------------------------------------------

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// "K[3,3,1] + 2*K[2,2,2,1] - 1/2*K[...]"; the zero sum renders as "0".
inline std::string to_text(const FormalSum& s) {
    if (s.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [idx, c] : s.terms()) {
        Rational mag = c.numerator() < 0 ? -c : c;
        if (first) {
            if (c.numerator() < 0) out += "-";
        } else {
            out += c.numerator() < 0 ? " - " : " + ";
        }
        if (mag != Rational(1)) out += to_string(mag) + "*";
        out += basis_letter(s.basis());
        out += "[" + join(idx.parts()) + "]";
        first = false;
    }
    return out;
}

inline std::string to_latex(const FormalSum& s) {
    if (s.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [idx, c] : s.terms()) {
        Rational mag = c.numerator() < 0 ? -c : c;
        if (first) {
            if (c.numerator() < 0) out += "-";
        } else {
            out += c.numerator() < 0 ? " - " : " + ";
        }
        if (mag.denominator() != 1)
            out += "\\frac{" + std::to_string(mag.numerator()) + "}{" + std::to_string(mag.denominator()) + "}";
        else if (mag != Rational(1))
            out += std::to_string(mag.numerator());
        out += basis_letter(s.basis());
        out += "_{(" + join(idx.parts()) + ")}";
        first = false;
    }
    return out;
}

inline std::string to_text(const TruncatedPolynomial& p) {
    if (p.terms.empty()) return "0";
    std::string out;
    bool first = true;
    // graded-reverse display: iterate highest exponent vector first
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        const auto& [exps, c] = *it;
        Rational mag = c.numerator() < 0 ? -c : c;
        if (first) {
            if (c.numerator() < 0) out += "-";
        } else {
            out += c.numerator() < 0 ? " - " : " + ";
        }
        std::string mono;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (exps[i] > 1) mono += "^" + std::to_string(exps[i]);
        }
        if (mono.empty()) {
            out += to_string(mag);
        } else {
            if (mag != Rational(1)) out += to_string(mag) + "*";
            out += mono;
        }
        first = false;
    }
    return out;
}

/// Parses the rendering produced by to_text. `fallback` fixes basis and
/// degree when the text is "0".
inline FormalSum parse_formal_sum(std::string_view text, Basis fallback_basis = Basis::Fundamental,
                                  int fallback_degree = 0) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw domain_error("empty formal sum");
    if (s == "0") return FormalSum(fallback_basis, fallback_degree);

    struct Term {
        Rational coeff;
        Basis basis;
        Composition index;
    };
    std::vector<Term> terms;
    std::size_t i = 0;
    auto read_int = [&](std::int64_t& v) {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw domain_error("malformed formal sum near position " + std::to_string(start));
        v = std::stoll(s.substr(start, i - start));
    };
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!terms.empty()) {
            throw domain_error("malformed formal sum: expected '+' or '-'");
        }
        Rational coeff = 1;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::int64_t num = 0, den = 1;
            read_int(num);
            if (i < s.size() && s[i] == '/') {
                ++i;
                read_int(den);
                if (den == 0) throw domain_error("zero denominator");
            }
            coeff = Rational(num, den);
            if (i >= s.size() || s[i] != '*') throw domain_error("malformed formal sum: expected '*'");
            ++i;
        }
        if (i >= s.size() || (s[i] != 'F' && s[i] != 'K')) throw domain_error("malformed formal sum: expected F or K");
        Basis b = s[i] == 'F' ? Basis::Fundamental : Basis::Peak;
        ++i;
        if (i >= s.size() || s[i] != '[') throw domain_error("malformed formal sum: expected '['");
        auto close = s.find(']', i);
        if (close == std::string::npos) throw domain_error("malformed formal sum: missing ']'");
        Composition idx(parse_int_list(std::string_view(s).substr(i + 1, close - i - 1)));
        i = close + 1;
        terms.push_back({coeff * sign, b, std::move(idx)});
    }
    FormalSum out(terms.front().basis, terms.front().index.size());
    for (const auto& t : terms) {
        if (t.basis != out.basis()) throw domain_error("formal sum mixes F and K terms");
        out.add_term(t.index, t.coeff);
    }
    return out;
}

}  // namespace dmod
