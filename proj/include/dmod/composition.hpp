#pragma once

// Compositions, strict partitions, descent sets and peak sets.
//
// A composition of n is a sequence of positive parts summing to n. Compositions
// of n are in bijection with subsets of {1, ..., n-1} via partial sums; that
// bijection (descent_set / comp_n) and the peak-set map are the index
// bookkeeping for every characteristic computed elsewhere in the library.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dmod {

/// Raised when an operation's precondition on its combinatorial input fails.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Finite set of positive integers, stored strictly increasing.
class IntSet {
public:
    IntSet() = default;
    IntSet(std::initializer_list<int> xs) : IntSet(std::vector<int>(xs)) {}
    explicit IntSet(std::vector<int> xs) : elems_(std::move(xs)) {
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
        if (!elems_.empty() && elems_.front() < 1)
            throw domain_error("set elements must be positive integers");
    }

    const std::vector<int>& elements() const noexcept { return elems_; }
    std::size_t size() const noexcept { return elems_.size(); }
    bool empty() const noexcept { return elems_.empty(); }
    bool contains(int x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }
    int max() const { return elems_.empty() ? 0 : elems_.back(); }

    auto begin() const noexcept { return elems_.begin(); }
    auto end() const noexcept { return elems_.end(); }

    friend bool operator==(const IntSet&, const IntSet&) = default;
    friend auto operator<=>(const IntSet&, const IntSet&) = default;

private:
    std::vector<int> elems_;
};

inline IntSet symmetric_difference(const IntSet& a, const IntSet& b) {
    std::vector<int> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return IntSet(std::move(out));
}

inline IntSet shifted(const IntSet& a, int by) {
    std::vector<int> out(a.begin(), a.end());
    for (int& x : out) x += by;
    return IntSet(std::move(out));
}

inline bool is_subset(const IntSet& a, const IntSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Sequence of positive parts. The empty composition is the unique composition of 0.
class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1) throw domain_error("composition parts must be positive");
        n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return n_; }
    std::size_t length() const noexcept { return parts_.size(); }
    int operator[](std::size_t i) const { return parts_[i]; }
    bool empty() const noexcept { return parts_.empty(); }

    friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }
    friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// The total order used for triangularity: a > b when, at the first index
/// where they differ, a has the larger part. `succ_first` sorts (n) first.
struct succ_first {
    bool operator()(const Composition& a, const Composition& b) const { return b < a; }
};

inline bool succ(const Composition& a, const Composition& b) { return b < a; }

class StrictPartition {
public:
    StrictPartition() = default;
    StrictPartition(std::initializer_list<int> parts) : StrictPartition(std::vector<int>(parts)) {}
    explicit StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw domain_error("partition parts must be positive");
            if (i > 0 && parts_[i] >= parts_[i - 1])
                throw domain_error("strict partition parts must strictly decrease");
        }
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    Composition as_composition() const { return Composition(parts_); }

    friend bool operator==(const StrictPartition&, const StrictPartition&) = default;

private:
    std::vector<int> parts_;
};

inline bool is_strict_partition(const Composition& a) {
    return std::adjacent_find(a.parts().begin(), a.parts().end(), std::less_equal<>()) == a.parts().end();
}

inline bool is_partition(const Composition& a) {
    return std::adjacent_find(a.parts().begin(), a.parts().end(), std::less<>()) == a.parts().end();
}

/// Partial sums of all parts but the last, as a subset of [n-1].
inline IntSet descent_set(const Composition& alpha) {
    if (alpha.empty()) throw domain_error("descent set of the empty composition is undefined");
    std::vector<int> out;
    int sum = 0;
    for (std::size_t i = 0; i + 1 < alpha.length(); ++i) {
        sum += alpha[i];
        out.push_back(sum);
    }
    return IntSet(std::move(out));
}

/// The composition of n whose descent set is `x`.
inline Composition comp_n(const IntSet& x, int n) {
    if (n < 1) throw domain_error("comp_n requires n >= 1");
    if (x.max() >= n) throw domain_error("comp_n: set element not in [n-1]");
    std::vector<int> parts;
    int prev = 0;
    for (int d : x) {
        parts.push_back(d - prev);
        prev = d;
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

/// {i in x : i > 1 and i-1 not in x}
inline IntSet peak_set(const IntSet& x) {
    std::vector<int> out;
    for (int i : x)
        if (i > 1 && !x.contains(i - 1)) out.push_back(i);
    return IntSet(std::move(out));
}

inline IntSet peak_set(const Composition& alpha) { return peak_set(descent_set(alpha)); }

/// Every part except possibly the last exceeds 1.
inline bool is_peak_composition(const Composition& alpha) {
    for (std::size_t i = 0; i + 1 < alpha.length(); ++i)
        if (alpha[i] < 2) return false;
    return true;
}

/// The peak composition with the same peak set: comp_n(Peak(Des(alpha))).
inline Composition peak_composition_of(const Composition& alpha) {
    return comp_n(peak_set(alpha), alpha.size());
}

namespace detail {
template <class Accept>
void enumerate_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Composition>& out,
                   const Accept& accept) {
    if (remaining == 0) {
        Composition c(prefix);
        if (accept(c)) out.push_back(std::move(c));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        enumerate_rec(remaining - p, max_part, prefix, out, accept);
        prefix.pop_back();
    }
}
}  // namespace detail

/// All 2^{n-1} compositions of n, (n) first, in descending lexicographic order.
inline std::vector<Composition> enumerate_compositions(int n) {
    if (n < 0) throw domain_error("n must be nonnegative");
    std::vector<Composition> out;
    std::vector<int> prefix;
    detail::enumerate_rec(n, n, prefix, out, [](const Composition&) { return true; });
    return out;
}

inline std::vector<Composition> enumerate_peak_compositions(int n) {
    auto all = enumerate_compositions(n);
    std::erase_if(all, [](const Composition& c) { return !is_peak_composition(c); });
    return all;
}

inline std::vector<Composition> enumerate_partitions(int n) {
    auto all = enumerate_compositions(n);
    std::erase_if(all, [](const Composition& c) { return !is_partition(c); });
    return all;
}

inline std::vector<StrictPartition> enumerate_strict_partitions(int n) {
    std::vector<StrictPartition> out;
    for (const auto& c : enumerate_compositions(n))
        if (is_strict_partition(c)) out.emplace_back(c.parts());
    return out;
}

// Text syntax: compositions as "3,3,1", sets as "{2,5,6}".

inline std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    std::string token;
    auto flush = [&] {
        if (token.empty()) throw domain_error("malformed integer list: empty item");
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw domain_error("malformed integer list: '" + token + "'");
        }
        if (used != token.size()) throw domain_error("malformed integer list: '" + token + "'");
        out.push_back(v);
        token.clear();
    };
    for (char ch : text) {
        if (ch == ' ' || ch == '\t') continue;
        if (ch == ',') {
            flush();
        } else {
            token.push_back(ch);
        }
    }
    if (!token.empty() || !out.empty()) flush();
    return out;
}

inline Composition parse_composition(std::string_view text) {
    auto s = text;
    if (!s.empty() && (s.front() == '(' || s.front() == '[')) s = s.substr(1, s.size() - 2);
    return Composition(parse_int_list(s));
}

inline IntSet parse_set(std::string_view text) {
    if (text.size() < 2 || text.front() != '{' || text.back() != '}')
        throw domain_error("malformed set: expected {a,b,...}");
    return IntSet(parse_int_list(text.substr(1, text.size() - 2)));
}

inline std::string join(const std::vector<int>& xs, std::string_view sep = ",") {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << sep;
        os << xs[i];
    }
    return os.str();
}

inline std::string to_string(const Composition& c) { return "(" + join(c.parts()) + ")"; }
inline std::string to_string(const IntSet& s) { return "{" + join(s.elements()) + "}"; }
inline std::string to_string(const StrictPartition& l) { return "(" + join(l.parts()) + ")"; }

inline std::ostream& operator<<(std::ostream& os, const Composition& c) { return os << to_string(c); }
inline std::ostream& operator<<(std::ostream& os, const IntSet& s) { return os << to_string(s); }
inline std::ostream& operator<<(std::ostream& os, const StrictPartition& l) { return os << to_string(l); }

}  // namespace dmod
