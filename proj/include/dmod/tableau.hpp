#pragma once

// Diagrams with a reading order, standard fillings, and the
// ascent/descent-compatibility conditions on families of fillings.
//
// A diagram stores its boxes already listed in reading order, so a standard
// filling is represented by its reading word: word[p] is the entry of the
// box read at position p. The transposition s_i acts on that word by
// exchanging the values i and i+1.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dmod/composition.hpp"

namespace dmod {

/// Column and row, both 1-based; row 1 is the bottom row.
struct Box {
    int column = 1;
    int row = 1;

    friend bool operator==(const Box&, const Box&) = default;
    friend auto operator<=>(const Box&, const Box&) = default;
};

using Word = std::vector<int>;

class Diagram {
public:
    /// `reading_order` lists every box exactly once.
    explicit Diagram(std::vector<Box> reading_order) : boxes_(std::move(reading_order)) {
        if (boxes_.empty()) throw domain_error("a diagram needs at least one box");
        for (std::size_t p = 0; p < boxes_.size(); ++p) {
            const Box& b = boxes_[p];
            if (b.column < 1 || b.row < 1) throw domain_error("box coordinates must be >= 1");
            if (!position_.emplace(b, static_cast<int>(p)).second) throw domain_error("duplicate box in diagram");
        }
    }

    int size() const noexcept { return static_cast<int>(boxes_.size()); }
    const std::vector<Box>& reading_order() const noexcept { return boxes_; }
    const Box& box_at(int position) const { return boxes_.at(static_cast<std::size_t>(position)); }
    bool contains(const Box& b) const { return position_.count(b) != 0; }

    /// Reading position of `b`, or -1 when `b` is not a box of the diagram.
    int position_of(const Box& b) const {
        auto it = position_.find(b);
        return it == position_.end() ? -1 : it->second;
    }

    int max_row() const {
        int r = 0;
        for (const auto& b : boxes_) r = std::max(r, b.row);
        return r;
    }
    int max_column() const {
        int c = 0;
        for (const auto& b : boxes_) c = std::max(c, b.column);
        return c;
    }

private:
    std::vector<Box> boxes_;
    std::map<Box, int> position_;
};

using DiagramPtr = std::shared_ptr<const Diagram>;

class StandardTableau {
public:
    StandardTableau(DiagramPtr diagram, Word word) : diagram_(std::move(diagram)), word_(std::move(word)) {
        const int n = diagram_->size();
        if (static_cast<int>(word_.size()) != n) throw domain_error("filling size does not match diagram");
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (int e : word_) {
            if (e < 1 || e > n || seen[static_cast<std::size_t>(e)])
                throw domain_error("filling is not a bijection onto 1..n");
            seen[static_cast<std::size_t>(e)] = true;
        }
        position_of_entry_.assign(static_cast<std::size_t>(n) + 1, -1);
        for (int p = 0; p < n; ++p) position_of_entry_[static_cast<std::size_t>(word_[static_cast<std::size_t>(p)])] = p;
    }

    /// Builds a tableau from a box -> entry assignment.
    static StandardTableau from_entries(DiagramPtr diagram, const std::map<Box, int>& entries) {
        Word w(static_cast<std::size_t>(diagram->size()), 0);
        if (static_cast<int>(entries.size()) != diagram->size()) throw domain_error("filling does not cover the diagram");
        for (const auto& [b, e] : entries) {
            int p = diagram->position_of(b);
            if (p < 0) throw domain_error("filling uses a box outside the diagram");
            w[static_cast<std::size_t>(p)] = e;
        }
        return StandardTableau(std::move(diagram), std::move(w));
    }

    const DiagramPtr& diagram() const noexcept { return diagram_; }
    const Word& word() const noexcept { return word_; }
    int size() const noexcept { return static_cast<int>(word_.size()); }

    /// 0-based reading position of entry e.
    int position_of(int entry) const { return position_of_entry_.at(static_cast<std::size_t>(entry)); }
    const Box& box_of(int entry) const { return diagram_->box_at(position_of(entry)); }
    int entry_at(const Box& b) const {
        int p = diagram_->position_of(b);
        return p < 0 ? 0 : word_[static_cast<std::size_t>(p)];
    }

    /// s_i T: entries i and i+1 exchanged.
    StandardTableau swapped(int i) const {
        Word w = word_;
        std::swap(w[static_cast<std::size_t>(position_of(i))], w[static_cast<std::size_t>(position_of(i + 1))]);
        return StandardTableau(diagram_, std::move(w));
    }

    /// Same diagram object and same filling.
    friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
        return a.word_ == b.word_ && a.diagram_->reading_order() == b.diagram_->reading_order();
    }

private:
    DiagramPtr diagram_;
    Word word_;
    std::vector<int> position_of_entry_;
};

inline const Word& reading_word(const StandardTableau& t) { return t.word(); }

/// i in Des(T) iff i+1 is read before i.
inline bool is_descent(const StandardTableau& t, int i) { return t.position_of(i + 1) < t.position_of(i); }

inline IntSet descent_set(const StandardTableau& t) {
    std::vector<int> out;
    for (int i = 1; i < t.size(); ++i)
        if (is_descent(t, i)) out.push_back(i);
    return IntSet(std::move(out));
}

inline IntSet peak_set(const StandardTableau& t) { return peak_set(descent_set(t)); }

inline int inversions(const Word& w) {
    int inv = 0;
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = a + 1; b < w.size(); ++b)
            if (w[a] > w[b]) ++inv;
    return inv;
}

/// A nonempty set of standard fillings of one diagram, sorted by reading word.
class TableauFamily {
public:
    TableauFamily(DiagramPtr diagram, std::vector<Word> words, std::string tag)
        : diagram_(std::move(diagram)), tag_(std::move(tag)) {
        std::sort(words.begin(), words.end());
        words.erase(std::unique(words.begin(), words.end()), words.end());
        if (words.empty()) throw domain_error("a tableau family must be nonempty");
        members_.reserve(words.size());
        for (auto& w : words) {
            index_.emplace(w, members_.size());
            members_.emplace_back(diagram_, std::move(w));
        }
    }

    const DiagramPtr& diagram() const noexcept { return diagram_; }
    const std::vector<StandardTableau>& members() const noexcept { return members_; }
    const StandardTableau& operator[](std::size_t i) const { return members_[i]; }
    std::size_t size() const noexcept { return members_.size(); }
    int n() const noexcept { return diagram_->size(); }
    const std::string& tag() const noexcept { return tag_; }

    std::optional<std::size_t> index_of(const Word& w) const {
        auto it = index_.find(w);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    std::optional<std::size_t> index_of(const StandardTableau& t) const { return index_of(t.word()); }
    bool contains(const Word& w) const { return index_.count(w) != 0; }

    std::size_t require_member(const StandardTableau& t) const {
        auto idx = index_of(t);
        if (!idx) throw domain_error("tableau is not a member of the family");
        return *idx;
    }

private:
    DiagramPtr diagram_;
    std::vector<StandardTableau> members_;
    std::map<Word, std::size_t> index_;
    std::string tag_;
};

enum class StepKind { Descent, AttackingAscent, NonattackingAscent };
enum class HatStepKind { Ascent, AttackingDescent, NonattackingDescent };

inline bool swap_stays_in_family(const StandardTableau& t, int i, const TableauFamily& family) {
    Word w = t.word();
    std::swap(w[static_cast<std::size_t>(t.position_of(i))], w[static_cast<std::size_t>(t.position_of(i + 1))]);
    return family.contains(w);
}

inline void require_step(const StandardTableau& t, int i) {
    if (i < 1 || i >= t.size()) throw domain_error("generator index out of range");
}

inline StepKind classify_ascent(const StandardTableau& t, int i, const TableauFamily& family) {
    require_step(t, i);
    family.require_member(t);
    if (is_descent(t, i)) return StepKind::Descent;
    return swap_stays_in_family(t, i, family) ? StepKind::NonattackingAscent : StepKind::AttackingAscent;
}

inline HatStepKind classify_descent(const StandardTableau& t, int i, const TableauFamily& family) {
    require_step(t, i);
    family.require_member(t);
    if (!is_descent(t, i)) return HatStepKind::Ascent;
    return swap_stays_in_family(t, i, family) ? HatStepKind::NonattackingDescent : HatStepKind::AttackingDescent;
}

/// Reading positions (1-based) (r, s), r < s, of the pair {i, i+1}.
/// For an ascent i sits at r; for a descent i+1 sits at r.
struct PositionPair {
    int r = 0;
    int s = 0;
    friend bool operator==(const PositionPair&, const PositionPair&) = default;
    friend auto operator<=>(const PositionPair&, const PositionPair&) = default;
};

inline PositionPair ascent_positions(const StandardTableau& t, int i) {
    require_step(t, i);
    if (is_descent(t, i)) throw domain_error(std::to_string(i) + " is a descent, not an ascent");
    return {t.position_of(i) + 1, t.position_of(i + 1) + 1};
}

inline PositionPair descent_positions(const StandardTableau& t, int i) {
    require_step(t, i);
    if (!is_descent(t, i)) throw domain_error(std::to_string(i) + " is an ascent, not a descent");
    return {t.position_of(i + 1) + 1, t.position_of(i) + 1};
}

/// Conflict found by a compatibility scan: the same position pair is
/// attacking in `attacking` and nonattacking in `nonattacking`.
struct CompatibilityWitness {
    std::size_t attacking = 0;
    std::size_t nonattacking = 0;
    PositionPair positions;
};

struct CompatibilityResult {
    bool compatible = true;
    std::optional<CompatibilityWitness> witness;
    explicit operator bool() const noexcept { return compatible; }
};

namespace detail {
template <bool Ascents>
CompatibilityResult scan_compatibility(const TableauFamily& family) {
    struct Seen {
        bool attacking;
        std::size_t member;
    };
    std::map<PositionPair, Seen> status;
    const int n = family.n();
    for (std::size_t m = 0; m < family.size(); ++m) {
        const auto& t = family[m];
        for (int i = 1; i < n; ++i) {
            if (is_descent(t, i) == Ascents) continue;
            PositionPair pp = Ascents ? ascent_positions(t, i) : descent_positions(t, i);
            bool attacking = !swap_stays_in_family(t, i, family);
            auto [it, inserted] = status.try_emplace(pp, Seen{attacking, m});
            if (!inserted && it->second.attacking != attacking) {
                CompatibilityWitness w;
                w.positions = pp;
                w.attacking = attacking ? m : it->second.member;
                w.nonattacking = attacking ? it->second.member : m;
                return {false, w};
            }
        }
    }
    return {true, std::nullopt};
}
}  // namespace detail

inline CompatibilityResult is_ascent_compatible(const TableauFamily& family) {
    return detail::scan_compatibility<true>(family);
}

inline CompatibilityResult is_descent_compatible(const TableauFamily& family) {
    return detail::scan_compatibility<false>(family);
}

// ---- display ---------------------------------------------------------------

/// ASCII picture, top row first. `marked` entries get a trailing prime.
inline std::string render_ascii(const StandardTableau& t, const IntSet& marked = {}) {
    const auto& d = *t.diagram();
    const int width = static_cast<int>(std::to_string(t.size()).size()) + (marked.empty() ? 0 : 1);
    std::ostringstream os;
    for (int r = d.max_row(); r >= 1; --r) {
        std::string line;
        for (int c = 1; c <= d.max_column(); ++c) {
            std::string cell;
            int e = t.entry_at({c, r});
            if (e > 0) {
                cell = std::to_string(e);
                if (marked.contains(e)) cell += "'";
            }
            if (c > 1) line += ' ';
            line += std::string(static_cast<std::size_t>(width) - cell.size(), ' ') + cell;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

inline std::string word_string(const Word& w) {
    bool compact = w.size() < 10;
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!compact && i) out += ' ';
        out += std::to_string(w[i]);
    }
    return out;
}

}  // namespace dmod
