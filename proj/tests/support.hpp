#pragma once

// Glue between library objects and the brute-force references.

#include <algorithm>
#include <vector>

#include "dmod/dmod.hpp"
#include "oracles.hpp"

namespace support {

inline oracle::Kind to_oracle(dmod::FamilyKind k) { return static_cast<oracle::Kind>(static_cast<int>(k)); }

inline oracle::Filling filling_of(const dmod::StandardTableau& t) {
    oracle::Filling f;
    for (int v = 1; v <= t.size(); ++v) {
        const auto& b = t.box_of(v);
        f[{b.column, b.row}] = v;
    }
    return f;
}

inline std::vector<oracle::Filling> fillings_of(const dmod::TableauFamily& fam) {
    std::vector<oracle::Filling> out;
    for (const auto& t : fam.members()) out.push_back(filling_of(t));
    std::sort(out.begin(), out.end());
    return out;
}

inline oracle::Sum to_oracle(const dmod::FormalSum& s) {
    oracle::Sum out;
    for (const auto& [idx, c] : s.terms()) out[idx.parts()] = c.numerator() / c.denominator();
    return out;
}

inline oracle::Dense dense(const dmod::OperatorMatrix& m) {
    oracle::Dense d = oracle::zero(m.dim());
    for (const auto& [r, c, v] : m.triplets()) d[r][c] = v;
    return d;
}

}  // namespace support
