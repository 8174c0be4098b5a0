#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mrsc/errors.hpp"

namespace mrsc {

// A subset of coordinate positions {1..n}. Indices are 1-based and strictly
// increasing; helpers convert to 0-based for internal column arithmetic.
struct SupportSet {
    std::uint64_t n = 0;
    std::vector<std::uint64_t> indices;

    SupportSet() = default;
    SupportSet(std::uint64_t n_, std::vector<std::uint64_t> idx1) : n(n_), indices(std::move(idx1)) {
        validate();
    }

    static SupportSet from_zero_based(std::uint64_t n_, const std::vector<std::uint32_t>& idx0) {
        SupportSet s;
        s.n = n_;
        s.indices.reserve(idx0.size());
        for (const auto i : idx0) s.indices.push_back(static_cast<std::uint64_t>(i) + 1);
        s.validate();
        return s;
    }

    std::vector<std::uint32_t> zero_based() const {
        std::vector<std::uint32_t> out;
        out.reserve(indices.size());
        for (const auto i : indices) out.push_back(static_cast<std::uint32_t>(i - 1));
        return out;
    }

    std::size_t size() const { return indices.size(); }

    // Positions of {1..n} not in the set, 0-based.
    std::vector<std::uint32_t> complement_zero_based() const {
        std::vector<std::uint32_t> out;
        out.reserve(n - indices.size());
        std::size_t j = 0;
        for (std::uint64_t i = 1; i <= n; ++i) {
            if (j < indices.size() && indices[j] == i) {
                ++j;
            } else {
                out.push_back(static_cast<std::uint32_t>(i - 1));
            }
        }
        return out;
    }

    void validate() const {
        std::uint64_t prev = 0;
        for (const auto i : indices) {
            if (i <= prev || i > n)
                throw InputError("SupportSet: indices must be strictly increasing within [1, n]");
            prev = i;
        }
    }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < indices.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(indices[i]);
        }
        return s + "}";
    }

    bool operator==(const SupportSet& o) const { return n == o.n && indices == o.indices; }
};

// Length-n vector stored as (0-based index, nonzero value) pairs in
// increasing index order.
struct SparseVector {
    std::uint64_t n = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;

    std::size_t weight() const { return entries.size(); }

    std::vector<std::uint64_t> to_dense() const {
        std::vector<std::uint64_t> v(n, 0);
        for (const auto& [i, x] : entries) v[i] = x;
        return v;
    }

    static SparseVector from_dense(const std::vector<std::uint64_t>& v) {
        SparseVector s;
        s.n = v.size();
        for (std::uint64_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) s.entries.emplace_back(i, v[i]);
        return s;
    }

    bool operator==(const SparseVector& o) const { return n == o.n && entries == o.entries; }
};

} // namespace mrsc
