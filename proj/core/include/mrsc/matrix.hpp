#pragma once

#include <cstdint>
#include <vector>

#include "mrsc/errors.hpp"
#include "mrsc/field.hpp"

namespace mrsc {

inline bool same_field(const Field& a, const Field& b) {
    return a.get() == b.get() || (a && b && *a == *b);
}

// Dense row-major matrix over a finite field. Zero-row and zero-column
// matrices are legal and keep their declared dimensions; several operations
// return them (empty kernels, trivial intersections).
struct FieldMatrix {
    Field field;
    std::uint64_t rows = 0;
    std::uint64_t cols = 0;
    std::vector<std::uint64_t> data;

    FieldMatrix() = default;
    FieldMatrix(Field f, std::uint64_t r, std::uint64_t c)
        : field(std::move(f)), rows(r), cols(c), data(r * c, 0) {}
    FieldMatrix(Field f, std::uint64_t r, std::uint64_t c, std::vector<std::uint64_t> d)
        : field(std::move(f)), rows(r), cols(c), data(std::move(d)) {
        if (data.size() != rows * cols) throw InputError("FieldMatrix: data size mismatch");
        for (const auto v : data)
            if (v >= field->order()) throw InputError("FieldMatrix: entry out of field range");
    }

    static FieldMatrix zero(Field f, std::uint64_t r, std::uint64_t c) { return {std::move(f), r, c}; }

    static FieldMatrix identity(Field f, std::uint64_t n) {
        FieldMatrix m(std::move(f), n, n);
        for (std::uint64_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::uint64_t& at(std::uint64_t r, std::uint64_t c) { return data[r * cols + c]; }
    std::uint64_t at(std::uint64_t r, std::uint64_t c) const { return data[r * cols + c]; }

    const std::uint64_t* row_ptr(std::uint64_t r) const { return data.data() + r * cols; }
    std::uint64_t* row_ptr(std::uint64_t r) { return data.data() + r * cols; }

    std::vector<std::uint64_t> row(std::uint64_t r) const {
        return {data.begin() + r * cols, data.begin() + (r + 1) * cols};
    }

    bool operator==(const FieldMatrix& o) const {
        return same_field(field, o.field) && rows == o.rows && cols == o.cols && data == o.data;
    }
};

} // namespace mrsc
