#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace permlab {

/// Incremental Gaussian elimination over F2 for vectors of up to 32 bits.
/// Rows are kept in reduced echelon form: the leading bit of each row is
/// clear in every other row. Every row carries a tag, the XOR of the input
/// tags that produced it, so dependencies and preimages can be recovered.
class Gf2Eliminator {
public:
    struct Row {
        std::uint32_t value;
        std::uint32_t tag;
    };

    /// Adds v with its tag. Returns nullopt when v was independent, otherwise
    /// the tag combination that reduces to zero (a kernel vector).
    std::optional<std::uint32_t> insert(std::uint32_t v, std::uint32_t tag)
    {
        reduce_in_place(v, tag);
        if (v == 0) {
            return tag;
        }
        const std::uint32_t lead = std::bit_floor(v);
        for (auto& row : rows_) {
            if (row.value & lead) {
                row.value ^= v;
                row.tag ^= tag;
            }
        }
        rows_.push_back({v, tag});
        return std::nullopt;
    }

    /// Reduced residue of v; zero iff v lies in the span.
    [[nodiscard]] std::uint32_t reduce(std::uint32_t v) const
    {
        std::uint32_t tag = 0;
        reduce_in_place(v, tag);
        return v;
    }

    /// Tag combination whose value equals target, if target is in the span.
    [[nodiscard]] std::optional<std::uint32_t> solve(std::uint32_t target) const
    {
        std::uint32_t tag = 0;
        reduce_in_place(target, tag);
        if (target != 0) {
            return std::nullopt;
        }
        return tag;
    }

    [[nodiscard]] int rank() const { return static_cast<int>(rows_.size()); }
    [[nodiscard]] const std::vector<Row>& rows() const { return rows_; }

private:
    void reduce_in_place(std::uint32_t& v, std::uint32_t& tag) const
    {
        for (const auto& row : rows_) {
            if (v & std::bit_floor(row.value)) {
                v ^= row.value;
                tag ^= row.tag;
            }
        }
    }

    std::vector<Row> rows_;
};

/// Least element (as an integer) of the coset v + span(rows), where rows are
/// in reduced echelon form.
inline std::uint32_t min_in_coset(std::uint32_t v, const std::vector<std::uint32_t>& reduced_rows)
{
    for (auto row : reduced_rows) {
        if (v & std::bit_floor(row)) {
            v ^= row;
        }
    }
    return v;
}

/// All 2^n vectors of the span of n independent vectors, ascending.
std::vector<std::uint32_t> span_elements(const std::vector<std::uint32_t>& basis);

}  // namespace permlab
