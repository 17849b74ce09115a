#pragma once

#include "permlab/field.hpp"

#include <functional>
#include <istream>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

namespace permlab {

/// Largest degree for which maps are precomputed into a full table.
inline constexpr int kMaterializeLimit = 18;

/// A named pure map F_{2^m} -> F_{2^m}, held either as an evaluator or as a
/// table of 2^m entries indexed by element encoding (or both).
class FieldMap {
public:
    using Evaluator = std::function<FieldElem(FieldElem)>;

    FieldMap(std::string name, std::shared_ptr<const FieldCtx> ctx, Evaluator eval);
    /// Table-backed map; throws when the table size is not 2^m or an entry is
    /// not a field element.
    static FieldMap from_table(std::string name, std::shared_ptr<const FieldCtx> ctx,
                               std::vector<std::uint32_t> table);

    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] const FieldCtx& ctx() const { return *ctx_; }
    [[nodiscard]] const std::shared_ptr<const FieldCtx>& ctx_ptr() const { return ctx_; }

    [[nodiscard]] FieldElem operator()(FieldElem x) const
    {
        return table_.empty() ? eval_(x) : FieldElem{table_[x.bits]};
    }
    /// Evaluates through the evaluator even when a table is present.
    [[nodiscard]] FieldElem evaluate_direct(FieldElem x) const;

    [[nodiscard]] bool is_materialized() const { return !table_.empty(); }
    /// Precomputes the table (in parallel); no-op when already present.
    void materialize();
    /// Materializes when m <= kMaterializeLimit.
    void materialize_if_small();
    /// Table of all 2^m values, computed on the fly when not materialized.
    [[nodiscard]] std::vector<std::uint32_t> values() const;
    [[nodiscard]] const std::vector<std::uint32_t>& table() const { return table_; }

    /// Copy whose table has entry x replaced by y.
    [[nodiscard]] FieldMap with_entry(FieldElem x, FieldElem y) const;

private:
    std::string name_;
    std::shared_ptr<const FieldCtx> ctx_;
    Evaluator eval_;
    std::vector<std::uint32_t> table_;
};

/// Writes `x:gx` lines, lowercase hex, sorted by x.
void write_hex_table(std::ostream& out, const FieldMap& f);

/// Reads a hex table. Lines must be `x:gx` with x running 0, 1, ... in
/// order, the line count a power of two 2^m (1 <= m <= 24) and every value
/// below 2^m. Returns the values; throws InvalidArgument otherwise.
std::vector<std::uint32_t> read_hex_table(std::istream& in);

}  // namespace permlab
