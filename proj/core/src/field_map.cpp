#include "permlab/field_map.hpp"

#include "permlab/error.hpp"
#include "permlab/hex.hpp"
#include "permlab/parallel.hpp"

#include <bit>

namespace permlab {

FieldMap::FieldMap(std::string name, std::shared_ptr<const FieldCtx> ctx, Evaluator eval)
    : name_(std::move(name)), ctx_(std::move(ctx)), eval_(std::move(eval))
{
}

FieldMap FieldMap::from_table(std::string name, std::shared_ptr<const FieldCtx> ctx,
                              std::vector<std::uint32_t> table)
{
    if (table.size() != ctx->size()) {
        throw InvalidArgument("table for " + name + " has " + std::to_string(table.size()) +
                              " entries, expected " + std::to_string(ctx->size()));
    }
    for (auto v : table) {
        if (v >= ctx->size()) {
            throw InvalidArgument("table for " + name + " has out-of-range value " + to_hex(v));
        }
    }
    auto shared = std::make_shared<const std::vector<std::uint32_t>>(table);
    FieldMap f(std::move(name), std::move(ctx),
               [shared](FieldElem x) { return FieldElem{(*shared)[x.bits]}; });
    f.table_ = std::move(table);
    return f;
}

FieldElem FieldMap::evaluate_direct(FieldElem x) const
{
    return eval_(x);
}

void FieldMap::materialize()
{
    if (is_materialized()) {
        return;
    }
    std::vector<std::uint32_t> table(ctx_->size());
    parallel_for(table.size(), [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t x = begin; x < end; ++x) {
            table[x] = eval_(FieldElem{static_cast<std::uint32_t>(x)}).bits;
        }
    });
    table_ = std::move(table);
}

void FieldMap::materialize_if_small()
{
    if (ctx_->m() <= kMaterializeLimit) {
        materialize();
    }
}

std::vector<std::uint32_t> FieldMap::values() const
{
    if (is_materialized()) {
        return table_;
    }
    FieldMap copy = *this;
    copy.materialize();
    return std::move(copy.table_);
}

FieldMap FieldMap::with_entry(FieldElem x, FieldElem y) const
{
    auto table = values();
    table.at(x.bits) = ctx_->elem(y.bits).bits;
    return from_table(name_ + "[mutated]", ctx_, std::move(table));
}

void write_hex_table(std::ostream& out, const FieldMap& f)
{
    const auto values = f.values();
    for (std::size_t x = 0; x < values.size(); ++x) {
        out << to_hex(x) << ':' << to_hex(values[x]) << '\n';
    }
}

std::vector<std::uint32_t> read_hex_table(std::istream& in)
{
    std::vector<std::uint32_t> values;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const auto where = "table line " + std::to_string(values.size() + 1);
        const auto colon = line.find(':');
        if (colon == std::string::npos) {
            throw InvalidArgument(where + ": expected x:gx");
        }
        auto x = parse_hex(std::string_view(line).substr(0, colon));
        auto y = parse_hex(std::string_view(line).substr(colon + 1));
        if (!x || !y) {
            throw InvalidArgument(where + ": bad hex");
        }
        if (*x != values.size()) {
            throw InvalidArgument(where + ": expected x=" + to_hex(values.size()) + ", got " + to_hex(*x));
        }
        if (values.size() >= (std::size_t{1} << kMaxDegree)) {
            throw InvalidArgument("table longer than 2^" + std::to_string(kMaxDegree) + " entries");
        }
        values.push_back(static_cast<std::uint32_t>(std::min<std::uint64_t>(*y, UINT32_MAX)));
    }
    if (values.size() < 2 || !std::has_single_bit(values.size())) {
        throw InvalidArgument("table has " + std::to_string(values.size()) +
                              " entries; expected 2^m with 1 <= m <= " + std::to_string(kMaxDegree));
    }
    for (std::size_t x = 0; x < values.size(); ++x) {
        if (values[x] >= values.size()) {
            throw InvalidArgument("table value at x=" + to_hex(x) + " is out of range");
        }
    }
    return values;
}

}  // namespace permlab
