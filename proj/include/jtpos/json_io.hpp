#pragma once

// JSON encodings. Integers that fit in 64 bits are numbers, larger ones are
// decimal strings.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "core.hpp"
#include "quadric.hpp"
#include "resolutions.hpp"
#include "schur.hpp"
#include "sequences.hpp"
#include "shapes.hpp"
#include "zelevinsky.hpp"

namespace jtpos::json {

using nlohmann::json;

inline json from_big(const BigInt &v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return v.convert_to<std::int64_t>();
    }
    return v.str();
}

inline BigInt to_big(const json &j)
{
    if (j.is_number_integer()) {
        return BigInt(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        return BigInt(j.get<std::string>());
    }
    throw Error("expected an integer, got " + j.dump());
}

inline json from_partition(const Partition &p) { return p.vec(); }

inline Partition to_partition(const json &j)
{
    if (!j.is_array()) {
        throw Error("partition must be a JSON array, got " + j.dump());
    }
    return Partition(j.get<std::vector<int>>());
}

inline json from_skew(const SkewShape &s) { return {{"outer", s.outer().vec()}, {"inner", s.inner().vec()}}; }

inline SkewShape to_skew(const json &j) { return {to_partition(j.at("outer")), to_partition(j.at("inner"))}; }

inline json from_class(const SchurClass &c)
{
    json arr = json::array();
    for (const auto &[key, coeff] : c.terms()) {
        json parts = json::array();
        for (const auto &p : key) {
            parts.push_back(p.vec());
        }
        arr.push_back({{"partitions", parts}, {"coeff", from_big(coeff)}});
    }
    return arr;
}

inline SchurClass to_class(const json &j, std::size_t factor_count)
{
    SchurClass c(factor_count);
    for (const auto &t : j) {
        SchurClass::Key key;
        for (const auto &p : t.at("partitions")) {
            key.push_back(to_partition(p));
        }
        c.add_term(std::move(key), to_big(t.at("coeff")));
    }
    return c;
}

// Integer-valued classes are emitted as plain integers.
inline json from_value(const SchurClass &c) { return c.is_integer() ? from_big(c.as_integer()) : from_class(c); }

inline json from_report(const PFReport &r)
{
    json j = {{"verdict", r.verdict()}, {"order", r.order}, {"window", r.window}, {"witness", nullptr}};
    if (r.witness) {
        j["witness"] = {{"lambda", from_partition(r.witness->lambda)},
                        {"mu", from_partition(r.witness->mu)},
                        {"value", from_value(r.witness->value)}};
    }
    return j;
}

inline json from_decomposition(const OrthogonalDecomposition &d)
{
    json arr = json::array();
    for (const auto &t : d) {
        arr.push_back({{"mu", from_partition(t.mu)}, {"mult", from_big(t.mult)}});
    }
    return arr;
}

inline json from_table(const BettiTable &t)
{
    json rows = json::array();
    for (const auto &r : t.rows) {
        json row = {{"index", r.index}, {"twist", r.twist}, {"rank", from_big(r.rank)}};
        row["label"] = r.label ? from_partition(*r.label) : json(nullptr);
        if (r.shape) {
            row["shape"] = from_skew(*r.shape);
        }
        rows.push_back(row);
    }
    json j = {{"rows", rows}, {"tail", nullptr}, {"open_ended", t.open_ended}};
    if (t.tail) {
        j["tail"] = {{"start", t.tail->start}, {"rank", from_big(t.tail->rank)}, {"step", t.tail->step}};
    }
    if (t.open_ended) {
        j["head_size"] = t.head_size;
    }
    return j;
}

inline BettiTable to_table(const json &j)
{
    BettiTable t;
    for (const auto &r : j.at("rows")) {
        BettiRow row;
        row.index = r.at("index").get<int>();
        row.twist = r.at("twist").get<long long>();
        row.rank = to_big(r.at("rank"));
        if (r.contains("label") && !r.at("label").is_null()) {
            row.label = to_partition(r.at("label"));
        }
        if (r.contains("shape")) {
            row.shape = to_skew(r.at("shape"));
        }
        t.rows.push_back(std::move(row));
    }
    if (j.contains("tail") && !j.at("tail").is_null()) {
        const auto &tl = j.at("tail");
        t.tail = BettiTail{tl.at("start").get<int>(), to_big(tl.at("rank")), tl.value("step", 1)};
    }
    t.open_ended = j.value("open_ended", false);
    t.head_size = j.value("head_size", 0);
    t.check();
    return t;
}

inline std::string label_text(const BettiRow &r) { return r.label ? r.label->to_string() : ""; }

// index,twist,rank,label; labels are quoted because they contain commas.
inline std::string table_csv(const BettiTable &t)
{
    std::string s = "index,twist,rank,label\n";
    for (const auto &r : t.rows) {
        s += std::to_string(r.index) + "," + std::to_string(r.twist) + "," + r.rank.str() + ",\"" + label_text(r) +
             "\"\n";
    }
    return s;
}

inline json from_purity(const PurityReport &p)
{
    json coeffs = json::array();
    for (const auto &c : p.coefficients) {
        coeffs.push_back(from_big(c));
    }
    return {{"polynomial", p.polynomial},
            {"nonnegative", p.nonnegative},
            {"coefficients", coeffs},
            {"module_dimension", p.module_dimension ? from_big(*p.module_dimension) : json(nullptr)},
            {"horizon", p.horizon}};
}

inline json from_layout(const ComplexLayout &c)
{
    json degrees = json::array();
    for (const auto &[len, terms] : c.degrees) {
        json ts = json::array();
        for (const auto &t : terms) {
            ts.push_back({{"sigma", t.sigma.one_line()}, {"weight", t.weight.entries}, {"value", from_value(t.value)}});
        }
        degrees.push_back({{"degree", len}, {"terms", ts}});
    }
    return {{"n", c.n},
            {"lambda", from_partition(c.lambda)},
            {"mu", from_partition(c.mu)},
            {"degrees", degrees},
            {"h0", from_value(c.h0)}};
}

} // namespace jtpos::json
