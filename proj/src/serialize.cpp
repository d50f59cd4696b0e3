#include "eigenfence/serialize.hpp"

#include <string>

#include "eigenfence/errors.hpp"

namespace eigenfence {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

double number(const json& j) {
    if (!j.is_number()) throw ParseError("expected a number, got " + j.dump());
    return j.get<double>();
}

const json& array(const json& j) {
    if (!j.is_array()) throw ParseError("expected an array, got " + j.dump());
    return j;
}

Disc disc_from_json(const json& j) { return {number(field(j, "center")), number(field(j, "radius"))}; }

}  // namespace

json to_json(const RealMatrix& m) { return m.to_rows(); }

json to_json(const Disc& d) { return {{"center", d.center}, {"radius", d.radius}}; }

json to_json(const Region& r) {
    return std::visit(
        [](const auto& s) -> json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, DiscUnion>) {
                json discs = json::array();
                for (const auto& d : s.discs) discs.push_back(to_json(d));
                return {{"kind", "disc_union"}, {"discs", discs}};
            } else if constexpr (std::is_same_v<T, PairwiseIntersectionUnion>) {
                json pairs = json::array();
                for (const auto& p : s.pairs) pairs.push_back(json::array({to_json(p.first), to_json(p.second)}));
                return {{"kind", "pairwise_intersection_union"}, {"pairs", pairs}};
            } else if constexpr (std::is_same_v<T, CassiniUnion>) {
                json ovals = json::array();
                for (const auto& o : s.ovals) ovals.push_back({{"c1", o.c1}, {"c2", o.c2}, {"bound", o.bound}});
                return {{"kind", "cassini_union"}, {"ovals", ovals}};
            } else {
                json parts = json::array();
                for (const auto& p : s.parts) parts.push_back(to_json(p));
                return {{"kind", "intersection"}, {"parts", parts}};
            }
        },
        r.shape);
}

json to_json(const BoundReport& b) {
    json j = {{"name", b.name}, {"value", b.value}, {"source", b.source}};
    if (b.k) j["k"] = *b.k;
    return j;
}

json to_json(const std::vector<BoundReport>& bounds) {
    json out = json::array();
    for (const auto& b : bounds) out.push_back(to_json(b));
    return out;
}

RealMatrix matrix_from_json(const json& j) {
    std::vector<std::vector<double>> rows;
    for (const auto& row : array(j)) {
        std::vector<double> r;
        for (const auto& x : array(row)) r.push_back(number(x));
        rows.push_back(std::move(r));
    }
    return RealMatrix::from_rows(rows);
}

Region region_from_json(const json& j) {
    const auto& kind_field = field(j, "kind");
    if (!kind_field.is_string()) throw ParseError("region kind must be a string");
    const std::string kind = kind_field.get<std::string>();
    if (kind == "disc_union") {
        DiscUnion u;
        for (const auto& d : array(field(j, "discs"))) u.discs.push_back(disc_from_json(d));
        return u;
    }
    if (kind == "pairwise_intersection_union") {
        PairwiseIntersectionUnion u;
        for (const auto& p : array(field(j, "pairs"))) {
            if (array(p).size() != 2) throw ParseError("each pair must hold two discs");
            u.pairs.push_back({disc_from_json(p[0]), disc_from_json(p[1])});
        }
        return u;
    }
    if (kind == "cassini_union") {
        CassiniUnion u;
        for (const auto& o : array(field(j, "ovals")))
            u.ovals.push_back({number(field(o, "c1")), number(field(o, "c2")), number(field(o, "bound"))});
        return u;
    }
    if (kind == "intersection") {
        Intersection x;
        for (const auto& p : array(field(j, "parts"))) x.parts.push_back(region_from_json(p));
        return x;
    }
    throw ParseError("unknown region kind '" + kind + "'");
}

std::vector<BoundReport> bounds_from_json(const json& j) {
    std::vector<BoundReport> out;
    for (const auto& b : array(j)) {
        BoundReport r;
        r.name = field(b, "name").get<std::string>();
        r.value = number(field(b, "value"));
        r.source = field(b, "source").get<std::string>();
        if (b.contains("k")) r.k = field(b, "k").get<int>();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace eigenfence
