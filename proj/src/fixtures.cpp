#include <stdexcept>

#include "antnorm/reports.hpp"

namespace antnorm {

namespace detail {
const char* tables_json_text();
}

const char* fixture_json_text() {
    return detail::tables_json_text();
}

namespace {

RamificationProfile profile_from(const nlohmann::ordered_json& j) {
    return {j.at("ell").get<uint64_t>(), j.at("t").get<unsigned>(), j.at("s").get<unsigned>()};
}

FixtureTable load_table(const nlohmann::ordered_json& all, int id) {
    const std::string key = "table" + std::to_string(id);
    const auto& j = all.at(key);
    FixtureTable t;
    t.id = key;
    t.profile = profile_from(j.at("profile"));
    t.description = j.at("description").get<std::string>();
    for (const auto& row : j.at("rows")) {
        if (row.contains("probs")) {
            PredictedRow pr;
            pr.n = row.at("n").get<unsigned>();
            for (const auto& p : row.at("probs"))
                pr.probs.push_back(parse_rational(p.get<std::string>()));
            t.predicted.push_back(std::move(pr));
        } else {
            ObservedRow orow;
            orow.n = row.at("n").get<unsigned>();
            orow.fields = row.at("fields").get<uint64_t>();
            orow.counts = row.at("counts").get<std::vector<uint64_t>>();
            orow.printed = row.at("printed").get<std::vector<std::string>>();
            t.observed.push_back(std::move(orow));
        }
    }
    return t;
}

} // namespace

const FixtureTable& fixture_table(int table_id) {
    if (table_id < 1 || table_id > 4)
        throw std::invalid_argument("--table: expected an id in 1..4, got " +
                                    std::to_string(table_id));
    static const std::vector<FixtureTable> tables = [] {
        auto all = nlohmann::ordered_json::parse(detail::tables_json_text());
        std::vector<FixtureTable> out;
        for (int id = 1; id <= 4; ++id)
            out.push_back(load_table(all, id));
        return out;
    }();
    return tables[static_cast<size_t>(table_id - 1)];
}

} // namespace antnorm
