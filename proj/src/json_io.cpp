#include "coinqubit/json_io.hpp"

#include <charconv>
#include <cmath>

#include "coinqubit/error.hpp"

namespace coinqubit {
namespace {

double number_member(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number()) {
        throw Error(ErrorCode::invalid_argument,
                    std::string("expected numeric member \"") + key + "\"");
    }
    return j.at(key).get<double>();
}

void dump_into(const Json& j, std::string& out) {
    switch (j.type()) {
        case Json::value_t::object: {
            out += '{';
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ',';
                first = false;
                out += Json(key).dump();
                out += ':';
                dump_into(value, out);
            }
            out += '}';
            break;
        }
        case Json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& value : j) {
                if (!first) out += ',';
                first = false;
                dump_into(value, out);
            }
            out += ']';
            break;
        }
        case Json::value_t::number_float: {
            const double v = j.get<double>();
            if (!std::isfinite(v)) {
                out += "null";
                break;
            }
            char buf[32];
            auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
            out.append(buf, end);
            break;
        }
        default:
            out += j.dump();
    }
}

Json matrix_part(const DensityMatrix2& rho, bool imaginary) {
    Json rows = Json::array();
    for (int r = 0; r < 2; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 2; ++c) {
            const Complex e = rho.entry(r, c);
            row.push_back(imaginary ? e.imag() : e.real());
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

Json coin_state_json(const ProbabilityTriple& p) {
    Json j;
    j["kind"] = "coin-state";
    j["p1"] = p.p1();
    j["p2"] = p.p2();
    j["p3"] = p.p3();
    return j;
}

ProbabilityTriple coin_state_from_json(const Json& j) {
    if (!j.is_object()) {
        throw Error(ErrorCode::invalid_argument, "coin state must be a JSON object");
    }
    if (j.contains("kind") && j.at("kind") != "coin-state") {
        throw Error(ErrorCode::invalid_argument, "expected \"kind\":\"coin-state\"");
    }
    return {number_member(j, "p1"), number_member(j, "p2"), number_member(j, "p3")};
}

CoinObservable observable_from_json(const Json& j) {
    if (!j.is_object()) {
        throw Error(ErrorCode::invalid_argument, "observable must be a JSON object");
    }
    CoinObservable obs;
    auto read = [&j](const char* key, double& field) {
        if (j.contains(key)) field = number_member(j, key);
    };
    read("x", obs.x);
    read("y", obs.y);
    read("z1", obs.z1);
    read("z2", obs.z2);
    return obs;
}

Json density_json(const DensityMatrix2& rho) {
    Json j;
    j["re"] = matrix_part(rho, false);
    j["im"] = matrix_part(rho, true);
    return j;
}

DensityMatrix2 density_from_json(const Json& j) {
    auto part = [&j](const char* key) {
        std::array<std::array<double, 2>, 2> m{};
        if (!j.is_object() || !j.contains(key)) {
            // a missing imaginary part means a real matrix
            if (std::string_view(key) == "im" && j.is_object()) return m;
            throw Error(ErrorCode::invalid_argument,
                        std::string("density matrix needs a 2x2 \"") + key + "\" array");
        }
        const Json& rows = j.at(key);
        if (!rows.is_array() || rows.size() != 2) {
            throw Error(ErrorCode::invalid_argument, "density matrix must be 2x2");
        }
        for (std::size_t r = 0; r < 2; ++r) {
            if (!rows[r].is_array() || rows[r].size() != 2) {
                throw Error(ErrorCode::invalid_argument, "density matrix must be 2x2");
            }
            for (std::size_t c = 0; c < 2; ++c) {
                if (!rows[r][c].is_number()) {
                    throw Error(ErrorCode::invalid_argument, "density matrix entries must be numbers");
                }
                m[r][c] = rows[r][c].get<double>();
            }
        }
        return m;
    };
    const auto re = part("re");
    const auto im = part("im");
    return DensityMatrix2::from_entries({re[0][0], im[0][0]}, {re[0][1], im[0][1]},
                                        {re[1][0], im[1][0]}, {re[1][1], im[1][1]});
}

std::string dump(const Json& j) {
    std::string out;
    dump_into(j, out);
    return out;
}

}  // namespace coinqubit
