#include "tichain/json_io.hpp"

#include <fstream>

namespace tichain {

Json complex_to_json(complex z) { return Json::array({z.real(), z.imag()}); }

complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw FileFormatError("complex values must be [re, im] number pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

Json state_to_json(const StateVector& psi) {
    Json out;
    out["n"] = psi.n_sites();
    Json amps = Json::array();
    for (const complex& a : psi.amplitudes()) amps.push_back(complex_to_json(a));
    out["amplitudes"] = std::move(amps);
    return out;
}

StateVector state_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("amplitudes"))
        throw FileFormatError("state JSON must be {\"n\": int, \"amplitudes\": "
                              "[[re, im], ...]}");
    if (!j["n"].is_number_integer())
        throw FileFormatError("state field \"n\" must be an integer");
    const int n = j["n"].get<int>();
    if (n < kMinSites || n > kHardDenseCap)
        throw FileFormatError("state site count " + std::to_string(n) +
                              " outside supported range");
    const Json& amps = j["amplitudes"];
    if (!amps.is_array() || amps.size() != (std::size_t{1} << n))
        throw FileFormatError("amplitude array must have exactly 2^n = " +
                              std::to_string(std::size_t{1} << n) +
                              " entries, got " + std::to_string(amps.size()));
    std::vector<complex> values;
    values.reserve(amps.size());
    for (const Json& a : amps) values.push_back(complex_from_json(a));
    return StateVector(n, std::move(values));
}

StateVector read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw FileFormatError("cannot open state file \"" + path + "\"");
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw FileFormatError("state file \"" + path + "\" is not valid JSON: " +
                              e.what());
    }
    return state_from_json(j);
}

void write_state_file(const std::string& path, const StateVector& psi) {
    std::ofstream out(path);
    if (!out)
        throw FileFormatError("cannot open \"" + path + "\" for writing");
    out << state_to_json(psi).dump(2) << '\n';
}

}  // namespace tichain
