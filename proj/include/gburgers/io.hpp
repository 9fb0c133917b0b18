#pragma once
// File formats.  Slices go out as CSV, header `x,u1,...,uN[,nonunique]`, every
// number printed with %.17g so a re-parse round-trips bit-exact and identical
// runs produce byte-identical files.  Each CSV gets a JSON sidecar
// (<path>.meta.json) recording the full run manifest.  All writes are atomic:
// temp file in the target directory, then rename.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "field.hpp"

namespace gburgers {

inline constexpr const char* kToolVersion = "1.0.0";

inline std::string format_g17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline void atomic_write_file(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
        out << content;
        if (!out.flush()) throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, target);
}

inline std::string slice_to_csv(const FieldSlice& slice, bool include_mask) {
    slice.check_consistent();
    std::ostringstream out;
    out << "x";
    for (std::size_t j = 0; j < slice.components(); ++j) out << ",u" << (j + 1);
    if (include_mask) out << ",nonunique";
    out << "\n";
    for (std::size_t i = 0; i < slice.points(); ++i) {
        out << format_g17(slice.x[i]);
        for (std::size_t j = 0; j < slice.components(); ++j)
            out << "," << format_g17(slice.u[j][i]);
        if (include_mask) out << "," << (slice.nonunique.empty() ? 0 : int(slice.nonunique[i]));
        out << "\n";
    }
    return out.str();
}

inline void write_slice_csv(const std::string& path, const FieldSlice& slice,
                            bool include_mask = false) {
    atomic_write_file(path, slice_to_csv(slice, include_mask));
}

inline FieldSlice read_slice_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::string header;
    if (!std::getline(in, header)) throw std::runtime_error("empty file: " + path);
    if (!header.empty() && header.back() == '\r') header.pop_back();

    std::vector<std::string> cols;
    {
        std::stringstream hs(header);
        std::string tok;
        while (std::getline(hs, tok, ',')) cols.push_back(tok);
    }
    if (cols.empty() || cols[0] != "x") throw std::runtime_error("bad slice header in " + path);
    bool has_mask = !cols.empty() && cols.back() == "nonunique";
    const std::size_t ncomp = cols.size() - 1 - (has_mask ? 1 : 0);
    if (ncomp == 0) throw std::runtime_error("no components in " + path);

    FieldSlice slice;
    slice.u.assign(ncomp, {});
    if (has_mask) slice.nonunique.clear();
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::stringstream ls(line);
        std::string tok;
        std::vector<double> row;
        while (std::getline(ls, tok, ',')) row.push_back(std::strtod(tok.c_str(), nullptr));
        if (row.size() != cols.size())
            throw std::runtime_error("ragged row in " + path + ": " + line);
        slice.x.push_back(row[0]);
        for (std::size_t j = 0; j < ncomp; ++j) slice.u[j].push_back(row[1 + j]);
        if (has_mask) slice.nonunique.push_back(row.back() != 0.0 ? 1 : 0);
    }
    slice.check_consistent();
    return slice;
}

// grid syntax min:max:step, endpoints inclusive within half a step
inline std::vector<double> parse_grid(const std::string& text) {
    double lo = 0, hi = 0, step = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &lo, &hi, &step, &extra) != 3)
        throw std::invalid_argument("grid must be min:max:step, got '" + text + "'");
    if (!(step > 0.0)) throw std::invalid_argument("grid step must be positive");
    if (!(hi >= lo)) throw std::invalid_argument("grid needs max >= min");
    const long n = static_cast<long>(std::floor((hi - lo) / step + 0.5)) + 1;
    std::vector<double> xs(static_cast<std::size_t>(n));
    for (long k = 0; k < n; ++k) xs[static_cast<std::size_t>(k)] = lo + step * static_cast<double>(k);
    return xs;
}

inline std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Everything needed to reproduce a run; recorded verbatim next to each output.
// The timestamp is the single non-deterministic field.
struct RunManifest {
    std::string command;
    std::string spec_path;
    std::string evaluator;
    std::string grid;
    double nu = 0.0;
    bool has_nu = false;
    std::vector<double> t_list;
    std::vector<std::string> outputs;
    nlohmann::json extra;  // evaluator-specific knobs (tolerances etc.)

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["tool"] = "gburgers";
        j["version"] = kToolVersion;
        j["command"] = command;
        if (!spec_path.empty()) j["spec"] = spec_path;
        if (!evaluator.empty()) j["evaluator"] = evaluator;
        if (!grid.empty()) j["grid"] = grid;
        if (has_nu) j["nu"] = nu;
        if (t_list.size() == 1) j["t"] = t_list.front();
        else if (!t_list.empty()) j["t_list"] = t_list;
        j["outputs"] = outputs;
        if (!extra.is_null()) j["parameters"] = extra;
        j["timestamp"] = utc_timestamp();
        return j;
    }
};

inline void write_sidecar(const std::string& csv_path, const RunManifest& manifest) {
    atomic_write_file(csv_path + ".meta.json", manifest.to_json().dump(2) + "\n");
}

}  // namespace gburgers
