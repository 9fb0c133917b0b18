#pragma once
// Sampled solution vector over an x-grid at one fixed time.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gburgers {

struct FieldSlice {
    std::vector<double> x;
    std::vector<std::vector<double>> u;  // u[j][i], component j at grid index i
    std::vector<std::uint8_t> nonunique;  // optional per-point mask (empty if n/a)
    double t = 0.0;

    std::size_t components() const { return u.size(); }
    std::size_t points() const { return x.size(); }

    void check_consistent() const {
        for (const auto& uj : u)
            if (uj.size() != x.size())
                throw std::invalid_argument("FieldSlice: component length != grid length");
        if (!nonunique.empty() && nonunique.size() != x.size())
            throw std::invalid_argument("FieldSlice: mask length != grid length");
    }
};

}  // namespace gburgers
