#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "chensieve/decomp.hpp"
#include "chensieve/discrepancy.hpp"
#include "chensieve/sieve_theory.hpp"

namespace chensieve {

/// Rounds to 12 significant digits so reports stay stable across
/// platforms while remaining plain JSON numbers.
inline double round_sig12(double v) {
    if (v == 0.0 || !std::isfinite(v)) return v;
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::strtod(buf, nullptr);
}

inline nlohmann::json to_json(const arith::APClass& ap) {
    return {{"a", ap.a()}, {"q", ap.q()}};
}

inline nlohmann::json to_json(const decomp::DecompositionReport& r) {
    return {{"x", r.x},
            {"ap", to_json(r.ap)},
            {"A1", r.A1},
            {"A2_sum", r.A2_sum},
            {"A3", r.A3},
            {"A4_sum", r.A4_sum},
            {"combination", r.combination},
            {"lhs_theorem", r.lhs_theorem},
            {"normalizer", r.normalizer}};
}

inline nlohmann::json to_json(const sieve_theory::ConstantBundle& b) {
    return {{"gamma", round_sig12(b.gamma)},
            {"pi2", round_sig12(b.pi2)},
            {"c_A1", round_sig12(b.c_A1)},
            {"c_A2", round_sig12(b.c_A2)},
            {"I_A2", round_sig12(b.I_A2)},
            {"I_A3", round_sig12(b.I_A3)},
            {"I_A3_error", round_sig12(b.I_A3_error)},
            {"c_A3", round_sig12(b.c_A3)},
            {"net", round_sig12(b.net)}};
}

inline nlohmann::json to_json(const discrepancy::BVSummary& s) {
    return {{"x", s.x},
            {"D", s.D},
            {"weight", std::string(discrepancy::weight_name(s.weight))},
            {"total", s.total},
            {"noncoprime_mass", s.noncoprime_mass}};
}

} // namespace chensieve
