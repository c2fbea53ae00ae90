#pragma once

// Hand-transcribed reference matrices used as oracles by the tests.

#include <cstdint>
#include <string>
#include <vector>

#include "steiner/field.hpp"
#include "steiner/linform.hpp"
#include "steiner/pencil.hpp"
#include "steiner/serialize.hpp"

namespace fixtures {

inline const char* kP2MinC3 =
    "[ x y t 0 0 0 0 0 ]\n"
    "[ 0 0 0 x y t 0 0 ]\n"
    "[ t 0 0 0 t 0 x y ]";

inline const char* kP2MinC4 =
    "[ x y t 0 0 0 0 0 0 0 ]\n"
    "[ 0 0 0 x y t 0 0 0 0 ]\n"
    "[ t 0 0 0 t 0 x y 0 0 ]\n"
    "[ 0 0 0 t 0 0 0 t x y ]";

// first five rows of the general c x (2c+2) pattern
inline const char* kP2MinC5 =
    "[ x y t 0 0 0 0 0 0 0 0 0 ]\n"
    "[ 0 0 0 x y t 0 0 0 0 0 0 ]\n"
    "[ t 0 0 0 t 0 x y 0 0 0 0 ]\n"
    "[ 0 0 0 t 0 0 0 t x y 0 0 ]\n"
    "[ 0 0 0 0 0 0 t 0 0 t x y ]";

inline const char* kPnMinN5C4 =
    "[ x_4 0 x_2 -x_5 x_0 -x_3 0 0 x_1 0 x_3 0 x_5 0 0 0 ]\n"
    "[ 0 x_4 0 x_2 -x_5 x_0 -x_3 0 0 x_1 0 x_3 0 x_5 0 0 ]\n"
    "[ 0 0 x_4 0 x_2 0 x_0 0 0 x_2 x_1 x_4 x_3 0 x_5 0 ]\n"
    "[ 0 0 0 x_4 0 x_2 0 x_0 0 0 x_2 x_1 x_4 x_3 0 x_5 ]";

// S^3(Omega(1)) presentation as printed (6 x 10)
inline const char* kB3 =
    "[ x y t 0 0 0 0 0 0 0 ]\n"
    "[ 0 x 0 y t 0 0 0 0 0 ]\n"
    "[ 0 0 x 0 y t 0 0 0 0 ]\n"
    "[ 0 0 0 x 0 0 y t 0 0 ]\n"
    "[ 0 0 0 0 x 0 0 y t 0 ]\n"
    "[ 0 0 0 0 0 x 0 0 y t ]";

// blocks (B3, B2, B2, B1) with the last two blocks rewired: 13 x 23
inline const char* kKTypeRewired =
    "[ x y t 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 ]\n"
    "[ 0 x 0 y t 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 ]\n"
    "[ 0 0 x 0 y t 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 ]\n"
    "[ 0 0 0 x 0 0 y t 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 ]\n"
    "[ 0 0 0 0 x 0 0 y t 0 0 0 0 0 0 0 0 0 0 0 0 0 0 ]\n"
    "[ 0 0 0 0 0 x 0 0 y t 0 0 0 0 0 0 0 0 0 0 0 0 0 ]\n"
    "[ 0 0 0 0 0 0 0 0 0 0 x y t 0 0 0 0 0 0 0 0 0 0 ]\n"
    "[ 0 0 0 0 0 0 0 0 0 0 0 x 0 y t 0 0 0 0 0 0 0 0 ]\n"
    "[ 0 0 0 0 0 0 0 0 0 0 0 0 x 0 y t 0 0 0 0 0 0 0 ]\n"
    "[ 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 x y t 0 0 0 0 ]\n"
    "[ 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 x 0 y t 0 0 ]\n"
    "[ t 0 0 0 0 0 0 0 0 0 0 0 0 t 0 0 0 0 x 0 y 0 0 ]\n"
    "[ 0 0 0 0 0 0 0 0 0 0 t 0 0 0 0 0 0 0 0 t 0 x y ]";

inline steiner::LinFormMatrix display(const char* text, std::size_t n = 2,
                                      const steiner::Field& field = steiner::Field::rationals()) {
    return steiner::parse_display(text, n, field);
}

inline steiner::Point point(const steiner::Field& f, std::vector<long long> coords) {
    return steiner::make_point(f, coords);
}

inline steiner::Line line(const steiner::Field& f, std::vector<long long> p,
                          std::vector<long long> q) {
    return steiner::Line(point(f, std::move(p)), point(f, std::move(q)));
}

// (-1^c, 0^z)
inline steiner::SplittingType one_type(std::size_t c, std::size_t zeros) {
    return steiner::SplittingType::from_counts({c, zeros});
}

}  // namespace fixtures
