#pragma once

#include <functional>
#include <optional>
#include <random>

#include "perv/algebra.hpp"
#include "perv/errors.hpp"

namespace perv::testing {

// Shipped fiber models, assembled programmatically so the unit tests stay
// independent of the model files.

inline AlgebraDesc torus_desc() {
    AlgebraDesc d;
    d.name = "torus";
    d.dim_total = 1;
    d.dim_base = 0;
    d.basis = {{"1", 0, 0}, {"a", 1, 1}, {"b", 1, 1}, {"pt", 2, 2}};
    d.unit = "1";
    d.total = true;
    d.genus = 1;
    d.products = {{"a", "b", {{"pt", Rational(1)}}}};
    d.integral = {{{"pt", Rational(1)}}};
    return d;
}

inline AlgebraDesc genus0_desc() {
    AlgebraDesc d;
    d.name = "genus0";
    d.dim_total = 1;
    d.dim_base = 0;
    d.basis = {{"1", 0, 0}, {"pt", 2, 2}};
    d.unit = "1";
    d.total = true;
    d.genus = 0;
    d.integral = {{{"pt", Rational(1)}}};
    return d;
}

inline AlgebraDesc genus2_desc() {
    AlgebraDesc d;
    d.name = "genus2";
    d.dim_total = 1;
    d.dim_base = 0;
    d.basis = {{"1", 0, 0},  {"a1", 1, 1}, {"a2", 1, 1},
               {"b1", 1, 1}, {"b2", 1, 1}, {"pt", 2, 2}};
    d.unit = "1";
    d.total = true;
    d.genus = 2;
    d.products = {{"a1", "b1", {{"pt", Rational(1)}}}, {"a2", "b2", {{"pt", Rational(1)}}}};
    d.integral = {{{"pt", Rational(1)}}};
    return d;
}

inline AlgebraDesc badtoy_desc() {
    AlgebraDesc d;
    d.name = "badtoy";
    d.dim_total = 2;
    d.dim_base = 0;
    d.basis = {{"1", 0, 0}, {"u", 2, 0}, {"v", 4, 2}};
    d.unit = "1";
    d.total = true;
    d.products = {{"u", "u", {{"v", Rational(1)}}}};
    return d;
}

inline std::optional<ErrorKind> thrown_kind(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

// deterministic small nonzero rationals for property tests
inline Rational random_coeff(std::mt19937_64& rng) {
    static const long nums[] = {1, -1, 2, -2, 3, -3};
    static const long dens[] = {1, 1, 1, 2, 3};
    return Rational(nums[rng() % 6], dens[rng() % 5]);
}

// random sparse vector with nonempty support
inline ClassVector random_vector(const FilteredAlgebra& a, std::mt19937_64& rng) {
    ClassVector v;
    v.owner = &a;
    while (v.terms.empty())
        for (int i = 0; i < a.dim(); ++i)
            if (rng() % 2 == 0)
                v.terms.emplace(i, random_coeff(rng));
    return v;
}

} // namespace perv::testing
