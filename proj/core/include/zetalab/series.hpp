#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zetalab/complex_ops.hpp"

namespace zetalab {

/// A computed value together with the truncation that produced it and, when
/// one exists, an a-priori error bound.
struct SeriesResult {
    Complex value{0.0, 0.0};
    std::size_t truncation = 0;
    std::optional<double> error_bound;
    /// True when error_bound comes from an O-term with unit implied constants.
    bool heuristic_bound = false;
    std::map<std::string, double> meta;
    /// Operation-defined index list (e.g. primes exempted from a series).
    std::vector<std::size_t> indices;

    double real() const noexcept { return value.real(); }

    double diag(const std::string& key) const { return meta.at(key); }
};

} // namespace zetalab

#include <functional>

namespace zetalab {

/// Any routine mapping z to zeta(z).
using ZetaEvaluator = std::function<Complex(Complex)>;

} // namespace zetalab
