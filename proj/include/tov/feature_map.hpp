#pragma once

#include "tov/dataset.hpp"

#include <cstdint>
#include <memory>
#include <string>

namespace tov {

// Frozen featurization psi: R^d -> R^p_out. Two named maps:
//   random-tanh: psi(x) = tanh(W x + b), W_ij ~ N(0, 1/d), b_i ~ N(0, 1/4),
//                drawn once from the seed at construction.
//   identity:    psi(x) = x (p_out must equal d).
class FeatureMap {
public:
    static FeatureMap random_tanh(int input_dim, int output_dim, std::uint64_t seed);
    static FeatureMap identity(int dim);

    Vec apply(const Vec& x) const;

    int input_dim() const { return input_dim_; }
    int output_dim() const { return output_dim_; }
    std::uint64_t seed() const { return seed_; }
    const std::string& map_id() const { return map_id_; }

private:
    FeatureMap() = default;

    std::string map_id_;
    int input_dim_ = 0;
    int output_dim_ = 0;
    std::uint64_t seed_ = 0;
    Mat weights_; // empty for identity
    Vec bias_;
};

} // namespace tov
