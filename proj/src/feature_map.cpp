#include "tov/feature_map.hpp"

#include "tov/errors.hpp"
#include "tov/rng.hpp"

#include <cmath>

namespace tov {

FeatureMap FeatureMap::random_tanh(int input_dim, int output_dim, std::uint64_t seed) {
    if (input_dim < 1 || output_dim < 1)
        throw DimensionError("FeatureMap: dimensions must be >= 1");
    FeatureMap fm;
    fm.map_id_ = "random-tanh";
    fm.input_dim_ = input_dim;
    fm.output_dim_ = output_dim;
    fm.seed_ = seed;
    RngStream rng(seed, "feature-map");
    fm.weights_.resize(output_dim, input_dim);
    const double scale = 1.0 / std::sqrt(static_cast<double>(input_dim));
    for (int r = 0; r < output_dim; ++r)
        for (int c = 0; c < input_dim; ++c) fm.weights_(r, c) = scale * rng.next_gaussian();
    fm.bias_.resize(output_dim);
    for (int r = 0; r < output_dim; ++r) fm.bias_[r] = 0.5 * rng.next_gaussian();
    return fm;
}

FeatureMap FeatureMap::identity(int dim) {
    if (dim < 1) throw DimensionError("FeatureMap: dimensions must be >= 1");
    FeatureMap fm;
    fm.map_id_ = "identity";
    fm.input_dim_ = dim;
    fm.output_dim_ = dim;
    return fm;
}

Vec FeatureMap::apply(const Vec& x) const {
    if (x.size() != input_dim_)
        throw DimensionError("FeatureMap: input has dim " + std::to_string(x.size()) +
                             ", expected " + std::to_string(input_dim_));
    if (map_id_ == "identity") return x;
    return ((weights_ * x + bias_).array().tanh()).matrix();
}

} // namespace tov
