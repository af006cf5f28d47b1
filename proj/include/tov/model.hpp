#pragma once

#include "tov/dataset.hpp"
#include "tov/feature_map.hpp"
#include "tov/parallel.hpp"

#include <memory>
#include <variant>

namespace tov {

// Per-example losses with exact analytic gradients and (for small parameter
// counts) exact Hessians.
//
//   Logistic          binary cross-entropy on <x, theta> plus an optional
//                     ridge term (ridge/2)*|theta|^2.
//   FeaturizedLinear  squared loss (y - <psi(x), theta>)^2 / 2.
//   ToyToken          autoregressive token model over vocabulary V with
//                     theta = (L, C) flattened, L, C in R^{VxV}:
//                     logits(t) = L[prev] + C * mean-one-hot(input), where
//                     prev is output token t-1 and row 0 of L serves as the
//                     begin-of-sequence context at t = 1. The loss is the
//                     length-normalized token log-loss.
struct LogisticSpec {
    int p_feat = 0;
    double ridge = 0.0;
};

struct FeaturizedLinearSpec {
    std::shared_ptr<const FeatureMap> map;
};

struct ToyTokenSpec {
    int vocab = 0;
};

struct ModelSpec {
    std::variant<LogisticSpec, FeaturizedLinearSpec, ToyTokenSpec> family;
    int hessian_cap = 512;

    static ModelSpec logistic(int p_feat, double ridge = 0.0);
    static ModelSpec featurized_linear(std::shared_ptr<const FeatureMap> map);
    static ModelSpec toy_token(int vocab);

    int param_dim() const;
    bool is_logistic() const { return std::holds_alternative<LogisticSpec>(family); }
    bool is_linear() const { return std::holds_alternative<FeaturizedLinearSpec>(family); }
    bool is_token() const { return std::holds_alternative<ToyTokenSpec>(family); }
    const LogisticSpec& logistic_spec() const { return std::get<LogisticSpec>(family); }
    const FeaturizedLinearSpec& linear_spec() const { return std::get<FeaturizedLinearSpec>(family); }
    const ToyTokenSpec& token_spec() const { return std::get<ToyTokenSpec>(family); }
};

double loss(const ModelSpec& spec, const Vec& theta, const Example& ex);
Vec grad(const ModelSpec& spec, const Vec& theta, const Example& ex);
Mat hessian(const ModelSpec& spec, const Vec& theta, const Example& ex);

// Entry t (0-based t-1) is log p_t(z_out(t) | z; theta). ToyToken only.
Vec token_logprobs(const ModelSpec& spec, const Vec& theta, const Example& ex);

// Mean loss / gradient over a non-empty id set. Per-example terms are
// computed in parallel slots and reduced in ascending-id order, so results
// do not depend on caller ordering or thread count.
double batch_risk(const ModelSpec& spec, const Vec& theta, const Dataset& data,
                  std::span<const ExampleId> ids, Exec exec = Exec::Parallel);
Vec batch_grad(const ModelSpec& spec, const Vec& theta, const Dataset& data,
               std::span<const ExampleId> ids, Exec exec = Exec::Parallel);

// Mean Hessian over an id set (theory oracles; subject to hessian_cap).
Mat batch_hessian(const ModelSpec& spec, const Vec& theta, const Dataset& data,
                  std::span<const ExampleId> ids, Exec exec = Exec::Parallel);

namespace token_detail {
// BOS context row index of L used at position t = 1.
inline constexpr int kBosRow = 0;
int prev_row(const TokenExample& t, int pos0);
Vec mean_one_hot(const TokenExample& t, int vocab);
} // namespace token_detail

} // namespace tov
