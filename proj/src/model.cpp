#include "tov/model.hpp"

#include "tov/errors.hpp"

#include <algorithm>
#include <cmath>

namespace tov {

ModelSpec ModelSpec::logistic(int p_feat, double ridge) {
    if (p_feat < 1) throw DimensionError("logistic: p_feat must be >= 1");
    if (ridge < 0.0) throw DimensionError("logistic: ridge must be >= 0");
    return ModelSpec{LogisticSpec{p_feat, ridge}};
}

ModelSpec ModelSpec::featurized_linear(std::shared_ptr<const FeatureMap> map) {
    if (!map) throw DimensionError("featurized_linear: null feature map");
    return ModelSpec{FeaturizedLinearSpec{std::move(map)}};
}

ModelSpec ModelSpec::toy_token(int vocab) {
    if (vocab < 2) throw DimensionError("toy_token: vocab must be >= 2");
    return ModelSpec{ToyTokenSpec{vocab}};
}

int ModelSpec::param_dim() const {
    if (is_logistic()) return logistic_spec().p_feat;
    if (is_linear()) return linear_spec().map->output_dim();
    const int v = token_spec().vocab;
    return 2 * v * v;
}

namespace {

void check_theta(const ModelSpec& spec, const Vec& theta) {
    if (theta.size() != spec.param_dim())
        throw DimensionError("theta has dim " + std::to_string(theta.size()) +
                             ", model expects " + std::to_string(spec.param_dim()));
}

const DenseExample& dense_of(const Example& ex) {
    if (!ex.is_dense())
        throw DimensionError("example " + std::to_string(ex.id) + " is not dense");
    return ex.dense();
}

const TokenExample& token_of(const Example& ex) {
    if (!ex.is_token())
        throw DimensionError("example " + std::to_string(ex.id) + " is not token-based");
    return ex.token();
}

double sigmoid(double s) {
    if (s >= 0.0) return 1.0 / (1.0 + std::exp(-s));
    const double e = std::exp(s);
    return e / (1.0 + e);
}

// log(1 + e^s), stable for both signs.
double softplus(double s) {
    if (s > 0.0) return s + std::log1p(std::exp(-s));
    return std::log1p(std::exp(s));
}

double logistic_score(const LogisticSpec& m, const Vec& theta, const DenseExample& d) {
    if (d.x.size() != m.p_feat)
        throw DimensionError("logistic: feature dim " + std::to_string(d.x.size()) +
                             " != " + std::to_string(m.p_feat));
    return theta.dot(d.x);
}

// --- toy token model -------------------------------------------------------
// theta layout: L block first (row-major, V rows of V logits), then C block
// (row-major: C[v,w] weights mean-one-hot input w into logit v).

struct TokenView {
    int vocab;
    const Vec& theta;
    double l_at(int row, int v) const { return theta[row * vocab + v]; }
    double c_at(int v, int w) const { return theta[vocab * vocab + v * vocab + w]; }
    int l_index(int row, int v) const { return row * vocab + v; }
    int c_index(int v, int w) const { return vocab * vocab + v * vocab + w; }
};

void check_token_example(const TokenExample& t, int vocab) {
    if (t.output_tokens.empty())
        throw DimensionError("token example has empty output");
    for (int v : t.input_tokens)
        if (v < 0 || v >= vocab) throw DimensionError("input token id out of range");
    for (int v : t.output_tokens)
        if (v < 0 || v >= vocab) throw DimensionError("output token id out of range");
}

// Log-softmax of logits at each output position, returned as the full
// distribution per position (V columns).
Mat token_position_logprobs(const ToyTokenSpec& m, const Vec& theta, const TokenExample& t) {
    check_token_example(t, m.vocab);
    const TokenView view{m.vocab, theta};
    const Vec ebar = token_detail::mean_one_hot(t, m.vocab);
    Vec context = Vec::Zero(m.vocab);
    for (int v = 0; v < m.vocab; ++v) {
        double acc = 0.0;
        for (int w = 0; w < m.vocab; ++w) acc += view.c_at(v, w) * ebar[w];
        context[v] = acc;
    }

    const int T = t.length();
    Mat logp(T, m.vocab);
    Vec logits(m.vocab);
    for (int pos = 0; pos < T; ++pos) {
        const int row = token_detail::prev_row(t, pos);
        for (int v = 0; v < m.vocab; ++v) logits[v] = view.l_at(row, v) + context[v];
        const double mx = logits.maxCoeff();
        double z = 0.0;
        for (int v = 0; v < m.vocab; ++v) z += std::exp(logits[v] - mx);
        const double lse = mx + std::log(z);
        for (int v = 0; v < m.vocab; ++v) logp(pos, v) = logits[v] - lse;
    }
    return logp;
}

} // namespace

namespace token_detail {

int prev_row(const TokenExample& t, int pos0) {
    return pos0 == 0 ? kBosRow : t.output_tokens[static_cast<std::size_t>(pos0 - 1)];
}

Vec mean_one_hot(const TokenExample& t, int vocab) {
    Vec e = Vec::Zero(vocab);
    if (t.input_tokens.empty()) return e;
    const double w = 1.0 / static_cast<double>(t.input_tokens.size());
    for (int v : t.input_tokens) e[v] += w;
    return e;
}

} // namespace token_detail

double loss(const ModelSpec& spec, const Vec& theta, const Example& ex) {
    check_theta(spec, theta);
    if (spec.is_logistic()) {
        const auto& m = spec.logistic_spec();
        const DenseExample& d = dense_of(ex);
        const double s = logistic_score(m, theta, d);
        return softplus(s) - d.y * s + 0.5 * m.ridge * theta.squaredNorm();
    }
    if (spec.is_linear()) {
        const DenseExample& d = dense_of(ex);
        const double r = d.y - spec.linear_spec().map->apply(d.x).dot(theta);
        return 0.5 * r * r;
    }
    const Vec lp = token_logprobs(spec, theta, ex);
    return -lp.mean();
}

Vec grad(const ModelSpec& spec, const Vec& theta, const Example& ex) {
    check_theta(spec, theta);
    if (spec.is_logistic()) {
        const auto& m = spec.logistic_spec();
        const DenseExample& d = dense_of(ex);
        const double s = logistic_score(m, theta, d);
        return (sigmoid(s) - d.y) * d.x + m.ridge * theta;
    }
    if (spec.is_linear()) {
        const DenseExample& d = dense_of(ex);
        const Vec psi = spec.linear_spec().map->apply(d.x);
        const double r = d.y - psi.dot(theta);
        return -r * psi;
    }
    const auto& m = spec.token_spec();
    const TokenExample& t = token_of(ex);
    const Mat logp = token_position_logprobs(m, theta, t);
    const Vec ebar = token_detail::mean_one_hot(t, m.vocab);
    const TokenView view{m.vocab, theta};
    const int T = t.length();
    const double invT = 1.0 / static_cast<double>(T);

    Vec g = Vec::Zero(theta.size());
    for (int pos = 0; pos < T; ++pos) {
        const int row = token_detail::prev_row(t, pos);
        const int target = t.output_tokens[static_cast<std::size_t>(pos)];
        for (int v = 0; v < m.vocab; ++v) {
            // d(-logp_target)/d logits_v = softmax_v - 1{v == target}
            double dv = std::exp(logp(pos, v));
            if (v == target) dv -= 1.0;
            dv *= invT;
            g[view.l_index(row, v)] += dv;
            for (int w = 0; w < m.vocab; ++w)
                if (ebar[w] != 0.0) g[view.c_index(v, w)] += dv * ebar[w];
        }
    }
    return g;
}

Mat hessian(const ModelSpec& spec, const Vec& theta, const Example& ex) {
    check_theta(spec, theta);
    const int p = spec.param_dim();
    if (p > spec.hessian_cap)
        throw DimensionCapError("hessian: p = " + std::to_string(p) +
                                " exceeds cap " + std::to_string(spec.hessian_cap));
    if (spec.is_logistic()) {
        const auto& m = spec.logistic_spec();
        const DenseExample& d = dense_of(ex);
        const double sg = sigmoid(logistic_score(m, theta, d));
        Mat h = (sg * (1.0 - sg)) * (d.x * d.x.transpose());
        h.diagonal().array() += m.ridge;
        return h;
    }
    if (spec.is_linear()) {
        const Vec psi = spec.linear_spec().map->apply(dense_of(ex).x);
        return psi * psi.transpose();
    }
    const auto& m = spec.token_spec();
    const TokenExample& t = token_of(ex);
    const Mat logp = token_position_logprobs(m, theta, t);
    const Vec ebar = token_detail::mean_one_hot(t, m.vocab);
    const TokenView view{m.vocab, theta};
    const int T = t.length();
    const double invT = 1.0 / static_cast<double>(T);
    const int V = m.vocab;

    Mat h = Mat::Zero(p, p);
    Vec s(V);
    for (int pos = 0; pos < T; ++pos) {
        const int row = token_detail::prev_row(t, pos);
        for (int v = 0; v < V; ++v) s[v] = std::exp(logp(pos, v));
        // Per-position logit Hessian A = (diag(s) - s s^T) / T, pushed through
        // the linear dependence of logits on (L[row], C).
        for (int u = 0; u < V; ++u) {
            for (int v = 0; v < V; ++v) {
                double a = -s[u] * s[v];
                if (u == v) a += s[u];
                a *= invT;
                if (a == 0.0) continue;
                h(view.l_index(row, u), view.l_index(row, v)) += a;
                for (int w = 0; w < V; ++w) {
                    if (ebar[w] == 0.0) continue;
                    const double aw = a * ebar[w];
                    h(view.l_index(row, u), view.c_index(v, w)) += aw;
                    h(view.c_index(v, w), view.l_index(row, u)) += aw;
                    for (int w2 = 0; w2 < V; ++w2)
                        if (ebar[w2] != 0.0)
                            h(view.c_index(u, w2), view.c_index(v, w)) += aw * ebar[w2];
                }
            }
        }
    }
    return h;
}

Vec token_logprobs(const ModelSpec& spec, const Vec& theta, const Example& ex) {
    if (!spec.is_token())
        throw DimensionError("token_logprobs: model family is not toy-token");
    check_theta(spec, theta);
    const TokenExample& t = token_of(ex);
    const Mat logp = token_position_logprobs(spec.token_spec(), theta, t);
    const int T = t.length();
    Vec out(T);
    for (int pos = 0; pos < T; ++pos)
        out[pos] = logp(pos, t.output_tokens[static_cast<std::size_t>(pos)]);
    return out;
}

namespace {

// Canonical evaluation order: ascending id, independent of caller order.
IdSet canonical_ids(std::span<const ExampleId> ids) {
    IdSet sorted(ids.begin(), ids.end());
    std::sort(sorted.begin(), sorted.end());
    return sorted;
}

const Example& at_id(const Dataset& data, ExampleId id) {
    if (id < 0 || static_cast<std::size_t>(id) >= data.size())
        throw IndexError("example id " + std::to_string(id) + " out of range");
    return data[static_cast<std::size_t>(id)];
}

} // namespace

double batch_risk(const ModelSpec& spec, const Vec& theta, const Dataset& data,
                  std::span<const ExampleId> ids, Exec exec) {
    if (ids.empty()) throw EmptySetError("batch_risk: empty example set");
    const IdSet order = canonical_ids(ids);
    std::vector<double> vals(order.size());
    map_indexed(exec, order.size(),
                [&](std::size_t i) { vals[i] = loss(spec, theta, at_id(data, order[i])); });
    double acc = 0.0;
    for (double v : vals) acc += v;
    return acc / static_cast<double>(order.size());
}

Vec batch_grad(const ModelSpec& spec, const Vec& theta, const Dataset& data,
               std::span<const ExampleId> ids, Exec exec) {
    if (ids.empty()) throw EmptySetError("batch_grad: empty example set");
    const IdSet order = canonical_ids(ids);
    std::vector<Vec> vals(order.size());
    map_indexed(exec, order.size(),
                [&](std::size_t i) { vals[i] = grad(spec, theta, at_id(data, order[i])); });
    Vec acc = Vec::Zero(spec.param_dim());
    for (const Vec& v : vals) acc += v;
    return acc / static_cast<double>(order.size());
}

Mat batch_hessian(const ModelSpec& spec, const Vec& theta, const Dataset& data,
                  std::span<const ExampleId> ids, Exec exec) {
    if (ids.empty()) throw EmptySetError("batch_hessian: empty example set");
    const IdSet order = canonical_ids(ids);
    std::vector<Mat> vals(order.size());
    map_indexed(exec, order.size(),
                [&](std::size_t i) { vals[i] = hessian(spec, theta, at_id(data, order[i])); });
    Mat acc = Mat::Zero(spec.param_dim(), spec.param_dim());
    for (const Mat& v : vals) acc += v;
    return acc / static_cast<double>(order.size());
}

} // namespace tov
