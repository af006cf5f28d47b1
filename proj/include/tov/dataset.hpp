#pragma once

#include "tov/rng.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <filesystem>
#include <span>
#include <variant>
#include <vector>

namespace tov {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using ExampleId = std::int64_t;
using IdSet = std::vector<ExampleId>; // kept sorted ascending unless noted

struct DenseExample {
    Vec x;
    double y = 0.0; // {0,1} label for logistic, real response for linear
};

struct TokenExample {
    std::vector<int> input_tokens;  // ids in [0, V); may be empty
    std::vector<int> output_tokens; // ids in [0, V); length T >= 1
    int length() const { return static_cast<int>(output_tokens.size()); }
};

struct Example {
    ExampleId id = 0;
    std::variant<DenseExample, TokenExample> payload;

    bool is_dense() const { return std::holds_alternative<DenseExample>(payload); }
    bool is_token() const { return std::holds_alternative<TokenExample>(payload); }
    const DenseExample& dense() const { return std::get<DenseExample>(payload); }
    const TokenExample& token() const { return std::get<TokenExample>(payload); }
};

// ids are contiguous from 0 within a dataset.
using Dataset = std::vector<Example>;

// Disjoint index sets over one example universe laid out as
// [pool | validation | test]. base_u is a subset of pool.
struct Split {
    IdSet pool;
    IdSet base_u;
    IdSet validation;
    IdSet test;

    // pool \ base_u, ascending: the examples that receive scores.
    IdSet scored_set() const;
};

Split make_split(std::size_t n_pool, std::size_t m_base, std::size_t m_val,
                 std::size_t m_test, RngStream rng);

// k distinct elements of pool, uniform over k-subsets, returned ascending.
IdSet sample_without_replacement(std::span<const ExampleId> pool, std::size_t k,
                                 RngStream rng);

// Partitions token examples into n_bins contiguous groups of near-equal size
// after sorting by output length (ties by id ascending). Bin sizes differ by
// at most one; earlier bins take the extras. Returns ids per bin.
std::vector<IdSet> length_bins(std::span<const Example> examples, std::size_t n_bins);

// Near-equal partition sizes: n elements into b parts, earlier parts larger.
std::vector<std::size_t> balanced_partition_sizes(std::size_t n, std::size_t b);

bool is_sorted_unique(std::span<const ExampleId> ids);
bool contains_id(std::span<const ExampleId> ids, ExampleId id); // ids sorted
IdSet set_difference_ids(std::span<const ExampleId> a, std::span<const ExampleId> b);

// On-disk dataset format, one record per line, LF endings:
//   dense:  id,y,x_1,...,x_p
//   token:  id | in: t1 t2 ... | out: t1 ... tT
void write_dataset(const std::filesystem::path& path, const Dataset& data);
Dataset read_dataset(const std::filesystem::path& path);

// Re-ids examples to start at base_id, preserving order.
Dataset with_id_offset(Dataset data, ExampleId base_id);

} // namespace tov
