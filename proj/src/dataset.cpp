#include "tov/dataset.hpp"

#include "tov/errors.hpp"
#include "tov/io.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tov {

IdSet Split::scored_set() const {
    return set_difference_ids(pool, base_u);
}

Split make_split(std::size_t n_pool, std::size_t m_base, std::size_t m_val,
                 std::size_t m_test, RngStream rng) {
    if (n_pool < 1 || m_base < 1 || m_val < 1 || m_test < 1)
        throw SizeError("make_split: all counts must be >= 1");
    if (m_base > n_pool)
        throw SizeError("make_split: m_base (" + std::to_string(m_base) +
                        ") exceeds n_pool (" + std::to_string(n_pool) + ")");

    Split s;
    s.pool.resize(n_pool);
    std::iota(s.pool.begin(), s.pool.end(), ExampleId{0});
    s.validation.resize(m_val);
    std::iota(s.validation.begin(), s.validation.end(), static_cast<ExampleId>(n_pool));
    s.test.resize(m_test);
    std::iota(s.test.begin(), s.test.end(), static_cast<ExampleId>(n_pool + m_val));
    s.base_u = sample_without_replacement(s.pool, m_base, rng.substream("base-u"));
    return s;
}

IdSet sample_without_replacement(std::span<const ExampleId> pool, std::size_t k,
                                 RngStream rng) {
    if (k > pool.size())
        throw SizeError("sample_without_replacement: k (" + std::to_string(k) +
                        ") exceeds pool size (" + std::to_string(pool.size()) + ")");
    // Partial Fisher-Yates over a copy; uniform over k-subsets.
    IdSet work(pool.begin(), pool.end());
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.next_below(work.size() - i));
        std::swap(work[i], work[j]);
    }
    work.resize(k);
    std::sort(work.begin(), work.end());
    return work;
}

std::vector<std::size_t> balanced_partition_sizes(std::size_t n, std::size_t b) {
    std::vector<std::size_t> sizes(b, n / b);
    for (std::size_t i = 0; i < n % b; ++i) ++sizes[i];
    return sizes;
}

std::vector<IdSet> length_bins(std::span<const Example> examples, std::size_t n_bins) {
    if (n_bins < 1) throw SizeError("length_bins: n_bins must be >= 1");
    if (examples.empty()) throw SizeError("length_bins: examples must be non-empty");

    std::vector<std::pair<int, ExampleId>> order; // (length, id)
    order.reserve(examples.size());
    for (const Example& ex : examples) {
        if (!ex.is_token())
            throw DimensionError("length_bins: example " + std::to_string(ex.id) +
                                 " is not a token example");
        order.emplace_back(ex.token().length(), ex.id);
    }
    std::sort(order.begin(), order.end());

    const auto sizes = balanced_partition_sizes(order.size(), n_bins);
    std::vector<IdSet> bins(n_bins);
    std::size_t pos = 0;
    for (std::size_t b = 0; b < n_bins; ++b) {
        bins[b].reserve(sizes[b]);
        for (std::size_t i = 0; i < sizes[b]; ++i) bins[b].push_back(order[pos++].second);
        std::sort(bins[b].begin(), bins[b].end());
    }
    return bins;
}

bool is_sorted_unique(std::span<const ExampleId> ids) {
    for (std::size_t i = 1; i < ids.size(); ++i)
        if (ids[i] <= ids[i - 1]) return false;
    return true;
}

bool contains_id(std::span<const ExampleId> ids, ExampleId id) {
    return std::binary_search(ids.begin(), ids.end(), id);
}

IdSet set_difference_ids(std::span<const ExampleId> a, std::span<const ExampleId> b) {
    IdSet out;
    out.reserve(a.size());
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

namespace {

std::string render_dense(const Example& ex) {
    const DenseExample& d = ex.dense();
    std::string line = format_int(ex.id);
    line += ',';
    line += format_real(d.y);
    for (Eigen::Index i = 0; i < d.x.size(); ++i) {
        line += ',';
        line += format_real(d.x[i]);
    }
    return line;
}

std::string render_token(const Example& ex) {
    const TokenExample& t = ex.token();
    std::string line = format_int(ex.id);
    line += " | in:";
    for (int v : t.input_tokens) {
        line += ' ';
        line += std::to_string(v);
    }
    line += " | out:";
    for (int v : t.output_tokens) {
        line += ' ';
        line += std::to_string(v);
    }
    return line;
}

std::vector<int> parse_token_ids(std::string_view body) {
    std::vector<int> out;
    std::istringstream in{std::string(body)};
    long long v;
    while (in >> v) out.push_back(static_cast<int>(v));
    return out;
}

Example parse_line(const std::string& line) {
    Example ex;
    if (line.find('|') != std::string::npos) {
        const auto parts = split_on(line, '|');
        if (parts.size() != 3)
            throw IoError("token record needs 'id | in: ... | out: ...': " + line);
        ex.id = parse_int(parts[0]);
        const std::string in_part = trim(parts[1]);
        const std::string out_part = trim(parts[2]);
        if (in_part.rfind("in:", 0) != 0 || out_part.rfind("out:", 0) != 0)
            throw IoError("token record needs 'in:'/'out:' markers: " + line);
        TokenExample t;
        t.input_tokens = parse_token_ids(in_part.substr(3));
        t.output_tokens = parse_token_ids(out_part.substr(4));
        if (t.output_tokens.empty())
            throw IoError("token record has empty output: " + line);
        ex.payload = std::move(t);
    } else {
        const auto parts = split_on(line, ',');
        if (parts.size() < 3)
            throw IoError("dense record needs id,y,x_1,...: " + line);
        ex.id = parse_int(parts[0]);
        DenseExample d;
        d.y = parse_real(parts[1]);
        d.x.resize(static_cast<Eigen::Index>(parts.size() - 2));
        for (std::size_t i = 2; i < parts.size(); ++i)
            d.x[static_cast<Eigen::Index>(i - 2)] = parse_real(parts[i]);
        ex.payload = std::move(d);
    }
    return ex;
}

} // namespace

void write_dataset(const std::filesystem::path& path, const Dataset& data) {
    std::string text;
    for (const Example& ex : data) {
        text += ex.is_dense() ? render_dense(ex) : render_token(ex);
        text += '\n';
    }
    write_text_file(path, text);
}

Dataset read_dataset(const std::filesystem::path& path) {
    Dataset data;
    std::istringstream in(read_text_file(path));
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        data.push_back(parse_line(line));
    }
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (data[i].id != static_cast<ExampleId>(i))
            throw IoError(path.string() + ": ids must be contiguous from 0, got " +
                          std::to_string(data[i].id) + " at line " + std::to_string(i));
    }
    return data;
}

Dataset with_id_offset(Dataset data, ExampleId base_id) {
    for (std::size_t i = 0; i < data.size(); ++i)
        data[i].id = base_id + static_cast<ExampleId>(i);
    return data;
}

} // namespace tov
