#pragma once

#include "tov/model.hpp"
#include "tov/rng.hpp"

#include <filesystem>
#include <variant>

namespace tov {

struct Schedule {
    std::vector<double> rates; // eta_1 ... eta_L, all > 0

    int epochs() const { return static_cast<int>(rates.size()); }
    void validate() const;
};

// eta_k = eta0 * (L - k + 1) / L; decays to eta0 / L at the last epoch.
Schedule linear_decay(double eta0, int epochs);
Schedule constant_schedule(double eta, int epochs);

struct FullBatch {};
struct MiniBatch {
    int batch_size = 16;
    std::uint64_t order_seed = 0;
};
using TrainMode = std::variant<FullBatch, MiniBatch>;

struct Trajectory {
    std::vector<Vec> states; // theta_0 ... theta_L
    Schedule schedule;
    TrainMode mode;

    int epochs() const { return static_cast<int>(states.size()) - 1; }
    const Vec& initial() const { return states.front(); }
    const Vec& final() const { return states.back(); }
};

// One full-batch step theta - eta_effective * batch_grad. The caller chooses
// the scaling: eta_k for the empirical epoch convention, eta*m / eps*eta*m_val
// for the two-trajectory analysis scalings. eta_effective == 0 returns theta
// unchanged (bitwise).
Vec gd_epoch(const ModelSpec& spec, const Vec& theta, const Dataset& data,
             std::span<const ExampleId> ids, double eta_effective,
             Exec exec = Exec::Parallel);

// One epoch of mini-batch SGD: ids shuffled deterministically by rng, then
// consecutive batches; a short final batch is averaged over its actual size.
Vec sgd_epoch(const ModelSpec& spec, const Vec& theta, const Dataset& data,
              std::span<const ExampleId> ids, double eta, int batch_size,
              RngStream rng, Exec exec = Exec::Parallel);

// Epoch-wise training recording every intermediate state. MiniBatch order is
// drawn from (order_seed, epoch index), so prefixes replay exactly.
Trajectory train(const ModelSpec& spec, const Vec& theta0, const Dataset& data,
                 std::span<const ExampleId> ids, const Schedule& schedule,
                 const TrainMode& mode, Exec exec = Exec::Parallel);

// Constant-compute rule: L = round(16*1024 / n_train), at least 1.
int epochs_for_budget(std::int64_t n_train);

// Textual trajectory export, one state per line: k,theta_1,...,theta_p.
void write_trajectory(const std::filesystem::path& path, const Trajectory& traj);
std::vector<Vec> read_trajectory_states(const std::filesystem::path& path);

} // namespace tov
