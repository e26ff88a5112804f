#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "mcb/lattice.hpp"
#include "mcb/offspring_law.hpp"
#include "mcb/rng.hpp"
#include "mcb/site_weights.hpp"

namespace mcb {

enum class EventKind : std::uint8_t { XiWalk, EtaWalk, XiBranch, EtaBranch };

struct EventRecord {
  double time = 0.0;
  EventKind kind = EventKind::XiWalk;
  Site site{};
  Site destination{};  // walk events only
  int offspring = -1;  // branch events only
};

struct SimConfig {
  Lattice lattice = Lattice::infinite(1);
  double kappa = 1.0;
  double gamma = 1.0;
  OffspringLaw law = OffspringLaw::binary_critical();
  double horizon = 1.0;
  std::uint64_t seed = 0;
  bool record_trajectory = false;
  std::uint64_t event_cap = 1'000'000'000;

  void validate() const;  // throws std::invalid_argument on bad rates
};

// Sparse two-population configuration with cached totals, the interaction
// sum sum_x xi(x) eta(x), and per-category weighted indexes for O(log m)
// event-site selection. All caches are exact 64-bit integers maintained
// incrementally; `check_consistency` recomputes them from scratch.
class ParticleState {
 public:
  explicit ParticleState(const Lattice& lattice);

  // Constant fields theta1/theta2 on every site of a torus.
  static ParticleState constant_on_torus(const Lattice& torus,
                                         std::int64_t theta1,
                                         std::int64_t theta2);

  const Lattice& lattice() const noexcept { return lattice_; }
  double clock() const noexcept { return clock_; }
  void set_clock(double t) noexcept { clock_ = t; }

  std::int64_t xi(const Site& x) const noexcept;
  std::int64_t eta(const Site& x) const noexcept;
  std::int64_t total_xi() const noexcept { return total_xi_; }
  std::int64_t total_eta() const noexcept { return total_eta_; }
  std::int64_t interaction_sum() const noexcept { return interaction_; }

  void add_xi(const Site& x, std::int64_t delta);
  void add_eta(const Site& x, std::int64_t delta);

  // Occupied sites (nonzero entries only), unordered.
  std::vector<std::pair<Site, std::int64_t>> xi_entries() const;
  std::vector<std::pair<Site, std::int64_t>> eta_entries() const;

  // Recomputes every cache from the raw per-site counts; throws
  // std::logic_error on any mismatch. Test hook.
  void check_consistency() const;

  // Event-site selection, used by the stepper. u01 uniform in [0,1).
  Site sample_xi_site(double u01) const;
  Site sample_eta_site(double u01) const;
  Site sample_interaction_site(double u01) const;

 private:
  std::size_t slot_for(const Site& x);

  Lattice lattice_;
  double clock_ = 0.0;
  std::unordered_map<Site, std::size_t, SiteHash> slot_of_;
  std::vector<Site> site_of_;
  std::vector<std::int64_t> xi_, eta_;  // by slot
  WeightedIndex xi_weight_, eta_weight_, prod_weight_;
  std::int64_t total_xi_ = 0, total_eta_ = 0, interaction_ = 0;
};

// One Gillespie step: samples the exponential waiting time at the total rate
//
//   R = kappa (total_xi + total_eta) + 2 gamma interaction_sum,
//
// advances the clock, picks an event category proportionally to
// (kappa total_xi, kappa total_eta, gamma I, gamma I), a site proportionally
// to its weight within the category, and applies the event. Returns nullopt
// without advancing when R = 0 (both populations empty: absorbing).
std::optional<EventRecord> step(ParticleState& state, const SimConfig& config,
                                Rng& rng);

struct Trajectory {
  ParticleState state;  // state at the end of the run
  std::vector<EventRecord> events;
  std::uint64_t event_count = 0;
  std::array<std::uint64_t, 4> events_by_kind{};
  std::int64_t initial_total_xi = 0, initial_total_eta = 0;
  bool quiescent = false;
  bool event_cap_hit = false;  // diagnostic abort, partial trajectory
  // First time either population's total hit zero, if it happened.
  std::optional<double> first_extinction_time;
};

// Runs until the clock reaches config.horizon or the state goes quiescent.
// The state at the horizon is exact: the first event past the horizon is
// discarded (memorylessness makes the truncation distribution-preserving)
// and the clock is set to the horizon. Deterministic given config.seed.
Trajectory run(const SimConfig& config, ParticleState initial);

struct CoexistenceResult {
  bool xi_alive = false;
  bool eta_alive = false;
  std::optional<double> extinction_time;
  bool event_cap_hit = false;
};

// Reports whether both populations are alive at the horizon. Once either
// total hits zero no branch event can ever fire again, so totals freeze and
// the trial returns early with the exact answer.
CoexistenceResult coexistence_trial(const SimConfig& config,
                                    ParticleState initial, double horizon);

struct TotalMassPoint {
  double time = 0.0;
  std::int64_t xi_total = 0;
  std::int64_t eta_total = 0;
};

// Piecewise-constant series of the two total masses, changing only at
// branch events. Requires a recorded trajectory.
std::vector<TotalMassPoint> total_mass_series(const Trajectory& trajectory);

}  // namespace mcb
