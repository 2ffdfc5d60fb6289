#pragma once

#include <chrono>
#include <optional>
#include <string_view>
#include <vector>

namespace gsparse {

/// Pipeline phases of a sparsification run. The last two are reserved for
/// language bindings that convert host-framework arrays at the boundary.
enum class Phase {
  kDatasetLoad,
  kToInternal,
  kEdgeToAdjacency,
  kSparsification,
  kExport,
  kOther,
  kBindingIngress,
  kBindingEgress,
};

std::string_view phase_name(Phase phase);
/// Throws kValidation for unknown names.
Phase parse_phase(std::string_view name);

struct PhaseDuration {
  Phase phase = Phase::kOther;
  std::chrono::milliseconds duration{0};

  friend bool operator==(const PhaseDuration&, const PhaseDuration&) = default;
};

/// Millisecond-resolution phase decomposition of one run. Phases appear in
/// the order they were first entered; `other` is always last and equals the
/// unattributed remainder of `total`.
struct TimingBreakdown {
  std::vector<PhaseDuration> phases;
  std::chrono::milliseconds total{0};

  std::chrono::milliseconds of(Phase phase) const;
  double seconds(Phase phase) const { return of(phase).count() / 1000.0; }

  friend bool operator==(const TimingBreakdown&, const TimingBreakdown&) = default;
};

/// Wall-clock recorder for non-overlapping phases. Opening a phase while
/// another is open throws std::logic_error.
class PhaseTimer {
 public:
  using Clock = std::chrono::steady_clock;

  PhaseTimer() : started_(Clock::now()) {}

  void start(Phase phase);
  void stop();

  /// Attributes a duration measured outside this timer's lifetime (e.g. a
  /// load done earlier) to `phase`; it also extends the total.
  void add(Phase phase, Clock::duration elapsed);

  template <class F>
  decltype(auto) measure(Phase phase, F&& body) {
    start(phase);
    struct Closer {
      PhaseTimer* timer;
      ~Closer() {
        if (timer->open_) timer->stop();
      }
    } closer{this};
    return std::forward<F>(body)();
  }

  bool is_open() const noexcept { return open_.has_value(); }

  /// Snapshot: floors each phase and the elapsed total to milliseconds, then
  /// appends `other` so that the phases sum to the total.
  TimingBreakdown finish() const;

 private:
  struct Accumulated {
    Phase phase;
    Clock::duration elapsed;
  };

  void accumulate(Phase phase, Clock::duration elapsed);

  Clock::time_point started_;
  Clock::duration external_{0};
  std::optional<Phase> open_;
  Clock::time_point open_since_{};
  std::vector<Accumulated> phases_;
};

}  // namespace gsparse
