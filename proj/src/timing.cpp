#include "gsparse/timing.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "gsparse/error.hpp"

namespace gsparse {

namespace {

constexpr std::array<std::pair<Phase, std::string_view>, 8> kPhaseNames{{
    {Phase::kDatasetLoad, "dataset_load"},
    {Phase::kToInternal, "to_internal"},
    {Phase::kEdgeToAdjacency, "edge_to_adjacency"},
    {Phase::kSparsification, "sparsification"},
    {Phase::kExport, "export"},
    {Phase::kOther, "other"},
    {Phase::kBindingIngress, "binding_ingress"},
    {Phase::kBindingEgress, "binding_egress"},
}};

}  // namespace

std::string_view phase_name(Phase phase) {
  for (const auto& [p, name] : kPhaseNames) {
    if (p == phase) return name;
  }
  return "other";
}

Phase parse_phase(std::string_view name) {
  for (const auto& [p, n] : kPhaseNames) {
    if (n == name) return p;
  }
  throw Error(ErrorKind::kValidation, "unknown timing phase '" + std::string(name) + "'");
}

std::chrono::milliseconds TimingBreakdown::of(Phase phase) const {
  std::chrono::milliseconds sum{0};
  for (const auto& p : phases) {
    if (p.phase == phase) sum += p.duration;
  }
  return sum;
}

void PhaseTimer::start(Phase phase) {
  if (phase == Phase::kOther) throw std::logic_error("'other' is derived, not timed");
  if (open_) {
    throw std::logic_error("phase '" + std::string(phase_name(phase)) +
                           "' started while '" + std::string(phase_name(*open_)) +
                           "' is still open");
  }
  open_ = phase;
  open_since_ = Clock::now();
}

void PhaseTimer::stop() {
  if (!open_) throw std::logic_error("no phase is open");
  accumulate(*open_, Clock::now() - open_since_);
  open_.reset();
}

void PhaseTimer::add(Phase phase, Clock::duration elapsed) {
  if (phase == Phase::kOther) throw std::logic_error("'other' is derived, not timed");
  external_ += elapsed;
  accumulate(phase, elapsed);
}

void PhaseTimer::accumulate(Phase phase, Clock::duration elapsed) {
  auto it = std::find_if(phases_.begin(), phases_.end(),
                         [&](const Accumulated& a) { return a.phase == phase; });
  if (it == phases_.end()) {
    phases_.push_back({phase, elapsed});
  } else {
    it->elapsed += elapsed;
  }
}

TimingBreakdown PhaseTimer::finish() const {
  using std::chrono::floor;
  using std::chrono::milliseconds;

  TimingBreakdown out;
  milliseconds attributed{0};
  for (const auto& a : phases_) {
    const auto ms = floor<milliseconds>(a.elapsed);
    out.phases.push_back({a.phase, ms});
    attributed += ms;
  }
  // Phases are disjoint sub-intervals of (wall + external), so the floored
  // parts never exceed the floored whole.
  out.total = floor<milliseconds>(Clock::now() - started_ + external_);
  out.phases.push_back({Phase::kOther, out.total - attributed});
  return out;
}

}  // namespace gsparse
