#pragma once

#include <vector>

#include "ptlocus/locus.hpp"

namespace ptlocus {

enum class EventKind { KnotCrossing, Minimum, Collision, Departure };

const char* to_string(EventKind kind);

struct TrajectoryEvent {
  EventKind kind = EventKind::KnotCrossing;
  double eps = 0.0;
  Complex lambda;
};

struct Trajectory {
  int branch = 0;
  std::vector<SpectralPoint> samples;  // strictly increasing in eps
  std::vector<TrajectoryEvent> events; // increasing in eps
};

struct TraceOptions {
  double max_step = 0.1;
  double min_step = 1e-8;
  double initial_step = 0.01;
  double fold_window = 1e-3;  // |eps - eps_fold| handled by the local fold model
  int fold_samples = 8;       // samples on each side of a fold
};

/// Follows eigenvalue n (1-based, ordering of eigenvalues()) from eps_from to
/// eps_to by predictor-corrector continuation. Real collisions are resolved
/// by a local fold model; afterwards the odd branch continues with Im > 0 and
/// the even one with Im < 0. eps_from == eps_to gives an empty trajectory.
Trajectory trace_lambda(int n, double eps_from, double eps_to, const TraceOptions& options = {});

}  // namespace ptlocus
