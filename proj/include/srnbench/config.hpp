#pragma once

#include "srnbench/errors.hpp"

namespace srnbench {

/// Tunables for the metric battery. Defaults reproduce the reference
/// two-agent benchmark scenarios; see README for the calibration notes.
struct MetricsConfig {
    double agent_radius_default = 0.5;     // m, used when the input carries no radius
    double personal_space_radius = 1.2;    // m, proxemics personal-space boundary
    double ci_sigma = 0.45;                // m, collision-index standard deviation
    double safety_zone_horizon = 3.0;      // s, zone length = speed * horizon
    double safety_zone_width_factor = 2.0; // zone width = factor * agent radius
    double encounter_sensing_range = 10.0; // m, encounter segmentation threshold
    double conflict_start_threshold = 0.0; // interaction starts when potential exceeds this
    double dt_default = 0.1;               // s

    void validate() const {
        if (!(agent_radius_default > 0.0)) throw ValidationError("agent_radius_default must be > 0");
        if (!(personal_space_radius > 0.0)) throw ValidationError("personal_space_radius must be > 0");
        if (!(ci_sigma > 0.0)) throw ValidationError("ci_sigma must be > 0");
        if (!(safety_zone_horizon > 0.0)) throw ValidationError("safety_zone_horizon must be > 0");
        if (!(safety_zone_width_factor > 0.0)) throw ValidationError("safety_zone_width_factor must be > 0");
        if (!(encounter_sensing_range > 0.0)) throw ValidationError("encounter_sensing_range must be > 0");
        if (!(conflict_start_threshold >= 0.0 && conflict_start_threshold < 1.0))
            throw ValidationError("conflict_start_threshold must be in [0, 1)");
        if (!(dt_default > 0.0)) throw ValidationError("dt_default must be > 0");
    }
};

}  // namespace srnbench
