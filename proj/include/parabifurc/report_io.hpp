#pragma once

#include <ostream>
#include <string>

#include "parabifurc/experiments.hpp"
#include "parabifurc/planar.hpp"
#include "parabifurc/sequences.hpp"

namespace parabifurc {

// All numeric output uses 17 significant decimal digits, no locale.
std::string fmt17(double x);

/// CSV columns: k, eps_k, t_k, a_k
void write_sequence_csv(std::ostream& os, const EpsilonSequence& seq, const TraceSequence& ts);

/// Flat key=value list.
void write_condition_report(std::ostream& os, const ConditionReport& rep);

/// CSV columns: N, err, N_err, slope_running (running least-squares slope over
/// the rows so far; nan for the first row).
void write_convergence_csv(std::ostream& os, const ConvergenceReport& rep);

/// Structured text document with full provenance (family, params, grid,
/// precision, seed).
void write_convergence_structured(std::ostream& os, const ConvergenceReport& rep,
                                  std::optional<std::uint64_t> seed);

/// CSV columns: n, pre_iterates, orbit_len, dev_z, dev_w, dev_max
void write_planar_csv(std::ostream& os, const PlanarOrbitReport& rep);

void write_planar_structured(std::ostream& os, const PlanarOrbitReport& rep);

}  // namespace parabifurc
