// syndcim -- performance-aware DCIM macro compiler
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace syndcim {

/// Adder-cell primitives used by tree synthesis. A 4-2 compressor acts as a
/// 5-3 counter: four same-weight inputs plus a chain-in, producing one sum at
/// weight k and a carry plus a chain-out at weight k+1. The chain-out is a
/// function of inputs x1..x3 only, so horizontal chains never ripple through
/// the chain-in.
enum class AdderCellKind : uint8_t {
  FullAdder,    // ports a,b,cin -> sum,carry
  HalfAdder,    // ports a,b     -> sum,carry
  Compressor42, // ports x1..x4,cin -> sum,carry,cout
};

constexpr int max_cell_inputs = 5;
constexpr int max_cell_outputs = 3;

int cell_input_count(AdderCellKind k);
int cell_output_count(AdderCellKind k);
const char *cell_name(AdderCellKind k);

/// Per-cell timing/energy/area data. delay_ps[in][out] < 0 means no
/// combinational path from that input port to that output port.
struct CellTiming {
  std::array<std::array<double, max_cell_outputs>, max_cell_inputs> delay_ps{};
  double energy_fj = 0.0;
  double area_um2 = 0.0;
  double leakage_uw = 0.0;
};

/// Cell models for every adder primitive plus the handful of scalar figures
/// (DFF, inverter, ripple-carry per-bit) the pipeline model needs.
struct CellModel {
  CellTiming full_adder;
  CellTiming half_adder;
  CellTiming compressor42;
  double dff_energy_fj = 0.25;
  double dff_area_um2 = 0.8;
  double dff_leakage_uw = 0.001;
  double rca_carry_ps = 30.0; // ripple model: RCA delay = width * rca_carry_ps

  const CellTiming &timing(AdderCellKind k) const {
    switch (k) {
    case AdderCellKind::FullAdder: return full_adder;
    case AdderCellKind::HalfAdder: return half_adder;
    case AdderCellKind::Compressor42: return compressor42;
    }
    return full_adder;
  }

  /// Normalized-unit reference model (tau = 20 ps, FA = 1 fJ / 1 um2).
  static CellModel reference();
};

/// Commutative port classes: ports within one class compute symmetric
/// functions of each other and may be freely re-bound by reorder_ports.
/// Returns a class id per input port; ports share a class iff ids match.
std::array<int, max_cell_inputs> commutative_classes(AdderCellKind k);

} // namespace syndcim
