// syndcim -- performance-aware DCIM macro compiler
// SPDX-License-Identifier: Apache-2.0

#include "syndcim/cells.hpp"

namespace syndcim {

int cell_input_count(AdderCellKind k) {
  switch (k) {
  case AdderCellKind::FullAdder: return 3;
  case AdderCellKind::HalfAdder: return 2;
  case AdderCellKind::Compressor42: return 5;
  }
  return 0;
}

int cell_output_count(AdderCellKind k) {
  switch (k) {
  case AdderCellKind::FullAdder: return 2;
  case AdderCellKind::HalfAdder: return 2;
  case AdderCellKind::Compressor42: return 3;
  }
  return 0;
}

const char *cell_name(AdderCellKind k) {
  switch (k) {
  case AdderCellKind::FullAdder: return "FA";
  case AdderCellKind::HalfAdder: return "HA";
  case AdderCellKind::Compressor42: return "CMP42";
  }
  return "?";
}

CellModel CellModel::reference() {
  constexpr double tau = 20.0;
  constexpr double none = -1.0;
  CellModel m;

  // Full adder: sum worst 2.0 tau, carry worst 1.5 tau; cin is the fast port.
  m.full_adder.delay_ps = {{
      {2.0 * tau, 1.5 * tau, none}, // a
      {2.0 * tau, 1.5 * tau, none}, // b
      {1.0 * tau, 1.0 * tau, none}, // cin
      {none, none, none},
      {none, none, none},
  }};
  m.full_adder.energy_fj = 1.0;
  m.full_adder.area_um2 = 1.0;
  m.full_adder.leakage_uw = 0.002;

  // Half adder: sum 1.0 tau, carry 0.5 tau, symmetric ports.
  m.half_adder.delay_ps = {{
      {1.0 * tau, 0.5 * tau, none},
      {1.0 * tau, 0.5 * tau, none},
      {none, none, none},
      {none, none, none},
      {none, none, none},
  }};
  m.half_adder.energy_fj = 0.5;
  m.half_adder.area_um2 = 0.6;
  m.half_adder.leakage_uw = 0.001;

  // 4-2 compressor: monolithic cell, sum worst 3.0 tau, carry 2.5 tau, cout
  // 1.5 tau. cout = MAJ(x1,x2,x3) has no path from x4/cin.
  m.compressor42.delay_ps = {{
      {3.0 * tau, 2.5 * tau, 1.5 * tau}, // x1
      {3.0 * tau, 2.5 * tau, 1.5 * tau}, // x2
      {3.0 * tau, 2.5 * tau, 1.5 * tau}, // x3
      {3.0 * tau, 2.5 * tau, none},      // x4
      {2.0 * tau, 2.0 * tau, none},      // cin
  }};
  m.compressor42.energy_fj = 1.6;
  m.compressor42.area_um2 = 1.8;
  m.compressor42.leakage_uw = 0.003;

  m.rca_carry_ps = 1.5 * tau;
  return m;
}

std::array<int, max_cell_inputs> commutative_classes(AdderCellKind k) {
  switch (k) {
  case AdderCellKind::FullAdder:
    return {0, 0, 0, -1, -1}; // sum/carry are symmetric in all three inputs
  case AdderCellKind::HalfAdder:
    return {0, 0, -1, -1, -1};
  case AdderCellKind::Compressor42:
    // cout = MAJ(x1,x2,x3) ties x1..x3 together; {x4,cin} feed only the
    // second XOR/majority layer and are interchangeable with each other.
    return {0, 0, 0, 1, 1};
  }
  return {-1, -1, -1, -1, -1};
}

} // namespace syndcim
