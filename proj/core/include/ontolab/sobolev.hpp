#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ontolab/grid_condenser.hpp"
#include "ontolab/report.hpp"
#include "ontolab/sequence.hpp"

namespace ontolab {

/// Unit block w_i of the interpolant: the discrete harmonic function on a
/// sector grid covering S^gamma(z_i) that equals 1 on the cells of
/// Delta_1(z_i) and 0 on the sector sides, its inner edge and the cells of
/// S^gamma(z_j) for z_j in V_gamma(z_i) (zero flux across the circle). Its
/// support lies in S_i = S^gamma(z_i) minus those boxes, so blocks of
/// different points have disjoint supports.
struct SobolevBlock {
  std::size_t index = 0;
  GridPotential potential;
  double kernel_norm = 0.0;  ///< d(z_i)
  double energy = 0.0;       ///< E_i, Dirichlet energy of w_i
  double mass = 0.0;         ///< M_i, L^2 mass of w_i
  double cost() const { return kernel_norm * (energy + mass); }
};

struct SobolevBlocks {
  std::vector<SobolevBlock> blocks;
  /// C = max_i d(z_i) (E_i + M_i): energy(F) <= C sum |a_i|^2 for every data.
  double constant = 0.0;
  GridResolution resolution;
};

/// Builds the unit blocks of every point. Throws InputError when
/// Delta_1(z_i) is not contained in S_i, and ResolutionError when a block's
/// Delta_1 covers fewer than 4 cells.
SobolevBlocks sobolev_blocks(const Sequence& seq, double gamma,
                             GridResolution resolution);

/// F = sum a_i sqrt(d(z_i)) w_i block by block.
struct SobolevInterpolant {
  /// Per block: the cell values of a_i sqrt(d(z_i)) w_i on blocks[i]'s grid.
  std::vector<std::vector<double>> values;
  double energy = 0.0;  ///< W^{1,2} energy sum a_i^2 d(z_i) (E_i + M_i)
  double data_norm_sq = 0.0;
  double constant = 0.0;
};

SobolevInterpolant assemble(const SobolevBlocks& blocks, std::span<const double> data);

/// One-shot form. With verify_preconditions the sequence must be weakly
/// separated (params.delta) and pass the capacitary condition (params.k);
/// InputError otherwise. data.size() must equal seq.size().
SobolevInterpolant assemble_sobolev_interpolant(const Sequence& seq,
                                                std::span<const double> data,
                                                const CheckParams& params,
                                                GridResolution resolution,
                                                bool verify_preconditions = true,
                                                int modes_per_arc = 16);

}  // namespace ontolab
