#pragma once

#include <string>
#include <vector>

#include "numeric_set.hpp"

namespace unref {

/// Young diagram in English notation: weakly decreasing row lengths, row 1 on
/// top.
class YoungDiagram {
 public:
  static YoungDiagram from_rows(std::vector<Part> rows);

  const std::vector<Part>& rows() const { return rows_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  Part cell_count() const;

  /// #C_j (1-based column index).
  Part column_height(Part j) const;
  bool has_cell(int i, Part j) const {
    return i >= 1 && i <= row_count() && j >= 1 && j <= rows_[i - 1];
  }

  YoungDiagram conjugate() const;
  bool is_self_conjugate() const;

  bool operator==(const YoungDiagram&) const = default;

 private:
  YoungDiagram() = default;
  std::vector<Part> rows_;
};

/// Hook lengths h_{i,j} = arm + leg + 1 for every cell, plus column heights.
struct HookGrid {
  std::vector<std::vector<Part>> hooks;  // hooks[i-1][j-1]
  std::vector<Part> column_heights;      // column_heights[j-1]
  Part at(int i, Part j) const { return hooks[i - 1][static_cast<std::size_t>(j - 1)]; }
  std::vector<Part> first_column() const;
};

HookGrid hook_grid(const YoungDiagram& y);

/// Keith-Nath transformation. Row i (top-down) counts the members of S lying
/// strictly below the i-th largest gap. Errors with NoGaps on the full set.
YoungDiagram kn_transform(const NumericalSet& s);

/// Inverse transformation by walking the boundary path of the diagram: east
/// steps are members, north steps are gaps.
NumericalSet kn_inverse(const YoungDiagram& y);

/// Structural probe of the quasi-symmetric shape: z is the column index with
/// first-row hook n-2, the extra column C_{z+1} carries hooks that are half
/// the diagonal ones.
struct QuasiSymmetricProfile {
  Part z = 0;
  std::vector<Part> extra_column_hooks;  // h_{i,z+1} for i = 2..z, top-down
  std::vector<Part> diagonal_hooks;      // h_{i,i} for i = 1..z
};

/// NoZColumn when no first-row hook equals n-2; ShapeMismatch when the column
/// or doubling structure is absent.
QuasiSymmetricProfile quasi_symmetric_profile(const YoungDiagram& y, Part n);

enum class RenderMode { Cells, Hooks };
enum class RenderFormat { Ascii, Svg };

std::string render(const YoungDiagram& y, RenderMode mode, RenderFormat format);

}  // namespace unref
