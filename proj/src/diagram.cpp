#include "diagram.hpp"

#include <numeric>
#include <sstream>

namespace unref {

YoungDiagram YoungDiagram::from_rows(std::vector<Part> rows) {
  if (rows.empty()) fail(Status::Empty, "diagram needs at least one row");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 1)
      fail(Status::NonPositivePart, "row length " + std::to_string(rows[i]) + " is not positive");
    if (i > 0 && rows[i] > rows[i - 1])
      fail(Status::InvalidArgument, "row lengths must be weakly decreasing");
  }
  YoungDiagram y;
  y.rows_ = std::move(rows);
  return y;
}

Part YoungDiagram::cell_count() const {
  return std::accumulate(rows_.begin(), rows_.end(), Part{0});
}

Part YoungDiagram::column_height(Part j) const {
  // rows_ weakly decreasing: first index with rows_[i] < j
  auto it = std::lower_bound(rows_.begin(), rows_.end(), j,
                             [](Part row, Part col) { return row >= col; });
  return static_cast<Part>(it - rows_.begin());
}

YoungDiagram YoungDiagram::conjugate() const {
  std::vector<Part> cols(static_cast<std::size_t>(rows_[0]));
  for (Part j = 1; j <= rows_[0]; ++j) cols[static_cast<std::size_t>(j - 1)] = column_height(j);
  return from_rows(std::move(cols));
}

bool YoungDiagram::is_self_conjugate() const {
  if (static_cast<Part>(rows_.size()) != rows_[0]) return false;
  for (Part j = 1; j <= rows_[0]; ++j)
    if (column_height(j) != rows_[static_cast<std::size_t>(j - 1)]) return false;
  return true;
}

HookGrid hook_grid(const YoungDiagram& y) {
  const auto& rows = y.rows();
  HookGrid g;
  g.column_heights.resize(static_cast<std::size_t>(rows[0]));
  for (Part j = 1; j <= rows[0]; ++j)
    g.column_heights[static_cast<std::size_t>(j - 1)] = y.column_height(j);
  g.hooks.resize(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    g.hooks[i].resize(static_cast<std::size_t>(rows[i]));
    for (Part j = 1; j <= rows[i]; ++j) {
      const Part arm = rows[i] - j;
      const Part leg = g.column_heights[static_cast<std::size_t>(j - 1)] - static_cast<Part>(i) - 1;
      g.hooks[i][static_cast<std::size_t>(j - 1)] = arm + leg + 1;
    }
  }
  return g;
}

std::vector<Part> HookGrid::first_column() const {
  std::vector<Part> out;
  out.reserve(hooks.size());
  for (const auto& row : hooks) out.push_back(row.front());
  return out;
}

YoungDiagram kn_transform(const NumericalSet& s) {
  const auto& gaps = s.gaps();
  if (gaps.empty()) fail(Status::NoGaps, "the full set maps to the empty diagram");
  const Part genus = static_cast<Part>(gaps.size());
  std::vector<Part> rows(static_cast<std::size_t>(genus));
  // members strictly below gap g number g minus the gaps below it
  for (Part i = 1; i <= genus; ++i) {
    const Part idx = genus - i;  // 0-based index of the i-th largest gap
    rows[static_cast<std::size_t>(i - 1)] = gaps[static_cast<std::size_t>(idx)] - idx;
  }
  return YoungDiagram::from_rows(std::move(rows));
}

NumericalSet kn_inverse(const YoungDiagram& y) {
  // Boundary path from the bottom-left corner: for each k = 0..F, east if k is
  // a member, north if it is a gap. Rows are consumed bottom-up.
  const auto& rows = y.rows();
  std::vector<Part> gaps;
  Part k = 0;
  Part prev = 0;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    for (Part e = 0; e < *it - prev; ++e) ++k;  // east steps
    gaps.push_back(k);                          // north step
    ++k;
    prev = *it;
  }
  return NumericalSet::from_gaps(std::move(gaps));
}

QuasiSymmetricProfile quasi_symmetric_profile(const YoungDiagram& y, Part n) {
  const HookGrid g = hook_grid(y);
  Part z = -1;
  for (Part j = 1; j <= y.rows()[0]; ++j) {
    if (g.at(1, j) == n - 2) {
      z = j - 1;
      break;
    }
  }
  if (z < 0) fail(Status::NoZColumn, "no first-row hook equals n-2");
  if (z == 0) fail(Status::ShapeMismatch, "the n-2 hook sits in the first column");
  if (y.column_height(z + 1) != z)
    fail(Status::ShapeMismatch, "column after the main square does not have z cells");
  QuasiSymmetricProfile profile;
  profile.z = z;
  for (Part i = 2; i <= z; ++i)
    profile.extra_column_hooks.push_back(g.at(static_cast<int>(i), z + 1));
  for (Part i = 1; i <= z; ++i) {
    if (!y.has_cell(static_cast<int>(i), i))
      fail(Status::ShapeMismatch, "main diagonal shorter than z");
    profile.diagonal_hooks.push_back(g.at(static_cast<int>(i), i));
  }
  for (Part i = 1; i <= z; ++i) {
    if (profile.diagonal_hooks[static_cast<std::size_t>(i - 1)] !=
        2 * g.at(static_cast<int>(i), z + 1))
      fail(Status::ShapeMismatch, "diagonal hook is not twice the extra-column hook");
  }
  return profile;
}

namespace {

std::string render_ascii(const YoungDiagram& y, RenderMode mode) {
  const HookGrid g = mode == RenderMode::Hooks ? hook_grid(y) : HookGrid{};
  std::string out;
  for (int i = 1; i <= y.row_count(); ++i) {
    for (Part j = 1; j <= y.rows()[static_cast<std::size_t>(i - 1)]; ++j) {
      out += '[';
      out += mode == RenderMode::Hooks ? std::to_string(g.at(i, j)) : std::string(" ");
      out += ']';
    }
    if (i < y.row_count()) out += '\n';
  }
  return out;
}

std::string render_svg(const YoungDiagram& y, RenderMode mode) {
  constexpr Part cell = 40;
  const HookGrid g = mode == RenderMode::Hooks ? hook_grid(y) : HookGrid{};
  const Part width = y.rows()[0] * cell;
  const Part height = static_cast<Part>(y.row_count()) * cell;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  for (int i = 1; i <= y.row_count(); ++i) {
    for (Part j = 1; j <= y.rows()[static_cast<std::size_t>(i - 1)]; ++j) {
      const Part x = (j - 1) * cell;
      const Part yy = static_cast<Part>(i - 1) * cell;
      svg << "  <rect x=\"" << x << "\" y=\"" << yy << "\" width=\"" << cell
          << "\" height=\"" << cell << "\" fill=\"none\" stroke=\"black\"/>\n";
      if (mode == RenderMode::Hooks) {
        svg << "  <text x=\"" << x + cell / 2 << "\" y=\"" << yy + cell / 2
            << "\" font-size=\"14\" text-anchor=\"middle\" dominant-baseline=\"central\">"
            << g.at(i, j) << "</text>\n";
      }
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace

std::string render(const YoungDiagram& y, RenderMode mode, RenderFormat format) {
  return format == RenderFormat::Ascii ? render_ascii(y, mode) : render_svg(y, mode);
}

}  // namespace unref
