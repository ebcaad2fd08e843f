#pragma once

#include "difftab/differences.hpp"
#include "difftab/grid.hpp"
#include "difftab/polynomial.hpp"
#include "difftab/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace difftab {

enum class CellTag { ValueRow, Forward, Backward, Central };

std::string_view tagName(CellTag tag);

struct TableCell {
    Rational value;
    CellTag tag;
    /// Operator order: 0 in the f column, j for forward/backward cells in
    /// column j, halfRange+1-j for central cells in column j.
    unsigned order;

    friend bool operator==(const TableCell&, const TableCell&) = default;
};

/**
 * Symmetric difference table of f(x) = x^power over the grid.
 *
 * Layout (one row per grid index i, ascending; columns 0..power):
 *   column 0        f(x_i)
 *   column j <= |i| order-j forward difference at x_i on negative rows,
 *                   order-j backward difference on positive rows
 *   column j >  |i| full-step central difference of order N+1-j at x_i,
 *                   populated only while that stencil fits the grid (j <= N)
 *
 * The first central cell of each row (column |i|+1, when populated) forms
 * the emphasis mask that the printed table typesets in bold.  Cells whose
 * stencil would leave the grid are absent rather than zero.
 */
class DifferenceTable {
public:
    unsigned power() const { return power_; }
    const GridSpec& grid() const { return grid_; }
    int halfRange() const { return grid_.halfRange(); }

    /// Populated cell at (row i, column j), or empty when absent.
    const std::optional<TableCell>& cell(int i, unsigned j) const;

    bool populated(int i, unsigned j) const { return cell(i, j).has_value(); }

    /// True for the first central cell of row i (the bold position).
    bool isBold(int i, unsigned j) const;

    /// All bold positions, row-major ascending.
    std::vector<std::pair<int, unsigned>> boldMask() const;

    /// Copy with one cell's value replaced; used by what-if and mutation tests.
    DifferenceTable withCellValue(int i, unsigned j, const Rational& value) const;

private:
    friend DifferenceTable buildTable(unsigned power, const GridSpec& grid);

    DifferenceTable(unsigned power, GridSpec grid);

    std::optional<TableCell>& at(int i, unsigned j);

    unsigned power_;
    GridSpec grid_;
    std::vector<std::vector<std::optional<TableCell>>> cells_;
};

/// Builds the table of f(x) = x^power over the grid.  power >= 1.
DifferenceTable buildTable(unsigned power, const GridSpec& grid);

struct PropertyCheck {
    std::string name;
    bool passed;
    std::string detail;
};

struct DistributionReport {
    std::vector<PropertyCheck> properties;

    bool allPassed() const {
        for (const auto& p : properties) {
            if (!p.passed) {
                return false;
            }
        }
        return true;
    }
};

/**
 * Checks the structural laws of a difference table: equal positive and
 * negative row counts, absolute-value mirror symmetry about row 0, and that
 * populated cells sit exactly where the layout admits them with every
 * stencil inside the grid and the top central order saturating it.
 * Failures name the offending cell coordinate.
 */
DistributionReport verifyDistribution(const DifferenceTable& t);

/// Headerless CSV, rows ascending: i, x_i, then one field per column
/// (empty when absent).  Exact decimal or p/q text, never exponents.
std::string toCsv(const DifferenceTable& t);

/// Markdown table with the bold-mask cells emphasized as **value**.
std::string toMarkdown(const DifferenceTable& t);

/// JSON document with cell values as exact strings and explicit tags.
std::string toJson(const DifferenceTable& t);

}  // namespace difftab
