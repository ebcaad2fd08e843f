#include "difftab/table.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace difftab {

std::string_view tagName(CellTag tag) {
    switch (tag) {
        case CellTag::ValueRow: return "value";
        case CellTag::Forward: return "forward";
        case CellTag::Backward: return "backward";
        case CellTag::Central: return "central";
    }
    return "?";
}

DifferenceTable::DifferenceTable(unsigned power, GridSpec grid)
    : power_(power),
      grid_(std::move(grid)),
      cells_(static_cast<std::size_t>(grid_.pointCount()),
             std::vector<std::optional<TableCell>>(power_ + 1)) {
    if (power_ < 1) {
        throw std::invalid_argument("DifferenceTable: power must be at least 1");
    }
}

const std::optional<TableCell>& DifferenceTable::cell(int i, unsigned j) const {
    if (!grid_.contains(i) || j > power_) {
        static const std::optional<TableCell> empty;
        return empty;
    }
    return cells_[static_cast<std::size_t>(i + halfRange())][j];
}

std::optional<TableCell>& DifferenceTable::at(int i, unsigned j) {
    return cells_[static_cast<std::size_t>(i + halfRange())][j];
}

bool DifferenceTable::isBold(int i, unsigned j) const {
    const auto& c = cell(i, j);
    return c.has_value() && c->tag == CellTag::Central &&
           j == static_cast<unsigned>(std::abs(i)) + 1;
}

std::vector<std::pair<int, unsigned>> DifferenceTable::boldMask() const {
    std::vector<std::pair<int, unsigned>> mask;
    for (int i = -halfRange(); i <= halfRange(); ++i) {
        for (unsigned j = 1; j <= power_; ++j) {
            if (isBold(i, j)) {
                mask.emplace_back(i, j);
            }
        }
    }
    return mask;
}

DifferenceTable DifferenceTable::withCellValue(int i, unsigned j,
                                               const Rational& value) const {
    DifferenceTable copy = *this;
    auto& c = copy.at(i, j);
    if (!c.has_value()) {
        throw std::invalid_argument("withCellValue: cell is not populated");
    }
    c->value = value;
    return copy;
}

DifferenceTable buildTable(unsigned power, const GridSpec& grid) {
    DifferenceTable t(power, grid);
    const int n = grid.halfRange();
    const Polynomial f = Polynomial::monomial(power);
    for (int i = -n; i <= n; ++i) {
        const Rational x = grid.point(i);
        const unsigned absI = static_cast<unsigned>(std::abs(i));
        t.at(i, 0) = TableCell{f(x), CellTag::ValueRow, 0};
        for (unsigned j = 1; j <= power; ++j) {
            if (j <= absI) {
                DifferenceKind kind =
                    i < 0 ? DifferenceKind::Forward : DifferenceKind::Backward;
                Rational v = nthDifference(f, {kind, j, grid.step(), x});
                CellTag tag = i < 0 ? CellTag::Forward : CellTag::Backward;
                t.at(i, j) = TableCell{std::move(v), tag, j};
            } else if (j <= static_cast<unsigned>(n)) {
                unsigned order = static_cast<unsigned>(n) + 1 - j;
                Rational v =
                    nthDifference(f, {DifferenceKind::CentralFull, order, grid.step(), x});
                t.at(i, j) = TableCell{std::move(v), CellTag::Central, order};
            }
        }
    }
    return t;
}

namespace {

std::string cellCoord(int i, unsigned j) {
    return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

PropertyCheck checkRowCounts(const DifferenceTable& t) {
    int positive = 0;
    int negative = 0;
    for (int i = -t.halfRange(); i <= t.halfRange(); ++i) {
        if (i > 0) ++positive;
        if (i < 0) ++negative;
    }
    bool ok = positive == negative;
    return {"row-count-symmetry", ok,
            ok ? std::to_string(positive) + " rows on each side of row 0"
               : "positive rows " + std::to_string(positive) + ", negative rows " +
                     std::to_string(negative)};
}

PropertyCheck checkMirror(const DifferenceTable& t) {
    for (int i = 1; i <= t.halfRange(); ++i) {
        for (unsigned j = 0; j <= t.power(); ++j) {
            const auto& neg = t.cell(-i, j);
            const auto& pos = t.cell(i, j);
            if (neg.has_value() != pos.has_value()) {
                return {"mirror-absolute-value", false,
                        "cell " + cellCoord(-i, j) + " and cell " + cellCoord(i, j) +
                            " differ in presence"};
            }
            if (neg && neg->value.abs() != pos->value.abs()) {
                return {"mirror-absolute-value", false,
                        "cell " + cellCoord(-i, j) + " = " + neg->value.str() +
                            " vs cell " + cellCoord(i, j) + " = " + pos->value.str()};
            }
        }
    }
    return {"mirror-absolute-value", true,
            "populated cells mirror about row 0 in absolute value"};
}

PropertyCheck checkStencilBounds(const DifferenceTable& t) {
    const int n = t.halfRange();
    unsigned maxCentral = 0;
    for (int i = -n; i <= n; ++i) {
        const unsigned absI = static_cast<unsigned>(std::abs(i));
        for (unsigned j = 0; j <= t.power(); ++j) {
            const auto& c = t.cell(i, j);
            bool fwdBwdColumn = j >= 1 && j <= absI;
            bool centralColumn = j >= 1 && j > absI && j <= static_cast<unsigned>(n);
            bool shouldExist = j == 0 || fwdBwdColumn || centralColumn;
            if (c.has_value() != shouldExist) {
                return {"stencil-bounds", false,
                        "cell " + cellCoord(i, j) +
                            (c.has_value() ? " populated outside the layout"
                                           : " missing from the layout")};
            }
            if (!c) {
                continue;
            }
            int lo = i;
            int hi = i;
            switch (c->tag) {
                case CellTag::ValueRow:
                    break;
                case CellTag::Forward:
                    hi = i + static_cast<int>(c->order);
                    break;
                case CellTag::Backward:
                    lo = i - static_cast<int>(c->order);
                    break;
                case CellTag::Central:
                    lo = i - static_cast<int>(c->order);
                    hi = i + static_cast<int>(c->order);
                    maxCentral = std::max(maxCentral, c->order);
                    break;
            }
            if (lo < -n || hi > n) {
                return {"stencil-bounds", false,
                        "cell " + cellCoord(i, j) + " stencil spans [" +
                            std::to_string(lo) + ", " + std::to_string(hi) +
                            "] outside the grid"};
            }
            if (c->tag == CellTag::Central && j == absI + 1 &&
                c->order != static_cast<unsigned>(n) - absI) {
                return {"stencil-bounds", false,
                        "cell " + cellCoord(i, j) + " top central order " +
                            std::to_string(c->order) + " does not saturate the grid"};
            }
        }
    }
    return {"stencil-bounds", true,
            "all stencils inside the grid; max central order " +
                std::to_string(maxCentral)};
}

}  // namespace

DistributionReport verifyDistribution(const DifferenceTable& t) {
    DistributionReport report;
    report.properties.push_back(checkRowCounts(t));
    report.properties.push_back(checkMirror(t));
    report.properties.push_back(checkStencilBounds(t));
    return report;
}

std::string toCsv(const DifferenceTable& t) {
    std::ostringstream os;
    for (int i = -t.halfRange(); i <= t.halfRange(); ++i) {
        os << i << ',' << t.grid().point(i).str();
        for (unsigned j = 0; j <= t.power(); ++j) {
            os << ',';
            if (const auto& c = t.cell(i, j)) {
                os << c->value.str();
            }
        }
        os << '\n';
    }
    return os.str();
}

std::string toMarkdown(const DifferenceTable& t) {
    const int n = t.halfRange();
    std::ostringstream os;
    os << "| i | x_i | f |";
    for (unsigned j = 1; j <= t.power(); ++j) {
        os << " (Δ,∇)^" << j << " f";
        if (j <= static_cast<unsigned>(n)) {
            os << " / δ^" << (static_cast<unsigned>(n) + 1 - j) << " f";
        }
        os << " |";
    }
    os << '\n' << "|";
    for (unsigned j = 0; j <= t.power() + 2; ++j) {
        os << " --- |";
    }
    os << '\n';
    for (int i = -n; i <= n; ++i) {
        os << "| " << i << " | " << t.grid().point(i).str() << " |";
        for (unsigned j = 0; j <= t.power(); ++j) {
            os << ' ';
            if (const auto& c = t.cell(i, j)) {
                if (t.isBold(i, j)) {
                    os << "**" << c->value.str() << "**";
                } else {
                    os << c->value.str();
                }
            }
            os << " |";
        }
        os << '\n';
    }
    return os.str();
}

std::string toJson(const DifferenceTable& t) {
    nlohmann::ordered_json doc;
    doc["power"] = t.power();
    doc["halfRange"] = t.halfRange();
    doc["step"] = t.grid().step().str();
    doc["rows"] = nlohmann::ordered_json::array();
    for (int i = -t.halfRange(); i <= t.halfRange(); ++i) {
        nlohmann::ordered_json row;
        row["i"] = i;
        row["x"] = t.grid().point(i).str();
        row["cells"] = nlohmann::ordered_json::array();
        for (unsigned j = 0; j <= t.power(); ++j) {
            if (const auto& c = t.cell(i, j)) {
                nlohmann::ordered_json cell;
                cell["value"] = c->value.str();
                cell["tag"] = std::string(tagName(c->tag));
                cell["order"] = c->order;
                cell["bold"] = t.isBold(i, j);
                row["cells"].push_back(std::move(cell));
            } else {
                row["cells"].push_back(nullptr);
            }
        }
        doc["rows"].push_back(std::move(row));
    }
    return doc.dump(2);
}

}  // namespace difftab
