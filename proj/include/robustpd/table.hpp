#ifndef ROBUSTPD_TABLE_HPP
#define ROBUSTPD_TABLE_HPP

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "robustpd/families.hpp"
#include "robustpd/overlap.hpp"
#include "robustpd/robust.hpp"

namespace robustpd {

struct TableRow {
    int k = 0;
    /// Exact when computed by search, otherwise the best bound interval.
    Interval value;
    bool computed = false;
    /// Best overlap-set bound; absent for k = 0 and when k+1 is below the overlap width.
    std::optional<int> overlap_bound;
    int base_bound = 0;
};

struct TableOptions {
    int max_k = 8;
    /// Rows up to this k are solved exactly; later rows come from bounds.
    int exact_up_to = 2;
    /// j -> size of a verified overlap set.
    std::map<int, int> overlap;
    SearchControl control;
};

/// Robust numbers next to their upper bounds for k = 0..max_k. Each row feeds
/// its value (or interval) into the bounds of the later rows.
inline std::vector<TableRow> reproduce_table(const Graph& g, const TableOptions& opts) {
    if (opts.max_k < 0) throw ParameterError("max_k", "must be non-negative");
    BoundContext ctx;
    ctx.gamma = gamma_p(g, opts.control).value;
    ctx.order = static_cast<int>(g.order());
    ctx.overlap = opts.overlap;
    const int gamma = *ctx.gamma;

    std::vector<TableRow> rows;
    for (int k = 0; k <= opts.max_k; ++k) {
        TableRow row;
        row.k = k;
        row.base_bound = (k + 1) * gamma;
        for (const auto& [j, size] : opts.overlap) {
            if (k < 1 || size <= j || j < gamma || k + 1 < size - j + 1) continue;
            int b = sjbound_upper(size, j, gamma, k);
            if (!row.overlap_bound || b < *row.overlap_bound) row.overlap_bound = b;
        }
        if (k <= opts.exact_up_to) {
            RobustSearchOptions search;
            search.context = ctx;
            search.control = opts.control;
            int v = min_k_rpds(g, k, search).value;
            row.value = {v, v};
            row.computed = true;
        } else {
            auto report = bounds(k, ctx);
            row.value = {report.best_lower, report.best_upper};
        }
        ctx.robust[k] = row.value;
        rows.push_back(row);
    }
    return rows;
}

/// Upper-bound table for the 6x6 grid. The overlap column uses the largest set
/// whose 3-subsets all power dominate; long_running also solves k = 3 exactly.
inline std::vector<TableRow> reproduce_table_g66(int max_k, bool long_running, const SearchControl& control = {}) {
    if (max_k < 0 || max_k > 8) throw ParameterError("max_k", "must be in 0..8");
    const auto g = build(FamilySpec::grid(6, 6));
    const auto cert = bigpds_j(g, 3, control);
    TableOptions opts;
    opts.max_k = max_k;
    opts.exact_up_to = long_running ? 3 : 2;
    opts.overlap = {{3, cert.size}};
    opts.control = control;
    return reproduce_table(g, opts);
}

/// "5", "8 or 9", or "-" when the interval is wider.
inline std::string value_cell(const Interval& v) {
    if (v.exact()) return std::to_string(v.lo);
    if (v.hi == v.lo + 1) return std::to_string(v.lo) + " or " + std::to_string(v.hi);
    return "-";
}

inline std::string render_table(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "k\trobust\toverlap bound\t(k+1)*gamma_p\n";
    for (const auto& r : rows)
        os << r.k << '\t' << value_cell(r.value) << '\t'
           << (r.overlap_bound ? std::to_string(*r.overlap_bound) : std::string("N/A")) << '\t' << r.base_bound
           << '\n';
    return os.str();
}

} // namespace robustpd

#endif
