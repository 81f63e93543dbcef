#pragma once

// Regeneration of the five classification tables as csv, and line diffs
// against the transcribed copies under data/tables/.
//
//   1  (n, q, I), Phi*_n(q) <= n^4, 3 <= n <= 18, n != 6
//   2  prime powers q <= 5000 with Phi*_2(q) <= 16
//   3  (q, I), Phi*_6(q) <= 6^4
//   4  (n, q, I), Phi*_n(q) <= n^4, n >= 19
//   5  (n, q, I, c0, c1), I inside {1,1,1,2,3,4}

#include "phistar/records.hpp"

#include <filesystem>
#include <fstream>

namespace phistar {

struct TableSources {
    std::optional<PairSet> phi_star_n4;          // Phi*_n(q) <= n^4, n >= 3
    std::optional<PhiStarN2Sets> phi_star_n2;    // Phi*_2(q) <= 16, B = 5000
    std::optional<std::vector<ClassificationRow>> restricted;
};

inline constexpr std::string_view table_titles[] = {
    "",
    "# table 1: (n,q,I) with Phi*_n(q) <= n^4 and 3 <= n <= 18, n != 6",
    "# table 2: prime powers q <= 5000 with Phi*_2(q) <= 2^4",
    "# table 3: (q,I) with Phi*_6(q) <= 6^4",
    "# table 4: (n,q,I) with Phi*_n(q) <= n^4 and n >= 19",
    "# table 5: (n,q,I,c0,c1) with I inside {1,1,1,2,3,4}; c0,c1 only for n >= 4",
};

namespace detail {

inline std::string cell(const PpdFactorization& f) { return multiset_notation(f, ";"); }

inline void require_table_id(int id) {
    if (id < 1 || id > 5) throw std::invalid_argument("table id must be 1..5, got " + std::to_string(id));
}

}  // namespace detail

/// Computes whatever table `id` needs and is not already in `src`.
inline void fill_sources(int id, TableSources& src, const EnumerateOptions& opts = {}) {
    detail::require_table_id(id);
    if ((id == 1 || id == 3 || id == 4) && !src.phi_star_n4) src.phi_star_n4 = enumerate_phi_star_bounded(1, 4, opts);
    if (id == 2 && !src.phi_star_n2) src.phi_star_n2 = enumerate_phi_star_n2(1, 4, 5000, opts);
    if (id == 5 && !src.restricted) src.restricted = classify_restricted_shape(opts);
}

inline std::string render_table(int id, const TableSources& src) {
    detail::require_table_id(id);
    std::ostringstream out;
    out << table_titles[id] << '\n';
    auto need = [](const auto& opt) -> const auto& {
        if (!opt) throw std::logic_error("render_table: source data missing");
        return *opt;
    };
    switch (id) {
        case 1:
        case 3:
        case 4: {
            out << (id == 3 ? "q,I" : "n,q,I") << '\n';
            for (const PairRow& row : need(src.phi_star_n4).rows) {
                const bool keep = id == 1 ? (row.n <= 18 && row.n != 6) : id == 3 ? row.n == 6 : row.n >= 19;
                if (!keep) continue;
                if (id != 3) out << row.n << ',';
                out << row.q.value().get_str() << ',' << detail::cell(need(row.factorization)) << '\n';
            }
            break;
        }
        case 2: {
            out << "q,power\n";
            for (const PairRow& row : need(src.phi_star_n2).merged()) {
                out << row.q.value().get_str() << ',' << row.q.base().get_str();
                if (row.q.exponent() > 1) out << '^' << row.q.exponent();
                out << '\n';
            }
            break;
        }
        case 5: {
            out << "n,q,I,c0,c1\n";
            for (const ClassificationRow& row : need(src.restricted)) {
                out << row.n << ',' << row.q.value().get_str() << ',' << detail::cell(row.factorization) << ',';
                if (row.c0) out << *row.c0;
                out << ',';
                if (row.c1) out << *row.c1;
                out << '\n';
            }
            break;
        }
    }
    return out.str();
}

inline std::string render_table(int id, const EnumerateOptions& opts = {}) {
    TableSources src;
    fill_sources(id, src, opts);
    return render_table(id, src);
}

inline std::filesystem::path golden_table_path(const std::filesystem::path& dir, int id) {
    return dir / ("table" + std::to_string(id) + ".csv");
}

inline std::optional<std::string> read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Data lines: '#' comments and blank lines dropped, trailing CR stripped.
inline std::vector<std::string> data_lines(std::string_view text) {
    std::vector<std::string> out;
    for (auto& line : detail::split(text, '\n')) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        out.push_back(std::move(line));
    }
    return out;
}

struct TableDiff {
    bool match = true;
    /// "-" lines only in the golden file, "+" lines only in the regenerated one.
    std::vector<std::string> lines;
};

/// Line diff by longest common subsequence; tables are a few hundred lines.
inline TableDiff diff_tables(std::string_view golden, std::string_view regenerated) {
    const auto a = data_lines(golden);
    const auto b = data_lines(regenerated);
    std::vector<std::vector<std::uint32_t>> lcs(a.size() + 1, std::vector<std::uint32_t>(b.size() + 1));
    for (std::size_t i = a.size(); i-- > 0;)
        for (std::size_t j = b.size(); j-- > 0;)
            lcs[i][j] = a[i] == b[j] ? lcs[i + 1][j + 1] + 1 : std::max(lcs[i + 1][j], lcs[i][j + 1]);
    TableDiff out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (i < a.size() && j < b.size() && a[i] == b[j]) {
            ++i;
            ++j;
        } else if (j < b.size() && (i == a.size() || lcs[i][j + 1] >= lcs[i + 1][j])) {
            out.lines.push_back("+ " + b[j++]);
        } else {
            out.lines.push_back("- " + a[i++]);
        }
    }
    out.match = out.lines.empty();
    return out;
}

}  // namespace phistar
