#pragma once

#include "legseq/constructions.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace legseq::tables {

inline constexpr std::array<std::string_view, 8> column_names{"W_f",  "W_g",  "W_h",  "W_fgh",
                                                              "C2_f", "C2_g", "C2_h", "C2_fgh"};

struct TableRow {
    std::uint64_t p = 0;
    std::array<std::int64_t, 8> values{}; // in column_names order
};

/// One published example: a polynomial triple and its measured rows.
struct TableSpec {
    int id = 0;
    std::string f, g, h;
    std::vector<TableRow> rows;
};

/// The four published examples with their expected values, primes
/// 2003, 3001, 4001, 5003, 6007.
[[nodiscard]] const std::vector<TableSpec>& reference_tables();
[[nodiscard]] const TableSpec& reference_table(int id);

/// The triple of an example over F_p.
[[nodiscard]] PolyTriple example_triple(const TableSpec& spec, std::uint64_t p);

/// Single-polynomial sequences E_f, E_g, E_h and the filtered E_{f,g,h}.
struct RowSequences {
    BinarySequence f, g, h, fgh;
};
[[nodiscard]] RowSequences row_sequences(const TableSpec& spec, std::uint64_t p);

/// Recomputes all eight measures exactly.
[[nodiscard]] TableRow regenerate_row(const TableSpec& spec, std::uint64_t p);

} // namespace legseq::tables
