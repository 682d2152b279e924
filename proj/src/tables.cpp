#include "legseq/tables.hpp"

#include "legseq/error.hpp"
#include "legseq/measures.hpp"
#include "legseq/poly_parse.hpp"

namespace legseq::tables {

const std::vector<TableSpec>& reference_tables()
{
    static const std::vector<TableSpec> tables{
        {1,
         "x^2 + 1",
         "x^2 + 3x + 1",
         "x^3 - 1",
         {{2003, {50, 55, 53, 59, 177, 182, 136, 122}},
          {3001, {51, 108, 129, 60, 174, 194, 138, 183}},
          {4001, {139, 151, 102, 151, 247, 273, 200, 192}},
          {5003, {67, 86, 90, 92, 348, 264, 190, 269}},
          {6007, {106, 84, 97, 116, 292, 348, 274, 237}}}},
        {2,
         "x^2 + x + 1",
         "x^3 - x + 1",
         "x^4 + x - 1",
         {{2003, {48, 66, 72, 56, 169, 136, 139, 117}},
          {3001, {75, 133, 51, 184, 203, 147, 152, 172}},
          {4001, {187, 45, 192, 110, 266, 189, 206, 159}},
          {5003, {72, 101, 81, 79, 274, 209, 220, 195}},
          {6007, {147, 124, 131, 104, 294, 211, 204, 226}}}},
        {3,
         "x^4 - 1",
         "x^6 - 4x^3 + 3",
         "x^3 - 6x^2 + 15x - 14",
         {{2003, {51, 47, 53, 54, 178, 121, 164, 105}},
          {3001, {186, 80, 132, 146, 254, 181, 171, 190}},
          {4001, {212, 98, 54, 170, 217, 210, 171, 200}},
          {5003, {62, 69, 84, 70, 281, 165, 183, 244}},
          {6007, {88, 149, 130, 74, 293, 192, 173, 231}}}},
        {4,
         "x^2 - 1",
         "x^3 + x^2 + 1",
         "x^4 + x^3 + 1",
         {{2003, {35, 64, 55, 62, 201, 126, 125, 132}},
          {3001, {120, 62, 78, 94, 206, 178, 157, 166}},
          {4001, {198, 185, 118, 109, 236, 187, 225, 213}},
          {5003, {74, 77, 79, 83, 276, 223, 233, 202}},
          {6007, {126, 83, 142, 115, 348, 226, 242, 268}}}},
    };
    return tables;
}

const TableSpec& reference_table(int id)
{
    for (const auto& t : reference_tables())
        if (t.id == id)
            return t;
    throw Error("no example " + std::to_string(id) + " (expected 1..4)");
}

PolyTriple example_triple(const TableSpec& spec, std::uint64_t p)
{
    const ff::PrimeModulus m(p);
    return PolyTriple(ff::parse_poly(spec.f, m), ff::parse_poly(spec.g, m), ff::parse_poly(spec.h, m));
}

RowSequences row_sequences(const TableSpec& spec, std::uint64_t p)
{
    const auto t = example_triple(spec, p);
    return {construct_single(t.f), construct_single(t.g), construct_single(t.h), construct_triple(t)};
}

TableRow regenerate_row(const TableSpec& spec, std::uint64_t p)
{
    const auto s = row_sequences(spec, p);
    const BinarySequence* seqs[] = {&s.f, &s.g, &s.h, &s.fgh};
    TableRow row;
    row.p = p;
    for (std::size_t i = 0; i < 4; ++i) {
        row.values[i] = measures::well_distribution(*seqs[i]).value;
        row.values[i + 4] = measures::correlation(*seqs[i], 2).value;
    }
    return row;
}

} // namespace legseq::tables
