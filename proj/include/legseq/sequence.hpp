#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace legseq {

/// Where a sequence came from. Carried into reports; never affects values.
struct SequenceMeta {
    std::optional<std::uint64_t> p;
    std::string construction; // "single", "triple", "combined", "file", ...
    std::map<std::string, std::string> polynomials; // role -> text as given
};

/// A finite sequence over {-1, +1}. Storage is 0-based; `at` is 1-based.
class BinarySequence {
public:
    BinarySequence() = default;
    explicit BinarySequence(std::vector<std::int8_t> values, SequenceMeta meta = {});

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] std::span<const std::int8_t> values() const noexcept { return values_; }
    [[nodiscard]] int at(std::size_t n) const { return values_.at(n - 1); }
    [[nodiscard]] const SequenceMeta& meta() const noexcept { return meta_; }
    SequenceMeta& meta() noexcept { return meta_; }

    [[nodiscard]] BinarySequence negated() const;
    [[nodiscard]] BinarySequence reversed() const;
    [[nodiscard]] std::string body() const; // '+'/'-' characters

    /// Value equality; metadata is ignored.
    friend bool operator==(const BinarySequence& a, const BinarySequence& b) { return a.values_ == b.values_; }

private:
    std::vector<std::int8_t> values_;
    SequenceMeta meta_;
};

/// Builds a sequence from a string of '+' and '-'.
[[nodiscard]] BinarySequence sequence_from_body(std::string_view body);

/// Text file format:
///   #LEGSEQ v1 p=<p> n=<N>     (p omitted when unknown)
///   <N characters from {+,-}>\n
void write_sequence(std::ostream& os, const BinarySequence& seq);
[[nodiscard]] BinarySequence read_sequence(std::istream& is);
void save_sequence(const std::string& path, const BinarySequence& seq);
[[nodiscard]] BinarySequence load_sequence(const std::string& path);

} // namespace legseq
