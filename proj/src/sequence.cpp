#include "legseq/sequence.hpp"

#include "legseq/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

namespace legseq {

BinarySequence::BinarySequence(std::vector<std::int8_t> values, SequenceMeta meta)
    : values_(std::move(values)), meta_(std::move(meta))
{
    for (auto v : values_)
        if (v != 1 && v != -1)
            throw Error("sequence entries must be -1 or +1");
}

BinarySequence BinarySequence::negated() const
{
    std::vector<std::int8_t> out(values_);
    for (auto& v : out)
        v = static_cast<std::int8_t>(-v);
    return BinarySequence(std::move(out), meta_);
}

BinarySequence BinarySequence::reversed() const
{
    return BinarySequence(std::vector<std::int8_t>(values_.rbegin(), values_.rend()), meta_);
}

std::string BinarySequence::body() const
{
    std::string s;
    s.reserve(values_.size());
    for (auto v : values_)
        s.push_back(v > 0 ? '+' : '-');
    return s;
}

BinarySequence sequence_from_body(std::string_view body)
{
    std::vector<std::int8_t> v;
    v.reserve(body.size());
    for (char c : body) {
        if (c == '+')
            v.push_back(1);
        else if (c == '-')
            v.push_back(-1);
        else
            throw ParseError(std::string("invalid sequence character '") + c + "'");
    }
    return BinarySequence(std::move(v));
}

void write_sequence(std::ostream& os, const BinarySequence& seq)
{
    os << "#LEGSEQ v1";
    if (seq.meta().p)
        os << " p=" << *seq.meta().p;
    os << " n=" << seq.size() << '\n' << seq.body() << '\n';
}

namespace {

std::uint64_t parse_field(std::string_view token, std::string_view key)
{
    if (token.substr(0, key.size()) != key)
        throw ParseError("sequence header: expected '" + std::string(key) + "', got '" + std::string(token) + "'");
    auto digits = token.substr(key.size());
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
        throw ParseError("sequence header: bad number in '" + std::string(token) + "'");
    return v;
}

} // namespace

BinarySequence read_sequence(std::istream& is)
{
    std::string header;
    if (!std::getline(is, header))
        throw ParseError("sequence file is empty");
    std::istringstream hs(header);
    std::vector<std::string> tokens{std::istream_iterator<std::string>(hs), {}};
    if (tokens.size() < 3 || tokens.size() > 4 || tokens[0] != "#LEGSEQ" || tokens[1] != "v1")
        throw ParseError("sequence header must be '#LEGSEQ v1 [p=<p>] n=<N>'");
    SequenceMeta meta;
    meta.construction = "file";
    if (tokens.size() == 4)
        meta.p = parse_field(tokens[2], "p=");
    const auto n = parse_field(tokens.back(), "n=");

    std::string body;
    if (!std::getline(is, body))
        throw ParseError("sequence file has no body line");
    if (body.size() != n)
        throw ParseError("sequence body length " + std::to_string(body.size()) + " does not match n=" +
                         std::to_string(n));
    if (n == 0)
        throw ParseError("sequence must be non-empty");
    std::string rest;
    while (std::getline(is, rest))
        if (!rest.empty())
            throw ParseError("unexpected content after sequence body");

    auto seq = sequence_from_body(body);
    seq.meta() = std::move(meta);
    return seq;
}

void save_sequence(const std::string& path, const BinarySequence& seq)
{
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw Error("cannot open for writing: " + path);
    write_sequence(os, seq);
    if (!os)
        throw Error("write failed: " + path);
}

BinarySequence load_sequence(const std::string& path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw Error("cannot open: " + path);
    return read_sequence(is);
}

} // namespace legseq
