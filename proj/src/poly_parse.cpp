#include "legseq/poly_parse.hpp"

#include "legseq/error.hpp"

#include <cctype>
#include <string>

namespace legseq::ff {

namespace {

constexpr std::size_t max_exponent = 1u << 20;

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    [[nodiscard]] bool done()
    {
        skip_ws();
        return pos_ >= s_.size();
    }
    [[nodiscard]] char peek()
    {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c)
    {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }
    [[nodiscard]] bool at_digit()
    {
        return std::isdigit(static_cast<unsigned char>(peek())) != 0;
    }
    /// Reads an unsigned decimal integer reduced mod m (m == 0 means exact).
    std::uint64_t number(std::uint64_t m)
    {
        skip_ws();
        if (!at_digit())
            fail("expected a number");
        unsigned __int128 acc = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            acc = acc * 10 + static_cast<unsigned>(s_[pos_] - '0');
            if (m != 0)
                acc %= m;
            else if (acc > max_exponent)
                fail("exponent too large");
            ++pos_;
        }
        return static_cast<std::uint64_t>(acc);
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what + " in \"" +
                         std::string(s_) + "\"");
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

Poly parse_list(Cursor& cur, const PrimeModulus& p)
{
    std::vector<residue> coeffs;
    if (cur.accept(']'))
        return Poly(p, {});
    do {
        bool negative = false;
        if (cur.accept('-'))
            negative = true;
        else
            cur.accept('+');
        residue v = cur.number(p.value());
        coeffs.push_back(negative ? submod(0, v, p.value()) : v);
    } while (cur.accept(','));
    if (!cur.accept(']'))
        cur.fail("expected ']'");
    if (!cur.done())
        cur.fail("trailing characters after list");
    return Poly(p, std::move(coeffs));
}

} // namespace

Poly parse_poly(std::string_view text, const PrimeModulus& p)
{
    const auto m = p.value();
    Cursor cur(text);
    if (cur.done())
        cur.fail("empty polynomial");
    if (cur.accept('['))
        return parse_list(cur, p);

    std::vector<residue> coeffs;
    bool first = true;
    while (!cur.done()) {
        bool negative = false;
        if (cur.accept('+')) {
        } else if (cur.accept('-')) {
            negative = true;
        } else if (!first) {
            cur.fail("expected '+' or '-'");
        }
        first = false;

        residue c = 1;
        bool have_coeff = false;
        if (cur.at_digit()) {
            c = cur.number(m);
            have_coeff = true;
        }
        std::size_t e = 0;
        if (have_coeff && cur.accept('*')) {
            if (cur.peek() != 'x')
                cur.fail("expected 'x' after '*'");
        }
        if (cur.accept('x')) {
            e = 1;
            if (cur.accept('^'))
                e = cur.number(0);
        } else if (!have_coeff) {
            cur.fail("expected a term");
        }
        if (negative)
            c = submod(0, c, m);
        if (coeffs.size() <= e)
            coeffs.resize(e + 1, 0);
        coeffs[e] = addmod(coeffs[e], c, m);
    }
    return Poly(p, std::move(coeffs));
}

} // namespace legseq::ff
