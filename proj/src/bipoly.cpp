#include "dpb/bipoly.hpp"

#include <cctype>
#include <vector>

#include "dpb/error.hpp"

namespace dpb {

BiPoly::BiPoly(const Rat& c)
{
    if (!c.is_zero()) {
        terms_.emplace(Exponent{0, 0}, c);
    }
}

BiPoly BiPoly::monomial(const Rat& c, std::uint32_t lambda_deg, std::uint32_t x_deg)
{
    BiPoly p;
    p.add_term(c, lambda_deg, x_deg);
    return p;
}

void BiPoly::add_term(const Rat& c, std::uint32_t lambda_deg, std::uint32_t x_deg)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(Exponent{x_deg, lambda_deg}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

bool BiPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

bool BiPoly::is_lambda_free() const
{
    for (const auto& [e, c] : terms_) {
        if (e.lambda_deg != 0) {
            return false;
        }
    }
    return true;
}

bool BiPoly::is_x_free() const { return x_degree() == 0; }

std::uint32_t BiPoly::x_degree() const
{
    // Keys are ordered by x-degree first.
    return terms_.empty() ? 0 : terms_.rbegin()->first.x_deg;
}

std::uint32_t BiPoly::lambda_degree() const
{
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) {
        d = std::max(d, e.lambda_deg);
    }
    return d;
}

Rat BiPoly::coefficient(std::uint32_t lambda_deg, std::uint32_t x_deg) const
{
    auto it = terms_.find(Exponent{x_deg, lambda_deg});
    return it == terms_.end() ? Rat{} : it->second;
}

BiPoly BiPoly::x_coefficient(std::uint32_t i) const
{
    BiPoly out;
    for (auto it = terms_.lower_bound(Exponent{i, 0}); it != terms_.end() && it->first.x_deg == i; ++it) {
        out.terms_.emplace(Exponent{0, it->first.lambda_deg}, it->second);
    }
    return out;
}

std::optional<Rat> BiPoly::constant_value() const
{
    if (!is_constant()) {
        return std::nullopt;
    }
    return terms_.empty() ? Rat{} : terms_.begin()->second;
}

BiPoly& BiPoly::operator+=(const BiPoly& o)
{
    for (const auto& [e, c] : o.terms_) {
        add_term(c, e.lambda_deg, e.x_deg);
    }
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o)
{
    for (const auto& [e, c] : o.terms_) {
        add_term(-c, e.lambda_deg, e.x_deg);
    }
    return *this;
}

BiPoly& BiPoly::operator*=(const Rat& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) {
        v *= c;
    }
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b)
{
    BiPoly out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out.add_term(ca * cb, ea.lambda_deg + eb.lambda_deg, ea.x_deg + eb.x_deg);
        }
    }
    return out;
}

BiPoly BiPoly::operator-() const
{
    BiPoly out = *this;
    for (auto& [e, v] : out.terms_) {
        v = -v;
    }
    return out;
}

BiPoly pow(const BiPoly& base, unsigned exponent)
{
    BiPoly result(1);
    BiPoly b = base;
    while (exponent != 0) {
        if (exponent & 1U) {
            result *= b;
        }
        exponent >>= 1U;
        if (exponent != 0) {
            b *= b;
        }
    }
    return result;
}

BiPoly eval_at(const BiPoly& p, const std::optional<Rat>& lambda_val, const std::optional<Rat>& x_val)
{
    BiPoly out;
    for (const auto& [e, c] : p.terms()) {
        Rat coeff = c;
        std::uint32_t l = e.lambda_deg;
        std::uint32_t xd = e.x_deg;
        if (lambda_val) {
            coeff *= pow(*lambda_val, static_cast<long>(l));
            l = 0;
        }
        if (x_val) {
            coeff *= pow(*x_val, static_cast<long>(xd));
            xd = 0;
        }
        out.add_term(coeff, l, xd);
    }
    return out;
}

BiPoly substitute_x(const BiPoly& p, const BiPoly& q)
{
    // Horner in x with lambda-only coefficients.
    BiPoly out;
    for (std::uint32_t i = p.x_degree() + 1; i-- > 0;) {
        out = out * q + p.x_coefficient(i);
    }
    return out;
}

BiPoly derivative_x(const BiPoly& p)
{
    BiPoly out;
    for (const auto& [e, c] : p.terms()) {
        if (e.x_deg != 0) {
            out.add_term(c * Rat(static_cast<long>(e.x_deg)), e.lambda_deg, e.x_deg - 1);
        }
    }
    return out;
}

BiPoly antiderivative_x(const BiPoly& p)
{
    BiPoly out;
    for (const auto& [e, c] : p.terms()) {
        out.add_term(c / Rat(static_cast<long>(e.x_deg) + 1), e.lambda_deg, e.x_deg + 1);
    }
    return out;
}

BiPoly integrate_x_unit(const BiPoly& p) { return eval_at(antiderivative_x(p), std::nullopt, Rat(1)); }

namespace {

std::string monomial_string(const Exponent& e)
{
    std::string s;
    auto part = [&s](const char* var, std::uint32_t d) {
        if (d == 0) {
            return;
        }
        if (!s.empty()) {
            s += '*';
        }
        s += var;
        if (d > 1) {
            s += '^' + std::to_string(d);
        }
    };
    part("L", e.lambda_deg);
    part("x", e.x_deg);
    return s;
}

} // namespace

std::string canonical_string(const BiPoly& p)
{
    const auto& terms = p.terms();
    if (terms.empty()) {
        return "0";
    }
    if (p.is_constant()) {
        return terms.begin()->second.str();
    }
    std::string out;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!out.empty()) {
            out += " + ";
        }
        std::string mono = monomial_string(e);
        bool wrap = c.sign() < 0 || !c.is_integer();
        if (mono.empty()) {
            out += c.sign() < 0 ? "(" + c.str() + ")" : c.str();
        } else if (c.is_one()) {
            out += mono;
        } else {
            out += (wrap ? "(" + c.str() + ")" : c.str()) + "*" + mono;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    BiPoly parse()
    {
        skip_ws();
        if (at_end()) {
            fail("empty input");
        }
        BiPoly out;
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        }
        BiPoly t = term();
        out += negate ? -t : t;
        for (skip_ws(); !at_end(); skip_ws()) {
            char op = peek();
            if (op != '+' && op != '-') {
                fail("expected '+' or '-'");
            }
            ++pos_;
            BiPoly next = term();
            out += op == '-' ? -next : next;
        }
        return out;
    }

private:
    BiPoly term()
    {
        BiPoly t = factor();
        for (skip_ws(); !at_end() && peek() == '*'; skip_ws()) {
            ++pos_;
            t *= factor();
        }
        return t;
    }

    BiPoly factor()
    {
        skip_ws();
        if (at_end()) {
            fail("unexpected end of input");
        }
        char c = peek();
        if (c == '(') {
            ++pos_;
            skip_ws();
            bool neg = false;
            if (!at_end() && (peek() == '-' || peek() == '+')) {
                neg = peek() == '-';
                ++pos_;
            }
            Rat r = rational();
            skip_ws();
            if (at_end() || peek() != ')') {
                fail("expected ')'");
            }
            ++pos_;
            return BiPoly(neg ? -r : r);
        }
        if (c == 'L' || c == 'x') {
            ++pos_;
            std::uint32_t d = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                d = static_cast<std::uint32_t>(unsigned_int());
            }
            return c == 'L' ? BiPoly::monomial(1, d, 0) : BiPoly::monomial(1, 0, d);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return BiPoly(rational());
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Rat rational()
    {
        std::size_t start = pos_;
        unsigned_int();
        if (!at_end() && peek() == '/') {
            ++pos_;
            unsigned_int();
        }
        return Rat::parse(s_.substr(start, pos_ - start));
    }

    unsigned long unsigned_int()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected digits");
        }
        return std::stoul(std::string(s_.substr(start, pos_ - start)));
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what + " in '"
                         + std::string(s_) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

BiPoly BiPoly::parse(std::string_view text) { return Parser(text).parse(); }

} // namespace dpb
