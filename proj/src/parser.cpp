#include "expoweyl/parser.hpp"

#include <cctype>

namespace expoweyl {

namespace {

class Parser {
public:
    Parser(RingConfigPtr cfg, const std::string& text)
        : cfg_(std::move(cfg)), text_(text) {}

    WeylElement run() {
        WeylElement v = expr();
        skip_ws();
        if (pos_ < text_.size()) fail("syntax error: unexpected input");
        return v;
    }

private:
    RingConfigPtr cfg_;
    const std::string& text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("syntax error: expected '") + c + "'");
        ++pos_;
    }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    long long parse_int() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == digits) fail("syntax error: expected integer");
        return std::stoll(text_.substr(start, pos_ - start));
    }

    Rational parse_rational() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        std::string num = text_.substr(start, pos_ - start);
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            std::size_t dstart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == dstart) fail("syntax error: expected denominator");
            return Rational(num + "/" + text_.substr(dstart, pos_ - dstart));
        }
        return Rational(num);
    }

    LatticeVector parse_coords(std::size_t arity, const char* what) {
        std::size_t open_col = pos_ + 1;
        expect('(');
        LatticeVector v{parse_int()};
        while (accept(',')) v.push_back(parse_int());
        expect(')');
        if (v.size() != arity)
            throw ParseError(std::string("coordinate arity mismatch for ") + what + ": expected " +
                                 std::to_string(arity) + ", got " + std::to_string(v.size()),
                             open_col);
        return v;
    }

    WeylElement atom() {
        char c = peek();
        if (c == '\0') fail("syntax error: unexpected end of input");
        if (std::isdigit(static_cast<unsigned char>(c)))
            return WeylElement::scalar(cfg_, FieldScalar(cfg_->table, parse_rational()));
        if (c == '(') {
            ++pos_;
            WeylElement v = expr();
            expect(')');
            return v;
        }
        if (c == '[') {
            ++pos_;
            WeylElement a = expr();
            expect(',');
            WeylElement b = expr();
            expect(']');
            return commutator(a, b);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            if (name == "X")
                return WeylElement::from_poly(
                    ExpoPoly::x_power(cfg_, parse_coords(cfg_->x_dim(), "X")));
            if (name == "E")
                return WeylElement::from_poly(
                    ExpoPoly::e_power(cfg_, parse_coords(cfg_->e_dim(), "E")));
            if (name == "Y") return WeylElement::from_poly(ExpoPoly::y_power(cfg_, 1));
            if (name == "D") return WeylElement::d_power(cfg_, 1);
            if (!cfg_->table->contains(name))
                throw ParseError("unknown symbol '" + name + "'", start + 1);
            return WeylElement::scalar(cfg_, FieldScalar::symbol(cfg_->table, name));
        }
        fail("syntax error: unexpected character");
    }

    WeylElement unit_inverse(const WeylElement& v, std::size_t col) {
        if (v.parts().size() == 1 && v.parts().begin()->first == 0 &&
            is_unit(v.parts().begin()->second)) {
            const auto& [m, c] = *v.parts().begin()->second.terms().begin();
            ExpoMonomial inv{-m.y_pow, lattice_neg(m.e_part), lattice_neg(m.x_part)};
            return WeylElement::from_poly(ExpoPoly::monomial(cfg_, inv, c.inverse()));
        }
        throw ParseError("cannot invert: not a unit monomial", col);
    }

    WeylElement power(WeylElement base, long long e, std::size_t col) {
        if (e < 0) {
            base = unit_inverse(base, col);
            e = -e;
        }
        WeylElement acc = WeylElement::one(cfg_);
        for (long long i = 0; i < e; ++i) acc = weyl_mul(acc, base);
        return acc;
    }

    WeylElement factor() {
        WeylElement v = atom();
        if (peek() == '^') {
            std::size_t col = pos_ + 1;
            ++pos_;
            v = power(std::move(v), parse_int(), col);
        }
        return v;
    }

    WeylElement term() {
        WeylElement v = factor();
        while (accept('*')) v = weyl_mul(v, factor());
        return v;
    }

    WeylElement expr() {
        bool neg = accept('-');
        WeylElement v = term();
        if (neg) v = -v;
        for (;;) {
            if (accept('+'))
                v += term();
            else if (accept('-'))
                v -= term();
            else
                return v;
        }
    }
};

} // namespace

WeylElement parse_element(const RingConfigPtr& cfg, const std::string& text) {
    return Parser(cfg, text).run();
}

} // namespace expoweyl
