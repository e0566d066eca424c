#include "qchart/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace qchart {

namespace {

class Parser {
public:
    Parser(const std::string& text, const ChartParams& p) : text_(text), p_(p) {}

    DiscElement run() {
        DiscElement e = element();
        skip_space();
        if (pos_ != text_.size()) fail("trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) +
                                    ": " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    std::string identifier() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected a name");
        return text_.substr(start, pos_ - start);
    }

    int integer() {
        skip_space();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected an integer");
        return std::stoi(text_.substr(start, pos_ - start));
    }

    unsigned unsigned_int() {
        const int v = integer();
        if (v < 0) fail("expected a nonnegative integer");
        return static_cast<unsigned>(v);
    }

    double number() {
        skip_space();
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(text_.substr(pos_), &used);
        } catch (const std::exception&) {
            fail("expected a number");
        }
        pos_ += used;
        return v;
    }

    DiscElement element() {
        bool negate = false;
        if (eat('-'))
            negate = true;
        else
            eat('+');
        DiscElement acc = term();
        if (negate) acc = add(acc, DiscElement{}, -1.0, 0.0);
        for (;;) {
            if (eat('+'))
                acc = add(acc, term());
            else if (eat('-'))
                acc = add(acc, term(), 1.0, -1.0);
            else
                return acc;
        }
    }

    DiscElement term() {
        DiscElement acc = factor();
        while (eat('*')) acc = normal_form_product(acc, factor(), p_);
        return acc;
    }

    DiscElement factor() {
        DiscElement base = atom();
        if (eat('^')) {
            const unsigned e = unsigned_int();
            DiscElement out = encode_generator(Generator::One, p_);
            for (unsigned i = 0; i < e; ++i) out = normal_form_product(out, base, p_);
            return out;
        }
        return base;
    }

    DiscElement atom() {
        const char c = peek();
        if (c == '(') {
            expect('(');
            DiscElement inner = element();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const double v = number();
            return add(encode_generator(Generator::One, p_), DiscElement{}, v, 0.0);
        }
        const std::string name = identifier();
        if (name == "one") return encode_generator(Generator::One, p_);
        if (name == "s") return encode_generator(Generator::S, p_);
        if (name == "sstar") return encode_generator(Generator::Sstar, p_);
        if (name == "z") return encode_generator(Generator::Z, p_);
        if (name == "zstar") return encode_generator(Generator::Zstar, p_);
        if (name == "y") return encode_generator(Generator::Y, p_);
        if (name == "delta") {
            expect('(');
            const std::string base = identifier();
            if (base != "q") fail("delta points are powers of q");
            expect(',');
            const int n = static_cast<int>(unsigned_int());
            expect(')');
            return encode_delta(n, p_);
        }
        if (name == "eta") {
            expect('(');
            const int n = integer();
            expect(',');
            const int k = integer();
            expect(')');
            return eta_element({n, k}, p_);
        }
        fail("unknown name '" + name + "'");
    }

    const std::string& text_;
    const ChartParams& p_;
    std::size_t pos_ = 0;
};

}  // namespace

DiscElement parse_element(const std::string& text, const ChartParams& p) {
    return Parser(text, p).run();
}

}  // namespace qchart
