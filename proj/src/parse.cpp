#include "bidegree/parse.hpp"

#include <cctype>

namespace bidegree {
namespace {

class Parser {
public:
    Parser(const std::string& src, VarTablePtr vars, const ParseEnv& env)
        : src_(src), vars_(std::move(vars)), env_(env) {}

    Poly run() {
        Poly p = expr();
        skip_ws();
        if (pos_ != src_.size()) throw SyntaxError("trailing input", pos_);
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    Poly expr() {
        Poly p = accept('-') ? -term() : term();
        for (;;) {
            if (accept('+')) p += term();
            else if (accept('-')) p -= term();
            else return p;
        }
    }

    Poly term() {
        Poly p = factor();
        while (accept('*')) p = p * factor();
        return p;
    }

    Poly factor() {
        Poly base = atom();
        if (accept('^')) {
            skip_ws();
            std::size_t at = pos_;
            unsigned long e = integer();
            if (e > 1000) throw SyntaxError("exponent too large", at);
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    unsigned long integer() {
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            throw SyntaxError("expected integer", pos_);
        unsigned long v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            v = v * 10 + static_cast<unsigned long>(src_[pos_++] - '0');
        return v;
    }

    Poly atom() {
        skip_ws();
        if (pos_ >= src_.size()) throw SyntaxError("unexpected end of input", pos_);
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!accept(')')) throw SyntaxError("expected ')'", pos_);
            return p;
        }
        if (c == '-') {  // unary minus inside a product, e.g. 2*-3 is rejected; (-3) works
            throw SyntaxError("unexpected '-'", pos_);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t at = pos_;
            std::string digits;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                digits += src_[pos_++];
            std::string denom = "1";
            if (pos_ < src_.size() && src_[pos_] == '/') {
                ++pos_;
                if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    throw SyntaxError("expected denominator", pos_);
                denom.clear();
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    denom += src_[pos_++];
            }
            try {
                BigInt d(denom);
                if (d == 0) throw SyntaxError("zero denominator", at);
                return Poly::constant(vars_, GaussRat(Rational(BigInt(digits), d)));
            } catch (const SyntaxError&) {
                throw;
            } catch (const std::exception&) {
                throw SyntaxError("bad numeric literal", at);
            }
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t at = pos_;
            std::string name;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                name += src_[pos_++];
            if (name == "i") return Poly::constant(vars_, GaussRat::imaginary_unit());
            if (vars_->has(name)) return Poly::variable(vars_, name);
            auto it = env_.find(name);
            if (it != env_.end()) {
                if (!same_table(it->second.table(), vars_)) return it->second.embed(vars_);
                return it->second;
            }
            (void)at;
            throw UnknownVariable(name);
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }

    const std::string& src_;
    VarTablePtr vars_;
    const ParseEnv& env_;
    std::size_t pos_ = 0;
};

} // namespace

Poly parse_poly(const std::string& src, const VarTablePtr& vars, const ParseEnv& env) {
    return Parser(src, vars, env).run();
}

} // namespace bidegree
