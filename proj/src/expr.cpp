#include "shufcompat/expr.hpp"

#include <cctype>
#include <vector>

namespace shufcompat {

ExprError::ExprError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at offset " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
public:
    Parser(const std::string& text, int max_degree) : s_(text), max_degree_(max_degree) {}

    QSymElement run() {
        auto e = sum();
        skip();
        if (pos_ != s_.size()) throw ExprError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
        return e;
    }

private:
    const std::string& s_;
    int max_degree_;
    std::size_t pos_ = 0;

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(const std::string& tok) {
        skip();
        if (s_.compare(pos_, tok.size(), tok) != 0) return false;
        // word operators must not run into an identifier
        if (std::isalpha(static_cast<unsigned char>(tok.back())) && pos_ + tok.size() < s_.size() &&
            std::isalnum(static_cast<unsigned char>(s_[pos_ + tok.size()])))
            return false;
        pos_ += tok.size();
        return true;
    }

    void expect(const std::string& tok) {
        if (!eat(tok)) throw ExprError("expected '" + tok + "'", pos_);
    }

    QSymElement sum() {
        auto acc = product_level();
        while (true) {
            if (eat("+")) acc += product_level();
            else if (eat("-")) acc -= product_level();
            else return acc;
        }
    }

    QSymElement product_level() {
        auto acc = unary();
        while (true) {
            if (eat("*")) acc = product(acc, unary());
            else if (eat(">=")) acc = succeq(acc, unary());
            else if (eat("<")) acc = prec(acc, unary());
            else if (eat("bel")) acc = bel(acc, unary());
            else if (eat("tvi")) acc = tvi(acc, unary());
            else return acc;
        }
    }

    QSymElement unary() {
        if (eat("-")) return -unary();
        return atom();
    }

    long long integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ExprError("expected a number", pos_);
        if (pos_ - start > 9) throw ExprError("number too long", start);
        return std::stoll(s_.substr(start, pos_ - start));
    }

    QSymElement atom() {
        skip();
        if (pos_ >= s_.size()) throw ExprError("unexpected end of expression", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            auto e = sum();
            expect(")");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational q(static_cast<long>(integer()));
            if (eat("/")) {
                std::size_t at = pos_;
                long long d = integer();
                if (d == 0) throw ExprError("division by zero", at);
                q /= Rational(static_cast<long>(d));
            }
            return QSymElement::basis_element(Basis::F, Composition{}, max_degree_, q);
        }
        if (c == 'F' || c == 'M') {
            Basis basis = c == 'F' ? Basis::F : Basis::M;
            ++pos_;
            expect("[");
            std::vector<int> parts;
            if (!eat("]")) {
                do {
                    std::size_t at = pos_;
                    long long p = integer();
                    if (p < 1) throw ExprError("composition parts must be positive", at);
                    parts.push_back(static_cast<int>(p));
                } while (eat(","));
                expect("]");
            }
            auto e = QSymElement::basis_element(basis, Composition(parts), max_degree_);
            return to_basis(e, Basis::F);
        }
        throw ExprError("unexpected '" + std::string(1, c) + "'", pos_);
    }
};

}  // namespace

QSymElement eval_qsym_expression(const std::string& text, int max_degree) {
    return Parser(text, max_degree).run();
}

}  // namespace shufcompat
