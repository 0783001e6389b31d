#include "dwa/parser.hpp"

#include <cctype>

#include "dwa/derivation.hpp"

namespace dwa {

namespace {

class Parser {
public:
    Parser(const std::string& text, const Flavor& flavor, const PrimeConfig& cfg)
        : text_(text), flavor_(flavor), cfg_(cfg) {}

    Element run() {
        Element out = expr();
        skip_space();
        if (pos_ != text_.size()) fail("trailing input");
        return out;
    }

private:
    Element expr() {
        skip_space();
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        }
        Element acc = term();
        if (negate) acc = -acc;
        while (true) {
            skip_space();
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                Element t = term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    Element term() {
        skip_space();
        bool have_scalar = false;
        long long scalar = 1;
        if (std::isdigit(peek())) {
            scalar = integer();
            have_scalar = true;
        }
        Element acc = Element::unit(flavor_, cfg_);
        bool have_factor = false;
        while (true) {
            skip_space();
            if (peek() == '*') {
                ++pos_;
                skip_space();
            }
            if (!at_factor()) break;
            Element f = factor();
            acc = have_factor ? acc * f : f;
            have_factor = true;
        }
        if (!have_factor && !have_scalar) fail("expected a term");
        return have_scalar ? acc.scaled(scalar) : acc;
    }

    bool at_factor() {
        char c = peek();
        if (c == '(') return true;
        if (!std::isalpha(c)) return false;
        std::string word = peek_word();
        return word == "e" || word == "x" || word == "psi" || word == "E" || word == "D";
    }

    Element factor() {
        skip_space();
        if (peek() == '(') {
            ++pos_;
            Element inner = expr();
            expect(')');
            return inner;
        }
        std::size_t at = pos_;
        std::string word = read_word();
        if (word == "e") {
            expect('(');
            StrandSeq seq = sequence_literal();
            expect(')');
            return Element::idempotent(flavor_, cfg_, seq);
        }
        if (word == "x" || word == "psi") {
            expect('@');
            int j = static_cast<int>(integer());
            return sum_over_unit(word == "x" ? Layer::black_dot(j) : Layer::crossing(j));
        }
        if (word == "E") {
            expect('(');
            int d = static_cast<int>(integer());
            expect(')');
            expect('@');
            int j = static_cast<int>(integer());
            return sum_over_unit(Layer::red_dot(j, d));
        }
        if (word == "D") {
            int k = 1;
            skip_space();
            if (peek() == '^') {
                ++pos_;
                k = static_cast<int>(integer());
            }
            expect('(');
            Element inner = expr();
            expect(')');
            DerivationTable table(flavor_, cfg_);
            return derive_iterate(table, inner, k);
        }
        pos_ = at;
        fail("unknown factor '" + word + "'");
    }

    Element sum_over_unit(const Layer& layer) {
        if (layer.pos < 1 || layer.pos > flavor_.strands() ||
            (layer.kind == LayerKind::crossing && layer.pos >= flavor_.strands()))
            fail("generator position out of range");
        Element acc = Element::zero(flavor_, cfg_);
        for (const auto& seq : flavor_.sequences())
            acc = acc + Element::generator(flavor_, cfg_, layer, seq);
        return acc;
    }

    StrandSeq sequence_literal() {
        skip_space();
        std::size_t start = pos_;
        std::string body;
        while (pos_ < text_.size() && text_[pos_] != ')') body += text_[pos_++];
        try {
            return StrandSeq::parse(body, flavor_.spec());
        } catch (const error& e) {
            throw parse_error(e.what(), start);
        }
    }

    long long integer() {
        skip_space();
        if (!std::isdigit(peek())) fail("expected an integer");
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            v = v * 10 + (text_[pos_++] - '0');
        return v;
    }

    std::string peek_word() {
        std::size_t at = pos_;
        std::string w = read_word();
        pos_ = at;
        return w;
    }

    std::string read_word() {
        skip_space();
        std::string w;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            w += text_[pos_++];
        if (w.empty()) fail("expected a name");
        return w;
    }

    void expect(char c) {
        skip_space();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& message) const { throw parse_error(message, pos_); }

    const std::string& text_;
    const Flavor& flavor_;
    const PrimeConfig& cfg_;
    std::size_t pos_ = 0;
};

}  // namespace

Element parse_expression(const std::string& text, const Flavor& flavor, const PrimeConfig& cfg) {
    return Parser(text, flavor, cfg).run();
}

std::string print_element(const Element& elem) { return elem.to_string(); }

}  // namespace dwa
