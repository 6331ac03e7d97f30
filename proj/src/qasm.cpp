/*
 * Copyright 2026 The zxsearch Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "zxsearch/qasm.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace zxsearch {

QasmError::QasmError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { Ident, Integer, Real, String, Symbol, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
   public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_space_and_comments();
        Token tok{Tok::End, "", line_, column_};
        if (pos_ >= text_.size()) return tok;
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                tok.text += advance();
            }
            tok.kind = Tok::Ident;
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            tok.kind = Tok::Integer;
            while (pos_ < text_.size()) {
                char d = text_[pos_];
                if (std::isdigit(static_cast<unsigned char>(d))) {
                    tok.text += advance();
                } else if (d == '.' || d == 'e' || d == 'E') {
                    tok.kind = Tok::Real;
                    tok.text += advance();
                } else {
                    break;
                }
            }
        } else if (c == '"') {
            advance();
            while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n') tok.text += advance();
            if (pos_ >= text_.size() || text_[pos_] != '"') throw QasmError(tok.line, tok.column, "unterminated string");
            advance();
            tok.kind = Tok::String;
        } else if (std::string_view(";,[]()+-*/").find(c) != std::string_view::npos) {
            tok.text = advance();
            tok.kind = Tok::Symbol;
        } else {
            throw QasmError(tok.line, tok.column, std::string("unexpected character '") + c + "'");
        }
        return tok;
    }

   private:
    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_space_and_comments() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational make(std::int64_t n, std::int64_t d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        std::int64_t g = std::gcd(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        return {n, d};
    }
    bool is_zero() const { return num == 0; }
    friend Rational operator+(Rational a, Rational b) { return make(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Rational operator*(Rational a, Rational b) { return make(a.num * b.num, a.den * b.den); }
    Rational operator-() const { return {-num, den}; }
};

// a*pi + b, kept exact.
struct Angle {
    Rational pi_coeff;
    Rational constant;
};

class Parser {
   public:
    explicit Parser(std::string_view text) : lexer_(text) { tok_ = lexer_.next(); }

    Circuit parse() {
        if (is_ident("OPENQASM")) {
            Token head = take();
            Token version = take();
            if ((version.kind != Tok::Real && version.kind != Tok::Integer) || version.text != "2.0") {
                throw QasmError(version.line, version.column, "only OPENQASM 2.0 is supported");
            }
            (void)head;
            expect(";");
        }
        while (tok_.kind != Tok::End) statement();
        if (!have_register_) throw QasmError(tok_.line, tok_.column, "missing qreg declaration");
        return circuit_;
    }

   private:
    Token take() {
        Token t = tok_;
        tok_ = lexer_.next();
        return t;
    }
    bool is_symbol(const char* s) const { return tok_.kind == Tok::Symbol && tok_.text == s; }
    bool is_ident(const char* s) const { return tok_.kind == Tok::Ident && tok_.text == s; }
    [[noreturn]] void fail(const Token& at, const std::string& message) const { throw QasmError(at.line, at.column, message); }
    [[noreturn]] void fail(const std::string& message) const { fail(tok_, message); }

    void expect(const char* symbol) {
        if (!is_symbol(symbol)) {
            fail(std::string("expected '") + symbol + "'" + (tok_.kind == Tok::End ? " before end of input" : ", found '" + tok_.text + "'"));
        }
        take();
    }
    Token expect_ident() {
        if (tok_.kind != Tok::Ident) fail("expected identifier");
        return take();
    }
    std::int64_t expect_integer() {
        if (tok_.kind != Tok::Integer) fail("expected integer");
        Token t = take();
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) fail(t, "integer out of range");
        return value;
    }

    void statement() {
        Token head = expect_ident();
        if (head.text == "include") {
            if (tok_.kind != Tok::String) fail("expected file name string");
            take();
            expect(";");
        } else if (head.text == "qreg") {
            if (have_register_) fail(head, "only one quantum register is supported");
            register_name_ = expect_ident().text;
            expect("[");
            std::int64_t size = expect_integer();
            if (size <= 0 || size > 4096) fail("register size must be positive");
            expect("]");
            expect(";");
            circuit_.num_qubits = static_cast<int>(size);
            have_register_ = true;
        } else if (head.text == "creg" || head.text == "measure" || head.text == "barrier" || head.text == "reset" ||
                   head.text == "if" || head.text == "gate" || head.text == "opaque") {
            fail(head, "unsupported statement '" + head.text + "'");
        } else {
            gate_call(head);
        }
    }

    void gate_call(const Token& head) {
        auto kind = parse_gate_name(head.text);
        if (!kind) fail(head, "unsupported gate '" + head.text + "'");
        if (!have_register_) fail(head, "gate before qreg declaration");
        std::optional<Phase> phase;
        if (is_symbol("(")) {
            Token open = take();
            if (*kind != GateKind::Rz) fail(open, "gate '" + head.text + "' takes no parameters");
            Angle angle = expression();
            expect(")");
            if (!angle.constant.is_zero()) fail(open, "rz angle must be a rational multiple of pi");
            phase = Phase(angle.pi_coeff.num, angle.pi_coeff.den);
        } else if (*kind == GateKind::Rz) {
            fail("rz needs an angle");
        }
        std::vector<int> qubits;
        qubits.push_back(qubit_arg());
        while (is_symbol(",")) {
            take();
            qubits.push_back(qubit_arg());
        }
        expect(";");
        if (static_cast<int>(qubits.size()) != gate_arity(*kind)) {
            fail(head, "gate '" + head.text + "' expects " + std::to_string(gate_arity(*kind)) + " qubits");
        }
        for (std::size_t i = 0; i < qubits.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if (qubits[i] == qubits[j]) fail(head, "repeated qubit in '" + head.text + "'");
            }
        }
        if (*kind == GateKind::CCX) {
            for (Gate& g : toffoli_decomposition(qubits[0], qubits[1], qubits[2])) circuit_.add(std::move(g));
        } else {
            circuit_.add(*kind, std::move(qubits), phase);
        }
    }

    int qubit_arg() {
        Token name = expect_ident();
        if (name.text != register_name_) fail(name, "unknown register '" + name.text + "'");
        expect("[");
        Token at = tok_;
        std::int64_t index = expect_integer();
        expect("]");
        if (index < 0 || index >= circuit_.num_qubits) fail(at, "qubit index " + std::to_string(index) + " out of range");
        return static_cast<int>(index);
    }

    Angle expression() {
        Angle value = term();
        while (is_symbol("+") || is_symbol("-")) {
            bool minus = take().text == "-";
            Angle rhs = term();
            if (minus) rhs = {-rhs.pi_coeff, -rhs.constant};
            value = {value.pi_coeff + rhs.pi_coeff, value.constant + rhs.constant};
        }
        return value;
    }

    Angle term() {
        Angle value = factor();
        while (is_symbol("*") || is_symbol("/")) {
            Token op = take();
            Angle rhs = factor();
            if (op.text == "*") {
                if (!value.pi_coeff.is_zero() && !rhs.pi_coeff.is_zero()) fail(op, "angle is not linear in pi");
                value = {value.pi_coeff * rhs.constant + rhs.pi_coeff * value.constant, value.constant * rhs.constant};
            } else {
                if (!rhs.pi_coeff.is_zero() || rhs.constant.is_zero()) fail(op, "angle divisor must be a nonzero integer");
                Rational inv = Rational::make(rhs.constant.den, rhs.constant.num);
                value = {value.pi_coeff * inv, value.constant * inv};
            }
        }
        return value;
    }

    Angle factor() {
        if (is_symbol("-")) {
            take();
            Angle v = factor();
            return {-v.pi_coeff, -v.constant};
        }
        if (is_symbol("(")) {
            take();
            Angle v = expression();
            expect(")");
            return v;
        }
        if (is_ident("pi")) {
            take();
            return {Rational{1, 1}, Rational{0, 1}};
        }
        if (tok_.kind == Tok::Real) fail("decimal angles are not supported; write a rational multiple of pi");
        if (tok_.kind == Tok::Integer) return {Rational{0, 1}, Rational{expect_integer(), 1}};
        fail("expected angle expression");
    }

    Lexer lexer_;
    Token tok_;
    Circuit circuit_;
    std::string register_name_;
    bool have_register_ = false;
};

}  // namespace

Circuit parse_qasm(std::string_view text) {
    try {
        return Parser(text).parse();
    } catch (const std::overflow_error& e) {
        throw QasmError(0, 0, e.what());
    }
}

std::string format_angle(Phase p) {
    if (p.is_zero()) return "0";
    std::string out = p.numerator() == 1 ? "pi" : std::to_string(p.numerator()) + "*pi";
    if (p.denominator() != 1) out += "/" + std::to_string(p.denominator());
    return out;
}

std::string print_qasm(const Circuit& c) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" << c.num_qubits << "];\n";
    for (const Gate& g : c.gates) {
        out << gate_name(g.kind);
        if (g.kind == GateKind::Rz) out << "(" << format_angle(g.phase.value_or(Phase())) << ")";
        for (std::size_t i = 0; i < g.qubits.size(); ++i) out << (i == 0 ? " " : ",") << "q[" << g.qubits[i] << "]";
        out << ";\n";
    }
    return out.str();
}

}  // namespace zxsearch
