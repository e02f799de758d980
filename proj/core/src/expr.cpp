#include "nhf/expr.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace nhf {

struct Expr::Node {
    enum class Kind { Const, Var, Unary, Binary, Call } kind;
    double value = 0;
    int var = -1;
    char op = 0;
    std::string fn;
    std::shared_ptr<const Node> a, b;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

struct Parser {
    const std::string& s;
    const std::map<std::string, int>& vars;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }

    NodePtr make(Expr::Node n) { return std::make_shared<Expr::Node>(std::move(n)); }

    NodePtr parse_expr() {
        NodePtr left = parse_term();
        while (true) {
            char c = peek();
            if (c != '+' && c != '-') return left;
            ++pos;
            NodePtr right = parse_term();
            Expr::Node n;
            n.kind = Expr::Node::Kind::Binary;
            n.op = c;
            n.a = left;
            n.b = right;
            left = make(std::move(n));
        }
    }
    NodePtr parse_term() {
        NodePtr left = parse_power();
        while (true) {
            char c = peek();
            if (c != '*' && c != '/') return left;
            ++pos;
            NodePtr right = parse_power();
            Expr::Node n;
            n.kind = Expr::Node::Kind::Binary;
            n.op = c;
            n.a = left;
            n.b = right;
            left = make(std::move(n));
        }
    }
    NodePtr parse_power() {
        NodePtr base = parse_unary();
        if (peek() == '^') {
            ++pos;
            NodePtr exp = parse_power();  // right associative
            Expr::Node n;
            n.kind = Expr::Node::Kind::Binary;
            n.op = '^';
            n.a = base;
            n.b = exp;
            return make(std::move(n));
        }
        return base;
    }
    NodePtr parse_unary() {
        if (eat('-')) {
            Expr::Node n;
            n.kind = Expr::Node::Kind::Unary;
            n.op = '-';
            n.a = parse_unary();
            return make(std::move(n));
        }
        if (eat('+')) return parse_unary();
        return parse_atom();
    }
    NodePtr parse_atom() {
        skip();
        if (pos >= s.size()) throw std::invalid_argument("expression: unexpected end");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            NodePtr e = parse_expr();
            if (!eat(')')) throw std::invalid_argument("expression: missing ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t end = pos;
            while (end < s.size() &&
                   (std::isdigit(static_cast<unsigned char>(s[end])) || s[end] == '.' ||
                    s[end] == 'e' || s[end] == 'E' ||
                    ((s[end] == '+' || s[end] == '-') && end > pos &&
                     (s[end - 1] == 'e' || s[end - 1] == 'E'))))
                ++end;
            Expr::Node n;
            n.kind = Expr::Node::Kind::Const;
            n.value = std::stod(s.substr(pos, end - pos));
            pos = end;
            return make(std::move(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos;
            while (end < s.size() && (std::isalnum(static_cast<unsigned char>(s[end])) ||
                                      s[end] == '_'))
                ++end;
            std::string name = s.substr(pos, end - pos);
            pos = end;
            if (peek() == '(') {
                ++pos;
                NodePtr a = parse_expr();
                NodePtr b;
                if (eat(',')) b = parse_expr();
                if (!eat(')')) throw std::invalid_argument("expression: missing ')' in call");
                Expr::Node n;
                n.kind = Expr::Node::Kind::Call;
                n.fn = name;
                n.a = a;
                n.b = b;
                return make(std::move(n));
            }
            if (name == "pi") {
                Expr::Node n;
                n.kind = Expr::Node::Kind::Const;
                n.value = M_PI;
                return make(std::move(n));
            }
            auto it = vars.find(name);
            if (it == vars.end())
                throw std::invalid_argument("expression: unknown variable '" + name + "'");
            Expr::Node n;
            n.kind = Expr::Node::Kind::Var;
            n.var = it->second;
            return make(std::move(n));
        }
        throw std::invalid_argument(std::string("expression: unexpected character '") + c +
                                    "'");
    }
};

double eval_node(const Expr::Node& n, const std::vector<double>& v) {
    using K = Expr::Node::Kind;
    switch (n.kind) {
        case K::Const: return n.value;
        case K::Var: return v.at(static_cast<std::size_t>(n.var));
        case K::Unary: return -eval_node(*n.a, v);
        case K::Binary: {
            double a = eval_node(*n.a, v);
            double b = eval_node(*n.b, v);
            switch (n.op) {
                case '+': return a + b;
                case '-': return a - b;
                case '*': return a * b;
                case '/': return a / b;
                case '^': return std::pow(a, b);
            }
            throw std::logic_error("expression: bad operator");
        }
        case K::Call: {
            double a = eval_node(*n.a, v);
            if (n.fn == "sin") return std::sin(a);
            if (n.fn == "cos") return std::cos(a);
            if (n.fn == "tan") return std::tan(a);
            if (n.fn == "exp") return std::exp(a);
            if (n.fn == "log") return std::log(a);
            if (n.fn == "sqrt") return std::sqrt(a);
            if (n.fn == "abs") return std::abs(a);
            if (n.fn == "sinh") return std::sinh(a);
            if (n.fn == "cosh") return std::cosh(a);
            if (n.fn == "pow" && n.b) return std::pow(a, eval_node(*n.b, v));
            throw std::invalid_argument("expression: unknown function '" + n.fn + "'");
        }
    }
    throw std::logic_error("expression: bad node");
}

} // namespace

Expr Expr::parse(const std::string& text, const std::map<std::string, int>& vars) {
    Parser p{text, vars};
    Expr e;
    e.root_ = p.parse_expr();
    p.skip();
    if (p.pos != text.size())
        throw std::invalid_argument("expression: trailing input at '" +
                                    text.substr(p.pos) + "'");
    return e;
}

double Expr::eval(const std::vector<double>& values) const { return eval_node(*root_, values); }

} // namespace nhf
