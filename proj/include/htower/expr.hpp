#pragma once

#include "htower/errors.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <string>

namespace htower {

// Small integer expression language used by the catalog and the golden tables:
// integers, identifiers, + - * / (floor) %, comparisons, &&, ||, !, parentheses.
class Expr {
public:
    using Env = std::map<std::string, long>;

    Expr() = default;
    explicit Expr(const std::string& src) : src_(src) {
        std::size_t pos = 0;
        root_ = parse_or(pos);
        skip(pos);
        if (pos != src_.size()) throw InputError("expression '" + src_ + "': unexpected '" + src_.substr(pos) + "'");
    }

    const std::string& source() const { return src_; }
    bool empty() const { return !root_; }

    long eval(const Env& env) const {
        if (!root_) throw InputError("empty expression");
        return root_->eval(env);
    }

    std::set<std::string> variables() const {
        std::set<std::string> out;
        if (root_) root_->vars(out);
        return out;
    }

    // Bare identifier, if the whole expression is one.
    std::string single_variable() const { return root_ && root_->op == 'v' ? root_->name : std::string(); }

private:
    struct Node {
        char op = 0;  // 'n' number, 'v' variable, '!' not, 'u' negate, else binary
        std::string name;
        long value = 0;
        std::unique_ptr<Node> l, r;

        long eval(const Env& env) const {
            switch (op) {
            case 'n': return value;
            case 'v': {
                auto it = env.find(name);
                if (it == env.end()) throw InputError("unbound variable '" + name + "'");
                return it->second;
            }
            case 'u': return -l->eval(env);
            case '!': return !l->eval(env);
            case '&': return l->eval(env) && r->eval(env);
            case '|': return l->eval(env) || r->eval(env);
            default: break;
            }
            long a = l->eval(env), b = r->eval(env);
            switch (op) {
            case '+': return a + b;
            case '-': return a - b;
            case '*': return a * b;
            case '/': {
                if (b == 0) throw InputError("division by zero");
                long q = a / b;
                if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
                return q;
            }
            case '%': {
                if (b == 0) throw InputError("modulo by zero");
                long m = a % b;
                return m < 0 ? m + (b < 0 ? -b : b) : m;
            }
            case '<': return a < b;
            case 'L': return a <= b;
            case '>': return a > b;
            case 'G': return a >= b;
            case '=': return a == b;
            case 'N': return a != b;
            }
            throw InputError("bad operator");
        }
        void vars(std::set<std::string>& out) const {
            if (op == 'v') out.insert(name);
            if (l) l->vars(out);
            if (r) r->vars(out);
        }
    };
    using P = std::unique_ptr<Node>;

    void skip(std::size_t& p) const {
        while (p < src_.size() && std::isspace(static_cast<unsigned char>(src_[p]))) ++p;
    }
    bool eat(std::size_t& p, const char* tok) const {
        skip(p);
        std::string t(tok);
        if (src_.compare(p, t.size(), t) == 0) {
            p += t.size();
            return true;
        }
        return false;
    }
    static P bin(char op, P a, P b) {
        auto n = std::make_unique<Node>();
        n->op = op;
        n->l = std::move(a);
        n->r = std::move(b);
        return n;
    }
    P parse_or(std::size_t& p) const {
        P a = parse_and(p);
        while (eat(p, "||")) a = bin('|', std::move(a), parse_and(p));
        return a;
    }
    P parse_and(std::size_t& p) const {
        P a = parse_cmp(p);
        while (eat(p, "&&")) a = bin('&', std::move(a), parse_cmp(p));
        return a;
    }
    P parse_cmp(std::size_t& p) const {
        P a = parse_add(p);
        if (eat(p, "<=")) return bin('L', std::move(a), parse_add(p));
        if (eat(p, ">=")) return bin('G', std::move(a), parse_add(p));
        if (eat(p, "==")) return bin('=', std::move(a), parse_add(p));
        if (eat(p, "!=")) return bin('N', std::move(a), parse_add(p));
        if (eat(p, "<")) return bin('<', std::move(a), parse_add(p));
        if (eat(p, ">")) return bin('>', std::move(a), parse_add(p));
        return a;
    }
    P parse_add(std::size_t& p) const {
        P a = parse_mul(p);
        while (true) {
            if (eat(p, "+")) a = bin('+', std::move(a), parse_mul(p));
            else if (eat(p, "-")) a = bin('-', std::move(a), parse_mul(p));
            else return a;
        }
    }
    P parse_mul(std::size_t& p) const {
        P a = parse_unary(p);
        while (true) {
            if (eat(p, "*")) a = bin('*', std::move(a), parse_unary(p));
            else if (eat(p, "/")) a = bin('/', std::move(a), parse_unary(p));
            else if (eat(p, "%")) a = bin('%', std::move(a), parse_unary(p));
            else return a;
        }
    }
    P parse_unary(std::size_t& p) const {
        if (eat(p, "-")) {
            auto n = std::make_unique<Node>();
            n->op = 'u';
            n->l = parse_unary(p);
            return n;
        }
        if (eat(p, "!")) {
            auto n = std::make_unique<Node>();
            n->op = '!';
            n->l = parse_unary(p);
            return n;
        }
        return parse_atom(p);
    }
    P parse_atom(std::size_t& p) const {
        skip(p);
        if (p >= src_.size()) throw InputError("expression '" + src_ + "': unexpected end");
        if (eat(p, "(")) {
            P a = parse_or(p);
            if (!eat(p, ")")) throw InputError("expression '" + src_ + "': missing ')'");
            return a;
        }
        auto n = std::make_unique<Node>();
        char c = src_[p];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            n->op = 'n';
            while (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p])))
                n->value = n->value * 10 + (src_[p++] - '0');
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            n->op = 'v';
            while (p < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[p])) || src_[p] == '_'))
                n->name += src_[p++];
            return n;
        }
        throw InputError("expression '" + src_ + "': unexpected '" + std::string(1, c) + "'");
    }

    std::string src_;
    std::shared_ptr<Node> root_;
};

} // namespace htower
