#pragma once

#include "htower/errors.hpp"
#include "htower/expr.hpp"

#include <optional>
#include <cctype>
#include <regex>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace htower {

// Folds the spellings people actually type into the ASCII canonical alphabet:
// unicode sub/superscripts, blackboard letters, fraktur, ×, −; drops spaces and braces.
inline std::string normalize_label(const std::string& s, bool whole = true) {
    static const std::vector<std::pair<std::string, std::string>> subs = {
        {"ℝ", "R"}, {"ℂ", "C"}, {"ℍ", "H"}, {"×", "x"}, {"−", "-"},
        {"∗", "*"}, {"₀", "0"}, {"₁", "1"}, {"₂", "2"}, {"₃", "3"},
        {"₄", "4"}, {"₅", "5"}, {"₆", "6"}, {"₇", "7"}, {"₈", "8"},
        {"₉", "9"}, {"⁰", "0"}, {"¹", "1"}, {"²", "2"}, {"³", "3"},
        {"⁴", "4"}, {"⁵", "5"}, {"⁶", "6"}, {"⁷", "7"}, {"⁸", "8"},
        {"⁹", "9"}, {"\\times", "x"}};
    std::string t = s;
    for (const auto& [from, to] : subs) {
        for (std::size_t p = t.find(from); p != std::string::npos; p = t.find(from, p + to.size()))
            t.replace(p, from.size(), to);
    }
    // Mathematical fraktur small letters U+1D51E..U+1D537 (F0 9D 94 9E ..).
    std::string out;
    for (std::size_t i = 0; i < t.size();) {
        unsigned char c = static_cast<unsigned char>(t[i]);
        if (c == 0xF0 && i + 3 < t.size() && static_cast<unsigned char>(t[i + 1]) == 0x9D) {
            unsigned cp = ((c & 0x07u) << 18) | ((static_cast<unsigned char>(t[i + 1]) & 0x3Fu) << 12) |
                          ((static_cast<unsigned char>(t[i + 2]) & 0x3Fu) << 6) |
                          (static_cast<unsigned char>(t[i + 3]) & 0x3Fu);
            if (cp >= 0x1D51E && cp <= 0x1D537) {
                out += static_cast<char>('a' + (cp - 0x1D51E));
                i += 4;
                continue;
            }
        }
        if (!std::isspace(c) && c != '{' && c != '}') out += t[i];
        ++i;
    }
    while (whole && !out.empty() && out.front() == '^') out.erase(out.begin());
    return out;
}

// A label pattern such as "su(<r>,<q>)" or "1D_{<r+2>,<r>}^{(1)}".
class LabelTemplate {
public:
    LabelTemplate() = default;
    explicit LabelTemplate(const std::string& src) : src_(src) {
        std::string lit;
        for (std::size_t i = 0; i < src.size(); ++i) {
            if (src[i] == '<') {
                std::size_t j = src.find('>', i);
                if (j == std::string::npos) throw InputError("template '" + src + "': unclosed '<'");
                literals_.push_back(lit);
                lit.clear();
                slots_.emplace_back(src.substr(i + 1, j - i - 1));
                i = j;
            } else {
                lit += src[i];
            }
        }
        literals_.push_back(lit);
        std::string pattern;
        for (std::size_t k = 0; k < literals_.size(); ++k) {
            pattern += escape(normalize_label(literals_[k], k == 0));
            if (k < slots_.size()) pattern += "(-?[0-9]+)";
        }
        re_ = std::regex(pattern);
    }

    const std::string& source() const { return src_; }

    std::set<std::string> variables() const {
        std::set<std::string> v;
        for (const auto& e : slots_) {
            auto s = e.variables();
            v.insert(s.begin(), s.end());
        }
        return v;
    }

    std::string instantiate(const Expr::Env& env) const {
        std::string out;
        for (std::size_t k = 0; k < literals_.size(); ++k) {
            out += literals_[k];
            if (k < slots_.size()) out += std::to_string(slots_[k].eval(env));
        }
        return out;
    }

    // Binds the template variables so that the instantiation equals `label`
    // (compared after normalization).
    std::optional<Expr::Env> match(const std::string& label) const {
        std::smatch m;
        std::string norm = normalize_label(label);
        if (!std::regex_match(norm, m, re_)) return std::nullopt;
        std::vector<long> vals;
        for (std::size_t k = 0; k < slots_.size(); ++k) vals.push_back(std::stol(m[k + 1].str()));
        Expr::Env env;
        bool progress = true;
        std::vector<bool> done(slots_.size(), false);
        while (progress) {
            progress = false;
            for (std::size_t k = 0; k < slots_.size(); ++k) {
                if (done[k]) continue;
                std::vector<std::string> unbound;
                for (const auto& v : slots_[k].variables())
                    if (!env.count(v)) unbound.push_back(v);
                if (unbound.empty()) {
                    done[k] = true;
                    continue;
                }
                if (unbound.size() != 1) continue;
                // The slot is affine in its one unknown: f(x) = a x + b.
                Expr::Env e0 = env, e1 = env;
                e0[unbound[0]] = 0;
                e1[unbound[0]] = 1;
                long b = slots_[k].eval(e0), a = slots_[k].eval(e1) - b;
                if (a == 0 || (vals[k] - b) % a != 0) return std::nullopt;
                env[unbound[0]] = (vals[k] - b) / a;
                done[k] = true;
                progress = true;
            }
        }
        for (std::size_t k = 0; k < slots_.size(); ++k) {
            for (const auto& v : slots_[k].variables())
                if (!env.count(v)) return std::nullopt;
            if (slots_[k].eval(env) != vals[k]) return std::nullopt;
        }
        return env;
    }

private:
    static std::string escape(const std::string& s) {
        std::string out;
        for (char c : s) {
            if (std::string("\\^$.|?*+()[]{}").find(c) != std::string::npos) out += '\\';
            out += c;
        }
        return out;
    }

    std::string src_;
    std::vector<std::string> literals_;
    std::vector<Expr> slots_;
    std::regex re_;
};

} // namespace htower
