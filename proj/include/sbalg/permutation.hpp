#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"

namespace sbalg {

// Bijection of {1..n}; composition (a * b)(i) = a(b(i)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::size_t n) : img_(n) { std::iota(img_.begin(), img_.end(), 1); }
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size() + 1, false);
        for (int x : img_) {
            if (x < 1 || x > static_cast<int>(img_.size()) || seen[x]) throw InputError("not a permutation");
            seen[x] = true;
        }
    }

    static Permutation cycle(std::size_t n, const std::vector<int>& c) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 1);
        for (std::size_t i = 0; i < c.size(); ++i) img[c[i] - 1] = c[(i + 1) % c.size()];
        return Permutation(img);
    }

    // "(1 3)(2 4)" on {1..n}; "()" is the identity.
    static Permutation parse(const std::string& text, std::size_t n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 1);
        std::set<int> used;
        std::size_t i = 0;
        auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
        skip();
        while (i < text.size()) {
            if (text[i] != '(') throw InputError("expected '(' in cycle notation");
            ++i;
            std::vector<int> c;
            while (true) {
                skip();
                if (i >= text.size()) throw InputError("unterminated cycle");
                if (text[i] == ')') { ++i; break; }
                if (text[i] == ',') { ++i; continue; }
                std::size_t j = i;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                if (j == i) throw InputError("bad character in cycle notation");
                int x = std::stoi(text.substr(i, j - i));
                if (x < 1 || x > static_cast<int>(n) || !used.insert(x).second)
                    throw InputError("bad or repeated point " + std::to_string(x));
                c.push_back(x);
                i = j;
            }
            for (std::size_t k = 0; k < c.size(); ++k) img[c[k] - 1] = c[(k + 1) % c.size()];
            skip();
        }
        return Permutation(img);
    }

    std::size_t size() const { return img_.size(); }
    int operator()(int i) const { return img_.at(i - 1); }
    const std::vector<int>& images() const { return img_; }

    Permutation operator*(const Permutation& o) const {
        if (size() != o.size()) throw PreconditionError("permutation ground sets differ");
        std::vector<int> r(size());
        for (std::size_t i = 0; i < size(); ++i) r[i] = img_[o.img_[i] - 1];
        return Permutation(r);
    }
    Permutation inverse() const {
        std::vector<int> r(size());
        for (std::size_t i = 0; i < size(); ++i) r[img_[i] - 1] = static_cast<int>(i) + 1;
        return Permutation(r);
    }
    bool is_identity() const {
        for (std::size_t i = 0; i < size(); ++i)
            if (img_[i] != static_cast<int>(i) + 1) return false;
        return true;
    }
    bool operator==(const Permutation&) const = default;

    std::vector<std::vector<int>> cycles(bool with_fixed = false) const {
        std::vector<std::vector<int>> cs;
        std::vector<bool> seen(size() + 1, false);
        for (int s = 1; s <= static_cast<int>(size()); ++s) {
            if (seen[s]) continue;
            std::vector<int> c;
            for (int x = s; !seen[x]; x = img_[x - 1]) {
                seen[x] = true;
                c.push_back(x);
            }
            if (c.size() > 1 || with_fixed) cs.push_back(c);
        }
        return cs;
    }

    std::string str() const {
        auto cs = cycles();
        if (cs.empty()) return "()";
        std::string s;
        for (const auto& c : cs) {
            s += '(';
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i) s += ' ';
                s += std::to_string(c[i]);
            }
            s += ')';
        }
        return s;
    }

private:
    std::vector<int> img_;
};

inline Permutation commutator(const Permutation& a, const Permutation& b) {
    return a * b * a.inverse() * b.inverse();
}

struct Partition {
    std::vector<int> parts; // weakly decreasing

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) { std::sort(parts.rbegin(), parts.rend()); }

    int sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts[i]);
        }
        return s + ")";
    }
    auto operator<=>(const Partition&) const = default;
};

inline Partition cycle_type(const Permutation& p) {
    std::vector<int> parts;
    for (const auto& c : p.cycles(true)) parts.push_back(static_cast<int>(c.size()));
    return Partition(parts);
}

inline Partition commutator_cycle_partition(const Permutation& lam, const Permutation& rho) {
    if (lam.size() != rho.size()) throw PreconditionError("ground-set mismatch");
    return cycle_type(commutator(lam, rho));
}

// Cycle types of [lambda, (1 2 ... t)] over all t-cycles lambda.
inline std::set<Partition> possible_ramifications(int t, int cap = 7) {
    if (t < 1) throw PreconditionError("t must be positive");
    if (t > cap) throw PreconditionError("t = " + std::to_string(t) + " exceeds the enumeration cap " + std::to_string(cap));
    std::vector<int> rc(t);
    std::iota(rc.begin(), rc.end(), 1);
    Permutation rho = Permutation::cycle(t, rc);
    std::set<Partition> out;
    // t-cycles (1 x2 ... xt) for all orders of 2..t.
    std::vector<int> rest(rc.begin() + 1, rc.end());
    do {
        std::vector<int> c{1};
        c.insert(c.end(), rest.begin(), rest.end());
        out.insert(commutator_cycle_partition(Permutation::cycle(t, c), rho));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

} // namespace sbalg
