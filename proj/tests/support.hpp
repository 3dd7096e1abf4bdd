#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "sbalg/quiver.hpp"
#include "sbalg/word.hpp"

namespace sbalg::test {

inline std::string golden_path(const std::string& name) { return std::string(SBALG_DATA_DIR) + "/golden/" + name + ".alg"; }

inline MonomialAlgebra golden(const std::string& name) {
    std::ifstream in(golden_path(name));
    if (!in) throw std::runtime_error("missing golden file " + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebra(ss.str());
}

// Relations as sets of arrow-name sequences in traversal order.
inline std::set<std::string> relation_names(const MonomialAlgebra& alg) {
    std::set<std::string> r;
    for (const auto& p : alg.relations()) r.insert(alg.path_string(p));
    return r;
}

inline std::size_t dimension(const std::vector<int>& dims) {
    std::size_t s = 0;
    for (int d : dims) s += static_cast<std::size_t>(d);
    return s;
}

// Every arc l_i l_{i+1} ... of the cyclic word w (indices mod n), and its inverse, up to length L.
// These are the images of the strings of the hereditary algebra on the cycle with orientation of w.
inline std::set<std::string> arc_images(const Quiver& q, const Word& w, std::size_t L) {
    std::set<std::string> out;
    std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Letter> ls;
        for (std::size_t k = 0; k < L; ++k) {
            ls.push_back(w.letters[(i + k) % n]);
            Word x{ls, letter_target(q, ls.front())};
            out.insert(format_word(q, x));
            out.insert(format_word(q, inverse(q, x)));
        }
    }
    return out;
}

} // namespace sbalg::test
