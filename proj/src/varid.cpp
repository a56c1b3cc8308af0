#include "detlab/varid.hpp"

#include <array>
#include <cstdlib>
#include <sstream>

#include "detlab/errors.hpp"

namespace detlab {

namespace {
constexpr std::array<const char*, 9> kNames = {
    "x", "y", "z", "lambda", "xi", "w", "u", "v", "aux"};
}

const char* family_name(Family f) { return kNames[static_cast<std::size_t>(f)]; }

std::string VarId::str() const {
    std::string s = family_name(fam);
    if (idx.empty()) return s;
    s += '[';
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(idx[i]);
    }
    s += ']';
    return s;
}

VarId VarId::parse(const std::string& s) {
    std::size_t br = s.find('[');
    std::string name = (br == std::string::npos) ? s : s.substr(0, br);
    Family fam{};
    bool found = false;
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (name == kNames[i]) {
            fam = static_cast<Family>(i);
            found = true;
            break;
        }
    }
    if (!found) throw ParseError("unknown variable family: " + s);
    std::vector<int> idx;
    if (br != std::string::npos) {
        if (s.back() != ']') throw ParseError("missing ']' in variable: " + s);
        std::string inner = s.substr(br + 1, s.size() - br - 2);
        if (!inner.empty()) {
            std::istringstream is(inner);
            std::string tok;
            while (std::getline(is, tok, ',')) {
                try {
                    std::size_t pos = 0;
                    int v = std::stoi(tok, &pos);
                    if (pos != tok.size()) throw std::invalid_argument(tok);
                    idx.push_back(v);
                } catch (const std::exception&) {
                    throw ParseError("bad index in variable: " + s);
                }
            }
        }
    }
    return VarId(fam, std::move(idx));
}

} // namespace detlab
