#include "homocyl/word.hpp"

#include <cctype>
#include <sstream>

namespace homocyl {

bool is_valid_generator_name(const std::string& name) {
    if (name.empty()) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

Word Word::reduce(const std::vector<Letter>& raw) {
    Word w;
    for (const auto& l : raw) {
        if (l.exp == 0) continue;
        if (!w.letters_.empty() && w.letters_.back().gen == l.gen) {
            w.letters_.back().exp += l.exp;
            if (w.letters_.back().exp == 0) w.letters_.pop_back();
        } else {
            w.letters_.push_back(l);
        }
    }
    return w;
}

Word Word::from_letter(const std::string& gen, int exp) {
    return reduce({Letter{gen, exp}});
}

Word Word::inverse() const {
    std::vector<Letter> rev;
    rev.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        rev.push_back(Letter{it->gen, -it->exp});
    Word w;
    w.letters_ = std::move(rev);  // reversal of a reduced word is reduced
    return w;
}

Word operator*(const Word& a, const Word& b) {
    std::vector<Word::Letter> cat = a.letters_;
    cat.insert(cat.end(), b.letters_.begin(), b.letters_.end());
    return Word::reduce(cat);
}

std::size_t Word::length() const {
    std::size_t n = 0;
    for (const auto& l : letters_) n += static_cast<std::size_t>(l.exp < 0 ? -l.exp : l.exp);
    return n;
}

std::string Word::str() const {
    if (letters_.empty()) return "";
    std::ostringstream os;
    bool first = true;
    for (const auto& l : letters_) {
        if (!first) os << ' ';
        first = false;
        os << l.gen;
        if (l.exp != 1) os << '^' << l.exp;
    }
    return os.str();
}

Word Word::parse(const std::string& text) {
    std::vector<Letter> raw;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        std::size_t caret = tok.find('^');
        std::string name = caret == std::string::npos ? tok : tok.substr(0, caret);
        int exp = 1;
        if (caret != std::string::npos) {
            std::string e = tok.substr(caret + 1);
            std::size_t pos = 0;
            try {
                exp = std::stoi(e, &pos);
            } catch (const std::exception&) {
                throw std::domain_error("bad word token: " + tok);
            }
            if (pos != e.size() || exp == 0) throw std::domain_error("bad word token: " + tok);
        }
        if (!is_valid_generator_name(name)) throw std::domain_error("bad generator name: " + name);
        raw.push_back(Letter{name, exp});
    }
    return reduce(raw);
}

void MonomialMap::set(const std::string& gen, ExpVec exponents) {
    if (exponents.size() != vars_.size())
        throw std::domain_error("rho image exponent length mismatch for " + gen);
    images_[gen] = std::move(exponents);
}

const ExpVec& MonomialMap::exponents(const std::string& gen) const {
    auto it = images_.find(gen);
    if (it == images_.end()) throw std::domain_error("generator not in rho domain: " + gen);
    return it->second;
}

ExpVec MonomialMap::image_exponents(const Word& w) const {
    ExpVec e(vars_.size(), 0);
    for (const auto& l : w.letters()) {
        const ExpVec& g = exponents(l.gen);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += l.exp * g[i];
    }
    return e;
}

Laurent MonomialMap::image(const Word& w) const {
    return Laurent::monomial(vars_, image_exponents(w), 1);
}

bool MonomialMap::is_trivial_on(const Word& w) const {
    ExpVec e = image_exponents(w);
    for (int k : e)
        if (k != 0) return false;
    return true;
}

Laurent fox_derivative(const Word& w, const std::string& gen, const MonomialMap& rho) {
    Laurent result(rho.variables());
    ExpVec prefix(rho.variables().size(), 0);  // rho of the prefix read so far
    for (const auto& l : w.letters()) {
        const ExpVec& g = rho.exponents(l.gen);
        if (l.gen == gen) {
            // d(g^e)/dg = sum_{i=0}^{e-1} g^i   (e > 0)
            //           = -sum_{i=1}^{|e|} g^-i (e < 0)
            ExpVec e = prefix;
            if (l.exp > 0) {
                for (int k = 0; k < l.exp; ++k) {
                    result.add_term(e, 1);
                    for (std::size_t i = 0; i < e.size(); ++i) e[i] += g[i];
                }
            } else {
                for (int k = 0; k < -l.exp; ++k) {
                    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= g[i];
                    result.add_term(e, -1);
                }
            }
        }
        for (std::size_t i = 0; i < prefix.size(); ++i) prefix[i] += l.exp * g[i];
    }
    return result;
}

}  // namespace homocyl
