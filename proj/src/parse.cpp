#include "homocyl/parse.hpp"

#include <fstream>
#include <sstream>

namespace homocyl {

namespace {

struct Line {
    int no;
    std::string text;
};

std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream is(text);
    std::string raw;
    int no = 0;
    while (std::getline(is, raw)) {
        ++no;
        std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::size_t a = raw.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = raw.find_last_not_of(" \t\r");
        out.push_back(Line{no, raw.substr(a, b - a + 1)});
    }
    return out;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

bool starts_with(const std::string& s, const std::string& prefix) {
    return s.rfind(prefix, 0) == 0;
}

std::string after_prefix(const std::string& s, const std::string& prefix) {
    std::string rest = s.substr(prefix.size());
    std::size_t a = rest.find_first_not_of(" \t");
    return a == std::string::npos ? "" : rest.substr(a);
}

Word parse_word_at(const Line& ln, const std::string& text) {
    try {
        return Word::parse(text);
    } catch (const std::exception& e) {
        throw parse_error(ln.no, 1, e.what());
    }
}

// rho image: word syntax over the variable names, or the literal "1"
ExpVec parse_monomial_exps(const Line& ln, const std::string& text,
                           const std::vector<std::string>& vars) {
    std::string trimmed = text;
    if (trimmed == "1") return ExpVec(vars.size(), 0);
    Word w = parse_word_at(ln, trimmed);
    ExpVec e(vars.size(), 0);
    for (const auto& l : w.letters()) {
        auto it = std::find(vars.begin(), vars.end(), l.gen);
        if (it == vars.end())
            throw parse_error(ln.no, 1, "rho image uses unknown variable " + l.gen);
        e[static_cast<std::size_t>(it - vars.begin())] += l.exp;
    }
    return e;
}

// fill rho images of derived generators from relators with a single unknown
// generator of net exponent ±1
void infer_rho(const std::vector<Word>& relators, MonomialMap& rho) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : relators) {
            std::string unknown;
            bool multiple = false;
            for (const auto& l : r.letters()) {
                if (rho.has(l.gen) || l.gen == unknown) continue;
                if (!unknown.empty()) {
                    multiple = true;
                    break;
                }
                unknown = l.gen;
            }
            if (multiple || unknown.empty()) continue;
            int net = 0;
            ExpVec known(rho.variables().size(), 0);
            for (const auto& l : r.letters()) {
                if (l.gen == unknown) {
                    net += l.exp;
                } else {
                    const ExpVec& g = rho.exponents(l.gen);
                    for (std::size_t i = 0; i < known.size(); ++i) known[i] += l.exp * g[i];
                }
            }
            if (net != 1 && net != -1) continue;
            for (auto& k : known) k *= -net;
            rho.set(unknown, known);
            changed = true;
        }
    }
}

int parse_int_at(const Line& ln, const std::string& tok) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw parse_error(ln.no, 1, "integer expected, got '" + tok + "'");
    }
    if (pos != tok.size()) throw parse_error(ln.no, 1, "integer expected, got '" + tok + "'");
    return v;
}

// shared [rho] block parser; returns the map with explicit entries only
MonomialMap parse_rho_block(const std::vector<Line>& lines, std::size_t& i) {
    const Line& hdr = lines[i];
    auto toks = split_ws(after_prefix(hdr.text, "[rho]"));
    if (toks.size() < 2 || toks[0] != "vars:")
        throw parse_error(hdr.no, 1, "[rho] header needs 'vars: <names>'");
    std::vector<std::string> vars(toks.begin() + 1, toks.end());
    for (const auto& v : vars)
        if (!is_valid_generator_name(v)) throw parse_error(hdr.no, 1, "bad variable name " + v);
    MonomialMap rho(vars);
    ++i;
    for (; i < lines.size(); ++i) {
        const Line& ln = lines[i];
        std::size_t arrow = ln.text.find("->");
        if (arrow == std::string::npos)
            throw parse_error(ln.no, 1, "expected '<generator> -> <monomial>' in [rho] block");
        auto lhs = split_ws(ln.text.substr(0, arrow));
        if (lhs.size() != 1)
            throw parse_error(ln.no, 1, "exactly one generator expected before '->'");
        if (rho.has(lhs[0])) throw parse_error(ln.no, 1, "duplicate rho entry for " + lhs[0]);
        rho.set(lhs[0], parse_monomial_exps(ln, ln.text.substr(arrow + 2), vars));
    }
    return rho;
}

void raise_semantic(const std::vector<std::string>& bad) {
    if (bad.empty()) return;
    std::ostringstream os;
    os << "input rejected:";
    for (const auto& b : bad) os << "\n  - " << b;
    throw parse_error(0, 0, os.str());
}

ParsedInput parse_cylinder(const std::vector<Line>& lines) {
    ParsedCylinder out;
    const Line& hdr = lines[0];
    for (const auto& tok : split_ws(after_prefix(hdr.text, "[cylinder]"))) {
        if (starts_with(tok, "g=")) out.p.g = parse_int_at(hdr, tok.substr(2));
        else if (starts_with(tok, "n=")) out.p.n = parse_int_at(hdr, tok.substr(2));
        else throw parse_error(hdr.no, 1, "unknown [cylinder] attribute " + tok);
    }
    std::size_t i = 1;
    bool have_rho = false;
    for (; i < lines.size(); ++i) {
        const Line& ln = lines[i];
        if (starts_with(ln.text, "[rho]")) {
            out.rho = parse_rho_block(lines, i);
            have_rho = true;
            break;
        } else if (starts_with(ln.text, "minus:")) {
            out.p.minus_gens = split_ws(after_prefix(ln.text, "minus:"));
        } else if (starts_with(ln.text, "aux:")) {
            out.p.aux_gens = split_ws(after_prefix(ln.text, "aux:"));
        } else if (starts_with(ln.text, "plus:")) {
            out.p.plus_gens = split_ws(after_prefix(ln.text, "plus:"));
        } else if (starts_with(ln.text, "rel:")) {
            out.p.relators.push_back(parse_word_at(ln, after_prefix(ln.text, "rel:")));
        } else {
            throw parse_error(ln.no, 1, "unexpected line in [cylinder] block: " + ln.text);
        }
    }
    if (!have_rho) throw parse_error(lines.back().no, 1, "missing [rho] block");
    infer_rho(out.p.relators, out.rho);
    raise_semantic(validate(out.p, out.rho));
    return out;
}

ParsedInput parse_exterior(const std::vector<Line>& lines) {
    ExteriorPresentation out;
    std::size_t i = 1;
    bool have_rho = false;
    MonomialMap rho;
    for (; i < lines.size(); ++i) {
        const Line& ln = lines[i];
        if (starts_with(ln.text, "[rho]")) {
            rho = parse_rho_block(lines, i);
            have_rho = true;
            break;
        } else if (starts_with(ln.text, "gens:")) {
            out.generators = split_ws(after_prefix(ln.text, "gens:"));
        } else if (starts_with(ln.text, "rel:")) {
            out.relators.push_back(parse_word_at(ln, after_prefix(ln.text, "rel:")));
        } else if (starts_with(ln.text, "mu:")) {
            auto toks = split_ws(after_prefix(ln.text, "mu:"));
            if (toks.size() != 1) throw parse_error(ln.no, 1, "mu: needs exactly one generator");
            out.mu = toks[0];
        } else {
            throw parse_error(ln.no, 1, "unexpected line in [exterior] block: " + ln.text);
        }
    }
    if (!have_rho) throw parse_error(lines.back().no, 1, "missing [rho] block");
    out.rho = std::move(rho);
    infer_rho(out.relators, out.rho);
    raise_semantic(validate(out));
    return out;
}

ParsedInput parse_seifert(const std::vector<Line>& lines) {
    std::size_t i = 0;
    if (starts_with(lines[0].text, "[seifert]")) ++i;
    if (i >= lines.size()) throw parse_error(lines.back().no, 1, "missing 'g n' line");
    auto head = split_ws(lines[i].text);
    if (head.size() != 2)
        throw parse_error(lines[i].no, 1, "expected 'g n' on the first line");
    int g = parse_int_at(lines[i], head[0]);
    int n = parse_int_at(lines[i], head[1]);
    if (g < 0 || n < 1) throw parse_error(lines[i].no, 1, "need g >= 0 and n >= 1");
    ++i;
    const int size = 2 * g + n - 1;
    RatMatrix s(size, size);
    for (int r = 0; r < size; ++r) {
        if (i >= lines.size())
            throw parse_error(lines.back().no, 1, "expected " + std::to_string(size) + " matrix rows");
        auto toks = split_ws(lines[i].text);
        if (static_cast<int>(toks.size()) != size)
            throw parse_error(lines[i].no, 1, "expected " + std::to_string(size) + " integers");
        for (int c = 0; c < size; ++c) s.at(r, c) = parse_int_at(lines[i], toks[static_cast<std::size_t>(c)]);
        ++i;
    }
    if (i != lines.size()) throw parse_error(lines[i].no, 1, "trailing content after matrix");
    try {
        return SeifertMatrix(g, n, std::move(s));
    } catch (const std::exception& e) {
        throw parse_error(lines[0].no, 1, e.what());
    }
}

}  // namespace

ParsedInput parse_input_text(const std::string& text) {
    auto lines = significant_lines(text);
    if (lines.empty()) throw parse_error(1, 1, "empty input");
    const std::string& first = lines[0].text;
    if (starts_with(first, "[cylinder]")) return parse_cylinder(lines);
    if (starts_with(first, "[exterior]")) return parse_exterior(lines);
    if (starts_with(first, "[seifert]") || !first.empty()) return parse_seifert(lines);
    throw parse_error(lines[0].no, 1, "unrecognized input header");
}

ParsedInput parse_input_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return parse_input_text(os.str());
}

}  // namespace homocyl
