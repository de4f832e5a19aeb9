#pragma once

#include <string>
#include <variant>

#include "homocyl/cylinder.hpp"
#include "homocyl/exterior.hpp"
#include "homocyl/seifert.hpp"

namespace homocyl {

struct parse_error : std::runtime_error {
    int line;
    int col;
    parse_error(int line_, int col_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                             ": " + msg),
          line(line_),
          col(col_) {}
};

struct ParsedCylinder {
    AdmissiblePresentation p;
    MonomialMap rho;
};

using ParsedInput = std::variant<SeifertMatrix, ParsedCylinder, ExteriorPresentation>;

/*
 * Line-oriented grammar, '#' starts a comment.
 *
 *   [cylinder] g=1 n=1          [exterior]            <g> <n>
 *   minus: g1m g2m              gens: a b             <row of integers>
 *   aux:   x1 x2                rel: a b a b^-1 ...   ...
 *   plus:  g1p g2p              mu: a
 *   rel: g1m x1^-1 ...          [rho] vars: t
 *   ...                         a -> t
 *   [rho] vars: t1 t2           b -> t
 *   x1 -> t1
 *   x2 -> t2
 *
 * Words are whitespace-separated `name` or `name^k` tokens.  rho images of
 * derived generators are inferred from relators with a single unknown of net
 * exponent ±1 and cross-checked by the homomorphism validation.  Returned
 * objects are validated; structural and rho failures raise parse_error.
 */
ParsedInput parse_input_text(const std::string& text);
ParsedInput parse_input_file(const std::string& path);

}  // namespace homocyl
