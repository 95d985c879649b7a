#pragma once

#include <string>

#include "strathol/cells.hpp"
#include "strathol/complex.hpp"
#include "strathol/corpus.hpp"
#include "strathol/homology.hpp"

namespace strathol {

// Line-oriented complex files, UTF-8, `#` to end of line is a comment.
//
//   poset            opens the poset section: one label per line, plus
//   rel <p> <q>      relation lines (transitive closure is taken)
//   vertex <id> <label>
//   simplex <id> <id> ...   maximal simplices; faces are closed
//
// A file that uses `cell` lines instead of `vertex`/`simplex` describes a
// Delta-complex, one cell per line:
//
//   cell <dim> <id> : <face ids, d_0..d_n> : <flag labels>
//
// Syntax problems raise ParseError with the offending line number.
StratComplex parse_complex(const std::string& text);
DeltaComplex parse_delta(const std::string& text);

bool is_delta_text(const std::string& text);
CorpusItem parse_item(const std::string& text);  // dispatches on the keywords used

// Deterministic printers; parse(print(K)) == K.
std::string print_complex(const StratComplex& K);
std::string print_delta(const DeltaComplex& D);
std::string print_item(const CorpusItem& item);

// "4 vertices, 6 edges, 3 triangles, χ=1"; "0 simplices" when empty
std::string complex_summary(const StratComplex& K);
std::string delta_summary(const DeltaComplex& D);

// One line per dimension. Integer coefficients: "H_1: Z^2 + Z/2 + Z/4";
// rationals: "H_1: Q^2"; mod p: "H_1: (Z/5)^2". Rank zero prints "0",
// exponent one is dropped.
std::string betti_report(const BettiTable& t, const Coeff& coeff);

std::string read_text_file(const std::string& path);  // Error when unreadable

}  // namespace strathol
